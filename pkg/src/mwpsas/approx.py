"""Threshold packing heuristic with an additive guarantee.

Given an initial partition ``R^1..R^r`` of N (the *groups*), a threshold
``D`` is computed from it and elements are packed group by group into
blocks whose term never exceeds ``D``.  A second phase splits singletons off
multi-element blocks until exactly ``machines`` blocks exist.  The result
satisfies ``f(P) <= D`` and ``f(P) - f* <= D - lower_bound``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import InternalInvariantError, PartitionError, VariantError
from .model import (
    Instance,
    Partition,
    ceil_div,
    check_partition,
    checked,
    evaluate_objective,
    is_m1_instance,
    wsum,
)


@dataclass(frozen=True)
class InitialPartition:
    """Ordered groups ``R^1..R^r``; the algorithm consumes them in order."""

    groups: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(frozenset(g) for g in self.groups))

    @classmethod
    def of(cls, groups: Iterable[Iterable[int]]) -> "InitialPartition":
        return cls(tuple(frozenset(g) for g in groups))

    def __len__(self):
        return len(self.groups)


@dataclass(frozen=True)
class BoundReport:
    d_value: int
    lower_bound: int
    deviation_bound: int


def _check_init(inst: Instance, init: InitialPartition) -> None:
    try:
        check_partition(inst, Partition(init.groups))
    except PartitionError as exc:
        raise PartitionError(f"invalid initial partition: {exc}") from None


def _group_union_weight(inst: Instance, group: Iterable[int]) -> int:
    union: set[int] = set()
    for i in group:
        union |= inst.assoc[i - 1]
    return wsum(inst.m_weights[j - 1] for j in union)


def compute_D(inst: Instance, init: InitialPartition) -> int:
    """Packing threshold for ``init``.

    ``ceil((sum_N p + sum_u w(U_u)) / m) + max_u (max_{i in R^u} p_i + w(U_u)) - 1``
    where ``U_u`` is the M-union of group ``u``.  An M-element shared by two
    groups is counted once per group in the first term.
    """
    _check_init(inst, init)
    unions = [_group_union_weight(inst, g) for g in init.groups]
    spread = checked(wsum(inst.n_weights) + wsum(unions))
    worst = max(max(inst.p(i) for i in g) + u for g, u in zip(init.groups, unions))
    return checked(ceil_div(spread, inst.machines) + worst - 1)


def lower_bound(inst: Instance) -> int:
    """``max(ceil(total / m), max_i cost(i))``; never exceeds the optimum."""
    average = ceil_div(inst.total_weight(), inst.machines)
    return max(average, max(inst.element_cost(i) for i in inst.n_ids))


def deviation_bound(inst: Instance, init: InitialPartition) -> BoundReport:
    d = compute_D(inst, init)
    lb = lower_bound(inst)
    return BoundReport(d_value=d, lower_bound=lb, deviation_bound=d - lb)


def strategy_whole(inst: Instance) -> InitialPartition:
    return InitialPartition((frozenset(inst.n_ids),))


def strategy_singletons(inst: Instance) -> InitialPartition:
    return InitialPartition(tuple(frozenset((i,)) for i in inst.n_ids))


def strategy_group_m1(inst: Instance) -> InitialPartition:
    """One group N(j) per M-element, in M-id order. M1 instances only."""
    if not is_m1_instance(inst):
        raise VariantError("group-m1 strategy requires an M1 instance")
    return InitialPartition(tuple(inst.holders(j) for j in inst.m_ids))


STRATEGIES: dict[str, Callable[[Instance], InitialPartition]] = {
    "whole": strategy_whole,
    "singletons": strategy_singletons,
    "group-m1": strategy_group_m1,
}


def approximate_partition(inst: Instance, init: InitialPartition) -> tuple[Partition, int]:
    """Run the two-phase threshold heuristic.

    Elements of a group are tried in order of decreasing stand-alone cost
    (ties: smaller id).  Phase 2 always splits the smallest id off the first
    block holding two or more elements.

    Returns the partition into exactly ``inst.machines`` blocks and its
    objective value.
    """
    D = compute_D(inst, init)
    m = inst.machines
    cost = {i: inst.element_cost(i) for i in inst.n_ids}

    blocks: list[set[int]] = [set()]
    covered: set[int] = set()  # M-union of the open block
    term = 0  # block weight + weight of ``covered``

    for group in init.groups:
        pending = sorted(group, key=lambda i: (-cost[i], i))
        while pending:
            left = []
            for i in pending:
                extra = inst.p(i) + sum(inst.q(j) for j in inst.assoc_of(i) if j not in covered)
                if term + extra <= D:
                    blocks[-1].add(i)
                    covered |= inst.assoc_of(i)
                    term += extra
                else:
                    left.append(i)
            if not left:
                break
            if not blocks[-1]:
                raise InternalInvariantError(f"element {left[0]} does not fit an empty block under D={D}")
            blocks.append(set())
            covered = set()
            term = 0
            pending = left

    if not blocks[-1]:
        # last group closed a block exactly when the input ran out; cannot happen
        raise InternalInvariantError("phase 1 left a trailing empty block")
    if len(blocks) > m:
        raise InternalInvariantError(f"phase 1 opened {len(blocks)} blocks for {m} machines")

    while len(blocks) < m:
        for k, b in enumerate(blocks):
            if len(b) >= 2:
                break
        else:
            raise InternalInvariantError("no block with two or more elements left to split")
        i = min(b)
        blocks[k].discard(i)
        blocks.append({i})

    part = Partition(tuple(frozenset(b) for b in blocks))
    f = evaluate_objective(inst, part)
    if f > D:
        raise InternalInvariantError(f"objective {f} exceeds threshold {D}")
    return part, f
