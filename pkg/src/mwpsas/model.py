"""Instance and partition data model, validation and the objective.

Ids are 1-based on both sides: N-elements are ``1..n_count`` and
M-elements are ``1..m_count``.  Tuples indexed by id store position
``id - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    CoverageError,
    IdError,
    MachineCountError,
    PartitionError,
    WeightError,
    WeightOverflowError,
)

U64_MAX = 2**64 - 1


def checked(value: int) -> int:
    """Return ``value`` if it fits an unsigned 64-bit weight."""
    if value < 0 or value > U64_MAX:
        raise WeightOverflowError(f"weight {value} outside the unsigned 64-bit range")
    return value


def wsum(values: Iterable[int]) -> int:
    """Sum of weights, rejecting anything past the 64-bit range."""
    total = 0
    for v in values:
        total += v
        if total > U64_MAX:
            raise WeightOverflowError("weight sum exceeds the unsigned 64-bit range")
    return total


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class Instance:
    n_count: int
    m_count: int
    machines: int
    n_weights: tuple[int, ...]
    m_weights: tuple[int, ...]
    assoc: tuple[frozenset[int], ...]

    def __post_init__(self):
        # accept lists / sets from callers, store immutable versions
        object.__setattr__(self, "n_weights", tuple(self.n_weights))
        object.__setattr__(self, "m_weights", tuple(self.m_weights))
        object.__setattr__(self, "assoc", tuple(frozenset(s) for s in self.assoc))

    @property
    def n_ids(self) -> range:
        return range(1, self.n_count + 1)

    @property
    def m_ids(self) -> range:
        return range(1, self.m_count + 1)

    def p(self, i: int) -> int:
        """Weight of N-element ``i``."""
        return self.n_weights[i - 1]

    def q(self, j: int) -> int:
        """Weight of M-element ``j``."""
        return self.m_weights[j - 1]

    def assoc_of(self, i: int) -> frozenset[int]:
        return self.assoc[i - 1]

    def holders(self, j: int) -> frozenset[int]:
        """N(j): the N-elements whose association contains ``j``."""
        return frozenset(i for i in self.n_ids if j in self.assoc[i - 1])

    def element_cost(self, i: int) -> int:
        """Cost of ``i`` alone in a block: p_i plus the weight of M(i)."""
        return self.n_weights[i - 1] + sum(self.m_weights[j - 1] for j in self.assoc[i - 1])

    def total_weight(self) -> int:
        return sum(self.n_weights) + sum(self.m_weights)


@dataclass(frozen=True)
class Partition:
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(frozenset(b) for b in self.blocks))

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]]) -> "Partition":
        return cls(tuple(frozenset(b) for b in blocks))

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def as_lists(self) -> list[list[int]]:
        return [sorted(b) for b in self.blocks]


def validate_instance(raw: Instance) -> Instance:
    """Check every instance invariant and return the instance unchanged.

    Raises IdError, WeightError (including overflow risk), CoverageError or
    MachineCountError.
    """
    if raw.n_count < 1 or raw.m_count < 1:
        raise IdError("N and M must both be non-empty")
    if len(raw.n_weights) != raw.n_count:
        raise IdError(f"expected {raw.n_count} N-weights, got {len(raw.n_weights)}")
    if len(raw.m_weights) != raw.m_count:
        raise IdError(f"expected {raw.m_count} M-weights, got {len(raw.m_weights)}")
    if len(raw.assoc) != raw.n_count:
        raise IdError(f"expected {raw.n_count} association sets, got {len(raw.assoc)}")
    for side, weights in (("N", raw.n_weights), ("M", raw.m_weights)):
        for idx, w in enumerate(weights, 1):
            if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                raise WeightError(f"{side}-element {idx} has non-positive or non-integer weight {w!r}")
    covered: set[int] = set()
    for i, s in enumerate(raw.assoc, 1):
        bad = [j for j in s if not isinstance(j, int) or j < 1 or j > raw.m_count]
        if bad:
            raise IdError(f"M({i}) references out-of-range ids {sorted(bad)}")
        covered |= s
    if len(covered) != raw.m_count:
        missing = sorted(set(raw.m_ids) - covered)
        raise CoverageError(f"M-elements {missing} are not associated with any N-element")
    if raw.machines < 1 or raw.machines >= raw.n_count:
        raise MachineCountError(
            f"need 1 <= machines < |N| = {raw.n_count}, got machines = {raw.machines}"
        )
    # worst case intermediate: every N-element dragging all of M into its own group
    try:
        wsum(raw.n_weights)
        checked(sum(raw.n_weights) + raw.n_count * sum(raw.m_weights))
    except WeightOverflowError as exc:
        raise WeightOverflowError(f"instance weights risk 64-bit overflow: {exc}") from None
    return raw


def check_partition(inst: Instance, part: Partition) -> None:
    """Raise PartitionError unless ``part`` splits N into disjoint non-empty blocks."""
    if len(part.blocks) == 0:
        raise PartitionError("partition has no blocks")
    seen: set[int] = set()
    for e, block in enumerate(part.blocks, 1):
        if not block:
            raise PartitionError(f"block {e} is empty")
        out_of_range = [i for i in block if not 1 <= i <= inst.n_count]
        if out_of_range:
            raise PartitionError(f"block {e} contains unknown N-ids {sorted(out_of_range)}")
        twice = seen & block
        if twice:
            raise PartitionError(f"N-ids {sorted(twice)} appear in more than one block")
        seen |= block
    if len(seen) != inst.n_count:
        missing = sorted(set(inst.n_ids) - seen)
        raise PartitionError(f"N-ids {missing} are not covered by the partition")


def block_term(inst: Instance, block: Iterable[int]) -> int:
    """Block weight plus the weight of the block's M-union (each M-element once)."""
    block = list(block)
    union: set[int] = set()
    for i in block:
        union |= inst.assoc[i - 1]
    return wsum(inst.n_weights[i - 1] for i in block) + wsum(inst.m_weights[j - 1] for j in union)


def evaluate_objective(inst: Instance, part: Partition) -> int:
    """Maximum block term over the blocks of ``part``.

    Any positive number of blocks is accepted, not just ``inst.machines``.
    """
    check_partition(inst, part)
    return max(block_term(inst, b) for b in part.blocks)


def is_m1_instance(inst: Instance) -> bool:
    """Unit weights, |M(i)| = 1 for every i, and pairwise disjoint N(j)."""
    if any(w != 1 for w in inst.n_weights) or any(w != 1 for w in inst.m_weights):
        return False
    if any(len(s) != 1 for s in inst.assoc):
        return False
    # with |M(i)| = 1 each i lies in exactly one N(j); check explicitly anyway
    owner: dict[int, int] = {}
    for j in inst.m_ids:
        for i in inst.holders(j):
            if i in owner:
                return False
            owner[i] = j
    return True


def is_n1_instance(inst: Instance) -> bool:
    """Unit weights, |N(j)| = 1 for every j, and pairwise disjoint M(i)."""
    if any(w != 1 for w in inst.n_weights) or any(w != 1 for w in inst.m_weights):
        return False
    count = [0] * (inst.m_count + 1)
    for s in inst.assoc:
        for j in s:
            count[j] += 1
    # |N(j)| = 1 for all j already forces the M(i) to be disjoint
    return all(c == 1 for c in count[1:])


def make_instance(
    machines: int,
    n_weights: Sequence[int],
    m_weights: Sequence[int],
    assoc: Sequence[Iterable[int]],
) -> Instance:
    """Build and validate an instance; counts are taken from the weight lists."""
    return validate_instance(
        Instance(
            n_count=len(n_weights),
            m_count=len(m_weights),
            machines=machines,
            n_weights=tuple(n_weights),
            m_weights=tuple(m_weights),
            assoc=tuple(frozenset(s) for s in assoc),
        )
    )
