"""Exact oracles for small instances.

``exact_solve`` is a depth-first branch and bound meant for |N| up to about
14 (larger when the structure is symmetric).  The CLIQUE and 3-PARTITION
brute-force solvers are plain enumerations used to cross-check the
reductions.
"""
from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .approx import approximate_partition, lower_bound, strategy_whole
from .model import Instance, Partition, ceil_div, evaluate_objective
from .reductions import Graph, Part3Instance, validate_part3

_CLOCK_EVERY = 1024


@dataclass(frozen=True)
class ExactResult:
    optimum: int
    witness: Partition
    nodes_explored: int
    timed_out: bool


class Decision(str, enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class _Timeout(Exception):
    pass


class _Search:
    """Assign N-elements, most expensive first, to blocks 0..m-1.

    Symmetry breaking: an element may open block b only if blocks 0..b-1
    are in use, and consecutive interchangeable elements (same weight, same
    association) take non-decreasing block indices.
    """

    def __init__(self, inst: Instance, deadline: Optional[float], cutoff: Optional[int]):
        self.inst = inst
        self.m = inst.machines
        self.deadline = deadline
        # stop once a solution <= cutoff is known
        self.cutoff = cutoff
        self.order = sorted(
            inst.n_ids,
            key=lambda i: (-inst.element_cost(i), inst.p(i), tuple(sorted(inst.assoc_of(i))), i),
        )
        self.twin_prev = [False] * len(self.order)
        for pos in range(1, len(self.order)):
            a, b = self.order[pos - 1], self.order[pos]
            self.twin_prev[pos] = inst.p(a) == inst.p(b) and inst.assoc_of(a) == inst.assoc_of(b)
        self.assoc = {i: tuple(sorted(inst.assoc_of(i))) for i in inst.n_ids}
        # remaining N-weight from position pos onward
        self.rest_p = [0] * (len(self.order) + 1)
        for pos in range(len(self.order) - 1, -1, -1):
            self.rest_p[pos] = self.rest_p[pos + 1] + inst.p(self.order[pos])

        self.cover = [[0] * (inst.m_count + 1) for _ in range(self.m)]
        self.any_cover = [0] * (inst.m_count + 1)
        self.uncovered = sum(inst.m_weights)
        self.terms = [0] * self.m
        self.sizes = [0] * self.m
        self.where = [0] * len(self.order)
        self.used = 0
        self.nodes = 0

        self.best = None
        self.best_assign = None
        self.global_lb = lower_bound(inst)

    def seed(self, value: int, part: Partition) -> None:
        self.best = value
        self.best_assign = {i: e for e, blk in enumerate(part.blocks) for i in blk}

    def done(self) -> bool:
        if self.best is None:
            return False
        if self.best <= self.global_lb:
            return True
        return self.cutoff is not None and self.best <= self.cutoff

    def bar(self) -> Optional[int]:
        """Nodes whose lower bound reaches this value are pruned."""
        bar = self.best
        if self.cutoff is not None:
            bar = self.cutoff + 1 if bar is None else min(bar, self.cutoff + 1)
        return bar

    def _add(self, i: int, b: int) -> int:
        inst, row = self.inst, self.cover[b]
        extra = inst.p(i)
        for j in self.assoc[i]:
            if row[j] == 0:
                extra += inst.q(j)
            row[j] += 1
            if self.any_cover[j] == 0:
                self.uncovered -= inst.q(j)
            self.any_cover[j] += 1
        self.terms[b] += extra
        self.sizes[b] += 1
        return extra

    def _remove(self, i: int, b: int, extra: int) -> None:
        inst, row = self.inst, self.cover[b]
        for j in self.assoc[i]:
            row[j] -= 1
            self.any_cover[j] -= 1
            if self.any_cover[j] == 0:
                self.uncovered += inst.q(j)
        self.terms[b] -= extra
        self.sizes[b] -= 1

    def run(self) -> None:
        self._descend(0, 0)

    def _descend(self, pos: int, cur_max: int) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes % _CLOCK_EVERY == 0:
            if time.monotonic() > self.deadline:
                raise _Timeout
        n = len(self.order)
        if pos == n:
            if self.used == self.m and (self.best is None or cur_max < self.best):
                self.best = cur_max
                self.best_assign = {self.order[p]: self.where[p] for p in range(n)}
            return
        if n - pos < self.m - self.used:
            return
        i = self.order[pos]
        lo = self.where[pos - 1] if self.twin_prev[pos] else 0
        hi = min(self.used, self.m - 1)
        # cheapest resulting block first
        cands = []
        for b in range(lo, hi + 1):
            row = self.cover[b]
            extra = self.inst.p(i) + sum(self.inst.q(j) for j in self.assoc[i] if row[j] == 0)
            cands.append((self.terms[b] + extra, b))
        cands.sort()
        for new_term, b in cands:
            bar = self.bar()
            new_max = max(cur_max, new_term)
            if bar is not None and new_max >= bar:
                continue
            opened = b == self.used
            extra = self._add(i, b)
            if opened:
                self.used += 1
            self.where[pos] = b
            total = sum(self.terms) + self.rest_p[pos + 1] + self.uncovered
            node_lb = max(new_max, ceil_div(total, self.m))
            if bar is None or node_lb < bar:
                self._descend(pos + 1, new_max)
            if opened:
                self.used -= 1
            self._remove(i, b, extra)
            if self.done():
                return

    def witness(self) -> Partition:
        blocks: list[list[int]] = [[] for _ in range(self.m)]
        for i, b in self.best_assign.items():
            blocks[b].append(i)
        return Partition.of(blk for blk in blocks if blk)


def _run(inst: Instance, time_budget: Optional[float], cutoff: Optional[int]) -> tuple[_Search, bool]:
    deadline = None if time_budget is None else time.monotonic() + time_budget
    search = _Search(inst, deadline, cutoff)
    part, f = approximate_partition(inst, strategy_whole(inst))
    search.seed(f, part)
    timed_out = False
    if not search.done():
        try:
            search.run()
        except _Timeout:
            timed_out = True
    return search, timed_out


def exact_solve(inst: Instance, time_budget: Optional[float] = None) -> ExactResult:
    """Minimum objective over partitions into exactly ``inst.machines`` blocks.

    ``time_budget`` is wall-clock seconds; on expiry the best incumbent is
    returned with ``timed_out=True``.
    """
    search, timed_out = _run(inst, time_budget, None)
    witness = search.witness()
    optimum = evaluate_objective(inst, witness)
    assert optimum == search.best
    return ExactResult(optimum, witness, search.nodes, timed_out)


def decide(inst: Instance, c: int, time_budget: Optional[float] = None) -> Decision:
    """Is there a partition into ``inst.machines`` blocks with objective <= c?

    Same search as :func:`exact_solve`, but it stops at the first witness
    <= c and prunes every node whose bound exceeds c.
    """
    if c < lower_bound(inst):
        return Decision.NO
    search, timed_out = _run(inst, time_budget, c)
    if search.best <= c:
        return Decision.YES
    return Decision.UNKNOWN if timed_out else Decision.NO


def brute_force_clique(g: Graph, k: int) -> bool:
    """Does ``g`` contain ``k`` pairwise adjacent nodes? Enumerates k-subsets."""
    if k < 0:
        return False
    for nodes in combinations(range(1, g.node_count + 1), k):
        if all(pair in g.edges for pair in combinations(nodes, 2)):
            return True
    return False


def brute_force_3partition(p3: Part3Instance) -> bool:
    """Can the 3r numbers be split into r triples each summing to B?"""
    validate_part3(p3)

    def split(rest: tuple[int, ...]) -> bool:
        if not rest:
            return True
        first, others = rest[0], rest[1:]
        for x, y in combinations(range(len(others)), 2):
            if p3.a[first] + p3.a[others[x]] + p3.a[others[y]] == p3.b:
                left = tuple(o for idx, o in enumerate(others) if idx not in (x, y))
                if split(left):
                    return True
        return False

    return split(tuple(range(len(p3.a))))
