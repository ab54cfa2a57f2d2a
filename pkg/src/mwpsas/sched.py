"""Scheduling view of the problem.

In general the problem is parallel-machine makespan minimisation on the job
set N ∪ M with a bipartite precedence graph (j -> i whenever j ∈ M(i)),
infinite communication delay and free duplication: every M-job a machine
needs is copied onto it, so a block's load is exactly its objective term.
Only the N1 variant is materialised here.  There the M(i) are disjoint and
each N-element behaves like an independent job of duration |M(i)| + 1 on
identical machines.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Sequence

from .errors import VariantError
from .model import Instance, Partition, evaluate_objective, is_n1_instance


@dataclass(frozen=True)
class MachineJobSet:
    durations: tuple[int, ...]  # indexed by N-id - 1
    machines: int

    def makespan(self, assignment: Sequence[Sequence[int]]) -> int:
        """Largest machine load for ``assignment`` (lists of 1-based job ids)."""
        return max(sum(self.durations[j - 1] for j in jobs) for jobs in assignment)


def _require_n1(inst: Instance) -> None:
    if not is_n1_instance(inst):
        raise VariantError("operation requires an N1 instance")


def to_parallel_machines(inst: Instance) -> MachineJobSet:
    _require_n1(inst)
    return MachineJobSet(tuple(len(inst.assoc_of(i)) + 1 for i in inst.n_ids), inst.machines)


def lpt_partition(inst: Instance) -> tuple[Partition, int]:
    """Longest-processing-time list scheduling on the N1 job view.

    Jobs go longest first (ties: smaller id) to the least loaded machine
    (ties: smaller index).
    """
    jobs = to_parallel_machines(inst)
    order = sorted(inst.n_ids, key=lambda i: (-jobs.durations[i - 1], i))
    heap = [(0, k) for k in range(jobs.machines)]
    machines: list[list[int]] = [[] for _ in range(jobs.machines)]
    for i in order:
        load, k = heapq.heappop(heap)
        machines[k].append(i)
        heapq.heappush(heap, (load + jobs.durations[i - 1], k))

    # with |N| > machines and positive durations no machine stays idle;
    # keep the block invariant anyway
    blocks = [b for b in machines if b]
    while len(blocks) < jobs.machines:
        big = max(blocks, key=lambda b: (len(b), -blocks.index(b)))
        if len(big) < 2:
            break
        i = min(big)
        big.remove(i)
        blocks.append([i])

    part = Partition.of(blocks)
    return part, evaluate_objective(inst, part)
