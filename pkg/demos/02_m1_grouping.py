"""
Grouping by shared element on M1 instances
==========================================

When every program needs exactly one library, grouping programs by library
keeps the heuristic within one unit of the optimum.
"""
from collections import Counter

from mwpsas import approximate_partition, exact_solve, generate_instance, strategy_group_m1

gaps = Counter()
for seed in range(100):
    inst = generate_instance(seed, n=10, m_set=4, machines=3, variant="m1")
    _, f = approximate_partition(inst, strategy_group_m1(inst))
    gaps[f - exact_solve(inst).optimum] += 1

print("distribution of f - f* over 100 instances:", dict(sorted(gaps.items())))
