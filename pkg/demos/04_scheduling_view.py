"""
N1 instances as parallel-machine scheduling
===========================================

With disjoint association sets each program is a job of length |M(i)| + 1
and a partition is a machine assignment.  LPT gives a quick baseline.
"""
from mwpsas import exact_solve, generate_instance, lower_bound, lpt_partition, to_parallel_machines

inst = generate_instance(seed=3, n=9, m_set=20, machines=3, variant="n1")
jobs = to_parallel_machines(inst)
print("durations:", jobs.durations)

part, makespan = lpt_partition(inst)
print("LPT machines:", part.as_lists())
print(f"LPT makespan {makespan}, optimum {exact_solve(inst).optimum}, lower bound {lower_bound(inst)}")
