"""
Block costs, the packing threshold and the additive guarantee
=============================================================

Three programs share two libraries.  A workstation pays for every program
it runs plus each library it needs, once.
"""
from mwpsas import (
    Partition,
    STRATEGIES,
    approximate_partition,
    deviation_bound,
    evaluate_objective,
    exact_solve,
    make_instance,
)

# N = {1, 2, 3} with weights 2, 1, 3; M = {a, b} with weights 4, 5
inst = make_instance(machines=2, n_weights=[2, 1, 3], m_weights=[4, 5],
                     assoc=[{1}, {1, 2}, {2}])

# Programs 1 and 2 share library a, so it is paid once in their block.
print("f({1,2},{3}) =", evaluate_objective(inst, Partition.of([[1, 2], [3]])))

###############################################################################
# The heuristic is parameterised by an initial grouping of N.  Each grouping
# yields a threshold D and a bound on the distance to the optimum.

optimum = exact_solve(inst).optimum
for name in ("whole", "singletons"):
    init = STRATEGIES[name](inst)
    part, f = approximate_partition(inst, init)
    rep = deviation_bound(inst, init)
    print(f"{name:>10}: blocks={part.as_lists()} f={f} D={rep.d_value} "
          f"lower={rep.lower_bound} bound={rep.deviation_bound} gap={f - optimum}")
