"""
Hardness constructions as instance generators
=============================================

The CLIQUE construction yields two-machine unit-weight instances whose
answer at target C matches the clique question.  The 3-PARTITION
constructions do the same for the M1 and N1 variants.
"""
from mwpsas import (
    Graph,
    Part3Instance,
    brute_force_3partition,
    brute_force_clique,
    decide,
    reduce_clique,
    reduce_part3_m1,
    reduce_part3_n1,
)

# K4 with edge {3, 4} removed: has a triangle, no 4-clique.
g = Graph.from_edges(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])
dec = reduce_clique(g, 3)
print(f"|N|={dec.instance.n_count} |M|={dec.instance.m_count} C={dec.target}")
print("roles:", dec.n_roles)
print("clique:", brute_force_clique(g, 3), " decision:", decide(dec.instance, dec.target).value)

###############################################################################
# A 3-PARTITION "no" input: the 6 can only go with two 4s.

p3 = Part3Instance(r=2, b=13, a=(6, 4, 4, 4, 4, 4))
print("3-partition:", brute_force_3partition(p3))
for build in (reduce_part3_m1, reduce_part3_n1):
    d = build(p3)
    print(f"  {build.__name__}: |N|={d.instance.n_count} -> {decide(d.instance, d.target).value}")
