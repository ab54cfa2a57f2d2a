import random
from itertools import combinations

import pytest

from mwpsas import (
    Decision,
    Graph,
    Part3Instance,
    brute_force_3partition,
    brute_force_clique,
    decide,
    exact_solve,
    is_m1_instance,
    is_n1_instance,
    reduce_clique,
    reduce_part3_m1,
    reduce_part3_n1,
    to_parallel_machines,
    validate_instance,
)
from mwpsas.errors import Part3FormatError, PreconditionError

K3 = Graph.from_edges(3, [(1, 2), (1, 3), (2, 3)])
P4 = Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)])
K4_MINUS = Graph.from_edges(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])


class TestClique:
    def test_k3_sizes(self):
        dec = reduce_clique(K3, 2)
        inst = dec.instance
        assert (inst.n_count, inst.m_count, inst.machines, dec.target) == (7, 7, 2, 8)
        assert decide(inst, dec.target) is Decision.YES
        assert brute_force_clique(K3, 2)

    def test_path(self):
        dec = reduce_clique(P4, 2)
        assert dec.target == 9
        assert decide(dec.instance, dec.target) is Decision.YES

    def test_k4_minus_edge(self):
        dec = reduce_clique(K4_MINUS, 3)
        assert dec.target == 12
        assert brute_force_clique(K4_MINUS, 3)
        assert decide(dec.instance, dec.target) is Decision.YES

    def test_layout_and_roles(self):
        dec = reduce_clique(K3, 2)
        inst = dec.instance
        assert dec.n_roles == ("W:1-2", "W:1-3", "W:2-3", "T:1", "T:2", "T:3", "T0")
        assert dec.m_roles == ("V:1", "V:2", "V:3", "S:1", "S:2", "S:3", "S:4")
        assert inst.assoc_of(1) == {1, 2}
        assert inst.assoc_of(4) == {1, 2, 3}
        assert inst.assoc_of(7) == {4, 5, 6, 7}
        assert set(inst.n_weights) == {1} and set(inst.m_weights) == {1}

    @pytest.mark.parametrize(
        "g, k",
        [(K3, 1), (K3, 3), (P4, 3), (Graph.from_edges(4, [(1, 2)]), 2)],
    )
    def test_precondition(self, g, k):
        with pytest.raises(PreconditionError):
            reduce_clique(g, k)

    def test_witness_matches_clique_for_yes(self):
        # the block holding T0 spans exactly a k-clique's nodes
        dec = reduce_clique(K4_MINUS, 3)
        res = exact_solve(dec.instance)
        assert res.optimum <= dec.target
        t0 = dec.instance.n_count
        block = next(b for b in res.witness if t0 in b)
        nodes = set().union(*(dec.instance.assoc_of(i) for i in block)) & set(range(1, 5))
        assert len(nodes) == 3
        assert all(p in K4_MINUS.edges for p in combinations(sorted(nodes), 2))

    @pytest.mark.parametrize("seed", range(25))
    def test_size_formulas_random(self, seed):
        rng = random.Random(seed)
        n = rng.randint(3, 9)
        edges = [p for p in combinations(range(1, n + 1), 2) if rng.random() < 0.5]
        g = Graph.from_edges(n, edges)
        w = len(edges)
        for k in range(2, n):
            if (k * k - k) // 2 >= w:
                continue
            dec = reduce_clique(g, k)
            assert dec.instance.n_count == w + (k * k + k) // 2 + 1
            assert dec.instance.m_count == n + (n + w - (k * k - k) // 2 - 1)
            assert dec.target == n + w + k
            validate_instance(dec.instance)


class TestThreePartition:
    def test_m1_single_triple(self):
        dec = reduce_part3_m1(Part3Instance(1, 9, (3, 3, 3)))
        inst = dec.instance
        assert (inst.n_count, inst.m_count, inst.machines, dec.target) == (6, 3, 1, 9)
        assert decide(inst, dec.target) is Decision.YES
        assert dec.n_roles == ("A1", "A1", "A2", "A2", "A3", "A3")

    def test_m1_two_triples(self):
        p3 = Part3Instance(2, 9, (3,) * 6)
        dec = reduce_part3_m1(p3)
        inst = dec.instance
        assert (inst.n_count, inst.m_count, inst.machines, dec.target) == (12, 6, 2, 9)
        assert (decide(inst, dec.target) is Decision.YES) == brute_force_3partition(p3) is True

    def test_n1_single_triple(self):
        dec = reduce_part3_n1(Part3Instance(1, 9, (3, 3, 3)))
        inst = dec.instance
        assert (inst.n_count, inst.m_count, inst.machines, dec.target) == (3, 6, 1, 9)
        assert decide(inst, dec.target) is Decision.YES

    def test_n1_two_triples(self):
        p3 = Part3Instance(2, 9, (3,) * 6)
        dec = reduce_part3_n1(p3)
        assert (decide(dec.instance, dec.target) is Decision.YES) == brute_force_3partition(p3)

    def test_no_instance_outside_small_range(self):
        # no "no" inputs exist for r <= 2, B <= 12; B = 13 has one
        p3 = Part3Instance(2, 13, (6, 4, 4, 4, 4, 4))
        assert not brute_force_3partition(p3)
        for dec in (reduce_part3_m1(p3), reduce_part3_n1(p3)):
            assert decide(dec.instance, dec.target) is Decision.NO

    @pytest.mark.parametrize(
        "a, b",
        [((4, 4, 5, 4, 4, 5), 13), ((5, 5, 3, 3, 3, 3), 11), ((4, 5, 6, 4, 5, 6, 4, 5, 6), 15)],
    )
    def test_variants_and_durations(self, a, b):
        p3 = Part3Instance(len(a) // 3, b, a)
        assert is_m1_instance(reduce_part3_m1(p3).instance)
        n1 = reduce_part3_n1(p3).instance
        assert is_n1_instance(n1)
        assert to_parallel_machines(n1).durations == a

    def test_bad_input(self):
        with pytest.raises(Part3FormatError):
            reduce_part3_m1(Part3Instance(1, 10, (3, 3, 3)))
        with pytest.raises(Part3FormatError):
            reduce_part3_n1(Part3Instance(1, 9, (2, 3, 4)))
