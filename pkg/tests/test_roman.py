from itertools import product

import pytest
from hypothesis import given, settings

from conftest import graphs
from middleroman.corpus import random_trees
from middleroman.graph import Graph, build_middle_graph, disjoint_union, family
from middleroman.roman import (
    DomainError,
    Labeling,
    SizeGuardError,
    brute_force_oracle,
    enumerate_optimal_two_sets,
    forced_completion,
    gamma_pr,
    gamma_r,
    is_prdf,
    is_rdf,
    solve,
    solve_by_components,
)


def L(*xs):
    return Labeling(xs)


def all_optimal_labelings(g, perfect):
    """Every minimum-weight labeling by direct enumeration."""
    pred = is_prdf if perfect else is_rdf
    valid = [f for f in map(Labeling, product(range(3), repeat=g.n)) if pred(g, f)]
    best = min(f.weight for f in valid)
    return {f.values for f in valid if f.weight == best}


class TestPredicates:
    @given(graphs())
    def test_all_ones_valid(self, g):
        f = Labeling((1,) * g.n)
        assert is_rdf(g, f) and is_prdf(g, f)

    def test_all_zeros_k2(self):
        assert not is_rdf(family("complete", 2), L(0, 0))

    def test_p3_center(self):
        g = family("path", 3)
        assert is_rdf(g, L(0, 2, 0))
        assert is_prdf(g, L(0, 2, 0))

    def test_c4_opposite_twos(self):
        g = family("cycle", 4)
        f = L(2, 0, 2, 0)
        assert is_rdf(g, f)
        assert not is_prdf(g, f)

    def test_domain_mismatch(self):
        with pytest.raises(DomainError):
            is_rdf(family("path", 3), L(1, 1))
        with pytest.raises(DomainError):
            is_prdf(family("path", 2), L(1, 1, 1))

    def test_bad_label(self):
        with pytest.raises(DomainError):
            L(0, 3)

    def test_weight_cached(self):
        assert L(2, 0, 1).weight == 3


class TestSolvers:
    @pytest.mark.parametrize("n", range(2, 8))
    def test_complete(self, n):
        assert gamma_r(family("complete", n)).optimum == 2

    def test_c5(self):
        # brute force over 3**5 labelings gives 4
        assert brute_force_oracle(family("cycle", 5), False) == 4
        assert gamma_r(family("cycle", 5)).optimum == 4

    def test_middle_p3(self):
        assert gamma_r(build_middle_graph(family("path", 3)).graph).optimum == 3

    def test_star(self):
        res = gamma_pr(family("star", 3))
        assert res.optimum == 2 and res.two_set == (0,)

    def test_p4(self):
        assert brute_force_oracle(family("path", 4), True) == 3
        assert gamma_pr(family("path", 4)).optimum == 3

    @pytest.mark.parametrize("n", range(0, 6))
    def test_empty(self, n):
        res = gamma_pr(family("empty", n))
        assert res.optimum == n
        assert res.witness.values == (1,) * n

    def test_isolated_vertices_get_one(self):
        g = disjoint_union(family("star", 3), family("empty", 2))
        for perfect in (False, True):
            assert solve(g, perfect).witness.values[4:] == (1, 1)

    def test_tie_break(self):
        # every vertex of C3 is an optimal 2-set; the first is chosen
        res = gamma_r(family("cycle", 3))
        assert res.two_set == (0,)
        assert res.witness.values == (2, 0, 0)

    def test_size_guard(self, monkeypatch):
        g = family("empty", 27)
        with pytest.raises(SizeGuardError):
            gamma_r(g)
        assert gamma_r(g, guard=27).optimum == 27
        monkeypatch.setenv("MR_SIZE_GUARD", "30")
        assert gamma_pr(g).optimum == 27

    def test_json(self):
        assert gamma_pr(family("path", 3)).to_json() == {
            "optimum": 2, "two_set": [1], "labels": [0, 2, 0]}

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=8))
    def test_oracle_equivalence(self, g):
        r, p = gamma_r(g), gamma_pr(g)
        assert r.optimum == brute_force_oracle(g, False)
        assert p.optimum == brute_force_oracle(g, True)
        assert is_rdf(g, r.witness) and r.witness.weight == r.optimum
        assert is_prdf(g, p.witness) and p.witness.weight == p.optimum
        assert set(r.two_set) == r.witness.level(2)
        assert p.optimum >= r.optimum

    @given(graphs(max_n=7))
    def test_deterministic(self, g):
        assert gamma_pr(g) == gamma_pr(g)
        assert gamma_r(g) == gamma_r(g)


class TestOracle:
    def test_k2(self):
        assert brute_force_oracle(family("complete", 2), False) == 2

    def test_k1(self):
        assert brute_force_oracle(family("complete", 1), False) == 1
        assert brute_force_oracle(family("complete", 1), True) == 1

    def test_limit(self):
        with pytest.raises(SizeGuardError):
            brute_force_oracle(family("empty", 13), True)

    @settings(max_examples=40, deadline=None)
    @given(graphs(max_n=6))
    def test_vectorised_matches_scalar_predicates(self, g):
        for perfect in (False, True):
            pred = is_prdf if perfect else is_rdf
            best = min(f.weight for f in map(Labeling, product(range(3), repeat=g.n))
                       if pred(g, f))
            assert brute_force_oracle(g, perfect) == best


class TestOptimalTwoSets:
    def test_p3(self):
        assert (1,) in enumerate_optimal_two_sets(family("path", 3), False)

    def test_k1(self):
        for perfect in (False, True):
            assert enumerate_optimal_two_sets(family("complete", 1), perfect) == [()]

    def test_c3(self):
        assert enumerate_optimal_two_sets(family("cycle", 3), False) == [(0,), (1,), (2,)]

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=6))
    def test_bijection_with_optimal_labelings(self, g):
        for perfect in (False, True):
            sets = enumerate_optimal_two_sets(g, perfect)
            completions = {forced_completion(g, s, perfect).values for s in sets}
            assert len(completions) == len(sets)
            assert completions == all_optimal_labelings(g, perfect)


class TestComponents:
    def test_two_k2(self):
        g = disjoint_union(family("complete", 2), family("complete", 2))
        assert solve_by_components(g, True).optimum == 4

    def test_empty_three(self):
        assert solve_by_components(family("empty", 3), True).optimum == 3

    def test_single_component(self):
        g = family("cycle", 5)
        assert solve_by_components(g, False) == gamma_r(g)

    @settings(max_examples=80, deadline=None)
    @given(graphs(max_n=4), graphs(max_n=4), graphs(max_n=3))
    def test_additivity(self, a, b, c):
        g = disjoint_union(a, b, c)
        for perfect in (False, True):
            res = solve_by_components(g, perfect)
            assert res.optimum == solve(g, perfect).optimum
            pred = is_prdf if perfect else is_rdf
            assert pred(g, res.witness) and res.witness.weight == res.optimum


def test_tree_bound_sample():
    for t in random_trees(30, 3, 10, seed=11):
        assert 5 * gamma_pr(t).optimum <= 4 * t.n
