import pytest
from hypothesis import given

import oracles
from conftest import corpus, graphs
from matchext.families import family_G
from matchext.graph import (
    complete,
    complete_bipartite,
    cycle,
    delete_edge,
    delete_vertices,
    from_graph6,
    is_connected,
    path,
    union,
)
from matchext.matching import BudgetError, extends_to_perfect, has_perfect_matching
from matchext.properties import (
    BAD_SUBSET,
    DISCONNECTED,
    EDGE_REMOVAL_SURVIVES,
    EXTENDABLE,
    FACTOR_CRITICAL,
    NO_K_MATCHING,
    NON_EXTENDABLE_MATCHING,
    NOT_BIPARTITE,
    PARAM_OUT_OF_RANGE,
    UNBALANCED_BIPARTITION,
    WRONG_PARITY,
    Profile,
    PropertyDomainError,
    decide,
    is_balanced_bipartite_critical,
    is_factor_critical,
    is_half_extendable,
    is_k_extendable,
    is_minimal,
    profile,
    subsets,
)


def corpus_graphs(*orders):
    for n in orders:
        with open(corpus(n), "rb") as fh:
            for line in fh:
                yield from_graph6(line.strip())


class TestExamples:
    def test_extendable(self):
        g = family_G(2)
        assert is_k_extendable(g, 2)
        assert is_k_extendable(cycle(6), 1)
        v = is_k_extendable(cycle(6), 2)
        assert not v and v.reason == NON_EXTENDABLE_MATCHING
        assert v.witness == ((0, 1), (3, 4))
        assert is_k_extendable(complete(8), 3)

    def test_factor_critical(self):
        v = is_factor_critical(family_G(2), 4)
        assert not v and v.reason == BAD_SUBSET and v.witness == (0, 1, 2, 3)
        assert is_factor_critical(family_G(2), 2)
        assert is_factor_critical(cycle(5), 1)
        assert is_factor_critical(complete(8), 6)

    def test_half_extendable(self):
        assert is_half_extendable(cycle(5), 0)
        v = is_half_extendable(cycle(7), 1)
        assert not v and v.witness_kind == "vertex-matching"
        assert v.witness == (0, ((2, 3),))
        # the bad matching really fails in G - v
        rest, labels = delete_vertices(cycle(7), {0})
        relabel = {old: new for new, old in enumerate(labels)}
        assert not extends_to_perfect(rest, [(relabel[2], relabel[3])])

    def test_profile(self):
        assert profile(complete(8)) == Profile(3, None, 6)
        assert profile(cycle(5)) == Profile(None, 0, 1)
        assert profile(family_G(2)) == Profile(2, None, 2)

    def test_minimal(self):
        assert is_minimal(cycle(6), EXTENDABLE, 1)
        v = is_minimal(complete(6), EXTENDABLE, 1)
        assert not v and v.reason == EDGE_REMOVAL_SURVIVES and v.witness == (0, 1)
        assert is_minimal(cycle(5), FACTOR_CRITICAL, 1)
        assert not is_minimal(path(4), EXTENDABLE, 1)

    def test_zero_parameter(self):
        # k = 0 reduces to connectivity plus a perfect matching
        assert is_k_extendable(path(4), 0)
        v = is_k_extendable(union(complete(2), complete(2)), 0)
        assert not v and v.reason == DISCONNECTED
        assert is_factor_critical(union(complete(2), complete(2)), 0)
        assert is_half_extendable(cycle(7), 0)
        assert not is_half_extendable(path(5), 0)

    def test_no_k_matching(self):
        star = complete_bipartite(1, 5)
        v = is_k_extendable(star, 2)
        assert not v and v.reason == NO_K_MATCHING


class TestDomain:
    @pytest.mark.parametrize("call, reason", [
        (lambda: is_k_extendable(cycle(5), 1), WRONG_PARITY),
        (lambda: is_k_extendable(cycle(6), 3), PARAM_OUT_OF_RANGE),
        (lambda: is_k_extendable(cycle(6), -1), PARAM_OUT_OF_RANGE),
        (lambda: is_half_extendable(cycle(6), 1), WRONG_PARITY),
        (lambda: is_half_extendable(cycle(7), 3), PARAM_OUT_OF_RANGE),
        (lambda: is_half_extendable(cycle(5), 2), PARAM_OUT_OF_RANGE),
        (lambda: is_factor_critical(cycle(6), 1), WRONG_PARITY),
        (lambda: is_factor_critical(cycle(6), 6), PARAM_OUT_OF_RANGE),
        (lambda: is_balanced_bipartite_critical(cycle(5), 1), NOT_BIPARTITE),
        (lambda: is_balanced_bipartite_critical(cycle(6), 3), PARAM_OUT_OF_RANGE),
    ])
    def test_ill_posed(self, call, reason):
        with pytest.raises(PropertyDomainError) as info:
            call()
        assert info.value.reason == reason

    def test_budget(self):
        with pytest.raises(BudgetError, match="budget of 5"):
            is_factor_critical(complete(10), 4, budget=5)

    def test_unknown_property(self):
        with pytest.raises(ValueError):
            decide(cycle(5), "bicritical", 2)

    def test_subset_order(self):
        assert list(subsets(4, 2)) == [0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100]


class TestBalancedBipartite:
    def test_examples(self):
        assert is_balanced_bipartite_critical(cycle(6), 1)
        assert is_balanced_bipartite_critical(complete_bipartite(3, 3), 2)
        v = is_balanced_bipartite_critical(path(4), 1)
        assert not v and v.witness == (1, 2)
        v = is_balanced_bipartite_critical(complete_bipartite(2, 4), 1)
        assert not v and v.reason == UNBALANCED_BIPARTITION
        v = is_balanced_bipartite_critical(union(cycle(4), cycle(4)), 1)
        assert not v and v.reason == DISCONNECTED


class TestAgainstNaive:
    """Every connected graph up to order 6 (up to isomorphism) plus random labellings."""

    def test_extendable_small_corpus(self):
        for g in corpus_graphs(2, 4, 6):
            for k in range(0, (g.n - 2) // 2 + 1):
                assert bool(is_k_extendable(g, k)) == oracles.k_extendable(g, k)

    def test_half_extendable_small_corpus(self):
        for g in corpus_graphs(3, 5, 7):
            for k in range(0, (g.n - 3) // 2 + 1):
                assert bool(is_half_extendable(g, k)) == oracles.half_extendable(g, k)

    def test_factor_critical_small_corpus(self):
        for g in corpus_graphs(2, 3, 4, 5, 6):
            for n in range(g.n % 2, g.n - 1, 2):
                assert bool(is_factor_critical(g, n)) == oracles.factor_critical(g, n)

    @given(graphs(min_n=2, max_n=8))
    def test_random_labellings(self, g):
        if g.n % 2 == 0:
            for k in range(0, (g.n - 2) // 2 + 1):
                assert bool(is_k_extendable(g, k)) == oracles.k_extendable(g, k)
        else:
            for k in range(0, (g.n - 3) // 2 + 1):
                assert bool(is_half_extendable(g, k)) == oracles.half_extendable(g, k)
        for n in range(g.n % 2, g.n - 1, 2):
            assert bool(is_factor_critical(g, n)) == oracles.factor_critical(g, n)


class TestWitnessSoundness:
    @given(graphs(min_n=2, max_n=10, density=0.6))
    def test_witnesses(self, g):
        for n in range(g.n % 2, g.n - 1, 2):
            v = is_factor_critical(g, n)
            if not v:
                rest, _ = delete_vertices(g, v.witness)
                assert not has_perfect_matching(rest)
        if g.n % 2 == 0:
            for k in range(1, (g.n - 2) // 2 + 1):
                v = is_k_extendable(g, k)
                if v.reason == NON_EXTENDABLE_MATCHING:
                    assert len(v.witness) == k
                    assert not extends_to_perfect(g, v.witness)
        elif is_connected(g):
            for k in range(1, (g.n - 3) // 2 + 1):
                v = is_half_extendable(g, k)
                if v.reason == NON_EXTENDABLE_MATCHING:
                    x, m = v.witness
                    rest, labels = delete_vertices(g, {x})
                    relabel = {old: new for new, old in enumerate(labels)}
                    assert not extends_to_perfect(rest, [(relabel[a], relabel[b]) for a, b in m])

    @given(graphs(min_n=4, max_n=8, density=0.7))
    def test_minimality_witness(self, g):
        if g.n % 2 or not is_k_extendable(g, 1):
            return
        v = is_minimal(g, EXTENDABLE, 1)
        if v.reason == EDGE_REMOVAL_SURVIVES:
            assert is_k_extendable(delete_edge(g, v.witness), 1)
        elif v:
            assert all(not is_k_extendable(delete_edge(g, e), 1) for e in g.edges())

    @given(graphs(min_n=2, max_n=9))
    def test_witness_free_path_agrees(self, g):
        for n in range(g.n % 2, g.n - 1, 2):
            assert bool(is_factor_critical(g, n, witness=False)) == bool(is_factor_critical(g, n))
        if g.n % 2 == 0:
            for k in range(0, (g.n - 2) // 2 + 1):
                a, b = is_k_extendable(g, k, witness=False), is_k_extendable(g, k)
                assert (a.holds, a.reason) == (b.holds, b.reason)
