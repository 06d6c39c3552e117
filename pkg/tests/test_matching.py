from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs
from oracles import edge_list, has_pm_on, matchings_of_size, max_matching_size
from matchext.families import family_G
from matchext.graph import (
    complete,
    complete_bipartite,
    components,
    cycle,
    delete_vertices,
    edgeless,
    from_graph6,
    path,
    union,
)
from matchext.matching import (
    BudgetError,
    Matching,
    PerfectMatchingOracle,
    brute_force_max_matching,
    enumerate_matchings,
    extends_to_perfect,
    has_perfect_matching,
    maximum_matching,
)

PETERSEN = "IheA@GUAo"


def is_matching_of(g, m: Matching) -> bool:
    ends = [x for e in m.edges for x in e]
    return len(set(ends)) == len(ends) and all(g.has_edge(u, v) for u, v in m.edges)


class TestMaximumMatching:
    def test_examples(self):
        assert len(maximum_matching(complete(4))) == 2
        assert len(maximum_matching(cycle(5))) == 2
        petersen = from_graph6(PETERSEN)
        assert petersen.degrees() == (3,) * 10
        assert len(maximum_matching(petersen)) == 5 == brute_force_max_matching(petersen)
        assert len(maximum_matching(edgeless(0))) == 0

    def test_perfect(self):
        assert has_perfect_matching(complete(2))
        assert not has_perfect_matching(complete_bipartite(1, 3))
        assert not has_perfect_matching(union(complete(3), complete(1)))
        assert not has_perfect_matching(complete(5))

    def test_deterministic(self):
        g = family_G(3)
        assert maximum_matching(g) == maximum_matching(g)

    @given(graphs(max_n=12))
    def test_against_networkx(self, g):
        m = maximum_matching(g)
        assert is_matching_of(g, m)
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges())
        assert len(m) == len(nx.max_weight_matching(h, maxcardinality=True))

    @given(graphs(max_n=9))
    def test_brute_force_against_naive(self, g):
        assert brute_force_max_matching(g) == max_matching_size(g.n, edge_list(g))

    @given(graphs(max_n=10))
    def test_tutte_berge(self, g):
        # nu(G) = min over S of (n + |S| - odd(G-S)) / 2, on a few S
        size = len(maximum_matching(g))
        best = g.n
        for k in range(0, min(g.n, 3) + 1):
            for s in combinations(range(g.n), k):
                rest, _ = delete_vertices(g, s)
                odd = sum(1 for c in components(rest) if c.bit_count() % 2)
                bound = (g.n + k - odd) // 2
                assert size <= bound
                best = min(best, bound)
        if g.n <= 6:
            for k in range(4, g.n + 1):
                for s in combinations(range(g.n), k):
                    rest, _ = delete_vertices(g, s)
                    odd = sum(1 for c in components(rest) if c.bit_count() % 2)
                    best = min(best, (g.n + k - odd) // 2)
            assert size == best

    def test_brute_force_limit(self):
        with pytest.raises(BudgetError):
            brute_force_max_matching(path(17))


class TestEnumeration:
    def test_counts(self):
        assert sum(1 for _ in enumerate_matchings(complete(4), 1)) == 6
        assert sum(1 for _ in enumerate_matchings(complete(4), 2)) == 3
        assert sum(1 for _ in enumerate_matchings(cycle(6), 3)) == 2
        assert list(enumerate_matchings(path(3), 2)) == []
        assert [m.edges for m in enumerate_matchings(path(3), 0)] == [()]

    def test_order_is_lexicographic(self):
        ms = [m.edges for m in enumerate_matchings(complete(6), 2)]
        assert ms == sorted(ms)

    @given(graphs(max_n=8))
    def test_against_subset_filter(self, g):
        edges = edge_list(g)
        for k in range(0, 4):
            got = [m.edges for m in enumerate_matchings(g, k)]
            expected = [tuple(c) for c in matchings_of_size(edges, k)]
            assert got == expected
            assert all(m.covered.bit_count() == 2 * k for m in enumerate_matchings(g, k))

    def test_negative_size(self):
        with pytest.raises(ValueError):
            list(enumerate_matchings(complete(3), -1))


class TestExtension:
    def test_examples(self):
        assert extends_to_perfect(cycle(6), [(0, 1)])
        assert not extends_to_perfect(path(4), [(1, 2)])
        g = family_G(2)
        assert all(extends_to_perfect(g, m) for m in enumerate_matchings(g, 2))

    def test_bad_matchings(self):
        with pytest.raises(ValueError):
            extends_to_perfect(cycle(6), [(0, 1), (1, 2)])
        with pytest.raises(ValueError):
            extends_to_perfect(cycle(6), [(0, 3)])


class TestOracle:
    @given(graphs(max_n=9))
    def test_table_against_naive(self, g):
        pm = PerfectMatchingOracle(g, table=True)
        lazy = PerfectMatchingOracle(g, table=False)
        edges = edge_list(g)
        for mask in range(1 << g.n):
            verts = [v for v in range(g.n) if mask >> v & 1]
            expected = has_pm_on(verts, edges)
            assert pm(mask) == expected
            assert lazy(mask) == expected

    def test_large_masks_use_blossom(self):
        g = union(complete(17), complete(3))  # order 20, no table
        pm = PerfectMatchingOracle(g)
        assert pm.table is None
        assert pm(g.full_mask) is False
        assert pm(g.full_mask ^ 1 ^ (1 << 17)) is True
