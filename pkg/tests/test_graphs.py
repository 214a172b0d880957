import itertools
import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nbhd import (
    Graph,
    graph_from_json_obj,
    graph_to_json_obj,
    hom_search,
    is_connected,
    kneser_walk_test,
    make_cycle,
    make_kneser,
    odd_girth,
    parse_edge_list,
    validate_hom,
    walk_neighborhood,
)


def brute_walk_endpoints(G, start, r):
    """Oracle: enumerate every walk of length exactly r."""
    frontier = {start}
    for _ in range(r):
        frontier = {w for u in frontier for w in G.adj[u]}
    return tuple(sorted(frontier))


small_graphs = st.builds(
    lambda n, bits: Graph(
        range(n),
        [e for e, b in zip(itertools.combinations(range(n), 2), bits) if b],
    ),
    st.integers(min_value=1, max_value=6),
    st.lists(st.booleans(), min_size=15, max_size=15),
)


class TestGenerators:
    def test_cycle_small(self):
        g = make_cycle(3)
        assert g.n_vertices == 3 and g.edge_count() == 3
        g = make_cycle(5)
        assert g.n_vertices == 5 and g.edge_count() == 5

    def test_cycle_too_small(self):
        with pytest.raises(ValueError):
            make_cycle(2)

    def test_kneser_5_2_counts(self):
        # oracle: enumerate disjoint pairs of 2-subsets of a 5-set directly
        subsets = list(itertools.combinations(range(1, 6), 2))
        expected_edges = sum(
            1 for a, b in itertools.combinations(subsets, 2) if not set(a) & set(b)
        )
        g = make_kneser(5, 2)
        assert g.n_vertices == 10
        assert g.edge_count() == expected_edges == 15

    def test_kneser_4_2_is_perfect_matching(self):
        g = make_kneser(4, 2)
        assert g.n_vertices == 6 and g.edge_count() == 3
        assert all(g.degree(i) == 1 for i in range(6))

    def test_kneser_edgeless_when_crowded(self):
        assert make_kneser(5, 3).edge_count() == 0

    def test_kneser_bad_params(self):
        with pytest.raises(ValueError):
            make_kneser(2, 3)
        with pytest.raises(ValueError):
            make_kneser(0, 1)

    def test_duplicate_labels_rejected(self):
        with pytest.raises(ValueError):
            Graph([0, 0, 1])

    def test_loop_accepted(self):
        g = Graph([0, 1], [(0, 0), (0, 1)])
        assert g.has_edge(0, 0)


class TestWalkNeighborhood:
    def test_radius_zero(self):
        g = make_cycle(9)
        assert walk_neighborhood(g, 4, 0) == (4,)

    def test_c7_radius2(self):
        g = make_cycle(7)
        assert walk_neighborhood(g, 0, 2) == brute_walk_endpoints(g, 0, 2) == (0, 2, 5)

    def test_c5_radius3_reaches_everything_else(self):
        g = make_cycle(5)
        assert walk_neighborhood(g, 0, 3) == (1, 2, 3, 4)

    def test_unknown_vertex(self):
        with pytest.raises(ValueError):
            walk_neighborhood(make_cycle(5), 99, 1)

    def test_negative_radius(self):
        with pytest.raises(ValueError):
            walk_neighborhood(make_cycle(5), 0, -1)

    @given(small_graphs, st.integers(min_value=0, max_value=4))
    @settings(max_examples=60, deadline=None)
    def test_matches_brute_force_walks(self, g, r):
        for v in range(g.n_vertices):
            assert walk_neighborhood(g, v, r) == brute_walk_endpoints(g, v, r)

    @given(small_graphs, st.integers(min_value=0, max_value=3))
    @settings(max_examples=60, deadline=None)
    def test_monotone_in_steps_of_two(self, g, r):
        # backtracking needs a neighbor to step through, so an isolated vertex
        # has N_0 = {v} but N_2 = {}; every other case is monotone
        for v in range(g.n_vertices):
            if r == 0 and not g.adj[v]:
                continue
            assert set(walk_neighborhood(g, v, r)) <= set(walk_neighborhood(g, v, r + 2))

    @given(small_graphs, st.integers(min_value=0, max_value=4))
    @settings(max_examples=60, deadline=None)
    def test_symmetry(self, g, r):
        balls = [set(walk_neighborhood(g, v, r)) for v in range(g.n_vertices)]
        for u in range(g.n_vertices):
            for v in range(g.n_vertices):
                assert (u in balls[v]) == (v in balls[u])


class TestOddGirth:
    def test_cycles(self):
        assert odd_girth(make_cycle(5)) == 5
        assert odd_girth(make_cycle(6)) == math.inf
        assert odd_girth(make_cycle(9)) == 9

    def test_petersen(self):
        assert odd_girth(make_kneser(5, 2)) == 5

    def test_loop_gives_one(self):
        assert odd_girth(Graph([0, 1], [(0, 0), (0, 1)])) == 1

    def test_edgeless(self):
        assert odd_girth(Graph(range(3))) == math.inf

    def test_petersen_agrees_with_cycle_map_search(self):
        g = make_kneser(5, 2)
        hits = [m for m in (3, 5, 7, 9) if hom_search(make_cycle(m), g).found]
        assert hits and hits[0] == odd_girth(g) == 5

    @given(small_graphs)
    @settings(max_examples=40, deadline=None)
    def test_agrees_with_cycle_map_search(self, g):
        # oracle: odd girth == least odd m with a map C_m -> g (scanned to 9)
        found = math.inf
        for m in (3, 5, 7, 9):
            if hom_search(make_cycle(m), g).found:
                found = m
                break
        expected = odd_girth(g)
        if expected <= 9:
            assert found == expected
        else:
            assert found == math.inf


class TestKneserWalkTest:
    def test_simple_instance(self):
        assert kneser_walk_test(5, 2, (1, 2), (1, 3), 1)

    def test_equal_sets_always_pass(self):
        for s in range(1, 5):
            assert kneser_walk_test(5, 2, (1, 2), (1, 2), s)

    def test_far_apart_in_k73(self):
        assert not kneser_walk_test(7, 3, (1, 2, 3), (4, 5, 6), 1)
        g = make_kneser(7, 3)
        ball = walk_neighborhood(g, (1, 2, 3), 2)
        assert g.index_of((4, 5, 6)) not in ball

    def test_malformed(self):
        with pytest.raises(ValueError):
            kneser_walk_test(5, 2, (1, 2, 3), (1, 2), 1)
        with pytest.raises(ValueError):
            kneser_walk_test(5, 2, (0, 2), (1, 2), 1)
        with pytest.raises(ValueError):
            kneser_walk_test(4, 2, (1, 2), (3, 4), 1)  # needs n > 2k

    @pytest.mark.parametrize("n,k", [(5, 2), (6, 2)])
    def test_matches_walk_balls(self, n, k):
        g = make_kneser(n, k)
        for s in (1, 2):
            for a in g.vertices:
                ball = set(walk_neighborhood(g, a, 2 * s))
                for b in g.vertices:
                    assert kneser_walk_test(n, k, a, b, s) == (g.index_of(b) in ball)


class TestHomSearch:
    def test_wraparound_map(self):
        out = hom_search(make_cycle(9), make_cycle(3))
        assert out.found
        assert validate_hom(out.mapping, make_cycle(9), make_cycle(3))

    def test_self_map(self):
        g = make_cycle(5)
        out = hom_search(g, g)
        assert out.found and validate_hom(out.mapping, g, g)

    def test_petersen_to_c5_has_none(self):
        out = hom_search(make_kneser(5, 2), make_cycle(5))
        assert out.status == "none"

    def test_budget_exceeded(self):
        out = hom_search(make_kneser(5, 2), make_cycle(5), budget=10)
        assert out.status == "budget-exceeded" and out.mapping is None

    def test_empty_source(self):
        assert hom_search(Graph([]), make_cycle(3)).found

    def test_empty_target(self):
        assert hom_search(make_cycle(3), Graph([])).status == "none"

    def test_deterministic(self):
        a = hom_search(make_cycle(9), make_cycle(3))
        b = hom_search(make_cycle(9), make_cycle(3))
        assert a == b

    @given(small_graphs, small_graphs)
    @settings(max_examples=30, deadline=None)
    def test_found_maps_validate_and_respect_girth(self, g, h):
        out = hom_search(g, h, budget=200_000)
        if out.found:
            assert validate_hom(out.mapping, g, h)
            assert odd_girth(g) >= odd_girth(h)


class TestValidateHom:
    def test_identity(self):
        g = make_cycle(5)
        assert validate_hom(tuple(range(5)), g, g)

    def test_constant_map_fails_without_loops(self):
        g = make_cycle(5)
        assert not validate_hom((0,) * 5, g, g)

    def test_mod3_map(self):
        f = tuple(i % 3 for i in range(9))
        g, h = make_cycle(9), make_cycle(3)
        # oracle: check all nine edges by hand
        for i in range(9):
            assert h.has_edge(f[i], f[(i + 1) % 9])
        assert validate_hom(f, g, h)

    def test_partial_map_rejected(self):
        with pytest.raises(ValueError):
            validate_hom((0, 1), make_cycle(5), make_cycle(5))


class TestIO:
    def test_json_roundtrip_with_tuple_labels(self, tmp_path):
        g = make_kneser(4, 2)
        obj = graph_to_json_obj(g)
        back = graph_from_json_obj(json.loads(json.dumps(obj)))
        assert back == g and back.tag == g.tag

    def test_loader_symmetrizes(self):
        g = graph_from_json_obj({"vertices": [0, 1], "edges": [[0, 1]]})
        assert g.has_edge(1, 0)

    def test_edge_list_with_comments(self):
        g = parse_edge_list("# a triangle\n0 1\n1 2\n2 0  # closing edge\n\n")
        assert g.n_vertices == 3 and g.edge_count() == 3

    def test_edge_list_bad_line(self):
        with pytest.raises(ValueError):
            parse_edge_list("0 1 2\n")

    def test_edge_list_roundtrip(self):
        from nbhd import format_edge_list

        g = make_cycle(4)
        back = parse_edge_list(format_edge_list(g))
        # vertex order follows first appearance in the text, so compare labels
        assert set(back.vertices) == set(g.vertices)
        label_edges = lambda gr: {
            frozenset((gr.vertices[i], gr.vertices[j])) for i, j in gr.edges()
        }
        assert label_edges(back) == label_edges(g)

    def test_connectivity_helper(self):
        assert is_connected(make_cycle(4))
        assert not is_connected(Graph(range(2)))
