"""Shared builders for the test suite."""

import random

from nbhd import Graph, SimplicialComplex, Involution, make_cycle, make_kneser


def hexagon_complex():
    """The 6-cycle as a 1-dimensional complex."""
    return SimplicialComplex.from_faces([(i, (i + 1) % 6) for i in range(6)])


def octahedron():
    """Boundary of the octahedron; antipodal pairs are (0,3), (1,4), (2,5)."""
    return SimplicialComplex.from_faces(
        [(a, b, c) for a in (0, 3) for b in (1, 4) for c in (2, 5)]
    )


def antipodal6(K):
    return Involution.from_label_map(K, {i: (i + 3) % 6 for i in range(6)})


def rp2_complex():
    """Minimal 6-vertex triangulation of the real projective plane."""
    triangles = [
        (0, 1, 4), (0, 1, 5), (0, 2, 3), (0, 2, 4), (0, 3, 5),
        (1, 2, 3), (1, 2, 5), (1, 3, 4), (2, 4, 5), (3, 4, 5),
    ]
    return SimplicialComplex.from_faces(triangles)


def simplex_boundary(n):
    """Boundary of the n-simplex on vertices 0..n."""
    verts = list(range(n + 1))
    return SimplicialComplex.from_faces(
        [tuple(v for v in verts if v != drop) for drop in verts]
    )


def full_simplex(n):
    return SimplicialComplex.from_faces([tuple(range(n + 1))])


def two_pentagons():
    """Two 5-cycles sharing vertex 4: a 9-vertex graph of odd girth 5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(4, 5), (5, 6), (6, 7), (7, 8), (8, 4)]
    return Graph(range(9), edges)


def nine_cycle_chord():
    """C_9 plus the chord {0, 4}: 9 vertices, odd girth 5."""
    edges = [(i, (i + 1) % 9) for i in range(9)] + [(0, 4)]
    return Graph(range(9), edges)


def small_graph_corpus():
    """Fixed 20-graph corpus on at most 7 vertices for cross-oracle sweeps."""
    graphs = [
        make_cycle(3),
        make_cycle(4),
        make_cycle(5),
        make_cycle(6),
        make_cycle(7),
        make_kneser(2, 1),          # single edge
        make_kneser(3, 1),          # triangle
        make_kneser(4, 1),          # K4
        make_kneser(5, 1),          # K5
        Graph(range(4), [(0, 1), (1, 2), (2, 3)]),              # path P4
        Graph(range(5), [(0, i) for i in range(1, 5)]),          # star
        Graph(range(5), [(i, j) for i in range(2) for j in range(2, 5)]),  # K_{2,3}
        Graph(range(6), [(i, j) for i in range(3) for j in range(3, 6)]),  # K_{3,3}
        Graph(range(7), [(i, (i + 1) % 7) for i in range(7)] + [(0, 3)]),  # C7 + chord
        Graph(range(6), [(i, (i + 1) % 5) for i in range(5)] + [(0, 5)]),  # C5 + pendant
        Graph(range(6), [(i, (i + 1) % 6) for i in range(6)] + [(0, 2)]),  # C6 + short chord
        Graph(range(5), [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]),  # C5 + chord
        Graph(range(1), []),                                     # isolated vertex
        Graph(range(7), [(i, (i + 1) % 7) for i in range(7)] + [(1, 4)]),  # C7 + other chord
        Graph(range(6), [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]),  # two triangles
    ]
    assert len(graphs) == 20
    assert all(g.n_vertices <= 7 for g in graphs)
    return graphs


def lemma_suite_random_graphs():
    """Ten fixed random connected graphs on <= 7 vertices."""
    from nbhd import random_connected_graph

    rng = random.Random(402211)
    out = []
    while len(out) < 10:
        n = rng.randint(4, 7)
        out.append(random_connected_graph(n, 0.35, rng))
    return out
