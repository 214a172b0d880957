"""Abstract simplicial complexes and finite posets, plus the graph-derived
builders: walk-neighborhood complexes, linked-pair posets, order complexes,
face posets, barycentric subdivision.

Complexes are stored by facets; full face enumeration is on demand, cached,
and guarded by a face-count limit (default 5,000,000).  Constructed values
are immutable apart from that cache and are safe to share between readers.
"""

from __future__ import annotations

import itertools
import json
from collections import deque

from .errors import ResourceLimitError
from .graphs import _decode_label, _encode_label, walk_ball

DEFAULT_FACE_LIMIT = 5_000_000

__all__ = [
    "DEFAULT_FACE_LIMIT",
    "SimplicialComplex",
    "Poset",
    "sorted_labels",
    "neighborhood_complex",
    "pair_poset",
    "order_complex",
    "face_poset",
    "barycentric_subdivision",
    "complex_to_json_obj",
    "complex_from_json_obj",
    "save_complex",
    "load_complex",
]


def sorted_labels(labels):
    """Deterministic label order: natural when comparable, else type/repr."""
    labels = list(labels)
    try:
        return sorted(labels)
    except TypeError:
        return sorted(labels, key=lambda x: (type(x).__name__, repr(x)))


class SimplicialComplex:
    """Finite abstract simplicial complex stored by facets.

    ``vertices`` holds the labels; ``facets`` are strictly increasing index
    tuples, pairwise non-nested, in lexicographic order.
    """

    __slots__ = ("vertices", "facets", "_index", "_faces", "_facet_sets")

    def __init__(self, vertices, facets):
        self.vertices = tuple(vertices)
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise ValueError("vertex labels must be pairwise distinct")
        fs = []
        for f in facets:
            f = tuple(f)
            if any(not (0 <= i < n) for i in f):
                raise ValueError("facet vertex index out of range")
            if any(f[i] >= f[i + 1] for i in range(len(f) - 1)):
                raise ValueError("facet indices must be strictly increasing")
            fs.append(f)
        self.facets = tuple(sorted(fs))
        self._index = {v: i for i, v in enumerate(self.vertices)}
        self._faces = None
        self._facet_sets = tuple(frozenset(f) for f in self.facets)

    @classmethod
    def from_faces(cls, faces):
        """Build from arbitrary faces (iterables of labels), keeping only the
        maximal ones.  Vertices are the labels that occur, in sorted order."""
        face_sets = {frozenset(f) for f in faces if f}
        kept = []
        for f in sorted(face_sets, key=len, reverse=True):
            if not any(f <= g for g in kept):
                kept.append(f)
        vertex_set = set().union(*kept) if kept else set()
        vertices = sorted_labels(vertex_set)
        index = {v: i for i, v in enumerate(vertices)}
        facets = [tuple(sorted(index[v] for v in f)) for f in kept]
        return cls(vertices, facets)

    @classmethod
    def _from_indexed(cls, vertices, facets):
        # trusted path for builders whose facets are known maximal and valid
        obj = cls.__new__(cls)
        obj.vertices = tuple(vertices)
        obj.facets = tuple(sorted(tuple(f) for f in facets))
        obj._index = {v: i for i, v in enumerate(obj.vertices)}
        obj._faces = None
        obj._facet_sets = tuple(frozenset(f) for f in obj.facets)
        return obj

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def dim(self):
        return max((len(f) for f in self.facets), default=0) - 1

    def index_of(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise ValueError(f"{label!r} is not a vertex of the complex") from None

    def face_labels(self, face):
        return tuple(self.vertices[i] for i in face)

    def faces(self, limit=None):
        """All nonempty faces by dimension, ``{d: sorted index tuples}``.
        Raises :class:`ResourceLimitError` past the face-count guard."""
        if self._faces is None:
            cap = DEFAULT_FACE_LIMIT if limit is None else limit
            seen = set()
            for facet in self.facets:
                for k in range(1, len(facet) + 1):
                    for sub in itertools.combinations(facet, k):
                        if sub not in seen:
                            seen.add(sub)
                            if len(seen) > cap:
                                raise ResourceLimitError(
                                    f"face enumeration exceeds the limit of {cap} faces",
                                    count=len(seen),
                                    limit=cap,
                                )
            by_dim = {}
            for f in seen:
                by_dim.setdefault(len(f) - 1, []).append(f)
            self._faces = {d: sorted(v) for d, v in sorted(by_dim.items())}
        return self._faces

    def face_counts(self, limit=None):
        faces = self.faces(limit)
        return tuple(len(faces[d]) for d in range(len(faces)))

    def all_faces_label_set(self, limit=None):
        return {self.face_labels(f) for lst in self.faces(limit).values() for f in lst}

    def has_face_indices(self, face):
        s = frozenset(face)
        return any(s <= fs for fs in self._facet_sets)

    def has_face(self, labels):
        try:
            idx = [self._index[v] for v in labels]
        except KeyError:
            return False
        return self.has_face_indices(idx)

    def facet_label_sets(self):
        return frozenset(frozenset(self.face_labels(f)) for f in self.facets)

    def euler_characteristic(self, limit=None):
        return sum((-1) ** d * len(lst) for d, lst in self.faces(limit).items())

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and set(self.vertices) == set(other.vertices)
            and self.facet_label_sets() == other.facet_label_sets()
        )

    __hash__ = None

    def __repr__(self):
        return (
            f"SimplicialComplex({self.n_vertices} vertices, "
            f"{len(self.facets)} facets, dim {self.dim})"
        )


class Poset:
    """Finite poset stored by its covering relation; the order is the
    reflexive-transitive closure (acyclicity is validated, which gives
    antisymmetry)."""

    __slots__ = ("elements", "covers", "_index", "_succ", "_pred_count", "_reach")

    def __init__(self, elements, covers):
        self.elements = tuple(elements)
        n = len(self.elements)
        if len(set(self.elements)) != n:
            raise ValueError("poset elements must be pairwise distinct")
        cov = set()
        for a, b in covers:
            a, b = int(a), int(b)
            if not (0 <= a < n and 0 <= b < n) or a == b:
                raise ValueError(f"bad cover pair ({a}, {b})")
            cov.add((a, b))
        self.covers = tuple(sorted(cov))
        succ = [[] for _ in range(n)]
        indeg = [0] * n
        for a, b in self.covers:
            succ[a].append(b)
            indeg[b] += 1
        self._succ = tuple(tuple(sorted(s)) for s in succ)
        self._pred_count = tuple(indeg)
        remaining = list(indeg)
        queue = deque(i for i in range(n) if remaining[i] == 0)
        done = 0
        while queue:
            i = queue.popleft()
            done += 1
            for j in self._succ[i]:
                remaining[j] -= 1
                if remaining[j] == 0:
                    queue.append(j)
        if done != n:
            raise ValueError("covering relation has a cycle")
        self._index = {e: i for i, e in enumerate(self.elements)}
        self._reach = None

    @classmethod
    def from_leq(cls, elements, leq):
        """Build from a comparison callable; covers via transitive reduction.
        Quadratic in the element count, for small posets."""
        els = list(elements)
        n = len(els)
        above = [
            frozenset(j for j in range(n) if i != j and leq(els[i], els[j]))
            for i in range(n)
        ]
        covers = []
        for i in range(n):
            for j in above[i]:
                if not any(j in above[k] for k in above[i]):
                    covers.append((i, j))
        return cls(els, covers)

    @property
    def n_elements(self):
        return len(self.elements)

    def index_of(self, element):
        try:
            return self._index[element]
        except KeyError:
            raise ValueError(f"{element!r} is not a poset element") from None

    def successors(self, i):
        return self._succ[i]

    def minimal_elements(self):
        return [i for i in range(self.n_elements) if self._pred_count[i] == 0]

    def maximal_elements(self):
        return [i for i in range(self.n_elements) if not self._succ[i]]

    def _ensure_reach(self):
        if self._reach is None:
            n = self.n_elements
            indeg = list(self._pred_count)
            topo = []
            queue = deque(i for i in range(n) if indeg[i] == 0)
            while queue:
                i = queue.popleft()
                topo.append(i)
                for j in self._succ[i]:
                    indeg[j] -= 1
                    if indeg[j] == 0:
                        queue.append(j)
            reach = [1 << i for i in range(n)]
            for i in reversed(topo):
                acc = reach[i]
                for j in self._succ[i]:
                    acc |= reach[j]
                reach[i] = acc
            self._reach = reach

    def leq(self, i, j):
        """``i <= j`` in the generated order (element indices)."""
        self._ensure_reach()
        return bool((self._reach[i] >> j) & 1)

    def maximal_chains(self, limit=None):
        """All maximal chains as index tuples, depth-first in element order."""
        cap = DEFAULT_FACE_LIMIT if limit is None else limit
        out = []
        for root in self.minimal_elements():
            if not self._succ[root]:
                out.append((root,))
                if len(out) > cap:
                    raise ResourceLimitError(
                        f"maximal-chain enumeration exceeds {cap}",
                        count=len(out), limit=cap)
                continue
            path = [root]
            iters = [iter(self._succ[root])]
            while iters:
                nxt = next(iters[-1], None)
                if nxt is None:
                    iters.pop()
                    path.pop()
                    continue
                if self._succ[nxt]:
                    path.append(nxt)
                    iters.append(iter(self._succ[nxt]))
                else:
                    out.append(tuple(path) + (nxt,))
                    if len(out) > cap:
                        raise ResourceLimitError(
                            f"maximal-chain enumeration exceeds {cap}",
                            count=len(out), limit=cap)
        return out

    def to_json_obj(self):
        return {
            "elements": [str(e) for e in self.elements],
            "covers": [[a, b] for a, b in self.covers],
        }

    def __repr__(self):
        return f"Poset({self.n_elements} elements, {len(self.covers)} covers)"


# ---------------------------------------------------------------------------
# builders

def neighborhood_complex(G, r):
    """Complex generated by the exact-r walk balls: the faces are the vertex
    sets lying inside some ball, so the facets are the maximal balls.
    Vertices with an empty ball do not appear."""
    if r < 1:
        raise ValueError("radius must be at least 1")
    faces = []
    for i in range(G.n_vertices):
        ball = walk_ball(G, i, r)
        if ball:
            faces.append(tuple(G.vertices[j] for j in sorted(ball)))
    return SimplicialComplex.from_faces(faces)


def pair_poset(G, r, size_guard=200_000):
    """Poset of pairs ``(A, B)`` of nonempty vertex sets with every member of
    ``B`` an exact-r walk from every member of ``A``, ordered by componentwise
    inclusion.  Elements carry label tuples; Hasse edges are the one-vertex
    extensions.  Raises :class:`ResourceLimitError` (naming the count) when
    the element count exceeds ``size_guard``."""
    if r < 1:
        raise ValueError("radius must be at least 1")
    n = G.n_vertices
    balls = [walk_ball(G, i, r) for i in range(n)]

    a_sets = []  # (A index tuple, common ball frozenset), depth-first lex

    def grow(prefix, common, start):
        for x in range(start, n):
            c = balls[x] if common is None else common & balls[x]
            if not c:
                continue
            a = prefix + (x,)
            a_sets.append((a, c))
            if len(a_sets) > size_guard:
                raise ResourceLimitError(
                    f"linked-pair poset exceeds {size_guard} elements "
                    f"(more than {len(a_sets)} first components alone)",
                    count=len(a_sets), limit=size_guard)
            grow(a, c, x + 1)

    grow((), None, 0)
    total = sum(2 ** len(c) - 1 for _, c in a_sets)
    if total > size_guard:
        raise ResourceLimitError(
            f"linked-pair poset has {total} elements, above the guard of {size_guard}",
            count=total, limit=size_guard)

    a_sets.sort(key=lambda ac: (len(ac[0]), ac[0]))
    elements = []
    common_of = {}
    for a, c in a_sets:
        common_of[a] = c
        cs = tuple(sorted(c))
        for size in range(1, len(cs) + 1):
            for b in itertools.combinations(cs, size):
                elements.append((a, b))
    index = {e: i for i, e in enumerate(elements)}

    covers = []
    for (a, b), i in index.items():
        bset = set(b)
        for y in sorted(common_of[a] - bset):
            covers.append((i, index[(a, tuple(sorted(bset | {y})))]))
        aset = set(a)
        for x in range(n):
            if x not in aset and bset <= balls[x]:
                covers.append((i, index[(tuple(sorted(aset | {x})), b)]))

    payloads = [
        (tuple(G.vertices[i] for i in a), tuple(G.vertices[j] for j in b))
        for a, b in elements
    ]
    return Poset(payloads, covers)


def order_complex(P, limit=None):
    """Simplicial complex of the chains of ``P``: vertices are the elements,
    facets the maximal chains."""
    facets = [tuple(sorted(c)) for c in P.maximal_chains(limit)]
    return SimplicialComplex._from_indexed(P.elements, facets)


def face_poset(K, limit=None):
    """All nonempty faces of ``K`` ordered by inclusion (payloads are label
    tuples)."""
    faces = K.faces(limit)
    elems = []
    pos = {}
    for d in sorted(faces):
        for f in faces[d]:
            pos[f] = len(elems)
            elems.append(K.face_labels(f))
    covers = []
    for d in sorted(faces):
        if d == 0:
            continue
        for f in faces[d]:
            fi = pos[f]
            for i in range(len(f)):
                covers.append((pos[f[:i] + f[i + 1:]], fi))
    return Poset(elems, covers)


def barycentric_subdivision(K, limit=None):
    """Order complex of the face poset; vertices are the faces of ``K``."""
    return order_complex(face_poset(K, limit), limit)


# ---------------------------------------------------------------------------
# file format

def complex_to_json_obj(K):
    return {
        "vertices": [_encode_label(v) for v in K.vertices],
        "facets": [[_encode_label(v) for v in K.face_labels(f)] for f in K.facets],
    }


def complex_from_json_obj(obj):
    vertices = [_decode_label(v) for v in obj["vertices"]]
    faces = [tuple(_decode_label(v) for v in f) for f in obj["facets"]]
    # listed vertices survive as 0-faces even when isolated
    faces.extend((v,) for v in vertices)
    return SimplicialComplex.from_faces(faces)


def save_complex(K, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(complex_to_json_obj(K), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_complex(path):
    with open(path, "r", encoding="utf-8") as fh:
        return complex_from_json_obj(json.load(fh))
