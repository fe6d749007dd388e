"""Translation quivers from diagonals and arcs of (punctured) polygons.

Type A: the vertices of gamma_A(n, m) are the m-diagonals of a polygon with
N = n*m + 2 vertices, i.e. the diagonals cutting it into two polygons whose
sizes are both congruent to 2 mod m.  Arrows move one endpoint m steps
clockwise, (i, j) -> (i, j+m) and (i, j) -> (i+m, j), whenever the target is
again an m-diagonal; the translation rotates m steps anti-clockwise,
(i, j) -> (i-m, j-m).

Type D: the vertices of gamma_D(n, m) are the m-arcs of a punctured polygon
with P = n*m - m + 1 vertices.  Every loop and every ray is an m-arc; a
chord is an m-arc when its puncture-free clockwise side spans a number of
boundary edges congruent to 1 mod m.  (The naive requirement that the
punctured side also close up to size 2 mod m is unsatisfiable for m >= 2,
since P is itself 1 mod m; counting the punctured side as degenerate makes
it vacuous, which matches the vertex count n*P.)

For m = 1 the arrows of gamma_D are the elementary moves below.  They make
the result a stable translation quiver whose orbit diagram is the D_P
shape, with the maximal chords as the branch point carrying both the loops
and the rays; among the stable orientation patterns on this vertex set it
is the one whose higher powers decompose with the m-arcs as components
(a chain pattern loops-rays-chords would be stable too, but fails that):

    chord (i, j) -> (i, j+1)          while the target is still a chord
    chord (i, j) -> (i+1, j)          while the target is still a chord
    chord (i, i-1) -> loop(i), ray(i)
    loop(i), ray(i) -> chord (i+1, i)

For m >= 2, gamma_D(n, m) is the full subquiver of the m-th power of
gamma_D(P, 1) induced on the m-arcs, with the translation composed m times.
The m-arc set is closed under sectional paths of length m, so this is a
union of connected components of the power (a single component except in
degenerate cases such as n = 2, m = 3, where the power has no arrows at
all).  In particular every arrow of gamma_D(n, m) is mediated by the
intermediate 1-arcs; there is no direct one-step move between a loop and
its ray.

Vertex labels are strings: "14" for the diagonal (1, 4), "22" for the loop
at 2, "30" for the ray at 3 (comma-separated once labels exceed one digit).

A worked identification that is easy to mislabel: the second power of the
octagon diagonal quiver gamma_A(6, 1) (20 vertices) splits into an 8-vertex
component plus two 6-vertex ones, and the 8-vertex component is
gamma_A(3, 2), the 2-diagonal quiver of the same octagon.  It cannot be
gamma_A(2, 2), which has only the 3 diameters of a hexagon as vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from .disc import CHORD, LOOP, RAY, Arc
from .quiver import Quiver, TranslationQuiver, power


@dataclass(frozen=True)
class GeomParams:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 2 or self.m < 1:
            raise ValueError("need n >= 2 and m >= 1")

    @property
    def polygon_size_a(self) -> int:
        return self.n * self.m + 2

    @property
    def polygon_size_d(self) -> int:
        return self.n * self.m - self.m + 1

    def require_valid_d(self) -> None:
        # the punctured polygon needs at least 3 boundary vertices, which
        # only excludes (n, m) = (2, 1)
        if self.polygon_size_d < 3:
            raise ValueError(
                f"punctured polygon needs >= 3 vertices, got {self.polygon_size_d} "
                f"for (n, m) = ({self.n}, {self.m})"
            )


def _label(i: int, j: int, size: int) -> str:
    if size <= 9:
        return f"{i}{j}"
    return f"{i},{j}"


def _wrap(x: int, size: int) -> int:
    return (x - 1) % size + 1


def is_m_diagonal(i: int, j: int, params: GeomParams) -> bool:
    """Does (i, j), 1 <= i < j <= N, cut the N-gon into pieces of size
    2 mod m (both of the form k*m + 2 with k >= 1)?"""
    size = params.polygon_size_a
    if not 1 <= i < j <= size:
        raise ValueError(f"need 1 <= i < j <= {size}")
    d = j - i
    return (d - 1) % params.m == 0 and params.m + 1 <= d <= size - params.m - 1


def m_diagonals(params: GeomParams) -> list[tuple[int, int]]:
    size = params.polygon_size_a
    return [
        (i, j)
        for i in range(1, size + 1)
        for j in range(i + 1, size + 1)
        if is_m_diagonal(i, j, params)
    ]


def _normalize_pair(i: int, j: int, size: int) -> tuple[int, int]:
    i, j = _wrap(i, size), _wrap(j, size)
    return (i, j) if i < j else (j, i)


@lru_cache(maxsize=None)
def gamma_A(params: GeomParams) -> TranslationQuiver:
    """Stable translation quiver on the m-diagonals of an (n*m+2)-gon."""
    size = params.polygon_size_a
    m = params.m
    pairs = m_diagonals(params)
    pair_set = set(pairs)
    labels = {p: _label(p[0], p[1], size) for p in pairs}
    arrows = []
    for (i, j) in pairs:
        for target in (_normalize_pair(i, j + m, size), _normalize_pair(i + m, j, size)):
            if target in pair_set:
                arrows.append((labels[(i, j)], labels[target]))
    tau = {
        labels[(i, j)]: labels[_normalize_pair(i - m, j - m, size)] for (i, j) in pairs
    }
    quiver = Quiver.build([labels[p] for p in pairs], arrows)
    return TranslationQuiver(quiver, tau)


def gamma_A_vertex_pairs(params: GeomParams) -> dict[str, tuple[int, int]]:
    size = params.polygon_size_a
    return {_label(i, j, size): (i, j) for i, j in m_diagonals(params)}


def _pairs_cross(p: tuple[int, int], q: tuple[int, int]) -> bool:
    (i, j), (k, l) = p, q
    return (i < k < j < l) or (k < i < l < j)


def max_noncrossing(params: GeomParams) -> list[tuple[tuple[int, int], ...]]:
    """All maximal sets of pairwise non-crossing m-diagonals.

    Each has n - 1 elements: they are exactly the divisions of the polygon
    into (m+2)-gons.
    """
    pairs = m_diagonals(params)
    graph = nx.Graph()
    graph.add_nodes_from(pairs)
    for a in range(len(pairs)):
        for b in range(a + 1, len(pairs)):
            if not _pairs_cross(pairs[a], pairs[b]):
                graph.add_edge(pairs[a], pairs[b])
    sets = [tuple(sorted(c)) for c in nx.find_cliques(graph)]
    sets.sort()
    return sets


# -- type D ------------------------------------------------------------------

# structured vertices: ("c", i, j) chords, ("l", i) loops, ("r", i) rays


def _d_vertices(size: int) -> list[tuple]:
    verts: list[tuple] = []
    for i in range(1, size + 1):
        for j in range(1, size + 1):
            if i != j and (j - i) % size >= 2:
                verts.append(("c", i, j))
    verts.extend(("l", i) for i in range(1, size + 1))
    verts.extend(("r", i) for i in range(1, size + 1))
    return verts


def _d_label(vertex: tuple, size: int) -> str:
    if vertex[0] == "c":
        return _label(vertex[1], vertex[2], size)
    if vertex[0] == "l":
        return _label(vertex[1], vertex[1], size)
    return _label(vertex[1], 0, size)


@lru_cache(maxsize=None)
def _gamma_D_base(size: int) -> TranslationQuiver:
    """gamma_D(size, 1): all arcs of the punctured size-gon, elementary moves."""
    verts = _d_vertices(size)
    labels = {v: _d_label(v, size) for v in verts}
    arrows = []
    for v in verts:
        if v[0] == "c":
            _, i, j = v
            d = (j - i) % size
            if d <= size - 2:
                arrows.append((labels[v], labels[("c", i, _wrap(j + 1, size))]))
            else:  # maximal chords feed the loop and the ray at their source
                arrows.append((labels[v], labels[("l", i)]))
                arrows.append((labels[v], labels[("r", i)]))
            if d >= 3:
                arrows.append((labels[v], labels[("c", _wrap(i + 1, size), j)]))
        else:
            i = v[1]
            target = ("c", _wrap(i + 1, size), i)
            if size >= 3:
                arrows.append((labels[v], labels[target]))

    def shift(v: tuple) -> tuple:
        if v[0] == "c":
            return ("c", _wrap(v[1] - 1, size), _wrap(v[2] - 1, size))
        return (v[0], _wrap(v[1] - 1, size))

    tau = {labels[v]: labels[shift(v)] for v in verts}
    quiver = Quiver.build([labels[v] for v in verts], arrows)
    return TranslationQuiver(quiver, tau)


def is_m_arc(arc: Arc, params: GeomParams) -> bool:
    params.require_valid_d()
    size = params.polygon_size_d
    if arc.kind in (LOOP, RAY):
        return 1 <= arc.a <= size
    if not (1 <= arc.a <= size and 1 <= arc.b <= size) or arc.a == arc.b:
        return False
    d = (arc.b - arc.a) % size
    return d >= 2 and (d - 1) % params.m == 0


@lru_cache(maxsize=None)
def gamma_D(params: GeomParams) -> TranslationQuiver:
    """Stable translation quiver on the m-arcs of a punctured polygon."""
    params.require_valid_d()
    size = params.polygon_size_d
    base = _gamma_D_base(size)
    if params.m == 1:
        return base
    powered = power(base, params.m)
    keep = set()
    for v in _d_vertices(size):
        if v[0] == "c":
            d = (v[2] - v[1]) % size
            if (d - 1) % params.m != 0:
                continue
        keep.add(_d_label(v, size))
    vertices = tuple(v for v in powered.quiver.vertices if v in keep)
    arrows = tuple(a for a in powered.quiver.arrows if a[0] in keep and a[1] in keep)
    tau = {x: y for x, y in powered.tau.items() if x in keep and y in keep}
    return TranslationQuiver(Quiver(vertices, arrows), tau)


def _arc_label(arc: Arc, size: int) -> str:
    if arc.kind == CHORD:
        return _label(arc.a, arc.b, size)
    if arc.kind == LOOP:
        return _label(arc.a, arc.a, size)
    return _label(arc.a, 0, size)


def gamma_D_vertex_arcs(params: GeomParams) -> dict[str, Arc]:
    params.require_valid_d()
    size = params.polygon_size_d
    out = {}
    for v in _d_vertices(size):
        if v[0] == "c":
            arc = Arc.chord(v[1], v[2])
        elif v[0] == "l":
            arc = Arc.loop(v[1])
        else:
            arc = Arc.ray(v[1])
        if is_m_arc(arc, params):
            out[_d_label(v, size)] = arc
    return out


@lru_cache(maxsize=None)
def _m_move_arrows(params: GeomParams) -> frozenset[tuple[str, str]]:
    return frozenset(gamma_D(params).quiver.arrows)


def m_move(a: Arc, b: Arc, params: GeomParams) -> bool:
    """Is there an arrow a -> b in gamma_D (an m-move between m-arcs)?"""
    if not (is_m_arc(a, params) and is_m_arc(b, params)) or a == b:
        return False
    size = params.polygon_size_d
    return (_arc_label(a, size), _arc_label(b, size)) in _m_move_arrows(params)
