"""Discs with marked boundary points and at most one puncture.

Boundary vertices are labeled 1..N clockwise; the puncture, when present,
sits at the center.  Arcs come in three kinds:

* chord (i, j): endpoints i and j.  In a punctured disc the pair is ordered,
  the arc being homotopic to the clockwise boundary path from i to j (the
  side without the puncture); the reversed pair is the distinct arc passing
  on the other side of the puncture.  In an unpunctured disc (i, j) and
  (j, i) are the same diagonal and are stored with i < j.
* loop (i): both endpoints at i, enclosing the puncture.
* ray (i): from i to the puncture.

An ideal triangulation is a maximal set of pairwise non-crossing arcs; it
always has exactly ``rank`` arcs and cuts the disc into ideal triangles,
possibly including one self-folded triangle (a loop folded along the ray it
encloses).

Crossing is decided combinatorially.  For punctured chords the test uses the
set of boundary edges spanned clockwise by each chord: two chords cross
exactly when neither span contains the other and the spans share an edge.
A loop or ray based at i crosses a chord exactly when i lies strictly inside
the chord's puncture-free span.  These rules reproduce the classical
interleaving test away from the puncture and give the correct triangulation
counts (e.g. ten for the once-punctured triangle).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import networkx as nx

from .mutation import ExchangeMatrix, Seed


class DiscError(Exception):
    pass


class InvalidDisc(DiscError):
    pass


class InvalidArc(DiscError):
    pass


class NotFlippable(DiscError):
    """The interior arc of a self-folded triangle has no flip."""


class ArcNotInTriangulation(DiscError):
    pass


class InvalidTriangleData(DiscError):
    pass


@dataclass(frozen=True)
class SurfaceSignature:
    """Topological data entering the rank formula (no geometry attached)."""

    g: int
    b: int
    p: int
    c: int


def rank(sig: SurfaceSignature) -> int:
    """Number of arcs in any ideal triangulation: 6g + 3b + 3p + c - 6."""
    return 6 * sig.g + 3 * sig.b + 3 * sig.p + sig.c - 6


@dataclass(frozen=True)
class Disc:
    n_boundary: int
    punctured: bool = False

    def __post_init__(self):
        if self.punctured:
            if self.n_boundary < 2:
                raise InvalidDisc("punctured disc needs at least 2 boundary points")
        else:
            if self.n_boundary < 4:
                raise InvalidDisc("unpunctured disc needs at least 4 boundary points")

    @property
    def signature(self) -> SurfaceSignature:
        return SurfaceSignature(g=0, b=1, p=1 if self.punctured else 0, c=self.n_boundary)

    @property
    def rank(self) -> int:
        return rank(self.signature)

    def cw_dist(self, i: int, j: int) -> int:
        return (j - i) % self.n_boundary


CHORD = "chord"
LOOP = "loop"
RAY = "ray"

_KIND_RANK = {CHORD: 0, LOOP: 1, RAY: 2}


@dataclass(frozen=True)
class Arc:
    kind: str
    a: int
    b: int

    @classmethod
    def chord(cls, i: int, j: int) -> "Arc":
        return cls(CHORD, i, j)

    @classmethod
    def loop(cls, base: int) -> "Arc":
        return cls(LOOP, base, base)

    @classmethod
    def ray(cls, base: int) -> "Arc":
        return cls(RAY, base, 0)

    def sort_key(self):
        return (_KIND_RANK[self.kind], self.a, self.b)

    def __repr__(self):
        if self.kind == CHORD:
            return f"Chord({self.a},{self.b})"
        if self.kind == LOOP:
            return f"Loop({self.a})"
        return f"Ray({self.a})"


@dataclass(frozen=True)
class Boundary:
    """Boundary edge from vertex ``a`` to its clockwise neighbour ``b``."""

    a: int
    b: int


def normalize_arc(disc: Disc, arc: Arc) -> Arc:
    """Canonical form: unpunctured chords stored with a < b."""
    if not disc.punctured and arc.kind == CHORD and arc.a > arc.b:
        return Arc.chord(arc.b, arc.a)
    return arc


def validate_arc(disc: Disc, arc: Arc) -> Arc:
    n = disc.n_boundary
    if arc.kind == CHORD:
        if not (1 <= arc.a <= n and 1 <= arc.b <= n) or arc.a == arc.b:
            raise InvalidArc(f"bad chord endpoints {arc}")
        if disc.cw_dist(arc.a, arc.b) < 2:
            raise InvalidArc(f"{arc} cuts off an unpunctured digon or monogon")
        if not disc.punctured and disc.cw_dist(arc.b, arc.a) < 2:
            raise InvalidArc(f"{arc} cuts off an unpunctured digon or monogon")
        return normalize_arc(disc, arc)
    if not disc.punctured:
        raise InvalidArc(f"{arc} requires a puncture")
    if not 1 <= arc.a <= n:
        raise InvalidArc(f"bad base point in {arc}")
    return arc


def all_arcs(disc: Disc) -> list[Arc]:
    """Every arc of the disc, duplicate-free, in a fixed order.

    An unpunctured N-gon has N(N-3)/2 diagonals; a punctured N-gon has
    N rays, N loops and N(N-2) chords, N*N arcs in total.
    """
    n = disc.n_boundary
    arcs: list[Arc] = []
    if disc.punctured:
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j and disc.cw_dist(i, j) >= 2:
                    arcs.append(Arc.chord(i, j))
        arcs.extend(Arc.loop(i) for i in range(1, n + 1))
        arcs.extend(Arc.ray(i) for i in range(1, n + 1))
    else:
        for i in range(1, n + 1):
            for j in range(i + 2, n + 1):
                if not (i == 1 and j == n):
                    arcs.append(Arc.chord(i, j))
    arcs.sort(key=Arc.sort_key)
    return arcs


def _span(disc: Disc, f: int, t: int) -> frozenset:
    """Boundary edges (labeled by start vertex) covered clockwise f -> t."""
    n = disc.n_boundary
    out = []
    v = f
    while v != t:
        out.append(v)
        v = v % n + 1
    return frozenset(out)


def _strict_interior(disc: Disc, f: int, t: int, v: int) -> bool:
    """Is v strictly inside the clockwise interval (f .. t)?"""
    d = disc.cw_dist(f, v)
    return 0 < d < disc.cw_dist(f, t)


def crossing(a: Arc, b: Arc, disc: Disc) -> bool:
    """Do the two arcs necessarily intersect in the interior of the disc?"""
    a = normalize_arc(disc, a)
    b = normalize_arc(disc, b)
    if a == b:
        return False
    if not disc.punctured:
        (i, j), (k, l) = (a.a, a.b), (b.a, b.b)
        return (i < k < j < l) or (k < i < l < j)

    kinds = {a.kind, b.kind}
    if kinds == {RAY}:
        return False
    if kinds == {LOOP}:
        return True  # distinct loops always cross
    if kinds == {LOOP, RAY}:
        return a.a != b.a
    if a.kind == CHORD and b.kind == CHORD:
        s1, s2 = _span(disc, a.a, a.b), _span(disc, b.a, b.b)
        return bool(s1 & s2) and not (s1 <= s2 or s2 <= s1)
    chord, other = (a, b) if a.kind == CHORD else (b, a)
    # loop or ray at other.a vs chord: crosses iff the chord separates the
    # base point from the puncture
    return _strict_interior(disc, chord.a, chord.b, other.a)


def compatible(a: Arc, b: Arc, disc: Disc) -> bool:
    return not crossing(a, b, disc)


@dataclass(frozen=True)
class Triangle:
    """Ideal triangle; ``sides`` lists its sides in clockwise order."""

    sides: tuple
    self_folded: bool = False
    interior: Arc | None = None
    enclosing: Arc | None = None


@dataclass(frozen=True)
class Triangulation:
    disc: Disc
    arcs: tuple[Arc, ...]
    triangles: tuple[Triangle, ...] = field(compare=False, hash=False, default=())

    @classmethod
    def from_arcs(cls, disc: Disc, arcs: Iterable[Arc], validate: bool = True) -> "Triangulation":
        arcs = tuple(normalize_arc(disc, a) for a in arcs)
        if validate:
            for a in arcs:
                validate_arc(disc, a)
            if len(set(arcs)) != len(arcs):
                raise InvalidArc("duplicate arcs")
            for i in range(len(arcs)):
                for j in range(i + 1, len(arcs)):
                    if crossing(arcs[i], arcs[j], disc):
                        raise InvalidArc(f"arcs cross: {arcs[i]}, {arcs[j]}")
            present = set(arcs)
            for candidate in all_arcs(disc):
                if candidate in present:
                    continue
                if all(not crossing(candidate, a, disc) for a in arcs):
                    raise InvalidArc(f"not maximal: {candidate} is still compatible")
        triangles = tuple(_derive_triangles(disc, arcs))
        return cls(disc, arcs, triangles)

    @property
    def self_folded_interiors(self) -> set[Arc]:
        return {t.interior for t in self.triangles if t.self_folded}


# -- triangle derivation ---------------------------------------------------
#
# Regions are boundary cycles traversed clockwise (interior on the right),
# stored as lists of (side_object, start_token, end_token).  Tokens are
# small ints; a doubled vertex (at a loop) gets two distinct tokens.


def _decompose(sides: list, chord_tokens: dict, out: list) -> None:
    if len(sides) < 3:
        return
    if len(sides) == 3:
        out.append(Triangle(sides=(sides[0][0], sides[1][0], sides[2][0])))
        return
    corners = [s[1] for s in sides]
    k = len(sides)
    c0, c1 = corners[0], corners[1]
    apexes = []
    for j in range(2, k):
        conn_a = sides[1][0] if j == 2 else chord_tokens.get(frozenset((c1, corners[j])))
        conn_b = sides[k - 1][0] if j == k - 1 else chord_tokens.get(frozenset((corners[j], c0)))
        if conn_a is not None and conn_b is not None:
            apexes.append((j, conn_a, conn_b))
    assert len(apexes) == 1, f"region decomposition found {len(apexes)} apexes"
    j, conn_a, conn_b = apexes[0]
    out.append(Triangle(sides=(sides[0][0], conn_a, conn_b)))
    if j > 2:
        _decompose(sides[1:j] + [(conn_a, corners[j], c1)], chord_tokens, out)
    if j < k - 1:
        _decompose(sides[j:] + [(conn_b, c0, corners[j])], chord_tokens, out)


def _derive_triangles(disc: Disc, arcs: tuple[Arc, ...]) -> list[Triangle]:
    n = disc.n_boundary
    chords = [a for a in arcs if a.kind == CHORD]
    loops = [a for a in arcs if a.kind == LOOP]
    rays = sorted(a.a for a in arcs if a.kind == RAY)
    out: list[Triangle] = []

    if not disc.punctured:
        sides = [(Boundary(v, v % n + 1), v, v % n + 1) for v in range(1, n + 1)]
        chord_tokens = {frozenset((c.a, c.b)): c for c in chords}
        _decompose(sides, chord_tokens, out)
        return out

    if loops:
        assert len(loops) == 1
        loop = loops[0]
        i = loop.a
        ray = Arc.ray(i)
        assert ray in arcs, "a loop always encloses its ray"
        out.append(
            Triangle(sides=(loop, ray, ray), self_folded=True, interior=ray, enclosing=loop)
        )
        # outer region: the disc minus the punctured monogon, a degenerate
        # (N+1)-gon whose extra side is the loop; vertex i appears twice
        # (token 0 before the loop, token 1 after).
        labels = [i + k for k in range(n)]
        sides = [(loop, 0, 1)]
        for k in range(1, n):
            sides.append((Boundary((labels[k - 1] - 1) % n + 1, (labels[k] - 1) % n + 1), k, k + 1))
        sides.append((Boundary((labels[-1] - 1) % n + 1, i), n, 0))

        def token_of(v: int, incoming: bool) -> int:
            if v == i:
                return 0 if incoming else 1
            return 1 + disc.cw_dist(i, v)

        chord_tokens = {}
        for c in chords:
            chord_tokens[frozenset((token_of(c.a, False), token_of(c.b, True)))] = c
        _decompose(sides, chord_tokens, out)
        return out

    assert len(rays) >= 2, "a maximal arc set without loops has at least two rays"
    for idx, a in enumerate(rays):
        b = rays[(idx + 1) % len(rays)]
        # wedge between consecutive rays: boundary a -> b clockwise, then
        # down ray b to the puncture (token 0) and back up ray a
        sides = []
        v = a
        while v != b:
            nxt = v % n + 1
            sides.append((Boundary(v, nxt), v, nxt))
            v = nxt
        sides.append((Arc.ray(b), b, 0))
        sides.append((Arc.ray(a), 0, a))
        width = disc.cw_dist(a, b)
        chord_tokens = {}
        for c in chords:
            off = disc.cw_dist(a, c.a)
            if off <= width and off + disc.cw_dist(c.a, c.b) <= width:
                chord_tokens[frozenset((c.a, c.b))] = c
        _decompose(sides, chord_tokens, out)
    return out


# -- enumeration, flips, matrices -------------------------------------------


def triangulations(disc: Disc) -> list[Triangulation]:
    """All ideal triangulations, in a deterministic order."""
    arcs = all_arcs(disc)
    graph = nx.Graph()
    graph.add_nodes_from(arcs)
    for i in range(len(arcs)):
        for j in range(i + 1, len(arcs)):
            if not crossing(arcs[i], arcs[j], disc):
                graph.add_edge(arcs[i], arcs[j])
    cliques = [tuple(sorted(c, key=Arc.sort_key)) for c in nx.find_cliques(graph)]
    cliques.sort(key=lambda t: tuple(a.sort_key() for a in t))
    return [Triangulation.from_arcs(disc, c, validate=False) for c in cliques]


def flip(t: Triangulation, arc: Arc) -> Triangulation:
    """Replace ``arc`` by the unique other arc completing the rest of t."""
    disc = t.disc
    arc = normalize_arc(disc, arc)
    if arc not in t.arcs:
        raise ArcNotInTriangulation(f"{arc} not in triangulation")
    if arc in t.self_folded_interiors:
        raise NotFlippable(f"{arc} is the interior of a self-folded triangle")
    rest = [a for a in t.arcs if a != arc]
    candidates = [
        c
        for c in all_arcs(disc)
        if c != arc and c not in rest and all(not crossing(c, r, disc) for r in rest)
    ]
    assert len(candidates) == 1, f"flip of {arc} found {len(candidates)} replacements"
    new_arcs = tuple(candidates[0] if a == arc else a for a in t.arcs)
    return Triangulation.from_arcs(disc, new_arcs, validate=False)


def b_matrix(t: Triangulation) -> ExchangeMatrix:
    """Signed adjacency matrix of the triangulation.

    Arcs are indexed by their position in ``t.arcs``.  Each non-self-folded
    triangle contributes +1 at (i, j) when side j follows side i clockwise;
    the interior arc of a self-folded triangle is represented by its
    enclosing loop throughout.
    """
    n = len(t.arcs)
    subst = {}
    for tri in t.triangles:
        if tri.self_folded:
            subst[tri.interior] = tri.enclosing
    indices: dict = {}
    for idx, arc in enumerate(t.arcs):
        indices.setdefault(subst.get(arc, arc), []).append(idx)
    rows = [[0] * n for _ in range(n)]
    for tri in t.triangles:
        if tri.self_folded:
            continue
        for pos in range(3):
            sa, sb = tri.sides[pos], tri.sides[(pos + 1) % 3]
            for i in indices.get(sa, ()):
                for j in indices.get(sb, ()):
                    if i != j:
                        rows[i][j] += 1
                        rows[j][i] -= 1
    return ExchangeMatrix.from_rows(rows)


def b_matrix_from_triangles(entries: Sequence, n_arcs: int) -> ExchangeMatrix:
    """Same computation as b_matrix but from raw triangle data.

    Accepts triangulations of surfaces that are not discs (e.g. an annulus).
    Each entry is either a cyclically clockwise-ordered triple of side
    labels (ints 1..n_arcs, with 0 marking a boundary segment), or a
    self-folded marker: a mapping {"self_folded": {"interior": i, "loop": l}}
    or a tuple ("self_folded", i, l).
    """
    if n_arcs < 1:
        raise InvalidTriangleData("n_arcs must be positive")
    subst: dict[int, int] = {}
    plain: list[tuple[int, int, int]] = []
    for entry in entries:
        if isinstance(entry, Mapping):
            if "self_folded" not in entry:
                raise InvalidTriangleData(f"unrecognized entry {entry!r}")
            body = entry["self_folded"]
            interior, loop = body["interior"], body["loop"]
        elif len(entry) == 3 and entry[0] == "self_folded":
            interior, loop = entry[1], entry[2]
        elif len(entry) == 3:
            tri = tuple(int(s) for s in entry)
            if any(s < 0 or s > n_arcs for s in tri):
                raise InvalidTriangleData(f"side label out of range in {entry!r}")
            nonzero = [s for s in tri if s]
            if len(set(nonzero)) != len(nonzero):
                raise InvalidTriangleData(
                    f"repeated side label in {entry!r}; flag self-folded triangles explicitly"
                )
            plain.append(tri)
            continue
        else:
            raise InvalidTriangleData(f"unrecognized entry {entry!r}")
        interior, loop = int(interior), int(loop)
        if not (1 <= interior <= n_arcs and 1 <= loop <= n_arcs) or interior == loop:
            raise InvalidTriangleData(f"bad self-folded pair ({interior}, {loop})")
        if interior in subst:
            raise InvalidTriangleData(f"arc {interior} folded twice")
        subst[interior] = loop

    indices: dict[int, list[int]] = {}
    for label in range(1, n_arcs + 1):
        indices.setdefault(subst.get(label, label), []).append(label)
    rows = [[0] * n_arcs for _ in range(n_arcs)]
    for tri in plain:
        for pos in range(3):
            sa, sb = tri[pos], tri[(pos + 1) % 3]
            if sa == 0 or sb == 0:
                continue
            for i in indices.get(sa, ()):
                for j in indices.get(sb, ()):
                    if i != j:
                        rows[i - 1][j - 1] += 1
                        rows[j - 1][i - 1] -= 1
    return ExchangeMatrix.from_rows(rows)


def seed_of(t: Triangulation) -> Seed:
    """Seed whose cluster has one fresh variable per arc of t."""
    return Seed.initial(b_matrix(t))
