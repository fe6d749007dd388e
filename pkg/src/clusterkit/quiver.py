"""Quivers and translation quivers.

A quiver is a finite multidigraph without loops; a translation quiver pairs
it with a partially defined injection tau on the vertices.  The quiver is
*stable* when tau is a total bijection and, for every ordered vertex pair
(x, y), the number of arrows x -> y equals the number of arrows tau(y) -> x.

The m-th power construction keeps the vertices, takes one arrow per
sectional path of length m (a path x0 -> ... -> xm with tau(x[i+1]) != x[i-1]
at every interior step where tau is defined) and composes tau with itself
m times.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Hashable, Optional

from .mutation import ExchangeMatrix


class NotSkewSymmetric(ValueError):
    pass


class OpposedArrows(ValueError):
    pass


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple[tuple[Hashable, Hashable], ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex labels must be unique")
        index = {v: i for i, v in enumerate(self.vertices)}
        for src, dst in self.arrows:
            if src not in index or dst not in index:
                raise ValueError(f"arrow ({src}, {dst}) uses unknown vertex")
            if src == dst:
                raise ValueError(f"loops are not allowed: ({src}, {dst})")
        # canonical arrow order makes equality independent of construction order
        object.__setattr__(
            self,
            "arrows",
            tuple(sorted(self.arrows, key=lambda a: (index[a[0]], index[a[1]]))),
        )

    @classmethod
    def build(cls, vertices, arrows) -> "Quiver":
        return cls(tuple(vertices), tuple((s, d) for s, d in arrows))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def arrow_counts(self) -> Counter:
        return Counter(self.arrows)

    def out_arrows(self) -> dict:
        adj = defaultdict(list)
        for src, dst in self.arrows:
            adj[src].append(dst)
        return adj


@dataclass(frozen=True, eq=True)
class TranslationQuiver:
    quiver: Quiver
    tau: dict  # vertex -> vertex, defined on a subset; treat as read-only

    def __post_init__(self):
        vset = set(self.quiver.vertices)
        for src, dst in self.tau.items():
            if src not in vset or dst not in vset:
                raise ValueError(f"tau maps unknown vertex: {src} -> {dst}")
        values = list(self.tau.values())
        if len(set(values)) != len(values):
            raise ValueError("tau must be injective where defined")

    @property
    def vertices(self) -> tuple:
        return self.quiver.vertices

    @property
    def arrows(self) -> tuple:
        return self.quiver.arrows

    def __eq__(self, other):
        return (
            isinstance(other, TranslationQuiver)
            and self.quiver == other.quiver
            and self.tau == other.tau
        )


def quiver_from_matrix(matrix: ExchangeMatrix) -> Quiver:
    """Quiver on vertices 1..n with b[x][y] arrows x -> y for positive entries."""
    if not matrix.is_skew_symmetric():
        raise NotSkewSymmetric("matrix must be skew-symmetric to define a quiver")
    n = matrix.n
    arrows = []
    for x in range(n):
        for y in range(n):
            for _ in range(max(0, matrix.rows[x][y])):
                arrows.append((x + 1, y + 1))
    return Quiver.build(range(1, n + 1), arrows)


def matrix_from_quiver(quiver: Quiver) -> ExchangeMatrix:
    """Inverse of quiver_from_matrix; rejects quivers with opposed arrows."""
    counts = quiver.arrow_counts()
    index = {v: i for i, v in enumerate(quiver.vertices)}
    for (src, dst), c in counts.items():
        if c and counts.get((dst, src), 0):
            raise OpposedArrows(f"arrows in both directions between {src} and {dst}")
    n = quiver.n
    rows = [[0] * n for _ in range(n)]
    for (src, dst), c in counts.items():
        rows[index[src]][index[dst]] = c
        rows[index[dst]][index[src]] = -c
    return ExchangeMatrix.from_rows(rows)


def is_stable_translation(tq: TranslationQuiver) -> bool:
    """True iff tau is a total bijection and arrow counts satisfy
    #(x -> y) == #(tau(y) -> x) for every ordered pair."""
    verts = tq.quiver.vertices
    vset = set(verts)
    if set(tq.tau) != vset or set(tq.tau.values()) != vset:
        return False
    counts = tq.quiver.arrow_counts()
    pairs = set(counts)
    pairs.update((tq.tau[y], x) for (x, y) in counts)
    return all(counts.get((x, y), 0) == counts.get((tq.tau[y], x), 0) for (x, y) in pairs)


def components(q):
    """Weakly connected components, as a list of sub(translation)quivers.

    Accepts a Quiver or a TranslationQuiver and returns the same kind.
    Components are ordered by the position of their first vertex in the
    parent's vertex list; tau is restricted to pairs staying inside the
    component.
    """
    tq = q if isinstance(q, TranslationQuiver) else None
    quiver = tq.quiver if tq else q
    parent = {v: v for v in quiver.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for src, dst in quiver.arrows:
        parent[find(src)] = find(dst)
    groups = defaultdict(list)
    for v in quiver.vertices:
        groups[find(v)].append(v)
    ordered = sorted(groups.values(), key=lambda vs: quiver.vertices.index(vs[0]))

    out = []
    for verts in ordered:
        vset = set(verts)
        arrows = tuple(a for a in quiver.arrows if a[0] in vset)
        sub = Quiver(tuple(verts), arrows)
        if tq is None:
            out.append(sub)
        else:
            tau = {x: y for x, y in tq.tau.items() if x in vset and y in vset}
            out.append(TranslationQuiver(sub, tau))
    return out


def power(tq: TranslationQuiver, m: int) -> TranslationQuiver:
    """m-th power: same vertices, one arrow per sectional path of length m,
    translation composed m times (where all m applications are defined)."""
    if m < 1:
        raise ValueError("power must be >= 1")
    adj = tq.quiver.out_arrows()
    tau = tq.tau
    arrows = []

    def extend(path):
        if len(path) == m + 1:
            arrows.append((path[0], path[-1]))
            return
        for nxt in adj.get(path[-1], ()):
            # sectional condition at the interior vertex path[-1]
            if len(path) >= 2 and tau.get(nxt, _MISSING) == path[-2]:
                continue
            path.append(nxt)
            extend(path)
            path.pop()

    for v in tq.quiver.vertices:
        extend([v])

    tau_m = {}
    for v in tq.quiver.vertices:
        cur = v
        for _ in range(m):
            if cur not in tau:
                cur = None
                break
            cur = tau[cur]
        if cur is not None:
            tau_m[v] = cur
    return TranslationQuiver(Quiver(tq.quiver.vertices, tuple(arrows)), tau_m)


_MISSING = object()


def tq_isomorphic(a: TranslationQuiver, b: TranslationQuiver) -> Optional[dict]:
    """Search for a vertex bijection preserving arrow multiplicities and
    commuting with the translations (including where they are defined).

    Returns a witness dict or None.  Backtracking assigns one vertex at a
    time in a's vertex order, propagating forced images along tau chains;
    candidates are tried in b's vertex order, so the witness is deterministic.
    """
    va, vb = a.quiver.vertices, b.quiver.vertices
    if len(va) != len(vb) or len(a.quiver.arrows) != len(b.quiver.arrows):
        return None
    ca, cb = a.quiver.arrow_counts(), b.quiver.arrow_counts()
    tau_a, tau_b = a.tau, b.tau
    inv_a = {v: k for k, v in tau_a.items()}
    inv_b = {v: k for k, v in tau_b.items()}

    def signature(v, counts, adj_out, adj_in, tau, inv):
        return (adj_out[v], adj_in[v], v in tau, v in inv)

    out_a, in_a = Counter(), Counter()
    for s, d in a.quiver.arrows:
        out_a[s] += 1
        in_a[d] += 1
    out_b, in_b = Counter(), Counter()
    for s, d in b.quiver.arrows:
        out_b[s] += 1
        in_b[d] += 1
    sig_a = {v: (out_a[v], in_a[v], v in tau_a, v in inv_a) for v in va}
    sig_b = {v: (out_b[v], in_b[v], v in tau_b, v in inv_b) for v in vb}
    if sorted(sig_a.values()) != sorted(sig_b.values()):
        return None

    fwd: dict = {}
    bwd: dict = {}

    def assign(x, y):
        """Map x -> y plus every consequence along the tau chains.
        Returns the list of newly assigned pairs, or None on conflict."""
        added = []
        stack = [(x, y)]
        while stack:
            u, v = stack.pop()
            if u in fwd:
                if fwd[u] != v:
                    for uu in added:
                        del bwd[fwd[uu]]
                        del fwd[uu]
                    return None
                continue
            if v in bwd or sig_a[u] != sig_b[v]:
                for uu in added:
                    del bwd[fwd[uu]]
                    del fwd[uu]
                return None
            # arrow consistency against everything already mapped
            ok = True
            for w, wv in fwd.items():
                if (
                    ca.get((u, w), 0) != cb.get((v, wv), 0)
                    or ca.get((w, u), 0) != cb.get((wv, v), 0)
                ):
                    ok = False
                    break
            if not ok:
                for uu in added:
                    del bwd[fwd[uu]]
                    del fwd[uu]
                return None
            fwd[u] = v
            bwd[v] = u
            added.append(u)
            if u in tau_a:
                if v not in tau_b:
                    for uu in added:
                        del bwd[fwd[uu]]
                        del fwd[uu]
                    return None
                stack.append((tau_a[u], tau_b[v]))
            elif v in tau_b:
                for uu in added:
                    del bwd[fwd[uu]]
                    del fwd[uu]
                return None
            if u in inv_a:
                if v not in inv_b:
                    for uu in added:
                        del bwd[fwd[uu]]
                        del fwd[uu]
                    return None
                stack.append((inv_a[u], inv_b[v]))
            elif v in inv_b:
                for uu in added:
                    del bwd[fwd[uu]]
                    del fwd[uu]
                return None
        return added

    def undo(added):
        for u in added:
            del bwd[fwd[u]]
            del fwd[u]

    def search(i):
        while i < len(va) and va[i] in fwd:
            i += 1
        if i == len(va):
            return True
        x = va[i]
        for y in vb:
            if y in bwd:
                continue
            added = assign(x, y)
            if added is None:
                continue
            if search(i + 1):
                return True
            undo(added)
        return False

    if search(0):
        return dict(fwd)
    return None
