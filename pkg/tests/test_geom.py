import itertools

import pytest

from clusterkit.disc import Arc, Disc, all_arcs
from clusterkit.geom import (
    GeomParams,
    gamma_A,
    gamma_D,
    is_m_arc,
    is_m_diagonal,
    m_diagonals,
    m_move,
    max_noncrossing,
)
from clusterkit.quiver import (
    Quiver,
    TranslationQuiver,
    components,
    is_stable_translation,
    power,
    tq_isomorphic,
)

OCT = GeomParams(3, 2)  # octagon, 2-diagonals


def induced_on(tq: TranslationQuiver, keep: set) -> TranslationQuiver:
    return TranslationQuiver(
        Quiver(
            tuple(v for v in tq.quiver.vertices if v in keep),
            tuple(a for a in tq.quiver.arrows if a[0] in keep and a[1] in keep),
        ),
        {x: y for x, y in tq.tau.items() if x in keep and y in keep},
    )


class TestMDiagonal:
    def test_octagon_examples(self):
        assert is_m_diagonal(1, 6, OCT)  # quadrilateral + hexagon
        assert is_m_diagonal(1, 4, OCT)
        assert not is_m_diagonal(1, 3, OCT)  # cuts off a triangle

    def test_m1_is_all_diagonals(self):
        params = GeomParams(4, 1)
        assert len(m_diagonals(params)) == 9  # hexagon

    def test_invalid_input(self):
        with pytest.raises(ValueError):
            is_m_diagonal(3, 3, OCT)


class TestGammaA:
    def test_octagon_vertices(self):
        got = set(gamma_A(OCT).quiver.vertices)
        assert got == {"14", "16", "25", "27", "36", "38", "47", "58"}

    def test_octagon_arrows(self):
        arrows = set(gamma_A(OCT).quiver.arrows)
        assert ("14", "16") in arrows and ("16", "36") in arrows
        assert len(arrows) == 8

    def test_hexagon_diagonal_count(self):
        assert len(gamma_A(GeomParams(6, 1)).quiver.vertices) == 20

    def test_m1_matches_direct_construction(self):
        # diagonals (i,j) with arrows (i,j+1), (i+1,j) and tau (i-1,j-1)
        for n in (2, 3, 4, 5):
            params = GeomParams(n, 1)
            size = n + 2
            verts = [(i, j) for i in range(1, size + 1) for j in range(i + 2, size + 1)
                     if not (i == 1 and j == size)]

            def norm(i, j):
                i, j = (i - 1) % size + 1, (j - 1) % size + 1
                return (min(i, j), max(i, j))

            lab = lambda p: f"{p[0]}{p[1]}"
            vset = set(verts)
            arrows = []
            for (i, j) in verts:
                for t in (norm(i, j + 1), norm(i + 1, j)):
                    if t in vset:
                        arrows.append((lab((i, j)), lab(t)))
            tau = {lab(p): lab(norm(p[0] - 1, p[1] - 1)) for p in verts}
            direct = TranslationQuiver(Quiver.build([lab(p) for p in verts], arrows), tau)
            got = gamma_A(params)
            assert set(got.quiver.arrows) == set(direct.quiver.arrows)
            assert got.tau == direct.tau

    @pytest.mark.parametrize("n", range(2, 9))
    @pytest.mark.parametrize("m", (1, 2, 3))
    def test_stable(self, n, m):
        assert is_stable_translation(gamma_A(GeomParams(n, m)))

    @pytest.mark.parametrize("n,m", [(3, 2), (4, 2), (3, 3)])
    def test_tau_is_arrow_automorphism(self, n, m):
        tq = gamma_A(GeomParams(n, m))
        counts = tq.quiver.arrow_counts()
        for (x, y), c in counts.items():
            assert counts.get((tq.tau[x], tq.tau[y]), 0) == c


class TestMaxNoncrossing:
    def test_octagon(self):
        sets = max_noncrossing(OCT)
        assert len(sets) == 12
        assert all(len(s) == 2 for s in sets)
        for wanted in [{(1, 6), (3, 6)}, {(1, 6), (2, 5)}, {(1, 6), (1, 4)}]:
            assert any(set(s) == wanted for s in sets)

    def test_octagon_brute_force_oracle(self):
        diags = m_diagonals(OCT)

        def cross(p, q):
            (i, j), (k, l) = p, q
            return (i < k < j < l) or (k < i < l < j)

        count = 0
        for r in range(1, len(diags) + 1):
            for sub in itertools.combinations(diags, r):
                if any(cross(a, b) for a, b in itertools.combinations(sub, 2)):
                    continue
                if any(all(not cross(d, s) for s in sub) for d in diags if d not in sub):
                    continue
                count += 1
        assert count == 12

    def test_hexagon_triangulations(self):
        sets = max_noncrossing(GeomParams(4, 1))
        assert all(len(s) == 3 for s in sets)
        assert len(sets) == 14  # Catalan number C_4

    @pytest.mark.parametrize("n,m", [(n, m) for n in (2, 3, 4, 5) for m in (2, 3)])
    def test_invariant_size(self, n, m):
        assert {len(s) for s in max_noncrossing(GeomParams(n, m))} == {n - 1}


class TestGammaD:
    @pytest.mark.parametrize("n", range(3, 7))
    def test_m1_vertex_count(self, n):
        assert len(gamma_D(GeomParams(n, 1)).quiver.vertices) == n * n

    def test_degenerate_params_rejected(self):
        # (2, 1) would give a punctured 2-gon, below the size-3 floor
        with pytest.raises(ValueError):
            gamma_D(GeomParams(2, 1))
        gamma_A(GeomParams(2, 1))  # fine for the unpunctured polygon

    def test_m1_vertices_are_all_arcs(self):
        params = GeomParams(3, 1)
        tq = gamma_D(params)
        assert len(tq.quiver.vertices) == len(all_arcs(Disc(3, punctured=True))) == 9

    @pytest.mark.parametrize(
        "n,m", [(n, m) for n in range(2, 7) for m in (1, 2, 3) if (n - 1) * m >= 2]
    )
    def test_stable(self, n, m):
        assert is_stable_translation(gamma_D(GeomParams(n, m)))

    @pytest.mark.parametrize("n,m", [(2, 2), (3, 2), (2, 3), (3, 3), (4, 2)])
    def test_power_embedding(self, n, m):
        g = gamma_D(GeomParams(n, m))
        base = gamma_D(GeomParams(n * m - m + 1, 1))
        pw = power(base, m)
        vset = set(g.quiver.vertices)
        # the m-arc set is closed under arrows of the power
        assert all((a in vset) == (b in vset) for a, b in pw.quiver.arrows)
        assert tq_isomorphic(g, induced_on(pw, vset)) is not None
        # and is a union of connected components; a single one when connected
        comp_sets = [set(c.quiver.vertices) for c in components(pw)]
        assert all(cs <= vset or not (cs & vset) for cs in comp_sets)
        if len(components(g)) == 1:
            match = [cs for cs in comp_sets if cs == vset]
            assert len(match) == 1
            comp = next(
                c for c in components(pw) if set(c.quiver.vertices) == vset
            )
            assert tq_isomorphic(g, comp) is not None

    def test_vertex_count_formula(self):
        # n * (nm - m + 1) vertices: all loops and rays plus the chords whose
        # puncture-free side spans 1 mod m boundary edges
        for n in (2, 3, 4):
            for m in (1, 2, 3):
                if (n - 1) * m < 2:
                    continue
                size = n * m - m + 1
                assert len(gamma_D(GeomParams(n, m)).quiver.vertices) == n * size

    @pytest.mark.parametrize("n,m", [(3, 1), (4, 1), (3, 2)])
    def test_tau_is_arrow_automorphism(self, n, m):
        tq = gamma_D(GeomParams(n, m))
        counts = tq.quiver.arrow_counts()
        for (x, y), c in counts.items():
            assert counts.get((tq.tau[x], tq.tau[y]), 0) == c


class TestMArcsAndMoves:
    def test_loops_and_rays_always_m_arcs(self):
        for n, m in [(3, 2), (4, 3)]:
            params = GeomParams(n, m)
            size = params.polygon_size_d
            for i in range(1, size + 1):
                assert is_m_arc(Arc.loop(i), params)
                assert is_m_arc(Arc.ray(i), params)

    def test_chord_condition(self):
        params = GeomParams(3, 2)  # punctured pentagon
        assert is_m_arc(Arc.chord(1, 4), params)  # clockwise span 3
        assert not is_m_arc(Arc.chord(1, 3), params)  # span 2

    def test_m1_moves(self):
        params = GeomParams(3, 1)
        # maximal chords feed their loop and ray, which feed the next chord
        assert m_move(Arc.chord(1, 3), Arc.loop(1), params)
        assert m_move(Arc.chord(1, 3), Arc.ray(1), params)
        assert m_move(Arc.ray(1), Arc.chord(2, 1), params)
        assert m_move(Arc.loop(1), Arc.chord(2, 1), params)
        # no direct one-step move between a loop and its ray: the power
        # calibration routes them through the maximal chords
        assert not m_move(Arc.ray(1), Arc.loop(1), params)
        assert not m_move(Arc.loop(1), Arc.ray(1), params)

    def test_no_self_moves(self):
        params = GeomParams(3, 1)
        for arc in (Arc.ray(1), Arc.loop(2), Arc.chord(1, 3)):
            assert not m_move(arc, arc, params)

    def test_chord_endpoint_advance(self):
        params = GeomParams(4, 1)
        assert m_move(Arc.chord(1, 3), Arc.chord(1, 4), params)
        assert m_move(Arc.chord(1, 4), Arc.chord(2, 4), params)
        assert not m_move(Arc.chord(1, 3), Arc.chord(2, 4), params)

    def test_moves_match_quiver_arrows(self):
        params = GeomParams(3, 2)
        tq = gamma_D(params)
        assert len(tq.quiver.arrows) > 0


class TestPowerTheoremTypeA:
    def test_flagship_structure(self):
        pw = power(gamma_A(GeomParams(6, 1)), 2)
        comps = components(pw)
        assert sorted(len(c.quiver.vertices) for c in comps) == [6, 6, 8]
        big = next(c for c in comps if len(c.quiver.vertices) == 8)
        assert set(big.quiver.vertices) == set(gamma_A(OCT).quiver.vertices)
        assert tq_isomorphic(gamma_A(OCT), big) is not None

    @pytest.mark.parametrize("n", (2, 3, 4, 5))
    @pytest.mark.parametrize("m", (2, 3))
    def test_sweep(self, n, m):
        g = gamma_A(GeomParams(n, m))
        pw = power(gamma_A(GeomParams(n * m, 1)), m)
        vset = set(g.quiver.vertices)
        assert all((a in vset) == (b in vset) for a, b in pw.quiver.arrows)
        assert tq_isomorphic(g, induced_on(pw, vset)) is not None
        if n >= 3:  # the m-diagonals form a single connected component
            assert any(set(c.quiver.vertices) == vset for c in components(pw))
