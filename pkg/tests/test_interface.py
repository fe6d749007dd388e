import json

from clusterkit.disc import Arc, Disc, Triangulation
from clusterkit.geom import GeomParams, gamma_A, gamma_D
from clusterkit.interface import render, serialize
from clusterkit.interface.cli import main
from clusterkit.laurent import LaurentPoly
from clusterkit.mutation import ExchangeMatrix, Seed
from clusterkit.quiver import Quiver, TranslationQuiver, quiver_from_matrix

A2 = ExchangeMatrix.from_rows([[0, 1], [-1, 0]])


class TestPolyStr:
    def test_simple_variable(self):
        assert render.poly_str(LaurentPoly.variable(2, 1)) == "x2"

    def test_laurent_with_denominator(self):
        p = LaurentPoly(2, {(-1, 0): 1, (-1, 1): 1})
        assert render.poly_str(p) == "(1+x2)/x1"

    def test_two_variable_denominator(self):
        p = LaurentPoly(2, {(0, -1): 1, (-1, 0): 1, (-1, -1): 1})
        assert render.poly_str(p) == "(1+x2+x1)/(x1x2)"

    def test_zero(self):
        assert render.poly_str(LaurentPoly.zero(2)) == "0"

    def test_signs_and_coefficients(self):
        p = LaurentPoly(2, {(1, 0): 1, (0, 1): -2, (0, 0): 3})
        assert render.poly_str(p) == "3-2x2+x1"

    def test_powers(self):
        p = LaurentPoly(1, {(-2,): 1})
        assert render.poly_str(p) == "1/x1^2"

    def test_custom_names(self):
        p = LaurentPoly(2, {(1, 1): 1})
        assert render.poly_str(p, names=["a", "b"]) == "ab"


class TestRoundTrips:
    def test_matrix(self):
        m = ExchangeMatrix.from_rows([[0, 2], [-2, 0]])
        assert serialize.parse_matrix(serialize.emit_matrix(m)) == m

    def test_seed(self):
        s = Seed.initial(A2).mutate(0).mutate(1)
        assert serialize.parse_seed(serialize.emit_seed(s)) == s

    def test_poly(self):
        p = LaurentPoly(3, {(-1, 2, 0): 5, (0, 0, 0): -1})
        assert serialize.parse_poly(serialize.emit_poly(p)) == p

    def test_tq_string_labels(self):
        tq = gamma_A(GeomParams(3, 2))
        assert serialize.parse_tq(serialize.emit_tq(tq)) == tq

    def test_tq_int_labels(self):
        q = quiver_from_matrix(ExchangeMatrix.from_rows([[0, 2], [-2, 0]]))
        tq = TranslationQuiver(q, {})
        assert serialize.parse_tq(serialize.emit_tq(tq)) == tq

    def test_triangulation_unpunctured(self):
        t = Triangulation.from_arcs(Disc(5), [Arc.chord(1, 3), Arc.chord(3, 5)])
        assert serialize.parse_triangulation(serialize.emit_triangulation(t)) == t

    def test_triangulation_self_folded(self):
        t = Triangulation.from_arcs(
            Disc(3, punctured=True), [Arc.loop(1), Arc.ray(1), Arc.chord(1, 3)]
        )
        back = serialize.parse_triangulation(serialize.emit_triangulation(t))
        assert back == t
        assert back.self_folded_interiors == {Arc.ray(1)}

    def test_json_printable(self):
        t = gamma_D(GeomParams(3, 2))
        text = json.dumps(serialize.emit_tq(t))
        assert serialize.parse_tq(json.loads(text)) == t


class TestDot:
    def test_empty(self):
        assert render.emit_dot(Quiver.build([], [])) == "digraph G {\n}\n"

    def test_single_edge(self):
        dot = render.emit_dot(Quiver.build([1, 2], [(1, 2)]))
        edges = [l for l in dot.splitlines() if "->" in l]
        assert edges == ["  1 -> 2;"]

    def test_gamma_3_2_counts(self):
        dot = render.emit_dot(gamma_A(GeomParams(3, 2)))
        lines = dot.splitlines()
        nodes = [l for l in lines if l.endswith(";") and "->" not in l]
        solid = [l for l in lines if "->" in l and "dashed" not in l]
        dashed = [l for l in lines if "dashed" in l]
        assert (len(nodes), len(solid), len(dashed)) == (8, 8, 8)

    def test_deterministic(self):
        tq = gamma_A(GeomParams(4, 2))
        assert render.emit_dot(tq) == render.emit_dot(gamma_A(GeomParams(4, 2)))


class TestCli:
    def run(self, capsys, *argv):
        code = main(list(argv))
        out = capsys.readouterr()
        return code, out.out, out.err

    def test_mutate_matrix(self, capsys):
        code, out, _ = self.run(capsys, "mutate", "--matrix", "[[0,1],[-1,0]]", "--at", "0")
        assert code == 0 and out.strip() == "[[0,-1],[1,0]]"

    def test_mutate_seed(self, capsys):
        seed = json.dumps(serialize.emit_seed(Seed.initial(A2)))
        code, out, _ = self.run(capsys, "mutate", "--seed", seed, "--at", "0")
        assert code == 0
        got = serialize.parse_seed(json.loads(out))
        assert got == Seed.initial(A2).mutate(0)

    def test_enumerate_from_file(self, capsys, tmp_path):
        path = tmp_path / "a2.json"
        path.write_text(json.dumps({"matrix": [[0, 1], [-1, 0]]}))
        code, out, _ = self.run(capsys, "enumerate", "--seed", str(path))
        assert code == 0
        report = json.loads(out)
        assert report["finite"] == "finite"
        assert report["num_variables"] == 5
        assert "(1+x2)/x1" in report["rendered"]

    def test_triangulation_count(self, capsys):
        code, out, _ = self.run(
            capsys, "triangulations", "--vertices", "3", "--punctured", "--count"
        )
        assert code == 0 and out.strip() == "10"

    def test_triangulations_list(self, capsys):
        code, out, _ = self.run(capsys, "triangulations", "--vertices", "4")
        assert code == 0
        assert len(json.loads(out)) == 2

    def test_bmatrix_from_triangulation(self, capsys):
        t = Triangulation.from_arcs(Disc(5), [Arc.chord(1, 3), Arc.chord(3, 5)])
        blob = json.dumps(serialize.emit_triangulation(t))
        code, out, _ = self.run(capsys, "bmatrix", "--triangulation", blob)
        assert code == 0 and json.loads(out) == [[0, 1], [-1, 0]]

    def test_bmatrix_from_raw_triangles(self, capsys):
        code, out, _ = self.run(
            capsys, "bmatrix", "--triangles", "[[1,2,0],[1,2,0]]", "--arcs", "2"
        )
        assert code == 0 and json.loads(out) == [[0, 2], [-2, 0]]

    def test_gamma_json_and_dot(self, capsys):
        code, out, _ = self.run(capsys, "gamma", "--type", "A", "--n", "3", "--m", "2")
        assert code == 0
        assert len(json.loads(out)["vertices"]) == 8
        code, out, _ = self.run(capsys, "gamma", "--type", "A", "--n", "3", "--m", "2", "--dot")
        assert code == 0 and out.startswith("digraph G {")

    def test_power_components_iso_pipeline(self, capsys):
        code, big, _ = self.run(capsys, "gamma", "--type", "A", "--n", "6", "--m", "1")
        code, powered, _ = self.run(capsys, "power", "--quiver", big, "--m", "2")
        assert code == 0
        code, comps, _ = self.run(capsys, "components", "--quiver", powered)
        assert code == 0
        comps = json.loads(comps)
        assert sorted(len(c["vertices"]) for c in comps) == [6, 6, 8]
        eight = next(c for c in comps if len(c["vertices"]) == 8)
        code, small, _ = self.run(capsys, "gamma", "--type", "A", "--n", "3", "--m", "2")
        code, out, _ = self.run(capsys, "iso", "--a", small, "--b", json.dumps(eight))
        assert code == 0 and out.strip() != "none"
        six = next(c for c in comps if len(c["vertices"]) == 6)
        code, out, _ = self.run(capsys, "iso", "--a", small, "--b", json.dumps(six))
        assert code == 0 and out.strip() == "none"

    def test_malformed_input_exit_1(self, capsys):
        code, _, err = self.run(capsys, "mutate", "--matrix", "[[0,1],", "--at", "0")
        assert code == 1 and err

    def test_missing_file_exit_1(self, capsys):
        code, _, err = self.run(capsys, "enumerate", "--seed", "no-such-file.json")
        assert code == 1 and err

    def test_invariant_violation_exit_2(self, capsys):
        code, _, err = self.run(capsys, "mutate", "--matrix", "[[0,1],[1,0]]", "--at", "0")
        assert code == 2 and err

    def test_index_out_of_range_exit_2(self, capsys):
        code, _, err = self.run(capsys, "mutate", "--matrix", "[[0,1],[-1,0]]", "--at", "5")
        assert code == 2 and err
