"""JSON representations of the core value types.

Schemas (all language-neutral):

* matrix: row-major array of integer arrays.
* Laurent polynomial: array of terms {"c": int, "e": [int, ...]}, in
  descending canonical term order.
* seed: {"cluster": [poly, ...], "matrix": matrix}.
* (translation) quiver: {"vertices": [{"id": int, "label": ...}],
  "arrows": [{"src": id, "dst": id}], "tau": {id-as-string: id}}.
* arc: {"kind": "chord", "from": i, "to": j} | {"kind": "loop", "base": i}
  | {"kind": "ray", "from": i}.
* triangulation: {"disc": {"boundary_vertices": N, "punctured": bool},
  "arcs": [arc, ...], "triangles": [...]} where "triangles" is derived,
  informational output (sides in clockwise order, boundary segments as
  {"kind": "boundary", "from": i, "to": j}).

parse_* functions invert emit_* exactly; parse errors raise ValueError.
"""

from __future__ import annotations

from ..disc import Arc, Boundary, Disc, Triangulation
from ..laurent import LaurentPoly
from ..mutation import ExchangeMatrix, Seed
from ..quiver import Quiver, TranslationQuiver


def emit_poly(poly: LaurentPoly) -> list[dict]:
    return [{"c": c, "e": list(e)} for e, c in reversed(poly.sorted_terms())]


def parse_poly(data, num_vars: int | None = None) -> LaurentPoly:
    if not isinstance(data, list):
        raise ValueError("polynomial must be a list of terms")
    terms = {}
    for item in data:
        if not isinstance(item, dict) or "c" not in item or "e" not in item:
            raise ValueError(f"bad term {item!r}")
        exps = tuple(item["e"])
        terms[exps] = terms.get(exps, 0) + item["c"]
        if num_vars is None:
            num_vars = len(exps)
    if num_vars is None:
        raise ValueError("cannot infer num_vars from an empty term list")
    return LaurentPoly(num_vars, terms)


def emit_matrix(matrix: ExchangeMatrix) -> list[list[int]]:
    return matrix.to_lists()


def parse_matrix(data) -> ExchangeMatrix:
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise ValueError("matrix must be a nonempty list of rows")
    return ExchangeMatrix.from_rows(data)


def emit_seed(seed: Seed) -> dict:
    return {"cluster": [emit_poly(p) for p in seed.cluster], "matrix": emit_matrix(seed.matrix)}


def parse_seed(data) -> Seed:
    if not isinstance(data, dict) or "matrix" not in data:
        raise ValueError("seed must be an object with 'matrix' (and optional 'cluster')")
    matrix = parse_matrix(data["matrix"])
    if "cluster" not in data or data["cluster"] is None:
        return Seed.initial(matrix)
    cluster = tuple(parse_poly(p, num_vars=None) for p in data["cluster"])
    return Seed(cluster, matrix)


def emit_tq(tq: TranslationQuiver | Quiver) -> dict:
    quiver = tq.quiver if isinstance(tq, TranslationQuiver) else tq
    ids = {v: i for i, v in enumerate(quiver.vertices)}
    out = {
        "vertices": [{"id": ids[v], "label": v} for v in quiver.vertices],
        "arrows": [{"src": ids[s], "dst": ids[d]} for s, d in quiver.arrows],
        "tau": {},
    }
    if isinstance(tq, TranslationQuiver):
        out["tau"] = {str(ids[x]): ids[y] for x, y in sorted(tq.tau.items(), key=lambda p: ids[p[0]])}
    return out


def parse_tq(data) -> TranslationQuiver:
    if not isinstance(data, dict) or "vertices" not in data or "arrows" not in data:
        raise ValueError("quiver must be an object with 'vertices' and 'arrows'")
    labels = {}
    order = []
    for item in data["vertices"]:
        vid, label = item["id"], item["label"]
        label = tuple(label) if isinstance(label, list) else label
        labels[vid] = label
        order.append(label)
    arrows = [(labels[a["src"]], labels[a["dst"]]) for a in data["arrows"]]
    tau = {labels[int(k)]: labels[v] for k, v in data.get("tau", {}).items()}
    return TranslationQuiver(Quiver.build(order, arrows), tau)


def emit_arc(arc: Arc) -> dict:
    if arc.kind == "chord":
        return {"kind": "chord", "from": arc.a, "to": arc.b}
    if arc.kind == "loop":
        return {"kind": "loop", "base": arc.a}
    return {"kind": "ray", "from": arc.a}


def parse_arc(data) -> Arc:
    if not isinstance(data, dict) or "kind" not in data:
        raise ValueError(f"bad arc {data!r}")
    kind = data["kind"]
    if kind == "chord":
        return Arc.chord(int(data["from"]), int(data["to"]))
    if kind == "loop":
        return Arc.loop(int(data["base"]))
    if kind == "ray":
        return Arc.ray(int(data["from"]))
    raise ValueError(f"unknown arc kind {kind!r}")


def _emit_side(side) -> dict:
    if isinstance(side, Boundary):
        return {"kind": "boundary", "from": side.a, "to": side.b}
    return emit_arc(side)


def emit_triangulation(t: Triangulation) -> dict:
    triangles = []
    for tri in t.triangles:
        if tri.self_folded:
            triangles.append(
                {
                    "self_folded": True,
                    "interior": emit_arc(tri.interior),
                    "enclosing": emit_arc(tri.enclosing),
                }
            )
        else:
            triangles.append({"self_folded": False, "sides": [_emit_side(s) for s in tri.sides]})
    return {
        "disc": {"boundary_vertices": t.disc.n_boundary, "punctured": t.disc.punctured},
        "arcs": [emit_arc(a) for a in t.arcs],
        "triangles": triangles,
    }


def parse_triangulation(data) -> Triangulation:
    if not isinstance(data, dict) or "disc" not in data or "arcs" not in data:
        raise ValueError("triangulation must be an object with 'disc' and 'arcs'")
    disc = Disc(int(data["disc"]["boundary_vertices"]), bool(data["disc"].get("punctured", False)))
    arcs = [parse_arc(a) for a in data["arcs"]]
    return Triangulation.from_arcs(disc, arcs)
