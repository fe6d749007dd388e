"""Command-line interface.

Inputs that look like JSON (starting with '[' or '{') are parsed inline;
anything else is treated as a path to a JSON file.  Exit codes: 0 success,
1 malformed input or usage error, 2 domain invariant violation
(non-exact division, sign/skew-symmetry failures, invalid moves).
"""

from __future__ import annotations

import argparse
import json
import sys

from .. import disc as disc_mod
from ..disc import Disc, DiscError, b_matrix_from_triangles, triangulations
from ..geom import GeomParams, gamma_A, gamma_D
from ..laurent import LaurentError
from ..mutation import Budget, IndexOutOfRange, NotSignSymmetric, enumerate_class
from ..quiver import NotSkewSymmetric, OpposedArrows, components, power, tq_isomorphic
from . import render, serialize

DOMAIN_ERRORS = (
    LaurentError,
    NotSignSymmetric,
    NotSkewSymmetric,
    OpposedArrows,
    DiscError,
    IndexOutOfRange,
)


class CliInputError(Exception):
    pass


def _load_json(value: str):
    text = value
    if not value.lstrip().startswith(("[", "{")):
        try:
            with open(value) as fh:
                text = fh.read()
        except OSError as exc:
            raise CliInputError(f"cannot read {value}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliInputError(f"invalid JSON: {exc}") from exc


def _print(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def cmd_mutate(args) -> int:
    if (args.matrix is None) == (args.seed is None):
        raise CliInputError("provide exactly one of --matrix or --seed")
    if args.matrix is not None:
        matrix = serialize.parse_matrix(_load_json(args.matrix))
        _print(serialize.emit_matrix(matrix.mutate(args.at)))
    else:
        seed = serialize.parse_seed(_load_json(args.seed))
        _print(serialize.emit_seed(seed.mutate(args.at)))
    return 0


def cmd_enumerate(args) -> int:
    seed = serialize.parse_seed(_load_json(args.seed))
    report = enumerate_class(seed, Budget(args.max_seeds, args.max_terms))
    variables = sorted(report.variables, key=lambda p: p.order_key())
    _print(
        {
            "finite": report.finite,
            "num_variables": report.num_variables,
            "num_clusters": report.num_clusters,
            "seeds_visited": report.seeds_visited,
            "variables": [serialize.emit_poly(p) for p in variables],
            "rendered": [render.poly_str(p) for p in variables],
            "budget": {"max_seeds": args.max_seeds, "max_terms": args.max_terms},
        }
    )
    return 0


def cmd_triangulations(args) -> int:
    d = Disc(args.vertices, punctured=args.punctured)
    ts = triangulations(d)
    if args.count:
        print(len(ts))
    else:
        _print([serialize.emit_triangulation(t) for t in ts])
    return 0


def cmd_bmatrix(args) -> int:
    if (args.triangulation is None) == (args.triangles is None):
        raise CliInputError("provide exactly one of --triangulation or --triangles")
    if args.triangulation is not None:
        t = serialize.parse_triangulation(_load_json(args.triangulation))
        _print(serialize.emit_matrix(disc_mod.b_matrix(t)))
    else:
        if args.arcs is None:
            raise CliInputError("--triangles requires --arcs")
        entries = _load_json(args.triangles)
        _print(serialize.emit_matrix(b_matrix_from_triangles(entries, args.arcs)))
    return 0


def cmd_gamma(args) -> int:
    params = GeomParams(args.n, args.m)
    tq = gamma_A(params) if args.type == "A" else gamma_D(params)
    if args.dot:
        sys.stdout.write(render.emit_dot(tq))
    else:
        _print(serialize.emit_tq(tq))
    return 0


def cmd_power(args) -> int:
    tq = serialize.parse_tq(_load_json(args.quiver))
    _print(serialize.emit_tq(power(tq, args.m)))
    return 0


def cmd_components(args) -> int:
    tq = serialize.parse_tq(_load_json(args.quiver))
    _print([serialize.emit_tq(c) for c in components(tq)])
    return 0


def cmd_iso(args) -> int:
    a = serialize.parse_tq(_load_json(args.a))
    b = serialize.parse_tq(_load_json(args.b))
    witness = tq_isomorphic(a, b)
    if witness is None:
        print("none")
    else:
        _print({str(k): v for k, v in sorted(witness.items(), key=lambda p: str(p[0]))})
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="clusterkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mutate", help="mutate a seed or exchange matrix at an index")
    p.add_argument("--matrix", help="matrix JSON (inline or file)")
    p.add_argument("--seed", help="seed JSON (inline or file)")
    p.add_argument("--at", type=int, required=True, help="0-based mutation index")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("enumerate", help="explore the mutation class of a seed")
    p.add_argument("--seed", required=True)
    p.add_argument("--max-seeds", type=int, default=10_000)
    p.add_argument("--max-terms", type=int, default=5_000)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("triangulations", help="all ideal triangulations of a disc")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--punctured", action="store_true")
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_triangulations)

    p = sub.add_parser("bmatrix", help="signed adjacency matrix of a triangulation")
    p.add_argument("--triangulation")
    p.add_argument("--triangles", help="raw clockwise triangle list JSON")
    p.add_argument("--arcs", type=int, help="number of arcs for --triangles")
    p.set_defaults(func=cmd_bmatrix)

    p = sub.add_parser("gamma", help="polygon translation quiver")
    p.add_argument("--type", choices=["A", "D"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("power", help="m-th power of a translation quiver")
    p.add_argument("--quiver", required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("components", help="connected components of a quiver")
    p.add_argument("--quiver", required=True)
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("iso", help="translation-quiver isomorphism witness")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("serve", help="run the explorer HTTP service")
    p.add_argument("--port", type=int, default=8777)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        return args.func(args)
    except DOMAIN_ERRORS as exc:  # before ValueError: some of these subclass it
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (CliInputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
