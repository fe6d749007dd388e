"""Local explorer service: JSON over HTTP, in-memory sessions.

A session wraps either a seed (mutable by index), a disc triangulation
(mutable by flips) or a polygon translation quiver (view only).  Every state
transition is validated server-side and recorded in the session history;
undo replays the history from the initial state, so the replayed state is
byte-identical to the one before the undone move.

Error contract: 404 unknown session, 400 malformed body, 409 invalid move
with a machine-readable {"reason": ...}.
"""

from __future__ import annotations

import math
import threading
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from ..disc import (
    ArcNotInTriangulation,
    Disc,
    DiscError,
    NotFlippable,
    Triangulation,
    b_matrix,
    flip,
    triangulations,
)
from ..geom import (
    GeomParams,
    gamma_A,
    gamma_A_vertex_pairs,
    gamma_D,
    gamma_D_vertex_arcs,
)
from ..laurent import LaurentError
from ..mutation import IndexOutOfRange, Seed
from ..quiver import quiver_from_matrix
from . import render, serialize


class InvalidMove(Exception):
    def __init__(self, reason: str, detail: str = ""):
        super().__init__(detail or reason)
        self.reason = reason


class BadRequest(Exception):
    pass


def _polygon_json(n: int, punctured: bool) -> dict:
    vertices = []
    for k in range(1, n + 1):
        angle = math.pi / 2 - 2 * math.pi * (k - 1) / n  # label 1 on top, clockwise
        vertices.append(
            {
                "label": k,
                "x": round(math.cos(angle), 6) + 0.0,
                "y": round(math.sin(angle), 6) + 0.0,
            }
        )
    out = {"vertices": vertices}
    out["puncture"] = {"x": 0.0, "y": 0.0} if punctured else None
    return out


@dataclass
class Session:
    id: str
    kind: str  # "seed" | "disc" | "gamma"
    initial: object
    current: object
    history: list = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def apply(self, move: dict) -> None:
        self.current = _apply_move(self.kind, self.current, move)
        self.history.append(move)

    def undo(self) -> None:
        if not self.history:
            raise InvalidMove("history_empty", "nothing to undo")
        moves = self.history[:-1]
        state = self.initial
        for move in moves:
            state = _apply_move(self.kind, state, move)
        self.current = state
        self.history = moves


def _apply_move(kind: str, state, move: dict):
    if move["type"] == "mutate":
        if kind != "seed":
            raise InvalidMove("wrong_session_kind", "mutate needs a seed session")
        try:
            return state.mutate(move["index"])
        except IndexOutOfRange as exc:
            raise InvalidMove("index_out_of_range", str(exc)) from exc
        except LaurentError as exc:
            raise InvalidMove("not_divisible", str(exc)) from exc
    if move["type"] == "flip":
        if kind != "disc":
            raise InvalidMove("wrong_session_kind", "flip needs a disc session")
        arc = serialize.parse_arc(move["arc"])
        try:
            return flip(state, arc)
        except NotFlippable as exc:
            raise InvalidMove("not_flippable", str(exc)) from exc
        except ArcNotInTriangulation as exc:
            raise InvalidMove("arc_not_in_triangulation", str(exc)) from exc
    raise InvalidMove("unknown_move", f"unknown move type {move.get('type')!r}")


def _session_state(session: Session) -> dict:
    out = {"id": session.id, "kind": session.kind, "history": list(session.history)}
    if session.kind == "seed":
        seed: Seed = session.current
        out["cluster"] = [render.poly_str(p) for p in seed.cluster]
        out["cluster_terms"] = [serialize.emit_poly(p) for p in seed.cluster]
        out["matrix"] = serialize.emit_matrix(seed.matrix)
        out["quiver"] = (
            serialize.emit_tq(quiver_from_matrix(seed.matrix))
            if seed.matrix.is_skew_symmetric()
            else None
        )
    elif session.kind == "disc":
        t: Triangulation = session.current
        folded = t.self_folded_interiors
        out["disc"] = {"boundary_vertices": t.disc.n_boundary, "punctured": t.disc.punctured}
        tri_json = serialize.emit_triangulation(t)
        out["arcs"] = tri_json["arcs"]
        out["triangles"] = tri_json["triangles"]
        out["flippable"] = [a not in folded for a in t.arcs]
        out["matrix"] = serialize.emit_matrix(b_matrix(t))
        out["polygon"] = _polygon_json(t.disc.n_boundary, t.disc.punctured)
    else:
        params, tq = session.current
        out["params"] = {"type": params[0], "n": params[1], "m": params[2]}
        out["quiver"] = serialize.emit_tq(tq)
        geom_params = GeomParams(params[1], params[2])
        if params[0] == "A":
            out["polygon"] = _polygon_json(geom_params.polygon_size_a, False)
            out["vertex_geometry"] = {
                label: {"kind": "diagonal", "from": i, "to": j}
                for label, (i, j) in gamma_A_vertex_pairs(geom_params).items()
            }
        else:
            out["polygon"] = _polygon_json(geom_params.polygon_size_d, True)
            out["vertex_geometry"] = {
                label: serialize.emit_arc(arc)
                for label, arc in gamma_D_vertex_arcs(geom_params).items()
            }
    return out


def _create_session(body: dict) -> Session:
    if not isinstance(body, dict):
        raise BadRequest("body must be a JSON object")
    kind = body.get("kind")
    params = body.get("params")
    if kind not in ("seed", "disc", "gamma"):
        raise BadRequest(f"unknown session kind {kind!r}")
    if not isinstance(params, dict):
        raise BadRequest("params must be an object")
    sid = uuid.uuid4().hex
    try:
        if kind == "seed":
            state = serialize.parse_seed(params)
        elif kind == "disc":
            disc = Disc(
                int(params["boundary_vertices"]), bool(params.get("punctured", False))
            )
            if params.get("arcs"):
                state = Triangulation.from_arcs(
                    disc, [serialize.parse_arc(a) for a in params["arcs"]]
                )
            else:
                state = triangulations(disc)[0]
        else:
            gtype = params.get("type")
            if gtype not in ("A", "D"):
                raise BadRequest("gamma type must be 'A' or 'D'")
            gp = GeomParams(int(params["n"]), int(params["m"]))
            tq = gamma_A(gp) if gtype == "A" else gamma_D(gp)
            state = ((gtype, gp.n, gp.m), tq)
    except BadRequest:
        raise
    except (KeyError, TypeError, ValueError, DiscError) as exc:
        raise BadRequest(f"invalid params: {exc}") from exc
    return Session(id=sid, kind=kind, initial=state, current=state)


def create_app() -> FastAPI:
    app = FastAPI(title="clusterkit explorer", docs_url=None, redoc_url=None)
    # the explorer is served as static files from another origin (file:// or
    # a local http.server); the service holds no credentials
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    sessions: dict[str, Session] = {}
    registry_lock = threading.Lock()

    def get_session(sid: str) -> Session | None:
        with registry_lock:
            return sessions.get(sid)

    def error(status: int, reason: str, detail: str = "") -> JSONResponse:
        return JSONResponse(status_code=status, content={"reason": reason, "detail": detail})

    async def read_body(request: Request) -> dict:
        if not await request.body():
            return {}
        try:
            body = await request.json()
        except Exception as exc:
            raise BadRequest(f"body is not valid JSON: {exc}") from exc
        if not isinstance(body, dict):
            raise BadRequest("body must be a JSON object")
        return body

    @app.post("/api/session")
    async def create_session(request: Request):
        try:
            session = _create_session(await read_body(request))
        except BadRequest as exc:
            return error(400, "bad_request", str(exc))
        with registry_lock:
            sessions[session.id] = session
        return {"id": session.id}

    @app.get("/api/session/{sid}")
    async def get_state(sid: str):
        session = get_session(sid)
        if session is None:
            return error(404, "unknown_session")
        with session.lock:
            return _session_state(session)

    @app.get("/api/session/{sid}/history")
    async def get_history(sid: str):
        session = get_session(sid)
        if session is None:
            return error(404, "unknown_session")
        with session.lock:
            return {"moves": list(session.history)}

    async def handle_move(sid: str, request: Request, move_type: str):
        session = get_session(sid)
        if session is None:
            return error(404, "unknown_session")
        try:
            body = await read_body(request)
            if move_type == "mutate":
                if "index" not in body or not isinstance(body["index"], int):
                    raise BadRequest("mutate needs an integer 'index'")
                move = {"type": "mutate", "index": body["index"]}
            else:
                if "arc" not in body:
                    raise BadRequest("flip needs an 'arc'")
                serialize.parse_arc(body["arc"])  # malformed arc -> 400
                move = {"type": "flip", "arc": body["arc"]}
        except (BadRequest, ValueError) as exc:
            return error(400, "bad_request", str(exc))
        with session.lock:
            try:
                session.apply(move)
            except InvalidMove as exc:
                return error(409, exc.reason, str(exc))
            return _session_state(session)

    @app.post("/api/session/{sid}/mutate")
    async def post_mutate(sid: str, request: Request):
        return await handle_move(sid, request, "mutate")

    @app.post("/api/session/{sid}/flip")
    async def post_flip(sid: str, request: Request):
        return await handle_move(sid, request, "flip")

    @app.post("/api/session/{sid}/undo")
    async def post_undo(sid: str):
        session = get_session(sid)
        if session is None:
            return error(404, "unknown_session")
        with session.lock:
            try:
                session.undo()
            except InvalidMove as exc:
                return error(409, exc.reason, str(exc))
            return _session_state(session)

    return app
