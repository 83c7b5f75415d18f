"""HTTP JSON API: live games against the engine, pattern/section/overlay data.

Sessions are in-memory with a sliding TTL; per-session mutations run
under a lock so a human move and the engine's automatic reply always
land as one snapshot.  Everything else is a pure computation per
request.

Status codes: 400 bad input, 404 unknown resource, 409 illegal or
out-of-turn move, 422 capacity bound exceeded.
"""

from __future__ import annotations

import random
import secrets
import threading
import time
from dataclasses import dataclass, field
from typing import Literal, Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, Response
from pydantic import BaseModel

from .core import Cell, pattern
from .engine import (GameState, Move, apply_move, best_move, legal_moves,
                     nim_value, other_player)
from .enumeration import g
from .errors import CapacityError, DomainError, IllegalMoveError
from .formats import overlay_svg, pattern_svg
from .nim_pass import overlay
from .recursion import pattern_recursive
from .automaton import ca_pattern
from .sierpinski import (SimilarityMap, fit_similarity, half_section,
                         integer_section)

MAX_GAME_SIDE = 512
MAX_PATTERN_SIDE = 2048
MAX_SECTION_ORDER = 8

_GENERATORS = {"xor": pattern, "recursive": pattern_recursive, "ca": ca_pattern}


class PoisonBody(BaseModel):
    i: int
    j: int


class CreateGameBody(BaseModel):
    m: int
    n: Optional[int] = None
    poison: Optional[PoisonBody] = None
    engine_first: bool = False


class MoveBody(BaseModel):
    axis: Literal["vertical", "horizontal"]
    cut: int


@dataclass
class SessionRecord:
    id: str
    state: GameState
    history: list = field(default_factory=list)
    created: float = 0.0
    expires: float = 0.0
    lock: threading.Lock = field(default_factory=threading.Lock)


class SessionStore:
    """Thread-safe id -> record map with sliding TTL expiry."""

    def __init__(self, ttl: float):
        self.ttl = ttl
        self._lock = threading.Lock()
        self._records: dict[str, SessionRecord] = {}

    def _purge(self, now: float) -> None:
        dead = [sid for sid, rec in self._records.items() if rec.expires <= now]
        for sid in dead:
            del self._records[sid]

    def create(self, state: GameState) -> SessionRecord:
        now = time.time()
        rec = SessionRecord(id=secrets.token_urlsafe(9), state=state,
                            created=now, expires=now + self.ttl)
        with self._lock:
            self._purge(now)
            self._records[rec.id] = rec
        return rec

    def get(self, sid: str) -> SessionRecord | None:
        now = time.time()
        with self._lock:
            self._purge(now)
            rec = self._records.get(sid)
            if rec is not None:
                rec.expires = now + self.ttl
            return rec


def _state_json(s: GameState) -> dict:
    return {
        "w": s.w,
        "h": s.h,
        "poison": {"i": s.poison.i, "j": s.poison.j},
        "mover": s.mover,
        "terminal": s.terminal,
    }


def _move_json(mv: Move) -> dict:
    return {"axis": mv.axis, "cut": mv.cut}


def _classification(s: GameState) -> str:
    return "P" if nim_value(s) == 0 else "N"


def _winner(s: GameState) -> str | None:
    return other_player(s.mover) if s.terminal else None


def _game_snapshot(rec: SessionRecord) -> dict:
    body = {
        "state": _state_json(rec.state),
        "legal_moves": [_move_json(mv) for mv in legal_moves(rec.state)],
        "history": list(rec.history),
    }
    w = _winner(rec.state)
    if w is not None:
        body["winner"] = w
    return body


def _similarity_json(fit) -> dict | None:
    if not isinstance(fit, SimilarityMap):
        return None
    a, b, c, d = fit.matrix
    return {
        "matrix": [[a, b], [c, d]],
        "scale": {"num": fit.scale.numerator, "den": fit.scale.denominator},
        "translation": [
            {"num": t.numerator, "den": t.denominator} for t in fit.translation
        ],
    }


def create_app(session_ttl: float = 600.0, rng: random.Random | None = None,
               static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="chocgame", docs_url=None, redoc_url=None)
    store = SessionStore(session_ttl)
    rng = rng or random.Random()

    @app.exception_handler(RequestValidationError)
    async def _validation(_req: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    @app.exception_handler(IllegalMoveError)
    async def _illegal(_req: Request, exc: IllegalMoveError):
        return JSONResponse(status_code=409, content={"detail": str(exc)})

    @app.exception_handler(DomainError)
    async def _domain(_req: Request, exc: DomainError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(CapacityError)
    async def _capacity(_req: Request, exc: CapacityError):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    def _not_found(what: str) -> JSONResponse:
        return JSONResponse(status_code=404, content={"detail": what})

    @app.post("/api/v1/games", status_code=201)
    def create_game(body: CreateGameBody):
        w = body.m
        h = body.n if body.n is not None else body.m
        if w < 1 or h < 1:
            raise DomainError(f"board sides must be positive, got {w}x{h}")
        if w > MAX_GAME_SIDE or h > MAX_GAME_SIDE:
            raise CapacityError(f"game boards are capped at {MAX_GAME_SIDE} per side")
        if body.poison is not None:
            poison = Cell(body.poison.i, body.poison.j)
        else:
            poison = Cell(rng.randint(1, w), rng.randint(1, h))
        mover = "engine" if body.engine_first else "human"
        state = GameState(w, h, poison, mover=mover)
        rec = store.create(state)
        with rec.lock:
            if state.mover == "engine" and not state.terminal:
                mv = best_move(rec.state)
                rec.state = apply_move(rec.state, mv)
                rec.history.append({"by": "engine", "move": _move_json(mv),
                                    "state": _state_json(rec.state)})
            body_out = {
                "id": rec.id,
                "state": _state_json(rec.state),
                "legal_moves": [_move_json(mv) for mv in legal_moves(rec.state)],
                "classification": _classification(rec.state),
            }
            w_tag = _winner(rec.state)
            if w_tag is not None:
                body_out["winner"] = w_tag
        return body_out

    @app.get("/api/v1/games/{sid}")
    def get_game(sid: str):
        rec = store.get(sid)
        if rec is None:
            return _not_found(f"no session {sid}")
        with rec.lock:
            return _game_snapshot(rec)

    @app.post("/api/v1/games/{sid}/moves")
    def post_move(sid: str, body: MoveBody):
        rec = store.get(sid)
        if rec is None:
            return _not_found(f"no session {sid}")
        with rec.lock:
            state = rec.state
            if state.terminal:
                raise IllegalMoveError("the game is already over")
            if state.mover != "human":
                raise IllegalMoveError("not the human's turn")
            mv = Move(body.axis, body.cut)
            after_human = apply_move(state, mv)  # raises IllegalMoveError on bad cut
            rec.state = after_human
            rec.history.append({"by": "human", "move": _move_json(mv),
                                "state": _state_json(after_human)})
            engine_mv = None
            if not after_human.terminal and after_human.mover == "engine":
                engine_mv = best_move(after_human)
                rec.state = apply_move(after_human, engine_mv)
                rec.history.append({"by": "engine", "move": _move_json(engine_mv),
                                    "state": _state_json(rec.state)})
            out = {
                "human_move": _move_json(mv),
                "state_after_human": _state_json(after_human),
                "engine_move": _move_json(engine_mv) if engine_mv else None,
                "state": _state_json(rec.state),
                "legal_moves": [_move_json(x) for x in legal_moves(rec.state)],
            }
            w_tag = _winner(rec.state)
            if w_tag is not None:
                out["winner"] = w_tag
            return out

    def _pattern_for(m: int, method: str):
        if method not in _GENERATORS:
            raise DomainError(f"unknown method {method!r}; use xor, recursive, or ca")
        if m > MAX_PATTERN_SIDE:
            raise CapacityError(f"pattern side capped at {MAX_PATTERN_SIDE}")
        return _GENERATORS[method](m)

    @app.get("/api/v1/patterns/{m}/svg")
    def get_pattern_svg(m: int, method: str = "xor"):
        pat = _pattern_for(m, method)
        return Response(content=pattern_svg(pat), media_type="image/svg+xml")

    @app.get("/api/v1/patterns/{m}")
    def get_pattern(m: int, method: str = "xor"):
        pat = _pattern_for(m, method)
        return {"m": m, "g": pat.count, "cells": sorted([i, j] for i, j in pat)}

    @app.get("/api/v1/sierpinski/{n}/{m}")
    def get_section(n: int, m: int, half: bool = False):
        if n > MAX_SECTION_ORDER:
            raise CapacityError(f"section order capped at {MAX_SECTION_ORDER}")
        sec = half_section(n, m) if half else integer_section(n, m)
        side = 2 * m + 1 if half else m
        similarity = None
        if side <= 2 ** (n + 1 if half else n):
            similarity = _similarity_json(fit_similarity(sec, pattern(side)))
        return {
            "diamonds": [
                {"cx_num": d.cx_num, "cy_num": d.cy_num, "r_num": d.r_num, "den": d.den}
                for d in sec.diamonds()
            ],
            "count": sec.count,
            "similarity": similarity,
        }

    @app.get("/api/v1/nimpass/{m}")
    def get_nimpass(m: int):
        ov = overlay(m)
        return {
            "blue": sorted([i, j] for i, j in ov.blue),
            "red": sorted([i, j] for i, j in ov.red),
        }

    @app.get("/api/v1/nimpass/{m}/svg")
    def get_nimpass_svg(m: int):
        return Response(content=overlay_svg(overlay(m)), media_type="image/svg+xml")

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
