import random
import threading
import time

import pytest
from fastapi.testclient import TestClient

from chocgame.core import Cell
from chocgame.engine import GameState, Move, apply_move
from chocgame.nim_pass import overlay
from chocgame.service import create_app


@pytest.fixture()
def client():
    app = create_app(session_ttl=60, rng=random.Random(20240817))
    with TestClient(app) as c:
        yield c


def test_create_game_shape(client):
    r = client.post("/api/v1/games", json={"m": 3, "poison": {"i": 1, "j": 2}})
    assert r.status_code == 201
    body = r.json()
    assert body["state"] == {"w": 3, "h": 3, "poison": {"i": 1, "j": 2},
                             "mover": "human", "terminal": False}
    assert body["classification"] == "N"
    assert len(body["legal_moves"]) == 4
    assert body["id"]


def test_create_balanced_game_is_p(client):
    r = client.post("/api/v1/games", json={"m": 3, "poison": {"i": 2, "j": 2}})
    assert r.json()["classification"] == "P"


def test_create_game_random_poison_in_bounds(client):
    for _ in range(10):
        body = client.post("/api/v1/games", json={"m": 5, "n": 3}).json()
        p = body["state"]["poison"]
        assert 1 <= p["i"] <= 5 and 1 <= p["j"] <= 3


def test_one_by_one_game_is_immediately_decided(client):
    body = client.post("/api/v1/games", json={"m": 1}).json()
    assert body["state"]["terminal"] is True
    assert body["winner"] == "engine"
    assert body["legal_moves"] == []


def test_engine_first_plays_at_creation(client):
    # (1,2) on a 5x5 board is an N-position, so the engine must zero it
    body = client.post("/api/v1/games",
                       json={"m": 5, "poison": {"i": 1, "j": 2},
                             "engine_first": True}).json()
    assert body["state"]["mover"] == "human"
    s = body["state"]
    p = s["poison"]
    x = (p["i"] - 1) ^ (p["j"] - 1) ^ (s["w"] - p["i"]) ^ (s["h"] - p["j"])
    assert x == 0
    assert body["classification"] == "P"


def test_move_flow_with_engine_reply(client):
    r = client.post("/api/v1/games", json={"m": 8, "poison": {"i": 3, "j": 5}})
    sid = r.json()["id"]
    r = client.post(f"/api/v1/games/{sid}/moves", json={"axis": "vertical", "cut": 2})
    assert r.status_code == 200
    body = r.json()
    assert body["human_move"] == {"axis": "vertical", "cut": 2}
    assert body["state_after_human"]["w"] == 6
    assert body["engine_move"] is not None
    # snapshot atomicity: a later GET sees exactly the returned state
    snap = client.get(f"/api/v1/games/{sid}").json()
    assert snap["state"] == body["state"]
    assert [h["by"] for h in snap["history"]] == ["human", "engine"]


def test_illegal_move_is_409_and_does_not_mutate(client):
    sid = client.post("/api/v1/games", json={"m": 4, "poison": {"i": 2, "j": 2}}).json()["id"]
    before = client.get(f"/api/v1/games/{sid}").json()["state"]
    r = client.post(f"/api/v1/games/{sid}/moves", json={"axis": "vertical", "cut": 4})
    assert r.status_code == 409
    r = client.post(f"/api/v1/games/{sid}/moves", json={"axis": "vertical", "cut": 0})
    assert r.status_code == 409
    assert client.get(f"/api/v1/games/{sid}").json()["state"] == before


def test_move_on_finished_game_is_409(client):
    sid = client.post("/api/v1/games", json={"m": 2, "poison": {"i": 1, "j": 1}}).json()["id"]
    r = client.post(f"/api/v1/games/{sid}/moves", json={"axis": "vertical", "cut": 1})
    body = r.json()
    # engine replies and hands the human the poisoned 1x1
    assert body["state"]["terminal"] is True
    assert body["winner"] == "engine"
    r = client.post(f"/api/v1/games/{sid}/moves", json={"axis": "vertical", "cut": 1})
    assert r.status_code == 409


def test_unknown_session_404(client):
    assert client.get("/api/v1/games/nope").status_code == 404
    r = client.post("/api/v1/games/nope/moves", json={"axis": "vertical", "cut": 1})
    assert r.status_code == 404


def test_validation_errors_are_400(client):
    assert client.post("/api/v1/games", json={"m": "three"}).status_code == 400
    assert client.post("/api/v1/games", json={}).status_code == 400
    assert client.post("/api/v1/games", json={"m": 0}).status_code == 400
    assert client.post("/api/v1/games",
                       json={"m": 3, "poison": {"i": 7, "j": 1}}).status_code == 400
    sid = client.post("/api/v1/games", json={"m": 3, "poison": {"i": 1, "j": 1}}).json()["id"]
    r = client.post(f"/api/v1/games/{sid}/moves", json={"axis": "sideways", "cut": 1})
    assert r.status_code == 400


def test_capacity_errors_are_422(client):
    assert client.post("/api/v1/games", json={"m": 513}).status_code == 422
    assert client.get("/api/v1/patterns/4000").status_code == 422
    assert client.get("/api/v1/sierpinski/9/1").status_code == 422
    assert client.get("/api/v1/nimpass/65").status_code == 422


def test_pattern_endpoint(client):
    body = client.get("/api/v1/patterns/3").json()
    assert body == {"m": 3, "g": 5,
                    "cells": [[1, 1], [1, 3], [2, 2], [3, 1], [3, 3]]}
    for method in ("xor", "recursive", "ca"):
        assert client.get(f"/api/v1/patterns/9?method={method}").json() == \
            client.get("/api/v1/patterns/9").json()
    assert client.get("/api/v1/patterns/9?method=magic").status_code == 400


def test_pattern_svg_endpoint(client):
    r = client.get("/api/v1/patterns/5/svg")
    assert r.status_code == 200
    assert r.headers["content-type"].startswith("image/svg+xml")
    assert r.text.startswith("<svg")


def test_sierpinski_endpoint(client):
    body = client.get("/api/v1/sierpinski/2/3").json()
    assert body["count"] == 5
    assert {(d["cx_num"], d["cy_num"]) for d in body["diamonds"]} == {
        (0, 0), (2, 0), (-2, 0), (0, 2), (0, -2)}
    assert all(d["r_num"] == 1 and d["den"] == 4 for d in body["diamonds"])
    assert body["similarity"]["scale"] == {"num": 2, "den": 1}

    half = client.get("/api/v1/sierpinski/3/2?half=true").json()
    assert half["count"] == 9
    assert all(d["den"] == 16 for d in half["diamonds"])
    assert half["similarity"] is not None

    below_equator = client.get("/api/v1/sierpinski/2/5").json()
    assert below_equator["similarity"] is None


def test_nimpass_endpoint(client):
    body = client.get("/api/v1/nimpass/6").json()
    ov = overlay(6)
    assert body["blue"] == sorted([i, j] for i, j in ov.blue)
    assert body["red"] == sorted([i, j] for i, j in ov.red)
    svg = client.get("/api/v1/nimpass/6/svg")
    assert svg.status_code == 200 and svg.text.startswith("<svg")


def test_session_ttl_expiry():
    app = create_app(session_ttl=0.05, rng=random.Random(1))
    with TestClient(app) as c:
        sid = c.post("/api/v1/games", json={"m": 4}).json()["id"]
        assert c.get(f"/api/v1/games/{sid}").status_code == 200
        time.sleep(0.12)
        assert c.get(f"/api/v1/games/{sid}").status_code == 404


def test_history_replays_to_current_state(client):
    sid = client.post("/api/v1/games", json={"m": 6, "poison": {"i": 2, "j": 5}}).json()["id"]
    for cut in (1, 1):
        r = client.post(f"/api/v1/games/{sid}/moves", json={"axis": "vertical", "cut": cut})
        if r.status_code != 200:
            break
    snap = client.get(f"/api/v1/games/{sid}").json()
    state = GameState(6, 6, Cell(2, 5), mover="human")
    for entry in snap["history"]:
        state = apply_move(state, Move(entry["move"]["axis"], entry["move"]["cut"]))
        assert entry["state"]["w"] == state.w and entry["state"]["h"] == state.h
    assert snap["state"]["w"] == state.w and snap["state"]["h"] == state.h
    assert snap["state"]["poison"] == {"i": state.poison.i, "j": state.poison.j}


def test_concurrent_moves_serialize(client):
    sid = client.post("/api/v1/games", json={"m": 32, "poison": {"i": 9, "j": 20}}).json()["id"]
    statuses = []

    def fire():
        r = client.post(f"/api/v1/games/{sid}/moves",
                        json={"axis": "vertical", "cut": 1})
        statuses.append(r.status_code)

    threads = [threading.Thread(target=fire) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(s in (200, 409) for s in statuses)
    snap = client.get(f"/api/v1/games/{sid}").json()
    # accepted moves replay cleanly from the initial state
    state = GameState(32, 32, Cell(9, 20), mover="human")
    for entry in snap["history"]:
        state = apply_move(state, Move(entry["move"]["axis"], entry["move"]["cut"]))
    assert snap["state"]["w"] == state.w and snap["state"]["h"] == state.h
    human_entries = sum(1 for e in snap["history"] if e["by"] == "human")
    assert statuses.count(200) == human_entries
