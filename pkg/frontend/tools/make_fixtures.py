"""Regenerate the frontend test fixtures by driving the real server.

Starts the backend in-process on an ephemeral port, then records

  tests/fixtures/grid_127.json    the raw /api/v1/grid?maxWeight=127 body
  tests/fixtures/moves_corpus.json  200 scripted move attempts with the
                                    server's accept/reject verdicts

The corpus seeds are fixed, so reruns are byte-identical unless the
backend's validation changes - which is exactly what the frontend tests
should then catch.

Run from frontend/:  python3 tools/make_fixtures.py
"""

import json
import random
import sys
import threading
import urllib.error
import urllib.request
from pathlib import Path

ROOT = Path(__file__).resolve().parents[2]
sys.path.insert(0, str(ROOT / "src"))

from dynnim.service import create_server  # noqa: E402

FIXTURES = Path(__file__).resolve().parents[1] / "tests" / "fixtures"
CORPUS_SIZE = 200
G1_SHARE = 80


def _request(base: str, method: str, path: str, payload=None):
    data = None if payload is None else json.dumps(payload).encode()
    req = urllib.request.Request(
        base + path, data=data, method=method,
        headers={"content-type": "application/json"},
    )
    try:
        with urllib.request.urlopen(req) as resp:
            return resp.status, json.loads(resp.read())
    except urllib.error.HTTPError as exc:
        return exc.code, json.loads(exc.read())


def grid_fixture(base: str):
    status, body = _request(base, "GET", "/api/v1/grid?maxWeight=127")
    assert status == 200, status
    p_cells = sum(1 for cell in body if cell["verdict"] == "P")
    (FIXTURES / "grid_127.json").write_text(json.dumps(body) + "\n")
    print(f"grid_127.json: {len(body)} cells, {p_cells} P")


def corpus_fixture(base: str):
    rng = random.Random(20260822)
    specs = ("affine:1,0", "const:3", "table:1,2,2,3,7")
    entries = []
    while len(entries) < CORPUS_SIZE:
        want_g1 = len(entries) < G1_SHARE
        if want_g1:
            u, k = rng.randint(1, 30), rng.randint(1, 8)
            f = rng.choice(specs)
            status, session = _request(
                base, "POST", "/api/v1/sessions",
                {"game": "g1", "f": f, "u": u, "k": k, "humanFirst": True},
            )
            assert status == 201, (status, session)
            fk = session["upcomingBounds"][0]
            move = {"take": rng.randint(0, fk + 2)}
            status, body = _request(
                base, "POST", f"/api/v1/sessions/{session['id']}/moves", move,
            )
            entry = {
                "game": "g1", "f": f, "fk": fk,
                "position": {"u": u, "k": k}, "move": move,
            }
        else:
            x, y = rng.randint(0, 15), rng.randint(0, 15)
            if 2 * x + y < 2 or (y < 1 and x < 2):
                continue  # stuck start: session would finish before any move
            status, session = _request(
                base, "POST", "/api/v1/sessions",
                {"game": "g2", "x": x, "y": y, "humanFirst": True},
            )
            assert status == 201, (status, session)
            move = {
                "takeHeavy": rng.randint(0, x + 1),
                "takeLight": rng.randint(0, y + 1),
            }
            status, body = _request(
                base, "POST", f"/api/v1/sessions/{session['id']}/moves", move,
            )
            entry = {"game": "g2", "position": {"x": x, "y": y}, "move": move}
        assert status in (200, 422), (status, body)
        entry["legal"] = status == 200
        entry["constraint"] = None if status == 200 else body.get("constraint")
        entries.append(entry)
    legal = sum(1 for e in entries if e["legal"])
    (FIXTURES / "moves_corpus.json").write_text(
        json.dumps(entries, indent=1) + "\n"
    )
    print(f"moves_corpus.json: {len(entries)} moves, {legal} accepted, "
          f"{len(entries) - legal} rejected")


def main():
    FIXTURES.mkdir(parents=True, exist_ok=True)
    server = create_server(port=0)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    base = f"http://127.0.0.1:{server.server_address[1]}"
    try:
        grid_fixture(base)
        corpus_fixture(base)
    finally:
        server.shutdown()
        server.server_close()


if __name__ == "__main__":
    main()
