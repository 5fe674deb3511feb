"""Regenerate the canned HTTP payloads under test/fixtures/.

The UI tests run against these exact bytes, captured from the backend
service over its engineered 60-document test corpus. Re-run after any
backend payload change:

    python3 frontend/scripts/make_fixtures.py
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[2]
sys.path.insert(0, str(ROOT / "tests"))

from fastapi.testclient import TestClient

from corpora import build_fixture_docs
from topicgraph.corpus import build_index
from topicgraph.service import IndexHolder, ServiceConfig, create_app

FIXTURES = Path(__file__).resolve().parents[1] / "test" / "fixtures"

CAPTURES = {
    "search_base.json": ("/search", {"q": "global environment"}),
    "graph_base.json": ("/graph", {"q": "global environment", "b": "-1.0"}),
    "search_refined.json": ("/search", {"q": "global environment ozone"}),
    "graph_refined.json": ("/graph", {"q": "global environment ozone", "b": "-1.0"}),
    "graph_neutral.json": ("/graph", {"q": "global environment", "b": "0.0"}),
    "graph_plain.json": ("/graph", {"q": "global environment", "mode": "plain"}),
    "search_empty.json": ("/search", {"q": "global seagrass ozone"}),
    "graph_empty.json": ("/graph", {"q": "global seagrass ozone"}),
}


def main() -> None:
    index = build_index(build_fixture_docs())
    client = TestClient(create_app(ServiceConfig(), holder=IndexHolder(index)))
    FIXTURES.mkdir(parents=True, exist_ok=True)
    for name, (path, params) in CAPTURES.items():
        response = client.get(path, params=params)
        response.raise_for_status()
        (FIXTURES / name).write_bytes(response.content)
        print(f"{name}: {len(response.content)} bytes")


if __name__ == "__main__":
    main()
