import json
from pathlib import Path

import pytest

from ziggu import oracle

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def orders_n3():
    """The frozen ground-truth table for n = 3 (all three listings with
    their rankings and change columns, including skip positions)."""
    return json.loads((DATA / "orders_n3.json").read_text())


_GRAPHS = {}


@pytest.fixture(scope="session")
def graph():
    """Cached state-graph factory shared across tests."""

    def build(n):
        if n not in _GRAPHS:
            _GRAPHS[n] = oracle.build_graph(n)
        return _GRAPHS[n]

    return build
