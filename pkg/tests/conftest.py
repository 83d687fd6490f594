"""
Shared fixtures
"""
from typing import List

import pytest

from app.core.config import settings
from app.models import Digraph, INDEX_ALIASES, PhiSpec
from app.services.families import construct, make_family, random_corpus


@pytest.fixture
def harmonic() -> PhiSpec:
    return INDEX_ALIASES["harmonic"]


@pytest.fixture
def star4() -> Digraph:
    return construct(make_family("star-out", 4))


@pytest.fixture
def c4() -> Digraph:
    return construct(make_family("dicycle", 4))


@pytest.fixture(scope="session")
def corpus() -> List[Digraph]:
    return random_corpus(1000, settings.RANDOM_SEED, n_min=2, n_max=8)


@pytest.fixture
def edge_file(tmp_path):
    """Write edge-list text to a file and return its path"""
    def write(text: str, name: str = "digraph.txt"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path
    return write
