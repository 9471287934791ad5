import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cdg.classifier import classify_all
from cdg.kb import kb_seed


@pytest.fixture(scope="session")
def seed_kb():
    return kb_seed()


@pytest.fixture
def kb(seed_kb):
    return seed_kb.fresh()


@pytest.fixture(scope="session")
def report6(seed_kb):
    return classify_all(6, seed_kb.fresh())
