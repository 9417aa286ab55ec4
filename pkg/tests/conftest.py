# conftest.py – put src/ on the import path and share fixtures

import sys
from pathlib import Path

import pytest

SRC = Path(__file__).resolve().parents[1] / "src"
sys.path.insert(0, str(SRC))

FIXTURES = Path(__file__).resolve().parent / "fixtures"
GOLDEN = Path(__file__).resolve().parent / "golden"


@pytest.fixture
def sig_path() -> Path:
    return FIXTURES / "basic.sig"


@pytest.fixture
def sig(sig_path):
    from dsl import parse_signature

    return parse_signature(sig_path.read_text(encoding="utf-8"))


@pytest.fixture
def golden():
    def read(name: str) -> str:
        return (GOLDEN / name).read_text(encoding="utf-8")

    return read
