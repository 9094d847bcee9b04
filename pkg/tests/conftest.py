import random

import pytest
from hypothesis import strategies as st

from knotmfw.braid import BraidWord

ACCEPTANCE_LINES: list[str] = []


@st.composite
def braid_words(draw, max_strands=4, max_len=12):
    n = draw(st.integers(1, max_strands))
    if n == 1:
        return BraidWord(1, ())
    letters = draw(st.lists(st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i))), max_size=max_len))
    return BraidWord(n, tuple(letters))


def corpus(count=200, max_strands=4, max_len=12, seed=2024):
    """Deterministic random corpus shared by the invariance tests."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_strands)
        length = rng.randint(0, max_len) if n > 1 else 0
        out.append(BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length))))
    return out


@pytest.fixture(scope="session")
def word_corpus():
    return corpus()


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("KNOTMFW_CACHE_DIR", str(tmp_path / "cache"))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
