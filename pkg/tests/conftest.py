import sys
import numpy as np
import pytest
from hypothesis import strategies as st

from hfsim import HesitantSet, load_bundled

GRID = np.round(np.arange(0, 21) * 0.05, 2)

grades = st.integers(0, 20).map(lambda k: round(k * 0.05, 2))
elements = st.lists(grades, min_size=1, max_size=5)


@st.composite
def set_pairs(draw, max_m=6):
    m = draw(st.integers(1, max_m))
    A = {f"x{i}": draw(elements) for i in range(m)}
    B = {f"x{i}": draw(elements) for i in range(m)}
    return (HesitantSet.from_mapping(A, dedupe=False), HesitantSet.from_mapping(B, dedupe=False))


@st.composite
def weights(draw, m):
    raw = np.array(draw(st.lists(st.integers(0, 20), min_size=m, max_size=m)), dtype=float)
    if raw.sum() == 0:
        raw[0] = 1.0
    w = raw / raw.sum()
    w[-1] = 1.0 - w[:-1].sum()
    return tuple(np.clip(w, 0, 1))


def random_pair(rng, m=None):
    m = m or int(rng.integers(1, 7))
    def one():
        return {f"x{i}": list(rng.choice(GRID, size=int(rng.integers(1, 6))))
                for i in range(m)}
    return (HesitantSet.from_mapping(one(), dedupe=False),
            HesitantSet.from_mapping(one(), dedupe=False))


def random_weights(rng, m):
    w = rng.random(m)
    w = w / w.sum()
    w[-1] = 1.0 - w[:-1].sum()
    return tuple(np.clip(w, 0, 1))


def random_chain(rng, m=None, positive=False):
    """Sets A, B, C with A ⊑ B ⊑ C and equal element lengths."""
    m = m or int(rng.integers(1, 7))
    lo = 1 if positive else 0
    A, B, C = {}, {}, {}
    for i in range(m):
        n = int(rng.integers(1, 6))
        c = rng.integers(lo, 21, size=n)
        b = np.array([rng.integers(lo, v + 1) for v in c])
        a = np.array([rng.integers(lo, v + 1) for v in b])
        for target, v in ((A, a), (B, b), (C, c)):
            target[f"x{i}"] = list(np.round(v * 0.05, 2))
    make = lambda d: HesitantSet.from_mapping(d, dedupe=False)
    return make(A), make(B), make(C)


@pytest.fixture(scope="session")
def energy():
    return load_bundled()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = next((m for name, m in sys.modules.items() if name.endswith("test_acceptance")), None)
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
