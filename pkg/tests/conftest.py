import pytest

from khs.links import braid_closure


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: long-running stretch checks (deselect with -m 'not slow')")


def small_braid(word, n_strands=2, reversed_strands=()):
    """Closure of a small braid word; the workhorse for random-corpus tests."""
    return braid_closure(n_strands, word, reversed_strands)


def enumerate_braids(max_len=4, strands=(2, 3)):
    """Deterministic corpus of braid closures (used by oracle/property runs)."""
    out = []
    for n in strands:
        letters = [i for k in range(1, n) for i in (k, -k)]
        frontier = [[]]
        for _ in range(max_len):
            frontier = [w + [a] for w in frontier for a in letters]
            out.extend((n, tuple(w)) for w in frontier)
    return out


@pytest.fixture(scope="session")
def braid_corpus():
    return enumerate_braids(max_len=3)
