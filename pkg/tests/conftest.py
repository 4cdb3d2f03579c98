import itertools

import numpy as np
import pytest

from qmatroids import corpus as cp


def span_set(vectors, q=2, n=None):
    """All F_q-combinations of the given prime-field vectors, by brute force."""
    vectors = [tuple(v) for v in vectors]
    if n is None:
        n = len(vectors[0])
    out = set()
    for coeffs in itertools.product(range(q), repeat=len(vectors)):
        out.add(tuple(sum(c * v[j] for c, v in zip(coeffs, vectors)) % q for j in range(n)))
    if not vectors:
        out.add((0,) * n)
    return frozenset(out)


def brute_dim(vectors, q=2, n=None):
    size = len(span_set(vectors, q, n))
    d = 0
    while q**d < size:
        d += 1
    return d


@pytest.fixture(scope="session")
def lat():
    return cp.lat24()


@pytest.fixture(scope="session")
def qcorpus():
    return cp.qmatroid_corpus()


@pytest.fixture(scope="session")
def dcorpus():
    return cp.qdelta_corpus()


@pytest.fixture(scope="session")
def sandwich():
    return cp.sandwich_pair()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


# one PASS/FAIL line per acceptance criterion, printed after the run
CRITERIA_RESULTS: dict[int, tuple[str, bool]] = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA_RESULTS):
        title, ok = CRITERIA_RESULTS[num]
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {title}")
