import numpy as np
import pytest
from hypothesis import settings

from ghspace import FiniteMetricSpace, Network, Point1DSet
from ghspace.covers import SampledSpace
from ghspace import _kernels_py

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

EPS = 1e-9

try:
    from ghspace import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKENDS = [pytest.param(_kernels_py, id="python")]
if _compiled is not None:
    BACKENDS.append(pytest.param(_compiled, id="cython"))


@pytest.fixture(params=BACKENDS)
def kernel(request, monkeypatch):
    """Run a test once per available kernel backend."""
    import ghspace.gromov
    import ghspace.hausdorff1d

    monkeypatch.setattr(ghspace.gromov, "kernels", request.param)
    monkeypatch.setattr(ghspace.hausdorff1d, "kernels", request.param)
    return request.param


def floyd_warshall(w):
    d = np.array(w, dtype=float)
    n = d.shape[0]
    for k in range(n):
        d = np.minimum(d, d[:, k:k + 1] + d[k:k + 1, :])
    return d


def random_integer_metric(rng, n, hi=10):
    """Shortest-path metric of a complete graph with integer weights (exact in floats)."""
    w = rng.integers(1, hi, size=(n, n)).astype(float)
    w = np.minimum(w, w.T)
    np.fill_diagonal(w, 0)
    return FiniteMetricSpace(floyd_warshall(w))


def random_euclidean_metric(rng, n, dim=2):
    p = rng.uniform(0, 1, size=(n, dim))
    d = np.sqrt(((p[:, None] - p[None]) ** 2).sum(-1))
    return FiniteMetricSpace(d)


def random_network(rng, n, lo=-1.0, hi=3.0):
    return Network(rng.uniform(lo, hi, size=(n, n)))


def random_point_set(rng, max_points, lo=0.0, hi=1.0):
    while True:
        k = int(rng.integers(1, max_points, endpoint=True))
        v = rng.uniform(lo, hi, size=k)
        if np.unique(v).size == k:
            return Point1DSet.from_values(v)


def random_line_fixture(rng):
    """A dense r-disjoint, R-bounded family and a sparse 5R-disjoint one over a random line sample."""
    r, R = 1.0, 2.0
    xs, dense, sparse = [], [], []
    pos = 0.0
    for _ in range(int(rng.integers(1, 6))):
        # dense cluster of width <= R, then a gap > r
        k = int(rng.integers(1, 4))
        pts = sorted(pos + rng.uniform(0, R, size=k))
        dense.append(list(range(len(xs), len(xs) + k)))
        xs.extend(pts)
        if rng.random() < 0.5:
            # a sparse singleton, close enough to be absorbed about half the time
            sparse.append([len(xs)])
            xs.append(max(pts) + rng.uniform(0.2, 2 * r))
            pos = xs[-1] + 5 * R + rng.uniform(0.1, 1.0)
        else:
            pos = max(pts) + r + rng.uniform(0.1, 2.0)
    return SampledSpace.from_line(xs), sparse, dense, r, R


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
