"""The compiled kernels and the numpy fallback must agree exactly, node for node."""
import numpy as np
import pytest

from ghspace import _kernels_py
from ghspace.gromov import _greedy_seed, _lower_bounds, _tables, _variable_order

from conftest import _compiled, random_euclidean_metric, random_network

pytestmark = pytest.mark.skipif(_compiled is None, reason="compiled extension not built")


def _run(mod, x, y):
    order = _variable_order(x, y)
    dom, pi, pj, cost0 = _tables(x, y)
    seed = _greedy_seed(x, y, order, dom, pi, pj)
    stop = 2 * max(_lower_bounds(x, y).values())
    return mod.gh_search(np.ascontiguousarray(x.d), np.ascontiguousarray(y.d), order, dom, pi, pj, cost0, seed, stop)


def test_gh_search_identical():
    rng = np.random.default_rng(0)
    for t in range(80):
        make = random_euclidean_metric if t % 2 else random_network
        x, y = make(rng, int(rng.integers(1, 7))), make(rng, int(rng.integers(1, 7)))
        b1, a1, n1 = _run(_compiled, x, y)
        b2, a2, n2 = _run(_kernels_py, x, y)
        assert b1 == b2 and n1 == n2
        assert a1.tolist() == a2.tolist()


def test_hausdorff_at_shifts_identical():
    rng = np.random.default_rng(1)
    for _ in range(200):
        x = np.unique(rng.uniform(-2, 2, rng.integers(1, 9)))
        y = np.unique(rng.uniform(-2, 2, rng.integers(1, 9)))
        shifts = rng.uniform(-5, 5, 50)
        assert np.array_equal(_compiled.hausdorff_at_shifts(x, y, shifts),
                              _kernels_py.hausdorff_at_shifts(x, y, shifts))


def test_backend_selection(monkeypatch):
    import importlib

    import ghspace._backend as backend

    monkeypatch.setenv("GHSPACE_PURE_PYTHON", "1")
    importlib.reload(backend)
    try:
        assert backend.BACKEND == "python" and not backend.COMPILED
    finally:
        monkeypatch.delenv("GHSPACE_PURE_PYTHON")
        importlib.reload(backend)
    assert backend.BACKEND == "cython"
