"""Exact Gromov-Hausdorff / network distance for small finite spaces.

Every correspondence contains one of the form ``graph(f) | graph(g)^T`` for
maps ``f: X -> Y`` and ``g: Y -> X``, and distortion can only grow when pairs
are added.  The minimum over all correspondences is therefore the minimum
over such map pairs.  :func:`network_distance` searches that space by
branch-and-bound (see ``_kernels_py.gh_search``); worst case is
``m**n * n**m`` leaves, hence the size guard.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._backend import kernels
from .errors import InvalidCorrespondence, SizeGuardExceeded
from .hausdorff1d import hausdorff_values
from .metric import FiniteMetricSpace, Network, distance_set, validate_metric

DEFAULT_GUARD = 8
BRUTEFORCE_GUARD = 3


@dataclass(frozen=True)
class Correspondence:
    """A relation between ``range(n)`` and ``range(m)`` that is total both ways."""

    pairs: frozenset
    n: int
    m: int

    def __post_init__(self):
        pairs = frozenset((int(i), int(j)) for i, j in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        for i, j in pairs:
            if not (0 <= i < self.n and 0 <= j < self.m):
                raise InvalidCorrespondence(f"pair {(i, j)} out of range for sizes {self.n}, {self.m}")
        left = {i for i, _ in pairs}
        right = {j for _, j in pairs}
        if len(left) != self.n:
            missing = sorted(set(range(self.n)) - left)
            raise InvalidCorrespondence(f"points {missing} of the first space are unmatched")
        if len(right) != self.m:
            missing = sorted(set(range(self.m)) - right)
            raise InvalidCorrespondence(f"points {missing} of the second space are unmatched")

    @classmethod
    def from_maps(cls, f, g) -> Correspondence:
        """``graph(f) | graph(g)^T`` for ``f: range(n) -> range(m)`` and ``g`` back."""
        pairs = {(i, int(f[i])) for i in range(len(f))}
        pairs |= {(int(g[j]), j) for j in range(len(g))}
        return cls(frozenset(pairs), len(f), len(g))

    def sorted_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.pairs)

    def transpose(self) -> Correspondence:
        return Correspondence(frozenset((j, i) for i, j in self.pairs), self.m, self.n)


@dataclass(frozen=True)
class GHResult:
    value: float
    witness: Correspondence
    lower_bounds: dict = field(default_factory=dict)
    nodes: int = 0

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "witness": [list(p) for p in self.witness.sorted_pairs()],
            "lower_bounds": dict(self.lower_bounds),
        }


def distortion(r: Correspondence, x: Network, y: Network) -> float:
    """``max |d_X(i1, i2) - d_Y(j1, j2)|`` over pairs ``(i1, j1), (i2, j2)`` in ``r``."""
    if not isinstance(r, Correspondence):
        raise InvalidCorrespondence("expected a Correspondence")
    if r.n != x.n or r.m != y.n:
        raise InvalidCorrespondence(f"correspondence sizes ({r.n}, {r.m}) do not match ({x.n}, {y.n})")
    p = np.array(sorted(r.pairs), dtype=np.intp)
    i, j = p[:, 0], p[:, 1]
    return float(np.abs(x.d[np.ix_(i, i)] - y.d[np.ix_(j, j)]).max())


def lower_bound_distance_set(x: Network, y: Network) -> float:
    """Half the Hausdorff distance between distance sets (the map is 2-Lipschitz)."""
    return hausdorff_values(distance_set(x).values, distance_set(y).values) / 2


def lower_bound_diameter(x: Network, y: Network) -> float:
    return abs(x.diameter - y.diameter) / 2


def _lower_bounds(x, y):
    return {
        "distance_set": lower_bound_distance_set(x, y),
        "diameter": lower_bound_diameter(x, y),
    }


def _variable_order(x, y):
    # fail fast: most eccentric points first; X before Y on ties, then by index
    ecc = [(-float(x.d[i].max()), 0, i, i) for i in range(x.n)]
    ecc += [(-float(y.d[j].max()), 1, j, x.n + j) for j in range(y.n)]
    return np.array([v for *_, v in sorted(ecc)], dtype=np.intp)


def _tables(x, y):
    n, m = x.n, y.n
    n_vars, width = n + m, max(n, m)
    pi = np.zeros((n_vars, width), dtype=np.intp)
    pj = np.zeros((n_vars, width), dtype=np.intp)
    dom = np.empty(n_vars, dtype=np.intp)
    for v in range(n):
        dom[v] = m
        pi[v, :m] = v
        pj[v, :m] = np.arange(m)
    for v in range(m):
        dom[n + v] = n
        pi[n + v, :n] = np.arange(n)
        pj[n + v, :n] = v
    cost0 = np.abs(x.d[pi, pi] - y.d[pj, pj])
    for v in range(n_vars):
        cost0[v, dom[v]:] = np.inf
    return dom, pi, pj, cost0


def _greedy_seed(x, y, order, dom, pi, pj):
    # each variable takes its cheapest partner given the earlier choices
    chosen = []
    for v in order:
        best_w, best_c = 0, np.inf
        for w in range(dom[v]):
            i, j = pi[v, w], pj[v, w]
            c = abs(x.d[i, i] - y.d[j, j])
            for a, b in chosen:
                c = max(c, abs(x.d[a, i] - y.d[b, j]), abs(x.d[i, a] - y.d[j, b]))
            if c < best_c:
                best_w, best_c = w, c
        chosen.append((pi[v, best_w], pj[v, best_w]))
    p = np.array(chosen, dtype=np.intp)
    return float(np.abs(x.d[np.ix_(p[:, 0], p[:, 0])] - y.d[np.ix_(p[:, 1], p[:, 1])]).max())


def _check_guard(x, y, guard):
    if x.n > guard or y.n > guard:
        raise SizeGuardExceeded(
            f"spaces of size {x.n} and {y.n} exceed the guard of {guard} points; "
            f"the search grows like m**n * n**m"
        )


def network_distance(x: Network, y: Network, guard: int = DEFAULT_GUARD) -> GHResult:
    """``1/2 * min`` distortion over correspondences, with a lexicographically first witness.

    The witness is the first optimal map pair in the search order (variables by
    decreasing eccentricity, partners by index).
    """
    _check_guard(x, y, guard)
    bounds = _lower_bounds(x, y)
    order = _variable_order(x, y)
    dom, pi, pj, cost0 = _tables(x, y)
    seed = _greedy_seed(x, y, order, dom, pi, pj)
    stop_at = 2 * max(bounds.values())
    dx = np.ascontiguousarray(x.d)
    dy = np.ascontiguousarray(y.d)
    best, assign, nodes = kernels.gh_search(dx, dy, order, dom, pi, pj, cost0, seed, stop_at)
    if best is None:  # unreachable: the greedy leaf itself has value == seed
        raise RuntimeError("branch-and-bound found no correspondence")
    f = assign[: x.n]
    g = assign[x.n:]
    witness = Correspondence.from_maps(f, g)
    return GHResult(float(best) / 2, witness, bounds, int(nodes))


def gh_exact(x: FiniteMetricSpace, y: FiniteMetricSpace, guard: int = DEFAULT_GUARD) -> GHResult:
    """Exact Gromov-Hausdorff distance (equal to the network distance on metric spaces)."""
    if not isinstance(x, FiniteMetricSpace):
        x = validate_metric(x)
    if not isinstance(y, FiniteMetricSpace):
        y = validate_metric(y)
    return network_distance(x, y, guard)


def iter_correspondences(n: int, m: int):
    """Every subset of ``range(n) x range(m)`` that is a correspondence, by bitmask order."""
    cells = [(i, j) for i in range(n) for j in range(m)]
    for mask in range(1, 1 << len(cells)):
        pairs = [cells[b] for b in range(len(cells)) if mask >> b & 1]
        if len({i for i, _ in pairs}) == n and len({j for _, j in pairs}) == m:
            yield Correspondence(frozenset(pairs), n, m)


def gh_bruteforce(x: Network, y: Network, guard: int = BRUTEFORCE_GUARD) -> GHResult:
    """Oracle: minimise distortion over every correspondence explicitly."""
    _check_guard(x, y, guard)
    best_val, best_r = np.inf, None
    for r in iter_correspondences(x.n, y.n):
        v = distortion(r, x, y)
        if v < best_val:
            best_val, best_r = v, r
    return GHResult(best_val / 2, best_r, _lower_bounds(x, y))
