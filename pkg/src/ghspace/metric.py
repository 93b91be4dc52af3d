"""Finite metric spaces, networks, point sets on the line and distance sets."""
from __future__ import annotations

import bisect
import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import AxiomViolation, PreconditionFailed

EPS = 1e-9


def _frozen(a, dtype=float):
    arr = np.array(a, dtype=dtype)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Network:
    """An ``n x n`` real matrix with no axioms beyond shape."""

    d: np.ndarray

    def __post_init__(self):
        d = _frozen(self.d)
        if d.ndim != 2 or d.shape[0] != d.shape[1] or d.shape[0] == 0:
            raise ValueError(f"expected a nonempty square matrix, got shape {d.shape}")
        if not np.all(np.isfinite(d)):
            raise ValueError("matrix entries must be finite")
        object.__setattr__(self, "d", d)

    @property
    def n(self) -> int:
        return self.d.shape[0]

    @property
    def diameter(self) -> float:
        return float(self.d.max())

    def scaled(self, t: float):
        return type(self)(self.d * t)

    def __eq__(self, other):
        return type(self) is type(other) and np.array_equal(self.d, other.d)

    def __hash__(self):
        return hash((type(self).__name__, self.d.tobytes(), self.d.shape))

    def __repr__(self):
        return f"{type(self).__name__}({self.d.tolist()!r})"


class PseudoSemiMetricNetwork(Network):
    """Network with zero diagonal, nonnegative entries and symmetry (M1, M3)."""

    def __post_init__(self):
        super().__post_init__()
        _check_m1(self.d, EPS)
        _check_m3(self.d, EPS)


class FiniteMetricSpace(PseudoSemiMetricNetwork):
    """Network satisfying all of M1-M4 up to ``EPS``."""

    def __post_init__(self):
        Network.__post_init__(self)
        check_metric_axioms(self.d, EPS)


def _check_m1(d, eps):
    n = d.shape[0]
    for i in range(n):
        if abs(d[i, i]) > eps:
            raise AxiomViolation("M1", i, i, detail=f"d[{i}][{i}] = {d[i, i]!r} != 0")
    for i in range(n):
        for j in range(n):
            if d[i, j] < -eps:
                raise AxiomViolation("M1", i, j, detail=f"negative entry {d[i, j]!r}")


def _check_m3(d, eps):
    n = d.shape[0]
    for i in range(n):
        for j in range(i + 1, n):
            if abs(d[i, j] - d[j, i]) > eps:
                raise AxiomViolation("M3", i, j, detail=f"{d[i, j]!r} != {d[j, i]!r}")


def check_metric_axioms(d, eps=EPS):
    """Raise :class:`AxiomViolation` for the first failing axiom, in order M1..M4."""
    d = np.asarray(d, dtype=float)
    n = d.shape[0]
    _check_m1(d, eps)
    for i in range(n):
        for j in range(n):
            if i != j and d[i, j] <= eps:
                raise AxiomViolation("M2", i, j, detail="distinct points at distance 0")
    _check_m3(d, eps)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if d[i, j] > d[i, k] + d[k, j] + eps:
                    raise AxiomViolation(
                        "M4", i, j, k,
                        detail=f"{d[i, j]!r} > {d[i, k]!r} + {d[k, j]!r}",
                    )


def validate_metric(m) -> FiniteMetricSpace:
    """Certify a network (or raw matrix) as a finite metric space."""
    d = m.d if isinstance(m, Network) else m
    return FiniteMetricSpace(d)


@dataclass(frozen=True, eq=False)
class Point1DSet:
    """A finite subset of the real line, stored strictly increasing."""

    points: np.ndarray

    def __post_init__(self):
        p = _frozen(self.points)
        if p.ndim != 1 or p.size == 0:
            raise ValueError("a point set needs at least one point")
        if not np.all(np.isfinite(p)):
            raise ValueError("points must be finite")
        if np.any(np.diff(p) <= 0):
            raise ValueError("points must be strictly increasing")
        object.__setattr__(self, "points", p)

    @classmethod
    def from_values(cls, values) -> Point1DSet:
        """Sort ``values``; duplicates are rejected rather than merged."""
        v = np.sort(np.asarray(values, dtype=float))
        if v.size and np.any(np.diff(v) == 0):
            raise ValueError("duplicate points")
        return cls(v)

    def __len__(self):
        return self.points.size

    def __iter__(self):
        return iter(self.points.tolist())

    def __contains__(self, x):
        return bool(np.any(self.points == x))

    @property
    def diameter(self) -> float:
        return float(self.points[-1] - self.points[0])

    def transform(self, reflect: bool = False, shift: float = 0.0) -> Point1DSet:
        p = -self.points[::-1] if reflect else self.points
        return Point1DSet(p + shift)

    def scaled(self, t: float) -> Point1DSet:
        return Point1DSet(self.points * t)

    def __eq__(self, other):
        return isinstance(other, Point1DSet) and np.array_equal(self.points, other.points)

    def __hash__(self):
        return hash(self.points.tobytes())

    def __repr__(self):
        return f"Point1DSet({self.points.tolist()!r})"


@dataclass(frozen=True, eq=False)
class DistanceSet:
    """Sorted, deduplicated set of the values of a distance matrix."""

    values: np.ndarray

    def __post_init__(self):
        v = _frozen(self.values)
        if v.ndim != 1 or v.size == 0 or np.any(np.diff(v) <= 0):
            raise ValueError("distance set values must be nonempty and strictly increasing")
        object.__setattr__(self, "values", v)

    def __len__(self):
        return self.values.size

    def __contains__(self, x):
        return bool(np.any(self.values == x))

    def __eq__(self, other):
        return isinstance(other, DistanceSet) and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash(self.values.tobytes())

    def __repr__(self):
        return f"DistanceSet({self.values.tolist()!r})"


def from_point_set(p: Point1DSet) -> FiniteMetricSpace:
    x = p.points
    return FiniteMetricSpace(np.abs(x[:, None] - x[None, :]))


def distance_set(m: Network) -> DistanceSet:
    return DistanceSet(np.unique(m.d))


def kuratowski_embed(m: FiniteMetricSpace) -> list[tuple[float, ...]]:
    """Map point ``i`` to its row of distances.

    Under the sup metric the images are isometric to ``m``, and every
    coordinate lies in ``[0, ceil(diam)]``.
    """
    return [tuple(float(v) for v in row) for row in m.d]


def sup_distance(u, v) -> float:
    return max(abs(a - b) for a, b in zip(u, v))


def kuratowski_cube_side(m: FiniteMetricSpace) -> int:
    return max(1, math.ceil(m.diameter))


def _snap(value, targets):
    # nearest target, ties toward the smaller one
    k = bisect.bisect_left(targets, value)
    if k == 0:
        return targets[0]
    if k == len(targets):
        return targets[-1]
    lo, hi = targets[k - 1], targets[k]
    return lo if value - lo <= hi - value else hi


def quantize_network(y: PseudoSemiMetricNetwork, target: DistanceSet, cap: float) -> PseudoSemiMetricNetwork:
    """Replace every entry of ``y`` by its nearest value in ``target``.

    Requires ``0 in target`` and ``d_H(distance_set(y), target) <= cap``.  The
    result is a pseudo-semi-metric network whose distance set lies in
    ``target``; each entry moves by at most ``cap``, so the identity
    correspondence has distortion at most ``cap``.
    """
    from .hausdorff1d import hausdorff_values

    if not isinstance(y, PseudoSemiMetricNetwork):
        y = PseudoSemiMetricNetwork(y.d)
    if 0.0 not in target:
        raise PreconditionFailed("target distance set must contain 0")
    if target.values[0] < 0:
        raise PreconditionFailed("target distance set must be nonnegative")
    gap = hausdorff_values(distance_set(y).values, target.values)
    if gap > cap + EPS:
        raise PreconditionFailed(f"distance-set Hausdorff gap {gap!r} exceeds cap {cap!r}")
    targets = target.values.tolist()
    n = y.n
    out = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            a = float(y.d[i, j])
            v = 0.0 if a == 0.0 else _snap(a, targets)
            out[i, j] = out[j, i] = v
    return PseudoSemiMetricNetwork(out)


def quantization_image_bound(n: int) -> int:
    """``(n(n-1)/2 + 1) ** (n(n-1)/2)``, the k of the coarsely k-to-1 distance-set map."""
    if n < 1:
        raise ValueError("n must be positive")
    e = n * (n - 1) // 2
    return (e + 1) ** e


# JSON formats -----------------------------------------------------------------

def point_set_from_json(obj) -> Point1DSet:
    if isinstance(obj, (str, bytes)):
        obj = json.loads(obj)
    if not isinstance(obj, dict) or "points" not in obj:
        raise ValueError('point set JSON must be an object with a "points" list')
    return Point1DSet.from_values(obj["points"])


def point_set_to_json(p: Point1DSet) -> dict:
    return {"points": p.points.tolist()}


def metric_from_json(obj) -> Network:
    """Parse ``{"n": k, "matrix": [[...], ...]}`` or a point set (as its induced metric)."""
    if isinstance(obj, (str, bytes)):
        obj = json.loads(obj)
    if isinstance(obj, dict) and "points" in obj:
        return from_point_set(point_set_from_json(obj))
    if not isinstance(obj, dict) or "matrix" not in obj:
        raise ValueError('metric JSON must be an object with a "matrix" field')
    mat = np.asarray(obj["matrix"], dtype=float)
    if "n" in obj and (mat.ndim != 2 or int(obj["n"]) != mat.shape[0]):
        raise ValueError(f'"n" = {obj["n"]} does not match matrix shape {mat.shape}')
    return Network(mat)


def metric_to_json(m: Network) -> dict:
    return {"n": m.n, "matrix": m.d.tolist()}
