"""Coarse embeddings of sup-metric cubes ``[0, m]^n`` into finite subsets of the line.

Cube ``(m, n)`` gets a block index ``T(m, n)`` along anti-diagonals.  A point
``x`` maps to ``{4m(i-1) + x_i} | {D(m, n)}``.  The far anchor ``D(m, n)``
grows at least like ``2**T``, which pushes different blocks apart in EH
distance through the diameter gap.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

import numpy as np

from .errors import OverflowGuard
from .hausdorff1d import eh_distance, hausdorff
from .metric import EPS, Point1DSet

MAX_T = 40
# coordinates are drawn on this dyadic grid so a_i + x_i and its differences are exact
_GRID_BITS = 20


def pairing_T(m: int, n: int) -> int:
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    s = m + n
    return m + (s - 2) * (s - 1) // 2


def pairing_T_inverse(k: int) -> tuple[int, int]:
    if k < 1:
        raise ValueError("k must be positive")
    # largest s with (s-2)(s-1)/2 < k
    s = (3 + math.isqrt(8 * (k - 1) + 1)) // 2
    while (s - 2) * (s - 1) // 2 >= k:
        s -= 1
    while (s - 1) * s // 2 < k:
        s += 1
    m = k - (s - 2) * (s - 1) // 2
    return m, s - m


@dataclass(frozen=True, order=True)
class BlockIndex:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("block side and dimension must be positive")

    @property
    def T(self) -> int:
        return pairing_T(self.m, self.n)


@dataclass(frozen=True)
class CubePoint:
    block: BlockIndex
    coords: tuple = field(default=())

    def __post_init__(self):
        coords = tuple(float(c) for c in self.coords)
        if len(coords) != self.block.n:
            raise ValueError(f"expected {self.block.n} coordinates, got {len(coords)}")
        if any(not (0 <= c <= self.block.m) for c in coords):
            raise ValueError(f"coordinates must lie in [0, {self.block.m}]")
        object.__setattr__(self, "coords", coords)


def sup_metric(p: CubePoint, q: CubePoint) -> float:
    return max(abs(a - b) for a, b in zip(p.coords, q.coords))


def a_sequence(m: int, i: int) -> int:
    if m < 1 or i < 1:
        raise ValueError("m and i must be positive")
    return 4 * m * (i - 1)


@lru_cache(maxsize=None)
def _D_by_T(k: int) -> int:
    m, n = pairing_T_inverse(k)
    prev = _D_by_T(k - 1) if k > 1 else None
    if prev is None:
        return 4 * m * (n + 2)
    # D grows with T, so the max over all predecessors is the previous value
    return max(4 * m * (n + 2), prev + m + 2 ** k)


def separation_constant(m: int, n: int) -> int:
    """``D(m, n) = max(4m(n+2), max_{T' < T} D' + m + 2**T)``."""
    k = pairing_T(m, n)
    if k > MAX_T:
        raise OverflowGuard(f"T({m}, {n}) = {k} exceeds {MAX_T}")
    for j in range(1, k):
        _D_by_T(j)  # fill the cache bottom-up to keep recursion shallow
    return _D_by_T(k)


def phi(p: CubePoint) -> Point1DSet:
    m, n = p.block.m, p.block.n
    pts = [a_sequence(m, i + 1) + x for i, x in enumerate(p.coords)]
    pts.append(float(separation_constant(m, n)))
    return Point1DSet(np.array(pts))


def block_separation_lower_bound(b1: BlockIndex, b2: BlockIndex) -> float:
    """``(D(m,n) - D(m',n') - m) / 2`` with ``(m, n)`` the block of larger T.

    Lower-bounds the EH distance between any images of the two blocks, since
    images of block ``(m, n)`` have diameter in ``[D - m, D]``.
    """
    if b1 == b2:
        raise ValueError("blocks must differ")
    hi, lo = (b1, b2) if b1.T > b2.T else (b2, b1)
    gap = separation_constant(hi.m, hi.n) - separation_constant(lo.m, lo.n) - hi.m
    return gap / 2


def separation_holds(b1: BlockIndex, b2: BlockIndex) -> bool:
    """Integer check of ``D - D' - m >= 2**T`` (twice the bound against ``2**(T-1)``)."""
    hi, lo = (b1, b2) if b1.T > b2.T else (b2, b1)
    gap = separation_constant(hi.m, hi.n) - separation_constant(lo.m, lo.n) - hi.m
    return gap >= 2 ** hi.T


def random_cube_point(block: BlockIndex, rng: np.random.Generator) -> CubePoint:
    scale = 1 << _GRID_BITS
    ticks = rng.integers(0, block.m * scale, size=block.n, endpoint=True)
    return CubePoint(block, tuple(ticks / scale))


def cube_corners(block: BlockIndex):
    for c in product((0, block.m), repeat=block.n):
        yield CubePoint(block, c)


@dataclass
class ControlReport:
    block: BlockIndex
    pairs: int = 0
    min_ratio: float = math.inf
    max_ratio: float = -math.inf
    violations: list = field(default_factory=list)
    hausdorff_mismatches: list = field(default_factory=list)
    diameter_violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.violations or self.hausdorff_mismatches or self.diameter_violations)

    def to_json(self) -> dict:
        return {
            "block": [self.block.m, self.block.n],
            "pairs": self.pairs,
            "violations": self.violations,
            "hausdorff_mismatches": self.hausdorff_mismatches,
            "diameter_violations": self.diameter_violations,
            "min_ratio": self.min_ratio if self.pairs else None,
            "max_ratio": self.max_ratio if self.pairs else None,
        }


def _check_pair(report, p, q, eps):
    fp, fq = phi(p), phi(q)
    d = sup_metric(p, q)
    D = separation_constant(p.block.m, p.block.n)
    for f in (fp, fq):
        if not (D - p.block.m - eps <= f.diameter <= D + eps):
            report.diameter_violations.append({"point": list(f), "diameter": f.diameter})
    h = hausdorff(fp, fq)
    if h != d:
        report.hausdorff_mismatches.append({"x": list(p.coords), "y": list(q.coords), "d_sup": d, "d_H": h})
    eh = eh_distance(fp, fq).value
    report.pairs += 1
    if d > 0:
        ratio = eh / d
        report.min_ratio = min(report.min_ratio, ratio)
        report.max_ratio = max(report.max_ratio, ratio)
    if not (d / 2 - eps <= eh <= d + eps):
        report.violations.append({"x": list(p.coords), "y": list(q.coords), "d_sup": d, "eh": eh})


def verify_control_functions(block: BlockIndex, trials: int, seed: int, eps: float = EPS,
                             corners: bool = True) -> ControlReport:
    """Check ``d/2 <= d_EH(phi(x), phi(y)) <= d`` on sampled pairs, with the exact solver.

    Trial ``t`` draws its pair from a generator seeded by ``(seed, t)``.  With
    ``corners`` set, every pair of cube corners is checked as well (skipped
    for ``n > 4``).  Violations are collected, never raised.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    report = ControlReport(block)
    for t in range(trials):
        rng = np.random.default_rng([seed, t])
        _check_pair(report, random_cube_point(block, rng), random_cube_point(block, rng), eps)
    if corners and block.n <= 4:
        cs = list(cube_corners(block))
        for i, p in enumerate(cs):
            for q in cs[i + 1:]:
                _check_pair(report, p, q, eps)
    return report
