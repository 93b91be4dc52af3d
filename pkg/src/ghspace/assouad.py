"""Packing witnesses showing that finite subsets of ``[0, R]`` under EH have infinite Assouad dimension.

For given ``alpha, C`` and ``beta = 1/2``, :func:`generate_witness` builds a
lattice set ``A`` and ``M = ceil(C * 2**alpha + 1)`` perturbations ``A_i``:
all within ``s < r`` of ``A``, pairwise at least ``2s > r = 2 * beta * r``
apart.  So the open r-ball at ``A`` needs at least ``M > C * beta**-alpha``
balls of radius ``beta * r``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import CertificateUnavailable, GuardExceeded
from .hausdorff1d import eh_distance, hausdorff
from .metric import EPS, Point1DSet

BETA = 0.5
MAX_M = 64
MAX_M_VERIFY = 12


@dataclass(frozen=True)
class WitnessFamily:
    alpha: float
    C: float
    R: float
    M: int
    l: float
    r: float
    s: float
    beta: float
    A: Point1DSet
    A_list: tuple

    def to_json(self) -> dict:
        return {
            "parameters": {
                "alpha": self.alpha, "C": self.C, "R": self.R, "M": self.M,
                "l": self.l, "r": self.r, "s": self.s, "beta": self.beta,
            },
            "A": self.A.points.tolist(),
            "A_list": [a.points.tolist() for a in self.A_list],
        }


def packing_count(alpha: float, C: float) -> int:
    return math.ceil(C * BETA ** -alpha + 1)


def generate_witness(alpha: float, C: float, R: float) -> WitnessFamily:
    if alpha <= 0 or C <= 0 or R <= 0:
        raise ValueError("alpha, C and R must be positive")
    M = packing_count(alpha, C)
    if M > MAX_M:
        raise GuardExceeded(f"M = {M} exceeds {MAX_M}")
    den = 2 * (M + 1)
    l = R / den
    r = l / 6
    s = 2 * r / 3
    # j*R/den rather than j*l, so that j = M+1 lands exactly on R/2
    lattice = [j * R / den for j in range(M + 2)]
    A = Point1DSet(np.array(lattice + [R]))
    A_list = []
    for i in range(1, M + 1):
        pts = [lattice[j] + s for j in range(1, M + 1) if j != i]
        pts += [lattice[i] - s, 0.0, R / 2, R]
        A_list.append(Point1DSet.from_values(pts))
    return WitnessFamily(alpha, C, R, M, l, r, s, BETA, A, tuple(A_list))


@dataclass
class WitnessReport:
    M: int
    checks: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    min_pair_eh: float = math.inf
    max_center_eh: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "M": self.M,
            "checks": self.checks,
            "min_pair_eh": self.min_pair_eh,
            "max_center_eh": self.max_center_eh,
            "violations": self.violations,
        }


def verify_witness(w: WitnessFamily, eps: float = EPS) -> WitnessReport:
    """Check the packing with the exact solvers.

    For every i: ``d_EH(A, A_i) < r`` and ``<= s``, ``d_H(A, A_i) = s``.  For
    every i != j: ``d_EH(A_i, A_j) >= 2s`` and ``d_H(A_i, A_j) = 2s``.
    Equalities and inequalities are up to ``eps``; reflections are searched
    too, so a reflected alignment beating the bound would be reported here.
    """
    if w.M > MAX_M_VERIFY:
        raise GuardExceeded(f"M = {w.M} exceeds {MAX_M_VERIFY} for full pairwise verification")
    rep = WitnessReport(w.M)
    for name in ("eh_center_lt_r", "eh_center_le_s", "hausdorff_center_eq_s",
                 "eh_pairs_ge_2s", "hausdorff_pairs_eq_2s"):
        rep.checks[name] = True

    def fail(check, **info):
        rep.checks[check] = False
        rep.violations.append({"check": check, **info})

    for i, Ai in enumerate(w.A_list, start=1):
        eh = eh_distance(w.A, Ai).value
        rep.max_center_eh = max(rep.max_center_eh, eh)
        if not eh < w.r:
            fail("eh_center_lt_r", i=i, value=eh)
        if eh > w.s + eps:
            fail("eh_center_le_s", i=i, value=eh)
        h = hausdorff(w.A, Ai)
        if abs(h - w.s) > eps:
            fail("hausdorff_center_eq_s", i=i, value=h)
    for i in range(w.M):
        for j in range(i + 1, w.M):
            Ai, Aj = w.A_list[i], w.A_list[j]
            eh = eh_distance(Ai, Aj).value
            rep.min_pair_eh = min(rep.min_pair_eh, eh)
            if eh < 2 * w.s - eps:
                fail("eh_pairs_ge_2s", i=i + 1, j=j + 1, value=eh)
            h = hausdorff(Ai, Aj)
            if abs(h - 2 * w.s) > eps:
                fail("hausdorff_pairs_eq_2s", i=i + 1, j=j + 1, value=h)
    return rep


@dataclass(frozen=True)
class BallCoveringCertificate:
    M: int
    bound: float
    text: str


def ball_covering_certificate(w: WitnessFamily, report: WitnessReport | None = None) -> BallCoveringCertificate:
    """Packing count ``M`` against the covering bound ``C * beta**-alpha`` it defeats."""
    if report is None:
        report = verify_witness(w)
    if not report.ok:
        raise CertificateUnavailable(f"witness verification failed: {report.violations[:3]}")
    bound = w.C * w.beta ** -w.alpha
    if not w.M > bound:
        raise CertificateUnavailable(f"M = {w.M} does not exceed {bound}")
    text = (
        f"All {w.M} sets A_i lie in the open ball of radius r = {w.r!r} around A, "
        f"and any two are at EH distance >= 2s = {2 * w.s!r} > 2*beta*r = {2 * w.beta * w.r!r}, "
        f"so no ball of radius beta*r contains two of them. Covering the r-ball therefore "
        f"takes at least M = {w.M} > C*beta^-alpha = {bound!r} balls of radius beta*r."
    )
    return BallCoveringCertificate(w.M, bound, text)
