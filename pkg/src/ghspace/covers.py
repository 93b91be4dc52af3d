"""Asymptotic-dimension cover calculus on finite samples of point-set spaces.

Everything acts on a :class:`SampledSpace`: finitely many point sets that
contain 0, with their pairwise Hausdorff distances precomputed.  A cover
member is a set of element indices.  Statements about infinite spaces are
only ever checked on the sample; reports say "no violation found", not
"proved".
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ClassCountMismatch, HypothesisViolated
from .hausdorff1d import hausdorff
from .metric import EPS, Point1DSet


@dataclass(frozen=True, eq=False)
class SampledSpace:
    elements: tuple
    metric: np.ndarray

    def __post_init__(self):
        els = tuple(self.elements)
        for k, e in enumerate(els):
            if 0.0 not in e:
                raise ValueError(f"element {k} does not contain 0")
        d = np.array(self.metric, dtype=float)
        if d.shape != (len(els), len(els)):
            raise ValueError("metric shape does not match the number of elements")
        if np.any(np.diag(d) != 0) or not np.array_equal(d, d.T):
            raise ValueError("metric must be symmetric with zero diagonal")
        d.setflags(write=False)
        object.__setattr__(self, "elements", els)
        object.__setattr__(self, "metric", d)

    @classmethod
    def from_elements(cls, elements) -> SampledSpace:
        els = [e if isinstance(e, Point1DSet) else Point1DSet.from_values(e) for e in elements]
        n = len(els)
        d = np.zeros((n, n))
        for i in range(n):
            for j in range(i + 1, n):
                d[i, j] = d[j, i] = hausdorff(els[i], els[j])
        return cls(tuple(els), d)

    @classmethod
    def from_line(cls, xs) -> SampledSpace:
        """Embed nonnegative reals ``x`` as the elements ``{0, x}``."""
        return cls.from_elements([[0.0] if x == 0 else [0.0, x] for x in xs])

    def __len__(self):
        return len(self.elements)

    def dist(self, u, v) -> float:
        """Set distance between two index sets."""
        return float(self.metric[np.ix_(sorted(u), sorted(v))].min())

    def diam(self, u) -> float:
        idx = sorted(u)
        return float(self.metric[np.ix_(idx, idx)].max())


def _members(cls_):
    return tuple(frozenset(int(i) for i in m) for m in cls_)


@dataclass(frozen=True)
class CoverFamily:
    """Classes of members (index sets); each class should be r-disjoint, each member ``bound``-bounded."""

    classes: tuple
    r: float
    bound: float

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(_members(c) for c in self.classes))
        if self.r <= 0 or self.bound < 0:
            raise ValueError("r must be positive and bound nonnegative")

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "bound": self.bound,
            "classes": [[sorted(m) for m in c] for c in self.classes],
        }

    @classmethod
    def from_json(cls, obj) -> CoverFamily:
        if isinstance(obj, (str, bytes)):
            obj = json.loads(obj)
        return cls(tuple(obj["classes"]), float(obj["r"]), float(obj["bound"]))


@dataclass
class CoverReport:
    uncovered: list = field(default_factory=list)
    overlaps: list = field(default_factory=list)
    oversized: list = field(default_factory=list)
    out_of_range: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.uncovered or self.overlaps or self.oversized or self.out_of_range)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "uncovered": self.uncovered,
            "overlaps": self.overlaps,
            "oversized": self.oversized,
            "out_of_range": self.out_of_range,
        }


def verify_cover(s: SampledSpace, c: CoverFamily, eps: float = EPS) -> CoverReport:
    """Check coverage, per-class r-disjointness and the member diameter bound."""
    rep = CoverReport()
    seen = set()
    for ci, cls_ in enumerate(c.classes):
        for mi, mem in enumerate(cls_):
            bad = [i for i in mem if not 0 <= i < len(s)]
            if bad or not mem:
                rep.out_of_range.append({"class": ci, "member": mi, "indices": bad})
            seen |= mem
    if rep.out_of_range:
        return rep
    rep.uncovered = sorted(set(range(len(s))) - seen)
    for ci, cls_ in enumerate(c.classes):
        for mi, mem in enumerate(cls_):
            d = s.diam(mem)
            if d > c.bound + eps:
                rep.oversized.append({"class": ci, "member": mi, "diameter": d})
        for a in range(len(cls_)):
            for b in range(a + 1, len(cls_)):
                d = s.dist(cls_[a], cls_[b])
                if d <= c.r:
                    rep.overlaps.append({"class": ci, "members": [a, b], "distance": d})
    return rep


def x1_cover_assign(x: float, r: float) -> tuple[int, int]:
    """``(i, k)`` with ``x`` in ``[(4k+2i) r, (4k+2i+2) r)``."""
    if x < 0 or r <= 0:
        raise ValueError("need x >= 0 and r > 0")
    q = math.floor(x / (2 * r))
    # guard the floor against x / (2r) rounding across an endpoint
    if (q + 1) * 2 * r <= x:
        q += 1
    elif q * 2 * r > x:
        q -= 1
    return q % 2, q // 2


def x1_cover(s: SampledSpace, r: float) -> CoverFamily:
    """Two-class cover of a sample of ``{0, x}`` elements, grouped by interval."""
    groups = [{}, {}]
    for idx, e in enumerate(s.elements):
        if len(e) > 2:
            raise ValueError(f"element {idx} has more than two points")
        i, k = x1_cover_assign(float(e.points[-1]), r)
        groups[i].setdefault(k, set()).add(idx)
    classes = tuple(tuple(frozenset(g[k]) for k in sorted(g)) for g in groups)
    return CoverFamily(classes, r, 2 * r)


@dataclass(frozen=True)
class UnionClass:
    members: tuple
    bound: float


def _max_diam(s, members):
    return max((s.diam(m) for m in members), default=0.0)


def _first_close_pair(s, members, threshold):
    for a in range(len(members)):
        for b in range(a + 1, len(members)):
            d = s.dist(members[a], members[b])
            if d <= threshold:
                return a, b, d
    return None


def absorb_union(s: SampledSpace, sparse, dense, r: float, R: float | None = None) -> UnionClass:
    """Let each sparse member swallow the dense members within distance ``r``.

    Hypotheses (checked on the sample): ``dense`` is r-disjoint and
    R-bounded with ``R >= r``; ``sparse`` is 5R-disjoint.  ``R`` defaults to
    ``max(r, largest dense diameter)``.  Dense members farther than ``r``
    from every sparse member are kept unchanged.  The result is r-disjoint and
    bounded by ``sparse bound + 2(r + R)``.
    """
    sparse = _members(sparse)
    dense = _members(dense)
    dense_diam = _max_diam(s, dense)
    if R is None:
        R = max(r, dense_diam)
    if R < r:
        raise HypothesisViolated("R_below_r", f"R = {R} < r = {r}")
    if dense_diam > R + EPS:
        raise HypothesisViolated("dense_not_bounded", f"dense diameter {dense_diam} > R = {R}")
    hit = _first_close_pair(s, dense, r)
    if hit:
        raise HypothesisViolated("dense_not_r_disjoint", f"members {hit[0]}, {hit[1]} at distance {hit[2]}")
    hit = _first_close_pair(s, sparse, 5 * R)
    if hit:
        raise HypothesisViolated("sparse_not_5R_disjoint", f"members {hit[0]}, {hit[1]} at distance {hit[2]}")

    out = []
    absorbed = set()
    for u in sparse:
        grown = set(u)
        for k, v in enumerate(dense):
            if s.dist(u, v) <= r:
                grown |= v
                absorbed.add(k)
        out.append(frozenset(grown))
    out.extend(v for k, v in enumerate(dense) if k not in absorbed)
    bound = _max_diam(s, sparse) + 2 * (r + R) if sparse else R
    return UnionClass(tuple(out), bound)


def combine_covers(s: SampledSpace, w_tilde: CoverFamily, v: CoverFamily, r: float) -> CoverFamily:
    """Classwise union ``U_i = absorb(sparse=V_i, dense=W~_i)``, then verified.

    ``w_tilde`` is the r-disjoint, R-bounded family and ``v`` the 5R-disjoint
    one, with ``R = max(r, w_tilde.bound)``.
    """
    if len(w_tilde.classes) != len(v.classes):
        raise ClassCountMismatch(f"{len(w_tilde.classes)} vs {len(v.classes)} classes")
    R = max(r, w_tilde.bound)
    classes, bound = [], 0.0
    for wc, vc in zip(w_tilde.classes, v.classes):
        u = absorb_union(s, vc, wc, r, R)
        classes.append(u.members)
        bound = max(bound, u.bound)
    out = CoverFamily(tuple(classes), r, bound)
    covered = set().union(*(m for c in w_tilde.classes + v.classes for m in c))
    rep = verify_cover(s, out)
    missing = covered - set().union(*(m for c in out.classes for m in c))
    if rep.overlaps or rep.oversized or missing:
        raise HypothesisViolated("output", json.dumps({"overlaps": rep.overlaps, "oversized": rep.oversized,
                                                       "missing": sorted(missing)}))
    return out


def decompose_element(c: Point1DSet, r: float):
    """Split at radius r: ``(c, None)`` if every nonzero point exceeds r, else ``(None, C1 | {0})``.

    In the second case ``d_H(c, C1 | {0}) <= r`` and the projection has fewer
    points than ``c``.
    """
    if 0.0 not in c:
        raise ValueError("element must contain 0")
    if r <= 0:
        raise ValueError("r must be positive")
    pts = c.points
    near = pts[(np.abs(pts) <= r) & (pts != 0)]
    if near.size == 0:
        return c, None
    far = pts[np.abs(pts) > r]
    return None, Point1DSet(np.sort(np.concatenate([[0.0], far])))
