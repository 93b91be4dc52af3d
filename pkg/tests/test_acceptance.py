"""Acceptance suite: one test per criterion, each printing a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines inline; they
are also repeated in the terminal summary.
"""
import itertools
import math
import time

import numpy as np
import pytest

from ghspace import (
    HypothesisViolated,
    Point1DSet,
    PseudoSemiMetricNetwork,
    DistanceSet,
    distance_set,
    eh_distance,
    gh_bruteforce,
    gh_exact,
    hausdorff,
    kuratowski_embed,
    lower_bound_distance_set,
    network_distance,
    quantization_image_bound,
    quantize_network,
)
from ghspace.assouad import generate_witness
from ghspace.cli import bilipschitz_suite
from ghspace.covers import SampledSpace, absorb_union, verify_cover, x1_cover, CoverFamily
from ghspace.embeddings import (
    BlockIndex,
    block_separation_lower_bound,
    pairing_T_inverse,
    phi,
    random_cube_point,
    separation_constant,
    verify_control_functions,
)
from ghspace.hausdorff1d import hausdorff_values
from ghspace.metric import sup_distance

from conftest import ACCEPTANCE_LINES, random_euclidean_metric, random_integer_metric, random_line_fixture

TOL = 1e-9


def report(name, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def sandwich():
    t0 = time.perf_counter()
    rep = bilipschitz_suite(trials=200, max_points=6, seed=2024, tolerance=TOL)
    return rep, time.perf_counter() - t0


def test_oracle_equivalence():
    t0 = time.perf_counter()
    worst = 0.0
    for t in range(200):
        rng = np.random.default_rng([101, t])
        x = random_euclidean_metric(rng, int(rng.integers(1, 3, endpoint=True)))
        y = random_euclidean_metric(rng, int(rng.integers(1, 3, endpoint=True)))
        worst = max(worst, abs(gh_exact(x, y).value - gh_bruteforce(x, y).value))
    dt = time.perf_counter() - t0
    report("oracle equivalence", worst <= TOL and dt < 30,
           f"200 pairs, max |exact - bruteforce| = {worst:.3g}, {dt:.2f}s (limit 30s)")


def test_gh_eh_sandwich(sandwich):
    rep, dt = sandwich
    ok = not rep["violations"] and dt < 120
    report("GH/EH sandwich 0.8*EH <= GH <= EH", ok,
           f"200 pairs (<= 6 points), {len(rep['violations'])} violations, "
           f"ratio GH/EH in [{rep['min_ratio']:.6f}, {rep['max_ratio']:.6f}], {dt:.2f}s (limit 120s)")


def test_distance_set_lower_bound(sandwich):
    rep, _ = sandwich
    n = len(rep["lower_bound_violations"])
    report("distance-set lower bound <= GH", n == 0, f"200 pairs, {n} violations")


def test_embedding_control_functions():
    details, ok = [], True
    for m, n in [(1, 1), (1, 2), (2, 1), (2, 2)]:
        rep = verify_control_functions(BlockIndex(m, n), trials=100, seed=7, eps=TOL, corners=False)
        ok &= rep.ok and rep.pairs == 100
        details.append(f"({m},{n}): {len(rep.violations)} bound / {len(rep.hausdorff_mismatches)} d_H mismatches, "
                       f"ratio [{rep.min_ratio:.4f}, {rep.max_ratio:.4f}]")
    report("embedding control functions", ok, "; ".join(details))


def test_block_separation():
    blocks = [BlockIndex(*pairing_T_inverse(k)) for k in range(1, 9)]
    failures = 0
    for b1, b2 in itertools.combinations(blocks, 2):
        hi = max(b1, b2, key=lambda b: b.T)
        lo = b1 if hi is b2 else b2
        # integer form of (D - D' - m) / 2 >= 2**(T-1)
        gap = separation_constant(hi.m, hi.n) - separation_constant(lo.m, lo.n) - hi.m
        failures += gap < 2 ** hi.T
    rng = np.random.default_rng(31)
    sampled = []
    for b1, b2 in [(blocks[0], blocks[1]), (blocks[1], blocks[2]), (blocks[2], blocks[5])]:
        p, q = random_cube_point(b1, rng), random_cube_point(b2, rng)
        eh = eh_distance(phi(p), phi(q)).value
        bound = block_separation_lower_bound(b1, b2)
        sampled.append((eh, bound))
    ok = failures == 0 and all(eh >= bd - TOL for eh, bd in sampled)
    report("block separation", ok,
           f"{len(blocks) * (len(blocks) - 1) // 2} block pairs with T <= 8, {failures} failures; sampled EH vs bound: "
           + ", ".join(f"{eh:g} >= {bd:g}" for eh, bd in sampled))


def test_anchor_value():
    d = separation_constant(1, 1)
    report("anchor D(1,1) = 12", d == 12, f"separation_constant(1, 1) = {d}")


def test_assouad_witness():
    t0 = time.perf_counter()
    details, ok = [], True
    for alpha, C in [(1, 1), (1, 2), (2, 1)]:
        w = generate_witness(alpha, C, 1.0)
        h_center = max(abs(hausdorff(w.A, a) - w.s) for a in w.A_list)
        pairs = list(itertools.combinations(w.A_list, 2))
        h_pairs = max(abs(hausdorff(a, b) - 2 * w.s) for a, b in pairs)
        eh_min = min(eh_distance(a, b).value for a, b in pairs)
        good = h_center <= TOL and h_pairs <= TOL and eh_min >= 2 * w.s - TOL and w.M > C * 2 ** alpha
        ok &= good
        details.append(f"(alpha={alpha}, C={C}): M={w.M} > {C * 2 ** alpha:g}, min EH pair {eh_min:.6g} vs 2s {2 * w.s:.6g}")
    dt = time.perf_counter() - t0
    report("Assouad witness", ok and dt < 60, "; ".join(details) + f"; {dt:.2f}s (limit 60s)")


def test_cover_suite():
    parts, ok = [], True
    for r in (0.5, 1.0, 3.0):
        rng = np.random.default_rng([404, int(r * 10)])
        s = SampledSpace.from_line(rng.uniform(0, 20 * r, size=200))
        rep = verify_cover(s, x1_cover(s, r))
        ok &= rep.ok and x1_cover(s, r).bound == 2 * r
        parts.append(f"x1 r={r:g}: {'ok' if rep.ok else 'violations'}")
    absorb_fail = 0
    for t in range(100):
        s, sparse, dense, r, R = random_line_fixture(np.random.default_rng([5, t]))
        u = absorb_union(s, sparse, dense, r, R)
        absorb_fail += not verify_cover(s, CoverFamily((u.members,), r, u.bound)).ok
    ok &= absorb_fail == 0
    parts.append(f"absorb_union: {100 - absorb_fail}/100 fixtures verified")
    # two dense members at distance 0.5 <= r = 1 must be rejected
    line = SampledSpace.from_line([0.0, 1.0, 1.5, 2.0, 10.0])
    try:
        absorb_union(line, [[4]], [[0, 1], [2]], 1.0, 1.0)
        which = None
    except HypothesisViolated as e:
        which = e.which
    ok &= which == "dense_not_r_disjoint"
    parts.append(f"violating fixture rejected as {which}")
    report("cover suite", ok, "; ".join(parts))


def test_quantization_certificate():
    target = DistanceSet([0, 1, 2, 3])
    cap = 0.3
    outputs, worst, made = set(), 0.0, 0
    for t in range(100):
        rng = np.random.default_rng([77, t])
        e = rng.permutation([1.0, 2.0, 3.0]) + rng.uniform(-cap, cap, size=3)
        y = PseudoSemiMetricNetwork([[0, e[0], e[1]], [e[0], 0, e[2]], [e[1], e[2], 0]])
        assert hausdorff_values(distance_set(y).values, target.values) <= cap
        q = quantize_network(y, target, cap)
        outputs.add(q)
        worst = max(worst, network_distance(y, q).value)
        made += 1
    bound = quantization_image_bound(3)
    ok = made == 100 and len(outputs) <= bound == 64 and worst <= cap + TOL
    report("quantization certificate", ok,
           f"{len(outputs)} distinct outputs <= {bound}; max network distance {worst:.6g} <= cap {cap}")


def test_kuratowski_isometry():
    bad = 0
    for t in range(100):
        rng = np.random.default_rng([55, t])
        m = random_integer_metric(rng, int(rng.integers(1, 6, endpoint=True)))
        v = kuratowski_embed(m)
        bad += any(sup_distance(v[i], v[j]) != m.d[i, j] for i in range(m.n) for j in range(m.n))
    report("Kuratowski isometry", bad == 0, f"100 spaces (<= 6 points), {bad} non-isometric")
