"""Exact Gromov-Hausdorff / Euclidean-Hausdorff distances and coarse-geometry checks.

Exit codes: 0 success, 1 input or validation error, 2 verification failure.
Results go to stdout as JSON (floats with 17 significant digits); diagnostics
go to stderr.  Randomised suites draw trial ``t`` from a PCG64 stream seeded
with ``(seed, t)``, so any single trial can be replayed on its own.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import assouad, covers, embeddings
from ._backend import BACKEND
from .errors import (
    AxiomViolation,
    GuardExceeded,
    HypothesisViolated,
    OverflowGuard,
    PreconditionFailed,
    SizeGuardExceeded,
)
from .gromov import DEFAULT_GUARD, gh_bruteforce, gh_exact, lower_bound_distance_set
from .hausdorff1d import eh_distance
from .metric import (
    EPS,
    Point1DSet,
    from_point_set,
    kuratowski_embed,
    kuratowski_cube_side,
    metric_from_json,
    point_set_from_json,
    point_set_to_json,
    validate_metric,
)

EXIT_OK, EXIT_INPUT, EXIT_FAIL = 0, 1, 2


class InputError(Exception):
    pass


def _fmt_float(v: float) -> str:
    if not math.isfinite(v):
        return "null"
    s = format(v, ".17g")
    if all(ch not in s for ch in ".en"):
        s += ".0"
    return s


def dumps(obj) -> str:
    """JSON text with every float written to 17 significant digits."""
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    if isinstance(obj, np.ndarray):
        return dumps(obj.tolist())
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"{path}: {e}") from e


def _rng(seed, t):
    return np.random.default_rng([seed, t])


def _random_point_set(rng, max_points):
    while True:
        k = int(rng.integers(1, max_points, endpoint=True))
        vals = rng.uniform(0.0, 1.0, size=k)
        if np.unique(vals).size == k:
            return Point1DSet.from_values(vals)


# suites -----------------------------------------------------------------------

def bilipschitz_suite(trials: int, max_points: int, seed: int, tolerance: float = EPS,
                      guard: int = DEFAULT_GUARD) -> dict:
    """Check ``0.8 * d_EH <= d_GH <= d_EH`` (and the distance-set lower bound) on random subsets of [0, 1]."""
    if max_points > guard:
        raise InputError(f"--max-points {max_points} exceeds the GH guard {guard}")
    violations, bound_violations = [], []
    min_ratio, max_ratio = math.inf, -math.inf
    for t in range(trials):
        rng = _rng(seed, t)
        x, y = _random_point_set(rng, max_points), _random_point_set(rng, max_points)
        mx, my = from_point_set(x), from_point_set(y)
        gh = gh_exact(mx, my, guard).value
        eh = eh_distance(x, y).value
        lb = lower_bound_distance_set(mx, my)
        if eh > 0:
            min_ratio = min(min_ratio, gh / eh)
            max_ratio = max(max_ratio, gh / eh)
        if not (0.8 * eh - tolerance <= gh <= eh + tolerance):
            violations.append({"trial": t, "x": list(x), "y": list(y), "gh": gh, "eh": eh})
        if lb > gh + tolerance:
            bound_violations.append({"trial": t, "x": list(x), "y": list(y), "gh": gh, "lower_bound": lb})
    return {
        "trials": trials,
        "max_points": max_points,
        "seed": seed,
        "tolerance": tolerance,
        "violations": violations,
        "lower_bound_violations": bound_violations,
        "min_ratio": min_ratio if math.isfinite(min_ratio) else None,
        "max_ratio": max_ratio if math.isfinite(max_ratio) else None,
    }


# commands ---------------------------------------------------------------------

def cmd_gh(args):
    x = validate_metric(metric_from_json(_load_json(args.x)))
    y = validate_metric(metric_from_json(_load_json(args.y)))
    if args.method == "bruteforce":
        res = gh_bruteforce(x, y)
    else:
        res = gh_exact(x, y, guard=args.guard)
    return res.to_json(), EXIT_OK


def cmd_eh(args):
    x = point_set_from_json(_load_json(args.x))
    y = point_set_from_json(_load_json(args.y))
    return eh_distance(x, y).to_json(), EXIT_OK


def cmd_embed(args):
    try:
        coords = [float(v) for v in args.point.split(",")]
    except ValueError as e:
        raise InputError(f"--point: {e}") from e
    p = embeddings.CubePoint(embeddings.BlockIndex(args.m, args.n), tuple(coords))
    return point_set_to_json(embeddings.phi(p)), EXIT_OK


def cmd_kuratowski(args):
    m = validate_metric(metric_from_json(_load_json(args.file)))
    return {
        "cube_side": kuratowski_cube_side(m),
        "dimension": m.n,
        "vectors": [list(v) for v in kuratowski_embed(m)],
    }, EXIT_OK


def cmd_assouad(args):
    w = assouad.generate_witness(args.alpha, args.C, args.R)
    out = w.to_json()
    code = EXIT_OK
    if args.verify:
        rep = assouad.verify_witness(w, args.tolerance)
        out["report"] = rep.to_json()
        if rep.ok:
            cert = assouad.ball_covering_certificate(w, rep)
            out["certificate"] = {"M": cert.M, "bound": cert.bound, "text": cert.text}
        else:
            code = EXIT_FAIL
    return out, code


def cmd_cover_x1(args):
    if args.r <= 0 or args.xmax < 0 or args.samples < 1:
        raise InputError("need --r > 0, --xmax >= 0 and --samples >= 1")
    rng = _rng(args.seed, 0)
    xs = rng.uniform(0.0, args.xmax, size=args.samples)
    space = covers.SampledSpace.from_line(xs)
    cov = covers.x1_cover(space, args.r)
    rep = covers.verify_cover(space, cov, args.tolerance)
    out = {"sample": [list(e) for e in space.elements], "cover": cov.to_json(), "report": rep.to_json()}
    return out, EXIT_OK if rep.ok else EXIT_FAIL


def cmd_cover_verify(args):
    sample = _load_json(args.sample)
    if isinstance(sample, dict):
        sample = sample.get("sample", sample.get("elements"))
    if not isinstance(sample, list):
        raise InputError("sample file must be a list of point sets or {\"sample\": [...]}")
    elements = [point_set_from_json(e) if isinstance(e, dict) else Point1DSet.from_values(e) for e in sample]
    space = covers.SampledSpace.from_elements(elements)
    cov_obj = _load_json(args.cover)
    cov = covers.CoverFamily.from_json(cov_obj.get("cover", cov_obj))
    rep = covers.verify_cover(space, cov, args.tolerance)
    return rep.to_json(), EXIT_OK if rep.ok else EXIT_FAIL


def cmd_verify_bilipschitz(args):
    rep = bilipschitz_suite(args.trials, args.max_points, args.seed, args.tolerance, args.guard)
    ok = not rep["violations"] and not rep["lower_bound_violations"]
    return rep, EXIT_OK if ok else EXIT_FAIL


def cmd_verify_embedding(args):
    block = embeddings.BlockIndex(args.m, args.n)
    rep = embeddings.verify_control_functions(block, args.trials, args.seed, args.tolerance)
    return rep.to_json(), EXIT_OK if rep.ok else EXIT_FAIL


def cmd_verify_witness(args):
    w = assouad.generate_witness(args.alpha, args.C, args.R)
    rep = assouad.verify_witness(w, args.tolerance)
    return rep.to_json(), EXIT_OK if rep.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ghspace", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({BACKEND} kernels)")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, seed=False, trials=None):
        sp.add_argument("--tolerance", type=float, default=EPS)
        if seed:
            sp.add_argument("--seed", type=int, default=0)
        if trials is not None:
            sp.add_argument("--trials", type=int, default=trials)

    sp = sub.add_parser("gh", help="exact Gromov-Hausdorff distance between two metric files")
    sp.add_argument("x")
    sp.add_argument("y")
    sp.add_argument("--method", choices=["exact", "bruteforce"], default="exact")
    sp.add_argument("--guard", type=int, default=DEFAULT_GUARD)
    sp.set_defaults(func=cmd_gh)

    sp = sub.add_parser("eh", help="exact Euclidean-Hausdorff alignment of two point-set files")
    sp.add_argument("x")
    sp.add_argument("y")
    sp.set_defaults(func=cmd_eh)

    sp = sub.add_parser("embed", help="image of a cube point as a point set")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--point", required=True, help="comma-separated coordinates in [0, m]")
    sp.set_defaults(func=cmd_embed)

    sp = sub.add_parser("kuratowski", help="isometric embedding into a sup-metric cube")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_kuratowski)

    sp = sub.add_parser("assouad", help="generate (and optionally verify) a packing witness")
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--C", type=float, required=True)
    sp.add_argument("--R", type=float, default=1.0)
    sp.add_argument("--verify", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_assouad)

    sp = sub.add_parser("cover", help="cover construction and checking")
    csub = sp.add_subparsers(dest="cover_command", required=True)
    c1 = csub.add_parser("x1", help="two-class cover of random {0, x} elements")
    c1.add_argument("--r", type=float, required=True)
    c1.add_argument("--xmax", type=float, required=True)
    c1.add_argument("--samples", type=int, default=200)
    common(c1, seed=True)
    c1.set_defaults(func=cmd_cover_x1)
    cv = csub.add_parser("verify", help="check a cover file against a sample file")
    cv.add_argument("sample")
    cv.add_argument("cover")
    common(cv)
    cv.set_defaults(func=cmd_cover_verify)

    sp = sub.add_parser("verify", help="randomised verification suites")
    vsub = sp.add_subparsers(dest="suite", required=True)
    vb = vsub.add_parser("bilipschitz", help="0.8 d_EH <= d_GH <= d_EH on random subsets of [0, 1]")
    vb.add_argument("--max-points", type=int, default=5)
    vb.add_argument("--guard", type=int, default=DEFAULT_GUARD)
    common(vb, seed=True, trials=200)
    vb.set_defaults(func=cmd_verify_bilipschitz)
    ve = vsub.add_parser("embedding", help="control functions of the cube embedding")
    ve.add_argument("--m", type=int, required=True)
    ve.add_argument("--n", type=int, required=True)
    common(ve, seed=True, trials=100)
    ve.set_defaults(func=cmd_verify_embedding)
    vw = vsub.add_parser("witness", help="packing witness separation")
    vw.add_argument("--alpha", type=float, required=True)
    vw.add_argument("--C", type=float, required=True)
    vw.add_argument("--R", type=float, default=1.0)
    common(vw)
    vw.set_defaults(func=cmd_verify_witness)
    return p


_INPUT_ERRORS = (
    InputError, ValueError, AxiomViolation, SizeGuardExceeded, GuardExceeded,
    OverflowGuard, PreconditionFailed, HypothesisViolated, KeyError, TypeError,
)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "tolerance", 1.0) <= 0:
        print("error: --tolerance must be positive", file=sys.stderr)
        return EXIT_INPUT
    if getattr(args, "trials", 1) < 1:
        print("error: --trials must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        out, code = args.func(args)
    except _INPUT_ERRORS as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(dumps(out) + "\n")
    if code == EXIT_FAIL:
        print("verification failed", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
