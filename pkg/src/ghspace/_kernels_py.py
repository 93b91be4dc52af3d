"""Pure-Python twin of ``_kernels.pyx``.

Same search order, same pruning rules and same floating-point expressions, so
both backends return bit-identical values and witnesses.
"""
import numpy as np


def gh_search(dx, dy, order, dom, pi, pj, cost0, seed, stop_at):
    """Branch-and-bound over assignments of every variable to a partner index.

    Variable ``v`` takes values ``0 <= w < dom[v]``; choosing ``w`` adds the
    pair ``(pi[v, w], pj[v, w])`` to the relation.  ``cost0[v, w]`` holds the
    self-term ``|dx[i, i] - dy[j, j]|`` (inf on padding).  Values are tried in
    index order and a branch is cut when its partial distortion, or the
    forward-checked bound over unassigned variables, reaches the incumbent
    (or exceeds ``seed`` before any leaf is found).  The first leaf whose
    value is ``<= stop_at`` ends the search.

    Returns ``(best, assignment, nodes)``; ``best`` is None if nothing beat
    ``seed``.
    """
    n_vars = len(order)
    order = [int(v) for v in order]
    dom = [int(k) for k in dom]
    cost = [None] * (n_vars + 1)
    cost[0] = np.array(cost0, dtype=float)
    assign = [0] * n_vars
    state = {"best": np.inf, "have": False, "done": False, "nodes": 0, "assign": None}

    def prune(v):
        if state["have"]:
            return v >= state["best"]
        return v > seed

    def dfs(depth, cur):
        state["nodes"] += 1
        if depth == n_vars:
            state["best"] = cur
            state["have"] = True
            state["assign"] = list(assign)
            if cur <= stop_at:
                state["done"] = True
            return
        var = order[depth]
        rest = order[depth + 1:]
        for w in range(dom[var]):
            c = cost[depth][var, w]
            nc = cur if cur > c else c
            if prune(nc):
                continue
            i = pi[var, w]
            j = pj[var, w]
            nxt = cost[depth].copy()
            if rest:
                a = pi[rest]
                b = pj[rest]
                v1 = np.abs(dx[a, i] - dy[b, j])
                v2 = np.abs(dx[i, a] - dy[j, b])
                # padding slots hold +inf and stay there
                upd = np.maximum(np.maximum(nxt[rest], v1), v2)
                nxt[rest] = upd
                lb = max(nc, float(upd.min(axis=1).max()))
                if prune(lb):
                    continue
            cost[depth + 1] = nxt
            assign[var] = w
            dfs(depth + 1, nc)
            if state["done"]:
                return

    dfs(0, 0.0)
    if not state["have"]:
        return None, None, state["nodes"]
    return state["best"], np.array(state["assign"], dtype=np.intp), state["nodes"]


def hausdorff_at_shifts(x, y, shifts, chunk=4096):
    """d_H(x, y + t) for every t in ``shifts``."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    shifts = np.asarray(shifts, dtype=float)
    out = np.empty(len(shifts))
    for start in range(0, len(shifts), chunk):
        t = shifts[start:start + chunk]
        diff = np.abs(x[None, :, None] - (y[None, None, :] + t[:, None, None]))
        fwd = diff.min(axis=2).max(axis=1)
        bwd = diff.min(axis=1).max(axis=1)
        out[start:start + chunk] = np.maximum(fwd, bwd)
    return out
