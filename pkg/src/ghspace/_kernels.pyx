# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled hot loops: correspondence branch-and-bound and shifted 1D Hausdorff scans.

``_kernels_py`` is the reference fallback with identical semantics; any change
here must be mirrored there (tests compare both backends node for node).
"""
import numpy as np

from libc.math cimport fabs, INFINITY


cdef class _Search:
    cdef const double[:, ::1] dx
    cdef const double[:, ::1] dy
    cdef Py_ssize_t[::1] order
    cdef Py_ssize_t[::1] dom
    cdef Py_ssize_t[:, ::1] pi
    cdef Py_ssize_t[:, ::1] pj
    cdef double[:, :, ::1] cost
    cdef Py_ssize_t[::1] assign
    cdef Py_ssize_t[::1] best_assign
    cdef Py_ssize_t n_vars
    cdef double best
    cdef double seed
    cdef double stop_at
    cdef bint have
    cdef bint done
    cdef public long long nodes

    def __init__(self, dx, dy, order, dom, pi, pj, cost0, double seed, double stop_at):
        self.dx = dx
        self.dy = dy
        self.order = order
        self.dom = dom
        self.pi = pi
        self.pj = pj
        self.n_vars = order.shape[0]
        buf = np.empty((self.n_vars + 1, cost0.shape[0], cost0.shape[1]))
        buf[0] = cost0
        self.cost = buf
        self.assign = np.zeros(self.n_vars, dtype=np.intp)
        self.best_assign = np.zeros(self.n_vars, dtype=np.intp)
        self.best = INFINITY
        self.seed = seed
        self.stop_at = stop_at
        self.have = False
        self.done = False
        self.nodes = 0

    cdef inline bint _prune(self, double v) nogil:
        if self.have:
            return v >= self.best
        return v > self.seed

    cdef void _dfs(self, Py_ssize_t depth, double cur) noexcept nogil:
        cdef Py_ssize_t var, w, i, j, t, u, z, a, b
        cdef double c, nc, lb, mn, o, v1, v2
        cdef bint cut
        self.nodes += 1
        if depth == self.n_vars:
            self.best = cur
            self.have = True
            for t in range(self.n_vars):
                self.best_assign[t] = self.assign[t]
            if cur <= self.stop_at:
                self.done = True
            return
        var = self.order[depth]
        for w in range(self.dom[var]):
            c = self.cost[depth, var, w]
            nc = cur if cur > c else c
            if self._prune(nc):
                continue
            i = self.pi[var, w]
            j = self.pj[var, w]
            lb = nc
            cut = False
            for t in range(depth + 1, self.n_vars):
                u = self.order[t]
                mn = INFINITY
                for z in range(self.dom[u]):
                    a = self.pi[u, z]
                    b = self.pj[u, z]
                    o = self.cost[depth, u, z]
                    v1 = fabs(self.dx[a, i] - self.dy[b, j])
                    v2 = fabs(self.dx[i, a] - self.dy[j, b])
                    if v1 > o:
                        o = v1
                    if v2 > o:
                        o = v2
                    self.cost[depth + 1, u, z] = o
                    if o < mn:
                        mn = o
                if mn > lb:
                    lb = mn
                if self._prune(lb):
                    cut = True
                    break
            if cut:
                continue
            self.assign[var] = w
            self._dfs(depth + 1, nc)
            if self.done:
                return

    def run(self):
        with nogil:
            self._dfs(0, 0.0)
        if not self.have:
            return None, None
        return self.best, np.asarray(self.best_assign).copy()


def gh_search(dx, dy, order, dom, pi, pj, cost0, double seed, double stop_at):
    """Depth-first search over map-pair correspondences; see ``_kernels_py.gh_search``."""
    s = _Search(dx, dy, order, dom, pi, pj, cost0, seed, stop_at)
    best, assign = s.run()
    return best, assign, s.nodes


cdef double _directed(const double[::1] a, const double[::1] b, double t) noexcept nogil:
    # max over a of min over b of |a_i - (b_j + t)|, both sorted ascending
    cdef Py_ssize_t i, j = 0, nb = b.shape[0]
    cdef double worst = 0.0, d, e
    for i in range(a.shape[0]):
        while j + 1 < nb and b[j + 1] + t <= a[i]:
            j += 1
        d = fabs(a[i] - (b[j] + t))
        if j + 1 < nb:
            e = fabs(a[i] - (b[j + 1] + t))
            if e < d:
                d = e
        if d > worst:
            worst = d
    return worst


cdef double _directed_rev(const double[::1] b, const double[::1] a, double t) noexcept nogil:
    # max over b of min over a of |a_i - (b_j + t)|
    cdef Py_ssize_t i = 0, j, na = a.shape[0]
    cdef double worst = 0.0, d, e, q
    for j in range(b.shape[0]):
        q = b[j] + t
        while i + 1 < na and a[i + 1] <= q:
            i += 1
        d = fabs(a[i] - q)
        if i + 1 < na:
            e = fabs(a[i + 1] - q)
            if e < d:
                d = e
        if d > worst:
            worst = d
    return worst


def hausdorff_at_shifts(const double[::1] x, const double[::1] y, const double[::1] shifts):
    """d_H(x, y + t) for every t in ``shifts``; x and y sorted ascending."""
    out = np.empty(shifts.shape[0])
    cdef double[::1] res = out
    cdef Py_ssize_t k
    cdef double p, q
    with nogil:
        for k in range(shifts.shape[0]):
            p = _directed(x, y, shifts[k])
            q = _directed_rev(y, x, shifts[k])
            res[k] = p if p > q else q
    return out
