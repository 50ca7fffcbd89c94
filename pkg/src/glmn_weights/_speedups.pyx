# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled scan kernels for the exhaustive verification loops.

Same API and failure payloads as the pure backend (_pykernels); selected at
import time by glmn_weights.kernels when the extension is built.  Weights
live in fixed C integer buffers and the box is walked with an odometer, so
the hot loop allocates nothing until a counterexample shows up.
"""

from libc.stdlib cimport free, malloc

name = "compiled"

cdef enum:
    MAXN = 64
    MAXSTEPS = 2080  # excess-pair count M*(M+1)/2 for M = 63


cdef inline bint _congruent(long s, long p) nogil:
    if p == 0:
        return s == 0
    return s % p == 0


cdef inline bint _non_increasing(const long* a, Py_ssize_t n) nogil:
    cdef Py_ssize_t k
    for k in range(1, n):
        if a[k - 1] < a[k]:
            return False
    return True


cdef inline bint _non_decreasing(const long* a, Py_ssize_t n) nogil:
    cdef Py_ssize_t k
    for k in range(1, n):
        if a[k - 1] > a[k]:
            return False
    return True


cdef inline void _forward(long* lam, long* theta, long p,
                          const long* si, const long* sj, Py_ssize_t ns) nogil:
    cdef Py_ssize_t k
    for k in range(ns):
        if not _congruent(lam[si[k]] + theta[sj[k]], p):
            lam[si[k]] -= 1
            theta[sj[k]] += 1


cdef inline void _inverse(long* lam, long* theta, long p,
                          const long* si, const long* sj, Py_ssize_t ns) nogil:
    cdef Py_ssize_t k
    for k in range(ns - 1, -1, -1):
        if not _congruent(lam[si[k]] + theta[sj[k]], p):
            lam[si[k]] += 1
            theta[sj[k]] -= 1


cdef inline bint _dominant(const long* lam, Py_ssize_t M,
                           const long* theta, Py_ssize_t N) nogil:
    return _non_increasing(lam, M) and _non_increasing(theta, N)


cdef inline bint _cond_b(const long* lam, const long* theta, Py_ssize_t M, long p) nogil:
    # adjacent equal chain entries force the diagonal sum to vanish
    cdef Py_ssize_t i
    for i in range(M):
        if theta[i] == theta[i + 1] and not _congruent(theta[i] + lam[i], p):
            return False
    for i in range(1, M):
        if lam[i - 1] == lam[i] and not _congruent(theta[i] + lam[i], p):
            return False
    return True


cdef inline bint _mixed(const long* lam, Py_ssize_t M,
                        const long* theta, Py_ssize_t N, long p) nogil:
    return _dominant(lam, M, theta, N) and _cond_b(lam, theta, M, p)


cdef inline bint _relevant(const long* lam, Py_ssize_t M,
                           const long* theta, Py_ssize_t N, long p, bint increasing) nogil:
    if increasing:
        if not (_non_decreasing(lam, M) and _non_decreasing(theta, N)):
            return False
    else:
        if not (_non_increasing(lam, M) and _non_increasing(theta, N)):
            return False
    return _cond_b(lam, theta, M, p)


cdef inline bint _eq(const long* a, const long* b, Py_ssize_t n) nogil:
    cdef Py_ssize_t k
    for k in range(n):
        if a[k] != b[k]:
            return False
    return True


cdef inline long _sum(const long* a, Py_ssize_t n) nogil:
    cdef long s = 0
    cdef Py_ssize_t k
    for k in range(n):
        s += a[k]
    return s


cdef tuple _tup(const long* a, Py_ssize_t n):
    cdef Py_ssize_t k
    return tuple([a[k] for k in range(n)])


cdef void _check_rank(Py_ssize_t M, Py_ssize_t N) except *:
    if M < 0 or N < 1 or M >= N:
        raise ValueError(f"invalid rank ({M}|{N})")
    if M + N > MAXN:
        raise ValueError(f"compiled backend supports M+N <= {MAXN}, got {M + N}")


cdef Py_ssize_t _load_steps(object steps, long* si, long* sj) except -1:
    cdef Py_ssize_t k = 0
    cdef long i, j
    for pair in steps:
        if k >= MAXSTEPS:
            raise ValueError("too many steps for the compiled backend")
        i = pair[0]
        j = pair[1]
        si[k] = i - 1
        sj[k] = j - 1
        k += 1
    return k


cdef Py_ssize_t _load_weight(object lam, object theta, long* wl, long* wt) except -1:
    cdef Py_ssize_t M = len(lam), N = len(theta), k
    _check_rank(M, N)
    for k in range(M):
        wl[k] = lam[k]
    for k in range(N):
        wt[k] = theta[k]
    return M


def forward_raw(lam, theta, p, steps):
    """Transform without trace: plain tuples in, plain tuples out."""
    cdef long wl[MAXN]
    cdef long wt[MAXN]
    cdef long si[MAXSTEPS]
    cdef long sj[MAXSTEPS]
    cdef Py_ssize_t M = _load_weight(lam, theta, wl, wt)
    cdef Py_ssize_t N = len(theta)
    cdef Py_ssize_t ns = _load_steps(steps, si, sj)
    _forward(wl, wt, p, si, sj, ns)
    return _tup(wl, M), _tup(wt, N)


def inverse_raw(lam, theta, p, steps):
    cdef long wl[MAXN]
    cdef long wt[MAXN]
    cdef long si[MAXSTEPS]
    cdef long sj[MAXSTEPS]
    cdef Py_ssize_t M = _load_weight(lam, theta, wl, wt)
    cdef Py_ssize_t N = len(theta)
    cdef Py_ssize_t ns = _load_steps(steps, si, sj)
    _inverse(wl, wt, p, si, sj, ns)
    return _tup(wl, M), _tup(wt, N)


def is_dominant_raw(lam, theta):
    cdef long wl[MAXN]
    cdef long wt[MAXN]
    cdef Py_ssize_t M = _load_weight(lam, theta, wl, wt)
    return bool(_dominant(wl, M, wt, len(theta)))


def is_mixed_raw(lam, theta, p):
    cdef long wl[MAXN]
    cdef long wt[MAXN]
    cdef Py_ssize_t M = _load_weight(lam, theta, wl, wt)
    return bool(_mixed(wl, M, wt, len(theta), p))


def is_relevant_raw(lam, theta, p, increasing):
    cdef long wl[MAXN]
    cdef long wt[MAXN]
    cdef Py_ssize_t M = _load_weight(lam, theta, wl, wt)
    return bool(_relevant(wl, M, wt, len(theta), p, 1 if increasing else 0))


def scan_image(M, N, p, lo, hi, steps, failure_cap):
    """One pass over the box checking both directions of the set equality."""
    cdef Py_ssize_t cM = M, cN = N, n = cM + cN, k
    cdef long cp = p, clo = lo, chi = hi
    cdef Py_ssize_t cap = failure_cap
    _check_rank(cM, cN)
    if clo > chi:
        raise ValueError(f"box requires lo <= hi, got {lo}:{hi}")
    cdef long si[MAXSTEPS]
    cdef long sj[MAXSTEPS]
    cdef Py_ssize_t ns = _load_steps(steps, si, sj)
    cdef long coords[MAXN]
    cdef long wl[MAXN]
    cdef long wt[MAXN]
    cdef long total = 0
    cdef long* lam = coords
    cdef long* theta = coords + cM
    failures = []
    for k in range(n):
        coords[k] = clo
    while True:
        if _dominant(lam, cM, theta, cN):
            total += 1
            for k in range(cM):
                wl[k] = lam[k]
            for k in range(cN):
                wt[k] = theta[k]
            _forward(wl, wt, cp, si, sj, ns)
            if not _mixed(wl, cM, wt, cN, cp):
                if len(failures) < cap:
                    failures.append(("forward_not_in_mixed", _tup(lam, cM), _tup(theta, cN)))
            _inverse(wl, wt, cp, si, sj, ns)
            if not (_eq(wl, lam, cM) and _eq(wt, theta, cN)):
                if len(failures) < cap:
                    failures.append(("inverse_forward_roundtrip", _tup(lam, cM), _tup(theta, cN)))
        if _mixed(lam, cM, theta, cN, cp):
            total += 1
            for k in range(cM):
                wl[k] = lam[k]
            for k in range(cN):
                wt[k] = theta[k]
            _inverse(wl, wt, cp, si, sj, ns)
            if not _dominant(wl, cM, wt, cN):
                if len(failures) < cap:
                    failures.append(("inverse_not_in_dominant", _tup(lam, cM), _tup(theta, cN)))
            _forward(wl, wt, cp, si, sj, ns)
            if not (_eq(wl, lam, cM) and _eq(wt, theta, cN)):
                if len(failures) < cap:
                    failures.append(("forward_inverse_roundtrip", _tup(lam, cM), _tup(theta, cN)))
        k = n - 1
        while k >= 0:
            coords[k] += 1
            if coords[k] <= chi:
                break
            coords[k] = clo
            k -= 1
        if k < 0:
            break
    return total, failures


def scan_theorem(M, N, p, lo, hi, steps, failure_cap):
    """Predicate vs algorithm on every weight in the box."""
    cdef Py_ssize_t cM = M, cN = N, n = cM + cN, k
    cdef long cp = p, clo = lo, chi = hi
    cdef Py_ssize_t cap = failure_cap
    _check_rank(cM, cN)
    if clo > chi:
        raise ValueError(f"box requires lo <= hi, got {lo}:{hi}")
    cdef long si[MAXSTEPS]
    cdef long sj[MAXSTEPS]
    cdef Py_ssize_t ns = _load_steps(steps, si, sj)
    cdef long coords[MAXN]
    cdef long wl[MAXN]
    cdef long wt[MAXN]
    cdef long total = 0
    cdef bint pred, alg
    cdef long* lam = coords
    cdef long* theta = coords + cM
    failures = []
    for k in range(n):
        coords[k] = clo
    while True:
        total += 1
        pred = _relevant(lam, cM, theta, cN, cp, 0)
        for k in range(cM):
            wl[k] = lam[k]
        for k in range(cN):
            wt[k] = theta[k]
        _inverse(wl, wt, cp, si, sj, ns)
        alg = 0
        if _dominant(wl, cM, wt, cN):
            _forward(wl, wt, cp, si, sj, ns)
            alg = _eq(wl, lam, cM) and _eq(wt, theta, cN)
        if pred != alg:
            if len(failures) < cap:
                failures.append(
                    ("theorem_mismatch", _tup(lam, cM), _tup(theta, cN), bool(pred), bool(alg))
                )
        k = n - 1
        while k >= 0:
            coords[k] += 1
            if coords[k] <= chi:
                break
            coords[k] = clo
            k -= 1
        if k < 0:
            break
    return total, failures


def scan_order(M, N, p, lo, hi, ref_steps, orders, failure_cap):
    """Every supplied order vs the reference order, on dominant weights."""
    cdef Py_ssize_t cM = M, cN = N, n = cM + cN, k, o
    cdef long cp = p, clo = lo, chi = hi
    cdef Py_ssize_t cap = failure_cap
    _check_rank(cM, cN)
    if clo > chi:
        raise ValueError(f"box requires lo <= hi, got {lo}:{hi}")
    cdef long ri[MAXSTEPS]
    cdef long rj[MAXSTEPS]
    cdef Py_ssize_t ns = _load_steps(ref_steps, ri, rj)
    cdef Py_ssize_t n_orders = len(orders)
    cdef long* osi = <long*> malloc(n_orders * ns * sizeof(long) + 1)
    cdef long* osj = <long*> malloc(n_orders * ns * sizeof(long) + 1)
    if osi == NULL or osj == NULL:
        free(osi)
        free(osj)
        raise MemoryError()
    cdef long coords[MAXN]
    cdef long ref_l[MAXN]
    cdef long ref_t[MAXN]
    cdef long wl[MAXN]
    cdef long wt[MAXN]
    cdef long total = 0
    cdef long* lam = coords
    cdef long* theta = coords + cM
    failures = []
    try:
        for o in range(n_orders):
            if len(orders[o]) != ns:
                raise ValueError("every order must have the same number of steps")
            _load_steps(orders[o], osi + o * ns, osj + o * ns)
        for k in range(n):
            coords[k] = clo
        while True:
            if _dominant(lam, cM, theta, cN):
                for k in range(cM):
                    ref_l[k] = lam[k]
                for k in range(cN):
                    ref_t[k] = theta[k]
                _forward(ref_l, ref_t, cp, ri, rj, ns)
                for o in range(n_orders):
                    total += 1
                    for k in range(cM):
                        wl[k] = lam[k]
                    for k in range(cN):
                        wt[k] = theta[k]
                    _forward(wl, wt, cp, osi + o * ns, osj + o * ns, ns)
                    if not (_eq(wl, ref_l, cM) and _eq(wt, ref_t, cN)):
                        if len(failures) < cap:
                            failures.append(
                                ("order_mismatch", _tup(lam, cM), _tup(theta, cN), o)
                            )
            k = n - 1
            while k >= 0:
                coords[k] += 1
                if coords[k] <= chi:
                    break
                coords[k] = clo
                k -= 1
            if k < 0:
                break
    finally:
        free(osi)
        free(osj)
    return total, failures


def scan_trace(M, N, p, lo, hi, steps_v1, steps_v2, failure_cap):
    """Per-step invariants over both canonical orders, on dominant weights."""
    cdef Py_ssize_t cM = M, cN = N, n = cM + cN, k, step, tag
    cdef long cp = p, clo = lo, chi = hi
    cdef Py_ssize_t cap = failure_cap
    _check_rank(cM, cN)
    if clo > chi:
        raise ValueError(f"box requires lo <= hi, got {lo}:{hi}")
    cdef long s1i[MAXSTEPS]
    cdef long s1j[MAXSTEPS]
    cdef long s2i[MAXSTEPS]
    cdef long s2j[MAXSTEPS]
    cdef Py_ssize_t ns1 = _load_steps(steps_v1, s1i, s1j)
    cdef Py_ssize_t ns2 = _load_steps(steps_v2, s2i, s2j)
    cdef long coords[MAXN]
    cdef long wl[MAXN]
    cdef long wt[MAXN]
    cdef long total = 0
    cdef long base, s_before
    cdef long i, j
    cdef long* lam = coords
    cdef long* theta = coords + cM
    cdef long* si
    cdef long* sj
    cdef Py_ssize_t ns
    failures = []

    for k in range(n):
        coords[k] = clo
    while True:
        if _dominant(lam, cM, theta, cN):
            total += 1
            base = _sum(lam, cM) + _sum(theta, cN)
            for tag in range(2):
                if tag == 0:
                    si = s1i
                    sj = s1j
                    ns = ns1
                else:
                    si = s2i
                    sj = s2j
                    ns = ns2
                for k in range(cM):
                    wl[k] = lam[k]
                for k in range(cN):
                    wt[k] = theta[k]
                for step in range(ns):
                    i = si[step]
                    j = sj[step]
                    s_before = wl[i] + wt[j]
                    if not _congruent(s_before, cp):
                        wl[i] -= 1
                        wt[j] += 1
                    if tag == 0:
                        if not _non_increasing(wl, cM):
                            if len(failures) < cap:
                                failures.append(
                                    ("lambda_monotone_v1", _tup(lam, cM), _tup(theta, cN), step + 1)
                                )
                    else:
                        if not _non_increasing(wt, cM + 1):
                            if len(failures) < cap:
                                failures.append(
                                    ("theta_monotone_v2", _tup(lam, cM), _tup(theta, cN), step + 1)
                                )
                    if _sum(wl, cM) + _sum(wt, cN) != base:
                        if len(failures) < cap:
                            failures.append(
                                ("sum_conservation_v1" if tag == 0 else "sum_conservation_v2",
                                 _tup(lam, cM), _tup(theta, cN), step + 1)
                            )
                    if not _congruent(wl[i] + wt[j] - s_before, cp):
                        if len(failures) < cap:
                            failures.append(
                                ("congruence_memory_v1" if tag == 0 else "congruence_memory_v2",
                                 _tup(lam, cM), _tup(theta, cN), step + 1)
                            )
                    if not _eq(wt + cM + 1, theta + cM + 1, cN - cM - 1):
                        if len(failures) < cap:
                            failures.append(
                                ("dummy_theta_v1" if tag == 0 else "dummy_theta_v2",
                                 _tup(lam, cM), _tup(theta, cN), step + 1)
                            )
        k = n - 1
        while k >= 0:
            coords[k] += 1
            if coords[k] <= chi:
                break
            coords[k] = clo
            k -= 1
        if k < 0:
            break
    return total, failures
