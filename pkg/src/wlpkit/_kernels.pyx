# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled elimination kernels; same contract as ``_kernels_py``.

Integer entries stay Python objects (arbitrary precision); only loop
indices and the mod-p arithmetic are native.
"""
from itertools import combinations
from math import gcd

from libc.stdlib cimport malloc, free


def bareiss_rank(rows, Py_ssize_t ncols):
    cdef list a = [list(row) for row in rows]
    cdef Py_ssize_t m = len(a)
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef list pr, ai
    cdef object p, f, prev = 1
    for c in range(ncols):
        if r == m:
            break
        piv = r
        while piv < m and (<list>a[piv])[c] == 0:
            piv += 1
        if piv == m:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        pr = <list>a[r]
        p = pr[c]
        for i in range(r + 1, m):
            ai = <list>a[i]
            f = ai[c]
            if f:
                for j in range(c + 1, ncols):
                    ai[j] = (ai[j] * p - f * pr[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    ai[j] = (ai[j] * p) // prev
            ai[c] = 0
        prev = p
        r += 1
    return r


cdef object _det(list a):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t k, i, j, piv
    cdef int sign = 1
    cdef list ak, ai
    cdef object p, f, prev = 1
    if n == 0:
        return 1
    for k in range(n - 1):
        if (<list>a[k])[k] == 0:
            piv = k + 1
            while piv < n and (<list>a[piv])[k] == 0:
                piv += 1
            if piv == n:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        ak = <list>a[k]
        p = ak[k]
        for i in range(k + 1, n):
            ai = <list>a[i]
            f = ai[k]
            for j in range(k + 1, n):
                ai[j] = (ai[j] * p - f * ak[j]) // prev
        prev = p
    return sign * (<list>a[n - 1])[n - 1]


def bareiss_det(rows):
    return _det([list(r) for r in rows])


def rank_mod_p(rows, Py_ssize_t ncols, long long p):
    # caller guarantees p < 2**31 so products fit in 64 bits
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef long long inv, f, tmp
    cdef long long *a
    if m == 0 or ncols == 0:
        return 0
    a = <long long *> malloc(m * ncols * sizeof(long long))
    if a == NULL:
        raise MemoryError()
    try:
        for i in range(m):
            row = rows[i]
            for j in range(ncols):
                a[i * ncols + j] = row[j] % p
        for c in range(ncols):
            if r == m:
                break
            piv = r
            while piv < m and a[piv * ncols + c] == 0:
                piv += 1
            if piv == m:
                continue
            if piv != r:
                for j in range(ncols):
                    tmp = a[r * ncols + j]
                    a[r * ncols + j] = a[piv * ncols + j]
                    a[piv * ncols + j] = tmp
            inv = pow(<object>a[r * ncols + c], -1, <object>p)
            for j in range(c, ncols):
                a[r * ncols + j] = a[r * ncols + j] * inv % p
            for i in range(r + 1, m):
                f = a[i * ncols + c]
                if f:
                    for j in range(c, ncols):
                        tmp = (a[i * ncols + j] - f * a[r * ncols + j]) % p
                        if tmp < 0:
                            tmp += p
                        a[i * ncols + j] = tmp
            r += 1
    finally:
        free(a)
    return r


def smith_factors(rows, Py_ssize_t ncols):
    cdef list a = [list(row) for row in rows]
    cdef Py_ssize_t m = len(a), n = ncols
    cdef Py_ssize_t t = 0, i, j, pi, pj, bad
    cdef bint dirty
    cdef list ai, at, ab, factors = []
    cdef object p, q, v, best
    while t < m and t < n:
        best = None
        for i in range(t, m):
            ai = <list>a[i]
            for j in range(t, n):
                v = ai[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        pi = best[1]
        pj = best[2]
        a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for ai in a:
                ai[t], ai[pj] = ai[pj], ai[t]
        while True:
            p = (<list>a[t])[t]
            dirty = False
            at = <list>a[t]
            for i in range(t + 1, m):
                ai = <list>a[i]
                if ai[t]:
                    q = ai[t] // p
                    for j in range(t, n):
                        ai[j] -= q * at[j]
                    if ai[t]:
                        dirty = True
            for j in range(t + 1, n):
                if at[j]:
                    q = at[j] // p
                    for i in range(t, m):
                        ai = <list>a[i]
                        ai[j] -= q * ai[t]
                    if at[j]:
                        dirty = True
            if dirty:
                best = None
                for i in range(t, m):
                    v = (<list>a[i])[t]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, t)
                for j in range(t + 1, n):
                    v = at[j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), t, j)
                pi = best[1]
                pj = best[2]
                if pi != t:
                    a[t], a[pi] = a[pi], a[t]
                if pj != t:
                    for ai in a:
                        ai[t], ai[pj] = ai[pj], ai[t]
                continue
            bad = -1
            for i in range(t + 1, m):
                ai = <list>a[i]
                for j in range(t + 1, n):
                    if ai[j] % p:
                        bad = i
                        break
                if bad >= 0:
                    break
            if bad < 0:
                break
            ab = <list>a[bad]
            for j in range(t, n):
                at[j] += ab[j]
        factors.append(abs((<list>a[t])[t]))
        t += 1
    return factors


def maximal_minors(rows, Py_ssize_t ncols):
    cdef list rl = [list(r) for r in rows]
    return [_det([list(rl[i]) for i in sel])
            for sel in combinations(range(len(rl)), ncols)]


def maximal_minors_gcd(rows, Py_ssize_t ncols):
    cdef list rl = [list(r) for r in rows]
    cdef object g = 0
    for sel in combinations(range(len(rl)), ncols):
        g = gcd(g, _det([list(rl[i]) for i in sel]))
        if g == 1:
            break
    return g
