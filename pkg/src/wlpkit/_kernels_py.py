"""Pure-Python elimination kernels.

Every function takes a list of rows (lists of Python ints) plus the column
count, and never mutates its argument.  ``_kernels.pyx`` mirrors this module
function for function; the two are kept interchangeable.
"""
from itertools import combinations
from math import gcd


def bareiss_rank(rows, ncols):
    a = [list(r) for r in rows]
    m = len(a)
    prev = 1
    r = 0
    for c in range(ncols):
        if r == m:
            break
        piv = r
        while piv < m and a[piv][c] == 0:
            piv += 1
        if piv == m:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        p = pr[c]
        for i in range(r + 1, m):
            ai = a[i]
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


def bareiss_det(rows):
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = k + 1
            while piv < n and a[piv][k] == 0:
                piv += 1
            if piv == n:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        ak = a[k]
        p = ak[k]
        for i in range(k + 1, n):
            ai = a[i]
            f = ai[k]
            for j in range(k + 1, n):
                ai[j] = (ai[j] * p - f * ak[j]) // prev
        prev = p
    return sign * a[n - 1][n - 1]


def rank_mod_p(rows, ncols, p):
    a = [[x % p for x in r] for r in rows]
    m = len(a)
    r = 0
    for c in range(ncols):
        if r == m:
            break
        piv = r
        while piv < m and a[piv][c] == 0:
            piv += 1
        if piv == m:
            continue
        a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        inv = pow(pr[c], -1, p)
        for j in range(c, ncols):
            pr[j] = pr[j] * inv % p
        for i in range(r + 1, m):
            ai = a[i]
            f = ai[c]
            if f:
                for j in range(c, ncols):
                    ai[j] = (ai[j] - f * pr[j]) % p
        r += 1
    return r


def smith_factors(rows, ncols):
    """Nonzero invariant factors, in divisibility order."""
    a = [list(r) for r in rows]
    m = len(a)
    n = ncols
    factors = []
    t = 0
    while t < m and t < n:
        # smallest nonzero entry of the trailing block becomes the pivot
        best = None
        for i in range(t, m):
            ai = a[i]
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
        _, pi, pj = best
        a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                ai = a[i]
                if ai[t]:
                    q = ai[t] // p
                    at = a[t]
                    for j in range(t, n):
                        ai[j] -= q * at[j]
                    if ai[t]:
                        dirty = True
            at = a[t]
            for j in range(t + 1, n):
                if at[j]:
                    q = at[j] // p
                    for i in range(t, m):
                        a[i][j] -= q * a[i][t]
                    if at[j]:
                        dirty = True
            if dirty:
                best = None
                for i in range(t, m):
                    v = a[i][t]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, t)
                for j in range(t + 1, n):
                    v = a[t][j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), t, j)
                _, pi, pj = best
                if pi != t:
                    a[t], a[pi] = a[pi], a[t]
                if pj != t:
                    for row in a:
                        row[t], row[pj] = row[pj], row[t]
                continue
            # pivot must divide the whole trailing block
            bad = None
            for i in range(t + 1, m):
                ai = a[i]
                for j in range(t + 1, n):
                    if ai[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            at = a[t]
            ab = a[bad]
            for j in range(t, n):
                at[j] += ab[j]
        factors.append(abs(a[t][t]))
        t += 1
    return factors


def maximal_minors(rows, ncols):
    """Determinants of every ncols-row selection, lexicographic subset order."""
    return [bareiss_det([rows[i] for i in sel])
            for sel in combinations(range(len(rows)), ncols)]


def maximal_minors_gcd(rows, ncols):
    g = 0
    for sel in combinations(range(len(rows)), ncols):
        g = gcd(g, bareiss_det([rows[i] for i in sel]))
        if g == 1:
            break
    return g
