"""Both kernel backends against sympy and against each other."""
import random
from itertools import combinations
from math import gcd

import pytest
import sympy

from conftest import random_matrix


def _sympy_rank(rows, ncols):
    if not rows:
        return 0
    return sympy.Matrix(rows).rank()


def test_rank_matches_sympy(kernels):
    rng = random.Random(1)
    for _ in range(200):
        r, c = rng.randint(1, 7), rng.randint(1, 7)
        rows = random_matrix(rng, r, c, density=rng.random())
        assert kernels.bareiss_rank(rows, c) == _sympy_rank(rows, c)


def test_det_matches_sympy(kernels):
    rng = random.Random(2)
    for _ in range(200):
        n = rng.randint(1, 7)
        rows = random_matrix(rng, n, n, lo=-9, hi=9)
        assert kernels.bareiss_det(rows) == sympy.Matrix(rows).det()


def test_det_handles_zero_pivots(kernels):
    assert kernels.bareiss_det([[0, 1], [1, 0]]) == -1
    assert kernels.bareiss_det([[0, 0], [1, 1]]) == 0
    assert kernels.bareiss_det([]) == 1


def test_inputs_not_mutated(kernels):
    rows = [[2, 4], [6, 8]]
    snapshot = [r[:] for r in rows]
    kernels.bareiss_rank(rows, 2)
    kernels.bareiss_det(rows)
    kernels.smith_factors(rows, 2)
    kernels.rank_mod_p(rows, 2, 3)
    assert rows == snapshot


def test_smith_matches_sympy(kernels):
    from sympy.matrices.normalforms import invariant_factors

    rng = random.Random(3)
    for _ in range(200):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        rows = random_matrix(rng, r, c, lo=-6, hi=6)
        ours = list(kernels.smith_factors(rows, c))
        theirs = [abs(int(x)) for x in invariant_factors(sympy.Matrix(rows), domain=sympy.ZZ)
                  if x != 0]
        assert ours == theirs


def test_rank_mod_p_matches_sympy(kernels):
    rng = random.Random(4)
    for _ in range(200):
        p = rng.choice([2, 3, 5, 7])
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        rows = random_matrix(rng, r, c, lo=-4, hi=4)
        m = sympy.Matrix(rows).applyfunc(lambda x: x % p)
        from sympy.polys.matrices import DomainMatrix
        dm = DomainMatrix.from_Matrix(m).convert_to(sympy.GF(p))
        assert kernels.rank_mod_p(rows, c, p) == dm.rank()


def test_maximal_minors_brute_force(kernels):
    rng = random.Random(5)
    for _ in range(100):
        c = rng.randint(1, 4)
        r = rng.randint(c, 7)
        rows = random_matrix(rng, r, c, lo=-3, hi=3)
        expected = [sympy.Matrix([rows[k] for k in sub]).det()
                    for sub in combinations(range(r), c)]
        assert list(kernels.maximal_minors(rows, c)) == expected
        g = 0
        for x in expected:
            g = gcd(g, int(x))
        assert kernels.maximal_minors_gcd(rows, c) == g


def test_backends_agree():
    from conftest import _kernels_ext
    from wlpkit import _kernels_py

    if _kernels_ext is None:
        pytest.skip("compiled extension not built")
    rng = random.Random(6)
    for _ in range(200):
        r, c = rng.randint(1, 8), rng.randint(1, 8)
        rows = random_matrix(rng, r, c, lo=-50, hi=50)
        assert _kernels_ext.bareiss_rank(rows, c) == _kernels_py.bareiss_rank(rows, c)
        assert _kernels_ext.smith_factors(rows, c) == _kernels_py.smith_factors(rows, c)
        sq = [row[:min(r, c)] for row in rows[:min(r, c)]]
        assert _kernels_ext.bareiss_det(sq) == _kernels_py.bareiss_det(sq)


def test_big_integers(kernels):
    big = 10**40
    rows = [[big, 1], [1, big]]
    assert kernels.bareiss_det(rows) == big * big - 1
