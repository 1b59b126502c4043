"""Acceptance suite: one test per criterion, one summary line per criterion.

Run with ``pytest tests/test_acceptance.py -v`` (or ``python tests/test_acceptance.py``);
the "acceptance criteria" section at the end of the run lists PASS/FAIL.
Fuzzed suites use fixed seeds and at least 200 cases each.
"""
import functools
import random
from itertools import combinations, product
from math import gcd

import sympy

from conftest import CRITERIA, labels, random_artinian_algebra, random_complex, random_graph
from wlpkit.complex import SimplicialComplex, simplex
from wlpkit.graphs import cremona_shape, daonair_wlp1, monomial_wlp1
from wlpkit.incidence import (
    EquigeneratedIdeal,
    facet_ideal_skeleton,
    incidence_ideal,
    incidence_matrix,
    loopgraph_incidence,
    multiplication_matrix,
)
from wlpkit.lefschetz import slp_degree1, wlp_degree, wlp_report
from wlpkit.linalg import (
    FailureKind,
    FailureSet,
    determinant,
    determinantal_divisors,
    full_rank_failure_primes,
    maximal_minors,
    rank_mod_p,
    rank_q,
    smith_normal_form,
)
from wlpkit.monomial import LoopGraph, Monomial, MonomialAlgebra, MonomialIdeal, squarefree_reduction
from wlpkit.multiplicity import (
    analytic_spread,
    failure_char_set,
    is_birational,
    last_mixed_mult,
    mixed_mult_positive,
    polytope_normalized_volume,
)

CASES = 200


def criterion(key, title):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            CRITERIA[key] = (title, False)
            fn(*args, **kwargs)
            CRITERIA[key] = (title, True)
        return wrapper
    return deco


def example1():
    return SimplicialComplex([["a", "b", "c"], ["a", "c", "d"], ["b", "c", "d"]])


def sympy_minor_gcds(rows):
    """g_1, ..., g_r from every k x k minor, via sympy determinants."""
    r, c = len(rows), len(rows[0])
    out = []
    for k in range(1, min(r, c) + 1):
        g = 0
        for rs in combinations(range(r), k):
            for cs in combinations(range(c), k):
                g = gcd(g, int(sympy.Matrix([[rows[i][j] for j in cs] for i in rs]).det()))
        out.append(g)
    return out


# -- transcribed displays ----------------------------------------------------

M1 = [[1, 1, 0, 0], [1, 0, 1, 0], [1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 1], [0, 0, 1, 1]]
M2 = [[1, 1, 0, 1, 0, 0], [0, 1, 1, 0, 0, 1], [0, 0, 0, 1, 1, 1]]
SEC6_ROWS = ["x1^2", "x3^2", "x1*x2", "x1*x4", "x2*x3", "x2*x4", "x3*x4"]
SEC6_LOOP = [[2, 0, 0, 0], [0, 0, 2, 0], [1, 1, 0, 0], [1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 1], [0, 0, 1, 1]]
SEC6_MULT = [[1, 0, 0, 0], [0, 0, 1, 0], [1, 1, 0, 0], [1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 1], [0, 0, 1, 1]]
R10_COLS = ["abc", "abd", "abe", "acd", "ace", "ade", "bcd", "bce", "bde", "cde"]
R10_ROWS = ["abcd", "abce", "abde", "acde", "bcde"]
R10 = [[1, 1, 0, 1, 0, 0, 1, 0, 0, 0], [1, 0, 1, 0, 1, 0, 0, 1, 0, 0], [0, 1, 1, 0, 0, 1, 0, 0, 1, 0],
       [0, 0, 0, 1, 1, 1, 0, 0, 0, 1], [0, 0, 0, 0, 0, 0, 1, 1, 1, 1]]


@criterion("1", "incidence matrices M(Δ,1), M(Δ,2) of the four-vertex example")
def test_c1_incidence_matrices():
    d = example1()
    m1, m2 = incidence_matrix(d, 1), incidence_matrix(d, 2)
    assert m1.rows == ("ab", "ac", "ad", "bc", "bd", "cd") and m1.cols == ("a", "b", "c", "d")
    assert m1.matrix.tolist() == M1
    assert m2.rows == ("abc", "acd", "bcd") and m2.cols == m1.rows
    assert m2.matrix.tolist() == M2


@criterion("2", "analytic spreads 4, 3, 3, 4")
def test_c2_spreads():
    d = example1()
    assert analytic_spread(incidence_ideal(d, 1)) == 4
    assert analytic_spread(incidence_ideal(d, 2)) == 3
    assert analytic_spread(facet_ideal_skeleton(d, 2)) == 3
    assert analytic_spread(facet_ideal_skeleton(d, 1)) == 4


@criterion("3", "WLP in all degrees, SLP in degree 1, degree-1 failure {2}, minors in {0,±2}")
def test_c3_verdicts():
    d = example1()
    alg = squarefree_reduction(d)
    assert all(wlp_degree(alg, i, 0) for i in range(alg.socle_degree + 1))
    assert slp_degree1(d).holds
    report = wlp_report(alg)
    assert report.degrees[1].failure == FailureSet.of_primes([2])
    minors = maximal_minors(incidence_matrix(d, 1))
    oracle = [int(sympy.Matrix([M1[k] for k in sub]).det()) for sub in combinations(range(6), 4)]
    assert minors == oracle and len(minors) == 15
    assert set(minors) <= {0, 2, -2}
    g = 0
    for x in minors:
        g = gcd(g, x)
    assert g == 2


@criterion("4", "16x16 multiplication matrix: det -192, failure {2,3}, not birational")
def test_c4_nonzerodet():
    xs = [f"x{k}" for k in range(1, 8)]
    gens = [f"x{k}^2" for k in range(1, 8)] + ["x3*x4", "x4*x6", "x1*x7", "x4*x7", "x5*x7"]
    alg = MonomialAlgebra(MonomialIdeal(xs, gens))
    m = multiplication_matrix(alg, 2)
    assert m.shape == (16, 16) and m.stochastic_degree == 3
    det = determinant(m)
    assert det == -192
    assert abs(det) == abs(int(sympy.Matrix(m.matrix.tolist()).det()))
    assert full_rank_failure_primes(m) == FailureSet.of_primes([2, 3])
    res = is_birational([Monomial(r) for r in m.matrix.rows])
    assert not res.birational and res.degree == 3


@criterion("5", "degree-one example: 7x4 matrices, monomial_wlp1, failure NONE")
def test_c5_section6():
    xs = ["x1", "x2", "x3", "x4"]
    alg = MonomialAlgebra(MonomialIdeal(xs, ["x1*x3", "x1*x2*x4", "x1^3", "x2^2", "x3^5", "x4^2"]))
    mult = multiplication_matrix(alg, 1).reorder_rows(SEC6_ROWS)
    loop = loopgraph_incidence(alg.underlying_graph).reorder_rows(SEC6_ROWS)
    assert mult.cols == loop.cols == tuple(xs)
    assert mult.matrix.tolist() == SEC6_MULT
    assert loop.matrix.tolist() == SEC6_LOOP
    assert monomial_wlp1(alg)
    assert full_rank_failure_primes(multiplication_matrix(alg, 1)).kind is FailureKind.NONE


@criterion("6", "[ac : ad : bc : cd] is birational")
def test_c6_cremona():
    from wlpkit.monomial import parse_monomial

    res = is_birational([parse_monomial(t, "abcd") for t in ["a*c", "a*d", "b*c", "c*d"]])
    assert res.birational and abs(res.determinant) == 2 and res.degree == 2


@criterion("7", "M(Δ,3) of the 5-vertex simplex, rank 5")
def test_c7_r10():
    m = incidence_matrix(simplex("abcde"), 3)
    assert list(m.rows) == R10_ROWS and list(m.cols) == R10_COLS
    assert m.matrix.tolist() == R10
    assert rank_q(m) == 5 == sympy.Matrix(R10).rank()


@criterion("8", "derived values: SNF (1,1,1,2), e = 4, divisors (1,1,1)")
def test_c8_derived():
    d = example1()
    g = sympy_minor_gcds(M1)
    assert [g[0]] + [g[k] // g[k - 1] for k in range(1, 4)] == [1, 1, 1, 2]
    assert smith_normal_form(incidence_matrix(d, 1)).invariant_factors == (1, 1, 1, 2)

    def lattice_count(t):
        return sum(1 for x in product(range(t + 1), repeat=4) if sum(x) == 2 * t)

    c = [lattice_count(t) for t in range(4)]
    assert c[3] - 3 * c[2] + 3 * c[1] - c[0] == 4
    assert last_mixed_mult(incidence_ideal(d, 1)) == 4

    assert sympy_minor_gcds(M2) == [1, 1, 1]
    assert determinantal_divisors(incidence_matrix(d, 2)) == (1, 1, 1)


# -- criterion 9: property suites --------------------------------------------

def _components(verts, edges):
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in edges:
        parent[find(u)] = find(v)
    groups = {}
    for v in verts:
        groups.setdefault(find(v), []).append(v)
    return list(groups.values())


def _bipartite_components(verts, edges):
    count = 0
    for comp in _components(verts, edges):
        cs = set(comp)
        sub = [(u, v) for u, v in edges if u in cs]
        if any(u == v for u, v in sub):
            continue
        color = {comp[0]: 0}
        changed = True
        ok = True
        while changed and ok:
            changed = False
            for u, v in sub:
                for a, b in ((u, v), (v, u)):
                    if a in color and b not in color:
                        color[b] = 1 - color[a]
                        changed = True
                    elif a in color and color[a] == color[b]:
                        ok = False
        count += ok
    return count


@criterion("9.1", "rank of a graph incidence matrix is n - (bipartite components)")
def test_c9_bip():
    rng = random.Random(901)
    for _ in range(CASES):
        n = rng.randint(1, 12)
        d = random_graph(rng, n, p=rng.choice([0.1, 0.2, 0.3, 0.5]))
        edges = [tuple(e) for e in d.faces(1)]
        expected = n - _bipartite_components(d.vertices, edges)
        if edges:
            assert rank_q(incidence_matrix(d, 1)) == expected
        else:
            assert expected == 0


def _power_of_two(x):
    x = abs(x)
    return x & (x - 1) == 0


@criterion("9.2", "maximal minors of 2-stochastic 0/1/2 matrices are 0 or ±2^k")
def test_c9_maincor():
    rng = random.Random(902)
    for _ in range(CASES):
        n = rng.randint(1, 7)
        verts = tuple(labels(n))
        pool = [(u, u) for u in verts] + list(combinations(verts, 2))
        e = rng.randint(n + 1, min(len(pool), n + 4)) if len(pool) > n else None
        if e is None:
            continue
        g = LoopGraph(verts, tuple(rng.sample(pool, e)))
        m = loopgraph_incidence(g)
        minors = maximal_minors(m)
        for x in minors:
            assert x == 0 or _power_of_two(x)
        for sub in rng.sample(list(combinations(range(e), n)), min(3, len(minors))):
            rows = [m.matrix.rows[k] for k in sub]
            assert int(sympy.Matrix(rows).det()) == minors[list(combinations(range(e), n)).index(sub)]


def _random_connected_unicyclic(rng, n):
    verts = labels(n)
    edges = set()
    for k in range(1, n):
        edges.add((verts[rng.randrange(k)], verts[k]))
    pool = [(u, u) for u in verts] + [e for e in combinations(verts, 2) if e not in edges]
    edges.add(rng.choice(pool))
    return LoopGraph(tuple(verts), tuple(edges))


@criterion("9.3", "|V| = |E| connected graphs: nonzero determinant iff odd unicyclic or tree plus loop")
def test_c9_simis_villarreal():
    rng = random.Random(903)
    done = 0
    seen = set()
    while done < CASES:
        g = _random_connected_unicyclic(rng, rng.randint(2, 8))
        if any(all(v in e for e in g.edges) for v in g.vertices):
            continue  # edge monomials share a variable
        m = loopgraph_incidence(g)
        det = int(sympy.Matrix(m.matrix.tolist()).det())
        assert (det != 0) == cremona_shape(g)
        assert determinant(m) == det
        if det != 0:
            assert is_birational([Monomial(r) for r in m.matrix.rows]).birational
        seen.add(det != 0)
        done += 1
    assert seen == {True, False}


@criterion("9.4", "skeleton criterion for degree-one WLP agrees with rank")
def test_c9_daonair():
    rng = random.Random(904)
    done = 0
    seen = set()
    while done < CASES:
        d = random_complex(rng, rng.randint(2, 8), max_dim=rng.randint(1, 3))
        if d.f(1) == 0:
            continue  # no edges: vacuous degree
        full = rank_q(incidence_matrix(d, 1)) == min(d.f(0), d.f(1))
        assert daonair_wlp1(d) == full
        seen.add((d.f(1) >= d.f(0), full))
        done += 1
    assert len(seen) == 4


@criterion("9.5", "underlying-graph criterion for degree-one WLP agrees with rank (arbitrary ideals)")
def test_c9_arbitrary_degree1():
    rng = random.Random(905)
    done = 0
    seen = set()
    while done < CASES:
        alg = random_artinian_algebra(rng, rng.randint(1, 6))
        if alg.dim(1) > alg.dim(2) or alg.dim(1) == 0:
            continue
        m = multiplication_matrix(alg, 1)
        full = rank_q(m) == alg.dim(1)
        assert monomial_wlp1(alg) == full
        for p in (3, 5, 7):
            assert (rank_mod_p(m, p) == alg.dim(1)) == full
        seen.add(full)
        done += 1
    assert seen == {True, False}


def _mm_route(d, i):
    lo, hi = d.f(i - 1), d.f(i)
    ideal = incidence_ideal(d, i)
    if lo <= hi:
        if lo > 10 or len(ideal.generators) > 64:
            return None
        return last_mixed_mult(ideal) > 0
    return mixed_mult_positive(lo - hi, hi - 1, ideal)


@criterion("9.6", "rank, spread and mixed-multiplicity routes agree in characteristic zero")
def test_c9_routes():
    rng = random.Random(906)
    done = 0
    seen = set()
    mm_checked = 0
    while done < CASES:
        d = random_complex(rng, rng.randint(2, 7), max_dim=3)
        for i in range(1, d.dim + 1):
            lo, hi = d.f(i - 1), d.f(i)
            full = rank_q(incidence_matrix(d, i)) == min(lo, hi)
            assert (analytic_spread(incidence_ideal(d, i)) == min(lo, hi)) == full
            mm = _mm_route(d, i)
            if mm is not None:
                assert mm == full
                mm_checked += 1
            seen.add(full)
            done += 1
    assert mm_checked >= CASES // 2
    assert seen == {True, False}


@criterion("9.7", "Smith form predicts the rank modulo every small prime")
def test_c9_snf_mod_p():
    rng = random.Random(907)
    for _ in range(CASES):
        r, c = rng.randint(1, 7), rng.randint(1, 7)
        rows = [[rng.randint(-6, 6) if rng.random() < 0.6 else 0 for _ in range(c)] for _ in range(r)]
        snf = smith_normal_form(rows)
        for p in (2, 3, 5, 7, 11, 13):
            assert rank_mod_p(rows, p) == sum(1 for s in snf.invariant_factors if s % p)


def _random_stochastic(rng, n, d):
    v = [0] * n
    for _ in range(d):
        v[rng.randrange(n)] += 1
    return tuple(v)


@criterion("9.8", "(i+1)·e(S) = |det log(S)| for square incidence subsystems and stochastic simplices")
def test_c9_det_volume_identity():
    rng = random.Random(908)
    done = 0
    while done < CASES:
        if done % 2:
            n, deg = rng.randint(1, 6), rng.randint(1, 4)
            pts = [_random_stochastic(rng, n, deg) for _ in range(n)]
        else:
            d = random_complex(rng, rng.randint(3, 7), max_dim=2)
            i = rng.choice([1, 2])
            if i > d.dim or d.f(i - 1) > d.f(i) or d.f(i - 1) > 10:
                continue
            ideal = incidence_ideal(d, i)
            n, deg = ideal.nvars, i + 1
            pts = [m.exponents for m in rng.sample(ideal.generators, n)]
        det = int(sympy.Matrix(pts).det())
        if len(set(pts)) < len(pts):
            assert det == 0
        else:
            assert deg * polytope_normalized_volume(pts) == abs(det)
        done += 1


@criterion("9.9", "normalized volume does not depend on the dropped coordinate")
def test_c9_drop_invariance():
    rng = random.Random(909)
    for _ in range(CASES):
        n, deg = rng.randint(2, 6), rng.randint(1, 3)
        pts = [_random_stochastic(rng, n, deg) for _ in range(rng.randint(1, 10))]
        vols = {polytope_normalized_volume(pts, drop=j) for j in range(n)}
        assert len(vols) == 1


@criterion("9.10", "last mixed multiplicity is monotone under inclusion of generators")
def test_c9_monotonicity():
    rng = random.Random(910)
    for _ in range(CASES):
        n, deg = rng.randint(2, 5), rng.randint(1, 3)
        big_pts = sorted({_random_stochastic(rng, n, deg) for _ in range(rng.randint(2, 12))})
        small_pts = rng.sample(big_pts, rng.randint(1, len(big_pts)))
        vs = [f"x{k}" for k in range(n)]
        big = EquigeneratedIdeal(tuple(vs), tuple(Monomial(p) for p in big_pts), deg)
        small = EquigeneratedIdeal(tuple(vs), tuple(Monomial(p) for p in small_pts), deg)
        assert last_mixed_mult(small) <= last_mixed_mult(big)


@criterion("9.11", "degree-one failure set is ALL or contained in {2} when f_0 <= f_1")
def test_c9_dichotomy():
    rng = random.Random(911)
    done = 0
    seen = set()
    while done < CASES:
        d = random_complex(rng, rng.randint(2, 8), max_dim=rng.randint(1, 3))
        if d.f(0) > d.f(1):
            continue
        fs = failure_char_set(d, 1)
        assert fs.kind is FailureKind.ALL_CHARACTERISTICS or fs.primes <= {2}
        m = incidence_matrix(d, 1)
        odd_full = {rank_mod_p(m, p) == d.f(0) for p in (3, 5, 7)}
        assert len(odd_full) == 1
        assert odd_full.pop() == (fs.kind is not FailureKind.ALL_CHARACTERISTICS)
        seen.add(fs.kind)
        done += 1
    assert seen == {FailureKind.ALL_CHARACTERISTICS, FailureKind.PRIMES}


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-v"]))
