"""Analytic spread, last mixed multiplicities as normalized volumes, and
the characteristic analysis built on them.

For an equigenerated monomial ideal J in n variables the analytic spread is
the rank of its exponent vectors, and the mixed multiplicity
e_(0, n-1)(m | J) is the normalized (n-1)-volume of the exponent polytope
after dropping one coordinate.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, gcd

from .complex import SimplicialComplex
from .errors import CrossCheckError, PreconditionError
from .incidence import EquigeneratedIdeal, incidence_ideal, incidence_matrix, log_matrix
from .linalg import (
    MINOR_ENUMERATION_BOUND,
    FailureSet,
    IntegerMatrix,
    determinant,
    full_rank_failure_primes,
    prime_factors,
    rank_q,
)

MAX_AMBIENT_DIM = 10
MAX_POINTS = 64


def analytic_spread(ideal: EquigeneratedIdeal) -> int:
    if not ideal.generators:
        raise PreconditionError("analytic spread of the zero ideal")
    return rank_q(log_matrix(ideal.generators, ideal.variables))


def _square_system(monomials):
    monomials = list(monomials)
    n = len(monomials)
    if n == 0:
        raise PreconditionError("empty monomial system")
    if any(m.nvars != n for m in monomials):
        raise PreconditionError(f"need {n} monomials in {n} variables")
    degs = {m.degree for m in monomials}
    if len(degs) != 1:
        raise PreconditionError(f"monomials of unequal degrees {sorted(degs)}")
    d = degs.pop()
    if d < 1:
        raise PreconditionError("degree must be at least 1")
    return IntegerMatrix([m.exponents for m in monomials], n), d


def simplex_mixed_mult(monomials) -> int:
    """|det log(S)| / d for a square system S of degree-d monomials."""
    mat, d = _square_system(monomials)
    det = determinant(mat)
    if det % d:
        raise CrossCheckError(f"determinant {det} of a {d}-stochastic matrix not divisible by {d}")
    return abs(det) // d


@dataclass(frozen=True)
class BirationalResult:
    birational: bool
    determinant: int
    degree: int


def is_birational(monomials) -> BirationalResult:
    """The monomial map is a Cremona transformation iff det log(M) = +-d."""
    mat, d = _square_system(monomials)
    det = determinant(mat)
    return BirationalResult(abs(det) == d, det, d)


# -- exact hull volume ------------------------------------------------------

def _orient(pts, face, q):
    """Sign of det[f_1 - f_0, ..., f_{D-1} - f_0, q - f_0]."""
    base = pts[face[0]]
    rows = [[a - b for a, b in zip(pts[k], base)] for k in face[1:]]
    rows.append([a - b for a, b in zip(pts[q], base)])
    det = determinant(IntegerMatrix(rows, len(base)))
    return (det > 0) - (det < 0)


def _simplex_volume(pts, simplex):
    base = pts[simplex[0]]
    rows = [[a - b for a, b in zip(pts[k], base)] for k in simplex[1:]]
    return abs(determinant(IntegerMatrix(rows, len(base))))


def hull_normalized_volume(points) -> int:
    """D! times the D-volume of the convex hull of integer points in R^D.

    Beneath-beyond placing triangulation in canonical (sorted) point order
    with exact integer orientation tests.  Points lying on or inside the
    current hull are skipped, which also disposes of coplanar cases.
    """
    pts = sorted(set(tuple(p) for p in points))
    if not pts:
        raise PreconditionError("empty point set")
    dim = len(pts[0])
    if dim == 0:
        return 1
    diffs = IntegerMatrix([[a - b for a, b in zip(p, pts[0])] for p in pts], dim)
    if rank_q(diffs) < dim:
        return 0
    # initial simplex: greedily grow an affinely independent set
    simplex = [0]
    for k in range(1, len(pts)):
        trial = simplex + [k]
        rows = [[a - b for a, b in zip(pts[j], pts[0])] for j in trial[1:]]
        if rank_q(IntegerMatrix(rows, dim)) == len(trial) - 1:
            simplex = trial
            if len(simplex) == dim + 1:
                break
    volume = _simplex_volume(pts, simplex)
    # boundary facet -> a vertex strictly on its inner side
    facets = {}
    for v in simplex:
        facets[tuple(u for u in simplex if u != v)] = v
    placed = set(simplex)
    for q in range(len(pts)):
        if q in placed:
            continue
        placed.add(q)
        visible = [f for f, ref in facets.items()
                   if _orient(pts, f, q) * _orient(pts, f, ref) < 0]
        if not visible:
            continue
        ridge_count = {}
        for f in visible:
            volume += _simplex_volume(pts, f + (q,))
            for v in f:
                ridge = tuple(u for u in f if u != v)
                if ridge in ridge_count:
                    ridge_count[ridge] = None
                else:
                    ridge_count[ridge] = v
        for f in visible:
            del facets[f]
        for ridge, v in ridge_count.items():
            if v is not None:
                facets[tuple(sorted(ridge + (q,)))] = v
    return volume


def polytope_normalized_volume(points, drop: int = 0) -> int:
    """Normalized volume of the hull of d-stochastic points after dropping a coordinate.

    ``points`` are integer vectors in R^n with a common coordinate sum; the
    result is (n-1)! V_{n-1} of their projection, 0 when lower-dimensional.
    """
    points = [tuple(p) for p in points]
    if not points:
        raise PreconditionError("empty point set")
    n = len(points[0])
    if not 1 <= n <= MAX_AMBIENT_DIM:
        raise PreconditionError(f"ambient dimension {n} outside 1..{MAX_AMBIENT_DIM}")
    if len(set(points)) > MAX_POINTS:
        raise PreconditionError(f"more than {MAX_POINTS} points")
    if any(len(p) != n for p in points):
        raise PreconditionError("points of different lengths")
    if len({sum(p) for p in points}) != 1:
        raise PreconditionError("points do not share a coordinate sum")
    return hull_normalized_volume([p[:drop] + p[drop + 1:] for p in points])


def last_mixed_mult(ideal: EquigeneratedIdeal) -> int:
    """e_(0, n-1)(m | J), the normalized volume of J's exponent polytope."""
    if not ideal.generators:
        raise PreconditionError("mixed multiplicity of the zero ideal")
    return polytope_normalized_volume([g.exponents for g in ideal.generators])


def mixed_mult_positive(a: int, b: int, ideal: EquigeneratedIdeal) -> bool:
    """e_(a, b)(m | J) > 0 iff b <= l(J) - 1, for a + b = n - 1."""
    n = ideal.nvars
    if a < 0 or b < 0 or a + b != n - 1:
        raise PreconditionError(f"index ({a}, {b}) must be nonnegative and sum to {n - 1}")
    return b <= analytic_spread(ideal) - 1


def monotonicity_check(small: EquigeneratedIdeal, big: EquigeneratedIdeal) -> bool:
    if small.degree != big.degree:
        raise PreconditionError("ideals generated in different degrees")
    if small.variables != big.variables:
        raise PreconditionError("ideals over different variables")
    if not set(small.generators) <= set(big.generators):
        raise PreconditionError("generators of the smaller ideal are not a subset")
    return last_mixed_mult(small) <= last_mixed_mult(big)


# -- positive characteristic ------------------------------------------------

def _require_injective_side(delta, i):
    lo, hi = delta.f(i - 1), delta.f(i)
    if lo > hi:
        raise PreconditionError(
            f"requires f_(i-1) <= f_i, got {lo} > {hi}; analyse the map through the "
            "lefschetz report instead")


def failure_char_set_oracle(delta: SimplicialComplex, i: int,
                            bound: int = MINOR_ENUMERATION_BOUND) -> FailureSet:
    """Primes dividing (i+1) * gcd of e(m | I_S) over all f_(i-1)-subsets S.

    Each e(m | I_S) is computed as a hull volume, never through a
    determinant of the incidence matrix.
    """
    _require_injective_side(delta, i)
    ideal = incidence_ideal(delta, i)
    k = ideal.nvars
    if comb(len(ideal.generators), k) > bound:
        raise PreconditionError("too many subsets for the oracle")
    g = 0
    for sub in combinations(ideal.generators, k):
        g = gcd(g, polytope_normalized_volume([m.exponents for m in sub]))
        if g == 1:
            break
    if g == 0:
        return FailureSet.all_characteristics()
    return FailureSet.of_primes(prime_factors((i + 1) * g))


def failure_char_set(delta: SimplicialComplex, i: int, oracle: bool = False) -> FailureSet:
    """Characteristics in which A(Δ) fails the WLP in degree i (f_(i-1) <= f_i)."""
    _require_injective_side(delta, i)
    result = full_rank_failure_primes(incidence_matrix(delta, i))
    if oracle:
        check = failure_char_set_oracle(delta, i)
        if check != result:
            raise CrossCheckError(f"Smith route gives {result}, subset-gcd route gives {check}")
    return result


@dataclass(frozen=True)
class CharBound:
    bound: int
    excluded: frozenset

    def guarantees(self, p: int) -> bool:
        return p > self.bound and p not in self.excluded


def wlp_char_bound(delta: SimplicialComplex, i: int) -> CharBound:
    """Every prime p > e(m | I_Δ(i)) not dividing i + 1 keeps the WLP in degree i."""
    _require_injective_side(delta, i)
    if rank_q(incidence_matrix(delta, i)) < delta.f(i - 1):
        raise PreconditionError(
            f"theorem hypothesis violated: A(Δ) fails the WLP in degree {i} in characteristic zero")
    e = last_mixed_mult(incidence_ideal(delta, i))
    return CharBound(e, prime_factors(i + 1))
