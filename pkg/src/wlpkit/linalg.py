"""Exact integer linear algebra.

Ranks over Q and over F_p, determinants, Smith invariant factors,
determinantal divisors, maximal-minor enumeration and the set of primes in
which a matrix drops rank.  No floating point is used anywhere here.
"""
from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from itertools import permutations
from math import comb, prod

from .errors import PreconditionError

if os.environ.get("WLPKIT_PURE_PYTHON"):
    from . import _kernels_py as _k
    BACKEND = "python"
else:
    try:
        from . import _kernels as _k
        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as _k
        BACKEND = "python"

from . import _kernels_py as _kpy

MINOR_ENUMERATION_BOUND = 2_000_000
_NATIVE_PRIME_LIMIT = 2**31


class IntegerMatrix:
    """Dense immutable matrix of Python ints.

    The column count is stored explicitly so that 0-row matrices keep their
    shape.
    """

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols=None):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols required for a matrix without rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ValueError(f"row of length {len(r)} in a matrix with {ncols} columns")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __eq__(self, other):
        if isinstance(other, IntegerMatrix):
            return self.shape == other.shape and self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash((self.ncols, self.rows))

    def __repr__(self):
        return f"IntegerMatrix({[list(r) for r in self.rows]!r}, ncols={self.ncols})"

    def tolist(self):
        return [list(r) for r in self.rows]

    def transpose(self):
        return IntegerMatrix([[self.rows[i][j] for i in range(self.nrows)]
                              for j in range(self.ncols)], self.nrows)

    def select_rows(self, indices):
        return IntegerMatrix([self.rows[i] for i in indices], self.ncols)

    def scale_rows(self, factors):
        return IntegerMatrix([[f * x for x in r] for f, r in zip(factors, self.rows)], self.ncols)

    def row_sums(self):
        return [sum(r) for r in self.rows]


def as_matrix(m) -> IntegerMatrix:
    if isinstance(m, IntegerMatrix):
        return m
    if hasattr(m, "matrix") and isinstance(m.matrix, IntegerMatrix):
        return m.matrix
    return IntegerMatrix(m)


def _check_prime(p):
    from sympy import isprime

    if not isinstance(p, int) or not isprime(p):
        raise PreconditionError(f"{p!r} is not a prime")


def rank_q(m) -> int:
    m = as_matrix(m)
    return _k.bareiss_rank(m.rows, m.ncols)


def rank_mod_p(m, p: int) -> int:
    m = as_matrix(m)
    _check_prime(p)
    kernel = _k if p < _NATIVE_PRIME_LIMIT else _kpy
    return kernel.rank_mod_p(m.rows, m.ncols, p)


def rank_over(m, characteristic: int) -> int:
    """Rank over Q when ``characteristic`` is 0, else over F_p."""
    if characteristic == 0:
        return rank_q(m)
    return rank_mod_p(m, characteristic)


def determinant(m) -> int:
    m = as_matrix(m)
    if m.nrows != m.ncols:
        raise PreconditionError(f"determinant of a non-square {m.nrows}x{m.ncols} matrix")
    return _k.bareiss_det(m.rows)


def determinant_cofactor(m) -> int:
    """Leibniz-formula determinant; an oracle for small matrices only."""
    m = as_matrix(m)
    n = m.nrows
    if n != m.ncols:
        raise PreconditionError("determinant of a non-square matrix")
    if n > 8:
        raise PreconditionError("cofactor oracle is limited to n <= 8")
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        total += (-1) ** inversions * prod(m.rows[i][perm[i]] for i in range(n))
    return total


@dataclass(frozen=True)
class SmithForm:
    rank: int
    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        f = self.invariant_factors
        if any(s <= 0 for s in f) or any(f[k + 1] % f[k] for k in range(len(f) - 1)):
            raise ValueError(f"not a divisibility chain: {f}")

    @property
    def determinantal_divisors(self) -> tuple[int, ...]:
        out, acc = [], 1
        for s in self.invariant_factors:
            acc *= s
            out.append(acc)
        return tuple(out)


def smith_normal_form(m) -> SmithForm:
    """Invariant factors only; unimodular transforms are not tracked."""
    m = as_matrix(m)
    factors = tuple(_k.smith_factors(m.rows, m.ncols))
    return SmithForm(len(factors), factors)


def determinantal_divisors(m) -> tuple[int, ...]:
    return smith_normal_form(m).determinantal_divisors


def maximal_minors(m, bound: int = MINOR_ENUMERATION_BOUND) -> list[int]:
    """All maximal minors, in lexicographic order of the selected rows.

    A wide matrix is transposed first.
    """
    m = as_matrix(m)
    if m.nrows < m.ncols:
        m = m.transpose()
    count = comb(m.nrows, m.ncols)
    if count > bound:
        raise PreconditionError(
            f"{count} maximal minors exceed the enumeration bound {bound}; "
            "use smith_normal_form instead")
    return _k.maximal_minors(m.rows, m.ncols)


def maximal_minors_gcd(m, bound: int = MINOR_ENUMERATION_BOUND) -> int:
    m = as_matrix(m)
    if m.nrows < m.ncols:
        m = m.transpose()
    count = comb(m.nrows, m.ncols)
    if count > bound:
        raise PreconditionError(
            f"{count} maximal minors exceed the enumeration bound {bound}; "
            "use smith_normal_form instead")
    return _k.maximal_minors_gcd(m.rows, m.ncols)


class FailureKind(enum.Enum):
    NONE = "none"
    PRIMES = "primes"
    ALL_CHARACTERISTICS = "all"


@dataclass(frozen=True)
class FailureSet:
    """Characteristics in which a map fails to have full rank."""

    kind: FailureKind
    primes: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.kind is not FailureKind.PRIMES and self.primes:
            raise ValueError("only PRIMES failure sets carry primes")
        if self.kind is FailureKind.PRIMES and not self.primes:
            object.__setattr__(self, "kind", FailureKind.NONE)

    @classmethod
    def none(cls):
        return cls(FailureKind.NONE)

    @classmethod
    def all_characteristics(cls):
        return cls(FailureKind.ALL_CHARACTERISTICS)

    @classmethod
    def of_primes(cls, primes):
        return cls(FailureKind.PRIMES, frozenset(primes))

    def fails_in(self, p: int) -> bool:
        if self.kind is FailureKind.ALL_CHARACTERISTICS:
            return True
        return p in self.primes

    def to_json(self):
        if self.kind is FailureKind.ALL_CHARACTERISTICS:
            return "all"
        return sorted(self.primes)

    def __str__(self):
        if self.kind is FailureKind.ALL_CHARACTERISTICS:
            return "ALL_CHARACTERISTICS"
        if self.kind is FailureKind.NONE:
            return "NONE"
        return "{" + ", ".join(map(str, sorted(self.primes))) + "}"


def prime_factors(n: int) -> frozenset:
    from sympy import factorint

    return frozenset(factorint(abs(n))) if abs(n) > 1 else frozenset()


def full_rank_failure_primes(m) -> FailureSet:
    """Primes p for which the rank mod p is below min(rows, cols).

    These are the prime divisors of the last determinantal divisor g_r,
    r = min(rows, cols); a matrix that is rank-deficient over Q fails
    everywhere.
    """
    m = as_matrix(m)
    r = min(m.shape)
    snf = smith_normal_form(m)
    if snf.rank < r:
        return FailureSet.all_characteristics()
    return FailureSet.of_primes(prime_factors(prod(snf.invariant_factors)))
