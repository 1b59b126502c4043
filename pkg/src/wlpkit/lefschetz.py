"""WLP/SLP decisions with cross-validation between independent routes.

Multiplication is always by L = x_1 + ... + x_n, which decides the WLP for
monomial quotients.  "WLP in degree i" refers to the single map
A_i -> A_{i+1}; the global verdict is the conjunction over degrees.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .complex import SimplicialComplex
from .errors import CrossCheckError, PreconditionError
from .graphs import daonair_wlp1, monomial_wlp1
from .incidence import (
    facet_ideal_skeleton,
    incidence_ideal,
    multiplication_matrix,
    slp1_matrix,
)
from .linalg import (
    FailureKind,
    FailureSet,
    full_rank_failure_primes,
    rank_over,
    rank_q,
)
from .monomial import MonomialAlgebra
from .multiplicity import (
    MAX_AMBIENT_DIM,
    MAX_POINTS,
    CharBound,
    analytic_spread,
    failure_char_set,
    last_mixed_mult,
    mixed_mult_positive,
    wlp_char_bound,
)


def _check_char(char):
    if char == 0:
        return
    from sympy import isprime

    if not isinstance(char, int) or char < 0 or not isprime(char):
        raise PreconditionError(f"characteristic must be 0 or a prime, got {char!r}")


def wlp_degree(algebra: MonomialAlgebra, i: int, char: int = 0) -> bool:
    """Full rank of x L : A_i -> A_{i+1} over a field of characteristic ``char``."""
    _check_char(char)
    lo, hi = algebra.dim(i), algebra.dim(i + 1)
    if min(lo, hi) == 0:
        return True
    return rank_over(multiplication_matrix(algebra, i), char) == min(lo, hi)


def has_wlp(algebra: MonomialAlgebra, char: int = 0) -> bool:
    return all(wlp_degree(algebra, i, char) for i in range(algebra.socle_degree))


@dataclass
class DegreeRecord:
    degree: int
    dims: tuple
    rank_q: int
    full_rank_char0: bool
    failure: FailureSet
    crosschecks: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "degree": self.degree,
            "dims": list(self.dims),
            "rank_q": self.rank_q,
            "full_rank_char0": self.full_rank_char0,
            "failure": self.failure.to_json(),
            "crosschecks": dict(sorted(self.crosschecks.items())),
        }


@dataclass
class LefschetzReport:
    hilbert_function: tuple
    degrees: list
    level: bool | None = None
    slp1: SLPResult | None = None

    @property
    def wlp_char0(self) -> bool:
        return all(r.full_rank_char0 for r in self.degrees)

    def failure_union(self) -> FailureSet:
        primes = set()
        for r in self.degrees:
            if r.failure.kind is FailureKind.ALL_CHARACTERISTICS:
                return FailureSet.all_characteristics()
            primes |= r.failure.primes
        return FailureSet.of_primes(primes)

    def to_json(self):
        out = {
            "hilbert_function": list(self.hilbert_function),
            "wlp_char0": self.wlp_char0,
            "failure": self.failure_union().to_json(),
            "degrees": [r.to_json() for r in self.degrees],
        }
        if self.level is not None:
            out["level"] = self.level
        if self.slp1 is not None:
            out["slp1"] = self.slp1.to_json()
        return out


def _volume_feasible(ideal):
    return ideal.nvars <= MAX_AMBIENT_DIM and len(set(ideal.generators)) <= MAX_POINTS


def _mixed_mult_route(delta, i):
    """Characteristic-zero verdict from positivity of a mixed multiplicity, or None if too big."""
    lo, hi = delta.f(i - 1), delta.f(i)
    ideal = incidence_ideal(delta, i)
    if lo <= hi:
        if not _volume_feasible(ideal):
            return None
        return last_mixed_mult(ideal) > 0
    return mixed_mult_positive(lo - hi, hi - 1, ideal)


def wlp_report(algebra: MonomialAlgebra, mixed_mult: bool = False,
               slp: bool = False) -> LefschetzReport:
    """Per-degree ranks, characteristic-zero verdicts and failure sets.

    Applicable theorem routes are attached as cross-checks; any route
    disagreeing with the rank computation raises CrossCheckError.
    """
    delta = algebra.to_complex()
    records = []
    for i in range(max(algebra.socle_degree, 0)):
        lo, hi = algebra.dim(i), algebra.dim(i + 1)
        mat = multiplication_matrix(algebra, i)
        r = rank_q(mat)
        full = r == min(lo, hi)
        failure = full_rank_failure_primes(mat)
        checks = {}
        if i == 1 and lo <= hi:
            checks["monomial_wlp1"] = monomial_wlp1(algebra)
            # either every odd characteristic agrees with char 0, or none does
            checks["odd_char_dichotomy"] = (failure.kind is FailureKind.ALL_CHARACTERISTICS
                                            or failure.primes <= {2})
        if delta is not None and i >= 1:
            if i == 1:
                checks["daonair_wlp1"] = daonair_wlp1(delta)
            checks["spread"] = (analytic_spread(incidence_ideal(delta, i))
                                == min(delta.f(i - 1), delta.f(i)))
            if lo <= hi:
                checks["failure_theorem"] = failure_char_set(delta, i) == failure
            if mixed_mult:
                verdict = _mixed_mult_route(delta, i)
                if verdict is not None:
                    checks["mixed_mult"] = verdict
        expected = {
            "monomial_wlp1": full, "daonair_wlp1": full, "spread": full,
            "mixed_mult": full, "odd_char_dichotomy": True, "failure_theorem": True,
        }
        bad = {k: v for k, v in checks.items() if v != expected[k]}
        if bad:
            raise CrossCheckError(
                f"degree {i}: rank route says full_rank={full}, but {bad} disagree")
        if full != (failure.kind is not FailureKind.ALL_CHARACTERISTICS):
            raise CrossCheckError(f"degree {i}: rank over Q and Smith form disagree")
        records.append(DegreeRecord(i, (lo, hi), r, full, failure, checks))
    level = delta.is_pure() if delta is not None and not delta.is_void else None
    report = LefschetzReport(algebra.hilbert_function(), records, level)
    if slp and delta is not None:
        report.slp1 = slp_degree1(delta)
    return report


@dataclass(frozen=True)
class SLPResult:
    holds: bool
    # per d >= 1 with f_d > 0: (d, rank, min(f_0, f_d))
    ranks: tuple

    def to_json(self):
        return {"holds": self.holds,
                "ranks": [{"d": d, "rank": r, "target": t} for d, r, t in self.ranks]}


def slp_degree1(delta: SimplicialComplex) -> SLPResult:
    """SLP in degree one, characteristic zero: x L^d : A_1 -> A_{d+1} for all d."""
    if delta.is_void:
        raise PreconditionError("void complex")
    rows = []
    holds = True
    for d in range(1, delta.dim + 1):
        if delta.f(d) == 0:
            continue
        r = rank_q(slp1_matrix(delta, d))
        spread = analytic_spread(facet_ideal_skeleton(delta, d))
        if r != spread:
            raise CrossCheckError(f"d={d}: matrix rank {r} but analytic spread {spread}")
        target = min(delta.f(0), delta.f(d))
        rows.append((d, r, target))
        holds = holds and r == target
    return SLPResult(holds, tuple(rows))


@dataclass(frozen=True)
class BoundReport:
    degree: int
    vacuous: bool
    bound: int | None
    excluded: frozenset
    failure: FailureSet
    guarantee_holds: bool

    def to_json(self):
        return {
            "degree": self.degree,
            "vacuous": self.vacuous,
            "bound": self.bound,
            "excluded": sorted(self.excluded),
            "failure": self.failure.to_json(),
            "guarantee_holds": self.guarantee_holds,
        }


def wlp_fullrank_bound_report(delta: SimplicialComplex, i: int) -> BoundReport:
    """Mixed-multiplicity bound on failing characteristics next to the exact failure set."""
    if i < 1:
        raise PreconditionError("degree must be at least 1")
    if delta.f(i - 1) == 0 or delta.f(i) == 0:
        return BoundReport(i, True, None, frozenset(), FailureSet.none(), True)
    cb: CharBound = wlp_char_bound(delta, i)
    failure = failure_char_set(delta, i)
    ok = not any(cb.guarantees(p) for p in failure.primes)
    if not ok:
        raise CrossCheckError(f"failure set {failure} contradicts bound {cb.bound}")
    return BoundReport(i, False, cb.bound, cb.excluded, failure, ok)
