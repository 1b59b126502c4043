"""Matrices and equigenerated ideals attached to complexes and algebras."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .complex import SimplicialComplex, face_label
from .errors import PreconditionError
from .linalg import IntegerMatrix
from .monomial import LoopGraph, Monomial, MonomialAlgebra


@dataclass(frozen=True)
class LabeledMatrix:
    rows: tuple
    cols: tuple
    matrix: IntegerMatrix
    # common row sum when every row sums to the same d, else None
    stochastic_degree: int | None = field(default=None, compare=False)

    def __post_init__(self):
        if (len(self.rows), len(self.cols)) != self.matrix.shape:
            raise ValueError("label counts do not match the matrix shape")

    @property
    def shape(self):
        return self.matrix.shape

    def entry(self, row_label, col_label):
        return self.matrix[self.rows.index(row_label), self.cols.index(col_label)]

    def row(self, label):
        return self.matrix.rows[self.rows.index(label)]

    def reorder_rows(self, labels):
        idx = [self.rows.index(lb) for lb in labels]
        return LabeledMatrix(tuple(labels), self.cols, self.matrix.select_rows(idx),
                             self.stochastic_degree)

    def to_text(self) -> str:
        width = max([len(c) for c in self.cols] + [1])
        rw = max([len(r) for r in self.rows] + [1])
        lines = [" " * rw + " " + " ".join(c.rjust(width) for c in self.cols)]
        for lb, r in zip(self.rows, self.matrix.rows):
            lines.append(lb.rjust(rw) + " " + " ".join(str(x).rjust(width) for x in r))
        return "\n".join(lines)

    def to_json(self):
        return {"rows": list(self.rows), "cols": list(self.cols),
                "entries": self.matrix.tolist()}


def _stochastic(rows):
    sums = {sum(r) for r in rows}
    return sums.pop() if len(sums) == 1 else None


def _labeled(rows, cols, entries):
    m = IntegerMatrix(entries, len(cols))
    return LabeledMatrix(tuple(rows), tuple(cols), m, _stochastic(m.rows))


@dataclass(frozen=True)
class EquigeneratedIdeal:
    """Monomial ideal whose generators all have one degree."""

    variables: tuple
    generators: tuple
    degree: int

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "generators", tuple(self.generators))
        n = len(self.variables)
        for g in self.generators:
            if g.nvars != n:
                raise PreconditionError("generator over the wrong number of variables")
            if g.degree != self.degree:
                raise PreconditionError(
                    f"generator of degree {g.degree} in an ideal declared of degree {self.degree}")

    @classmethod
    def from_monomials(cls, variables, monomials):
        degs = {m.degree for m in monomials}
        if len(degs) != 1:
            raise PreconditionError(f"monomials of unequal degrees {sorted(degs)}")
        return cls(tuple(variables), tuple(monomials), degs.pop())

    @property
    def nvars(self):
        return len(self.variables)

    def generator_strings(self):
        return [g.to_string(self.variables) for g in self.generators]


def _face_var(face):
    return "t_" + face_label(face) if face else "t_1"


def incidence_matrix(delta: SimplicialComplex, i: int) -> LabeledMatrix:
    """f_i x f_{i-1} containment matrix of i-faces over (i-1)-faces."""
    if i < 0:
        raise PreconditionError("incidence degree must be nonnegative")
    rows = delta.faces(i)
    cols = delta.faces(i - 1)
    col_pos = {c: k for k, c in enumerate(cols)}
    entries = []
    for sigma in rows:
        r = [0] * len(cols)
        for tau in combinations(sigma, i):
            r[col_pos[tau]] = 1
        entries.append(r)
    return _labeled([face_label(f) for f in rows], [face_label(f) for f in cols], entries)


def multiplication_matrix(algebra: MonomialAlgebra, i: int) -> LabeledMatrix:
    """Matrix of multiplication by x_1 + ... + x_n from A_i to A_{i+1}.

    Entry (m', m) is 1 when m' = x_k m for some variable x_k.  The
    coefficient stays 1 even when m' = x_k^2 m'' has a repeated variable.
    """
    cols = algebra.standard_monomials(i)
    rows = algebra.standard_monomials(i + 1)
    col_pos = {c: k for k, c in enumerate(cols)}
    entries = []
    for mp in rows:
        r = [0] * len(cols)
        for k in mp.support:
            e = list(mp.exponents)
            e[k] -= 1
            j = col_pos.get(Monomial(tuple(e)))
            if j is not None:
                r[j] = 1
        entries.append(r)
    return _labeled([algebra.label(m) for m in rows], [algebra.label(m) for m in cols], entries)


def incidence_ideal(delta: SimplicialComplex, i: int) -> EquigeneratedIdeal:
    """One generator per i-face: the product of t_tau over its (i-1)-subfaces."""
    if i < 1:
        raise PreconditionError("incidence ideals are defined for i >= 1")
    cols = delta.faces(i - 1)
    if not cols:
        raise PreconditionError(f"complex has no {i - 1}-faces")
    pos = {c: k for k, c in enumerate(cols)}
    n = len(cols)
    gens = [Monomial.from_support(n, [pos[t] for t in combinations(s, i)])
            for s in delta.faces(i)]
    return EquigeneratedIdeal(tuple(_face_var(c) for c in cols), tuple(gens), i + 1)


def check_incidence_shape(ideal: EquigeneratedIdeal) -> bool:
    """Squarefree, equigenerated, and no two generators share two variables."""
    gens = ideal.generators
    if not all(g.is_squarefree() for g in gens):
        return False
    if len({g.degree for g in gens}) > 1:
        return False
    return all(a.gcd(b).degree <= 1 for a, b in combinations(gens, 2))


def facet_ideal_skeleton(delta: SimplicialComplex, d: int) -> EquigeneratedIdeal:
    """Facet ideal of the d-dimensional facets of the d-skeleton, in vertex variables."""
    if d < 0:
        raise PreconditionError("skeleton dimension must be nonnegative")
    vs = delta.vertices
    pos = {v: k for k, v in enumerate(vs)}
    gens = [Monomial.from_support(len(vs), [pos[v] for v in f]) for f in delta.faces(d)]
    return EquigeneratedIdeal(tuple("t_" + v for v in vs), tuple(gens), d + 1)


def slp1_matrix(delta: SimplicialComplex, d: int) -> LabeledMatrix:
    """0/1 pattern of multiplication by L^d from A_1 to A_{d+1}; the d! factor is dropped."""
    if d < 1:
        raise PreconditionError("slp1_matrix needs d >= 1")
    vs = delta.vertices
    entries = [[int(v in f) for v in vs] for f in delta.faces(d)]
    return _labeled([face_label(f) for f in delta.faces(d)], list(vs), entries)


def log_matrix(monomials, variables) -> LabeledMatrix:
    """Rows are the exponent vectors of ``monomials``."""
    monomials = list(monomials)
    if not monomials:
        raise PreconditionError("log-matrix of an empty monomial list")
    return _labeled([m.to_string(variables) for m in monomials], list(variables),
                    [list(m.exponents) for m in monomials])


def loopgraph_incidence(graph: LoopGraph) -> LabeledMatrix:
    """Edge-by-vertex matrix; a loop contributes a single entry 2."""
    vs = graph.vertices
    pos = {v: k for k, v in enumerate(vs)}
    entries, labels = [], []
    for u, v in graph.edges:
        r = [0] * len(vs)
        r[pos[u]] += 1
        r[pos[v]] += 1
        entries.append(r)
        labels.append(f"{u}^2" if u == v else f"{u}*{v}")
    return _labeled(labels, list(vs), entries)
