"""Monomials, monomial ideals, Artinian quotients and their underlying graphs."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from .complex import SimplicialComplex
from .errors import InputError, PreconditionError


@dataclass(frozen=True, order=False)
class Monomial:
    """Exponent vector over an ambient, ordered variable list."""

    exponents: tuple

    @classmethod
    def one(cls, n):
        return cls((0,) * n)

    @classmethod
    def variable(cls, n, k):
        e = [0] * n
        e[k] = 1
        return cls(tuple(e))

    @classmethod
    def from_support(cls, n, indices):
        e = [0] * n
        for k in indices:
            e[k] += 1
        return cls(tuple(e))

    @property
    def nvars(self):
        return len(self.exponents)

    @property
    def degree(self):
        return sum(self.exponents)

    @property
    def support(self):
        return tuple(k for k, e in enumerate(self.exponents) if e)

    def as_dict(self):
        return {k: e for k, e in enumerate(self.exponents) if e}

    def is_squarefree(self):
        return all(e <= 1 for e in self.exponents)

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: Monomial) -> Monomial:
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def sort_key(self):
        # descending lex: x1 > x2 > ... puts a, b, c, d and ab, ac, ... in order
        return tuple(-e for e in self.exponents)

    def to_string(self, variables) -> str:
        parts = []
        for name, e in zip(variables, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\^\s*([0-9]+))?\s*")


def parse_monomial(text: str, variables) -> Monomial:
    """Parse ``ident('^'posint)?('*'ident('^'posint)?)*`` over ``variables``."""
    index = {v: k for k, v in enumerate(variables)}
    exps = [0] * len(variables)
    if not isinstance(text, str) or not text.strip():
        raise InputError(f"malformed monomial {text!r}")
    if text.strip() == "1":
        return Monomial(tuple(exps))
    for part in text.split("*"):
        m = _TOKEN.fullmatch(part)
        if m is None:
            raise InputError(f"malformed monomial {text!r}")
        name, power = m.group(1), m.group(2)
        if name not in index:
            raise InputError(f"unknown variable {name!r} in {text!r}")
        e = int(power) if power is not None else 1
        if e == 0:
            raise InputError(f"zero exponent in {text!r}")
        exps[index[name]] += e
    return Monomial(tuple(exps))


def _minimalize(gens):
    gens = sorted(set(gens), key=lambda g: (g.degree, g.sort_key()))
    kept = []
    for g in gens:
        if not any(h.divides(g) for h in kept):
            kept.append(g)
    return tuple(sorted(kept, key=lambda g: (g.degree, g.sort_key())))


class MonomialIdeal:
    """Monomial ideal with a minimal generating set over named variables."""

    def __init__(self, variables, generators):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise InputError(f"duplicate variable names in {variables}")
        n = len(variables)
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = parse_monomial(g, variables)
            if g.nvars != n:
                raise InputError("generator over the wrong number of variables")
            gens.append(g)
        self.variables = variables
        self.generators = _minimalize(gens)

    @property
    def nvars(self):
        return len(self.variables)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.variables == other.variables and self.generators == other.generators

    def __hash__(self):
        return hash((self.variables, self.generators))

    def __repr__(self):
        return f"MonomialIdeal({self.variables!r}, {self.generator_strings()!r})"

    def generator_strings(self):
        return [g.to_string(self.variables) for g in self.generators]

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.generators)

    def is_artinian(self) -> bool:
        return all(any(g.support == (k,) for g in self.generators)
                   for k in range(self.nvars))

    def is_squarefree_reduction(self) -> bool:
        """True when the ideal contains every x_k^2 and its other generators are squarefree."""
        return (all(self.contains(Monomial.from_support(self.nvars, [k, k]))
                    for k in range(self.nvars))
                and all(g.is_squarefree() or g.degree == 2 and len(g.support) == 1
                        for g in self.generators))


def is_artinian(ideal: MonomialIdeal) -> bool:
    return ideal.is_artinian()


def squarefree_reduction_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    """Stanley-Reisner ideal of ``delta`` plus the squares of all vertex variables."""
    if delta.is_void:
        raise PreconditionError("void complex")
    vs = delta.vertices
    idx = {v: k for k, v in enumerate(vs)}
    n = len(vs)
    gens = [Monomial.from_support(n, [idx[v] for v in nf]) for nf in delta.minimal_nonfaces()]
    gens += [Monomial.from_support(n, [k, k]) for k in range(n)]
    return MonomialIdeal(vs, gens)


class MonomialAlgebra:
    """Artinian quotient R/I with its graded basis of standard monomials."""

    def __init__(self, ideal: MonomialIdeal):
        if not ideal.is_artinian():
            raise PreconditionError(f"R/I is not Artinian for {ideal!r}")
        self.ideal = ideal
        n = ideal.nvars
        basis = [[Monomial.one(n)]]
        if ideal.contains(basis[0][0]):
            basis = []
        # an Artinian monomial quotient has no gaps in degree
        while basis:
            nxt = set()
            for m in basis[-1]:
                for k in range(n):
                    c = m * Monomial.variable(n, k)
                    if not ideal.contains(c):
                        nxt.add(c)
            if not nxt:
                break
            basis.append(sorted(nxt, key=Monomial.sort_key))
        self.graded_basis = tuple(tuple(b) for b in basis)

    @property
    def variables(self):
        return self.ideal.variables

    @property
    def socle_degree(self) -> int:
        return len(self.graded_basis) - 1

    def standard_monomials(self, i: int) -> list:
        if i < 0:
            raise PreconditionError("degree must be nonnegative")
        if i >= len(self.graded_basis):
            return []
        return list(self.graded_basis[i])

    def dim(self, i: int) -> int:
        return len(self.standard_monomials(i)) if i >= 0 else 0

    def hilbert_function(self) -> tuple:
        return tuple(len(b) for b in self.graded_basis)

    def label(self, m: Monomial) -> str:
        return m.to_string(self.variables)

    @cached_property
    def underlying_graph(self) -> LoopGraph:
        return underlying_graph(self)

    def to_complex(self):
        """The complex Δ with A = A(Δ), or None when A is not a squarefree reduction."""
        if not self.ideal.is_squarefree_reduction():
            return None
        vs = self.variables
        facets = [[vs[k] for k in m.support] for b in self.graded_basis for m in b]
        return SimplicialComplex(facets, [vs[m.support[0]] for m in self.standard_monomials(1)])


def standard_monomials(algebra: MonomialAlgebra, i: int) -> list:
    return algebra.standard_monomials(i)


def squarefree_reduction(delta: SimplicialComplex) -> MonomialAlgebra:
    return MonomialAlgebra(squarefree_reduction_ideal(delta))


@dataclass(frozen=True)
class LoopGraph:
    """Simple graph with loops; an edge (u, v) with u == v is a loop."""

    vertices: tuple
    edges: tuple

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise InputError("repeated vertex in graph")
        norm = []
        pos = {v: k for k, v in enumerate(self.vertices)}
        for u, v in self.edges:
            if u not in vs or v not in vs:
                raise InputError(f"edge {(u, v)} has an endpoint outside the vertex set")
            norm.append((u, v) if pos[u] <= pos[v] else (v, u))
        if len(set(norm)) != len(norm):
            raise InputError("repeated edge in graph")
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def loops(self):
        return [e for e in self.edges if e[0] == e[1]]

    def adjacency(self):
        adj = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            if u != v:
                adj[v].append(u)
        return adj

    def components(self) -> list:
        """Connected components as (vertices, edges), in vertex order."""
        adj = self.adjacency()
        seen = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            seen.add(s)
            stack, comp = [s], [s]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
                        comp.append(w)
            cs = set(comp)
            comps.append((tuple(v for v in self.vertices if v in cs),
                          tuple(e for e in self.edges if e[0] in cs)))
        return comps


def underlying_graph(algebra: MonomialAlgebra) -> LoopGraph:
    """Vertices are surviving variables; edges the surviving degree-2 monomials."""
    vs = algebra.variables
    verts = tuple(vs[m.support[0]] for m in algebra.standard_monomials(1))
    edges = []
    for m in algebra.standard_monomials(2):
        s = m.support
        edges.append((vs[s[0]], vs[s[-1]]))
    return LoopGraph(verts, tuple(edges))


def skeleton_graph(delta: SimplicialComplex) -> LoopGraph:
    """1-skeleton of ``delta`` as a loopless graph."""
    return LoopGraph(delta.vertices, tuple(tuple(e) for e in delta.faces(1)))
