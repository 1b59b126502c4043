"""Finite simplicial complexes given by their facets."""
from __future__ import annotations

from functools import cached_property
from itertools import combinations

from .errors import InputError, PreconditionError

Face = tuple  # sorted tuple of vertex labels


def face_label(face) -> str:
    """Compact text form of a face: ``abc`` for one-letter labels, else ``x1*x2``."""
    if not face:
        return "1"
    if all(len(v) == 1 for v in face):
        return "".join(face)
    return "*".join(face)


class SimplicialComplex:
    """Immutable complex; vertices sorted lexicographically, facets an antichain.

    Faces of each dimension are listed in lexicographic order of their sorted
    vertex tuples.  That order fixes the rows and columns of every matrix
    built from the complex.
    """

    def __init__(self, facets, vertices=None):
        sets = []
        for f in facets:
            f = frozenset(f)
            for v in f:
                if not isinstance(v, str) or not v:
                    raise InputError(f"vertex labels must be nonempty strings, got {v!r}")
            sets.append(f)
        declared = []
        if vertices is not None:
            declared = list(vertices)
            if len(set(declared)) != len(declared):
                raise InputError(f"duplicate vertex labels in {declared}")
            for v in declared:
                if not isinstance(v, str) or not v:
                    raise InputError(f"vertex labels must be nonempty strings, got {v!r}")
        verts = set(declared).union(*sets) if sets else set(declared)
        if vertices is not None and not verts <= set(declared):
            raise InputError(f"facet vertices {sorted(verts - set(declared))} not declared")
        # isolated vertices become singleton facets
        sets.extend(frozenset([v]) for v in verts)
        maximal = [s for s in set(sets)
                   if s and not any(s < t for t in sets)]
        if not maximal and any(not s for s in sets):
            maximal = [frozenset()]
        self.vertices = tuple(sorted(verts))
        self.facets = tuple(sorted(tuple(sorted(s)) for s in maximal))

    @property
    def is_void(self) -> bool:
        return not self.facets

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.vertices == other.vertices and self.facets == other.facets

    def __hash__(self):
        return hash((self.vertices, self.facets))

    def __repr__(self):
        return f"SimplicialComplex({[list(f) for f in self.facets]!r})"

    @property
    def dim(self) -> int:
        if self.is_void:
            raise PreconditionError("void complex has no dimension")
        return max(len(f) for f in self.facets) - 1

    @cached_property
    def _faces_by_size(self):
        by_size = {}
        for facet in self.facets:
            for k in range(len(facet) + 1):
                by_size.setdefault(k, set()).update(combinations(facet, k))
        return {k: sorted(v) for k, v in by_size.items()}

    @cached_property
    def _face_set(self):
        return {f for fs in self._faces_by_size.values() for f in fs}

    def faces(self, i: int) -> list:
        """All ``i``-dimensional faces (vertex count ``i + 1``), sorted."""
        return list(self._faces_by_size.get(i + 1, ()))

    def is_face(self, s) -> bool:
        return tuple(sorted(s)) in self._face_set

    def f_vector(self) -> tuple:
        """``(f_{-1}, f_0, ..., f_dim)``."""
        if self.is_void:
            raise PreconditionError("void complex has no f-vector")
        return tuple(len(self.faces(i)) for i in range(-1, self.dim + 1))

    def f(self, i: int) -> int:
        return len(self.faces(i))

    def skeleton(self, i: int) -> SimplicialComplex:
        if i < 0:
            raise PreconditionError("skeleton dimension must be nonnegative")
        if self.is_void:
            return self
        if i >= self.dim:
            return self
        faces = [f for k in range(i + 2) for f in self.faces(k - 1)]
        return SimplicialComplex(faces, self.vertices)

    def is_pure(self) -> bool:
        if self.is_void:
            raise PreconditionError("void complex")
        return len({len(f) for f in self.facets}) == 1

    def minimal_nonfaces(self) -> list:
        """Inclusion-minimal non-faces, sorted by size then lexicographically.

        A minimal non-face has every proper subset a face, so it has at most
        ``dim + 2`` vertices and is a face plus one vertex.
        """
        if self.is_void:
            raise PreconditionError("void complex")
        out = []
        for size in range(2, self.dim + 3):
            found = set()
            for base in self.faces(size - 2):
                for v in self.vertices:
                    if v in base:
                        continue
                    cand = tuple(sorted(base + (v,)))
                    if cand in found or cand in self._face_set:
                        continue
                    if all(sub in self._face_set for sub in combinations(cand, size - 1)):
                        found.add(cand)
            out.extend(sorted(found))
        return out


def new_complex(facets, vertices=None) -> SimplicialComplex:
    return SimplicialComplex(facets, vertices)


def simplex(vertices) -> SimplicialComplex:
    return SimplicialComplex([list(vertices)])
