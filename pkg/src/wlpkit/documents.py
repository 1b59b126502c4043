"""JSON input documents: one complex or one monomial ideal per file.

Complex::

    {"kind": "complex", "vertices": ["a", "b", "c", "d"],
     "facets": [["a", "b", "c"], ["a", "c", "d"], ["b", "c", "d"]]}

``vertices`` is optional and only needed for isolated vertices.

Ideal::

    {"kind": "ideal", "variables": ["x1", "x2"], "generators": ["x1^2", "x1*x2", "x2^3"]}

Generator strings follow ``ident('^'posint)?('*'ident('^'posint)?)*``.
Their order is kept verbatim in ``InputDocument.monomials`` because a
monomial map depends on it.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .complex import SimplicialComplex
from .errors import InputError
from .monomial import MonomialIdeal, parse_monomial


@dataclass(frozen=True)
class InputDocument:
    kind: str
    complex: SimplicialComplex | None = None
    ideal: MonomialIdeal | None = None
    monomials: tuple = ()

    @property
    def variables(self):
        return self.ideal.variables if self.ideal is not None else None


def _string_list(value, what):
    if not isinstance(value, list) or not all(isinstance(v, str) and v for v in value):
        raise InputError(f"{what} must be a list of nonempty strings")
    return value


def parse_document(data) -> InputDocument:
    if not isinstance(data, dict):
        raise InputError("document must be a JSON object")
    kind = data.get("kind")
    if kind == "complex":
        facets = data.get("facets")
        if not isinstance(facets, list):
            raise InputError("complex document needs a 'facets' list")
        facets = [_string_list(f, "each facet") if f else [] for f in facets]
        vertices = data.get("vertices")
        if vertices is not None:
            vertices = _string_list(vertices, "'vertices'")
        return InputDocument("complex", complex=SimplicialComplex(facets, vertices))
    if kind == "ideal":
        variables = _string_list(data.get("variables"), "'variables'")
        gens = data.get("generators")
        if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
            raise InputError("'generators' must be a list of monomial strings")
        monomials = tuple(parse_monomial(g, variables) for g in gens)
        return InputDocument("ideal", ideal=MonomialIdeal(variables, monomials),
                             monomials=monomials)
    raise InputError(f"unknown document kind {kind!r}; expected 'complex' or 'ideal'")


def load_document(path) -> InputDocument:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from exc
    return parse_document(data)


def dump_document(doc: InputDocument) -> dict:
    if doc.kind == "complex":
        c = doc.complex
        return {"kind": "complex", "vertices": list(c.vertices),
                "facets": [list(f) for f in c.facets]}
    return {"kind": "ideal", "variables": list(doc.ideal.variables),
            "generators": [m.to_string(doc.ideal.variables) for m in doc.monomials]}
