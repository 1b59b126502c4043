import random
from itertools import chain, combinations
from math import comb

import pytest

from conftest import labels, random_complex
from wlpkit.complex import SimplicialComplex, face_label, new_complex, simplex
from wlpkit.errors import InputError, PreconditionError


def all_subsets(verts):
    return chain.from_iterable(combinations(verts, k) for k in range(len(verts) + 1))


def brute_faces(delta):
    return {s for s in all_subsets(delta.vertices)
            if any(set(s) <= set(f) for f in delta.facets)}


def test_example1_facets_and_faces(example1):
    assert example1.facets == (("a", "b", "c"), ("a", "c", "d"), ("b", "c", "d"))
    assert example1.faces(1) == [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")]
    assert example1.faces(2) == [("a", "b", "c"), ("a", "c", "d"), ("b", "c", "d")]
    assert example1.faces(-1) == [()]
    assert example1.f_vector() == (1, 4, 6, 3)
    assert example1.is_pure()
    assert example1.minimal_nonfaces() == [("a", "b", "d")]


def test_normalization():
    assert new_complex([["a", "b"], ["a", "b", "c"]]).facets == (("a", "b", "c"),)
    single = new_complex([["a"]])
    assert single.dim == 0 and single.f_vector() == (1, 1)
    assert not new_complex([["a", "b"], ["c"]]).is_pure()
    assert new_complex([["a"], ["b"]]).minimal_nonfaces() == [("a", "b")]
    assert simplex("abcd").minimal_nonfaces() == []


def test_isolated_vertices_declared():
    d = SimplicialComplex([["a", "b"]], ["a", "b", "c"])
    assert d.vertices == ("a", "b", "c")
    assert d.f_vector() == (1, 3, 1)


def test_bad_inputs():
    with pytest.raises(InputError):
        SimplicialComplex([["a", ""]])
    with pytest.raises(InputError):
        SimplicialComplex([["a"]], ["a", "a"])
    with pytest.raises(InputError):
        SimplicialComplex([["a", "z"]], ["a"])


def test_void_complex_flagged():
    void = SimplicialComplex([])
    assert void.is_void
    with pytest.raises(PreconditionError, match="void complex has no f-vector"):
        void.f_vector()


def test_simplex_f_vector_binomial():
    for n in range(1, 8):
        assert simplex(labels(n)).f_vector() == tuple(comb(n, i + 1) for i in range(-1, n))
    assert simplex("abcde").f_vector() == (1, 5, 10, 10, 5, 1)


def test_skeleton():
    d = simplex("abcd")
    k4 = d.skeleton(1)
    assert k4.f_vector() == (1, 4, 6)
    assert d.skeleton(d.dim) == d
    assert d.skeleton(0).facets == (("a",), ("b",), ("c",), ("d",))


def test_face_label():
    assert face_label(()) == "1"
    assert face_label(("a", "b")) == "ab"
    assert face_label(("x1", "x2")) == "x1*x2"


def test_properties_random():
    rng = random.Random(30)
    for _ in range(200):
        d = random_complex(rng, rng.randint(1, 8))
        faces = brute_faces(d)
        fv = d.f_vector()
        for i in range(-1, d.dim + 1):
            assert len(d.faces(i)) == fv[i + 1]
            assert set(d.faces(i)) == {f for f in faces if len(f) == i + 1}
            assert d.faces(i) == sorted(d.faces(i))
        # downward closure
        for f in faces:
            for sub in all_subsets(f):
                assert d.is_face(sub)
        # skeleton composition
        for i in range(d.dim + 1):
            for j in range(d.dim + 1):
                assert d.skeleton(i).skeleton(j) == d.skeleton(min(i, j))
        # minimal non-faces: antichain, and faces are exactly the sets avoiding them
        mnf = d.minimal_nonfaces()
        for a, b in combinations(mnf, 2):
            assert not set(a) <= set(b) and not set(b) <= set(a)
        for s in all_subsets(d.vertices):
            assert (s in faces) == (not any(set(n) <= set(s) for n in mnf))
