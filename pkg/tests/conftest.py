import random
from itertools import combinations

import pytest

from wlpkit import _kernels_py
from wlpkit.complex import SimplicialComplex
from wlpkit.monomial import LoopGraph, MonomialAlgebra, MonomialIdeal, Monomial

try:
    from wlpkit import _kernels as _kernels_ext
except ImportError:
    _kernels_ext = None

KERNELS = [pytest.param(_kernels_py, id="python")]
if _kernels_ext is not None:
    KERNELS.append(pytest.param(_kernels_ext, id="cython"))

# acceptance criterion id -> (title, passed)
CRITERIA = {}


@pytest.fixture(params=KERNELS)
def kernels(request):
    return request.param


@pytest.fixture
def example1():
    return SimplicialComplex([["a", "b", "c"], ["a", "c", "d"], ["b", "c", "d"]])


def labels(n):
    return [chr(ord("a") + k) for k in range(n)]


def random_matrix(rng, nrows, ncols, lo=-3, hi=3, density=0.7):
    return [[rng.randint(lo, hi) if rng.random() < density else 0 for _ in range(ncols)]
            for _ in range(nrows)]


def random_complex(rng, nverts, max_dim=3, nfacets=None):
    verts = labels(nverts)
    if nfacets is None:
        nfacets = rng.randint(1, 2 * nverts)
    facets = []
    for _ in range(nfacets):
        size = rng.randint(1, min(max_dim + 1, nverts))
        facets.append(rng.sample(verts, size))
    return SimplicialComplex(facets, verts)


def random_graph(rng, nverts, p=None):
    """Loopless simple graph on labels(nverts), as a 1-dimensional complex."""
    verts = labels(nverts)
    p = rng.random() if p is None else p
    edges = [list(e) for e in combinations(verts, 2) if rng.random() < p]
    return SimplicialComplex(edges, verts)


def random_loopgraph(rng, nverts, nedges):
    verts = tuple(labels(nverts))
    pool = [(u, u) for u in verts] + list(combinations(verts, 2))
    return LoopGraph(verts, tuple(rng.sample(pool, min(nedges, len(pool)))))


def random_artinian_algebra(rng, nvars):
    """Random Artinian monomial quotient with pure powers x_k^e, 2 <= e <= 4."""
    vs = [f"x{k + 1}" for k in range(nvars)]
    gens = [Monomial(tuple(rng.randint(2, 4) if j == k else 0 for j in range(nvars)))
            for k in range(nvars)]
    for _ in range(rng.randint(0, 2 * nvars)):
        deg = rng.randint(2, 3)
        e = [0] * nvars
        for _ in range(deg):
            e[rng.randrange(nvars)] += 1
        gens.append(Monomial(tuple(e)))
    return MonomialAlgebra(MonomialIdeal(vs, gens))


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(CRITERIA, key=lambda k: [int(x) if x.isdigit() else x
                                               for x in k.replace(".", " ").split()]):
        title, ok = CRITERIA[key]
        terminalreporter.write_line(f"criterion {key:<5} {'PASS' if ok else 'FAIL'}  {title}")
