"""Graph-theoretic criteria for full rank of degree-one multiplication maps."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .complex import SimplicialComplex
from .errors import PreconditionError
from .monomial import LoopGraph, MonomialAlgebra, skeleton_graph, underlying_graph


@dataclass(frozen=True)
class ComponentClass:
    vertices: tuple
    vertex_count: int
    edge_count: int  # a loop counts as one edge
    loop_count: int
    has_odd_cycle: bool  # an odd cycle of length >= 3, loops ignored
    is_bipartite: bool  # no loop and no odd cycle
    is_tree: bool
    has_unique_cycle_and_odd: bool  # loopless, |E| = |V|, its one cycle odd

    @property
    def has_loop(self) -> bool:
        return self.loop_count > 0

    @property
    def is_tree_with_one_loop(self) -> bool:
        return self.loop_count == 1 and self.edge_count == self.vertex_count

    def to_json(self):
        return {
            "vertices": list(self.vertices),
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "loop_count": self.loop_count,
            "is_bipartite": self.is_bipartite,
            "is_tree": self.is_tree,
            "has_odd_cycle": self.has_odd_cycle,
            "has_unique_cycle_and_odd": self.has_unique_cycle_and_odd,
            "is_tree_with_one_loop": self.is_tree_with_one_loop,
        }


def _two_colorable(verts, edges) -> bool:
    adj = {v: [] for v in verts}
    for u, v in edges:
        if u != v:
            adj[u].append(v)
            adj[v].append(u)
    color = {}
    for s in verts:
        if s in color:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in color:
                    color[w] = color[u] ^ 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def classify_components(graph: LoopGraph) -> list[ComponentClass]:
    out = []
    for verts, edges in graph.components():
        nv, ne = len(verts), len(edges)
        loops = sum(1 for u, v in edges if u == v)
        odd = not _two_colorable(verts, edges)
        out.append(ComponentClass(
            vertices=verts,
            vertex_count=nv,
            edge_count=ne,
            loop_count=loops,
            has_odd_cycle=odd,
            is_bipartite=not odd and loops == 0,
            is_tree=loops == 0 and ne == nv - 1,
            # connected and |E| = |V| leaves exactly one cycle
            has_unique_cycle_and_odd=loops == 0 and ne == nv and odd,
        ))
    return out


def daonair_wlp1(delta: SimplicialComplex) -> bool:
    """Degree-one WLP of A(Δ) in characteristic zero, read off the 1-skeleton.

    With f_1 >= f_0 no component may be bipartite.  With f_1 < f_0 every
    bipartite component must be a tree and every other component must have
    as many edges as vertices.  Isolated vertices count as bipartite trees.
    """
    if delta.is_void:
        raise PreconditionError("void complex")
    comps = classify_components(skeleton_graph(delta))
    if delta.f(1) >= delta.f(0):
        return not any(c.is_bipartite for c in comps)
    return all(c.is_tree if c.is_bipartite else c.edge_count == c.vertex_count
               for c in comps)


def monomial_wlp1(algebra: MonomialAlgebra) -> bool:
    """Degree-one WLP in characteristic zero for an arbitrary Artinian monomial algebra.

    Requires dim A_1 <= dim A_2.  Every component of the underlying graph
    must contain a loop or an odd cycle.
    """
    if algebra.dim(1) > algebra.dim(2):
        raise PreconditionError(
            "theorem hypothesis violated: dim A_1 <= dim A_2 is required "
            f"(got {algebra.dim(1)} > {algebra.dim(2)})")
    return all(not c.is_bipartite for c in classify_components(underlying_graph(algebra)))


def disconnected_shortcut(graph: LoopGraph) -> bool:
    """True when some component has fewer edges than vertices (so no full rank).

    Only meaningful when |V| <= |E|.
    """
    if len(graph.vertices) > len(graph.edges):
        raise PreconditionError(
            f"requires |V| <= |E|, got {len(graph.vertices)} > {len(graph.edges)}")
    return any(c.edge_count < c.vertex_count for c in classify_components(graph))


def cremona_shape(graph: LoopGraph) -> bool:
    """Loopless with a unique odd cycle, or a tree with exactly one loop.

    For a connected graph with |V| = |E| whose edge monomials have no common
    factor this is equivalent to a nonzero incidence determinant.
    """
    comps = classify_components(graph)
    if len(comps) != 1:
        return False
    c = comps[0]
    return c.has_unique_cycle_and_odd or (c.is_tree_with_one_loop)
