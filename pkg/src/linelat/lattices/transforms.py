"""Graph transforms: line graph, subdivision graph, Hoffman layouts."""
from __future__ import annotations

from ..errors import InputError
from ..graphs import Graph


def line_graph(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Line graph L(g): one vertex per edge of g, adjacent when the edges
    share exactly one endpoint.

    Returns (L, edge_to_vertex) where edge_to_vertex[i] is the L-vertex of
    g-edge i.  The identification is the identity on indices, which is what
    makes H_s factorizations line up row-for-row.
    """
    new_edges = []
    for v in range(g.n):
        inc = [g.edge_id(v, w) for w in g.adjacency[v]]
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                e1, e2 = inc[a], inc[b]
                new_edges.append((min(e1, e2), max(e1, e2)))
    return Graph(g.m, new_edges), tuple(range(g.m))


def subdivision_graph(g: Graph) -> tuple[Graph, tuple[int, ...], tuple[int, ...]]:
    """Insert a midpoint vertex on every edge of g.

    Returns (S, vertex_map, edge_midpoint_map): original vertex v keeps id
    v, the midpoint of edge i gets id g.n + i.
    """
    edges = []
    for i, (u, v) in enumerate(g.edges):
        mid = g.n + i
        edges.append((u, mid))
        edges.append((mid, v))
    return (
        Graph(g.n + g.m, edges),
        tuple(range(g.n)),
        tuple(range(g.n, g.n + g.m)),
    )


def hoffman_layout(z: Graph) -> Graph:
    """L(S(z)) for 3-regular z: a 3-regular graph with least adjacency
    eigenvalue -2 whenever z contains a cycle."""
    if z.n == 0 or any(z.degree(v) != 3 for v in range(z.n)):
        raise InputError("hoffman_layout requires a 3-regular input graph")
    s, _, _ = subdivision_graph(z)
    return line_graph(s)[0]
