"""Small named graphs: cycles, complete graphs, trees, Petersen, C60."""
from __future__ import annotations

import numpy as np

from ..errors import InputError
from ..graphs import Graph


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise InputError("cycle needs at least 3 vertices")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def tree_ball(r: int) -> Graph:
    """Ball of radius r in the 3-regular tree: 3*2^r - 2 vertices."""
    if r < 0:
        raise InputError("radius must be nonnegative")
    edges = []
    nxt = 1
    frontier = [0]
    for depth in range(r):
        new_frontier = []
        for v in frontier:
            children = 3 if depth == 0 else 2
            for _ in range(children):
                edges.append((v, nxt))
                new_frontier.append(nxt)
                nxt += 1
        frontier = new_frontier
    return Graph(nxt, edges)


def _icosahedron():
    phi = (1 + np.sqrt(5)) / 2
    pts = []
    for a in (-1.0, 1.0):
        for b in (-phi, phi):
            pts += [(0, a, b), (a, b, 0), (b, 0, a)]
    pos = np.array(pts)
    edges = []
    for i in range(12):
        for j in range(i + 1, 12):
            if abs(np.linalg.norm(pos[i] - pos[j]) - 2.0) < 1e-9:
                edges.append((i, j))
    return pos, edges


def _tangent_order(center, neighbors):
    """Cyclic order of neighbor positions around an outward radial axis."""
    nrm = center / np.linalg.norm(center)
    ref = np.array([1.0, 0.0, 0.0])
    if abs(nrm @ ref) > 0.9:
        ref = np.array([0.0, 1.0, 0.0])
    e1 = ref - (ref @ nrm) * nrm
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(nrm, e1)
    ang = [np.arctan2((p - center) @ e2, (p - center) @ e1) for p in neighbors]
    return np.argsort(ang)


def c60_graph() -> Graph:
    """Truncated icosahedron (C60): 60 vertices, 90 edges, 3-regular."""
    g, _ = c60_graph_with_positions()
    return g


def c60_graph_with_positions() -> tuple[Graph, np.ndarray]:
    """C60 by truncating the icosahedron; one vertex per (vertex, edge)
    incidence, placed a third of the way along the edge.  Positions make
    the planar face structure recoverable by rotation-system tracing."""
    pos, edges = _icosahedron()
    adj = {i: [] for i in range(12)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    darts = {}
    dart_pos = []
    for v in range(12):
        for w in adj[v]:
            darts[(v, w)] = len(dart_pos)
            dart_pos.append(pos[v] + (pos[w] - pos[v]) / 3.0)
    new_edges = set()
    for u, v in edges:
        a, b = darts[(u, v)], darts[(v, u)]
        new_edges.add((min(a, b), max(a, b)))
    for v in range(12):
        nb = adj[v]
        order = _tangent_order(pos[v], [pos[w] for w in nb])
        ring = [darts[(v, nb[i])] for i in order]
        for t in range(len(ring)):
            a, b = ring[t], ring[(t + 1) % len(ring)]
            new_edges.add((min(a, b), max(a, b)))
    g = Graph(60, sorted(new_edges))
    return g, np.array(dart_pos)
