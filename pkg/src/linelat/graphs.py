"""Immutable simple-graph container and basic structural queries.

Vertex ids are dense 0-based integers.  Edge ids are dense 0-based integers
in construction order and are stable for the lifetime of a Graph, which pins
the row indexing of incidence matrices built from it.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import InputError


class Graph:
    """Undirected loopless graph without multi-edges.

    Parameters
    ----------
    n : int
        Vertex count; vertices are 0..n-1.
    edges : iterable of (u, v)
        Unordered vertex pairs.  Self-loops and repeated pairs are rejected.
        Each pair is stored normalized as (min, max).
    """

    __slots__ = ("n", "edges", "adjacency", "_edge_ids")

    def __init__(self, n: int, edges) -> None:
        if n < 0:
            raise InputError("vertex count must be nonnegative")
        self.n = int(n)
        norm = []
        edge_ids: dict[tuple[int, int], int] = {}
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge ({u},{v}) out of range for n={self.n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if (u, v) in edge_ids:
                raise InputError(f"duplicate edge ({u},{v})")
            edge_ids[(u, v)] = len(norm)
            norm.append((u, v))
            adj[u].append(v)
            adj[v].append(u)
        self.edges: tuple[tuple[int, int], ...] = tuple(norm)
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(nb)) for nb in adj
        )
        self._edge_ids = edge_ids

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} out of range for n={self.n}")
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} out of range for n={self.n}")
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_ids

    def edge_id(self, u: int, v: int) -> int:
        """Edge index of the pair {u, v}."""
        try:
            return self._edge_ids[(min(u, v), max(u, v))]
        except KeyError:
            raise InputError(f"no edge ({u},{v})") from None

    def degrees(self) -> np.ndarray:
        return np.array([len(nb) for nb in self.adjacency], dtype=np.int64)

    def max_degree(self) -> int:
        return max((len(nb) for nb in self.adjacency), default=0)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class OrientedGraph:
    """A Graph plus a head/foot assignment per edge.

    ``heads[i]`` is the head vertex e+ of edge i; the other endpoint is the
    foot e-.
    """

    base: Graph
    heads: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.heads) != self.base.m:
            raise InputError("one head per edge required")
        for i, (u, v) in enumerate(self.base.edges):
            if self.heads[i] not in (u, v):
                raise InputError(f"head of edge {i} must be one of its endpoints")

    @classmethod
    def default(cls, g: Graph) -> "OrientedGraph":
        """Deterministic orientation with foot = min(u, v)."""
        return cls(g, tuple(v for _, v in g.edges))

    @classmethod
    def random(cls, g: Graph, rng: np.random.Generator) -> "OrientedGraph":
        flips = rng.integers(0, 2, size=g.m)
        return cls(g, tuple(e[1 - f] for e, f in zip(g.edges, flips)))

    def head(self, i: int) -> int:
        return self.heads[i]

    def foot(self, i: int) -> int:
        u, v = self.base.edges[i]
        return u if self.heads[i] == v else v


def is_bipartite(g: Graph) -> tuple[bool, list[int] | None]:
    """Whether g admits a proper 2-coloring, with a witness when it does.

    Disconnected graphs are handled component-wise (all components must be
    bipartite).
    """
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False, None
    return True, color


def bipartite_component_count(g: Graph) -> int:
    """Number of connected components that are bipartite.

    This is the kernel dimension of D + A, the eta appearing in the -2
    multiplicity of the symmetric effective Hamiltonian.
    """
    total = 0
    for comp in connected_components(g):
        sub, _ = induced_subgraph(g, comp)
        if is_bipartite(sub)[0]:
            total += 1
    return total


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex partition into connected components, each sorted, by min vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n == 0 or len(connected_components(g)) == 1


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``vertices``; returns it with the new-to-old map.

    New vertex ids follow ascending old ids; induced edges keep g's edge
    order.
    """
    old = sorted(set(int(v) for v in vertices))
    for v in old:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} out of range")
    new_of = {v: i for i, v in enumerate(old)}
    edges = [
        (new_of[u], new_of[v])
        for u, v in g.edges
        if u in new_of and v in new_of
    ]
    return Graph(len(old), edges), old


def induced_ball(g: Graph, center: int, r: int) -> tuple[Graph, list[int]]:
    """Subgraph induced on the ball {y : d(center, y) <= r}."""
    if not 0 <= center < g.n:
        raise InputError(f"vertex {center} out of range")
    if r < 0:
        raise InputError("radius must be nonnegative")
    dist = {center: 0}
    queue = deque([center])
    while queue:
        u = queue.popleft()
        if dist[u] == r:
            continue
        for w in g.adjacency[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return induced_subgraph(g, dist.keys())


def _shortest_odd_closed_walk(g: Graph) -> tuple[int, list[int]] | None:
    """Length and witness of a shortest odd cycle, or None if bipartite.

    BFS from every vertex; a non-tree edge joining two vertices on the same
    BFS parity closes an odd walk through the root.  The global minimum over
    roots is attained by a simple cycle.
    """
    best_len = None
    best_cycle = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best_len is not None and 2 * dist[u] + 1 >= best_len:
                break
            for w in g.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif dist[w] == dist[u] and parent[u] != w:
                    if best_len is None or 2 * dist[u] + 1 < best_len:
                        walk = _closing_walk(parent, u, w)
                        if walk is not None and (
                            best_len is None or len(walk) < best_len
                        ):
                            best_len, best_cycle = len(walk), walk
    if best_len is None:
        return None
    return best_len, best_cycle


def _closing_walk(parent, u, w):
    """Concatenate root paths of u and w; valid only if they form a cycle."""
    pu, pw = [u], [w]
    while parent[pu[-1]] != -1:
        pu.append(parent[pu[-1]])
    while parent[pw[-1]] != -1:
        pw.append(parent[pw[-1]])
    # strip the common tail above the meeting point
    while len(pu) > 1 and len(pw) > 1 and pu[-2] == pw[-2]:
        pu.pop()
        pw.pop()
    cycle = pu[:-1] + pw[::-1]
    return cycle if len(set(cycle)) == len(cycle) else None


def shortest_odd_cycle_length(g: Graph) -> int | None:
    """Length of a shortest odd cycle, or None when g is bipartite."""
    found = _shortest_odd_closed_walk(g)
    return None if found is None else found[0]


def random_layout(
    n: int, rng: np.random.Generator, max_degree: int = 3, extra_edges: int | None = None
) -> Graph:
    """Random connected graph with the given degree cap.

    Grown as a random tree under the cap, then densified with random extra
    edges.  Used as the property-test corpus; with cap 3 these are exactly
    the finite layouts of interest.
    """
    if n <= 0:
        raise InputError("need at least one vertex")
    edges = []
    deg = [0] * n
    for v in range(1, n):
        open_slots = [u for u in range(v) if deg[u] < max_degree]
        if not open_slots:
            raise InputError("degree cap too small for a spanning tree")
        u = int(rng.choice(open_slots))
        edges.append((u, v))
        deg[u] += 1
        deg[v] += 1
    if extra_edges is None:
        extra_edges = int(rng.integers(0, max(1, n // 2) + 1))
    present = set(edges)
    for _ in range(extra_edges):
        cand = [u for u in range(n) if deg[u] < max_degree]
        rng.shuffle(cand)
        placed = False
        for i in range(len(cand)):
            for j in range(i + 1, len(cand)):
                u, v = sorted((cand[i], cand[j]))
                if (u, v) not in present:
                    present.add((u, v))
                    edges.append((u, v))
                    deg[u] += 1
                    deg[v] += 1
                    placed = True
                    break
            if placed:
                break
    return Graph(n, edges)
