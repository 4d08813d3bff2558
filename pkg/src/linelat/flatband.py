"""Compact-support flat-band eigenstates on edges of a layout graph.

A simple cycle in the layout supports an exact eigenvector of the edge
Hamiltonian at -2: alternating +-1 around an even cycle for the symmetric
flavor, and orientation-compensated +1 around any cycle for the
antisymmetric flavor.  Both lie in the kernel of the transposed incidence
matrix, so the eigenvalue equation holds exactly in integer arithmetic;
floating point enters only at normalization.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .graphs import Graph, OrientedGraph, _shortest_odd_closed_walk
from .operators import SparseSymMatrix


@dataclass(frozen=True)
class EdgeState:
    """Finitely supported edge vector with integer signs on one cycle."""

    graph: Graph
    flavor: str
    cycle: tuple[int, ...]
    signs: dict[int, int]
    orientation: OrientedGraph | None = None

    def integer_vector(self) -> np.ndarray:
        v = np.zeros(self.graph.m, dtype=np.int64)
        for e, s in self.signs.items():
            v[e] = s
        return v

    def vector(self) -> np.ndarray:
        v = self.integer_vector().astype(float)
        return v / np.linalg.norm(v)


def _check_cycle(g: Graph, cycle) -> tuple[int, ...]:
    cyc = tuple(int(v) for v in cycle)
    if len(cyc) < 3:
        raise InputError("a cycle needs at least 3 vertices")
    if len(set(cyc)) != len(cyc):
        raise InputError("cycle revisits a vertex")
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        if not g.has_edge(a, b):
            raise InputError(f"cycle step ({a},{b}) is not an edge")
    return cyc


def compact_state_s(g: Graph, cycle) -> EdgeState:
    """Alternating +-1 state on an even cycle; H_s eigenvector at -2."""
    cyc = _check_cycle(g, cycle)
    if len(cyc) % 2:
        raise InputError("symmetric compact states require an even cycle")
    signs = {}
    for i, (a, b) in enumerate(zip(cyc, cyc[1:] + cyc[:1])):
        signs[g.edge_id(a, b)] = 1 if i % 2 == 0 else -1
    return EdgeState(g, "s", cyc, signs)


def compact_state_a(og: OrientedGraph | Graph, cycle) -> EdgeState:
    """Cycle state for the oriented flavor; H_a eigenvector at -2.

    The amplitude of each cycle edge is +1 when its stored orientation
    follows the traversal and -1 otherwise, which is exactly the per-edge
    sign flip taking the uniform-gauge state into the given orientation.
    """
    if isinstance(og, Graph):
        og = OrientedGraph.default(og)
    g = og.base
    cyc = _check_cycle(g, cycle)
    signs = {}
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        e = g.edge_id(a, b)
        signs[e] = 1 if og.head(e) == b else -1
    return EdgeState(g, "a", cyc, signs, orientation=og)


def verify_eigenstate(h: SparseSymMatrix, vector, energy: float) -> float:
    """Residual norm ||H v - E v||_2."""
    v = np.asarray(vector, dtype=float)
    if v.shape != (h.dim,):
        raise InputError("vector length does not match matrix dimension")
    return float(np.linalg.norm(h.matvec(v) - energy * v))


def exact_integer_residual(
    h: SparseSymMatrix, state: EdgeState, energy: int = -2
) -> int:
    """Max-abs entry of H v - E v in exact int64 arithmetic (v unnormalized)."""
    if not np.issubdtype(h.vals.dtype, np.integer):
        raise InputError("exact check requires an integer matrix")
    v = state.integer_vector()
    if len(v) != h.dim:
        raise InputError("state does not match matrix dimension")
    res = -energy * v
    np.add.at(res, h.rows, h.vals * v[h.cols])
    off = h.rows != h.cols
    np.add.at(res, h.cols[off], h.vals[off] * v[h.rows[off]])
    return int(np.abs(res).max())


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for forests."""
    found = _shortest_any_cycle(g)
    return None if found is None else len(found)


def find_cycle(
    g: Graph, parity: str = "any", max_len: int | None = None
) -> tuple[int, ...] | None:
    """A shortest simple cycle of the requested parity, up to max_len.

    max_len defaults to twice the girth, which covers the face and
    face-pair cycles that carry the smallest compact states.
    """
    if parity not in ("any", "odd", "even"):
        raise InputError("parity must be 'any', 'odd', or 'even'")
    shortest = _shortest_any_cycle(g)
    if shortest is None:
        return None
    if max_len is None:
        max_len = 2 * len(shortest)
    if parity == "any":
        return tuple(shortest) if len(shortest) <= max_len else None
    if parity == "odd":
        found = _shortest_odd_closed_walk(g)
        if found is None or found[0] > max_len:
            return None
        return tuple(found[1])
    # even: the girth cycle settles it unless the graph is odd-girthed
    if len(shortest) % 2 == 0:
        return tuple(shortest) if len(shortest) <= max_len else None
    cyc = _shortest_even_cycle_dfs(g, max_len)
    return None if cyc is None else tuple(cyc)


def _shortest_any_cycle(g: Graph) -> list[int] | None:
    """Shortest cycle via BFS from every vertex; the globally minimal
    closing walk is a simple cycle."""
    best = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= len(best) + 1:
                break
            for w in g.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w and parent[w] != u:
                    walk = _join_walk(parent, u, w)
                    if walk is not None and (best is None or len(walk) < len(best)):
                        best = walk
    return best


def _join_walk(parent, u, w):
    pu, pw = [u], [w]
    while parent[pu[-1]] != -1:
        pu.append(parent[pu[-1]])
    while parent[pw[-1]] != -1:
        pw.append(parent[pw[-1]])
    while len(pu) > 1 and len(pw) > 1 and pu[-2] == pw[-2]:
        pu.pop()
        pw.pop()
    cycle = pu[:-1] + pw[::-1]
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        return None
    return cycle


def _shortest_even_cycle_dfs(g: Graph, max_len: int) -> list[int] | None:
    """Exact bounded search for a shortest even simple cycle.

    Depth-first enumeration from each start vertex (taken as the cycle
    minimum), pruned by the BFS distance back to the start.  Layout graphs
    have degree at most 3, so the branching is mild for the lengths that
    matter here.
    """
    best: list[int] | None = None
    for start in range(g.n):
        limit = max_len if best is None else min(max_len, len(best) - 2)
        if limit < 4:
            break
        dist = _bfs_dist(g, start, limit)
        stack = [(start, [start], {start})]
        while stack:
            u, path, onpath = stack.pop()
            for w in g.adjacency[u]:
                if w < start:
                    continue
                if w == start:
                    if (
                        len(path) >= 3
                        and len(path) % 2 == 0
                        and (best is None or len(path) < len(best))
                    ):
                        best = list(path)
                        limit = min(max_len, len(best) - 2)
                    continue
                if w in onpath:
                    continue
                d = dist.get(w)
                # cycle through w needs at least len(path) + 1 + d edges
                if d is None or len(path) + 1 + d > limit:
                    continue
                stack.append((w, path + [w], onpath | {w}))
    return best


def _bfs_dist(g: Graph, start: int, limit: int) -> dict[int, int]:
    dist = {start: 0}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        if dist[u] >= limit:
            continue
        for w in g.adjacency[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def face_pair_cycle(g: Graph, face_a, face_b) -> tuple[int, ...] | None:
    """Boundary cycle of two faces sharing exactly one edge, or None.

    Two odd faces glued along an edge bound an even cycle, the support of
    the smallest symmetric compact states in odd-faced tessellations.
    """
    ea = {frozenset((face_a[i], face_a[(i + 1) % len(face_a)])) for i in range(len(face_a))}
    eb = {frozenset((face_b[i], face_b[(i + 1) % len(face_b)])) for i in range(len(face_b))}
    shared = ea & eb
    if len(shared) != 1:
        return None
    (shared_edge,) = shared
    u, v = tuple(shared_edge)
    cyc = []
    # walk face_a from u away from v, then face_b from v away from u
    for face, a, b in ((face_a, u, v), (face_b, v, u)):
        n = len(face)
        i = face.index(a)
        step = 1 if face[(i + 1) % n] != b else -1
        walk = [face[(i + step * t) % n] for t in range(n)]
        if walk[-1] != b:
            return None
        cyc.extend(walk[:-1])
    if len(set(cyc)) != len(cyc):
        return None
    return tuple(cyc)
