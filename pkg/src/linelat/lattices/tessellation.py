"""Combinatorial construction of truncated {k,3} tessellations S_r(T_k).

Spherical for k <= 5 (tetrahedron, cube, dodecahedron), Euclidean for k = 6,
hyperbolic for k >= 7.  The construction is purely combinatorial: shells of
k-gon faces are attached along the boundary walk so that every vertex ends
with degree 3.  No hyperbolic coordinates are involved.

Shell j contains the faces at polygon distance j from the central face.  In
a trivalent tessellation the three faces around a vertex pairwise share an
edge, so polygon adjacency by shared vertex and by shared edge coincide and
there is no convention to choose.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import InputError
from ..graphs import Graph


@dataclass(frozen=True)
class TessellationBall:
    """The ball S_r(T_k): graph, faces per shell, and boundary data.

    boundary_cycle is the outer-face walk (empty once the spherical cases
    close); boundary_vertices is its vertex set.
    """

    k: int
    r: int
    graph: Graph
    faces: tuple[tuple[int, ...], ...]
    shell_of_face: tuple[int, ...]
    boundary_cycle: tuple[int, ...]

    @property
    def boundary_vertices(self) -> frozenset[int]:
        return frozenset(self.boundary_cycle)

    @property
    def closed(self) -> bool:
        return self.graph.n > 0 and not self.boundary_cycle


class _BallBuilder:
    def __init__(self, k: int):
        self.k = k
        self.deg: list[int] = []
        self.adj: list[set[int]] = []
        self.edges: list[tuple[int, int]] = []

    def new_vertex(self) -> int:
        self.deg.append(0)
        self.adj.append(set())
        return len(self.deg) - 1

    def add_edge(self, u: int, v: int) -> None:
        if v in self.adj[u]:
            return
        self.adj[u].add(v)
        self.adj[v].add(u)
        self.deg[u] += 1
        self.deg[v] += 1
        self.edges.append((min(u, v), max(u, v)))


def tessellation_ball(k: int, r: int) -> TessellationBall:
    """Build S_r(T_k): the central k-gon plus r coronas of faces.

    For k in {3, 4, 5} the construction terminates at the closed Platonic
    tessellation once r is large enough.
    """
    if k < 3:
        raise InputError("polygon side count k must be >= 3")
    if r < 0:
        raise InputError("shell radius r must be >= 0")

    b = _BallBuilder(k)
    center = [b.new_vertex() for _ in range(k)]
    for i in range(k):
        b.add_edge(center[i], center[(i + 1) % k])
    faces = [tuple(center)]
    shells = [0]
    boundary = list(center)
    closed = False

    for shell in range(1, r + 1):
        if closed:
            break
        if all(b.deg[v] == 3 for v in boundary):
            # graph already 3-regular: the outer hole is the last face
            if len(faces) < 3 * len(b.deg) // k:
                if len(boundary) != k:
                    raise AssertionError("closing hole is not a k-gon")
                faces.append(tuple(boundary))
                shells.append(shell)
            boundary = []
            closed = True
            break
        _corona(b, boundary, faces, shells, shell)
        if all(d == 3 for d in b.deg):
            if len(faces) == 3 * len(b.deg) // k:
                boundary = []
                closed = True

    graph = Graph(len(b.deg), b.edges)
    return TessellationBall(
        k=k,
        r=r,
        graph=graph,
        faces=tuple(faces),
        shell_of_face=tuple(shells),
        boundary_cycle=tuple(boundary),
    )


def _corona(b: _BallBuilder, boundary: list[int], faces, shells, shell: int) -> None:
    """Attach one shell of faces along the boundary walk, in place.

    Each new face covers a run of boundary edges between consecutive
    degree-2 vertices; those vertices receive spoke edges to new vertices
    shared with the neighboring faces.
    """
    k = b.k
    B = len(boundary)
    deg2 = [i for i in range(B) if b.deg[boundary[i]] == 2]
    if not deg2:
        raise AssertionError("no extendable boundary vertex in open ball")
    if len(deg2) == 1:
        raise AssertionError("degenerate boundary with a single open vertex")

    spoke: dict[int, int] = {}

    def spoke_of(i: int) -> int:
        if i not in spoke:
            spoke[i] = b.new_vertex()
        return spoke[i]

    new_boundary: list[int] = []
    for a in range(len(deg2)):
        i = deg2[a]
        j = deg2[(a + 1) % len(deg2)]
        run_len = (j - i) % B
        run = [boundary[(i + t) % B] for t in range(run_len + 1)]
        mids_needed = k - run_len - 3
        if mids_needed < -1:
            raise AssertionError(f"boundary run of {run_len} edges too long for k={k}")
        w_i = spoke_of(i)
        if mids_needed == -1:
            spoke[j] = w_i  # the two spokes of this face merge
            w_j = w_i
            mids: list[int] = []
        else:
            w_j = spoke_of(j)
            mids = [b.new_vertex() for _ in range(mids_needed)]
        b.add_edge(run[0], w_i)
        b.add_edge(run[-1], w_j)
        chain = [w_j] + mids + [w_i]
        for t in range(len(chain) - 1):
            if chain[t] != chain[t + 1]:
                b.add_edge(chain[t], chain[t + 1])
        face = [w_i] + run + ([w_j] if w_j != w_i else []) + mids
        if len(face) != k:
            raise AssertionError("face closed with wrong size")
        faces.append(tuple(face))
        shells.append(shell)
        new_boundary.extend([w_i] + mids[::-1])

    deduped: list[int] = []
    for v in new_boundary:
        if not deduped or deduped[-1] != v:
            deduped.append(v)
    while len(deduped) > 1 and deduped[0] == deduped[-1]:
        deduped.pop()
    boundary[:] = deduped
