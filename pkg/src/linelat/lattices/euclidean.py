"""Euclidean lattice unit cells and their finite open/torus realizations."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import InputError
from ..graphs import Graph

FAMILIES = (
    "graphene",
    "square",
    "kagome",
    "heptagon_pentagon_graphene",
    "heptagon_pentagon_kagome",
    "octagon_square_kagome",
    "lieb",
)


@dataclass(frozen=True, eq=False)
class PeriodicLattice:
    """Two-dimensional periodic tight-binding lattice with |t| = 1 bonds.

    basis: rows a1, a2 (dimensionless lengths); sites: fractional positions
    in the unit cell; hoppings: (site i, site j, (n1, n2)) meaning a bond
    from site i in cell (0,0) to site j in cell (n1, n2).  Each physical
    bond is stored once; consumers symmetrize.
    """

    basis: np.ndarray
    sites: np.ndarray
    hoppings: tuple[tuple[int, int, tuple[int, int]], ...]

    def __post_init__(self):
        object.__setattr__(self, "basis", np.asarray(self.basis, dtype=float))
        object.__setattr__(self, "sites", np.asarray(self.sites, dtype=float))
        if self.basis.shape != (2, 2):
            raise InputError("basis must be two 2-vectors")
        if self.sites.ndim != 2 or self.sites.shape[1] != 2:
            raise InputError("sites must be J fractional 2-vectors")
        seen = set()
        for i, j, (n1, n2) in self.hoppings:
            if not (0 <= i < self.nsites and 0 <= j < self.nsites):
                raise InputError(f"hopping site out of range: {(i, j)}")
            if i == j and n1 == 0 and n2 == 0:
                raise InputError("on-site hopping is not allowed")
            canon = min((i, j, n1, n2), (j, i, -n1, -n2))
            if canon in seen:
                raise InputError(f"hopping {(i, j, (n1, n2))} stored twice")
            seen.add(canon)

    @property
    def nsites(self) -> int:
        return self.sites.shape[0]

    def site_degrees(self) -> np.ndarray:
        deg = np.zeros(self.nsites, dtype=np.int64)
        for i, j, _ in self.hoppings:
            deg[i] += 1
            deg[j] += 1
        return deg

    def cartesian(self, frac) -> np.ndarray:
        return np.asarray(frac, dtype=float) @ self.basis

    def hop_vector(self, h: int) -> np.ndarray:
        i, j, (n1, n2) = self.hoppings[h]
        frac = self.sites[j] + (n1, n2) - self.sites[i]
        return self.cartesian(frac)


@dataclass(frozen=True)
class FiniteLattice:
    """A finite realization of a PeriodicLattice.

    vertex_cells[v] = (i1, i2, site); edge_vectors are cartesian bond
    vectors (including wrap displacement on the torus), usable for face
    tracing.
    """

    graph: Graph
    lattice: PeriodicLattice
    size: tuple[int, int]
    boundary: str
    vertex_cells: tuple[tuple[int, int, int], ...]
    positions: np.ndarray = field(repr=False)
    edge_vectors: np.ndarray = field(repr=False)


def graphene_lattice() -> PeriodicLattice:
    basis = np.array([[1.0, 0.0], [0.5, np.sqrt(3) / 2]])
    sites = np.array([[0.0, 0.0], [1 / 3, 1 / 3]])
    hops = ((1, 0, (0, 0)), (1, 0, (1, 0)), (1, 0, (0, 1)))
    return PeriodicLattice(basis, sites, hops)


def square_lattice() -> PeriodicLattice:
    basis = np.eye(2)
    sites = np.zeros((1, 2))
    return PeriodicLattice(basis, sites, ((0, 0, (1, 0)), (0, 0, (0, 1))))


def lieb_lattice() -> PeriodicLattice:
    basis = np.eye(2)
    sites = np.array([[0.0, 0.0], [0.5, 0.0], [0.0, 0.5]])
    hops = (
        (0, 1, (0, 0)),
        (1, 0, (1, 0)),
        (0, 2, (0, 0)),
        (2, 0, (0, 1)),
    )
    return PeriodicLattice(basis, sites, hops)


def octagon_square_lattice() -> PeriodicLattice:
    """Truncated square tiling (the 4.8.8 net): 3-regular and bipartite,
    with one square and one octagon face per cell."""
    basis = np.eye(2)
    d = 0.25
    sites = np.array(
        [[0.5 + d, 0.5], [0.5, 0.5 + d], [0.5 - d, 0.5], [0.5, 0.5 - d]]
    )
    hops = (
        (0, 1, (0, 0)),
        (1, 2, (0, 0)),
        (2, 3, (0, 0)),
        (3, 0, (0, 0)),
        (0, 2, (1, 0)),
        (1, 3, (0, 1)),
    )
    return PeriodicLattice(basis, sites, hops)


def heptagon_pentagon_graphene_lattice() -> PeriodicLattice:
    """3-regular non-bipartite tiling with two pentagon and two heptagon
    faces per cell, in the area of four graphene cells.

    Realized as a 2x2 graphene supercell with one bond rotated a quarter
    turn about its midpoint (the rotation trades the four hexagons for a
    5-7-5-7 census, which is what the face-tracing validation pins down).
    """
    a1 = np.array([1.0, 0.0])
    a2 = np.array([0.5, np.sqrt(3) / 2])
    basis = np.array([2 * a1, 2 * a2])

    def sid(c1: int, c2: int, s: int) -> int:
        return ((c1 % 2) * 2 + (c2 % 2)) * 2 + s

    cart = np.zeros((8, 2))
    for c1 in range(2):
        for c2 in range(2):
            base = c1 * a1 + c2 * a2
            cart[sid(c1, c2, 0)] = base
            cart[sid(c1, c2, 1)] = base + (a1 + a2) / 3
    hops = []
    for c1 in range(2):
        for c2 in range(2):
            u = sid(c1, c2, 1)
            for d1, d2 in ((0, 0), (1, 0), (0, 1)):
                t1, t2 = c1 + d1, c2 + d2
                hops.append((u, sid(t1, t2, 0), (t1 // 2, t2 // 2)))

    # rotate the B(0,0)-A(1,0) bond and reattach its neighbors by proximity
    u, v = sid(0, 0, 1), sid(1, 0, 0)
    ti = hops.index((u, v, (0, 0)))
    mid = (cart[u] + cart[v]) / 2
    rot = np.array([[0.0, -1.0], [1.0, 0.0]])
    cart[u] = mid + rot @ (cart[u] - mid)
    cart[v] = mid + rot @ (cart[v] - mid)
    for idx, (x, y, off) in enumerate(hops):
        if idx == ti or (x not in (u, v) and y not in (u, v)):
            continue
        shift = off[0] * basis[0] + off[1] * basis[1]
        if x in (u, v):
            target = cart[y] + shift
            best = u if np.linalg.norm(target - cart[u]) < np.linalg.norm(
                target - cart[v]
            ) else v
            hops[idx] = (best, y, off)
        else:
            target = cart[x] - shift
            best = u if np.linalg.norm(cart[u] - target) < np.linalg.norm(
                cart[v] - target
            ) else v
            hops[idx] = (x, best, off)

    frac = cart @ np.linalg.inv(basis)
    return PeriodicLattice(basis, frac, tuple(hops))


def medial_lattice(pl: PeriodicLattice) -> PeriodicLattice:
    """Line-graph (medial) lattice: one site per bond, at its midpoint,
    adjacent when the underlying bonds share an endpoint."""
    from ..bloch import line_graph_lattice

    return line_graph_lattice(pl)[0]


def kagome_lattice() -> PeriodicLattice:
    return medial_lattice(graphene_lattice())


def heptagon_pentagon_kagome_lattice() -> PeriodicLattice:
    return medial_lattice(heptagon_pentagon_graphene_lattice())


def octagon_square_kagome_lattice() -> PeriodicLattice:
    return medial_lattice(octagon_square_lattice())


_FAMILY_BUILDERS = {
    "graphene": graphene_lattice,
    "square": square_lattice,
    "kagome": kagome_lattice,
    "heptagon_pentagon_graphene": heptagon_pentagon_graphene_lattice,
    "heptagon_pentagon_kagome": heptagon_pentagon_kagome_lattice,
    "octagon_square_kagome": octagon_square_kagome_lattice,
    "lieb": lieb_lattice,
}


def family_lattice(family: str) -> PeriodicLattice:
    try:
        return _FAMILY_BUILDERS[family]()
    except KeyError:
        raise InputError(
            f"unknown family {family!r}; choose from {', '.join(FAMILIES)}"
        ) from None


def finite_lattice(
    pl: PeriodicLattice, size: tuple[int, int], boundary: str = "torus"
) -> FiniteLattice:
    """Realize N1 x N2 cells of pl with torus wrapping or hard-wall (open)
    truncation.

    Torus sizes small enough to identify two bonds (or close a bond onto a
    single vertex) are rejected.
    """
    n1, n2 = int(size[0]), int(size[1])
    if n1 < 1 or n2 < 1:
        raise InputError("size must be at least 1 in each direction")
    if boundary not in ("torus", "open"):
        raise InputError("boundary must be 'torus' or 'open'")
    j = pl.nsites

    def vid(c1: int, c2: int, s: int) -> int:
        return (c1 * n2 + c2) * j + s

    edges = []
    vecs = []
    seen = {}
    for c1 in range(n1):
        for c2 in range(n2):
            for i, jj, (m1, m2) in pl.hoppings:
                t1, t2 = c1 + m1, c2 + m2
                if boundary == "open":
                    if not (0 <= t1 < n1 and 0 <= t2 < n2):
                        continue
                else:
                    t1 %= n1
                    t2 %= n2
                u = vid(c1, c2, i)
                v = vid(t1, t2, jj)
                if u == v:
                    raise InputError(
                        f"torus of size {n1}x{n2} closes a bond into a loop"
                    )
                key = (min(u, v), max(u, v))
                if key in seen:
                    raise InputError(
                        f"torus of size {n1}x{n2} identifies two distinct bonds"
                    )
                seen[key] = True
                edges.append((u, v))
                frac = pl.sites[jj] + (m1, m2) - pl.sites[i]
                vecs.append(pl.cartesian(frac))
    graph = Graph(n1 * n2 * j, edges)
    cells = tuple(
        (c1, c2, s) for c1 in range(n1) for c2 in range(n2) for s in range(j)
    )
    positions = np.array(
        [pl.cartesian(pl.sites[s] + (c1, c2)) for c1, c2, s in cells]
    )
    # Graph normalizes each pair to (min, max); flip vectors accordingly
    ev = np.zeros((graph.m, 2))
    for raw_edge, vec in zip(edges, vecs):
        eid = graph.edge_id(*raw_edge)
        ev[eid] = vec if raw_edge[0] <= raw_edge[1] else -vec
    return FiniteLattice(
        graph=graph,
        lattice=pl,
        size=(n1, n2),
        boundary=boundary,
        vertex_cells=cells,
        positions=positions,
        edge_vectors=ev,
    )


def euclidean_lattice(
    family: str, size: tuple[int, int], boundary: str = "torus"
) -> FiniteLattice:
    """Finite realization of a named Euclidean family (see FAMILIES)."""
    return finite_lattice(family_lattice(family), size, boundary)
