"""Face tracing from straight-line embeddings (plane, torus, or sphere).

Given per-edge geometric direction vectors, the cyclic order of darts
around each vertex defines a rotation system; tracing its orbits yields the
face census.  Used to validate the hand-encoded Euclidean unit cells and
the C60 construction, and to enumerate plaquettes for flat-band states.
"""
from __future__ import annotations

import numpy as np

from ..graphs import Graph


def trace_faces(g: Graph, edge_vectors: np.ndarray) -> list[tuple[int, ...]]:
    """Faces of the embedded graph as vertex cycles, consistently oriented.

    edge_vectors[i] is the geometric vector of edge i from its first stored
    endpoint to its second (for torus graphs, including the wrap-around
    displacement).  On a torus every orbit is a face (V - E + F = 0); in the
    plane the outer face appears as one extra orbit.
    """
    angles = np.arctan2(edge_vectors[:, 1], edge_vectors[:, 0])
    darts_at: list[list[tuple[float, int, int]]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        darts_at[u].append((angles[i], i, 0))
        a = angles[i] + np.pi
        if a > np.pi:
            a -= 2 * np.pi
        darts_at[v].append((a, i, 1))
    nxt: dict[tuple[int, int], tuple[int, int]] = {}
    for lst in darts_at:
        lst.sort()
        for t, (_, i, d) in enumerate(lst):
            _, i2, d2 = lst[(t + 1) % len(lst)]
            nxt[(i, d)] = (i2, d2)

    faces = []
    seen: set[tuple[int, int]] = set()
    for start in nxt:
        if start in seen:
            continue
        cyc = []
        d = start
        while d not in seen:
            seen.add(d)
            i, side = d
            u, v = g.edges[i]
            cyc.append(u if side == 0 else v)
            d = nxt[(i, 1 - side)]  # successor of the reversed dart
        faces.append(tuple(cyc))
    return faces


def trace_faces_sphere(g: Graph, positions: np.ndarray) -> list[tuple[int, ...]]:
    """Faces of a 3D convex (spherical) embedding, via tangent-plane angles."""
    darts_at: list[list[tuple[float, int, int]]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        for vert, side in ((u, 0), (v, 1)):
            other = v if side == 0 else u
            p = positions[vert]
            nrm = p / np.linalg.norm(p)
            ref = np.array([1.0, 0.0, 0.0])
            if abs(nrm @ ref) > 0.9:
                ref = np.array([0.0, 1.0, 0.0])
            e1 = ref - (ref @ nrm) * nrm
            e1 /= np.linalg.norm(e1)
            e2 = np.cross(nrm, e1)
            d = positions[other] - p
            darts_at[vert].append((float(np.arctan2(d @ e2, d @ e1)), i, side))
    nxt: dict[tuple[int, int], tuple[int, int]] = {}
    for lst in darts_at:
        lst.sort()
        for t, (_, i, d) in enumerate(lst):
            _, i2, d2 = lst[(t + 1) % len(lst)]
            nxt[(i, d)] = (i2, d2)
    faces = []
    seen: set[tuple[int, int]] = set()
    for start in nxt:
        if start in seen:
            continue
        cyc = []
        d = start
        while d not in seen:
            seen.add(d)
            i, side = d
            u, v = g.edges[i]
            cyc.append(u if side == 0 else v)
            d = nxt[(i, 1 - side)]

        faces.append(tuple(cyc))
    return faces


def face_census(faces) -> dict[int, int]:
    out: dict[int, int] = {}
    for f in faces:
        out[len(f)] = out.get(len(f), 0) + 1
    return out
