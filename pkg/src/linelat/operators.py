"""Incidence matrices and the effective edge Hamiltonians.

With the sign convention t = -1 fixed throughout, the vertex Hamiltonian is
the adjacency matrix A itself.  The edge operators come from the incidence
factorizations

    M^t M = D + A,   M M^t = 2I + H_s,
    N^t N = D - A,   N N^t = 2I + H_a,

which hold exactly over the integers for every graph and orientation; the
builders here materialize H_s and H_a directly from the edge-pair weights
and the factorized forms are kept for validation.
"""
from __future__ import annotations

import numpy as np
from scipy.sparse import csr_matrix

from . import _kernels
from .errors import InputError
from .graphs import (
    Graph,
    OrientedGraph,
    bipartite_component_count,
    connected_components,
)


class SparseSymMatrix:
    """Symmetric sparse matrix stored as the upper triangle in COO form.

    Entries are kept exactly (int64 when integral); floating point enters
    only when a matvec or dense form is requested.  Instances are immutable
    and safe to share across threads.
    """

    __slots__ = ("dim", "rows", "cols", "vals", "_csr")

    def __init__(self, dim: int, rows, cols, vals) -> None:
        rows = np.asarray(rows, dtype=np.int64)
        cols = np.asarray(cols, dtype=np.int64)
        vals = np.asarray(vals)
        if not (rows.shape == cols.shape == vals.shape):
            raise InputError("rows, cols, vals must have equal length")
        if rows.size and (rows.min() < 0 or cols.min() < 0 or
                          max(rows.max(), cols.max()) >= dim):
            raise InputError("matrix entry out of range")
        if not np.all(np.isfinite(vals.astype(float))):
            raise InputError("matrix entries must be finite")
        swap = rows > cols
        rows2 = np.where(swap, cols, rows)
        cols2 = np.where(swap, rows, cols)
        order = np.lexsort((cols2, rows2))
        rows2, cols2, vals = rows2[order], cols2[order], vals[order]
        if rows2.size > 1:
            dup = (rows2[1:] == rows2[:-1]) & (cols2[1:] == cols2[:-1])
            if dup.any():
                raise InputError("duplicate entry for an unordered index pair")
        if np.issubdtype(vals.dtype, np.integer):
            vals = vals.astype(np.int64)
        else:
            vals = vals.astype(np.float64)
        self.dim = int(dim)
        self.rows = rows2
        self.cols = cols2
        self.vals = vals
        self._csr = None

    @property
    def nnz(self) -> int:
        return len(self.vals)

    def to_dense(self, dtype=None) -> np.ndarray:
        if dtype is None:
            dtype = self.vals.dtype
        out = np.zeros((self.dim, self.dim), dtype=dtype)
        out[self.rows, self.cols] = self.vals
        off = self.rows != self.cols
        out[self.cols[off], self.rows[off]] = self.vals[off]
        return out

    def trace(self) -> float:
        diag = self.rows == self.cols
        return float(self.vals[diag].sum()) if diag.any() else 0.0

    def abs_row_sums(self) -> np.ndarray:
        s = np.zeros(self.dim)
        a = np.abs(self.vals.astype(float))
        np.add.at(s, self.rows, a)
        off = self.rows != self.cols
        np.add.at(s, self.cols[off], a[off])
        return s

    def _full_csr(self):
        if self._csr is None:
            off = self.rows != self.cols
            r = np.concatenate([self.rows, self.cols[off]])
            c = np.concatenate([self.cols, self.rows[off]])
            v = np.concatenate([self.vals, self.vals[off]]).astype(np.float64)
            mat = csr_matrix((v, (r, c)), shape=(self.dim, self.dim))
            mat.sum_duplicates()
            self._csr = (
                mat,
                mat.indptr.astype(np.int64),
                mat.indices.astype(np.int64),
                mat.data.astype(np.float64),
            )
        return self._csr

    def matvec(self, x: np.ndarray, out: np.ndarray | None = None) -> np.ndarray:
        mat, indptr, indices, data = self._full_csr()
        x = np.ascontiguousarray(x, dtype=np.float64)
        if out is None:
            out = np.empty(self.dim)
        if _kernels.BACKEND == "compiled":
            _kernels.csr_matvec(indptr, indices, data, x, out)
        else:
            out[:] = mat @ x
        return out

    def __repr__(self) -> str:
        return f"SparseSymMatrix(dim={self.dim}, nnz={self.nnz})"


def adjacency(g: Graph) -> SparseSymMatrix:
    """Adjacency matrix A; equals the vertex Hamiltonian for t = -1."""
    rows = [u for u, _ in g.edges]
    cols = [v for _, v in g.edges]
    return SparseSymMatrix(g.n, rows, cols, np.ones(g.m, dtype=np.int64))


def signed_laplacian(g: Graph, sign: str = "minus") -> SparseSymMatrix:
    """D - A (the graph Laplacian) or D + A."""
    if sign not in ("plus", "minus"):
        raise InputError("sign must be 'plus' or 'minus'")
    s = 1 if sign == "plus" else -1
    rows = list(range(g.n)) + [u for u, _ in g.edges]
    cols = list(range(g.n)) + [v for _, v in g.edges]
    vals = [g.degree(v) for v in range(g.n)] + [s] * g.m
    return SparseSymMatrix(g.n, rows, cols, np.array(vals, dtype=np.int64))


class IncidenceMatrix:
    """Edge-by-vertex incidence matrix, flavor 's' (all ones) or 'a'
    (+1 at the head, -1 at the foot)."""

    __slots__ = ("flavor", "m", "n", "endpoints", "signs")

    def __init__(self, flavor, m, n, endpoints, signs):
        self.flavor = flavor
        self.m = m
        self.n = n
        self.endpoints = endpoints
        self.signs = signs

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.m, self.n), dtype=np.int64)
        for e in range(self.m):
            out[e, self.endpoints[e, 0]] += self.signs[e, 0]
            out[e, self.endpoints[e, 1]] += self.signs[e, 1]
        return out

    def __repr__(self):
        return f"IncidenceMatrix(flavor={self.flavor!r}, m={self.m}, n={self.n})"


def incidence_s(g: Graph) -> IncidenceMatrix:
    endpoints = np.array(g.edges, dtype=np.int64).reshape(g.m, 2)
    signs = np.ones((g.m, 2), dtype=np.int64)
    return IncidenceMatrix("s", g.m, g.n, endpoints, signs)


def incidence_a(og: OrientedGraph) -> IncidenceMatrix:
    g = og.base
    endpoints = np.zeros((g.m, 2), dtype=np.int64)
    signs = np.zeros((g.m, 2), dtype=np.int64)
    for e in range(g.m):
        endpoints[e] = (og.head(e), og.foot(e))
        signs[e] = (1, -1)
    return IncidenceMatrix("a", g.m, g.n, endpoints, signs)


def _edge_pair_entries(g: Graph, role_sign):
    rows, cols, vals = [], [], []
    for v in range(g.n):
        inc = [g.edge_id(v, w) for w in g.adjacency[v]]
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                e1, e2 = inc[a], inc[b]
                rows.append(min(e1, e2))
                cols.append(max(e1, e2))
                vals.append(role_sign(v, e1) * role_sign(v, e2))
    return rows, cols, np.array(vals, dtype=np.int64)


def effective_hamiltonian(
    g: Graph,
    flavor: str = "s",
    orientation: OrientedGraph | None = None,
    validate: bool = False,
) -> SparseSymMatrix:
    """H_s or H_a on the edge space, built directly from the pair weights.

    For flavor 'a' an orientation is required; when omitted, the
    deterministic default (foot = smaller vertex id) is synthesized.  With
    validate=True the factorized form (M M^t - 2I resp. N N^t - 2I) is
    recomputed densely and compared entrywise, exactly.
    """
    if flavor == "s":
        rows, cols, vals = _edge_pair_entries(g, lambda v, e: 1)
        h = SparseSymMatrix(g.m, rows, cols, vals)
        if validate:
            mm = incidence_s(g).to_dense()
            ref = mm @ mm.T - 2 * np.eye(g.m, dtype=np.int64)
            if not np.array_equal(h.to_dense(np.int64), ref):
                raise AssertionError("H_s disagrees with M M^t - 2I")
        return h
    if flavor == "a":
        og = orientation if orientation is not None else OrientedGraph.default(g)
        if og.base is not g and og.base != g:
            raise InputError("orientation belongs to a different graph")
        heads = og.heads

        def role(v, e):
            return 1 if heads[e] == v else -1

        rows, cols, vals = _edge_pair_entries(g, role)
        h = SparseSymMatrix(g.m, rows, cols, vals)
        if validate:
            nn = incidence_a(og).to_dense()
            ref = nn @ nn.T - 2 * np.eye(g.m, dtype=np.int64)
            if not np.array_equal(h.to_dense(np.int64), ref):
                raise AssertionError("H_a disagrees with N N^t - 2I")
        return h
    raise InputError("flavor must be 's' or 'a'")


def flat_band_count_formula(g: Graph, flavor: str) -> int:
    """Exact multiplicity of -2 in the effective Hamiltonian: m - n + eta
    for flavor 's' (eta = number of bipartite components) and m - n + c for
    flavor 'a' (c = number of components)."""
    if flavor == "s":
        extra = bipartite_component_count(g)
    elif flavor == "a":
        extra = len(connected_components(g))
    else:
        raise InputError("flavor must be 's' or 'a'")
    return g.m - g.n + extra
