"""Pure NumPy/SciPy fallback for the compiled kernels."""
from __future__ import annotations

import numpy as np


def csr_matvec(indptr, indices, data, x, out):
    """out = A @ x for a full CSR matrix, via reduceat on the row slices."""
    prod = data * x[indices]
    # reduceat misbehaves on empty rows; guard with explicit segment sums
    nz = np.flatnonzero(np.diff(indptr))
    out[:] = 0.0
    if len(nz):
        out[nz] = np.add.reduceat(prod, indptr[nz])


def emin_over_subsets(n, eu, ev):
    """Reference implementation of the partition minimum (slow past n ~ 14)."""
    full = 1 << n
    nbr = [0] * n
    for u, v in zip(eu, ev):
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    e = np.zeros(full, dtype=np.int64)
    for s in range(1, full):
        low = s & (-s)
        e[s] = e[s ^ low] + bin(nbr[low.bit_length() - 1] & (s ^ low)).count("1")
    emin = e.copy()
    for s in range(1, full):
        cand = int(e[s])
        t = (s - 1) & s
        while t > (s ^ t):
            c = int(e[t]) + int(e[s ^ t])
            if c < cand:
                cand = c
            t = (t - 1) & s
        emin[s] = cand
    return emin
