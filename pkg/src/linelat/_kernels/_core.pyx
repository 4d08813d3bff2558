# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: CSR matvec for the Lanczos loop and the
subset-partition enumeration behind the bipartite Cheeger quantity."""

import numpy as np

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


def csr_matvec(long long[::1] indptr, long long[::1] indices,
               double[::1] data, double[::1] x, double[::1] out):
    """out = A @ x for a full CSR matrix (indptr, indices, data)."""
    cdef Py_ssize_t i, j, n = indptr.shape[0] - 1
    cdef double acc
    with nogil:
        for i in range(n):
            acc = 0.0
            for j in range(indptr[i], indptr[i + 1]):
                acc += data[j] * x[indices[j]]
            out[i] = acc


def emin_over_subsets(int n, long long[::1] eu, long long[::1] ev):
    """For every vertex subset S of an n-vertex graph (n <= 20), the minimum
    number of monochromatic edges over all 2-colorings of S.

    Equals min over partitions S = T u (S\\T) of e(T) + e(S\\T), where e(.)
    counts induced edges.  Returned as an int64 array indexed by bitmask.
    """
    cdef long long full = 1LL << n
    cdef long long m = eu.shape[0]
    nbr_np = np.zeros(n, dtype=np.int64)
    cdef long long[::1] nbr = nbr_np
    cdef long long i
    for i in range(m):
        nbr[eu[i]] |= 1LL << ev[i]
        nbr[ev[i]] |= 1LL << eu[i]

    e_np = np.zeros(full, dtype=np.int64)
    emin_np = np.zeros(full, dtype=np.int64)
    cdef long long[::1] e = e_np
    cdef long long[::1] emin = emin_np
    cdef long long S, T, rest, low, cand
    cdef int lowbit
    with nogil:
        for S in range(1, full):
            low = S & (-S)
            lowbit = __builtin_popcountll(low - 1)
            rest = S ^ low
            e[S] = e[rest] + __builtin_popcountll(nbr[lowbit] & rest)
        for S in range(1, full):
            # complementation is order-reversing on subsets of S, so the
            # halving condition T > S^T cuts the enumeration cleanly in two
            cand = e[S]
            T = (S - 1) & S
            while T > (S ^ T):
                if e[T] + e[S ^ T] < cand:
                    cand = e[T] + e[S ^ T]
                T = (T - 1) & S
            emin[S] = cand
    return emin_np
