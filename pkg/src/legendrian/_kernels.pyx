# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled grid Dijkstra over the 8-neighbour lattice of a surface sample."""

import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, asin, INFINITY
from libc.stdlib cimport malloc, free

cnp.import_array()

cdef int DI[8]
cdef int DJ[8]
DI[:] = [-1, -1, -1, 0, 0, 1, 1, 1]
DJ[:] = [-1, 0, 1, -1, 1, -1, 0, 1]


cdef inline void _push(double* hk, Py_ssize_t* hv, Py_ssize_t* n, double key, Py_ssize_t val) nogil:
    cdef Py_ssize_t i = n[0]
    cdef Py_ssize_t parent
    n[0] += 1
    while i > 0:
        parent = (i - 1) >> 1
        if hk[parent] <= key:
            break
        hk[i] = hk[parent]
        hv[i] = hv[parent]
        i = parent
    hk[i] = key
    hv[i] = val


cdef inline void _pop(double* hk, Py_ssize_t* hv, Py_ssize_t* n, double* key, Py_ssize_t* val) nogil:
    cdef Py_ssize_t i = 0, child
    cdef double lk
    cdef Py_ssize_t lv
    key[0] = hk[0]
    val[0] = hv[0]
    n[0] -= 1
    lk = hk[n[0]]
    lv = hv[n[0]]
    while True:
        child = 2 * i + 1
        if child >= n[0]:
            break
        if child + 1 < n[0] and hk[child + 1] < hk[child]:
            child += 1
        if hk[child] >= lk:
            break
        hk[i] = hk[child]
        hv[i] = hv[child]
        i = child
    hk[i] = lk
    hv[i] = lv


def grid_dijkstra(double[:, :, ::1] X, cnp.uint8_t[:, ::1] mask, Py_ssize_t si, Py_ssize_t sj, bint arc=False):
    """Shortest-path distances from node ``(si, sj)`` to every masked node."""
    cdef Py_ssize_t nu = X.shape[0], nv = X.shape[1], dim = X.shape[2]
    cdef Py_ssize_t N = nu * nv
    dist_np = np.full((nu, nv), np.inf)
    cdef double[:, ::1] dist = dist_np
    cdef Py_ssize_t cap = 8 * N + 1
    cdef double* hk = <double*> malloc(cap * sizeof(double))
    cdef Py_ssize_t* hv = <Py_ssize_t*> malloc(cap * sizeof(Py_ssize_t))
    cdef Py_ssize_t n = 0, node, i, j, a, b, k, c
    cdef double d, w, s, diff
    if hk == NULL or hv == NULL:
        free(hk)
        free(hv)
        raise MemoryError()
    try:
        with nogil:
            dist[si, sj] = 0.0
            _push(hk, hv, &n, 0.0, si * nv + sj)
            while n > 0:
                _pop(hk, hv, &n, &d, &node)
                i = node // nv
                j = node % nv
                if d > dist[i, j]:
                    continue
                for k in range(8):
                    a = i + DI[k]
                    b = j + DJ[k]
                    if a < 0 or a >= nu or b < 0 or b >= nv or not mask[a, b]:
                        continue
                    s = 0.0
                    for c in range(dim):
                        diff = X[a, b, c] - X[i, j, c]
                        s += diff * diff
                    w = sqrt(s)
                    if arc:
                        w = 0.5 * w
                        if w > 1.0:
                            w = 1.0
                        w = 2.0 * asin(w)
                    if d + w < dist[a, b]:
                        dist[a, b] = d + w
                        _push(hk, hv, &n, d + w, a * nv + b)
    finally:
        free(hk)
        free(hv)
    return dist_np
