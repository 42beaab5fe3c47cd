"""Pure-Python grid Dijkstra, used when the compiled kernel is unavailable."""

import heapq
import math

import numpy as np

_STEPS = [(-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1)]


def grid_dijkstra(X, mask, si, sj, arc=False):
    """Shortest-path distances from node ``(si, sj)`` to every masked node."""
    X = np.ascontiguousarray(X, dtype=float)
    nu, nv = mask.shape
    dist = np.full((nu, nv), np.inf)
    dist[si, sj] = 0.0
    rows = X.tolist()
    m = mask.tolist()
    d_list = dist.tolist()
    heap = [(0.0, si, sj)]
    while heap:
        d, i, j = heapq.heappop(heap)
        if d > d_list[i][j]:
            continue
        xi = rows[i][j]
        for di, dj in _STEPS:
            a, b = i + di, j + dj
            if a < 0 or a >= nu or b < 0 or b >= nv or not m[a][b]:
                continue
            xa = rows[a][b]
            w = math.sqrt(sum((p - q) * (p - q) for p, q in zip(xa, xi)))
            if arc:
                w = 2.0 * math.asin(min(0.5 * w, 1.0))
            nd = d + w
            if nd < d_list[a][b]:
                d_list[a][b] = nd
                heapq.heappush(heap, (nd, a, b))
    return np.array(d_list)
