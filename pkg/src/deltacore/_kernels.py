"""Compiled inner loops: clique enumeration and Z/2 column reduction.

Graphs arrive as CSR arrays of *upper* neighbors (``j > i``, ascending) with
a parallel array of edge weights.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _edge_weight(indptr, indices, weights, u, v):
    lo = indptr[u]
    hi = indptr[u + 1]
    k = lo + np.searchsorted(indices[lo:hi], v)
    return weights[k]


@njit(cache=True)
def count_cliques(indptr, indices, max_size):
    """Number of cliques of each size ``1..max_size`` (index ``size - 1``)."""
    n = indptr.shape[0] - 1
    counts = np.zeros(max_size, dtype=np.int64)
    if n == 0:
        return counts
    maxdeg = 0
    for u in range(n):
        maxdeg = max(maxdeg, indptr[u + 1] - indptr[u])
    cand = np.empty((max_size, maxdeg + 1), dtype=np.int64)
    clen = np.zeros(max_size, dtype=np.int64)
    pos = np.zeros(max_size, dtype=np.int64)
    for root in range(n):
        counts[0] += 1
        if max_size == 1:
            continue
        lo = indptr[root]
        hi = indptr[root + 1]
        clen[0] = hi - lo
        cand[0, : hi - lo] = indices[lo:hi]
        pos[0] = 0
        level = 0
        while level >= 0:
            if pos[level] >= clen[level]:
                level -= 1
                continue
            v = cand[level, pos[level]]
            pos[level] += 1
            counts[level + 1] += 1
            if level + 2 < max_size:
                # candidates after v that are also upper neighbors of v
                a = pos[level]
                b = indptr[v]
                be = indptr[v + 1]
                m = 0
                while a < clen[level] and b < be:
                    x = cand[level, a]
                    y = indices[b]
                    if x == y:
                        cand[level + 1, m] = x
                        m += 1
                        a += 1
                        b += 1
                    elif x < y:
                        a += 1
                    else:
                        b += 1
                if m > 0:
                    clen[level + 1] = m
                    pos[level + 1] = 0
                    level += 1
    return counts


@njit(cache=True)
def enumerate_cliques(indptr, indices, weights, max_size, total):
    """All cliques of size ``<= max_size`` as padded vertex rows plus the
    maximum edge weight inside each clique."""
    n = indptr.shape[0] - 1
    verts = np.full((total, max_size), -1, dtype=np.int64)
    values = np.zeros(total, dtype=np.float64)
    dims = np.zeros(total, dtype=np.int64)
    if n == 0:
        return verts, values, dims
    maxdeg = 0
    for u in range(n):
        maxdeg = max(maxdeg, indptr[u + 1] - indptr[u])
    cand = np.empty((max_size, maxdeg + 1), dtype=np.int64)
    clen = np.zeros(max_size, dtype=np.int64)
    pos = np.zeros(max_size, dtype=np.int64)
    clique = np.empty(max_size, dtype=np.int64)
    val = np.zeros(max_size, dtype=np.float64)
    out = 0
    for root in range(n):
        verts[out, 0] = root
        out += 1
        if max_size == 1:
            continue
        clique[0] = root
        val[0] = 0.0
        lo = indptr[root]
        hi = indptr[root + 1]
        clen[0] = hi - lo
        cand[0, : hi - lo] = indices[lo:hi]
        pos[0] = 0
        level = 0
        while level >= 0:
            if pos[level] >= clen[level]:
                level -= 1
                continue
            v = cand[level, pos[level]]
            pos[level] += 1
            w = val[level]
            for t in range(level + 1):
                e = _edge_weight(indptr, indices, weights, clique[t], v)
                if e > w:
                    w = e
            for t in range(level + 1):
                verts[out, t] = clique[t]
            verts[out, level + 1] = v
            values[out] = w
            dims[out] = level + 1
            out += 1
            if level + 2 < max_size:
                a = pos[level]
                b = indptr[v]
                be = indptr[v + 1]
                m = 0
                while a < clen[level] and b < be:
                    x = cand[level, a]
                    y = indices[b]
                    if x == y:
                        cand[level + 1, m] = x
                        m += 1
                        a += 1
                        b += 1
                    elif x < y:
                        a += 1
                    else:
                        b += 1
                if m > 0:
                    clique[level + 1] = v
                    val[level + 1] = w
                    clen[level + 1] = m
                    pos[level + 1] = 0
                    level += 1
    return verts, values, dims


@njit(cache=True)
def reduce_boundary(ptr, idx):
    """Left-to-right Z/2 reduction of a sparse boundary matrix.

    Column ``j`` has ascending row indices ``idx[ptr[j]:ptr[j+1]]``. Returns
    ``pivot_of_row`` where ``pivot_of_row[r] = j`` when reduced column ``j``
    has lowest nonzero row ``r``, and ``-1`` when ``r`` is no column's pivot.
    Raises if the left-to-right discipline would ever be broken.
    """
    s = ptr.shape[0] - 1
    pivot_of_row = np.full(s, -1, dtype=np.int64)
    col_start = np.zeros(s, dtype=np.int64)
    col_len = np.zeros(s, dtype=np.int64)
    store = np.empty(max(16, 2 * idx.shape[0]), dtype=np.int64)
    used = 0
    work = np.empty(64, dtype=np.int64)
    scratch = np.empty(64, dtype=np.int64)
    for j in range(s):
        wl = ptr[j + 1] - ptr[j]
        if wl == 0:
            continue
        if wl > work.shape[0]:
            work = np.empty(2 * wl, dtype=np.int64)
        work[:wl] = idx[ptr[j] : ptr[j + 1]]
        while wl > 0:
            k = pivot_of_row[work[wl - 1]]
            if k < 0:
                break
            if k >= j:
                raise RuntimeError("reduction tried to add a later column")
            a0 = col_start[k]
            al = col_len[k]
            need = wl + al
            if need > scratch.shape[0]:
                scratch = np.empty(2 * need, dtype=np.int64)
            # symmetric difference of two ascending lists
            p = 0
            q = 0
            m = 0
            while p < wl and q < al:
                x = work[p]
                y = store[a0 + q]
                if x == y:
                    p += 1
                    q += 1
                elif x < y:
                    scratch[m] = x
                    m += 1
                    p += 1
                else:
                    scratch[m] = y
                    m += 1
                    q += 1
            while p < wl:
                scratch[m] = work[p]
                m += 1
                p += 1
            while q < al:
                scratch[m] = store[a0 + q]
                m += 1
                q += 1
            work, scratch = scratch, work
            wl = m
        if wl > 0:
            if used + wl > store.shape[0]:
                bigger = np.empty(2 * (used + wl), dtype=np.int64)
                bigger[:used] = store[:used]
                store = bigger
            store[used : used + wl] = work[:wl]
            col_start[j] = used
            col_len[j] = wl
            used += wl
            pivot_of_row[work[wl - 1]] = j
    return pivot_of_row
