"""Bit-packed GF(2) linear algebra on numpy uint64 words."""

from __future__ import annotations

import numpy as np


def pack(n_rows, n_cols, ones):
    """Row-major bit matrix from (row, col) positions of the 1 entries."""
    words = max(1, (n_cols + 63) >> 6)
    m = np.zeros((n_rows, words), dtype=np.uint64)
    one = np.uint64(1)
    for r, c in ones:
        m[r, c >> 6] |= one << np.uint64(c & 63)
    return m


def rank(m, n_cols):
    """GF(2) rank by in-place row elimination of a packed matrix."""
    m = m.copy()
    rows = m.shape[0]
    r = 0
    one = np.uint64(1)
    for c in range(n_cols):
        if r == rows:
            break
        w = c >> 6
        mask = one << np.uint64(c & 63)
        hits = np.nonzero(m[r:, w] & mask)[0]
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            m[[r, p]] = m[[p, r]]
        rest = np.nonzero(m[r + 1:, w] & mask)[0]
        if rest.size:
            m[rest + r + 1] ^= m[r]
        r += 1
    return r


def rank_sparse(n_rows, n_cols, ones):
    return rank(pack(n_rows, n_cols, ones), n_cols)


def in_column_space(n_rows, n_cols, ones, rhs):
    """Is the 0/1 vector ``rhs`` (length n_rows) a GF(2) combination of the
    columns of the sparse matrix given by ``ones``?"""
    ones = list(ones)
    base = rank_sparse(n_rows, n_cols, ones)
    aug = ones + [(i, n_cols) for i, b in enumerate(rhs) if b & 1]
    return rank_sparse(n_rows, n_cols + 1, aug) == base
