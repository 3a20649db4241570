"""The generalized Carlet Gray map.

phi maps Z_{p^r} to Z_p^{p^{r-1}} via a constant vector plus a row-vector
product with the matrix whose columns are all of Z_p^{r-1} in ascending
order.  mixed_gray assembles the block-wise map on the mixed alphabet.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ResourceLimitError
from .ring import CodeShape, MixedVector, is_prime

# p^{r-1} columns per Y matrix; beyond this the memoized tables get silly.
DEFAULT_Y_CAP = 2**16


@dataclass(frozen=True)
class YMatrix:
    p: int
    r: int
    entries: np.ndarray  # (r-1) x p^{r-1}, read-only

    def __post_init__(self):
        self.entries.setflags(write=False)


def _check_pr(p: int, r: int):
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")


@lru_cache(maxsize=None)
def y_matrix(p: int, r: int, cap: int = DEFAULT_Y_CAP) -> YMatrix:
    """Matrix whose columns are the p-ary expansions of 0..p^{r-1}-1.

    Least significant digit sits in the first row; for r=1 the matrix is
    empty (0 x 1).
    """
    _check_pr(p, r)
    ncols = p ** (r - 1)
    if ncols > cap:
        raise ResourceLimitError(f"p^(r-1)={ncols} exceeds cap {cap}")
    cols = np.arange(ncols, dtype=np.int64)
    rows = [(cols // p**i) % p for i in range(r - 1)]
    entries = (
        np.vstack(rows).astype(np.uint8)
        if rows
        else np.zeros((0, ncols), dtype=np.uint8)
    )
    return YMatrix(p, r, entries)


@lru_cache(maxsize=None)
def phi_table(p: int, r: int) -> np.ndarray:
    """All p^r Gray images as a (p^r, p^{r-1}) array, row u = phi(u)."""
    _check_pr(p, r)
    y = y_matrix(p, r).entries.astype(np.int64)
    us = np.arange(p**r, dtype=np.int64)
    digits = np.stack([(us // p**i) % p for i in range(r)], axis=1)
    table = (digits[:, -1:] + digits[:, : r - 1] @ y) % p
    if r == 1:
        table = us[:, None] % p
    table = table.astype(np.uint8)
    table.setflags(write=False)
    return table


def phi(u: int, p: int, r: int) -> np.ndarray:
    """Gray image of u in Z_{p^r}; for r=1 this is the identity map."""
    _check_pr(p, r)
    if not 0 <= u < p**r:
        raise ValueError(f"u={u} out of range [0, {p}^{r})")
    return phi_table(p, r)[u].copy()


def phi_extended(v, p: int, r: int) -> np.ndarray:
    """Coordinate-wise extension of phi; concatenates images in order."""
    v = np.asarray(v, dtype=np.int64)
    if v.size and (v.min() < 0 or v.max() >= p**r):
        raise ValueError(f"entries out of range [0, {p}^{r})")
    if v.size == 0:
        return np.zeros(0, dtype=np.uint8)
    return phi_table(p, r)[v].reshape(-1)


def mixed_gray(v: MixedVector) -> np.ndarray:
    """The mixed-alphabet Gray map: block 1 verbatim, block i through phi_i."""
    p = v.shape.p
    parts = [np.asarray(v.blocks[0], dtype=np.uint8)]
    for i, block in enumerate(v.blocks[1:], start=2):
        parts.append(phi_extended(np.asarray(block, dtype=np.int64), p, i))
    out = np.concatenate(parts)
    assert out.size == v.shape.gray_length()
    return out


@lru_cache(maxsize=None)
def _padded_phi_table(p: int, r: int) -> tuple[np.ndarray, int, int]:
    """phi table with rows padded to a power-of-two byte width and viewed
    as one unsigned scalar per row, so Gray mapping a block is a single
    scalar gather."""
    t = phi_table(p, r)
    length = t.shape[1]
    pad = 1
    while pad < length:
        pad *= 2
    if pad > 8:
        return t, length, 0  # too wide for a scalar lane; gather rows directly
    padded = np.zeros((t.shape[0], pad), dtype=np.uint8)
    padded[:, :length] = t
    scalars = padded.view(np.dtype(f"u{pad}")).reshape(-1)
    scalars.setflags(write=False)
    return scalars, length, pad


def gray_rows(words: np.ndarray, shape: CodeShape) -> np.ndarray:
    """Vectorized mixed_gray over a (m, total_width) array of flat words."""
    words = np.asarray(words)
    m = words.shape[0]
    out = np.empty((m, shape.gray_length()), dtype=np.uint8)
    pos = opos = 0
    for i, a in enumerate(shape.alphas, start=1):
        block = words[:, pos : pos + a]
        pos += a
        if a == 0:
            continue
        length = a * shape.p ** (i - 1)
        dest = out[:, opos : opos + length]
        opos += length
        if i == 1:
            dest[:] = block
            continue
        table, seg, pad = _padded_phi_table(shape.p, i)
        idx = block if block.dtype == np.intp else block.astype(np.intp)
        if pad == 0:
            dest[:] = table[idx].reshape(m, length)
        else:
            gathered = table[idx].view(np.uint8).reshape(m, a, pad)
            dest[:] = gathered[:, :, :seg].reshape(m, length)
    return out


def shift_translates_to_all_ones(p: int, r: int) -> bool:
    """Check phi(u + p^{r-1}) = phi(u) + 1 exhaustively on the (p, r) table."""
    t = phi_table(p, r).astype(np.int64)
    idx = (np.arange(p**r) + p ** (r - 1)) % p**r
    return bool(np.all(t[idx] == (t + 1) % p))
