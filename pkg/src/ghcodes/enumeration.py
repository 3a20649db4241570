"""Enumeration of additive codes, their Gray images, and the order-p subcode.

Codes are stored as 2-D integer arrays, one word per row in the flat
block layout; set semantics go through a canonical sorted byte view.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .construction import GeneratorMatrix, size_cap
from .errors import IntegrityError, ResourceLimitError
from .gray import gray_rows
from .ring import CodeShape, MixedVector, order_of


def packed_view(words: np.ndarray) -> np.ndarray:
    """View rows as opaque fixed-width byte scalars, for sorting/sets."""
    w = np.ascontiguousarray(words)
    if w.shape[1] == 0:
        w = np.zeros((w.shape[0], 1), dtype=np.uint8)
    return w.view(np.dtype((np.void, w.dtype.itemsize * w.shape[1]))).reshape(-1)


def distinct_count(words: np.ndarray) -> int:
    return np.unique(packed_view(words)).size


@dataclass(frozen=True)
class AdditiveCode:
    shape: CodeShape
    words: np.ndarray  # |C| x total_width

    def __post_init__(self):
        self.words.setflags(write=False)

    def __len__(self) -> int:
        return self.words.shape[0]

    def __contains__(self, v: MixedVector) -> bool:
        flat = v.to_flat().astype(self.words.dtype)
        return bool(np.any(np.all(self.words == flat[None, :], axis=1)))

    def iter_vectors(self) -> Iterator[MixedVector]:
        for row in self.words:
            yield MixedVector.from_flat(self.shape, row)


@dataclass(frozen=True)
class PAryCode:
    p: int
    length: int
    words: np.ndarray  # |C| x length, uint8

    def __post_init__(self):
        self.words.setflags(write=False)
        if self.words.shape[1] != self.length:
            raise ValueError("word array does not match declared length")

    def __len__(self) -> int:
        return self.words.shape[0]

    def sorted_packed(self) -> np.ndarray:
        return np.sort(packed_view(self.words))

    def same_set(self, other: "PAryCode") -> bool:
        return (
            self.p == other.p
            and self.length == other.length
            and len(self) == len(other)
            and bool(np.array_equal(self.sorted_packed(), other.sorted_packed()))
        )


def _word_dtype(shape: CodeShape) -> np.dtype:
    return np.dtype(np.uint8 if shape.p**shape.s <= 255 else np.int64)


def partial_span(a: GeneratorMatrix, row_indices) -> np.ndarray:
    """Span of a subset of rows, enumerated by folding coefficient ranges.

    Row k contributes coefficients 0..order(row_k)-1; the last row's
    coefficient varies fastest.
    """
    shape = a.shape
    mods = shape.column_moduli()
    dt = _word_dtype(shape)
    # With p^s < 128 the sum of two reduced entries fits in uint8, so the
    # whole fold can stay in one byte per entry.
    small = dt == np.uint8 and shape.p**shape.s < 128
    mods_cast = mods.astype(dt) if small else mods
    words = np.zeros((1, shape.total_width), dtype=dt)
    for k in row_indices:
        row = a.rows[k]
        o = order_of(a.row(k))
        pieces = []
        for c in range(o):
            mult = ((c * row) % mods).astype(dt)
            pieces.append((words + mult[None, :]) % mods_cast)
        words = np.vstack(pieces).astype(dt)
    return words


def span(a: GeneratorMatrix, cap: int | None = None) -> AdditiveCode:
    """The additive code generated by the matrix rows.

    Raises IntegrityError if the enumeration collides, i.e. the row
    coefficient ranges do not parametrize the group freely.
    """
    cap = size_cap() if cap is None else cap
    predicted = a.signature.code_size()
    if predicted > cap:
        raise ResourceLimitError(
            f"span would have {predicted} codewords, cap {cap}"
        )
    words = partial_span(a, range(a.rows.shape[0]))
    if words.shape[0] != predicted:
        raise IntegrityError("coefficient enumeration does not match signature")
    if distinct_count(words) != predicted:
        raise IntegrityError(
            f"span collision: expected {predicted} distinct codewords"
        )
    return AdditiveCode(a.shape, words)


def additive_span_order(a: GeneratorMatrix) -> int:
    """Exact order of the group generated by the rows, without enumeration.

    The mixed alphabet embeds into Z_{p^s}^w by scaling block i entries by
    p^{s-i}; the order then falls out of a valuation-pivoted echelon form
    over Z_{p^s}.
    """
    shape = a.shape
    p, s = shape.p, shape.s
    ps = p**s
    scale = ps // shape.column_moduli()
    work = [[int(x) for x in (row * scale) % ps] for row in a.rows.astype(np.int64)]
    order = 1
    while work:
        best = None  # (valuation, row_idx, col_idx)
        for ri, row in enumerate(work):
            for ci, x in enumerate(row):
                if x == 0:
                    continue
                v = 0
                while x % p == 0:
                    x //= p
                    v += 1
                if best is None or v < best[0]:
                    best = (v, ri, ci)
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        v, ri, ci = best
        pivot_row = work.pop(ri)
        unit = pivot_row[ci] // p**v
        inv = pow(unit, -1, ps)
        pivot_row = [(x * inv) % ps for x in pivot_row]
        order *= p ** (s - v)
        for row in work:
            q = row[ci] // p**v
            if q:
                for j in range(len(row)):
                    row[j] = (row[j] - q * pivot_row[j]) % ps
    return order


def gray_image(c: AdditiveCode, chunk: int = 4096) -> PAryCode:
    """Gray map image of every codeword; asserts injectivity."""
    n = c.shape.gray_length()
    out = np.empty((len(c), n), dtype=np.uint8)
    for lo in range(0, len(c), chunk):
        out[lo : lo + chunk] = gray_rows(c.words[lo : lo + chunk], c.shape)
    if distinct_count(out) != len(c):
        raise IntegrityError("Gray map collision on this code")
    return PAryCode(c.shape.p, n, out)


def order_p_subcode(c: AdditiveCode) -> AdditiveCode:
    """Subcode of all words of order at most p.

    A word has order <= p exactly when each Z_{p^i} entry is divisible by
    p^{i-1}.
    """
    p = c.shape.p
    divisors = c.shape.column_moduli() // p  # p^{i-1} per column
    mask = np.all(c.words.astype(np.int64) % divisors[None, :] == 0, axis=1)
    return AdditiveCode(c.shape, c.words[mask])
