"""Bit-packed linear algebra over GF(2).

Two row representations are supported: Python ints as bitsets (bit j of
a row int = column j) for the small/int-friendly API, and numpy uint64
word matrices (bit j in word j//64 at position j%64) for the hot paths.
Both are eliminated with the same pivot rule, lowest-index nonzero
column first, with free variables fixed to 0, so results agree exactly.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    _HAVE_NUMBA = False

    def njit(*a, **k):
        def deco(f):
            return f
        return deco


def words_to_int(words: np.ndarray) -> int:
    return int.from_bytes(np.ascontiguousarray(words, dtype=np.uint64).tobytes(),
                          "little")


def int_to_words(value: int, nbits: int) -> np.ndarray:
    nwords = max(1, (nbits + 63) // 64)
    return np.frombuffer(value.to_bytes(nwords * 8, "little"),
                         dtype=np.uint64).copy()


def rows_to_words(rows: list[int], cols: int) -> np.ndarray:
    nwords = max(1, (cols + 63) // 64)
    out = np.empty((len(rows), nwords), dtype=np.uint64)
    for i, row in enumerate(rows):
        out[i] = np.frombuffer(row.to_bytes(nwords * 8, "little"),
                               dtype=np.uint64)
    return out


def bits_to_int(bits) -> int:
    """LSB-first: bits[j] becomes bit j."""
    out = 0
    for j, b in enumerate(bits):
        if b:
            out |= 1 << j
    return out


def int_to_bits(value: int, n: int) -> np.ndarray:
    return np.array([(value >> j) & 1 for j in range(n)], dtype=np.uint8)


def dot(row: int, x: int) -> int:
    """Inner product over GF(2)."""
    return (row & x).bit_count() & 1


def mat_vec(rows: list[int], x: int) -> int:
    """M @ x over GF(2); output bit i = parity of row i AND x."""
    out = 0
    for i, row in enumerate(rows):
        if (row & x).bit_count() & 1:
            out |= 1 << i
    return out


def mat_vec_words(rows: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Row-parity products for word-packed rows; returns uint8 bits."""
    counts = np.bitwise_count(rows & x).sum(axis=1)
    return (counts & 1).astype(np.uint8)


@njit(cache=True)
def _prefix_kernel(work):  # pragma: no cover - exercised via wrappers
    q, nw = work.shape
    pivots = np.empty(q, dtype=np.int64)
    for i in range(q):
        for j in range(i):
            pc = pivots[j]
            if (work[i, pc >> 6] >> np.uint64(pc & 63)) & np.uint64(1):
                for t in range(nw):
                    work[i, t] ^= work[j, t]
        piv = -1
        for t in range(nw):
            if work[i, t] != np.uint64(0):
                x = work[i, t]
                b = 0
                while not ((x >> np.uint64(b)) & np.uint64(1)):
                    b += 1
                piv = t * 64 + b
                break
        if piv < 0:
            return i
        pivots[i] = piv
    return q


@njit(cache=True)
def _solve_kernel(work, rhs, cols, v_out):  # pragma: no cover - via wrappers
    q, nw = work.shape
    piv_col = np.empty(q, dtype=np.int64)
    piv_row = np.empty(q, dtype=np.int64)
    npiv = 0
    top = 0
    for col in range(cols):
        w = col >> 6
        b = np.uint64(col & 63)
        sel = -1
        for r in range(top, q):
            if (work[r, w] >> b) & np.uint64(1):
                sel = r
                break
        if sel < 0:
            continue
        if sel != top:
            for t in range(nw):
                tmp = work[sel, t]
                work[sel, t] = work[top, t]
                work[top, t] = tmp
            tmp8 = rhs[sel]
            rhs[sel] = rhs[top]
            rhs[top] = tmp8
        for r in range(q):
            if r != top and ((work[r, w] >> b) & np.uint64(1)):
                for t in range(nw):
                    work[r, t] ^= work[top, t]
                rhs[r] ^= rhs[top]
        piv_col[npiv] = col
        piv_row[npiv] = top
        npiv += 1
        top += 1
        if top == q:
            break
    for r in range(top, q):
        if rhs[r]:  # rows below top are fully eliminated to zero
            return 0
    for i in range(npiv):
        if rhs[piv_row[i]]:
            c = piv_col[i]
            v_out[c >> 6] |= np.uint64(1) << np.uint64(c & 63)
    return 1


def max_independent_prefix_words(rows: np.ndarray) -> int:
    """Largest p such that word-packed rows[0:p] are linearly independent."""
    if len(rows) == 0:
        return 0
    return int(_prefix_kernel(np.ascontiguousarray(rows, dtype=np.uint64).copy()))


def solve_words(rows: np.ndarray, cols: int,
                rhs_bits: np.ndarray) -> np.ndarray | None:
    """Solve over word-packed rows; returns packed solution words or None."""
    rows = np.ascontiguousarray(rows, dtype=np.uint64)
    if len(rhs_bits) != len(rows):
        raise ValueError("rhs length must equal row count")
    if len(rows) == 0:
        return np.zeros(max(1, (cols + 63) // 64), dtype=np.uint64)
    work = rows.copy()
    rhs = np.ascontiguousarray(rhs_bits, dtype=np.uint8).copy()
    v = np.zeros(work.shape[1], dtype=np.uint64)
    if not _solve_kernel(work, rhs, cols, v):
        return None
    return v


def solve(rows: list[int], cols: int, rhs: int) -> int | None:
    """Solve M v = rhs over GF(2), or None if inconsistent.

    Forward elimination pivots on the lowest-index nonzero column first;
    free variables are set to 0, so the result is deterministic.
    """
    if rhs < 0 or rhs >> len(rows):
        raise ValueError("rhs has more bits than rows")
    for row in rows:
        if row >> cols:
            raise ValueError("row has more bits than cols")
    rhs_bits = np.array([(rhs >> i) & 1 for i in range(len(rows))],
                        dtype=np.uint8)
    v = solve_words(rows_to_words(rows, cols), cols, rhs_bits)
    return None if v is None else words_to_int(v)


def rank(rows: list[int]) -> int:
    basis: list[int] = []
    for row in rows:
        row = _reduce(row, basis)
        if row:
            basis.append(row)
    return len(basis)


def _reduce(row: int, basis: list[int]) -> int:
    for b in basis:
        low = b & -b
        if row & low:
            row ^= b
    return row


def max_independent_prefix(rows: list[int], cols: int | None = None) -> int:
    """Largest p such that rows[0:p] are linearly independent."""
    if cols is None:
        cols = max((r.bit_length() for r in rows), default=1)
    return max_independent_prefix_words(rows_to_words(rows, max(1, cols)))
