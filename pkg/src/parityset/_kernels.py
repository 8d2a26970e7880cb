"""Backends for the two hot loops: C extension if built, numpy otherwise.

Set PARITYSET_NO_CEXT=1 to force the numpy path (used by the dual-path
tests; also the automatic fallback when the extension is absent).
"""

from __future__ import annotations

import os
import sys

import numpy as np

try:
    from . import _seriescore as _C
except ImportError:  # extension not built; pure numpy still works
    _C = None

if os.environ.get("PARITYSET_NO_CEXT") == "1":
    _C = None

_U64 = np.uint64


def have_c_kernel() -> bool:
    return _C is not None


def _update_numpy(g: np.ndarray, n: int, scratch: np.ndarray) -> None:
    # g ^= g << n over words; copy the source first since ranges overlap.
    W = g.shape[0]
    ws, bs = n >> 6, n & 63
    L = W - ws
    src = scratch[:L]
    np.copyto(src, g[:L])
    if bs:
        dst = g[ws:]
        shifted = src << _U64(bs)
        shifted[1:] |= src[: L - 1] >> _U64(64 - bs)
        dst ^= shifted
    else:
        g[ws:] ^= src


def _reconstruct_numpy(g: np.ndarray, t: np.ndarray, m: np.ndarray, X: int) -> int:
    W = g.shape[0]
    scratch = np.empty(W, dtype=_U64)
    top_keep = _U64(0xFFFFFFFFFFFFFFFF if (X & 63) == 63 else (1 << ((X & 63) + 1)) - 1)
    count = 0
    for w in range(W):
        diff = int(g[w] ^ t[w])
        while diff:
            b = (diff & -diff).bit_length() - 1
            n = (w << 6) + b
            m[w] |= _U64(1 << b)
            count += 1
            _update_numpy(g, n, scratch)
            g[W - 1] &= top_keep
            diff = int(g[w] ^ t[w])
    return count


def reconstruct_bits(t: np.ndarray, X: int) -> tuple[np.ndarray, int]:
    """Membership words for the set whose complementary product equals t.

    t must hold the inverse series of P modulo z^(X+1) as uint64 words.
    The identity prod_{a in A}(1 + z^a) = P^{-1} (mod 2) makes the final
    product exactly t, which is asserted before returning.
    """
    W = t.shape[0]
    g = np.zeros(W, dtype=_U64)
    g[0] = 1
    m = np.zeros(W, dtype=_U64)
    if _C is not None:
        count = _C.reconstruct(g, t, m, X)
    else:
        count = _reconstruct_numpy(g, t, m, X)
    if not np.array_equal(g, t):
        raise AssertionError("reconstruction invariant failed: product != inverse series")
    return m, count


def sigma_fill(members: np.ndarray, x: int) -> np.ndarray:
    """Array s with s[n] = sum of divisors of n that are members, n <= x."""
    s = np.zeros(x + 1, dtype=np.int64)
    values = members if members.dtype == np.int64 else members.astype(np.int64)
    if _C is not None:
        _C.sigma_fill(values, s)
    else:
        for d in values.tolist():
            if 1 <= d <= x:
                s[d::d] += d
    return s


def bitmap_to_indices(words: np.ndarray, X: int) -> np.ndarray:
    """Sorted positions of the set bits in [0, X]."""
    w = words
    if sys.byteorder == "big":
        w = w.byteswap()
    bits = np.unpackbits(w.view(np.uint8), bitorder="little")[: X + 1]
    return np.flatnonzero(bits).astype(np.int64)


def indices_to_bitmap(indices, X: int) -> np.ndarray:
    """Inverse of bitmap_to_indices; indices must lie in [0, X]."""
    W = (X >> 6) + 1
    bits = np.zeros(W * 64, dtype=np.uint8)
    idx = np.asarray(indices, dtype=np.int64)
    if idx.size and (idx.min() < 0 or idx.max() > X):
        raise ValueError("index out of range")
    bits[idx] = 1
    packed = np.packbits(bits, bitorder="little")
    w = packed.view(np.uint64)
    if sys.byteorder == "big":
        w = w.byteswap()
    return w.copy()
