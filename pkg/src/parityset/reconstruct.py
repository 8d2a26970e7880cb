"""The unique part set whose partition generating function matches P mod 2.

For P in F2[z] with P(0)=1 there is exactly one set A of positive
integers with sum p(A,n) z^n = P(z) (mod 2).  Equivalently
prod_{a in A} (1+z^a) = P^{-1} in F2[[z]]: over F2 the factor
(1-z^a)^{-1} of the partition product collapses to (1+z^a)^{-1}.
Membership is decided greedily in increasing n and each inclusion is a
single shifted XOR of the running product, truncated at the bound.
"""

from __future__ import annotations

import struct
import threading
from collections import namedtuple
from typing import Iterable

import numpy as np

from . import _kernels
from .arith import factorize_int
from .f2poly import F2Poly, parse_poly

_SPREAD = np.zeros(256, dtype=np.uint16)
for _v in range(256):
    _s = 0
    for _i in range(8):
        if _v >> _i & 1:
            _s |= 1 << (2 * _i)
    _SPREAD[_v] = _s
del _v, _s, _i


def _square_bits(a: int) -> int:
    # Squaring over F2 just spreads every bit i to position 2i.
    nbytes = (a.bit_length() + 7) >> 3
    if nbytes == 0:
        return 0
    raw = np.frombuffer(a.to_bytes(nbytes, "little"), dtype=np.uint8)
    return int.from_bytes(_SPREAD[raw].tobytes(), "little")


def inverse_series(pbits: int, x: int) -> int:
    """Bits of P^{-1} mod z^(x+1), by Newton iteration in characteristic 2.

    If P*t = 1 mod z^k then P*(P*t^2) = (P*t)^2 = 1 mod z^(2k), so each
    pass doubles the settled length.
    """
    if pbits & 1 == 0:
        raise ValueError("series inverse needs constant term 1")
    t = 1
    k = 1
    full = (1 << (x + 1)) - 1
    while k <= x:
        k *= 2
        mask = full if k > x else (1 << k) - 1
        t2 = _square_bits(t)
        acc = 0
        b = pbits
        while b:
            low = b & -b
            acc ^= t2 << (low.bit_length() - 1)
            b ^= low
        t = acc & mask
    return t


class ParitySet:
    """Immutable membership table for A(P) up to a fixed bound.

    Bit n of words (word n>>6, bit n&63) is chi(A,n); bit 0 is always 0.
    """

    __slots__ = ("p", "bound", "_words", "_elements", "_sigma", "_lock")

    def __init__(self, p: F2Poly, bound: int, words: np.ndarray):
        self.p = p
        self.bound = int(bound)
        w = np.ascontiguousarray(words, dtype=np.uint64)
        w.setflags(write=False)
        self._words = w
        e = _kernels.bitmap_to_indices(w, self.bound)
        e.setflags(write=False)
        self._elements = e
        self._sigma = None
        self._lock = threading.Lock()

    @property
    def words(self) -> np.ndarray:
        return self._words

    @property
    def elements(self) -> np.ndarray:
        """All members as a sorted int64 array."""
        return self._elements

    def __len__(self) -> int:
        return int(self._elements.size)

    def contains(self, n: int) -> bool:
        if not 1 <= n <= self.bound:
            raise ValueError(f"n={n} outside [1, {self.bound}]")
        return bool(int(self._words[n >> 6]) >> (n & 63) & 1)

    __contains__ = contains

    def chi(self, n: int) -> int:
        return 1 if self.contains(n) else 0

    def count(self, x) -> int:
        """A(P,x) = number of members <= x."""
        if x < 1:
            return 0
        if x > self.bound:
            raise ValueError(f"x={x} beyond bound {self.bound}")
        return int(np.searchsorted(self._elements, int(x), side="right"))

    def sigma_array(self) -> np.ndarray:
        """sigma(A,n) for all n <= bound, built once and cached."""
        with self._lock:
            if self._sigma is None:
                s = _kernels.sigma_fill(self._elements, self.bound)
                s.setflags(write=False)
                self._sigma = s
        return self._sigma

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ParitySet)
            and self.p == other.p
            and self.bound == other.bound
            and np.array_equal(self._words, other._words)
        )

    def __repr__(self) -> str:
        return f"ParitySet({self.p.to_text()!r}, bound={self.bound}, members={len(self)})"


def reconstruct(p: F2Poly, x: int) -> ParitySet:
    """Compute A(P) up to x by the greedy series scan.

    n enters A exactly when coefficient n of the running partition
    product differs from coefficient n of P; the run keeps the
    complementary form prod (1+z^a) so one shifted XOR applies each
    inclusion and the final product must equal P^{-1} bit for bit.
    """
    if p.bits & 1 == 0:
        raise ValueError("P(0) must be 1")
    x = int(x)
    if x < 1:
        raise ValueError("bound must be >= 1")
    tbits = inverse_series(p.bits, x)
    W = (x >> 6) + 1
    t = np.frombuffer(tbits.to_bytes(W * 8, "little"), dtype=np.uint64)
    words, _count = _kernels.reconstruct_bits(t, x)
    return ParitySet(p, x, words)


def partition_parity(parts: Iterable[int], n: int) -> int:
    """Parity of the number of partitions of n into the given parts.

    Deliberately naive coin-change table over plain Python lists; this
    is the slow independent witness for the series route, so it shares
    no code with it.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > 10**4:
        raise ValueError("oracle capped at n <= 10^4")
    dp = [0] * (n + 1)
    dp[0] = 1
    for a in sorted(set(int(v) for v in parts)):
        if a < 1:
            raise ValueError("parts must be positive")
        for m in range(a, n + 1):
            dp[m] ^= dp[m - a]
    return dp[n]


def sigma(a: ParitySet, n: int) -> int:
    """Sum of the divisors of n that belong to A (direct enumeration)."""
    if not 1 <= n <= a.bound:
        raise ValueError(f"n={n} outside [1, {a.bound}]")
    total = 0
    for d in _divisors_of(n):
        if a.contains(d):
            total += d
    return total


def _divisors_of(n: int) -> list[int]:
    ds = [1]
    for prime, e in factorize_int(n).items():
        ds = [d * prime**k for d in ds for k in range(e + 1)]
    return ds


def s_value(a: ParitySet, m: int, k: int) -> int:
    """chi(m) + 2 chi(2m) + ... + 2^k chi(2^k m), m odd."""
    if m % 2 == 0:
        raise ValueError("m must be odd")
    if k < 0:
        raise ValueError("k must be >= 0")
    if (m << k) > a.bound:
        raise ValueError("2^k * m beyond bound")
    return sum(a.chi(m << i) << i for i in range(k + 1))


def verify_moebius(a: ParitySet, n: int) -> bool:
    """Check m*S(m,k) = sum over squarefree d | m of mu(d) sigma(A, n/d).

    n = 2^k * m with m odd; the sum runs over the divisors of the
    radical of m.
    """
    if not 1 <= n <= a.bound:
        raise ValueError(f"n={n} outside [1, {a.bound}]")
    k = (n & -n).bit_length() - 1
    m = n >> k
    lhs = m * s_value(a, m, k)
    rhs = 0
    primes = list(factorize_int(m))
    for subset in range(1 << len(primes)):
        d = 1
        bits = 0
        for i, prime in enumerate(primes):
            if subset >> i & 1:
                d *= prime
                bits += 1
        rhs += (-1) ** bits * sigma(a, n // d)
    return lhs == rhs


PeriodicityViolation = namedtuple(
    "PeriodicityViolation", ["kind", "k", "n_ref", "n", "lhs", "rhs"]
)

MAX_VIOLATIONS = 1000


def verify_periodicity(a: ParitySet, q: int, kmax: int) -> list[PeriodicityViolation]:
    """Scan sigma(A, 2^k n) mod 2^(k+1) for the period-q congruences.

    Two checks per k <= kmax: equal residues n mod q must give equal
    values ("period"), and so must residues linked by a power of 2 mod q
    ("orbit").  Smallest n in each class is the reference.  The list is
    truncated at MAX_VIOLATIONS entries (enough to witness failure).
    """
    if q < 1 or q % 2 == 0:
        raise ValueError("q must be odd and >= 1")
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    sig = a.sigma_array()
    # orbit representative of each residue class under multiplication by 2
    orep = np.arange(q, dtype=np.int64)
    for c in range(q):
        orbit = {c}
        v = c * 2 % q
        while v not in orbit:
            orbit.add(v)
            v = v * 2 % q
        orep[c] = min(orbit)
    out: list[PeriodicityViolation] = []
    for k in range(kmax + 1):
        top = a.bound >> k
        if top < 1:
            break
        mod = np.int64((1 << (k + 1)) - 1)
        idx = np.arange(1, top + 1, dtype=np.int64)
        vals = sig[idx << k] & mod
        res = idx % q
        for kind, cls in (("period", res), ("orbit", orep[res])):
            ref_val = np.full(q, -1, dtype=np.int64)
            ref_n = np.full(q, -1, dtype=np.int64)
            # reversed writes make the smallest n win as reference
            ref_val[cls[::-1]] = vals[::-1]
            ref_n[cls[::-1]] = idx[::-1]
            bad = np.flatnonzero(vals != ref_val[cls])
            for j in bad[: max(0, MAX_VIOLATIONS - len(out))]:
                out.append(
                    PeriodicityViolation(
                        kind,
                        k,
                        int(ref_n[cls[j]]),
                        int(idx[j]),
                        int(ref_val[cls[j]]),
                        int(vals[j]),
                    )
                )
            if len(out) >= MAX_VIOLATIONS:
                return out
    return out


PSET_MAGIC = b"PSET"
PSET_VERSION = 1


def write_pset(a: ParitySet, path) -> None:
    """Binary dump: magic, version u16, P hex (u16 length + ASCII),
    bound u64, then ceil((X+1)/64) little-endian membership words."""
    hexs = a.p.to_hex().encode("ascii")
    with open(path, "wb") as fh:
        fh.write(PSET_MAGIC)
        fh.write(struct.pack("<H", PSET_VERSION))
        fh.write(struct.pack("<H", len(hexs)))
        fh.write(hexs)
        fh.write(struct.pack("<Q", a.bound))
        fh.write(a.words.astype("<u8").tobytes())


def read_pset(path) -> ParitySet:
    with open(path, "rb") as fh:
        magic = fh.read(4)
        if magic != PSET_MAGIC:
            raise ValueError("not a PSET file")
        (version,) = struct.unpack("<H", fh.read(2))
        if version != PSET_VERSION:
            raise ValueError(f"unsupported PSET version {version}")
        (hexlen,) = struct.unpack("<H", fh.read(2))
        p = parse_poly(fh.read(hexlen).decode("ascii"))
        (bound,) = struct.unpack("<Q", fh.read(8))
        W = (bound >> 6) + 1
        raw = fh.read(W * 8)
        if len(raw) != W * 8:
            raise ValueError("truncated PSET payload")
        words = np.frombuffer(raw, dtype="<u8").astype(np.uint64)
    if words[0] & np.uint64(1):
        raise ValueError("corrupt PSET: index 0 must be zero")
    tail = int(words[-1])
    if (bound & 63) != 63 and tail >> ((bound & 63) + 1):
        raise ValueError("corrupt PSET: bits above the bound must be zero")
    return ParitySet(p, bound, words)
