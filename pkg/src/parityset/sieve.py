"""Prime classification and the counting majorant V(x).

Primes up to a bound are split into five labels: 2 itself, divisors of
q, bad (congruent to a power of 2 mod q), the chosen coherent classes,
and the neutral rest.  From the labels come the additive function
omega_S (distinct coherent-class primes dividing n), the indicator
delta (no bad prime divides n), and

    V(x) = sum of delta(n) over n with n * 2^omega_S(n) <= x,

which majorizes the counting function: A(P,x) <= V(2x).
"""

from __future__ import annotations

import math
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .f2poly import F2Poly, poly_mul, _gcd_bits
from .reconstruct import ParitySet, reconstruct
from .residues import ClassAnalysis

BAD = "BAD"
SEMIBAD_S = "SEMIBAD_S"
NEUTRAL_N = "NEUTRAL_N"
DIVIDES_Q = "DIVIDES_Q"
TWO = "TWO"

_LABEL_CODES = {TWO: 0, DIVIDES_Q: 1, BAD: 2, SEMIBAD_S: 3, NEUTRAL_N: 4}
_CODE_LABELS = {v: k for k, v in _LABEL_CODES.items()}


def _prime_mask(x: int) -> np.ndarray:
    mask = np.ones(x + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(x) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return mask


class PrimePartition:
    """Labels for every prime up to a bound, plus the derived sieves."""

    __slots__ = (
        "bound", "q", "coherent", "primes", "codes",
        "_omega_s", "_delta", "_vkeys",
    )

    def __init__(self, q: int, coherent, bound: int):
        if bound < 2:
            raise ValueError("bound must be >= 2")
        if q < 1 or q % 2 == 0:
            raise ValueError("q must be odd and >= 1")
        self.bound = int(bound)
        self.q = q
        self.coherent = tuple(sorted(coherent)) if coherent else ()
        mask = _prime_mask(self.bound)
        self.primes = np.flatnonzero(mask).astype(np.int64)
        res = self.primes % q
        if q == 1:
            bad_set = np.array([0], dtype=np.int64)
        else:
            r = 1
            v = 2 % q
            seen = {1 % q, v}
            while v != 1 % q:
                v = v * 2 % q
                seen.add(v)
            bad_set = np.array(sorted(seen), dtype=np.int64)
        codes = np.full(self.primes.shape, _LABEL_CODES[NEUTRAL_N], dtype=np.uint8)
        codes[np.isin(res, bad_set)] = _LABEL_CODES[BAD]
        if self.coherent:
            codes[np.isin(res, np.array(self.coherent, dtype=np.int64))] = _LABEL_CODES[SEMIBAD_S]
        qdiv = np.array([p for p in _small_factors(q)], dtype=np.int64)
        if qdiv.size:
            codes[np.isin(self.primes, qdiv)] = _LABEL_CODES[DIVIDES_Q]
        codes[self.primes == 2] = _LABEL_CODES[TWO]
        self.codes = codes
        omega_s = np.zeros(self.bound + 1, dtype=np.int8)
        for p in self.primes[codes == _LABEL_CODES[SEMIBAD_S]].tolist():
            omega_s[p::p] += 1
        delta = np.ones(self.bound + 1, dtype=bool)
        delta[0] = False
        for p in self.primes[codes == _LABEL_CODES[BAD]].tolist():
            delta[p::p] = False
        omega_s.setflags(write=False)
        delta.setflags(write=False)
        self._omega_s = omega_s
        self._delta = delta
        self._vkeys = None

    def label_of(self, p: int) -> str:
        i = np.searchsorted(self.primes, p)
        if i >= self.primes.size or self.primes[i] != p:
            raise ValueError(f"{p} is not a prime <= {self.bound}")
        return _CODE_LABELS[int(self.codes[i])]

    def primes_with(self, label: str) -> np.ndarray:
        return self.primes[self.codes == _LABEL_CODES[label]]

    def _keys(self) -> np.ndarray:
        # n * 2^omega_S(n) for every n with delta(n)=1, sorted
        if self._vkeys is None:
            n = np.arange(self.bound + 1, dtype=np.int64)
            keys = n << self._omega_s.astype(np.int64)
            keys = keys[self._delta]
            keys.sort()
            self._vkeys = keys
        return self._vkeys


def _small_factors(q: int) -> list[int]:
    out = []
    m = q
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def classify_primes(q: int, c, x: int) -> PrimePartition:
    """Sieve to x and label every prime by its residue class mod q."""
    return PrimePartition(q, c, x)


def omega_s(n: int, pp: PrimePartition) -> int:
    """Number of distinct coherent-class primes dividing n."""
    if not 1 <= n <= pp.bound:
        raise ValueError(f"n={n} outside [1, {pp.bound}]")
    return int(pp._omega_s[n])


def delta(n: int, pp: PrimePartition) -> int:
    """1 when no bad prime divides n, else 0."""
    if not 1 <= n <= pp.bound:
        raise ValueError(f"n={n} outside [1, {pp.bound}]")
    return int(pp._delta[n])


def v_of(x, pp: PrimePartition) -> int:
    """Count of n with delta(n)=1 and n * 2^omega_S(n) <= x."""
    if x < 1 or x > pp.bound:
        raise ValueError(f"x={x} outside [1, {pp.bound}]")
    return int(np.searchsorted(pp._keys(), math.floor(x), side="right"))


class SeriesRow(NamedTuple):
    x: int
    A: int
    V: int
    V2x: int
    lower_bound: float
    ratio: float


class CountingSeries(NamedTuple):
    rows: tuple[SeriesRow, ...]
    poly: str
    q: int
    exponent_num: int
    exponent_den: int


def default_samples(bound: int, per_decade: int = 16, start: int = 100) -> list[int]:
    """Geometric sample grid, deduplicated, clipped to the bound."""
    if bound < start:
        return [bound] if bound >= 1 else []
    out = []
    j = 0
    while True:
        x = round(start * 10 ** (j / per_decade))
        if x > bound:
            break
        if not out or x > out[-1]:
            out.append(x)
        j += 1
    if out[-1] != bound:
        out.append(bound)
    return out


def counting_series(
    a: ParitySet,
    analysis: ClassAnalysis,
    pp: PrimePartition,
    samples: Sequence[int],
) -> CountingSeries:
    """Per-sample counting data: A(P,x), V(x), V(2x), bounds, ratio.

    The ratio column is A(P,x) * (ln x)^e / x with e the exponent from
    the class analysis; natural log matches the normalization of the
    asymptotic constants.
    """
    limit = min(a.bound, pp.bound // 2)
    if any(x < 1 or x > limit for x in samples):
        raise ValueError(f"samples must lie in [1, {limit}]")
    n_plus_1 = a.p.degree + 1
    e = float(analysis.exponent)
    rows = []
    for x in samples:
        ax = a.count(x)
        rows.append(
            SeriesRow(
                x=int(x),
                A=ax,
                V=v_of(x, pp),
                V2x=v_of(2 * x, pp),
                lower_bound=math.log2(x) - math.log2(n_plus_1),
                ratio=ax * math.log(x) ** e / x,
            )
        )
    return CountingSeries(
        rows=tuple(rows),
        poly=a.p.to_text(),
        q=analysis.q,
        exponent_num=analysis.exponent.numerator,
        exponent_den=analysis.exponent.denominator,
    )


CSV_HEADER = "x,A,V,V2x,lower_bound,ratio"


def series_to_csv(cs: CountingSeries) -> str:
    lines = [CSV_HEADER]
    for row in cs.rows:
        lines.append(
            f"{row.x},{row.A},{row.V},{row.V2x},{row.lower_bound:.6g},{row.ratio:.6g}"
        )
    return "\n".join(lines) + "\n"


class DivisibilityViolation(NamedTuple):
    element: int
    h: int
    omega_s_m: int


def check_divisibility_lemma(a: ParitySet, pp: PrimePartition) -> list[DivisibilityViolation]:
    """Every member 2^h * m (m odd, no bad prime in m) needs h >= omega_S(m)-1."""
    if a.bound > pp.bound:
        raise ValueError("prime partition bound too small for this set")
    e = a.elements
    if e.size == 0:
        return []
    low = e & -e
    h = np.log2(low.astype(np.float64)).astype(np.int64)
    m = e >> h
    os_m = pp._omega_s[m].astype(np.int64)
    bad_mask = pp._delta[m] & (h < os_m - 1)
    return [
        DivisibilityViolation(int(e[i]), int(h[i]), int(os_m[i]))
        for i in np.flatnonzero(bad_mask)
    ]


class CoprimalityViolation(NamedTuple):
    element: int
    bad_prime: int


def check_bad_coprimality(a: ParitySet, pp: PrimePartition) -> list[CoprimalityViolation]:
    """No member may be divisible by a bad prime."""
    if a.bound > pp.bound:
        raise ValueError("prime partition bound too small for this set")
    e = a.elements
    if e.size == 0:
        return []
    hit = e[~pp._delta[e]]
    out = []
    bad_primes = pp.primes_with(BAD).tolist()
    for v in hit.tolist():
        witness = next(p for p in bad_primes if v % p == 0)
        out.append(CoprimalityViolation(v, witness))
    return out


def check_subadditivity(qpoly: F2Poly, rpoly: F2Poly, x: int) -> tuple[bool, bool]:
    """Two consequences of splitting P = Q*R with coprime Q, R.

    At log-spaced points t <= x, checks
      A(P,t) <= A(Q,t) + A(R,t)
    and
      |A(P,t) - A(R,t)| <= sum over 0 <= i <= log2(t) of A(Q, t / 2^i).
    """
    if _gcd_bits(qpoly.bits, rpoly.bits) != 1:
        raise ValueError("polynomials must be coprime")
    p = poly_mul(qpoly, rpoly)
    ap = reconstruct(p, x)
    aq = reconstruct(qpoly, x)
    ar = reconstruct(rpoly, x)
    eq13 = True
    eq14 = True
    for t in default_samples(x, start=min(100, x)):
        cp, cq, cr = ap.count(t), aq.count(t), ar.count(t)
        if cp > cq + cr:
            eq13 = False
        total = 0
        i = 0
        while (t >> i) >= 1:
            total += aq.count(t >> i)
            i += 1
        if abs(cp - cr) > total:
            eq14 = False
    return eq13, eq14
