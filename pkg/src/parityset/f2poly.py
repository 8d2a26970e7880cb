"""Polynomials over the two-element field, bit-packed in Python ints.

Bit i of the backing integer is the coefficient of z^i.  All values are
immutable and all operations are pure, so everything here is safe to
share between threads.
"""

from __future__ import annotations

import re
from math import lcm
from typing import NamedTuple

from .arith import divisors, factorize_int

ORDER_DEGREE_CAP = 64


class PolyParseError(ValueError):
    """Raised on malformed polynomial text; message carries the position."""


class F2Poly:
    __slots__ = ("bits",)

    def __init__(self, bits: int):
        if bits < 0:
            raise ValueError("coefficient mask must be nonnegative")
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("F2Poly is immutable")

    @property
    def degree(self) -> int:
        """Index of the highest set bit; -1 for the zero polynomial."""
        return self.bits.bit_length() - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, F2Poly) and self.bits == other.bits

    def __hash__(self) -> int:
        return hash(("F2Poly", self.bits))

    def __bool__(self) -> bool:
        return self.bits != 0

    def __add__(self, other: "F2Poly") -> "F2Poly":
        return F2Poly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "F2Poly") -> "F2Poly":
        return F2Poly(_mul_bits(self.bits, other.bits))

    def __mod__(self, other: "F2Poly") -> "F2Poly":
        return F2Poly(_mod_bits(self.bits, other.bits))

    def __lt__(self, other: "F2Poly") -> bool:
        # Degree-then-mask order; used for deterministic factor sorting.
        return (self.degree, self.bits) < (other.degree, other.bits)

    def exponents(self) -> tuple[int, ...]:
        b = self.bits
        out = []
        while b:
            low = b & -b
            out.append(low.bit_length() - 1)
            b ^= low
        return tuple(out)

    def to_text(self) -> str:
        """Canonical form, terms in increasing exponent: "1+z+z^3"."""
        if self.bits == 0:
            return "0"
        terms = []
        for i in self.exponents():
            terms.append("1" if i == 0 else "z" if i == 1 else f"z^{i}")
        return "+".join(terms)

    def to_hex(self) -> str:
        return format(self.bits, "#x")

    def __repr__(self) -> str:
        return f"F2Poly({self.to_text()!r})"


ONE = F2Poly(1)
Z = F2Poly(2)


class Factorization(NamedTuple):
    """Irreducible factors as (factor, multiplicity, order) triples."""

    factors: tuple[tuple[F2Poly, int, int], ...]
    original: F2Poly


def _mul_bits(a: int, b: int) -> int:
    r = 0
    while b:
        low = b & -b
        r ^= a << (low.bit_length() - 1)
        b ^= low
    return r


def _mod_bits(a: int, m: int) -> int:
    if m == 0:
        raise ZeroDivisionError("polynomial modulus is zero")
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def _divexact_bits(a: int, m: int) -> int:
    q = 0
    dm = m.bit_length()
    while a.bit_length() >= dm:
        shift = a.bit_length() - dm
        q |= 1 << shift
        a ^= m << shift
    if a:
        raise ArithmeticError("non-exact polynomial division")
    return q


def _gcd_bits(a: int, b: int) -> int:
    while b:
        a, b = b, _mod_bits(a, b)
    return a


_TERM = re.compile(r"1|z\^(\d+)|z")


def parse_poly(text: str) -> F2Poly:
    """Parse "1+z+z^3" style text or a hex mask like "0xb".

    Terms may repeat in any order; repeated terms cancel (coefficients
    live mod 2).  Raises PolyParseError with the offending position.
    """
    if text is None or text.strip() == "":
        raise PolyParseError("empty polynomial text")
    s = text.strip()
    if s[:2].lower() == "0x":
        try:
            return F2Poly(int(s, 16))
        except ValueError:
            raise PolyParseError(f"bad hex literal {s!r}") from None
    bits = 0
    pos = 0
    expect_term = True
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch == "+":
            if expect_term:
                raise PolyParseError(f"unexpected '+' at position {pos}")
            expect_term = True
            pos += 1
            continue
        if not expect_term:
            raise PolyParseError(f"expected '+' at position {pos}")
        m = _TERM.match(text, pos)
        if m is None:
            raise PolyParseError(f"syntax error at position {pos}: {text[pos:pos+8]!r}")
        tok = m.group(0)
        exp = 0 if tok == "1" else 1 if tok == "z" else int(m.group(1))
        bits ^= 1 << exp
        pos = m.end()
        expect_term = False
    if expect_term:
        raise PolyParseError(f"dangling '+' at position {len(text) - 1}")
    return F2Poly(bits)


def poly_mul(a: F2Poly, b: F2Poly) -> F2Poly:
    """Carry-less product over F2."""
    return F2Poly(_mul_bits(a.bits, b.bits))


def poly_powmod(base: F2Poly, e: int, modulus: F2Poly) -> F2Poly:
    """base^e mod modulus by square-and-multiply; e may be arbitrarily large."""
    if modulus.bits == 0:
        raise ValueError("zero modulus")
    if modulus.degree < 1:
        raise ValueError("modulus must have degree >= 1")
    if e < 0:
        raise ValueError("negative exponent")
    result = 1
    b = _mod_bits(base.bits, modulus.bits)
    while e:
        if e & 1:
            result = _mod_bits(_mul_bits(result, b), modulus.bits)
        b = _mod_bits(_mul_bits(b, b), modulus.bits)
        e >>= 1
    return F2Poly(result)


def _derivative_bits(p: int) -> int:
    # Only odd-exponent terms survive d/dz in characteristic 2; the mask
    # keeps even positions and needs an even bit count to come out right.
    n = p.bit_length()
    if n == 0:
        return 0
    k = (n + 1) // 2
    mask = ((1 << (2 * k)) - 1) // 3  # 0b...0101 with k ones
    return (p >> 1) & mask


def _sqrt_bits(p: int) -> int:
    # p has set bits only at even positions (it is a perfect square).
    r = 0
    b = p
    while b:
        low = b & -b
        i = low.bit_length() - 1
        r |= 1 << (i >> 1)
        b ^= low
    return r


def _squarefree_decomp(f: int) -> list[tuple[int, int]]:
    """Pairwise-coprime squarefree parts with multiplicities, char-2 variant."""
    out: dict[int, int] = {}
    fp = _derivative_bits(f)
    if fp == 0:
        # f is a perfect square.
        for g, m in _squarefree_decomp(_sqrt_bits(f)):
            out[g] = out.get(g, 0) + 2 * m
        return sorted(out.items())
    c = _gcd_bits(f, fp)
    w = _divexact_bits(f, c)
    i = 1
    while w != 1:
        y = _gcd_bits(w, c)
        part = _divexact_bits(w, y)
        if part != 1:
            out[part] = out.get(part, 0) + i
        w = y
        c = _divexact_bits(c, y)
        i += 1
    if c != 1:
        # Leftover factors have multiplicity divisible by 2.
        for g, m in _squarefree_decomp(_sqrt_bits(c)):
            out[g] = out.get(g, 0) + 2 * m
    return sorted(out.items())


def _trace_bits(u: int, g: int, d: int) -> int:
    # u + u^2 + u^4 + ... + u^(2^(d-1)) mod g.
    t = _mod_bits(u, g)
    acc = t
    for _ in range(d - 1):
        t = _mod_bits(_mul_bits(t, t), g)
        acc ^= t
    return acc


def _equal_degree_split(g: int, d: int) -> list[int]:
    """Split squarefree g whose irreducible factors all have degree d.

    Deterministic: trace maps of the monomial basis z^1, z^2, ... must
    separate any two distinct factors, so gcds with them peel g apart.
    """
    if g.bit_length() - 1 == d:
        return [g]
    for i in range(1, g.bit_length() - 1):
        t = _trace_bits(1 << i, g, d)
        h = _gcd_bits(t, g)
        if h != 1 and h != g:
            return _equal_degree_split(h, d) + _equal_degree_split(
                _divexact_bits(g, h), d
            )
    raise ArithmeticError("equal-degree split failed")  # unreachable for valid input


def _distinct_degree(g: int) -> list[tuple[int, int]]:
    """(product-of-irreducibles, degree) slices of squarefree g."""
    out = []
    h = 2  # the residue of z
    d = 0
    while g != 1:
        d += 1
        if 2 * d > g.bit_length() - 1:
            out.append((g, g.bit_length() - 1))
            break
        h = _mod_bits(_mul_bits(h, h), g)
        gd = _gcd_bits(h ^ 2, g)
        if gd != 1:
            out.append((gd, d))
            g = _divexact_bits(g, gd)
            h = _mod_bits(h, g)
    return out


def factorize(p: F2Poly) -> Factorization:
    """Complete factorization into irreducibles with multiplicities and orders.

    Output is sorted by degree, then by coefficient mask, so equal inputs
    always produce identical reports.
    """
    if p.bits == 0:
        raise ValueError("cannot factor the zero polynomial")
    if p.bits & 1 == 0:
        raise ValueError("constant term is zero (z divides p)")
    if p.bits == 1:
        return Factorization(factors=(), original=p)
    found: list[tuple[F2Poly, int, int]] = []
    for sf, mult in _squarefree_decomp(p.bits):
        for block, d in _distinct_degree(sf):
            for irr in _equal_degree_split(block, d):
                fac = F2Poly(irr)
                found.append((fac, mult, poly_order(fac)))
    found.sort(key=lambda t: (t[0].degree, t[0].bits))
    return Factorization(factors=tuple(found), original=p)


def poly_order(p: F2Poly) -> int:
    """Least beta >= 1 with p dividing 1 + z^beta, for irreducible p != z.

    Equals the multiplicative order of z in the field F2[z]/p, hence a
    divisor of 2^deg(p) - 1 and always odd.
    """
    d = p.degree
    if d < 1:
        raise ValueError("constant polynomial has no order")
    if p.bits & 1 == 0:
        raise ValueError("z divides p; order undefined")
    if d > ORDER_DEGREE_CAP:
        raise ValueError(f"degree {d} above order cap {ORDER_DEGREE_CAP}")
    if not is_irreducible(p):
        raise ValueError("poly_order requires an irreducible polynomial")
    m = (1 << d) - 1
    e = m
    for prime in factorize_int(m):
        while e % prime == 0 and poly_powmod(Z, e // prime, p).bits == 1:
            e //= prime
    return e


def is_irreducible(p: F2Poly) -> bool:
    """Rabin test: z^(2^d) = z mod p and no subfield collapse at d/prime."""
    d = p.degree
    if d < 1:
        return False
    if d == 1:
        return True
    x = 2
    for _ in range(d):
        x = _mod_bits(_mul_bits(x, x), p.bits)
    if x != _mod_bits(2, p.bits):
        return False
    for prime in factorize_int(d):
        k = d // prime
        y = 2
        for _ in range(k):
            y = _mod_bits(_mul_bits(y, y), p.bits)
        if _gcd_bits(y ^ 2, p.bits) != 1:
            return False
    return True


def q_of(p: F2Poly) -> int:
    """lcm of the orders of the distinct irreducible factors; always odd."""
    if p.bits & 1 == 0:
        raise ValueError("constant term is zero")
    if p.degree < 1:
        raise ValueError("degree must be >= 1")
    fac = factorize(p)
    return lcm(*(beta for _, _, beta in fac.factors))


def order_is_minimal(p: F2Poly, beta: int) -> bool:
    """True iff p | 1+z^beta and p | 1+z^d for no proper divisor d of beta."""
    if poly_powmod(Z, beta, p).bits != 1:
        return False
    return all(poly_powmod(Z, d, p).bits != 1 for d in divisors(beta)[:-1])
