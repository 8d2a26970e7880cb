"""Polynomial arithmetic and factorization over F2."""

import random
from math import lcm

import pytest

from parityset import (
    F2Poly,
    PolyParseError,
    factorize,
    is_irreducible,
    parse_poly,
    poly_mul,
    poly_order,
    poly_powmod,
    q_of,
)
from parityset.f2poly import Z, _mod_bits, order_is_minimal


def naive_mul(a: int, b: int) -> int:
    """Coefficient convolution, the independent multiplication oracle."""
    out = 0
    for i in range(a.bit_length()):
        if a >> i & 1:
            for j in range(b.bit_length()):
                if b >> j & 1:
                    out ^= 1 << (i + j)
    return out


def has_proper_divisor(p: int) -> bool:
    """Trial division by every polynomial of degree 1..deg/2."""
    d = p.bit_length() - 1
    for cand in range(2, 1 << (d // 2 + 1)):
        if cand.bit_length() - 1 >= 1 and _mod_bits(p, cand) == 0:
            return True
    return False


# ---------- parsing ----------

def test_parse_basic():
    assert parse_poly("1+z+z^3").bits == 0b1011
    assert parse_poly("1").bits == 1
    assert parse_poly("1").degree == 0
    assert parse_poly("z").bits == 2
    assert parse_poly("1+z+z+z^2").bits == 0b101  # duplicate z terms cancel


def test_parse_hex_and_whitespace():
    assert parse_poly("0xb") == parse_poly("1+z+z^3")
    assert parse_poly("0XB").bits == 0xB
    assert parse_poly(" 1 + z ") == parse_poly("1+z")


def test_parse_order_independent():
    assert parse_poly("z^3+1+z") == parse_poly("1+z+z^3")


def test_parse_roundtrip():
    rng = random.Random(7)
    for _ in range(100):
        p = F2Poly(rng.randrange(1, 1 << 30))
        assert parse_poly(p.to_text()) == p
        assert parse_poly(p.to_hex()) == p


def test_parse_errors_report_position():
    with pytest.raises(PolyParseError):
        parse_poly("")
    with pytest.raises(PolyParseError):
        parse_poly("   ")
    with pytest.raises(PolyParseError, match="position 2"):
        parse_poly("1++z")
    with pytest.raises(PolyParseError, match="position"):
        parse_poly("1+w")
    with pytest.raises(PolyParseError):
        parse_poly("1+z^")
    with pytest.raises(PolyParseError):
        parse_poly("z+")
    with pytest.raises(PolyParseError):
        parse_poly("0xqq")


def test_poly_text_canonical():
    assert F2Poly(0b1011).to_text() == "1+z+z^3"
    assert F2Poly(0).to_text() == "0"
    assert F2Poly(1).to_text() == "1"


# ---------- multiplication / powmod ----------

def test_mul_trivial_identities():
    one_z = parse_poly("1+z")
    assert poly_mul(one_z, one_z) == parse_poly("1+z^2")  # Frobenius square
    assert poly_mul(one_z, parse_poly("1+z+z^2")) == parse_poly("1+z^3")
    p = parse_poly("1+z^2+z^5")
    assert poly_mul(p, F2Poly(1)) == p


def test_mul_against_convolution():
    rng = random.Random(11)
    for _ in range(300):
        a = rng.randrange(0, 1 << 40)
        b = rng.randrange(0, 1 << 40)
        assert poly_mul(F2Poly(a), F2Poly(b)).bits == naive_mul(a, b)


def test_powmod_examples():
    cubic = parse_poly("1+z+z^3")
    assert poly_powmod(Z, 7, cubic) == F2Poly(1)
    assert poly_powmod(Z, 0, cubic) == F2Poly(1)
    assert poly_powmod(Z, 3, cubic) == parse_poly("1+z")


def test_powmod_against_naive():
    rng = random.Random(13)
    for _ in range(25):
        base = F2Poly(rng.randrange(1, 1 << 16))
        mod = F2Poly(rng.randrange(2, 1 << 12))
        e = rng.randrange(0, 1 << 10)
        acc = F2Poly(1) % mod
        for _i in range(e):
            acc = poly_mul(acc, base) % mod
        assert poly_powmod(base, e, mod) == acc


def test_powmod_huge_exponent():
    cubic = parse_poly("1+z+z^3")
    e = (1 << 40) + 5  # beyond 32 bits; z^e = z^(e mod 7)
    assert poly_powmod(Z, e, cubic) == poly_powmod(Z, e % 7, cubic)


def test_powmod_zero_modulus():
    with pytest.raises(ValueError):
        poly_powmod(Z, 3, F2Poly(0))
    with pytest.raises(ValueError):
        poly_powmod(Z, 3, F2Poly(1))


# ---------- factorization ----------

def test_factorize_examples():
    f = factorize(parse_poly("1+z^7"))
    texts = [(t[0].to_text(), t[1]) for t in f.factors]
    assert texts == [("1+z", 1), ("1+z+z^3", 1), ("1+z^2+z^3", 1)]

    f = factorize(parse_poly("1+z+z^3"))
    assert len(f.factors) == 1 and f.factors[0][1] == 1

    f = factorize(parse_poly("1+z^2"))
    assert [(t[0].to_text(), t[1]) for t in f.factors] == [("1+z", 2)]


def test_factorize_rejects_bad_input():
    with pytest.raises(ValueError):
        factorize(F2Poly(0))
    with pytest.raises(ValueError):
        factorize(parse_poly("z"))
    with pytest.raises(ValueError):
        factorize(parse_poly("z+z^3"))


def test_factorize_exhaustive_small_degrees():
    # every polynomial of degree <= 12 with constant term 1
    for bits in range(1, 1 << 13, 2):
        p = F2Poly(bits)
        fac = factorize(p)
        prod = F2Poly(1)
        for f, mult, beta in fac.factors:
            assert not has_proper_divisor(f.bits), f
            assert beta % 2 == 1
            for _ in range(mult):
                prod = poly_mul(prod, f)
        assert prod == p
        degs = [t[0].degree for t in fac.factors]
        assert degs == sorted(degs)  # deterministic order


def test_factorize_random_degree_40():
    rng = random.Random(17)
    for _ in range(60):
        bits = 1 | 1 << rng.randint(1, 40)
        for i in range(1, 40):
            if rng.random() < 0.5:
                bits |= 1 << i
        p = F2Poly(bits)
        fac = factorize(p)
        prod = F2Poly(1)
        for f, mult, beta in fac.factors:
            assert is_irreducible(f)
            assert beta % 2 == 1
            assert order_is_minimal(f, beta)
            for _ in range(mult):
                prod = poly_mul(prod, f)
        assert prod == p


# ---------- orders ----------

def test_poly_order_examples():
    assert poly_order(parse_poly("1+z")) == 1
    assert poly_order(parse_poly("1+z+z^2")) == 3
    assert poly_order(parse_poly("1+z+z^3")) == 7
    assert poly_order(parse_poly("1+z^2+z^3")) == 7


def test_poly_order_brute_force():
    rng = random.Random(19)
    checked = 0
    while checked < 25:
        p = F2Poly(rng.randrange(1, 1 << 14) | 1)
        if p.degree < 1 or not is_irreducible(p):
            continue
        beta = poly_order(p)
        d = p.degree
        assert ((1 << d) - 1) % beta == 0
        smallest = next(
            e for e in range(1, beta + 1) if poly_powmod(Z, e, p) == F2Poly(1)
        )
        assert smallest == beta
        checked += 1


def test_poly_order_rejects():
    with pytest.raises(ValueError):
        poly_order(parse_poly("1+z^2"))  # reducible
    with pytest.raises(ValueError):
        poly_order(F2Poly(1))
    with pytest.raises(ValueError):
        poly_order(parse_poly("z"))


# ---------- q_of ----------

def test_q_of_examples(cubic, quintic):
    assert q_of(cubic) == 7
    assert q_of(quintic) == 31
    assert q_of(parse_poly("1+z")) == 1
    assert q_of(poly_mul(cubic, quintic)) == lcm(7, 31)
    assert q_of(parse_poly("1+z^7")) == 7


def test_q_of_always_odd(corpus):
    for p in corpus:
        assert q_of(p) % 2 == 1


def test_q_of_rejects():
    with pytest.raises(ValueError):
        q_of(parse_poly("z"))
    with pytest.raises(ValueError):
        q_of(F2Poly(1))


def test_immutability():
    p = parse_poly("1+z")
    with pytest.raises(AttributeError):
        p.bits = 5
