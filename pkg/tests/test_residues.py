"""Residue-class analysis: bad/semi-bad classes, coherence, exponents."""

from fractions import Fraction
from itertools import combinations
from math import gcd

import pytest
import sympy

from parityset import (
    analyze_modulus,
    classes_report,
    coherent_from,
    exponent_of,
    find_coherent,
    has_coherent_of_size,
    is_bad_prime,
    is_coherent,
    parse_poly,
    poly_mul,
    semibad_count_formula,
)


def brute_semibad(q: int) -> set[int]:
    """Definition-level enumeration with no package calls."""
    r = sympy.n_order(2, q)
    bad = {pow(2, i, q) for i in range(r)}
    return {
        u for u in range(1, q)
        if gcd(u, q) == 1 and u not in bad and u * u % q in bad
    }


def test_q7_structure():
    an = analyze_modulus(7)
    assert (an.r, an.phi, an.omega, an.q2) == (3, 6, 1, 1)
    assert an.bad == (1, 2, 4)
    assert an.semibad == (3, 5, 6)
    assert an.coherent == (3, 5, 6)
    assert an.cq == Fraction(3, 2)
    assert an.exponent == Fraction(3, 4)


def test_q31_structure():
    an = analyze_modulus(31)
    assert an.r == 5 and an.phi == 30
    assert an.exponent == Fraction(1, 4)
    assert len(an.semibad) == 5  # Lemma-1 count with omega=1, q2=1


def test_q3_no_semibad():
    an = analyze_modulus(3)
    assert an.r == 2 == an.phi
    assert an.semibad == ()
    assert an.coherent is None
    assert an.cq == Fraction(1)


def test_analyze_rejects():
    with pytest.raises(ValueError):
        analyze_modulus(4)
    with pytest.raises(ValueError):
        analyze_modulus(-3)
    with pytest.raises(ValueError):
        analyze_modulus(3 * 10**6 + 1)


def test_q1_degenerate():
    an = analyze_modulus(1)
    assert an.bad == (0,)
    assert an.semibad == () and an.coherent is None
    assert an.exponent == Fraction(1)


def test_formula_examples():
    assert semibad_count_formula(7) == 3
    assert semibad_count_formula(9) == 0
    assert semibad_count_formula(5) == 0


def test_formula_matches_brute_force():
    for q in range(3, 302, 2):
        assert len(brute_semibad(q)) == semibad_count_formula(q), q


def test_trichotomy_small_range():
    for q in range(3, 302, 2):
        an = analyze_modulus(q)
        empty_expected = an.omega == 1 and (an.phi // an.r) % 2 == 1
        assert (len(an.semibad) == 0) == empty_expected, q


def test_is_bad_prime():
    assert not is_bad_prime(2, 7)
    assert is_bad_prime(11, 7)  # 11 = 4 mod 7 = 2^2
    assert not is_bad_prime(3, 7)
    assert is_bad_prime(3, 1)  # every odd prime is bad in the q=1 regime
    with pytest.raises(ValueError):
        is_bad_prime(15, 7)


def test_coherent_from():
    an = analyze_modulus(7)
    assert coherent_from(3, an) == (3, 5, 6)
    an31 = analyze_modulus(31)
    for b in an31.semibad:
        c = coherent_from(b, an31)
        assert len(c) == 5 and is_coherent(c, an31)
    with pytest.raises(ValueError):
        coherent_from(1, an)  # bad, not semi-bad


def test_is_coherent():
    an = analyze_modulus(7)
    assert is_coherent((3, 5, 6), an)
    assert is_coherent((3,), an)
    assert not is_coherent((1, 3), an)  # contains a bad class
    with pytest.raises(ValueError):
        is_coherent((), an)


def test_find_coherent():
    assert find_coherent(analyze_modulus(7)) == (3, 5, 6)
    assert find_coherent(analyze_modulus(43)) is None  # omega=1, phi/r=3 odd
    an21 = analyze_modulus(21)
    c = find_coherent(an21)
    assert c is not None and len(c) == an21.r and is_coherent(c, an21)


def test_no_oversize_coherent_spot():
    for q in (7, 21, 31, 63, 93, 105):
        an = analyze_modulus(q)
        if not an.semibad:
            continue
        assert not has_coherent_of_size(an, an.r + 1), q
        assert has_coherent_of_size(an, an.r), q


def test_oversize_search_matches_naive():
    # tiny moduli double-check by raw subset enumeration
    for q in (7, 15, 21, 33):
        an = analyze_modulus(q)
        if not an.semibad:
            continue
        bad = set(an.bad)
        found = any(
            all(a * b % q in bad for a in s for b in s)
            for s in combinations(an.semibad, an.r + 1)
        )
        assert found == has_coherent_of_size(an, an.r + 1), q


def test_exponent_of_examples(cubic, quintic):
    assert exponent_of(cubic) == Fraction(3, 4)
    assert exponent_of(quintic) == Fraction(1, 4)
    assert exponent_of(poly_mul(cubic, quintic)) == Fraction(1, 4)
    assert exponent_of(parse_poly("1+z")) == Fraction(1)


def test_exponent_square_invariant(corpus):
    for p in corpus:
        if p.degree < 1 or p.degree > 12:
            continue
        assert exponent_of(poly_mul(p, p)) == exponent_of(p)


def test_exponent_matches_analysis(corpus):
    # single-factor route must agree with the enumeration route when the
    # modulus is small enough to enumerate
    from parityset import factorize

    for p in corpus:
        for f, _m, beta in factorize(p).factors:
            if beta == 1 or beta > 10**5:
                continue
            an = analyze_modulus(beta)
            single = exponent_of(f)
            assert single == an.exponent, f


def test_classes_report_shape():
    rep = classes_report(analyze_modulus(7))
    assert rep == {
        "q": 7, "r": 3, "phi": 6, "omega": 1, "q2": 1,
        "bad": [1, 2, 4], "semibad": [3, 5, 6], "coherent": [3, 5, 6],
        "c_q": "3/2", "exponent": "3/4",
    }
    rep3 = classes_report(analyze_modulus(3))
    assert rep3["coherent"] is None and rep3["c_q"] == "1"
    import json

    json.dumps(rep)  # must be serializable as-is
