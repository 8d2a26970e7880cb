"""Residue classes modulo an odd q: bad, semi-bad, coherent, exponents.

The bad classes are the powers of 2; a semi-bad class is outside that
set but has its square inside; a coherent set is a set of semi-bad
classes whose pairwise products are all bad.  These drive both the
prime classification and the exponent in the counting upper bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import euler_phi, factorize_int, is_prime, multiplicative_order
from .f2poly import F2Poly, factorize

ANALYZE_Q_CAP = 10**6
COHERENT_SEARCH_CAP = 301


@dataclass(frozen=True)
class ClassAnalysis:
    q: int
    r: int
    phi: int
    omega: int
    q2: int
    bad: tuple[int, ...]
    semibad: tuple[int, ...]
    coherent: tuple[int, ...] | None
    cq: Fraction
    exponent: Fraction


def _two_is_square(q: int) -> int:
    # Exhaustive; q may be composite so Jacobi symbols would not settle it.
    return int(any(x * x % q == 2 % q for x in range(q)))


def analyze_modulus(q: int) -> ClassAnalysis:
    """Full enumeration of the residue structure of an odd modulus.

    q = 1 is allowed as a degenerate case (it arises from the
    polynomial 1+z): the lone class 0 counts as bad, nothing is
    semi-bad, and the exponent is 1.
    """
    if q < 1 or q % 2 == 0:
        raise ValueError("q must be odd and >= 1")
    if q > ANALYZE_Q_CAP:
        raise ValueError(f"q above enumeration cap {ANALYZE_Q_CAP}")
    if q == 1:
        return ClassAnalysis(
            q=1, r=1, phi=1, omega=0, q2=1,
            bad=(0,), semibad=(), coherent=None,
            cq=Fraction(1), exponent=Fraction(1),
        )
    r = multiplicative_order(2, q)
    bad = tuple(sorted({pow(2, i, q) for i in range(r)}))
    bad_set = set(bad)
    semibad = tuple(
        u for u in range(1, q)
        if gcd(u, q) == 1 and u not in bad_set and u * u % q in bad_set
    )
    phi = euler_phi(q)
    om = len(factorize_int(q))
    q2 = _two_is_square(q)
    cq = Fraction(3, 2) if semibad else Fraction(1)
    coherent = None
    if semibad:
        b = min(semibad)
        coherent = tuple(sorted(b * pow(2, u, q) % q for u in range(r)))
    return ClassAnalysis(
        q=q, r=r, phi=phi, omega=om, q2=q2,
        bad=bad, semibad=semibad, coherent=coherent,
        cq=cq, exponent=cq * Fraction(r, phi),
    )


def semibad_count_formula(q: int) -> int:
    """Closed form for the number of semi-bad classes.

    2^omega(q) * (floor((r+1)/2) + q2 * floor(r/2)) - r; when r is even
    and 2 is a non-square this collapses to r * (2^(omega(q)-1) - 1).
    """
    if q < 3 or q % 2 == 0:
        raise ValueError("q must be odd and >= 3")
    r = multiplicative_order(2, q)
    om = len(factorize_int(q))
    q2 = _two_is_square(q)
    return (1 << om) * ((r + 1) // 2 + q2 * (r // 2)) - r


def is_bad_prime(p: int, q: int) -> bool:
    """True for odd primes congruent to a power of 2 mod q; 2 never is."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return False
    if q == 1:
        return True
    r = multiplicative_order(2, q)
    return p % q in {pow(2, i, q) for i in range(r)}


def coherent_from(b: int, analysis: ClassAnalysis) -> tuple[int, ...]:
    """The orbit {b, 2b, ..., 2^(r-1) b} mod q of a semi-bad class."""
    if b not in analysis.semibad:
        raise ValueError(f"{b} is not a semi-bad class mod {analysis.q}")
    q = analysis.q
    return tuple(sorted(b * pow(2, u, q) % q for u in range(analysis.r)))


def is_coherent(s, analysis: ClassAnalysis) -> bool:
    """All elements semi-bad and every pairwise product (a=b included) bad."""
    s = tuple(s)
    if not s:
        raise ValueError("empty residue set")
    semibad = set(analysis.semibad)
    bad = set(analysis.bad)
    if any(v not in semibad for v in s):
        return False
    return all(a * b % analysis.q in bad for a in s for b in s)


def find_coherent(analysis: ClassAnalysis) -> tuple[int, ...] | None:
    """Deterministic choice: the orbit of the smallest semi-bad class."""
    if not analysis.semibad:
        return None
    return coherent_from(min(analysis.semibad), analysis)


def has_coherent_of_size(analysis: ClassAnalysis, size: int) -> bool:
    """Exhaustive clique search over semi-bad classes, product-pruned."""
    if analysis.q > COHERENT_SEARCH_CAP:
        raise ValueError(f"search capped at q <= {COHERENT_SEARCH_CAP}")
    verts = list(analysis.semibad)
    bad = set(analysis.bad)
    q = analysis.q
    adj = {
        v: {u for u in verts if u != v and u * v % q in bad}
        for v in verts
    }

    def extend(clique_len: int, candidates: list[int]) -> bool:
        if clique_len == size:
            return True
        if clique_len + len(candidates) < size:
            return False
        for i, v in enumerate(candidates):
            nxt = [u for u in candidates[i + 1 :] if u in adj[v]]
            if extend(clique_len + 1, nxt):
                return True
        return False

    return extend(0, verts)


def exponent_of(p: F2Poly) -> Fraction:
    """Exponent of log x in the counting upper bound for A(P).

    Per distinct irreducible factor with order beta: the modulus is
    beta, r is the order of 2 mod beta, and the factor contributes
    c * r / phi(beta) with c = 3/2 exactly when semi-bad classes exist
    (equivalently: more than one prime divides beta, or phi(beta)/r is
    even).  The result is the minimum over factors.
    """
    if p.bits & 1 == 0:
        raise ValueError("P(0) must be 1")
    if p.degree < 1:
        raise ValueError("degree must be >= 1")
    best: Fraction | None = None
    for _factor, _mult, beta in factorize(p).factors:
        if beta == 1:
            contrib = Fraction(1)
        else:
            r = multiplicative_order(2, beta)
            phi = euler_phi(beta)
            om = len(factorize_int(beta))
            has_semibad = om >= 2 or (phi // r) % 2 == 0
            c = Fraction(3, 2) if has_semibad else Fraction(1)
            contrib = c * Fraction(r, phi)
        if best is None or contrib < best:
            best = contrib
    return best


def classes_report(analysis: ClassAnalysis) -> dict:
    """JSON-ready summary of one modulus."""
    return {
        "q": analysis.q,
        "r": analysis.r,
        "phi": analysis.phi,
        "omega": analysis.omega,
        "q2": analysis.q2,
        "bad": list(analysis.bad),
        "semibad": list(analysis.semibad),
        "coherent": list(analysis.coherent) if analysis.coherent else None,
        "c_q": "3/2" if analysis.cq == Fraction(3, 2) else "1",
        "exponent": f"{analysis.exponent.numerator}/{analysis.exponent.denominator}",
    }
