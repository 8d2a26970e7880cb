"""
Bad, semi-bad and coherent residue classes
===========================================

The structure of A(P) modulo a fixed odd q is driven by three families
of residues: the bad classes (powers of 2 mod q), the semi-bad classes
(squares land in a bad class), and coherent sets of semi-bad classes
whose pairwise products are all bad.  This script walks the moduli that
matter for the two headline polynomials and then sweeps a range.
"""

from parityset import (
    analyze_modulus,
    exponent_of,
    find_coherent,
    has_coherent_of_size,
    is_coherent,
    parse_poly,
    semibad_count_formula,
)

# q = 7 comes from P = 1 + z + z^3
an = analyze_modulus(7)
print("q = 7")
print("  bad classes  E :", an.bad)
print("  semi-bad     E':", an.semibad)
print("  r =", an.r, " phi =", an.phi, " c(q) =", an.cq)
print("  coherent orbit :", an.coherent,
      " valid:", is_coherent(an.coherent, an))

# no coherent set can be larger than r elements
print("  coherent set of size r+1 exists:",
      has_coherent_of_size(an, an.r + 1))

# q = 31 comes from the quintic 1 + z + z^3 + z^4 + z^5
an31 = analyze_modulus(31)
print("q = 31")
print("  |E| =", len(an31.bad), " |E'| =", len(an31.semibad),
      " r =", an31.r, " exponent =", an31.exponent)
print("  one coherent set:", find_coherent(an31))

# the counting exponent c(q) r / phi(q) drops out of the polynomial alone
for text in ("1+z+z^3", "1+z+z^3+z^4+z^5", "1+z^7", "1+z"):
    print(f"exponent of {text}: {exponent_of(parse_poly(text))}")

# sweep: the closed-form semi-bad count against the analysis, and the
# emptiness rule (E' empty iff q is a prime power with phi/r odd)
print("q    |E'|  formula  empty  omega  phi/r")
for q in range(3, 60, 2):
    a = analyze_modulus(q)
    n = len(a.semibad)
    assert n == semibad_count_formula(q)
    print(f"{q:<4} {n:<5} {semibad_count_formula(q):<8} "
          f"{str(n == 0):<6} {a.omega:<6} {a.phi // a.r}")
