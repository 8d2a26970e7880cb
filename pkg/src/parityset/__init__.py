"""Sets of parts whose partition function is even.

For a polynomial P over F2 with P(0)=1 there is a unique set A of
positive integers whose partition generating function reduces to P
mod 2.  This package reconstructs A up to large bounds, analyzes the
residue classes mod q that control which primes can divide its
elements, and evaluates the counting bounds that follow.
"""

__version__ = "0.1.0"

from .arith import (
    divisors,
    euler_phi,
    factorize_int,
    is_prime,
    mobius,
    multiplicative_order,
    omega,
    primes_upto,
)
from .f2poly import (
    F2Poly,
    Factorization,
    PolyParseError,
    factorize,
    is_irreducible,
    parse_poly,
    poly_mul,
    poly_order,
    poly_powmod,
    q_of,
)
from .reconstruct import (
    ParitySet,
    PeriodicityViolation,
    inverse_series,
    partition_parity,
    read_pset,
    reconstruct,
    s_value,
    sigma,
    verify_moebius,
    verify_periodicity,
    write_pset,
)
from .residues import (
    ClassAnalysis,
    analyze_modulus,
    classes_report,
    coherent_from,
    exponent_of,
    find_coherent,
    has_coherent_of_size,
    is_bad_prime,
    is_coherent,
    semibad_count_formula,
)
from .sieve import (
    BAD,
    DIVIDES_Q,
    NEUTRAL_N,
    SEMIBAD_S,
    TWO,
    CountingSeries,
    PrimePartition,
    SeriesRow,
    check_bad_coprimality,
    check_divisibility_lemma,
    check_subadditivity,
    classify_primes,
    counting_series,
    default_samples,
    delta,
    omega_s,
    series_to_csv,
    v_of,
)

__all__ = [
    "__version__",
    "F2Poly", "Factorization", "PolyParseError", "parse_poly", "poly_mul",
    "poly_powmod", "factorize", "poly_order", "q_of", "is_irreducible",
    "ParitySet", "reconstruct", "partition_parity", "sigma", "s_value",
    "verify_moebius", "verify_periodicity", "PeriodicityViolation",
    "inverse_series", "write_pset", "read_pset",
    "ClassAnalysis", "analyze_modulus", "semibad_count_formula",
    "is_bad_prime", "coherent_from", "is_coherent", "find_coherent",
    "has_coherent_of_size", "exponent_of", "classes_report",
    "PrimePartition", "classify_primes", "omega_s", "delta", "v_of",
    "CountingSeries", "SeriesRow", "counting_series", "default_samples",
    "series_to_csv", "check_divisibility_lemma", "check_bad_coprimality",
    "check_subadditivity", "BAD", "SEMIBAD_S", "NEUTRAL_N", "DIVIDES_Q", "TWO",
    "divisors", "euler_phi", "factorize_int", "is_prime", "mobius",
    "multiplicative_order", "omega", "primes_upto",
]
