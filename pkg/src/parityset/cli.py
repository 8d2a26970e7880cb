"""Command-line front end.

Commands: factor, analyze, reconstruct, count, verify.  JSON reports
all carry {"tool_version", "format_version", "config", "results"} so a
run can be reproduced from its own output.  Exit codes: 0 success (and,
for verify, all suites passed), 1 verification failure, 2 bad usage.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .arith import divisors, multiplicative_order
from .f2poly import F2Poly, PolyParseError, factorize, parse_poly, q_of
from .reconstruct import (
    ParitySet,
    reconstruct,
    verify_moebius,
    verify_periodicity,
    write_pset,
)
from .residues import (
    analyze_modulus,
    classes_report,
    exponent_of,
    find_coherent,
    has_coherent_of_size,
    is_coherent,
    semibad_count_formula,
)
from .sieve import (
    check_bad_coprimality,
    check_divisibility_lemma,
    check_subadditivity,
    classify_primes,
    counting_series,
    default_samples,
    series_to_csv,
    v_of,
)

FORMAT_VERSION = 1

CAP_BOUND = 10**7
CAP_QMAX = 1001
CAP_KMAX = 8

SUITES = (
    "lemma1",
    "lemma3_trichotomy",
    "coherent_max",
    "periodicity",
    "moebius",
    "bad_coprime",
    "divisibility",
    "subadditivity",
    "v_bound",
    "lower_bound",
)

QSWEEP_SUITES = ("lemma1", "lemma3_trichotomy", "coherent_max")
POLY_SUITES = (
    "periodicity",
    "moebius",
    "bad_coprime",
    "divisibility",
    "v_bound",
    "lower_bound",
)

SUBADD_PAIR = ("1+z+z^3", "1+z+z^3+z^4+z^5")


@dataclass(frozen=True)
class RunConfig:
    command: str
    poly: str | None = None
    bound: int = 100000
    qmax: int = 101
    kmax: int = 4
    out: str | None = None
    format: str = "json"
    suites: tuple[str, ...] = ()
    unsafe_caps: bool = False

    def __post_init__(self):
        if self.bound < 1:
            raise ValueError("bound must be >= 1")
        if self.kmax > 20:
            raise ValueError("kmax above hard limit 20")
        if self.qmax % 2 == 0:
            raise ValueError("qmax must be odd")

    def check_caps(self):
        if self.unsafe_caps:
            return
        if self.bound > CAP_BOUND:
            raise ValueError(
                f"bound {self.bound} above cap {CAP_BOUND}; pass --unsafe-caps to override"
            )
        if self.qmax > CAP_QMAX:
            raise ValueError(
                f"qmax {self.qmax} above cap {CAP_QMAX}; pass --unsafe-caps to override"
            )
        if self.kmax > CAP_KMAX:
            raise ValueError(
                f"kmax {self.kmax} above cap {CAP_KMAX}; pass --unsafe-caps to override"
            )


def _report(cfg: RunConfig, results) -> dict:
    return {
        "tool_version": __version__,
        "format_version": FORMAT_VERSION,
        "config": dataclasses.asdict(cfg),
        "results": results,
    }


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def cmd_factor(cfg: RunConfig) -> int:
    p = parse_poly(cfg.poly)
    fac = factorize(p)
    q = q_of(p)
    results = {
        "poly": p.to_text(),
        "hex": p.to_hex(),
        "degree": p.degree,
        "factors": [
            {"factor": f.to_text(), "multiplicity": m, "order": beta}
            for f, m, beta in fac.factors
        ],
        "q": q,
        "r": multiplicative_order(2, q) if q > 1 else 1,
        "exponent": _frac_str(exponent_of(p)) if p.degree >= 1 else None,
    }
    _emit(json.dumps(_report(cfg, results), indent=2) + "\n", cfg.out)
    return 0


def cmd_analyze(cfg: RunConfig) -> int:
    if cfg.poly:
        qs = [q_of(parse_poly(cfg.poly))]
    else:
        qs = [q for q in range(3, cfg.qmax + 1, 2)]
    results = [classes_report(analyze_modulus(q)) for q in qs]
    _emit(json.dumps(_report(cfg, results), indent=2) + "\n", cfg.out)
    return 0


def cmd_reconstruct(cfg: RunConfig) -> int:
    p = parse_poly(cfg.poly)
    a = reconstruct(p, cfg.bound)
    if cfg.format == "bin":
        if not cfg.out:
            raise ValueError("--format bin requires --out")
        write_pset(a, cfg.out)
        return 0
    if cfg.format != "json":
        raise ValueError("reconstruct supports --format json or bin")
    head = a.elements[:100].tolist()
    results = {
        "poly": p.to_text(),
        "bound": cfg.bound,
        "count": len(a),
        "members_head": head,
        "members_truncated": len(a) > len(head),
    }
    _emit(json.dumps(_report(cfg, results), indent=2) + "\n", cfg.out)
    return 0


def cmd_count(cfg: RunConfig) -> int:
    p = parse_poly(cfg.poly)
    a = reconstruct(p, cfg.bound)
    if cfg.format == "bin":
        if not cfg.out:
            raise ValueError("--format bin requires --out")
        write_pset(a, cfg.out)
        return 0
    q = q_of(p)
    analysis = analyze_modulus(q)
    pp = classify_primes(q, analysis.coherent or (), 2 * cfg.bound)
    cs = counting_series(a, analysis, pp, default_samples(cfg.bound))
    if cfg.format == "csv":
        _emit(series_to_csv(cs), cfg.out)
        return 0
    results = {
        "poly": cs.poly,
        "q": cs.q,
        "exponent": f"{cs.exponent_num}/{cs.exponent_den}",
        "rows": [row._asdict() for row in cs.rows],
    }
    _emit(json.dumps(_report(cfg, results), indent=2) + "\n", cfg.out)
    return 0


def _suite_qsweep(cfg: RunConfig):
    lemma1_bad = []
    tricho_bad = []
    cmax_bad = []
    checked = 0
    for q in range(3, cfg.qmax + 1, 2):
        an = analyze_modulus(q)
        checked += 1
        if len(an.semibad) != semibad_count_formula(q):
            lemma1_bad.append(q)
        empty_expected = an.omega == 1 and (an.phi // an.r) % 2 == 1
        if (len(an.semibad) == 0) != empty_expected:
            tricho_bad.append(q)
        if an.semibad:
            c = find_coherent(an)
            if c is None or len(c) != an.r or not is_coherent(c, an):
                tricho_bad.append(q)
        if q <= 301 and an.semibad and has_coherent_of_size(an, an.r + 1):
            cmax_bad.append(q)
    return checked, lemma1_bad, tricho_bad, cmax_bad


def cmd_verify(cfg: RunConfig) -> int:
    selected = list(cfg.suites)
    unknown = [s for s in selected if s not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites: {', '.join(unknown)}")
    if not selected:
        raise ValueError(
            "no suites selected; pass --suites, --poly, or --qmax (or --suites all)"
        )

    results = {}

    if set(selected) & set(QSWEEP_SUITES):
        checked, l1, l3, cm = _suite_qsweep(cfg)
        if "lemma1" in selected:
            results["lemma1"] = {
                "pass": not l1, "moduli_checked": checked, "mismatches": l1,
            }
        if "lemma3_trichotomy" in selected:
            results["lemma3_trichotomy"] = {
                "pass": not l3, "moduli_checked": checked, "mismatches": l3,
            }
        if "coherent_max" in selected:
            results["coherent_max"] = {
                "pass": not cm,
                "moduli_checked": len(range(3, min(cfg.qmax, 301) + 1, 2)),
                "counterexamples": cm,
            }

    if set(selected) & (set(POLY_SUITES) | {"subadditivity"}):
        poly_text = cfg.poly or SUBADD_PAIR[0]
        p = parse_poly(poly_text)
        a = None
        if set(selected) & set(POLY_SUITES):
            a = reconstruct(p, cfg.bound)
            q = q_of(p)
            analysis = analyze_modulus(q)
            pp = classify_primes(q, analysis.coherent or (), 2 * cfg.bound)

        if "periodicity" in selected:
            viol = verify_periodicity(a, q, cfg.kmax)
            probe = {}
            for d in divisors(q)[:-1]:
                probe[str(d)] = len(verify_periodicity(a, d, cfg.kmax))
            probe_ok = all(v > 0 for v in probe.values())
            results["periodicity"] = {
                "pass": not viol and probe_ok,
                "q": q,
                "kmax": cfg.kmax,
                "violations": len(viol),
                "minimality_probe": probe,
            }

        if "moebius" in selected:
            nmax = min(cfg.bound, 10**4)
            bad = [n for n in range(1, nmax + 1) if not verify_moebius(a, n)]
            results["moebius"] = {
                "pass": not bad, "n_checked": nmax, "failures": bad[:20],
            }

        if "bad_coprime" in selected:
            viol = check_bad_coprimality(a, pp)
            results["bad_coprime"] = {
                "pass": not viol,
                "elements": len(a),
                "violations": [v._asdict() for v in viol[:20]],
            }

        if "divisibility" in selected:
            viol = check_divisibility_lemma(a, pp)
            results["divisibility"] = {
                "pass": not viol,
                "elements": len(a),
                "coherent_empty": not analysis.coherent,
                "violations": [v._asdict() for v in viol[:20]],
            }

        if "v_bound" in selected:
            bad_rows = []
            for x in default_samples(cfg.bound):
                if a.count(x) > v_of(2 * x, pp):
                    bad_rows.append(x)
            results["v_bound"] = {"pass": not bad_rows, "failures": bad_rows}

        if "lower_bound" in selected:
            import numpy as np

            xs = np.arange(1, cfg.bound + 1, dtype=np.int64)
            counts = np.searchsorted(a.elements, xs, side="right").astype(np.int64)
            # A >= log2(x/(N+1)) iff 2^A * (N+1) >= x, exact in integers;
            # counts clip at 55 to keep the product inside int64 (x <= 1e7 << 2^55)
            lhs = (np.int64(1) << np.minimum(counts, 55)) * (p.degree + 1)
            bad = np.flatnonzero(lhs < xs)
            results["lower_bound"] = {
                "pass": bad.size == 0,
                "x_checked": int(cfg.bound),
                "failures": xs[bad][:20].tolist(),
            }

        if "subadditivity" in selected:
            qp = parse_poly(SUBADD_PAIR[0])
            rp = parse_poly(SUBADD_PAIR[1])
            x = min(cfg.bound, 10**5)
            eq13, eq14 = check_subadditivity(qp, rp, x)
            results["subadditivity"] = {
                "pass": eq13 and eq14,
                "pair": list(SUBADD_PAIR),
                "x": x,
                "eq13": eq13,
                "eq14": eq14,
            }

    all_pass = all(r["pass"] for r in results.values())
    _emit(json.dumps(_report(cfg, results), indent=2) + "\n", cfg.out)
    return 0 if all_pass else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="parityset",
        description="Reconstruction and counting analysis of sets with even partition functions",
    )
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, poly=False, bound=False, fmt=None):
        if poly:
            sp.add_argument("--poly", "-P", help="polynomial text (1+z+z^3) or hex (0xb)")
        if bound:
            sp.add_argument("--bound", "-x", type=int, default=100000)
        sp.add_argument("--out", help="output path (default stdout)")
        if fmt:
            sp.add_argument("--format", choices=["json", "csv", "bin"], default=fmt)
        sp.add_argument("--unsafe-caps", action="store_true")

    sp = sub.add_parser("factor", help="factor P and report q, r, exponent")
    common(sp, poly=True, fmt="json")

    sp = sub.add_parser("analyze", help="residue-class report for q(P) or a q sweep")
    common(sp, poly=True, fmt="json")
    sp.add_argument("--qmax", type=int, default=101)

    sp = sub.add_parser("reconstruct", help="compute A(P) up to a bound")
    common(sp, poly=True, bound=True, fmt="json")

    sp = sub.add_parser("count", help="counting series CSV for A(P)")
    common(sp, poly=True, bound=True, fmt="csv")

    sp = sub.add_parser("verify", help="run verification suites")
    common(sp, poly=True, bound=True, fmt="json")
    sp.add_argument("--qmax", type=int, default=None)
    sp.add_argument("--kmax", type=int, default=4)
    sp.add_argument(
        "--suites",
        help=f"comma-separated subset of: {','.join(SUITES)} (or 'all')",
    )
    return ap


def _resolve_suites(ns) -> tuple[str, ...]:
    # Explicit --suites wins; otherwise --qmax selects the modulus sweeps
    # and --poly selects the per-polynomial suites.
    if getattr(ns, "suites", None) is not None:
        if ns.suites == "all":
            return SUITES
        picked = tuple(s.strip() for s in ns.suites.split(",") if s.strip())
        if not picked:
            raise ValueError("empty suite selection")
        return picked
    picked = ()
    if getattr(ns, "qmax", None) is not None:
        picked += QSWEEP_SUITES
    if getattr(ns, "poly", None):
        picked += POLY_SUITES
    return picked


def main(argv=None) -> int:
    ap = build_parser()
    ns = ap.parse_args(argv)
    try:
        suites: tuple[str, ...] = ()
        if ns.command == "verify":
            suites = _resolve_suites(ns)
        qmax = getattr(ns, "qmax", None)
        cfg = RunConfig(
            command=ns.command,
            poly=getattr(ns, "poly", None),
            bound=getattr(ns, "bound", 100000),
            qmax=qmax if qmax is not None else 101,
            kmax=getattr(ns, "kmax", 4),
            out=getattr(ns, "out", None),
            format=getattr(ns, "format", "json"),
            suites=suites,
            unsafe_caps=getattr(ns, "unsafe_caps", False),
        )
        cfg.check_caps()
        if cfg.command in ("factor", "reconstruct", "count") and not cfg.poly:
            raise ValueError(f"{cfg.command} requires --poly")
        handler = {
            "factor": cmd_factor,
            "analyze": cmd_analyze,
            "reconstruct": cmd_reconstruct,
            "count": cmd_count,
            "verify": cmd_verify,
        }[cfg.command]
        return handler(cfg)
    except (ValueError, PolyParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
