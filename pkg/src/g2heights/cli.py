"""Command-line front end.

Job files are flat key = value text; lists comma-separated; complex numbers
as "re+im*i" decimals.  Reports are deterministic for fixed job, precision
and seed.  Exit codes: 0 success/pass, 1 computation or input error, 2
verification failure.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

import mpmath as mp

from . import bounds, cmperiod, siegel
from .colmez import CharacterError, char_from_spec, char_weighted_sum, colmez_height
from .exact import IntPolynomial
from .heights import HYPOTHESES, compare, height_local
from .igusa import (WeierstrassEquation, discriminant, igusa_invariants)
from .prec import PrecisionContext
from .theta import EVEN_CHARS, PeriodMatrix, archimedean_term, chi10, theta_all

_COMPLEX_RE = re.compile(
    r"^([+-]?\d+(?:\.\d*)?)([+-]\d+(?:\.\d*)?)\*i$"
)


class JobError(ValueError):
    pass


def parse_complex(s: str):
    s = s.replace(" ", "")
    m = _COMPLEX_RE.match(s)
    if not m:
        raise JobError(f"bad complex literal: {s!r} (want re+im*i)")
    return m.group(1), m.group(2)


def _sig_digits(dec: str) -> int:
    return len(dec.lstrip("+-0.").replace(".", ""))


def parse_job(path: str) -> dict:
    job = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise JobError(f"{path}:{lineno}: expected key = value")
            key, val = line.split("=", 1)
            job[key.strip()] = val.strip()
    return job


def _rat_list(s: str):
    return [Fraction(tok.strip()) for tok in s.split(",")]


def job_curve(job):
    if "curve_P" not in job:
        raise JobError("job lacks curve_P")
    P = IntPolynomial(_rat_list(job["curve_P"]))
    Q = IntPolynomial(_rat_list(job.get("curve_Q", "0")))
    return WeierstrassEquation(P, Q)


def job_ctx(job, args):
    bits = int(job.get("precision", 0)) or args.precision_bits
    return PrecisionContext(bits)


def job_character(job):
    f = int(job["f_K"])
    if "character_table" in job:
        table = dict(tok.split("=") for tok in
                     (t.strip() for t in job["character_table"].split(",")))
        return char_from_spec(f, {"table": {int(k): v for k, v in table.items()}})
    if "character_gen" in job:
        gens = dict(tok.split("=") for tok in
                    (t.strip() for t in job["character_gen"].split(",")))
        return char_from_spec(f, {"gen": {int(k): v for k, v in gens.items()}})
    raise JobError("job lacks character_table / character_gen")


def job_periods(job, ctx, swap=False):
    delta = int(job["delta_F"])
    if "tau_poly" in job:
        poly = IntPolynomial(_rat_list(job["tau_poly"]))
        t1, t2 = cmperiod.select_tau(poly, ctx, swap=swap)
    elif "tau_values" in job:
        parts = [p.strip() for p in job["tau_values"].split(",")]
        if len(parts) != 2:
            raise JobError("tau_values must list exactly two complex numbers")
        need = ctx.prec // 3
        vals = []
        with ctx.work():
            for p in parts:
                re_s, im_s = parse_complex(p)
                if _sig_digits(re_s) < need or _sig_digits(im_s) < need:
                    raise JobError(
                        f"tau_values carry fewer than {need} significant digits "
                        f"required at {ctx.prec}-bit precision"
                    )
                vals.append(mp.mpc(mp.mpf(re_s), mp.mpf(im_s)))
        t1, t2 = cmperiod.select_tau(tuple(vals), ctx, swap=swap)
    else:
        raise JobError("job lacks tau_poly / tau_values")
    return [cmperiod.period_matrix(t1, t2, delta, ctx)]


def _job_primes(job, args):
    s = args.primes or job.get("primes", "")
    return tuple(int(p) for p in s.split(",") if p.strip()) if s else ()


def _fmt(x, digits=30):
    return mp.nstr(x, digits, strip_zeros=False)


def cmd_igusa(args):
    job = parse_job(args.job)
    eq = job_curve(job)
    inv = igusa_invariants(eq)
    print("discriminant =", discriminant(eq))
    for name, v in zip(("J2", "J4", "J6", "J8", "J10"), inv.as_tuple()):
        print(f"{name} = {v}")
    if inv.J2 != 0:
        print("J2^5/J10 =", inv.J2 ** 5 / inv.J10)
    if inv.J6 != 0:
        print("J6^5/J10^3 =", inv.J6 ** 5 / inv.J10 ** 3)
    if inv.J8 != 0:
        print("J8^5/J10^4 =", inv.J8 ** 5 / inv.J10 ** 4)
    return 0


def cmd_theta(args):
    job = parse_job(args.job)
    ctx = job_ctx(job, args)
    orderings = (False, True) if args.both_orderings else (False,)
    for swap in orderings:
        Z = job_periods(job, ctx, swap=swap)[0]
        with ctx.work():
            _, zred = siegel.reduce(Z, ctx)
            label = "swapped" if swap else "canonical"
            print(f"[{label} tau ordering]")
            for ch, v in zip(EVEN_CHARS, theta_all(zred, ctx)):
                print(f"theta[{ch.a1}{ch.a2};{ch.b1}{ch.b2}] =", _fmt(v))
            print("chi10 =", _fmt(chi10(zred, ctx)))
            print("arch_term_bare =", _fmt(archimedean_term(zred, ctx, bare=True)))
            print("arch_term =", _fmt(archimedean_term(zred, ctx)))
    return 0


def cmd_reduce(args):
    entries = []
    with open(args.matrix) as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                entries.append(line)
    if len(entries) != 3:
        print("matrix file must list z11, z12, z22 (one per line)", file=sys.stderr)
        return 1
    ctx = PrecisionContext(args.precision_bits)
    with ctx.work():
        vals = []
        for e in entries:
            re_s, im_s = parse_complex(e)
            vals.append(mp.mpc(mp.mpf(re_s), mp.mpf(im_s)))
        Z = PeriodMatrix(*vals)
        gamma, zred = siegel.reduce(Z, ctx)
        print("gamma =", gamma.m)
        for name, v in zip(("z11", "z12", "z22"), zred.entries()):
            print(f"{name} =", _fmt(v))
    return 0


def cmd_height_colmez(args):
    job = parse_job(args.job)
    ctx = job_ctx(job, args)
    chi = job_character(job)
    w = char_weighted_sum(chi)
    h = colmez_height(chi, ctx)
    print("f_K =", chi.f)
    print("char_weighted_sum =", f"{w[0]}{w[1]:+d}*i")
    print("height =", _fmt(h))
    _print_notes()
    return 0


def cmd_height_local(args):
    job = parse_job(args.job)
    ctx = job_ctx(job, args)
    eq = job_curve(job)
    periods = job_periods(job, ctx)
    hb = height_local(eq, periods, int(job.get("degree", 1)), ctx,
                      extra_primes=_job_primes(job, args))
    print("finite_part =", _fmt(hb.finite_part))
    for p in hb.local_ledger:
        print(f"  p={p.p} iota={p.iota} ord_min_disc={p.ord_min_disc} "
              f"term={_fmt(p.height_term)}")
    for lbl, v in hb.arch_terms:
        print(f"arch[{lbl}] =", _fmt(v))
    print("total =", _fmt(hb.total))
    _print_notes()
    return 0


def cmd_compare(args):
    job = parse_job(args.job)
    ctx = job_ctx(job, args)
    eq = job_curve(job)
    chi = job_character(job)
    tol = job.get("tolerance", "1e-9")
    orderings = (False, True) if args.both_orderings else (False,)
    status = 0
    for swap in orderings:
        periods = job_periods(job, ctx, swap=swap)
        rep = compare(eq, periods, int(job.get("degree", 1)), chi, ctx,
                      tolerance=tol, extra_primes=_job_primes(job, args))
        label = "swapped" if swap else "canonical"
        print(f"[{label} tau ordering]")
        print("engine=local   total =", _fmt(rep.local.total))
        print("engine=colmez  total =", _fmt(rep.colmez))
        print("discrepancy =", _fmt(rep.discrepancy, 8))
        print("tolerance =", tol)
        print("precision_bits =", rep.precision_bits)
        print("result =", "PASS" if rep.passed else "FAIL")
        if not rep.passed and not swap:
            status = 2
    _print_notes()
    return status


def cmd_verify_bounds(args):
    ctx = PrecisionContext(args.precision_bits)
    failures, checks = bounds.verify_bounds(args.samples, args.seed, ctx)
    print(f"samples = {args.samples}")
    print(f"seed = {args.seed}")
    print(f"checks = {checks}")
    print(f"failures = {len(failures)}")
    for desc, z in failures:
        print("FAIL:", desc, z)
    return 0 if not failures else 2


def _print_notes():
    for note in HYPOTHESES:
        print("note:", note)


def main(argv=None):
    ap = argparse.ArgumentParser(prog="g2heights")
    ap.add_argument("--precision-bits", type=int, default=256)
    ap.add_argument("--primes", default="",
                    help="extra candidate primes for the finite part")
    ap.add_argument("--both-orderings", action="store_true",
                    help="also report the swapped tau ordering")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, fn, needs_job in (
        ("igusa", cmd_igusa, True),
        ("theta", cmd_theta, True),
        ("height-colmez", cmd_height_colmez, True),
        ("height-local", cmd_height_local, True),
        ("compare", cmd_compare, True),
    ):
        p = sub.add_parser(name)
        p.add_argument("job")
        p.set_defaults(fn=fn)
    p = sub.add_parser("reduce")
    p.add_argument("--matrix", required=True)
    p.set_defaults(fn=cmd_reduce)
    p = sub.add_parser("verify-bounds")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(fn=cmd_verify_bounds)
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (JobError, CharacterError, ValueError, OSError,
            ZeroDivisionError, ArithmeticError) as exc:
        print("error:", exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
