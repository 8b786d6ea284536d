"""Verifier for the archimedean lower bounds on the fundamental domain:
per-characteristic theta bounds (0.44 / 0.75 / 1.12 rules), the chi10 lower
bound with c0 = 8e-5, and the elementary complex-exponential inequalities.

These are theorems on F2; any violation (beyond tracked error) is an
implementation bug, so the sampling harness treats a single failure as fatal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import mpmath as mp

from . import siegel
from .prec import PrecisionContext
from .theta import EVEN_CHARS, PeriodMatrix, ThetaCharacteristic, chi10, theta_all

CHI10_C0 = mp.mpf(8) / 10 ** 5


@dataclass
class BoundCheck:
    bound: object
    value: object
    passed: bool
    rule: str


def _require_f2(Z: PeriodMatrix, ctx: PrecisionContext):
    with ctx.work():
        if not siegel.in_fundamental_domain(Z, mp.mpf(2) ** (-ctx.prec // 2)):
            raise ValueError("Z is not in the fundamental domain")


def _a_quadform(ch: ThetaCharacteristic, Z: PeriodMatrix):
    # a^T (Im Z) a with a = (a1/2, a2/2)
    y11, y12, y22 = Z.im_entries()
    a1 = mp.mpf(ch.a1) / 2
    a2 = mp.mpf(ch.a2) / 2
    return a1 * a1 * y11 + 2 * a1 * a2 * y12 + a2 * a2 * y22


def theta_lb(ch: ThetaCharacteristic, Z: PeriodMatrix, ctx: PrecisionContext):
    """The applicable lemma bound for |theta_ch(0, Z)| on F2."""
    with ctx.work():
        if (ch.a1, ch.a2) == (0, 0):
            return mp.mpf("0.44"), "a=0"
        if (ch.a1, ch.a2) != (1, 1):
            return mp.mpf("0.75") * mp.exp(-ctx.pi * _a_quadform(ch, Z)), "a half"
        # a = (1/2, 1/2); b = (nu/2, nu/2)
        if ch.b1 != ch.b2:
            raise ValueError("no lemma covers a=(1/2,1/2) with b1 != b2")
        nu = ch.b1
        factor = abs(1 + (-1) ** nu * mp.expjpi(Z.z12))
        expo = mp.exp(-ctx.pi * (_a_quadform(ch, Z) - mp.im(Z.z12)))
        return mp.mpf("1.12") * factor * expo, "a=(1/2,1/2)"


def check_theta_lb(ch: ThetaCharacteristic, Z: PeriodMatrix,
                   ctx: PrecisionContext) -> BoundCheck:
    _require_f2(Z, ctx)
    if not ch.is_even():
        raise ValueError("odd characteristic")
    with ctx.work():
        bound, rule = theta_lb(ch, Z, ctx)
        val = abs(theta_all(Z, ctx)[EVEN_CHARS.index(ch)])
        return BoundCheck(bound=+bound, value=+val,
                          passed=bool(val >= bound - ctx.tol), rule=rule)


def check_chi10_lb(Z: PeriodMatrix, ctx: PrecisionContext):
    """Sharp and weak chi10 lower bounds; pass iff value >= sharp bound."""
    _require_f2(Z, ctx)
    with ctx.work():
        y11, y12, y22 = Z.im_entries()
        pref = CHI10_C0 * min(mp.mpf(1), ctx.pi * abs(Z.z12)) ** 2
        sharp = pref * mp.exp(-2 * ctx.pi * (y11 + y22 - y12))
        weak = pref * mp.exp(-2 * ctx.pi * (y11 + y22))
        val = abs(chi10(Z, ctx))
        return BoundCheck(bound=+sharp, value=+val,
                          passed=bool(val >= sharp - ctx.tol), rule="chi10 sharp"), \
               BoundCheck(bound=+weak, value=+val,
                          passed=bool(val >= weak - ctx.tol), rule="chi10 weak")


def check_exp_ineq(z, ctx: PrecisionContext) -> bool:
    """|e^{iz/2} + 1| >= 1 and |e^{iz} - 1| >= (1 - 1/e) min{1, |z|}
    for |Re z| <= pi."""
    with ctx.work():
        z = mp.mpc(z)
        if abs(mp.re(z)) > ctx.pi + ctx.tol:
            raise ValueError("requires |Re z| <= pi")
        one = abs(mp.exp(mp.mpc(0, 1) * z / 2) + 1) >= 1 - ctx.tol
        rhs = (1 - mp.exp(mp.mpf(-1))) * min(mp.mpf(1), abs(z))
        two = abs(mp.exp(mp.mpc(0, 1) * z) - 1) >= rhs - ctx.tol
        return bool(one and two)


def sample_fundamental_domain(n: int, seed: int, ctx: PrecisionContext):
    """n deterministic samples in F2: random Re in [-1/2, 1/2], Im drawn
    from the reduced cone with Im z11 in [sqrt(3)/2, 3], then reduce()."""
    if n < 1:
        raise ValueError("n >= 1 required")
    rng = random.Random(seed)
    out = []
    with ctx.work():
        while len(out) < n:
            x11 = rng.uniform(-0.5, 0.5)
            x12 = rng.uniform(-0.5, 0.5)
            x22 = rng.uniform(-0.5, 0.5)
            y11 = rng.uniform(3 ** 0.5 / 2, 3.0)
            y22 = y11 * rng.uniform(1.0, 2.5)
            y12 = rng.uniform(0.0, y11 / 2)
            try:
                Z = PeriodMatrix(mp.mpc(x11, y11), mp.mpc(x12, y12),
                                 mp.mpc(x22, y22))
                _, zred = siegel.reduce(Z, ctx)
            except (ValueError, ArithmeticError):
                continue
            if siegel.in_fundamental_domain(zred, mp.mpf(2) ** (-ctx.prec // 2)):
                out.append(zred)
    return out


def verify_bounds(n: int, seed: int, ctx: PrecisionContext):
    """Run every lemma bound over n sampled matrices; returns (failures, total
    checks).  failures is a list of (description, serialized Z) for replay."""
    failures = []
    checks = 0
    samples = sample_fundamental_domain(n, seed, ctx)
    with ctx.work():
        for Z in samples:
            vals = theta_all(Z, ctx)
            for ch, tv in zip(EVEN_CHARS, vals):
                bound, rule = theta_lb(ch, Z, ctx)
                checks += 1
                if not abs(tv) >= bound - ctx.tol:
                    failures.append((f"theta bound {rule} ch={ch}", repr(Z)))
            c = mp.mpc(1)
            for tv in vals:
                c *= tv * tv
            y11, y12, y22 = Z.im_entries()
            pref = CHI10_C0 * min(mp.mpf(1), ctx.pi * abs(Z.z12)) ** 2
            sharp = pref * mp.exp(-2 * ctx.pi * (y11 + y22 - y12))
            weak = pref * mp.exp(-2 * ctx.pi * (y11 + y22))
            checks += 2
            if not abs(c) >= sharp - ctx.tol:
                failures.append(("chi10 sharp bound", repr(Z)))
            if not abs(c) >= weak - ctx.tol:
                failures.append(("chi10 weak bound", repr(Z)))
            if weak > sharp + ctx.tol:
                failures.append(("weak bound exceeds sharp bound", repr(Z)))
    return failures, checks
