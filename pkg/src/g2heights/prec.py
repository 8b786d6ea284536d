"""High-precision kernel: precision contexts, log-Gamma on (0,1], and
complex polynomial roots.

mpmath supplies the big-float substrate (mpf/mpc arithmetic, exp, log, pi);
log_gamma and the root finder are implemented here so their error behaviour
is under our control.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath as mp

from .exact import IntPolynomial


class PrecisionContext:
    """Immutable working-precision handle.  All numeric routines take one.

    prec is the target precision in bits; computations run at prec + guard
    bits and results are trusted to ~2^(-prec + guard).
    """

    def __init__(self, prec_bits: int = 256, guard_bits: int = 32):
        if prec_bits < 64:
            raise ValueError("precision below 64 bits not supported")
        self.prec = prec_bits
        self.guard = guard_bits
        self.workbits = prec_bits + guard_bits
        with mp.workprec(self.workbits):
            self.pi = +mp.pi
            self.log2 = mp.log(2)

    def work(self):
        """Context manager setting mpmath to the working precision."""
        return mp.workprec(self.workbits)

    @property
    def tol(self):
        with mp.workprec(self.workbits):
            return mp.mpf(2) ** (-self.prec + self.guard)

    def __repr__(self):
        return f"PrecisionContext(prec_bits={self.prec}, guard_bits={self.guard})"


_bernoulli_cache: dict[int, list] = {}


def _bernoulli_table(workbits: int, nmax: int):
    key = workbits
    tab = _bernoulli_cache.get(key, [])
    if len(tab) < nmax:
        with mp.workprec(workbits + 16):
            tab = [+mp.bernoulli(2 * n) for n in range(1, nmax + 1)]
        _bernoulli_cache[key] = tab
    return tab


def log_gamma(x, ctx: PrecisionContext):
    """log Gamma(x) for real x in (0, 1].

    Argument shift x -> x+N into the Stirling regime, then the asymptotic
    series with the first omitted term as remainder bound, then subtract
    the shift logs.
    """
    with ctx.work():
        x = mp.mpf(x) if not isinstance(x, mp.mpf) else x
        if not (0 < x <= 1):
            raise ValueError("log_gamma requires x in (0, 1]")
        if x == 1:
            return mp.mpf(0)
        wb = ctx.workbits
        # Stirling at z >= 0.18*wb makes the series bottom out below 2^-wb
        N = int(0.18 * wb) + 8
        z = x + N
        # log Gamma(z) = (z-1/2) log z - z + (1/2) log(2 pi) + series
        s = (z - mp.mpf(1) / 2) * mp.log(z) - z + mp.log(2 * ctx.pi) / 2
        z2 = z * z
        zpow = z
        cut = mp.mpf(2) ** (-(wb + 16))
        bern = _bernoulli_table(wb, int(0.6 * wb) + 20)
        for n, b2n in enumerate(bern, start=1):
            term = b2n / ((2 * n) * (2 * n - 1) * zpow)
            s += term
            if abs(term) < cut:
                break
            zpow *= z2
        else:
            raise ArithmeticError("Stirling series did not reach tolerance")
        # Gamma(x) = Gamma(x+N) / (x (x+1) ... (x+N-1))
        for j in range(N):
            s -= mp.log(x + j)
        return +s


def poly_roots(p: IntPolynomial, ctx: PrecisionContext):
    """All complex roots of a squarefree polynomial, Aberth-Ehrlich
    iteration plus Newton polish, sorted by (Re, Im)."""
    if p.gcd_degree_with_derivative() != 0:
        raise ValueError("polynomial is not squarefree")
    deg = p.degree
    if deg == 0:
        return []
    with mp.workprec(ctx.workbits + 32):
        coeffs = [mp.mpf(c.numerator) / c.denominator for c in p.coeffs]
        lead = coeffs[-1]
        cn = [c / lead for c in coeffs]  # monic, ascending

        def ev(z):
            r = mp.mpc(0)
            for c in reversed(cn):
                r = r * z + c
            return r

        dcoef = [i * c for i, c in enumerate(cn)][1:]

        def evd(z):
            r = mp.mpc(0)
            for c in reversed(dcoef):
                r = r * z + c
            return r

        # Cauchy-style radius, perturbed-circle start
        radius = 1 + max(abs(c) for c in cn[:-1])
        roots = [radius * mp.expjpi(mp.mpf(2 * k) / deg + mp.mpf(1) / (2 * deg + 1))
                 for k in range(deg)]
        target = mp.mpf(2) ** (-ctx.workbits)
        for _ in range(200):
            maxcorr = mp.mpf(0)
            new = []
            for i, zi in enumerate(roots):
                fz = ev(zi)
                dz = evd(zi)
                if dz == 0:
                    new.append(zi + mp.mpf(1) / 1000)
                    maxcorr = mp.mpf(1)
                    continue
                ratio = fz / dz
                rep = mp.mpc(0)
                for j, zj in enumerate(roots):
                    if j != i:
                        rep += 1 / (zi - zj)
                denom = 1 - ratio * rep
                corr = ratio / denom if denom != 0 else ratio
                new.append(zi - corr)
                maxcorr = max(maxcorr, abs(corr))
            roots = new
            if maxcorr < mp.mpf(2) ** (-ctx.workbits // 2):
                break
        else:
            raise ArithmeticError("Aberth iteration did not converge")
        # Newton polish at full precision
        polished = []
        for z in roots:
            for _ in range(int(mp.log(ctx.workbits, 2)) + 6):
                fz = ev(z)
                dz = evd(z)
                step = fz / dz
                z = z - step
                if abs(step) < target * max(1, abs(z)):
                    break
            resid = abs(ev(z))
            scale = max(abs(z), 1) ** deg
            if resid > mp.mpf(2) ** (-ctx.prec) * scale:
                raise ArithmeticError(f"root residual too large: {resid}")
            polished.append(z)
        polished.sort(key=lambda z: (mp.re(z), mp.im(z)))
    with ctx.work():
        return [+z for z in polished]
