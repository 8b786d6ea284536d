"""Igusa invariants of genus-2 Weierstrass equations y^2 + Qy = P over Q,
and the finite-place part of the height.

Invariants are taken of the sextic f = P + Q^2/4.  The Igusa-Clebsch
quadruple (I2, I4, I6, I10) comes from transvectants of f; the constants
below were solved for exactly against the symmetric-function definitions
(sums over pairings of root differences) on random split sextics:
    I2 = -120*(f,f)_6
    I4 = -720*A^2 + 6750*B,   B = (i,i)_4, i = (f,f)_4
    I6 = 8640*A^3 - 108000*A*B + 202500*C,   C = (i,(i,i)_2)_4
I10 is the binary-sextic discriminant a0^10 prod (r_i - r_j)^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

import mpmath as mp

from .exact import IntPolynomial, disc_n, is_prime, valuation
from .prec import PrecisionContext


class SingularCurveError(ValueError):
    pass


class WeierstrassEquation:
    """y^2 + Q(x) y = P(x), deg P <= 6, deg Q <= 3, smooth of genus 2."""

    def __init__(self, P: IntPolynomial, Q: IntPolynomial):
        if P.degree > 6:
            raise ValueError("deg P > 6")
        if Q.degree > 3:
            raise ValueError("deg Q > 3")
        self.P = P
        self.Q = Q
        f = P.scale(4) + Q * Q
        if f.degree not in (5, 6):
            raise SingularCurveError("4P + Q^2 must have degree 5 or 6")
        self.sextic4 = IntPolynomial(f.coeffs, 6)  # 4P + Q^2 as a binary sextic
        if disc_n(self.sextic4, 6) == 0:
            raise SingularCurveError("vanishing discriminant")


@dataclass(frozen=True)
class IgusaInvariants:
    J2: Fraction
    J4: Fraction
    J6: Fraction
    J8: Fraction
    J10: Fraction

    def as_tuple(self):
        return (self.J2, self.J4, self.J6, self.J8, self.J10)


@dataclass
class LocalContribution:
    p: int
    iota: int
    ord_min_disc: int
    height_term: object  # mpf


# ---- binary sextic transvectants, exact -----------------------------------

class _BF:
    # coeffs c[k] = coefficient of x^(n-k) y^k
    def __init__(self, coeffs, order):
        self.c = [Fraction(v) for v in coeffs]
        self.n = order

    def dx(self):
        return _BF([(self.n - k) * self.c[k] for k in range(self.n)], self.n - 1)

    def dy(self):
        return _BF([(k + 1) * self.c[k + 1] for k in range(self.n)], self.n - 1)

    def mul(self, other):
        n = self.n + other.n
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.c):
            for j, b in enumerate(other.c):
                out[i + j] += a * b
        return _BF(out, n)


def _transvectant(f: _BF, g: _BF, k: int) -> _BF:
    m, n = f.n, g.n
    pre = Fraction(factorial(m - k) * factorial(n - k), factorial(m) * factorial(n))
    total = None
    for j in range(k + 1):
        df = f
        for _ in range(k - j):
            df = df.dx()
        for _ in range(j):
            df = df.dy()
        dg = g
        for _ in range(j):
            dg = dg.dx()
        for _ in range(k - j):
            dg = dg.dy()
        term = df.mul(dg)
        sgn = (-1) ** j * comb(k, j)
        tc = [sgn * v for v in term.c]
        total = tc if total is None else [a + b for a, b in zip(total, tc)]
    return _BF([pre * v for v in total], m + n - 2 * k)


def _igusa_clebsch(sextic: IntPolynomial):
    # sextic given lowest degree first; _BF wants x-descending
    cs = list(sextic.coeffs) + [Fraction(0)] * (7 - len(sextic.coeffs))
    f = _BF(list(reversed(cs)), 6)
    A = _transvectant(f, f, 6).c[0]
    i4 = _transvectant(f, f, 4)
    B = _transvectant(i4, i4, 4).c[0]
    D2 = _transvectant(i4, i4, 2)
    C = _transvectant(i4, D2, 4).c[0]
    I2 = -120 * A
    I4 = -720 * A ** 2 + 6750 * B
    I6 = 8640 * A ** 3 - 108000 * A * B + 202500 * C
    I10 = disc_n(sextic, 6)
    return I2, I4, I6, I10


def discriminant(eq: WeierstrassEquation) -> Fraction:
    """Delta_E = 2^-12 disc_6(4P + Q^2)."""
    d = disc_n(eq.sextic4, 6)
    if d == 0:
        raise SingularCurveError("vanishing discriminant")
    return d / 2 ** 12


def igusa_invariants(eq: WeierstrassEquation) -> IgusaInvariants:
    """Invariants of the sextic f = P + Q^2/4, exact."""
    I2, I4, I6, I10 = _igusa_clebsch(eq.sextic4)
    if I10 == 0:
        raise SingularCurveError("vanishing discriminant")
    J2 = I2 / 8
    J4 = (4 * J2 ** 2 - I4) / 96
    J6 = (8 * J2 ** 3 - 160 * J2 * J4 - I6) / 576
    J8 = (J2 * J6 - J4 ** 2) / 4
    J10 = Fraction(I10, 4096)
    # 4P + Q^2 = 4f: J_{2k}(uf) = u^(2k) J_{2k}(f), so divide by 4^(2k)
    return IgusaInvariants(J2 / 4 ** 2, J4 / 4 ** 4, J6 / 4 ** 6,
                           J8 / 4 ** 8, J10 / 4 ** 10)


def iota(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return 4
    if p == 3:
        return 3
    return 1


def _j2iota(inv: IgusaInvariants, i: int) -> Fraction:
    return {1: inv.J2, 3: inv.J6, 4: inv.J8}[i]


def minimal_disc_order(inv: IgusaInvariants, p: int) -> int:
    """(1/iota) max{0, -ord_p(J10^-iota * J_{2iota}^5)}.

    Assumes good reduction of the jacobian at p (caller's hypothesis).
    """
    i = iota(p)
    Ji = _j2iota(inv, i)
    if Ji == 0:
        # |J10^-iota * J_{2iota}^5|_p = 0, so log max{1, .} = 0
        return 0
    e = 5 * valuation(Ji, p) - i * valuation(inv.J10, p)
    m = max(0, -e)
    if m % i != 0:
        raise ArithmeticError(
            f"non-integral minimal discriminant order at p={p}: {m}/{i}"
        )
    return m // i


def _factor_trial(n: int, bound: int = 10 ** 6, extra_primes=()):
    n = abs(n)
    out = {}
    for p in extra_primes:
        while n % p == 0:
            n //= p
            out[p] = out.get(p, 0) + 1
    d = 2
    while d * d <= n and d <= bound:
        while n % d == 0:
            n //= d
            out[d] = out.get(d, 0) + 1
        d += 1 if d == 2 else 2
    if n > 1:
        if is_prime(n):
            out[n] = out.get(n, 0) + 1
        else:
            raise ArithmeticError(
                f"cofactor {n} not factored by trial division up to {bound}; "
                "supply candidate primes explicitly"
            )
    return out


def candidate_primes(inv: IgusaInvariants, extra_primes=()):
    """Primes that can contribute: divisors of the denominators of the
    three ratios J_{2iota}^5 / J10^iota, plus 2 and 3 unconditionally."""
    cands = {2, 3}
    for i in (1, 3, 4):
        Ji = _j2iota(inv, i)
        if Ji == 0:
            continue
        r = Ji ** 5 / inv.J10 ** i
        cands.update(_factor_trial(r.denominator, extra_primes=extra_primes))
    return sorted(cands)


def finite_height_part(inv: IgusaInvariants, ctx: PrecisionContext,
                       extra_primes=()):
    """(1/60) sum_p (1/iota(p)) max{0, -ord_p(J10^-iota J_{2iota}^5)} log p,
    returned with the per-prime ledger."""
    ledger = []
    with ctx.work():
        total = mp.mpf(0)
        for p in candidate_primes(inv, extra_primes):
            m = minimal_disc_order(inv, p)
            if m == 0:
                continue
            term = mp.mpf(m) / 60 * mp.log(p)
            ledger.append(LocalContribution(p=p, iota=iota(p),
                                            ord_min_disc=m, height_term=term))
            total += term
        return +total, ledger
