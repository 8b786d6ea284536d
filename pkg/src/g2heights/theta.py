"""Genus-2 theta constants with even characteristics, chi10, and the
archimedean height term.

theta_ab(0,Z) = sum_{n in Z^2} exp(i pi [(n+a)^T Z (n+a) + 2 (n+a)^T b]).

Characteristics are stored doubled (entries 0/1), so all exponent bookkeeping
stays integral until the final complex exponential.  Substituting m = 2n + 2a
turns the sum into
    sum_{m = 2a mod 2}  u^(m1^2) v^(m1 m2) w^(m2^2) i^(m1*2b1 + m2*2b2)
with u = e^(i pi z11/4), v = e^(i pi z12/2), w = e^(i pi z22/4); the lattice
part is shared by all ten characteristics, so one pass over the box fills the
sixteen (m1 mod 4, m2 mod 4) accumulators and every theta constant is a short
signed combination of those.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp

from .prec import PrecisionContext


@dataclass(frozen=True)
class ThetaCharacteristic:
    # doubled entries: a = (a1/2, a2/2), b = (b1/2, b2/2), each in {0,1}
    a1: int
    a2: int
    b1: int
    b2: int

    def is_even(self) -> bool:
        return (self.a1 * self.b1 + self.a2 * self.b2) % 2 == 0

    def a_half(self):
        return (self.a1, self.a2)


THETA1 = [ThetaCharacteristic(0, 0, 0, 0), ThetaCharacteristic(0, 0, 0, 1),
          ThetaCharacteristic(0, 0, 1, 0), ThetaCharacteristic(0, 0, 1, 1)]
THETA2 = [ThetaCharacteristic(1, 0, 0, 0), ThetaCharacteristic(0, 1, 0, 0),
          ThetaCharacteristic(1, 1, 0, 0), ThetaCharacteristic(0, 1, 1, 0),
          ThetaCharacteristic(1, 0, 0, 1), ThetaCharacteristic(1, 1, 1, 1)]
EVEN_CHARS = THETA1 + THETA2


class PeriodMatrix:
    """Symmetric 2x2 complex matrix with positive-definite imaginary part."""

    def __init__(self, z11, z12, z22):
        self.z11 = mp.mpc(z11)
        self.z12 = mp.mpc(z12)
        self.z22 = mp.mpc(z22)
        y11, y12, y22 = mp.im(self.z11), mp.im(self.z12), mp.im(self.z22)
        if not (y11 > 0 and y11 * y22 - y12 * y12 > 0):
            raise ValueError("Im Z is not positive definite")

    def im_entries(self):
        return mp.im(self.z11), mp.im(self.z12), mp.im(self.z22)

    def det_im(self):
        y11, y12, y22 = self.im_entries()
        return y11 * y22 - y12 * y12

    def lambda_min(self):
        """Smallest eigenvalue of Im Z."""
        y11, y12, y22 = self.im_entries()
        t = (y11 + y22) / 2
        d = mp.sqrt(((y11 - y22) / 2) ** 2 + y12 * y12)
        return t - d

    def entries(self):
        return self.z11, self.z12, self.z22

    def __repr__(self):
        return f"PeriodMatrix({self.z11}, {self.z12}, {self.z22})"


def _radius(Z: PeriodMatrix, ctx: PrecisionContext) -> int:
    # tail sum_{||n+a||_inf > R} e^(-pi lam ||n+a||^2) < 2^-workbits
    lam = Z.lambda_min()
    bits = ctx.workbits + 16
    R = int(mp.ceil(mp.sqrt(bits * ctx.log2 / (ctx.pi * lam)))) + 2
    return max(R, 4)


def theta_all(Z: PeriodMatrix, ctx: PrecisionContext, radius: int | None = None):
    """All ten even theta constants in the fixed EVEN_CHARS order."""
    with ctx.work():
        R = radius if radius is not None else _radius(Z, ctx)
        M = 2 * R + 1  # box |m_i| <= M in the doubled lattice
        u = mp.expjpi(Z.z11 / 4)
        v = mp.expjpi(Z.z12 / 2)
        w = mp.expjpi(Z.z22 / 4)
        usq = [mp.mpc(1)]
        wsq = [mp.mpc(1)]
        # k^2 = (k-1)^2 + 2k - 1: incremental squares
        uk, urun = mp.mpc(1), mp.mpc(1)
        wk, wrun = mp.mpc(1), mp.mpc(1)
        u2, w2 = u * u, w * w
        for _ in range(M):
            urun *= u2
            uk *= urun / u
            usq.append(uk)
            wrun *= w2
            wk *= wrun / w
            wsq.append(wk)
        # accumulators by (m1 mod 4, m2 mod 4)
        acc = [[mp.mpc(0)] * 4 for _ in range(4)]
        vm1 = mp.mpc(1)  # v^m1 for the current m1 >= 0
        for m1 in range(0, M + 1):
            row = usq[m1]
            for mm1 in ({0} if m1 == 0 else (m1, -m1)):
                vfac = vm1 if mm1 > 0 else 1 / vm1 if mm1 < 0 else mp.mpc(1)
                arow = acc[mm1 % 4]
                arow[0] += row  # m2 = 0, v^0, w^0
                qp = mp.mpc(1)  # v^(mm1 * m2)
                qm = mp.mpc(1)  # v^(-mm1 * m2)
                for m2 in range(1, M + 1):
                    qp *= vfac
                    qm /= vfac
                    t = row * wsq[m2]
                    arow[m2 % 4] += t * qp
                    arow[(-m2) % 4] += t * qm
            vm1 *= v
        ipow = (mp.mpc(1), mp.mpc(0, 1), mp.mpc(-1), mp.mpc(0, -1))
        out = []
        for ch in EVEN_CHARS:
            s = mp.mpc(0)
            for r1 in range(ch.a1 % 2, 4, 2):
                for r2 in range(ch.a2 % 2, 4, 2):
                    s += ipow[(r1 * ch.b1 + r2 * ch.b2) % 4] * acc[r1][r2]
            out.append(+s)
        return out


def theta_constant(ch: ThetaCharacteristic, Z: PeriodMatrix, ctx: PrecisionContext):
    if not ch.is_even():
        raise ValueError("odd characteristic")
    vals = theta_all(Z, ctx)
    try:
        return vals[EVEN_CHARS.index(ch)]
    except ValueError:
        raise ValueError("characteristic not among the ten even ones") from None


def chi10(Z: PeriodMatrix, ctx: PrecisionContext):
    """chi10(Z) = prod over the ten even characteristics of theta^2."""
    with ctx.work():
        p = mp.mpc(1)
        for t in theta_all(Z, ctx):
            p *= t * t
        return +p


# the five base characteristics for the Theta product, doubled [a1,a2,b1,b2]
_M_BASE = [(1, 0, 0, 0), (1, 0, 1, 0), (0, 1, 1, 0), (0, 1, 1, 1), (0, 0, 1, 1)]
_U_SET = frozenset({1, 3, 5})


def _sym_diff_char(T):
    idx = frozenset(T) ^ _U_SET
    q = [0, 0, 0, 0]
    for i in idx:
        m = _M_BASE[i - 1]
        q = [(a + b) % 2 for a, b in zip(q, m)]
    return ThetaCharacteristic(*q)


def theta_big(Z: PeriodMatrix, ctx: PrecisionContext):
    """Theta(Z) = prod over 3-subsets T of {1..5} of theta_{m_(T o {1,3,5})}^8;
    equals chi10(Z)^4."""
    from itertools import combinations
    with ctx.work():
        vals = theta_all(Z, ctx)
        p = mp.mpc(1)
        for T in combinations(range(1, 6), 3):
            ch = _sym_diff_char(T)
            t = vals[EVEN_CHARS.index(ch)]
            p *= t ** 8
        return +p


class Chi10NearZeroError(ArithmeticError):
    pass


def archimedean_term(Z: PeriodMatrix, ctx: PrecisionContext, bare: bool = False):
    """-(1/10) log(2^8 pi^10 |chi10(Z)| det(Im Z)^5).

    With bare=True the 2^8 pi^10 normalization is dropped (the raw invariant
    -(1/10) log(|chi10| det(Im Z)^5)).
    """
    with ctx.work():
        c = chi10(Z, ctx)
        ac = abs(c)
        if ac < mp.mpf(2) ** (-ctx.prec):
            raise Chi10NearZeroError(
                "chi10 indistinguishable from 0: raise precision, or Z is on "
                "the product-of-elliptic-curves locus"
            )
        val = -(mp.log(ac) + 5 * mp.log(Z.det_im())) / 10
        if not bare:
            val -= (8 * ctx.log2 + 10 * mp.log(ctx.pi)) / 10
        return +val
