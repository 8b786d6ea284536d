import random
from fractions import Fraction as F

import pytest

from g2heights.exact import (IntPolynomial, QuadElement, QuadModule,
                             RankDeficientError, disc_n, module_norm,
                             valuation)


def test_valuation_examples():
    assert valuation(8, 2) == 3
    assert valuation(1, 7) == 0
    # ord_2 of the Example 3 ratio J8^5/J10^4
    assert valuation(-F(3 ** 10 * 2029 ** 5, 2 ** 24), 2) == -24


def test_valuation_errors():
    with pytest.raises(ValueError):
        valuation(0, 2)
    with pytest.raises(ValueError):
        valuation(5, 4)


def test_valuation_additive():
    rng = random.Random(3)
    for _ in range(30):
        x = F(rng.randint(1, 10 ** 6), rng.randint(1, 10 ** 6))
        y = F(rng.randint(1, 10 ** 6), rng.randint(1, 10 ** 6))
        for p in (2, 3, 7):
            assert valuation(x * y, p) == valuation(x, p) + valuation(y, p)


def test_disc5_quintic():
    assert disc_n(IntPolynomial([-1, 0, 0, 0, 0, 1], 5), 5) == 3125


def test_disc6_degree_drop():
    # disc6 of 4(x^5 - 1): one root at infinity
    assert disc_n(IntPolynomial([-4, 0, 0, 0, 0, 4], 6), 6) == 2 ** 20 * 3125


def test_disc_singular():
    assert disc_n(IntPolynomial([0, 0, 0, 0, 0, 1], 5), 5) == 0


def test_disc_identity_quintics():
    # 2^8 disc5(P) = 2^-12 disc6(4P) on random monic quintics
    rng = random.Random(11)
    for _ in range(50):
        cs = [rng.randint(-8, 8) for _ in range(5)] + [1]
        P = IntPolynomial(cs, 5)
        P4 = IntPolynomial([4 * c for c in cs], 6)
        assert 2 ** 8 * disc_n(P, 5) == F(disc_n(P4, 6), 2 ** 12)


def test_disc_shift_invariance():
    rng = random.Random(5)
    for _ in range(10):
        cs = [rng.randint(-6, 6) for _ in range(6)] + [rng.randint(1, 4)]
        p = IntPolynomial(cs, 6)
        c = rng.randint(-3, 3)
        assert disc_n(p.shift(c), 6) == disc_n(p, 6)


def test_module_norm_examples():
    D = 5
    one = QuadElement(1, 0, 1, D)
    theta = QuadElement(D, 1, 2, D)
    assert module_norm(QuadModule([one, theta], D)) == 1
    two = QuadElement(2, 0, 1, D)
    twotheta = QuadElement(2 * D, 2, 2, D)
    assert module_norm(QuadModule([two, twotheta], D)) == 4
    # d^-1 = (1/sqrt(D)) O_F has norm 1/D
    inv_sqrt = QuadElement(0, 1, D, D)
    theta_over = QuadElement(1, 1, 2, D)  # theta/sqrt(D) = (1+sqrt(5))/2
    assert module_norm(QuadModule([inv_sqrt, theta_over], D)) == F(1, D)


def test_module_norm_unimodular_invariance():
    D = 13
    rng = random.Random(2)
    g1 = QuadElement(3, 1, 2, D)
    g2 = QuadElement(-1, 2, 1, D)
    base = module_norm(QuadModule([g1, g2], D))
    for _ in range(10):
        # random SL2(Z) combination
        a, b = rng.randint(-3, 3), rng.randint(-3, 3)
        c = rng.randint(-3, 3)
        d = (1 + b * c) // a if a != 0 and (1 + b * c) % a == 0 else None
        if d is None:
            a, b, c, d = 1, rng.randint(-5, 5), 0, 1
        h1 = QuadElement(a * g1.u * g2.w + b * g2.u * g1.w,
                         a * g1.v * g2.w + b * g2.v * g1.w,
                         g1.w * g2.w, D)
        h2 = QuadElement(c * g1.u * g2.w + d * g2.u * g1.w,
                         c * g1.v * g2.w + d * g2.v * g1.w,
                         g1.w * g2.w, D)
        assert module_norm(QuadModule([h1, h2], D)) == base


def test_module_norm_rank_deficient():
    D = 5
    g = QuadElement(3, 1, 1, D)
    g2 = QuadElement(6, 2, 1, D)
    with pytest.raises(RankDeficientError):
        module_norm(QuadModule([g, g2], D))
