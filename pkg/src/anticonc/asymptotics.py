"""Float approximations paired with their exact counterparts.

This is the only module that touches floating point.  Every approximation
here has an exact partner computed with rationals; callers compare the two
and study the residual.  Exact values are computed first and converted to
float at the last possible moment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .dist import RationalLike, as_fraction
from .errors import ParamOutOfRange
from .families import alternating_bernoulli, quasi_uniform_variance


def _check_p(p: RationalLike) -> Fraction:
    q = as_fraction(p)
    if not 0 < q <= Fraction(1, 2):
        raise ParamOutOfRange(f"success mass must lie in (0, 1/2], got {q}")
    return q


def local_limit_bound(n: int, alpha: RationalLike) -> float:
    """First-order ceiling (2 pi n v)^(-1/2) with v the quasi-uniform variance.

    This is the leading coefficient of the concentration maximum for n
    summands capped at level alpha; it scales like n^(-1/2).
    """
    if n < 1:
        raise ParamOutOfRange(f"need n >= 1, got {n}")
    v = quasi_uniform_variance(alpha)
    return 1.0 / math.sqrt(2.0 * math.pi * n * float(v))


def small_dev_ratio_exact(n: int, p: RationalLike, k: int) -> Fraction:
    """P(D = k) / P(D = 0) for D the alternating sum of 2n Bernoulli(p)."""
    if n < 1:
        raise ParamOutOfRange(f"need n >= 1, got {n}")
    if k < 0:
        raise ParamOutOfRange(f"need k >= 0, got {k}")
    q = _check_p(p)
    d = alternating_bernoulli(2 * n, q)
    return d.atom(k) / d.atom(0)


def small_dev_ratio_approx(n: int, p: RationalLike, k: int) -> float:
    """Second-order ratio 1 - k^2 / (4 p (1 - p) n)."""
    if n < 1:
        raise ParamOutOfRange(f"need n >= 1, got {n}")
    if k < 0:
        raise ParamOutOfRange(f"need k >= 0, got {k}")
    q = _check_p(p)
    return float(1 - Fraction(k * k) / (4 * q * (1 - q) * n))


def alternating_zero_exact(n: int, p: RationalLike) -> Fraction:
    """P(D = 0) for D the alternating sum of n Bernoulli(p)."""
    return alternating_bernoulli(n, _check_p(p)).atom(0)


def alternating_zero_asym(n: int, p: RationalLike) -> float:
    """Two-term expansion of the alternating zero mass; branches on parity.

    Both branches share the leading factor (2 pi n p (1 - p))^(-1/2); the
    relative correction is (1 / (2 p (1 - p)) - 3) / (4 n) for even n and
    (2 p^2 - 6 p + 1) / (8 n p (1 - p)) for odd n.
    """
    if n < 1:
        raise ParamOutOfRange(f"need n >= 1, got {n}")
    q = _check_p(p)
    pq = q * (1 - q)
    if n % 2 == 0:
        correction = 1 + Fraction(1, 4 * n) * (1 / (2 * pq) - 3)
    else:
        correction = 1 + (2 * q * q - 6 * q + 1) / (8 * n * pq)
    return float(correction) / math.sqrt(2.0 * math.pi * n * float(pq))


def middle_coeff_exact(n: int, b: RationalLike, c: RationalLike) -> Fraction:
    """Central coefficient of (x^2 + b x + c)^n by exact polynomial powering."""
    if n < 1:
        raise ParamOutOfRange(f"need n >= 1, got {n}")
    bf, cf = as_fraction(b), as_fraction(c)
    if bf <= 0 or cf <= 0:
        raise ParamOutOfRange("coefficients must be positive")
    factor = [cf, bf, Fraction(1)]
    acc = [Fraction(1)]
    for _ in range(n):
        nxt = [Fraction(0)] * (len(acc) + 2)
        for i, a in enumerate(acc):
            if a == 0:
                continue
            for j, f in enumerate(factor):
                nxt[i + j] += a * f
        acc = nxt
    return acc[n]


def middle_coeff_asym(n: int, b: RationalLike, c: RationalLike) -> float:
    """Two-term expansion of the central coefficient of (x^2 + b x + c)^n.

    (b + 2 sqrt(c))^(n + 1/2) / (2 c^(1/4) sqrt(pi n))
        * (1 + (b - 4 sqrt(c)) / (16 n sqrt(c)))
    """
    if n < 1:
        raise ParamOutOfRange(f"need n >= 1, got {n}")
    bf, cf = float(as_fraction(b)), float(as_fraction(c))
    if bf <= 0 or cf <= 0:
        raise ParamOutOfRange("coefficients must be positive")
    root = math.sqrt(cf)
    lead = (bf + 2.0 * root) ** (n + 0.5) / (2.0 * cf**0.25 * math.sqrt(math.pi * n))
    return lead * (1.0 + (bf - 4.0 * root) / (16.0 * n * root))


@dataclass(frozen=True)
class OddTailRatios:
    """Exact and approximate costs of absorbing the odd tail of a long sum.

    With X the alternating sum of 2(m - 1) Bernoulli(p) summands:
      double_pair  P(X + 2 Y2 = 0) / P(X = 0), Y2 an alternating pair scaled by 2
      triple       P(X + Y3 = 0) / P(X = 0),  Y3 an alternating triple
    """

    exact_double_pair: Fraction
    exact_triple: Fraction
    approx_double_pair: float   # 1 - 4 / n_eff
    approx_triple: float        # 1 - (3 - 2 p) / (2 n_eff (1 - p))
    n_eff: int                  # 2 (m - 1)


def odd_tail_ratios(m: int, p: RationalLike) -> OddTailRatios:
    if m < 2:
        raise ParamOutOfRange(f"need m >= 2, got {m}")
    q = _check_p(p)
    n_eff = 2 * (m - 1)
    x = alternating_bernoulli(n_eff, q)
    x_zero = x.atom(0)
    pair_doubled = alternating_bernoulli(2, q).scale(2)
    triple = alternating_bernoulli(3, q)
    exact_pair = x.convolve(pair_doubled).atom(0) / x_zero
    exact_triple = x.convolve(triple).atom(0) / x_zero
    approx_pair = 1.0 - 4.0 / n_eff
    approx_triple = 1.0 - float((3 - 2 * q) / (2 * n_eff * (1 - q)))
    return OddTailRatios(exact_pair, exact_triple, approx_pair, approx_triple, n_eff)
