"""Named distribution families used by the verification harnesses.

Everything here is exact.  Closed forms (binomial pmf, quasi-uniform
variance) are deliberately written without convolutions so the tests can
cross-check them against the convolution route.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from .dist import Dist, PointLike, RationalLike, as_fraction, as_point
from .errors import AlphaOutOfRange, ParamOutOfRange, RestPointInSupport, WrongSupportSize


def _check_alpha(alpha: RationalLike) -> Fraction:
    a = as_fraction(alpha)
    if not 0 < a < 1:
        raise AlphaOutOfRange(f"level must lie in (0, 1), got {a}")
    return a


def quasi_uniform(alpha: RationalLike) -> Dist:
    """Flattest law with largest atom exactly alpha.

    Mass alpha on each of 0, 1, ..., floor(1/alpha) - 1 and the remainder,
    if positive, on floor(1/alpha).
    """
    a = _check_alpha(alpha)
    k = math.floor(1 / a)
    entries: list[tuple[int, Fraction]] = [(level, a) for level in range(k)]
    remainder = 1 - k * a
    if remainder > 0:
        entries.append((k, remainder))
    return Dist.from_entries(entries)


def quasi_uniform_variance(alpha: RationalLike) -> Fraction:
    """Closed-form variance of quasi_uniform(alpha).

    With k = floor(1/alpha):
        k (k + 1) alpha (2 + 4k - 3 alpha k - 3 alpha k^2) / 12
    which collapses to (1 - alpha^2) / (12 alpha^2) when 1/alpha is integer.
    """
    a = _check_alpha(alpha)
    k = math.floor(1 / a)
    return Fraction(k * (k + 1), 12) * a * (2 + 4 * k - 3 * a * k - 3 * a * k * k)


def extreme_point_measure(alpha: RationalLike, points: Iterable[PointLike], rest: PointLike | None = None) -> Dist:
    """Law with mass alpha on each given point and the remainder on `rest`.

    These are the extreme points of the convex set of laws whose largest
    atom is at most alpha: exactly floor(1/alpha) points carry alpha and one
    further point carries 1 - floor(1/alpha) * alpha when that is positive.
    """
    a = _check_alpha(alpha)
    k = math.floor(1 / a)
    pts = sorted({as_point(p) for p in points})
    if len(pts) != k:
        raise WrongSupportSize(f"need exactly {k} main points for level {a}, got {len(pts)}")
    remainder = 1 - k * a
    entries: list[tuple[PointLike, Fraction]] = [(p, a) for p in pts]
    if remainder > 0:
        if rest is None:
            raise ValueError(f"level {a} leaves remainder {remainder}; a rest point is required")
        r = as_point(rest)
        if r in pts:
            raise RestPointInSupport(f"rest point {r} already carries mass {a}")
        entries.append((r, remainder))
    return Dist.from_entries(entries)


def bernoulli(p: RationalLike) -> Dist:
    """Law on {0, 1} with success mass p."""
    q = as_fraction(p)
    if not 0 < q <= 1:
        raise ParamOutOfRange(f"success mass must lie in (0, 1], got {q}")
    return Dist.from_entries([(0, 1 - q), (1, q)])


def binomial(n: int, p: RationalLike) -> Dist:
    """Binomial law via the exact closed-form pmf; n = 0 is the point mass at 0."""
    q = as_fraction(p)
    if n < 0:
        raise ParamOutOfRange(f"trial count must be >= 0, got {n}")
    if not 0 < q <= 1:
        raise ParamOutOfRange(f"success mass must lie in (0, 1], got {q}")
    return Dist.from_entries(
        (k, math.comb(n, k) * q**k * (1 - q) ** (n - k)) for k in range(n + 1)
    )


def alternating_bernoulli(n: int, p: RationalLike) -> Dist:
    """Law of an alternating-signed sum of n iid Bernoulli(p) variables.

    ceil(n/2) summands enter with sign +1 and floor(n/2) with sign -1, so
    the result is the difference of two independent binomials.
    """
    if n < 1:
        raise ParamOutOfRange(f"need at least one summand, got {n}")
    q = as_fraction(p)
    if not 0 < q <= Fraction(1, 2):
        raise ParamOutOfRange(f"success mass must lie in (0, 1/2], got {q}")
    plus = binomial((n + 1) // 2, q)
    minus = binomial(n // 2, q).negate()
    return plus.convolve(minus)
