"""Exhaustive and structured searches over signs, weights and split points.

Everything returns exact rationals with deterministic tie-breaking, so runs
are reproducible byte for byte.  The iid structure of the inputs is used to
prune orbits (sign counts, weight rescalings); the tests check the pruned
searches against plain enumeration.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .dist import (
    Dist,
    Point,
    PointLike,
    RationalLike,
    as_fraction,
    as_point,
    convolve_all,
    delta,
    self_convolve,
    weighted_sum,
)
from .errors import (
    AlphaOutOfRange,
    AssertionFailed,
    DimensionMismatch,
    EvenN,
    OddN,
    ParamOutOfRange,
    QTooLarge,
    TooLarge,
    ZeroWeight,
)
from .families import binomial, quasi_uniform


def signed_binomial_diff(n: int, k: int, p: RationalLike) -> Dist:
    """Law of B - B' with B ~ Binomial(n - k, p), B' ~ Binomial(k, p) independent."""
    if not 0 <= k <= n:
        raise ParamOutOfRange(f"need 0 <= k <= n, got k={k}, n={n}")
    q = as_fraction(p)
    if not 0 < q <= Fraction(1, 2):
        raise ParamOutOfRange(f"success mass must lie in (0, 1/2], got {q}")
    return binomial(n - k, q).convolve(binomial(k, q).negate())


@dataclass(frozen=True)
class KRow:
    """Best integer target for one sign split k."""

    k: int
    x: int
    value: Fraction


@dataclass(frozen=True)
class KScanResult:
    n: int
    p: Fraction
    best_k: int
    best_x: int
    best_value: Fraction
    rows: tuple[KRow, ...]

    def tied_ks(self) -> tuple[int, ...]:
        return tuple(r.k for r in self.rows if r.value == self.best_value)


def optimal_k_scan(n: int, p: RationalLike, *, allow_even: bool = False) -> KScanResult:
    """Scan sign splits k = 0..floor(n/2) of n Bernoulli(p) summands.

    For each k the candidate targets are floor and ceil of the mean
    (n - 2k) p; the scan verifies on every row that the global mode of the
    signed difference lies among those two candidates and matches the row
    value, raising AssertionFailed otherwise.  Smaller k and smaller x win
    ties.  Even n is rejected unless allow_even is set.
    """
    if n < 1:
        raise ParamOutOfRange(f"need n >= 1, got {n}")
    if n % 2 == 0 and not allow_even:
        raise EvenN(f"scan is defined for odd n, got {n}")
    q = as_fraction(p)
    if not 0 < q <= Fraction(1, 2):
        raise ParamOutOfRange(f"success mass must lie in (0, 1/2], got {q}")
    rows = []
    for k in range(n // 2 + 1):
        d = signed_binomial_diff(n, k, q)
        mean = (n - 2 * k) * q
        lo, hi = math.floor(mean), math.ceil(mean)
        candidates = (lo,) if lo == hi else (lo, hi)
        x = max(candidates, key=lambda c: (d.atom(c), -c))
        value = d.atom(x)
        mode_value, mode_point = d.concentration()
        if mode_point[0] not in candidates or mode_value != value:
            raise AssertionFailed(
                "mode left the floor/ceil window of the mean",
                witness={"n": n, "k": k, "p": q, "mode": mode_point[0], "candidates": candidates},
            )
        rows.append(KRow(k, x, value))
    best = max(rows, key=lambda r: (r.value, -r.k))
    return KScanResult(n, q, best.k, best.x, best.value, tuple(rows))


@dataclass(frozen=True)
class PhaseCell:
    p: Fraction
    best_ks: tuple[int, ...]    # all sign splits tied at the maximum
    best_value: Fraction


@dataclass(frozen=True)
class PhaseDiagram:
    n: int
    cells: tuple[PhaseCell, ...]
    observed_ks: tuple[int, ...]


def default_p_grid(count: int) -> list[Fraction]:
    """The grid i / (2 count) for i = 1..count, filling (0, 1/2]."""
    if count < 1:
        raise ParamOutOfRange(f"need a positive grid size, got {count}")
    return [Fraction(i, 2 * count) for i in range(1, count + 1)]


def k_phase_scan(n: int, p_grid: Sequence[RationalLike]) -> PhaseDiagram:
    """Best sign split as a function of p over a grid in (0, 1/2]."""
    ps = sorted({as_fraction(p) for p in p_grid})
    if not ps:
        raise ParamOutOfRange("empty grid")
    if ps[0] <= 0 or ps[-1] > Fraction(1, 2):
        raise ParamOutOfRange("grid values must lie in (0, 1/2]")
    cells = []
    observed: set[int] = set()
    for p in ps:
        res = optimal_k_scan(n, p)
        ks = res.tied_ks()
        observed.update(ks)
        cells.append(PhaseCell(p, ks, res.best_value))
    return PhaseDiagram(n, tuple(cells), tuple(sorted(observed)))


def sign_vector_max(dist: Dist, n: int, x: PointLike | None = None) -> tuple[Fraction, tuple[int, ...]]:
    """Best sign vector for n iid summands.

    Maximizes P(sum_i s_i X_i = x) over s in {-1, +1}^n, or the largest atom
    of the signed sum when x is None.  Because the summands are iid the law
    depends only on the number of +1 signs, so only n + 1 laws are formed;
    the reported witness is the lexicographically smallest maximizer.
    """
    if n < 1:
        raise ParamOutOfRange(f"need n >= 1, got {n}")
    if n > 24:
        raise TooLarge(f"sign enumeration capped at n = 24, got {n}")
    target = None
    if x is not None:
        target = as_point(x)
        if len(target) != dist.dim:
            raise DimensionMismatch(f"target {target} has dim {len(target)}, expected {dist.dim}")
    plus_powers = [delta((0,) * dist.dim)]
    minus_powers = [delta((0,) * dist.dim)]
    negated = dist.negate()
    for _ in range(n):
        plus_powers.append(plus_powers[-1].convolve(dist))
        minus_powers.append(minus_powers[-1].convolve(negated))
    best: tuple[Fraction, int] | None = None
    for j in range(n + 1):
        law = minus_powers[n - j].convolve(plus_powers[j])
        value = law.concentration()[0] if target is None else law.atom(target)
        if best is None or value > best[0]:
            best = (value, j)
    value, j = best
    return value, (-1,) * (n - j) + (1,) * j


def _weight_orbit_key(weights: tuple[Fraction, ...]) -> tuple[int, ...]:
    # canonical form under permutation and global rescaling
    denom = math.lcm(*(w.denominator for w in weights))
    ints = sorted(int(w * denom) for w in weights)
    g = math.gcd(*(abs(i) for i in ints))
    primitive = tuple(i // g for i in ints)
    flipped = tuple(sorted(-i for i in primitive))
    return min(primitive, flipped)


@dataclass(frozen=True)
class GridSearchResult:
    """Best rational weight vector from a grid, compared to the best signs."""

    value: Fraction
    weights: tuple[Fraction, ...]
    x: Point                    # argmax of the weighted sum's law (scaled lattice)
    sign_value: Fraction
    sign_vector: tuple[int, ...]
    exceeds_signs: bool


def weight_grid_search(dist: Dist, n: int, grid: Sequence[RationalLike], cap: int = 10**7) -> GridSearchResult:
    """Maximize the largest atom of sum_i a_i X_i over a_i from a finite grid.

    X_i are iid copies of `dist`.  Weight tuples equivalent under global
    rescaling or reordering give the same maximum, so each orbit is
    evaluated once; the first tuple met in lexicographic order represents
    its orbit, making the reported witness the smallest one.
    """
    if n < 1:
        raise ParamOutOfRange(f"need n >= 1, got {n}")
    values = sorted({as_fraction(g) for g in grid})
    if not values:
        raise ParamOutOfRange("empty weight grid")
    if any(v == 0 for v in values):
        raise ZeroWeight("grid must not contain 0")
    if len(values) ** n > cap:
        raise TooLarge(f"{len(values)}^{n} weight tuples exceed the cap {cap}")
    sign_value, sign_vector = sign_vector_max(dist, n)
    seen: set[tuple[int, ...]] = set()
    best: tuple[Fraction, tuple[Fraction, ...], Point] | None = None
    for tup in itertools.product(values, repeat=n):
        key = _weight_orbit_key(tup)
        if key in seen:
            continue
        seen.add(key)
        law = weighted_sum(tup, [dist] * n).dist
        value, argmax = law.concentration()
        if best is None or value > best[0]:
            best = (value, tup, argmax)
    value, weights, argmax = best
    return GridSearchResult(value, weights, argmax, sign_value, sign_vector, value > sign_value)


def quasi_uniform_bound_check(dists: Sequence[Dist], alpha: RationalLike, x: PointLike) -> tuple[Fraction, Fraction]:
    """Compare P(sum = x) against the alternating quasi-uniform ceiling.

    For an even number of independent summands each with largest atom at
    most alpha, the hit probability is at most the zero mass of the
    alternating sum of n iid quasi-uniform(alpha) variables.  Returns
    (lhs, rhs) and raises AssertionFailed if the ceiling fails.
    """
    n = len(dists)
    if n == 0 or n % 2 == 1:
        raise OddN(f"need an even number of summands, got {n}")
    a = as_fraction(alpha)
    if not 0 < a < 1:
        raise AlphaOutOfRange(f"level must lie in (0, 1), got {a}")
    dim = dists[0].dim
    if any(m.dim != dim for m in dists):
        raise DimensionMismatch("distributions must share one dimension")
    for i, mu in enumerate(dists):
        q, _ = mu.concentration()
        if q > a:
            raise QTooLarge(f"summand {i} has largest atom {q} > {a}")
    target = as_point(x)
    if len(target) != dim:
        raise DimensionMismatch(f"target {target} has dim {len(target)}, expected {dim}")
    lhs = convolve_all(dists).atom(target)
    u = quasi_uniform(a)
    rhs = self_convolve(u.convolve(u.negate()), n // 2).atom(0)
    if lhs > rhs:
        raise AssertionFailed(
            "quasi-uniform ceiling failed",
            witness={"x": target, "lhs": lhs, "rhs": rhs, "alpha": a},
        )
    return lhs, rhs


def monotonicity_check(dists: Sequence[Dist]) -> tuple[Fraction, ...]:
    """Largest atom along the prefix sums; verifies it never increases.

    Returns the sequence of concentration maxima for X_1, X_1 + X_2, ...;
    a violation raises AssertionFailed with the offending prefix.
    """
    if not dists:
        raise ValueError("need at least one distribution")
    dim = dists[0].dim
    if any(m.dim != dim for m in dists):
        raise DimensionMismatch("distributions must share one dimension")
    acc = dists[0]
    maxima = [acc.concentration()[0]]
    for i, mu in enumerate(dists[1:], start=2):
        acc = acc.convolve(mu)
        q = acc.concentration()[0]
        if q > maxima[-1]:
            raise AssertionFailed(
                "concentration maximum increased along a prefix",
                witness={"prefix": i, "previous": maxima[-1], "current": q},
            )
        maxima.append(q)
    return tuple(maxima)
