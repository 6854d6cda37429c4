"""Reductions that trade a target sum for symmetrized or canonical pieces.

These are the constructive steps behind the main comparison results: split a
sum in half and dominate the hit probability by a symmetrized half, group
summands that share a law up to sign, and peel a measure down to the extreme
points of a concentration cap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .dist import Dist, Point, PointLike, RationalLike, as_fraction, as_point, convolve_all, same_type, self_convolve
from .errors import AlphaOutOfRange, AssertionFailed, DimensionMismatch, OddN, QTooLarge
from .families import extreme_point_measure


def _common_dim(dists: Sequence[Dist]) -> int:
    d = dists[0].dim
    if any(m.dim != d for m in dists):
        raise DimensionMismatch("distributions must share one dimension")
    return d


@dataclass(frozen=True)
class AgmStep:
    """Outcome of one split-and-symmetrize step on a zero target."""

    joint_zero: Fraction        # P(S + T = 0)
    first_sym_zero: Fraction    # P(S - S' = 0), S' an independent copy
    second_sym_zero: Fraction   # P(T - T' = 0)
    mirror: bool                # whether T has the law of -S


def agm_step(first_half: Sequence[Dist], second_half: Sequence[Dist]) -> AgmStep:
    """Dominate P(S + T = 0) by the larger of the two symmetrized zero masses.

    A target x other than 0 is handled by shifting one summand by -x before
    calling.  Equality holds exactly when T has the law of -S; this is
    verified and a failure raises AssertionFailed.
    """
    if not first_half or not second_half:
        raise ValueError("both halves must be nonempty")
    if len(first_half) != len(second_half):
        raise ValueError("halves must have equal length")
    dim = _common_dim([*first_half, *second_half])
    zero = (0,) * dim
    s = convolve_all(first_half)
    t = convolve_all(second_half)
    joint = s.convolve(t).atom(zero)
    first_sym = s.convolve(s.negate()).atom(zero)
    second_sym = t.convolve(t.negate()).atom(zero)
    mirror = t == s.negate()
    bound = max(first_sym, second_sym)
    if joint > bound or (joint == bound and not mirror):
        raise AssertionFailed(
            "split-and-symmetrize bound failed",
            witness={"joint": joint, "first": first_sym, "second": second_sym, "mirror": mirror},
        )
    return AgmStep(joint, first_sym, second_sym, mirror)


@dataclass(frozen=True)
class TypeClass:
    """Indices of input distributions sharing one law up to sign."""

    representative: Dist
    members: tuple[int, ...]


@dataclass(frozen=True)
class TypePartition:
    classes: tuple[TypeClass, ...]


def _canonical_rep(mu: Dist) -> Dist:
    return min(mu, mu.negate(), key=Dist.to_json)


def type_partition(dists: Sequence[Dist]) -> TypePartition:
    """Group distributions equal up to sign.

    Classes are ordered by decreasing size, ties by the representative's
    canonical serialization; the representative itself is the sign variant
    with the smaller serialization, so the output is order-independent.
    """
    if not dists:
        raise ValueError("need at least one distribution")
    _common_dim(dists)
    groups: list[tuple[Dist, list[int]]] = []
    for idx, mu in enumerate(dists):
        for rep, members in groups:
            if same_type(mu, rep):
                members.append(idx)
                break
        else:
            groups.append((_canonical_rep(mu), [idx]))
    ordered = sorted(groups, key=lambda g: (-len(g[1]), g[0].to_json()))
    return TypePartition(tuple(TypeClass(rep, tuple(members)) for rep, members in ordered))


@dataclass(frozen=True)
class BalancingBound:
    """P(sum = x) dominated by the best single-summand alternation."""

    index: int          # which summand's law achieves the bound
    lhs: Fraction       # P(X_1 + ... + X_n = x)
    rhs: Fraction       # P(Y_1 - Y_2 + ... - Y_n = 0), Y_i iid copies of that law
    strict: bool


def balancing_bound(dists: Sequence[Dist], x: PointLike) -> BalancingBound:
    """Bound a hit probability by the best alternating iid replacement.

    For an even number of independent summands, P(sum = x) is at most the
    zero mass of an alternating sum of n iid copies of some single input
    law; the maximizing law (smallest index on ties) is reported.  The
    bound is x-independent, so callers may reuse rhs across targets.
    """
    n = len(dists)
    if n == 0 or n % 2 == 1:
        raise OddN(f"need an even number of summands, got {n}")
    dim = _common_dim(dists)
    target = as_point(x)
    if len(target) != dim:
        raise DimensionMismatch(f"target {target} has dim {len(target)}, expected {dim}")
    zero = (0,) * dim
    lhs = convolve_all(dists).atom(target)
    best_index, best_rhs = 0, None
    for j, mu in enumerate(dists):
        symmetrized = mu.convolve(mu.negate())
        rhs_j = self_convolve(symmetrized, n // 2).atom(zero)
        if best_rhs is None or rhs_j > best_rhs:
            best_index, best_rhs = j, rhs_j
    if lhs > best_rhs:
        raise AssertionFailed(
            "balancing bound failed",
            witness={"x": target, "lhs": lhs, "rhs": best_rhs, "index": best_index},
        )
    return BalancingBound(best_index, lhs, best_rhs, lhs < best_rhs)


@dataclass(frozen=True)
class Extremal:
    """The measure is itself an extreme point of the concentration cap."""

    points: tuple[Point, ...]
    rest: Point | None


@dataclass(frozen=True)
class Mixture:
    """mu = p * mu1 + (1 - p) * mu2 with mu2 extremal and its share 1 - p maximal."""

    p: Fraction
    mu1: Dist
    mu2: Dist


def _extremal_pattern(mu: Dist, alpha: Fraction) -> Extremal | None:
    k = math.floor(1 / alpha)
    remainder = 1 - k * alpha
    main = tuple(p for p, m in mu.atoms if m == alpha)
    other = [(p, m) for p, m in mu.atoms if m != alpha]
    if len(main) != k:
        return None
    if remainder == 0 and not other:
        return Extremal(main, None)
    if remainder > 0 and len(other) == 1 and other[0][1] == remainder:
        return Extremal(main, other[0][0])
    return None


def extreme_decompose(mu: Dist, alpha: RationalLike) -> Union[Extremal, Mixture]:
    """Peel one extreme point of the concentration cap off a measure.

    For a measure whose largest atom is at most alpha, either recognize it
    as an extreme point of that cap, or write it as p * mu1 + (1 - p) * mu2
    where mu2 is extremal (built on the k = floor(1/alpha) heaviest atoms
    plus the next heaviest as rest point, ties toward smaller points) and
    the weight 1 - p on mu2 is as large as this choice of mu2 allows while
    mu1 still respects the cap.  The reconstruction identity and both caps
    are re-checked exactly.
    """
    a = as_fraction(alpha)
    if not 0 < a < 1:
        raise AlphaOutOfRange(f"level must lie in (0, 1), got {a}")
    q, _ = mu.concentration()
    if q > a:
        raise QTooLarge(f"largest atom {q} exceeds level {a}")

    found = _extremal_pattern(mu, a)
    if found is not None:
        return found

    k = math.floor(1 / a)
    ranked = sorted(mu.atoms, key=lambda pm: (-pm[1], pm[0]))
    main = [p for p, _ in ranked[:k]]
    rest = ranked[k][0]
    mu2 = extreme_point_measure(a, main, rest)

    # the cap on mu1's atoms bounds the stretch away from mu2
    eps = a * (k + 1) - 1
    for p in [*main, rest]:
        gap = mu2.atom(p) - mu.atom(p)
        if gap > 0:
            eps = min(eps, mu.atom(p) / gap)
    p_weight = 1 / (1 + eps)

    entries = []
    for pt in sorted({*mu.support, *mu2.support}):
        entries.append((pt, (1 + eps) * mu.atom(pt) - eps * mu2.atom(pt)))
    mu1 = Dist.from_entries(entries)

    rebuilt = Dist.from_entries(
        [(pt, p_weight * mu1.atom(pt)) for pt in mu1.support]
        + [(pt, (1 - p_weight) * mu2.atom(pt)) for pt in mu2.support]
    )
    if rebuilt != mu or mu1.concentration()[0] > a:
        raise AssertionFailed(
            "decomposition failed to reconstruct the measure",
            witness={"mu": mu.to_json_obj(), "p": p_weight, "mu1": mu1.to_json_obj(), "mu2": mu2.to_json_obj()},
        )
    return Mixture(p_weight, mu1, mu2)
