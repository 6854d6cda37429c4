"""Rearrangements of centered sequences and peakedness comparisons.

A centered sequence assigns a nonnegative rational to every lattice position
-k..k.  The three rearrangements redistribute the same multiset of values:

  left   largest value at 0, then dealing -1, 1, -2, 2, ...
  right  largest value at 0, then dealing 1, -1, 2, -2, ...
  sym    largest value at 0, ties paired onto +-1, +-2, ...; only defined
         when the sorted values pair up below the top one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .dist import Dist, RationalLike, as_fraction
from .errors import DimensionMismatch, NotSymmetrizable, PreconditionViolated

_ZERO = Fraction(0)


@dataclass(frozen=True)
class CenteredSeq:
    """Nonnegative rationals on positions -k..k, stored left to right."""

    values: tuple[Fraction, ...]

    @staticmethod
    def from_values(values: Iterable[RationalLike]) -> "CenteredSeq":
        vals = tuple(as_fraction(v) for v in values)
        if len(vals) % 2 == 0 or not vals:
            raise ValueError(f"need an odd number of values, got {len(vals)}")
        if any(v < 0 for v in vals):
            raise ValueError("values must be nonnegative")
        return CenteredSeq(vals)

    @property
    def radius(self) -> int:
        return (len(self.values) - 1) // 2

    def value_at(self, position: int) -> Fraction:
        """Value at a signed position; zero outside -radius..radius."""
        i = position + self.radius
        if 0 <= i < len(self.values):
            return self.values[i]
        return _ZERO

    def total(self) -> Fraction:
        return sum(self.values, start=_ZERO)


def _deal(seq: CenteredSeq, positions: list[int]) -> CenteredSeq:
    ordered = sorted(seq.values, reverse=True)
    placed = dict(zip(positions, ordered))
    k = seq.radius
    return CenteredSeq(tuple(placed[i] for i in range(-k, k + 1)))


def rearrange_left(seq: CenteredSeq) -> CenteredSeq:
    """Largest value at 0, next on the negative side first."""
    order = [0]
    for i in range(1, seq.radius + 1):
        order += [-i, i]
    return _deal(seq, order)


def rearrange_right(seq: CenteredSeq) -> CenteredSeq:
    """Largest value at 0, next on the positive side first."""
    order = [0]
    for i in range(1, seq.radius + 1):
        order += [i, -i]
    return _deal(seq, order)


def rearrange_symmetric(seq: CenteredSeq) -> CenteredSeq:
    """Symmetric decreasing rearrangement, when one exists.

    After placing the largest value at 0, the remaining values must pair up
    exactly so that positions -i and i can carry equal values.
    """
    ordered = sorted(seq.values, reverse=True)
    k = seq.radius
    out = {0: ordered[0]}
    for i in range(1, k + 1):
        a, b = ordered[2 * i - 1], ordered[2 * i]
        if a != b:
            raise NotSymmetrizable(a)
        out[i] = out[-i] = a
    return CenteredSeq(tuple(out[i] for i in range(-k, k + 1)))


def is_symmetrizable(seq: CenteredSeq) -> bool:
    try:
        rearrange_symmetric(seq)
    except NotSymmetrizable:
        return False
    return True


def _zero_sum_coefficient(seqs: Sequence[CenteredSeq]) -> Fraction:
    # coefficient of position 0 in the formal convolution of the sequences
    acc = {0: Fraction(1)}
    for seq in seqs:
        nxt: dict[int, Fraction] = {}
        k = seq.radius
        for pos, val in acc.items():
            if val == 0:
                continue
            for i in range(-k, k + 1):
                v = seq.value_at(i)
                if v != 0:
                    nxt[pos + i] = nxt.get(pos + i, _ZERO) + val * v
        acc = nxt
    return acc.get(0, _ZERO)


def gabriel_sides(seqs: Sequence[CenteredSeq], star_from: int = 2) -> tuple[Fraction, Fraction]:
    """Zero-sum coefficient before and after the canonical rearrangements.

    The first sequence is rearranged left, the second right, and every
    sequence from index `star_from` on is replaced by its symmetric
    decreasing rearrangement.  Sequences between index 2 and `star_from`
    must already be symmetric decreasing; they are kept as they are.
    Returns (original, rearranged); the rearranged side is never smaller.
    """
    if len(seqs) < 2:
        raise ValueError("need at least two sequences")
    if star_from < 2:
        raise ValueError("the first two positions are always rearranged left/right")
    transformed = [rearrange_left(seqs[0]), rearrange_right(seqs[1])]
    for i, seq in enumerate(seqs[2:], start=2):
        star = rearrange_symmetric(seq)
        if i < star_from:
            if seq != star:
                raise PreconditionViolated(
                    f"sequence {i} is kept verbatim but is not symmetric decreasing"
                )
            transformed.append(seq)
        else:
            transformed.append(star)
    return _zero_sum_coefficient(seqs), _zero_sum_coefficient(transformed)


# -- peakedness ------------------------------------------------------------


def peakedness_dominates(mu: Dist, nu: Dist) -> bool:
    """True when P(|Y'| <= k) >= P(|Y| <= k) for all k, Y ~ mu, Y' ~ nu."""
    if mu.dim != 1 or nu.dim != 1:
        raise DimensionMismatch("peakedness comparisons need dimension 1")
    radius = max(abs(x) for d in (mu, nu) for (x,), _ in d.atoms)
    return all(mu.interval_prob(k) <= nu.interval_prob(k) for k in range(radius + 1))


def birnbaum_sides(mu_x: Dist, mu_y: Dist, mu_yp: Dist, k: int) -> tuple[Fraction, Fraction]:
    """Central interval mass of X + Y versus X + Y'.

    Requires X symmetric unimodal, Y and Y' symmetric unimodal, and Y' at
    least as peaked as Y; then P(|X + Y| <= k) <= P(|X + Y'| <= k).
    Raises PreconditionViolated naming the hypothesis that fails.
    """
    if any(d.dim != 1 for d in (mu_x, mu_y, mu_yp)):
        raise DimensionMismatch("peakedness comparisons need dimension 1")
    if k < 0:
        raise ValueError("interval radius must be >= 0")
    for name, d in (("X", mu_x), ("Y", mu_y), ("Y'", mu_yp)):
        if not d.is_symmetric():
            raise PreconditionViolated(f"{name} is not symmetric about 0")
        if not d.is_unimodal():
            raise PreconditionViolated(f"{name} is not unimodal")
    if not peakedness_dominates(mu_y, mu_yp):
        raise PreconditionViolated("Y' is not at least as peaked as Y")
    return mu_x.convolve(mu_y).interval_prob(k), mu_x.convolve(mu_yp).interval_prob(k)
