"""Exact finitely supported probability measures on integer lattices.

Masses are `fractions.Fraction` throughout and no operation ever rounds.
Distributions are immutable; every operation returns a new one.  Atom lists
are kept in lexicographic point order so equality, hashing and serialization
are canonical.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from typing import Callable, Iterable, NamedTuple, Sequence, Union

from .errors import DimensionMismatch, MassNotOne, NegativeMass, ZeroWeight

Point = tuple[int, ...]
RationalLike = Union[Fraction, int, str]
PointLike = Union[int, Sequence[int]]


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce ints and 'num/den' strings to Fraction; Fractions pass through."""
    return value if isinstance(value, Fraction) else Fraction(value)


def as_point(value: PointLike) -> Point:
    """Coerce an int (dimension 1) or a sequence of ints to a lattice point."""
    if isinstance(value, int):
        return (value,)
    return tuple(int(c) for c in value)


def format_fraction(q: Fraction) -> str:
    """Render a rational as 'num/den', denominator always explicit."""
    return f"{q.numerator}/{q.denominator}"


def _canonical(dim: int, mass: dict[Point, Fraction]) -> "Dist":
    # shared exit point for all constructors: drop nulls, sort, check mass
    atoms = tuple(sorted((p, m) for p, m in mass.items() if m != 0))
    total: Fraction = sum((m for _, m in atoms), start=Fraction(0))
    if total != 1:
        raise MassNotOne(1 - total)
    return Dist(dim, atoms)


@dataclass(frozen=True)
class Dist:
    """A probability measure with finite support on the lattice Z^dim."""

    dim: int
    atoms: tuple[tuple[Point, Fraction], ...]

    @staticmethod
    def from_entries(entries: Iterable[tuple[PointLike, RationalLike]]) -> "Dist":
        """Build a distribution from (point, mass) pairs.

        Duplicate points are merged, zero masses dropped.  Raises
        NegativeMass, DimensionMismatch, or MassNotOne (with the exact
        deficit) when the input is not a probability distribution.
        """
        mass: dict[Point, Fraction] = {}
        dim = None
        for pt, m in entries:
            p = as_point(pt)
            q = as_fraction(m)
            if q < 0:
                raise NegativeMass(f"mass {q} at {p}")
            if dim is None:
                dim = len(p)
            elif len(p) != dim:
                raise DimensionMismatch(f"point {p} has dim {len(p)}, expected {dim}")
            mass[p] = mass.get(p, Fraction(0)) + q
        if dim is None:
            raise ValueError("no atoms given")
        return _canonical(dim, mass)

    # -- queries -------------------------------------------------------

    @cached_property
    def _mass(self) -> dict[Point, Fraction]:
        return dict(self.atoms)

    @property
    def support(self) -> tuple[Point, ...]:
        return tuple(p for p, _ in self.atoms)

    def atom(self, x: PointLike) -> Fraction:
        """Mass at the point x (0 if x is not an atom)."""
        p = as_point(x)
        if len(p) != self.dim:
            raise DimensionMismatch(f"point {p} has dim {len(p)}, expected {self.dim}")
        return self._mass.get(p, Fraction(0))

    def concentration(self) -> tuple[Fraction, Point]:
        """Largest atom and its location.

        Ties broken toward the lexicographically smallest point; atoms are
        stored in lex order, so the first strict improvement wins.
        """
        best_m, best_p = self.atoms[0][1], self.atoms[0][0]
        for p, m in self.atoms[1:]:
            if m > best_m:
                best_m, best_p = m, p
        return best_m, best_p

    def interval_prob(self, k: int) -> Fraction:
        """P(|X| <= k) for a one-dimensional distribution."""
        if self.dim != 1:
            raise DimensionMismatch("interval probabilities need dimension 1")
        if k < 0:
            raise ValueError("interval radius must be >= 0")
        return sum((m for (x,), m in self.atoms if -k <= x <= k), start=Fraction(0))

    def is_symmetric(self) -> bool:
        """True when the law is invariant under x -> -x."""
        return self == self.negate()

    def is_unimodal(self) -> bool:
        """True when the pmf on the integer range of the support rises then falls.

        Interior lattice points with zero mass count as zeros, so a gap
        between two massive points breaks unimodality.
        """
        if self.dim != 1:
            raise DimensionMismatch("unimodality is defined here for dimension 1")
        lo, hi = self.atoms[0][0][0], self.atoms[-1][0][0]
        pmf = [self.atom((x,)) for x in range(lo, hi + 1)]
        i = 0
        while i + 1 < len(pmf) and pmf[i] <= pmf[i + 1]:
            i += 1
        while i + 1 < len(pmf) and pmf[i] >= pmf[i + 1]:
            i += 1
        return i == len(pmf) - 1

    def mean(self) -> Fraction:
        if self.dim != 1:
            raise DimensionMismatch("moments are defined here for dimension 1")
        return sum((m * x for (x,), m in self.atoms), start=Fraction(0))

    def variance(self) -> Fraction:
        mu = self.mean()
        return sum((m * (x - mu) ** 2 for (x,), m in self.atoms), start=Fraction(0))

    # -- transforms ----------------------------------------------------

    def map_points(self, fn: Callable[[Point], PointLike], dim: int | None = None) -> "Dist":
        """Pushforward along a point map; colliding images merge."""
        mass: dict[Point, Fraction] = {}
        for p, m in self.atoms:
            q = as_point(fn(p))
            mass[q] = mass.get(q, Fraction(0)) + m
        out_dim = len(next(iter(mass))) if dim is None else dim
        for q in mass:
            if len(q) != out_dim:
                raise DimensionMismatch(f"image point {q} has dim {len(q)}, expected {out_dim}")
        return _canonical(out_dim, mass)

    def negate(self) -> "Dist":
        """Law of -X."""
        return self.map_points(lambda p: tuple(-c for c in p), self.dim)

    def shift(self, v: PointLike) -> "Dist":
        """Law of X + v."""
        w = as_point(v)
        if len(w) != self.dim:
            raise DimensionMismatch(f"shift {w} has dim {len(w)}, expected {self.dim}")
        return self.map_points(lambda p: tuple(c + d for c, d in zip(p, w)), self.dim)

    def scale(self, c: int) -> "Dist":
        """Law of c * X for a nonzero integer c."""
        if c == 0:
            raise ZeroWeight("scaling by 0 collapses the lattice")
        return self.map_points(lambda p: tuple(c * x for x in p), self.dim)

    def convolve(self, other: "Dist") -> "Dist":
        """Law of X + Y for independent X ~ self, Y ~ other."""
        if self.dim != other.dim:
            raise DimensionMismatch(f"cannot convolve dim {self.dim} with dim {other.dim}")
        mass: dict[Point, Fraction] = {}
        for p, mp in self.atoms:
            for q, mq in other.atoms:
                r = tuple(a + b for a, b in zip(p, q))
                mass[r] = mass.get(r, Fraction(0)) + mp * mq
        return _canonical(self.dim, mass)

    # -- serialization -------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "dim": self.dim,
            "atoms": [[list(p), format_fraction(m)] for p, m in self.atoms],
        }

    @staticmethod
    def from_json_obj(obj: dict) -> "Dist":
        dist = Dist.from_entries((tuple(p), Fraction(m)) for p, m in obj["atoms"])
        if dist.dim != obj["dim"]:
            raise DimensionMismatch(f"declared dim {obj['dim']} but atoms have dim {dist.dim}")
        return dist

    def to_json(self) -> str:
        """Canonical compact JSON; equal distributions serialize identically."""
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @staticmethod
    def from_json(text: str) -> "Dist":
        return Dist.from_json_obj(json.loads(text))


# -- module-level constructors and combinators -------------------------


def delta(point: PointLike) -> Dist:
    """Point mass at the given lattice point."""
    return Dist.from_entries([(point, Fraction(1))])


def uniform_on(points: Iterable[PointLike]) -> Dist:
    """Uniform distribution over distinct lattice points."""
    pts = sorted({as_point(p) for p in points})
    if not pts:
        raise ValueError("no points given")
    m = Fraction(1, len(pts))
    return Dist.from_entries((p, m) for p in pts)


def convolve_all(dists: Sequence[Dist]) -> Dist:
    """Law of the sum of independent draws, one per distribution."""
    if not dists:
        raise ValueError("need at least one distribution")
    return reduce(Dist.convolve, dists)


def self_convolve(dist: Dist, n: int) -> Dist:
    """n-fold convolution power; n = 0 gives the point mass at the origin."""
    if n < 0:
        raise ValueError("convolution power must be >= 0")
    out = delta((0,) * dist.dim)
    for _ in range(n):
        out = out.convolve(dist)
    return out


def same_type(mu: Dist, nu: Dist) -> bool:
    """True when nu has the law of X or of -X for X ~ mu."""
    return mu == nu or nu == mu.negate()


class ScaledDist(NamedTuple):
    """A distribution together with the integer factor its lattice was scaled by."""

    scale: int
    dist: Dist


def weighted_sum(weights: Sequence, components: Sequence[Dist]) -> ScaledDist:
    """Exact law of sum_i a_i X_i with rational weights.

    Rational weights are cleared to integers by the least common multiple of
    their denominators; the returned law lives on the scaled lattice and the
    factor is returned alongside it.  Weights may also be integer-indexed
    vectors (sequences of rationals), sending one-dimensional components
    into a common multi-dimensional lattice.
    """
    if len(weights) != len(components):
        raise ValueError(f"{len(weights)} weights for {len(components)} components")
    if not components:
        raise ValueError("need at least one component")

    vector_mode = any(isinstance(w, (list, tuple)) for w in weights)
    if vector_mode:
        vecs = [tuple(as_fraction(c) for c in w) for w in weights]
        d = len(vecs[0])
        if any(len(v) != d for v in vecs):
            raise DimensionMismatch("weight vectors must share one length")
        if any(all(c == 0 for c in v) for v in vecs):
            raise ZeroWeight("each weight vector must be nonzero")
        if any(comp.dim != 1 for comp in components):
            raise DimensionMismatch("vector weights apply to one-dimensional components")
        denom = math.lcm(*(c.denominator for v in vecs for c in v))
        ints = [tuple(int(c * denom) for c in v) for v in vecs]
        parts = [
            comp.map_points(lambda p, w=w: tuple(p[0] * wc for wc in w), d)
            for w, comp in zip(ints, components)
        ]
        return ScaledDist(denom, convolve_all(parts))

    fracs = [as_fraction(w) for w in weights]
    if any(w == 0 for w in fracs):
        raise ZeroWeight("each weight must be nonzero")
    d = components[0].dim
    if any(comp.dim != d for comp in components):
        raise DimensionMismatch("components must share one dimension")
    denom = math.lcm(*(w.denominator for w in fracs))
    ints = [int(w * denom) for w in fracs]
    parts = [comp.scale(w) for w, comp in zip(ints, components)]
    return ScaledDist(denom, convolve_all(parts))
