"""Exact interval, chain and grid models with one-way (left-ray) topology.

The continuous carrier here is the unit interval whose opens are the
initial segments [0, b) together with the whole interval; its finite
analogues are chain spaces.  All arithmetic is exact over
``fractions.Fraction`` -- floats are rejected, since the predicates in
this module are discontinuous in their inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import FiniteSpace, IrtopoError, mask_of


class OutOfRange(IrtopoError):
    """Argument outside the unit interval, or a non-positive radius."""


class EmptySet(IrtopoError):
    pass


class ArityMismatch(IrtopoError):
    pass


class HypothesisFails(IrtopoError):
    """The point set has no unique componentwise-greatest element."""


def as_fraction(v) -> Fraction:
    if isinstance(v, float):
        raise TypeError("floats are not accepted; pass a Fraction or a 'p/q' string")
    return Fraction(v)


def format_fraction(f: Fraction) -> str:
    """Canonical 'p/q' form (always with an explicit denominator)."""
    f = Fraction(f)
    return f"{f.numerator}/{f.denominator}"


def _unit(v, name: str) -> Fraction:
    f = as_fraction(v)
    if not 0 <= f <= 1:
        raise OutOfRange(f"{name} must lie in [0, 1], got {f}")
    return f


def d_ir(x, y) -> Fraction:
    """Asymmetric distance max(y - x, 0) on the unit interval.

    A quasi-metric: d(x, x) = 0, the triangle inequality holds, and
    d(x, y) = d(y, x) = 0 forces x = y; unlike a metric it is not
    symmetric.
    """
    x = _unit(x, "x")
    y = _unit(y, "y")
    return max(y - x, Fraction(0))


@dataclass(frozen=True)
class Ball:
    """Open ball of d_ir: the initial segment [0, x + eps), clipped at 1."""

    center: Fraction
    radius: Fraction
    hi: Fraction
    whole_space: bool
    clipped: bool

    def __str__(self) -> str:
        if self.whole_space:
            return "[0/1, 1/1]"
        return f"[0/1, {format_fraction(self.hi)})"


def ball(x, eps) -> Ball:
    x = _unit(x, "x")
    eps = as_fraction(eps)
    if eps <= 0:
        raise OutOfRange("radius must be positive")
    hi = x + eps
    if hi > 1:
        return Ball(x, eps, Fraction(1), whole_space=True, clipped=True)
    return Ball(x, eps, hi, whole_space=False, clipped=False)


def chain_space(k: int) -> FiniteSpace:
    """The k-point chain: reach(i, j) iff i <= j, opens the initial segments.

    chain_space(2) is the two-point space whose only nontrivial open is
    the bottom point; chains are the finite models of the one-way unit
    interval.
    """
    if k < 1:
        raise ValueError("a chain needs at least one point")
    full = (1 << k) - 1
    rows = tuple(full & ~((1 << i) - 1) for i in range(k))
    return FiniteSpace(tuple(str(i) for i in range(k)), rows)


@dataclass(frozen=True)
class IntervalDescriptor:
    """Symbolic interval of the one-way line, for compactness questions."""

    lo: Fraction
    hi: Fraction
    closed_lo: bool
    closed_hi: bool

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", as_fraction(self.lo))
        object.__setattr__(self, "hi", as_fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    def __str__(self) -> str:
        left = "[" if self.closed_lo else "("
        right = "]" if self.closed_hi else ")"
        return f"{left}{format_fraction(self.lo)}, {format_fraction(self.hi)}{right}"


@dataclass(frozen=True)
class LeftRayCover:
    """An open cover by left rays (-inf, a) with no finite subcover."""

    anchors: str

    def __str__(self) -> str:
        return f"left rays (-inf, a) for a in {self.anchors}; no finite subfamily covers"


def finite_subset_compactness(values):
    """Compactness of a subset of the one-way line, via greatest elements.

    A finite set of rationals always has a greatest element and is
    compact; returns (True, maximum).  A symbolic IntervalDescriptor
    without its upper endpoint has no greatest element and is not
    compact; returns (False, cover witness) where the witness is the
    family of left rays anchored at the set's own points.
    """
    if isinstance(values, IntervalDescriptor):
        if values.closed_hi:
            return True, values.hi
        return False, LeftRayCover(str(values))
    vals = sorted({as_fraction(v) for v in values})
    if not vals:
        raise EmptySet("compactness of the empty set is not considered here")
    return True, vals[-1]


def grid_subspace(points: Iterable[Sequence]) -> FiniteSpace:
    """Finite subspace of the n-dimensional one-way space.

    reach(p, q) holds when p <= q in every coordinate: the closure of
    {p} upstairs is the product of the up-rays [p_i, oo), so the induced
    reach is the componentwise order.
    """
    pts = [tuple(as_fraction(c) for c in p) for p in points]
    if not pts:
        raise EmptySet("a grid subspace needs at least one point")
    arity = len(pts[0])
    for p in pts:
        if len(p) != arity:
            raise ArityMismatch(f"expected {arity} coordinates, got {len(p)}")
    if len(set(pts)) != len(pts):
        raise ValueError("grid points must be distinct")
    labels = tuple(
        "(" + ",".join(format_fraction(c) for c in p) + ")" for p in pts
    )
    rows = []
    for p in pts:
        rows.append(
            mask_of(
                j
                for j, q in enumerate(pts)
                if all(pc <= qc for pc, qc in zip(p, q))
            )
        )
    return FiniteSpace(labels, tuple(rows))


def check_theorem10(points: Iterable[Sequence]):
    """Grid spaces with a greatest point have exactly that point as core.

    Requires a unique componentwise-greatest element among the points
    (HypothesisFails otherwise) and checks that the set of points
    reachable from everywhere is exactly its singleton.  Returns
    (holds, greatest point).
    """
    pts = [tuple(as_fraction(c) for c in p) for p in points]
    space = grid_subspace(pts)
    greatest = [
        i
        for i, q in enumerate(pts)
        if all(all(pc <= qc for pc, qc in zip(p, q)) for p in pts)
    ]
    if len(greatest) != 1:
        raise HypothesisFails(
            f"need exactly one componentwise-greatest point, found {len(greatest)}"
        )
    from .homotopy import ir_co

    return ir_co(space) == 1 << greatest[0], pts[greatest[0]]
