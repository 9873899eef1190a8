"""One-way paths and homotopies over finite spaces.

A path from x to y here is the two-piece map that sits at x on [0, 1)
and jumps to y at 1; it is continuous into X exactly when y lies in the
closure of {x}, i.e. when reach(x, y) holds.  Because the parameter
interval carries the left-ray topology these paths do not reverse in
general: the calculus is directed.

A homotopy from f to g is likewise a two-stage deformation, and exists
exactly when g(x) is reachable from f(x) at every point.  That pointwise
criterion is validated against an independent brute-force model (see
``verifier.chain_homotopy_oracle``) rather than assumed.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product as iproduct

from .core import (
    FiniteSpace,
    IrtopoError,
    SearchBudgetExceeded,
    iter_points,
    mask_of,
    points_of,
)

DEFAULT_MAP_BUDGET = 1_000_000


class MapMismatch(IrtopoError):
    """The two maps do not share a domain and codomain."""


class NotContinuous(IrtopoError):
    """A map assignment whose preimage of some open set is not open."""

    def __init__(self, message: str, witness_open: int | None = None):
        super().__init__(message)
        self.witness_open = witness_open


class NoForwardPath(IrtopoError):
    """Asked for a reverse of a path that does not exist."""


def _map_budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    return int(os.environ.get("IRTOPO_BUDGET_MAPS", DEFAULT_MAP_BUDGET))


@dataclass(frozen=True)
class IrPath:
    """Two-piece path: at ``source`` on [0, 1), at ``target`` when t = 1."""

    space: FiniteSpace
    source: int
    target: int

    def is_constant(self) -> bool:
        return self.source == self.target

    def describe(self) -> str:
        lbl = self.space.labels
        if self.is_constant():
            return f"constant at {lbl[self.source]}"
        return f"{lbl[self.source]} on [0,1); {lbl[self.target]} at t=1"


def ir_path(space: FiniteSpace, x: int, y: int) -> IrPath | None:
    """The two-piece path from x to y, or None when y is unreachable."""
    if not (0 <= x < space.n and 0 <= y < space.n):
        raise ValueError("point index out of range")
    return IrPath(space, x, y) if space.reach(x, y) else None


def reverse_exists(space: FiniteSpace, x: int, y: int) -> bool:
    """Whether the path from x to y admits a path back from y to x.

    Requires the forward path to exist (NoForwardPath otherwise); in a
    T0 space the answer is False whenever x != y.
    """
    if not space.reach(x, y):
        raise NoForwardPath(
            f"no path from {space.labels[x]!r} to {space.labels[y]!r}"
        )
    return space.reach(y, x)


def ir_co(space: FiniteSpace) -> int:
    """Points reachable from everywhere: the intersection of all closures.

    Equivalently the points whose only open neighborhood is the whole
    space; both computations are performed and must agree.
    """
    co = space.full_mask
    for row in space.reach_rows:
        co &= row
    alt = mask_of(
        y for y in range(space.n) if space.min_opens[y] == space.full_mask
    )
    assert co == alt
    return co


def is_ir_contractible(space: FiniteSpace) -> int | None:
    """The set of points the space deforms onto, or None when there is none."""
    return ir_co(space) or None


def is_ir_path_connected(space: FiniteSpace) -> bool:
    """True when every pair of points is joined by a path in one direction."""
    return all(
        space.reach(x, y) or space.reach(y, x)
        for x in range(space.n)
        for y in range(x + 1, space.n)
    )


@dataclass(frozen=True)
class ContinuousMap:
    """A total map between finite spaces, validated at construction.

    Continuity is equivalent to monotonicity for reach (the preimage of
    every open is open iff reach(x, x') implies reach(f(x), f(x'))); the
    constructor checks the latter and NotContinuous carries an open set
    whose preimage fails as witness.
    """

    domain: FiniteSpace
    codomain: FiniteSpace
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        f = tuple(self.assignment)
        object.__setattr__(self, "assignment", f)
        if len(f) != self.domain.n:
            raise ValueError("assignment must cover every domain point")
        if any(not 0 <= v < self.codomain.n for v in f):
            raise ValueError("assignment target out of range")
        for x, row in enumerate(self.domain.reach_rows):
            for x2 in iter_points(row):
                if not self.codomain.reach(f[x], f[x2]):
                    witness = self.codomain.min_opens[f[x2]]
                    raise NotContinuous(
                        f"preimage of open {points_of(witness)} is not open: "
                        f"{x}->{x2} in the domain but not {f[x]}->{f[x2]}",
                        witness_open=witness,
                    )

    def __call__(self, x: int) -> int:
        return self.assignment[x]

    @classmethod
    def identity(cls, space: FiniteSpace) -> ContinuousMap:
        return cls(space, space, tuple(range(space.n)))

    @classmethod
    def constant(
        cls, domain: FiniteSpace, codomain: FiniteSpace, point: int
    ) -> ContinuousMap:
        return cls(domain, codomain, (point,) * domain.n)


def compose(outer: ContinuousMap, inner: ContinuousMap) -> ContinuousMap:
    """The map x -> outer(inner(x))."""
    if inner.codomain != outer.domain:
        raise MapMismatch("inner codomain does not match outer domain")
    return ContinuousMap(
        inner.domain,
        outer.codomain,
        tuple(outer.assignment[v] for v in inner.assignment),
    )


@dataclass(frozen=True)
class IrHomotopyCertificate:
    """Witness that ``start`` deforms to ``end`` pointwise.

    ``witness`` lists (start(x), end(x)) pairs, each related by reach in
    the codomain; this is exactly what makes the two-stage deformation
    (start below t = 1, end at t = 1) continuous on the product with the
    one-way interval.
    """

    start: ContinuousMap
    end: ContinuousMap
    witness: tuple[tuple[int, int], ...]


def ir_homotopic(f: ContinuousMap, g: ContinuousMap) -> IrHomotopyCertificate | None:
    """Certificate for a deformation from f to g, or None.

    The criterion is pointwise: reach(f(x), g(x)) in the codomain for
    every x.  Note the relation is directed -- a certificate from f to g
    says nothing about one from g to f.
    """
    if f.domain != g.domain or f.codomain != g.codomain:
        raise MapMismatch("maps must share domain and codomain")
    cod = f.codomain
    pairs = tuple(zip(f.assignment, g.assignment))
    if all(cod.reach(a, b) for a, b in pairs):
        return IrHomotopyCertificate(f, g, pairs)
    return None


def continuous_maps(
    domain: FiniteSpace, codomain: FiniteSpace, budget: int | None = None
) -> list[ContinuousMap]:
    """All continuous maps domain -> codomain, in lexicographic order.

    Guards the |codomain| ** |domain| candidate count against the map
    budget (IRTOPO_BUDGET_MAPS overrides the default).
    """
    limit = _map_budget(budget)
    total = codomain.n ** domain.n
    if total > limit:
        raise SearchBudgetExceeded(
            f"{total} candidate maps exceed the budget of {limit}"
        )
    rows = domain.reach_rows
    out = []
    for assign in iproduct(range(codomain.n), repeat=domain.n):
        ok = True
        for x, row in enumerate(rows):
            fx = assign[x]
            for x2 in iter_points(row):
                if not codomain.reach(fx, assign[x2]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(ContinuousMap(domain, codomain, assign))
    return out


def ir_homotopy_equivalent(
    x: FiniteSpace,
    y: FiniteSpace,
    orientation: str = "thm15",
    budget: int | None = None,
) -> tuple[ContinuousMap, ContinuousMap] | None:
    """Search for maps f: x -> y and g: y -> x with both round trips
    deformable from the identities: 1_x to g∘f and 1_y to f∘g.

    The search is exhaustive over continuous map pairs, so None is a
    proof that no such pair exists at this size.  ``orientation``
    selects which written order of the two composites is paired with
    which identity ("thm15" keeps g∘f on x; "def8" reads the composite
    in application order, f then g, on x) -- once the composites are
    typed the two readings denote the same maps, so the results agree;
    both spellings are accepted and the sweeps assert their agreement.
    """
    if orientation not in ("thm15", "def8"):
        raise ValueError(f"unknown orientation {orientation!r}")
    fs = continuous_maps(x, y, budget)
    gs = continuous_maps(y, x, budget)
    id_x = ContinuousMap.identity(x)
    id_y = ContinuousMap.identity(y)
    for f in fs:
        for g in gs:
            on_x = compose(g, f)
            on_y = compose(f, g)
            if (
                ir_homotopic(id_x, on_x) is not None
                and ir_homotopic(id_y, on_y) is not None
            ):
                return f, g
    return None


def quasiorder(space: FiniteSpace) -> tuple[int, ...]:
    """The reachability relation as bitmask rows (a reflexive, transitive order)."""
    return space.reach_rows


def is_partial_order(space: FiniteSpace) -> bool:
    """Whether reach is antisymmetric, i.e. a partial order; equals T0-ness."""
    rows = space.reach_rows
    return not any(
        rows[x] >> y & 1 and rows[y] >> x & 1
        for x in range(space.n)
        for y in range(x + 1, space.n)
    )
