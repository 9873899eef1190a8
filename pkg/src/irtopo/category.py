"""Minimal covers by deformable open sets, and covering dimension.

The covering category of a nonempty finite space is the least number of
open sets, each of which deforms onto a point, needed to cover the
space.  "Deforms onto a point" comes in two senses:

* subspace (the default): the set, as a space of its own, has a point
  reachable from all of its points -- the witness lies inside the set;
* ambient: some point of the whole space is reachable from all points
  of the set -- the witness may lie outside.

Minimal covers are found by exact set cover (greedy seed, then
iterative-deepening depth-first search over candidates in canonical
order), so reports are deterministic and reproducible byte for byte.

Covering dimension is the classical cover-refinement notion: the least
m such that every open cover admits an open refinement in which no
point lies in more than m + 1 members.  Both the outer cover sweep and
the refinement search are restricted to irredundant covers, which is
sufficient: every cover contains an irredundant subcover, refining the
subcover refines the cover, and dropping redundant members of a
refinement never raises its order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .core import (
    FiniteSpace,
    IrtopoError,
    SearchBudgetExceeded,
    canon_key,
    iter_points,
    points_of,
)

SENSES = ("subspace", "ambient")


class EmptySpace(IrtopoError):
    """Covering category is undefined for the empty space."""


class NotACover(IrtopoError):
    pass


class NotMinimalCover(IrtopoError):
    """Expected a minimal cover by deformable opens in the subspace sense."""


class SubcoverNotFound(IrtopoError):
    """No member of the cover contains the given minimal-cover member."""


def _check_sense(sense: str) -> None:
    if sense not in SENSES:
        raise ValueError(f"sense must be one of {SENSES}, got {sense!r}")


def contraction_witness(space: FiniteSpace, open_mask: int, sense: str) -> int:
    """Points witnessing that ``open_mask`` deforms onto a point.

    The intersection of the closures of all members, restricted to the
    set itself in the subspace sense.  For the subspace sense this
    equals the core of the subspace on ``open_mask``.
    """
    _check_sense(sense)
    acc = space.full_mask
    for u in iter_points(open_mask):
        acc &= space.reach_rows[u]
    return acc & open_mask if sense == "subspace" else acc


def ir_contractible_opens(
    space: FiniteSpace, sense: str = "subspace"
) -> tuple[tuple[int, int], ...]:
    """All nonempty open sets with a nonempty witness, with their witnesses."""
    _check_sense(sense)
    out = []
    for o in space.open_sets:
        if not o:
            continue
        w = contraction_witness(space, o, sense)
        if w:
            out.append((o, w))
    return tuple(out)


@dataclass(frozen=True)
class CoverReport:
    """An optimal cover by deformable opens, with per-member witnesses."""

    sets: tuple[int, ...]
    witnesses: tuple[int, ...]
    size: int
    minimal: bool
    sense: str


@dataclass(frozen=True)
class DimensionReport:
    """Covering dimension with certificates.

    ``worst_cover`` is an irredundant cover whose best refinement order
    is maximal; ``refinement`` is that best refinement, of order
    dim + 1.  The empty space has dimension -1 and no certificates.
    """

    dim: int
    worst_cover: tuple[int, ...] | None
    refinement: tuple[int, ...] | None


def _minimum_cover(universe: int, candidates: tuple[int, ...]) -> tuple[int, ...]:
    """Exact minimum set cover, deterministic.

    Greedy gives the depth bound; iterative-deepening DFS branches on
    the lowest uncovered point and tries candidates in the given order,
    so the returned optimum is the first one in that canonical order.
    """
    if universe == 0:
        return ()
    uncovered = universe
    greedy: list[int] = []
    while uncovered:
        best = None
        best_gain = 0
        for c in candidates:
            gain = (c & uncovered).bit_count()
            if gain > best_gain:
                best, best_gain = c, gain
        if best is None:
            raise NotACover("candidate sets do not cover the space")
        greedy.append(best)
        uncovered &= ~best
    per_point = [
        tuple(c for c in candidates if c >> p & 1)
        for p in range(universe.bit_length())
    ]

    def dfs(uncovered: int, chosen: tuple[int, ...], limit: int):
        if not uncovered:
            return chosen
        if len(chosen) >= limit:
            return None
        p = (uncovered & -uncovered).bit_length() - 1
        for c in per_point[p]:
            found = dfs(uncovered & ~c, chosen + (c,), limit)
            if found is not None:
                return found
        return None

    for limit in range(1, len(greedy)):
        found = dfs(universe, (), limit)
        if found is not None:
            return tuple(sorted(found, key=canon_key))
    return tuple(sorted(greedy, key=canon_key))


@lru_cache(maxsize=1 << 15)
def _ir_cat_cached(reach_rows: tuple[int, ...], sense: str) -> CoverReport:
    space = FiniteSpace(tuple(str(i) for i in range(len(reach_rows))), reach_rows)
    cands = ir_contractible_opens(space, sense)
    cover = _minimum_cover(space.full_mask, tuple(m for m, _ in cands))
    witness = dict(cands)
    return CoverReport(
        sets=cover,
        witnesses=tuple(witness[m] for m in cover),
        size=len(cover),
        minimal=True,
        sense=sense,
    )


def ir_cat(space: FiniteSpace, sense: str = "subspace") -> CoverReport:
    """Exact covering category, with an optimal cover as certificate.

    Always finite: the minimal neighborhoods are deformable and cover
    the space.  Results depend only on the reach relation and are
    cached.
    """
    if space.n == 0:
        raise EmptySpace("covering category is undefined for the empty space")
    _check_sense(sense)
    return _ir_cat_cached(space.reach_rows, sense)


def _require_optimal(space: FiniteSpace, cover: CoverReport) -> None:
    if cover.sense != "subspace":
        raise NotMinimalCover("a subspace-sense cover is required")
    union = 0
    for m in cover.sets:
        if not space.is_open(m):
            raise NotMinimalCover(f"member {points_of(m)} is not open")
        if contraction_witness(space, m, "subspace") == 0:
            raise NotMinimalCover(f"member {points_of(m)} has no witness point")
        union |= m
    if union != space.full_mask:
        raise NotMinimalCover("the sets do not cover the space")
    if cover.size != len(cover.sets) or cover.size != ir_cat(space).size:
        raise NotMinimalCover("the cover is not of minimum size")


def check_prop3(space: FiniteSpace, cover: CoverReport):
    """Witness points of one member of a minimal cover avoid every other member.

    Returns (True, None), or (False, (i, j, point)) naming a witness of
    member i that lies in member j.
    """
    _require_optimal(space, cover)
    for i, wit in enumerate(cover.witnesses):
        for j, other in enumerate(cover.sets):
            if i == j:
                continue
            clash = wit & other
            if clash:
                return False, (i, j, next(iter_points(clash)))
    return True, None


def check_refinement(
    space: FiniteSpace, categorical: CoverReport, cover: Iterable[int]
):
    """Whether the minimal cover refines ``cover``: every member of the
    minimal cover sits inside some member of ``cover``.

    Returns (True, mapping) with the first containing index per member,
    or (False, None).
    """
    _require_optimal(space, categorical)
    members = tuple(cover)
    union = 0
    for v in members:
        if not space.is_open(v):
            raise NotACover(f"member {points_of(v)} is not open")
        union |= v
    if union != space.full_mask:
        raise NotACover("the given family does not cover the space")
    mapping = []
    for w in categorical.sets:
        j = next((j for j, v in enumerate(members) if w & ~v == 0), None)
        if j is None:
            return False, None
        mapping.append(j)
    return True, tuple(mapping)


def min_subcover(space: FiniteSpace, cover: Iterable[int]) -> tuple[int, ...]:
    """A subcover of ``cover`` with at most ir_cat(space) members.

    Each member of the optimal deformable cover is mapped greedily to
    its largest container in ``cover``; the deduplicated containers
    already cover the space.  SubcoverNotFound signals a member with no
    container, which would refute the refinement property.
    """
    members = tuple(cover)
    union = 0
    for v in members:
        if not space.is_open(v):
            raise NotACover(f"member {points_of(v)} is not open")
        union |= v
    if union != space.full_mask:
        raise NotACover("the given family does not cover the space")
    rep = ir_cat(space)
    chosen: list[int] = []
    for w in rep.sets:
        containers = [v for v in members if w & ~v == 0]
        if not containers:
            raise SubcoverNotFound(
                f"no member of the cover contains {points_of(w)}"
            )
        best = max(containers, key=lambda v: (v.bit_count(), -v))
        if best not in chosen:
            chosen.append(best)
    assert len(chosen) <= rep.size
    return tuple(sorted(chosen, key=canon_key))


def irredundant_covers(space: FiniteSpace) -> Iterator[tuple[int, ...]]:
    """All irredundant open covers, in canonical depth-first order.

    Irredundant: every member is nonempty and essential (dropping it
    breaks coverage).  Every open cover contains an irredundant
    subcover, which is all the dimension and subcover sweeps need.
    """
    opens = [o for o in space.open_sets if o]
    full = space.full_mask
    count = len(opens)

    def rec(i: int, chosen: tuple[int, ...], union: int):
        if union == full:
            for k in range(len(chosen)):
                rest = 0
                for j, c in enumerate(chosen):
                    if j != k:
                        rest |= c
                if rest == full:
                    return
            yield chosen
            return
        if i == count:
            return
        c = opens[i]
        # containment with a chosen member or lack of new points would
        # make some member redundant in every completion
        if c & ~union and all(
            c & ~d != 0 and d & ~c != 0 for d in chosen
        ):
            yield from rec(i + 1, chosen + (c,), union | c)
        yield from rec(i + 1, chosen, union)

    yield from rec(0, (), 0)


def cover_order(cover: Iterable[int]) -> int:
    """Largest number of members sharing a single point."""
    members = tuple(cover)
    union = 0
    for m in members:
        union |= m
    return max(
        (sum(m >> p & 1 for m in members) for p in iter_points(union)),
        default=0,
    )


def _refines(fine: tuple[int, ...], coarse: tuple[int, ...]) -> bool:
    return all(any(m & ~v == 0 for v in coarse) for m in fine)


def covering_dimension(space: FiniteSpace, max_points: int = 5) -> DimensionReport:
    """Exact covering dimension by exhaustive cover enumeration.

    Exponential in the number of open sets, hence the point budget
    (SearchBudgetExceeded beyond it).
    """
    if space.n == 0:
        return DimensionReport(-1, None, None)
    if space.n > max_points:
        raise SearchBudgetExceeded(
            f"dimension search limited to {max_points} points, space has {space.n}"
        )
    covers = list(irredundant_covers(space))
    worst_cover = None
    worst_order = 0
    worst_refinement = None
    for c in covers:
        best_order = None
        best_ref = None
        for r in covers:
            if _refines(r, c):
                order = cover_order(r)
                if best_order is None or order < best_order:
                    best_order, best_ref = order, r
        # c refines itself, so best_order is set
        assert best_order is not None
        if best_order > worst_order:
            worst_cover, worst_order, worst_refinement = c, best_order, best_ref
    return DimensionReport(worst_order - 1, worst_cover, worst_refinement)


def check_theorem13(space: FiniteSpace, max_points: int = 5):
    """Covering dimension + 1 is at most the covering category.

    Returns (holds, dimension report, category report).
    """
    dim_rep = covering_dimension(space, max_points)
    cat_rep = ir_cat(space)
    return dim_rep.dim + 1 <= cat_rep.size, dim_rep, cat_rep
