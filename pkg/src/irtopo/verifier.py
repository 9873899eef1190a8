"""Exhaustive enumeration of finite spaces and machine checks of the
package's structural claims.

Every finite topology on labelled points corresponds to a reflexive,
transitive relation, so sweeping all spaces of a given size means
enumerating all preorders (counts 1, 4, 29, 355, 6942 for 1..5 points).
Claims are registered under stable identifiers and each sweep reports
the instances examined plus any counterexamples, serialized so they can
be replayed through the CLI.

Claim categories:

* asserted -- expected to hold; a counterexample is a failure.
* known_false -- expected to fail; the counterexample is the point
  (currently L2_literal: covers can always be padded where spare open
  sets exist).
* experimental -- measured, not presumed (T9_product and the
  subspace-vs-ambient witness comparison); either verdict is reported
  without gating the exit status.

Reports are deterministic given (claim, size limits, seed) and
independent of the worker count: instances are indexed before sharding
and results merge by index.  Timing is kept out of the JSON form so
reports compare byte for byte.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from typing import Callable, Iterable, Iterator

from . import category, homotopy, intervals, spaceio, spectra
from .core import FiniteSpace, IrtopoError, SearchBudgetExceeded, canon_key, iter_points, points_of, product

MAX_ENUM_POINTS = 5
MAX_PAIR_POINTS = 4
MAX_REPORTED_COUNTEREXAMPLES = 10
_T8_MODULUS_LIMIT = 5000
_DIM_SWEEP_CAP = 4


class BudgetExceeded(IrtopoError):
    pass


class UnknownClaim(IrtopoError):
    pass


# ---------------------------------------------------------------------------
# enumeration


@lru_cache(maxsize=None)
def _preorders(n: int) -> tuple[tuple[int, ...], ...]:
    """All reflexive-transitive relations on n points, sorted by row tuples."""
    if n == 1:
        return ((1,),)
    out = []
    bit_p = 1 << (n - 1)
    for parent in _preorders(n - 1):
        cols = [0] * (n - 1)
        for x, row in enumerate(parent):
            for y in iter_points(row):
                cols[y] |= 1 << x
        ins = [
            m
            for m in range(1 << (n - 1))
            if all(cols[x] & ~m == 0 for x in iter_points(m))
        ]
        outs = [
            m
            for m in range(1 << (n - 1))
            if all(parent[y] & ~m == 0 for y in iter_points(m))
        ]
        for incoming in ins:
            allowed = (1 << (n - 1)) - 1
            for x in iter_points(incoming):
                allowed &= parent[x]
            for outgoing in outs:
                if outgoing & ~allowed:
                    continue
                rows = tuple(
                    parent[x] | (bit_p if incoming >> x & 1 else 0)
                    for x in range(n - 1)
                ) + (outgoing | bit_p,)
                out.append(rows)
    out.sort()
    return tuple(out)


def enumerate_spaces(n: int) -> Iterator[FiniteSpace]:
    """Every finite space on exactly n labelled points, once, in canonical
    order (ascending reach-row tuples)."""
    if not 1 <= n <= MAX_ENUM_POINTS:
        raise BudgetExceeded(
            f"enumeration supports 1..{MAX_ENUM_POINTS} points, got {n}"
        )
    labels = tuple(str(i) for i in range(n))
    for rows in _preorders(n):
        yield FiniteSpace(labels, rows)


def count_topologies_by_open_families(n: int) -> int:
    """Independent recount: families of subsets containing the empty and the
    full set and closed under pairwise union and intersection."""
    if not 1 <= n <= 4:
        raise BudgetExceeded("open-family recount supports 1..4 points")
    full = (1 << n) - 1
    proper = [m for m in range(1, full)]
    count = 0
    for sel in range(1 << len(proper)):
        fam = {0, full}
        for i, m in enumerate(proper):
            if sel >> i & 1:
                fam.add(m)
        ok = True
        for a in fam:
            for b in fam:
                if a | b not in fam or a & b not in fam:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


def topologies_by_open_families(n: int) -> set[tuple[int, ...]]:
    """Reach-row tuples of every topology found by the open-family recount."""
    if not 1 <= n <= 4:
        raise BudgetExceeded("open-family recount supports 1..4 points")
    full = (1 << n) - 1
    proper = [m for m in range(1, full)]
    found = set()
    labels = tuple(str(i) for i in range(n))
    for sel in range(1 << len(proper)):
        fam = {0, full}
        for i, m in enumerate(proper):
            if sel >> i & 1:
                fam.add(m)
        if all(a | b in fam and a & b in fam for a in fam for b in fam):
            opens = [points_of(m) for m in fam]
            from .core import from_open_sets

            found.add(from_open_sets(labels, opens).reach_rows)
    return found


# ---------------------------------------------------------------------------
# independent homotopy oracle


@lru_cache(maxsize=1 << 12)
def _box_topology_rows(x_rows: tuple[int, ...], y_rows: tuple[int, ...]) -> frozenset[int]:
    nx, ny = len(x_rows), len(y_rows)
    x_space = FiniteSpace(tuple(str(i) for i in range(nx)), x_rows)
    y_space = FiniteSpace(tuple(str(i) for i in range(ny)), y_rows)
    boxes = []
    for ox in x_space.open_sets:
        for oy in y_space.open_sets:
            m = 0
            for xb in iter_points(ox):
                m |= oy << (xb * ny)
            boxes.append(m)
    seen = set(boxes)
    stack = list(seen)
    while stack:
        o = stack.pop()
        for b in boxes:
            u = o | b
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return frozenset(seen)


def box_topology(x: FiniteSpace, y: FiniteSpace) -> frozenset[int]:
    """Product-topology opens generated by boxes of opens, closed under
    union, as masks over row-major product points.

    Intersections come for free: boxes are intersection-closed and
    unions of boxes intersect into unions of boxes.
    """
    return _box_topology_rows(x.reach_rows, y.reach_rows)


def chain_homotopy_oracle(x: FiniteSpace, y: FiniteSpace, f, g, budget: int = 10**7) -> bool:
    """Brute-force decision of "f deforms to g" over the two-point chain.

    Searches for a continuous H on the product of x with the two-point
    chain, H(., bottom) = f and H(., top) = g, where the product carries
    the box-generated topology and continuity means every preimage of an
    open of y is in that family.  This is independent of the pointwise
    reach criterion used by homotopy.ir_homotopic, and decides the same
    question as a deformation over the one-way unit interval: a
    two-stage deformation lifts through the collapse t < 1 -> bottom,
    t = 1 -> top, and conversely every interval deformation restricts to
    its two stages.

    The boundary conditions pin every product point, so only candidates
    consistent with them are enumerated (here: exactly one).
    """
    f = tuple(f.assignment if isinstance(f, homotopy.ContinuousMap) else f)
    g = tuple(g.assignment if isinstance(g, homotopy.ContinuousMap) else g)
    if len(f) != x.n or len(g) != x.n:
        raise ValueError("boundary maps must assign every point of the domain")
    chain2 = intervals.chain_space(2)
    opens_prod = box_topology(x, chain2)
    opens_y = y.open_sets
    n_prod = 2 * x.n
    candidates = 1  # every point is pinned by a boundary condition
    if candidates * len(opens_y) * n_prod > budget:
        raise SearchBudgetExceeded("homotopy search exceeds its budget")
    per_point = []
    for p in range(x.n):
        per_point.append((f[p],))
        per_point.append((g[p],))
    for h in iproduct(*per_point):
        ok = True
        for v in opens_y:
            pre = 0
            for i, hv in enumerate(h):
                if v >> hv & 1:
                    pre |= 1 << i
            if pre not in opens_prod:
                ok = False
                break
        if ok:
            return True
    return False


# ---------------------------------------------------------------------------
# claim framework


@dataclass(frozen=True)
class _Ctx:
    n_max: int
    pair_max: int
    seed: int
    shard: int
    nshards: int

    def take(self, idx: int) -> bool:
        return idx % self.nshards == self.shard


@dataclass
class ClaimReport:
    claim: str
    category: str
    description: str
    instances_tested: int
    passed: bool
    counterexamples: list[dict]
    counterexample_count: int
    elapsed: float

    def to_jsonable(self) -> dict:
        # elapsed deliberately omitted: reports must be byte-stable
        return {
            "claim": self.claim,
            "category": self.category,
            "description": self.description,
            "instances_tested": self.instances_tested,
            "passed": self.passed,
            "counterexample_count": self.counterexample_count,
            "counterexamples_truncated": self.counterexample_count
            > len(self.counterexamples),
            "counterexamples": self.counterexamples,
        }


def _spaces_upto(n_max: int) -> Iterator[FiniteSpace]:
    for n in range(1, n_max + 1):
        yield from enumerate_spaces(n)


def _indexed_spaces(n_max: int) -> Iterator[tuple[int, FiniteSpace]]:
    yield from enumerate(_spaces_upto(n_max))


def _indexed_pairs(pair_max: int) -> Iterator[tuple[int, tuple[FiniteSpace, FiniteSpace]]]:
    spaces = list(_spaces_upto(pair_max))
    k = len(spaces)
    for i in range(k):
        for j in range(k):
            yield i * k + j, (spaces[i], spaces[j])


def _sweep(ctx: _Ctx, instances: Iterable, check: Callable):
    tested = 0
    bad = []
    for idx, inst in instances:
        if not ctx.take(idx):
            continue
        tested += 1
        violation = check(inst)
        if violation is not None:
            bad.append((idx, violation))
    return tested, bad


def _space_payload(s: FiniteSpace) -> dict:
    return spaceio.space_to_dict(s)


def _closure_via_opens(s: FiniteSpace, x: int) -> int:
    # independent closure route: complement of the union of opens avoiding x
    avoid = 0
    for o in s.open_sets:
        if not o >> x & 1:
            avoid |= o
    return s.full_mask & ~avoid


# ---------------------------------------------------------------------------
# claim runners


def _claim_t1(ctx: _Ctx):
    rng = random.Random(ctx.seed)
    instances: list = []
    for _ in range(100):
        size = rng.randint(1, 8)
        vals = set()
        while len(vals) < size:
            vals.add(Fraction(rng.randint(-120, 120), rng.randint(1, 24)))
        instances.append(("finite", tuple(sorted(vals))))
    instances.append(
        ("open", intervals.IntervalDescriptor(Fraction(0), Fraction(1), True, False))
    )
    instances.append(
        ("closed", intervals.IntervalDescriptor(Fraction(0), Fraction(1), True, True))
    )

    def check(inst):
        kind, payload = inst
        compact, witness = intervals.finite_subset_compactness(payload)
        if kind == "finite":
            if not compact or witness != max(payload):
                return {
                    "kind": kind,
                    "values": [intervals.format_fraction(v) for v in payload],
                }
        elif kind == "open":
            if compact or not isinstance(witness, intervals.LeftRayCover):
                return {"kind": kind, "interval": str(payload)}
        else:
            if not compact or witness != 1:
                return {"kind": kind, "interval": str(payload)}
        return None

    return _sweep(ctx, enumerate(instances), check)


def _claim_t2(ctx: _Ctx):
    def check(s):
        for x in range(s.n):
            cl = _closure_via_opens(s, x)
            for y in range(s.n):
                has_path = homotopy.ir_path(s, x, y) is not None
                if has_path != bool(cl >> y & 1):
                    return {
                        "space": _space_payload(s),
                        "from": s.labels[x],
                        "to": s.labels[y],
                        "path_exists": has_path,
                        "in_closure": bool(cl >> y & 1),
                    }
        return None

    return _sweep(ctx, _indexed_spaces(ctx.n_max), check)


def _claim_t3(ctx: _Ctx):
    def check(s):
        for x in range(s.n):
            cl = _closure_via_opens(s, x)
            for y in range(s.n):
                path = homotopy.ir_path(s, x, y)
                if path is None:
                    continue
                image = (1 << path.source) | (1 << path.target)
                if image & ~cl:
                    return {
                        "space": _space_payload(s),
                        "from": s.labels[x],
                        "to": s.labels[y],
                    }
        return None

    return _sweep(ctx, _indexed_spaces(ctx.n_max), check)


def _claim_t4(ctx: _Ctx):
    def check(s):
        if any(_closure_via_opens(s, x) != 1 << x for x in range(s.n)):
            return None  # not T1
        for x in range(s.n):
            for y in range(s.n):
                if x != y and homotopy.ir_path(s, x, y) is not None:
                    return {
                        "space": _space_payload(s),
                        "from": s.labels[x],
                        "to": s.labels[y],
                    }
        return None

    return _sweep(ctx, _indexed_spaces(ctx.n_max), check)


def _claim_t5(ctx: _Ctx):
    def check(pair):
        dom, cod = pair
        if not cod.is_t1():
            return None
        maps = homotopy.continuous_maps(dom, cod)
        for f in maps:
            for g in maps:
                if (
                    homotopy.ir_homotopic(f, g) is not None
                    and f.assignment != g.assignment
                ):
                    return {
                        "domain": _space_payload(dom),
                        "codomain": _space_payload(cod),
                        "f": list(f.assignment),
                        "g": list(g.assignment),
                    }
        return None

    return _sweep(ctx, _indexed_pairs(ctx.pair_max), check)


def _claim_t6(ctx: _Ctx):
    def check(s):
        co = homotopy.ir_co(s)
        identity = tuple(range(s.n))
        oracle_co = 0
        for x0 in range(s.n):
            if chain_homotopy_oracle(s, s, identity, (x0,) * s.n):
                oracle_co |= 1 << x0
        if oracle_co != co:
            return {
                "space": _space_payload(s),
                "pointwise_core": [s.labels[p] for p in iter_points(co)],
                "oracle_core": [s.labels[p] for p in iter_points(oracle_co)],
            }
        return None

    return _sweep(ctx, _indexed_spaces(ctx.n_max), check)


def _claim_t7(ctx: _Ctx):
    def check(pair):
        a, b = pair
        prod = product(a, b)
        left = homotopy.ir_co(prod)
        right = 0
        for xa in iter_points(homotopy.ir_co(a)):
            for yb in iter_points(homotopy.ir_co(b)):
                right |= 1 << (xa * b.n + yb)
        if left != right:
            return {"left": _space_payload(a), "right": _space_payload(b)}
        return None

    return _sweep(ctx, _indexed_pairs(ctx.pair_max), check)


def _claim_t8(ctx: _Ctx):
    instances: list = []
    for s in _spaces_upto(ctx.n_max):
        if s.is_t0():
            instances.append(("poset", s))
    for m in range(2, _T8_MODULUS_LIMIT + 1):
        instances.append(("zn", m))

    def check(inst):
        kind, payload = inst
        if kind == "poset":
            pairs = [
                (x, y)
                for x in range(payload.n)
                for y in iter_points(payload.reach_rows[x])
                if x != y
            ]
            sp = spectra.spec_from_poset(payload.labels, pairs)
        else:
            sp = spectra.spec_zn(payload)
        ok, rep = spectra.check_theorem8(sp)
        if not ok:
            return {
                "kind": kind,
                "instance": _space_payload(sp.space),
                "maximal_count": sp.maximal.bit_count(),
                "category": rep.size,
            }
        return None

    return _sweep(ctx, enumerate(instances), check)


def _claim_t9(ctx: _Ctx):
    def check(pair):
        a, b = pair
        prod = product(a, b)
        for sense in category.SENSES:
            lhs = category.ir_cat(prod, sense).size
            rhs = category.ir_cat(a, sense).size * category.ir_cat(b, sense).size
            if lhs != rhs:
                return {
                    "sense": sense,
                    "left": _space_payload(a),
                    "right": _space_payload(b),
                    "product_cat": lhs,
                    "factor_product": rhs,
                }
        return None

    return _sweep(ctx, _indexed_pairs(ctx.pair_max), check)


def _claim_t10(ctx: _Ctx):
    rng = random.Random(ctx.seed)
    batches = []
    for _ in range(100):
        arity = rng.randint(1, 3)
        count = rng.randint(1, 6)
        pts = set()
        while len(pts) < count:
            pts.add(
                tuple(
                    Fraction(rng.randint(0, 12), rng.randint(1, 12))
                    for _ in range(arity)
                )
            )
        pts = sorted(pts)
        top = tuple(max(p[i] for p in pts) for i in range(arity))
        if top not in pts:
            pts.append(top)
        batches.append(pts)

    def check(pts):
        ok, _greatest = intervals.check_theorem10(pts)
        if not ok:
            return {
                "points": [
                    [intervals.format_fraction(c) for c in p] for p in pts
                ]
            }
        return None

    return _sweep(ctx, enumerate(batches), check)


def _claim_t11(ctx: _Ctx):
    def check(s):
        if not s.is_t0():
            return None
        for x in range(s.n):
            for y in range(s.n):
                if x != y and s.reach(x, y) and homotopy.reverse_exists(s, x, y):
                    return {
                        "space": _space_payload(s),
                        "from": s.labels[x],
                        "to": s.labels[y],
                    }
        return None

    return _sweep(ctx, _indexed_spaces(ctx.n_max), check)


def _claim_t12(ctx: _Ctx):
    def check(s):
        co = homotopy.ir_co(s)
        if s.is_t0() and co and co.bit_count() != 1:
            return {
                "space": _space_payload(s),
                "core": [s.labels[p] for p in iter_points(co)],
            }
        return None

    return _sweep(ctx, _indexed_spaces(ctx.n_max), check)


def _claim_t13(ctx: _Ctx):
    cap = min(ctx.n_max, _DIM_SWEEP_CAP)

    def check(s):
        ok, dim_rep, cat_rep = category.check_theorem13(s)
        if not ok:
            return {
                "space": _space_payload(s),
                "dim": dim_rep.dim,
                "cat": cat_rep.size,
            }
        return None

    return _sweep(ctx, _indexed_spaces(cap), check)


def _equivalent_under_both(a: FiniteSpace, b: FiniteSpace):
    results = []
    for orientation in ("thm15", "def8"):
        results.append(
            homotopy.ir_homotopy_equivalent(a, b, orientation=orientation)
        )
    return results


def _claim_t14(ctx: _Ctx):
    def check(pair):
        a, b = pair
        for orientation, eq in zip(("thm15", "def8"), _equivalent_under_both(a, b)):
            if eq is None:
                continue
            if homotopy.ir_co(a) and not homotopy.ir_co(b):
                f, g = eq
                return {
                    "orientation": orientation,
                    "left": _space_payload(a),
                    "right": _space_payload(b),
                    "f": list(f.assignment),
                    "g": list(g.assignment),
                }
        return None

    return _sweep(ctx, _indexed_pairs(ctx.pair_max), check)


def _claim_t15(ctx: _Ctx):
    def check(pair):
        a, b = pair
        for orientation, eq in zip(("thm15", "def8"), _equivalent_under_both(a, b)):
            if eq is None:
                continue
            ca = category.ir_cat(a).size
            cb = category.ir_cat(b).size
            if ca != cb:
                f, g = eq
                return {
                    "orientation": orientation,
                    "left": _space_payload(a),
                    "right": _space_payload(b),
                    "cat_left": ca,
                    "cat_right": cb,
                    "f": list(f.assignment),
                    "g": list(g.assignment),
                }
        return None

    return _sweep(ctx, _indexed_pairs(ctx.pair_max), check)


def _claim_p1(ctx: _Ctx):
    rng = random.Random(ctx.seed)

    def unit():
        den = rng.randint(1, 50)
        return Fraction(rng.randint(0, den), den)

    instances = [
        (unit(), unit(), unit(), Fraction(rng.randint(1, 50), 50))
        for _ in range(10000)
    ]

    def check(inst):
        x, y, z, eps = inst
        d = intervals.d_ir
        fmt = intervals.format_fraction
        if d(x, x) != 0:
            return {"axiom": "identity", "x": fmt(x)}
        if d(x, z) > d(x, y) + d(y, z):
            return {"axiom": "triangle", "x": fmt(x), "y": fmt(y), "z": fmt(z)}
        if d(x, y) == 0 == d(y, x) and x != y:
            return {"axiom": "separation", "x": fmt(x), "y": fmt(y)}
        b = intervals.ball(x, eps)
        if b.whole_space:
            if x + eps <= 1:
                return {"axiom": "ball-clip", "x": fmt(x), "eps": fmt(eps)}
        elif fmt(b.hi) != fmt(x + eps):
            return {"axiom": "ball-endpoint", "x": fmt(x), "eps": fmt(eps)}
        return None

    return _sweep(ctx, enumerate(instances), check)


def _claim_p2(ctx: _Ctx):
    instances = []
    for k in range(1, 8):
        chain = intervals.chain_space(k)
        for m in range(1, 1 << k):
            instances.append((chain, m))

    def check(inst):
        chain, m = inst
        sub = chain.subspace(m)
        if not sub.is_hyperconnected():
            return {"chain": chain.n, "points": list(points_of(m))}
        return None

    return _sweep(ctx, enumerate(instances), check)


def _claim_p3(ctx: _Ctx):
    def check(s):
        rep = category.ir_cat(s)
        ok, witness = category.check_prop3(s, rep)
        if not ok:
            i, j, point = witness
            return {
                "space": _space_payload(s),
                "cover": spaceio.cover_labels(s, rep.sets),
                "witness_member": i,
                "other_member": j,
                "point": s.labels[point],
            }
        return None

    return _sweep(ctx, _indexed_spaces(ctx.n_max), check)


def _claim_p4(ctx: _Ctx):
    def check(s):
        rows = homotopy.quasiorder(s)
        for x in range(s.n):
            if not rows[x] >> x & 1:
                return {"space": _space_payload(s), "missing_reflexive": s.labels[x]}
            for y in iter_points(rows[x]):
                if rows[y] & ~rows[x]:
                    return {"space": _space_payload(s), "broken_at": s.labels[x]}
        return None

    return _sweep(ctx, _indexed_spaces(ctx.n_max), check)


def _claim_l1(ctx: _Ctx):
    def check(s):
        rep = category.ir_cat(s)
        for cov in category.irredundant_covers(s):
            ok, _mapping = category.check_refinement(s, rep, cov)
            if not ok:
                return {
                    "space": _space_payload(s),
                    "cover": spaceio.cover_labels(s, cov),
                }
        return None

    return _sweep(ctx, _indexed_spaces(ctx.n_max), check)


def _padded_cover(s: FiniteSpace):
    rep = category.ir_cat(s)
    used = set(rep.sets)
    extra = next((o for o in s.open_sets if o and o not in used), None)
    if extra is None:
        return None, rep
    return tuple(sorted(rep.sets + (extra,), key=canon_key)), rep


def _claim_l2_literal(ctx: _Ctx):
    def check(s):
        padded, rep = _padded_cover(s)
        if padded is None:
            return None
        # an open cover with more members than the covering category
        return {
            "space": _space_payload(s),
            "cat": rep.size,
            "padded_cover": spaceio.cover_labels(s, padded),
        }

    return _sweep(ctx, _indexed_spaces(ctx.n_max), check)


def _claim_l2_subcover(ctx: _Ctx):
    def check(s):
        rep = category.ir_cat(s)
        covers = list(category.irredundant_covers(s))
        padded, _rep = _padded_cover(s)
        if padded is not None:
            covers.append(padded)
        for cov in covers:
            try:
                sub = category.min_subcover(s, cov)
            except category.SubcoverNotFound:
                return {
                    "space": _space_payload(s),
                    "cover": spaceio.cover_labels(s, cov),
                }
            if len(sub) > rep.size:
                return {
                    "space": _space_payload(s),
                    "cover": spaceio.cover_labels(s, cov),
                    "subcover": spaceio.cover_labels(s, sub),
                }
        return None

    return _sweep(ctx, _indexed_spaces(ctx.n_max), check)


def _claim_c1(ctx: _Ctx):
    closed_interval = intervals.IntervalDescriptor(
        Fraction(0), Fraction(1), True, True
    )

    def check(desc):
        compact, witness = intervals.finite_subset_compactness(desc)
        if not compact or witness != 1:
            return {"interval": str(desc)}
        return None

    return _sweep(ctx, enumerate([closed_interval]), check)


def _claim_c2(ctx: _Ctx):
    def check(_):
        s = intervals.chain_space(2)
        if homotopy.ir_co(s) != 0b10 or homotopy.is_ir_contractible(s) != 0b10:
            return {"space": _space_payload(s)}
        return None

    return _sweep(ctx, enumerate([None]), check)


def _claim_c3(ctx: _Ctx):
    def check(k):
        s = intervals.chain_space(k)
        if homotopy.ir_co(s) != 1 << (k - 1):
            return {"chain": k}
        return None

    return _sweep(ctx, enumerate(range(1, 13)), check)


def _claim_c4(ctx: _Ctx):
    def check(s):
        if s.is_t1() and homotopy.ir_co(s) and s.n != 1:
            return {"space": _space_payload(s)}
        return None

    return _sweep(ctx, _indexed_spaces(ctx.n_max), check)


def _claim_c5(ctx: _Ctx):
    def check(s):
        if not homotopy.ir_co(s):
            return None
        covers = list(category.irredundant_covers(s))
        if covers != [(s.full_mask,)]:
            return {
                "space": _space_payload(s),
                "covers": [spaceio.cover_labels(s, c) for c in covers],
            }
        return None

    return _sweep(ctx, _indexed_spaces(ctx.n_max), check)


def _claim_c6(ctx: _Ctx):
    def check(s):
        if not s.is_t0():
            return None
        maximal = [x for x, row in enumerate(s.reach_rows) if row == 1 << x]
        if len(maximal) != 1:
            return None
        pairs = [
            (x, y)
            for x in range(s.n)
            for y in iter_points(s.reach_rows[x])
            if x != y
        ]
        sp = spectra.spec_from_poset(s.labels, pairs)
        rep = category.ir_cat(sp.space)
        if rep.size != 1 or homotopy.ir_co(sp.space) != 1 << maximal[0]:
            return {"space": _space_payload(s)}
        return None

    return _sweep(ctx, _indexed_spaces(ctx.n_max), check)


_PRIMES_25 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
              53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


def _claim_c7(ctx: _Ctx):
    def check(p):
        sp = spectra.spec_zn(p)
        if (
            sp.space.n != 1
            or homotopy.ir_co(sp.space) != 1
            or category.ir_cat(sp.space).size != 1
        ):
            return {"prime": p}
        return None

    return _sweep(ctx, enumerate(_PRIMES_25), check)


def _claim_c8(ctx: _Ctx):
    def check(s):
        rep = category.ir_cat(s)
        ok, mapping = category.check_refinement(s, rep, rep.sets)
        if not ok or mapping != tuple(range(rep.size)):
            return {"space": _space_payload(s), "mapping": mapping}
        for i, a in enumerate(rep.sets):
            for j, b in enumerate(rep.sets):
                if i != j and a & ~b == 0:
                    return {
                        "space": _space_payload(s),
                        "nested_members": [i, j],
                    }
        return None

    return _sweep(ctx, _indexed_spaces(ctx.n_max), check)


def _claim_c9(ctx: _Ctx):
    def check(s):
        if homotopy.is_partial_order(s) != s.is_t0():
            return {"space": _space_payload(s)}
        return None

    return _sweep(ctx, _indexed_spaces(ctx.n_max), check)


def _claim_d5(ctx: _Ctx):
    def check(s):
        sub = category.ir_cat(s, "subspace").size
        amb = category.ir_cat(s, "ambient").size
        if sub != amb:
            return {
                "space": _space_payload(s),
                "subspace_cat": sub,
                "ambient_cat": amb,
            }
        return None

    return _sweep(ctx, _indexed_spaces(ctx.n_max), check)


# ---------------------------------------------------------------------------
# registry and drivers


@dataclass(frozen=True)
class ClaimSpec:
    name: str
    category: str
    description: str
    runner: Callable


_CLAIM_LIST = [
    ClaimSpec("T1", "asserted",
              "subsets of the one-way line are compact exactly through a greatest element",
              _claim_t1),
    ClaimSpec("T2", "asserted",
              "a one-way path from x to y exists exactly when y lies in the closure of {x}",
              _claim_t2),
    ClaimSpec("T3", "asserted",
              "the image of a one-way path lies in the closure of its start point",
              _claim_t3),
    ClaimSpec("T4", "asserted",
              "in a T1 space every one-way path is constant",
              _claim_t4),
    ClaimSpec("T5", "asserted",
              "one-way homotopic maps into a T1 space are equal",
              _claim_t5),
    ClaimSpec("T6", "asserted",
              "deformability onto a point matches the chain-model homotopy oracle",
              _claim_t6),
    ClaimSpec("T7", "asserted",
              "the core of a product is the product of the cores",
              _claim_t7),
    ClaimSpec("T8", "asserted",
              "the covering category of a spectrum equals its number of maximal ideals",
              _claim_t8),
    ClaimSpec("T9_product", "experimental",
              "whether covering category is multiplicative over products",
              _claim_t9),
    ClaimSpec("T10", "asserted",
              "a grid subspace with a greatest point has exactly that point as core",
              _claim_t10),
    ClaimSpec("T11", "asserted",
              "in a T0 space no nonconstant one-way path has a reverse",
              _claim_t11),
    ClaimSpec("T12", "asserted",
              "a T0 space that deforms onto a point has a single core point",
              _claim_t12),
    ClaimSpec("T13", "asserted",
              "covering dimension + 1 is at most the covering category (4-point cap)",
              _claim_t13),
    ClaimSpec("T14", "asserted",
              "deformability onto a point transfers across equivalence",
              _claim_t14),
    ClaimSpec("T15", "asserted",
              "covering category is invariant under equivalence",
              _claim_t15),
    ClaimSpec("P1", "asserted",
              "the asymmetric interval distance is a quasi-metric with left-ray balls",
              _claim_p1),
    ClaimSpec("P2", "asserted",
              "all subspaces of finite chains are hyperconnected",
              _claim_p2),
    ClaimSpec("P3", "asserted",
              "optimal-cover witness points avoid every other cover member",
              _claim_p3),
    ClaimSpec("P4", "asserted",
              "reachability is reflexive and transitive",
              _claim_p4),
    ClaimSpec("L1", "asserted",
              "an optimal deformable cover refines every open cover",
              _claim_l1),
    ClaimSpec("L2_literal", "known_false",
              "no open cover has more members than the covering category",
              _claim_l2_literal),
    ClaimSpec("L2_subcover", "asserted",
              "every open cover contains a subcover no larger than the covering category",
              _claim_l2_subcover),
    ClaimSpec("C1", "asserted",
              "the closed unit interval of the one-way line is compact",
              _claim_c1),
    ClaimSpec("C2", "asserted",
              "the two-point chain deforms onto its top point",
              _claim_c2),
    ClaimSpec("C3", "asserted",
              "every finite chain deforms onto its top point",
              _claim_c3),
    ClaimSpec("C4", "asserted",
              "T1 spaces that deform onto a point are singletons",
              _claim_c4),
    ClaimSpec("C5", "asserted",
              "a space that deforms onto a point has the whole space as its only irredundant cover",
              _claim_c5),
    ClaimSpec("C6", "asserted",
              "spectra with a unique maximal ideal deform onto it",
              _claim_c6),
    ClaimSpec("C7", "asserted",
              "one-prime spectra deform onto their single point",
              _claim_c7),
    ClaimSpec("C8", "asserted",
              "an optimal cover is an antichain and refines itself identically",
              _claim_c8),
    ClaimSpec("C9", "asserted",
              "reachability is a partial order exactly on T0 spaces",
              _claim_c9),
    ClaimSpec("D5_sense_compare", "experimental",
              "covering category under in-set vs ambient witnesses",
              _claim_d5),
]

CLAIMS = {spec.name: spec for spec in _CLAIM_LIST}

CLAIM_ORDER = tuple(spec.name for spec in _CLAIM_LIST)


def _resolve_limits(n_max: int, pair_max: int | None) -> tuple[int, int]:
    if not 1 <= n_max <= MAX_ENUM_POINTS:
        raise BudgetExceeded(
            f"claim sweeps support 1..{MAX_ENUM_POINTS} points, got {n_max}"
        )
    if pair_max is None:
        pair_max = min(3, n_max)
    if not 1 <= pair_max <= MAX_PAIR_POINTS:
        raise BudgetExceeded(
            f"pair sweeps support 1..{MAX_PAIR_POINTS} points, got {pair_max}"
        )
    return n_max, pair_max


def _run_claim_shard(
    name: str, n_max: int, pair_max: int, seed: int, shard: int, nshards: int
):
    spec = CLAIMS[name]
    ctx = _Ctx(n_max, pair_max, seed, shard, nshards)
    return spec.runner(ctx)


def run_claim(
    name: str,
    n_max: int = 3,
    seed: int = 0,
    jobs: int = 1,
    pair_max: int | None = None,
) -> ClaimReport:
    """Run a single claim sweep and return its report.

    Sweeps all spaces of 1..n_max points (pairs capped at pair_max,
    default min(3, n_max)); randomized instance families are derived
    from the seed before sharding, so reports do not depend on jobs.
    """
    if name not in CLAIMS:
        raise UnknownClaim(f"unknown claim {name!r}; known: {', '.join(CLAIM_ORDER)}")
    n_max, pair_max = _resolve_limits(n_max, pair_max)
    spec = CLAIMS[name]
    start = time.monotonic()
    if jobs <= 1:
        tested, violations = _run_claim_shard(name, n_max, pair_max, seed, 0, 1)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_run_claim_shard, name, n_max, pair_max, seed, s, jobs)
                for s in range(jobs)
            ]
            parts = [f.result() for f in futures]
        tested = sum(p[0] for p in parts)
        violations = [v for p in parts for v in p[1]]
    violations.sort(key=lambda item: item[0])
    elapsed = time.monotonic() - start
    return ClaimReport(
        claim=name,
        category=spec.category,
        description=spec.description,
        instances_tested=tested,
        passed=not violations,
        counterexamples=[v for _, v in violations[:MAX_REPORTED_COUNTEREXAMPLES]],
        counterexample_count=len(violations),
        elapsed=elapsed,
    )


def run_suite(
    n_max: int = 3,
    seed: int = 0,
    jobs: int = 1,
    pair_max: int | None = None,
    claims: Iterable[str] | None = None,
) -> list[ClaimReport]:
    """Run claims in registry order and return their reports."""
    names = list(CLAIM_ORDER) if claims is None else list(claims)
    for name in names:
        if name not in CLAIMS:
            raise UnknownClaim(
                f"unknown claim {name!r}; known: {', '.join(CLAIM_ORDER)}"
            )
    return [
        run_claim(name, n_max=n_max, seed=seed, jobs=jobs, pair_max=pair_max)
        for name in names
    ]


def suite_passed(reports: Iterable[ClaimReport]) -> bool:
    """True when every asserted claim passed; known-false and experimental
    claims never gate the verdict."""
    return all(r.passed for r in reports if r.category == "asserted")


def suite_to_jsonable(
    reports: list[ClaimReport], n_max: int, pair_max: int | None, seed: int
) -> dict:
    n_max, pair_max = _resolve_limits(n_max, pair_max)
    return {
        "max_points": n_max,
        "pair_points": pair_max,
        "seed": seed,
        "all_required_passed": suite_passed(reports),
        "claims": [r.to_jsonable() for r in reports],
    }
