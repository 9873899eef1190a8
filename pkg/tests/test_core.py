import pytest
from hypothesis import given, strategies as st

from irtopo import (
    EmptySubspace,
    FiniteSpace,
    NotATopology,
    ReachNotPreorder,
    from_open_sets,
    from_reach,
    mask_of,
    points_of,
    product,
)
from irtopo.verifier import box_topology, enumerate_spaces

from conftest import discrete, indiscrete


def brute_force_opens(space):
    """Oracle: check every subset against the minimal-neighborhood condition."""
    out = []
    for mask in range(1 << space.n):
        if all(space.min_opens[y] & ~mask == 0 for y in points_of(mask)):
            out.append(mask)
    return sorted(out, key=lambda m: (m.bit_count(), m))


def smallest_closed_superset(space, aset):
    """Oracle: intersect all closed sets (complements of opens) containing aset."""
    acc = space.full_mask
    for o in space.open_sets:
        closed = space.full_mask & ~o
        if aset & ~closed == 0:
            acc &= closed
    return acc


def test_mask_helpers_roundtrip():
    assert points_of(mask_of([0, 2, 5])) == (0, 2, 5)
    assert mask_of([]) == 0
    assert points_of(0) == ()


class TestFromOpenSets:
    def test_sierpinski_reach(self, sierpinski):
        pairs = {
            (x, y)
            for x in range(2)
            for y in range(2)
            if sierpinski.reach(x, y)
        }
        assert pairs == {(0, 0), (1, 1), (0, 1)}

    def test_discrete_two_points(self):
        s = from_open_sets(["0", "1"], [[], [0], [1], [0, 1]])
        assert s.reach_rows == (0b01, 0b10)
        assert s.is_t1()

    def test_missing_full_set(self):
        with pytest.raises(NotATopology):
            from_open_sets(["0", "1"], [[], [0], [1]])

    def test_missing_empty_set(self):
        with pytest.raises(NotATopology):
            from_open_sets(["0", "1"], [[0], [0, 1]])

    def test_union_witness(self):
        with pytest.raises(NotATopology, match="union"):
            from_open_sets(["0", "1", "2"], [[], [0], [1], [0, 1, 2]])

    def test_intersection_witness(self):
        with pytest.raises(NotATopology, match="intersection"):
            from_open_sets(
                ["0", "1", "2"], [[], [0, 1], [1, 2], [0, 1, 2]]
            )

    def test_duplicates_collapse_silently(self):
        s = from_open_sets(["0", "1"], [[], [0], [0], [0, 1], [0, 1]])
        assert s.open_sets == (0, 1, 3)

    def test_out_of_range_point(self):
        with pytest.raises(NotATopology):
            from_open_sets(["0"], [[], [0, 3], [0]])


class TestFromReach:
    def test_identity_gives_discrete(self):
        s = from_reach(["a", "b", "c"], [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        assert len(s.open_sets) == 8

    def test_total_relation_gives_indiscrete(self):
        s = from_reach(["a", "b"], [[1, 1], [1, 1]])
        assert s.open_sets == (0, 3)

    def test_chain_matches_sierpinski(self, sierpinski):
        s = from_reach(["0", "1"], [[1, 1], [0, 1]])
        assert s == sierpinski

    def test_not_reflexive(self):
        with pytest.raises(ReachNotPreorder, match="reflexive"):
            from_reach(["a", "b"], [[0, 1], [0, 1]])

    def test_not_transitive(self):
        with pytest.raises(ReachNotPreorder, match="transitive"):
            from_reach(["a", "b", "c"], [[1, 1, 0], [0, 1, 1], [0, 0, 1]])


class TestOpenSets:
    def test_sierpinski(self, sierpinski):
        assert [points_of(o) for o in sierpinski.open_sets] == [(), (0,), (0, 1)]

    def test_indiscrete(self):
        assert indiscrete(2).open_sets == (0, 0b11)

    def test_pseudocircle_brute_force(self, pseudocircle):
        # frozen from the subset-by-subset oracle: 7 open sets
        oracle = brute_force_opens(pseudocircle)
        assert list(pseudocircle.open_sets) == oracle
        assert len(oracle) == 7
        assert oracle == [0b0000, 0b0001, 0b0010, 0b0011, 0b0111, 0b1011, 0b1111]

    def test_canonical_order(self, spaces_upto3):
        for s in spaces_upto3:
            keys = [(o.bit_count(), o) for o in s.open_sets]
            assert keys == sorted(keys)


def test_minimal_basis_invariants(spaces_upto3):
    for s in spaces_upto3:
        for x in range(s.n):
            mo = s.min_opens[x]
            assert mo >> x & 1
            assert s.is_open(mo)
            for o in s.open_sets:
                if o >> x & 1:
                    assert mo & ~o == 0
        for o in s.open_sets:
            assert o == _union(s.min_opens[y] for y in points_of(o))


def _union(masks):
    out = 0
    for m in masks:
        out |= m
    return out


class TestClosureInterior:
    def test_sierpinski_closures(self, sierpinski):
        # frozen from the smallest-closed-superset oracle
        assert smallest_closed_superset(sierpinski, 0b01) == 0b11
        assert sierpinski.closure(0b01) == 0b11
        assert smallest_closed_superset(sierpinski, 0b10) == 0b10
        assert sierpinski.closure(0b10) == 0b10

    def test_closure_of_empty(self, pseudocircle):
        assert pseudocircle.closure(0) == 0

    def test_closure_matches_oracle_everywhere(self, spaces_upto3):
        for s in spaces_upto3:
            for mask in range(1 << s.n):
                assert s.closure(mask) == smallest_closed_superset(s, mask)

    def test_duality_with_interior(self, spaces_upto3):
        for s in spaces_upto3:
            full = s.full_mask
            for mask in range(1 << s.n):
                assert s.closure(mask) == full & ~s.interior(full & ~mask)

    def test_interior_is_largest_open_subset(self, spaces_upto3):
        for s in spaces_upto3:
            for mask in range(1 << s.n):
                inner = s.interior(mask)
                assert s.is_open(inner) and inner & ~mask == 0
                for o in s.open_sets:
                    if o & ~mask == 0:
                        assert o & ~inner == 0


class TestSubspace:
    def test_pseudocircle_pair_is_discrete(self, pseudocircle):
        sub = pseudocircle.subspace(0b0011)
        assert sub.reach_rows == (1, 2)
        assert sub.labels == ("a", "b")

    def test_single_point(self, sierpinski):
        assert sierpinski.subspace(0b10).reach_rows == (1,)

    def test_whole_space_unchanged(self, pseudocircle):
        assert pseudocircle.subspace(pseudocircle.full_mask) == pseudocircle

    def test_empty_rejected(self, sierpinski):
        with pytest.raises(EmptySubspace):
            sierpinski.subspace(0)

    def test_matches_relative_opens(self, spaces_upto3):
        for s in spaces_upto3:
            for mask in range(1, 1 << s.n):
                sub = s.subspace(mask)
                relative = {0}
                pts = points_of(mask)
                index = {p: i for i, p in enumerate(pts)}
                for o in s.open_sets:
                    relative.add(mask_of(index[p] for p in points_of(o & mask)))
                assert set(sub.open_sets) == relative


class TestProduct:
    def test_sierpinski_square(self, sierpinski):
        sq = product(sierpinski, sierpinski)
        for xi in range(2):
            for yi in range(2):
                for xj in range(2):
                    for yj in range(2):
                        expected = sierpinski.reach(xi, xj) and sierpinski.reach(yi, yj)
                        assert sq.reach(xi * 2 + yi, xj * 2 + yj) == expected

    def test_product_with_point_is_identity(self, pseudocircle):
        point = discrete(1)
        assert product(pseudocircle, point).reach_rows == pseudocircle.reach_rows

    def test_discrete_times_discrete(self):
        assert product(discrete(2), discrete(2)) == discrete(4)

    def test_matches_box_generated_topology(self, spaces_upto3):
        # the componentwise-reach product carries exactly the topology
        # generated by boxes of opens; exhaustive at small size
        for a in spaces_upto3:
            for b in spaces_upto3:
                prod = product(a, b)
                assert frozenset(prod.open_sets) == box_topology(a, b)

    def test_threefold_fold(self, sierpinski):
        from irtopo import ir_co

        triple = product(product(sierpinski, sierpinski), sierpinski)
        assert points_of(ir_co(triple)) == (7,)


class TestSeparation:
    def test_sierpinski(self, sierpinski):
        assert sierpinski.is_t0()
        assert not sierpinski.is_t1()
        assert sierpinski.is_hyperconnected()

    def test_discrete(self):
        d = discrete(2)
        assert d.is_t0() and d.is_t1() and not d.is_hyperconnected()

    def test_indiscrete(self):
        s = indiscrete(2)
        assert not s.is_t0() and not s.is_t1() and s.is_hyperconnected()

    def test_t1_iff_singleton_closures(self, spaces_upto4):
        for s in spaces_upto4:
            singleton = all(s.closure(1 << x) == 1 << x for x in range(s.n))
            assert s.is_t1() == singleton

    def test_hyperconnected_matches_open_pair_scan(self, spaces_upto3):
        for s in spaces_upto3:
            opens = [o for o in s.open_sets if o]
            clash = all(a & b for a in opens for b in opens)
            assert s.is_hyperconnected() == clash


def test_roundtrip_open_sets(spaces_upto4):
    for s in spaces_upto4:
        again = from_open_sets(s.labels, s.open_sets)
        assert again.reach_rows == s.reach_rows


def test_equality_ignores_labels():
    a = FiniteSpace(("a", "b"), (3, 2))
    b = FiniteSpace(("x", "y"), (3, 2))
    assert a == b and hash(a) == hash(b)
    assert a != FiniteSpace(("a", "b"), (1, 2))


@st.composite
def space_and_masks(draw):
    spaces = []
    for n in range(1, 4):
        spaces.extend(enumerate_spaces(n))
    s = draw(st.sampled_from(spaces))
    a = draw(st.integers(min_value=0, max_value=s.full_mask))
    b = draw(st.integers(min_value=0, max_value=s.full_mask))
    return s, a, b


@given(space_and_masks())
def test_closure_is_idempotent_monotone_additive(args):
    s, a, b = args
    ca = s.closure(a)
    assert s.closure(ca) == ca
    if a & ~b == 0:
        assert ca & ~s.closure(b) == 0
    assert s.closure(a | b) == ca | s.closure(b)


@given(space_and_masks())
def test_reach_is_reflexive_and_transitive(args):
    s, _, _ = args
    for x in range(s.n):
        assert s.reach(x, x)
        for y in points_of(s.reach_rows[x]):
            assert s.reach_rows[y] & ~s.reach_rows[x] == 0
