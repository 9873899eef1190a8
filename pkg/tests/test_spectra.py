import pytest

from irtopo import (
    InvalidModulus,
    NotAPartialOrder,
    SearchBudgetExceeded,
    check_theorem8,
    factorize,
    ir_cat,
    ir_co,
    points_of,
    spec_from_poset,
    spec_zn,
)
from irtopo.verifier import enumerate_spaces


def test_factorize_basics():
    assert factorize(12) == [(2, 2), (3, 1)]
    assert factorize(97) == [(97, 1)]
    assert factorize(360) == [(2, 3), (3, 2), (5, 1)]
    with pytest.raises(InvalidModulus):
        factorize(1)
    with pytest.raises(SearchBudgetExceeded):
        factorize(10**13)


class TestSpecZn:
    def test_two_primes(self):
        sp = spec_zn(12)
        assert sp.space.labels == ("(2)", "(3)")
        assert sp.space.is_t1()
        assert sp.maximal == sp.space.full_mask
        assert ir_cat(sp.space).size == 2

    def test_prime_gives_singleton(self):
        sp = spec_zn(7)
        assert sp.space.n == 1
        assert ir_co(sp.space) == 1  # a one-point spectrum deforms onto itself

    def test_four_primes(self):
        sp = spec_zn(2 * 3 * 5 * 7)
        assert sp.space.n == 4
        assert ir_cat(sp.space).size == 4

    def test_depends_only_on_radical(self):
        assert spec_zn(12).space == spec_zn(6).space
        assert spec_zn(12).space.labels == spec_zn(6).space.labels
        # same shape, different primes: equal as spaces, labels differ
        assert spec_zn(10).space == spec_zn(12).space
        assert spec_zn(10).space.labels != spec_zn(12).space.labels

    def test_invalid(self):
        with pytest.raises(InvalidModulus):
            spec_zn(0)


class TestSpecFromPoset:
    def test_local_chain(self):
        sp = spec_from_poset(["(0)", "(p)"], [(0, 1)])
        assert points_of(sp.maximal) == (1,)
        assert points_of(ir_co(sp.space)) == (1,)
        assert ir_cat(sp.space).size == 1

    def test_antichain(self):
        sp = spec_from_poset(["M1", "M2", "M3"], [])
        assert sp.maximal == 0b111
        assert ir_cat(sp.space).size == 3

    def test_v_poset(self):
        sp = spec_from_poset(["(0)", "M1", "M2"], [(0, 1), (0, 2)])
        assert points_of(sp.maximal) == (1, 2)
        rep = ir_cat(sp.space)
        assert rep.size == 2
        # optimal cover removes one maximal ideal at a time
        assert rep.sets == (0b011, 0b101)

    def test_rejects_cycle(self):
        with pytest.raises(NotAPartialOrder, match="antisymmetric"):
            spec_from_poset(["a", "b"], [(0, 1), (1, 0)])

    def test_rejects_missing_transitivity(self):
        with pytest.raises(NotAPartialOrder, match="transitive"):
            spec_from_poset(["a", "b", "c"], [(0, 1), (1, 2)])

    def test_rejects_bad_index(self):
        with pytest.raises(ValueError):
            spec_from_poset(["a"], [(0, 4)])


class TestTheorem8:
    def test_zn_360(self):
        ok, rep = check_theorem8(spec_zn(360))
        assert ok and rep.size == 3

    def test_local_chain(self):
        ok, rep = check_theorem8(spec_from_poset(["(0)", "(p)"], [(0, 1)]))
        assert ok and rep.size == 1

    def test_expected_cover_shape(self):
        # complements of "all other maximal ideals" always give a valid
        # deformable cover of the right size
        sp = spec_from_poset(
            ["(0)", "M1", "M2", "M3"], [(0, 1), (0, 2), (0, 3)]
        )
        ok, rep = check_theorem8(sp)
        assert ok and rep.size == 3
        others = [
            sp.space.full_mask & ~(sp.maximal & ~(1 << m))
            for m in points_of(sp.maximal)
        ]
        union = 0
        for w in others:
            assert sp.space.is_open(w)
            union |= w
        assert union == sp.space.full_mask

    def test_all_small_posets(self, spaces_upto4):
        from irtopo.core import iter_points

        for s in spaces_upto4:
            if not s.is_t0():
                continue
            pairs = [
                (x, y)
                for x in range(s.n)
                for y in iter_points(s.reach_rows[x])
                if x != y
            ]
            ok, _ = check_theorem8(spec_from_poset(s.labels, pairs))
            assert ok


class TestSpecInvariants:
    def _posets(self):
        for n in range(1, 4):
            for s in enumerate_spaces(n):
                if s.is_t0():
                    yield s

    def test_spectra_are_t0_and_t1_iff_antichain(self):
        from irtopo.core import iter_points

        for s in self._posets():
            pairs = [
                (x, y)
                for x in range(s.n)
                for y in iter_points(s.reach_rows[x])
                if x != y
            ]
            sp = spec_from_poset(s.labels, pairs)
            assert sp.space.is_t0()
            assert sp.space.is_t1() == (not pairs)

    def test_closure_is_up_set(self):
        sp = spec_from_poset(["(0)", "M1", "M2"], [(0, 1), (0, 2)])
        assert sp.space.closure(0b001) == 0b111
        assert sp.space.closure(0b010) == 0b010

    def test_core_iff_unique_maximal(self):
        for s in self._posets():
            from irtopo.core import iter_points

            pairs = [
                (x, y)
                for x in range(s.n)
                for y in iter_points(s.reach_rows[x])
                if x != y
            ]
            sp = spec_from_poset(s.labels, pairs)
            core = ir_co(sp.space)
            if sp.maximal.bit_count() == 1:
                assert core == sp.maximal
            else:
                assert core == 0
