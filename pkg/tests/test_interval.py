import random
from fractions import Fraction as F

import pytest

from nakarep import (
    CLOSED,
    Interval,
    OPEN,
    canonical_lift,
    contains,
    interval,
    left_intersect,
    map_module,
    translate,
)
from oracles import brute_left_intersect_members, rand_homeo_full_line, rand_interval


class TestConstruction:
    def test_point_must_be_closed(self):
        interval(1, 1)
        with pytest.raises(ValueError):
            Interval(F(1), F(1), OPEN, CLOSED)

    def test_reversed_ends_rejected(self):
        with pytest.raises(ValueError):
            interval(2, 1)


class TestLeftIntersect:
    def test_overlap_to_the_right(self):
        assert left_intersect(interval(0, 2), interval(1, 3)) == interval(1, 2)

    def test_overlap_to_the_left_is_empty(self):
        assert left_intersect(interval(1, 3), interval(0, 2)) is None

    def test_self(self):
        rng = random.Random(1)
        for _ in range(50):
            u = rand_interval(rng)
            assert left_intersect(u, u) == u

    def test_kind_inheritance(self):
        u = interval(0, 1, True, True)
        v = interval(0, 2, False, True)
        res = left_intersect(u, v)
        assert res == Interval(F(0), F(1), OPEN, CLOSED)

    def test_brute_force_membership(self):
        rng = random.Random(2)
        for _ in range(300):
            u = rand_interval(rng)
            v = rand_interval(rng)
            res = left_intersect(u, v)
            _, grid, members = brute_left_intersect_members(u, v)
            for x, expect in zip(grid, members):
                got = res is not None and res.contains_point(x)
                assert got == expect, (u, v, x)


class TestTranslate:
    def test_shift_up(self):
        assert translate(interval(0, F(1, 2)), 1) == interval(1, F(3, 2))

    def test_shift_down_keeps_kinds(self):
        u = Interval(F(1, 3), F(1), OPEN, CLOSED)
        assert translate(u, -1) == Interval(F(-2, 3), F(0), OPEN, CLOSED)

    def test_round_trip(self):
        rng = random.Random(3)
        for _ in range(50):
            u = rand_interval(rng)
            i = rng.randrange(-5, 6)
            assert translate(translate(u, i), -i) == u


class TestContains:
    def test_open_inside_closed(self):
        assert contains(interval(0, 1), interval(0, 1, False, False))

    def test_closed_not_inside_open(self):
        assert not contains(interval(0, 1, False, True), interval(0, 1))

    def test_reflexive(self):
        assert contains(interval(0, 1), interval(0, 1))


class TestCanonicalLift:
    def test_down(self):
        assert canonical_lift(interval(F(5, 4), F(7, 4))) == interval(F(1, 4), F(3, 4))

    def test_already_canonical(self):
        u = Interval(F(0), F(3, 2), OPEN, CLOSED)
        assert canonical_lift(u) == u

    def test_up(self):
        u = Interval(F(-1, 3), F(0), CLOSED, OPEN)
        assert canonical_lift(u) == Interval(F(2, 3), F(1), CLOSED, OPEN)

    def test_idempotent_and_translation_invariant(self):
        rng = random.Random(4)
        for _ in range(100):
            u = rand_interval(rng)
            c = canonical_lift(u)
            assert F(0) <= c.lo < F(1)
            assert canonical_lift(c) == c
            assert canonical_lift(translate(u, rng.randrange(-4, 5))) == c


class TestProperties:
    def test_equivariance_under_increasing_maps(self):
        # mapping endpoints through f commutes with the left intersection
        rng = random.Random(5)
        for _ in range(500):
            f = rand_homeo_full_line(rng)
            u = rand_interval(rng)
            v = rand_interval(rng)
            lhs = left_intersect(u, v)
            rhs = left_intersect(map_module(f, u), map_module(f, v))
            if lhs is None:
                assert rhs is None
            else:
                assert rhs == map_module(f, lhs)

    def test_translate_distributes(self):
        rng = random.Random(6)
        for _ in range(200):
            u = rand_interval(rng)
            v = rand_interval(rng)
            i = rng.randrange(-3, 4)
            lhs = left_intersect(u, v)
            rhs = left_intersect(translate(u, i), translate(v, i))
            if lhs is None:
                assert rhs is None
            else:
                assert rhs == translate(lhs, i)
