import random
from fractions import Fraction as F

import pytest

from nakarep import (
    Dom,
    DomainError,
    FracLinear,
    NEG_INF,
    NotBijective,
    POS_INF,
    Piece,
    PiecewiseMap,
    compose,
    equals,
    invert,
)
from oracles import rand_homeo_circle, rand_homeo_full_line, rand_homeo_half_line

REALS = Dom(NEG_INF, POS_INF, False)
UNIT = Dom(F(0), F(1), True)


def affine_map(dom, slope, intercept, periodic=False):
    return PiecewiseMap.single(dom, FracLinear.affine(slope, intercept), periodic)


def kappa_n_successor(n):
    pieces = [
        Piece(F(k, n), F(k + 1, n), FracLinear.affine(F(1, 2), F(k + 1, 2 * n)))
        for k in range(n)
    ]
    return PiecewiseMap(UNIT, tuple(pieces), periodic=True)


class TestFracLinear:
    def test_normal_forms(self):
        assert FracLinear(2, 4, 0, 2) == FracLinear.affine(1, 2)
        assert FracLinear(2, 2, 1, 1) == FracLinear.const(2)  # det 0, constant
        # scaled mobius coefficients normalize identically
        assert FracLinear(2, 0, 2, 2) == FracLinear(1, 0, 1, 1)

    def test_decreasing_rejected(self):
        with pytest.raises(ValueError):
            FracLinear.affine(-1, 0)
        with pytest.raises(ValueError):
            FracLinear(0, 1, 1, 0)  # 1/t

    def test_inverse_swaps_coefficients(self):
        f = FracLinear(1, 0, -1, 1)  # t / (1 - t)
        g = f.inverse()
        assert g == FracLinear(1, 0, 1, 1)  # t / (1 + t)
        assert g.compose(f) == FracLinear.identity()

    def test_constant_has_no_inverse(self):
        with pytest.raises(NotBijective):
            FracLinear.const(3).inverse()

    def test_compose_is_matrix_product(self):
        f = FracLinear.affine(2, 1)
        g = FracLinear.affine(3, -1)
        h = f.compose(g)
        for t in (F(0), F(1, 3), F(-7, 5)):
            assert h(t) == f(g(t))


class TestEval:
    def test_affine_translation(self):
        k = affine_map(REALS, 1, 1)
        assert k.eval(0) == 1

    def test_two_piece_profile_of_series(self):
        # constant successor values 1 and 4/3 on [0,1/3) and [1/3,1)
        k = PiecewiseMap(
            UNIT,
            (
                Piece(F(0), F(1, 3), FracLinear.const(1)),
                Piece(F(1, 3), F(1), FracLinear.const(F(4, 3))),
            ),
            periodic=True,
        )
        assert k.eval(F(1, 2)) == F(4, 3)

    def test_periodic_unfolding(self):
        k = kappa_n_successor(2)
        assert k.eval(F(5, 4)) == F(11, 8)

    def test_outside_domain(self):
        k = affine_map(Dom(F(0), POS_INF, True), 1, 1)
        with pytest.raises(DomainError):
            k.eval(-1)


class TestLeftLimit:
    def test_jump(self):
        k = PiecewiseMap(
            REALS,
            (
                Piece(NEG_INF, F(0), FracLinear.affine(1, 1)),
                Piece(F(0), POS_INF, FracLinear.affine(1, 2)),
            ),
        )
        assert k.left_limit(0) == 1
        assert k.eval(0) == 2

    def test_continuity_point(self):
        k = affine_map(REALS, 2, 0)
        assert k.left_limit(F(1, 3)) == k.eval(F(1, 3))

    def test_periodic_wrap_limit(self):
        k = kappa_n_successor(2)
        assert k.left_limit(F(1, 2)) == F(1, 2)
        assert k.left_limit(0) == 0

    def test_left_end_has_no_left_limit(self):
        k = affine_map(Dom(F(0), POS_INF, True), 1, 1)
        with pytest.raises(DomainError):
            k.left_limit(0)


class TestCompose:
    def test_identity_laws(self):
        g = affine_map(UNIT, F(1, 2), F(1, 2))
        ident = PiecewiseMap.identity(UNIT)
        assert equals(compose(ident, g), g)

    def test_mobius_composite(self):
        f = PiecewiseMap.single(UNIT, FracLinear(1, 0, -1, 1))
        g = affine_map(UNIT, F(1, 2), F(1, 2))
        comp = compose(f, g)
        assert len(comp.pieces) == 1
        assert comp.pieces[0].fn == FracLinear(1, 1, -1, 1)  # (1+t)/(1-t)

    def test_inverse_law(self):
        f = PiecewiseMap.single(UNIT, FracLinear(1, 0, -1, 1))
        fi = invert(f)
        assert equals(compose(f, fi), PiecewiseMap.identity(fi.dom))
        assert equals(compose(fi, f), PiecewiseMap.identity(UNIT))

    def test_range_mismatch(self):
        f = affine_map(UNIT, 1, 0)
        g = affine_map(UNIT, 1, 2)  # image [2,3) misses [0,1)
        with pytest.raises(DomainError):
            compose(f, g)

    def test_breakpoints_are_preimages(self):
        f = PiecewiseMap(
            Dom(F(0), POS_INF, True),
            (
                Piece(F(0), F(2), FracLinear.affine(1, 0)),
                Piece(F(2), POS_INF, FracLinear.affine(3, -4)),
            ),
        )
        g = affine_map(Dom(F(0), POS_INF, True), 4, 0)
        comp = compose(f, g)
        assert [p.lo for p in comp.pieces] == [F(0), F(1, 2)]


class TestInvert:
    def test_affine(self):
        assert equals(invert(affine_map(REALS, 1, 1)), affine_map(REALS, 1, -1))

    def test_mobius_on_unit(self):
        f = PiecewiseMap.single(UNIT, FracLinear(1, 0, -1, 1))
        fi = invert(f)
        assert fi.dom == Dom(F(0), POS_INF, True)
        assert fi.pieces[0].fn == FracLinear(1, 0, 1, 1)

    def test_constant_piece_rejected(self):
        f = PiecewiseMap(
            Dom(F(0), POS_INF, True),
            (
                Piece(F(0), F(1), FracLinear.const(1)),
                Piece(F(1), POS_INF, FracLinear.affine(1, 0)),
            ),
        )
        with pytest.raises(NotBijective):
            invert(f)

    def test_jump_rejected(self):
        f = PiecewiseMap(
            REALS,
            (
                Piece(NEG_INF, F(0), FracLinear.affine(1, 0)),
                Piece(F(0), POS_INF, FracLinear.affine(1, 1)),
            ),
        )
        with pytest.raises(NotBijective):
            invert(f)

    def test_periodic_round_trip(self):
        rng = random.Random(11)
        for _ in range(25):
            f = rand_homeo_circle(rng)
            fi = invert(f)
            assert equals(
                compose(f, fi), PiecewiseMap.single(UNIT, FracLinear.identity(), True)
            )


class TestEquals:
    def test_resplit_is_canonicalized(self):
        one = affine_map(REALS, 1, 1)
        split = PiecewiseMap(
            REALS,
            (
                Piece(NEG_INF, F(5), FracLinear.affine(1, 1)),
                Piece(F(5), POS_INF, FracLinear.affine(1, 1)),
            ),
        )
        assert equals(one, split)
        assert len(split.pieces) == 1

    def test_different_slopes(self):
        assert not equals(affine_map(REALS, 1, 1), affine_map(REALS, 2, 1))

    def test_pushed_translation_is_first_family_piece(self):
        # conjugating 2t+1 by t -> t/(1+t) gives the map with length 1/2 - t/2
        half = Dom(F(0), POS_INF, True)
        lam = affine_map(half, 2, 1)
        f = PiecewiseMap.single(half, FracLinear(1, 0, 1, 1))
        pushed = compose(f, compose(lam, invert(f)))
        assert equals(pushed, affine_map(Dom(F(0), F(1), True), F(1, 2), F(1, 2)))


class TestProperties:
    def test_left_limit_below_eval(self):
        rng = random.Random(5)
        for _ in range(40):
            f = rand_homeo_half_line(rng)
            for _ in range(10):
                t = F(rng.randrange(1, 64), 8)
                assert f.left_limit(t) <= f.eval(t)

    def test_compose_associative(self):
        rng = random.Random(6)
        for _ in range(30):
            f = rand_homeo_full_line(rng)
            g = rand_homeo_full_line(rng)
            h = rand_homeo_full_line(rng)
            assert equals(compose(compose(f, g), h), compose(f, compose(g, h)))

    def test_double_invert(self):
        rng = random.Random(7)
        for _ in range(30):
            f = rand_homeo_full_line(rng)
            assert equals(invert(invert(f)), f)
        for _ in range(30):
            f = rand_homeo_circle(rng)
            assert equals(invert(invert(f)), f)

    def test_periodic_eval_translation(self):
        rng = random.Random(8)
        k = kappa_n_successor(3)
        for _ in range(1000):
            t = F(rng.randrange(-400, 400), rng.randrange(1, 40))
            assert k.eval(t + 1) == k.eval(t) + 1

    def test_canonicalization_idempotent(self):
        rng = random.Random(9)
        for _ in range(30):
            f = rand_homeo_half_line(rng)
            again = PiecewiseMap(f.dom, f.pieces, f.periodic)
            assert equals(f, again)
            assert equals(again, PiecewiseMap(again.dom, again.pieces, again.periodic))
