"""Exact arithmetic for increasing piecewise fractional-linear maps.

Every number is an arbitrary-precision rational (``fractions.Fraction``);
domain ends may be ``+-math.inf``.  Comparisons between ``Fraction`` and the
infinities are exact, and no arithmetic is ever performed on an infinite
bound, so nothing in this module rounds.

A :class:`PiecewiseMap` is a finite list of left-closed right-open pieces,
each carrying a fractional-linear formula ``t -> (a*t + b)/(c*t + d)``.
Periodic maps store one period of pieces on ``[0, 1)`` and extend by
``F(t + 1) = F(t) + 1``.  All values are immutable and all operations are
pure, so concurrent use needs no synchronization.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import DomainError, NotBijective

Rational = Fraction
Bound = Union[Fraction, float]  # the float is only ever +-math.inf

NEG_INF: Bound = -math.inf
POS_INF: Bound = math.inf


def is_finite(b: Bound) -> bool:
    return isinstance(b, Fraction)


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) or isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected a rational, got {x!r}")


def as_bound(x) -> Bound:
    if isinstance(x, float):
        if x == POS_INF or x == NEG_INF:
            return x
        raise TypeError("finite bounds must be exact rationals, not floats")
    return as_rational(x)


def fmt_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def fmt_bound(b: Bound) -> str:
    if is_finite(b):
        return fmt_rational(b)
    return "+inf" if b > 0 else "-inf"


@dataclass(frozen=True)
class FracLinear:
    """The map ``t -> (a*t + b)/(c*t + d)``, stored in a normal form.

    Normal forms: constants are ``(0, v, 0, 1)``; affine maps are
    ``(m, q, 0, 1)`` with ``m > 0``; everything else has ``c = 1`` and
    determinant ``a*d - b*c > 0``.  Decreasing maps are rejected, so equal
    maps always compare equal structurally.
    """

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        a, b, c, d = (as_rational(v) for v in (self.a, self.b, self.c, self.d))
        if c == 0 and d == 0:
            raise ValueError("fractional-linear map with zero denominator")
        det = a * d - b * c
        if det < 0:
            raise ValueError("decreasing fractional-linear map")
        if det == 0:
            # rows are proportional: the map is constant away from the pole
            v = a / c if c != 0 else b / d
            a, b, c, d = Fraction(0), v, Fraction(0), Fraction(1)
        elif c == 0:
            a, b, d = a / d, b / d, Fraction(1)
        else:
            a, b, d, c = a / c, b / c, d / c, Fraction(1)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    @classmethod
    def affine(cls, slope, intercept) -> "FracLinear":
        return cls(as_rational(slope), as_rational(intercept), Fraction(0), Fraction(1))

    @classmethod
    def const(cls, value) -> "FracLinear":
        return cls(Fraction(0), as_rational(value), Fraction(0), Fraction(1))

    @classmethod
    def identity(cls) -> "FracLinear":
        return cls.affine(1, 0)

    @property
    def is_affine(self) -> bool:
        return self.c == 0

    @property
    def is_constant(self) -> bool:
        return self.c == 0 and self.a == 0

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    @property
    def pole(self) -> Optional[Fraction]:
        return None if self.c == 0 else -self.d

    def __call__(self, t) -> Fraction:
        t = as_rational(t)
        return (self.a * t + self.b) / (self.c * t + self.d)

    def compose(self, other: "FracLinear") -> "FracLinear":
        """self after other, as the matrix product of the coefficient matrices."""
        return FracLinear(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "FracLinear":
        if self.det == 0:
            raise NotBijective("constant formula has no inverse")
        return FracLinear(self.d, -self.b, -self.c, self.a)

    def shifted(self, n: int) -> "FracLinear":
        """The conjugate ``t -> self(t - n) + n`` by the integer translation."""
        t_fwd = FracLinear.affine(1, n)
        t_back = FracLinear.affine(1, -n)
        return t_fwd.compose(self.compose(t_back))

    def preimage(self, w: Fraction) -> Optional[Fraction]:
        """Solve ``self(t) == w`` exactly; None when w is the unattained limit."""
        den = self.a - w * self.c
        if den == 0:
            return None
        return (w * self.d - self.b) / den


@dataclass(frozen=True)
class Dom:
    """An interval of definition.  The right end is closed only for spaces
    that validation must be able to reject; maps never carry a closed right
    end."""

    lo: Bound
    hi: Bound
    lo_closed: bool
    hi_closed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lo", as_bound(self.lo))
        object.__setattr__(self, "hi", as_bound(self.hi))
        if not self.lo < self.hi:
            raise ValueError("empty domain")
        if self.lo_closed and not is_finite(self.lo):
            raise ValueError("infinite end cannot be closed")
        if self.hi_closed and not is_finite(self.hi):
            raise ValueError("infinite end cannot be closed")

    def contains(self, t: Fraction) -> bool:
        if t < self.lo or (t == self.lo and not self.lo_closed):
            return False
        if t > self.hi or (t == self.hi and not self.hi_closed):
            return False
        return True

    def open_right(self) -> "Dom":
        return Dom(self.lo, self.hi, self.lo_closed, False)

    def __str__(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{fmt_bound(self.lo)}, {fmt_bound(self.hi)}{right}"


REALS = Dom(NEG_INF, POS_INF, False)
HALF_LINE = Dom(Fraction(0), POS_INF, True)
UNIT = Dom(Fraction(0), Fraction(1), True)


@dataclass(frozen=True)
class Piece:
    lo: Bound
    hi: Bound
    fn: FracLinear

    def __post_init__(self):
        object.__setattr__(self, "lo", as_bound(self.lo))
        object.__setattr__(self, "hi", as_bound(self.hi))

    def __str__(self) -> str:
        return f"[{fmt_bound(self.lo)}, {fmt_bound(self.hi)})"


@dataclass(frozen=True)
class PiecewiseMap:
    """A non-decreasing piecewise fractional-linear map in canonical form.

    Pieces are contiguous, cover exactly ``dom`` (read right-open), and
    adjacent pieces with the same formula are merged on construction.
    Within a piece the formula is strictly increasing or constant; across a
    breakpoint the left limit never exceeds the value, so jumps only go up.
    A pole may sit at a piece end only where the domain itself ends there.
    """

    dom: Dom
    pieces: tuple
    periodic: bool = False

    def __post_init__(self):
        pieces = tuple(self.pieces)
        if not pieces:
            raise ValueError("a map needs at least one piece")
        if self.dom.hi_closed:
            raise ValueError("map domains are always right-open")
        if self.periodic and self.dom != UNIT:
            raise ValueError("periodic maps carry their pieces on [0/1, 1/1)")
        if pieces[0].lo != self.dom.lo or pieces[-1].hi != self.dom.hi:
            raise ValueError("pieces do not cover the domain")
        for prev, cur in zip(pieces, pieces[1:]):
            if prev.hi != cur.lo:
                raise ValueError("pieces are not contiguous")
        for p in pieces:
            if not p.lo < p.hi:
                raise ValueError("empty piece")
        # canonical form: merge neighbours sharing one formula
        merged = [pieces[0]]
        for p in pieces[1:]:
            if p.fn == merged[-1].fn:
                merged[-1] = Piece(merged[-1].lo, p.hi, p.fn)
            else:
                merged.append(p)
        pieces = tuple(merged)
        for p in pieces:
            self._check_piece(p)
        for prev, cur in zip(pieces, pieces[1:]):
            u = cur.lo
            if prev.fn(u) > cur.fn(u):
                raise ValueError(f"map decreases across the breakpoint {fmt_bound(u)}")
        if self.periodic:
            last, first = pieces[-1], pieces[0]
            if last.fn(Fraction(1)) > first.fn(Fraction(0)) + 1:
                raise ValueError("map decreases across the period wrap")
        object.__setattr__(self, "pieces", pieces)

    def _check_piece(self, p: Piece) -> None:
        pole = p.fn.pole
        if pole is None:
            return
        if p.lo < pole < p.hi:
            raise ValueError(f"pole {fmt_rational(pole)} inside piece {p}")
        if pole == p.lo and not (p.lo == self.dom.lo and not self.dom.lo_closed):
            raise ValueError(f"pole at the left end of piece {p}")
        if pole == p.hi and not (p.hi == self.dom.hi and not self.periodic):
            raise ValueError(f"pole at the right end of piece {p}")

    # ----- constructors -------------------------------------------------

    @classmethod
    def single(cls, dom: Dom, fn: FracLinear, periodic: bool = False) -> "PiecewiseMap":
        return cls(dom, (Piece(dom.lo, dom.hi, fn),), periodic)

    @classmethod
    def identity(cls, dom: Dom) -> "PiecewiseMap":
        return cls.single(dom, FracLinear.identity())

    @classmethod
    def from_pieces(cls, dom: Dom, triples, periodic: bool = False) -> "PiecewiseMap":
        return cls(dom, tuple(Piece(lo, hi, fn) for lo, hi, fn in triples), periodic)

    # ----- lookup -------------------------------------------------------

    def _los(self):
        return [p.lo for p in self.pieces]

    def _locate(self, t: Fraction) -> int:
        idx = bisect_right(self._los(), t) - 1
        if idx < 0 or not (self.pieces[idx].lo <= t < self.pieces[idx].hi):
            raise DomainError(f"{fmt_rational(t)} is not covered by any piece")
        return idx

    def eval(self, t) -> Fraction:
        """Exact value at t; periodic maps unfold by F(t + n) = F(t) + n."""
        t = as_rational(t)
        if self.periodic:
            n = math.floor(t)
            return self.pieces[self._locate(t - n)].fn(t - n) + n
        if not self.dom.contains(t):
            raise DomainError(f"{fmt_rational(t)} outside domain {self.dom}")
        return self.pieces[self._locate(t)].fn(t)

    def left_limit(self, t) -> Bound:
        """Limit from the left at t, as the continuous extension of the piece
        left of t.  For in-domain t the result is rational; at a right domain
        end whose formula has its pole there the limit is +inf."""
        t = as_rational(t)
        if self.periodic:
            n = math.floor(t)
            tau = t - n
            if tau == 0:
                return self.pieces[-1].fn(Fraction(1)) + (n - 1)
            idx = self._locate(tau)
            if tau == self.pieces[idx].lo:
                idx -= 1
            return self.pieces[idx].fn(tau) + n
        if t <= self.dom.lo:
            raise DomainError("no points to the left of the domain's left end")
        if t > self.dom.hi:
            raise DomainError(f"{fmt_rational(t)} outside domain {self.dom}")
        if t == self.dom.hi:
            last = self.pieces[-1]
            if last.fn.pole == t:
                return POS_INF
            return last.fn(t)
        idx = self._locate(t)
        if t == self.pieces[idx].lo:
            idx -= 1
        return self.pieces[idx].fn(t)

    def right_limit(self, t) -> Bound:
        """Limit from the right; equals eval inside the domain, and extends
        to an open left end (where it may be -inf at a pole)."""
        t = as_rational(t)
        if self.periodic:
            return self.eval(t)
        if t == self.dom.lo and not self.dom.lo_closed:
            first = self.pieces[0]
            if first.fn.pole == t:
                return NEG_INF
            return first.fn(t)
        return self.eval(t)

    # ----- range --------------------------------------------------------

    def range_info(self):
        """(lo, lo_attained, hi, hi_attained) of the image, for flat maps."""
        if self.periodic:
            raise ValueError("range_info is for non-periodic maps")
        first, last = self.pieces[0], self.pieces[-1]
        if not is_finite(self.dom.lo):
            if first.fn.is_constant:
                lo, lo_att = first.fn.b, True
            elif first.fn.is_affine:
                lo, lo_att = NEG_INF, False
            else:
                # increasing toward the horizontal asymptote from above
                lo, lo_att = first.fn.a, False
        elif first.fn.pole == self.dom.lo:
            lo, lo_att = NEG_INF, False
        else:
            lo, lo_att = first.fn(self.dom.lo), self.dom.lo_closed
            if first.fn.is_constant:
                lo_att = True
        if not is_finite(self.dom.hi):
            if last.fn.is_constant:
                hi, hi_att = last.fn.b, True
            elif last.fn.is_affine:
                hi, hi_att = POS_INF, False
            else:
                hi, hi_att = last.fn.a, False
        elif last.fn.pole == self.dom.hi:
            hi, hi_att = POS_INF, False
        else:
            hi, hi_att = last.fn(self.dom.hi), last.fn.is_constant
        return lo, lo_att, hi, hi_att

    def _range_within(self, dom: Dom) -> bool:
        lo, lo_att, hi, hi_att = self.range_info()
        if lo < dom.lo or (lo == dom.lo and lo_att and not dom.lo_closed):
            return False
        if hi > dom.hi or (hi == dom.hi and hi_att):
            return False
        return True

    def breakpoints(self):
        """Interior breakpoints (piece starts except the domain's left end)."""
        return [p.lo for p in self.pieces[1:]]

    def _unfold(self, n_lo: int, n_hi: int):
        """Pieces of the periodic extension covering [n_lo, n_hi)."""
        out = []
        for n in range(n_lo, n_hi):
            for p in self.pieces:
                out.append(Piece(p.lo + n, p.hi + n, p.fn.shifted(n)))
        return out


# ----- operations -------------------------------------------------------


def compose(f: PiecewiseMap, g: PiecewiseMap) -> PiecewiseMap:
    """The composite f(g(t)) on g's domain, in canonical form.

    Breakpoints of the result are g's breakpoints together with the
    g-preimages of f's breakpoints.  Both maps must be periodic or both
    flat; the image of g must stay inside f's domain.
    """
    if f.periodic != g.periodic:
        raise DomainError("cannot compose a periodic with a non-periodic map")
    if f.periodic:
        g0 = g.eval(Fraction(0))
        base = math.floor(g0)
        window = Dom(Fraction(base), Fraction(base + 2), True)
        f_flat = PiecewiseMap(window, tuple(f._unfold(base, base + 2)))
        g_flat = PiecewiseMap(UNIT, g.pieces)
        comp = _compose_flat(f_flat, g_flat)
        return PiecewiseMap(UNIT, comp.pieces, periodic=True)
    return _compose_flat(f, g)


def _compose_flat(f: PiecewiseMap, g: PiecewiseMap) -> PiecewiseMap:
    if not g._range_within(f.dom):
        raise DomainError("image of the inner map leaves the outer map's domain")
    out = []
    bps = f.breakpoints()
    for piece in g.pieces:
        if piece.fn.is_constant:
            out.append(Piece(piece.lo, piece.hi, FracLinear.const(f.eval(piece.fn.b))))
            continue
        cuts = [piece.lo]
        for w in bps:
            t = piece.fn.preimage(w)
            if t is not None and piece.lo < t < piece.hi:
                cuts.append(t)
        cuts = sorted(set(cuts)) + [piece.hi]
        for s0, s1 in zip(cuts, cuts[1:]):
            out.append(Piece(s0, s1, _outer_formula(f, piece.fn, s0, s1).compose(piece.fn)))
    return PiecewiseMap(g.dom, tuple(out))


def _outer_formula(f: PiecewiseMap, gp: FracLinear, s0: Bound, s1: Bound) -> FracLinear:
    """The single formula of f covering gp((s0, s1)); the cut points ensure
    the image meets no interior breakpoint of f."""
    if is_finite(s0) and gp.pole != s0:
        v = gp(s0)
    elif is_finite(s0) and is_finite(s1):
        v = gp((s0 + s1) / 2)
    elif is_finite(s1):
        v = gp(s1 - 1)
    elif is_finite(s0):
        v = gp(s0 + 1)
    else:
        v = gp(Fraction(0))
    return f.pieces[f._locate(v)].fn


def invert(f: PiecewiseMap) -> PiecewiseMap:
    """Exact inverse of a strictly increasing continuous surjection."""
    for p in f.pieces:
        if p.fn.is_constant:
            raise NotBijective(f"constant piece {p} has no inverse")
    for prev, cur in zip(f.pieces, f.pieces[1:]):
        if prev.fn(cur.lo) != cur.fn(cur.lo):
            raise NotBijective(f"jump at {fmt_bound(cur.lo)} leaves a gap in the range")
    if f.periodic:
        if f.pieces[-1].fn(Fraction(1)) != f.pieces[0].fn(Fraction(0)) + 1:
            raise NotBijective("lift is not continuous across the period wrap")
        return _invert_periodic(f)
    lo, lo_att, hi, _hi_att = f.range_info()
    raw = []
    for p in f.pieces:
        v0 = _image_left(f, p)
        v1 = _image_right(f, p)
        raw.append(Piece(v0, v1, p.fn.inverse()))
    dom = Dom(lo, hi, lo_closed=bool(lo_att))
    return PiecewiseMap(dom, tuple(raw))


def _image_left(f: PiecewiseMap, p: Piece) -> Bound:
    if not is_finite(p.lo):
        return NEG_INF if p.fn.is_affine else p.fn.a
    if p.fn.pole == p.lo:
        return NEG_INF
    return p.fn(p.lo)


def _image_right(f: PiecewiseMap, p: Piece) -> Bound:
    if not is_finite(p.hi):
        return POS_INF if p.fn.is_affine else p.fn.a
    if p.fn.pole == p.hi:
        return POS_INF
    return p.fn(p.hi)


def _invert_periodic(f: PiecewiseMap) -> PiecewiseMap:
    # inverse pieces tile [f(0), f(0) + 1); translate them back onto [0, 1)
    raw = [Piece(p.fn(p.lo), p.fn(p.hi), p.fn.inverse()) for p in f.pieces]
    h = f.pieces[0].fn(Fraction(0))
    out = []
    for p in raw:
        for n in range(-math.floor(h) - 1, -math.floor(h) + 2):
            lo, hi = p.lo + n, p.hi + n
            clo, chi = max(lo, Fraction(0)), min(hi, Fraction(1))
            if clo < chi:
                out.append(Piece(clo, chi, p.fn.shifted(n)))
    out.sort(key=lambda p: p.lo)
    return PiecewiseMap(UNIT, tuple(out), periodic=True)


def equals(f: PiecewiseMap, g: PiecewiseMap) -> bool:
    """Canonical forms coincide piece by piece."""
    return f == g
