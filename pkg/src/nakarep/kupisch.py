"""Length profiles on the line and the circle.

A profile is a space together with its successor map K; the length function
is the derived quantity kappa(t) = K(t) - t.  K is stored rather than kappa
because K stays piecewise fractional-linear under conjugation by a
homeomorphism, while kappa does not.

Validity of a profile means: kappa > 0 everywhere, K non-decreasing (already
structural for :class:`~nakarep.pwmap.PiecewiseMap`), the closed interval
[t, K(t)] never leaves the domain, and the domain itself admits a profile
(no right-closed ends).  Validation reports violations as data instead of
raising.  Profiles are immutable and every operation is pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .errors import DegreeError, DomainError
from .pwmap import (
    NEG_INF,
    POS_INF,
    Bound,
    Dom,
    FracLinear,
    Piece,
    PiecewiseMap,
    as_rational,
    compose,
    equals,
    fmt_bound,
    invert,
    is_finite,
)


@dataclass(frozen=True)
class Line:
    domain: Dom


@dataclass(frozen=True)
class Circle:
    pass


CIRCLE = Circle()
Space = Union[Line, Circle]


@dataclass(frozen=True)
class KupischProfile:
    space: Space
    successor: PiecewiseMap

    @property
    def periodic(self) -> bool:
        return self.successor.periodic


@dataclass(frozen=True)
class SeparationSet:
    """Separation points; for periodic profiles the representatives in
    [0, 1), the full set being points + Z."""

    points: Tuple[Fraction, ...]
    periodic: bool

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)


class Shape(Enum):
    HALF_LINE_LIKE = "half-line"
    LINE_LIKE = "line"
    CIRCLE_WHOLE = "circle"


@dataclass(frozen=True)
class ComponentDescriptor:
    index: int
    left: Bound
    right: Bound
    shape: Shape
    periodic: bool = False


# ----- profile constructors ----------------------------------------------


def line_profile(dom: Dom, successor: PiecewiseMap) -> KupischProfile:
    return KupischProfile(Line(dom), successor)


def circle_profile(successor: PiecewiseMap) -> KupischProfile:
    return KupischProfile(CIRCLE, successor)


# ----- validation ---------------------------------------------------------


def validate_profile(profile: KupischProfile) -> List[str]:
    """All invariant violations, empty iff the profile is valid."""
    out: List[str] = []
    k = profile.successor
    if isinstance(profile.space, Line):
        d = profile.space.domain
        if d.hi_closed:
            out.append(f"domain {d}: right-closed domain inadmissible")
        if k.periodic:
            if is_finite(d.lo) or is_finite(d.hi):
                out.append("periodic successor requires the domain (-inf, +inf)")
        elif k.dom != d.open_right():
            out.append(f"successor domain {k.dom} differs from the space domain {d}")
    else:
        if not k.periodic:
            out.append("circle profile requires a periodic successor on [0/1, 1/1)")
    for piece in k.pieces:
        msg = _kappa_violation(piece, k)
        if msg:
            out.append(msg)
    if isinstance(profile.space, Line) and not k.periodic and is_finite(k.dom.hi):
        out.extend(_containment_violations(k))
    return out


def _kappa_violation(piece: Piece, k: PiecewiseMap) -> Optional[str]:
    """Check K(t) - t > 0 on the piece by exact sign analysis of the rational
    function (a t + b)/(c t + d) - t, whose numerator is a quadratic."""
    fn = piece.fn
    # sign of the denominator c t + d is constant on the piece
    if fn.c == 0:
        s = 1
    else:
        pole = fn.pole
        if is_finite(piece.lo) and piece.lo != pole:
            t_s = piece.lo
        elif is_finite(piece.hi) and piece.hi != pole:
            t_s = piece.hi
        elif is_finite(piece.lo):
            t_s = piece.lo + 1
        else:
            t_s = piece.hi - 1
        s = 1 if fn.c * t_s + fn.d > 0 else -1
    qa = -s * fn.c
    qb = s * (fn.a - fn.d)
    qc = s * fn.b
    lo_included = not (piece.lo == k.dom.lo and not k.dom.lo_closed and not k.periodic)
    if _positive_on(qa, qb, qc, piece.lo, piece.hi, lo_included):
        return None
    return f"piece {piece}: kappa <= 0 somewhere on the piece"


def _quad(qa: Fraction, qb: Fraction, qc: Fraction, t: Fraction) -> Fraction:
    return qa * t * t + qb * t + qc


def _positive_on(qa, qb, qc, lo: Bound, hi: Bound, lo_included: bool) -> bool:
    """Whether the quadratic is strictly positive on [lo, hi) (or (lo, hi)
    when the left end is excluded), with exact rational comparisons only."""
    if qa == 0 and qb == 0:
        return qc > 0
    if is_finite(lo):
        v = _quad(qa, qb, qc, lo)
        if lo_included:
            if v <= 0:
                return False
        else:
            if v < 0:
                return False
            if v == 0:
                slope = 2 * qa * lo + qb
                if slope < 0 or (slope == 0 and qa <= 0):
                    return False
    else:
        if qa < 0 or (qa == 0 and qb > 0):
            return False
    if is_finite(hi):
        if _quad(qa, qb, qc, hi) < 0:
            return False
    else:
        if qa < 0 or (qa == 0 and qb < 0):
            return False
    if qa > 0:
        vertex = Fraction(-qb, 2 * qa)
        if lo < vertex < hi and _quad(qa, qb, qc, vertex) <= 0:
            return False
    return True


def _containment_violations(k: PiecewiseMap) -> List[str]:
    """[t, K(t)] must stay inside the (right-open, bounded) domain."""
    out = []
    hi = k.dom.hi
    for piece in k.pieces:
        if piece.fn.pole == piece.hi:
            out.append(f"piece {piece}: K escapes to +inf inside the domain")
            continue
        limit = piece.fn(piece.hi)
        if limit > hi or (limit == hi and piece.fn.is_constant):
            out.append(f"piece {piece}: [t, K(t)] leaves the domain {k.dom}")
    return out


# ----- pointwise data ------------------------------------------------------


def kappa_at(profile: KupischProfile, t) -> Fraction:
    """The length kappa(t) = K(t) - t."""
    t = as_rational(t)
    return profile.successor.eval(t) - t


def orbit(profile: KupischProfile, t, n: int) -> List[Fraction]:
    """[t, K(t), ..., K^n(t)], strictly increasing for valid profiles.
    Circle orbits are computed on the line lift."""
    t = as_rational(t)
    out = [t]
    for _ in range(n):
        t = profile.successor.eval(t)
        out.append(t)
    return out


# ----- separation points ---------------------------------------------------


def separation_points(profile: KupischProfile) -> SeparationSet:
    """Interior points where the length vanishes from the left and no earlier
    point reaches them: left_limit(K, c) == c with K not constantly c on a
    left neighbourhood.  Since kappa is positive inside every piece, the only
    candidates are breakpoints, which keeps the search finite and exact."""
    k = profile.successor
    found = []
    if k.periodic:
        candidates = [Fraction(0)] + k.breakpoints()
        for c in candidates:
            left_fn = k.pieces[k._locate(c) - 1].fn if c != 0 else k.pieces[-1].fn
            shift = -1 if c == 0 else 0
            if left_fn(c - shift) + shift != c:
                continue
            if left_fn.is_constant and left_fn.b + shift == c:
                continue
            found.append(c)
    else:
        for c in k.breakpoints():
            idx = k._locate(c)
            left_fn = k.pieces[idx - 1].fn
            if left_fn(c) != c:
                continue
            if left_fn.is_constant and left_fn.b == c:
                continue
            found.append(c)
    return SeparationSet(tuple(sorted(found)), k.periodic)


def next_separation(profile: KupischProfile, c) -> Bound:
    """min { s in the separation set : s > c }, or the domain's supremum
    (+inf when unbounded) when there is none."""
    c = as_rational(c)
    k = profile.successor
    if not k.periodic and not k.dom.contains(c):
        raise DomainError(f"{fmt_bound(c)} outside domain {k.dom}")
    seps = separation_points(profile)
    if seps.periodic:
        if not seps.points:
            return POS_INF
        best = None
        for r in seps.points:
            cand = r + math.floor(c - r) + 1
            if best is None or cand < best:
                best = cand
        return best
    later = [s for s in seps.points if s > c]
    if later:
        return min(later)
    return k.dom.hi if is_finite(k.dom.hi) else POS_INF


# ----- orthogonal components -----------------------------------------------


def components(profile: KupischProfile) -> List[ComponentDescriptor]:
    """The orthogonal components cut out by the separation points.

    Circle: one whole-circle component when at most one separation point
    lies in a period, else one half-line-like component per consecutive
    pair.  Line: the strip between consecutive separation points, plus the
    part left of the first one; a periodic line profile reports one period,
    flagged periodic.
    """
    k = profile.successor
    seps = separation_points(profile)
    pts = list(seps.points)
    if isinstance(profile.space, Circle):
        if len(pts) <= 1:
            left = pts[0] if pts else Fraction(0)
            return [ComponentDescriptor(0, left, left + 1, Shape.CIRCLE_WHOLE)]
        out = []
        for j, c in enumerate(pts):
            right = pts[j + 1] if j + 1 < len(pts) else pts[0] + 1
            out.append(ComponentDescriptor(j, c, right, Shape.HALF_LINE_LIKE))
        return out
    dom = k.dom if not k.periodic else Dom(NEG_INF, POS_INF, False)
    if seps.periodic and pts:
        out = []
        for j, c in enumerate(pts):
            right = pts[j + 1] if j + 1 < len(pts) else pts[0] + 1
            out.append(ComponentDescriptor(j, c, right, Shape.HALF_LINE_LIKE, periodic=True))
        return out
    whole_shape = Shape.HALF_LINE_LIKE if dom.lo_closed else Shape.LINE_LIKE
    if not pts:
        return [ComponentDescriptor(0, dom.lo, dom.hi, whole_shape)]
    out = [ComponentDescriptor(0, dom.lo, pts[0], whole_shape)]
    for j, c in enumerate(pts):
        right = pts[j + 1] if j + 1 < len(pts) else dom.hi
        out.append(ComponentDescriptor(j + 1, c, right, Shape.HALF_LINE_LIKE))
    return out


# ----- push-forward and conjugacy ------------------------------------------


def push_forward(profile: KupischProfile, f: PiecewiseMap) -> KupischProfile:
    """Transport the profile along an orientation-preserving homeomorphism:
    the new successor is the exact composite f o K o f^{-1}.

    f must be a strictly increasing bijection off the profile's domain; on
    the circle it must be given as a degree-one lift (periodic pieces).
    """
    k = profile.successor
    if isinstance(profile.space, Circle):
        if not f.periodic:
            raise DegreeError("circle homeomorphisms are given by periodic degree-1 lifts")
        new_k = compose(f, compose(k, invert(f)))
        result = KupischProfile(CIRCLE, new_k)
    else:
        if f.periodic != k.periodic:
            raise DomainError("homeomorphism and successor must both be periodic or both not")
        if not f.periodic and f.dom != k.dom:
            raise DomainError(
                f"homeomorphism domain {f.dom} differs from profile domain {k.dom}"
            )
        f_inv = invert(f)
        new_k = compose(f, compose(k, f_inv))
        new_dom = Dom(NEG_INF, POS_INF, False) if f.periodic else f_inv.dom
        result = KupischProfile(Line(new_dom), new_k)
    bad = validate_profile(result)
    if bad:
        raise DomainError("push-forward produced an invalid profile: " + "; ".join(bad))
    return result


def verify_conjugacy(
    f: PiecewiseMap, source: KupischProfile, target: KupischProfile
) -> bool:
    """True iff pushing the source along f lands exactly on the target."""
    pushed = push_forward(source, f)
    if pushed.space != target.space:
        return False
    return equals(pushed.successor, target.successor)


# ----- normal form of the underlying space ----------------------------------


def normalize_profile(profile: KupischProfile) -> Tuple[KupischProfile, PiecewiseMap]:
    """An equivalent profile on [0, +inf) (half-open domains) or on
    (-inf, +inf) (open domains), together with the fractional-linear
    homeomorphism used as witness.

    The witness choices are fixed: [a, b) maps by t -> (t - a)/(b - t);
    [a, +inf) by t -> t - a; open bounded (a, b) uses the two-piece map
    t -> (t - m)/(t - a) then t -> (t - m)/(b - t) around the midpoint m;
    half-infinite open domains combine one such piece with an affine tail.
    """
    if isinstance(profile.space, Circle):
        raise DomainError("only line profiles have a normal form on the line")
    dom = profile.successor.dom if not profile.periodic else Dom(NEG_INF, POS_INF, False)
    if dom == Dom(NEG_INF, POS_INF, False) or dom == Dom(Fraction(0), POS_INF, True):
        if profile.periodic:
            witness = PiecewiseMap.single(
                Dom(Fraction(0), Fraction(1), True), FracLinear.identity(), periodic=True
            )
        else:
            witness = PiecewiseMap.identity(dom)
        return profile, witness
    lo, hi = dom.lo, dom.hi
    if dom.lo_closed:
        if is_finite(hi):
            fn = FracLinear(1, -lo, -1, hi)
            witness = PiecewiseMap.single(dom, fn)
        else:
            witness = PiecewiseMap.single(dom, FracLinear.affine(1, -lo))
    else:
        if is_finite(lo) and is_finite(hi):
            m = (lo + hi) / 2
            witness = PiecewiseMap.from_pieces(
                dom,
                [
                    (lo, m, FracLinear(1, -m, 1, -lo)),
                    (m, hi, FracLinear(1, -m, -1, hi)),
                ],
            )
        elif is_finite(lo):
            m = lo + 1
            witness = PiecewiseMap.from_pieces(
                dom,
                [
                    (lo, m, FracLinear(1, -m, 1, -lo)),
                    (m, POS_INF, FracLinear.affine(1, -m)),
                ],
            )
        else:
            m = hi - 1
            witness = PiecewiseMap.from_pieces(
                dom,
                [
                    (NEG_INF, m, FracLinear.affine(1, -m)),
                    (m, hi, FracLinear(1, -m, -1, hi)),
                ],
            )
    return push_forward(profile, witness), witness
