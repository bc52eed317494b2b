"""Finite-dimensional serial algebras and their embedding into circle profiles.

A basic connected serial algebra over the cyclic quiver with n vertices is
determined by the lengths (l_0, ..., l_{n-1}) of its indecomposable
projectives; an indecomposable module is determined by its top vertex and
its length.  Placing vertex i at the arc [i/n, (i+1)/n) turns the length
series into a circle profile with constant successor values (i + l_i)/n,
and each module (top a, length l) into the circle string on (a/n, (a+l)/n].
The Hom counter here works purely on the discrete strings, so it serves as
an independent oracle for the continuous machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .errors import IncompatibleModule, InvalidModule, InvalidSeries, NotGridAligned
from .interval import CLOSED, OPEN, Interval, canonical_lift
from .kupisch import CIRCLE, KupischProfile
from .pwmap import Dom, FracLinear, Piece, PiecewiseMap
from .repcat import hom_dim


@dataclass(frozen=True)
class KupischSeries:
    lengths: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "lengths", tuple(int(v) for v in self.lengths))

    @property
    def n(self) -> int:
        return len(self.lengths)

    @property
    def is_linear(self) -> bool:
        return self.lengths[-1] == 1


@dataclass(frozen=True)
class DiscreteModule:
    top: int
    length: int


def validate_series(series: KupischSeries) -> List[str]:
    """Violations of admissibility: projectives have length at least one and
    consecutive lengths (cyclically) drop by at most one, which is exactly
    what keeps the induced successor map non-decreasing."""
    out = []
    n = series.n
    if n == 0:
        return ["series must have at least one entry"]
    for i, l in enumerate(series.lengths):
        if l < 1:
            out.append(f"l_{i} = {l} < 1")
    for i, l in enumerate(series.lengths):
        nxt = series.lengths[(i + 1) % n]
        if nxt < l - 1:
            out.append(f"l_{(i + 1) % n} = {nxt} < l_{i} - 1 = {l - 1}")
    return out


def _require_valid(series: KupischSeries) -> None:
    bad = validate_series(series)
    if bad:
        raise InvalidSeries("; ".join(bad))


def _check_module(series: KupischSeries, m: DiscreteModule) -> None:
    if not 0 <= m.top < series.n:
        raise InvalidModule(f"top {m.top} outside 0..{series.n - 1}")
    if m.length < 1:
        raise InvalidModule("length must be at least 1")
    if m.length > series.lengths[m.top]:
        raise InvalidModule(
            f"length {m.length} exceeds the projective length l_{m.top} = {series.lengths[m.top]}"
        )


def associated_kupisch(series: KupischSeries) -> KupischProfile:
    """The circle profile of the series: on [i/n, (i+1)/n) the successor is
    the constant (i + l_i)/n.  Valid series always yield valid profiles with
    no separation points."""
    _require_valid(series)
    n = series.n
    pieces = [
        Piece(Fraction(i, n), Fraction(i + 1, n), FracLinear.const(Fraction(i + l, n)))
        for i, l in enumerate(series.lengths)
    ]
    successor = PiecewiseMap(
        Dom(Fraction(0), Fraction(1), True), tuple(pieces), periodic=True
    )
    return KupischProfile(CIRCLE, successor)


def embed_module(series: KupischSeries, m: DiscreteModule) -> Interval:
    """Support of the circle string realizing the module: (a/n, (a+l)/n]
    for top a and length l.  For linear series the same interval read on the
    line profile realizes the module there."""
    _require_valid(series)
    _check_module(series, m)
    n = series.n
    return Interval(
        Fraction(m.top, n), Fraction(m.top + m.length, n), OPEN, CLOSED
    )


def extract_module(series: KupischSeries, u: Interval) -> DiscreteModule:
    """Inverse of the embedding: read (a/n, b/n] back as (top a, length b-a)."""
    _require_valid(series)
    n = series.n
    u = canonical_lift(u)
    if u.lo_kind is not OPEN or u.hi_kind is not CLOSED:
        raise NotGridAligned(f"{u} is not of the form (a/n, b/n]")
    lo_scaled = u.lo * n
    hi_scaled = u.hi * n
    if lo_scaled.denominator != 1 or hi_scaled.denominator != 1:
        raise NotGridAligned(f"{u} is not aligned to the 1/{n} grid")
    a = int(lo_scaled)
    b = int(hi_scaled)
    length = b - a
    top = a % n
    if length < 1 or length > series.lengths[top]:
        raise IncompatibleModule(
            f"{u} does not fit under the projective at vertex {top}"
        )
    return DiscreteModule(top=top, length=length)


def discrete_hom_dim(series: KupischSeries, m1: DiscreteModule, m2: DiscreteModule) -> int:
    """Hom dimension between the string modules over the cyclic quiver,
    by direct enumeration and no continuous machinery.

    A morphism out of (a, l) is fixed by the image of its top generator,
    which can be any basis vector of the target at vertex a that the arrow
    path of length l kills: basis slot k of (b, m) sits at vertex (b + k)
    mod n and dies after m - k arrows, so the valid slots are the k with
    k >= m - l and b + k = a mod n."""
    _require_valid(series)
    _check_module(series, m1)
    _check_module(series, m2)
    a, l = m1.top, m1.length
    b, m = m2.top, m2.length
    count = 0
    for k in range(max(0, m - l), m):
        if (b + k - a) % series.n == 0:
            count += 1
    return count


def algebra_dim_check(series: KupischSeries) -> int:
    """Total dimension of End of the sum of all embedded projectives,
    computed with the continuous Hom machinery; equals the sum of the
    series for valid series."""
    _require_valid(series)
    projectives = [
        embed_module(series, DiscreteModule(i, l)) for i, l in enumerate(series.lengths)
    ]
    total = 0
    for p in projectives:
        for q in projectives:
            total += hom_dim(CIRCLE, p, q)
    return total


def all_modules(series: KupischSeries) -> List[DiscreteModule]:
    """Every indecomposable module of the series (each top, each length)."""
    _require_valid(series)
    return [
        DiscreteModule(i, l)
        for i, l_max in enumerate(series.lengths)
        for l in range(1, l_max + 1)
    ]
