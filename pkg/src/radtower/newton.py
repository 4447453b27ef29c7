"""Newton polygons of phi-adic developments and Ore's index machinery.

Pipeline per prime p and monic integer polynomial f: factor the reduction
of f mod p, develop f in powers of a lift phi of each irreducible factor,
take the negative-slope part of the lower convex hull of the valuation
points (the principal phi-polygon), count the positive lattice points on
or under it, and attach to each side its residual polynomial over the
residue field of phi.  These drive the index bound, the maximality test,
and the splitting dissection; an independent classical index criterion is
included as a cross-check oracle.

Conventions pinned here, used consistently by tests:
  - collinear development points belong to a side's interior (they carry
    residual coefficients); vertices are the extreme points only;
  - the lattice count ranges over abscissae within [initial, terminal]
    of the principal polygon, excluding abscissa 0 and ordinate 0;
  - a vanishing development coefficient simply contributes no point, so
    the polygon starts at the smallest abscissa with finite valuation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .finitefield import FqContext, FqPoly, factor_mod_p, fq_factor, is_separable
from .intpoly import IntPoly
from .valuation import gauss_valuation, require_prime


@dataclass(frozen=True)
class PhiDevelopment:
    """f = sum a_i(x) phi(x)^i with deg a_i < deg phi, exactly over Z."""

    phi: IntPoly
    base_poly: IntPoly
    coefficients: tuple[IntPoly, ...]

    def verify(self) -> bool:
        acc = IntPoly(())
        power = IntPoly((1,))
        for a in self.coefficients:
            acc = acc + a * power
            power = power * self.phi
        return acc == self.base_poly and all(
            a.degree < self.phi.degree for a in self.coefficients
        )


@dataclass(frozen=True)
class Side:
    """One negative-slope side: slope -h/e in lowest terms."""

    start: tuple[int, int]
    end: tuple[int, int]
    h: int
    e: int

    def __post_init__(self):
        (s, vs), (k, vk) = self.start, self.end
        if not (k > s and vs > vk >= 0):
            raise ValueError("side must run down and to the right")
        if self.h < 1 or self.e < 1 or math.gcd(self.h, self.e) != 1:
            raise ValueError("slope -h/e must be negative and in lowest terms")
        if (vs - vk) * self.e != self.h * (k - s):
            raise ValueError("slope does not match endpoints")
        if (k - s) % self.e:
            raise ValueError("e must divide the side length")

    @property
    def length(self) -> int:
        return self.end[0] - self.start[0]

    @property
    def degree(self) -> int:
        return self.length // self.e

    @property
    def slope_str(self) -> str:
        return f"-{self.h}/{self.e}"


@dataclass(frozen=True)
class NewtonPolygon:
    """Finite valuation points plus the principal (negative-slope) sides."""

    points: tuple[tuple[int, int], ...]
    sides: tuple[Side, ...]

    @property
    def is_empty(self) -> bool:
        return not self.sides


@dataclass(frozen=True)
class ResidualPoly:
    """The residual polynomial attached to a side, over the residue field."""

    side: Side
    poly: FqPoly

    def __post_init__(self):
        if self.poly.degree != self.side.degree:
            raise ValueError("residual degree must equal the side degree")
        if self.poly.coeffs[0].is_zero or self.poly.coeffs[-1].is_zero:
            raise ValueError("residual endpoints must be nonzero")


def _lower_hull(points: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Vertices of the lower convex hull; collinear middles are dropped."""
    hull: list[tuple[int, int]] = []
    for x3, y3 in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # pop while slope(P1,P2) >= slope(P2,P3)
            if (y2 - y1) * (x3 - x2) >= (y3 - y2) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append((x3, y3))
    return hull


def principal_polygon_of_points(points: list[tuple[int, int]]) -> NewtonPolygon:
    """Principal polygon of raw (abscissa, valuation) points."""
    pts = sorted(points)
    if len({x for x, _ in pts}) != len(pts):
        raise ValueError("one point per abscissa")
    hull = _lower_hull(pts)
    sides = []
    for (s, vs), (k, vk) in zip(hull, hull[1:]):
        if vk >= vs:
            break  # slopes only increase; the principal part is over
        rise, run = vs - vk, k - s
        g = math.gcd(rise, run)
        sides.append(Side((s, vs), (k, vk), rise // g, run // g))
    return NewtonPolygon(tuple(pts), tuple(sides))


def phi_development(f: IntPoly, phi: IntPoly) -> PhiDevelopment:
    """Develop f in powers of a monic phi by repeated division."""
    if not phi.is_monic:
        raise ValueError("phi must be monic")
    if phi.degree < 1:
        raise ValueError("phi must be nonconstant")
    if phi.degree > f.degree:
        raise ValueError("phi must not have larger degree than f")
    coeffs = []
    rem = f
    while True:
        quo, r = divmod(rem, phi)
        coeffs.append(r)
        if quo.is_zero:
            break
        rem = quo
    return PhiDevelopment(phi, f, tuple(coeffs))


def principal_polygon(dev: PhiDevelopment, p: int) -> NewtonPolygon:
    """Negative-slope lower hull of the points (i, v_p(a_i))."""
    require_prime(p)
    pts = []
    for i, a in enumerate(dev.coefficients):
        v = gauss_valuation(a, p)
        if not v.is_infinite:
            pts.append((i, v.value))
    return principal_polygon_of_points(pts)


def _floor_on_side(side: Side, x: int) -> int:
    (s, vs), (k, vk) = side.start, side.end
    return (vs * (k - s) + (vk - vs) * (x - s)) // (k - s)


def ind_phi(polygon: NewtonPolygon) -> int:
    """Lattice points with both coordinates >= 1 on or under the polygon."""
    if polygon.is_empty:
        return 0
    count = 0
    for side in polygon.sides:
        for x in range(max(side.start[0], 1), side.end[0] + 1):
            if x == side.start[0]:
                continue  # counted with the previous side (shared vertex)
            count += max(0, _floor_on_side(side, x))
    first = polygon.sides[0].start
    if first[0] >= 1:
        count += first[1]
    return count


def residual_polynomial(dev: PhiDevelopment, side: Side, p: int) -> ResidualPoly:
    """Residual polynomial of a side, over the residue field of (p, phi).

    Coefficient j is the reduction of a_i / p^{v(a_i)} at abscissa
    i = s + j*e when the point lies on the side, else zero.
    """
    ctx = FqContext.from_modulus_poly(dev.phi, p)
    (s, vs), (k, vk) = side.start, side.end
    out = []
    for j in range(side.degree + 1):
        i = s + j * side.e
        a = dev.coefficients[i]
        v = gauss_valuation(a, p)
        if v.is_infinite:
            out.append(ctx.zero)
            continue
        vv = v.value
        on = (vv - vs) * (k - s) == (vk - vs) * (i - s)
        if on:
            scaled = tuple(c // p ** vv for c in a.coeffs)
            out.append(ctx.elem(scaled))
        else:
            out.append(ctx.zero)
    return ResidualPoly(side, FqPoly(ctx, out))


# ----------------------------------------------------------------------
# Full per-prime analysis and its three consumers.
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class FactorAnalysis:
    """Everything attached to one irreducible factor of the reduction."""

    phi: IntPoly
    multiplicity: int
    development: PhiDevelopment
    polygon: NewtonPolygon
    residuals: tuple[ResidualPoly, ...]
    ind: int

    @property
    def all_separable(self) -> bool:
        return all(is_separable(r.poly) for r in self.residuals)


@dataclass(frozen=True)
class OreAnalysis:
    poly: IntPoly
    p: int
    factors: tuple[FactorAnalysis, ...]
    total_index: int
    exact: bool


def analyze_at_prime(f: IntPoly, p: int) -> OreAnalysis:
    """Developments, polygons, residuals and index terms for every factor."""
    require_prime(p)
    if not f.is_monic:
        raise ValueError("analysis requires a monic polynomial")
    factors = []
    total = 0
    exact = True
    for phi, mult in factor_mod_p(f, p):
        dev = phi_development(f, phi)
        polygon = principal_polygon(dev, p)
        residuals = tuple(residual_polynomial(dev, side, p) for side in polygon.sides)
        ind = ind_phi(polygon)
        fa = FactorAnalysis(phi, mult, dev, polygon, residuals, ind)
        total += ind
        exact = exact and fa.all_separable
        factors.append(fa)
    return OreAnalysis(f, p, tuple(factors), total, exact)


def ore_index(f: IntPoly, p: int) -> tuple[int, bool]:
    """(sum of ind over factors, whether every residual is separable).

    The sum lower-bounds v_p of the index of the equation order, with
    equality when the second component is True.
    """
    a = analyze_at_prime(f, p)
    return a.total_index, a.exact


def is_p_maximal_ore(f: IntPoly, p: int) -> bool:
    """Whether p does not divide the index, i.e. every ind term vanishes."""
    a = analyze_at_prime(f, p)
    if a.total_index == 0:
        # zero index forces one-sided polygons; a failure here is a bug
        for fa in a.factors:
            assert len(fa.polygon.sides) <= 1, "index 0 with a multi-sided polygon"
        return True
    return False


@dataclass(frozen=True)
class SideSplitting:
    side: Side
    separable: bool
    # (ramification index, absolute residue degree) per residual factor
    pieces: tuple[tuple[int, int], ...]

    @property
    def requires_higher_order(self) -> bool:
        return not self.separable


@dataclass(frozen=True)
class FactorDissection:
    phi: IntPoly
    multiplicity: int
    hensel: bool  # multiplicity 1: a single unramified prime for this factor
    pieces: tuple[tuple[int, int], ...]
    sides: tuple[SideSplitting, ...]


@dataclass(frozen=True)
class DissectionReport:
    poly: IntPoly
    p: int
    factors: tuple[FactorDissection, ...]
    complete: bool
    splitting: Optional[tuple[tuple[int, int], ...]]  # sorted (e, f) pairs

    def verify_degree_sum(self) -> bool:
        if self.splitting is None:
            return True
        return sum(e * fdeg for e, fdeg in self.splitting) == self.poly.degree


def dissect(f: IntPoly, p: int) -> DissectionReport:
    """Splitting shape of p in the field of a root of (irreducible) f.

    Multiplicity-1 factors of the reduction lift by Hensel to unramified
    primes.  For repeated factors each polygon side contributes primes
    with ramification index e; a side with separable residual polynomial
    splits like that polynomial, with residue degrees scaled by deg phi.
    Inseparable residuals are reported as requiring higher-order work and
    leave the aggregate splitting incomplete.
    """
    analysis = analyze_at_prime(f, p)
    out = []
    complete = True
    aggregate: list[tuple[int, int]] = []
    for fa in analysis.factors:
        if fa.multiplicity == 1:
            pieces = ((1, fa.phi.degree),)
            out.append(FactorDissection(fa.phi, 1, True, pieces, ()))
            aggregate.extend(pieces)
            continue
        side_splits = []
        factor_pieces: list[tuple[int, int]] = []
        for residual in fa.residuals:
            side = residual.side
            if not is_separable(residual.poly):
                side_splits.append(SideSplitting(side, False, ()))
                complete = False
                continue
            pieces = tuple(
                (side.e, fa.phi.degree * gamma.degree)
                for gamma, _ in fq_factor(residual.poly)
            )
            side_splits.append(SideSplitting(side, True, pieces))
            factor_pieces.extend(pieces)
        out.append(FactorDissection(
            fa.phi, fa.multiplicity, False,
            tuple(factor_pieces), tuple(side_splits),
        ))
        aggregate.extend(factor_pieces)
    splitting = tuple(sorted(aggregate)) if complete else None
    return DissectionReport(f, p, tuple(out), complete, splitting)


def dedekind_maximality(f: IntPoly, p: int) -> bool:
    """Classical index criterion, independent of the polygon machinery.

    With g the radical of f mod p, h = (f mod p)/g, and F = (g*h - f)/p,
    the prime p does not divide the index of the equation order of f
    exactly when gcd(g, h, F) is constant mod p.
    """
    if not f.is_monic:
        raise ValueError("dedekind_maximality requires a monic polynomial")
    require_prime(p)
    ctx = FqContext.prime_field(p)
    fbar = FqPoly.from_intpoly(ctx, f)
    g = IntPoly((1,))
    for phi, _ in factor_mod_p(f, p):
        g = g * phi
    gbar = FqPoly.from_intpoly(ctx, g)
    hbar = fbar // gbar
    h = IntPoly(tuple(c.coeffs[0] if c.coeffs else 0 for c in hbar.coeffs))
    diff = g * h - f
    lowered = IntPoly(tuple(c // p for c in diff.coeffs))
    fbar_low = FqPoly.from_intpoly(ctx, lowered)
    return gbar.gcd(hbar).gcd(fbar_low).degree == 0
