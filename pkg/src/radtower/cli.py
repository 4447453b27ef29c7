"""Command-line interface.

Subcommands: analyze, polygon, dissect, orbit, factor.  Exit codes for
``analyze``: 0 when every level is monogenic, 1 when any level is
definitively not, 2 when any level is unknown; usage and domain errors
exit 64 for every subcommand.  ``--json`` switches to a single structured
document on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional

from ._version import __version__
from .factorint import DEFAULT_BUDGET, EFFORT_BUDGETS, Budget, CofactorStatus, factor
from .finitefield import FqContext, is_separable
from .intpoly import IntPoly, orbit_constants
from .monogenic import (
    FermatCertificate,
    SquareDividesConstant,
    TowerReport,
    UnknownSquarefreeCertificate,
    Verdict,
    analyze_tower,
)
from .newton import (
    analyze_at_prime,
    dissect,
    ind_phi,
    phi_development,
    principal_polygon,
    residual_polynomial,
)
from .polyparse import PolyParseError, parse_poly, render_poly
from .report import (
    PolygonEntry,
    PolygonReport,
    OrbitReport,
    dissection_to_doc,
    factorization_to_doc,
    orbit_report_to_doc,
    polygon_report_to_doc,
    tower_report_to_doc,
)
from .valuation import require_prime

EXIT_OK = 0
EXIT_NOT_MONOGENIC = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _budget_from_args(args) -> tuple[Budget, str]:
    effort = getattr(args, "effort", "default")
    budget = EFFORT_BUDGETS[effort]
    seed = getattr(args, "seed", None)
    if seed is not None:
        budget = budget.with_seed(seed)
    return budget, effort


def _emit(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


# ----------------------------------------------------------------------
# analyze
# ----------------------------------------------------------------------


def _describe_certificate(cert) -> str:
    if isinstance(cert, FermatCertificate):
        v = "infinity" if cert.valuation is None else cert.valuation
        return f"v_{cert.prime}(a^{cert.prime} - a) = {v} (needs 1)"
    if isinstance(cert, SquareDividesConstant):
        return (f"{cert.prime}^{cert.valuation} divides f^{cert.iterate}(0)")
    if isinstance(cert, UnknownSquarefreeCertificate):
        return (f"squarefree status of f^{cert.iterate}(0) unknown "
                f"(searched to {cert.searched_bound})")
    return ""


def _render_tower_text(report: TowerReport) -> None:
    f_str = render_poly(IntPoly.radical(report.p, report.a))
    print(f"tower of {f_str}: levels 1..{report.n_max}")
    v = report.fermat_valuation
    v_str = "infinity" if v.is_infinite else str(v.value)
    if report.fermat_ok:
        print(f"fermat condition: v_{report.p}(a^{report.p} - a) = {v_str} -> "
              f"{report.p}-maximal at every level ({report.p} totally ramified)")
    else:
        print(f"fermat condition fails: v_{report.p}(a^{report.p} - a) = {v_str} >= 2")
    from .factorint import NotSquarefree, Squarefree, SquarefreeUnknown

    for verdict in report.verdicts:
        sf = verdict.squarefree
        if isinstance(sf, Squarefree):
            sf_str = "squarefree"
        elif isinstance(sf, NotSquarefree):
            sf_str = f"divisible by {sf.witness}^2"
        else:
            sf_str = f"squarefree unknown (searched to {sf.searched_bound})"
        line = (f"n={verdict.n}  {verdict.status.value:<14} "
                f"f^{verdict.n}(0): {verdict.orbit_value_digits} digits, {sf_str}")
        if verdict.certificate is not None:
            line += f"  [{_describe_certificate(verdict.certificate)}]"
        print(line)
    if report.first_failure is not None:
        print(f"first failure at n={report.first_failure}")


def _cmd_analyze(args) -> int:
    require_prime(args.p)
    if args.N < 1:
        raise _UsageError("--N must be >= 1")
    budget, effort = _budget_from_args(args)
    start = time.perf_counter()
    report = analyze_tower(args.p, args.a, args.N, budget)
    elapsed = time.perf_counter() - start
    if args.json:
        _emit(tower_report_to_doc(report, effort=effort, elapsed_seconds=elapsed))
    else:
        _render_tower_text(report)
    statuses = {v.status for v in report.verdicts}
    if Verdict.NOT_MONOGENIC in statuses:
        return EXIT_NOT_MONOGENIC
    if Verdict.UNKNOWN in statuses:
        return EXIT_UNKNOWN
    return EXIT_OK


# ----------------------------------------------------------------------
# polygon
# ----------------------------------------------------------------------


def _entry_for_phi(f: IntPoly, phi: IntPoly, p: int,
                   multiplicity: Optional[int]) -> PolygonEntry:
    dev = phi_development(f, phi)
    polygon = principal_polygon(dev, p)
    residuals = []
    try:
        FqContext.from_modulus_poly(phi, p)
        field_ok = True
    except ValueError:
        field_ok = False
    for side in polygon.sides:
        residuals.append(residual_polynomial(dev, side, p) if field_ok else None)
    return PolygonEntry(
        phi=phi,
        multiplicity=multiplicity,
        development=dev.coefficients,
        polygon=polygon,
        residuals=tuple(residuals),
        ind=ind_phi(polygon),
    )


def _build_polygon_report(f: IntPoly, p: int, phi: Optional[IntPoly]) -> PolygonReport:
    if phi is not None:
        entry = _entry_for_phi(f, phi, p, None)
        exact = None
        if all(r is not None for r in entry.residuals):
            exact = all(is_separable(r.poly) for r in entry.residuals)
        return PolygonReport(f, p, phi, (entry,), entry.ind, exact)
    analysis = analyze_at_prime(f, p)
    entries = tuple(
        PolygonEntry(
            phi=fa.phi,
            multiplicity=fa.multiplicity,
            development=fa.development.coefficients,
            polygon=fa.polygon,
            residuals=fa.residuals,
            ind=fa.ind,
        )
        for fa in analysis.factors
    )
    return PolygonReport(f, p, None, entries, analysis.total_index, analysis.exact)


def _render_polygon_text(report: PolygonReport) -> None:
    f_str = render_poly(report.poly)
    print(f"{f_str} at p={report.p}")
    if report.phi_explicit is None:
        mults = [entry.multiplicity for entry in report.entries]
        if all(m == 1 for m in mults):
            print("no principal polygon (all multiplicities 1)")
            return
    for entry in report.entries:
        mult = "" if entry.multiplicity is None else f"  (multiplicity {entry.multiplicity})"
        print(f"phi = {render_poly(entry.phi)}{mult}")
        dev = "; ".join(f"a_{i} = {render_poly(a)}" for i, a in enumerate(entry.development))
        print(f"  development: {dev}")
        pts = " ".join(f"({x},{y})" for x, y in entry.polygon.points)
        print(f"  points: {pts}")
        if not entry.polygon.sides:
            print("  principal polygon: empty")
        for side, residual in zip(entry.polygon.sides, entry.residuals):
            print(f"  side ({side.start[0]},{side.start[1]}) -> "
                  f"({side.end[0]},{side.end[1]})  slope {side.slope_str}  "
                  f"length {side.length}  degree {side.degree}")
            if residual is None:
                print("    residual: unavailable (phi is reducible mod p)")
            else:
                sep = "separable" if is_separable(residual.poly) else "NOT separable"
                print(f"    residual: {residual.poly!r} over {residual.poly.ctx!r}  [{sep}]")
        print(f"  ind = {entry.ind}")
    exact = "" if report.exact is None else (" (exact)" if report.exact else " (lower bound)")
    print(f"total index bound: {report.total_ind}{exact}")


def _cmd_polygon(args) -> int:
    f = parse_poly(args.poly)
    if not f.is_monic:
        raise _UsageError("--poly must be monic")
    require_prime(args.prime)
    phi = None
    if args.phi is not None:
        phi = parse_poly(args.phi)
        if not phi.is_monic:
            raise _UsageError("--phi must be monic")
    report = _build_polygon_report(f, args.prime, phi)
    if args.json:
        _emit(polygon_report_to_doc(report))
    else:
        _render_polygon_text(report)
    return EXIT_OK


# ----------------------------------------------------------------------
# dissect
# ----------------------------------------------------------------------


def _cmd_dissect(args) -> int:
    f = parse_poly(args.poly)
    if not f.is_monic:
        raise _UsageError("--poly must be monic")
    require_prime(args.prime)
    report = dissect(f, args.prime)
    if args.json:
        _emit(dissection_to_doc(report))
        return EXIT_OK
    print(f"{render_poly(f)} at p={args.prime}")
    for fd in report.factors:
        kind = "hensel lift" if fd.hensel else f"multiplicity {fd.multiplicity}"
        print(f"phi = {render_poly(fd.phi)}  ({kind})")
        for ss in fd.sides:
            if ss.requires_higher_order:
                print(f"  side slope {ss.side.slope_str}: residual not separable; "
                      "requires higher-order analysis")
            else:
                pieces = "; ".join(f"e={e},f={fdeg}" for e, fdeg in ss.pieces)
                print(f"  side slope {ss.side.slope_str}: {pieces}")
    if report.complete:
        summary = "; ".join(f"e={e},f={fdeg}" for e, fdeg in report.splitting)
        print(f"splitting: {summary}")
        total = sum(e * fdeg for e, fdeg in report.splitting)
        print(f"sum of e*f = {total} = deg")
    else:
        print("splitting: incomplete (higher-order analysis required)")
    return EXIT_OK


# ----------------------------------------------------------------------
# orbit / factor
# ----------------------------------------------------------------------


def _cmd_orbit(args) -> int:
    require_prime(args.p)
    if args.N < 1:
        raise _UsageError("--N must be >= 1")
    values = orbit_constants(args.p, args.a, args.N)
    if args.json:
        _emit(orbit_report_to_doc(OrbitReport(args.p, args.a, args.N, tuple(values))))
    else:
        for n, value in enumerate(values, start=1):
            print(f"f^{n}(0) = {value}")
    return EXIT_OK


def _render_factorization_text(x: int, fz) -> None:
    if abs(x) == 1:
        print(f"{x} = unit")
        return
    parts = []
    if x < 0:
        parts.append("-1")
    for p, e in fz.factors:
        parts.append(str(p) if e == 1 else f"{p}^{e}")
    if fz.cofactor != 1:
        status = fz.cofactor_status.value
        parts.append(f"{fz.cofactor} ({status}, unfactored)")
    print(f"{x} = {' * '.join(parts)}")


def _cmd_factor(args) -> int:
    if args.x == 0:
        raise _UsageError("cannot factor 0")
    budget, effort = _budget_from_args(args)
    fz = factor(args.x, budget)
    if args.json:
        _emit(factorization_to_doc(args.x, fz, budget, effort))
    else:
        _render_factorization_text(args.x, fz)
    return EXIT_OK


# ----------------------------------------------------------------------
# wiring
# ----------------------------------------------------------------------


def _add_budget_flags(sub) -> None:
    sub.add_argument("--effort", choices=sorted(EFFORT_BUDGETS), default="default",
                     help="factoring effort (trial bound / rho iterations)")
    sub.add_argument("--seed", type=int, default=None,
                     help="pseudorandom seed for rho and large Miller-Rabin")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="radtower",
        description="Monogenicity of towers of x^p - a iterates, Newton polygons, "
                    "Ore dissections, and bounded-effort factoring.",
    )
    parser.add_argument("--version", action="version", version=f"radtower {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    analyze = subs.add_parser("analyze", help="per-level monogenicity of a tower")
    analyze.add_argument("--p", type=int, required=True, help="prime exponent")
    analyze.add_argument("--a", type=int, required=True, help="shift constant")
    analyze.add_argument("--N", type=int, required=True, help="deepest level")
    _add_budget_flags(analyze)
    analyze.add_argument("--json", action="store_true")
    analyze.set_defaults(func=_cmd_analyze)

    polygon = subs.add_parser("polygon", help="phi-adic development and Newton polygon")
    polygon.add_argument("--poly", required=True, help="monic polynomial (expression or coefficient list)")
    polygon.add_argument("--prime", type=int, required=True)
    polygon.add_argument("--phi", default=None, help="optional explicit monic phi")
    polygon.add_argument("--json", action="store_true")
    polygon.set_defaults(func=_cmd_polygon)

    dissect_cmd = subs.add_parser("dissect", help="splitting shape of a prime")
    dissect_cmd.add_argument("--poly", required=True)
    dissect_cmd.add_argument("--prime", type=int, required=True)
    dissect_cmd.add_argument("--json", action="store_true")
    dissect_cmd.set_defaults(func=_cmd_dissect)

    orbit = subs.add_parser("orbit", help="constants f^n(0) of the iterates")
    orbit.add_argument("--p", type=int, required=True)
    orbit.add_argument("--a", type=int, required=True)
    orbit.add_argument("--N", type=int, required=True)
    orbit.add_argument("--json", action="store_true")
    orbit.set_defaults(func=_cmd_orbit)

    factor_cmd = subs.add_parser("factor", help="bounded-effort integer factorization")
    factor_cmd.add_argument("x", type=int)
    _add_budget_flags(factor_cmd)
    factor_cmd.add_argument("--json", action="store_true")
    factor_cmd.set_defaults(func=_cmd_factor)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as err:
        print(f"radtower: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as err:  # --help / --version
        return 0 if err.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except (_UsageError, PolyParseError, ValueError) as err:
        print(f"radtower: error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
