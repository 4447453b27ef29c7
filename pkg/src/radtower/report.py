"""Structured-report dataclasses and their JSON codecs.

Every CLI command emits exactly one JSON document with stable key order;
each document parses back to the report value it was emitted from (extra
metadata like elapsed time and tool version is carried alongside and
ignored on parse).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ._version import __version__
from .factorint import Budget, CofactorStatus, Factorization
from .factorint import NotSquarefree, Squarefree, SquarefreeStatus, SquarefreeUnknown
from .finitefield import FqContext, FqPoly
from .intpoly import IntPoly
from .monogenic import (
    Certificate,
    FermatCertificate,
    IterateVerdict,
    SquareDividesConstant,
    TowerReport,
    UnknownSquarefreeCertificate,
    Verdict,
)
from .newton import (
    DissectionReport,
    FactorDissection,
    NewtonPolygon,
    ResidualPoly,
    Side,
    SideSplitting,
)
from .polyparse import parse_poly, render_poly
from .valuation import INFINITY, Valuation


def _valuation_to_doc(v: Valuation):
    return "infinity" if v.is_infinite else v.value


def _valuation_from_doc(doc) -> Valuation:
    return INFINITY if doc == "infinity" else Valuation(doc)


def budget_to_doc(budget: Budget, effort: Optional[str] = None) -> dict:
    doc = {
        "trial_bound": budget.trial_bound,
        "rho_iterations": budget.rho_iterations,
        "seed": budget.seed,
    }
    if effort is not None:
        doc["effort"] = effort
    return doc


def budget_from_doc(doc: dict) -> Budget:
    return Budget(doc["trial_bound"], doc["rho_iterations"], doc["seed"])


def squarefree_to_doc(status: SquarefreeStatus) -> dict:
    if isinstance(status, Squarefree):
        return {"kind": "squarefree"}
    if isinstance(status, NotSquarefree):
        return {"kind": "not_squarefree", "witness": status.witness}
    if isinstance(status, SquarefreeUnknown):
        return {"kind": "unknown", "searched_bound": status.searched_bound}
    raise TypeError(f"unknown squarefree status {status!r}")


def squarefree_from_doc(doc: dict) -> SquarefreeStatus:
    kind = doc["kind"]
    if kind == "squarefree":
        return Squarefree()
    if kind == "not_squarefree":
        return NotSquarefree(doc["witness"])
    if kind == "unknown":
        return SquarefreeUnknown(doc["searched_bound"])
    raise ValueError(f"unknown squarefree kind {kind!r}")


def certificate_to_doc(cert: Certificate) -> dict:
    if isinstance(cert, FermatCertificate):
        return {"type": "fermat_valuation", "prime": cert.prime,
                "valuation": "infinity" if cert.valuation is None else cert.valuation}
    if isinstance(cert, SquareDividesConstant):
        return {"type": "square_divides_constant", "prime": cert.prime,
                "valuation": cert.valuation, "iterate": cert.iterate}
    if isinstance(cert, UnknownSquarefreeCertificate):
        return {"type": "squarefree_unknown",
                "searched_bound": cert.searched_bound, "iterate": cert.iterate}
    raise TypeError(f"unknown certificate {cert!r}")


def certificate_from_doc(doc: dict) -> Certificate:
    t = doc["type"]
    if t == "fermat_valuation":
        v = doc["valuation"]
        return FermatCertificate(doc["prime"], None if v == "infinity" else v)
    if t == "square_divides_constant":
        return SquareDividesConstant(doc["prime"], doc["valuation"], doc["iterate"])
    if t == "squarefree_unknown":
        return UnknownSquarefreeCertificate(doc["searched_bound"], doc["iterate"])
    raise ValueError(f"unknown certificate type {t!r}")


def tower_report_to_doc(
    report: TowerReport,
    effort: Optional[str] = None,
    elapsed_seconds: Optional[float] = None,
) -> dict:
    verdicts = []
    for v in report.verdicts:
        verdicts.append({
            "n": v.n,
            "status": v.status.value,
            "failing_prime": v.failing_prime,
            "certificate": None if v.certificate is None else certificate_to_doc(v.certificate),
            "squarefree": squarefree_to_doc(v.squarefree),
            "orbit_value_digits": v.orbit_value_digits,
        })
    doc = {
        "command": "analyze",
        "version": __version__,
        "inputs": {"p": report.p, "a": report.a, "n_max": report.n_max},
        "budget": budget_to_doc(report.budget, effort),
        "fermat": {
            "ok": report.fermat_ok,
            "valuation": _valuation_to_doc(report.fermat_valuation),
        },
        "verdicts": verdicts,
        "first_failure": report.first_failure,
    }
    if elapsed_seconds is not None:
        doc["elapsed_seconds"] = elapsed_seconds
    return doc


def tower_report_from_doc(doc: dict) -> TowerReport:
    verdicts = []
    for v in doc["verdicts"]:
        verdicts.append(IterateVerdict(
            n=v["n"],
            status=Verdict(v["status"]),
            failing_prime=v["failing_prime"],
            certificate=None if v["certificate"] is None
            else certificate_from_doc(v["certificate"]),
            squarefree=squarefree_from_doc(v["squarefree"]),
            orbit_value_digits=v["orbit_value_digits"],
        ))
    return TowerReport(
        p=doc["inputs"]["p"],
        a=doc["inputs"]["a"],
        n_max=doc["inputs"]["n_max"],
        budget=budget_from_doc(doc["budget"]),
        fermat_ok=doc["fermat"]["ok"],
        fermat_valuation=_valuation_from_doc(doc["fermat"]["valuation"]),
        verdicts=tuple(verdicts),
        first_failure=doc["first_failure"],
    )


def factorization_to_doc(
    x: int,
    fz: Factorization,
    budget: Budget,
    effort: Optional[str] = None,
) -> dict:
    return {
        "command": "factor",
        "version": __version__,
        "inputs": {"x": x},
        "budget": budget_to_doc(budget, effort),
        "factors": [[p, e] for p, e in fz.factors],
        "cofactor": fz.cofactor,
        "cofactor_status": fz.cofactor_status.value,
    }


def factorization_from_doc(doc: dict) -> Factorization:
    return Factorization(
        factors=tuple((p, e) for p, e in doc["factors"]),
        cofactor=doc["cofactor"],
        cofactor_status=CofactorStatus(doc["cofactor_status"]),
    )


def _side_to_doc(side: Side) -> dict:
    return {
        "start": list(side.start),
        "end": list(side.end),
        "h": side.h,
        "e": side.e,
        "length": side.length,
        "degree": side.degree,
        "slope": side.slope_str,
    }


def _side_from_doc(doc: dict) -> Side:
    return Side(tuple(doc["start"]), tuple(doc["end"]), doc["h"], doc["e"])


def _residual_to_doc(residual: ResidualPoly) -> dict:
    ctx = residual.poly.ctx
    return {
        "field_modulus": list(ctx.modulus),
        "coeffs": [list(c.coeffs) for c in residual.poly.coeffs],
    }


def _residual_from_doc(doc: dict, side: Side, p: int) -> ResidualPoly:
    ctx = FqContext(p, tuple(doc["field_modulus"]))
    poly = FqPoly(ctx, [ctx.elem(tuple(c)) for c in doc["coeffs"]])
    return ResidualPoly(side, poly)


@dataclass(frozen=True)
class PolygonEntry:
    """One phi's development, polygon, index count, and residuals."""

    phi: IntPoly
    multiplicity: Optional[int]  # None when phi was supplied explicitly
    development: tuple[IntPoly, ...]
    polygon: NewtonPolygon
    residuals: tuple[Optional[ResidualPoly], ...]  # None: no residue field
    ind: int


@dataclass(frozen=True)
class PolygonReport:
    poly: IntPoly
    p: int
    phi_explicit: Optional[IntPoly]
    entries: tuple[PolygonEntry, ...]
    total_ind: int
    exact: Optional[bool]


def polygon_report_to_doc(report: PolygonReport) -> dict:
    entries = []
    for entry in report.entries:
        sides = []
        for side, residual in zip(entry.polygon.sides, entry.residuals):
            side_doc = _side_to_doc(side)
            side_doc["residual"] = None if residual is None else _residual_to_doc(residual)
            sides.append(side_doc)
        entries.append({
            "phi": render_poly(entry.phi),
            "multiplicity": entry.multiplicity,
            "development": [list(a.coeffs) for a in entry.development],
            "points": [list(pt) for pt in entry.polygon.points],
            "sides": sides,
            "ind": entry.ind,
        })
    return {
        "command": "polygon",
        "version": __version__,
        "inputs": {
            "poly": render_poly(report.poly),
            "prime": report.p,
            "phi": None if report.phi_explicit is None else render_poly(report.phi_explicit),
        },
        "entries": entries,
        "total_ind": report.total_ind,
        "exact": report.exact,
    }


def polygon_report_from_doc(doc: dict) -> PolygonReport:
    p = doc["inputs"]["prime"]
    entries = []
    for entry in doc["entries"]:
        sides = tuple(_side_from_doc(sd) for sd in entry["sides"])
        residuals = tuple(
            None if sd["residual"] is None else _residual_from_doc(sd["residual"], side, p)
            for sd, side in zip(entry["sides"], sides)
        )
        polygon = NewtonPolygon(
            tuple(tuple(pt) for pt in entry["points"]), sides
        )
        entries.append(PolygonEntry(
            phi=parse_poly(entry["phi"]),
            multiplicity=entry["multiplicity"],
            development=tuple(IntPoly(tuple(a)) for a in entry["development"]),
            polygon=polygon,
            residuals=residuals,
            ind=entry["ind"],
        ))
    phi = doc["inputs"]["phi"]
    return PolygonReport(
        poly=parse_poly(doc["inputs"]["poly"]),
        p=p,
        phi_explicit=None if phi is None else parse_poly(phi),
        entries=tuple(entries),
        total_ind=doc["total_ind"],
        exact=doc["exact"],
    )


def dissection_to_doc(report: DissectionReport) -> dict:
    factors = []
    for fd in report.factors:
        factors.append({
            "phi": render_poly(fd.phi),
            "multiplicity": fd.multiplicity,
            "hensel": fd.hensel,
            "pieces": [list(piece) for piece in fd.pieces],
            "sides": [
                {
                    "side": _side_to_doc(ss.side),
                    "separable": ss.separable,
                    "pieces": [list(piece) for piece in ss.pieces],
                }
                for ss in fd.sides
            ],
        })
    return {
        "command": "dissect",
        "version": __version__,
        "inputs": {"poly": render_poly(report.poly), "prime": report.p},
        "factors": factors,
        "complete": report.complete,
        "splitting": None if report.splitting is None
        else [list(piece) for piece in report.splitting],
    }


def dissection_from_doc(doc: dict) -> DissectionReport:
    factors = []
    for fd in doc["factors"]:
        factors.append(FactorDissection(
            phi=parse_poly(fd["phi"]),
            multiplicity=fd["multiplicity"],
            hensel=fd["hensel"],
            pieces=tuple(tuple(piece) for piece in fd["pieces"]),
            sides=tuple(
                SideSplitting(
                    side=_side_from_doc(ss["side"]),
                    separable=ss["separable"],
                    pieces=tuple(tuple(piece) for piece in ss["pieces"]),
                )
                for ss in fd["sides"]
            ),
        ))
    splitting = doc["splitting"]
    return DissectionReport(
        poly=parse_poly(doc["inputs"]["poly"]),
        p=doc["inputs"]["prime"],
        factors=tuple(factors),
        complete=doc["complete"],
        splitting=None if splitting is None else tuple(tuple(s) for s in splitting),
    )


@dataclass(frozen=True)
class OrbitReport:
    p: int
    a: int
    n_max: int
    values: tuple[int, ...]


def orbit_report_to_doc(report: OrbitReport) -> dict:
    return {
        "command": "orbit",
        "version": __version__,
        "inputs": {"p": report.p, "a": report.a, "n_max": report.n_max},
        "values": list(report.values),
    }


def orbit_report_from_doc(doc: dict) -> OrbitReport:
    return OrbitReport(
        p=doc["inputs"]["p"],
        a=doc["inputs"]["a"],
        n_max=doc["inputs"]["n_max"],
        values=tuple(doc["values"]),
    )
