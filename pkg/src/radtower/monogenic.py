"""Monogenicity analysis for towers of iterates of x^p - a.

Two executable criteria drive the per-iterate verdicts:

  - at the prime p itself, the equation order stays p-maximal at every
    level exactly when v_p(a^p - a) = 1 (and then p is totally ramified);
  - at a prime l != p, a square l^2 dividing the constant f^n(0) of the
    n-th iterate rules out l-maximality at level n, while squarefreeness
    of all constants through level n (together with the p-condition)
    certifies that level and everything below it.

Because the constants grow doubly exponentially, their squarefree status
is only ever established within an explicit effort budget; an exhausted
budget propagates to an Unknown verdict, never to a monogenicity claim.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .factorint import (
    DEFAULT_BUDGET,
    Budget,
    NotSquarefree,
    Squarefree,
    SquarefreeStatus,
    SquarefreeUnknown,
    squarefree_status,
)
from .intpoly import is_irreducible_radical, orbit_constants, pth_root_of
from .valuation import Valuation, fermat_valuation, require_prime, vp


def radical_maximality_q(n: int, a: int, ell: int) -> bool:
    """Whether the order generated by an n-th root of a is ell-maximal.

    Assumes x^n - a irreducible over the rationals.  Over the rational
    base field the three cases collapse to integer conditions:

      - ell | a:             requires v_ell(a) = 1;
      - ell | n, ell ∤ a:    requires v_ell(a^ell - a) = 1;
      - ell ∤ a*n:           always maximal.
    """
    if n < 2:
        raise ValueError("radical degree must be >= 2")
    require_prime(ell)
    if a % ell == 0:
        return vp(a, ell) == 1
    if n % ell == 0:
        return fermat_valuation(ell, a) == 1
    return True


def p_maximality_tower(p: int, a: int) -> tuple[bool, Valuation]:
    """Whether every tower level stays p-maximal, with its certificate.

    True exactly when v_p(a^p - a) = 1; the valuation is returned either
    way.  When true, p is totally ramified at every level (checkable via
    ``newton.dissect`` on small iterates).
    """
    require_prime(p)
    v = fermat_valuation(p, a)
    return v == 1, v


def ell_check(p: int, a: int, n: int, budget: Budget = DEFAULT_BUDGET) -> SquarefreeStatus:
    """Squarefree status of the n-th orbit constant f^n(0).

    A NotSquarefree outcome with witness prime l != p certifies that the
    level-n order is not l-maximal.  A witness equal to p is only possible
    when p | a (where v_p of every constant equals v_p(a)) or when the
    Fermat-quotient condition already fails; with p ∤ a and
    v_p(a^p - a) = 1 every orbit constant has p-valuation at most 1, which
    is enforced here as a consistency check.
    """
    require_prime(p)
    if n < 1:
        raise ValueError("iterate index must be >= 1")
    value = orbit_constants(p, a, n)[-1]
    status = squarefree_status(value, budget)
    if isinstance(status, NotSquarefree) and status.witness == p:
        if a % p != 0 and fermat_valuation(p, a) == 1:
            raise AssertionError(
                "impossible: p^2 divides an orbit constant although "
                "p does not divide a and v_p(a^p - a) = 1"
            )
    return status


class Verdict(Enum):
    MONOGENIC = "monogenic"
    NOT_MONOGENIC = "not_monogenic"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class FermatCertificate:
    """v_p(a^p - a) >= 2: no level has a p-maximal equation order family."""

    prime: int
    valuation: Optional[int]  # None encodes an infinite valuation


@dataclass(frozen=True)
class SquareDividesConstant:
    """witness^2 divides f^iterate(0) with the stated exact valuation."""

    prime: int
    valuation: int
    iterate: int


@dataclass(frozen=True)
class UnknownSquarefreeCertificate:
    """Squarefree analysis of f^iterate(0) exhausted the stated bound."""

    searched_bound: int
    iterate: int


Certificate = Union[FermatCertificate, SquareDividesConstant, UnknownSquarefreeCertificate]


@dataclass(frozen=True)
class IterateVerdict:
    n: int
    status: Verdict
    failing_prime: Optional[int]
    certificate: Optional[Certificate]
    squarefree: SquarefreeStatus  # status of this level's own constant
    orbit_value_digits: int


@dataclass(frozen=True)
class TowerReport:
    p: int
    a: int
    n_max: int
    budget: Budget
    fermat_ok: bool
    fermat_valuation: Valuation
    verdicts: tuple[IterateVerdict, ...]
    first_failure: Optional[int]

    @property
    def all_monogenic(self) -> bool:
        return all(v.status is Verdict.MONOGENIC for v in self.verdicts)


def analyze_tower(p: int, a: int, n_max: int, budget: Budget = DEFAULT_BUDGET) -> TowerReport:
    """Per-iterate monogenicity verdicts for the tower of x^p - a.

    Verdict semantics, per level n:

      - MONOGENIC: the Fermat-quotient condition holds and every constant
        f^k(0) for k <= n is verified squarefree;
      - NOT_MONOGENIC: the Fermat-quotient condition fails (certificate
        carries its valuation), or this level's own constant is divisible
        by the square of a witness prime;
      - UNKNOWN: otherwise -- some required squarefree status ran out of
        budget, or an earlier level failed, leaving this level outside
        what the implemented criteria decide.

    A verdict is never MONOGENIC on top of an Unknown squarefree status.
    """
    require_prime(p)
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if a == 0 or not is_irreducible_radical(p, a):
        root = pth_root_of(p, a)
        raise ValueError(
            f"x^{p} - {a} is reducible: {a} = {root}^{p}; the tower needs an "
            "irreducible base polynomial"
        )

    fermat_ok, fermat_val = p_maximality_tower(p, a)
    constants = orbit_constants(p, a, n_max)
    verdicts = []
    first_failure: Optional[int] = None
    blocking: Optional[Certificate] = None  # earliest non-squarefree evidence

    for n in range(1, n_max + 1):
        value = constants[n - 1]
        status = squarefree_status(value, budget)
        if isinstance(status, NotSquarefree) and status.witness == p:
            if a % p != 0 and fermat_ok:
                raise AssertionError(
                    "impossible: p^2 divides an orbit constant although "
                    "p does not divide a and v_p(a^p - a) = 1"
                )
        digits = len(str(abs(value)))

        if not fermat_ok:
            cert: Certificate = FermatCertificate(
                p, None if fermat_val.is_infinite else fermat_val.value
            )
            verdicts.append(IterateVerdict(n, Verdict.NOT_MONOGENIC, p, cert, status, digits))
            if first_failure is None:
                first_failure = n
        elif isinstance(status, NotSquarefree):
            cert = SquareDividesConstant(
                status.witness, vp(value, status.witness).value, n
            )
            verdicts.append(IterateVerdict(
                n, Verdict.NOT_MONOGENIC, status.witness, cert, status, digits
            ))
            if first_failure is None:
                first_failure = n
            if blocking is None:
                blocking = cert
        elif isinstance(status, SquarefreeUnknown):
            cert = UnknownSquarefreeCertificate(status.searched_bound, n)
            if blocking is None:
                blocking = cert
            verdicts.append(IterateVerdict(n, Verdict.UNKNOWN, None, cert, status, digits))
        elif blocking is None:
            verdicts.append(IterateVerdict(n, Verdict.MONOGENIC, None, None, status, digits))
        else:
            # squarefree here, but an earlier level blocks certification
            verdicts.append(IterateVerdict(n, Verdict.UNKNOWN, None, blocking, status, digits))

    return TowerReport(
        p=p, a=a, n_max=n_max, budget=budget,
        fermat_ok=fermat_ok, fermat_valuation=fermat_val,
        verdicts=tuple(verdicts), first_failure=first_failure,
    )
