"""Bounded-effort integer factorization and squarefree classification.

Factoring runs trial division up to a budgeted bound, then Brent's cycle
variant of Pollard rho with a budgeted iteration cap per composite, with
perfect-power and probable-prime handling in between.  Effort that runs
out degrades to an explicit unfactored cofactor, never to a wrong answer;
squarefree classification is correspondingly tri-state.

Everything is deterministic given (input, budget): the pseudorandom
choices in rho and in large Miller-Rabin rounds are seeded from the
budget and the number under test.
"""

from __future__ import annotations

import enum
import itertools
import math
import random
from dataclasses import dataclass, replace

import gmpy2

from .intpoly import nth_root
from .valuation import perfect_power

# Miller-Rabin with these bases is exact below ~3.3e24.
_MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_ROUNDS_LARGE = 40

# Pieces above this size are left untested and unsplit: a single modular
# exponentiation on them already dwarfs the rest of the run.
_GIANT_BIT_LIMIT = 1 << 14

# Hand modular exponentiation to gmpy2 once operands get big.
_POW_GMP_BITS = 1 << 11

_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)

DEFAULT_SEED = 1


@dataclass(frozen=True)
class Budget:
    """Effort descriptor: trial-division bound and rho iteration cap."""

    trial_bound: int = 10 ** 6
    rho_iterations: int = 10 ** 7
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if self.trial_bound < 2:
            raise ValueError("trial_bound must be >= 2")
        if self.rho_iterations < 0:
            raise ValueError("rho_iterations must be >= 0")

    def with_seed(self, seed: int) -> "Budget":
        return replace(self, seed=seed)


DEFAULT_BUDGET = Budget()

EFFORT_BUDGETS = {
    "quick": Budget(trial_bound=10 ** 4, rho_iterations=10 ** 5),
    "default": DEFAULT_BUDGET,
    "deep": Budget(trial_bound=10 ** 8, rho_iterations=10 ** 9),
}


class CofactorStatus(enum.Enum):
    UNIT = "unit"
    PROBABLE_PRIME = "probable_prime"
    COMPOSITE = "composite"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Factorization:
    """Partial factorization: found primes, plus whatever would not split.

    ``factors`` is sorted by prime; the product of prime powers times the
    cofactor equals the absolute value of the input.
    """

    factors: tuple[tuple[int, int], ...]
    cofactor: int
    cofactor_status: CofactorStatus

    def reassemble(self) -> int:
        out = self.cofactor
        for p, e in self.factors:
            out *= p ** e
        return out

    @property
    def is_complete(self) -> bool:
        return self.cofactor_status is CofactorStatus.UNIT


class SquarefreeStatus:
    """Base of the tri-state squarefree classification."""

    __slots__ = ()


@dataclass(frozen=True)
class Squarefree(SquarefreeStatus):
    pass


@dataclass(frozen=True)
class NotSquarefree(SquarefreeStatus):
    witness: int  # a prime whose square divides the input


@dataclass(frozen=True)
class SquarefreeUnknown(SquarefreeStatus):
    searched_bound: int


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin: exact below 3.3e24, 40 pseudorandom rounds above."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    if n < _MR_DETERMINISTIC_LIMIT:
        bases = _MR_BASES
    else:
        rng = random.Random(n)
        bases = tuple(rng.randrange(2, n - 1) for _ in range(_MR_ROUNDS_LARGE))
    powmod = gmpy2.powmod if n.bit_length() > _POW_GMP_BITS else pow
    for a in bases:
        x = int(powmod(a, d, n))
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _trial_divide(n: int, bound: int, factors: dict[int, int]) -> int:
    """Strip prime factors <= bound; returns the remaining cofactor.

    If the remainder drops below the square of the current divisor it is
    prime and gets absorbed too.
    """
    for p in (2, 3, 5):
        if p > bound:
            return n
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    d = 7
    wheel = itertools.cycle(_WHEEL)
    while d <= bound:
        if d * d > n:
            if n > 1:
                factors[n] = factors.get(n, 0) + 1
                n = 1
            return n
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            factors[d] = factors.get(d, 0) + e
        d += next(wheel)
    return n


def _brent_rho(n: int, max_iters: int, rng: random.Random) -> int | None:
    """A nontrivial factor of odd composite n, or None if the budget runs out."""
    nz = gmpy2.mpz(n)
    one = gmpy2.mpz(1)
    iters = 0
    while iters < max_iters:
        y = gmpy2.mpz(rng.randrange(1, n))
        c = gmpy2.mpz(rng.randrange(1, n - 1))
        m = 512
        r, q, g = 1, one, one
        x = ys = y
        while g == one and iters < max_iters:
            x = y
            for _ in range(r):
                y = (y * y + c) % nz
            iters += r
            k = 0
            while k < r and g == one and iters < max_iters:
                ys = y
                steps = min(m, r - k)
                for _ in range(steps):
                    y = (y * y + c) % nz
                    q = q * (x - y) % nz
                iters += steps
                g = gmpy2.gcd(q, nz)
                k += m
            r <<= 1
        if g == nz:
            g = one
            while g == one:
                ys = (ys * ys + c) % nz
                g = gmpy2.gcd(x - ys, nz)
        if one < g < nz:
            return int(g)
        # retry with fresh parameters while budget remains
    return None


def _factor_detail(
    n: int, budget: Budget
) -> tuple[dict[int, int], dict[int, int], bool]:
    """Core engine: (prime -> exponent, stuck composite -> exponent, any_giant)."""
    factors: dict[int, int] = {}
    stuck: dict[int, int] = {}
    giant = False
    rng = random.Random(budget.seed)
    rem = _trial_divide(n, budget.trial_bound, factors)
    prime_floor = budget.trial_bound  # all factors of rem exceed this
    queue: list[tuple[int, int]] = [(rem, 1)] if rem > 1 else []
    while queue:
        m, e = queue.pop()
        if m == 1:
            continue
        if m.bit_length() > _GIANT_BIT_LIMIT:
            giant = True
            stuck[m] = stuck.get(m, 0) + e
            continue
        if m <= prime_floor * prime_floor or is_probable_prime(m):
            factors[m] = factors.get(m, 0) + e
            continue
        pp = perfect_power(m)
        if pp is not None:
            base, k = pp
            queue.append((base, e * k))
            continue
        d = _brent_rho(m, budget.rho_iterations, rng)
        if d is None:
            stuck[m] = stuck.get(m, 0) + e
        else:
            queue.append((d, e))
            queue.append((m // d, e))
    _refine_stuck(factors, stuck)
    return factors, stuck, giant


def _refine_stuck(factors: dict[int, int], stuck: dict[int, int]) -> None:
    """Cheap fixpoint: pull found primes and mutual gcds out of stuck pieces.

    Rho can in principle leave a stuck piece sharing a prime with an
    already-found factor or with another stuck piece; pieces only shrink
    here, so the loop terminates.  No further rho is spent.
    """
    while True:
        changed = False
        for s in list(stuck):
            e = stuck[s]
            reduced = s
            for p in list(factors):
                while reduced % p == 0:
                    reduced //= p
                    factors[p] += e
            if reduced != s:
                del stuck[s]
                changed = True
                _reclassify(reduced, e, factors, stuck)
        pieces = sorted(stuck)
        done_pair = False
        for i in range(len(pieces)):
            for j in range(i + 1, len(pieces)):
                g = math.gcd(pieces[i], pieces[j])
                if g > 1:
                    a, ea = pieces[i], stuck.pop(pieces[i])
                    b, eb = pieces[j], stuck.pop(pieces[j])
                    for part, e in ((g, ea), (a // g, ea), (g, eb), (b // g, eb)):
                        _reclassify(part, e, factors, stuck)
                    changed = done_pair = True
                    break
            if done_pair:
                break
        if not changed:
            return


def _reclassify(m: int, e: int, factors: dict[int, int], stuck: dict[int, int]) -> None:
    if m == 1:
        return
    if m.bit_length() <= _GIANT_BIT_LIMIT:
        if is_probable_prime(m):
            factors[m] = factors.get(m, 0) + e
            return
        pp = perfect_power(m)
        if pp is not None:
            _reclassify(pp[0], e * pp[1], factors, stuck)
            return
    stuck[m] = stuck.get(m, 0) + e


def factor(x: int, budget: Budget = DEFAULT_BUDGET) -> Factorization:
    """Factor |x| within the given effort budget.

    >>> factor(3130).factors
    ((2, 1), (5, 1), (313, 1))
    """
    if x == 0:
        raise ValueError("cannot factor 0")
    n = abs(x)
    if n == 1:
        return Factorization((), 1, CofactorStatus.UNIT)
    factors, stuck, giant = _factor_detail(n, budget)
    cofactor = 1
    for s, e in stuck.items():
        cofactor *= s ** e
    if cofactor == 1:
        status = CofactorStatus.UNIT
    elif giant:
        status = CofactorStatus.UNKNOWN
    else:
        status = CofactorStatus.COMPOSITE
    return Factorization(tuple(sorted(factors.items())), cofactor, status)


def squarefree_status(x: int, budget: Budget = DEFAULT_BUDGET) -> SquarefreeStatus:
    """Tri-state squarefree classification of |x|.

    ``Squarefree`` is only reported from a complete factorization with all
    exponents 1.  ``NotSquarefree`` carries a prime witness verifiable by
    division.  Anything resting on an unsplit composite is ``Unknown``:
    a repeated stuck piece does mean the input is not squarefree, but
    without a prime witness the sound report is still Unknown.
    """
    if x == 0:
        raise ValueError("0 is not classified for squarefreeness")
    n = abs(x)
    if n == 1:
        return Squarefree()
    factors, stuck, _ = _factor_detail(n, budget)
    repeated = sorted(p for p, e in factors.items() if e >= 2)
    if repeated:
        return NotSquarefree(repeated[0])
    if not stuck:
        return Squarefree()
    return SquarefreeUnknown(budget.trial_bound)
