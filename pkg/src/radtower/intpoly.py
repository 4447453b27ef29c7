"""Dense univariate polynomials over the integers.

A polynomial is a tuple of arbitrary-precision coefficients in ascending
order: index i holds the coefficient of x^i.  The zero polynomial is the
empty tuple.  All arithmetic is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

# Composition degree guard: iterates of x^p - a blow up doubly fast and
# everything past this is unusable at desk scale anyway.
MAX_ITERATE_DEGREE = 100_000


def _trim(coeffs) -> tuple[int, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _format(coeffs: tuple[int, ...], var: str = "x") -> str:
    """Render in conventional descending order, e.g. ``x^3 - 5``."""
    if not coeffs:
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            head = "" if mag == 1 else str(mag)
            body = f"{head}{var}" if i == 1 else f"{head}{var}^{i}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


@dataclass(frozen=True)
class IntPoly:
    """An integer polynomial; ``IntPoly((-5, 0, 0, 1))`` is x^3 - 5.

    >>> print(IntPoly((-5, 0, 0, 1)))
    x^3 - 5
    >>> IntPoly.radical(3, 5) ** 2
    IntPoly('x^6 - 10x^3 + 25')
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    # -- constructors ------------------------------------------------

    @staticmethod
    def of(*coeffs: int) -> IntPoly:
        """Build from ascending coefficients: ``IntPoly.of(-5, 0, 0, 1)``."""
        return IntPoly(tuple(coeffs))

    @staticmethod
    def monomial(n: int, c: int = 1) -> IntPoly:
        return IntPoly((0,) * n + (c,))

    @staticmethod
    def radical(n: int, a: int) -> IntPoly:
        """The polynomial x^n - a."""
        return IntPoly((-a,) + (0,) * (n - 1) + (1,))

    @staticmethod
    def constant(c: int) -> IntPoly:
        return IntPoly((c,))

    # -- basic queries -----------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # -- arithmetic --------------------------------------------------

    def __add__(self, other: IntPoly) -> IntPoly:
        return IntPoly(tuple(
            a + b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        ))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return IntPoly(tuple(
            a - b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        ))

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-a for a in self.coeffs))

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(tuple(a * other for a in self.coeffs))
        if self.is_zero or other.is_zero:
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPoly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base2 = base * base if n > 1 else base
            base, n = base2, n >> 1
        return result

    def __divmod__(self, divisor: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Quotient and remainder by a monic divisor (exact over the integers)."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if not divisor.is_monic:
            raise ValueError("division requires a monic divisor over the integers")
        rem = list(self.coeffs)
        dn = divisor.degree
        if len(rem) - 1 < dn:
            return IntPoly(()), self
        quo = [0] * (len(rem) - dn)
        for i in range(len(rem) - 1, dn - 1, -1):
            c = rem[i]
            if c:
                quo[i - dn] = c
                for j, b in enumerate(divisor.coeffs):
                    rem[i - dn + j] -= c * b
        return IntPoly(tuple(quo)), IntPoly(tuple(rem[:dn]))

    def __call__(self, x: int) -> int:
        """Evaluate at an integer by Horner's rule."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reduce_mod(self, m: int) -> tuple[int, ...]:
        """Coefficients reduced into [0, m)."""
        return _trim(c % m for c in self.coeffs)

    def __str__(self) -> str:
        return _format(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({str(self)!r})"


def compose(f: IntPoly, g: IntPoly) -> IntPoly:
    """f(g(x)), by Horner's rule over polynomials."""
    acc = IntPoly(())
    for c in reversed(f.coeffs):
        acc = acc * g + IntPoly((c,))
    return acc


def iterate(f: IntPoly, n: int) -> IntPoly:
    """The n-fold self-composition of f, for n >= 1."""
    if n < 1:
        raise ValueError(f"iterate requires n >= 1, got {n}")
    d = f.degree
    if d >= 2 and d ** n > MAX_ITERATE_DEGREE:
        raise ValueError(
            f"iterate({n}) would have degree {d}^{n} > {MAX_ITERATE_DEGREE}"
        )
    result = f
    for _ in range(n - 1):
        result = compose(f, result)
    return result


def orbit_constant(p: int, a: int, n: int) -> int:
    """The constant term of the n-th iterate of x^p - a.

    Uses the recurrence c_1 = -a, c_k = c_{k-1}^p - a; n big-integer powers
    instead of a polynomial composition.
    """
    if n < 1:
        raise ValueError(f"orbit index must be >= 1, got {n}")
    c = -a
    for _ in range(n - 1):
        c = c ** p - a
    return c


def orbit_constants(p: int, a: int, n: int) -> list[int]:
    """All constants f^1(0), ..., f^n(0) for f = x^p - a."""
    if n < 1:
        raise ValueError(f"orbit index must be >= 1, got {n}")
    out = [-a]
    for _ in range(n - 1):
        out.append(out[-1] ** p - a)
    return out


def nth_root(x: int, k: int) -> int:
    """Floor of the k-th root of x >= 0."""
    if x < 0 or k < 1:
        raise ValueError("nth_root needs x >= 0, k >= 1")
    if x < 2 or k == 1:
        return x
    r = 1 << (-(-x.bit_length() // k))  # upper bound: 2^ceil(bits/k)
    while True:
        s = ((k - 1) * r + x // r ** (k - 1)) // k
        if s >= r:
            return r
        r = s


def is_irreducible_radical(p: int, a: int) -> bool:
    """Whether x^p - a (p prime) is irreducible over the rationals.

    Holds exactly when a is not a p-th power of an integer; every iterate
    of an irreducible x^p - a is then irreducible as well.
    """
    if a == 0:
        raise ValueError("a = 0 gives the reducible polynomial x^p")
    if a < 0 and p == 2:
        return True
    mag = nth_root(abs(a), p)
    root = -mag if a < 0 else mag
    return root ** p != a


def pth_root_of(p: int, a: int) -> int | None:
    """The integer r with r^p = a, if one exists."""
    if a == 0:
        return 0
    if a < 0 and p % 2 == 0:
        return None
    mag = nth_root(abs(a), p)
    root = -mag if a < 0 else mag
    return root if root ** p == a else None


def disc_radical(n: int, alpha: int) -> int:
    """Discriminant of x^n - alpha: (-1)^(n(n-1)/2) * n^n * (-alpha)^(n-1)."""
    if n < 2:
        raise ValueError(f"disc_radical requires n >= 2, got {n}")
    sign = -1 if (n * n - n) // 2 % 2 else 1
    return sign * n ** n * (-alpha) ** (n - 1)
