"""p-adic valuations of integers and integer polynomials.

``Valuation`` is a nonnegative integer or the distinguished infinity (the
valuation of 0).  Infinity is an explicit state, never a sentinel integer;
addition absorbs it and comparisons treat it as larger than every integer.
"""

from __future__ import annotations

import functools
from typing import Optional

from .intpoly import IntPoly, nth_root

# Direct computation of a^p - a below this; modular lifting above.
_DIRECT_FERMAT_BITS = 64


class Valuation:
    """A nonnegative integer valuation or infinity.

    Compares and adds against both ``Valuation`` and plain ``int``:

    >>> Valuation(2) + 1
    Valuation(3)
    >>> INFINITY + 5 == INFINITY
    True
    >>> Valuation(1) < INFINITY
    True
    """

    __slots__ = ("_v",)

    def __init__(self, value: Optional[int]):
        if value is not None and value < 0:
            raise ValueError("valuation must be nonnegative")
        self._v = value

    @property
    def is_infinite(self) -> bool:
        return self._v is None

    @property
    def value(self) -> int:
        if self._v is None:
            raise ValueError("infinite valuation has no integer value")
        return self._v

    @staticmethod
    def _coerce(other) -> "Valuation":
        if isinstance(other, Valuation):
            return other
        if isinstance(other, int):
            return Valuation(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._v == o._v

    def __hash__(self):
        return hash(self._v)

    def __lt__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self._v is None:
            return False
        if o._v is None:
            return True
        return self._v < o._v

    def __le__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self == o or self < o

    def __gt__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o < self

    def __ge__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o <= self

    def __add__(self, other) -> "Valuation":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self._v is None or o._v is None:
            return INFINITY
        return Valuation(self._v + o._v)

    __radd__ = __add__

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return "Valuation(infinity)" if self._v is None else f"Valuation({self._v})"


INFINITY = Valuation(None)


@functools.lru_cache(maxsize=None)
def require_prime(p: int) -> int:
    """Validate a prime parameter once; cached so hot paths stay cheap."""
    from .factorint import is_probable_prime

    if p < 2 or not is_probable_prime(p):
        raise ValueError(f"{p} is not prime")
    return p


def vp(x: int, p: int) -> Valuation:
    """The exponent of p in x; infinity for x = 0."""
    require_prime(p)
    if x == 0:
        return INFINITY
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return Valuation(v)


def gauss_valuation(f: IntPoly, p: int) -> Valuation:
    """Minimum p-adic valuation over the coefficients; infinity for 0."""
    require_prime(p)
    best: Optional[int] = None
    for c in f.coeffs:
        if c == 0:
            continue
        v = vp(c, p).value
        if best is None or v < best:
            best = v
            if best == 0:
                break
    return INFINITY if best is None else Valuation(best)


def fermat_valuation(p: int, a: int) -> Valuation:
    """v_p(a^p - a).

    Always >= 1 by Fermat's little theorem (infinite for a in {-1, 0, 1}
    when a^p = a).  Computed directly for small a; for huge a the value is
    recovered from a^p - a modulo p^K for doubling K, which avoids
    materializing a^p for orbit-sized arguments.
    """
    require_prime(p)
    if abs(a).bit_length() <= _DIRECT_FERMAT_BITS:
        return vp(a ** p - a, p)
    k = 4
    while k <= 64:
        m = p ** k
        r = (pow(a, p, m) - a) % m
        if r:
            v = vp(r, p).value
            if v < k:
                return Valuation(v)
        k *= 2
    # valuation >= 64: fall back to the exact difference
    return vp(a ** p - a, p)


def perfect_power(x: int) -> Optional[tuple[int, int]]:
    """(b, k) with k >= 2 maximal and b^k = x, or None.

    >>> perfect_power(1024)
    (2, 10)
    >>> perfect_power(-8)
    (-2, 3)
    >>> perfect_power(5) is None
    True
    """
    if abs(x) < 2:
        raise ValueError("perfect_power requires |x| >= 2")
    mag = abs(x)
    for k in range(mag.bit_length(), 1, -1):
        if x < 0 and k % 2 == 0:
            continue
        b = nth_root(mag, k)
        if b ** k == mag:
            return (-b if x < 0 else b, k)
    return None
