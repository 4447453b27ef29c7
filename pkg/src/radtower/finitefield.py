"""Polynomial arithmetic and factorization over F_p and its extensions.

A field context fixes a prime p and a monic irreducible modulus over F_p
of degree d; d = 1 is F_p itself, so all residual-field code is uniform
in d.  Elements are reduced polynomial representatives with coefficients
canonically in [0, p).

Factorization uses squarefree decomposition, distinct-degree splitting,
and Cantor-Zassenhaus equal-degree splitting; a brute-force search over
monic divisors doubles as an independent cross-check for tiny fields.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .intpoly import IntPoly
from .valuation import require_prime

# ----------------------------------------------------------------------
# Raw F_p[x] helpers on ascending coefficient tuples.
# ----------------------------------------------------------------------


def _trim(cs: list[int]) -> tuple[int, ...]:
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _gfp_add(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                  for i in range(n)])


def _gfp_sub(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                  for i in range(n)])


def _gfp_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim([c % p for c in out])


def _gfp_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return (), _trim(rem)
    quo = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] % p
        if c:
            t = c * inv_lead % p
            quo[i - db] = t
            for j, bj in enumerate(b):
                rem[i - db + j] = (rem[i - db + j] - t * bj) % p
    return _trim(quo), _trim(rem[:db])


def _gfp_mod(a, b, p):
    return _gfp_divmod(a, b, p)[1]


def _gfp_gcd(a, b, p):
    while b:
        a, b = b, _gfp_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = tuple(c * inv % p for c in a)
    return a


def _gfp_invmod(a, m, p):
    """Inverse of a modulo m in F_p[x], by extended Euclid."""
    r0, r1 = m, a
    s0, s1 = (), (1,)
    while r1:
        q, r = _gfp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _gfp_sub(s0, _gfp_mul(q, s1, p), p)
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible")
    c = pow(r0[0], -1, p)
    return tuple(x * c % p for x in s0)


def _gfp_powmod(a, e, m, p):
    result = (1,)
    a = _gfp_mod(a, m, p)
    while e:
        if e & 1:
            result = _gfp_mod(_gfp_mul(result, a, p), m, p)
        e >>= 1
        if e:
            a = _gfp_mod(_gfp_mul(a, a, p), m, p)
    return result


def _small_prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _gfp_is_irreducible(m, p) -> bool:
    """Rabin's test for a monic modulus over F_p."""
    d = len(m) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    x = (0, 1)
    if _gfp_powmod(x, p ** d, m, p) != _gfp_mod(x, m, p):
        return False
    for r in _small_prime_divisors(d):
        h = _gfp_powmod(x, p ** (d // r), m, p)
        if len(_gfp_gcd(_gfp_sub(h, x, p), m, p)) != 1:
            return False
    return True


# ----------------------------------------------------------------------
# Field contexts and elements.
# ----------------------------------------------------------------------


class FqContext:
    """The field F_p[t]/(modulus), with the modulus verified irreducible."""

    __slots__ = ("p", "modulus", "degree", "order")

    def __init__(self, p: int, modulus: tuple[int, ...]):
        require_prime(p)
        modulus = _trim([c % p for c in modulus])
        if len(modulus) < 2 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        if not _gfp_is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.modulus = modulus
        self.degree = len(modulus) - 1
        self.order = p ** self.degree

    @staticmethod
    def prime_field(p: int) -> "FqContext":
        return FqContext(p, (0, 1))

    @staticmethod
    def from_modulus_poly(phi: IntPoly, p: int) -> "FqContext":
        return FqContext(p, phi.reduce_mod(p))

    def elem(self, coeffs) -> "FqElem":
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        reduced = _gfp_mod(_trim([c % self.p for c in coeffs]), self.modulus, self.p)
        return FqElem(self, reduced)

    @property
    def zero(self) -> "FqElem":
        return FqElem(self, ())

    @property
    def one(self) -> "FqElem":
        return FqElem(self, (1,))

    def all_elements(self):
        """Every field element; only sensible for tiny fields."""
        def rec(prefix, k):
            if k == self.degree:
                yield FqElem(self, _trim(list(prefix)))
                return
            for c in range(self.p):
                yield from rec(prefix + [c], k + 1)

        yield from rec([], 0)

    def __eq__(self, other):
        return (isinstance(other, FqContext)
                and self.p == other.p and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        if self.degree == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.degree})"


class FqElem:
    """An element of an ``FqContext``, as a reduced representative."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FqContext, coeffs: tuple[int, ...]):
        self.ctx = ctx
        self.coeffs = coeffs

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "FqElem"):
        if self.ctx != other.ctx:
            raise ValueError("elements from different fields")

    def __add__(self, other: "FqElem") -> "FqElem":
        self._check(other)
        return FqElem(self.ctx, _gfp_add(self.coeffs, other.coeffs, self.ctx.p))

    def __sub__(self, other: "FqElem") -> "FqElem":
        self._check(other)
        return FqElem(self.ctx, _gfp_sub(self.coeffs, other.coeffs, self.ctx.p))

    def __neg__(self) -> "FqElem":
        p = self.ctx.p
        return FqElem(self.ctx, tuple((-c) % p for c in self.coeffs))

    def __mul__(self, other: "FqElem") -> "FqElem":
        self._check(other)
        prod = _gfp_mul(self.coeffs, other.coeffs, self.ctx.p)
        return FqElem(self.ctx, _gfp_mod(prod, self.ctx.modulus, self.ctx.p))

    def inverse(self) -> "FqElem":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        return FqElem(self.ctx,
                      _gfp_invmod(self.coeffs, self.ctx.modulus, self.ctx.p))

    def __truediv__(self, other: "FqElem") -> "FqElem":
        return self * other.inverse()

    def __pow__(self, e: int) -> "FqElem":
        if e < 0:
            return self.inverse() ** (-e)
        return FqElem(self.ctx,
                      _gfp_powmod(self.coeffs, e, self.ctx.modulus, self.ctx.p))

    def __eq__(self, other):
        return (isinstance(other, FqElem)
                and self.ctx == other.ctx and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __repr__(self):
        if self.ctx.degree == 1:
            return str(self.coeffs[0] if self.coeffs else 0)
        return f"FqElem{self.coeffs}"


class FqPoly:
    """A polynomial over an ``FqContext``, ascending coefficients."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FqContext, coeffs):
        cs = list(coeffs)
        while cs and cs[-1].is_zero:
            cs.pop()
        self.ctx = ctx
        self.coeffs = tuple(cs)

    @staticmethod
    def from_ints(ctx: FqContext, ints) -> "FqPoly":
        return FqPoly(ctx, [ctx.elem(c) for c in ints])

    @staticmethod
    def from_intpoly(ctx: FqContext, f: IntPoly) -> "FqPoly":
        return FqPoly.from_ints(ctx, f.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> FqElem:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ctx.one

    def coeff(self, i: int) -> FqElem:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ctx.zero

    def _check(self, other: "FqPoly"):
        if self.ctx != other.ctx:
            raise ValueError("polynomials over different fields")

    def __add__(self, other: "FqPoly") -> "FqPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return FqPoly(self.ctx, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other: "FqPoly") -> "FqPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return FqPoly(self.ctx, [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __mul__(self, other) -> "FqPoly":
        if isinstance(other, FqElem):
            return FqPoly(self.ctx, [c * other for c in self.coeffs])
        self._check(other)
        if self.is_zero or other.is_zero:
            return FqPoly(self.ctx, [])
        out = [self.ctx.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a.is_zero:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return FqPoly(self.ctx, out)

    def __divmod__(self, other: "FqPoly") -> tuple["FqPoly", "FqPoly"]:
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        inv_lead = other.leading.inverse()
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) - 1 < db:
            return FqPoly(self.ctx, []), self
        quo = [self.ctx.zero] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if not c.is_zero:
                t = c * inv_lead
                quo[i - db] = t
                for j, b in enumerate(other.coeffs):
                    rem[i - db + j] = rem[i - db + j] - t * b
        return FqPoly(self.ctx, quo), FqPoly(self.ctx, rem[:db])

    def __floordiv__(self, other: "FqPoly") -> "FqPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "FqPoly") -> "FqPoly":
        return divmod(self, other)[1]

    def monic(self) -> "FqPoly":
        if self.is_zero or self.is_monic:
            return self
        return self * self.leading.inverse()

    def gcd(self, other: "FqPoly") -> "FqPoly":
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def diff(self) -> "FqPoly":
        p = self.ctx.p
        out = []
        for i in range(1, len(self.coeffs)):
            k = i % p
            out.append(self.ctx.elem(0) if k == 0
                       else self.coeffs[i] * self.ctx.elem(k))
        return FqPoly(self.ctx, out)

    def pow_mod(self, e: int, modulus: "FqPoly") -> "FqPoly":
        result = FqPoly(self.ctx, [self.ctx.one])
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            e >>= 1
            if e:
                base = (base * base) % modulus
        return result

    def __eq__(self, other):
        return (isinstance(other, FqPoly)
                and self.ctx == other.ctx and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def sort_key(self):
        return (self.degree, tuple(c.coeffs for c in self.coeffs))

    def __repr__(self):
        if self.is_zero:
            return "FqPoly(0)"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero:
                continue
            cs = repr(c)
            if i == 0:
                parts.append(cs)
            elif i == 1:
                parts.append("y" if cs == "1" else f"{cs}*y")
            else:
                parts.append(f"y^{i}" if cs == "1" else f"{cs}*y^{i}")
        return "FqPoly(" + " + ".join(parts) + ")"


# ----------------------------------------------------------------------
# Factorization over F_q.
# ----------------------------------------------------------------------


def _pth_root(g: FqPoly) -> FqPoly:
    """The p-th root of g = h(x^p) (valid in characteristic p)."""
    ctx = g.ctx
    p = ctx.p
    root_exp = ctx.order // p  # Frobenius inverse on coefficients
    out = []
    for i, c in enumerate(g.coeffs):
        if i % p == 0:
            out.append(c ** root_exp)
        elif not c.is_zero:
            raise ValueError("polynomial is not a p-th power")
    return FqPoly(ctx, out)


def _squarefree_decomposition(g: FqPoly) -> list[tuple[FqPoly, int]]:
    """Monic squarefree parts with multiplicities, correct in char p."""
    ctx = g.ctx
    p = ctx.p
    one = FqPoly(ctx, [ctx.one])
    factors: list[tuple[FqPoly, int]] = []
    g = g.monic()
    n = 1
    while g.degree >= 1:
        d = g.diff()
        if not d.is_zero:
            c = g.gcd(d)
            w = g // c
            i = 1
            while w != one:
                y = w.gcd(c)
                z = w // y
                if z.degree > 0:
                    factors.append((z, i * n))
                w, c = y, c // y
                i += 1
            if c == one:
                return factors
            g = c  # leftover: every multiplicity divisible by p
        g = _pth_root(g)
        n *= p
    return factors


def _distinct_degree(g: FqPoly) -> list[tuple[FqPoly, int]]:
    """(product of irreducible factors of degree i, i) for monic squarefree g."""
    ctx = g.ctx
    q = ctx.order
    x = FqPoly(ctx, [ctx.zero, ctx.one])
    out = []
    h = x
    i = 1
    while 2 * i <= g.degree:
        h = h.pow_mod(q, g)
        d = g.gcd(h - x)
        if d.degree > 0:
            out.append((d, i))
            g = g // d
            h = h % g
        i += 1
    if g.degree > 0:
        out.append((g, g.degree))
    return out


def _random_poly(ctx: FqContext, degree: int, rng: random.Random) -> FqPoly:
    coeffs = [ctx.elem(tuple(rng.randrange(ctx.p) for _ in range(ctx.degree)))
              for _ in range(degree + 1)]
    return FqPoly(ctx, coeffs)


def _equal_degree(g: FqPoly, i: int, rng: random.Random) -> list[FqPoly]:
    """Split monic squarefree g, all of whose factors have degree i."""
    if g.degree == i:
        return [g]
    ctx = g.ctx
    q = ctx.order
    one = FqPoly(ctx, [ctx.one])
    while True:
        r = _random_poly(ctx, g.degree - 1, rng)
        if r.degree < 1:
            continue
        if ctx.p == 2:
            # trace map over F_2: r + r^2 + r^4 + ... splits in char 2
            s = r
            t = r
            for _ in range(i * ctx.degree - 1):
                t = (t * t) % g
                s = s + t
            h = g.gcd(s)
        else:
            s = r.pow_mod((q ** i - 1) // 2, g)
            h = g.gcd(s - one)
        if 0 < h.degree < g.degree:
            return _equal_degree(h, i, rng) + _equal_degree(g // h, i, rng)


def _content_seed(g: FqPoly) -> int:
    acc = g.ctx.p
    for c in g.coeffs:
        for v in c.coeffs:
            acc = (acc * 1_000_003 + v + 1) & 0xFFFFFFFF
    return acc


def fq_factor(g: FqPoly) -> list[tuple[FqPoly, int]]:
    """Complete factorization into monic irreducibles with multiplicities.

    The unit leading coefficient is dropped: the product of the returned
    factor powers is the monic normalization of g.  Output order is
    deterministic (degree, then coefficient tuples).
    """
    if g.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(_content_seed(g))
    out: list[tuple[FqPoly, int]] = []
    for part, mult in _squarefree_decomposition(g):
        for same_degree, i in _distinct_degree(part):
            for irreducible in _equal_degree(same_degree, i, rng):
                out.append((irreducible.monic(), mult))
    out.sort(key=lambda fm: fm[0].sort_key())
    return out


def _factor_exhaustive(g: FqPoly) -> list[tuple[FqPoly, int]]:
    """Trial division over all monic polynomials; tiny-field cross-check."""
    ctx = g.ctx
    if ctx.order ** g.degree > 10 ** 4:
        raise ValueError("exhaustive factoring is for tiny instances only")
    out: list[tuple[FqPoly, int]] = []
    g = g.monic()

    def monic_polys(degree):
        def rec(prefix, k):
            if k == degree:
                yield FqPoly(ctx, list(prefix) + [ctx.one])
                return
            for e in ctx.all_elements():
                yield from rec(prefix + [e], k + 1)

        yield from rec([], 0)

    d = 1
    while g.degree > 0 and 2 * d <= g.degree:
        for cand in monic_polys(d):
            mult = 0
            while True:
                quo, rem = divmod(g, cand)
                if not rem.is_zero:
                    break
                g = quo
                mult += 1
            if mult:
                out.append((cand, mult))
        d += 1
    if g.degree > 0:
        out.append((g, 1))
    out.sort(key=lambda fm: fm[0].sort_key())
    return out


def is_separable(g: FqPoly) -> bool:
    """Whether gcd(g, g') is constant."""
    if g.is_zero or g.degree < 1:
        raise ValueError("separability is defined for nonzero degree >= 1")
    d = g.diff()
    if d.is_zero:
        return False
    return g.gcd(d).degree == 0


def factor_mod_p(f: IntPoly, p: int) -> list[tuple[IntPoly, int]]:
    """Factor a monic integer polynomial modulo p.

    Returns (lift, multiplicity) pairs where each lift is the monic
    integer representative with coefficients in [0, p), ordered by degree
    then lexicographic coefficients.
    """
    if not f.is_monic:
        raise ValueError("factor_mod_p requires a monic polynomial")
    require_prime(p)
    ctx = FqContext.prime_field(p)
    g = FqPoly.from_intpoly(ctx, f)
    out = []
    for factor, mult in fq_factor(g):
        lift = IntPoly(tuple(c.coeffs[0] if c.coeffs else 0 for c in factor.coeffs))
        out.append((lift, mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out
