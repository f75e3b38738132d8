"""Dense univariate polynomials over a :class:`~rbmdecode.field.FieldSpec`.

Coefficients are stored low-to-high as a tuple of raw field ints; index l
holds the coefficient of x^l.  The zero polynomial is the empty tuple and
has degree ``NEG_INF``.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .field import FieldElement, FieldError, FieldMismatchError, FieldSpec, prime_factors

NEG_INF = -math.inf


def _trim(coeffs: list[int]) -> list[int]:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _scalar(field: FieldSpec, c) -> int:
    if isinstance(c, FieldElement):
        return field.check(c)
    return field.from_int(c) if field.e == 1 else field.check(c)


class Polynomial:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs: Iterable = ()):
        vals = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                vals.append(field.check(c))
            elif field.e == 1 and isinstance(c, int):
                vals.append(c % field.p)
            elif field.is_element(c):
                vals.append(c)
            else:
                raise FieldError(f"coefficient {c!r} is not an element of {field!r}")
        self.field = field
        self.coeffs = tuple(_trim(vals))

    @classmethod
    def _raw(cls, field: FieldSpec, coeffs: list[int]) -> "Polynomial":
        # trusted constructor: coefficients already valid field ints
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = tuple(_trim(coeffs))
        return obj

    @classmethod
    def zero(cls, field: FieldSpec) -> "Polynomial":
        return cls._raw(field, [])

    @classmethod
    def one(cls, field: FieldSpec) -> "Polynomial":
        return cls._raw(field, [1])

    @classmethod
    def constant(cls, field: FieldSpec, c) -> "Polynomial":
        return cls._raw(field, [_scalar(field, c)])

    @classmethod
    def monomial(cls, field: FieldSpec, t: int, c=1) -> "Polynomial":
        return cls._raw(field, [0] * t + [_scalar(field, c)])

    @classmethod
    def x(cls, field: FieldSpec) -> "Polynomial":
        return cls._raw(field, [0, 1])

    # basic queries --------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lcf(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lcf == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"Polynomial({self.field!r}, [{format_poly(self)}])"

    def __str__(self):
        return format_poly(self)

    def _same(self, other: "Polynomial") -> None:
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")

    # ring operations ------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._same(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        add = f.add
        for i, y in enumerate(b):
            out[i] = add(out[i], y)
        return Polynomial._raw(f, out)

    def __neg__(self) -> "Polynomial":
        neg = self.field.neg
        return Polynomial._raw(self.field, [neg(c) for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._same(other)
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        self.field.sub_scaled(out, 1, other.coeffs)
        return Polynomial._raw(self.field, out)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._same(other)
        return Polynomial._raw(self.field, _mul(self.field, self.coeffs, other.coeffs))

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Polynomial":
        c = _scalar(self.field, c)
        return Polynomial._raw(self.field, self.field.scale(c, self.coeffs))

    def shift(self, t: int) -> "Polynomial":
        """Multiply by x^t."""
        if t < 0:
            raise ValueError("shift must be non-negative")
        if not self.coeffs:
            return self
        return Polynomial._raw(self.field, [0] * t + list(self.coeffs))

    def monic(self) -> "Polynomial":
        if not self.coeffs or self.lcf == 1:
            return self
        return self.scale(self.field.inv(self.lcf))

    def __divmod__(self, other: "Polynomial"):
        self._same(other)
        q, r = _divmod(self.field, self.coeffs, other.coeffs)
        return Polynomial._raw(self.field, q), Polynomial._raw(self.field, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        self._same(other)
        return Polynomial._raw(self.field, _mod(self.field, self.coeffs, other.coeffs))

    def __pow__(self, n: int) -> "Polynomial":
        result = Polynomial.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def eval(self, beta) -> int:
        f = self.field
        beta = _scalar(f, beta)
        acc = 0
        mul, add = f.mul, f.add
        for c in reversed(self.coeffs):
            acc = add(mul(acc, beta), c)
        return acc

    __call__ = eval

    def derivative(self) -> "Polynomial":
        f = self.field
        return Polynomial._raw(f, [f.mul(f.from_int(i), c) for i, c in enumerate(self.coeffs)][1:])


# raw coefficient-list kernels ----------------------------------------------


def _mul(f: FieldSpec, a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    if f.e == 1:
        p = f.p
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return [c % p for c in out]
    out = [0] * (len(a) + len(b) - 1)
    if len(a) > len(b):
        a, b = b, a
    for i, x in enumerate(a):
        if x:
            f.sub_scaled(out, f.neg(x), b, i)
    return out


def _divmod(f: FieldSpec, a: Sequence[int], m: Sequence[int]) -> tuple[list[int], list[int]]:
    if not m:
        raise ZeroDivisionError("polynomial division by zero")
    dm = len(m) - 1
    r = list(a)
    if len(r) <= dm:
        return [], r
    q = [0] * (len(r) - dm)
    lead_inv = f.inv(m[-1])
    body = m[:-1]
    low = [(j, c) for j, c in enumerate(body) if c]
    sparse = 4 * len(low) < dm
    mul, sub = f.mul, f.sub
    for top in range(len(r) - 1, dm - 1, -1):
        c = r[top]
        if not c:
            continue
        factor = mul(c, lead_inv)
        q[top - dm] = factor
        r[top] = 0
        base = top - dm
        if sparse:
            for j, mj in low:
                r[base + j] = sub(r[base + j], mul(factor, mj))
        else:
            f.sub_scaled(r, factor, body, base)
    return q, _trim(r[:dm])


def _mod(f: FieldSpec, a: Sequence[int], m: Sequence[int]) -> list[int]:
    return _divmod(f, a, m)[1]


# module-level helpers -------------------------------------------------------


def degree(p: Polynomial):
    return p.degree


def lcf(p: Polynomial) -> int:
    return p.lcf


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor; gcd(0, m) = monic(m)."""
    a._same(b)
    if not a and not b:
        raise ZeroDivisionError("gcd(0, 0) is undefined")
    while b:
        a, b = b, a % b
    return a.monic()


def ext_gcd(a: Polynomial, b: Polynomial):
    """Return (g, s, t) with s*a + t*b = g and g monic."""
    a._same(b)
    f = a.field
    r0, r1 = a, b
    s0, s1 = Polynomial.one(f), Polynomial.zero(f)
    t0, t1 = Polynomial.zero(f), Polynomial.one(f)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        raise ZeroDivisionError("gcd(0, 0) is undefined")
    c = f.inv(r0.lcf)
    return r0.scale(c), s0.scale(c), t0.scale(c)


def interpolate(field: FieldSpec, points: Sequence[tuple]) -> Polynomial:
    """Lagrange interpolation through (beta, value) pairs with distinct betas."""
    pts = [(_scalar(field, b), _scalar(field, v)) for b, v in points]
    betas = [b for b, _ in pts]
    if len(set(betas)) != len(betas):
        raise ValueError("interpolation points must be distinct")
    one = Polynomial.one(field)
    master = one
    for b in betas:
        master = master * Polynomial._raw(field, [field.neg(b), 1])
    result = Polynomial.zero(field)
    for b, v in pts:
        if not v:
            continue
        basis, rem = divmod(master, Polynomial._raw(field, [field.neg(b), 1]))
        w = field.div(v, basis.eval(b))
        result = result + basis.scale(w)
    return result


def product(polys: Iterable[Polynomial], field: FieldSpec) -> Polynomial:
    out = Polynomial.one(field)
    for p in polys:
        out = out * p
    return out


def powmod(base: Polynomial, n: int, m: Polynomial) -> Polynomial:
    result = Polynomial.one(base.field) % m
    base = base % m
    while n:
        if n & 1:
            result = (result * base) % m
        base = (base * base) % m
        n >>= 1
    return result


def is_irreducible(f: Polynomial) -> bool:
    """Rabin's test over the coefficient field GF(q)."""
    n = f.degree
    if n == NEG_INF or n < 1:
        return False
    if n == 1:
        return True
    f = f.monic()
    field = f.field
    q = field.q
    x = Polynomial.x(field)

    def frob(k: int) -> Polynomial:
        # x^(q^k) mod f by repeated q-th powering
        h = x
        for _ in range(k):
            h = powmod(h, q, f)
        return h

    if frob(n) != x % f:
        return False
    for r in prime_factors(n):
        h = frob(n // r)
        if gcd(h - x, f).degree > 0:
            return False
    return True


# text format ----------------------------------------------------------------


def format_poly(p: Polynomial) -> str:
    """Comma-separated coefficients low-to-high; the zero polynomial is ``0``."""
    if not p.coeffs:
        return "0"
    fmt = p.field.format_element
    return ",".join(fmt(c) for c in p.coeffs)


def _split_top(text: str, sep: str) -> list[str]:
    # split on sep outside [...] groups
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_poly(field: FieldSpec, text: str) -> Polynomial:
    text = text.strip()
    if not text:
        return Polynomial.zero(field)
    return Polynomial._raw(field, [field.parse_element(t) for t in _split_top(text, ",")])


def format_word(field: FieldSpec, symbols: Sequence[int]) -> str:
    fmt = field.format_element
    return ",".join(fmt(c) for c in symbols)


def parse_word(field: FieldSpec, text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [field.parse_element(t) for t in _split_top(text, ",")]
