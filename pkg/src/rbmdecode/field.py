"""Finite fields GF(p) and GF(p^e).

Elements are stored as plain ints.  For e > 1 an element with coefficient
sequence (c0, c1, ..., c_{e-1}) over GF(p) is packed as c0 + c1*p + ... so
that integer order coincides with the canonical enumeration order.  The
:class:`FieldElement` wrapper gives operator syntax with field checking on
top of that; the hot loops elsewhere in the package work on raw ints.
"""

from __future__ import annotations

import functools
import operator
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_ORDER = 2**31
# log/antilog tables are only built up to this order
TABLE_LIMIT = 2**16


class FieldError(ValueError):
    pass


class FieldMismatchError(FieldError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13):
        if n % small == 0:
            return n == small
    i = 17
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _digits(v: int, p: int, e: int) -> tuple[int, ...]:
    out = []
    for _ in range(e):
        v, r = divmod(v, p)
        out.append(r)
    return tuple(out)


def _pack(coeffs: Sequence[int], p: int) -> int:
    v = 0
    for c in reversed(coeffs):
        v = v * p + c
    return v


class FieldSpec:
    """Base class of the concrete field implementations.

    Use :func:`GF` or :func:`parse_field_spec` to obtain instances; they are
    cached so equal specs share lookup tables.
    """

    p: int
    e: int
    q: int
    modulus: tuple[int, ...] | None

    def __init__(self, p: int, e: int, modulus: tuple[int, ...] | None):
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = modulus

    # identity -------------------------------------------------------------

    def _key(self):
        return (self.p, self.e, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"GF({self.spec_string()})"

    def spec_string(self) -> str:
        if self.e == 1:
            return f"prime:{self.p}"
        return f"ext:{self.p}:{self.e}:" + ",".join(map(str, self.modulus))

    __str__ = spec_string

    @property
    def order(self) -> int:
        return self.q

    @property
    def characteristic(self) -> int:
        return self.p

    zero = 0
    one = 1

    # arithmetic on raw ints (overridden per representation) ---------------

    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def sub(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def inv(self, a: int) -> int:
        raise NotImplementedError

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a = self.inv(a)
            n = -n
        result = 1
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> F."""
        return n % self.p

    # vector kernels -------------------------------------------------------

    def dot(self, xs: Sequence[int], ys: Sequence[int]) -> int:
        acc = 0
        for x, y in zip(xs, ys):
            if x and y:
                acc = self.add(acc, self.mul(x, y))
        return acc

    def scale(self, c: int, xs: Sequence[int]) -> list[int]:
        mul = self.mul
        return [mul(c, x) for x in xs]

    def sub_scaled(self, u: list[int], c: int, v: Sequence[int], shift: int = 0) -> None:
        """In place: u[i + shift] -= c * v[i].  u must be long enough."""
        if not c:
            return
        mul, sub = self.mul, self.sub
        for i, x in enumerate(v):
            if x:
                u[i + shift] = sub(u[i + shift], mul(c, x))

    def matvec(self, matrix: np.ndarray, v: Sequence[int]) -> list[int]:
        """Matrix (2-D int array) times vector over the field."""
        dot = self.dot
        return [dot(row, v) for row in matrix.tolist()]

    # elements -------------------------------------------------------------

    def elements(self) -> range:
        """All q elements in canonical order."""
        return range(self.q)

    def is_element(self, a) -> bool:
        return isinstance(a, int) and 0 <= a < self.q

    def check(self, a) -> int:
        if isinstance(a, FieldElement):
            if a.field != self:
                raise FieldMismatchError(f"{a!r} is not an element of {self!r}")
            return a.value
        if not self.is_element(a):
            raise FieldError(f"{a!r} is not an element of {self!r}")
        return a

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Residue coefficients (low-to-high) of an extension-field element."""
        return _digits(a, self.p, self.e)

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.e or any(not 0 <= c < self.p for c in coeffs):
            raise FieldError(f"bad residue coefficients {list(coeffs)} for {self!r}")
        return _pack(coeffs, self.p)

    def format_element(self, a: int) -> str:
        if self.e == 1:
            return str(a)
        return "[" + " ".join(map(str, self.coeffs(a))) + "]"

    def parse_element(self, text: str) -> int:
        text = text.strip()
        try:
            if text.startswith("["):
                if not text.endswith("]"):
                    raise FieldError(f"unterminated element {text!r}")
                parts = text[1:-1].split()
                return self.from_coeffs([int(x) for x in parts])
            value = int(text)
        except ValueError as exc:
            raise FieldError(f"cannot parse field element {text!r}") from exc
        if not 0 <= value < self.q:
            raise FieldError(f"{value} out of range for {self!r}")
        return value

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            return FieldElement(self, self.check(value))
        if isinstance(value, (list, tuple)):
            return FieldElement(self, self.from_coeffs(value))
        if self.e == 1:
            return FieldElement(self, value % self.p)
        return FieldElement(self, self.check(value))

    # structure ------------------------------------------------------------

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative order")
        order = self.q - 1
        for f in prime_factors(self.q - 1):
            while order % f == 0 and self.pow(a, order // f) == 1:
                order //= f
        return order

    def find_primitive_nth_root(self, n: int) -> int:
        """First element (canonical order) of multiplicative order exactly n."""
        if n < 1 or (self.q - 1) % n:
            raise FieldError(f"{n} does not divide q - 1 = {self.q - 1}")
        factors = prime_factors(n)
        for a in range(1, self.q):
            if self.pow(a, n) != 1:
                continue
            if all(self.pow(a, n // f) != 1 for f in factors):
                return a
        raise AssertionError("unreachable: the multiplicative group is cyclic")

    def primitive_element(self) -> int:
        return self.find_primitive_nth_root(self.q - 1)


class PrimeField(FieldSpec):
    def __init__(self, p: int):
        super().__init__(p, 1, None)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a, n):
        if n < 0 and a == 0:
            raise ZeroDivisionError("zero to a negative power")
        return pow(a, n, self.p)

    def dot(self, xs, ys):
        return sum(map(operator.mul, xs, ys)) % self.p

    def scale(self, c, xs):
        p = self.p
        return [c * x % p for x in xs]

    def sub_scaled(self, u, c, v, shift=0):
        if not c:
            return
        p = self.p
        for i, x in enumerate(v):
            if x:
                u[i + shift] = (u[i + shift] - c * x) % p

    def matvec(self, matrix, v):
        # entries < 2^31, so each product fits in int64 before reduction
        vec = np.asarray(v, dtype=np.int64)
        return (((matrix * vec) % self.p).sum(axis=1) % self.p).tolist()


class _TableMixin:
    """Multiplication via discrete log / antilog tables."""

    def _build_tables(self, slow_mul) -> None:
        q = self.q
        self._slow_mul = slow_mul
        # generator: first element whose powers hit all q - 1 units
        factors = prime_factors(q - 1)

        def slow_pow(a, n):
            r = 1
            while n:
                if n & 1:
                    r = slow_mul(r, a)
                a = slow_mul(a, a)
                n >>= 1
            return r

        gen = next(
            a for a in range(2 if q > 2 else 1, q)
            if all(slow_pow(a, (q - 1) // f) != 1 for f in factors)
        )
        exp = [0] * (2 * (q - 1))
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = slow_mul(x, gen)
        for i in range(q - 1, 2 * (q - 1)):
            exp[i] = exp[i - (q - 1)]
        self.generator = gen
        self._exp = exp
        self._log = log

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        if a == 0:
            return 0
        return self._exp[self._log[a] - self._log[b] + self.q - 1]

    def pow(self, a, n):
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if n == 0 else 0
        return self._exp[(self._log[a] * n) % (self.q - 1)]


class BinaryExtensionField(_TableMixin, FieldSpec):
    """GF(2^e): addition is XOR; multiplication by tables when small enough."""

    def __init__(self, e: int, modulus: tuple[int, ...]):
        super().__init__(2, e, modulus)
        self._mod_int = _pack(modulus, 2)
        self._tables = self.q <= TABLE_LIMIT
        if self._tables:
            self._build_tables(self._clmul_mod)

    def _clmul_mod(self, a: int, b: int) -> int:
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a >> self.e:
                a ^= self._mod_int
        return r

    def add(self, a, b):
        return a ^ b

    sub = add

    def neg(self, a):
        return a

    def from_int(self, n):
        return n & 1

    def mul(self, a, b):
        if self._tables:
            return _TableMixin.mul(self, a, b)
        return self._clmul_mod(a, b)

    def inv(self, a):
        if self._tables:
            return _TableMixin.inv(self, a)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return FieldSpec.pow(self, a, self.q - 2)

    def div(self, a, b):
        if self._tables:
            return _TableMixin.div(self, a, b)
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if self._tables:
            return _TableMixin.pow(self, a, n)
        if a == 0 and n < 0:
            raise ZeroDivisionError("zero to a negative power")
        return FieldSpec.pow(self, a, n)

    def dot(self, xs, ys):
        if not self._tables:
            return FieldSpec.dot(self, xs, ys)
        exp, log = self._exp, self._log
        acc = 0
        for x, y in zip(xs, ys):
            if x and y:
                acc ^= exp[log[x] + log[y]]
        return acc

    def scale(self, c, xs):
        if not self._tables:
            return FieldSpec.scale(self, c, xs)
        if c == 0:
            return [0] * len(xs)
        exp, log = self._exp, self._log
        lc = log[c]
        return [exp[lc + log[x]] if x else 0 for x in xs]

    def sub_scaled(self, u, c, v, shift=0):
        if not self._tables:
            return FieldSpec.sub_scaled(self, u, c, v, shift)
        if not c:
            return
        exp, log = self._exp, self._log
        lc = log[c]
        for i, x in enumerate(v):
            if x:
                u[i + shift] ^= exp[lc + log[x]]

    def matvec(self, matrix, v):
        if not self._tables:
            return FieldSpec.matvec(self, matrix, v)
        if not hasattr(self, "_np_exp"):
            self._np_exp = np.array(self._exp, dtype=np.int64)
            self._np_log = np.array(self._log, dtype=np.int64)
        vec = np.asarray(v, dtype=np.int64)
        prod = self._np_exp[self._np_log[matrix] + self._np_log[vec]]
        prod[(matrix == 0) | (vec == 0)] = 0
        return np.bitwise_xor.reduce(prod, axis=1).tolist()


class ExtensionField(_TableMixin, FieldSpec):
    """GF(p^e) for odd p, e > 1."""

    def __init__(self, p: int, e: int, modulus: tuple[int, ...]):
        super().__init__(p, e, modulus)
        self._tables = self.q <= TABLE_LIMIT
        if self._tables:
            self._build_tables(self._poly_mul_mod)

    def _poly_mul_mod(self, a: int, b: int) -> int:
        p, e = self.p, self.e
        ac, bc = _digits(a, p, e), _digits(b, p, e)
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(ac):
            if x:
                for j, y in enumerate(bc):
                    prod[i + j] += x * y
        mod = self.modulus
        for top in range(2 * e - 2, e - 1, -1):
            c = prod[top] % p
            if c:
                for j in range(e + 1):
                    prod[top - e + j] -= c * mod[j]
        return _pack([c % p for c in prod[:e]], p)

    def add(self, a, b):
        p = self.p
        out, scale = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * scale
            scale *= p
        return out

    def neg(self, a):
        p = self.p
        out, scale = 0, 1
        while a:
            a, x = divmod(a, p)
            out += (-x % p) * scale
            scale *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self._tables:
            return _TableMixin.mul(self, a, b)
        return self._poly_mul_mod(a, b)

    def inv(self, a):
        if self._tables:
            return _TableMixin.inv(self, a)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return FieldSpec.pow(self, a, self.q - 2)

    def div(self, a, b):
        if self._tables:
            return _TableMixin.div(self, a, b)
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if self._tables:
            return _TableMixin.pow(self, a, n)
        if a == 0 and n < 0:
            raise ZeroDivisionError("zero to a negative power")
        return FieldSpec.pow(self, a, n)


class FieldElement:
    """An element bound to its field; arithmetic refuses to mix fields."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        self.field = field
        self.value = value

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def _wrap(self, v):
        return FieldElement(self.field, v)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(self.value, o))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, n: int):
        return self._wrap(self.field.pow(self.value, n))

    def inv(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def __repr__(self):
        return f"{self.field!r}({self.field.format_element(self.value)})"

    def __str__(self):
        return self.field.format_element(self.value)


# construction -----------------------------------------------------------------


def _monic_poly_candidates(p: int, e: int) -> Iterator[tuple[int, ...]]:
    # packed-integer order: lowest coefficient varies fastest
    for v in range(p**e):
        yield _digits(v, p, e) + (1,)


def is_irreducible_over_prime(coeffs: Sequence[int], p: int) -> bool:
    """Rabin's irreducibility test for a polynomial over GF(p) (low-to-high)."""
    from .poly import Polynomial, is_irreducible

    return is_irreducible(Polynomial(GF(p), list(coeffs)))


def find_irreducible(p: int, e: int) -> tuple[int, ...]:
    """First monic irreducible polynomial of degree e over GF(p).

    Candidates are scanned in packed-integer order, i.e. the coefficient
    sequence read as a base-p number with c0 as the least significant digit.
    """
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if e < 1:
        raise FieldError("degree must be >= 1")
    for cand in _monic_poly_candidates(p, e):
        if e > 1 and cand[0] == 0:
            continue
        if is_irreducible_over_prime(cand, p):
            return cand
    raise AssertionError("unreachable: irreducibles exist in every degree")


@functools.lru_cache(maxsize=None)
def _make_field(p: int, e: int, modulus: tuple[int, ...] | None) -> FieldSpec:
    if e == 1:
        return PrimeField(p)
    if p == 2:
        return BinaryExtensionField(e, modulus)
    return ExtensionField(p, e, modulus)


def GF(p: int, e: int = 1, modulus: Iterable[int] | None = None) -> FieldSpec:
    """Return the field GF(p^e).

    For e > 1 the modulus is a monic irreducible polynomial of degree e given
    low-to-high (a length-e sequence means the leading 1 is implied).  If it
    is omitted :func:`find_irreducible` supplies one.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise FieldError(f"characteristic {p!r} is not prime")
    if not isinstance(e, int) or e < 1:
        raise FieldError(f"extension degree {e!r} must be a positive integer")
    if p**e >= MAX_ORDER:
        raise FieldError(f"field order {p}^{e} exceeds 2^31")
    if e == 1:
        if modulus is not None:
            raise FieldError("prime fields take no modulus")
        return _make_field(p, 1, None)
    if modulus is None:
        mod = find_irreducible(p, e)
    else:
        mod = tuple(int(c) for c in modulus)
        if len(mod) == e:
            mod = mod + (1,)
        if len(mod) != e + 1 or mod[-1] != 1:
            raise FieldError(f"modulus {list(mod)} is not monic of degree {e}")
        if any(not 0 <= c < p for c in mod):
            raise FieldError(f"modulus coefficients must lie in [0, {p})")
        if not is_irreducible_over_prime(mod, p):
            raise FieldError(f"modulus {list(mod)} is reducible over GF({p})")
    return _make_field(p, e, mod)


def parse_field_spec(text: str) -> FieldSpec:
    """Parse ``prime:<p>`` or ``ext:<p>:<e>[:<c0,c1,...>]``."""
    parts = text.strip().split(":")
    try:
        if parts[0] == "prime" and len(parts) == 2:
            return GF(int(parts[1]))
        if parts[0] == "ext" and len(parts) in (3, 4):
            p, e = int(parts[1]), int(parts[2])
            modulus = None
            if len(parts) == 4 and parts[3].strip():
                modulus = [int(c) for c in parts[3].split(",")]
            return GF(p, e, modulus)
    except ValueError as exc:
        if isinstance(exc, FieldError):
            raise
        raise FieldError(f"cannot parse field spec {text!r}") from exc
    raise FieldError(f"cannot parse field spec {text!r}")


def find_primitive_nth_root(field: FieldSpec, n: int) -> int:
    return field.find_primitive_nth_root(n)
