"""Reed-Solomon codes decoded through the alternative key equation.

The code is the evaluation code {(a(β0), ..., a(β_{n-1})) : deg a < k}.
A received word y is interpolated to Y(x) (deg < n); the locator is the
minimal partial inverse of Y modulo m(x) = ∏(x - β_l) with d = n - t,
t = ⌊(n-k)/2⌋, and the message follows from one exact division:
C(x) = (Y·Λ mod m) / Λ.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .field import FieldSpec
from .partial_inverse import PartialInverseProblem, solve
from .poly import Polynomial, product


class DecodeFailure(enum.Enum):
    LOCATOR_DEGREE_EXCEEDED = "LocatorDegreeExceeded"
    NON_EXACT_DIVISION = "NonExactDivision"
    RESIDUAL_WEIGHT_EXCEEDED = "ResidualWeightExceeded"
    MESSAGE_DEGREE_EXCEEDED = "MessageDegreeExceeded"

    def __str__(self):
        return self.value


class NonExactDivision(ArithmeticError):
    pass


@dataclass(frozen=True)
class DecodeResult:
    """Outcome of a bounded-distance decode.

    On success ``failure`` is None and every other field is populated; on
    failure only ``failure`` (and ``locator`` if one was computed) is set.
    Words are tuples: field ints for RS, polynomials for PRC.
    """

    codeword: Optional[tuple] = None
    message: Optional[Polynomial] = None
    error: Optional[tuple] = None
    locator: Optional[Polynomial] = None
    error_count: Optional[int] = None
    failure: Optional[DecodeFailure] = None

    @property
    def ok(self) -> bool:
        return self.failure is None


def recover_codeword_poly(Y: Polynomial, lam: Polynomial, m: Polynomial) -> Polynomial:
    """C(x) = (Y·Λ mod m) / Λ; raises NonExactDivision if Λ does not divide."""
    if not lam:
        raise ZeroDivisionError("locator must be nonzero")
    q, r = divmod((Y * lam) % m, lam)
    if r:
        raise NonExactDivision(f"remainder {r} after dividing by the locator")
    return q


def hamming_weight(word: Sequence) -> int:
    return sum(1 for c in word if c)


class RsCode:
    """Reed-Solomon code of length n and dimension k over ``field``.

    Pass ``betas`` for arbitrary distinct evaluation points, or ``dft=True``
    for β_l = α^l with α the first primitive n-th root of unity (then
    m(x) = x^n - 1).  With neither, the first n field elements are used.
    """

    def __init__(self, field: FieldSpec, n: int, k: int,
                 betas: Optional[Sequence[int]] = None, dft: bool = False):
        if not 0 < k < n:
            raise ValueError(f"need 0 < k < n, got n={n}, k={k}")
        if n > field.q:
            raise ValueError(f"n = {n} exceeds the field order {field.q}")
        self.field = field
        self.n, self.k = n, k
        self.t = (n - k) // 2
        self.d = n - self.t  # = ceil((n + k) / 2)
        self.dft_mode = bool(dft)
        if dft:
            if betas is not None:
                raise ValueError("give either betas or dft, not both")
            self.alpha = field.find_primitive_nth_root(n)
            betas = [field.pow(self.alpha, i) for i in range(n)]
        elif betas is None:
            betas = list(range(n))
        betas = tuple(field.check(b) for b in betas)
        if len(betas) != n or len(set(betas)) != n:
            raise ValueError("need n pairwise distinct evaluation points")
        self.betas = betas
        self.m = product((Polynomial._raw(field, [field.neg(b), 1]) for b in betas), field)
        if dft:
            xn1 = Polynomial._raw(field, [field.neg(1)] + [0] * (n - 1) + [1])
            if self.m != xn1:
                raise AssertionError("DFT evaluation points must give m = x^n - 1")
        # row l holds β_l^j, j = 0..n-1
        self._vander = np.array([self._powers(b) for b in betas], dtype=np.int64)
        # row j holds β_{-j mod n}^i: the inverse DFT as a matrix
        self._idft = self._vander[[(-j) % n for j in range(n)]] if dft else None
        self._interp = None
        self.l_min = k if (n - k) % 2 == 0 else k + 1

    def _powers(self, b: int) -> list[int]:
        f = self.field
        row = [1] * self.n
        for j in range(1, self.n):
            row[j] = f.mul(row[j - 1], b)
        return row

    def __repr__(self):
        kind = "dft" if self.dft_mode else "betas"
        return f"RsCode({self.field!r}, n={self.n}, k={self.k}, {kind})"

    # evaluation map and its inverse -------------------------------------------

    def evaluate(self, a: Polynomial) -> tuple[int, ...]:
        """(a(β0), ..., a(β_{n-1})) for any deg a < n."""
        if a.field != self.field:
            raise ValueError("polynomial over the wrong field")
        if a.degree >= self.n:
            raise ValueError(f"deg a = {a.degree} must be < n = {self.n}")
        c = list(a.coeffs)
        if not c:
            return (0,) * self.n
        return tuple(self.field.matvec(self._vander[:, :len(c)], c))

    def encode(self, a: Polynomial) -> tuple[int, ...]:
        if a.degree >= self.k:
            raise ValueError(f"message degree {a.degree} must be < k = {self.k}")
        return self.evaluate(a)

    def _interp_matrix(self):
        # column l holds the Lagrange basis polynomial for β_l; stored by rows
        if self._interp is None:
            f = self.field
            n = self.n
            mc = self.m.coeffs
            cols = []
            for b in self.betas:
                # synthetic division of m by (x - b)
                quo = [0] * n
                acc = 0
                for j in range(n, 0, -1):
                    acc = f.add(f.mul(acc, b), mc[j])
                    quo[j - 1] = acc
                w = f.inv(f.dot(quo, self._powers(b)))
                cols.append(f.scale(w, quo))
            self._interp = np.array(cols, dtype=np.int64).T.copy()
        return self._interp

    def transform_inverse(self, y: Sequence[int], method: str = "auto") -> Polynomial:
        """The unique Y with deg Y < n and Y(β_l) = y_l.

        ``method`` is 'lagrange', 'dft' (dft_mode only) or 'auto'.
        """
        y = self._check_word(y)
        f = self.field
        if method == "auto":
            method = "dft" if self.dft_mode else "lagrange"
        if method == "dft":
            if not self.dft_mode:
                raise ValueError("inverse DFT needs dft_mode")
            # Y_j = n^{-1} Σ_l y_l α^{-lj} = n^{-1} · y(β_{-j mod n})
            n_inv = f.inv(f.from_int(self.n))
            coeffs = f.scale(n_inv, f.matvec(self._idft, y))
        elif method == "lagrange":
            coeffs = f.matvec(self._interp_matrix(), y)
        else:
            raise ValueError(f"unknown method {method!r}")
        return Polynomial._raw(f, coeffs)

    def _check_word(self, y: Sequence[int]) -> tuple[int, ...]:
        if len(y) != self.n:
            raise ValueError(f"word length {len(y)} != n = {self.n}")
        return tuple(self.field.check(c) for c in y)

    # locator and syndromes ------------------------------------------------

    def error_locator(self, e: Sequence[int]) -> Polynomial:
        e = self._check_word(e)
        f = self.field
        return product((Polynomial._raw(f, [f.neg(b), 1])
                        for b, v in zip(self.betas, e) if v), f)

    def zero_irrelevant(self, Y: Polynomial) -> Polynomial:
        """Zero the coefficients Y_l, l < l_min, which cannot influence Λ."""
        if Y.degree >= self.n:
            raise ValueError("deg Y must be < n")
        return Polynomial._raw(self.field, [0] * self.l_min + list(Y.coeffs[self.l_min:]))

    def syndromes(self, y: Sequence[int]) -> tuple[int, ...]:
        Y = self.transform_inverse(y)
        return tuple(Y.coeff(i) for i in range(self.l_min, self.n))

    # decoding -------------------------------------------------------------

    def decode(self, y: Sequence[int], **solve_kwargs) -> DecodeResult:
        y = self._check_word(y)
        f = self.field
        Y = self.transform_inverse(y)
        if Y.degree < self.k:
            return DecodeResult(codeword=y, message=Y, error=(0,) * self.n,
                                locator=Polynomial.one(f), error_count=0)
        lam = solve(PartialInverseProblem(Y, self.m, self.d), **solve_kwargs)
        if lam.degree > self.t:
            return DecodeResult(locator=lam, failure=DecodeFailure.LOCATOR_DEGREE_EXCEEDED)
        try:
            C = recover_codeword_poly(Y, lam, self.m)
        except NonExactDivision:
            return DecodeResult(locator=lam, failure=DecodeFailure.NON_EXACT_DIVISION)
        if C.degree >= self.k:
            return DecodeResult(locator=lam, failure=DecodeFailure.MESSAGE_DEGREE_EXCEEDED)
        c = self.evaluate(C)
        e = tuple(f.sub(a, b) for a, b in zip(y, c))
        w = hamming_weight(e)
        if w > self.t or any(v and lam.eval(b) for b, v in zip(self.betas, e)):
            return DecodeResult(locator=lam, failure=DecodeFailure.RESIDUAL_WEIGHT_EXCEEDED)
        return DecodeResult(codeword=c, message=C, error=e, locator=lam, error_count=w)
