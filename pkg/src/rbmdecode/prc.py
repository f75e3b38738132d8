"""Polynomial remainder codes.

Symbols are residues a(x) mod m_l(x) for pairwise coprime moduli; codewords
come from messages with deg a < K = Σ_{l<k} deg m_l.  Decoding mirrors the
RS decoder with (N, K, Λ_f) in place of (n, k, Λ_e), where
Λ_f = m / gcd(E, m) is the error factor polynomial.
"""

from __future__ import annotations

from typing import Sequence

from .field import FieldSpec
from .partial_inverse import Inverse, PartialInverseProblem, modular_inverse, solve
from .poly import Polynomial, gcd, is_irreducible, product
from .rs import DecodeFailure, DecodeResult, NonExactDivision, recover_codeword_poly


def error_factor(E: Polynomial, m: Polynomial) -> Polynomial:
    """Λ_f = monic(m / gcd(E, m)); 1 when E = 0."""
    if not m:
        raise ZeroDivisionError("m must be nonzero")
    return (m // gcd(E, m)).monic()


class PrcCode:
    def __init__(self, field: FieldSpec, moduli: Sequence[Polynomial], k: int):
        n = len(moduli)
        if not 0 < k < n:
            raise ValueError(f"need 0 < k < n, got n={n}, k={k}")
        mods = []
        scalars = []
        for mi in moduli:
            if mi.field != field:
                raise ValueError("modulus over the wrong field")
            if mi.degree < 1:
                raise ValueError("moduli must have degree >= 1")
            scalars.append(mi.lcf)
            mods.append(mi.monic())
        for i in range(n):
            for j in range(i + 1, n):
                if gcd(mods[i], mods[j]).degree > 0:
                    raise ValueError(f"moduli {i} and {j} are not coprime")
        self.field = field
        self.moduli = tuple(mods)
        # leading coefficients of the moduli as supplied (1 if already monic)
        self.scalars = tuple(scalars)
        self.n, self.k = n, k
        self.m = product(mods, field)
        self.K = sum(mi.degree for mi in mods[:k])
        self.N = self.m.degree
        self.t = (self.N - self.K) // 2
        self.d = self.N - self.t
        self.all_irreducible = all(is_irreducible(mi) for mi in mods)
        self._idempotents = self._crt_idempotents()

    def __repr__(self):
        return f"PrcCode({self.field!r}, n={self.n}, k={self.k}, K={self.K}, N={self.N})"

    def _crt_idempotents(self) -> tuple[Polynomial, ...]:
        out = []
        for mi in self.moduli:
            M = self.m // mi
            inv = modular_inverse(M % mi, mi)
            if not isinstance(inv, Inverse):
                raise ValueError("moduli are not pairwise coprime")
            out.append((M * inv.value) % self.m)
        return tuple(out)

    def _check_word(self, w: Sequence[Polynomial]) -> tuple[Polynomial, ...]:
        if len(w) != self.n:
            raise ValueError(f"word length {len(w)} != n = {self.n}")
        for r, mi in zip(w, self.moduli):
            if r.field != self.field or r.degree >= mi.degree:
                raise ValueError(f"residue {r} is not reduced modulo {mi}")
        return tuple(w)

    def reduce(self, a: Polynomial) -> tuple[Polynomial, ...]:
        return tuple(a % mi for mi in self.moduli)

    def encode(self, a: Polynomial) -> tuple[Polynomial, ...]:
        if a.degree >= self.K:
            raise ValueError(f"message degree {a.degree} must be < K = {self.K}")
        return self.reduce(a)

    def crt_inverse(self, w: Sequence[Polynomial]) -> Polynomial:
        w = self._check_word(w)
        acc = Polynomial.zero(self.field)
        for r, e in zip(w, self._idempotents):
            if r:
                acc = acc + r * e
        return acc % self.m

    def error_locator(self, e: Sequence[Polynomial]) -> Polynomial:
        e = self._check_word(e)
        return product((mi for mi, r in zip(self.moduli, e) if r), self.field)

    def decode(self, y: Sequence[Polynomial], **solve_kwargs) -> DecodeResult:
        y = self._check_word(y)
        f = self.field
        Y = self.crt_inverse(y)
        if Y.degree < self.K:
            zero = Polynomial.zero(f)
            return DecodeResult(codeword=y, message=Y, error=(zero,) * self.n,
                                locator=Polynomial.one(f), error_count=0)
        lam = solve(PartialInverseProblem(Y, self.m, self.d), **solve_kwargs)
        if lam.degree > self.t:
            return DecodeResult(locator=lam, failure=DecodeFailure.LOCATOR_DEGREE_EXCEEDED)
        try:
            C = recover_codeword_poly(Y, lam, self.m)
        except NonExactDivision:
            return DecodeResult(locator=lam, failure=DecodeFailure.NON_EXACT_DIVISION)
        if C.degree >= self.K:
            return DecodeResult(locator=lam, failure=DecodeFailure.MESSAGE_DEGREE_EXCEEDED)
        c = self.reduce(C)
        e = tuple(a - b for a, b in zip(y, c))
        lam_f = error_factor(Y - C, self.m)
        if lam_f.degree > self.t or (lam % lam_f):
            return DecodeResult(locator=lam, failure=DecodeFailure.RESIDUAL_WEIGHT_EXCEEDED)
        return DecodeResult(codeword=c, message=C, error=e, locator=lam,
                            error_count=sum(1 for r in e if r))
