"""Minimal partial inverses by a Berlekamp-Massey-style iteration run from the top down.

Given nonzero b(x), m(x) with deg b < deg m and 1 <= d <= deg m, find the
nonzero Λ(x) of smallest degree with deg(b(x)Λ(x) mod m(x)) < d.  The
solution is unique up to a scalar; :func:`solve` returns it monic.

Two realizations of the inner update share one state machine:

* the generic path keeps both remainders r1 = bΛ1 mod m and r2 = bΛ2 mod m
  and updates them with the same two-term recurrence as Λ1, so finding the
  next degree/leading coefficient is a downward scan of r1;
* for m = x^ν and m = x^n - 1 the remainder is never stored; the next
  coefficient is a short convolution of b with Λ1 (cyclic for x^n - 1).

With ``check=True`` the loop invariants of the correctness proof are
evaluated at their program points and any violation raises
:class:`InvariantViolation`.  The labels used are

=====  ==================================================================
A.1    d1 > d2 >= d at loop head
A.2    deg Λ2 = deg m - d1 at loop head
A.3    deg Λ2 > deg Λ1 at loop head
A.4    Λ2 is a minimal partial inverse at loop head
A.5    deg(bΛ1 mod m) < d1 right after the update
A.6    deg Λ1 = deg m - d2 right after the update
A.7    deg Λ1 > deg Λ2 right after the update
A.8    the returned Λ1 is a minimal partial inverse
A.9    Λ1 is a minimal partial inverse before the swap
A.10   d1, d2, κ1, κ2 (and tracked r1, r2) match bΛ mod m recomputed
=====  ==================================================================

The minimality checks (A.4, A.8, A.9) solve a small linear system each and
are skipped when deg m exceeds ``MINIMALITY_CHECK_LIMIT``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .field import FieldSpec
from .poly import NEG_INF, Polynomial

MINIMALITY_CHECK_LIMIT = 24


class InvalidProblemError(ValueError):
    pass


class InvariantViolation(AssertionError):
    def __init__(self, label: str, detail: str):
        super().__init__(f"{label}: {detail}")
        self.label = label


@dataclass(frozen=True)
class PartialInverseProblem:
    b: Polynomial
    m: Polynomial
    d: int

    def __post_init__(self):
        b, m, d = self.b, self.m, self.d
        if not isinstance(b, Polynomial) or not isinstance(m, Polynomial):
            raise InvalidProblemError("b and m must be polynomials")
        if b.field != m.field:
            raise InvalidProblemError("b and m live over different fields")
        if not b or not m:
            raise InvalidProblemError("b and m must be nonzero")
        if b.degree >= m.degree:
            raise InvalidProblemError(f"need deg b < deg m, got {b.degree} >= {m.degree}")
        if not isinstance(d, int) or not 1 <= d <= m.degree:
            raise InvalidProblemError(f"need 1 <= d <= deg m = {m.degree}, got d = {d}")

    @property
    def field(self) -> FieldSpec:
        return self.b.field


@dataclass
class SolverStats:
    """Counters accumulated across solves (pass the same instance repeatedly)."""

    solves: int = 0
    updates: int = 0
    swaps: int = 0
    mults: int = 0
    fast_path: int = 0


@dataclass
class SolverState:
    lambda1: list
    lambda2: list
    d1: int
    d2: int
    kappa1: int
    kappa2: int
    r1: Optional[list] = None
    r2: Optional[list] = None


def _deg(v) -> float:
    return len(v) - 1 if v else NEG_INF


def _trim(v: list) -> list:
    while v and not v[-1]:
        v.pop()
    return v


# special moduli ---------------------------------------------------------------


def modulus_shape(m: Polynomial) -> str:
    """'xpow' for x^ν, 'xn1' for x^n - 1, otherwise 'generic'."""
    c = m.coeffs
    if len(c) < 2 or c[-1] != 1 or any(c[1:-1]):
        return "generic"
    if c[0] == 0:
        return "xpow"
    if c[0] == m.field.neg(1):
        return "xn1"
    return "generic"


class _Checker:
    def __init__(self, problem: PartialInverseProblem, minimality: bool):
        self.b, self.m, self.d = problem.b, problem.m, problem.d
        self.f = problem.field
        self.degm = problem.m.degree
        self.minimality = minimality and self.degm <= MINIMALITY_CHECK_LIMIT

    def rem(self, lam: list) -> Polynomial:
        return (self.b * Polynomial._raw(self.f, list(lam))) % self.m

    def fail(self, label, detail):
        raise InvariantViolation(label, detail)

    def minimal(self, label: str, lam: list) -> None:
        if not self.minimality:
            return
        from .oracle import is_minimal_partial_inverse

        if not is_minimal_partial_inverse(self.b, self.m, Polynomial._raw(self.f, list(lam))):
            self.fail(label, f"{lam} is not a minimal partial inverse")

    def tracked(self, st: SolverState, first: bool) -> None:
        r2 = self.rem(st.lambda2)
        if r2.degree != st.d2 or r2.lcf != st.kappa2:
            self.fail("A.10", f"d2/κ2 = {st.d2}/{st.kappa2} but bΛ2 mod m has {r2.degree}/{r2.lcf}")
        if st.r2 is not None and tuple(st.r2) != r2.coeffs:
            self.fail("A.10", "tracked r2 differs from bΛ2 mod m")
        if first:
            return
        r1 = self.rem(st.lambda1)
        if r1.degree != st.d1 or r1.lcf != st.kappa1:
            self.fail("A.10", f"d1/κ1 = {st.d1}/{st.kappa1} but bΛ1 mod m has {r1.degree}/{r1.lcf}")
        if st.r1 is not None and tuple(st.r1) != r1.coeffs:
            self.fail("A.10", "tracked r1 differs from bΛ1 mod m")

    def head(self, st: SolverState, first: bool) -> None:
        if not (st.d1 > st.d2 >= self.d):
            self.fail("A.1", f"d1={st.d1}, d2={st.d2}, d={self.d}")
        if _deg(st.lambda2) != self.degm - st.d1:
            self.fail("A.2", f"deg Λ2 = {_deg(st.lambda2)} != deg m - d1 = {self.degm - st.d1}")
        if not _deg(st.lambda2) > _deg(st.lambda1):
            self.fail("A.3", f"deg Λ2 = {_deg(st.lambda2)} <= deg Λ1 = {_deg(st.lambda1)}")
        self.minimal("A.4", st.lambda2)
        self.tracked(st, first)

    def after_update(self, st: SolverState, d1_before: int) -> None:
        r1 = self.rem(st.lambda1)
        if not r1.degree < d1_before:
            self.fail("A.5", f"deg(bΛ1 mod m) = {r1.degree} >= d1 = {d1_before}")
        if st.r1 is not None and tuple(_trim(list(st.r1))) != r1.coeffs:
            self.fail("A.10", "two-term remainder recurrence disagrees with bΛ1 mod m")
        if _deg(st.lambda1) != self.degm - st.d2:
            self.fail("A.6", f"deg Λ1 = {_deg(st.lambda1)} != deg m - d2 = {self.degm - st.d2}")
        if not _deg(st.lambda1) > _deg(st.lambda2):
            self.fail("A.7", f"deg Λ1 = {_deg(st.lambda1)} <= deg Λ2 = {_deg(st.lambda2)}")


# the solver -------------------------------------------------------------------


def _update_lambda(f: FieldSpec, st: SolverState, stats: Optional[SolverStats]) -> None:
    """Λ1 := κ2 Λ1 - κ1 x^(d1-d2) Λ2 (and likewise r1 on the generic path)."""
    shift = st.d1 - st.d2
    lam = f.scale(st.kappa2, st.lambda1)
    need = shift + len(st.lambda2)
    if len(lam) < need:
        lam.extend([0] * (need - len(lam)))
    f.sub_scaled(lam, st.kappa1, st.lambda2, shift)
    st.lambda1 = _trim(lam)
    if st.r1 is not None:
        r = f.scale(st.kappa2, st.r1)
        f.sub_scaled(r, st.kappa1, st.r2, shift)
        st.r1 = r
    if stats is not None:
        stats.updates += 1
        stats.mults += len(st.lambda1) + len(st.lambda2)
        if st.r1 is not None:
            stats.mults += len(st.r1) + len(st.r2)


def _run(problem: PartialInverseProblem, *, force_generic: bool, check: bool,
         check_minimality: bool, stats: Optional[SolverStats]) -> tuple[list, Optional[list]]:
    b, m, d = problem.b, problem.m, problem.d
    f = problem.field
    if stats is not None:
        stats.solves += 1
    if b.degree < d:
        return [1], list(b.coeffs)

    shape = "generic" if force_generic else modulus_shape(m)
    bc = b.coeffs
    n = m.degree
    chk = _Checker(problem, check_minimality) if check else None

    st = SolverState(lambda1=[], lambda2=[1], d1=m.degree, d2=b.degree,
                     kappa1=m.lcf, kappa2=b.lcf)
    if shape == "generic":
        st.r1 = list(m.coeffs)
        st.r2 = list(bc)
    elif stats is not None:
        stats.fast_path += 1

    if shape == "xn1":
        def kappa_at(j: int) -> int:
            lam = st.lambda1
            return f.dot(lam, [bc[(j - i) % n] if (j - i) % n < len(bc) else 0
                               for i in range(len(lam))])
    elif shape == "xpow":
        def kappa_at(j: int) -> int:
            lam = st.lambda1
            top = min(len(lam), j + 1)
            return f.dot(lam[:top], [bc[j - i] if j - i < len(bc) else 0 for i in range(top)])
    else:
        kappa_at = None

    at_head = True
    first = True
    while True:
        if chk and at_head:
            chk.head(st, first)
        at_head = False
        d1_before = st.d1
        _update_lambda(f, st, stats)
        if chk:
            chk.after_update(st, d1_before)
        first = False

        # next nonzero coefficient of bΛ1 mod m strictly below d1
        j = st.d1 - 1
        if kappa_at is None:
            r1 = st.r1
            while j >= d and not r1[j]:
                j -= 1
            if j < d:
                return st.lambda1, _trim(r1[:d])
            kappa = r1[j]
            del r1[j + 1:]
        else:
            while True:
                if j < d:
                    return st.lambda1, None
                kappa = kappa_at(j)
                if stats is not None:
                    stats.mults += len(st.lambda1)
                if kappa:
                    break
                j -= 1
        st.d1, st.kappa1 = j, kappa

        if st.d1 < st.d2:
            if chk:
                chk.minimal("A.9", st.lambda1)
            st.lambda1, st.lambda2 = st.lambda2, st.lambda1
            st.d1, st.d2 = st.d2, st.d1
            st.kappa1, st.kappa2 = st.kappa2, st.kappa1
            st.r1, st.r2 = st.r2, st.r1
            at_head = True
            if stats is not None:
                stats.swaps += 1


def solve_with_remainder(problem: PartialInverseProblem, *, force_generic: bool = False,
                         check: bool = False, check_minimality: bool = True,
                         stats: Optional[SolverStats] = None) -> tuple[Polynomial, Polynomial]:
    """Return the monic minimal Λ together with r = bΛ mod m."""
    f = problem.field
    lam, rem = _run(problem, force_generic=force_generic, check=check,
                    check_minimality=check_minimality, stats=stats)
    lam_p = Polynomial._raw(f, lam)
    if rem is None:
        rem_p = (problem.b * lam_p) % problem.m
    else:
        rem_p = Polynomial._raw(f, rem)
    if check:
        recomputed = (problem.b * lam_p) % problem.m
        if recomputed != rem_p:
            raise InvariantViolation("A.10", "returned remainder differs from bΛ mod m")
        if not recomputed.degree < problem.d:
            raise InvariantViolation("A.5", "returned Λ does not satisfy the degree condition")
        if lam_p.degree > problem.m.degree - problem.d:
            raise InvariantViolation("bound", "deg Λ exceeds deg m - d")
        if problem.b.degree >= problem.d:
            _Checker(problem, check_minimality).minimal("A.8", lam)
    c = f.inv(lam_p.lcf)
    return lam_p.scale(c), rem_p.scale(c)


def solve(problem: PartialInverseProblem, **kwargs) -> Polynomial:
    """Monic minimal partial inverse of ``problem.b`` modulo ``problem.m``."""
    return solve_with_remainder(problem, **kwargs)[0]


def solve_partial_inverse(b: Polynomial, m: Polynomial, d: int, **kwargs) -> Polynomial:
    return solve(PartialInverseProblem(b, m, d), **kwargs)


# applications -----------------------------------------------------------------


@dataclass(frozen=True)
class Inverse:
    value: Polynomial


@dataclass(frozen=True)
class ZeroDivisor:
    annihilator: Polynomial


def modular_inverse(b: Polynomial, m: Polynomial, **kwargs):
    """Inverse of b in F[x]/m(x), or ZeroDivisor(m / gcd(b, m)) if none exists."""
    lam, r = solve_with_remainder(PartialInverseProblem(b, m, 1), **kwargs)
    if r:
        # r is a nonzero constant c with bΛ ≡ c
        return Inverse(lam.scale(b.field.inv(r.lcf)))
    return ZeroDivisor(lam)


def solve_standard_key_equation(S: Polynomial, n: int, k: int, **kwargs) -> tuple[Polynomial, Polynomial]:
    """Solve S Λ ≡ Γ mod x^(n-k) for the minimal monic Λ; return (Λ, Γ)."""
    if not 0 < k < n:
        raise InvalidProblemError(f"need 0 < k < n, got n={n}, k={k}")
    f = S.field
    if S.degree >= n - k:
        raise InvalidProblemError(f"need deg S < n - k = {n - k}")
    if not S:
        return Polynomial.one(f), S
    t = n - k
    d = (t + 1) // 2
    return solve_with_remainder(PartialInverseProblem(S, Polynomial.monomial(f, t), d), **kwargs)


def irrelevant_bounds(m_degree: int, d: int) -> tuple[int, int]:
    """Thresholds below which coefficients of b (first) and m (second) do not matter."""
    if not 1 <= d <= m_degree:
        raise InvalidProblemError(f"need 1 <= d <= {m_degree}")
    return 2 * d - m_degree, 2 * d - m_degree + 1

