"""Independent reference solvers for the partial-inverse problem.

Neither routine shares code with the solver beyond polynomial arithmetic:
one is straight linear algebra on the definition, the other the extended
Euclidean remainder sequence.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .field import FieldSpec
from .partial_inverse import PartialInverseProblem
from .poly import Polynomial

MAX_ORACLE_DEGREE = 24


class OracleError(ValueError):
    pass


class Method(enum.Enum):
    LINEAR_SYSTEM = "linear_system"
    EUCLID = "euclid"


@dataclass(frozen=True)
class OracleReport:
    minimal_degree: int
    witness: Polynomial
    method: Method


def _reduced_columns(b: Polynomial, m: Polynomial):
    """Yield (j, coefficient list of b·x^j mod m) for j = 0, 1, ..."""
    f = b.field
    n = m.degree
    col = b % m
    x = Polynomial.x(f)
    j = 0
    while True:
        v = list(col.coeffs) + [0] * (n - len(col.coeffs))
        yield j, v
        col = (col * x) % m
        j += 1


def _smallest_annihilator(b: Polynomial, m: Polynomial, low: int, max_tau: int):
    """Smallest-degree nonzero Λ (deg <= max_tau) with coefficients
    low..deg m - 1 of bΛ mod m all zero, or None.

    Columns are added one at a time and reduced against the pivot rows found
    so far (pivot = first nonzero entry); the first column that reduces to
    zero gives the dependency, whose combination vector is Λ.
    """
    f = b.field
    n = m.degree
    rows = range(max(low, 0), n)
    basis = []  # (pivot, vector, combination)
    for tau, full in _reduced_columns(b, m):
        if tau > max_tau:
            return None
        v = [full[i] for i in rows]
        combo = [0] * tau + [1]
        for piv, bv, bc in basis:
            c = v[piv]
            if c:
                factor = f.div(c, bv[piv])
                f.sub_scaled(v, factor, bv)
                combo_ext = combo + [0] * (len(bc) - len(combo))
                f.sub_scaled(combo_ext, factor, bc)
                combo = combo_ext
        piv = next((i for i, c in enumerate(v) if c), None)
        if piv is None:
            return Polynomial(f, combo).monic()
        basis.append((piv, v, combo))


def linear_system_minimal(problem: PartialInverseProblem,
                          max_degree: int = MAX_ORACLE_DEGREE) -> OracleReport:
    """Minimal partial inverse by Gaussian elimination on its defining equations."""
    b, m, d = problem.b, problem.m, problem.d
    if m.degree > max_degree:
        raise OracleError(f"deg m = {m.degree} exceeds the oracle guard {max_degree}")
    lam = _smallest_annihilator(b, m, d, m.degree - d)
    if lam is None:
        raise OracleError("no solution within deg m - d; the degree bound is violated")
    return OracleReport(lam.degree, lam, Method.LINEAR_SYSTEM)


def euclid_partial_inverse(problem: PartialInverseProblem) -> OracleReport:
    """Run Euclid on (m, b) keeping the b-cofactor; stop at the first remainder of degree < d."""
    b, m, d = problem.b, problem.m, problem.d
    f = b.field
    r_prev, r = m, b
    t_prev, t = Polynomial.zero(f), Polynomial.one(f)
    while r.degree >= d:
        q, rem = divmod(r_prev, r)
        r_prev, r = r, rem
        t_prev, t = t, t_prev - q * t
    w = t.monic()
    return OracleReport(w.degree, w, Method.EUCLID)


def is_minimal_partial_inverse(b: Polynomial, m: Polynomial, lam: Polynomial) -> bool:
    """True if no nonzero Λ' of smaller degree has deg(bΛ' mod m) <= deg(bΛ mod m)."""
    if not lam:
        return False
    if lam.degree == 0:
        return True
    r = (b * lam) % m
    low = r.degree + 1 if r else 0
    smaller = _smallest_annihilator(b, m, low, lam.degree - 1)
    return smaller is None


def brute_force_minimal(problem: PartialInverseProblem) -> Polynomial:
    """Enumerate all monic Λ by increasing degree; only for tiny fields/degrees."""
    b, m, d = problem.b, problem.m, problem.d
    f: FieldSpec = b.field
    for tau in range(m.degree - d + 1):
        for v in range(f.q ** tau):
            low = []
            for _ in range(tau):
                v, c = divmod(v, f.q)
                low.append(c)
            lam = Polynomial(f, low + [1])
            if ((b * lam) % m).degree < d:
                return lam
    raise OracleError("no solution within the degree bound")
