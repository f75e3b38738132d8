"""Reproducible random instances, exhaustive sweeps, differential tests, timing.

Every trial draws from its own Philox stream keyed by (seed, trial index), so
a trial can be replayed alone and serial/parallel runs see identical inputs.
"""

from __future__ import annotations

import csv
import itertools
import math
import statistics
import time
from collections import Counter
from dataclasses import dataclass, field as dc_field
from typing import Iterator, Optional, Sequence, Union

import numpy as np

from .field import FieldSpec, GF
from .oracle import MAX_ORACLE_DEGREE, euclid_partial_inverse, linear_system_minimal
from .partial_inverse import InvariantViolation, PartialInverseProblem, SolverStats, solve
from .poly import Polynomial, gcd, product
from .prc import PrcCode
from .rs import RsCode, hamming_weight


def trial_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, index])))


def random_element(rng, field: FieldSpec, nonzero: bool = False) -> int:
    return int(rng.integers(1 if nonzero else 0, field.q))


def random_poly(rng, field: FieldSpec, degree: int, monic: bool = False) -> Polynomial:
    """Uniform polynomial of exactly the given degree (degree < 0 gives 0)."""
    if degree < 0:
        return Polynomial.zero(field)
    low = [int(v) for v in rng.integers(0, field.q, size=degree)]
    top = 1 if monic else random_element(rng, field, nonzero=True)
    return Polynomial._raw(field, low + [top])


def random_below(rng, field: FieldSpec, bound: int) -> Polynomial:
    """Uniform polynomial of degree < bound (possibly zero)."""
    return Polynomial._raw(field, [int(v) for v in rng.integers(0, field.q, size=bound)])


def special_modulus(field: FieldSpec, n: int, shape: str) -> Polynomial:
    if shape == "xpow":
        return Polynomial.monomial(field, n)
    if shape == "xn1":
        return Polynomial._raw(field, [field.neg(1)] + [0] * (n - 1) + [1])
    raise ValueError(f"unknown modulus shape {shape!r}")


def random_problem(rng, field: FieldSpec, max_deg: int, shape: str = "random",
                   degree: Optional[int] = None) -> PartialInverseProblem:
    """Random valid instance; deg m is uniform in [1, max_deg] unless ``degree`` is given.

    ``shape`` selects m: 'random' (any nonzero leading coefficient), 'xpow'
    for x^n or 'xn1' for x^n - 1.
    """
    n = degree if degree is not None else int(rng.integers(1, max_deg + 1))
    m = random_poly(rng, field, n) if shape == "random" else special_modulus(field, n, shape)
    b = random_below(rng, field, n)
    while not b:
        b = random_below(rng, field, n)
    d = int(rng.integers(1, n + 1))
    return PartialInverseProblem(b, m, d)


def all_problems(field: FieldSpec, max_deg: int) -> Iterator[PartialInverseProblem]:
    """Every valid (b, m, d) with 1 <= deg m <= max_deg."""
    q = field.q
    for n in range(1, max_deg + 1):
        for mc in itertools.product(range(q), repeat=n + 1):
            if not mc[-1]:
                continue
            m = Polynomial._raw(field, list(mc))
            for bc in itertools.product(range(q), repeat=n):
                if not any(bc):
                    continue
                b = Polynomial._raw(field, list(bc))
                for d in range(1, n + 1):
                    yield PartialInverseProblem(b, m, d)


# summaries -------------------------------------------------------------------


@dataclass
class TrialConfig:
    seed: int = 0
    trials: int = 0
    field: Optional[FieldSpec] = None
    # partial-inverse differential
    max_deg: int = 4
    exhaustive: bool = False
    m_shape: str = "random"
    compare_paths: bool = False
    check: bool = False
    # code sweeps
    code: Union[RsCode, PrcCode, None] = None
    weights: Sequence[int] = (1,)
    max_weight: Optional[int] = None
    messages: int = 1
    # benchmarking
    solve_size: int = 64
    csv_path: Optional[str] = None


@dataclass
class TrialSummary:
    trials: int = 0
    successes: int = 0
    alternatives: int = 0
    miscorrections: int = 0
    mismatches: int = 0
    failures: Counter = dc_field(default_factory=Counter)
    max_locator_degree: int = 0
    field_mults: int = 0
    times: list = dc_field(default_factory=list)
    mismatch_log: list = dc_field(default_factory=list)
    metrics: dict = dc_field(default_factory=dict)

    def record(self, outcome: str, detail: str = "") -> None:
        self.trials += 1
        if outcome == "success":
            self.successes += 1
        elif outcome == "alternative":
            self.alternatives += 1
        elif outcome == "miscorrection":
            self.miscorrections += 1
            self.mismatch_log.append(detail)
        elif outcome == "mismatch":
            self.mismatches += 1
            self.mismatch_log.append(detail)
        else:
            self.failures[outcome] += 1

    def merge(self, other: "TrialSummary") -> "TrialSummary":
        return TrialSummary(
            trials=self.trials + other.trials,
            successes=self.successes + other.successes,
            alternatives=self.alternatives + other.alternatives,
            miscorrections=self.miscorrections + other.miscorrections,
            mismatches=self.mismatches + other.mismatches,
            failures=self.failures + other.failures,
            max_locator_degree=max(self.max_locator_degree, other.max_locator_degree),
            field_mults=self.field_mults + other.field_mults,
            times=self.times + other.times,
            mismatch_log=self.mismatch_log + other.mismatch_log,
            metrics={**self.metrics, **other.metrics},
        )

    def counts(self) -> dict:
        """Everything except timings: equal configs must give equal counts."""
        return {
            "trials": self.trials, "successes": self.successes,
            "alternatives": self.alternatives, "miscorrections": self.miscorrections,
            "mismatches": self.mismatches, "failures": dict(self.failures),
            "max_locator_degree": self.max_locator_degree, "field_mults": self.field_mults,
        }

    @property
    def median(self) -> float:
        return statistics.median(self.times) if self.times else math.nan

    @property
    def p95(self) -> float:
        if not self.times:
            return math.nan
        s = sorted(self.times)
        return s[min(len(s) - 1, math.ceil(0.95 * len(s)) - 1)]

    def to_line(self) -> str:
        parts = [
            f"trials={self.trials}", f"successes={self.successes}",
            f"alternatives={self.alternatives}", f"miscorrections={self.miscorrections}",
            f"mismatches={self.mismatches}",
        ]
        parts += [f"failure.{k}={v}" for k, v in sorted(self.failures.items())]
        parts.append(f"max_locator_degree={self.max_locator_degree}")
        parts.append(f"field_mults={self.field_mults}")
        if self.times:
            parts.append(f"median_ms={self.median * 1e3:.3f}")
            parts.append(f"p95_ms={self.p95 * 1e3:.3f}")
        parts += [f"{k}={v:.4g}" if isinstance(v, float) else f"{k}={v}"
                  for k, v in self.metrics.items()]
        return " ".join(parts)


class _CsvLog:
    def __init__(self, path: Optional[str], header: Sequence[str]):
        self._fh = open(path, "w", newline="") if path else None
        self._w = csv.writer(self._fh) if self._fh else None
        if self._w:
            self._w.writerow(header)

    def row(self, *values) -> None:
        if self._w:
            self._w.writerow(values)

    def close(self) -> None:
        if self._fh:
            self._fh.close()


# partial-inverse differential ------------------------------------------------


def check_problem(problem: PartialInverseProblem, *, compare_paths: bool = False,
                  check: bool = False, stats: Optional[SolverStats] = None):
    """Solve and compare against both oracles.

    Returns (Λ or None, None if everything agrees else a description).
    """
    try:
        lam = solve(problem, check=check, stats=stats)
    except InvariantViolation as exc:
        return None, f"invariant {exc.label} violated: {exc}"
    if lam.degree > problem.m.degree - problem.d:
        return lam, f"deg Λ = {lam.degree} exceeds deg m - d"
    if compare_paths:
        generic = solve(problem, force_generic=True, check=check)
        if generic != lam:
            return lam, f"fast path {lam} != generic {generic}"
    eu = euclid_partial_inverse(problem).witness
    if eu != lam:
        return lam, f"solver {lam} != euclid {eu}"
    if problem.m.degree <= MAX_ORACLE_DEGREE:
        ls = linear_system_minimal(problem).witness
        if ls != lam:
            return lam, f"solver {lam} != linear system {ls}"
    return lam, None


def run_pi_differential(config: TrialConfig) -> TrialSummary:
    """Solver vs. both oracles (and optionally fast vs. generic path) per instance.

    Mismatches are recorded with the seed and index needed to replay them.
    """
    field = config.field or GF(2)
    summary = TrialSummary()
    stats = SolverStats()
    log = _CsvLog(config.csv_path, ["index", "outcome", "deg_m", "d", "deg_lambda", "seconds"])
    if config.exhaustive:
        instances = enumerate(all_problems(field, config.max_deg))
    else:
        instances = ((i, random_problem(trial_rng(config.seed, i), field,
                                        config.max_deg, config.m_shape))
                     for i in range(config.trials))
    for i, problem in instances:
        t0 = time.perf_counter()
        lam, err = check_problem(problem, compare_paths=config.compare_paths,
                                 check=config.check, stats=stats)
        dt = time.perf_counter() - t0
        summary.times.append(dt)
        if err is None:
            summary.record("success")
        else:
            replay = f"index={i}" if config.exhaustive else f"seed={config.seed} index={i}"
            summary.record("mismatch", f"{replay} b={problem.b} m={problem.m} d={problem.d}: {err}")
        if lam is not None:
            summary.max_locator_degree = max(summary.max_locator_degree, lam.degree)
        log.row(i, "success" if err is None else "mismatch", problem.m.degree, problem.d,
                lam.degree if lam is not None else "", f"{dt:.6g}")
    log.close()
    summary.field_mults = stats.mults
    return summary


# code sweeps -------------------------------------------------------------------


def rs_error_patterns(code: RsCode, max_weight: int, min_weight: int = 0) -> Iterator[tuple]:
    """Every error word of Hamming weight in [min_weight, max_weight]."""
    q = code.field.q
    for w in range(min_weight, max_weight + 1):
        for pos in itertools.combinations(range(code.n), w):
            for vals in itertools.product(range(1, q), repeat=w):
                e = [0] * code.n
                for p, v in zip(pos, vals):
                    e[p] = v
                yield tuple(e)


def _nonzero_residues(field: FieldSpec, deg: int) -> Iterator[Polynomial]:
    for cs in itertools.product(range(field.q), repeat=deg):
        if any(cs):
            yield Polynomial._raw(field, list(cs))


def prc_error_patterns(code: PrcCode, max_degree_sum: int, min_positions: int = 0) -> Iterator[tuple]:
    """Every error word whose erroneous positions' moduli degrees sum to <= max_degree_sum."""
    f = code.field
    zero = Polynomial.zero(f)
    degs = [mi.degree for mi in code.moduli]
    for r in range(min_positions, code.n + 1):
        for pos in itertools.combinations(range(code.n), r):
            if sum(degs[i] for i in pos) > max_degree_sum:
                continue
            for vals in itertools.product(*[_nonzero_residues(f, degs[i]) for i in pos]):
                e = [zero] * code.n
                for p, v in zip(pos, vals):
                    e[p] = v
                yield tuple(e)


def random_message(rng, code) -> Polynomial:
    bound = code.K if isinstance(code, PrcCode) else code.k
    return random_below(rng, code.field, bound)


def random_error(rng, code, weight: int) -> tuple:
    """Weight positions chosen without replacement, uniform nonzero values."""
    f = code.field
    pos = sorted(int(p) for p in rng.choice(code.n, size=weight, replace=False))
    if isinstance(code, PrcCode):
        e = [Polynomial.zero(f)] * code.n
        for p in pos:
            deg = code.moduli[p].degree
            v = int(rng.integers(1, f.q ** deg))
            digits = []
            for _ in range(deg):
                v, c = divmod(v, f.q)
                digits.append(c)
            e[p] = Polynomial._raw(f, digits)
        return tuple(e)
    e = [0] * code.n
    for p in pos:
        e[p] = random_element(rng, f, nonzero=True)
    return tuple(e)


def add_words(code, c, e) -> tuple:
    if isinstance(code, PrcCode):
        return tuple(a + b for a, b in zip(c, e))
    return tuple(code.field.add(a, b) for a, b in zip(c, e))


def true_radius_measure(code, e) -> int:
    """Hamming weight (RS) or deg Λ_f (PRC) of an error word, computed directly."""
    if isinstance(code, PrcCode):
        # for coprime moduli gcd(E, m) = ∏ gcd(e_l, m_l)
        return sum(mi.degree - gcd(r, mi).degree for r, mi in zip(e, code.moduli) if r)
    return hamming_weight(e)


def verify_within_radius(code, y, result) -> bool:
    """Independent re-check of a claimed success; does not trust the codec."""
    C = result.message
    if isinstance(code, PrcCode):
        if C.degree >= code.K:
            return False
        c = tuple(C % mi for mi in code.moduli)
        if c != tuple(result.codeword):
            return False
        e = tuple(a - b for a, b in zip(y, c))
        return true_radius_measure(code, e) <= code.t
    if C.degree >= code.k:
        return False
    c = tuple(C.eval(b) for b in code.betas)
    if c != tuple(result.codeword):
        return False
    return sum(1 for a, b in zip(y, c) if a != b) <= code.t


def expected_locator(code, e) -> Polynomial:
    """Λ_e for RS; Λ_f (= Λ_e for irreducible moduli) for PRC."""
    f = code.field
    if isinstance(code, PrcCode):
        return product(((mi // gcd(r, mi)) for r, mi in zip(e, code.moduli) if r), f).monic()
    return product((Polynomial._raw(f, [f.neg(b), 1]) for b, v in zip(code.betas, e) if v), f)


def classify(code, c, e, y, result) -> tuple[str, str]:
    within = true_radius_measure(code, e) <= code.t
    if result.ok:
        if not verify_within_radius(code, y, result):
            return "miscorrection", "success beyond the decoding radius"
        if tuple(result.codeword) == tuple(c):
            lam_e = expected_locator(code, e)
            if within and result.locator != lam_e:
                return "mismatch", f"locator {result.locator} != {lam_e}"
            return "success", ""
        if within:
            return "miscorrection", "wrong codeword although the error was within radius"
        return "alternative", ""
    if within:
        return "mismatch", f"typed failure {result.failure} within radius"
    return str(result.failure), ""


def run_code_sweep(config: TrialConfig) -> TrialSummary:
    """Decode corrupted codewords and classify every outcome.

    With ``max_weight`` set, every error pattern up to that weight (RS) or
    moduli-degree sum (PRC) is applied to ``messages`` random codewords;
    otherwise ``trials`` random corruptions are drawn with weights sampled
    uniformly from ``weights``.
    """
    code = config.code
    summary = TrialSummary()
    log = _CsvLog(config.csv_path, ["index", "outcome", "weight", "deg_lambda", "seconds"])
    stats = SolverStats()

    def one(index, c, e, where):
        y = add_words(code, c, e)
        t0 = time.perf_counter()
        result = code.decode(y, stats=stats)
        dt = time.perf_counter() - t0
        summary.times.append(dt)
        outcome, detail = classify(code, c, e, y, result)
        summary.record(outcome, f"{where}: {detail}" if detail else "")
        if result.ok:
            summary.max_locator_degree = max(summary.max_locator_degree, result.locator.degree)
        log.row(index, outcome, true_radius_measure(code, e),
                result.locator.degree if result.locator is not None else "", f"{dt:.6g}")

    if config.max_weight is not None:
        index = 0
        for msg_i in range(config.messages):
            c = code.encode(random_message(trial_rng(config.seed, msg_i), code))
            if isinstance(code, PrcCode):
                patterns = prc_error_patterns(code, config.max_weight)
            else:
                patterns = rs_error_patterns(code, config.max_weight)
            for e in patterns:
                one(index, c, e, f"seed={config.seed} message={msg_i} pattern={index}")
                index += 1
    else:
        weights = list(config.weights)
        for i in range(config.trials):
            rng = trial_rng(config.seed, i)
            c = code.encode(random_message(rng, code))
            w = weights[int(rng.integers(0, len(weights)))]
            one(i, c, random_error(rng, code, w), f"seed={config.seed} index={i}")
    log.close()
    summary.field_mults = stats.mults
    return summary


# benchmarking -------------------------------------------------------------------


def _time_solves(problems, repeats: int = 3, **kwargs) -> float:
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        for p in problems:
            solve(p, **kwargs)
        best = min(best, time.perf_counter() - t0)
    return best / max(1, len(problems))


def solve_scaling(field: FieldSpec, size: int, seed: int = 0, reps: int = 5) -> tuple[float, float]:
    """Seconds per generic solve at deg m = size and 2*size (random monic m, d = deg m / 2)."""
    out = []
    for n in (size, 2 * size):
        probs = []
        for i in range(reps):
            rng = trial_rng(seed + n, i)
            m = random_poly(rng, field, n, monic=True)
            b = random_poly(rng, field, n - 1)
            probs.append(PartialInverseProblem(b, m, n // 2))
        out.append(_time_solves(probs, force_generic=True))
    return out[0], out[1]


def bench(config: TrialConfig) -> TrialSummary:
    """Time decodes of ``config.code`` and solve-only scaling.

    Metrics: decode median/p95 (in the summary line), ``scaling_ratio`` for
    solves at sizes N and 2N with N = ``solve_size`` (about 4 for quadratic
    cost), the implied exponent, and ``generic_over_fast`` for m = x^n - 1.
    """
    summary = TrialSummary()
    if config.trials <= 0:
        return summary
    if config.code is not None:
        summary = run_code_sweep(TrialConfig(seed=config.seed, trials=config.trials,
                                             code=config.code, weights=config.weights,
                                             csv_path=config.csv_path))
    field = config.field or (config.code.field if config.code is not None else GF(2, 8))
    N = config.solve_size
    reps = max(3, min(10, config.trials))
    t_small, t_big = solve_scaling(field, N, config.seed, reps)
    summary.metrics["solve_ms_N"] = t_small * 1e3
    summary.metrics["solve_ms_2N"] = t_big * 1e3
    summary.metrics["scaling_ratio"] = t_big / t_small
    summary.metrics["scaling_exponent"] = math.log2(t_big / t_small)
    probs = [random_problem(trial_rng(config.seed, 10_000 + i), field, N, "xn1", degree=N)
             for i in range(reps)]
    generic = _time_solves(probs, force_generic=True)
    fast = _time_solves(probs)
    summary.metrics["generic_over_fast"] = generic / fast
    return summary
