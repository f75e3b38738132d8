"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

import math
import statistics
import time

import pytest

from rbmdecode.field import GF
from rbmdecode.harness import (
    TrialConfig,
    add_words,
    all_problems,
    check_problem,
    prc_error_patterns,
    random_below,
    random_error,
    random_message,
    random_poly,
    random_problem,
    rs_error_patterns,
    run_code_sweep,
    run_pi_differential,
    solve_scaling,
    trial_rng,
    verify_within_radius,
)
from rbmdecode.partial_inverse import (
    Inverse,
    PartialInverseProblem,
    ZeroDivisor,
    irrelevant_bounds,
    modular_inverse,
    solve,
    solve_with_remainder,
)
from rbmdecode.poly import Polynomial, gcd
from rbmdecode.prc import PrcCode, error_factor
from rbmdecode.rs import RsCode

SEED = 20240901


def _moduli():
    F = GF(2)
    return [Polynomial(F, c) for c in ([0, 1], [1, 1], [1, 1, 1], [1, 1, 0, 1], [1, 0, 1, 1])]


# 1, 2 ------------------------------------------------------------------------


def test_criterion_01_three_way_agreement(acceptance):
    t0 = time.perf_counter()
    s2 = run_pi_differential(TrialConfig(field=GF(2), max_deg=5, exhaustive=True))
    s3 = run_pi_differential(TrialConfig(field=GF(3), max_deg=4, exhaustive=True))
    elapsed = time.perf_counter() - t0
    n = s2.trials + s3.trials
    bad = s2.mismatches + s3.mismatches
    ok = bad == 0 and elapsed < 60 and s2.trials > 0 and s3.trials > 0
    acceptance(1, ok, f"instances={n} (GF(2): {s2.trials}, GF(3): {s3.trials}) mismatches={bad} "
                      f"runtime={elapsed:.1f}s (limit 60s)")
    assert ok, (s2.mismatch_log + s3.mismatch_log)[:5]


def test_criterion_02_degree_bound_and_assertions(acceptance):
    violations = []
    count = 0
    for F, max_deg in ((GF(2), 5), (GF(3), 4)):
        for pr in all_problems(F, max_deg):
            lam, err = check_problem(pr, check=True)
            count += 1
            if err:
                violations.append(err)
    F7 = GF(7)
    for i in range(10_000):
        pr = random_problem(trial_rng(SEED, i), F7, 12)
        lam, err = check_problem(pr, check=True)
        count += 1
        if err:
            violations.append(f"seed={SEED} index={i}: {err}")
    ok = not violations
    acceptance(2, ok, f"instances={count} checked with assertions A.1-A.10 and deg bound, violations={len(violations)}")
    assert ok, violations[:5]


# 3 ------------------------------------------------------------------------------


def _coprime_case(rng, F):
    while True:
        n = int(rng.integers(1, 33))
        m = random_poly(rng, F, n)
        b = random_below(rng, F, n)
        if b and gcd(b, m).degree == 0:
            return b, m


def _non_coprime_case(rng, F):
    while True:
        g = random_poly(rng, F, int(rng.integers(1, 9)), monic=True)
        h = random_poly(rng, F, int(rng.integers(1, 17)))
        m = g * h
        u = random_below(rng, F, h.degree)
        if u:
            return g * u, m


def test_criterion_03_inversion(acceptance):
    failures = []
    counts = {}
    for F in (GF(2, 8), GF(929)):
        inv_n = zd_n = 0
        for i in range(1_000):
            b, m = _coprime_case(trial_rng(SEED + 3, i), F)
            res = modular_inverse(b, m)
            if not (isinstance(res, Inverse) and (b * res.value) % m == Polynomial.one(F)):
                failures.append(f"{F} coprime index={i}")
            inv_n += 1
        for i in range(1_000):
            b, m = _non_coprime_case(trial_rng(SEED + 4, i), F)
            res = modular_inverse(b, m)
            expected = (m // gcd(b, m)).monic()
            if not (isinstance(res, ZeroDivisor) and not (b * res.annihilator) % m
                    and res.annihilator == expected):
                failures.append(f"{F} non-coprime index={i}")
            zd_n += 1
        counts[F.spec_string()] = (inv_n, zd_n)
    ok = not failures
    detail = ", ".join(f"{k}: {a} inverses + {b} zero divisors" for k, (a, b) in counts.items())
    acceptance(3, ok, f"{detail}; failures={len(failures)}")
    assert ok, failures[:5]


# 4, 5 ---------------------------------------------------------------------------


def test_criterion_04_irrelevant_coefficients(acceptance):
    F = GF(2, 8)
    failures = []
    done = 0
    i = 0
    while done < 1_000:
        rng = trial_rng(SEED + 5, i)
        i += 1
        n = int(rng.integers(2, 41))
        d = int(rng.integers(n // 2 + 1, n + 1))  # 2d > deg m
        m = random_poly(rng, F, n)
        b = random_below(rng, F, n)
        if not b:
            continue
        lb, lm = irrelevant_bounds(n, d)
        bc = list(b.coeffs) + [0] * (n - len(b.coeffs))
        mc = list(m.coeffs)
        for j in range(lb):
            bc[j] = int(rng.integers(0, 256))
        for j in range(min(lm, n)):
            mc[j] = int(rng.integers(0, 256))
        b2 = Polynomial(F, bc)
        if not b2:
            continue
        before = solve(PartialInverseProblem(b, m, d))
        after = solve(PartialInverseProblem(b2, Polynomial(F, mc), d))
        if before != after:
            failures.append(f"index={i - 1}")
        done += 1
    ok = not failures
    acceptance(4, ok, f"instances={done} with 2d > deg m, changed solutions={len(failures)}")
    assert ok, failures[:5]


def test_criterion_05_fast_paths(acceptance):
    F = GF(2, 8)
    failures = []
    per_shape = {}
    for shape in ("xpow", "xn1"):
        for i in range(1_000):
            pr = random_problem(trial_rng(SEED + 6, i), F, 64, shape)
            if solve_with_remainder(pr) != solve_with_remainder(pr, force_generic=True):
                failures.append(f"{shape} index={i}")
        per_shape[shape] = 1_000
    ok = not failures
    acceptance(5, ok, f"x^v: {per_shape['xpow']}, x^n-1: {per_shape['xn1']} instances over GF(2^8), "
                      f"differences={len(failures)}")
    assert ok, failures[:5]


# 6, 7, 8, 10 ---------------------------------------------------------------------


def _check_division_and_reencode(code, y, c, res):
    """Independent re-check of a successful decode; returns an error string or None."""
    Y = code.transform_inverse(y)
    q, r = divmod((Y * res.locator) % code.m, res.locator)
    if r:
        return "nonzero remainder in the final division"
    if code.encode(q) != tuple(c):
        return "re-encoding does not reproduce y - e"
    if tuple(code.field.sub(a, b) for a, b in zip(y, res.error)) != tuple(c):
        return "y minus decoded error is not the codeword"
    return None


@pytest.fixture(scope="module")
def decode_log():
    """Successful decodes from criteria 6 and 7, with the radius re-check tally."""
    return {"successes": [], "rechecked": 0, "beyond": 0}


def test_criterion_06_rs_exhaustive(acceptance, decode_log):
    code = RsCode(GF(2, 3), 7, 3, dft=True)
    t0 = time.perf_counter()
    bad = []
    total = 0
    patterns = list(rs_error_patterns(code, 2, min_weight=1))
    for msg_i in range(10):
        c = code.encode(random_message(trial_rng(SEED + 7, msg_i), code))
        for e in patterns:
            y = add_words(code, c, e)
            res = code.decode(y)
            total += 1
            if not (res.ok and res.codeword == c and res.locator == code.error_locator(e)):
                bad.append(f"message={msg_i} e={e}")
                continue
            decode_log["successes"].append((code, y, c, res))
            decode_log["rechecked"] += 1
            decode_log["beyond"] += not verify_within_radius(code, y, res)
    elapsed = time.perf_counter() - t0
    ok = not bad and len(patterns) == 1078 and elapsed < 30
    acceptance(6, ok, f"RS(7,3): 10 codewords x {len(patterns)} patterns = {total} decodes, "
                      f"failures={len(bad)}, runtime={elapsed:.1f}s (limit 30s)")
    assert ok, bad[:5]


def test_criterion_07_forward_inequality(acceptance, decode_log):
    codes = [RsCode(GF(2, 3), 7, 3, dft=True), RsCode(GF(2, 4), 15, 9, dft=True),
             RsCode(GF(2, 8), 255, 223, dft=True)]
    violations = []
    decode_failures = []
    total = 0
    for j, code in enumerate(codes):
        trials = 10_000 // len(codes) + (1 if j < 10_000 % len(codes) else 0)
        for i in range(trials):
            rng = trial_rng(SEED + 8 + j, i)
            c = code.encode(random_message(rng, code))
            e = random_error(rng, code, int(rng.integers(0, code.t + 1)))
            y = add_words(code, c, e)
            Y = code.transform_inverse(y)
            lam_e = code.error_locator(e)
            # deg(Y Λ_e mod m) < n - (n-k)/2, compared in doubled integers
            r = (Y * lam_e) % code.m
            if r and 2 * r.degree >= 2 * code.n - (code.n - code.k):
                violations.append(f"n={code.n} index={i}")
            res = code.decode(y)
            if res.ok and res.codeword == c:
                decode_log["successes"].append((code, y, c, res))
                decode_log["rechecked"] += 1
                decode_log["beyond"] += not verify_within_radius(code, y, res)
            else:
                decode_failures.append(f"n={code.n} index={i}")
            total += 1
    ok = not violations
    acceptance(7, ok, f"{total} (code, e) pairs over RS(7,3), RS(15,9), RS(255,223); "
                      f"violations={len(violations)} (within-radius decodes not recovered: {len(decode_failures)})")
    assert ok, violations[:5]
    assert not decode_failures, decode_failures[:5]


def test_criterion_08_exact_division(acceptance, decode_log):
    bad = []
    for code, y, c, res in decode_log["successes"]:
        err = _check_division_and_reencode(code, y, c, res)
        if err:
            bad.append(err)
    n = len(decode_log["successes"])
    ok = n >= 10_000 and not bad
    acceptance(8, ok, f"successful decodes checked={n}, division remainders or re-encode mismatches={len(bad)}")
    assert ok, bad[:5]


# 9 -------------------------------------------------------------------------------


def test_criterion_09_prc(acceptance, decode_log):
    F = GF(2)
    code = PrcCode(F, _moduli(), 3)
    assert (code.K, code.N, code.t) == (4, 10, 3)
    patterns = list(prc_error_patterns(code, 3))
    bad = []
    cases = 0

    def run_case(a, e, where):
        nonlocal cases
        c = code.encode(a)
        y = add_words(code, c, e)
        res = code.decode(y)
        cases += 1
        if not (res.ok and res.codeword == c and res.message == a
                and res.locator == error_factor(code.crt_inverse(e), code.m)):
            bad.append(where)
        elif not verify_within_radius(code, y, res):
            decode_log["beyond"] += 1
        decode_log["rechecked"] += res.ok

    for msg in range(16):
        a = Polynomial(F, [(msg >> i) & 1 for i in range(4)])
        for j, e in enumerate(patterns):
            run_case(a, e, f"message={msg} pattern={j}")
    for i in range(1_000):
        rng = trial_rng(SEED + 9, i)
        run_case(random_message(rng, code), patterns[int(rng.integers(0, len(patterns)))], f"sample={i}")

    # degree-one moduli: the remainder decoder must reproduce the RS decoder exactly
    G = GF(2, 4)
    rs = RsCode(G, 15, 7)
    prc = PrcCode(G, [Polynomial(G, [G.neg(b), 1]) for b in rs.betas], 7)
    as_poly = lambda w: tuple(Polynomial.constant(G, v) for v in w)
    diffs = []
    for i in range(1_000):
        rng = trial_rng(SEED + 10, i)
        c = rs.encode(random_message(rng, rs))
        y = add_words(rs, c, random_error(rng, rs, int(rng.integers(0, rs.t + 3))))
        r1, r2 = rs.decode(y), prc.decode(as_poly(y))
        same = (r1.failure == r2.failure and r1.locator == r2.locator and r1.message == r2.message
                and (r1.codeword is None) == (r2.codeword is None)
                and (r1.codeword is None or as_poly(r1.codeword) == r2.codeword))
        if not same:
            diffs.append(f"index={i}")
    ok = cases >= 1_000 and not bad and not diffs
    acceptance(9, ok, f"PRC cases={cases} ({len(patterns)} patterns/codeword, all 16 messages + 1000 sampled) "
                      f"failures={len(bad)}; RS-as-PRC trials=1000 differences={len(diffs)}")
    assert ok, (bad + diffs)[:5]


def test_criterion_10_bounded_distance(acceptance, decode_log):
    # beyond-radius sweeps; the harness re-checks every claimed success itself
    sweeps = [
        TrialConfig(code=RsCode(GF(2, 3), 7, 3, dft=True), weights=(3, 4, 5), trials=3_000, seed=SEED),
        TrialConfig(code=RsCode(GF(2, 4), 15, 9, dft=True), weights=(4, 5, 6), trials=3_000, seed=SEED),
        TrialConfig(code=RsCode(GF(13), 12, 4), weights=(5, 6, 8), trials=2_000, seed=SEED),
        TrialConfig(code=PrcCode(GF(2), _moduli(), 3), weights=(2, 3, 4), trials=2_000, seed=SEED),
        TrialConfig(code=RsCode(GF(2, 3), 7, 3, dft=True), max_weight=3, seed=SEED),
    ]
    mis = 0
    trials = alternatives = 0
    for cfg in sweeps:
        s = run_code_sweep(cfg)
        mis += s.miscorrections
        trials += s.trials
        alternatives += s.alternatives
        decode_log["rechecked"] += s.successes + s.alternatives
    mis += decode_log["beyond"]
    ok = mis == 0
    acceptance(10, ok, f"decodes re-checked={decode_log['rechecked']} (beyond-radius sweep trials={trials}, "
                       f"alternative codewords={alternatives}), successes beyond radius={mis}")
    assert ok


# 11 ------------------------------------------------------------------------------


def test_criterion_11_performance(acceptance):
    code = RsCode(GF(2, 8), 255, 223, dft=True)
    times = []
    failures = 0
    for i in range(200):
        rng = trial_rng(SEED + 11, i)
        c = code.encode(random_message(rng, code))
        y = add_words(code, c, random_error(rng, code, 16))
        t0 = time.perf_counter()
        res = code.decode(y)
        times.append(time.perf_counter() - t0)
        failures += not (res.ok and res.codeword == c)
    median_ms = statistics.median(times) * 1e3
    t_n, t_2n = solve_scaling(GF(2, 8), 128, seed=SEED, reps=6)
    ratio = t_2n / t_n
    ok = median_ms < 50 and 2.0 <= ratio <= 6.0 and failures == 0
    acceptance(11, ok, f"RS(255,223) weight-16 median decode={median_ms:.2f} ms (limit 50), "
                       f"solve deg m 128->256 time ratio={ratio:.2f} (target 4 +/- 50%), "
                       f"exponent={math.log2(ratio):.2f}")
    assert ok
