import random

import pytest

from rbmdecode.field import GF
from rbmdecode.harness import (
    TrialConfig,
    add_words,
    random_error,
    random_message,
    rs_error_patterns,
    run_code_sweep,
    trial_rng,
)
from rbmdecode.partial_inverse import PartialInverseProblem, solve
from rbmdecode.poly import Polynomial
from rbmdecode.rs import DecodeFailure, NonExactDivision, RsCode, recover_codeword_poly

F8 = GF(2, 3)


@pytest.fixture(scope="module")
def rs73():
    return RsCode(F8, 7, 3, dft=True)


def test_parameters(rs73):
    assert (rs73.t, rs73.d, rs73.l_min) == (2, 5, 3)
    assert rs73.m == Polynomial(F8, [1] + [0] * 6 + [1])
    assert RsCode(GF(7), 6, 3).l_min == 4


def test_encode_examples(rs73):
    assert rs73.encode(Polynomial.zero(F8)) == (0,) * 7
    assert rs73.encode(Polynomial.constant(F8, 5)) == (5,) * 7
    x2 = Polynomial.monomial(F8, 2)
    assert rs73.encode(x2) == tuple(F8.mul(b, b) for b in rs73.betas)


def test_bad_parameters():
    with pytest.raises(ValueError):
        RsCode(F8, 9, 3)
    with pytest.raises(ValueError):
        RsCode(F8, 7, 7)
    with pytest.raises(ValueError):
        RsCode(F8, 3, 1, betas=[1, 1, 2])
    with pytest.raises(ValueError):
        RsCode(GF(7), 4, 2, dft=True)  # 4 does not divide 6
    with pytest.raises(ValueError):
        RsCode(F8, 7, 3).encode(Polynomial.monomial(F8, 3))


def test_transform_roundtrip(rs73):
    assert rs73.transform_inverse((0,) * 7) == Polynomial.zero(F8)
    rng = random.Random(0)
    for _ in range(200):
        a = Polynomial(F8, [rng.randrange(8) for _ in range(3)])
        assert rs73.transform_inverse(rs73.encode(a)) == a
        y = [rng.randrange(8) for _ in range(7)]
        Y_dft = rs73.transform_inverse(y, method="dft")
        assert Y_dft == rs73.transform_inverse(y, method="lagrange")
        assert tuple(Y_dft.eval(b) for b in rs73.betas) == tuple(y)


def test_dft_on_large_field():
    code = RsCode(GF(2, 8), 255, 223, dft=True)
    rng = random.Random(1)
    y = [rng.randrange(256) for _ in range(255)]
    assert code.transform_inverse(y, "dft") == code.transform_inverse(y, "lagrange")


def test_error_locator(rs73):
    assert rs73.error_locator((0,) * 7) == Polynomial.one(F8)
    e = [0] * 7
    e[4] = 3
    assert rs73.error_locator(e) == Polynomial(F8, [rs73.betas[4], 1])
    e[1] = 6
    expected = Polynomial(F8, [rs73.betas[1], 1]) * Polynomial(F8, [rs73.betas[4], 1])
    assert rs73.error_locator(e) == expected


def test_clean_decode(rs73):
    a = Polynomial(F8, [1, 2, 3])
    res = rs73.decode(rs73.encode(a))
    assert res.ok and res.message == a and res.error == (0,) * 7
    assert res.locator == Polynomial.one(F8) and res.error_count == 0


def test_all_weight_two_patterns(rs73):
    c = rs73.encode(Polynomial(F8, [7, 0, 5]))
    count = 0
    for e in rs_error_patterns(rs73, 2, min_weight=1):
        res = rs73.decode(add_words(rs73, c, e))
        assert res.ok and res.codeword == c and res.error == e
        assert res.locator == rs73.error_locator(e)
        count += 1
    assert count == 7 * 7 + 21 * 49


def test_weight_three_is_bounded_distance(rs73):
    s = run_code_sweep(TrialConfig(code=rs73, weights=(3,), trials=400, seed=2))
    assert s.miscorrections == 0 and s.mismatches == 0
    assert s.alternatives + sum(s.failures.values()) == 400


def test_truncated_y_gives_same_locator(rs73):
    for i in range(300):
        rng = trial_rng(5, i)
        c = rs73.encode(random_message(rng, rs73))
        y = add_words(rs73, c, random_error(rng, rs73, int(rng.integers(1, 4))))
        Y = rs73.transform_inverse(y)
        if Y.degree < rs73.k:
            continue
        Yt = rs73.zero_irrelevant(Y)
        assert solve(PartialInverseProblem(Y, rs73.m, rs73.d)) == solve(PartialInverseProblem(Yt, rs73.m, rs73.d))


def test_syndromes(rs73):
    assert rs73.syndromes(rs73.encode(Polynomial(F8, [1, 1, 1]))) == (0,) * 4
    rng = random.Random(4)
    for _ in range(100):
        c = rs73.encode(Polynomial(F8, [rng.randrange(8) for _ in range(3)]))
        e = [0] * 7
        for p in rng.sample(range(7), 2):
            e[p] = rng.randrange(1, 8)
        E = rs73.transform_inverse(e)
        assert rs73.syndromes(add_words(rs73, c, e)) == tuple(E.coeff(i) for i in range(3, 7))


def test_recover_with_multiple_of_locator():
    code = RsCode(GF(929), 20, 8)
    rng = random.Random(6)
    for _ in range(50):
        a = Polynomial(code.field, [rng.randrange(929) for _ in range(8)])
        e = [0] * 20
        for p in rng.sample(range(20), 3):
            e[p] = rng.randrange(1, 929)
        Y = code.transform_inverse(add_words(code, code.encode(a), e))
        lam_e = code.error_locator(e)
        assert recover_codeword_poly(Y, lam_e, code.m) == a
        extra = Polynomial(code.field, [rng.randrange(929), 1])
        assert recover_codeword_poly(Y, lam_e * extra, code.m) == a


def test_recover_non_exact():
    F = GF(7)
    m = Polynomial(F, [6, 0, 0, 1])
    with pytest.raises(NonExactDivision):
        recover_codeword_poly(Polynomial(F, [1, 2, 1]), Polynomial(F, [1, 1]), m)


def test_prime_field_arbitrary_points():
    F = GF(929)
    rng = random.Random(8)
    betas = rng.sample(range(929), 30)
    code = RsCode(F, 30, 10, betas=betas)
    s = run_code_sweep(TrialConfig(code=code, weights=(1, 5, 10), trials=200, seed=1))
    assert s.successes == 200


def test_failure_types_are_typed(rs73):
    res = rs73.decode((1, 2, 3, 4, 5, 6, 7))
    assert not res.ok
    assert isinstance(res.failure, DecodeFailure)
    assert res.codeword is None and res.message is None
    with pytest.raises(ValueError):
        rs73.decode((1, 2, 3))
