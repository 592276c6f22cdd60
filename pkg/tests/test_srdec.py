import itertools

import numpy as np
import pytest

from srcodes.errors import BudgetError, ConfigError, RangeError
from srcodes.gf2m import GF4, vec_scale, vec_xor
from srcodes.codes import DefiningSet, LinearCode, bch_build, min_distance_bruteforce
from srcodes.hamdec import BchDecoder, OracleDecoder
from srcodes.sumrank import (
    SrWord,
    sr_construct,
    sr_zero,
    sumrank_weight,
    sumrank_weight_formula,
)
from srcodes.srdec import (
    STATUS_ALL_BRANCHES_FAILED,
    STATUS_AMBIGUOUS,
    STATUS_C1_FAILURE,
    error_profiles,
    evaluate_word,
    min_branch_weight,
    sample_error,
    simulate,
    sr_decode,
    sr_oracle_decode,
)


@pytest.fixture(scope="module")
def pair15():
    c1 = bch_build(15, (1, 6))                                   # [15,8,6]
    c2 = bch_build(15, DefiningSet.from_cosets(15, [0, 1, 2]))   # [15,10,4]
    code = sr_construct(c1, c2)
    return code, BchDecoder(c1), BchDecoder(c2)


@pytest.fixture(scope="module")
def tiny():
    rep4 = LinearCode(GF4, [bytes([1, 1, 1, 1])], d_lower=4, d_tag="declared")
    mds = LinearCode(GF4, [bytes([1, 0, 1, 1]), bytes([0, 1, 1, 2])],
                     d_lower=3, d_tag="declared")
    assert min_distance_bruteforce(mds)[0] == 3
    code = sr_construct(rep4, mds)
    return code, OracleDecoder(rep4, radius=1), OracleDecoder(mds, radius=1)


# ----------------------------------------------------------------------
# evaluation
# ----------------------------------------------------------------------

def test_evaluate_word_examples():
    w = SrWord(bytes([1, 2, 0]), bytes([3, 0, 1]))
    assert evaluate_word(w, 1) == vec_xor(w.coeff_x, w.coeff_x2)
    blk = SrWord(bytes([2]), bytes([2]))
    assert evaluate_word(blk, 1) == bytes([0])        # cancellation at beta = 1
    assert evaluate_word(sr_zero(5), 2) == bytes(5)
    with pytest.raises(RangeError):
        evaluate_word(w, 0)


def test_evaluate_word_formula():
    rng = np.random.default_rng(0)
    sq = {1: 1, 2: 3, 3: 2}
    for _ in range(50):
        x = bytes(int(v) for v in rng.integers(0, 4, size=8))
        x2 = bytes(int(v) for v in rng.integers(0, 4, size=8))
        w = SrWord(x, x2)
        for beta in (1, 2, 3):
            expect = bytes(GF4.mul(a, beta) ^ GF4.mul(b, sq[beta])
                           for a, b in zip(x, x2))
            assert evaluate_word(w, beta) == expect


# ----------------------------------------------------------------------
# the reduction decoder
# ----------------------------------------------------------------------

def test_zero_error_uses_first_branch(pair15):
    code, dec1, dec2 = pair15
    rng = np.random.default_rng(1)
    sent = code.encode([int(b) for b in rng.integers(0, 2, size=code.f2_dimension)])
    res = sr_decode(code, dec1, dec2, sent, 6)
    assert res.ok and res.succeeded_branch == 1
    assert res.codeword == sent and res.error == sr_zero(15)
    assert res.dec1_calls == 1 and res.dec2_calls == 1


def test_guaranteed_radius_random_trials(pair15):
    code, dec1, dec2 = pair15
    rng = np.random.default_rng(2)
    for _ in range(300):
        bits = [int(b) for b in rng.integers(0, 2, size=code.f2_dimension)]
        sent = code.encode(bits)
        w = int(rng.integers(0, 3))
        err = sample_error(15, w, rng)
        res = sr_decode(code, dec1, dec2, sent + err, 6)
        assert res.ok and res.codeword == sent and res.error == err
        assert res.dec1_calls == 1 and res.dec2_calls <= 3


def test_beyond_radius_never_lies(pair15):
    code, dec1, dec2 = pair15
    rng = np.random.default_rng(3)
    radius = 2
    for _ in range(300):
        bits = [int(b) for b in rng.integers(0, 2, size=code.f2_dimension)]
        sent = code.encode(bits)
        err = sample_error(15, int(rng.integers(3, 7)), rng)
        res = sr_decode(code, dec1, dec2, sent + err, 6)
        if res.ok:
            # a success must be a true codeword within the radius of received
            assert code.contains(res.codeword)
            dist = sumrank_weight_formula(res.error.coeff_x2, res.error.coeff_x)
            assert dist <= radius


def test_branch_diagnostics_example():
    # two-block rank-1 error: the branch that cancels one block wins
    c1 = bch_build(15, (1, 6))
    c2 = bch_build(15, DefiningSet.from_cosets(15, [0, 1, 2]))
    code = sr_construct(c1, c2)
    dec1, dec2 = BchDecoder(c1), BchDecoder(c2)
    e0 = bytearray(15)
    e1 = bytearray(15)
    e0[0], e1[0] = 1, 1   # cancels at beta = 1
    e0[5], e1[5] = 1, 1   # cancels at beta = 1 as well
    err = SrWord(bytes(e0), bytes(e1))
    res = sr_decode(code, dec1, dec2, code.encode([0] * code.f2_dimension) + err, 6)
    assert res.ok and res.succeeded_branch == 1 and res.error == err


def test_c1_failure_status(pair15):
    code, dec1, dec2 = pair15
    rng = np.random.default_rng(4)
    # weight-3 error on the x^2 slot alone exceeds dec1's radius
    e1 = bytearray(15)
    for p in rng.choice(15, size=3, replace=False):
        e1[p] = 1
    received = SrWord(bytes(15), bytes(e1))
    res = sr_decode(code, dec1, dec2, received, 6)
    assert res.status in (STATUS_C1_FAILURE, STATUS_ALL_BRANCHES_FAILED)
    if res.status == STATUS_C1_FAILURE:
        assert res.dec2_calls == 0


def test_config_errors(pair15):
    code, dec1, dec2 = pair15
    word = sr_zero(15)
    with pytest.raises(ConfigError):
        sr_decode(code, dec1, dec2, word, 7)      # d1 = 6 < 7
    with pytest.raises(ConfigError):
        sr_decode(code, dec1, dec2, word, 20)
    bad = sr_construct(code.c1, bch_build(15, DefiningSet.from_cosets(15, [5, 6])))
    with pytest.raises(ConfigError):
        sr_decode(bad, dec1, BchDecoder(bad.c2), word, 6)  # d2 = 3 < 4


# ----------------------------------------------------------------------
# oracle
# ----------------------------------------------------------------------

def test_oracle_returns_member(tiny):
    code, _, _ = tiny
    word = code.encode([1, 0, 1, 1, 0, 1])
    res = sr_oracle_decode(code, word)
    assert res.ok and res.codeword == word


def test_oracle_agreement_within_radius(tiny):
    code, dec1, dec2 = tiny
    errors = [sr_zero(4)]
    for i in range(4):
        for v0 in (1, 2, 3):
            for v1 in (1, 2, 3):
                e0 = bytearray(4)
                e1 = bytearray(4)
                e0[i] = v0
                e1[i] = v1
                errors.append(SrWord(bytes(e0), bytes(e1)))
    for bits in itertools.product((0, 1), repeat=code.f2_dimension):
        sent = code.encode(list(bits))
        for err in errors:
            rec = sent + err
            r1 = sr_decode(code, dec1, dec2, rec, 4)
            r2 = sr_oracle_decode(code, rec)
            assert r1.ok and r2.ok
            assert r1.codeword == r2.codeword == sent


def test_oracle_tie_is_ambiguous():
    # SR([2,1,2], zero): codewords 0 and (v,v)x^2; the midpoint of the two
    # blocks sits at distance 2 from both
    rep2 = LinearCode(GF4, [bytes([1, 1])], d_lower=2, d_tag="declared")
    zero2 = LinearCode(GF4, [], parity_rows=[[1, 0], [0, 1]], d_lower=1)
    code = sr_construct(rep2, zero2)
    received = SrWord(bytes(2), bytes([1, 0]))
    res = sr_oracle_decode(code, received)
    assert res.status == STATUS_AMBIGUOUS


def test_oracle_budget():
    c = bch_build(63, DefiningSet.from_cosets(63, [0, 1, 2, 3, 5]))
    code = sr_construct(c, c)
    with pytest.raises(BudgetError):
        sr_oracle_decode(code, sr_zero(63))


# ----------------------------------------------------------------------
# error channel
# ----------------------------------------------------------------------

def test_error_profiles_constraint():
    for length, w in [(15, 0), (15, 1), (15, 2), (15, 9), (3, 6)]:
        for i1, i2, i3 in error_profiles(length, w):
            assert 2 * i1 + 2 * i2 + i3 == w
            assert i1 + i2 + i3 <= length
    assert error_profiles(15, 1) == [(0, 0, 1)]


def test_sample_error_exact_weight():
    rng = np.random.default_rng(5)
    for _ in range(100):
        length = int(rng.integers(1, 30))
        w = int(rng.integers(0, 2 * length + 1))
        e = sample_error(length, w, rng)
        assert sumrank_weight_formula(e.coeff_x2, e.coeff_x) == w


def test_sample_error_extremes():
    assert sample_error(7, 0, 0) == sr_zero(7)
    e = sample_error(7, 1, 0)
    both = [(a, b) for a, b in zip(e.coeff_x, e.coeff_x2) if a or b]
    assert len(both) == 1 and all(a and b for a, b in both)
    e = sample_error(7, 14, 0)
    assert all((a != 0) != (b != 0) for a, b in zip(e.coeff_x, e.coeff_x2))
    with pytest.raises(RangeError):
        sample_error(7, 15, 0)


def test_sample_error_deterministic():
    assert sample_error(12, 5, 77) == sample_error(12, 5, 77)


def test_pigeonhole_bound():
    rng = np.random.default_rng(6)
    for _ in range(400):
        length = int(rng.integers(1, 40))
        w = int(rng.integers(0, 2 * length + 1))
        e = sample_error(length, w, rng)
        i3 = sum(1 for a, b in zip(e.coeff_x, e.coeff_x2) if a and b)
        i1 = sum(1 for a, b in zip(e.coeff_x, e.coeff_x2) if a and not b)
        i2 = sum(1 for a, b in zip(e.coeff_x, e.coeff_x2) if b and not a)
        cap = i1 + i2 + i3 - (i3 + 2) // 3 if i3 else i1 + i2
        assert min_branch_weight(e.coeff_x, e.coeff_x2) <= cap


# ----------------------------------------------------------------------
# simulation
# ----------------------------------------------------------------------

def test_simulate_within_radius_all_success(pair15):
    code, dec1, dec2 = pair15
    rows = simulate(code, dec1, dec2, [0, 1, 2], 60, seed=11)
    for row in rows:
        assert row["success"] == 60
        assert row["failure"] == row["ambiguous"] == 0
        assert row["dec1_calls_max"] == 1 and row["dec2_calls_max"] <= 3


def test_simulate_beyond_radius_reports_only(pair15):
    code, dec1, dec2 = pair15
    rows = simulate(code, dec1, dec2, [6], 40, seed=12)
    assert rows[0]["success"] + rows[0]["failure"] + rows[0]["ambiguous"] == 40


def test_simulate_deterministic(pair15):
    code, dec1, dec2 = pair15
    a = simulate(code, dec1, dec2, [1, 2], 25, seed=13)
    b = simulate(code, dec1, dec2, [1, 2], 25, seed=13)
    for ra, rb in zip(a, b):
        for key in ("success", "failure", "ambiguous", "miscorrections"):
            assert ra[key] == rb[key]


def test_block25_pair_decodes_at_declared_distance():
    # true distance is 30 but d1 = 25 only supports a declared target of 25;
    # the decoder still corrects all 12 = floor((25-1)/2) sum-rank errors
    c1 = bch_build(25, DefiningSet(25, range(1, 25)))                # [25,1,25]
    c2 = bch_build(25, DefiningSet.from_cosets(25, [0, 1, 2, 5]))    # [25,2,20]
    code = sr_construct(c1, c2)
    assert code.decoder_ready_for(25) and not code.decoder_ready_for(30)
    dec1, dec2 = BchDecoder(c1), BchDecoder(c2)
    rng = np.random.default_rng(8)
    for _ in range(20):
        bits = [int(b) for b in rng.integers(0, 2, size=code.f2_dimension)]
        sent = code.encode(bits)
        err = sample_error(25, int(rng.integers(0, 13)), rng)
        res = sr_decode(code, dec1, dec2, sent + err, 25)
        assert res.ok and res.codeword == sent and res.error == err


def test_example_scenario_block63():
    """Overlapping 11-block errors: the x slot alone is undecodable, the
    evaluation trick recovers everything on the first branch."""
    T1 = DefiningSet.from_cosets(63, [0, 1, 2, 3, 5, 6, 7, 9, 10, 11,
                                      13, 14, 15, 21, 22])
    T2 = DefiningSet.from_cosets(63, [0, 1, 2, 3, 5, 6, 7, 9, 10, 11, 13, 14])
    c1 = bch_build(63, T1)
    c2 = bch_build(63, T2)
    assert (c1.k, c1.d_designed) == (22, 24)
    assert (c2.k, c2.d_designed) == (29, 16)
    code = sr_construct(c1, c2)
    dec1, dec2 = BchDecoder(c1), BchDecoder(c2)

    e1 = bytearray(63)
    e0 = bytearray(63)
    cycle = [1, 3, 2]
    for idx, pos in enumerate(range(0, 21, 2)):
        e1[pos] = cycle[idx % 3]
        e0[pos] = 1
    err = SrWord(bytes(e0), bytes(e1))
    assert 63 - err.coeff_x2.count(0) == 11
    assert 63 - err.coeff_x.count(0) == 11
    assert sumrank_weight(err) == 11 <= (24 - 1) // 2

    # the branch errors have weights 7, 7, 8; only 7 <= dec2.radius
    weights = sorted(63 - vec_xor(bytes(e0), vec_scale(bytes(e1), b)).count(0)
                     for b in (1, 2, 3))
    assert weights == [7, 7, 8] and dec2.radius == 7

    rng = np.random.default_rng(21)
    sent = code.encode([int(b) for b in rng.integers(0, 2, size=code.f2_dimension)])
    received = sent + err

    # decoding the x slot directly fails: its error weight 11 exceeds 7
    direct = dec2.decode(received.coeff_x)
    assert (not direct.ok) or direct.codeword != sent.coeff_x

    res = sr_decode(code, dec1, dec2, received, 24)
    assert res.ok and res.succeeded_branch == 1
    assert res.codeword == sent and res.error == err
