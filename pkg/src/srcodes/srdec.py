"""Decoding of SR(C1, C2) words by reduction to Hamming-metric decoding.

A received word y = y0 x + y1 x^2 is handled in two stages: decode y1 in
C1 once, then strip the recovered x^2 part and evaluate the remainder at
the three nonzero field points beta in {1, w, w^2}.  Blocks where both
error coefficients are nonzero vanish at exactly one beta, so by
pigeonhole one of the three evaluations lands within half the minimal
distance of C2 whenever wt_sr(error) <= floor((d_sr - 1) / 2) and
d2 >= 2 d_sr / 3.  Each evaluation is decoded against C2 after undoing
the scalar (the scaled code beta*C2 is equivalent to C2).

A verified candidate within the radius is the unique nearest codeword, so
the branch scan stops at the first one; the decoder never returns an
unverified word.  The module also provides the exhaustive sum-rank
nearest-codeword oracle, the weighted error channel, and a simulation
harness with per-trial counter-mode seeding.
"""

import time
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .errors import BudgetError, ConfigError, RangeError
from .gf2m import vec_scale, vec_xor
from .sumrank import SrWord, sr_zero, sumrank_weight_formula, _component_words

_BETA_SQ = {1: 1, 2: 3, 3: 2}

STATUS_SUCCESS = "success"
STATUS_C1_FAILURE = "c1_failure"
STATUS_ALL_BRANCHES_FAILED = "all_branches_failed"
STATUS_AMBIGUOUS = "ambiguous"


def evaluate_word(word, beta):
    """Coordinatewise evaluation of the word's q-polynomials at beta != 0."""
    if beta not in _BETA_SQ:
        raise RangeError(f"evaluation point must be a nonzero GF(4) symbol, got {beta}")
    return vec_xor(vec_scale(word.coeff_x, beta),
                   vec_scale(word.coeff_x2, _BETA_SQ[beta]))


@dataclass
class SrDecodeResult:
    status: str
    codeword: Optional[SrWord] = None
    error: Optional[SrWord] = None
    succeeded_branch: Optional[int] = None      # GF(4) symbol 1, 2 or 3
    candidates_considered: Tuple = ()           # (beta, outcome) per branch
    dec1_calls: int = 0
    dec2_calls: int = 0

    @property
    def ok(self):
        return self.status == STATUS_SUCCESS


def _check_config(code, dec1, dec2, d_sr):
    d1 = code.c1.d_lower or 0
    d2 = code.c2.d_lower or 0
    radius = (d_sr - 1) // 2
    if d1 < d_sr:
        raise ConfigError(f"C1 distance {d1} below the declared d_sr = {d_sr}")
    if 3 * d2 < 2 * d_sr:
        raise ConfigError(f"C2 distance {d2} below 2*{d_sr}/3")
    if dec1.radius < radius:
        raise ConfigError(f"C1 decoder radius {dec1.radius} < {radius}")
    if dec2.radius < (d2 - 1) // 2:
        raise ConfigError(f"C2 decoder radius {dec2.radius} < {(d2 - 1) // 2}")
    if dec1.code is not code.c1 or dec2.code is not code.c2:
        if dec1.code.n != code.n or dec2.code.n != code.n:
            raise ConfigError("decoder/code length mismatch")
    return radius


def sr_decode(code, dec1, dec2, received, d_sr=None):
    """Bounded-distance decoding of a received SrWord.

    Guaranteed exact for every error of sum-rank weight up to
    floor((d_sr - 1) / 2) when the component hypotheses hold; outside the
    radius it returns a typed failure or, if two verified candidates tie,
    the ambiguous state - never a guess.
    """
    if d_sr is None:
        d_sr = code.d_sr_lower
    if d_sr is None or d_sr == float("inf") or d_sr != int(d_sr):
        raise ConfigError("a finite declared decoding distance is required")
    d_sr = int(d_sr)
    radius = _check_config(code, dec1, dec2, d_sr)
    if received.length != code.n:
        raise ConfigError(f"received length {received.length} != {code.n}")

    res1 = dec1.decode(received.coeff_x2)
    if not res1.ok:
        return SrDecodeResult(STATUS_C1_FAILURE, dec1_calls=1,
                              candidates_considered=())
    c1, e1 = res1.codeword, res1.error

    y0 = received.coeff_x
    considered = []
    candidates = []
    dec2_calls = 0
    for beta in (1, 2, 3):
        branch_in = y0 if beta == 1 and not any(e1) else \
            vec_xor(y0, vec_scale(e1, beta))
        res2 = dec2.decode(branch_in)
        dec2_calls += 1
        if not res2.ok:
            considered.append((beta, res2.status))
            continue
        c2 = res2.codeword
        e0 = vec_xor(y0, c2)
        w = sumrank_weight_formula(e1, e0)
        considered.append((beta, "candidate"))
        if w <= radius:
            # unique nearest codeword inside the radius: stop scanning
            return SrDecodeResult(
                STATUS_SUCCESS,
                codeword=SrWord(c2, c1),
                error=SrWord(e0, e1),
                succeeded_branch=beta,
                candidates_considered=tuple(considered),
                dec1_calls=1, dec2_calls=dec2_calls)
        candidates.append((w, beta, c2))

    if candidates:
        candidates.sort(key=lambda t: t[0])
        wmin = candidates[0][0]
        tied = {c2 for w, _, c2 in candidates if w == wmin}
        if len(tied) > 1:
            return SrDecodeResult(STATUS_AMBIGUOUS,
                                  candidates_considered=tuple(considered),
                                  dec1_calls=1, dec2_calls=dec2_calls)
    return SrDecodeResult(STATUS_ALL_BRANCHES_FAILED,
                          candidates_considered=tuple(considered),
                          dec1_calls=1, dec2_calls=dec2_calls)


def sr_oracle_decode(code, received, budget=1 << 22):
    """Exhaustive nearest codeword in the sum-rank metric.

    Ties for the minimum distance come back as the ambiguous state.
    """
    if 1 << code.f2_dimension > budget:
        raise BudgetError(
            f"2^{code.f2_dimension} codewords exceed the budget {budget}")
    r2 = np.frombuffer(received.coeff_x, dtype=np.uint8)
    r1 = np.frombuffer(received.coeff_x2, dtype=np.uint8)
    w1_all = _component_words(code.c1)
    w2_all = _component_words(code.c2)
    d2 = w2_all ^ r2
    nz2 = d2 != 0
    wt2 = 2 * np.count_nonzero(nz2, axis=1)
    best, tie, arg = None, False, None
    for a1 in w1_all:
        diff1 = a1 ^ r1
        nz1 = diff1 != 0
        w = 2 * int(np.count_nonzero(nz1)) + wt2 - 3 * np.count_nonzero(nz2 & nz1, axis=1)
        i = int(np.argmin(w))
        ties_here = int(np.count_nonzero(w == w[i]))
        if best is None or w[i] < best:
            best = int(w[i])
            arg = (bytes(w2_all[i]), bytes(a1))
            tie = ties_here > 1
        elif w[i] == best:
            tie = True
    if tie:
        return SrDecodeResult(STATUS_AMBIGUOUS)
    codeword = SrWord(*arg)
    error = SrWord(vec_xor(received.coeff_x, codeword.coeff_x),
                   vec_xor(received.coeff_x2, codeword.coeff_x2))
    return SrDecodeResult(STATUS_SUCCESS, codeword=codeword, error=error)


# ----------------------------------------------------------------------
# error channel
# ----------------------------------------------------------------------

def error_profiles(length, w):
    """Nonnegative (i1, i2, i3) with 2 i1 + 2 i2 + i3 = w, i1+i2+i3 <= length."""
    out = []
    for i3 in range(w % 2, w + 1, 2):
        rest = (w - i3) // 2
        for i1 in range(rest + 1):
            i2 = rest - i1
            if i1 + i2 + i3 <= length:
                out.append((i1, i2, i3))
    return out


def sample_error(length, w, rng):
    """A uniform-profile random error of exact sum-rank weight w.

    rng is a seed or a numpy Generator; results are deterministic per seed.
    """
    if not 0 <= w <= 2 * length:
        raise RangeError(f"target weight {w} outside [0, {2 * length}]")
    rng = np.random.default_rng(rng) if not isinstance(rng, np.random.Generator) else rng
    if w == 0:
        return sr_zero(length)
    profiles = error_profiles(length, w)
    i1, i2, i3 = profiles[rng.integers(len(profiles))]
    positions = rng.choice(length, size=i1 + i2 + i3, replace=False)
    e0 = bytearray(length)
    e1 = bytearray(length)
    vals = rng.integers(1, 4, size=i1 + i2 + 2 * i3)
    vi = 0
    for p in positions[:i1]:
        e0[p] = vals[vi]; vi += 1
    for p in positions[i1:i1 + i2]:
        e1[p] = vals[vi]; vi += 1
    for p in positions[i1 + i2:]:
        e0[p] = vals[vi]; vi += 1
        e1[p] = vals[vi]; vi += 1
    return SrWord(bytes(e0), bytes(e1))


def min_branch_weight(e0, e1):
    """min over beta of wt_H(beta*e0 + beta^2*e1); the pigeonhole quantity."""
    best = None
    for beta in (1, 2, 3):
        w = len(e0) - vec_xor(vec_scale(e0, beta),
                              vec_scale(e1, _BETA_SQ[beta])).count(0)
        best = w if best is None else min(best, w)
    return best


# ----------------------------------------------------------------------
# channel simulation
# ----------------------------------------------------------------------

def _run_trial(code, dec1, dec2, d_sr, seed, w, trial):
    rng = np.random.default_rng((seed, w, trial))
    bits = [int(b) for b in rng.integers(0, 2, size=code.f2_dimension)]
    sent = code.encode(bits)
    err = sample_error(code.n, w, rng)
    received = sent + err
    t0 = time.perf_counter()
    res = sr_decode(code, dec1, dec2, received, d_sr)
    micros = (time.perf_counter() - t0) * 1e6
    if res.ok and res.codeword == sent:
        outcome = "success"
    elif res.status == STATUS_AMBIGUOUS:
        outcome = "ambiguous"
    elif res.ok:
        outcome = "miscorrection"
    else:
        outcome = "failure"
    return outcome, micros, res.dec1_calls, res.dec2_calls


def simulate(code, dec1, dec2, weights, trials, seed=0, d_sr=None, jobs=1):
    """Monte Carlo channel runs; returns one tally row per weight.

    Per-trial generators are seeded counter-style from (seed, weight, trial)
    so the tallies do not depend on scheduling or job count.
    """
    if d_sr is None:
        d_sr = code.d_sr_lower
    _check_config(code, dec1, dec2, d_sr)
    rows = []
    work = [(w, t) for w in weights for t in range(trials)]
    results = {}
    if jobs and jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futs = {pool.submit(_run_trial, code, dec1, dec2, d_sr, seed, w, t): (w, t)
                    for w, t in work}
            for f, key in futs.items():
                results[key] = f.result()
    else:
        for w, t in work:
            results[(w, t)] = _run_trial(code, dec1, dec2, d_sr, seed, w, t)
    for w in weights:
        tally = {"weight": w, "trials": trials, "success": 0, "failure": 0,
                 "ambiguous": 0, "miscorrections": 0, "mean_decode_micros": 0.0,
                 "dec1_calls_max": 0, "dec2_calls_max": 0}
        total_us = 0.0
        for t in range(trials):
            outcome, micros, c1calls, c2calls = results[(w, t)]
            total_us += micros
            tally["dec1_calls_max"] = max(tally["dec1_calls_max"], c1calls)
            tally["dec2_calls_max"] = max(tally["dec2_calls_max"], c2calls)
            if outcome == "success":
                tally["success"] += 1
            elif outcome == "ambiguous":
                tally["ambiguous"] += 1
            elif outcome == "miscorrection":
                tally["miscorrections"] += 1
                tally["failure"] += 1
            else:
                tally["failure"] += 1
        tally["mean_decode_micros"] = total_us / max(trials, 1)
        rows.append(tally)
    return rows
