"""Bounded-distance decoders in the Hamming metric.

One decoder interface covers quaternary BCH codes (syndromes, Berlekamp-
Massey, Chien scan, Forney values), binary and quaternary Goppa codes
(syndrome polynomial, key equation by extended Euclid), an exhaustive
nearest-codeword oracle, and externally loaded codes.  Every successful
decode is re-verified against the code before it is returned, so a wrong
codeword is never handed to the caller.

Syndrome evaluation packs all syndrome coordinates of one received symbol
into a single integer (field addition is XOR, so whole syndrome vectors
accumulate with one XOR per position).
"""

from typing import NamedTuple, Optional

import numpy as np

from .errors import BudgetError, ConfigError
from .gf2m import gf4_embedding, poly_deg, poly_derivative, poly_eea, poly_gcd, poly_trim
from .codes import iter_codeword_chunks

SUCCESS = "success"
DECODE_FAILURE = "decode_failure"
GUARD_TRIPPED = "miscorrection_guard_tripped"


class HammingDecodeResult(NamedTuple):
    codeword: Optional[bytes]
    error: Optional[bytes]
    status: str
    tie: bool = False

    @property
    def ok(self):
        return self.status == SUCCESS


def _fail(status=DECODE_FAILURE, tie=False):
    return HammingDecodeResult(None, None, status, tie)


class BchDecoder:
    """Decodes up to floor((delta-1)/2) errors of a quaternary BCH code."""

    method = "bch"

    def __init__(self, code):
        if code.bch_info is None:
            raise ConfigError("code was not built as a BCH code")
        self.code = code
        info = code.bch_info
        F = info.field
        n = code.n
        self.field = F
        self.n = n
        self.b = info.b
        self.delta = info.delta
        self.nsyn = info.delta - 1
        self.radius = (info.delta - 1) // 2
        self._m = F.m
        self._mask = (1 << F.m) - 1
        img = gf4_embedding(F)
        self._img = img
        self._back = {img[s]: s for s in range(4)}

        exp, log, om1 = F.exp, F.log, F.order - 1
        logg = log[info.alpha]

        # packed per-position syndrome contributions for the designed run
        m = F.m
        contrib = []
        for i in range(n):
            per_sym = [0]
            for sym in (1, 2, 3):
                ls = log[img[sym]]
                acc = 0
                for j in range(self.nsyn):
                    acc |= exp[(ls + logg * ((self.b + j) * i)) % om1] << (j * m)
                per_sym.append(acc)
            contrib.append(per_sym)
        self._contrib = contrib

        # verification contributions: one syndrome per coset of the full
        # defining set (S_{4j} is the fourth power of S_j, so reps suffice)
        reps = sorted({min(_coset(j, 4, n)) for j in info.defining_set.exponents})
        self._reps = reps
        vcontrib = []
        for i in range(n):
            per_sym = [0]
            for sym in (1, 2, 3):
                ls = log[img[sym]]
                acc = 0
                for j, rep in enumerate(reps):
                    acc |= exp[(ls + logg * (rep * i)) % om1] << (j * m)
                per_sym.append(acc)
            vcontrib.append(per_sym)
        self._vcontrib = vcontrib

        # alpha^i and alpha^{-i} lookup
        self._alpha_pow = [exp[(logg * i) % om1] for i in range(n)]
        self._exp, self._log, self._om1 = exp, log, om1
        t = self.radius
        self._chien_logstep = [(-j * logg) % om1 for j in range(t + 1)]
        self._forney_logx = [(logg * i * (self.b - 1)) % om1 for i in range(n)]

    def is_codeword(self, word):
        acc = 0
        vc = self._vcontrib
        for i, sym in enumerate(word):
            if sym:
                acc ^= vc[i][sym]
        return acc == 0

    def decode(self, received):
        n = self.n
        if len(received) != n:
            raise ConfigError(f"received length {len(received)} != {n}")
        acc = 0
        contrib = self._contrib
        i = 0
        for sym in received:
            if sym:
                acc ^= contrib[i][sym]
            i += 1
        if acc == 0:
            if self.is_codeword(received):
                return HammingDecodeResult(bytes(received), bytes(n), SUCCESS)
            return _fail()

        m, mask = self._m, self._mask
        nsyn = self.nsyn
        S = [(acc >> (j * m)) & mask for j in range(nsyn)]
        exp, log, om1 = self._exp, self._log, self._om1

        # Berlekamp-Massey (field ops inlined on the exp/log tables)
        sigma = [1]
        prev = [1]
        L = 0
        shift = 1
        lb = 0  # log of the previous discrepancy
        for r in range(nsyn):
            d = S[r]
            for j in range(1, L + 1):
                sj = sigma[j]
                srj = S[r - j]
                if sj and srj:
                    d ^= exp[(log[sj] + log[srj]) % om1]
            if d == 0:
                shift += 1
                continue
            lco = (log[d] - lb) % om1
            if 2 * L <= r:
                old = sigma[:]
                need = shift + len(prev)
                if len(sigma) < need:
                    sigma.extend([0] * (need - len(sigma)))
                for j, c in enumerate(prev):
                    if c:
                        sigma[shift + j] ^= exp[(lco + log[c]) % om1]
                prev = old
                L = r + 1 - L
                lb = log[d]
                shift = 1
            else:
                need = shift + len(prev)
                if len(sigma) < need:
                    sigma.extend([0] * (need - len(sigma)))
                for j, c in enumerate(prev):
                    if c:
                        sigma[shift + j] ^= exp[(lco + log[c]) % om1]
                shift += 1
        while sigma and sigma[-1] == 0:
            sigma.pop()
        L = len(sigma) - 1
        if L < 1 or L > self.radius:
            return _fail()

        # Chien scan over every position (no early exit)
        logstep = self._chien_logstep
        positions = []
        append = positions.append
        terms = sigma[:]
        for i in range(n):
            v = 0
            for c in terms:
                v ^= c
            if v == 0:
                append(i)
            for j in range(1, L + 1):
                c = terms[j]
                if c:
                    terms[j] = exp[(log[c] + logstep[j]) % om1]
        if len(positions) != L:
            return _fail()

        # omega = sigma * S mod x^nsyn  (deg sigma <= radius < nsyn)
        omega = [0] * nsyn
        for i, a in enumerate(sigma):
            if a:
                la = log[a]
                top = nsyn - i
                for j in range(top):
                    sj = S[j]
                    if sj:
                        omega[i + j] ^= exp[(la + log[sj]) % om1]

        # Forney values: e = omega(X^-1) / (X^(b-1) * sigma'(X^-1))
        back = self._back
        alpha_pow = self._alpha_pow
        forney_logx = self._forney_logx
        err = bytearray(n)
        for i in positions:
            lxinv = -log[alpha_pow[i]] % om1
            num = 0
            for c in reversed(omega):
                num = (exp[(log[num] + lxinv) % om1] if num else 0) ^ c
            den = 0
            for j in range(1, L + 1, 2):
                c = sigma[j]
                if c:
                    den ^= exp[(log[c] + (j - 1) * lxinv) % om1]
            if den == 0 or num == 0:
                return _fail()
            val = back.get(exp[(log[num] - log[den] - forney_logx[i]) % om1])
            if val is None:
                return _fail()
            err[i] = val

        cand = bytes(a ^ b for a, b in zip(received, err))
        if not self.is_codeword(cand):
            return _fail(GUARD_TRIPPED)
        return HammingDecodeResult(cand, bytes(err), SUCCESS)


def _coset(s, q, n):
    out = {s % n}
    t = s * q % n
    while t % n not in out:
        out.add(t)
        t = t * q % n
    return out


def _poly_eval(field, f, x):
    acc = 0
    mul = field.mul
    for c in reversed(f):
        acc = mul(acc, x) ^ c
    return acc


class GoppaDecoder:
    """Key-equation decoder for Goppa codes.

    Binary codes with a squarefree polynomial are decoded through the
    squared modulus, reaching radius deg(G); otherwise the radius is
    floor(deg(G) / 2).
    """

    method = "goppa"

    def __init__(self, code):
        if code.goppa_info is None:
            raise ConfigError("code was not built as a Goppa code")
        self.code = code
        info = code.goppa_info
        F = info.field
        self.field = F
        self.n = code.n
        G = list(info.gpoly)
        r = poly_deg(G)
        self.binary = info.base_order == 2
        squarefree = poly_deg(poly_gcd(F, G, poly_derivative(G))) == 0
        if self.binary and squarefree:
            from .gf2m import poly_mul as _pm
            self._modulus = _pm(F, G, G)
            self.radius = r
        else:
            self._modulus = G
            self.radius = r // 2
        dM = poly_deg(self._modulus)
        self._dM = dM
        self._stop = dM - self.radius
        self._m = F.m
        self._mask = (1 << F.m) - 1

        img = gf4_embedding(F) if not self.binary else (0, 1)
        self._back = {img[s]: s for s in range(len(img))}
        self.locators = info.locators

        # packed coefficients of sym * (z - a_i)^{-1} mod modulus
        m = F.m
        contrib = []
        for a in self.locators:
            rem, _, v = poly_eea(F, self._modulus, [a, 1], 1)
            inv = [F.div(c, rem[0]) for c in v]
            inv += [0] * (dM - len(inv))
            per_sym = [0]
            syms = (1,) if self.binary else (1, 2, 3)
            for sym in syms:
                s_img = img[sym]
                acc = 0
                for j in range(dM):
                    acc |= F.mul(s_img, inv[j]) << (j * m)
                per_sym.append(acc)
            contrib.append(per_sym)
        self._contrib = contrib

    def _syndrome(self, word):
        acc = 0
        contrib = self._contrib
        for i, sym in enumerate(word):
            if sym:
                acc ^= contrib[i][sym]
        return acc

    def is_codeword(self, word):
        return self._syndrome(word) == 0

    def decode(self, received):
        n = self.n
        if len(received) != n:
            raise ConfigError(f"received length {len(received)} != {n}")
        F = self.field
        acc = self._syndrome(received)
        if acc == 0:
            return HammingDecodeResult(bytes(received), bytes(n), SUCCESS)
        m, mask = self._m, self._mask
        S = poly_trim([(acc >> (j * m)) & mask for j in range(self._dM)])

        omega, _, sigma = poly_eea(F, self._modulus, S, self._stop)
        L = poly_deg(sigma)
        if L < 1 or L > self.radius:
            return _fail()

        positions = [i for i, a in enumerate(self.locators)
                     if _poly_eval(F, sigma, a) == 0]
        if len(positions) != L:
            return _fail()

        err = bytearray(n)
        if self.binary:
            for i in positions:
                err[i] = 1
        else:
            dsig = poly_derivative(sigma)
            back = self._back
            for i in positions:
                a = self.locators[i]
                den = _poly_eval(F, dsig, a)
                if den == 0:
                    return _fail()
                val = back.get(F.div(_poly_eval(F, omega, a), den))
                if val is None or val == 0:
                    return _fail()
                err[i] = val

        cand = bytes(x ^ y for x, y in zip(received, err))
        if not self.is_codeword(cand):
            return _fail(GUARD_TRIPPED)
        return HammingDecodeResult(cand, bytes(err), SUCCESS)


ORACLE_BUDGET = 1 << 22
_MATERIALIZE_LIMIT = 1 << 18


def _nearest_codeword(code, received, budget):
    """Scan every codeword; returns (word, distance, tie).  The codeword
    matrix is cached on the code when small enough to materialize."""
    size = code.size()
    if size > budget:
        raise BudgetError(f"{size} codewords exceed the budget {budget}")
    rec = np.frombuffer(bytes(received), dtype=np.uint8)
    matrix = getattr(code, "_codeword_matrix", None)
    if matrix is None and size <= _MATERIALIZE_LIMIT:
        chunks = [c for c, _ in iter_codeword_chunks(code)]
        matrix = np.concatenate(chunks) if len(chunks) > 1 else chunks[0]
        code._codeword_matrix = matrix
    if matrix is not None:
        dist = np.count_nonzero(matrix != rec, axis=1)
        i = int(np.argmin(dist))
        dmin = int(dist[i])
        return bytes(matrix[i]), dmin, int(np.count_nonzero(dist == dmin)) > 1
    best, word, ties = None, None, False
    for chunk, _ in iter_codeword_chunks(code):
        dist = np.count_nonzero(chunk != rec, axis=1)
        i = int(np.argmin(dist))
        dmin = int(dist[i])
        if best is None or dmin < best:
            best, word = dmin, bytes(chunk[i])
            ties = int(np.count_nonzero(dist == best)) > 1
        elif dmin == best:
            ties = True
    return word, best, ties


class OracleDecoder:
    """Exhaustive nearest-codeword decoder with a declared radius.

    Ground truth for the algebraic decoders; also the decoding engine for
    externally loaded codes that carry no algebraic structure.
    """

    def __init__(self, code, radius=None, budget=ORACLE_BUDGET, method="oracle"):
        self.code = code
        self.method = method
        self.budget = budget
        size = code.size()
        if size > budget:
            raise BudgetError(f"{size} codewords exceed the budget {budget}")
        self.n = code.n
        d = code.d_lower
        self._max_radius = None if d is None else (d - 1) // 2
        if radius is None:
            radius = self._max_radius
            if radius is None:
                raise ConfigError("zero code cannot back a decoder")
        elif self._max_radius is not None and radius > self._max_radius:
            raise ConfigError(
                f"radius {radius} exceeds floor((d-1)/2) = {self._max_radius}")
        self.radius = radius

    def decode(self, received):
        word, dist, tie = _nearest_codeword(self.code, received, self.budget)
        if tie:
            return _fail(tie=True)
        if dist > self.radius:
            return _fail()
        err = bytes(a ^ b for a, b in zip(received, word))
        return HammingDecodeResult(word, err, SUCCESS)

    def is_codeword(self, word):
        return self.code.contains(bytes(word))


def oracle_decode(code, received, budget=ORACLE_BUDGET):
    """Nearest codeword in the Hamming metric, with no radius bound.

    Ties come back as a decode failure with the tie flag set.
    """
    word, dist, tie = _nearest_codeword(code, received, budget)
    if tie:
        return _fail(tie=True)
    err = bytes(a ^ b for a, b in zip(received, word))
    return HammingDecodeResult(word, err, SUCCESS)


def make_decoder(code, radius=None, budget=ORACLE_BUDGET):
    """Pick the natural decoder for a code: BCH, Goppa, or the oracle."""
    if getattr(code, "bch_info", None) is not None:
        dec = BchDecoder(code)
    elif getattr(code, "goppa_info", None) is not None:
        dec = GoppaDecoder(code)
    else:
        return OracleDecoder(code, radius=radius, budget=budget)
    if radius is not None and radius > dec.radius:
        raise ConfigError(f"requested radius {radius} exceeds decoder radius {dec.radius}")
    return dec


def external_decoder_load(code, radius):
    """Wrap a loaded code as a bounded-distance decoder with a declared radius.

    The declared radius must be consistent with the code's declared distance;
    decoding is backed by the exhaustive oracle, so the code must be small.
    """
    return OracleDecoder(code, radius=radius, method="external")
