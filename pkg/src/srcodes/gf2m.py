"""GF(2^m) arithmetic with log/antilog tables, plus polynomial helpers.

Field elements are integers in [0, 2^m) whose binary digits are the
coefficients of a polynomial over GF(2); arithmetic is done modulo an
irreducible polynomial of degree m.  Addition is XOR, multiplication
goes through exp/log tables built from a fixed primitive element.

Default irreducible (primitive) polynomials, one per degree:

    m=1  : x + 1                          m=11 : x^11 + x^2 + 1
    m=2  : x^2 + x + 1                    m=12 : x^12 + x^6 + x^4 + x + 1
    m=3  : x^3 + x + 1                    m=13 : x^13 + x^4 + x^3 + x + 1
    m=4  : x^4 + x + 1                    m=14 : x^14 + x^10 + x^6 + x + 1
    m=5  : x^5 + x^2 + 1                  m=15 : x^15 + x + 1
    m=6  : x^6 + x + 1                    m=16 : x^16 + x^12 + x^3 + x + 1
    m=7  : x^7 + x^3 + 1                  m=17 : x^17 + x^3 + 1
    m=8  : x^8 + x^4 + x^3 + x^2 + 1      m=18 : x^18 + x^7 + 1
    m=9  : x^9 + x^4 + 1                  m=19 : x^19 + x^5 + x^2 + x + 1
    m=10 : x^10 + x^3 + 1                 m=20 : x^20 + x^3 + 1

These are pinned so that every serialized object and golden value is
reproducible.  GF(4) symbols are encoded 0, 1, w -> 2, w^2 -> 3 (w is the
primitive element with w^2 + w + 1 = 0) everywhere in the package.

Polynomials over a field are plain lists of element values, lowest degree
first, with trailing zeros trimmed; the zero polynomial is [] with degree -1.
"""

from functools import lru_cache

from .errors import ConstructionError, EmbedError, RangeError

MAX_DEGREE = 20

DEFAULT_MODULI = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10001000000001011,
    17: 0b100000000000001001,
    18: (1 << 18) | (1 << 7) | 1,
    19: (1 << 19) | 0b100111,
    20: (1 << 20) | 0b1001,
}


# ----------------------------------------------------------------------
# bit-polynomials over GF(2) (used only to validate moduli / find generators)
# ----------------------------------------------------------------------

def _bp_deg(p):
    return p.bit_length() - 1


def _bp_mulmod(a, b, mod):
    dm = _bp_deg(mod)
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> dm & 1:
            a ^= mod
    return r


def _bp_powmod(a, e, mod):
    r = 1
    while e:
        if e & 1:
            r = _bp_mulmod(r, a, mod)
        a = _bp_mulmod(a, a, mod)
        e >>= 1
    return r


def _bp_gcd(a, b):
    while b:
        dm = _bp_deg(b)
        while _bp_deg(a) >= dm and a:
            a ^= b << (_bp_deg(a) - dm)
        a, b = b, a
    return a


def _prime_factors(n):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _bp_is_irreducible(f):
    """Rabin test for a GF(2)[x] polynomial given as a bitmask."""
    m = _bp_deg(f)
    if m <= 0:
        return False
    if m == 1:
        return True
    if not f & 1:  # divisible by x
        return False
    # x^(2^m) == x (mod f)
    t = 2
    for _ in range(m):
        t = _bp_mulmod(t, t, f)
    if t != 2:
        return False
    for p in _prime_factors(m):
        t = 2
        for _ in range(m // p):
            t = _bp_mulmod(t, t, f)
        if _bp_gcd(t ^ 2, f) != 1:
            return False
    return True


# ----------------------------------------------------------------------
# field context
# ----------------------------------------------------------------------

class FieldContext:
    """A concrete GF(2^m) with exp/log tables.

    Immutable after construction; safe to share across threads.  All element
    operations are pure functions of their arguments.
    """

    def __init__(self, m, modulus=None):
        if not 1 <= m <= MAX_DEGREE:
            raise RangeError(f"extension degree {m} not in [1, {MAX_DEGREE}]")
        if modulus is None:
            modulus = DEFAULT_MODULI[m]
        if _bp_deg(modulus) != m:
            raise ConstructionError(
                f"modulus {modulus:#x} has degree {_bp_deg(modulus)}, expected {m}")
        if not _bp_is_irreducible(modulus):
            raise ConstructionError(f"modulus {modulus:#x} is reducible over GF(2)")
        self.m = m
        self.modulus = modulus
        self.order = 1 << m
        self.generator = self._find_generator()
        self._build_tables()

    def _find_generator(self):
        n = self.order - 1
        if n == 1:
            return 1
        primes = _prime_factors(n)
        for cand in range(2, self.order):
            if all(_bp_powmod(cand, n // p, self.modulus) != 1 for p in primes):
                return cand
        raise ConstructionError("no generator found (impossible for a field)")

    def _build_tables(self):
        n = self.order - 1
        exp = [0] * n
        log = [-1] * self.order
        g = self.generator
        mod = self.modulus
        m = self.m
        x = 1
        if g == 2:
            # multiplication by x is a shift + conditional reduce
            for i in range(n):
                exp[i] = x
                log[x] = i
                x <<= 1
                if x >> m & 1:
                    x ^= mod
        else:
            for i in range(n):
                exp[i] = x
                log[x] = i
                x = _bp_mulmod(x, g, mod)
        self.exp = exp
        self.log = log

    # -- element operations ------------------------------------------------

    def add(self, a, b):
        return a ^ b

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.order - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.exp[(self.order - 1 - self.log[a]) % (self.order - 1)]

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by 0")
        if a == 0:
            return 0
        return self.exp[(self.log[a] - self.log[b]) % (self.order - 1)]

    def pow(self, a, e):
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 0
        return self.exp[(self.log[a] * e) % (self.order - 1)]

    def frobenius(self, a):
        """The map a -> a^2 generating the Galois group over GF(2)."""
        return self.mul(a, a)

    def elements(self):
        return range(self.order)

    def nonzero(self):
        return range(1, self.order)

    def __repr__(self):
        return f"FieldContext(m={self.m}, modulus={self.modulus:#x})"


@lru_cache(maxsize=None)
def _cached_field(m, modulus):
    return FieldContext(m, modulus)


def build_field(m, modulus=None):
    """Build (or fetch from cache) the GF(2^m) context for a modulus."""
    if not isinstance(m, int) or not 1 <= m <= MAX_DEGREE:
        raise RangeError(f"extension degree {m} not in [1, {MAX_DEGREE}]")
    if modulus is None:
        modulus = DEFAULT_MODULI[m]
    return _cached_field(m, modulus)


GF2 = build_field(1)
GF4 = build_field(2)

# flat GF(4) helper tables (symbols 0,1,2,3 = 0,1,w,w^2)
GF4_MUL = tuple(GF4.mul(a, b) for a in range(4) for b in range(4))
GF4_INV = (0, 1, 3, 2)

# 256-entry translation tables: SCALE4[s] maps a GF(4) byte vector to s*vector
SCALE4 = tuple(
    bytes(GF4.mul(s, v) if v < 4 else 0 for v in range(256)) for s in range(4)
)


def subfield_embed(a, target):
    """Image of a GF(4) element in GF(4^h) = GF(2^(2h)).

    w maps to g^s with s = (2^(2h)-1)/3, so the image generates the order-3
    subgroup of the target's multiplicative group.
    """
    return gf4_embedding(target)[a]


@lru_cache(maxsize=None)
def _gf4_embedding_cached(m, modulus):
    target = build_field(m, modulus)
    if target.m % 2 != 0:
        raise EmbedError(f"GF(4) does not embed in GF(2^{target.m})")
    s = (target.order - 1) // 3
    w_img = target.exp[s]
    return (0, 1, w_img, target.mul(w_img, w_img))


def gf4_embedding(target):
    """Tuple of the four GF(4) symbol images inside the target field."""
    if target.m == 2:
        return (0, 1, 2, 3)
    return _gf4_embedding_cached(target.m, target.modulus)


class Gf4Expansion:
    """Coordinate expansion of GF(2^(2h)) over the embedded GF(4).

    Picks a greedy GF(4)-basis of the target field and precomputes the
    inverse coordinate map, so elements can be written as length-h vectors
    of GF(4) symbols.
    """

    def __init__(self, target):
        if target.m % 2 != 0:
            raise EmbedError(f"GF(4) does not embed in GF(2^{target.m})")
        self.target = target
        self.h = target.m // 2
        w_img = gf4_embedding(target)[2]
        basis = []
        span_rows = []  # reduced GF(2)-echelon of {b, w*b} bit vectors

        def reduce(v):
            for r in span_rows:
                if v.bit_length() == r.bit_length():
                    v ^= r
            return v

        def insert(v):
            v = reduce(v)
            if v == 0:
                return False
            span_rows.append(v)
            span_rows.sort(key=int.bit_length, reverse=True)
            return True

        for cand in range(1, target.order):
            saved = list(span_rows)
            if insert(cand) and insert(target.mul(w_img, cand)):
                basis.append(cand)
                if len(basis) == self.h:
                    break
            else:
                span_rows[:] = saved
        self.basis = tuple(basis)
        # columns of the 2h x 2h change-of-basis matrix: b_j then w*b_j
        cols = [b for b in basis] + [target.mul(w_img, b) for b in basis]
        self._inv_rows = _invert_bit_matrix(cols, target.m)

    def coords(self, a):
        """GF(4) coordinates of a target element, length h, basis order."""
        bits = []
        for row in self._inv_rows:
            bits.append(bin(row & a).count("1") & 1)
        h = self.h
        return tuple(bits[j] | bits[h + j] << 1 for j in range(h))


def _invert_bit_matrix(cols, n):
    """Invert an n x n GF(2) matrix given as column bitmasks; rows returned
    as bitmasks so that row . vector = coordinate."""
    # build rows of [A | I] with A[i][j] = bit i of cols[j]
    rows = []
    for i in range(n):
        left = 0
        for j in range(n):
            if cols[j] >> i & 1:
                left |= 1 << j
        rows.append((left, 1 << i))
    for c in range(n):
        piv = next(i for i in range(c, n) if rows[i][0] >> c & 1)
        rows[c], rows[piv] = rows[piv], rows[c]
        for i in range(n):
            if i != c and rows[i][0] >> c & 1:
                rows[i] = (rows[i][0] ^ rows[c][0], rows[i][1] ^ rows[c][1])
    return [right for _, right in rows]


@lru_cache(maxsize=None)
def _gf4_expansion_cached(m, modulus):
    return Gf4Expansion(build_field(m, modulus))


def gf4_expansion(target):
    return _gf4_expansion_cached(target.m, target.modulus)


# ----------------------------------------------------------------------
# polynomials over a FieldContext (coefficient lists, lowest degree first)
# ----------------------------------------------------------------------

def poly_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_deg(f):
    return len(f) - 1


def poly_add(f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] ^= c
    return poly_trim(out)


def poly_scale(field, f, s):
    if s == 0:
        return []
    mul = field.mul
    return [mul(c, s) for c in f]


def poly_mul(field, f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    mul = field.mul
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] ^= mul(a, b)
    return poly_trim(out)


def poly_divmod(field, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = poly_deg(g)
    lead_inv = field.inv(g[-1])
    q = [0] * max(0, len(f) - dg)
    mul = field.mul
    while len(r) - 1 >= dg and r:
        shift = len(r) - 1 - dg
        coef = mul(r[-1], lead_inv)
        q[shift] = coef
        for i, c in enumerate(g):
            if c:
                r[shift + i] ^= mul(coef, c)
        poly_trim(r)
    return poly_trim(q), r


def poly_mod(field, f, g):
    return poly_divmod(field, f, g)[1]


def poly_eval(field, f, x):
    acc = 0
    mul = field.mul
    for c in reversed(f):
        acc = mul(acc, x) ^ c
    return acc


def poly_monic(field, f):
    if not f:
        return []
    return poly_scale(field, f, field.inv(f[-1]))


def poly_eea(field, f, g, stop_degree):
    """Extended Euclid on (f, g), walking the remainder sequence from g and
    stopping at the first remainder r with deg(r) < stop_degree.

    Returns (r, u, v) with r = u*f + v*g.
    """
    if not g:
        raise ZeroDivisionError("poly_eea requires g != 0")
    r0, r1 = list(f), list(g)
    u0, u1 = [1], []
    v0, v1 = [], [1]
    while poly_deg(r1) >= stop_degree:
        if not r1:
            break
        q, rem = poly_divmod(field, r0, r1)
        r0, r1 = r1, rem
        u0, u1 = u1, poly_add(u0, poly_mul(field, q, u1))
        v0, v1 = v1, poly_add(v0, poly_mul(field, q, v1))
    return r1, u1, v1


def poly_gcd(field, f, g):
    a, b = list(f), list(g)
    while b:
        a, b = b, poly_mod(field, a, b)
    return poly_monic(field, a)


def poly_derivative(f):
    # characteristic 2: even-degree terms vanish
    return poly_trim([f[i] if i % 2 == 1 else 0 for i in range(1, len(f))])


def poly_powmod(field, f, e, mod):
    r = [1]
    base = poly_mod(field, f, mod)
    while e:
        if e & 1:
            r = poly_mod(field, poly_mul(field, r, base), mod)
        base = poly_mod(field, poly_mul(field, base, base), mod)
        e >>= 1
    return r


def poly_is_irreducible(field, f):
    """Rabin irreducibility test for f over the given GF(2^m)."""
    r = poly_deg(f)
    if r <= 0:
        return False
    if r == 1:
        return True
    q = field.order
    z = [0, 1]
    t = poly_powmod(field, z, q ** r, f)
    if poly_add(t, z):
        return False
    for p in _prime_factors(r):
        t = poly_powmod(field, z, q ** (r // p), f)
        if poly_deg(poly_gcd(field, poly_add(t, z), f)) != 0:
            return False
    return True


# ----------------------------------------------------------------------
# GF(4)/GF(2) vectors as bytes (symbol values per position)
# ----------------------------------------------------------------------

def vec_xor(a, b):
    """Coordinatewise sum; GF(4) and GF(2) addition are both XOR."""
    n = len(a)
    return (int.from_bytes(a, "big") ^ int.from_bytes(b, "big")).to_bytes(n, "big")


def vec_scale(v, s):
    """Scale a GF(4) byte vector by the symbol s."""
    return v.translate(SCALE4[s])


def vec_weight(v):
    return len(v) - v.count(0)


def vec_support(v):
    return {i for i, c in enumerate(v) if c}
