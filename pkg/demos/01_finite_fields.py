#!/usr/bin/env python3
"""Tour of the GF(2^m) arithmetic layer.

Fields are built from pinned irreducible polynomials with exp/log tables;
GF(4) symbols are written 0, 1, 2 (= w), 3 (= w^2) throughout.
"""

from srcodes import GF4, build_field, gf4_embedding, poly_eea, poly_eval, poly_mul

print("== GF(4), the field every component code lives over ==")
print("w * w      =", GF4.mul(2, 2), "  (w^2 = w + 1, written 3)")
print("w * w^2    =", GF4.mul(2, 3), "  (cube of the generator is 1)")
print("1/w        =", GF4.inv(2))
print("w + w      =", GF4.add(2, 2), "  (characteristic 2)")
print("frobenius:", [GF4.frobenius(a) for a in range(4)], " (squaring map)")

print()
print("== the locator field GF(64) for length-63 codes ==")
F = build_field(6)
print("modulus bits:", bin(F.modulus), " generator:", F.generator)
g = F.generator
print("generator order is exactly 63:",
      F.pow(g, 63) == 1 and F.pow(g, 21) != 1 and F.pow(g, 9) != 1)

img = gf4_embedding(F)
print("GF(4) sits inside GF(64) via w ->", img[2], "(= g^21)")
ok = all(img[GF4.mul(a, b)] == F.mul(img[a], img[b])
         for a in range(4) for b in range(4))
print("embedding respects multiplication on all 16 pairs:", ok)

print()
print("== polynomial arithmetic: the decoding engine ==")
f = [1, 0, 3, 1]          # 1 + 3z^2 + z^3 over GF(4)
h = [2, 1]                # 2 + z
prod = poly_mul(GF4, f, h)
print("f * h =", prod)
print("f(2)  =", poly_eval(GF4, f, 2))
r, u, v = poly_eea(GF4, prod, f, 1)
print("extended Euclid on (f*h, f) stops at remainder", r,
      " - the shared factor structure falls out of the Bezout pair")
