#!/usr/bin/env python3
"""Constructing FNNN values and exploring their parameterized arithmetic.

A Fermatean neutrosophic normal number <(eta, xi); t, i, f> couples a
normal curve (location eta, spread xi) with truth/indeterminacy/falsity
degrees bounded by t^3 + i^3 + f^3 <= 2.  This script walks through
construction, the combining operations, and the weight laws.
"""

from fnnmadm import (
    CubicSumExceeded,
    boxplus,
    boxtimes,
    make_fnnn,
    membership_at,
    power,
    scale,
    score_ffn,
)

print("== construction ==")
a = make_fnnn(1.0, 1.0, t=0.8, i=0.7, f=0.6)
b = make_fnnn(2.0, 2.0, t=0.5, i=0.5, f=0.5)
print(f"a = {a}")
print(f"b = {b}   (cubic sum {b.mu.cubic_sum():.3f} <= 2)")
try:
    make_fnnn(1, 1, 0.95, 0.95, 0.95)
except CubicSumExceeded as e:
    print(f"rejected: {e}")

print("\n== combining (lam = 1) ==")
print(f"a [+] b = {boxplus(a, b, 1)}")
print(f"a [*] b = {boxtimes(a, b, 1)}")

print("\n== the lam parameter reshapes the membership algebra ==")
for lam in (1, 2, 5, 10):
    out = boxplus(a, b, lam)
    print(f"  lam={lam:>2}:  a [+] b  ->  t={out.t:.4f}  i={out.i:.4f}  f={out.f:.4f}")
print("(larger lam pushes the truth channel toward max(t1, t2))")

print("\n== weighted scaling and powering ==")
print(f"0.35 * a   = {scale(0.35, a, 1)}")
print(f"a ** 2     = {power(2, a, 1)}")
print(f"1 * a == a: {scale(1, a, 1) == a}")
two = boxplus(a, a, 1)
print(f"a [+] a    = {two}   (same memberships as 2 * a: {scale(2, a, 1)})")

print("\n== membership curves ==")
v = make_fnnn(0.0, 1.0, t=1.0, i=1.0, f=0.0)
for x in (0.0, 0.5, 1.0, 2.0):
    mu = membership_at(v, x)
    print(f"  x={x:>4}:  t={mu.t:.4f}  i={mu.i:.4f}  f={mu.f:.4f}")
print("(truth decays from its peak at eta; falsity saturates toward 1)")

print("\n== truth/falsity score ==")
for t, f in ((1.0, 0.0), (0.8, 0.6), (0.6, 0.6)):
    print(f"  score(t={t}, f={f}) = {score_ffn(t, f):+.3f}")
