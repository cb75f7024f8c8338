#!/usr/bin/env python3
"""Distance measures between FNNN values.

Both measures project a value to the plane (phi * eta, phi * xi) with
phi = (1 + t^3 + i^3 - f^3) / 3 and compare there: hamming with absolute
differences, euclidean with a cubic mean.
"""

from fnnmadm import (
    FnnnGenConfig,
    euclidean,
    gen_fnnn,
    hamming,
    make_fnnn,
    normal_distance,
    phi,
)

a = make_fnnn(0.8598, 0.6377, 0.8375, 0.7863, 0.8524)
positive = make_fnnn(0.9, 0.6157, 1, 1, 0)
negative = make_fnnn(0.7925, 0.7391, 0, 0, 1)

print("== phi weighting ==")
for name, v in (("candidate", a), ("positive ideal", positive), ("negative ideal", negative)):
    print(f"  phi({name:<14}) = {phi(v.mu):.5f}")

print("\n== distances to the ideals ==")
print(f"  hamming  (candidate, positive) = {hamming(a, positive):.4f}")
print(f"  hamming  (candidate, negative) = {hamming(a, negative):.4f}")
print(f"  euclidean(candidate, positive) = {euclidean(a, positive):.4f}")
print(f"  euclidean(candidate, negative) = {euclidean(a, negative):.4f}")

print("\n== full-membership values reduce to plain (eta, xi) distances ==")
p = make_fnnn(0.3, 0.8, 1, 1, 0)
q = make_fnnn(1.1, 0.2, 1, 1, 0)
print(f"  3 * euclidean(p, q)      = {3 * euclidean(p, q):.6f}")
print(f"  normal_distance(p, q)    = {normal_distance(p.normal, q.normal):.6f}")

print("\n== metric sanity over random values ==")
vals = gen_fnnn(FnnnGenConfig(membership_range=(0.0, 1.0), seed=5), 300)
violations = 0
for k in range(100):
    x, y, z = vals[3 * k : 3 * k + 3]
    if hamming(x, z) > hamming(x, y) + hamming(y, z) + 1e-12:
        violations += 1
print(f"  triangle-inequality violations over 100 random triples: {violations}")
