"""Distance measures between Fermatean neutrosophic normal numbers.

Both measures see a value only through the scalar weight
``phi = (1 + t^3 + i^3 - f^3) / 3`` applied to its location and spread,
so triples with equal phi are indistinguishable to them.  Absolute
differences are taken before cubing, which keeps the Euclidean radicand
nonnegative and preserves the metric properties.
"""

from __future__ import annotations

from .core import Fnnn, MembershipTriple, NormalParams


def phi(mu: MembershipTriple) -> float:
    """(1 + t^3 + i^3 - f^3) / 3, in [0, 1] for any valid triple."""
    return (1.0 + mu.t ** 3 + mu.i ** 3 - mu.f ** 3) / 3.0


def hamming(a: Fnnn, b: Fnnn) -> float:
    """Phi-weighted L1-style distance on the (eta, xi) plane."""
    pa, pb = phi(a.mu), phi(b.mu)
    return (
        abs(pa * a.eta - pb * b.eta) + abs(pa * a.xi - pb * b.xi) / 3.0
    ) / 3.0


def euclidean(a: Fnnn, b: Fnnn) -> float:
    """Phi-weighted cubic-mean distance on the (eta, xi) plane."""
    pa, pb = phi(a.mu), phi(b.mu)
    de = abs(pa * a.eta - pb * b.eta)
    dx = abs(pa * a.xi - pb * b.xi)
    return (de ** 3 + dx ** 3 / 3.0) ** (1.0 / 3.0) / 3.0


def normal_distance(p: NormalParams, q: NormalParams) -> float:
    """Plain cubic-mean distance between two normal parameter pairs."""
    de = abs(p.eta - q.eta)
    dx = abs(p.xi - q.xi)
    return (de ** 3 + dx ** 3 / 3.0) ** (1.0 / 3.0)
