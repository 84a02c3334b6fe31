"""Shared random generators for the test suite.

Coefficients stay small so that exact-arithmetic suites with 10**4
instances run in seconds.
"""

from fractions import Fraction

from cycleplane.cycle import Cycle
from cycleplane.moebius import IDEAL, MoebiusMap, moebius


def rand_fraction(rng, lo=-9, hi=9, max_den=5, nonzero=False) -> Fraction:
    while True:
        f = Fraction(rng.randint(lo, hi), rng.randint(1, max_den))
        if not nonzero or f != 0:
            return f


def rand_point(rng):
    return (rand_fraction(rng), rand_fraction(rng))


def rand_sl2(rng, sigma: int) -> MoebiusMap:
    """A random real-entry map with determinant exactly one."""
    while True:
        a = rand_fraction(rng)
        if a == 0:
            continue
        b = rand_fraction(rng)
        c = rand_fraction(rng)
        return moebius(a, b, c, (1 + b * c) / a, sigma=sigma)


def rand_cycle(rng) -> Cycle:
    while True:
        quad = tuple(rand_fraction(rng) for _ in range(4))
        if any(quad):
            return Cycle(*quad)


def rand_nonsingular_point(rng, g: MoebiusMap):
    """A random point where ``g`` is defined, with its image."""
    while True:
        p = rand_point(rng)
        w = g.apply_point(p)
        if w is not IDEAL:
            return p, w
