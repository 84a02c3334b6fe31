"""The projective space of cycles and its matrix calculus.

A *cycle* is the solution set of

    k*(u**2 - sigma*v**2) - 2*l*u - 2*n*v + m == 0

for a rational quadruple ``(k, l, n, m)``, not all zero.  Depending on
sigma this is a circle, a parabola, an equilateral hyperbola, or (for
``k == 0``) a straight line.  Quadruples are projective: scaling by any
nonzero rational describes the same locus, and :func:`canonicalize`
produces the coprime-integer normal form used for equality tests.

Every cycle is also a 2x2 matrix

    (( l + i*s*n,  -m ),
     (     k,      -l + i*s*n ))

over a second algebra whose unit squares to ``sigma_cycle``; this encoding
goes back to Fillmore, Springer and Cnops.  Its payoff is that the
linear-fractional action on loci becomes plain matrix conjugation
(:func:`similarity`), and trace and determinant become invariants.  The
cycle-space parameters ``sigma_cycle`` and ``s`` are deliberately
independent of the point-space sigma, so all nine combinations of point
and cycle geometry can be expressed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import HyperNum, Point, as_fraction, as_point, context_for, hyper
from .errors import ContextMismatch, IsALine, NonInvertible, ShapeError
from .moebius import Mat2, MoebiusMap

__all__ = [
    "Cycle",
    "CycleContext",
    "cycle",
    "canonicalize",
    "centre",
    "det_inv",
    "fscc_matrix",
    "is_zero_radius",
    "normalize_k",
    "on_cycle",
    "proj_eq",
    "quadruple_from_matrix",
    "radius_sq",
    "similarity",
    "trace_inv",
    "zero_radius_at",
]


@dataclass(frozen=True, slots=True)
class CycleContext:
    """Parameters of the cycle space: the unit square ``sigma_cycle`` and ``s``."""

    sigma_cycle: int
    s: Fraction = Fraction(1)

    def __post_init__(self):
        if self.sigma_cycle not in (-1, 0, 1):
            raise ValueError(f"sigma_cycle must be -1, 0 or +1, got {self.sigma_cycle!r}")
        object.__setattr__(self, "s", as_fraction(self.s))
        if self.s == 0:
            raise ValueError("s must be nonzero")


@dataclass(frozen=True, slots=True)
class Cycle:
    """A representative quadruple ``(k, l, n, m)`` of a point of the cycle space."""

    k: Fraction
    l: Fraction
    n: Fraction
    m: Fraction

    def __post_init__(self):
        for name in ("k", "l", "n", "m"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if self.k == 0 and self.l == 0 and self.n == 0 and self.m == 0:
            raise ValueError("the zero quadruple does not define a cycle")

    def quadruple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.k, self.l, self.n, self.m)

    def eval_at(self, p, sigma: int) -> Fraction:
        """Value of the defining form at ``p``, for this representative.

        Linear in the representative: scaling the quadruple scales the value.
        """
        u, v = as_point(p)
        return (
            self.k * (u * u - sigma * v * v)
            - 2 * self.l * u
            - 2 * self.n * v
            + self.m
        )

    @property
    def is_line(self) -> bool:
        """k == 0 with a nonzero linear part: the locus is a straight line."""
        return self.k == 0 and (self.l != 0 or self.n != 0)

    def __repr__(self) -> str:
        return f"cycle({self.k}, {self.l}, {self.n}, {self.m})"

    def to_json(self) -> dict:
        return {"k": str(self.k), "l": str(self.l), "n": str(self.n), "m": str(self.m)}

    @classmethod
    def from_json(cls, data: dict) -> "Cycle":
        return cls(*(Fraction(data[key]) for key in "klnm"))


def cycle(k, l, n, m) -> Cycle:
    """Build a cycle from rationals."""
    return Cycle(as_fraction(k), as_fraction(l), as_fraction(n), as_fraction(m))


def on_cycle(C: Cycle, p, sigma: int) -> bool:
    return C.eval_at(p, sigma) == 0


def canonicalize(C: Cycle) -> Cycle:
    """The coprime-integer representative with positive first nonzero entry."""
    quad = C.quadruple()
    lcm = math.lcm(*(q.denominator for q in quad))
    ints = [int(q * lcm) for q in quad]
    g = math.gcd(*ints)
    ints = [i // g for i in ints]
    for i in ints:
        if i != 0:
            if i < 0:
                ints = [-j for j in ints]
            break
    return Cycle(*(Fraction(i) for i in ints))


def proj_eq(C: Cycle, D: Cycle) -> bool:
    """Projective equality: same locus, representatives may differ by a scale."""
    return canonicalize(C) == canonicalize(D)


def normalize_k(C: Cycle) -> Cycle:
    """The representative scaled to ``k == 1``; undefined for lines."""
    if C.k == 0:
        raise IsALine("cannot normalise k for a cycle with k == 0")
    return Cycle(Fraction(1), C.l / C.k, C.n / C.k, C.m / C.k)


def fscc_matrix(C: Cycle, cctx: CycleContext) -> Mat2:
    """The 2x2 matrix encoding of ``C`` over the ``sigma_cycle`` algebra."""
    ctx = context_for(cctx.sigma_cycle)
    sn = cctx.s * C.n
    return Mat2(
        HyperNum(C.l, sn, ctx),
        HyperNum(-C.m, Fraction(0), ctx),
        HyperNum(C.k, Fraction(0), ctx),
        HyperNum(-C.l, sn, ctx),
    )


def quadruple_from_matrix(M: Mat2, cctx: CycleContext) -> Cycle:
    """Read a cycle back from a matrix of the encoding shape.

    Raises :class:`ShapeError` when the matrix is not of that shape, i.e.
    off-diagonal entries not real or diagonal entries not of the form
    ``l + i*s*n`` and ``-l + i*s*n``.
    """
    if M.b.im != 0 or M.c.im != 0:
        raise ShapeError("off-diagonal entries must be real")
    if M.a.re != -M.d.re or M.a.im != M.d.im:
        raise ShapeError("diagonal entries do not pair up")
    return Cycle(M.c.re, M.a.re, M.a.im / cctx.s, -M.b.re)


def _lift_map(g: MoebiusMap, cctx: CycleContext) -> Mat2:
    """View the entries of ``g`` inside the cycle-space algebra."""
    ctx = context_for(cctx.sigma_cycle)
    entries = []
    for e in (g.a, g.b, g.c, g.d):
        if e.im == 0:
            entries.append(HyperNum(e.re, Fraction(0), ctx))
        elif e.ctx is ctx:
            entries.append(e)
        else:
            raise ContextMismatch(
                "hypercomplex map entries must live in the cycle-space algebra"
            )
    return Mat2(*entries)


def similarity(g: MoebiusMap, C: Cycle, cctx: CycleContext) -> Cycle:
    """The image of ``C`` under ``g``, computed by matrix conjugation.

    For a determinant-one real ``g`` the returned representative is exactly
    the conjugated matrix, so trace and determinant invariants are preserved
    on the nose, not only projectively.  General invertible determinants
    contribute an overall rational scale.
    """
    G = _lift_map(g, cctx)
    det = G.det()
    if det.is_zero_divisor():
        raise NonInvertible("map determinant is a divisor of zero in the cycle algebra")
    # det.conj() * G @ X @ adj(G) equals N(det) * (G X G^-1): a real multiple,
    # so the result stays in the encoding shape even for hypercomplex dets.
    M = (G @ fscc_matrix(C, cctx) @ G.adjugate()).scaled(det.conj())
    return quadruple_from_matrix(M, cctx)


def det_inv(C: Cycle, cctx: CycleContext) -> Fraction:
    """Determinant of the matrix encoding; a similarity invariant of the
    representative."""
    sb, s = cctx.sigma_cycle, cctx.s
    return sb * s * s * C.n * C.n - C.l * C.l + C.m * C.k


def trace_inv(C: Cycle, cctx: CycleContext) -> HyperNum:
    """Trace of the matrix encoding: the purely imaginary ``2*i*s*n``."""
    return HyperNum(Fraction(0), 2 * cctx.s * C.n, context_for(cctx.sigma_cycle))


def is_zero_radius(C: Cycle, cctx: CycleContext) -> bool:
    return det_inv(C, cctx) == 0


def radius_sq(C: Cycle, cctx: CycleContext) -> Fraction:
    """Squared radius ``-det_inv/k**2``.

    The sign is pinned by the elliptic/elliptic case: a circle of radius r
    has determinant ``-r**2``, so the minus sign makes this return ``r**2``.
    """
    if C.k == 0:
        raise IsALine("a line has no radius")
    return -det_inv(C, cctx) / (C.k * C.k)


def centre(C: Cycle, cctx: CycleContext) -> Point:
    """The centre ``(l/k, -sigma_cycle*n/k)``.

    The sign of the second coordinate is forced by expanding the defining
    equation: hyperbolically the null cone with vertex ``(a, b)`` stores
    ``n == -b``.  Parabolically only the first coordinate is meaningful.
    """
    if C.k == 0:
        raise IsALine("a line has no centre")
    if cctx.sigma_cycle == 0:
        return (C.l / C.k, Fraction(0))
    return (C.l / C.k, -cctx.sigma_cycle * C.n / C.k)


def zero_radius_at(p, sigma: int) -> Cycle:
    """The vanishing-determinant cycle whose centre is ``p``.

    Elliptically this is the point itself, hyperbolically the null cone with
    vertex ``p``; in all cases the representative has ``k == 1`` and
    determinant zero in the matching cycle algebra.
    """
    u, v = as_point(p)
    if sigma == -1:
        return Cycle(Fraction(1), u, v, u * u + v * v)
    if sigma == 1:
        return Cycle(Fraction(1), u, -v, u * u - v * v)
    if sigma == 0:
        return Cycle(Fraction(1), u, v, u * u)
    raise ValueError(f"sigma must be -1, 0 or +1, got {sigma!r}")
