"""Conformal compactification of the plane by one extra cycle.

The map ``z -> 1/z`` is singular wherever ``N(z) == 0``: a point
elliptically, a whole line parabolically, a null cone hyperbolically.  A
single added point therefore cannot compactify the dual and double planes.
The fix is to stop working with coordinate pairs altogether: a point is
identified with the vanishing-determinant cycle centred there, i.e. with a
point of the determinant-zero stratum of the cycle space.  The stratum
contains one extra projective point family with ``k == 0``; the distinguished
quadruple ``(0, 0, 0, 1)`` is the cycle at infinity, and for the double
plane the remaining ``k == 0`` points carry the direction data of the light
cone at infinity.

On this stratum the linear-fractional action becomes matrix conjugation,
which is total: singular points simply land on the ``k == 0`` part.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .algebra import Point, as_fraction, as_point, from_point
from .cycle import (
    Cycle,
    CycleContext,
    canonicalize,
    centre,
    det_inv,
    similarity,
    zero_radius_at,
)
from .errors import AtPole, NotAPoint
from .moebius import MoebiusMap
from .products import is_orthogonal

__all__ = [
    "INFINITY",
    "CPoint",
    "EquivalenceChecks",
    "act",
    "cpoint",
    "embed",
    "equivalence_checks",
    "invert_unit",
    "lift",
    "project",
    "surface_residual",
    "unembed",
    "z_infinity",
]


class _Infinity:
    __slots__ = ()

    def __repr__(self):
        return "INFINITY"


#: Marker returned by :func:`unembed` for ideal points.
INFINITY = _Infinity()

_INFINITY_CYCLE = Cycle(Fraction(0), Fraction(0), Fraction(0), Fraction(1))


@dataclass(frozen=True, slots=True)
class CPoint:
    """A compactified point: a determinant-zero quadruple plus its sigma.

    The quadruple is stored canonicalized, so dataclass equality is
    projective equality.  ``k != 0`` quadruples are finite points, ``k == 0``
    ones are ideal (on the cycle at infinity).
    """

    q: Cycle
    sigma: int

    def __post_init__(self):
        if self.sigma not in (-1, 0, 1):
            raise ValueError(f"sigma must be -1, 0 or +1, got {self.sigma!r}")
        if det_inv(self.q, CycleContext(self.sigma, Fraction(1))) != 0:
            raise NotAPoint(f"{self.q!r} has nonzero determinant invariant")
        object.__setattr__(self, "q", canonicalize(self.q))

    @property
    def is_ideal(self) -> bool:
        return self.q.k == 0

    @property
    def is_infinity(self) -> bool:
        return self.q.k == 0 and self.q.l == 0 and self.q.n == 0


def cpoint(q: Cycle, sigma: int) -> CPoint:
    return CPoint(q, sigma)


def z_infinity(sigma: int) -> CPoint:
    """The cycle at infinity, the quadruple ``(0, 0, 0, 1)``."""
    return CPoint(_INFINITY_CYCLE, sigma)


def embed(p, sigma: int) -> CPoint:
    """Identify a finite point with its vanishing-determinant cycle."""
    return CPoint(zero_radius_at(p, sigma), sigma)


def unembed(cp: CPoint):
    """Recover the coordinate pair of a finite CPoint, or :data:`INFINITY`."""
    if cp.q.k == 0:
        return INFINITY
    if cp.sigma == 0:
        return (cp.q.l / cp.q.k, cp.q.n / cp.q.k)
    return centre(cp.q, CycleContext(cp.sigma, Fraction(1)))


def act(g: MoebiusMap, cp: CPoint) -> CPoint:
    """The compactified action: conjugation on the determinant-zero stratum.

    Total by construction; on finite non-singular points it agrees with the
    coordinate action, and points of the singular set land on ``k == 0``.
    """
    return CPoint(similarity(g, cp.q, CycleContext(cp.sigma, Fraction(1))), cp.sigma)


def invert_unit(C: Cycle) -> Cycle:
    """Reflection of a cycle in the unit cycle ``(1, 0, 0, -1)``.

    In coordinates this is the involution ``(k, l, n, m) -> (m, l, n, k)``,
    i.e. conjugation of the entrywise-conjugated encoding matrix by the unit
    cycle's own matrix.  It swaps the origin's cycle with the cycle at
    infinity and fixes the unit cycle.
    """
    return Cycle(C.m, C.l, C.n, C.k)


class EquivalenceChecks(NamedTuple):
    """Four equivalent descriptions of 'p is a singular point of z -> 1/z'.

    ``ortho_to_origin`` is None parabolically, where the pairing cannot see
    the second coordinate; the remaining three stay meaningful.
    """

    on_origin_null_cone: bool
    ortho_to_origin: bool | None
    inversion_singular: bool
    image_ortho_to_infinity: bool

    @property
    def consistent(self) -> bool:
        defined = [b for b in self if b is not None]
        return all(defined) or not any(defined)


def equivalence_checks(p, sigma: int) -> EquivalenceChecks:
    """Evaluate the four singularity descriptions at ``p``."""
    u, v = as_point(p)
    z = from_point((u, v), sigma)
    cctx = CycleContext(sigma, Fraction(1))
    zp = zero_radius_at((u, v), sigma)
    origin = zero_radius_at((0, 0), sigma)
    on_cone = origin.eval_at((u, v), sigma) == 0
    ortho = None if sigma == 0 else is_orthogonal(zp, origin, cctx)
    singular = z.is_zero_divisor()
    image_ortho = is_orthogonal(invert_unit(zp), _INFINITY_CYCLE, cctx)
    return EquivalenceChecks(on_cone, ortho, singular, image_ortho)


def lift(p, sigma: int) -> tuple[Fraction, Fraction, Fraction]:
    """Lift a plane point onto its curved model surface.

    The target satisfies ``x**2 - sigma*y**2 + w**2 == 1``: the sphere,
    the cylinder, or the one-sheet hyperboloid.  The pole-projection
    denominator is ``1 + N(p)``; hyperbolically it vanishes on the conic
    ``u**2 - v**2 == -1``, where the lift is undefined.
    """
    u, v = as_point(p)
    q = u * u - sigma * v * v
    den = 1 + q
    if den == 0:
        raise AtPole(f"lift undefined at {p!r}")
    return (2 * u / den, 2 * v / den, (q - 1) / den)


def project(sp, sigma: int) -> Point:
    """Project a surface point back to the plane; inverse of :func:`lift`."""
    x, y, w = (as_fraction(t) for t in sp)
    if w == 1:
        raise AtPole("projection undefined at the pole w == 1")
    return (x / (1 - w), y / (1 - w))


def surface_residual(sp, sigma: int) -> Fraction:
    """``x**2 - sigma*y**2 + w**2 - 1``; zero exactly on the model surface."""
    x, y, w = (as_fraction(t) for t in sp)
    return x * x - sigma * y * y + w * w - 1
