"""The two-sheeted hyperbolic plane and the sheet-flip cocycle.

Over the double numbers the upper half-plane is not invariant: real
determinant-one maps can drag a future point to the past, moving it through
the light cone at infinity without ever crossing the real axis.  The cure is
to take two copies of the plane glued along that cone.  A point of the cover
is a coordinate point plus a sheet tag, and a map acts by

    (z, sheet)  ->  ( g(z), sheet * sign(N(c*z + d)) ).

Because ``N`` is multiplicative, the sign factor is a cocycle and this is a
genuine group action.  The imaginary part transforms as
``v' = v * det(g) / N(c*z + d)``, so for ``det > 0`` the product
``sign(v) * sheet`` is invariant: the doubled upper half-plane (upper halves
of sheet +1, lower halves of sheet -1) is preserved, and no continuous
family inside the group can reverse the arrow of time on the cover.

The Cayley map carries the doubled upper half-plane onto the conformal unit
disk, whose boundary is the two-sheeted conic ``u**2 - v**2 == -1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .algebra import HyperNum, Point, as_fraction, hyper
from .errors import ContextMismatch, OnLightConeAtInfinity
from .moebius import MoebiusMap, cayley

__all__ = [
    "PathResult",
    "PathSample",
    "SheetedPoint",
    "act_sheeted",
    "cayley_to_disk",
    "continue_path",
    "in_disk",
    "in_upper",
    "on_unit_circle",
    "path_csv",
    "sheeted",
    "sheeted_image",
]


@dataclass(frozen=True, slots=True)
class SheetedPoint:
    """A double-number point together with its sheet tag (+1 or -1)."""

    z: HyperNum
    sheet: int

    def __post_init__(self):
        if self.z.ctx.sigma != 1:
            raise ContextMismatch("sheeted points live over the double numbers")
        if self.sheet not in (1, -1):
            raise ValueError("sheet must be +1 or -1")

    @property
    def point(self) -> Point:
        return self.z.as_point()


def sheeted(u, v=0, sheet: int = 1) -> SheetedPoint:
    return SheetedPoint(hyper(u, v, sigma=1), sheet)


def sheeted_image(g: MoebiusMap, sp: SheetedPoint) -> SheetedPoint:
    """Apply any invertible double-number map with the sheet cocycle.

    The doubled-upper invariance theorem only holds for real entries with
    positive determinant (see :func:`act_sheeted`); this helper applies the
    same sign rule to arbitrary maps, e.g. Cayley conjugates.
    """
    den = g.c * sp.z + g.d
    nrm = den.norm()
    if nrm == 0:
        raise OnLightConeAtInfinity(f"{sp.point} maps to an ideal point")
    w = (g.a * sp.z + g.b) * den.invert()
    return SheetedPoint(w, sp.sheet * (1 if nrm > 0 else -1))


def act_sheeted(g: MoebiusMap, sp: SheetedPoint) -> SheetedPoint:
    """The group action on the cover, for real entries and ``det > 0``."""
    if not g.is_real:
        raise ValueError("act_sheeted expects a real-entry map")
    if g.det.re <= 0:
        raise ValueError("act_sheeted expects a positive determinant")
    return sheeted_image(g, sp)


def in_upper(sp: SheetedPoint) -> bool:
    """Membership in the doubled 'upper' half-plane."""
    v = sp.z.im
    return (v > 0 and sp.sheet == 1) or (v < 0 and sp.sheet == -1)


def _disk_form(sp: SheetedPoint) -> Fraction:
    u, v = sp.z.re, sp.z.im
    return u * u - v * v


def in_disk(sp: SheetedPoint) -> bool:
    """Membership in the conformal unit disk on the cover."""
    q = _disk_form(sp)
    return (q > -1 and sp.sheet == 1) or (q < -1 and sp.sheet == -1)


def on_unit_circle(sp: SheetedPoint) -> bool:
    """Membership in the conformal unit circle ``u**2 - v**2 == -1``."""
    return _disk_form(sp) == -1


def cayley_to_disk(sp: SheetedPoint) -> SheetedPoint:
    """Send the cover to the disk picture via the Cayley map and the cocycle."""
    return sheeted_image(cayley(), sp)


@dataclass(frozen=True, slots=True)
class PathSample:
    """One sample of a parameter sweep; ``point``/``sheet`` are None on the
    light cone at infinity."""

    t: Fraction
    point: Point | None
    sheet: int | None
    on_cone: bool


@dataclass(frozen=True, slots=True)
class PathResult:
    samples: tuple[PathSample, ...]
    flips: int


def continue_path(
    family: Callable[[Fraction], MoebiusMap],
    sp: SheetedPoint,
    t_grid: Sequence,
) -> PathResult:
    """Sweep a one-parameter family of maps across a grid, tracking sheets.

    The family must start at (a projective multiple of) the identity.  Grid
    values where the denominator form vanishes are flagged as lying on the
    light cone at infinity; a sheet flip is counted whenever consecutive
    defined samples disagree, including across flagged gaps.
    """
    grid = [as_fraction(t) for t in t_grid]
    if not grid:
        raise ValueError("empty parameter grid")
    if any(t2 <= t1 for t1, t2 in zip(grid, grid[1:])):
        raise ValueError("parameter grid must be strictly increasing")
    g0 = family(grid[0])
    if not (g0.b == 0 and g0.c == 0 and g0.a == g0.d):
        raise ValueError("family must start at the identity")
    samples = []
    flips = 0
    prev_sheet = None
    for t in grid:
        g = family(t)
        den = g.c * sp.z + g.d
        nrm = den.norm()
        if nrm == 0:
            samples.append(PathSample(t, None, None, True))
            continue
        w = (g.a * sp.z + g.b) * den.invert()
        sheet = sp.sheet * (1 if nrm > 0 else -1)
        if prev_sheet is not None and sheet != prev_sheet:
            flips += 1
        prev_sheet = sheet
        samples.append(PathSample(t, w.as_point(), sheet, False))
    return PathResult(tuple(samples), flips)


def path_csv(result: PathResult) -> str:
    """Render a sweep as CSV with header ``t,u,v,sheet,on_cone``.

    Coordinates are exact rational strings; flagged samples leave the
    coordinate and sheet fields empty.
    """
    rows = ["t,u,v,sheet,on_cone"]
    for s in result.samples:
        if s.on_cone:
            rows.append(f"{s.t},,,,1")
        else:
            u, v = s.point
            rows.append(f"{s.t},{u},{v},{s.sheet},0")
    return "\n".join(rows) + "\n"
