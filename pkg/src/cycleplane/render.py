"""SVG output for cycles, grid inversions and the time-reversal sequence.

This is the only module that touches floating point.  Quadruples stay exact
until the last moment: classification (circle, parabola, hyperbola branches,
lines, degenerate cases) happens on exact data, and floats appear only when
sampling the locus for polylines.  Emitted documents are deterministic byte
for byte because every number goes through one fixed formatter.

Every element produced from a cycle carries a ``data-cycle="k,l,n,m"``
attribute with the canonical quadruple, so documents remain checkable: any
sampled vertex must satisfy the carried equation to float accuracy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import as_fraction
from .compact import invert_unit
from .cycle import Cycle, CycleContext, canonicalize, centre, det_inv, radius_sq

__all__ = [
    "TIMELAPSE_LABELS",
    "TIMELAPSE_TS",
    "Viewport",
    "grid_cycles",
    "invert_grid",
    "render_cycle",
    "sample_branches",
    "svg_document",
    "timelapse",
]

_SIGMA_NAMES = {-1: "elliptic", 0: "parabolic", 1: "hyperbolic"}

#: Parameter values of the eight time-reversal frames.
TIMELAPSE_TS = (
    0.0,
    math.exp(-3),
    math.exp(-2),
    math.exp(-1),
    1.0,
    math.e,
    math.exp(2),
    math.exp(3),
)

TIMELAPSE_LABELS = (
    "t=0",
    "t=e^-3",
    "t=e^-2",
    "t=e^-1",
    "t=1",
    "t=e",
    "t=e^2",
    "t=e^3",
)

_DEFAULT_STYLES = {
    "default": 'fill="none" stroke="#24292f" stroke-width="0.02"',
    "grid": 'fill="none" stroke="#c8d1da" stroke-width="0.012"',
    "grid-image": 'fill="none" stroke="#24292f" stroke-width="0.02"',
    "unit-cycle": 'fill="none" stroke="#d73a49" stroke-width="0.03"',
    "cycle-at-infinity": 'fill="none" stroke="#0366d6" stroke-width="0.03"',
    "light-cone": 'fill="none" stroke="#d73a49" stroke-width="0.015" stroke-dasharray="0.08,0.05"',
    "objects": 'fill="none" stroke="#0366d6" stroke-width="0.025"',
    "cycle": 'fill="none" stroke="#24292f" stroke-width="0.025"',
}


@dataclass
class Viewport:
    """Plot window and sampling density; ranges are exact rationals."""

    x0: Fraction = Fraction(-3)
    x1: Fraction = Fraction(3)
    y0: Fraction = Fraction(-3)
    y1: Fraction = Fraction(3)
    samples: int = 256
    styles: dict = field(default_factory=dict)

    def __post_init__(self):
        self.x0, self.x1 = as_fraction(self.x0), as_fraction(self.x1)
        self.y0, self.y1 = as_fraction(self.y0), as_fraction(self.y1)
        if self.x0 >= self.x1 or self.y0 >= self.y1:
            raise ValueError("viewport ranges must be non-degenerate")
        if self.samples < 2:
            raise ValueError("need at least two samples per curve")

    def style_for(self, layer: str) -> str:
        return self.styles.get(layer) or _DEFAULT_STYLES.get(layer) or _DEFAULT_STYLES["default"]

    @property
    def dot_radius(self) -> float:
        return 0.02 * float(min(self.x1 - self.x0, self.y1 - self.y0))


def _fmt(x: float) -> str:
    if x == 0:
        x = 0.0  # avoid "-0"
    return format(x, ".10g")


def _pts(points) -> str:
    return " ".join(f"{_fmt(u)},{_fmt(v)}" for u, v in points)


def _data_attr(C: Cycle) -> str:
    k, l, n, m = canonicalize(C).quadruple()
    return f'data-cycle="{k},{l},{n},{m}"'


def _clip_line(al: float, be: float, ga: float, vp: Viewport):
    """Endpoints of the line ``al*u + be*v + ga == 0`` inside the viewport."""
    x0, x1 = float(vp.x0), float(vp.x1)
    y0, y1 = float(vp.y0), float(vp.y1)
    eps = 1e-9
    cand = []
    if be != 0:
        for xx in (x0, x1):
            vv = -(al * xx + ga) / be
            if y0 - eps <= vv <= y1 + eps:
                cand.append((xx, vv))
    if al != 0:
        for yy in (y0, y1):
            uu = -(be * yy + ga) / al
            if x0 - eps <= uu <= x1 + eps:
                cand.append((uu, yy))
    best = None
    for i in range(len(cand)):
        for j in range(i + 1, len(cand)):
            d = (cand[i][0] - cand[j][0]) ** 2 + (cand[i][1] - cand[j][1]) ** 2
            if best is None or d > best[0]:
                best = (d, cand[i], cand[j])
    if best is None or best[0] < 1e-18:
        return None
    return best[1], best[2]


def _classify(C: Cycle, sigma: int, cctx: CycleContext):
    """Exact classification of the locus, as (shape, payload) pairs."""
    k, l, n, m = C.quadruple()
    if k == 0:
        if l == 0 and n == 0:
            return ("empty", "no finite solutions")
        # -2*l*u - 2*n*v + m == 0
        return ("line", (-2 * l, -2 * n, m))
    if sigma == -1:
        r2 = radius_sq(C, cctx)
        cx, cy = centre(C, cctx)
        if r2 > 0:
            return ("circle", (cx, cy, r2))
        if r2 == 0:
            return ("dot", (cx, cy))
        return ("empty", "negative squared radius")
    if sigma == 0:
        if n != 0:
            return ("parabola", (k, l, n, m))
        disc = l * l - k * m
        if disc > 0:
            return ("vlines", (l / k, disc / (k * k)))
        if disc == 0:
            return ("vlines", (l / k, Fraction(0)))
        return ("empty", "no real roots")
    # sigma == +1
    a, b = centre(C, cctx)
    r2 = radius_sq(C, cctx)
    if r2 == 0:
        return ("cross", (a, b))
    return ("hyperbola", (a, b, r2))


def sample_branches(C: Cycle, sigma: int, vp: Viewport) -> list[list[tuple[float, float]]]:
    """Float samples of the locus inside the viewport, one list per branch.

    Vertices are computed directly from the defining equation, never from
    rounded SVG output, so each satisfies it to roughly machine precision.
    """
    cctx = CycleContext(sigma, Fraction(1))
    shape, payload = _classify(C, sigma, cctx)
    x0, x1 = float(vp.x0), float(vp.x1)
    y0, y1 = float(vp.y0), float(vp.y1)
    N = vp.samples

    if shape == "empty":
        return []
    if shape == "line":
        seg = _clip_line(*(float(t) for t in payload), vp)
        return [list(seg)] if seg else []
    if shape == "dot":
        return [[(float(payload[0]), float(payload[1]))]]
    if shape == "circle":
        cx, cy, r2 = (float(t) for t in payload)
        r = math.sqrt(r2)
        return [
            [
                (cx + r * math.cos(2 * math.pi * i / N), cy + r * math.sin(2 * math.pi * i / N))
                for i in range(N + 1)
            ]
        ]
    if shape == "vlines":
        u0, disc = float(payload[0]), float(payload[1])
        roots = [u0] if disc == 0 else [u0 - math.sqrt(disc), u0 + math.sqrt(disc)]
        return [[(r, y0), (r, y1)] for r in roots if x0 - 1e-9 <= r <= x1 + 1e-9]
    if shape == "parabola":
        k, l, n, m = (float(t) for t in payload)
        branches, cur = [], []
        for i in range(N + 1):
            u = x0 + (x1 - x0) * i / N
            v = (k * u * u - 2 * l * u + m) / (2 * n)
            if y0 - 1e-9 <= v <= y1 + 1e-9:
                cur.append((u, v))
            elif cur:
                branches.append(cur)
                cur = []
        if cur:
            branches.append(cur)
        return branches
    if shape == "cross":
        a, b = (float(t) for t in payload)
        out = []
        for sgn in (1.0, -1.0):
            # v - b == sgn * (u - a)
            seg = _clip_line(sgn, -1.0, b - sgn * a, vp)
            if seg:
                out.append(list(seg))
        return out
    # hyperbola: (u-a)**2 - (v-b)**2 == r2
    a, b, r2 = (float(t) for t in payload)
    branches = []
    if r2 > 0:
        for sgn in (1.0, -1.0):
            cur = []
            for i in range(N + 1):
                v = y0 + (y1 - y0) * i / N
                u = a + sgn * math.sqrt((v - b) ** 2 + r2)
                if x0 - 1e-9 <= u <= x1 + 1e-9:
                    cur.append((u, v))
                elif cur:
                    branches.append(cur)
                    cur = []
            if cur:
                branches.append(cur)
    else:
        for sgn in (1.0, -1.0):
            cur = []
            for i in range(N + 1):
                u = x0 + (x1 - x0) * i / N
                v = b + sgn * math.sqrt((u - a) ** 2 - r2)
                if y0 - 1e-9 <= v <= y1 + 1e-9:
                    cur.append((u, v))
                elif cur:
                    branches.append(cur)
                    cur = []
            if cur:
                branches.append(cur)
    return [br for br in branches if len(br) >= 2]


def render_cycle(C: Cycle, sigma: int, vp: Viewport) -> str:
    """An SVG fragment drawing one cycle; empty loci yield a comment."""
    cctx = CycleContext(sigma, Fraction(1))
    shape, payload = _classify(C, sigma, cctx)
    data = _data_attr(C)
    if shape == "empty":
        k, l, n, m = canonicalize(C).quadruple()
        return f"<!-- cycle {k},{l},{n},{m}: {payload} -->"
    if shape == "circle":
        cx, cy, r2 = (float(t) for t in payload)
        return (
            f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(math.sqrt(r2))}" {data}/>'
        )
    if shape == "dot":
        cx, cy = (float(t) for t in payload)
        return (
            f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(vp.dot_radius)}"'
            f' fill="currentColor" stroke="none" {data}/>'
        )
    parts = []
    for branch in sample_branches(C, sigma, vp):
        if len(branch) == 1:
            u, v = branch[0]
            parts.append(
                f'<circle cx="{_fmt(u)}" cy="{_fmt(v)}" r="{_fmt(vp.dot_radius)}"'
                f' fill="currentColor" stroke="none" {data}/>'
            )
        elif len(branch) == 2:
            (u1, v1), (u2, v2) = branch
            parts.append(
                f'<line x1="{_fmt(u1)}" y1="{_fmt(v1)}" x2="{_fmt(u2)}" y2="{_fmt(v2)}" {data}/>'
            )
        else:
            parts.append(f'<polyline points="{_pts(branch)}" {data}/>')
    if not parts:
        k, l, n, m = canonicalize(C).quadruple()
        return f"<!-- cycle {k},{l},{n},{m}: outside viewport -->"
    return "".join(parts)


def _dot(u: float, v: float, vp: Viewport, extra: str = "") -> str:
    return (
        f'<circle cx="{_fmt(u)}" cy="{_fmt(v)}" r="{_fmt(vp.dot_radius)}"'
        f' fill="currentColor" stroke="none"{extra}/>'
    )


def svg_document(layers, vp: Viewport, title: str | None = None, label: str | None = None) -> str:
    """Assemble layer fragments into a standalone SVG 1.1 document.

    ``layers`` is a sequence of ``(layer_id, fragment)`` pairs.  Geometry is
    written in mathematical coordinates inside a flipping transform, so the
    emitted numbers can be checked against the exact equations directly.
    """
    W = H = 480.0
    sx = W / float(vp.x1 - vp.x0)
    sy = H / float(vp.y1 - vp.y0)
    tx = -float(vp.x0) * sx
    ty = float(vp.y1) * sy
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(W)}" height="{_fmt(H)}" viewBox="0 0 {_fmt(W)} {_fmt(H)}">',
    ]
    if title is not None:
        out.append(f"<title>{title}</title>")
    out.append(f'<rect width="{_fmt(W)}" height="{_fmt(H)}" fill="white"/>')
    out.append(
        f'<g transform="matrix({_fmt(sx)} 0 0 {_fmt(-sy)} {_fmt(tx)} {_fmt(ty)})">'
    )
    for layer_id, fragment in layers:
        out.append(f'<g id="{layer_id}" {vp.style_for(layer_id)}>{fragment}</g>')
    out.append("</g>")
    if label is not None:
        out.append(
            f'<text x="14" y="26" font-family="monospace" font-size="20" fill="#24292f">{label}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def grid_cycles(spacing, vp: Viewport) -> list[Cycle]:
    """The viewport's rectangular grid, each line as a ``k == 0`` cycle."""
    spacing = as_fraction(spacing)
    if spacing <= 0:
        raise ValueError("grid spacing must be positive")
    out = []
    i = math.ceil(vp.x0 / spacing)
    while i * spacing <= vp.x1:
        # vertical line u == i*spacing
        out.append(Cycle(Fraction(0), Fraction(1), Fraction(0), 2 * i * spacing))
        i += 1
    j = math.ceil(vp.y0 / spacing)
    while j * spacing <= vp.y1:
        # horizontal line v == j*spacing
        out.append(Cycle(Fraction(0), Fraction(0), Fraction(1), 2 * j * spacing))
        j += 1
    return out


def invert_grid(sigma: int, spacing, vp: Viewport) -> str:
    """Reflect a rectangular grid in the unit cycle and render the result.

    Layers: the source grid (faint), its reflected image, the unit cycle,
    and the image of the cycle at infinity, which reflection brings back to
    the origin's vanishing-determinant cycle ``(1, 0, 0, 0)``.
    """
    grid = grid_cycles(spacing, vp)
    grid_frag = "".join(render_cycle(C, sigma, vp) for C in grid)
    image_frag = "".join(render_cycle(invert_unit(C), sigma, vp) for C in grid)
    unit_frag = render_cycle(Cycle(1, 0, 0, -1), sigma, vp)
    inf_frag = render_cycle(invert_unit(Cycle(0, 0, 0, 1)), sigma, vp)
    return svg_document(
        [
            ("grid", grid_frag),
            ("grid-image", image_frag),
            ("unit-cycle", unit_frag),
            ("cycle-at-infinity", inf_frag),
        ],
        vp,
        title=f"grid inversion, {_SIGMA_NAMES[sigma]} plane",
    )


def _apply_time_reversal_float(t: float, u: float, v: float):
    """Float evaluation of the time-reversal map over the double numbers."""
    nu, nv = u, v - t
    du, dv = 1.0 + t * v, t * u
    nrm = du * du - dv * dv
    if abs(nrm) < 1e-12:
        return None
    return ((nu * du - nv * dv) / nrm, (nv * du - nu * dv) / nrm)


def timelapse(z_set, vp: Viewport) -> list[tuple[str, str]]:
    """Eight frames of the time-reversal family applied to points and cycles.

    ``z_set`` may mix coordinate pairs and :class:`Cycle` objects.  The
    parameter runs through ``0, e^-3, e^-2, e^-1, 1, e, e^2, e^3``; the light
    cone ``v == +-u`` is drawn in every frame for orientation.  Because the
    parameter values are transcendental, images here are computed in floats.
    """
    cone1 = _clip_line(1.0, -1.0, 0.0, vp)
    cone2 = _clip_line(1.0, 1.0, 0.0, vp)
    cone_frag = "".join(
        f'<line x1="{_fmt(p[0])}" y1="{_fmt(p[1])}" x2="{_fmt(q[0])}" y2="{_fmt(q[1])}"/>'
        for p, q in (cone1, cone2)
        if p and q
    )
    # cycles are sampled over an enlarged window so that image arcs entering
    # the viewport from far away are not lost
    src_vp = Viewport(
        vp.x0 * 8, vp.x1 * 8, vp.y0 * 8, vp.y1 * 8, samples=vp.samples * 8
    )
    diag = math.hypot(float(vp.x1 - vp.x0), float(vp.y1 - vp.y0))
    keep_x = (float(vp.x0) - diag, float(vp.x1) + diag)
    keep_y = (float(vp.y0) - diag, float(vp.y1) + diag)

    frames = []
    for t, lab in zip(TIMELAPSE_TS, TIMELAPSE_LABELS):
        parts = []
        for item in z_set:
            if isinstance(item, Cycle):
                for branch in sample_branches(item, 1, src_vp):
                    cur = []
                    for (u, v) in branch:
                        w = _apply_time_reversal_float(t, u, v)
                        inside = (
                            w is not None
                            and keep_x[0] <= w[0] <= keep_x[1]
                            and keep_y[0] <= w[1] <= keep_y[1]
                        )
                        if inside and (not cur or math.hypot(w[0] - cur[-1][0], w[1] - cur[-1][1]) < diag):
                            cur.append(w)
                        else:
                            if len(cur) >= 2:
                                parts.append(f'<polyline points="{_pts(cur)}"/>')
                            cur = [w] if inside else []
                    if len(cur) >= 2:
                        parts.append(f'<polyline points="{_pts(cur)}"/>')
            else:
                u, v = (float(as_fraction(x)) for x in item)
                w = _apply_time_reversal_float(t, u, v)
                if w is not None:
                    parts.append(_dot(w[0], w[1], vp))
        doc = svg_document(
            [("light-cone", cone_frag), ("objects", "".join(parts))],
            vp,
            title=lab,
            label=lab,
        )
        frames.append((lab, doc))
    return frames
