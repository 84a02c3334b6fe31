"""Exact conformal geometry of the elliptic, parabolic and hyperbolic planes.

One parameter sigma in (-1, 0, +1) selects the algebra of the plane
(complex, dual or double numbers) and with it the family of invariant
curves: circles, parabolas or equilateral hyperbolas.  The package treats
the three uniformly, with exact rational arithmetic everywhere outside of
SVG rendering:

- :mod:`cycleplane.algebra`: the three two-dimensional algebras;
- :mod:`cycleplane.moebius`: linear-fractional maps and their singular sets;
- :mod:`cycleplane.cycle`: the projective cycle space, matrix encoding,
  conjugation action and invariants;
- :mod:`cycleplane.products`: the invariant inner product and orthogonality;
- :mod:`cycleplane.compact`: compactification by the cycle at infinity,
  the total action, unit-cycle reflection and surface lifts;
- :mod:`cycleplane.cover`: the two-sheeted hyperbolic plane, the conformal
  unit disk and sheet-tracked parameter sweeps;
- :mod:`cycleplane.render`: SVG figures (also exposed as the ``cycleplane``
  command line tool, see :mod:`cycleplane.cli`).
"""

from .algebra import (
    ELLIPTIC,
    HYPERBOLIC,
    PARABOLIC,
    AlgebraContext,
    HyperNum,
    Point,
    as_fraction,
    as_point,
    context_for,
    from_point,
    hyper,
    imag_unit,
)
from .compact import (
    INFINITY,
    CPoint,
    EquivalenceChecks,
    act,
    cpoint,
    embed,
    equivalence_checks,
    invert_unit,
    lift,
    project,
    surface_residual,
    unembed,
    z_infinity,
)
from .cover import (
    PathResult,
    PathSample,
    SheetedPoint,
    act_sheeted,
    cayley_to_disk,
    continue_path,
    in_disk,
    in_upper,
    on_unit_circle,
    path_csv,
    sheeted,
    sheeted_image,
)
from .cycle import (
    Cycle,
    CycleContext,
    canonicalize,
    centre,
    cycle,
    det_inv,
    fscc_matrix,
    is_zero_radius,
    normalize_k,
    on_cycle,
    proj_eq,
    quadruple_from_matrix,
    radius_sq,
    similarity,
    trace_inv,
    zero_radius_at,
)
from .errors import (
    AtPole,
    ContextMismatch,
    GeometryError,
    IsALine,
    NonInvertible,
    NotAPoint,
    OnLightConeAtInfinity,
    ShapeError,
    UnsupportedGeometry,
)
from .moebius import (
    IDEAL,
    Mat2,
    MoebiusMap,
    SingularSet,
    cayley,
    compose,
    identity,
    moebius,
    singular_set,
    time_reversal,
)
from .products import incidence_defect, inner, inner_from_matrices, is_orthogonal
from .render import (
    TIMELAPSE_LABELS,
    TIMELAPSE_TS,
    Viewport,
    grid_cycles,
    invert_grid,
    render_cycle,
    sample_branches,
    svg_document,
    timelapse,
)

__version__ = "0.1.0"
