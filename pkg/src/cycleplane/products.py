"""The invariant inner product of cycles and orthogonality.

The product is the real part of ``tr(M_C * conj(M_D))`` where ``M_X`` is the
matrix encoding of a cycle and ``conj`` conjugates entrywise in the cycle
algebra.  Written out it is the bilinear form

    <C, D> = 2*l_C*l_D - 2*sigma_cycle*s**2*n_C*n_D - (m_C*k_D + k_C*m_D),

so ``<C, C> == -2 * det_inv(C)`` and a cycle with vanishing determinant is
orthogonal to itself.  Conjugating the second factor (rather than taking the
plain trace) is what makes self-orthogonality of vanishing-determinant
cycles and the Euclidean angle criterion come out right.

``inner`` is bilinear in the chosen representatives; only its vanishing is
projective, which is why :func:`is_orthogonal` and the incidence defect are
the scale-free API.
"""

from __future__ import annotations

from fractions import Fraction

from .cycle import Cycle, CycleContext, fscc_matrix, zero_radius_at
from .errors import UnsupportedGeometry

__all__ = ["incidence_defect", "inner", "inner_from_matrices", "is_orthogonal"]


def inner(C: Cycle, D: Cycle, cctx: CycleContext) -> Fraction:
    """The bilinear invariant pairing of two cycle representatives."""
    sb, s = cctx.sigma_cycle, cctx.s
    return (
        2 * C.l * D.l
        - 2 * sb * s * s * C.n * D.n
        - (C.m * D.k + C.k * D.m)
    )


def inner_from_matrices(C: Cycle, D: Cycle, cctx: CycleContext) -> Fraction:
    """Same value computed as the trace of a matrix product; used as a
    cross-check of the closed formula."""
    MC = fscc_matrix(C, cctx)
    MD = fscc_matrix(D, cctx)
    MDc = type(MD)(MD.a.conj(), MD.b.conj(), MD.c.conj(), MD.d.conj())
    t = (MC @ MDc).trace()
    assert t.im == 0
    return t.re


def is_orthogonal(C: Cycle, D: Cycle, cctx: CycleContext) -> bool:
    """Vanishing of the inner product; independent of representatives."""
    return inner(C, D, cctx) == 0


def incidence_defect(C: Cycle, p, sigma: int) -> Fraction:
    """How far ``C`` is from passing through ``p``, measured in the cycle space.

    Pairs ``C`` with the vanishing-determinant cycle centred at ``p`` (with
    ``sigma_cycle == sigma`` and ``s == 1``); the result equals
    ``-C.eval_at(p, sigma)``, so it vanishes exactly when ``p`` lies on ``C``.
    Parabolically the pairing cannot see the v coordinate, so sigma == 0 is
    not supported.
    """
    if sigma == 0:
        raise UnsupportedGeometry("the parabolic pairing cannot express incidence")
    if sigma not in (-1, 1):
        raise ValueError(f"sigma must be -1 or +1, got {sigma!r}")
    cctx = CycleContext(sigma, Fraction(1))
    return inner(C, zero_radius_at(p, sigma), cctx)
