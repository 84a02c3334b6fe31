"""Exact arithmetic in the three two-dimensional commutative algebras.

A number here is ``u + i*v`` with rational ``u, v``, where the imaginary
unit squares to ``sigma``:

    sigma = -1   complex numbers   (elliptic)
    sigma =  0   dual numbers      (parabolic)
    sigma = +1   double numbers    (hyperbolic)

All three share one multiplication rule,

    (a + i*b) * (c + i*d) = (a*c + sigma*b*d) + i*(a*d + b*c),

and one square form ``N(z) = u**2 - sigma*v**2`` with ``N(z*w) = N(z)*N(w)``.
For sigma in (0, +1) the form has nontrivial zeros, so dual and double
numbers contain divisors of zero and division is partial: ``invert`` raises
:class:`~cycleplane.errors.NonInvertible` exactly when ``N(z) == 0``.

Coordinates are ``fractions.Fraction`` throughout.  Floats are refused by
every constructor in this module; floating point belongs to rendering only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ContextMismatch, NonInvertible

#: A point of the plane, as a pair of exact rationals.
Point = tuple[Fraction, Fraction]


def as_fraction(x) -> Fraction:
    """Coerce ``x`` (int, Fraction, rational string) to an exact Fraction."""
    if isinstance(x, float):
        raise TypeError(
            f"refusing float {x!r}: core arithmetic is exact, floats are for rendering only"
        )
    return Fraction(x)


def as_point(p) -> Point:
    """Coerce a pair of rationals to a :data:`Point`."""
    u, v = p
    return (as_fraction(u), as_fraction(v))


@dataclass(frozen=True, slots=True)
class AlgebraContext:
    """Carries the square of the imaginary unit for one of the algebras."""

    sigma: int

    def __post_init__(self):
        if self.sigma not in (-1, 0, 1):
            raise ValueError(f"sigma must be -1, 0 or +1, got {self.sigma!r}")

    @property
    def name(self) -> str:
        return {-1: "elliptic", 0: "parabolic", 1: "hyperbolic"}[self.sigma]


ELLIPTIC = AlgebraContext(-1)
PARABOLIC = AlgebraContext(0)
HYPERBOLIC = AlgebraContext(1)

_CONTEXTS = {-1: ELLIPTIC, 0: PARABOLIC, 1: HYPERBOLIC}


def context_for(sigma: int) -> AlgebraContext:
    """Return the shared context instance for ``sigma``."""
    try:
        return _CONTEXTS[sigma]
    except KeyError:
        raise ValueError(f"sigma must be -1, 0 or +1, got {sigma!r}") from None


@dataclass(frozen=True, slots=True)
class HyperNum:
    """An element ``re + i*im`` of the algebra selected by ``ctx``.

    Values are immutable; arithmetic never mixes contexts (a
    :class:`ContextMismatch` is raised instead of guessing).
    """

    re: Fraction
    im: Fraction
    ctx: AlgebraContext

    def __post_init__(self):
        object.__setattr__(self, "re", as_fraction(self.re))
        object.__setattr__(self, "im", as_fraction(self.im))
        if not isinstance(self.ctx, AlgebraContext):
            object.__setattr__(self, "ctx", context_for(self.ctx))

    # -- coercion ------------------------------------------------------

    def _coerce(self, other) -> "HyperNum":
        if isinstance(other, HyperNum):
            if other.ctx is not self.ctx:
                raise ContextMismatch(
                    f"cannot combine sigma={self.ctx.sigma} with sigma={other.ctx.sigma}"
                )
            return other
        return HyperNum(as_fraction(other), Fraction(0), self.ctx)

    # -- ring operations -----------------------------------------------

    def __add__(self, other) -> "HyperNum":
        w = self._coerce(other)
        return HyperNum(self.re + w.re, self.im + w.im, self.ctx)

    __radd__ = __add__

    def __sub__(self, other) -> "HyperNum":
        w = self._coerce(other)
        return HyperNum(self.re - w.re, self.im - w.im, self.ctx)

    def __rsub__(self, other) -> "HyperNum":
        return self._coerce(other) - self

    def __neg__(self) -> "HyperNum":
        return HyperNum(-self.re, -self.im, self.ctx)

    def __mul__(self, other) -> "HyperNum":
        w = self._coerce(other)
        s = self.ctx.sigma
        return HyperNum(
            self.re * w.re + s * self.im * w.im,
            self.re * w.im + self.im * w.re,
            self.ctx,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "HyperNum":
        return self * self._coerce(other).invert()

    def __rtruediv__(self, other) -> "HyperNum":
        return self._coerce(other) * self.invert()

    # -- conjugation, norm, inversion ------------------------------------

    def conj(self) -> "HyperNum":
        """The conjugate ``re - i*im``."""
        return HyperNum(self.re, -self.im, self.ctx)

    def norm(self) -> Fraction:
        """The multiplicative square form ``re**2 - sigma*im**2``."""
        return self.re * self.re - self.ctx.sigma * self.im * self.im

    def is_zero_divisor(self) -> bool:
        """True iff ``norm() == 0`` (zero itself included)."""
        return self.norm() == 0

    def invert(self) -> "HyperNum":
        """Multiplicative inverse ``conj()/norm()``; fails on zero divisors."""
        n = self.norm()
        if n == 0:
            raise NonInvertible(f"{self!r} is a divisor of zero")
        return HyperNum(self.re / n, -self.im / n, self.ctx)

    # -- misc -------------------------------------------------------------

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def as_point(self) -> Point:
        return (self.re, self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, HyperNum):
            return (
                self.ctx is other.ctx
                and self.re == other.re
                and self.im == other.im
            )
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im, self.ctx.sigma))

    def __repr__(self) -> str:
        return f"hyper({self.re}, {self.im}, sigma={self.ctx.sigma})"

    # -- JSON wire format --------------------------------------------------

    def to_json(self) -> dict:
        """``{"re": "p/q", "im": "p/q", "sigma": -1|0|1}`` with exact strings."""
        return {"re": str(self.re), "im": str(self.im), "sigma": self.ctx.sigma}

    @classmethod
    def from_json(cls, data: dict) -> "HyperNum":
        return cls(Fraction(data["re"]), Fraction(data["im"]), context_for(data["sigma"]))


def hyper(re, im=0, *, sigma: int) -> HyperNum:
    """Build a :class:`HyperNum` from rationals, selecting the algebra by sigma."""
    return HyperNum(as_fraction(re), as_fraction(im), context_for(sigma))


def imag_unit(sigma: int) -> HyperNum:
    """The imaginary unit of the sigma-algebra."""
    return HyperNum(Fraction(0), Fraction(1), context_for(sigma))


def from_point(p, sigma: int) -> HyperNum:
    """View a plane point ``(u, v)`` as the number ``u + i*v``."""
    u, v = as_point(p)
    return HyperNum(u, v, context_for(sigma))
