"""Linear-fractional maps over the real line and the hypercomplex planes.

A map is a 2x2 matrix ``((a, b), (c, d))`` acting by

    z  |->  (a*z + b) / (c*z + d).

Entries are :class:`~cycleplane.algebra.HyperNum`; a matrix of real entries
(``im == 0``) is the classical SL(2, R)-style case and acts on all three
planes.  Over the dual and double numbers the denominator ``c*z + d`` can be
a zero divisor on a whole curve, not just at one point, so ``apply`` returns
the :data:`IDEAL` marker there instead of raising; callers that need a total
action escalate to the cycle-space action in :mod:`cycleplane.compact`.

Maps are stored unnormalised.  Equality of maps is projective (equal up to a
scalar); exact determinant-one normalisation is generally impossible over
the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    AlgebraContext,
    HyperNum,
    Point,
    as_fraction,
    as_point,
    context_for,
    from_point,
    hyper,
)
from .errors import ContextMismatch, NonInvertible


class _Ideal:
    """Marker returned by ``apply`` when the denominator is a zero divisor."""

    __slots__ = ()

    def __repr__(self):
        return "IDEAL"


IDEAL = _Ideal()


def _same_ctx(*values: HyperNum) -> AlgebraContext:
    ctx = values[0].ctx
    for v in values[1:]:
        if v.ctx is not ctx:
            raise ContextMismatch("matrix entries live in different algebras")
    return ctx


@dataclass(frozen=True, slots=True)
class Mat2:
    """A plain 2x2 matrix over one algebra, with no invertibility demands."""

    a: HyperNum
    b: HyperNum
    c: HyperNum
    d: HyperNum

    def __post_init__(self):
        _same_ctx(self.a, self.b, self.c, self.d)

    @property
    def ctx(self) -> AlgebraContext:
        return self.a.ctx

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def det(self) -> HyperNum:
        return self.a * self.d - self.b * self.c

    def trace(self) -> HyperNum:
        return self.a + self.d

    def adjugate(self) -> "Mat2":
        return Mat2(self.d, -self.b, -self.c, self.a)

    def scaled(self, factor: HyperNum) -> "Mat2":
        return Mat2(factor * self.a, factor * self.b, factor * self.c, factor * self.d)


@dataclass(frozen=True, slots=True)
class MoebiusMap:
    """An invertible linear-fractional map.

    The determinant ``a*d - b*c`` must not be a zero divisor; degenerate
    matrices are rejected at construction with :class:`NonInvertible`.
    """

    a: HyperNum
    b: HyperNum
    c: HyperNum
    d: HyperNum

    def __post_init__(self):
        _same_ctx(self.a, self.b, self.c, self.d)
        if self.det.is_zero_divisor():
            raise NonInvertible("map determinant is a divisor of zero")

    @property
    def ctx(self) -> AlgebraContext:
        return self.a.ctx

    @property
    def det(self) -> HyperNum:
        return self.a * self.d - self.b * self.c

    @property
    def is_real(self) -> bool:
        return all(e.im == 0 for e in (self.a, self.b, self.c, self.d))

    def matrix(self) -> Mat2:
        return Mat2(self.a, self.b, self.c, self.d)

    # -- the action ------------------------------------------------------

    def apply(self, z: HyperNum):
        """Value at ``z``, or :data:`IDEAL` when ``c*z + d`` is a zero divisor."""
        if z.ctx is not self.ctx:
            raise ContextMismatch("point and map live in different algebras")
        den = self.c * z + self.d
        if den.is_zero_divisor():
            return IDEAL
        return (self.a * z + self.b) * den.invert()

    def apply_point(self, p: Point):
        """Same as :meth:`apply` on a coordinate pair; returns a pair or IDEAL."""
        w = self.apply(from_point(p, self.ctx.sigma))
        return IDEAL if w is IDEAL else w.as_point()

    # -- group structure ---------------------------------------------------

    def __matmul__(self, other: "MoebiusMap") -> "MoebiusMap":
        m = self.matrix() @ other.matrix()
        return MoebiusMap(m.a, m.b, m.c, m.d)

    def inverse(self) -> "MoebiusMap":
        inv = self.det.invert()
        return MoebiusMap(inv * self.d, -inv * self.b, -inv * self.c, inv * self.a)

    def with_sigma(self, sigma: int) -> "MoebiusMap":
        """Re-interpret a real-entry map over another algebra."""
        if not self.is_real:
            raise ContextMismatch("only real-entry maps transfer between algebras")
        return MoebiusMap(
            hyper(self.a.re, sigma=sigma),
            hyper(self.b.re, sigma=sigma),
            hyper(self.c.re, sigma=sigma),
            hyper(self.d.re, sigma=sigma),
        )

    def __repr__(self) -> str:
        return f"MoebiusMap(({self.a!r}, {self.b!r}), ({self.c!r}, {self.d!r}))"

    # -- JSON wire format ---------------------------------------------------

    def to_json(self) -> dict:
        return {
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "c": self.c.to_json(),
            "d": self.d.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "MoebiusMap":
        return cls(*(HyperNum.from_json(data[key]) for key in "abcd"))


def _entry(x, ctx: AlgebraContext) -> HyperNum:
    if isinstance(x, HyperNum):
        if x.ctx is not ctx:
            raise ContextMismatch("entry built for a different algebra")
        return x
    if isinstance(x, tuple):
        return HyperNum(as_fraction(x[0]), as_fraction(x[1]), ctx)
    return HyperNum(as_fraction(x), Fraction(0), ctx)


def moebius(a, b, c, d, *, sigma: int) -> MoebiusMap:
    """Build a map from entries given as rationals, ``(re, im)`` pairs or HyperNums."""
    ctx = context_for(sigma)
    return MoebiusMap(_entry(a, ctx), _entry(b, ctx), _entry(c, ctx), _entry(d, ctx))


def identity(sigma: int) -> MoebiusMap:
    return moebius(1, 0, 0, 1, sigma=sigma)


def compose(g: MoebiusMap, h: MoebiusMap) -> MoebiusMap:
    """The map acting as ``z |-> g(h(z))`` wherever both sides are defined."""
    return g @ h


def time_reversal(t) -> MoebiusMap:
    """The double-number map ``((1, -t*i), (t*i, 1))``, determinant ``1 + t**2``.

    At ``t = 0`` this is the identity; as ``t`` grows it continuously drags
    the upper half-plane of the hyperbolic plane into the lower one,
    reversing the arrow of time without ever degenerating.
    """
    t = as_fraction(t)
    if t < 0:
        raise ValueError("time reversal parameter must be nonnegative")
    return moebius(1, (0, -t), (0, t), 1, sigma=1)


def cayley() -> MoebiusMap:
    """The double-number Cayley map ``((1, -i), (i, 1))``, determinant 2.

    Sends the hyperbolic upper half-plane to the conformal unit disk.
    """
    return moebius(1, (0, -1), (0, 1), 1, sigma=1)


#: A line ``alpha*u + beta*v + gamma == 0`` by its coefficient triple.
LineCoeffs = tuple[Fraction, Fraction, Fraction]


@dataclass(frozen=True, slots=True)
class SingularSet:
    """Description of ``{z : N(c*z + d) == 0}`` for one map.

    Depending on sigma the set is empty, a single point, one vertical line,
    or a pair of null lines; it is never a curve of any other shape.
    """

    sigma: int
    kind: str  # "empty" | "point" | "line" | "null-lines"
    point: Point | None = None
    lines: tuple[LineCoeffs, ...] = ()

    def contains(self, p) -> bool:
        u, v = as_point(p)
        if self.kind == "empty":
            return False
        if self.kind == "point":
            return (u, v) == self.point
        return any(al * u + be * v + ga == 0 for (al, be, ga) in self.lines)


def singular_set(g: MoebiusMap) -> SingularSet:
    """Locate all points where ``apply`` returns :data:`IDEAL`."""
    sigma = g.ctx.sigma
    c1, c2 = g.c.re, g.c.im
    d1, d2 = g.d.re, g.d.im
    if sigma == -1:
        # N vanishes only at an honest zero of c*z + d
        if g.c == 0:
            return SingularSet(sigma, "empty")
        z0 = (-g.d) * g.c.invert()
        return SingularSet(sigma, "point", point=z0.as_point())
    if sigma == 0:
        # N(c*z + d) = (c1*u + d1)**2
        if c1 == 0:
            # d1 == 0 too would make det a zero divisor, which is excluded
            return SingularSet(sigma, "empty")
        return SingularSet(sigma, "line", lines=((c1, Fraction(0), d1),))
    # sigma == +1: N = (A - B)(A + B) with A = c1*u + c2*v + d1, B = c2*u + c1*v + d2
    branches = []
    for sign in (-1, 1):
        al = c1 + sign * c2
        be = c2 + sign * c1
        ga = d1 + sign * d2
        if al != 0 or be != 0:
            branches.append((al, be, ga))
    if not branches:
        return SingularSet(sigma, "empty")
    return SingularSet(sigma, "null-lines", lines=tuple(branches))
