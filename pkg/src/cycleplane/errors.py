"""Exception types shared across the package."""


class GeometryError(Exception):
    """Base class for the domain errors raised by this package."""


class ContextMismatch(GeometryError):
    """Operands live in different algebras (unequal sigma)."""


class NonInvertible(GeometryError):
    """Inversion of a zero divisor was attempted."""


class IsALine(GeometryError):
    """A centre or radius style query was made on a cycle with k = 0."""


class NotAPoint(GeometryError):
    """A quadruple whose determinant invariant does not vanish was used
    where a compactified point was expected."""


class AtPole(GeometryError):
    """The surface lift or projection is undefined at this input."""


class OnLightConeAtInfinity(GeometryError):
    """A sheeted map hit a null denominator; the image is an ideal point."""


class UnsupportedGeometry(GeometryError):
    """The requested operation is not defined for this sigma."""


class ShapeError(GeometryError):
    """A matrix expected to encode a cycle does not have the required form."""
