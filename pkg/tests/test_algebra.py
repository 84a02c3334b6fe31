import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cycleplane.algebra import (
    ELLIPTIC,
    HYPERBOLIC,
    PARABOLIC,
    HyperNum,
    context_for,
    from_point,
    hyper,
    imag_unit,
)
from cycleplane.errors import ContextMismatch, NonInvertible

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
sigmas = st.sampled_from([-1, 0, 1])


def numbers(sigma):
    return st.builds(lambda a, b: hyper(a, b, sigma=sigma), rationals, rationals)


def test_contexts_are_singletons():
    assert context_for(-1) is ELLIPTIC
    assert context_for(0) is PARABOLIC
    assert context_for(1) is HYPERBOLIC
    with pytest.raises(ValueError):
        context_for(2)


def test_componentwise_addition():
    for sigma in (-1, 0, 1):
        z = hyper(1, 2, sigma=sigma)
        w = hyper(3, 4, sigma=sigma)
        assert z + w == hyper(4, 6, sigma=sigma)
        assert z + 0 == z
        assert hyper(1, 1, sigma=sigma) + hyper(-1, -1, sigma=sigma) == 0


def test_imaginary_unit_squares_to_sigma():
    assert imag_unit(-1) * imag_unit(-1) == -1
    assert imag_unit(0) * imag_unit(0) == 0
    assert imag_unit(1) * imag_unit(1) == 1


def test_double_numbers_have_zero_divisors():
    z = hyper(1, 1, sigma=1)
    w = hyper(1, -1, sigma=1)
    assert z * w == 0
    assert z != 0 and w != 0


def test_norm_values():
    assert hyper(3, 4, sigma=-1).norm() == 25
    assert hyper(3, 4, sigma=1).norm() == -7
    assert hyper(3, 4, sigma=0).norm() == 9


def test_zero_divisor_predicate():
    assert hyper(1, 1, sigma=1).is_zero_divisor()
    assert not hyper(1, 1, sigma=-1).is_zero_divisor()
    assert hyper(0, 5, sigma=0).is_zero_divisor()
    assert hyper(0, 0, sigma=-1).is_zero_divisor()


def test_invert():
    assert hyper(2, 0, sigma=0).invert() == hyper(Fraction(1, 2), 0, sigma=0)
    assert imag_unit(-1).invert() == -imag_unit(-1)
    with pytest.raises(NonInvertible):
        hyper(1, 1, sigma=1).invert()


def test_context_mixing_is_refused():
    with pytest.raises(ContextMismatch):
        hyper(1, 0, sigma=-1) + hyper(1, 0, sigma=1)
    with pytest.raises(ContextMismatch):
        hyper(1, 0, sigma=0) * hyper(1, 0, sigma=1)


def test_floats_are_refused():
    with pytest.raises(TypeError):
        hyper(0.5, 0, sigma=-1)


@given(sigmas, rationals, rationals, rationals, rationals, rationals, rationals)
def test_ring_axioms(sigma, a, b, c, d, e, f):
    x = hyper(a, b, sigma=sigma)
    y = hyper(c, d, sigma=sigma)
    z = hyper(e, f, sigma=sigma)
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x + y) + z == x + (y + z)


@given(sigmas, rationals, rationals, rationals, rationals)
def test_norm_is_multiplicative(sigma, a, b, c, d):
    x = hyper(a, b, sigma=sigma)
    y = hyper(c, d, sigma=sigma)
    assert (x * y).norm() == x.norm() * y.norm()


@given(sigmas, rationals, rationals, rationals, rationals)
def test_zero_divisors_multiply(sigma, a, b, c, d):
    x = hyper(a, b, sigma=sigma)
    y = hyper(c, d, sigma=sigma)
    assert (x * y).is_zero_divisor() == (x.is_zero_divisor() or y.is_zero_divisor())


@given(sigmas, rationals, rationals)
def test_invert_is_a_two_sided_inverse(sigma, a, b):
    z = hyper(a, b, sigma=sigma)
    if z.is_zero_divisor():
        with pytest.raises(NonInvertible):
            z.invert()
    else:
        assert z.invert() * z == 1
        assert z * z.invert() == 1


@given(sigmas, rationals, rationals)
def test_conjugation_gives_the_norm(sigma, a, b):
    z = hyper(a, b, sigma=sigma)
    assert z * z.conj() == z.norm()


def test_json_round_trip():
    z = hyper(Fraction(-3, 4), Fraction(7, 2), sigma=1)
    blob = json.dumps(z.to_json())
    assert json.loads(blob) == {"re": "-3/4", "im": "7/2", "sigma": 1}
    assert HyperNum.from_json(json.loads(blob)) == z


def test_point_round_trip():
    p = (Fraction(1, 3), Fraction(-2))
    assert from_point(p, 0).as_point() == p
