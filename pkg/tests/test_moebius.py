import random
from fractions import Fraction

import pytest

from cycleplane.algebra import from_point, hyper, imag_unit
from cycleplane.errors import ContextMismatch, NonInvertible
from cycleplane.moebius import (
    IDEAL,
    MoebiusMap,
    cayley,
    compose,
    identity,
    moebius,
    singular_set,
    time_reversal,
)
from helpers import rand_fraction, rand_point, rand_sl2


def test_identity_fixes_everything():
    for sigma in (-1, 0, 1):
        g = identity(sigma)
        z = hyper(Fraction(5, 3), -2, sigma=sigma)
        assert g.apply(z) == z


def test_translation():
    g = moebius(1, 1, 0, 1, sigma=-1)
    assert g.apply(hyper(2, 0, sigma=-1)) == hyper(3, 0, sigma=-1)


def test_ideal_on_the_singular_set():
    g = moebius(0, -1, 1, 0, sigma=0)
    assert g.apply(imag_unit(0)) is IDEAL
    # the same point is perfectly fine elliptically
    assert moebius(0, -1, 1, 0, sigma=-1).apply(imag_unit(-1)) == imag_unit(-1)


def test_time_reversal_flips_the_arrow():
    g = time_reversal(3)
    i = imag_unit(1)
    assert g.apply(i) == hyper(0, Fraction(-1, 2), sigma=1)


def test_time_reversal_family_basics():
    assert time_reversal(0).apply(hyper(2, 5, sigma=1)) == hyper(2, 5, sigma=1)
    assert time_reversal(1).det == 2
    with pytest.raises(ValueError):
        time_reversal(-1)


def test_time_reversal_needs_double_numbers():
    with pytest.raises(ContextMismatch):
        time_reversal(2).apply(hyper(0, 1, sigma=-1))


def test_cayley_values():
    K = cayley()
    assert K.apply(imag_unit(1)) == 0
    assert K.apply(hyper(0, 0, sigma=1)) == -imag_unit(1)
    assert K.det == 2


def test_compose_and_inverse():
    rng = random.Random(7)
    for sigma in (-1, 0, 1):
        g = rand_sl2(rng, sigma)
        assert compose(g, identity(sigma)) == g
        assert g @ g.inverse() == identity(sigma)
        for _ in range(10):
            p = rand_point(rng)
            w = (g @ g.inverse()).apply_point(p)
            assert w == p
    inv = moebius(1, 1, 0, 1, sigma=-1).inverse()
    assert inv == moebius(1, -1, 0, 1, sigma=-1)


def test_degenerate_matrices_are_rejected():
    with pytest.raises(NonInvertible):
        moebius(1, 1, 1, 1, sigma=-1)
    with pytest.raises(NonInvertible):
        # determinant 1 + i is a zero divisor over the double numbers
        moebius(1, (0, -1), (0, 1), (1, 1), sigma=1)


def test_apply_respects_composition():
    rng = random.Random(11)
    for sigma in (-1, 0, 1):
        for _ in range(50):
            g = rand_sl2(rng, sigma)
            h = rand_sl2(rng, sigma)
            z = from_point(rand_point(rng), sigma)
            hz = h.apply(z)
            if hz is IDEAL:
                continue
            ghz = g.apply(hz)
            if ghz is IDEAL:
                continue
            assert (g @ h).apply(z) == ghz


def test_denominator_cocycle():
    rng = random.Random(13)
    for sigma in (-1, 0, 1):
        for _ in range(50):
            g = rand_sl2(rng, sigma)
            h = rand_sl2(rng, sigma)
            z = from_point(rand_point(rng), sigma)
            hz = h.apply(z)
            if hz is IDEAL:
                continue
            gh = g @ h
            lhs = (gh.c * z + gh.d).norm()
            rhs = (g.c * hz + g.d).norm() * (h.c * z + h.d).norm()
            assert lhs == rhs


def test_imaginary_part_scales_by_the_denominator_norm():
    rng = random.Random(17)
    for sigma in (-1, 0, 1):
        for _ in range(100):
            g = rand_sl2(rng, sigma)
            z = from_point(rand_point(rng), sigma)
            w = g.apply(z)
            if w is IDEAL:
                continue
            assert w.im == z.im / (g.c * z + g.d).norm()


def test_singular_set_point_line_nullpair():
    g = {s: moebius(0, -1, 1, 0, sigma=s) for s in (-1, 0, 1)}
    se = singular_set(g[-1])
    assert se.kind == "point" and se.point == (0, 0)
    sp = singular_set(g[0])
    assert sp.kind == "line"
    assert sp.contains((0, 5)) and not sp.contains((1, 0))
    sh = singular_set(g[1])
    assert sh.kind == "null-lines" and len(sh.lines) == 2
    assert sh.contains((2, 2)) and sh.contains((2, -2)) and not sh.contains((2, 1))


def test_singular_set_of_affine_maps_is_empty():
    for sigma in (-1, 0, 1):
        assert singular_set(moebius(2, 3, 0, 1, sigma=sigma)).kind == "empty"


def test_singular_set_of_cayley():
    se = singular_set(cayley())
    assert se.kind == "null-lines"
    assert se.contains((0, -1))
    assert se.contains((2, 1)) and se.contains((2, -3))
    assert not se.contains((0, 0))


def test_singular_set_matches_the_denominator_norm():
    rng = random.Random(19)
    for sigma in (-1, 0, 1):
        for _ in range(40):
            g = rand_sl2(rng, sigma)
            se = singular_set(g)
            for _ in range(20):
                p = rand_point(rng)
                nrm = (g.c * from_point(p, sigma) + g.d).norm()
                assert se.contains(p) == (nrm == 0)


def test_json_round_trip():
    g = moebius(1, (0, -2), (Fraction(1, 3), 1), 1, sigma=1)
    assert MoebiusMap.from_json(g.to_json()) == g
