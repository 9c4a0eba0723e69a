import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crosscap.core import (
    PiecewiseLinear,
    as_fraction,
    format_fraction,
    pl_eval,
    pl_inf_over_open_ray,
    pl_restrict,
    pl_roots,
    pl_sum,
)


def rationals(lo, hi, den):
    return st.builds(lambda n, d: F(n, d), st.integers(lo * den, hi * den), st.integers(1, den)).filter(
        lambda x: lo <= x <= hi
    )


small = rationals(-20, 20, 12)


@st.composite
def pl_functions(draw):
    n = draw(st.integers(0, 5))
    steps = draw(st.lists(rationals(0, 4, 8).filter(bool), min_size=n, max_size=n))
    ws = [F(1)]
    for s in steps:
        ws.append(ws[-1] + s)
    vs = draw(st.lists(small, min_size=len(ws), max_size=len(ws)))
    return PiecewiseLinear(tuple(zip(ws, vs)), draw(small))


points = rationals(1, 30, 20)


def test_as_fraction_rejects_floats():
    assert as_fraction(3) == F(3)
    assert as_fraction(" 7/3 ") == F(7, 3)
    with pytest.raises(TypeError):
        as_fraction(0.5)
    with pytest.raises(TypeError):
        as_fraction(True)


def test_format_fraction():
    assert format_fraction(F(3)) == "3"
    assert format_fraction(F(-4, 6)) == "-2/3"


def test_eval_examples():
    f = PiecewiseLinear(((1, 0), (3, 2)), 0)
    assert f(2) == 1
    assert f(10) == 2
    g = PiecewiseLinear.affine(F(1, 2), F(1, 2))
    assert g(F(7, 3)) == F(5, 3)
    with pytest.raises(ValueError):
        pl_eval(f, F(1, 2))


def test_normalization_drops_collinear_breakpoints():
    f = PiecewiseLinear(((1, 1), (2, 2), (3, 3)), 1)
    assert f.breakpoints == ((F(1), F(1)),)
    assert f == PiecewiseLinear.affine(1, 0)
    g = PiecewiseLinear(((1, 0), (2, 1), (4, 3), (5, 3)), 0)
    assert g.breakpoints == ((1, 0), (4, 3))


def test_constructor_validation():
    with pytest.raises(ValueError):
        PiecewiseLinear((), 0)
    with pytest.raises(ValueError):
        PiecewiseLinear(((2, 0),), 0)
    with pytest.raises(ValueError):
        PiecewiseLinear(((1, 0), (1, 1)), 0)


def test_from_pieces_round_trip():
    f = PiecewiseLinear.from_pieces([(1, 3, F(1, 12), F(11, 12)), (3, None, F(1, 4), F(5, 12))])
    assert f.pieces() == [(1, 3, F(1, 12), F(11, 12)), (3, None, F(1, 4), F(5, 12))]
    with pytest.raises(ValueError):
        PiecewiseLinear.from_pieces([(1, 3, 1, 0), (3, None, 1, 1)])


def test_sum_of_nothing_is_zero():
    assert pl_sum([]) == PiecewiseLinear.zero()


def test_roots_isolated_and_flat():
    f = PiecewiseLinear(((1, -1), (3, 1)), 0)
    assert pl_roots(f).points == (F(2),)
    flat = PiecewiseLinear(((1, 1), (2, 0), (4, 0)), -1)
    r = pl_roots(flat)
    assert r.intervals == ((F(2), F(4)),)
    assert r.points == ()
    assert pl_roots(PiecewiseLinear.zero()).intervals == ((F(1), None),)


def test_inf_over_open_ray():
    assert pl_inf_over_open_ray(PiecewiseLinear.affine(1, 0)) == (F(1), False)
    assert pl_inf_over_open_ray(PiecewiseLinear(((1, 2), (3, 0)), 1)) == (F(0), True)
    assert pl_inf_over_open_ray(PiecewiseLinear.affine(-1, 0)) == (-math.inf, False)
    assert pl_inf_over_open_ray(PiecewiseLinear.affine(0, 5)) == (F(5), True)


def test_restrict():
    f = PiecewiseLinear(((1, 0), (2, 1), (4, 0)), 2)
    g = pl_restrict(f, 2, 4)
    for w in (2, 3, 4):
        assert g(w) == f(w)
    assert g.final_slope == F(-1, 2)


@given(pl_functions(), pl_functions(), points)
def test_sum_is_pointwise(f, g, w):
    assert (f + g)(w) == f(w) + g(w)
    assert pl_sum([f, g, f])(w) == 2 * f(w) + g(w)


@given(pl_functions(), points)
def test_negation_and_scalar_shift(f, w):
    assert (-f)(w) == -f(w)
    assert (f + 3)(w) == f(w) + 3
    assert (f - f) == PiecewiseLinear.zero()


@given(pl_functions())
def test_pieces_rebuild_the_function(f):
    assert PiecewiseLinear.from_pieces(f.pieces()) == f


@given(pl_functions())
def test_roots_are_zeros_and_complete(f):
    roots = pl_roots(f)
    for r in roots.points:
        assert f(r) == 0
    for lo, hi in roots.intervals:
        assert f(lo) == 0
        assert f(lo + 1 if hi is None else (lo + hi) / 2) == 0
    # an exact sign check between consecutive candidate points
    grid = sorted({w for w, _ in f.breakpoints} | set(roots.points)
                  | {x for iv in roots.intervals for x in iv if x is not None})
    grid.append(grid[-1] + 1)
    for a, b in zip(grid, grid[1:]):
        mid = (a + b) / 2
        inside = any(lo <= mid and (hi is None or mid <= hi) for lo, hi in roots.intervals)
        if not inside:
            assert f(mid) != 0
        # consecutive grid points are roots or breakpoints, so no sign change in between
        assert f(a) * f(b) >= 0


@settings(max_examples=60)
@given(pl_functions(), points)
def test_inf_is_a_lower_bound(f, w):
    inf, attained = pl_inf_over_open_ray(f)
    if w > 1:
        assert f(w) >= inf
    if attained:
        assert any(v == inf for x, v in f.breakpoints if x > 1) or not f.breakpoints[1:]
