from fractions import Fraction as F

import pytest

from crosscap.candidates import (
    EdgepathSystem,
    InconsistentSystemError,
    Orientability,
    SystemType,
    basic_sources,
    basic_system,
    chi_ratio,
    edgepath_length,
    enumerate_type_ii,
    enumerate_type_iii,
    solve_type_i,
    stats,
)
from crosscap.knot import PretzelKnot, parse_pretzel

import oracles


def K(text):
    return parse_pretzel(text)


def test_basic_sources_order():
    assert ["".join(s) for s in basic_sources(2)] == ["aa", "ab", "ba", "bb"]


def test_edgepath_length():
    path = basic_system(K("-3,-5,5"), "aab")[2].cut(F(7, 3))
    assert edgepath_length(path) == 2 + F(2, 3)


@pytest.mark.parametrize("params", [(3, 3, 3), (-3, 3, 5), (2, 3, 3), (-2, 3, 3), (2, -3, 5, -7)])
@pytest.mark.parametrize("budget", [0, 2, 6])
def test_type_ii_matches_brute_force(params, budget):
    systems = enumerate_type_ii(PretzelKnot(params), budget)
    rows = sorted(
        ("".join(s.source), tuple(p.start.value for p in s.paths), s.vertical_count, chi_ratio(s))
        for s in systems
    )
    assert rows == oracles.type_ii_rows(params, budget)


def test_gamma_a_orientability():
    a = next(s for s in enumerate_type_ii(K("3,3,3"), 0) if s.is_gamma_a)
    assert chi_ratio(a) == 1
    assert stats(a).orientability is Orientability.ORIENTABLE
    b = next(s for s in enumerate_type_ii(K("2,3,3"), 0) if s.is_gamma_a)
    assert stats(b).orientability is Orientability.NONORIENTABLE
    assert stats(b).spanning_candidate


def test_type_iii_ratios():
    systems = enumerate_type_iii(K("3,5,7"))
    assert len(systems) == 8
    for s in systems:
        expected = sum(1 if v == "a" else abs(p) - 1 for p, v in zip((3, 5, 7), s.source))
        assert chi_ratio(s) == expected
        assert str(s.paths[0]).startswith("<1/0> -- ")


@pytest.mark.parametrize("params", oracles.BATTERY)
def test_type_i_ratio_is_x_at_cut(params):
    sols = solve_type_i(PretzelKnot(params))
    for s in sols.systems:
        assert chi_ratio(s) == oracles.exact_x(params, s.source, s.w0)
        assert oracles.exact_gluing_sum(params, s.source, s.w0) == 0
    for fam in sols.families:
        for w in (fam.sample_point(), *(b.w0 for b in fam.boundary_systems())):
            assert fam.ratio_fn(w) == oracles.exact_x(params, fam.source, w)


def test_type_i_common_sign_is_empty():
    sols = solve_type_i(K("3,5,7"))
    assert sols.systems == () and sols.families == ()


def test_type_i_torus_knot_cap():
    sols = solve_type_i(K("-2,3,5"))
    caps = [s for s in sols.systems if stats(s).has_caps]
    assert len(caps) == 1
    s = caps[0]
    assert s.w0 == 3 and chi_ratio(s) == 0
    assert not stats(s).spanning_candidate


def test_family_members_and_boundary():
    (fam,) = solve_type_i(K("-3,5,5")).families
    assert (fam.lo, fam.hi) == (1, 3)
    assert fam.u_interval() == (0, F(2, 3))
    assert not fam.contains(3) and fam.contains(2)
    with pytest.raises(ValueError):
        fam.member(3)
    (b,) = fam.boundary_systems()
    assert b.w0 == 3 and stats(b).sheets_lb == 2


def test_system_validation_rejects_bad_systems():
    knot = K("-3,-5,5")
    good = solve_type_i(knot).systems[0]
    with pytest.raises(InconsistentSystemError):
        EdgepathSystem(knot, good.paths, SystemType.I, good.source, w0=F(5, 2))
    with pytest.raises(InconsistentSystemError):
        EdgepathSystem(knot, good.paths[:2], SystemType.I, good.source[:2], w0=good.w0)
    other = basic_system(knot, "aaa")
    bad = tuple(lam.cut(F(7, 3)) for lam in other)
    with pytest.raises(InconsistentSystemError):
        EdgepathSystem(knot, bad, SystemType.I, ("a", "a", "a"), w0=F(7, 3))
    g = enumerate_type_ii(knot, 0)[0]
    with pytest.raises(InconsistentSystemError):
        EdgepathSystem(knot, g.paths, SystemType.II, g.source, vertical_count=g.vertical_count + 1)


def test_enumerators_need_three_tangles():
    for fn in (solve_type_i, enumerate_type_iii, lambda k: enumerate_type_ii(k, 2)):
        with pytest.raises(ValueError):
            fn(K("2,5"))
    with pytest.raises(ValueError):
        enumerate_type_ii(K("3,3,3"), -1)
