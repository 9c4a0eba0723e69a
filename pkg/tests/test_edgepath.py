from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crosscap.candidates import basic_system
from crosscap.core import PiecewiseLinear
from crosscap.edgepath import (
    INFINITY_VERTEX,
    BasicEdgepath,
    DiagramEdge,
    DiagramVertex,
    EdgeKind,
    EdgePoint,
    Edgepath,
    adjacent,
    big_x,
    cut_at,
    extend,
    gluing_sum,
    parse_vertex,
    x_of,
)
from crosscap.knot import PretzelKnot

from oracles import exact_gluing_sum

I = DiagramVertex.interior


def test_vertex_forms():
    v = parse_vertex("<-1/3>")
    assert (v.num, v.den, v.w) == (-1, 3, 3)
    assert v.uv == (F(2, 3), F(-1, 3))
    assert str(parse_vertex("o<1/5>")) == "o<1/5>"
    assert parse_vertex("<1/0>") == INFINITY_VERTEX
    assert str(I(2)) == "<2>"
    for bad in ("<2/4>", "1/3", "<a>"):
        with pytest.raises(ValueError):
            parse_vertex(bad)


def test_adjacency():
    assert adjacent(F(0), F(1, 3))
    assert adjacent(F(1, 2), F(1, 3))
    assert not adjacent(F(0), F(2, 5))


def test_edge_kinds():
    assert DiagramEdge(I(0), I(F(1, 3))).kind is EdgeKind.NONHORIZONTAL
    assert DiagramEdge(I(0), I(1)).kind is EdgeKind.VERTICAL
    assert DiagramEdge(I(F(1, 3)), DiagramVertex.circle(F(1, 3))).kind is EdgeKind.HORIZONTAL
    assert DiagramEdge(INFINITY_VERTEX, I(-1)).kind is EdgeKind.INFINITY
    with pytest.raises(ValueError):
        DiagramEdge(I(F(1, 3)), I(0))
    with pytest.raises(ValueError):
        DiagramEdge(I(0), I(F(2, 5)))


def test_edge_point_coordinates():
    p = EdgePoint(DiagramEdge(I(F(-1, 2)), I(F(-1, 3))), coeff=F(2, 3))
    assert p.w == F(7, 3)
    assert p.v == F(-3, 7)
    assert str(p) == "(2/3)<-1/2>+(1/3)<-1/3>"
    with pytest.raises(ValueError):
        EdgePoint(DiagramEdge(I(0), I(F(1, 3))), coeff=F(3, 2))
    cap = EdgePoint(DiagramEdge(I(F(1, 2)), DiagramVertex.circle(F(1, 2))), at_w=3)
    assert (cap.w, cap.v, cap.is_cap) == (3, F(1, 2), True)
    with pytest.raises(ValueError):
        EdgePoint(DiagramEdge(I(F(1, 2)), DiagramVertex.circle(F(1, 2))), at_w=2)


def test_edgepath_validation():
    e1 = DiagramEdge(I(0), I(F(1, 3)))
    with pytest.raises(ValueError):
        Edgepath((e1, DiagramEdge(I(0), I(F(1, 2)))))
    with pytest.raises(ValueError):
        Edgepath((e1, DiagramEdge(INFINITY_VERTEX, I(0))))
    with pytest.raises(ValueError):
        Edgepath()
    full = Edgepath((), EdgePoint(e1, coeff=1))
    assert full.partial is None and full.edges == (e1,)
    empty = Edgepath((), EdgePoint(e1, coeff=0))
    assert empty.edges == () and empty.terminal == I(F(1, 3))


def test_basic_paths():
    assert str(BasicEdgepath(3, "a").path()) == "<0> -- <1/3>"
    assert str(BasicEdgepath(-4, "b").path()) == "<-1> -- <-1/2> -- <-1/3> -- <-1/4>"
    assert str(BasicEdgepath(3, "a").extended()) == "<0> -- <1/3> -- o<1/3>"
    with pytest.raises(ValueError):
        BasicEdgepath(1, "a")
    with pytest.raises(ValueError):
        BasicEdgepath(3, "c")


def test_extend_errors():
    ext = BasicEdgepath(3, "a").extended()
    with pytest.raises(ValueError):
        extend(ext)
    with pytest.raises(ValueError):
        extend(Edgepath((DiagramEdge(I(0), I(1)),)))


@pytest.mark.parametrize("w, text", [
    (F(3, 2), "(1/2)<-1>+(1/2)<-1/2> -- <-1/2> -- <-1/3> -- <-1/4> -- <-1/5>"),
    (2, "<-1/2> -- <-1/3> -- <-1/4> -- <-1/5>"),
    (F(7, 3), "(2/3)<-1/2>+(1/3)<-1/3> -- <-1/3> -- <-1/4> -- <-1/5>"),
    (5, "<-1/5>"),
    (6, "cap<-1/5>@w=6"),
])
def test_cut_at(w, text):
    path = cut_at(BasicEdgepath(-5, "b").extended(), w)
    assert str(path) == text
    assert path.start_w == w


def test_cut_at_errors():
    with pytest.raises(ValueError):
        cut_at(BasicEdgepath(3, "a").extended(), 1)
    with pytest.raises(ValueError):
        cut_at(BasicEdgepath(3, "a").path(), 2)


def test_x_of_basic_paths():
    assert x_of(BasicEdgepath(3, "a")) == PiecewiseLinear(((1, 1), (3, 0)), F(-1, 3))
    assert x_of(BasicEdgepath(5, "b")) == PiecewiseLinear(((1, 4), (5, 0)), F(-1, 5))


def test_big_x_definition():
    basics = basic_system(PretzelKnot((3, 5, 7)), "aab")
    X = big_x(basics)
    for w in (1, F(3, 2), 4, 9):
        assert X(w) == (3 - 2) * w - 3 + sum(x_of(lam)(w) for lam in basics)


@given(
    st.lists(st.sampled_from([2, 3, 4, 5, 7, -2, -3, -5, -6]), min_size=3, max_size=5),
    st.data(),
)
def test_gluing_sum_matches_vertex_interpolation(params, data):
    source = data.draw(st.text("ab", min_size=len(params), max_size=len(params)))
    basics = [BasicEdgepath(p, v) for p, v in zip(params, source)]
    w = data.draw(st.builds(F, st.integers(1, 400), st.integers(1, 40)).filter(lambda x: x >= 1))
    assert gluing_sum(basics)(w) == exact_gluing_sum(params, source, w)
    if w > 1:
        total = sum(lam.cut(w).start_uv[1] for lam in basics)
        assert total * w == exact_gluing_sum(params, source, w)


@given(st.integers(2, 30), st.sampled_from([1, -1]), st.data())
def test_x_is_remaining_length_of_cut(q, sign, data):
    w = data.draw(st.builds(F, st.integers(2, 40 * q), st.integers(2, 40)).filter(lambda x: x > 1))
    for variant in "ab":
        lam = BasicEdgepath(sign * q, variant)
        path = lam.cut(w)
        assert path.terminal == I(F(1, sign * q))
        if w > q:
            assert path.is_constant
            continue
        assert path.partial is None or 0 < path.partial.coeff < 1
        remaining = len(path.edges) + (path.partial.coeff if path.partial else 0)
        assert x_of(lam)(w) == remaining
