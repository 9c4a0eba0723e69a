"""The edgepath diagram for ``1/p`` tangles and the functions built on it.

Coordinates follow the usual conventions: the vertex ``<p/q>`` sits at
``u = (q-1)/q, v = p/q``, the circle vertex ``o<p/q>`` at ``u = 1``, and
``<1/0>`` at ``u = -1``.  Most quantities are affine in ``w = 1/(1-u)``,
which is the variable used throughout; an interior vertex ``<p/q>`` has
``w = q``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from fractions import Fraction
from itertools import pairwise
from math import gcd
from typing import Optional, Sequence, Tuple, Union

from .core import PiecewiseLinear, as_fraction, format_fraction, pl_sum

__all__ = [
    "VertexKind",
    "EdgeKind",
    "DiagramVertex",
    "DiagramEdge",
    "EdgePoint",
    "Edgepath",
    "BasicEdgepath",
    "INFINITY_VERTEX",
    "parse_vertex",
    "adjacent",
    "basic_edgepaths",
    "extend",
    "x_of",
    "big_x",
    "gluing_sum",
    "cut_at",
]


class VertexKind(Enum):
    INTERIOR = "interior"
    CIRCLE = "circle"
    INFINITY = "infinity"


class EdgeKind(Enum):
    NONHORIZONTAL = "nonhorizontal"
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"
    INFINITY = "infinity"


@dataclass(frozen=True)
class DiagramVertex:
    kind: VertexKind
    value: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind is VertexKind.INFINITY:
            if self.value is not None:
                raise ValueError("<1/0> carries no value")
        else:
            object.__setattr__(self, "value", as_fraction(self.value))

    @classmethod
    def interior(cls, x) -> "DiagramVertex":
        return cls(VertexKind.INTERIOR, as_fraction(x))

    @classmethod
    def circle(cls, x) -> "DiagramVertex":
        return cls(VertexKind.CIRCLE, as_fraction(x))

    @property
    def den(self) -> int:
        return self.value.denominator

    @property
    def num(self) -> int:
        return self.value.numerator

    @property
    def uv(self) -> Tuple[Fraction, Fraction]:
        if self.kind is VertexKind.INFINITY:
            return Fraction(-1), Fraction(0)
        if self.kind is VertexKind.CIRCLE:
            return Fraction(1), self.value
        return Fraction(self.den - 1, self.den), self.value

    @property
    def w(self) -> Fraction:
        if self.kind is not VertexKind.INTERIOR:
            raise ValueError(f"{self} has no finite w-coordinate in [1, oo)")
        return Fraction(self.den)

    def __str__(self):
        if self.kind is VertexKind.INFINITY:
            return "<1/0>"
        body = f"<{format_fraction(self.value)}>"
        return "o" + body if self.kind is VertexKind.CIRCLE else body


INFINITY_VERTEX = DiagramVertex(VertexKind.INFINITY)

_VERTEX_RE = re.compile(r"^(o?)<\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?>$")


def parse_vertex(text: str) -> DiagramVertex:
    """Inverse of ``str(vertex)``: ``"<-1/3>"``, ``"o<1/5>"`` or ``"<1/0>"``."""
    m = _VERTEX_RE.match(text.strip())
    if not m:
        raise ValueError(f"not a diagram vertex: {text!r}")
    circle, num, den = m.group(1), int(m.group(2)), int(m.group(3) or 1)
    if den == 0:
        if num != 1 or circle:
            raise ValueError(f"not a diagram vertex: {text!r}")
        return INFINITY_VERTEX
    if gcd(num, den) != 1:
        raise ValueError(f"vertex fraction must be reduced: {text!r}")
    x = Fraction(num, den)
    return DiagramVertex.circle(x) if circle else DiagramVertex.interior(x)


def adjacent(x: Fraction, y: Fraction) -> bool:
    """Whether ``<x>`` and ``<y>`` span an edge: ``|ps - qr| = 1``."""
    return abs(x.numerator * y.denominator - x.denominator * y.numerator) == 1


def _vertices_adjacent(a: DiagramVertex, b: DiagramVertex) -> bool:
    if a.kind is VertexKind.INFINITY or b.kind is VertexKind.INFINITY:
        other = b if a.kind is VertexKind.INFINITY else a
        return other.kind is VertexKind.INTERIOR and other.den == 1
    if a.kind is VertexKind.INTERIOR and b.kind is VertexKind.INTERIOR:
        return adjacent(a.value, b.value)
    return a.value == b.value and a.kind is not b.kind


@dataclass(frozen=True)
class DiagramEdge:
    """A complete edge, oriented in the direction it is traversed.

    The kind is inferred when omitted.
    """

    left: DiagramVertex
    right: DiagramVertex
    kind: Optional[EdgeKind] = None

    def __post_init__(self):
        inferred = self._infer()
        if self.kind is not None and self.kind is not inferred:
            raise ValueError(f"edge {self.left}--{self.right} is {inferred.value}, not {self.kind.value}")
        object.__setattr__(self, "kind", inferred)

    def _infer(self) -> EdgeKind:
        a, b = self.left, self.right
        if a.kind is VertexKind.INFINITY:
            if b.kind is VertexKind.INTERIOR and b.den == 1:
                return EdgeKind.INFINITY
        elif a.kind is VertexKind.INTERIOR and b.kind is VertexKind.CIRCLE:
            if a.value == b.value:
                return EdgeKind.HORIZONTAL
        elif a.kind is VertexKind.INTERIOR and b.kind is VertexKind.INTERIOR:
            if adjacent(a.value, b.value):
                if a.den == 1 and b.den == 1:
                    return EdgeKind.VERTICAL
                if a.den < b.den:
                    return EdgeKind.NONHORIZONTAL
                raise ValueError(f"edge {a}--{b} must be traversed towards the larger denominator")
        raise ValueError(f"{a} and {b} are not joined by an edge of the diagram")

    def __str__(self):
        return f"{self.left}--{self.right}"


@dataclass(frozen=True)
class EdgePoint:
    """A point on an edge.

    On a non-horizontal edge ``<p/q>--<r/s>`` the point is
    ``coeff*<p/q> + (1-coeff)*<r/s>``; then ``w = coeff*q + (1-coeff)*s``
    and ``w*v = coeff*p + (1-coeff)*r``.  On a horizontal edge the point is
    a cap at height ``p/q`` and stores its ``w`` directly.
    """

    edge: DiagramEdge
    coeff: Optional[Fraction] = None
    at_w: Optional[Fraction] = None

    def __post_init__(self):
        kind = self.edge.kind
        if kind is EdgeKind.NONHORIZONTAL:
            if self.coeff is None or self.at_w is not None:
                raise ValueError("a point on a non-horizontal edge is given by its coefficient")
            a = as_fraction(self.coeff)
            if not 0 <= a <= 1:
                raise ValueError(f"coefficient {a} outside [0, 1]")
            object.__setattr__(self, "coeff", a)
        elif kind is EdgeKind.HORIZONTAL:
            if self.at_w is None or self.coeff is not None:
                raise ValueError("a cap point is given by its w-coordinate")
            w = as_fraction(self.at_w)
            if not w > self.edge.left.den:
                raise ValueError(f"cap at w={w} must lie right of {self.edge.left}")
            object.__setattr__(self, "at_w", w)
        else:
            raise ValueError(f"points on {kind.value} edges are not supported")

    @property
    def is_cap(self) -> bool:
        return self.edge.kind is EdgeKind.HORIZONTAL

    @property
    def w(self) -> Fraction:
        if self.is_cap:
            return self.at_w
        a = self.coeff
        return a * self.edge.left.den + (1 - a) * self.edge.right.den

    @property
    def v(self) -> Fraction:
        if self.is_cap:
            return self.edge.left.value
        a = self.coeff
        return (a * self.edge.left.num + (1 - a) * self.edge.right.num) / self.w

    @property
    def u(self) -> Fraction:
        return 1 - 1 / self.w

    def __str__(self):
        if self.is_cap:
            return f"cap{self.edge.left}@w={format_fraction(self.at_w)}"
        a = self.coeff
        return (
            f"({format_fraction(a)}){self.edge.left}"
            f"+({format_fraction(1 - a)}){self.edge.right}"
        )


@dataclass(frozen=True)
class Edgepath:
    """An edgepath ending at a tangle vertex (or its circle, once extended).

    Either ``cap`` is set (a constant edgepath), or the path is the edge
    sequence ``edges``, optionally preceded by a partial edge whose starting
    point is ``partial``.  A path reduced to the single vertex ``terminal``
    has no edges at all.
    """

    edges: Tuple[DiagramEdge, ...] = ()
    partial: Optional[EdgePoint] = None
    cap: Optional[EdgePoint] = None
    terminal: Optional[DiagramVertex] = None

    def __post_init__(self):
        edges = tuple(self.edges)
        partial = self.partial
        if self.cap is not None:
            if edges or partial is not None:
                raise ValueError("a constant edgepath has no edges")
            if not self.cap.is_cap:
                raise ValueError("a constant edgepath lives on a horizontal edge")
            term = self.cap.edge.left
        else:
            if partial is not None:
                if partial.is_cap:
                    raise ValueError("use cap= for points on horizontal edges")
                # a coefficient of 1 or 0 is a vertex, not a partial edge
                if partial.coeff == 1:
                    edges = (partial.edge,) + edges
                    partial = None
            if edges:
                term = edges[-1].right
            elif partial is not None:
                term = partial.edge.right
            else:
                term = self.terminal
            if partial is not None and partial.coeff == 0:
                partial = None
                if not edges:
                    object.__setattr__(self, "terminal", term)
            if term is None:
                raise ValueError("an empty edgepath needs a terminal vertex")
            _check_chain(edges, partial)
        if self.terminal is not None and self.terminal != term:
            raise ValueError(f"path ends at {term}, not {self.terminal}")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "partial", partial)
        object.__setattr__(self, "terminal", term)

    @property
    def is_constant(self) -> bool:
        return self.cap is not None

    @property
    def is_extended(self) -> bool:
        return bool(self.edges) and self.edges[-1].kind is EdgeKind.HORIZONTAL

    @property
    def start(self) -> Union[EdgePoint, DiagramVertex]:
        if self.cap is not None:
            return self.cap
        if self.partial is not None:
            return self.partial
        return self.edges[0].left if self.edges else self.terminal

    @property
    def start_uv(self) -> Tuple[Fraction, Fraction]:
        s = self.start
        if isinstance(s, EdgePoint):
            return s.u, s.v
        return s.uv

    @property
    def start_w(self) -> Fraction:
        u, _ = self.start_uv
        return 1 / (1 - u)

    @property
    def vertical_count(self) -> int:
        return sum(1 for e in self.edges if e.kind is EdgeKind.VERTICAL)

    def vertices(self) -> Tuple[DiagramVertex, ...]:
        """Vertex chain, including the left vertex of a partial or cap edge."""
        if self.cap is not None:
            return (self.cap.edge.left, self.cap.edge.right)
        chain = []
        if self.partial is not None:
            chain += [self.partial.edge.left, self.partial.edge.right]
        elif self.edges:
            chain.append(self.edges[0].left)
        else:
            chain.append(self.terminal)
        chain += [e.right for e in self.edges]
        return tuple(chain)

    def is_minimal(self) -> bool:
        """No two consecutive edges are sides of one triangle of the diagram."""
        chain = self.vertices()
        if self.cap is not None:
            return True
        for a, _, c in zip(chain, chain[1:], chain[2:]):
            if _vertices_adjacent(a, c):
                return False
        return True

    def __str__(self):
        if self.cap is not None:
            return str(self.cap)
        chain = [str(v) for v in self.vertices()]
        if self.partial is not None:
            chain[0:1] = []
            return str(self.partial) + "".join(" -- " + v for v in chain)
        return " -- ".join(chain)


def _check_chain(edges, partial):
    seen = set()
    prev = partial.edge if partial is not None else None
    if prev is not None:
        seen.add(prev)
    phase = 0  # 0: infinity edge allowed, 1: vertical, 2: non-vertical, 3: done
    for k, e in enumerate(edges):
        if prev is not None and prev.right != e.left:
            raise ValueError(f"edges {prev} and {e} do not share a vertex")
        if e in seen:
            raise ValueError(f"edge {e} repeats")
        if e.kind is EdgeKind.INFINITY:
            if k != 0 or partial is not None:
                raise ValueError("an edge from <1/0> can only start a path")
            phase = 1
        elif e.kind is EdgeKind.VERTICAL:
            if phase > 1 or partial is not None:
                raise ValueError("vertical edges must precede all other edges")
            phase = 1
        elif e.kind is EdgeKind.NONHORIZONTAL:
            if phase > 2:
                raise ValueError("nothing may follow a horizontal edge")
            phase = 2
        else:
            if phase > 2:
                raise ValueError("at most one horizontal edge")
            phase = 3
        seen.add(e)
        prev = e


@dataclass(frozen=True)
class BasicEdgepath:
    """One of the two basic edgepaths of the tangle ``1/p``.

    Variant ``a`` is ``<0> -- <1/p>``; variant ``b`` is
    ``<s> -- <s/2> -- ... -- <s/|p|>`` with ``s`` the sign of ``p``.
    """

    tangle_p: int
    variant: str

    def __post_init__(self):
        if abs(self.tangle_p) <= 1:
            raise ValueError(f"tangle parameter {self.tangle_p} violates condition (*)")
        if self.variant not in ("a", "b"):
            raise ValueError(f"variant must be 'a' or 'b', not {self.variant!r}")

    @property
    def sign(self) -> int:
        return 1 if self.tangle_p > 0 else -1

    @property
    def q(self) -> int:
        return abs(self.tangle_p)

    def chain(self) -> Tuple[Fraction, ...]:
        if self.variant == "a":
            return (Fraction(0), Fraction(1, self.tangle_p))
        return tuple(Fraction(self.sign, k) for k in range(1, self.q + 1))

    @property
    def start_value(self) -> int:
        """Integer where the path meets ``u = 0``."""
        return int(self.chain()[0])

    def path(self) -> Edgepath:
        return _basic_path(self.tangle_p, self.variant)

    def extended(self) -> Edgepath:
        return _extended_basic_path(self.tangle_p, self.variant)

    def cut(self, w) -> Edgepath:
        return cut_at(self.extended(), w)


@lru_cache(maxsize=1024)
def _basic_path(p: int, variant: str) -> Edgepath:
    verts = [DiagramVertex.interior(x) for x in BasicEdgepath(p, variant).chain()]
    return Edgepath(tuple(DiagramEdge(a, b) for a, b in pairwise(verts)))


@lru_cache(maxsize=1024)
def _extended_basic_path(p: int, variant: str) -> Edgepath:
    return extend(_basic_path(p, variant))


def basic_edgepaths(p: int) -> Tuple[Edgepath, Edgepath]:
    """The pair ``(lambda_a, lambda_b)`` for the tangle ``1/p``."""
    return BasicEdgepath(p, "a").path(), BasicEdgepath(p, "b").path()


def extend(path: Edgepath) -> Edgepath:
    """Append the horizontal edge ``<1/p> -- o<1/p>``."""
    if path.is_constant:
        raise ValueError("a constant edgepath cannot be extended")
    if path.is_extended:
        raise ValueError("edgepath is already extended")
    t = path.terminal
    if t.kind is not VertexKind.INTERIOR or abs(t.num) != 1 or t.den < 2:
        raise ValueError(f"{t} is not a tangle vertex <1/p>")
    horizontal = DiagramEdge(t, DiagramVertex.circle(t.value))
    return Edgepath(path.edges + (horizontal,), path.partial)


def x_of(lam: BasicEdgepath) -> PiecewiseLinear:
    """Per-tangle contribution ``x_lambda(w)`` to ``X_Lambda``.

    While the cut at ``w`` still meets the path, this is the length of the
    remaining edgepath (partial edges counted fractionally).  Past the
    tangle vertex it is the cap term ``1 - w/|p|``.
    """
    chain = lam.chain()
    k = len(chain) - 1
    pts = tuple((Fraction(x.denominator), Fraction(k - j)) for j, x in enumerate(chain))
    return PiecewiseLinear(pts, Fraction(-1, lam.q))


def big_x(basics: Sequence[BasicEdgepath], N: Optional[int] = None) -> PiecewiseLinear:
    """``X_Lambda(w) = (N-2) w - N + sum of x_lambda_i(w)``."""
    basics = list(basics)
    if N is None:
        N = len(basics)
    if len(basics) != N:
        raise ValueError(f"expected {N} basic edgepaths, got {len(basics)}")
    return pl_sum([PiecewiseLinear.affine(N - 2, -N)] + [x_of(lam) for lam in basics])


def _tangle_gluing(lam: BasicEdgepath) -> PiecewiseLinear:
    # w * v along the extended path: the numerator at each vertex, then (1/p) w
    pts = tuple((Fraction(x.denominator), Fraction(x.numerator)) for x in lam.chain())
    return PiecewiseLinear(pts, Fraction(1, lam.tangle_p))


def gluing_sum(basics: Sequence[BasicEdgepath]) -> PiecewiseLinear:
    """``S(w) = w * sum_i v_i(w)`` for the cut of each extended path at ``w``.

    The gluing condition on the ``v``-coordinates is ``S(w) = 0``.  Scaling
    by ``w`` makes every term affine between vertices.
    """
    return pl_sum(_tangle_gluing(lam) for lam in basics)


def cut_at(extended: Edgepath, w) -> Edgepath:
    """Keep the part of an extended basic edgepath with ``u >= 1 - 1/w``.

    Up to and including the tangle vertex (``w <= |p|``) this is the
    rightward sub-path, possibly starting with a partial edge; beyond it,
    the constant edgepath on the horizontal edge.
    """
    w = as_fraction(w)
    if w <= 1:
        raise ValueError(f"cut at w={w}: w must exceed 1")
    if not extended.is_extended:
        raise ValueError("cut_at expects an extended edgepath")
    horizontal = extended.edges[-1]
    body = extended.edges[:-1]
    tangle = horizontal.left
    if w > tangle.den:
        return Edgepath(cap=EdgePoint(horizontal, at_w=w))
    if w == tangle.den:
        return Edgepath(terminal=tangle)
    for k, e in enumerate(body):
        if e.kind is not EdgeKind.NONHORIZONTAL:
            continue
        q, s = e.left.den, e.right.den
        if w == q:
            return Edgepath(body[k:])
        if q < w < s:
            return Edgepath(body[k + 1:], EdgePoint(e, coeff=(s - w) / (s - q)))
    raise ValueError(f"w={w} is not reached by {extended}")
