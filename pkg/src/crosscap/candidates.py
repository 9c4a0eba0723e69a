"""Candidate edgepath systems of types I, II and III for pretzel knots.

Type I systems come from exact roots of the gluing sum of each basic
system; type II systems prefix basic edgepaths with vertical edges at
``u = 0``; type III systems prefix them with the edge from ``<1/0>``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterator, List, NamedTuple, Optional, Tuple

from .core import PiecewiseLinear, as_fraction, pl_restrict, pl_roots
from .edgepath import (
    INFINITY_VERTEX,
    BasicEdgepath,
    DiagramEdge,
    DiagramVertex,
    EdgeKind,
    Edgepath,
    big_x,
    cut_at,
    gluing_sum,
)
from .knot import KnotClass, PretzelKnot

__all__ = [
    "SystemType",
    "Orientability",
    "InconsistentSystemError",
    "EdgepathSystem",
    "CandidateFamily",
    "CandidateStats",
    "TypeISolutions",
    "DEFAULT_MAX_VERTICAL",
    "edgepath_length",
    "length_positive_u",
    "chi_ratio",
    "stats",
    "basic_system",
    "basic_sources",
    "solve_type_i",
    "enumerate_type_ii",
    "enumerate_type_iii",
]

DEFAULT_MAX_VERTICAL = 6


class SystemType(Enum):
    I = "I"
    II = "II"
    III = "III"


class Orientability(Enum):
    ORIENTABLE = "orientable"
    NONORIENTABLE = "nonorientable"
    UNKNOWN = "unknown"


class InconsistentSystemError(ValueError):
    pass


def edgepath_length(path: Edgepath) -> Fraction:
    """Complete edges count 1; a leading partial edge counts its coefficient.

    For a partial edge ``<p/q>--<r/s>`` cut at ``w`` the coefficient on the
    left vertex equals ``(s - w)/(s - q)``, the fraction of the edge kept.
    Constant edgepaths have length 0.
    """
    if path.is_constant:
        return Fraction(0)
    partial = path.partial.coeff if path.partial is not None else Fraction(0)
    return partial + len(path.edges)


def length_positive_u(path: Edgepath) -> Fraction:
    """Length of the part of ``path`` lying in ``u > 0``."""
    if path.is_constant:
        return Fraction(0)
    partial = path.partial.coeff if path.partial is not None else Fraction(0)
    skip = (EdgeKind.VERTICAL, EdgeKind.INFINITY)
    return partial + sum(1 for e in path.edges if e.kind not in skip)


def basic_system(K: PretzelKnot, source) -> Tuple[BasicEdgepath, ...]:
    return tuple(BasicEdgepath(p, v) for p, v in zip(K.params, source))


def basic_sources(N: int) -> Iterator[Tuple[str, ...]]:
    """All variant choices, in lexicographic order (``aa..a`` first)."""
    return product("ab", repeat=N)


@dataclass(frozen=True)
class EdgepathSystem:
    """One edgepath per tangle, together with the data that produced it.

    ``source`` records the basic variant (``"a"``/``"b"``) used for each
    tangle.  ``w0`` is the common endpoint ``w`` of a type I system.
    Construction validates gluing consistency and raises
    :class:`InconsistentSystemError` otherwise.
    """

    knot: PretzelKnot
    paths: Tuple[Edgepath, ...]
    type_tag: SystemType
    source: Tuple[str, ...]
    w0: Optional[Fraction] = None
    vertical_count: int = 0

    def __post_init__(self):
        object.__setattr__(self, "paths", tuple(self.paths))
        object.__setattr__(self, "source", tuple(self.source))
        if self.w0 is not None:
            object.__setattr__(self, "w0", as_fraction(self.w0))
        self.validate()

    @property
    def u0(self) -> Optional[Fraction]:
        return None if self.w0 is None else 1 - 1 / self.w0

    @property
    def basics(self) -> Tuple[BasicEdgepath, ...]:
        return basic_system(self.knot, self.source)

    @property
    def is_gamma_a(self) -> bool:
        """The all-``a`` type II system without vertical edges."""
        return (
            self.type_tag is SystemType.II
            and self.vertical_count == 0
            and all(v == "a" for v in self.source)
        )

    def endpoint_values(self) -> Tuple[Fraction, ...]:
        return tuple(path.start_uv[1] for path in self.paths)

    def validate(self) -> None:
        K = self.knot
        if len(self.paths) != K.N or len(self.source) != K.N:
            raise InconsistentSystemError(f"{K} needs {K.N} edgepaths")
        basics = self.basics
        for path, lam in zip(self.paths, basics):
            if path.terminal != DiagramVertex.interior(Fraction(1, lam.tangle_p)):
                raise InconsistentSystemError(f"{path} does not end at <1/{lam.tangle_p}>")

        if self.type_tag is SystemType.I:
            w0 = self.w0
            if w0 is None or w0 <= 1:
                raise InconsistentSystemError("a type I system needs a cut point w0 > 1")
            if self.vertical_count:
                raise InconsistentSystemError("type I systems have no vertical edges")
            for path, lam in zip(self.paths, basics):
                if path != cut_at(lam.extended(), w0):
                    raise InconsistentSystemError(f"{path} is not the cut of {lam.path()} at w={w0}")
                if path.start_w != w0:
                    raise InconsistentSystemError(f"{path} does not start at w={w0}")
        elif self.type_tag is SystemType.II:
            if self.w0 is not None:
                raise InconsistentSystemError("type II systems have no cut point")
            total = 0
            for path, lam in zip(self.paths, basics):
                n_vert = path.vertical_count
                if path.edges[n_vert:] != lam.path().edges or path.partial is not None:
                    raise InconsistentSystemError(f"{path} is not a shifted copy of {lam.path()}")
                u, _ = path.start_uv
                if u != 0:
                    raise InconsistentSystemError(f"{path} does not start at u=0")
                total += n_vert
            if total != self.vertical_count:
                raise InconsistentSystemError(
                    f"vertical edge count {self.vertical_count} does not match the paths ({total})"
                )
        else:
            if self.w0 is not None or self.vertical_count:
                raise InconsistentSystemError("type III systems carry neither w0 nor vertical edges")
            for path, lam in zip(self.paths, basics):
                if not path.edges or path.edges[0].left != INFINITY_VERTEX:
                    raise InconsistentSystemError(f"{path} does not start at <1/0>")
                if path.edges[1:] != lam.path().edges:
                    raise InconsistentSystemError(f"{path} is not <1/0> followed by {lam.path()}")

        if self.type_tag is not SystemType.III and sum(self.endpoint_values()) != 0:
            raise InconsistentSystemError("endpoint v-coordinates do not sum to 0")

    def __str__(self):
        return "{" + ", ".join(str(p) for p in self.paths) + "}"


def chi_ratio(system: EdgepathSystem) -> Fraction:
    """``-chi/#s`` shared by every candidate surface of ``system``."""
    N = system.knot.N
    if system.type_tag is SystemType.III:
        return sum((length_positive_u(p) for p in system.paths), Fraction(0))
    if system.type_tag is SystemType.II:
        lengths = sum((length_positive_u(p) for p in system.paths), Fraction(0))
        return lengths + system.vertical_count - 2
    caps = [p for p in system.paths if p.is_constant]
    lengths = sum((edgepath_length(p) for p in system.paths if not p.is_constant), Fraction(0))
    cap_weight = sum((Fraction(1, p.cap.edge.left.den) for p in caps), Fraction(0))
    return lengths + len(caps) - N + (N - 2 - cap_weight) * system.w0


@dataclass(frozen=True)
class CandidateStats:
    chi_ratio: Fraction
    sheets_lb: int
    has_caps: bool
    spanning_candidate: bool
    orientability: Orientability

    @property
    def excludes_nonorientable_spanning(self) -> bool:
        """True when the surface cannot be both non-orientable and spanning."""
        return not self.spanning_candidate or self.orientability is Orientability.ORIENTABLE


def stats(system: EdgepathSystem) -> CandidateStats:
    """Ratio, a lower bound on the sheet count and the spanning flags.

    A partial edge with coefficient ``k/m`` in lowest terms forces at least
    ``m`` sheets, so the least common multiple of these denominators bounds
    the sheet count from below.  Caps leave the count undetermined and mark
    the system as non-spanning.
    """
    partial_dens = [p.partial.coeff.denominator for p in system.paths if p.partial is not None]
    sheets = math.lcm(*partial_dens) if partial_dens else 1
    has_caps = any(p.is_constant for p in system.paths)
    spanning = sheets == 1 and not has_caps
    if system.is_gamma_a:
        if system.knot.knot_class is KnotClass.B:
            orient = Orientability.ORIENTABLE
        else:
            orient = Orientability.NONORIENTABLE
    else:
        orient = Orientability.UNKNOWN
    return CandidateStats(chi_ratio(system), sheets, has_caps, spanning, orient)


def _type_i_system(K: PretzelKnot, source, w) -> EdgepathSystem:
    paths = tuple(lam.cut(w) for lam in basic_system(K, source))
    return EdgepathSystem(K, paths, SystemType.I, source, w0=w)


@dataclass(frozen=True)
class CandidateFamily:
    """A one-parameter family of type I systems.

    The gluing sum of the basic system ``source`` vanishes identically on
    ``[lo, hi]``; the family consists of the cuts at every ``w`` strictly
    inside (``hi=None`` for an unbounded interval).  Endpoint systems are
    available from :meth:`boundary_systems` but are not members.
    ``ratio_fn`` agrees with ``-chi/#s`` of the member at ``w``.
    """

    knot: PretzelKnot
    source: Tuple[str, ...]
    lo: Fraction
    hi: Optional[Fraction]
    ratio_fn: PiecewiseLinear
    lo_closed: bool = False
    hi_closed: bool = False

    def contains(self, w) -> bool:
        w = as_fraction(w)
        above = w >= self.lo if self.lo_closed else w > self.lo
        if self.hi is None:
            return above
        below = w <= self.hi if self.hi_closed else w < self.hi
        return above and below

    def sample_point(self) -> Fraction:
        if self.hi is None:
            return self.lo + 1
        return (self.lo + self.hi) / 2

    def member(self, w) -> EdgepathSystem:
        w = as_fraction(w)
        if not self.contains(w):
            raise ValueError(f"w={w} lies outside the family's interval")
        return _type_i_system(self.knot, self.source, w)

    @property
    def base(self) -> EdgepathSystem:
        return self.member(self.sample_point())

    def boundary_systems(self) -> Tuple[EdgepathSystem, ...]:
        ends = [self.lo] + ([self.hi] if self.hi is not None else [])
        return tuple(_type_i_system(self.knot, self.source, w) for w in ends if w > 1)

    def u_interval(self) -> Tuple[Fraction, Optional[Fraction]]:
        hi = None if self.hi is None else 1 - 1 / self.hi
        return 1 - 1 / self.lo, hi

    def stats_at(self, w) -> CandidateStats:
        return stats(self.member(w))


class TypeISolutions(NamedTuple):
    systems: Tuple[EdgepathSystem, ...]
    families: Tuple[CandidateFamily, ...]


def solve_type_i(K: PretzelKnot) -> TypeISolutions:
    """Every type I system, found from the exact zeros of each gluing sum.

    Isolated zeros ``w0 > 1`` give single systems.  Intervals of zeros give
    families.  A system equal to one already emitted, or to an endpoint of
    some family, is reported only once (several basic systems can cut to
    the same edgepaths, e.g. ``<0>--<1/p>`` and ``<s>--...--<1/p>`` past
    their last vertex).
    """
    if K.N < 3:
        raise ValueError("candidate enumeration assumes N >= 3")
    families = []
    isolated = []
    for source in basic_sources(K.N):
        basics = basic_system(K, source)
        roots = pl_roots(gluing_sum(basics))
        if roots.intervals:
            X = big_x(basics)
        for lo, hi in roots.intervals:
            if hi is not None and hi <= 1:
                continue
            lo = max(lo, Fraction(1))
            families.append(CandidateFamily(K, source, lo, hi, pl_restrict(X, lo, hi)))
        isolated.extend((source, w) for w in roots.points if w > 1)

    seen = {s.paths for fam in families for s in fam.boundary_systems()}
    systems = []
    for source, w in isolated:
        system = _type_i_system(K, source, w)
        if system.paths in seen:
            continue
        seen.add(system.paths)
        systems.append(system)
    return TypeISolutions(tuple(systems), tuple(families))


@lru_cache(maxsize=4096)
def _shifted_path(p: int, variant: str, z: int) -> Optional[Edgepath]:
    """Basic edgepath preceded by vertical edges from ``<z>``; None if not minimal."""
    lam = BasicEdgepath(p, variant)
    start = lam.start_value
    step = 1 if start > z else -1
    verts = [DiagramVertex.interior(k) for k in range(z, start, step)]
    verts.append(DiagramVertex.interior(start))
    vertical = tuple(DiagramEdge(a, b) for a, b in zip(verts, verts[1:]))
    path = Edgepath(vertical + lam.path().edges)
    return path if path.is_minimal() else None


def _shifts(starts, budget, target) -> Iterator[Tuple[int, ...]]:
    """Shift vectors d with sum(|d_i|) <= budget and sum(d_i) = target."""
    n = len(starts)
    if n == 0:
        if target == 0:
            yield ()
        return
    for d in range(-budget, budget + 1):
        rest = budget - abs(d)
        if abs(target - d) > rest:
            continue
        for tail in _shifts(starts[1:], rest, target - d):
            yield (d,) + tail


def enumerate_type_ii(K: PretzelKnot, max_vertical: int = DEFAULT_MAX_VERTICAL) -> List[EdgepathSystem]:
    """Type II systems using at most ``max_vertical`` vertical edges in total.

    Each edgepath is a basic edgepath whose ``u = 0`` endpoint is moved to
    an integer ``z_i`` by ``|z_i - e_i|`` vertical edges, subject to
    ``sum z_i = 0``.  Prefixes that turn back along a triangle of the
    diagram are not edgepaths and are skipped.
    """
    if K.N < 3:
        raise ValueError("candidate enumeration assumes N >= 3")
    if max_vertical < 0:
        raise ValueError("max_vertical must be non-negative")
    out = []
    for source in basic_sources(K.N):
        basics = basic_system(K, source)
        starts = tuple(lam.start_value for lam in basics)
        for d in _shifts(starts, max_vertical, -sum(starts)):
            paths = tuple(
                _shifted_path(lam.tangle_p, lam.variant, e + di)
                for lam, e, di in zip(basics, starts, d)
            )
            if any(path is None for path in paths):
                continue
            V = sum(abs(di) for di in d)
            out.append(EdgepathSystem(K, paths, SystemType.II, source, vertical_count=V))
    return out


def enumerate_type_iii(K: PretzelKnot) -> List[EdgepathSystem]:
    """The ``2**N`` systems ``<1/0> -- lambda_i``."""
    if K.N < 3:
        raise ValueError("candidate enumeration assumes N >= 3")
    out = []
    for source in basic_sources(K.N):
        paths = []
        for lam in basic_system(K, source):
            base = lam.path()
            head = DiagramEdge(INFINITY_VERTEX, DiagramVertex.interior(lam.start_value))
            paths.append(Edgepath((head,) + base.edges))
        out.append(EdgepathSystem(K, tuple(paths), SystemType.III, source))
    return out

