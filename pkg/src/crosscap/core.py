"""Exact piecewise-linear functions on the half-line ``[1, oo)``.

Everything here is computed with :class:`fractions.Fraction`, which keeps
values reduced with a positive denominator, so no extra normalization is
needed on top of it.  Floats are rejected at the boundary.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import pairwise
from typing import Iterable, NamedTuple, Optional, Sequence, Tuple

__all__ = [
    "Fraction",
    "as_fraction",
    "format_fraction",
    "PiecewiseLinear",
    "Roots",
    "pl_eval",
    "pl_sum",
    "pl_roots",
    "pl_inf_over_open_ray",
    "pl_restrict",
]

ONE = Fraction(1)


def as_fraction(x) -> Fraction:
    """Coerce an int, string or Fraction to a Fraction; floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"exact rational expected, got {type(x).__name__}")


def format_fraction(x: Fraction) -> str:
    """Render as ``"num/den"``, or ``"num"`` when the denominator is 1."""
    x = as_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class Roots(NamedTuple):
    """Zero set of a piecewise-linear function.

    ``points`` are isolated roots.  ``intervals`` are maximal closed
    intervals ``(lo, hi)`` on which the function vanishes; ``hi`` is None
    for an unbounded interval.
    """

    points: Tuple[Fraction, ...]
    intervals: Tuple[Tuple[Fraction, Optional[Fraction]], ...]


@dataclass(frozen=True)
class PiecewiseLinear:
    """Continuous piecewise-linear function on ``[domain_start, oo)``.

    The function is affine between consecutive breakpoints and continues as
    a ray with ``final_slope`` after the last one.  Breakpoints that do not
    change the slope are dropped on construction, so two instances compare
    equal exactly when they describe the same function.
    """

    breakpoints: Tuple[Tuple[Fraction, Fraction], ...]
    final_slope: Fraction
    domain_start: Fraction = ONE

    def __post_init__(self):
        start = as_fraction(self.domain_start)
        pts = [(as_fraction(w), as_fraction(v)) for w, v in self.breakpoints]
        if not pts:
            raise ValueError("at least one breakpoint is required")
        if pts[0][0] != start:
            raise ValueError(f"first breakpoint must sit at w={start}")
        for (w0, _), (w1, _) in pairwise(pts):
            if not w0 < w1:
                raise ValueError("breakpoint abscissae must strictly increase")
        slope = as_fraction(self.final_slope)
        object.__setattr__(self, "domain_start", start)
        object.__setattr__(self, "final_slope", slope)
        object.__setattr__(self, "breakpoints", _normalize(pts, slope))

    # construction helpers

    @classmethod
    def affine(cls, slope, intercept, domain_start=ONE) -> "PiecewiseLinear":
        """The function ``slope * w + intercept``."""
        slope, intercept = as_fraction(slope), as_fraction(intercept)
        start = as_fraction(domain_start)
        return cls(((start, slope * start + intercept),), slope, start)

    @classmethod
    def zero(cls, domain_start=ONE) -> "PiecewiseLinear":
        return cls.affine(0, 0, domain_start)

    @classmethod
    def from_pieces(cls, pieces: Sequence[tuple]) -> "PiecewiseLinear":
        """Build from ``(lo, hi, slope, intercept)`` pieces, last ``hi`` None.

        Adjacent pieces must share endpoints and agree there.
        """
        if not pieces:
            raise ValueError("no pieces given")
        pts = []
        for k, (lo, hi, m, c) in enumerate(pieces):
            lo, m, c = as_fraction(lo), as_fraction(m), as_fraction(c)
            if k and lo != pts[-1][0]:
                raise ValueError(f"piece {k} does not start where piece {k - 1} ends")
            if k and m * lo + c != pts[-1][1]:
                raise ValueError(f"discontinuity at w={lo}")
            if k:
                pts.pop()
            pts.append((lo, m * lo + c))
            if hi is None:
                if k != len(pieces) - 1:
                    raise ValueError("only the last piece may be unbounded")
                return cls(tuple(pts), m, pts[0][0])
            hi = as_fraction(hi)
            pts.append((hi, m * hi + c))
        raise ValueError("last piece must be unbounded (hi=None)")

    # queries

    def __call__(self, w) -> Fraction:
        return pl_eval(self, w)

    def pieces(self):
        """List of ``(lo, hi, slope, intercept)`` with ``hi=None`` for the ray."""
        out = []
        for (w0, v0), (w1, v1) in pairwise(self.breakpoints):
            m = (v1 - v0) / (w1 - w0)
            out.append((w0, w1, m, v0 - m * w0))
        w0, v0 = self.breakpoints[-1]
        out.append((w0, None, self.final_slope, v0 - self.final_slope * w0))
        return out

    def slopes(self) -> Tuple[Fraction, ...]:
        return tuple(m for _, _, m, _ in self.pieces())

    def __add__(self, other):
        if isinstance(other, PiecewiseLinear):
            return pl_sum((self, other))
        if isinstance(other, (int, Fraction)):
            return PiecewiseLinear(
                tuple((w, v + other) for w, v in self.breakpoints),
                self.final_slope,
                self.domain_start,
            )
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return PiecewiseLinear(
            tuple((w, -v) for w, v in self.breakpoints),
            -self.final_slope,
            self.domain_start,
        )

    def __sub__(self, other):
        return self + (-other)


def _normalize(pts, final_slope):
    out = [pts[0]]
    for p in pts[1:]:
        if len(out) >= 2 and _collinear(out[-2], out[-1], p):
            out[-1] = p
        else:
            out.append(p)
    while len(out) >= 2:
        (w0, v0), (w1, v1) = out[-2], out[-1]
        if (v1 - v0) / (w1 - w0) != final_slope:
            break
        out.pop()
    return tuple(out)


def _collinear(a, b, c) -> bool:
    return (b[1] - a[1]) * (c[0] - b[0]) == (c[1] - b[1]) * (b[0] - a[0])


def pl_eval(f: PiecewiseLinear, w) -> Fraction:
    """Exact value of ``f`` at ``w``; raises ValueError left of the domain."""
    w = as_fraction(w)
    if w < f.domain_start:
        raise ValueError(f"w={w} lies outside the domain [{f.domain_start}, oo)")
    bps = f.breakpoints
    for (w0, v0), (w1, v1) in pairwise(bps):
        if w <= w1:
            return v0 + (v1 - v0) * (w - w0) / (w1 - w0)
    wl, vl = bps[-1]
    return vl + f.final_slope * (w - wl)


def pl_sum(fs: Iterable[PiecewiseLinear]) -> PiecewiseLinear:
    """Exact sum; the zero function for an empty input."""
    fs = list(fs)
    if not fs:
        return PiecewiseLinear.zero()
    start = fs[0].domain_start
    if any(f.domain_start != start for f in fs):
        raise ValueError("summands must share a domain start")
    ws = sorted({w for f in fs for w, _ in f.breakpoints})
    pts = tuple((w, sum((pl_eval(f, w) for f in fs), Fraction(0))) for w in ws)
    return PiecewiseLinear(pts, sum((f.final_slope for f in fs), Fraction(0)), start)


def pl_roots(f: PiecewiseLinear) -> Roots:
    """All ``w >= domain_start`` with ``f(w) == 0``.

    Isolated zeros are reported as points; stretches where ``f`` vanishes
    identically as maximal closed intervals.  A point that is the endpoint
    of such an interval is not repeated among the points.
    """
    points: list = []
    intervals: list = []
    bps = f.breakpoints
    for (w0, v0), (w1, v1) in pairwise(bps):
        if v0 == 0 and v1 == 0:
            _push_interval(intervals, w0, w1)
        elif v0 == 0:
            points.append(w0)
        elif v1 != 0 and (v0 < 0) != (v1 < 0):
            points.append(w0 - v0 * (w1 - w0) / (v1 - v0))
    wl, vl = bps[-1]
    m = f.final_slope
    if vl == 0 and m == 0:
        _push_interval(intervals, wl, None)
    elif vl == 0:
        points.append(wl)
    elif m != 0 and -vl / m > 0:
        points.append(wl - vl / m)

    ends = {e for iv in intervals for e in iv if e is not None}
    pts = sorted({p for p in points if p not in ends and not _inside(p, intervals)})
    return Roots(tuple(pts), tuple(intervals))


def _push_interval(intervals, lo, hi):
    if intervals and intervals[-1][1] == lo:
        intervals[-1] = (intervals[-1][0], hi)
    else:
        intervals.append((lo, hi))


def _inside(p, intervals) -> bool:
    return any(lo <= p and (hi is None or p <= hi) for lo, hi in intervals)


def pl_inf_over_open_ray(f: PiecewiseLinear):
    """Infimum of ``f`` over ``w > domain_start``.

    Returns ``(value, attained)``.  ``value`` is ``-math.inf`` when the final
    ray decreases.  ``attained`` is False when the infimum is only approached,
    either at the excluded left endpoint or at infinity.
    """
    if f.final_slope < 0:
        return -math.inf, False
    bps = f.breakpoints
    m = min(v for _, v in bps)
    if len(bps) == 1:
        # a single ray from the left endpoint
        return m, f.final_slope == 0
    attained = any(v == m for _, v in bps[1:])
    return m, attained


def pl_restrict(f: PiecewiseLinear, lo, hi=None) -> PiecewiseLinear:
    """Canonical function agreeing with ``f`` on ``[lo, hi]``.

    Outside the interval the first and last affine pieces are continued
    linearly, which makes the result independent of ``f``'s behaviour
    elsewhere.  ``hi=None`` means the interval is unbounded.
    """
    lo = as_fraction(lo)
    hi = None if hi is None else as_fraction(hi)
    if hi is not None and hi < lo:
        raise ValueError("empty interval")
    kept = [
        piece
        for piece in f.pieces()
        if (piece[1] is None or piece[1] > lo) and (hi is None or piece[0] < hi)
    ]
    if not kept:
        # degenerate interval sitting on a breakpoint
        kept = [next(p for p in f.pieces() if p[1] is None or p[1] >= lo)]
    start = f.domain_start
    pts = []
    for k, (a, b, m, c) in enumerate(kept):
        a = start if k == 0 else a
        pts.append((a, m * a + c))
    return PiecewiseLinear(tuple(pts), kept[-1][2], start)
