"""Pretzel knots, their knot/link classification and the crosscap formula."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Tuple

__all__ = [
    "KnotClass",
    "InvalidKnotError",
    "PretzelKnot",
    "ReferenceSurfaceStats",
    "parse_pretzel",
    "crosscap_number",
    "reference_stats",
]


class KnotClass(Enum):
    A = "A"  # exactly one even entry
    B = "B"  # odd length, every entry odd


class InvalidKnotError(ValueError):
    """A tuple that does not describe a pretzel knot we handle.

    ``condition`` names what failed: ``"empty"``, ``"(*)"`` (some entry is
    0 or +-1) or ``"link"`` (the tuple closes up to a link).
    """

    def __init__(self, condition: str, message: str):
        super().__init__(message)
        self.condition = condition


def _classify(params: Tuple[int, ...]) -> KnotClass:
    evens = sum(1 for p in params if p % 2 == 0)
    if len(params) == 1 and evens:
        raise InvalidKnotError("link", f"P{params} with a single even tangle is a link, not a knot")
    if evens == 1:
        return KnotClass.A
    if evens == 0 and len(params) % 2 == 1:
        return KnotClass.B
    if evens == 0:
        why = "an even number of odd tangles"
    else:
        why = f"{evens} even tangles"
    raise InvalidKnotError("link", f"P{params} has {why}; it is a link, not a knot")


@dataclass(frozen=True)
class PretzelKnot:
    """The pretzel knot ``P(p_1, ..., p_N)`` built from tangles ``1/p_i``."""

    params: Tuple[int, ...]

    def __post_init__(self):
        params = tuple(self.params)
        if not params:
            raise InvalidKnotError("empty", "a pretzel knot needs at least one tangle")
        for p in params:
            if isinstance(p, bool) or not isinstance(p, int):
                raise TypeError(f"tangle parameters must be integers, got {p!r}")
            if abs(p) <= 1:
                raise InvalidKnotError(
                    "(*)", f"tangle parameter {p} violates condition (*): |p| must be at least 2"
                )
        object.__setattr__(self, "params", params)
        _classify(params)

    @property
    def N(self) -> int:
        return len(self.params)

    @property
    def knot_class(self) -> KnotClass:
        return _classify(self.params)

    @property
    def signs(self) -> Tuple[int, ...]:
        return tuple(1 if p > 0 else -1 for p in self.params)

    def negated(self) -> "PretzelKnot":
        return PretzelKnot(tuple(-p for p in self.params))

    def __str__(self):
        return "P(" + ",".join(str(p) for p in self.params) + ")"


def parse_pretzel(params: Iterable[int] | str) -> PretzelKnot:
    """Validate a tuple of tangle parameters.

    A string such as ``"-3, 5,5"`` is accepted as well; whitespace is
    ignored.
    """
    if isinstance(params, str):
        text = "".join(params.split())
        if not text:
            raise InvalidKnotError("empty", "a pretzel knot needs at least one tangle")
        try:
            params = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise InvalidKnotError("syntax", f"cannot parse {text!r} as comma-separated integers") from None
    return PretzelKnot(tuple(params))


def crosscap_number(K: PretzelKnot) -> int:
    """Crosscap number of a non-trivial pretzel knot.

    ``N - 1`` in class A and ``N`` in class B, except that ``P(p)`` with a
    single odd tangle is the unknot (crosscap number 0).  Two tangles force
    class A and give 1.
    """
    if K.N == 1:
        return 0
    if K.knot_class is KnotClass.A:
        return K.N - 1
    return K.N


@dataclass(frozen=True)
class ReferenceSurfaceStats:
    """First Betti number and ``-chi/#s`` of the surface ``F_B``."""

    betti_FB: int
    chi_ratio_FB: Fraction
    FA_orientable: bool


def reference_stats(K: PretzelKnot) -> ReferenceSurfaceStats:
    if K.N < 3:
        raise ValueError("reference surfaces are analysed only for N >= 3")
    if K.knot_class is KnotClass.A:
        # F_B = F_A, the natural non-orientable spanning surface
        return ReferenceSurfaceStats(K.N - 1, Fraction(K.N - 2), False)
    # F_A is orientable; a half-twisted band adds one to beta_1
    return ReferenceSurfaceStats(K.N, Fraction(K.N - 1), True)
