"""Exact interval modules, the shift action and the elementary hom criteria.

Every endpoint is a :class:`fractions.Fraction`.  Floats are refused at the
boundary so that no value in the pipeline is ever rounded.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Optional, Union

RationalLike = Union[Fraction, int, str]

ZERO = Fraction(0)


def as_rational(value: RationalLike) -> Fraction:
    """Convert ``value`` to an exact Fraction.

    Accepts ints, Fractions and strings such as ``"3"``, ``"6/5"`` or
    ``"3.9"`` (decimal strings are read exactly, ``"3.9" -> 39/10``).
    Floats are rejected.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational string")
        lowered = text.lower()
        if "e" in lowered or "inf" in lowered or "nan" in lowered:
            raise ValueError(f"not a finite rational literal: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")


def render_rational(q: Fraction) -> str:
    """Render as ``"p"`` or ``"p/q"``."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True, order=True)
class IntervalModule:
    """The interval module supported on the half-open interval [birth, death)."""

    birth: Fraction
    death: Fraction

    def __post_init__(self):
        b = as_rational(self.birth)
        d = as_rational(self.death)
        if not b < d:
            raise ValueError(f"degenerate interval [{b}, {d}): birth must be < death")
        object.__setattr__(self, "birth", b)
        object.__setattr__(self, "death", d)

    @classmethod
    def of(cls, birth: RationalLike, death: RationalLike) -> "IntervalModule":
        return cls(as_rational(birth), as_rational(death))

    def contains(self, x: Fraction) -> bool:
        return self.birth <= x < self.death

    def __str__(self):
        return f"[{render_rational(self.birth)},{render_rational(self.death)})"


@dataclass(frozen=True)
class PersistenceModule:
    """An ordered direct sum of interval modules.

    Summand order is significant: it fixes the row/column indexing of the
    interleaving matrices.
    """

    summands: tuple = ()
    name: str = "M"

    def __post_init__(self):
        items = tuple(self.summands)
        for s in items:
            if not isinstance(s, IntervalModule):
                raise TypeError(f"summand {s!r} is not an IntervalModule")
        object.__setattr__(self, "summands", items)

    @classmethod
    def of(cls, *pairs, name: str = "M") -> "PersistenceModule":
        return cls(tuple(IntervalModule.of(b, d) for b, d in pairs), name=name)

    def __len__(self):
        return len(self.summands)

    def __iter__(self):
        return iter(self.summands)

    def __getitem__(self, i):
        return self.summands[i]


@dataclass(frozen=True)
class HomWindow:
    """The set {x >= 0 : Hom(src, dst shifted by x) != 0}.

    Either empty (``lo is None``) or the half-open window [lo, hi).
    """

    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None

    def __post_init__(self):
        if (self.lo is None) != (self.hi is None):
            raise ValueError("HomWindow needs both endpoints or neither")
        if self.lo is not None:
            if not (ZERO <= self.lo < self.hi):
                raise ValueError(f"invalid window [{self.lo}, {self.hi})")

    @property
    def kind(self) -> str:
        return "Empty" if self.lo is None else "Window"

    @property
    def is_empty(self) -> bool:
        return self.lo is None

    def __contains__(self, x) -> bool:
        if self.lo is None:
            return False
        return self.lo <= x < self.hi

    def __str__(self):
        if self.lo is None:
            return "Empty"
        return f"[{render_rational(self.lo)},{render_rational(self.hi)})"


EMPTY_WINDOW = HomWindow()


def shift(interval: IntervalModule, e: RationalLike) -> IntervalModule:
    """Shift the support left by ``e`` (the module x -> M(x + e))."""
    e = as_rational(e)
    if e < 0:
        raise ValueError(f"shift amount must be non-negative, got {e}")
    return IntervalModule(interval.birth - e, interval.death - e)


def hom_nonzero(src: IntervalModule, dst: IntervalModule) -> bool:
    """True iff there is a nonzero morphism src -> dst.

    With src = [a, b) and dst = [c, d) this is ``c <= a < d <= b``.
    """
    return dst.birth <= src.birth < dst.death <= src.death


def hom_window(src: IntervalModule, dst: IntervalModule) -> HomWindow:
    """Shifts x >= 0 for which Hom(src, shift(dst, x)) is nonzero."""
    if dst.death <= src.birth:
        return EMPTY_WINDOW
    lo = max(dst.birth - src.birth, dst.death - src.death, ZERO)
    return HomWindow(lo, dst.death - src.birth)


def width(interval: IntervalModule) -> Fraction:
    """Half the length of the support."""
    return (interval.death - interval.birth) / 2


def projection_nonzero(interval: IntervalModule, e: RationalLike) -> bool:
    """Whether the canonical map P -> P shifted by 2e is nonzero."""
    e = as_rational(e)
    if e < 0:
        raise ValueError(f"epsilon must be non-negative, got {e}")
    return e < width(interval)


def endpoints(modules: Iterable[IntervalModule]) -> set:
    out = set()
    for m in modules:
        out.add(m.birth)
        out.add(m.death)
    return out
