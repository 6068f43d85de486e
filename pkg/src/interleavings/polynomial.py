"""Sparse polynomials over the rationals in the K/L interleaving variables."""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, NamedTuple, Tuple


class Variable(NamedTuple):
    """Entry (row, col) of the K or L matrix, 1-based.

    ``K(i, j)`` is the scalar of M_j -> N_i shifted by epsilon and
    ``L(j, i)`` the scalar of N_i -> M_j shifted by epsilon.
    """

    family: str
    row: int
    col: int

    def render(self) -> str:
        return f"{self.family.lower()}[{self.row}][{self.col}]"

    @classmethod
    def parse(cls, text: str) -> "Variable":
        text = text.strip()
        fam = text[0].upper()
        if fam not in ("K", "L") or not text[1:].startswith("["):
            raise ValueError(f"bad variable {text!r}")
        row_s, col_s = text[2:-1].split("][")
        return cls(fam, int(row_s), int(col_s))


def K(i: int, j: int) -> Variable:
    return Variable("K", i, j)


def L(j: int, i: int) -> Variable:
    return Variable("L", j, i)


Monomial = Tuple[Variable, ...]


def _term_key(mono: Monomial):
    # graded lex: higher degree first, then lexicographic on (family, row, col)
    return (-len(mono), mono)


class Polynomial:
    """Immutable polynomial kept in canonical form.

    Terms map a sorted tuple of variables (repetition encodes powers) to a
    nonzero Fraction coefficient.  The empty tuple is the constant term.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | Iterable = ()):
        acc: Dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            key = tuple(sorted(mono))
            acc[key] = acc.get(key, Fraction(0)) + Fraction(coeff)
        ordered = sorted(((m, c) for m, c in acc.items() if c != 0), key=lambda t: _term_key(t[0]))
        self._terms: Tuple[Tuple[Monomial, Fraction], ...] = tuple(ordered)

    @classmethod
    def var(cls, v: Variable) -> "Polynomial":
        return cls([((v,), 1)])

    @classmethod
    def const(cls, c) -> "Polynomial":
        return cls([((), c)])

    @property
    def terms(self) -> Tuple[Tuple[Monomial, Fraction], ...]:
        return self._terms

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial(list(self._terms) + list(other._terms))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + other.scale(-1)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial([(m1 + m2, c1 * c2) for m1, c1 in self._terms for m2, c2 in other._terms])

    def scale(self, c) -> "Polynomial":
        return Polynomial([(m, coeff * c) for m, coeff in self._terms])

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __repr__(self):
        return f"Polynomial({self.render()!r})"

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        return max((len(m) for m, _ in self._terms), default=0)

    def constant_term(self) -> Fraction:
        for mono, c in self._terms:
            if not mono:
                return c
        return Fraction(0)

    def is_nonzero_constant(self) -> bool:
        return len(self._terms) == 1 and self._terms[0][0] == ()

    def variables(self) -> set:
        return {v for mono, _ in self._terms for v in mono}

    def substitute_zero(self, zeros) -> "Polynomial":
        """Drop every term containing a variable from ``zeros``."""
        zeros = set(zeros)
        return Polynomial([(m, c) for m, c in self._terms if not zeros.intersection(m)])

    def evaluate(self, values: Mapping[Variable, Fraction]) -> Fraction:
        """Evaluate exactly; variables missing from ``values`` count as 0."""
        total = Fraction(0)
        for mono, c in self._terms:
            prod = c
            for v in mono:
                x = values.get(v, 0)
                if x == 0:
                    prod = 0
                    break
                prod *= x
            total += prod
        return total

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self._terms:
            body = "*".join(v.render() for v in mono)
            mag = abs(c)
            mag_s = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            if not mono:
                piece = mag_s
            elif mag == 1:
                piece = body
            else:
                piece = f"{mag_s}*{body}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, piece))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, piece in parts[1:]:
            out += f" {sign} {piece}"
        return out


def canonicalize(p: Polynomial) -> Polynomial:
    """Return the canonical form of ``p``.

    Polynomials are canonical on construction; this rebuilds from the raw
    term list, which also makes it idempotent.
    """
    return Polynomial(list(p.terms))
