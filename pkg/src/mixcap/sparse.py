"""Shared machinery for finite sums of monomials with rational coefficients.

Concrete algebras subclass :class:`SparseElement` and supply ``_mul_monomials``
plus a text formatter.  Python ints and :class:`fractions.Fraction` act as
scalars everywhere: ``x + 3`` adds three times the unit, ``x == 0`` tests for
the empty sum.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

Scalar = (int, Fraction)


def is_scalar(x) -> bool:
    return isinstance(x, _RationalABC)


def fmt_coeff(c) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def add_into(acc: dict, key, c) -> None:
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


class SparseElement:
    """Immutable sparse linear combination ``sum(c * m)`` of monomials ``m``."""

    __slots__ = ("terms", "_hash")

    # the unit monomial of the algebra; subclasses override
    def _unit_monomial(self):
        raise NotImplementedError

    def _compatible(self, other) -> bool:
        return type(self) is type(other)

    def _with_terms(self, terms: dict):
        raise NotImplementedError

    def _mul_monomials(self, m1, m2) -> dict:
        raise NotImplementedError

    def _format_term(self, mono, coeff) -> str:
        raise NotImplementedError

    def _sort_key(self, mono):
        return mono

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = c
        self.terms = clean
        self._hash = None

    # ---- construction helpers -------------------------------------------
    def zero(self):
        return self._with_terms({})

    def one(self):
        return self._with_terms({self._unit_monomial(): 1})

    def _coerce(self, other):
        if is_scalar(other):
            return self._with_terms({self._unit_monomial(): other} if other else {})
        if not self._compatible(other):
            raise ValueError(f"incompatible operands: {self!r} and {other!r}")
        return other

    # ---- linear structure -------------------------------------------------
    def __add__(self, other):
        if not is_scalar(other) and not isinstance(other, SparseElement):
            return NotImplemented
        other = self._coerce(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            add_into(acc, m, c)
        return self._with_terms(acc)

    __radd__ = __add__

    def __neg__(self):
        return self._with_terms({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not is_scalar(other) and not isinstance(other, SparseElement):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        if not is_scalar(other):
            return NotImplemented
        return (-self) + other

    def scale(self, c):
        if not c:
            return self.zero()
        return self._with_terms({m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if is_scalar(other):
            return self.scale(other)
        if not isinstance(other, SparseElement):
            return NotImplemented
        other = self._coerce(other)
        acc: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                for m, c in self._mul_monomials(m1, m2).items():
                    add_into(acc, m, c1 * c2 * c)
        return self._with_terms(acc)

    def __rmul__(self, other):
        if is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if not is_scalar(other):
            return NotImplemented
        return self.scale(Fraction(1) / other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.one()
        for _ in range(k):
            result = result * self
        return result

    # ---- comparisons --------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if is_scalar(other):
            other = self._coerce(other)
        elif not isinstance(other, SparseElement) or not self._compatible(other):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def scalar_value(self):
        """Return the rational this element equals, or ``None`` if it is not a constant."""
        if not self.terms:
            return Fraction(0)
        unit = self._unit_monomial()
        if len(self.terms) == 1 and unit in self.terms:
            return Fraction(self.terms[unit])
        return None

    # ---- text ---------------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: self._sort_key(mc[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(self._format_term(m, c) for m, c in self.sorted_terms())

    def __repr__(self):
        return f"{type(self).__name__}({self})"
