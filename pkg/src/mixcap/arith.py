"""Exact scalars, commutative polynomials in named variables, truncated Laurent tails.

Scalars are :class:`fractions.Fraction` (ints are accepted wherever a rational
is).  ``CPoly`` is the target of the Harish-Chandra maps; ``LaurentTail`` holds
series ``T^d * sum_k c_k T^-k`` over a commutative coefficient ring.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence

from .sparse import add_into, fmt_coeff, is_scalar

Rational = Fraction

_NAME = re.compile(r"^([^\d]*)(\d*)$")


def _var_key(name: str):
    prefix, digits = _NAME.match(name).groups()
    return (prefix, int(digits) if digits else -1)


class UnboundVariable(KeyError):
    pass


class CPoly:
    """Commutative polynomial with rational coefficients.

    ``vars`` is the declared variable list, kept in natural name order
    (``l0 < l1 < ... < l10``); ``terms`` maps exponent tuples to coefficients.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Iterable[str] = (), terms: Mapping | None = None):
        vs = tuple(sorted(set(vars), key=_var_key))
        if terms is None:
            terms = {}
        self.vars = vs
        self.terms = {e: c for e, c in terms.items() if c}
        for e in self.terms:
            if len(e) != len(vs) or any(x < 0 for x in e):
                raise ValueError(f"bad exponent {e} for variables {vs}")

    @classmethod
    def const(cls, c, vars: Iterable[str] = ()):
        p = cls(vars)
        if c:
            p.terms[(0,) * len(p.vars)] = c
        return p

    @classmethod
    def var(cls, name: str, vars: Iterable[str] = ()):
        p = cls(set(vars) | {name})
        e = tuple(1 if v == name else 0 for v in p.vars)
        p.terms[e] = 1
        return p

    def with_vars(self, vars: Iterable[str]) -> "CPoly":
        new = tuple(sorted(set(vars) | set(self.vars), key=_var_key))
        if new == self.vars:
            return self
        pos = [new.index(v) for v in self.vars]
        terms = {}
        for e, c in self.terms.items():
            f = [0] * len(new)
            for i, x in zip(pos, e):
                f[i] = x
            terms[tuple(f)] = c
        out = CPoly(new)
        out.terms = terms
        return out

    def _lift(self, other) -> tuple["CPoly", "CPoly"]:
        if is_scalar(other):
            other = CPoly.const(other, self.vars)
        elif not isinstance(other, CPoly):
            raise TypeError(f"cannot combine CPoly with {type(other).__name__}")
        vs = set(self.vars) | set(other.vars)
        return self.with_vars(vs), other.with_vars(vs)

    def __add__(self, other):
        if not (is_scalar(other) or isinstance(other, CPoly)):
            return NotImplemented
        a, b = self._lift(other)
        acc = dict(a.terms)
        for e, c in b.terms.items():
            add_into(acc, e, c)
        out = CPoly(a.vars)
        out.terms = acc
        return out

    __radd__ = __add__

    def __neg__(self):
        out = CPoly(self.vars)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if not (is_scalar(other) or isinstance(other, CPoly)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_scalar(other):
            out = CPoly(self.vars)
            out.terms = {e: c * other for e, c in self.terms.items()} if other else {}
            return out
        if not isinstance(other, CPoly):
            return NotImplemented
        a, b = self._lift(other)
        acc: dict = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                add_into(acc, tuple(x + y for x, y in zip(e1, e2)), c1 * c2)
        out = CPoly(a.vars)
        out.terms = acc
        return out

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (Fraction(1) / c)

    def __pow__(self, k: int):
        out = CPoly.const(1, self.vars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if is_scalar(other):
            other = CPoly.const(other, self.vars)
        if not isinstance(other, CPoly):
            return NotImplemented
        a, b = self._lift(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash(frozenset(self.trimmed().terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def used_vars(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.vars) if any(e[i] for e in self.terms))

    def trimmed(self) -> "CPoly":
        """Drop declared variables that do not occur."""
        used = self.used_vars()
        idx = [self.vars.index(v) for v in used]
        out = CPoly(used)
        out.terms = {tuple(e[i] for i in idx): c for e, c in self.terms.items()}
        return out

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def coefficient(self, mono: Mapping[str, int]):
        e = tuple(mono.get(v, 0) for v in self.vars)
        if any(k not in self.vars for k, x in mono.items() if x):
            return Fraction(0)
        return self.terms.get(e, Fraction(0))

    def swap(self, v1: str, v2: str) -> "CPoly":
        p = self.with_vars((v1, v2))
        i, j = p.vars.index(v1), p.vars.index(v2)
        terms = {}
        for e, c in p.terms.items():
            f = list(e)
            f[i], f[j] = f[j], f[i]
            terms[tuple(f)] = c
        return CPoly(p.vars, terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), key=lambda ec: (sum(ec[0]), ec[0]), reverse=True):
            factors = [v if x == 1 else f"{v}^{x}" for v, x in zip(self.vars, e) if x]
            parts.append("*".join([fmt_coeff(c)] + factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"CPoly({self})"


def poly_substitute(p: CPoly, subst: Mapping[str, "CPoly | Fraction | int"]) -> CPoly:
    """Simultaneously replace each variable of ``p`` by its image in ``subst``."""
    for v in p.vars:
        if v not in subst:
            raise UnboundVariable(f"unbound variable {v}")
    images = [subst[v] if isinstance(subst[v], CPoly) else CPoly.const(subst[v]) for v in p.vars]
    out_vars: set[str] = set()
    for im in images:
        out_vars |= set(im.vars)
    powers: list[dict[int, CPoly]] = [{0: CPoly.const(1, out_vars)} for _ in images]
    result = CPoly(out_vars)
    for e, c in p.terms.items():
        term = CPoly.const(c, out_vars)
        for i, k in enumerate(e):
            if k:
                cache = powers[i]
                if k not in cache:
                    top = max(cache)
                    acc = cache[top]
                    for j in range(top + 1, k + 1):
                        acc = acc * images[i]
                        cache[j] = acc
                term = term * cache[k]
        result = result + term
    return result


def ev_point(p: CPoly, point: Sequence) -> Fraction:
    """Evaluate ``p`` at ``point``, listed in the order of ``p.vars``."""
    if len(point) != len(p.vars):
        raise ValueError(f"arity mismatch: {len(p.vars)} variables, {len(point)} values")
    total = Fraction(0)
    for e, c in p.terms.items():
        t = Fraction(c)
        for x, k in zip(point, e):
            if k:
                t *= Fraction(x) ** k
        total += t
    return total


def interpolate(points: Sequence[tuple], var: str = "s") -> CPoly:
    """Lagrange interpolation through ``(x, y)`` pairs with rational entries."""
    s = CPoly.var(var)
    result = CPoly((var,))
    for i, (xi, yi) in enumerate(points):
        if not yi:
            continue
        basis = CPoly.const(1, (var,))
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j != i:
                basis = basis * (s - xj)
                denom *= Fraction(xi) - Fraction(xj)
        result = result + basis * (Fraction(yi) / denom)
    return result


# --------------------------------------------------------------------------
# Truncated Laurent series in T^-1
# --------------------------------------------------------------------------


def _scalar_of(x):
    if is_scalar(x):
        return Fraction(x)
    sv = getattr(x, "scalar_value", None)
    return sv() if sv is not None else None


class SeriesError(ArithmeticError):
    pass


class LaurentTail:
    """``T^lead * sum_{k=0..order} coeffs[k] * T^-k`` over a commutative ring.

    Terms below ``T^(lead - order)`` are unknown and dropped; the absolute
    cutoff ``lead - order`` is what mixed-order arithmetic compares.
    """

    __slots__ = ("lead", "order", "coeffs")

    def __init__(self, lead: int, order: int, coeffs: Mapping[int, object]):
        if order < 0:
            raise ValueError("order must be nonnegative")
        self.lead = lead
        self.order = order
        self.coeffs = {k: c for k, c in coeffs.items() if 0 <= k <= order and not _is_zero(c)}

    @property
    def cutoff(self) -> int:
        return self.lead - self.order

    @classmethod
    def from_poly(cls, coeffs: Mapping[int, object], cutoff: int) -> "LaurentTail":
        """Exact polynomial ``sum coeffs[d] T^d`` known down to ``T^cutoff``."""
        live = [d for d, c in coeffs.items() if not _is_zero(c)]
        lead = max(live) if live else cutoff
        lead = max(lead, cutoff)
        return cls(lead, lead - cutoff, {lead - d: c for d, c in coeffs.items() if d >= cutoff})

    def coefficient(self, power: int):
        """Coefficient of ``T^power`` (must lie within the known range)."""
        if power < self.cutoff:
            raise SeriesError(f"T^{power} is below the truncation T^{self.cutoff}")
        return self.coeffs.get(self.lead - power, 0)

    def as_powers(self) -> dict[int, object]:
        return {self.lead - k: c for k, c in self.coeffs.items()}

    def __add__(self, other: "LaurentTail") -> "LaurentTail":
        cutoff = max(self.cutoff, other.cutoff)
        lead = max(self.lead, other.lead, cutoff)
        acc: dict[int, object] = {}
        for s in (self, other):
            for p, c in s.as_powers().items():
                if p >= cutoff:
                    acc[p] = acc[p] + c if p in acc else c
        return LaurentTail(lead, lead - cutoff, {lead - p: c for p, c in acc.items()})

    def __neg__(self):
        return LaurentTail(self.lead, self.order, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, LaurentTail):
            return NotImplemented
        cutoff = max(self.cutoff, other.cutoff)
        a = {p: c for p, c in self.as_powers().items() if p >= cutoff}
        b = {p: c for p, c in other.as_powers().items() if p >= cutoff}
        keys = set(a) | set(b)
        return all(_is_zero(a.get(p, 0) - b.get(p, 0)) for p in keys)

    def __repr__(self):
        return f"LaurentTail(lead={self.lead}, order={self.order}, coeffs={self.coeffs})"


def _is_zero(x) -> bool:
    return x == 0


def series_mul(a: LaurentTail, b: LaurentTail, K: int | None = None) -> LaurentTail:
    # relative precision of a product is the smaller of the two
    order = min(a.order, b.order) if K is None else min(a.order, b.order, K)
    coeffs: dict[int, object] = {}
    for i, ca in a.coeffs.items():
        for j, cb in b.coeffs.items():
            k = i + j
            if k <= order:
                prod = ca * cb
                coeffs[k] = coeffs[k] + prod if k in coeffs else prod
    return LaurentTail(a.lead + b.lead, order, coeffs)


def series_div(num: LaurentTail, den: LaurentTail, K: int) -> LaurentTail:
    """Return ``q`` with ``num = den * q`` through relative order ``K``.

    ``den``'s leading coefficient must be a nonzero scalar (possibly wrapped in
    a ring element); coefficients are assumed to commute.
    """
    lead = _scalar_of(den.coeffs.get(0, 0))
    if lead is None or lead == 0:
        raise SeriesError("non-invertible leading coefficient")
    inv = Fraction(1) / lead
    order = min(K, num.order, den.order)
    q: dict[int, object] = {}
    for k in range(order + 1):
        acc = num.coeffs.get(k, 0)
        for j in range(1, k + 1):
            dj = den.coeffs.get(j)
            qk = q.get(k - j)
            if dj is not None and qk is not None:
                acc = acc - dj * qk
        if not _is_zero(acc):
            q[k] = acc * inv
    return LaurentTail(num.lead - den.lead, order, q)


def binomial_shift(coeffs: Mapping[int, object], c, one=1) -> dict[int, object]:
    """Coefficients of ``p(T + c)`` for ``p = sum coeffs[k] T^k`` and central ``c``."""
    out: dict[int, object] = {}
    cpow = {0: one}
    top = max(coeffs, default=0)
    for i in range(1, top + 1):
        cpow[i] = cpow[i - 1] * c
    for k, ck in coeffs.items():
        for j in range(k + 1):
            term = ck * cpow[k - j] * comb(k, j)
            out[j] = out[j] + term if j in out else term
    return {j: v for j, v in out.items() if not _is_zero(v)}
