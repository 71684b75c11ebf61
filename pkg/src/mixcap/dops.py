"""Differential operators on C[t_0^{+-1}, t_1, ..., t_n] in normal order t^a d^b.

Only a_0 may be negative.  The algebra D'(n) generated by t_i/t_0 and t_0 d_j
sits inside as the degree-zero part (sum a == sum b); ``is_degree_zero`` is
the runtime check that computations stay there.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb

from .arith import CPoly, interpolate
from .sparse import SparseElement, add_into, fmt_coeff


class NotEulerPolynomial(ValueError):
    pass


def falling(c: int, k: int) -> int:
    """c (c-1) ... (c-k+1); valid for negative c."""
    out = 1
    for i in range(k):
        out *= c - i
    return out


_MUL_CACHE: dict = {}


def mul_dmon(m1: tuple, m2: tuple) -> dict:
    """Normal-ordered ``(t^a d^b)(t^c d^d)`` by the multi-index Leibniz rule."""
    key = (m1, m2)
    hit = _MUL_CACHE.get(key)
    if hit is not None:
        return hit
    n1 = len(m1) // 2
    a, b = m1[:n1], m1[n1:]
    c, d = m2[:n1], m2[n1:]
    ranges = []
    for bj, cj in zip(b, c):
        top = bj if cj < 0 else min(bj, cj)
        ranges.append(range(top + 1))
    res: dict = {}
    for ks in product(*ranges):
        coeff = 1
        for bj, cj, kj in zip(b, c, ks):
            if kj:
                coeff *= comb(bj, kj) * falling(cj, kj)
        if not coeff:
            continue
        t = tuple(ai + ci - kj for ai, ci, kj in zip(a, c, ks))
        dd = tuple(bi + di - kj for bi, di, kj in zip(b, d, ks))
        assert all(x >= 0 for x in t[1:]), "negative power of t_i, i >= 1"
        add_into(res, t + dd, coeff)
    _MUL_CACHE[key] = res
    return res


class DopElement(SparseElement):
    __slots__ = ("n",)

    def __init__(self, n: int, terms=None):
        self.n = n
        super().__init__(terms)

    def _unit_monomial(self):
        return (0,) * (2 * self.n + 2)

    def _compatible(self, other):
        return isinstance(other, DopElement) and other.n == self.n

    def _with_terms(self, terms):
        return DopElement(self.n, terms)

    def _mul_monomials(self, m1, m2):
        return mul_dmon(m1, m2)

    def _format_term(self, mono, coeff):
        return format_dmon(mono, fmt_coeff(coeff))


def format_dmon(mono: tuple, head: str | None = None) -> str:
    k = len(mono) // 2
    parts = [] if head is None else [head]
    parts += [f"t[{i}]^{e}" for i, e in enumerate(mono[:k]) if e]
    parts += [f"d[{i}]^{e}" for i, e in enumerate(mono[k:]) if e]
    return "*".join(parts) if parts else "1"


def dmon(n: int, t=None, d=None) -> tuple:
    """Monomial key from sparse exponent maps ``{index: power}``."""
    a = [0] * (n + 1)
    b = [0] * (n + 1)
    for i, e in (t or {}).items():
        a[i] += e
    for i, e in (d or {}).items():
        b[i] += e
    return tuple(a) + tuple(b)


def dop(n: int, t=None, d=None, coeff=1) -> DopElement:
    return DopElement(n, {dmon(n, t, d): coeff})


def t_(n: int, i: int, power: int = 1) -> DopElement:
    return dop(n, t={i: power})


def d_(n: int, j: int) -> DopElement:
    return dop(n, d={j: 1})


def t_over_t0(n: int, i: int) -> DopElement:
    return dop(n, t={i: 1, 0: -1})


def dop_mul(x: DopElement, y: DopElement) -> DopElement:
    return x * y


@lru_cache(maxsize=None)
def euler(n: int) -> DopElement:
    """The Euler operator sum_i t_i d_i."""
    return DopElement(n, {dmon(n, {i: 1}, {i: 1}): 1 for i in range(n + 1)})


@lru_cache(maxsize=None)
def euler_power(n: int, k: int) -> DopElement:
    if k == 0:
        return DopElement(n, {dmon(n): 1})
    return euler_power(n, k - 1) * euler(n)


def is_degree_zero(x: DopElement) -> bool:
    k = x.n + 1
    return all(sum(m[:k]) == sum(m[k:]) for m in x.terms)


def apply_dmon(mono: tuple, e: tuple):
    """``t^a d^b (t^e)`` as ``(coefficient, exponent)``; coefficient may be 0."""
    k = len(mono) // 2
    coeff = 1
    for ej, bj in zip(e, mono[k:]):
        if bj:
            coeff *= falling(ej, bj)
            if not coeff:
                return 0, None
    return coeff, tuple(ej + aj - bj for ej, aj, bj in zip(e, mono[:k], mono[k:]))


def apply_monomial(x: DopElement, e) -> dict:
    """Act on the Laurent monomial ``t^e``; returns ``{exponent: coefficient}``."""
    e = tuple(e)
    if len(e) != x.n + 1 or any(v < 0 for v in e[1:]):
        raise ValueError(f"bad Laurent exponent {e}")
    out: dict = {}
    for m, c in x.terms.items():
        cc, f = apply_dmon(m, e)
        if cc:
            add_into(out, f, c * cc)
    return out


def apply_to(x: DopElement, vec: dict) -> dict:
    """Linear extension of ``apply_monomial`` to ``{exponent: coefficient}``."""
    out: dict = {}
    for e, c in vec.items():
        for f, cc in apply_monomial(x, e).items():
            add_into(out, f, c * cc)
    return out


def interpolate_E_poly(x: DopElement, dmax: int, var: str = "s") -> CPoly:
    """Find ``p`` of degree <= dmax with ``p(Euler) == x``, else raise."""
    n = x.n
    points = []
    for a in range(dmax + 1):
        e = (a,) + (0,) * n
        img = apply_monomial(x, e)
        if set(img) - {e}:
            raise NotEulerPolynomial("not a polynomial in the Euler operator: non-scalar action")
        points.append((a, Fraction(img.get(e, 0))))
    p = interpolate(points, var)
    if euler_eval(p, n) != x:
        raise NotEulerPolynomial("not a polynomial in the Euler operator: verification failed")
    return p


def euler_eval(p: CPoly, n: int) -> DopElement:
    """Substitute the Euler operator into a one-variable polynomial."""
    out = DopElement(n)
    if not p.terms:
        return out
    for e, c in p.terms.items():
        k = e[0] if e else 0
        out = out + euler_power(n, k) * c
    return out
