"""D'(n) (x) U(gl), the central elements R_1, R_2, and recognition of C[E] (x) Z(gl(n))."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .arith import interpolate
from .dops import DopElement, apply_dmon, dmon, euler_power, format_dmon, mul_dmon
from .sparse import SparseElement, add_into, fmt_coeff
from .ugl import GlAlgebra, RankMismatch, UglElement, format_monomial, gl_n, is_central


class NotInEulerCenter(ValueError):
    pass


class TensorElement(SparseElement):
    """Sum of ``c * (dop monomial) (x) (PBW monomial)``.

    ``alg`` is the enveloping-algebra factor; it is gl(n) on indices 1..n
    except for the codomain of gamma, where it is gl(n+1).
    """

    __slots__ = ("n", "alg")

    def __init__(self, n: int, alg: GlAlgebra | None = None, terms=None):
        self.n = n
        self.alg = alg if alg is not None else gl_n(n)
        super().__init__(terms)

    def _unit_monomial(self):
        return ((0,) * (2 * self.n + 2), ())

    def _compatible(self, other):
        return isinstance(other, TensorElement) and other.n == self.n and other.alg is self.alg

    def _coerce(self, other):
        if isinstance(other, TensorElement) and not self._compatible(other):
            raise RankMismatch(f"tensor factors differ: n={self.n}/{other.n}")
        return super()._coerce(other)

    def _with_terms(self, terms):
        return TensorElement(self.n, self.alg, terms)

    def _mul_monomials(self, m1, m2):
        dd = mul_dmon(m1[0], m2[0])
        uu = self.alg.mul_mon(m1[1], m2[1])
        out: dict = {}
        for d, c in dd.items():
            for u, cu in uu.items():
                out[(d, u)] = c * cu
        return out

    def __mul__(self, other):
        if not isinstance(other, TensorElement):
            return super().__mul__(other)
        self._coerce(other)
        umul = self.alg.mul_mon
        acc: dict = {}
        for (d1, u1), c1 in self.terms.items():
            for (d2, u2), c2 in other.terms.items():
                c12 = c1 * c2
                dd = mul_dmon(d1, d2)
                uu = umul(u1, u2)
                for d, cd in dd.items():
                    cdd = c12 * cd
                    for u, cu in uu.items():
                        add_into(acc, (d, u), cdd * cu)
        return TensorElement(self.n, self.alg, acc)

    def _sort_key(self, mono):
        d, u = mono
        return (len(u), u, d)

    def _format_term(self, mono, coeff):
        d, u = mono
        upart = "*".join(format_monomial(self.alg, u)) or "1"
        return f"{format_dmon(d, fmt_coeff(coeff))} | {upart}"

    def dop_part_only(self) -> bool:
        return all(not u for (_, u) in self.terms)


def tensor(d: DopElement | None, u: UglElement | None, n: int | None = None) -> TensorElement:
    """``d (x) u``; either factor may be ``None`` for the unit."""
    if n is None:
        n = d.n if d is not None else u.alg.N
    alg = u.alg if u is not None else gl_n(n)
    dterms = d.terms if d is not None else {dmon(n): 1}
    uterms = u.terms if u is not None else {(): 1}
    acc: dict = {}
    for dm, c in dterms.items():
        for um, cu in uterms.items():
            add_into(acc, (dm, um), c * cu)
    return TensorElement(n, alg, acc)


def dpart(d: DopElement) -> TensorElement:
    return tensor(d, None)


def upart(u: UglElement, n: int | None = None) -> TensorElement:
    return tensor(None, u, n if n is not None else u.alg.N)


def t_mul(x: TensorElement, y: TensorElement) -> TensorElement:
    return x * y


@lru_cache(maxsize=None)
def r1(n: int) -> TensorElement:
    """-(Euler (x) 1 + 1 (x) G_1)/(n+1)."""
    return (dpart(euler_power(n, 1)) + upart(gl_n(n).G1())) * Fraction(-1, n + 1)


@lru_cache(maxsize=None)
def r2(n: int) -> TensorElement:
    """(Euler + n) (x) 1."""
    return dpart(euler_power(n, 1)) + n


def map_ugl(z: TensorElement, f, alg: GlAlgebra) -> TensorElement:
    """Apply a linear map ``f`` (on UglElements) to the second factor."""
    cache: dict = {}
    acc: dict = {}
    for (d, u), c in z.terms.items():
        img = cache.get(u)
        if img is None:
            img = f(UglElement(z.alg, {u: 1}))
            cache[u] = img
        for u2, c2 in img.terms.items():
            add_into(acc, (d, u2), c * c2)
    return TensorElement(z.n, alg, acc)


def euler_center_terms(parts, n: int, alg: GlAlgebra) -> TensorElement:
    """Rebuild ``sum_i Euler^i (x) z_i`` from ``[(i, z_i), ...]``."""
    out = TensorElement(n, alg)
    for i, zi in parts:
        out = out + tensor(euler_power(n, i), zi, n)
    return out


def decompose_E_center(z: TensorElement, dmax: int, check_central: bool = True):
    """Write ``z = sum_i Euler^i (x) z_i`` with central ``z_i``.

    Acts on ``t_0^a`` for ``a = 0..dmax``, interpolates every PBW coefficient
    in ``a``, then verifies the reconstruction exactly.
    """
    n = z.n
    samples = []
    for a in range(dmax + 1):
        e = (a,) + (0,) * n
        ua: dict = {}
        for (d, u), c in z.terms.items():
            cc, f = apply_dmon(d, e)
            if not cc:
                continue
            if f != e:
                raise NotInEulerCenter("not in C[E] (x) U(gl(n)): first factor moves t_0^a")
            add_into(ua, u, c * cc)
        samples.append(ua)
    monos = set().union(*samples) if samples else set()
    by_power: dict[int, dict] = {}
    for u in monos:
        p = interpolate([(a, s.get(u, 0)) for a, s in enumerate(samples)])
        for (k,), c in p.terms.items():
            by_power.setdefault(k, {})[u] = c
    parts = [(i, UglElement(z.alg, by_power[i])) for i in sorted(by_power)]
    parts = [(i, zi) for i, zi in parts if zi]
    if euler_center_terms(parts, n, z.alg) != z:
        raise NotInEulerCenter("not in C[E] (x) U(gl(n)): reconstruction differs")
    if check_central:
        for i, zi in parts:
            if not is_central(zi):
                raise NotInEulerCenter(f"z_{i} not central")
    return parts


def is_central_tensor(z: TensorElement) -> bool:
    """Commutes with every t_i/t_0 (x) 1, t_0 d_j (x) 1 and 1 (x) E_ab."""
    from .dops import dop, t_over_t0

    n = z.n
    gens = [dpart(t_over_t0(n, i)) for i in range(1, n + 1)]
    gens += [dpart(dop(n, t={0: 1}, d={j: 1})) for j in range(n + 1)]
    gens += [upart(z.alg.E(a, b), n) for (a, b) in z.alg.gens]
    return all(z * g == g * z for g in gens)
