"""The map rho: U(gl(n+1)) -> D'(n) (x) U(gl(n)) and its sl / trace-projection relatives."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .dops import dop, t_over_t0
from .tensor import TensorElement, dpart, map_ugl, r1, tensor, upart
from .ugl import GlAlgebra, UglElement, commutator, gl_n, gl_n1, to_adapted
from .verdict import PASS, Verdict, fail


def rho_gen(n: int, a: int, b: int) -> TensorElement:
    """Image of E_ab (indices 0..n) under rho."""
    if not (0 <= a <= n and 0 <= b <= n):
        raise IndexError(f"E[{a},{b}] outside gl({n + 1})")
    g = gl_n(n)
    td = dpart(dop(n, t={a: 1}, d={b: 1}))
    if a > 0 and b > 0:
        out = td + upart(g.E(a, b), n)
        return out + r1(n) if a == b else out
    if a > 0:  # b == 0
        out = td
        for i in range(1, n + 1):
            out = out - tensor(t_over_t0(n, i), g.E(a, i), n)
        return out
    if b > 0:  # a == 0
        return td
    return td + r1(n)


class AlgebraMap:
    """Unital algebra map out of U(gl) fixed by generator images.

    Images of PBW monomials are built from left to right and memoized by
    prefix, so every step multiplies by a single generator image.
    """

    def __init__(self, alg: GlAlgebra, gen_image: Callable[[int, int], object], one):
        self.alg = alg
        self.one = one
        self.gens = [gen_image(i, j) for (i, j) in alg.gens]
        self._memo: dict = {(): one}

    def monomial(self, m: tuple):
        hit = self._memo.get(m)
        if hit is None:
            hit = self.monomial(m[:-1]) * self.gens[m[-1]]
            self._memo[m] = hit
        return hit

    def __call__(self, x: UglElement):
        if x.alg is not self.alg:
            raise ValueError(f"map defined on {self.alg}, got {x.alg}")
        out = self.one * 0
        for m, c in x.terms.items():
            out = out + self.monomial(m) * c
        return out


@lru_cache(maxsize=None)
def _rho_map(n: int) -> AlgebraMap:
    return AlgebraMap(gl_n1(n), lambda a, b: rho_gen(n, a, b), TensorElement(n) + 1)


def rho(x: UglElement) -> TensorElement:
    """Apply rho monomialwise on the PBW form of ``x`` (an element of gl(n+1), indices 0..n)."""
    n = x.alg.N - 1
    if x.alg is not gl_n1(n):
        raise ValueError("rho expects an element of gl(n+1) with indices 0..n")
    return _rho_map(n)(x)


def linear_image(x: UglElement, gen: Callable[[int, int], object], zero):
    """Image of a degree <= 1 element under a map given on generators."""
    out = zero
    for m, c in x.terms.items():
        if len(m) > 1:
            raise ValueError("linear_image needs a degree <= 1 element")
        if not m:
            out = out + c
        else:
            out = out + gen(*x.alg.gens[m[0]]) * c
    return out


def verify_hom(n: int, gen: Callable[[int, int, int], TensorElement] = rho_gen) -> Verdict:
    """Check ``gen([E_ab, E_cd]) == [gen(E_ab), gen(E_cd)]`` for every generator pair."""
    alg = gl_n1(n)
    images = {p: gen(n, *p) for p in alg.gens}
    zero = TensorElement(n)
    for p in alg.gens:
        for q in alg.gens:
            br = commutator(alg.E(*p), alg.E(*q))
            lhs = linear_image(br, lambda a, b: images[(a, b)], zero)
            rhs = commutator(images[p], images[q])
            if lhs != rhs:
                return fail(f"[E{p}, E{q}]: rho(bracket) = {lhs}; bracket of images = {rhs}")
    return PASS


# --------------------------------------------------------------------------
# pi_g, iota_s, iota_g, rho_s, gamma
# --------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _pi_g_map(alg: GlAlgebra) -> AlgebraMap:
    shift = alg.G1() * Fraction(-1, alg.N)
    return AlgebraMap(alg, lambda i, j: alg.E(i, j) + shift if i == j else alg.E(i, j), alg.one())


def pi_g(x: UglElement) -> UglElement:
    """Trace projection E_ij -> E_ij - delta_ij G_1/N, extended multiplicatively."""
    return _pi_g_map(x.alg)(x)


class NotTraceless(ValueError):
    pass


def iota_s(x: UglElement) -> UglElement:
    """Inclusion U(sl) -> U(gl); rejects elements with a G_1 component."""
    if not to_adapted(x).g1_free():
        raise NotTraceless("not in the traceless span")
    return x


@lru_cache(maxsize=None)
def _iota_g_map(n: int) -> AlgebraMap:
    big = gl_n1(n)
    e00 = big.E(0, 0)
    return AlgebraMap(gl_n(n), lambda i, j: big.E(i, j) - e00 if i == j else big.E(i, j), big.one())


def iota_g(x: UglElement) -> UglElement:
    """C -> C - tr(C) E_00 from U(gl(n)) to U(sl(n+1)) inside U(gl(n+1))."""
    return _iota_g_map(x.alg.N)(x)


def plain_inclusion(x: UglElement) -> UglElement:
    """Index-preserving embedding gl(n) -> gl(n+1) (not trace-corrected)."""
    return gl_n1(x.alg.N).embed(x)


def rho_s(x: UglElement) -> TensorElement:
    return rho(iota_s(x))


def sl_basis(n: int) -> list[UglElement]:
    """Off-diagonal E_ab together with H_p = E_pp - E_{p+1,p+1}."""
    alg = gl_n1(n)
    out = [alg.E(a, b) for (a, b) in alg.gens if a != b]
    out += [alg.E(p, p) - alg.E(p + 1, p + 1) for p in range(n)]
    return out


def _gamma_table(n: int, a: int, b: int) -> TensorElement:
    big = gl_n1(n)
    one = big.one()
    td = tensor(dop(n, t={a: 1}, d={b: 1}), one, n)
    if a == b:
        # only trace-zero combinations of these are images of gamma
        return td if a == 0 else td + tensor(None, big.E(a, a) - big.E(0, 0), n)
    if a > 0 and b > 0:
        return td + tensor(None, big.E(a, b), n)
    if a > 0:
        for i in range(1, n + 1):
            u = big.E(a, i) - big.E(0, 0) if i == a else big.E(a, i)
            td = td - tensor(t_over_t0(n, i), u, n)
    return td


def gamma_gen(n: int, x: UglElement) -> TensorElement:
    """gamma on a degree-one element of sl(n+1), transcribed from the generator formulas."""
    big = gl_n1(n)
    out = TensorElement(n, big)
    trace = 0
    for mono, c in x.terms.items():
        if len(mono) != 1:
            raise ValueError("gamma_gen expects a degree-one element")
        a, b = big.gens[mono[0]]
        if a == b:
            trace += c
        out = out + _gamma_table(n, a, b) * c
    if trace:
        raise NotTraceless("not in the traceless span")
    return out


def verify_diagram(n: int, iota: Callable[[UglElement], UglElement] = iota_g) -> Verdict:
    """gamma = (1 (x) iota_g) rho_s, pi_g iota_s = Id, rho_s pi_g = rho on generators."""
    big = gl_n1(n)
    for s in sl_basis(n):
        lhs = gamma_gen(n, s)
        rhs = map_ugl(rho_s(s), iota, big)
        if lhs != rhs:
            return fail(f"gamma({s}) = {lhs} but (1 x iota_g) rho_s = {rhs}")
        back = pi_g(iota_s(s))
        if back != s:
            return fail(f"pi_g iota_s({s}) = {back}")
    for (a, b) in big.gens:
        e = big.E(a, b)
        lhs = rho_s(pi_g(e))
        rhs = rho(e)
        if lhs != rhs:
            return fail(f"rho_s pi_g(E[{a},{b}]) = {lhs} but rho = {rhs}")
    return PASS
