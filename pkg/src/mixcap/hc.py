"""Harish-Chandra images of central elements, the mixed map chi_{0,n}, and the shift tau."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import CPoly, poly_substitute
from .homs import rho
from .tensor import TensorElement, decompose_E_center
from .ugl import GlAlgebra, UglElement, gl_n1, is_central
from .verdict import PASS, Verdict, fail


class NotCentral(ValueError):
    pass


class SymmetryError(AssertionError):
    pass


def ell_var(i: int) -> str:
    return f"l{i}"


def ell_vars(alg: GlAlgebra) -> list[str]:
    return [ell_var(i) for i in alg.indices]


@dataclass(frozen=True)
class HCImage:
    poly: CPoly
    rank: int

    def __str__(self):
        return str(self.poly)


def _assert_order(alg: GlAlgebra) -> None:
    # the projection below is only valid for lowering < Cartan < raising
    kinds = [0 if i > j else 1 if i == j else 2 for (i, j) in alg.gens]
    assert kinds == sorted(kinds), "PBW order is not n- < h < n+"


def _is_symmetric(p: CPoly, names: list[str]) -> bool:
    return all(p.swap(a, b) == p for a, b in zip(names, names[1:]))


def cartan_projection(z: UglElement, vars_: list[str] | None = None) -> CPoly:
    """Drop non-Cartan monomials; send E_ii to l_i + (position of i)."""
    alg = z.alg
    _assert_order(alg)
    names = ell_vars(alg)
    vs = names if vars_ is None else vars_
    shifted = [CPoly.var(v, vs) + p for p, v in enumerate(names)]
    result = CPoly(vs)
    for mono, c in z.terms.items():
        if not all(alg.is_cartan(r) for r in mono):
            continue
        term = CPoly.const(c, vs)
        for r in mono:
            term = term * shifted[r - alg.n_lowering]
        result = result + term
    return result


def chi(z: UglElement, check: bool = True) -> HCImage:
    """Harish-Chandra image of a central element of U(gl(N))."""
    if check and not is_central(z):
        raise NotCentral("input not central")
    names = ell_vars(z.alg)
    p = cartan_projection(z)
    if not _is_symmetric(p, names):
        raise SymmetryError(f"projection not symmetric: {p}")
    return HCImage(p, z.alg.N)


def chi_tpoly(coeffs: dict, alg: GlAlgebra, var: str = "T") -> CPoly:
    """chi applied coefficientwise to ``sum coeffs[k] T^k``."""
    names = ell_vars(alg) + [var]
    out = CPoly(names)
    T = CPoly.var(var, names)
    for k, c in coeffs.items():
        out = out + chi(c).poly.with_vars(names) * T ** k
    return out


def ell(n: int) -> CPoly:
    """-(l0 + l1 + ... + ln + n(n-1)/2)/(n+1)."""
    vs = [ell_var(i) for i in range(n + 1)]
    s = sum((CPoly.var(v, vs) for v in vs), CPoly(vs))
    return (s + Fraction(n * (n - 1), 2)) * Fraction(-1, n + 1)


def chi_0n(z: TensorElement, dmax: int) -> HCImage:
    """sum_i Euler^i (x) z_i  ->  sum_i l0^i chi_n(z_i)."""
    n = z.n
    vs = [ell_var(i) for i in range(n + 1)]
    l0 = CPoly.var("l0", vs)
    out = CPoly(vs)
    for i, zi in decompose_E_center(z, dmax):
        out = out + l0 ** i * chi(zi, check=False).poly.with_vars(vs)
    names = vs[1:]
    if not _is_symmetric(out, names):
        raise SymmetryError(f"chi_0n image not symmetric in {names}")
    return HCImage(out, n)


@lru_cache(maxsize=None)
def _tau_subst(n: int):
    L = ell(n)
    vs = [ell_var(i) for i in range(n + 1)]
    sub = {"l0": CPoly.var("l0", vs) + L}
    for i in range(1, n + 1):
        sub[ell_var(i)] = CPoly.var(ell_var(i), vs) + L - 1
    return sub


def tau(p: CPoly, n: int) -> CPoly:
    """p(l0, l1, ..., ln) -> p(l0 + l, l1 + l - 1, ..., ln + l - 1)."""
    vs = [ell_var(i) for i in range(n + 1)]
    return poly_substitute(p.with_vars(vs), _tau_subst(n))


def verify_hc_diagram(n: int, kmax: int, capelli_coeffs: bool = True) -> Verdict:
    """chi_{0,n}(rho(z)) == tau(chi_{n+1}(z)) for G_1..G_kmax and the Capelli coefficients."""
    from .capelli import capelli
    from .gelfand import gelfand_G

    big = gl_n1(n)
    family = [(f"G_{k}", gelfand_G(big, k), k) for k in range(1, kmax + 1)]
    if capelli_coeffs:
        C = capelli(big)
        family += [(f"C_{n + 1}[T^{k}]", c, n + 1) for k, c in sorted(C.coeffs.items())]
    for name, z, dmax in family:
        lhs = chi_0n(rho(z), dmax).poly
        rhs = tau(chi(z).poly, n)
        if lhs != rhs:
            return fail(f"{name}: chi_0n(rho z) = {lhs}; tau(chi z) = {rhs}")
    return PASS
