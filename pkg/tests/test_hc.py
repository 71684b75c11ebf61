from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import defining_rep
from mixcap.arith import CPoly, ev_point, poly_substitute
from mixcap.capelli import capelli
from mixcap.gelfand import gelfand_G
from mixcap.hc import NotCentral, chi, chi_0n, chi_tpoly, ell, ell_vars, tau, verify_hc_diagram
from mixcap.tensor import TensorElement, r1, r2
from mixcap.ugl import gl_n, gl_n1


def lvars(n, base=1):
    return [f"l{i}" for i in range(base, n + 1)]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_chi_of_g1(n):
    vs = lvars(n)
    want = sum((CPoly.var(v, vs) for v in vs), CPoly(vs)) + Fraction(n * (n - 1), 2)
    assert chi(gl_n(n).G1()).poly == want


def test_chi_of_one_and_noncentral():
    assert chi(gl_n(2).one()).poly == CPoly.const(1, lvars(2))
    with pytest.raises(NotCentral):
        chi(gl_n(2).E(1, 2))


def test_chi_of_capelli_n2():
    g = gl_n(2)
    vs = ["l1", "l2", "T"]
    l1, l2, T = (CPoly.var(v, vs) for v in vs)
    assert chi_tpoly(capelli(g).coeffs, g) == (l1 - T) * (l2 - T)
    assert chi_tpoly(capelli(g, "M").coeffs, g) == (T + l1) * (T + l2)


@pytest.mark.parametrize("alg", [gl_n(2), gl_n(3), gl_n1(1), gl_n1(2)], ids=str)
def test_chi_matches_defining_representation(alg):
    """z acts on C^N (highest weight (1,0,...,0)) by ev at that weight plus delta."""
    N = alg.N
    point = [Fraction(int(p == 0)) - p for p in range(N)]
    zs = [gelfand_G(alg, k) for k in range(1, N + 2)] + list(capelli(alg).coeffs.values())
    for z in zs:
        s = ev_point(chi(z).poly, point)
        rep = defining_rep(z)
        assert rep == [[s if i == j else 0 for j in range(N)] for i in range(N)]


@pytest.mark.parametrize("alg", [gl_n(2), gl_n1(2)], ids=str)
def test_chi_matches_trivial_representation(alg):
    point = [Fraction(-p) for p in range(alg.N)]
    for k in range(1, 4):
        z = gelfand_G(alg, k)
        assert ev_point(chi(z).poly, point) == z.terms.get((), 0)


@settings(max_examples=15, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 3), st.integers(-2, 2)), min_size=1, max_size=2), st.integers(1, 3))
def test_chi_multiplicative_on_center(parts, k):
    alg = gl_n(2)
    z1 = sum((gelfand_G(alg, kk) * c for kk, c in parts), alg.zero())
    z2 = gelfand_G(alg, k)
    assert chi(z1 * z2).poly == chi(z1).poly * chi(z2).poly


@pytest.mark.parametrize("n", [1, 2, 3])
def test_chi0n_anchors(n):
    vs = lvars(n, 0)
    s = sum((CPoly.var(v, vs) for v in vs), CPoly(vs))
    want = (s + Fraction(n * (n - 1), 2)) * Fraction(-1, n + 1)
    assert chi_0n(r1(n), 1).poly == want == ell(n)
    assert chi_0n(TensorElement(n) + 1, 0).poly == CPoly.const(1, vs)
    assert chi_0n(r2(n), 1).poly == CPoly.var("l0", vs) + n


def test_tau_examples():
    vs = ["l0", "l1"]
    l0, l1 = (CPoly.var(v, vs) for v in vs)
    assert tau(CPoly.const(1, vs), 1) == CPoly.const(1, vs)
    assert tau(l0, 1) == (l0 - l1) / 2


@pytest.mark.parametrize("n", [1, 2])
def test_tau_by_variable(n):
    vs = lvars(n, 0)
    total = sum((CPoly.var(v, vs) for v in vs), CPoly(vs))
    L = ell(n)
    per_var = sum((CPoly.var(v, vs) + L - (0 if v == "l0" else 1) for v in vs), CPoly(vs))
    assert tau(total, n) == per_var
    assert tau(total * total, n) == poly_substitute(total * total, {v: CPoly.var(v, vs) + L - (v != "l0") for v in vs})


def test_g1_both_sides_vanish():
    for n in (1, 2):
        big = gl_n1(n)
        assert not chi_0n(TensorElement(n), 1).poly
        assert not tau(chi(big.G1()).poly, n)


@pytest.mark.parametrize("n,kmax", [(1, 3), (2, 4)])
def test_hc_diagram(n, kmax):
    assert verify_hc_diagram(n, kmax)


def test_ell_vars_order():
    assert ell_vars(gl_n1(2)) == ["l0", "l1", "l2"]
