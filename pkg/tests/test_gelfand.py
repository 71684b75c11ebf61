import pytest

from mixcap.dops import dop
from mixcap.gelfand import (
    rho_rk_closed_form,
    rk_closed_form_trace,
    f_m,
    gelfand_G,
    rho_g3_expanded,
    r_k,
    r_k_direct,
    rho_g_closed_form,
    verify_rho_rk,
    verify_rho_g,
)
from mixcap.homs import rho, rho_gen
from mixcap.tensor import TensorElement, dpart, tensor
from mixcap.tpoly import NcMatrix, matrix_power
from mixcap.ugl import gl_n, gl_n1, is_central

big1 = gl_n1(1)


def test_small_r_k():
    for a in big1.indices:
        for b in big1.indices:
            assert r_k(big1, 0, a, b) == (big1.one() if a == b else big1.zero())
            assert r_k(big1, 1, a, b) == big1.E(a, b)
    E = big1.E
    assert r_k(big1, 2, 1, 1) == E(1, 0) * E(0, 1) + E(1, 1) * E(1, 1)


@pytest.mark.parametrize("alg", [gl_n1(1), gl_n1(2)], ids=str)
def test_recursion_matches_direct_sum(alg):
    for k in range(5 if alg.N == 2 else 4):
        for a in alg.indices:
            for b in alg.indices:
                assert r_k(alg, k, a, b) == r_k_direct(alg, k, a, b)


@pytest.mark.parametrize("alg", [gl_n(2), gl_n1(2)], ids=str)
def test_gelfand_is_trace_of_power(alg):
    A = NcMatrix([[alg.E(i, j) for j in alg.indices] for i in alg.indices])
    for k in range(4):
        P = matrix_power(A, k, alg.one())
        trace = sum((P.rows[p][p] for p in range(alg.N)), alg.zero())
        assert gelfand_G(alg, k) == trace


def test_gelfand_small_cases():
    g = gl_n(2)
    assert gelfand_G(g, 0) == g.one() * 2
    assert gelfand_G(g, 1) == g.G1()
    assert is_central(gelfand_G(g, 3))


def test_f_m_examples():
    n = 2
    g = gl_n(n)
    for a in range(n + 1):
        for b in range(1, n + 1):
            assert f_m(n, 1, a, b) == dpart(dop(n, t={a: 1}, d={b: 1}))
    assert f_m(1, 2, 1, 1) == tensor(dop(1, t={1: 1}, d={1: 1}), gl_n(1).E(1, 1))
    want = tensor(dop(2, t={0: 1}, d={1: 1}), g.E(1, 1)) + tensor(dop(2, t={0: 1}, d={2: 1}), g.E(2, 1))
    assert f_m(2, 2, 0, 1) == want
    with pytest.raises(IndexError):
        f_m(2, 1, 0, 0)


@pytest.mark.parametrize("n", [1, 2])
def test_rk_base_case_is_generator_table(n):
    for a in range(n + 1):
        for b in range(n + 1):
            assert rho_rk_closed_form(n, 1, a, b) == rho_gen(n, a, b)


@pytest.mark.parametrize("n,kmax", [(1, 4), (2, 3)])
def test_rho_rk_closed_form(n, kmax):
    assert verify_rho_rk(n, kmax)


@pytest.mark.parametrize("n,kmax", [(1, 4), (2, 4)])
def test_rho_g_closed_form(n, kmax):
    assert verify_rho_g(n, kmax)


def test_k1_both_sides_zero():
    for n in (1, 2):
        assert rho_g_closed_form(n, 1) == TensorElement(n)
        assert not rho(gelfand_G(gl_n1(n), 1))


def test_k3_written_out():
    assert rho_g_closed_form(2, 3) == rho_g3_expanded(2)


@pytest.mark.parametrize("n", [1, 2])
def test_trace_of_rk_forms_is_closed_form(n):
    for k in range(1, 4):
        assert rk_closed_form_trace(n, k) == rho_g_closed_form(n, k)


def test_perturbed_closed_form_detected():
    n = 1
    assert rho(gelfand_G(gl_n1(n), 2)) != rho_g_closed_form(n, 2) + 1
