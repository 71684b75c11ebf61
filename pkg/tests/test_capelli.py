import pytest
from hypothesis import given, settings, strategies as st

from conftest import ugl_elements
from mixcap.arith import LaurentTail
from mixcap.capelli import (
    VARIANTS,
    capelli,
    capelli_matrix,
    capelli_minor,
    e_matrix,
    gelfand_tail,
    newton_lhs,
    verify_cayley_hamilton,
    verify_minor_identities,
    verify_newton,
    verify_rho_newton,
    verify_rho_capelli,
)
from mixcap.tpoly import NcMatrix, TPoly, column_det, column_det_naive, matrix_substitute
from mixcap.ugl import gl_n, gl_n1, is_central

g1, g2 = gl_n(1), gl_n(2)


def T(alg, var="T"):
    return TPoly.gen(alg.zero(), var)


def test_one_by_one():
    x = g2.E(1, 2) + 3
    assert column_det(NcMatrix([[x]])) == x


def test_two_by_two_expansion():
    E, t = g2.E, T(g2)
    A = NcMatrix([[E(1, 1) - t, TPoly.const(E(1, 2), g2.zero())], [TPoly.const(E(2, 1), g2.zero()), E(2, 2) - t - 1]])
    want = (E(1, 1) - t) * (E(2, 2) - t - 1) - E(2, 1) * E(1, 2)
    assert column_det(A) == want
    assert capelli(g2) == want


def test_capelli_gl1():
    assert capelli(g1) == g1.E(1, 1) - T(g1)


def test_non_square_rejected():
    with pytest.raises(ValueError):
        NcMatrix([[g1.E(1, 1), g1.E(1, 1)]])


@pytest.mark.parametrize("alg", [gl_n(2), gl_n(3), gl_n1(1), gl_n1(2)], ids=str)
def test_capelli_coefficients_central(alg):
    for variant in VARIANTS:
        for c in capelli(alg, variant).coeffs.values():
            assert is_central(c)


def test_unsigned_determinant_not_central():
    bad = [c for c in capelli(g2, signed=False).coeffs.values() if not is_central(c)]
    assert bad


@pytest.mark.parametrize("alg", [gl_n(2), gl_n1(2)], ids=str)
def test_variant_relations(alg):
    std = capelli(alg)
    assert capelli(alg, "M").scale_var(-1) == std
    assert capelli(alg, "U").shift(alg.N - 1) == std


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_column_det_matches_permutation_expansion(data):
    alg = gl_n(2)
    m = data.draw(st.integers(1, 3))
    rows = [[data.draw(ugl_elements(alg, max_len=2, max_terms=2)) for _ in range(m)] for _ in range(m)]
    A = NcMatrix(rows)
    signed = data.draw(st.booleans())
    assert column_det(A, signed) == column_det_naive(A, signed)


def test_capelli_matrix_naive_oracle_gl3():
    A = capelli_matrix(gl_n(3))
    assert column_det(A) == column_det_naive(A)


def test_minor_examples():
    assert capelli_minor(g1, 1, 1) == TPoly.const(1, g1.zero())
    for n in (1, 2):
        big, small = gl_n1(n), gl_n(n)
        want = capelli(small, var="X").shift(1).map_coeffs(big.embed, big.zero())
        assert capelli_minor(big, 0, 0, var="X") == want
    with pytest.raises(IndexError):
        capelli_minor(g2, 0, 1)


@pytest.mark.parametrize("n", [1, 2])
def test_minor_identities(n):
    assert verify_minor_identities(n)


def test_minor_identities_need_signs():
    assert not verify_minor_identities(2, signed=False)


@pytest.mark.parametrize("n", [1, 2])
def test_rho_capelli(n):
    assert verify_rho_capelli(n)


def test_matrix_substitute_examples():
    A = NcMatrix([[g2.E(1, 1), g2.E(1, 2)], [g2.E(2, 1), g2.E(2, 2)]])
    assert matrix_substitute(TPoly.gen(g2.zero()), A).rows == A.rows
    CM = capelli(g1, "M")
    val = matrix_substitute(CM, NcMatrix([[-g1.E(1, 1)]]), is_central)
    assert val.is_scalar_matrix(0)


def test_matrix_substitute_rejects_noncentral():
    p = TPoly.const(g2.E(1, 2), g2.zero())
    with pytest.raises(ValueError, match="not central"):
        matrix_substitute(p, NcMatrix([[g2.E(1, 1), g2.E(1, 1)], [g2.E(1, 1), g2.E(1, 1)]]), is_central)


@pytest.mark.parametrize("n", [1, 2])
def test_cayley_hamilton(n):
    assert verify_cayley_hamilton(n)


def test_newton_gl1_is_geometric():
    K = 3
    E11 = g1.E(1, 1)
    # -1/(E11 - T) = sum_k E11^k T^(-1-k)
    want = LaurentTail(-1, K, {k: E11 ** k for k in range(K + 1)})
    assert newton_lhs(g1, K) == want == gelfand_tail(g1, K)


@pytest.mark.parametrize("N,K", [(1, 4), (2, 4)])
def test_newton(N, K):
    assert verify_newton(N, K)


def test_newton_fails_without_signs():
    assert newton_lhs(g2, 3, signed=False) != gelfand_tail(g2, 3)


def test_rho_newton_n1():
    assert verify_rho_newton(1, 4)


def test_e_matrix_transpose():
    A, At = e_matrix(g2), e_matrix(g2, transpose=True)
    assert At.rows[0][1] == A.rows[1][0]
