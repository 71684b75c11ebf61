from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import defining_rep, ugl_elements
from mixcap.dops import DopElement, apply_monomial, dop, t_over_t0
from mixcap.gelfand import gelfand_G
from mixcap.homs import (
    NotTraceless,
    iota_g,
    iota_s,
    pi_g,
    plain_inclusion,
    rho,
    rho_gen,
    verify_diagram,
    verify_hom,
)
from mixcap.tensor import TensorElement, dpart, r1, tensor
from mixcap.ugl import UglElement, gl_n, gl_n1, is_central


def test_generator_images_n1():
    g = gl_n(1)
    assert rho_gen(1, 0, 1) == dpart(dop(1, t={0: 1}, d={1: 1}))
    assert rho_gen(1, 0, 0) == dpart(dop(1, t={0: 1}, d={0: 1})) + r1(1)
    assert rho_gen(1, 1, 0) == dpart(dop(1, t={1: 1}, d={0: 1})) - tensor(t_over_t0(1, 1), g.E(1, 1))


def test_rho_unit_and_g1():
    for n in (1, 2):
        big = gl_n1(n)
        assert rho(big.one()) == TensorElement(n) + 1
        assert not rho(big.G1())


def test_rho_product_consistency():
    big = gl_n1(1)
    e01, e10 = big.E(0, 1), big.E(1, 0)
    direct = rho_gen(1, 0, 1) * rho_gen(1, 1, 0)
    assert rho(e01 * e10) == direct
    assert direct == rho(e10 * e01) + rho(big.E(0, 0) - big.E(1, 1))


@pytest.mark.parametrize("n", [1, 2])
def test_homomorphism(n):
    assert verify_hom(n)


def test_dropping_r1_still_a_homomorphism():
    # R_1 is central and enters only diagonal images, so it cancels in every bracket
    def no_r1(n, a, b):
        img = rho_gen(n, a, b)
        return img - r1(n) if a == b else img

    assert verify_hom(1, no_r1)


def test_sign_corruption_breaks_homomorphism():
    def corrupt(n, a, b):
        img = rho_gen(n, a, b)
        if a > 0 and b == 0:
            img = img + tensor(t_over_t0(n, 1), gl_n(n).E(a, 1), n) * 2
        return img

    v = verify_hom(1, corrupt)
    assert not v and "E(" in v.witness


def test_pi_g_iota_examples():
    big = gl_n1(1)
    assert pi_g(big.E(0, 0)) == (big.E(0, 0) - big.E(1, 1)) * Fraction(1, 2)
    assert pi_g(iota_s(big.E(0, 1))) == big.E(0, 1)
    assert iota_g(gl_n(1).E(1, 1)) == big.E(1, 1) - big.E(0, 0)
    with pytest.raises(NotTraceless):
        iota_s(big.E(0, 0))


@pytest.mark.parametrize("n", [1, 2])
def test_diagram(n):
    assert verify_diagram(n)
    assert not verify_diagram(n, plain_inclusion)


def act(z: TensorElement, vec: dict, n: int) -> dict:
    """Act on Laurent polynomials (x) C^n; keys are (exponent, basis index)."""
    out: dict = {}
    for (d, u), c in z.terms.items():
        m = defining_rep(UglElement(z.alg, {u: 1}))
        for (e, k), cv in vec.items():
            for f, cf in apply_monomial(DopElement(n, {d: 1}), e).items():
                for row in range(n):
                    if m[row][k]:
                        key = (f, row)
                        out[key] = out.get(key, 0) + c * cv * cf * m[row][k]
    return {k: v for k, v in out.items() if v}


BASKET = [((-2, 1), 0), ((0, 0), 0), ((3, 2), 0), ((-1, 0), 0)]


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_rho_respects_products_in_a_representation(data):
    n = 1
    big = gl_n1(n)
    x = data.draw(ugl_elements(big, max_len=2, max_terms=2))
    y = data.draw(ugl_elements(big, max_len=2, max_terms=2))
    for v in BASKET:
        vec = {v: Fraction(1)}
        assert act(rho(x * y), vec, n) == act(rho(x), act(rho(y), vec, n), n)


@settings(max_examples=20, deadline=None)
@given(st.data())
def test_rho_multiplicative(data):
    big = gl_n1(2)
    x = data.draw(ugl_elements(big, max_len=2, max_terms=2))
    y = data.draw(ugl_elements(big, max_len=2, max_terms=2))
    assert rho(x * y) == rho(x) * rho(y)


@settings(max_examples=20, deadline=None)
@given(st.data())
def test_pi_g_idempotent_homomorphism(data):
    big = gl_n1(1)
    x = data.draw(ugl_elements(big))
    y = data.draw(ugl_elements(big))
    assert pi_g(pi_g(x)) == pi_g(x)
    assert pi_g(x * y) == pi_g(x) * pi_g(y)


@pytest.mark.parametrize("n", [1, 2])
def test_central_images_commute_with_generator_images(n):
    z = rho(gelfand_G(gl_n1(n), 2))
    assert is_central(gelfand_G(gl_n1(n), 2))
    for a in range(n + 1):
        for b in range(n + 1):
            g = rho_gen(n, a, b)
            assert z * g == g * z
