import random

import pytest
from hypothesis import given, settings, strategies as st

from mixcap.capelli import capelli
from mixcap.tpoly import TPoly
from mixcap.ugl import gl_n, gl_n1
from mixcap.uprime import (
    VAR,
    UPrimeElement,
    capelli_X,
    pi_g_prime,
    random_xpoly,
    reduce_mod_capelli,
    uhat,
    verify_cleared_u_identity,
    verify_pi_g_prime,
    verify_uniqueness,
    x_is_central,
)

big = gl_n1(1)
E = big.E


def X(alg=big):
    return TPoly.gen(alg.zero(), VAR)


def test_reduce_trivial_cases():
    C = capelli_X(1)
    q, r = reduce_mod_capelli(C, 1)
    assert q == TPoly.const(1, big.zero(), VAR) and not r
    p = X() * E(0, 1) + E(1, 0)
    q, r = reduce_mod_capelli(p, 1)
    assert not q and r == p


def test_x_squared_n1():
    want = X() * (E(0, 0) + E(1, 1) - 1) - E(0, 0) * E(1, 1) + E(0, 0) + E(1, 0) * E(0, 1)
    assert reduce_mod_capelli(X() * X(), 1)[1] == want
    x = UPrimeElement.X(1)
    assert (x * x).rep == want


def test_quotient_basics():
    x = UPrimeElement.of(X() * E(0, 1) + 2, 1)
    one = UPrimeElement.from_ugl(big.one(), 1)
    assert one * x == x == x * one
    g = UPrimeElement.from_ugl(big.G1(), 1)
    assert not (g * x - x * g)


def test_pi_g_prime_examples():
    assert pi_g_prime(UPrimeElement.X(1)).rep == X() - big.G1() / 2
    assert not pi_g_prime(UPrimeElement.from_ugl(big.G1(), 1))


@pytest.mark.parametrize("n", [1, 2])
def test_capelli_n_nonzero_in_quotient(n):
    b = gl_n1(n)
    Cn = capelli(gl_n(n), var=VAR).map_coeffs(b.embed, b.zero())
    assert UPrimeElement.of(Cn, n)
    assert UPrimeElement.of(Cn.shift(1), n)


def test_uhat_n1():
    (u1,) = uhat(1)
    assert u1 == TPoly.const(-E(1, 0), big.zero(), VAR)
    lhs = u1 * E(1, 1) + E(1, 0) * (E(1, 1) - X())
    assert lhs == -E(1, 0) * X() == u1 * X()


@pytest.mark.parametrize("n", [1, 2])
def test_cleared_identity(n):
    assert verify_cleared_u_identity(n)
    assert not verify_cleared_u_identity(n, drop_term=True)


@pytest.mark.parametrize("n", [1, 2])
def test_quotient_properties(n):
    assert verify_uniqueness(n, seed=3, samples=20)
    assert verify_pi_g_prime(n, seed=3, samples=5)
    assert x_is_central(n)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 4))
def test_reduction_round_trip(seed, deg):
    rng = random.Random(seed)
    p = random_xpoly(1, rng, deg)
    q, r = reduce_mod_capelli(p, 1)
    assert q * capelli_X(1) + r == p
    assert r.degree <= 1
    assert reduce_mod_capelli(r, 1)[1] == r


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6))
def test_quotient_associative(seed):
    rng = random.Random(seed)
    a, b, c = (UPrimeElement.of(random_xpoly(1, rng, 1, max_deg=1), 1) for _ in range(3))
    assert (a * b) * c == a * (b * c)
