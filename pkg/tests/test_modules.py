from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import ugl_elements
from mixcap.gelfand import gelfand_G
from mixcap.modules import (
    TensorModule,
    TruncationOverflow,
    VermaModule,
    central_scalars,
    character_compare,
    is_antidominant,
    lambda_tilde,
    multiplicity_table,
    tensor_act,
    verify_central_character,
    verma_act,
)
from mixcap.ugl import commutator, gl_n, gl_n1

F = Fraction
LAM2 = (F(1, 3), F(-1, 5))


def test_antidominance():
    assert not is_antidominant((0, 0))
    assert is_antidominant(LAM2)
    assert is_antidominant((-1, 0))


def test_verma_examples():
    g1 = gl_n(1)
    assert verma_act(g1.E(1, 1), {(): F(1)}, (F(1, 3),), 2) == {(): F(1, 3)}
    g2 = gl_n(2)
    v = verma_act(g2.E(2, 1), {(): F(1)}, LAM2, 2)
    assert verma_act(g2.E(1, 2), v, LAM2, 2) == {(): LAM2[0] - LAM2[1]}
    mod = VermaModule(g2, LAM2, 3)
    for b in mod.basis():
        assert mod.act(g2.G1(), {b: F(1)}) == {b: sum(LAM2)}


def test_truncation_is_a_hard_error():
    g2 = gl_n(2)
    with pytest.raises(TruncationOverflow):
        verma_act(g2.E(2, 1) ** 3, {(): F(1)}, LAM2, 2)


def test_lambda_tilde():
    assert lambda_tilde(0, (F(1, 3),)) == (F(-1, 6), F(1, 6))
    lt = lambda_tilde(1, LAM2)
    r = -(1 + LAM2[0] + LAM2[1]) / 3
    assert lt == (1 + r, LAM2[0] + r, LAM2[1] + r)
    assert sum(lt) == 0


@pytest.mark.parametrize("a", [-1, 0, 2])
def test_tensor_highest_vector(a):
    n, lam = 1, (F(1, 3),)
    big = gl_n1(n)
    v = {((a, 0), ()): F(1)}
    assert tensor_act(big.E(0, 1), v, n, a, lam, 2) == {}
    assert tensor_act(big.E(0, 0), v, n, a, lam, 2) == {((a, 0), ()): lambda_tilde(a, lam)[0]}
    mod = TensorModule(n, a, lam, 3)
    for b in mod.basis():
        assert mod.act(big.G1(), {b: F(1)}) == {}


@pytest.mark.parametrize("n,a,lam,D", [(1, 0, (F(1, 3),), 4), (2, 1, LAM2, 4)])
def test_tensor_action_respects_brackets(n, a, lam, D):
    big = gl_n1(n)
    mod = TensorModule(n, a, lam, D)
    room = D - 2 * max(i - j for i, j in big.gens)
    vecs = [b for b in mod.basis() if mod.height(b) <= room]
    gens = [big.E(*g) for g in big.gens]
    for x in gens:
        for y in gens:
            br = commutator(x, y)
            for b in vecs:
                v = {b: F(1)}
                lhs = mod.act(br, v)
                xy = mod.act(x, mod.act(y, v))
                yx = mod.act(y, mod.act(x, v))
                rhs = {k: xy.get(k, 0) - yx.get(k, 0) for k in set(xy) | set(yx)}
                assert lhs == {k: c for k, c in rhs.items() if c}


@pytest.mark.parametrize("n,a,lam", [(1, 2, (F(1, 3),)), (2, 1, LAM2)])
def test_weight_additivity(n, a, lam):
    big = gl_n1(n)
    mod = TensorModule(n, a, lam, 3)
    for b in mod.basis():
        if mod.height(b) > 1:
            continue
        w = mod.weight_of(b)
        for i, j in big.gens:
            shift = [0] * (n + 1)
            shift[i] += 1
            shift[j] -= 1
            want = tuple(x + s for x, s in zip(w, shift))
            for key in mod.act(big.E(i, j), {b: F(1)}):
                assert mod.weight_of(key) == want


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_verma_action_is_an_algebra_action(data):
    alg = gl_n(2)
    mod = VermaModule(alg, LAM2, 4)
    x = data.draw(ugl_elements(alg, max_len=1, max_terms=2))
    y = data.draw(ugl_elements(alg, max_len=1, max_terms=2))
    b = data.draw(st.sampled_from([m for m in mod.basis() if len(m) <= 2]))
    v = {b: F(1)}
    assert mod.act(x * y, v) == mod.act(x, mod.act(y, v))


def test_central_character_examples():
    assert central_scalars(1, 0, (F(1, 3),), 1)[1] == 0
    assert verify_central_character(1, 0, (F(1, 3),), 2, 3)
    assert verify_central_character(2, 1, LAM2, 3, 2)


def test_wrong_scalar_would_be_caught():
    n, a, lam = 1, 0, (F(1, 3),)
    mod = TensorModule(n, a, lam, 2)
    G2 = gelfand_G(gl_n1(n), 2)
    s = central_scalars(n, a, lam, 2)[2]
    for b in mod.basis():
        assert mod.act(G2, {b: F(1)}) != {b: s + 1}


def test_character_examples():
    lam = (F(1, 3),)
    assert character_compare(1, 0, lam, 0)
    table = multiplicity_table(1, 0, lam, 3)
    assert sorted(table.values()) == [1, 1, 1, 1]
    assert character_compare(1, 0, lam, 3)
    assert character_compare(2, 1, LAM2, 2)
