"""The elements r_k(a,b), Gelfand invariants G_k, and the closed forms for their rho-images."""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import comb

from .dops import dop, dop_mul, t_over_t0
from .homs import rho
from .tensor import TensorElement, dpart, r1, r2, tensor, upart
from .ugl import GlAlgebra, UglElement, gl_n, gl_n1
from .verdict import PASS, Verdict, fail


@lru_cache(maxsize=None)
def r_k(alg: GlAlgebra, k: int, a: int, b: int) -> UglElement:
    """r_0 = delta_ab, r_{k+1}(a,b) = sum_i r_k(a,i) E_ib."""
    if a not in alg.indices or b not in alg.indices:
        raise IndexError(f"({a},{b}) outside {alg}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return alg.one() if a == b else alg.zero()
    out = alg.zero()
    for i in alg.indices:
        out = out + r_k(alg, k - 1, a, i) * alg.E(i, b)
    return out


def r_k_direct(alg: GlAlgebra, k: int, a: int, b: int) -> UglElement:
    """sum over i_1..i_{k-1} of E_{a i_1} E_{i_1 i_2} ... E_{i_{k-1} b}."""
    if k == 0:
        return alg.one() if a == b else alg.zero()
    out = alg.zero()
    for path in product(alg.indices, repeat=k - 1):
        seq = (a,) + path + (b,)
        out = out + alg.word(zip(seq, seq[1:]))
    return out


@lru_cache(maxsize=None)
def gelfand_G(alg: GlAlgebra, k: int) -> UglElement:
    """G_k = sum_i r_k(i,i); G_0 = N."""
    out = alg.zero()
    for i in alg.indices:
        out = out + r_k(alg, k, i, i)
    return out


@lru_cache(maxsize=None)
def f_m(n: int, m: int, a: int, b: int) -> TensorElement:
    """sum_{i=1..n} t_a d_i (x) r_{m-1}(i,b) over gl(n)."""
    if m < 1:
        raise ValueError("m must be positive")
    if not (0 <= a <= n and 1 <= b <= n):
        raise IndexError(f"f_m index ({a},{b}) out of range")
    g = gl_n(n)
    out = TensorElement(n)
    for i in range(1, n + 1):
        out = out + tensor(dop(n, t={a: 1}, d={i: 1}), r_k(g, m - 1, i, b), n)
    return out


@lru_cache(maxsize=None)
def _r_powers(n: int, top: int):
    R1, R2 = r1(n), r2(n)
    p1, p2 = [R1 ** 0], [R2 ** 0]
    for _ in range(top):
        p1.append(p1[-1] * R1)
        p2.append(p2[-1] * R2)
    return p1, p2


def binom_block(n: int, k: int, top: int, r2_exp: int) -> TensorElement:
    """sum_{g=0..top} C(k,g) R_1^g R_2^(r2_exp - g); empty sum is 0."""
    p1, p2 = _r_powers(n, max(k, 1))
    out = TensorElement(n)
    for g in range(top + 1):
        out = out + p1[g] * p2[r2_exp - g] * comb(k, g)
    return out


def r1_block(n: int, k: int, top: int):
    """[(g, C(k,g) R_1^g) for g = 0..top]."""
    p1, _ = _r_powers(n, max(k, 1))
    return [(g, p1[g] * comb(k, g)) for g in range(top + 1)]


@lru_cache(maxsize=None)
def _dt_block(n: int, m: int) -> TensorElement:
    """sum_{i,j>0} d_i t_j (x) r_{m-1}(i,j), with d_i t_j composed in that order."""
    g = gl_n(n)
    out = TensorElement(n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            dt = dop_mul(dop(n, d={i: 1}), dop(n, t={j: 1}))
            out = out + tensor(dt, r_k(g, m - 1, i, j), n)
    return out


def rho_rk_closed_form(n: int, k: int, a: int, b: int) -> TensorElement:
    """Closed form for rho(r_k(a,b)), k >= 1, in the four index cases."""
    if k < 1:
        raise ValueError("k must be positive")
    g = gl_n(n)
    out = TensorElement(n)
    if a > 0 and b > 0:
        for m in range(1, k + 1):
            out = out + f_m(n, m, a, b) * binom_block(n, k, k - m, k - m)
        for gg, c in r1_block(n, k, k):
            out = out + c * upart(r_k(g, k - gg, a, b), n)
        return out
    if a > 0:  # b == 0
        out = binom_block(n, k, k - 1, k - 1) * dpart(dop(n, t={a: 1}, d={0: 1}))
        for gg, c in r1_block(n, k, k - 1):
            s = TensorElement(n)
            for j in range(1, n + 1):
                s = s + tensor(t_over_t0(n, j), r_k(g, k - gg, a, j), n)
            out = out - c * s
        tail = TensorElement(n)
        for m in range(2, k + 1):
            tail = tail + binom_block(n, k, k - m, k - m) * _dt_block(n, m)
        return out - dpart(t_over_t0(n, a)) * tail
    if b > 0:  # a == 0
        for m in range(1, k + 1):
            out = out + f_m(n, m, 0, b) * binom_block(n, k, k - m, k - m)
        return out
    out = binom_block(n, k, k - 1, k - 1) * dpart(dop(n, t={0: 1}, d={0: 1}))
    out = out + _r_powers(n, k)[0][k]
    for m in range(2, k + 1):
        out = out - binom_block(n, k, k - m, k - m) * _dt_block(n, m)
    return out


def _case(a: int, b: int) -> str:
    return {(True, True): "(a,b)", (True, False): "(a,0)", (False, True): "(0,b)", (False, False): "(0,0)"}[(a > 0, b > 0)]


def verify_rho_rk(n: int, kmax: int) -> Verdict:
    big = gl_n1(n)
    for k in range(1, kmax + 1):
        for a in big.indices:
            for b in big.indices:
                lhs = rho(r_k(big, k, a, b))
                rhs = rho_rk_closed_form(n, k, a, b)
                if lhs != rhs:
                    return fail(f"k={k} a={a} b={b} case {_case(a, b)}: rho(r_k) - rhs = {lhs - rhs}")
    return PASS


def rho_g_closed_form(n: int, k: int) -> TensorElement:
    """Closed form for rho(G_k) of gl(n+1), k >= 1."""
    g = gl_n(n)
    E = _euler(n)
    out = binom_block(n, k, k - 1, k - 1) * E
    out = out + _r_powers(n, k)[0][k] * (n + 1)
    for gg, c in r1_block(n, k, k - 1):
        out = out + c * upart(gelfand_G(g, k - gg), n)
    for m in range(2, k + 1):
        out = out - binom_block(n, k, k - m, k - m) * upart(gelfand_G(g, m - 1), n)
    return out


def _euler(n: int) -> TensorElement:
    from .dops import euler_power

    return dpart(euler_power(n, 1))


def rho_g3_expanded(n: int) -> TensorElement:
    """The k = 3 instance written out term by term."""
    g = gl_n(n)
    R1, R2, E = r1(n), r2(n), _euler(n)
    G = {k: upart(gelfand_G(g, k), n) for k in (1, 2, 3)}
    return (
        (R2 * R2 + R1 * R2 * 3 + R1 * R1 * 3) * E
        + R1 * R1 * R1 * (n + 1)
        + G[3]
        + R1 * G[2] * 3
        + R1 * R1 * G[1] * 3
        - G[2]
        - (R2 + R1 * 3) * G[1]
    )


def verify_rho_g(n: int, kmax: int) -> Verdict:
    big = gl_n1(n)
    for k in range(1, kmax + 1):
        lhs = rho(gelfand_G(big, k))
        rhs = rho_g_closed_form(n, k)
        if lhs != rhs:
            return fail(f"k={k}: rho(G_k) - closed form = {lhs - rhs}")
        if k == 3 and rhs != rho_g3_expanded(n):
            return fail("k=3 closed form differs from the written-out k=3 formula")
    return PASS


def rk_closed_form_trace(n: int, k: int) -> TensorElement:
    """Sum of the r_k closed forms over a = b; should equal the rho(G_k) closed form."""
    out = TensorElement(n)
    for a in range(n + 1):
        out = out + rho_rk_closed_form(n, k, a, a)
    return out
