"""Truncated Verma modules, the tensor modules F_a (x) M_n(lambda) seen through rho, and central-character checks.

Truncation is by height: E_ij with i > j has height i - j.  Height is a
function of the weight, so weight-preserving operators (central ones in
particular) never leave a height-truncated space.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import product

from .arith import ev_point
from .dops import apply_dmon
from .gelfand import gelfand_G
from .hc import chi
from .homs import rho
from .sparse import add_into
from .ugl import GlAlgebra, UglElement, gl_n, gl_n1
from .verdict import PASS, Verdict, fail

Weight = tuple


class TruncationOverflow(ValueError):
    pass


def weight(values) -> Weight:
    return tuple(Fraction(v) for v in values)


def is_antidominant(mu) -> bool:
    """No consecutive difference is a nonnegative integer."""
    for x, y in zip(mu, mu[1:]):
        d = Fraction(x) - Fraction(y)
        if d.denominator == 1 and d >= 0:
            return False
    return True


def lambda_tilde(a: int, lam) -> Weight:
    """(a + r_1, lam_1 + r_1, ..., lam_n + r_1) with r_1 = -(a + sum lam)/(n+1)."""
    lam = weight(lam)
    r = -(Fraction(a) + sum(lam)) / (len(lam) + 1)
    return (a + r,) + tuple(x + r for x in lam)


def mono_height(alg: GlAlgebra, mono: tuple) -> int:
    return sum(alg.gens[r][0] - alg.gens[r][1] for r in mono)


def mono_weight_shift(alg: GlAlgebra, mono: tuple) -> tuple:
    """Weight added by a lowering monomial: each E_ij contributes e_i - e_j."""
    shift = [0] * alg.N
    for r in mono:
        i, j = alg.gens[r]
        shift[i - alg.base] += 1
        shift[j - alg.base] -= 1
    return tuple(shift)


def lowering_basis(alg: GlAlgebra, D: int) -> list[tuple]:
    """Lowering PBW monomials of height <= D, in a canonical order."""
    lows = [r for r in range(alg.n_lowering)]
    heights = [alg.gens[r][0] - alg.gens[r][1] for r in lows]
    out = []

    def rec(start, cur, h):
        out.append(tuple(cur))
        for k in range(start, len(lows)):
            if h + heights[k] <= D:
                cur.append(lows[k])
                rec(k, cur, h + heights[k])
                cur.pop()

    rec(0, [], 0)
    return sorted(out, key=lambda m: (mono_height(alg, m), m))


class VermaModule:
    """M(lambda) for gl(N) truncated at height D; vectors are ``{lowering monomial: coeff}``."""

    def __init__(self, alg: GlAlgebra, lam, D: int):
        if len(lam) != alg.N:
            raise ValueError(f"weight of length {len(lam)} for {alg}")
        self.alg = alg
        self.lam = weight(lam)
        self.D = D
        self._cache: dict = {}

    def basis(self) -> list[tuple]:
        return lowering_basis(self.alg, self.D)

    def highest(self) -> dict:
        return {(): Fraction(1)}

    def _act_mono(self, xm: tuple, m: tuple) -> dict:
        key = (xm, m)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        alg = self.alg
        out: dict = {}
        for pm, c in alg.mul_mon(xm, m).items():
            if pm and pm[-1] >= alg.first_raising:
                continue  # raising factors kill v_lambda
            k = len(pm)
            while k and alg.is_cartan(pm[k - 1]):
                k -= 1
            val = Fraction(c)
            for r in pm[k:]:
                val *= self.lam[r - alg.n_lowering]
            if val:
                add_into(out, pm[:k], val)
        self._cache[key] = out
        return out

    def act(self, x: UglElement, v: dict) -> dict:
        if x.alg is not self.alg:
            raise ValueError(f"element of {x.alg} acting on a module for {self.alg}")
        out: dict = {}
        for m, c in v.items():
            for xm, cx in x.terms.items():
                for pm, cc in self._act_mono(xm, m).items():
                    add_into(out, pm, c * cx * cc)
        for m in out:
            if mono_height(self.alg, m) > self.D:
                raise TruncationOverflow(f"result leaves height <= {self.D}")
        return out

    def weight_of(self, m: tuple) -> Weight:
        return tuple(l + s for l, s in zip(self.lam, mono_weight_shift(self.alg, m)))


def verma_act(x: UglElement, v: dict, lam, D: int) -> dict:
    return VermaModule(x.alg, lam, D).act(x, v)


class TensorModule:
    """F_a (x) M_n(lambda) as a gl(n+1)-module through rho, truncated at combined height D.

    Basis vectors are ``(e, m)`` with ``e`` the exponent of t_0^(a - |k|) t^k
    and ``m`` a lowering monomial of gl(n); t_i contributes height i.
    """

    def __init__(self, n: int, a: int, lam, D: int):
        self.n = n
        self.a = a
        self.D = D
        self.verma = VermaModule(gl_n(n), lam, D)
        self._rho_cache: dict = {}

    def height(self, key) -> int:
        e, m = key
        return sum(i * k for i, k in enumerate(e)) + mono_height(self.verma.alg, m)

    def basis(self) -> list:
        n, D = self.n, self.D
        out = []
        for ks in product(range(D + 1), repeat=n):
            h = sum((i + 1) * k for i, k in enumerate(ks))
            if h > D:
                continue
            e = (self.a - sum(ks),) + ks
            for m in lowering_basis(self.verma.alg, D - h):
                out.append((e, m))
        return sorted(out, key=lambda key: (self.height(key), key))

    def highest(self) -> dict:
        return {((self.a,) + (0,) * self.n, ()): Fraction(1)}

    def _rho(self, x: UglElement):
        hit = self._rho_cache.get(x)
        if hit is None:
            hit = self._rho_cache[x] = rho(x)
        return hit

    def act(self, x: UglElement, v: dict) -> dict:
        R = self._rho(x)
        out: dict = {}
        for (e, m), c in v.items():
            for (d, u), cr in R.terms.items():
                cc, f = apply_dmon(d, e)
                if not cc:
                    continue
                for m2, cv in self.verma._act_mono(u, m).items():
                    add_into(out, (f, m2), c * cr * cc * cv)
        for key in out:
            if self.height(key) > self.D:
                raise TruncationOverflow(f"result leaves combined height <= {self.D}")
        return out

    def weight_of(self, key) -> Weight:
        """Bookkeeping weight: (e_0 + r_1, e_i + (lam + shift of m)_i + r_1)."""
        e, m = key
        lam = self.verma.lam
        r = -(Fraction(self.a) + sum(lam)) / (self.n + 1)
        shift = mono_weight_shift(self.verma.alg, m)
        return (e[0] + r,) + tuple(e[i + 1] + lam[i] + shift[i] + r for i in range(self.n))


def tensor_act(x: UglElement, v: dict, n: int, a: int, lam, D: int) -> dict:
    return TensorModule(n, a, lam, D).act(x, v)


def hc_scalar(z: UglElement, lam) -> Fraction:
    """ev at lam + delta of the Harish-Chandra image, delta = (0, -1, -2, ...)."""
    p = chi(z).poly
    point = [Fraction(l) - pos for pos, l in enumerate(lam)]
    return ev_point(p, point)


def central_scalars(n: int, a: int, lam, kmax: int) -> dict[int, Fraction]:
    lt = lambda_tilde(a, lam)
    big = gl_n1(n)
    return {k: hc_scalar(gelfand_G(big, k), lt) for k in range(1, kmax + 1)}


def verify_central_character(n: int, a: int, lam, kmax: int, D: int) -> Verdict:
    """G_k acts on every basis vector of M(a,lam) and of M_{n+1}(lambda~) as the Harish-Chandra scalar."""
    if D < 1:
        raise ValueError("D must be at least 1")
    lam = weight(lam)
    lt = lambda_tilde(a, lam)
    scalars = central_scalars(n, a, lam, kmax)
    big = gl_n1(n)
    tmod = TensorModule(n, a, lam, D)
    vmod = VermaModule(big, lt, D)
    for k in range(1, kmax + 1):
        G = gelfand_G(big, k)
        s = scalars[k]
        for mod, label in ((tmod, "M(a,lam)"), (vmod, "M(lambda~)")):
            for b in mod.basis():
                got = mod.act(G, {b: Fraction(1)})
                want = {b: s} if s else {}
                if got != want:
                    return fail(f"k={k} on {label} basis vector {b}: got {got}, expected {s}")
    return PASS


def character_compare(n: int, a: int, lam, D: int, check_action: bool = True) -> Verdict:
    """Weight multiplicities of M(a,lam) and M_{n+1}(lambda~), both truncated at height D."""
    lam = weight(lam)
    tmod = TensorModule(n, a, lam, D)
    vmod = VermaModule(gl_n1(n), lambda_tilde(a, lam), D)
    left = Counter(tmod.weight_of(b) for b in tmod.basis())
    right = Counter(vmod.weight_of(m) for m in vmod.basis())
    if left != right:
        diff = (left - right) + (right - left)
        return fail(f"multiplicities differ at {sorted(diff)[0]}")
    if check_action:
        big = gl_n1(n)
        for b in tmod.basis():
            w = tmod.weight_of(b)
            for p, i in enumerate(big.indices):
                got = tmod.act(big.E(i, i), {b: Fraction(1)})
                if got != ({b: w[p]} if w[p] else {}):
                    return fail(f"E[{i},{i}] on {b} is not the bookkeeping weight {w[p]}")
    return PASS


def multiplicity_table(n: int, a: int, lam, D: int) -> dict:
    tmod = TensorModule(n, a, lam, D)
    return dict(Counter(tmod.weight_of(b) for b in tmod.basis()))
