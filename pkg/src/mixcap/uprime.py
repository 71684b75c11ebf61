"""U' = U(gl(n+1))[X] / (C_{n+1}(X)): canonical remainders, the trace projection, and cleared u-identities."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .capelli import capelli, capelli_minor
from .homs import pi_g
from .tpoly import TPoly
from .ugl import UglElement, gl_n, gl_n1, in_g1_ideal
from .verdict import PASS, Verdict, fail

VAR = "X"


def capelli_X(n: int) -> TPoly:
    return capelli(gl_n1(n), var=VAR)


def reduce_mod_capelli(p: TPoly, n: int) -> tuple[TPoly, TPoly]:
    """Return ``(q, r)`` with ``p = q C_{n+1}(X) + r`` and ``deg r <= n``."""
    C = capelli_X(n)
    top = n + 1
    inv_lead = Fraction(1) / C.coeff(top).scalar_value()
    zero = gl_n1(n).zero()
    q = TPoly({}, zero, VAR)
    r = p
    while r.degree >= top:
        d = r.degree
        term = TPoly({d - top: r.coeff(d) * inv_lead}, zero, VAR)
        q = q + term
        r = r - term * C
    if q * C + r != p:
        raise ArithmeticError("division by C_{n+1}(X) failed to reconstruct its input")
    return q, r


@dataclass(frozen=True, eq=False)
class UPrimeElement:
    """Canonical representative ``sum_{i<=n} w_i X^i``."""

    rep: TPoly
    n: int

    @classmethod
    def of(cls, p: TPoly, n: int) -> "UPrimeElement":
        return cls(reduce_mod_capelli(p, n)[1], n)

    @classmethod
    def from_ugl(cls, w: UglElement, n: int) -> "UPrimeElement":
        return cls(TPoly.const(w, gl_n1(n).zero(), VAR), n)

    @classmethod
    def X(cls, n: int) -> "UPrimeElement":
        return cls.of(TPoly.gen(gl_n1(n).zero(), VAR), n)

    def __add__(self, other: "UPrimeElement") -> "UPrimeElement":
        return UPrimeElement(self.rep + other.rep, self.n)

    def __sub__(self, other: "UPrimeElement") -> "UPrimeElement":
        return UPrimeElement(self.rep - other.rep, self.n)

    def __mul__(self, other: "UPrimeElement") -> "UPrimeElement":
        return uprime_mul(self, other)

    def __eq__(self, other):
        return isinstance(other, UPrimeElement) and self.n == other.n and self.rep == other.rep

    def __bool__(self):
        return bool(self.rep)

    def __str__(self):
        return str(self.rep)


def uprime_mul(x: UPrimeElement, y: UPrimeElement) -> UPrimeElement:
    return UPrimeElement.of(x.rep * y.rep, x.n)


def _pi_g_poly(p: TPoly, n: int) -> TPoly:
    big = gl_n1(n)
    return p.map_coeffs(pi_g, big.zero()).shift(big.G1() * Fraction(-1, n + 1))


def pi_g_prime(x: UPrimeElement) -> UPrimeElement:
    """Coefficients through pi_g, X -> X - G_1/(n+1)."""
    return UPrimeElement.of(_pi_g_poly(x.rep, x.n), x.n)


def random_ugl(n: int, rng: random.Random, max_deg: int = 2, n_terms: int = 3) -> UglElement:
    big = gl_n1(n)
    out = big.zero()
    for _ in range(n_terms):
        word = [rng.choice(big.gens) for _ in range(rng.randint(0, max_deg))]
        out = out + big.word(word) * rng.randint(-3, 3)
    return out


def random_xpoly(n: int, rng: random.Random, max_x: int, max_deg: int = 2) -> TPoly:
    big = gl_n1(n)
    return TPoly({k: random_ugl(n, rng, max_deg) for k in range(max_x + 1)}, big.zero(), VAR)


def verify_uniqueness(n: int, seed: int = 0, samples: int = 100) -> Verdict:
    """Round trips for the canonical form: reconstruction, degree bound, idempotence, independence of the C-multiple."""
    rng = random.Random(seed)
    C = capelli_X(n)
    for s in range(samples):
        p = random_xpoly(n, rng, rng.randint(0, 2 * n + 2), max_deg=1)
        q, r = reduce_mod_capelli(p, n)
        if r.degree > n:
            return fail(f"sample {s}: remainder of degree {r.degree}")
        if reduce_mod_capelli(r, n) != (TPoly({}, r.zero, VAR), r):
            return fail(f"sample {s}: remainder not fixed by reduction")
        w = random_xpoly(n, rng, 1, max_deg=1)
        if reduce_mod_capelli(r + w * C, n)[1] != r:
            return fail(f"sample {s}: adding a multiple of C changes the remainder")
    return PASS


def verify_pi_g_prime(n: int, seed: int = 0, samples: int = 10) -> Verdict:
    """(i) pi_g'(C_{n+1}(X)) = C_{n+1}(X); (ii) idempotence; (iii) x - pi_g'(x) lies in (G_1)."""
    C = capelli_X(n)
    if _pi_g_poly(C, n) != C:
        return fail("clause (i): pi_g'(C_{n+1}(X)) != C_{n+1}(X)")
    rng = random.Random(seed)
    for s in range(samples):
        x = UPrimeElement.of(random_xpoly(n, rng, n), n)
        px = pi_g_prime(x)
        if pi_g_prime(px) != px:
            return fail(f"clause (ii): sample {s} not idempotent")
        diff = (x - px).rep
        for k, c in diff.coeffs.items():
            if not in_g1_ideal(c):
                return fail(f"clause (iii): sample {s}, X^{k} coefficient {c} not in (G_1)")
    return PASS


def uhat(n: int) -> list[TPoly]:
    """The cleared row -[E_10, ..., E_n0] M_n(X), entries 1..n."""
    big, small = gl_n1(n), gl_n(n)
    zero = big.zero()
    row = []
    for j in range(1, n + 1):
        acc = TPoly({}, zero, VAR)
        for i in range(1, n + 1):
            m = capelli_minor(small, i, j, var=VAR).map_coeffs(big.embed, zero)
            acc = acc - big.E(i, 0) * m
        row.append(acc)
    return row


def verify_cleared_u_identity(n: int, drop_term: bool = False) -> Verdict:
    """sum_{a>0} u_a E_ia + E_i0 C_n(X) = u_i X for i = 1..n (u the cleared row)."""
    big = gl_n1(n)
    zero = big.zero()
    u = uhat(n)
    Cn = capelli(gl_n(n), var=VAR).map_coeffs(big.embed, zero)
    X = TPoly.gen(zero, VAR)
    for i in range(1, n + 1):
        lhs = TPoly({}, zero, VAR)
        for a in range(1, n + 1):
            lhs = lhs + u[a - 1] * big.E(i, a)
        if not drop_term:
            lhs = lhs + big.E(i, 0) * Cn
        rhs = u[i - 1] * X
        if lhs != rhs:
            return fail(f"i={i}: lhs - rhs = {lhs - rhs}")
    return PASS


def x_is_central(n: int) -> bool:
    X = UPrimeElement.X(n)
    big = gl_n1(n)
    for g in big.gens:
        e = UPrimeElement.from_ugl(big.E(*g), n)
        if X * e != e * X:
            return False
    return True
