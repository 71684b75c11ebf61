"""U(gl(N)) in a fixed PBW basis.

Generators are ranked lowering (i > j) < Cartan (i == i) < raising (i < j),
lexicographically inside each block.  A PBW monomial is a nondecreasing
tuple of ranks.  Because every monomial reads lowering-Cartan-raising,
dropping monomials with a non-Cartan factor is the Harish-Chandra projection.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .arith import CPoly, poly_substitute
from .sparse import SparseElement, add_into, fmt_coeff


class RankMismatch(ValueError):
    pass


class GlAlgebra:
    """gl(N) with matrix indices ``base .. base+N-1`` and its PBW tables."""

    def __init__(self, N: int, base: int):
        if N < 1:
            raise ValueError("N must be positive")
        self.N = N
        self.base = base
        idx = range(base, base + N)
        self.indices = tuple(idx)
        lowering = sorted((i, j) for i in idx for j in idx if i > j)
        cartan = [(i, i) for i in idx]
        raising = sorted((i, j) for i in idx for j in idx if i < j)
        self.gens = tuple(lowering + cartan + raising)
        self.rank = {g: r for r, g in enumerate(self.gens)}
        self.n_lowering = len(lowering)
        self.cartan_ranks = tuple(self.rank[(i, i)] for i in idx)
        self.first_raising = self.n_lowering + N
        self.bracket = [[self._bracket(g, h) for h in self.gens] for g in self.gens]
        self._mg: dict = {}
        self._mm: dict = {}

    def __repr__(self):
        return f"gl({self.N}; {self.base}..{self.base + self.N - 1})"

    def _bracket(self, g, h):
        (a, b), (c, d) = g, h
        out: dict = {}
        if b == c:
            add_into(out, self.rank[(a, d)], 1)
        if d == a:
            add_into(out, self.rank[(c, b)], -1)
        return tuple(out.items())

    def is_cartan(self, r: int) -> bool:
        return self.n_lowering <= r < self.first_raising

    def is_lowering(self, r: int) -> bool:
        return r < self.n_lowering

    # ---- normal ordering ---------------------------------------------------
    def mul_mon_gen(self, m: tuple, g: int) -> dict:
        """PBW form of ``m * E_g`` (adjacent-transposition rewriting)."""
        key = (m, g)
        hit = self._mg.get(key)
        if hit is not None:
            return hit
        if not m or m[-1] <= g:
            res = {m + (g,): 1}
        else:
            h = m[-1]
            rest = m[:-1]
            res = {}
            # rest * E_h * E_g = (rest * E_g) * E_h + rest * [E_h, E_g]
            for m2, c2 in self.mul_mon_gen(rest, g).items():
                for m3, c3 in self.mul_mon_gen(m2, h).items():
                    add_into(res, m3, c2 * c3)
            for r, c in self.bracket[h][g]:
                for m3, c3 in self.mul_mon_gen(rest, r).items():
                    add_into(res, m3, c * c3)
        self._mg[key] = res
        return res

    def mul_mon(self, m1: tuple, m2: tuple) -> dict:
        if not m1:
            return {m2: 1}
        if not m2 or m1[-1] <= m2[0]:
            return {m1 + m2: 1}
        key = (m1, m2)
        hit = self._mm.get(key)
        if hit is not None:
            return hit
        cur = {m1: 1}
        for g in m2:
            nxt: dict = {}
            for m, c in cur.items():
                for m3, c3 in self.mul_mon_gen(m, g).items():
                    add_into(nxt, m3, c * c3)
            cur = nxt
        self._mm[key] = cur
        return cur

    # ---- element constructors ----------------------------------------------
    def E(self, i: int, j: int) -> "UglElement":
        return UglElement(self, {(self.rank[(i, j)],): 1})

    def one(self) -> "UglElement":
        return UglElement(self, {(): 1})

    def zero(self) -> "UglElement":
        return UglElement(self, {})

    def G1(self) -> "UglElement":
        return sum((self.E(i, i) for i in self.indices), self.zero())

    def word(self, pairs) -> "UglElement":
        """Product ``E_{p0} E_{p1} ...`` of a sequence of index pairs."""
        out = self.one()
        for p in pairs:
            out = out * self.E(*p)
        return out

    def embed(self, x: "UglElement") -> "UglElement":
        """Relabel an element of a sub-gl whose indices lie inside ours."""
        if x.alg is self:
            return x
        if not set(x.alg.indices) <= set(self.indices):
            raise RankMismatch(f"cannot embed {x.alg} into {self}")
        # the induced order on a sub-index-set is the sub-algebra's order
        tr = [self.rank[g] for g in x.alg.gens]
        return UglElement(self, {tuple(tr[r] for r in m): c for m, c in x.terms.items()})


@lru_cache(maxsize=None)
def gl(N: int, base: int = 1) -> GlAlgebra:
    return GlAlgebra(N, base)


def gl_n(n: int) -> GlAlgebra:
    """gl(n) with indices 1..n."""
    return gl(n, 1)


def gl_n1(n: int) -> GlAlgebra:
    """gl(n+1) with indices 0..n."""
    return gl(n + 1, 0)


class UglElement(SparseElement):
    __slots__ = ("alg",)

    def __init__(self, alg: GlAlgebra, terms=None):
        self.alg = alg
        super().__init__(terms)

    def _unit_monomial(self):
        return ()

    def _compatible(self, other):
        return isinstance(other, UglElement) and other.alg is self.alg

    def _coerce(self, other):
        if isinstance(other, UglElement) and other.alg is not self.alg:
            raise RankMismatch(f"{self.alg} vs {other.alg}")
        return super()._coerce(other)

    def _with_terms(self, terms):
        return UglElement(self.alg, terms)

    def _mul_monomials(self, m1, m2):
        return self.alg.mul_mon(m1, m2)

    def __mul__(self, other):
        if isinstance(other, UglElement):
            if other.alg is not self.alg:
                raise RankMismatch(f"{self.alg} vs {other.alg}")
            mul = self.alg.mul_mon
            acc: dict = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    for m, c in mul(m1, m2).items():
                        add_into(acc, m, c1 * c2 * c)
            return UglElement(self.alg, acc)
        return super().__mul__(other)

    def _sort_key(self, mono):
        return (len(mono), mono)

    def _format_term(self, mono, coeff):
        parts = [fmt_coeff(coeff)]
        parts.extend(format_monomial(self.alg, mono))
        return "*".join(parts)

    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=-1)


def format_monomial(alg: GlAlgebra, mono: tuple) -> list[str]:
    out = []
    i = 0
    while i < len(mono):
        j = i
        while j < len(mono) and mono[j] == mono[i]:
            j += 1
        a, b = alg.gens[mono[i]]
        k = j - i
        out.append(f"E[{a},{b}]" + (f"^{k}" if k > 1 else ""))
        i = j
    return out


def pbw_mul(x: UglElement, y: UglElement) -> UglElement:
    return x * y


def commutator(x, y):
    return x * y - y * x


def is_central(z: UglElement) -> bool:
    """Test ``[z, E]`` for the Chevalley generators and the whole Cartan."""
    alg = z.alg
    idx = alg.indices
    tests = [alg.E(i, i) for i in idx]
    for i, j in zip(idx, idx[1:]):
        tests.append(alg.E(i, j))
        tests.append(alg.E(j, i))
    return all(not commutator(z, g) for g in tests)


# --------------------------------------------------------------------------
# sl(N) + G_1 basis
# --------------------------------------------------------------------------


def _cartan_vars(alg):
    e = [f"e{p}" for p in range(alg.N)]
    h = [f"h{p}" for p in range(alg.N - 1)]
    return e, h


@lru_cache(maxsize=None)
def _diag_in_adapted(alg: GlAlgebra) -> dict:
    """``E_pp = G_1/N + sum_{j>=p} H_j - (1/N) sum_j (j+1) H_j`` for each position p."""
    N = alg.N
    _, h = _cartan_vars(alg)
    vars_ = h + ["g"]
    out = {}
    for p in range(N):
        poly = CPoly.var("g", vars_) * Fraction(1, N)
        for j in range(N - 1):
            c = (1 if j >= p else 0) - Fraction(j + 1, N)
            if c:
                poly = poly + CPoly.var(f"h{j}", vars_) * c
        out[f"e{p}"] = poly
    return out


@lru_cache(maxsize=None)
def _adapted_in_diag(alg: GlAlgebra) -> dict:
    N = alg.N
    e, _ = _cartan_vars(alg)
    out = {}
    for j in range(N - 1):
        out[f"h{j}"] = CPoly.var(f"e{j}", e) - CPoly.var(f"e{j + 1}", e)
    out["g"] = sum((CPoly.var(v, e) for v in e), CPoly(e))
    return out


class AdaptedElement(SparseElement):
    """Element over the basis {off-diagonal E_ij, H_p = E_pp - E_{p+1,p+1}, G_1}.

    Monomial key: ``(lowering ranks, H exponents, raising ranks, G_1 exponent)``.
    """

    __slots__ = ("alg",)

    def __init__(self, alg: GlAlgebra, terms=None):
        self.alg = alg
        super().__init__(terms)

    def _unit_monomial(self):
        return ((), (0,) * (self.alg.N - 1), (), 0)

    def _compatible(self, other):
        return isinstance(other, AdaptedElement) and other.alg is self.alg

    def _with_terms(self, terms):
        return AdaptedElement(self.alg, terms)

    def _mul_monomials(self, m1, m2):
        raise NotImplementedError("convert back with from_adapted() to multiply")

    def _sort_key(self, mono):
        low, hexp, rai, g = mono
        return (len(low) + sum(hexp) + len(rai) + g, mono)

    def _format_term(self, mono, coeff):
        low, hexp, rai, g = mono
        parts = [fmt_coeff(coeff)]
        parts += format_monomial(self.alg, low)
        parts += [f"H[{self.alg.base + p}]" + (f"^{k}" if k > 1 else "") for p, k in enumerate(hexp) if k]
        parts += format_monomial(self.alg, rai)
        if g:
            parts.append("G1" + (f"^{g}" if g > 1 else ""))
        return "*".join(parts)

    def g1_free(self) -> bool:
        return all(m[3] == 0 for m in self.terms)


def _split(alg: GlAlgebra, mono: tuple):
    low = tuple(r for r in mono if alg.is_lowering(r))
    cart = [0] * alg.N
    for r in mono:
        if alg.is_cartan(r):
            cart[r - alg.n_lowering] += 1
    rai = tuple(r for r in mono if r >= alg.first_raising)
    return low, tuple(cart), rai


def to_adapted(x: UglElement) -> AdaptedElement:
    alg = x.alg
    e, _ = _cartan_vars(alg)
    sub = _diag_in_adapted(alg)
    cache: dict = {}
    acc: dict = {}
    for mono, c in x.terms.items():
        low, cart, rai = _split(alg, mono)
        poly = cache.get(cart)
        if poly is None:
            term = CPoly(e, {cart: 1})
            poly = poly_substitute(term, sub).with_vars(list(sub["e0"].vars))
            cache[cart] = poly
        vs = poly.vars
        gi = vs.index("g")
        hi = [vs.index(f"h{j}") for j in range(alg.N - 1)]
        for ex, cc in poly.terms.items():
            key = (low, tuple(ex[i] for i in hi), rai, ex[gi])
            add_into(acc, key, c * cc)
    return AdaptedElement(alg, acc)


def from_adapted(y: AdaptedElement) -> UglElement:
    alg = y.alg
    _, h = _cartan_vars(alg)
    sub = _adapted_in_diag(alg)
    e_vars = [f"e{p}" for p in range(alg.N)]
    acc: dict = {}
    for (low, hexp, rai, g), c in y.terms.items():
        # natural variable order puts g before h0
        poly = poly_substitute(CPoly(h + ["g"], {(g,) + hexp: 1}), sub).with_vars(e_vars)
        ei = [poly.vars.index(v) for v in e_vars]
        for ex, cc in poly.terms.items():
            cart = tuple(r for p, i in enumerate(ei) for r in [alg.cartan_ranks[p]] * ex[i])
            add_into(acc, low + cart + rai, c * cc)
    return UglElement(alg, acc)


def in_g1_ideal(x: UglElement) -> bool:
    """Membership in the two-sided ideal generated by the central G_1."""
    return all(m[3] >= 1 for m in to_adapted(x).terms)
