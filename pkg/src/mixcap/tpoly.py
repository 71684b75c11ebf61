"""Polynomials in a central variable over a noncommutative ring, matrices of them, column determinants."""

from __future__ import annotations

from itertools import permutations
from typing import Callable

from .arith import LaurentTail, binomial_shift
from .sparse import SparseElement, is_scalar


class TPoly:
    """``sum_k coeffs[k] * T^k`` with ``T`` central and symbolic.

    ``zero`` is the zero of the coefficient ring; it fixes the ring so that
    constants and empty sums stay typed.
    """

    __slots__ = ("coeffs", "zero", "var")

    def __init__(self, coeffs: dict, zero: SparseElement, var: str = "T"):
        self.zero = zero
        self.var = var
        clean = {}
        for k, c in coeffs.items():
            if is_scalar(c):
                c = zero + c
            if c:
                clean[k] = c
        self.coeffs = clean

    @classmethod
    def const(cls, c, zero, var: str = "T") -> "TPoly":
        return cls({0: c}, zero, var)

    @classmethod
    def gen(cls, zero, var: str = "T") -> "TPoly":
        return cls({1: zero + 1}, zero, var)

    def _lift(self, other) -> "TPoly":
        if isinstance(other, TPoly):
            if other.var != self.var:
                raise ValueError(f"variables differ: {self.var} vs {other.var}")
            return other
        return TPoly({0: other}, self.zero, self.var)

    def __add__(self, other):
        other = self._lift(other)
        acc = dict(self.coeffs)
        for k, c in other.coeffs.items():
            acc[k] = acc[k] + c if k in acc else c
        return TPoly(acc, self.zero, self.var)

    __radd__ = __add__

    def __neg__(self):
        return TPoly({k: -c for k, c in self.coeffs.items()}, self.zero, self.var)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_scalar(other) or isinstance(other, SparseElement):
            return TPoly({k: c * other for k, c in self.coeffs.items()}, self.zero, self.var)
        other = self._lift(other)
        acc: dict = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                p = a * b
                acc[i + j] = acc[i + j] + p if i + j in acc else p
        return TPoly(acc, self.zero, self.var)

    def __rmul__(self, other):
        # left multiplication by a constant from the coefficient ring
        return TPoly({k: other * c for k, c in self.coeffs.items()}, self.zero, self.var)

    def __pow__(self, k: int):
        out = TPoly.const(1, self.zero, self.var)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, TPoly):
            other = self._lift(other)
        return (self - other).coeffs == {}

    def __bool__(self):
        return bool(self.coeffs)

    __hash__ = None

    @property
    def degree(self) -> int:
        return max(self.coeffs, default=-1)

    def coeff(self, k: int):
        return self.coeffs.get(k, self.zero)

    def shift(self, c) -> "TPoly":
        """``p(T + c)`` for central ``c`` (a scalar or ring element)."""
        return TPoly(binomial_shift(self.coeffs, c, self.zero + 1), self.zero, self.var)

    def scale_var(self, s) -> "TPoly":
        """``p(s*T)`` for a scalar ``s``."""
        return TPoly({k: c * (s ** k) for k, c in self.coeffs.items()}, self.zero, self.var)

    def evaluate(self, x):
        """``sum_k c_k x^k`` for central ``x``."""
        out = self.zero
        xp = self.zero + 1
        for k in range(self.degree + 1):
            if k in self.coeffs:
                out = out + self.coeffs[k] * xp
            xp = xp * x
        return out

    def map_coeffs(self, f: Callable, zero) -> "TPoly":
        return TPoly({k: f(c) for k, c in self.coeffs.items()}, zero, self.var)

    def tail(self, cutoff: int) -> LaurentTail:
        return LaurentTail.from_poly(self.coeffs, cutoff)

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"({c})*{self.var}^{k}" for k, c in sorted(self.coeffs.items(), reverse=True))

    def __repr__(self):
        return f"TPoly({self})"


class NcMatrix:
    """Square matrix over a (noncommutative) ring; products keep left-to-right order."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix is not square")
        self.rows = rows

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    @classmethod
    def identity(cls, size: int, one) -> "NcMatrix":
        zero = one * 0
        return cls([[one if i == j else zero for j in range(size)] for i in range(size)])

    def transpose(self) -> "NcMatrix":
        m = self.size
        return NcMatrix([[self.rows[j][i] for j in range(m)] for i in range(m)])

    def map(self, f) -> "NcMatrix":
        return NcMatrix([[f(x) for x in r] for r in self.rows])

    def add_diagonal(self, c) -> "NcMatrix":
        return NcMatrix([[x + c if i == j else x for j, x in enumerate(r)] for i, r in enumerate(self.rows)])

    def __add__(self, other: "NcMatrix") -> "NcMatrix":
        return NcMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "NcMatrix") -> "NcMatrix":
        return NcMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __matmul__(self, other: "NcMatrix") -> "NcMatrix":
        m = self.size
        if other.size != m:
            raise ValueError("size mismatch")
        out = []
        for i in range(m):
            row = []
            for j in range(m):
                acc = self.rows[i][0] * other.rows[0][j]
                for k in range(1, m):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            out.append(row)
        return NcMatrix(out)

    def scale_left(self, z) -> "NcMatrix":
        return self.map(lambda x: z * x)

    def is_scalar_matrix(self, value) -> bool:
        m = self.size
        return all(self.rows[i][j] == (value if i == j else 0) for i in range(m) for j in range(m))

    def first_difference(self, other: "NcMatrix"):
        for i, (r, s) in enumerate(zip(self.rows, other.rows)):
            for j, (a, b) in enumerate(zip(r, s)):
                if a != b:
                    return (i, j, a, b)
        return None


def column_det(A: NcMatrix, signed: bool = True):
    """``sum_sigma sgn(sigma) A[sigma(0),0] A[sigma(1),1] ... A[sigma(m-1),m-1]``.

    Evaluated column by column over subsets of used rows, so each product is
    formed left to right exactly as in the permutation expansion.  With
    ``signed=False`` the sign is dropped (kept only as a negative control).
    """
    m = A.size
    if m == 0:
        raise ValueError("empty matrix")
    partial = {0: None}
    for j in range(m):
        nxt: dict = {}
        for used, val in partial.items():
            for r in range(m):
                bit = 1 << r
                if used & bit:
                    continue
                term = A.rows[r][j] if val is None else val * A.rows[r][j]
                if signed and bin(used >> (r + 1)).count("1") % 2:
                    term = -term
                key = used | bit
                nxt[key] = nxt[key] + term if key in nxt else term
        partial = nxt
    return partial[(1 << m) - 1]


def column_det_naive(A: NcMatrix, signed: bool = True):
    """Literal permutation expansion; an oracle for :func:`column_det`."""
    m = A.size
    out = None
    for sigma in permutations(range(m)):
        term = A.rows[sigma[0]][0]
        for j in range(1, m):
            term = term * A.rows[sigma[j]][j]
        inv = sum(1 for a in range(m) for b in range(a + 1, m) if sigma[a] > sigma[b])
        if signed and inv % 2:
            term = -term
        out = term if out is None else out + term
    return out


def matrix_power(A: NcMatrix, k: int, one) -> NcMatrix:
    out = NcMatrix.identity(A.size, one)
    for _ in range(k):
        out = out @ A
    return out


def matrix_substitute(p: TPoly, A: NcMatrix, is_central: Callable | None = None) -> NcMatrix:
    """``sum_k z_k A^k`` with the central coefficients ``z_k`` applied on the left."""
    if is_central is not None:
        for k, z in p.coeffs.items():
            if not is_central(z):
                raise ValueError(f"coefficient of {p.var}^{k} is not central")
    one = p.zero + 1
    out = NcMatrix.identity(A.size, p.zero)
    power = NcMatrix.identity(A.size, one)
    for k in range(p.degree + 1):
        if k:
            power = power @ A
        if k in p.coeffs:
            out = out + power.scale_left(p.coeffs[k])
    return out
