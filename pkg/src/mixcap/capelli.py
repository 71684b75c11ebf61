"""Capelli determinants, their minors, and the identities they satisfy under rho."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .arith import LaurentTail, series_div, series_mul
from .dops import dop, euler_power, t_over_t0
from .homs import rho
from .tensor import TensorElement, dpart, is_central_tensor, r1, r2, tensor, upart
from .tpoly import NcMatrix, TPoly, column_det, matrix_substitute
from .ugl import GlAlgebra, gl_n, gl_n1, is_central
from .verdict import PASS, Verdict, fail

VARIANTS = ("std", "M", "U")


def e_matrix(alg: GlAlgebra, var: str = "T", transpose: bool = False) -> NcMatrix:
    """The matrix of generators (entry (i,j) is E_ij) with TPoly entries."""
    z = alg.zero()
    idx = alg.indices
    rows = [[TPoly.const(alg.E(j, i) if transpose else alg.E(i, j), z, var) for j in idx] for i in idx]
    return NcMatrix(rows)


def capelli_matrix(alg: GlAlgebra, var: str = "T") -> NcMatrix:
    """E - diag(T, T+1, ..., T+N-1)."""
    T = TPoly.gen(alg.zero(), var)
    A = e_matrix(alg, var)
    for p in range(alg.N):
        A.rows[p][p] = A.rows[p][p] - T - p
    return A


@lru_cache(maxsize=None)
def _capelli_std(alg: GlAlgebra, signed: bool, var: str) -> TPoly:
    return column_det(capelli_matrix(alg, var), signed=signed)


def capelli(alg: GlAlgebra, variant: str = "std", signed: bool = True, var: str = "T") -> TPoly:
    """C_N(T); the M and U variants satisfy C(T) = C^M(-T) = C^U(T + N - 1)."""
    std = _capelli_std(alg, signed, var)
    if variant == "std":
        return std
    if variant == "M":
        return std.scale_var(-1)
    if variant == "U":
        return std.shift(-(alg.N - 1))
    raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")


def capelli_minor(alg: GlAlgebra, i: int, j: int, signed: bool = True, var: str = "T") -> TPoly:
    """Determinant of the shifted E-matrix whose column j is replaced by the unit vector e_i.

    Diagonal entries before column j are shifted by T + pos + 1, those after by T + pos.
    """
    if i not in alg.indices or j not in alg.indices:
        raise IndexError(f"minor ({i},{j}) outside {alg}")
    z = alg.zero()
    T = TPoly.gen(z, var)
    pi, pj = i - alg.base, j - alg.base
    A = e_matrix(alg, var)
    for p in range(alg.N):
        A.rows[p][p] = A.rows[p][p] - T - (p + 1 if p < pj else p)
    for p in range(alg.N):
        A.rows[p][pj] = TPoly.const(1 if p == pi else 0, z, var)
    return column_det(A, signed=signed)


def minor_matrix(alg: GlAlgebra, signed: bool = True, var: str = "T") -> NcMatrix:
    idx = alg.indices
    return NcMatrix([[capelli_minor(alg, i, j, signed, var) for j in idx] for i in idx])


def verify_minor_identities(n: int, signed: bool = True) -> Verdict:
    """(E^t - T)M = M(E^t - T) = C(T) and M^t(E - T - N) = (E - T - N)M^t = C(T+1), for N = n, n+1."""
    for alg in (gl_n(n), gl_n1(n)):
        N = alg.N
        T = TPoly.gen(alg.zero())
        M = minor_matrix(alg, signed)
        Mt = M.transpose()
        Et = e_matrix(alg, transpose=True).add_diagonal(-T)
        Es = e_matrix(alg).add_diagonal(-T - N)
        C = capelli(alg, signed=signed)
        C1 = C.shift(1)
        checks = [
            ("(E^t-T)M", Et @ M, C),
            ("M(E^t-T)", M @ Et, C),
            ("M^t(E-T-N)", Mt @ Es, C1),
            ("(E-T-N)M^t", Es @ Mt, C1),
        ]
        for name, lhs, val in checks:
            if not lhs.is_scalar_matrix(val):
                return fail(f"gl({N}) {name} is not C*I")
    return PASS


# --------------------------------------------------------------------------
# under rho
# --------------------------------------------------------------------------


def _tensor_zero(n: int) -> TensorElement:
    return TensorElement(n)


@lru_cache(maxsize=None)
def rho_capelli(n: int) -> TPoly:
    """C_rho(T) = sum_k rho(c_k) T^k where C_{n+1}(T) = sum_k c_k T^k."""
    return capelli(gl_n1(n)).map_coeffs(rho, _tensor_zero(n))


def lift_gl_n(p: TPoly, n: int) -> TPoly:
    """Coefficientwise 1 (x) c for a TPoly over U(gl(n))."""
    return p.map_coeffs(lambda c: upart(c, n), _tensor_zero(n))


def euler_t(n: int) -> TensorElement:
    return dpart(euler_power(n, 1))


def rho_entry_matrix(n: int) -> NcMatrix:
    """The matrix whose column determinant is C_rho(T + R_1), written entry by entry."""
    g = gl_n(n)
    z = _tensor_zero(n)
    T = TPoly.gen(z)
    rows = []
    for a in range(n + 1):
        row = []
        for b in range(n + 1):
            e = dpart(dop(n, t={a: 1}, d={b: 1}))
            if a > 0 and b > 0:
                e = e + upart(g.E(a, b), n)
            if a > 0 and b == 0:
                for i in range(1, n + 1):
                    e = e - tensor(t_over_t0(n, i), g.E(a, i), n)
            entry = TPoly.const(e, z)
            if a == b:
                entry = entry - T - a
            row.append(entry)
        rows.append(row)
    return NcMatrix(rows)


def verify_rho_capelli(n: int, entrywise: bool | None = None) -> Verdict:
    """C_rho(T + R_1) = (Euler - T) C_n(T + 1) and C_rho(Euler + R_1) = 0."""
    z = _tensor_zero(n)
    T = TPoly.gen(z)
    C_rho = rho_capelli(n)
    lhs = C_rho.shift(r1(n))
    rhs = (TPoly.const(euler_t(n), z) - T) * lift_gl_n(capelli(gl_n(n)), n).shift(1)
    if lhs != rhs:
        for k in sorted(set(lhs.coeffs) | set(rhs.coeffs)):
            if lhs.coeff(k) != rhs.coeff(k):
                return fail(f"T^{k}: C_rho(T+R_1) has {lhs.coeff(k)}; (E-T)C_n(T+1) has {rhs.coeff(k)}")
    if C_rho.shift(r1(n)).shift(-r1(n)) != C_rho:
        return fail("shifting by R_1 and back does not recover C_rho")
    root = C_rho.evaluate(euler_t(n) + r1(n))
    if root:
        return fail(f"C_rho(E + R_1) = {root}")
    if entrywise is None:
        entrywise = n == 2
    if entrywise:
        det = column_det(rho_entry_matrix(n))
        if det != lhs:
            return fail("column determinant of the entrywise matrix differs from C_rho(T+R_1)")
    return PASS


# --------------------------------------------------------------------------
# Cayley-Hamilton
# --------------------------------------------------------------------------


def _tensor_e_matrix(n: int, transpose: bool = False) -> NcMatrix:
    g = gl_n(n)
    idx = g.indices
    return NcMatrix([[upart(g.E(j, i) if transpose else g.E(i, j), n) for j in idx] for i in idx])


def _ugl_e_matrix(alg: GlAlgebra, transpose: bool = False) -> NcMatrix:
    idx = alg.indices
    return NcMatrix([[alg.E(j, i) if transpose else alg.E(i, j) for j in idx] for i in idx])


def verify_cayley_hamilton(n: int) -> Verdict:
    """C_rho(E_n + R_1 - n) = C_rho(E_n^t - 1 + R_1) = 0 and C_n^M(-E_n + n - 1) = C_n^M(-E_n^t) = 0."""
    C_rho = rho_capelli(n)
    R1 = r1(n)
    for name, A in (
        ("C_rho(E + R_1 - n)", _tensor_e_matrix(n).add_diagonal(R1 - n)),
        ("C_rho(E^t - 1 + R_1)", _tensor_e_matrix(n, True).add_diagonal(R1 - 1)),
    ):
        val = matrix_substitute(C_rho, A, is_central_tensor)
        if not val.is_scalar_matrix(0):
            return fail(f"{name} != 0")
    g = gl_n(n)
    CM = capelli(g, "M")
    for name, A in (
        ("C^M(-E + n - 1)", _ugl_e_matrix(g).map(lambda x: -x).add_diagonal(n - 1)),
        ("C^M(-E^t)", _ugl_e_matrix(g, True).map(lambda x: -x)),
    ):
        val = matrix_substitute(CM, A, is_central)
        if not val.is_scalar_matrix(0):
            return fail(f"{name} != 0")
    return PASS


# --------------------------------------------------------------------------
# Newton series
# --------------------------------------------------------------------------


def _assert_commuting(elems) -> None:
    for a, b in combinations(elems, 2):
        if a * b != b * a:
            raise ArithmeticError("series coefficients do not commute")


def _ratio(num: TPoly, den: TPoly, K: int) -> LaurentTail:
    _assert_commuting(list(num.coeffs.values()) + list(den.coeffs.values()))
    cutoff = -K - 2 * max(num.degree, den.degree, 1)
    return series_div(num.tail(cutoff), den.tail(cutoff), K)


def newton_lhs(alg: GlAlgebra, K: int, signed: bool = True) -> LaurentTail:
    """(C(T-N+1) - C(T-N)) / C(T-N+1) to relative order K."""
    N = alg.N
    C = capelli(alg, signed=signed)
    a = C.shift(-(N - 1))
    return _ratio(a - C.shift(-N), a, K)


def gelfand_tail(alg: GlAlgebra, K: int) -> LaurentTail:
    """sum_{k=0..K} G_k T^(-1-k) with G_0 = N."""
    from .gelfand import gelfand_G

    return LaurentTail(-1, K, {k: gelfand_G(alg, k) for k in range(K + 1)})


def _first_diff(a: LaurentTail, b: LaurentTail) -> str:
    cutoff = max(a.cutoff, b.cutoff)
    top = max(a.lead, b.lead)
    for p in range(top, cutoff - 1, -1):
        if a.coefficient(p) != b.coefficient(p):
            return f"T^{p}: {a.coefficient(p)} vs {b.coefficient(p)}"
    return "no difference"


def verify_newton(N: int, K: int) -> Verdict:
    if K < 1:
        raise ValueError("K must be at least 1")
    alg = gl_n(N)
    lhs = newton_lhs(alg, K)
    rhs = gelfand_tail(alg, K)
    if lhs != rhs:
        return fail(_first_diff(lhs, rhs))
    return PASS


def _inverse_linear(c, K: int, zero) -> LaurentTail:
    """1/(T - c) = sum_k c^k T^(-1-k) for central c."""
    coeffs = {}
    p = zero + 1
    for k in range(K + 1):
        coeffs[k] = p
        p = p * c
    return LaurentTail(-1, K, coeffs)


def verify_rho_newton(n: int, K: int) -> Verdict:
    """C_rho(T-n-1)/C_rho(T-n) = (1 - 1/(T-R_1-R_2)) C_n(T-R_1-n)/C_n(T-R_1-n+1) = 1 - sum rho(G_k) T^(-1-k)."""
    from .gelfand import gelfand_G

    if K < 1:
        raise ValueError("K must be at least 1")
    z = _tensor_zero(n)
    one = LaurentTail(0, K + 1, {0: z + 1})
    C_rho = rho_capelli(n)
    lhs = _ratio(C_rho.shift(-n - 1), C_rho.shift(-n), K + 1)
    R1 = r1(n)
    Cn = lift_gl_n(capelli(gl_n(n)), n)
    ratio = _ratio(Cn.shift(-R1 - n), Cn.shift(-R1 - n + 1), K + 1)
    first = one - _inverse_linear(R1 + r2(n), K, z)
    mid = series_mul(first, ratio, K + 1)
    if lhs != mid:
        return fail("C_rho ratio vs factored form: " + _first_diff(lhs, mid))
    big = gl_n1(n)
    g_tail = LaurentTail(-1, K, {k: rho(gelfand_G(big, k)) if k else z + (n + 1) for k in range(K + 1)})
    newton = one - g_tail
    if lhs != newton:
        return fail("C_rho ratio vs 1 - sum rho(G_k) T^(-1-k): " + _first_diff(lhs, newton))
    return PASS
