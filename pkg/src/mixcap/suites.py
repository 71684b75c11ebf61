"""Suite registry and reports for the batch verifier."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

from . import __version__
from .verdict import PASS, Verdict, fail

SUITES = (
    "rho-hom",
    "diagram",
    "hc",
    "capelli",
    "newton",
    "cayley-hamilton",
    "gelfand",
    "appendix",
    "uprime",
    "modules",
)
FAULTS = ("rho-corrupt", "unsigned-det", "iota-plain")
DEFAULT_WEIGHT = (Fraction(1, 3), Fraction(-1, 5), Fraction(-2, 7), Fraction(3, 11))


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class SuiteSpec:
    name: str
    n: int = 1
    kmax: int = 3
    K: int = 4
    D: int = 3
    seed: int = 0
    fault: str | None = None

    def validate(self) -> None:
        if self.name not in SUITES + ("all",):
            raise UsageError(f"unknown suite {self.name!r}")
        if self.n < 1:
            raise UsageError("n must be at least 1")
        for label, v in (("kmax", self.kmax), ("series order", self.K), ("truncation degree", self.D)):
            if v < 1:
                raise UsageError(f"{label} must be at least 1")
        if self.fault is not None and self.fault not in FAULTS:
            raise UsageError(f"unknown fault {self.fault!r}")

    def params(self) -> dict:
        d = asdict(self)
        d.pop("name")
        if d["fault"] is None:
            d.pop("fault")
        return d


@dataclass
class CheckResult:
    name: str
    status: str
    witness: str | None
    ms: int


@dataclass
class Report:
    suite: str
    params: dict
    checks: list[CheckResult] = field(default_factory=list)
    version: str = __version__

    @property
    def overall(self) -> str:
        return "fail" if any(c.status == "fail" for c in self.checks) else "pass"

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "checks": [asdict(c) for c in sorted(self.checks, key=lambda c: c.name)],
            "overall": self.overall,
            "version": self.version,
        }


def _bool_check(ok: bool, witness: str) -> Verdict:
    return PASS if ok else fail(witness)


# --------------------------------------------------------------------------
# per-suite check lists; each entry is (name, thunk returning a Verdict)
# --------------------------------------------------------------------------


def _rho_hom(s: SuiteSpec):
    from .gelfand import gelfand_G
    from .homs import rho, rho_gen, verify_hom
    from .ugl import gl_n1

    gen = rho_gen
    if s.fault == "rho-corrupt":
        from .dops import t_over_t0
        from .tensor import tensor
        from .ugl import gl_n

        def gen(n, a, b):
            # flip the sign of the t_i/t_0 (x) E_ai part of E_a0
            img = rho_gen(n, a, b)
            if a > 0 and b == 0:
                for i in range(1, n + 1):
                    img = img + tensor(t_over_t0(n, i), gl_n(n).E(a, i), n) * 2
            return img

    def g1():
        z = rho(gelfand_G(gl_n1(s.n), 1))
        return _bool_check(not z, f"rho(G_1) = {z}")

    return [
        (f"rho-hom/homomorphism n={s.n}", lambda: verify_hom(s.n, gen)),
        (f"rho-hom/rho(G_1)=0 n={s.n}", g1),
    ]


def _diagram(s: SuiteSpec):
    from .homs import iota_g, plain_inclusion, verify_diagram

    iota = plain_inclusion if s.fault == "iota-plain" else iota_g
    return [(f"diagram/gamma-rho_s-pi_g n={s.n}", lambda: verify_diagram(s.n, iota))]


def _hc(s: SuiteSpec):
    from .hc import chi, chi_0n, ell, ell_vars, verify_hc_diagram
    from .arith import CPoly
    from .tensor import r1
    from .ugl import gl_n

    def anchor_chi():
        g = gl_n(s.n)
        vs = ell_vars(g)
        want = sum((CPoly.var(v, vs) for v in vs), CPoly(vs)) + Fraction(s.n * (s.n - 1), 2)
        got = chi(g.G1()).poly
        return _bool_check(got == want, f"chi(G_1) = {got}")

    def anchor_ell():
        got = chi_0n(r1(s.n), 1).poly
        return _bool_check(got == ell(s.n), f"chi_0n(R_1) = {got}, l = {ell(s.n)}")

    kmax = max(s.kmax, s.n + 2)
    return [
        (f"hc/anchor chi(G_1) n={s.n}", anchor_chi),
        (f"hc/anchor chi_0n(R_1)=l n={s.n}", anchor_ell),
        (f"hc/diagram G_1..G_{kmax} and Capelli n={s.n}", lambda: verify_hc_diagram(s.n, kmax)),
    ]


def _capelli(s: SuiteSpec):
    from .capelli import VARIANTS, capelli, verify_minor_identities, verify_rho_capelli
    from .ugl import gl_n, gl_n1, is_central

    signed = s.fault != "unsigned-det"

    def centrality():
        for alg in (gl_n(s.n), gl_n1(s.n)):
            for variant in VARIANTS:
                C = capelli(alg, variant, signed=signed)
                for k, c in C.coeffs.items():
                    if not is_central(c):
                        return fail(f"{variant} C_{alg.N} coefficient of T^{k} not central")
        return PASS

    def variants():
        for alg in (gl_n(s.n), gl_n1(s.n)):
            std = capelli(alg, signed=signed)
            if capelli(alg, "M", signed=signed).scale_var(-1) != std:
                return fail(f"C_{alg.N}(T) != C^M(-T)")
            if capelli(alg, "U", signed=signed).shift(alg.N - 1) != std:
                return fail(f"C_{alg.N}(T) != C^U(T+{alg.N - 1})")
        return PASS

    return [
        (f"capelli/centrality n={s.n}", centrality),
        (f"capelli/variants n={s.n}", variants),
        (f"capelli/minor identities n={s.n}", lambda: verify_minor_identities(s.n, signed)),
        (f"capelli/rho-capelli n={s.n}", lambda: verify_rho_capelli(s.n)),
    ]


def _newton(s: SuiteSpec):
    from .capelli import verify_newton, verify_rho_newton

    return [
        (f"newton/gl({s.n}) K={s.K}", lambda: verify_newton(s.n, s.K)),
        (f"newton/gl({s.n + 1}) K={s.K}", lambda: verify_newton(s.n + 1, s.K)),
        (f"newton/rho n={s.n} K={s.K}", lambda: verify_rho_newton(s.n, s.K)),
    ]


def _cayley_hamilton(s: SuiteSpec):
    from .capelli import verify_cayley_hamilton

    return [(f"cayley-hamilton/n={s.n}", lambda: verify_cayley_hamilton(s.n))]


def _gelfand(s: SuiteSpec):
    from .gelfand import rk_closed_form_trace, r_k, r_k_direct, rho_g_closed_form, verify_rho_g
    from .ugl import gl_n1

    def recursion():
        big = gl_n1(s.n)
        for k in range(s.kmax + 1):
            for a in big.indices:
                for b in big.indices:
                    if r_k(big, k, a, b) != r_k_direct(big, k, a, b):
                        return fail(f"r_{k}({a},{b}) recursion differs from the direct sum")
        return PASS

    def trace():
        for k in range(1, s.kmax + 1):
            if rk_closed_form_trace(s.n, k) != rho_g_closed_form(s.n, k):
                return fail(f"k={k}: trace of the r_k closed forms differs from the rho(G_k) closed form")
        return PASS

    return [
        (f"gelfand/r_k recursion n={s.n}", recursion),
        (f"gelfand/rho(G_k) closed form n={s.n} kmax={s.kmax}", lambda: verify_rho_g(s.n, s.kmax)),
        (f"gelfand/trace of r_k forms n={s.n}", trace),
    ]


def _appendix(s: SuiteSpec):
    from .gelfand import verify_rho_rk

    return [(f"appendix/n={s.n} kmax={s.kmax}", lambda: verify_rho_rk(s.n, s.kmax))]


def _uprime(s: SuiteSpec):
    from .uprime import verify_cleared_u_identity, verify_pi_g_prime, verify_uniqueness, x_is_central

    return [
        (f"uprime/uniqueness n={s.n}", lambda: verify_uniqueness(s.n, s.seed)),
        (f"uprime/pi_g' n={s.n}", lambda: verify_pi_g_prime(s.n, s.seed)),
        (f"uprime/cleared u identity n={s.n}", lambda: verify_cleared_u_identity(s.n)),
        (f"uprime/X central n={s.n}", lambda: _bool_check(x_is_central(s.n), "X fails to commute")),
    ]


def module_params(n: int) -> list[tuple[int, tuple]]:
    lam = DEFAULT_WEIGHT[:n] if n <= len(DEFAULT_WEIGHT) else None
    if lam is None:
        lam = tuple(Fraction((-1) ** i, 2 * i + 3) for i in range(n))
    a_values = (-1, 0, 2) if n == 1 else (1,)
    return [(a, lam) for a in a_values]


def _modules(s: SuiteSpec):
    from .modules import central_scalars, character_compare, verify_central_character

    out = []
    for a, lam in module_params(s.n):
        tag = f"n={s.n} a={a} lam=({','.join(str(x) for x in lam)}) D={s.D}"
        out.append((f"modules/central character {tag}", lambda a=a, lam=lam: verify_central_character(s.n, a, lam, s.kmax, s.D)))
        out.append((f"modules/character {tag}", lambda a=a, lam=lam: character_compare(s.n, a, lam, s.D)))
        out.append(
            (
                f"modules/G_1 scalar 0 {tag}",
                lambda a=a, lam=lam: _bool_check(central_scalars(s.n, a, lam, 1)[1] == 0, "G_1 scalar nonzero"),
            )
        )
    return out


REGISTRY: dict[str, Callable[[SuiteSpec], list]] = {
    "rho-hom": _rho_hom,
    "diagram": _diagram,
    "hc": _hc,
    "capelli": _capelli,
    "newton": _newton,
    "cayley-hamilton": _cayley_hamilton,
    "gelfand": _gelfand,
    "appendix": _appendix,
    "uprime": _uprime,
    "modules": _modules,
}


def checks_for(spec: SuiteSpec) -> list:
    names = SUITES if spec.name == "all" else (spec.name,)
    out = []
    for name in names:
        out.extend(REGISTRY[name](spec))
    return out


def run_suite(spec: SuiteSpec, timing: bool = False) -> Report:
    """Run every check of ``spec``; ``ms`` is 0 unless ``timing`` is set so reports stay byte-identical."""
    spec.validate()
    report = Report(spec.name, spec.params())
    for name, thunk in checks_for(spec):
        start = time.perf_counter()
        try:
            v = thunk()
            status, witness = ("pass", None) if v else ("fail", v.witness)
        except Exception as exc:  # a crash is a failed check, not a crashed run
            status, witness = "fail", f"{type(exc).__name__}: {exc}"
        ms = int((time.perf_counter() - start) * 1000) if timing else 0
        report.checks.append(CheckResult(name, status, witness, ms))
    return report
