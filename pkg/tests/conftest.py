"""Shared oracles and strategies.

The oracles here never call the code under test for the quantity being
checked: the defining representation multiplies plain matrices of Fractions,
and Laurent monomials are differentiated by hand.
"""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from mixcap.ugl import GlAlgebra, UglElement, gl_n, gl_n1

ACCEPTANCE_LINES: list[str] = []


def mat_zero(N):
    return [[Fraction(0)] * N for _ in range(N)]


def mat_id(N):
    m = mat_zero(N)
    for i in range(N):
        m[i][i] = Fraction(1)
    return m


def mat_mul(a, b):
    N = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(N)), Fraction(0)) for j in range(N)] for i in range(N)]


def mat_add(a, b, scale=1):
    return [[x + scale * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def defining_rep(x: UglElement):
    """Image of ``x`` under E_ij -> elementary matrix e_ij."""
    alg = x.alg
    N = alg.N
    out = mat_zero(N)
    for mono, c in x.terms.items():
        m = mat_id(N)
        for r in mono:
            i, j = alg.gens[r]
            e = mat_zero(N)
            e[i - alg.base][j - alg.base] = Fraction(1)
            m = mat_mul(m, e)
        out = mat_add(out, m, Fraction(c))
    return out


def rand_element(alg: GlAlgebra, words):
    out = alg.zero()
    for coeff, word in words:
        out = out + alg.word([alg.gens[r] for r in word]) * coeff
    return out


def ugl_elements(alg: GlAlgebra, max_len=3, max_terms=3):
    """Hypothesis strategy: small random sums of words in the generators."""
    word = st.lists(st.integers(0, len(alg.gens) - 1), max_size=max_len)
    term = st.tuples(st.integers(-3, 3), word)
    return st.lists(term, max_size=max_terms).map(lambda ws: rand_element(alg, ws))


ALGEBRAS = [gl_n(1), gl_n(2), gl_n1(1), gl_n1(2)]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def record_acceptance():
    def record(k: int, ok: bool, detail: str):
        line = f"{'PASS' if ok else 'FAIL'} criterion {k}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record
