"""Independent reference implementations used only by the tests.

Nothing here imports the package's algebra: symmetric functions are expanded
into explicit polynomials in finitely many variables, tableaux are filled cell
by cell, and closed forms come from sympy.
"""

from fractions import Fraction
from itertools import permutations, product
from math import factorial

import sympy


# -- explicit polynomials in n variables: {exponent tuple: coeff} ------------

def poly_m(lam, n):
    lam = tuple(lam) + (0,) * (n - len(lam))
    if len(lam) > n:
        return {}
    return {e: 1 for e in set(permutations(lam))}


def poly_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def poly_add(a, b, scale=1):
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + scale * c
    return {e: c for e, c in out.items() if c}


def poly_e(k, n):
    return poly_m((1,) * k, n)


def poly_h(k, n):
    out = {}
    for e in product(range(k + 1), repeat=n):
        if sum(e) == k:
            out[e] = 1
    return out


def poly_from_terms(terms, basis, n):
    """Expand {partition: coeff} in basis M, E or H into n variables."""
    out = {}
    for lam, c in terms.items():
        if basis == "M":
            p = poly_m(lam, n)
        else:
            p = {(0,) * n: 1}
            for part in lam:
                p = poly_mul(p, poly_e(part, n) if basis == "E" else poly_h(part, n))
        out = poly_add(out, p, c)
    return out


def m_coefficients(poly):
    """Read m-coefficients off a symmetric polynomial (sorted exponent vectors)."""
    out = {}
    for e, c in poly.items():
        if list(e) == sorted(e, reverse=True):
            lam = tuple(x for x in e if x)
            out[lam] = c
    return out


# -- tableaux, filled one cell at a time --------------------------------------

def ssyt_count(outer, inner, content):
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    cells = [(r, c) for r in range(len(outer)) for c in range(inner[r], outer[r])]
    need = list(content)
    fill = {}

    def ok(r, c, v):
        left = fill.get((r, c - 1))
        up = fill.get((r - 1, c))
        return (left is None or left <= v) and (up is None or up < v)

    def rec(i):
        if i == len(cells):
            return 1
        r, c = cells[i]
        total = 0
        for v in range(len(need)):
            if need[v] and ok(r, c, v):
                need[v] -= 1
                fill[(r, c)] = v
                total += rec(i + 1)
                del fill[(r, c)]
                need[v] += 1
        return total

    return rec(0)


# -- closed forms -------------------------------------------------------------

T = sympy.symbols("T", positive=True)


def series_coeffs(expr, n):
    s = sympy.series(expr, T, 0, n).removeO()
    return [sympy.Rational(s.coeff(T, i)) for i in range(n)]


def sqrtT_over_sinh(n):
    r = sympy.sqrt(T)
    return series_coeffs(r / sympy.sinh(r), n)


def sqrtT_over_sinh_cosh(n):
    r = sympy.sqrt(T)
    return series_coeffs(r / (sympy.sinh(r) * sympy.cosh(r)), n)


def sinh_over_sqrtT(n):
    r = sympy.sqrt(T)
    return series_coeffs(sympy.sinh(r) / r, n)


def cosh_sqrtT(n):
    return series_coeffs(sympy.cosh(sympy.sqrt(T)), n)


def bernoulli(n):
    # sympy >= 1.12 uses B_1 = +1/2; only even indices are compared
    return Fraction(str(sympy.bernoulli(n)))


def multinomial(counts):
    out = factorial(sum(counts))
    for c in counts:
        out //= factorial(c)
    return out


def to_fraction(x):
    return Fraction(int(x.p), int(x.q))
