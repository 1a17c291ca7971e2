"""Closed-form checks obtained by specializing CN polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from ..symcore.specialize import SpecValue, specialize_ev2, specialize_ex
from .cn import cn_tangent, cn_xi, cn_z
from .newstead import bernoulli, pairing_ab


@dataclass
class Witness:
    ok: bool
    lhs: object
    rhs: object


def xipair_identity(g: int) -> Witness:
    """sum_{i+j=3g-3} xi_i xi_j [N_g] x^i y^j against g (-1)^(g-1)/2^(g-1) (xy^2 + x^2y)^(g-1)."""
    lhs = specialize_ev2(cn_xi(g, g).data)
    base = SpecValue({(1, 2): 1, (2, 1): 1})
    rhs = base ** (g - 1) * Fraction(g * (-1) ** (g - 1), 2 ** (g - 1))
    return Witness(lhs == rhs, lhs, rhs)


def alpha_top_via_ex(g: int):
    """alpha^{3g-3}[N_g] read off the exponential specialization."""
    n = 3 * g - 3
    return specialize_ex(cn_xi(g, g).data).constant() * factorial(n) * (-2) ** n


def a1_top_via_ex(g: int):
    n = 4 * g - 3
    return specialize_ex(cn_z(g, g).data).constant() * factorial(n) * (-2) ** n


def a1_top_closed_form(g: int) -> Fraction:
    """(4g-3)!/(2g-2)! 2^(2g-2) (2^(2g-2) - 2) |B_{2g-2}|."""
    n = 2 * g - 2
    return Fraction(factorial(4 * g - 3), factorial(n)) * 2 ** n * (2 ** n - 2) * abs(bernoulli(n))


def c1_top_via_ex(g: int):
    """c_1^{3g-3}[N_g] from the tangent CN polynomial."""
    return specialize_ex(cn_tangent(g).data).constant() * factorial(3 * g - 3)


def alpha_top_checks(g: int) -> Witness:
    lhs = alpha_top_via_ex(g)
    rhs = pairing_ab(g, 3 * g - 3, 0)
    return Witness(lhs == rhs, lhs, rhs)


def a1_top_checks(g: int) -> Witness:
    lhs = a1_top_via_ex(g)
    rhs = a1_top_closed_form(g)
    return Witness(lhs == rhs, lhs, rhs)
