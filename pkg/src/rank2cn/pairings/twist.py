"""Twisting Chern classes by a line bundle, and the delta/d pairings built on it.

delta_i and xi_i are the Chern classes of a rank 2g-1 bundle before and after
twisting by a square root of det^{-1}; the first Chern class of that root is
-alpha/2 = xi_1.  So every delta monomial is a polynomial in the xi's and its
pairing is a linear combination of CN coefficients.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from ..symcore.partitions import normalize, partitions_of
from ..symcore.symfn import SymFn, clean
from .cn import CNPolynomial, DegreeMismatch, check_genus, cn_xi, cn_z


def twist_transform(values, r: int, t, upto: int | None = None) -> list:
    """``c_i -> sum_j C(r-j, i-j) t^(i-j) c_j`` for i = 0..upto (default r).

    ``values`` lists c_0, c_1, ...; missing entries count as zero. Works for any
    ring elements supporting + and * (ints, Fractions, AbcPoly, SymFn ...).
    """
    if upto is None:
        upto = r
    if not values:
        raise ValueError("need at least c_0")
    powers = [1]
    for _ in range(upto):
        powers.append(powers[-1] * t)
    out = []
    for i in range(upto + 1):
        acc = 0
        for j in range(min(i, len(values) - 1) + 1):
            if j > r:
                break
            b = comb(r - j, i - j)
            if b:
                acc = acc + values[j] * powers[i - j] * b
        out.append(acc)
    return out


# The free polynomial ring on xi_1, xi_2, ... is modelled by SymFn keys read as
# products of generators (the concatenating "E" multiplication).


def _gen(i: int) -> SymFn:
    return SymFn({(i,) if i else (): 1}, "E", _trusted=True)


@lru_cache(maxsize=None)
def delta_in_xi(g: int, i: int) -> SymFn:
    """delta_{g,i} as a polynomial in the xi's (alpha replaced by -2 xi_1)."""
    r = 2 * g - 1
    if i > r:
        return SymFn.zero("E")
    xs = [_gen(j) for j in range(i + 1)]
    return twist_transform(xs, r, _gen(1) * -1, upto=i)[i]


@lru_cache(maxsize=None)
def _delta_monomial(g: int, lam: tuple[int, ...], alpha_power: int) -> SymFn:
    if not lam:
        return SymFn({(1,) * alpha_power: clean((-2) ** alpha_power)}, "E", _trusted=True)
    return _delta_monomial(g, lam[:-1], alpha_power) * delta_in_xi(g, lam[-1])


def _pair(poly: SymFn, cn: CNPolynomial):
    total = 0
    for mu, c in poly.terms.items():
        v = cn.data.terms.get(mu)
        if v:
            total += c * v
    return clean(total)


def _check_degree(lam, alpha_power, dim, label):
    lhs = sum(lam) + alpha_power
    if lhs != dim:
        raise DegreeMismatch(f"{label}: |lambda| + alpha_power = {lhs} but the top degree is {dim}")


def delta_pairing(g: int, k: int, lam, alpha_power: int = 0):
    """``alpha^a delta_{g,lam1} ... delta_{g,lamn} [N_k]``."""
    lam = normalize(lam)
    check_genus("N", g, k)
    _check_degree(lam, alpha_power, 3 * k - 3, "N")
    poly = _delta_monomial(g, lam, alpha_power)
    return _pair(poly, cn_xi(g, k))


def d_pairing(g: int, k: int, lam, a1_power: int = 0):
    """``a1^a d_{g,lam1} ... d_{g,lamn} [M_k]`` through the z-classes."""
    lam = normalize(lam)
    check_genus("M", g, k)
    _check_degree(lam, a1_power, 4 * k - 3, "M")
    poly = _delta_monomial(g, lam, a1_power)
    return _pair(poly, cn_z(g, k))


def xi_pairing(g: int, k: int, lam, alpha_power: int = 0):
    lam = normalize(lam)
    check_genus("N", g, k)
    _check_degree(lam, alpha_power, 3 * k - 3, "N")
    poly = SymFn({normalize(lam + (1,) * alpha_power): clean((-2) ** alpha_power)}, "E")
    return _pair(poly, cn_xi(g, k))


def _cn_twisted(g: int, k: int, space: str) -> CNPolynomial:
    dim = 4 * k - 3 if space == "M" else 3 * k - 3
    pair = d_pairing if space == "M" else delta_pairing
    terms = {}
    for lam in partitions_of(dim):
        v = pair(g, k, lam)
        if v:
            terms[tuple(lam)] = v
    return CNPolynomial(space, g, k, SymFn(terms, "M"))


@lru_cache(maxsize=None)
def cn_delta(g: int, k: int | None = None) -> CNPolynomial:
    """CN(f_!V_g | N_k): m_lam coefficient is delta_{g,lam1} ... [N_k]."""
    return _cn_twisted(g, g if k is None else k, "N")


@lru_cache(maxsize=None)
def cn_d(g: int, k: int | None = None) -> CNPolynomial:
    return _cn_twisted(g, g if k is None else k, "M")
