"""Chern number polynomials from coefficient extraction.

Every CN polynomial here is one coefficient of a product of named series,
computed in the E basis (where multiplication only concatenates keys) and
converted to the monomial basis at the end.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..series import LocSymFn, SymSeries, named_series, series_mul, series_reciprocal
from ..symcore.partitions import normalize
from ..symcore.symfn import SymFn, clean, to_basis


class ResourceGuardError(RuntimeError):
    """Raised when a requested genus exceeds the configured limit."""


class DegreeMismatch(ValueError):
    pass


DEFAULT_MAX_GENUS = {"N": 8, "M": 6}
_ENV = {"N": "RANK2CN_MAX_GENUS_N", "M": "RANK2CN_MAX_GENUS_M"}


def max_genus(space: str) -> int:
    key = "M" if space == "M" else "N"
    raw = os.environ.get(_ENV[key])
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"{_ENV[key]} must be an integer, got {raw!r}") from None
    return DEFAULT_MAX_GENUS[key]


def check_genus(space: str, g: int, k: int | None = None) -> None:
    if k is not None and not (1 <= k <= g):
        raise ValueError(f"need 1 <= k <= g, got g={g}, k={k}")
    if g < 1:
        raise ValueError(f"genus must be positive, got {g}")
    limit = max_genus(space)
    if g > limit:
        env = _ENV["M" if space == "M" else "N"]
        raise ResourceGuardError(f"genus {g} exceeds the {space}-space limit {limit} (set {env} to raise it)")


@dataclass(frozen=True)
class CNPolynomial:
    space: str          # "N", "M" or "N-tangent"
    g: int
    k: int
    data: SymFn         # M basis

    @property
    def degree(self) -> int:
        return 4 * self.k - 3 if self.space == "M" else 3 * self.k - 3

    def coefficient(self, lam) -> Fraction | int:
        return self.data.coefficient(lam)

    def items(self):
        return self.data.items()

    def in_basis(self, basis: str) -> SymFn:
        return to_basis(self.data, basis)

    def scaled(self, c) -> SymFn:
        return self.data * c

    def nonzero_count(self, basis: str = "M") -> int:
        return len(self.in_basis(basis).terms)

    def __post_init__(self):
        if not self.data.is_homogeneous(self.degree):
            raise DegreeMismatch(f"CN polynomial is not homogeneous of degree {self.degree}")


# ---------------------------------------------------------------------------
# cached series powers (E basis, fixed truncation)


@lru_cache(maxsize=None)
def _base(name: str, trunc: int) -> SymSeries:
    return named_series(name, trunc)


@lru_cache(maxsize=None)
def series_power(name: str, n: int, trunc: int) -> SymSeries:
    """``name**n`` truncated to ``trunc`` terms; negative n goes through the reciprocal."""
    if n == 0:
        return SymSeries.constant(1, trunc)
    if n < 0:
        if n == -1:
            return series_reciprocal(_base(name, trunc))
        return series_mul(series_power(name, n + 1, trunc), series_power(name, -1, trunc))
    if n == 1:
        return _base(name, trunc)
    return series_mul(series_power(name, n - 1, trunc), _base(name, trunc))


def extract(factors: list[tuple[str, int]], order: int) -> LocSymFn:
    """Coefficient of T^order in a product of named-series powers.

    Reciprocals are applied last so that intermediate products stay integral.
    """
    trunc = order + 1
    positive = [(n, p) for n, p in factors if p > 0]
    negative = [(n, p) for n, p in factors if p < 0]
    acc = SymSeries.constant(1, trunc)
    for name, p in positive:
        acc = series_mul(acc, series_power(name, p, trunc))
    if not negative:
        return acc.coeff(order)
    inv = SymSeries.constant(1, trunc)
    for name, p in negative:
        inv = series_mul(inv, series_power(name, p, trunc))
    total = LocSymFn.coerce(0)
    for i in range(trunc):
        a, b = acc.coeffs[i], inv.coeffs[order - i]
        if a and b:
            total = total + a * b
    return total


def _finish(coef: LocSymFn, scale) -> SymFn:
    f = coef.to_symfn("M")
    return f * clean(Fraction(scale))


# The guard runs on every call, so lowering the env limit also refuses
# results that are already memoized.

def cn_xi(g: int, k: int) -> CNPolynomial:
    """CN(Z_g | N_k): m_lam coefficient is xi_{g,lam1} ... xi_{g,lamn} [N_k]."""
    check_genus("N", g, k)
    return _cn_xi(g, k)


@lru_cache(maxsize=None)
def _cn_xi(g, k):
    coef = extract([("U", k), ("R", g - k), ("Q", -1)], k - 1)
    return CNPolynomial("N", g, k, _finish(coef, Fraction(1, 2 ** (k - 1))))


def cn_z(g: int, k: int) -> CNPolynomial:
    """CN(Z_g | M_k): m_lam coefficient is z_{g,lam1} ... z_{g,lamn} [M_k]."""
    check_genus("M", g, k)
    return _cn_z(g, k)


@lru_cache(maxsize=None)
def _cn_z(g, k):
    coef = extract([("P", k), ("R", g - k), ("Q", -1)], k - 1)
    return CNPolynomial("M", g, k, _finish(coef, Fraction((-1) ** k, 2 ** (2 * k - 1))))


def cn_tangent(g: int) -> CNPolynomial:
    """All Chern numbers c_lam(TN_g)[N_g]."""
    check_genus("N", g)
    if g < 2:
        raise ValueError("the tangent CN polynomial needs g >= 2")
    return _cn_tangent(g)


@lru_cache(maxsize=None)
def _cn_tangent(g):
    coef = extract([("U", g), ("Q", -1), ("E", -1)], g - 1)
    return CNPolynomial("N-tangent", g, g, _finish(coef, (-2) ** (3 * g - 3)))


def monomial_m(parts) -> tuple[int, ...]:
    return normalize(parts)
