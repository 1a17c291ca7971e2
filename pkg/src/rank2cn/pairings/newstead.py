"""Pairings of Newstead-class monomials alpha^i beta^j gamma^k on N_g."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from ..symcore.symfn import clean
from .cn import DegreeMismatch


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """B_n from ``sum_{k<=n} C(n+1, k) B_k = 0`` with B_0 = 1 (so B_1 = -1/2)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return Fraction(1)
    if n > 1 and n % 2:
        return Fraction(0)
    s = sum(comb(n + 1, k) * bernoulli(k) for k in range(n))
    return -s / (n + 1)


class BernoulliTable:
    """Read-only view ``table[n] -> B_n``."""

    def __getitem__(self, n: int) -> Fraction:
        return bernoulli(n)

    def __iter__(self):
        n = 0
        while True:
            yield bernoulli(n)
            n += 1


def pairing_ab(g: int, i: int, j: int):
    """``alpha^i beta^j [N_g]``; zero when i < g - 1."""
    if g < 1 or i < 0 or j < 0:
        raise ValueError("need g >= 1 and nonnegative exponents")
    if i + 2 * j != 3 * g - 3:
        raise DegreeMismatch(f"i + 2j = {i + 2 * j} but 3g - 3 = {3 * g - 3}")
    n = i - g + 1
    if n < 0:
        return 0
    val = (-1) ** g * Fraction(factorial(i), factorial(n)) * 4 ** (g - 1) * (2 ** n - 2) * bernoulli(n)
    return clean(val)


def pairing_newstead(g: int, i: int, j: int, k: int):
    """``alpha^i beta^j gamma^k [N_g]``.

    gamma = -2 * sum_l psi_l psi_{l+g}, and each psi-pair cuts N_g down to
    N_{g-1} with sign -1.  Expanding gamma^k gives k! C(g, k) squarefree terms
    with coefficient (-2)^k, hence 2^k k! C(g, k) alpha^i beta^j [N_{g-k}].
    """
    if min(i, j, k) < 0:
        raise ValueError("exponents must be nonnegative")
    if i + 2 * j + 3 * k != 3 * g - 3:
        raise DegreeMismatch(f"i + 2j + 3k = {i + 2 * j + 3 * k} but 3g - 3 = {3 * g - 3}")
    if k >= g:
        return 0
    return clean(2 ** k * factorial(k) * comb(g, k) * pairing_ab(g - k, i, j))
