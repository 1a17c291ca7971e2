"""Pairings involving the odd classes psi_j (on N_g) and b_1^j, b_2^j (on M_g).

Only three facts are used: mismatched index sets force vanishing, a full
handle block restricts to genus g-1, and the b_1 extraction formula whose
printed form is internally inconsistent (see :func:`b1_pairing`).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from ..symcore.partitions import normalize
from ..symcore.symfn import clean, format_partition
from .cn import DegreeMismatch, check_genus, cn_z, extract


def _shift(indices, g: int) -> frozenset:
    out = set()
    for i in indices:
        if not 1 <= i <= 2 * g:
            raise ValueError(f"index {i} outside 1..{2 * g}")
        out.add((i + g - 1) % (2 * g) + 1)
    return frozenset(out)


def psi_vanishes(K, g: int) -> bool:
    """True when a product of psi_k (k in K) forces the pairing to vanish."""
    K = frozenset(K)
    return K != _shift(K, g)


def b_vanishes(J1, J2, g: int) -> bool:
    """True when prod b_1^j (J1) prod b_2^j (J2) kills any invariant class."""
    J1, J2 = frozenset(J1), frozenset(J2)
    I1 = J1 & _shift(J1, g)
    I2 = J2 & _shift(J2, g)
    return (J1 - I1) != _shift(J2 - I2, g)


def vanishing_predicates(*args, g: int) -> bool:
    """Dispatch: one index set for psi-classes, two for b-classes."""
    if len(args) == 1:
        return psi_vanishes(args[0], g)
    if len(args) == 2:
        return b_vanishes(args[0], args[1], g)
    raise TypeError("expected K or (J1, J2)")


def mrec_pairing(g: int, lam, blocks: int = 1):
    """|z_{g,lam} (b_1^j b_1^{j+g} b_2^j b_2^{j+g})^blocks [M_g]|.

    Each full handle block restricts the pairing to one genus lower, up to a
    sign the recursion leaves unspecified, so only the magnitude is returned.
    """
    lam = normalize(lam)
    k = g - blocks
    if k < 1:
        raise ValueError("too many handle blocks")
    if sum(lam) != 4 * k - 3:
        raise DegreeMismatch(f"|lambda| = {sum(lam)} but M_{k} needs {4 * k - 3}")
    return abs(cn_z(g, k).coefficient(lam))


@dataclass
class B1Report:
    g: int
    k: int
    j: int
    lam: tuple
    printed_degree: int
    dimension_degree: int
    series_degree: int
    as_printed: object = None
    via_mg: object = None
    notes: list = field(default_factory=list)

    @property
    def degree_checks(self) -> dict:
        n = sum(self.lam)
        return {
            "printed": n == self.printed_degree,
            "dimension": n == self.dimension_degree,
            "series": n == self.series_degree,
        }


def b1_pairing(g: int, k: int, j: int, lam, as_printed: bool = False) -> B1Report:
    """Pairing of z_{g,lam} times j pairs b_1^i b_1^{i+g} against [M_k].

    The extraction formula as it appears in print has a C(j, k) prefactor and
    the powers R^{g+k-2j} U^j P^{j-k}; at j = 0 it does not collapse to the
    plain z-class formula, and its homogeneous degree (3j - 3) matches neither
    the printed constraint |lam| = 4k-3+j nor the dimension count 4k-3-j.  It
    is therefore only evaluated when ``as_printed`` is set, and every
    discrepancy is written into the report instead of being patched.
    """
    lam = normalize(lam)
    check_genus("M", g, k)
    if not 0 <= j <= g:
        raise ValueError("need 0 <= j <= g")
    rep = B1Report(g, k, j, lam, 4 * k - 3 + j, 4 * k - 3 - j, 3 * j - 3)
    checks = rep.degree_checks
    if not (checks["printed"] or checks["dimension"]):
        raise DegreeMismatch(
            f"|lambda| = {sum(lam)} fits neither the printed constraint {rep.printed_degree} "
            f"nor the dimension count {rep.dimension_degree}"
        )
    if not checks["printed"]:
        rep.notes.append(f"printed degree constraint wants |lambda| = {rep.printed_degree}")
    if not checks["dimension"]:
        rep.notes.append(f"dimension count wants |lambda| = {rep.dimension_degree}")
    if j == 0 and checks["dimension"]:
        rep.via_mg = cn_z(g, k).coefficient(lam)
    if as_printed:
        warnings.warn("b1_pairing: evaluating the as-printed formula, which is known to be inconsistent",
                      stacklevel=2)
        pref = Fraction((-1) ** k, 2 ** (2 * k - 1)) * comb(j, k)
        if pref == 0:
            rep.as_printed = 0
            rep.notes.append("C(j, k) = 0 so the printed formula gives 0")
        else:
            coef = extract([("R", g + k - 2 * j), ("U", j), ("P", j - k), ("Q", -1)], k - 1)
            if not coef.is_integral:
                rep.notes.append(f"T^{k - 1} coefficient carries 1/e1^{coef.e1_power}; no m-coefficient")
            else:
                rep.as_printed = clean(coef.to_symfn("M").coefficient(lam) * pref)
        if j == 0 and rep.via_mg is not None and rep.as_printed != rep.via_mg:
            rep.notes.append(f"as printed {rep.as_printed} differs from the z-class route {rep.via_mg}")
    elif j:
        rep.notes.append("j > 0 has no verified route; pass as_printed=True to evaluate the printed formula")
    return rep


def describe(rep: B1Report) -> str:
    return (f"b1 pairing g={rep.g} k={rep.k} j={rep.j} lambda={format_partition(rep.lam)}: "
            f"as printed={rep.as_printed}, z-route={rep.via_mg}; " + "; ".join(rep.notes))
