"""Mod-2 pairing tables, nilpotency certificates and parity bookkeeping."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .pairings.cn import DegreeMismatch, check_genus, cn_xi, cn_z
from .pairings.twist import d_pairing, delta_pairing
from .symcore.partitions import partitions_of
from .symcore.symfn import SymFn, to_basis


class InternalParityFault(ArithmeticError):
    """A pairing expected to be an integer was not; signals a bug."""


def _parity(v) -> int:
    v = Fraction(v)
    if v.denominator != 1:
        raise InternalParityFault(f"non-integral pairing {v}")
    return v.numerator & 1


def powers_of_two_upto(n: int) -> list[int]:
    out, p = [], 1
    while p <= n:
        out.append(p)
        p *= 2
    return out


@dataclass(frozen=True)
class ParityTableRow:
    g: int
    p: int
    odd_partitions: tuple

    @property
    def k(self) -> int:
        """Genus of the space the pairings live on."""
        return self.g - self.p

    def as_set(self) -> frozenset:
        return frozenset(self.odd_partitions)


def _split_ones(lam) -> tuple[tuple[int, ...], int]:
    lam = tuple(lam)
    ones = lam.count(1)
    return lam[: len(lam) - ones], ones


@lru_cache(maxsize=None)
def pgk_row(g: int, p: int, part_bound: str = "ambient") -> ParityTableRow:
    """Partitions in P(2) whose class alpha^{m1} delta_{lam#} pairs oddly on N_{g-p}.

    A part 1 stands for alpha and a part 2^i > 1 for delta_{2^i}.  The alpha
    powers are paired directly, so nothing is ever divided by delta_1 / alpha
    = g - 1.

    ``part_bound="ambient"`` admits every generator delta_{2^i} of N_g
    (2^i <= 2g - 1).  ``"restricted"`` caps parts at 2k - 1 for the genus k
    = g - p of the space actually paired against; it is only kept to compare
    with tables built that way.
    """
    if not 0 <= p < g:
        raise ValueError(f"need 0 <= p < g, got g={g}, p={p}")
    if part_bound not in ("ambient", "restricted"):
        raise ValueError(f"unknown part_bound {part_bound!r}")
    check_genus("N", g)
    k = g - p
    dim = 3 * k - 3
    allowed = powers_of_two_upto(2 * (g if part_bound == "ambient" else k) - 1)
    odd = []
    for lam in partitions_of(dim, parts_from=allowed):
        rest, ones = _split_ones(lam)
        if _parity(delta_pairing(g, k, rest, ones)):
            odd.append(tuple(lam))
    return ParityTableRow(g, p, tuple(odd))


def pgk_row_by_division(g: int, p: int) -> ParityTableRow:
    """Same row read off delta_1^{m1} delta_{lam#}, valid when g - 1 is odd."""
    if g % 2:
        raise ValueError("division by g - 1 only preserves parity for even g")
    k = g - p
    dim = 3 * k - 3
    odd = []
    for lam in partitions_of(dim, parts_from=powers_of_two_upto(2 * g - 1)):
        v = delta_pairing(g, k, lam, 0)
        ones = tuple(lam).count(1)
        q = Fraction(v) / (g - 1) ** ones
        if _parity(q):
            odd.append(tuple(lam))
    return ParityTableRow(g, p, tuple(odd))


def table1(g_max: int, part_bound: str = "ambient") -> list[ParityTableRow]:
    """Rows P_{g,p} for 1 <= g <= g_max and 0 <= p < g."""
    check_genus("N", g_max)
    return [pgk_row(g, p, part_bound) for g in range(1, g_max + 1) for p in range(g)]


# ---------------------------------------------------------------------------
# nilpotency


@dataclass
class NilpotencyCertificate:
    target: str
    g: int
    degree: int
    witness: str
    witness_value: object
    witness_odd: bool
    checked: int = 0
    even: bool = True
    first_odd: object = None
    window: dict = field(default_factory=dict)
    window_ok: bool | None = None
    coverage: str = ""

    @property
    def ok(self) -> bool:
        return self.witness_odd and self.even and self.window_ok is not False


def _completions(dim: int, min_power: int, max_part: int):
    for a in range(min_power, dim + 1):
        for mu in partitions_of(dim - a, parts_from=range(2, max_part + 1)):
            yield a, tuple(mu)


def nilpotency_alpha(g: int) -> NilpotencyCertificate:
    """alpha^g = 0 mod 2 while alpha^{g-1} survives.

    Every alpha^a delta_mu (a >= g, parts of mu in 2..2g-1) is paired on each
    N_k reachable by psi-pair blocks; all must be even.  The witness is
    alpha^{g-1} delta_{2g-2}[N_g].
    """
    if g < 2:
        raise ValueError("need g >= 2")
    check_genus("N", g)
    wv = delta_pairing(g, g, (2 * g - 2,), g - 1)
    cert = NilpotencyCertificate("alpha", g, g, f"a^{g - 1} d[{2 * g - 2}]", wv, bool(_parity(wv)))
    for k in range(1, g + 1):
        for a, mu in _completions(3 * k - 3, g, 2 * g - 1):
            cert.checked += 1
            v = delta_pairing(g, k, mu, a)
            if _parity(v):
                cert.even = False
                cert.first_odd = (k, a, mu, v)
                break
        if not cert.even:
            break
    cert.coverage = "all alpha, delta and psi-pair monomials"
    return cert


def a1_parity_window(g: int) -> dict:
    """Parity of 2^{2g-1} z_1^j z_{4g-3-j}[M_g] for j = 0 .. 4g-4."""
    cn = cn_z(g, g)
    out = {}
    n = 4 * g - 3
    for j in range(n):
        lam = tuple(sorted((n - j,) + (1,) * j, reverse=True))
        out[j] = _parity(cn.coefficient(lam) * 2 ** (2 * g - 1))
    return out


def nilpotency_a1(g: int) -> NilpotencyCertificate:
    """a1^{2g} = 0 mod 2 on the monomials reachable here, a1^{2g-1} survives."""
    if g < 2:
        raise ValueError("need g >= 2")
    check_genus("M", g)
    wv = d_pairing(g, g, (2 * g - 2,), 2 * g - 1)
    cert = NilpotencyCertificate("a1", g, 2 * g, f"a1^{2 * g - 1} d[{2 * g - 2}]", wv, bool(_parity(wv)))
    for k in range(1, g + 1):
        for a, mu in _completions(4 * k - 3, 2 * g, 2 * g - 1):
            cert.checked += 1
            v = d_pairing(g, k, mu, a)
            if _parity(v):
                cert.even = False
                cert.first_odd = (k, a, mu, v)
                break
        if not cert.even:
            break
    win = a1_parity_window(g)
    cert.window = win
    cert.window_ok = {j for j, b in win.items() if b} == {2 * g - 1, 2 * g - 2}
    cert.coverage = ("partial: a1/d monomials with full b-handle blocks only; mixed b_1/b_2 "
                     "pairings outside that recursion are not checked")
    return cert


def xi_parity_window(g: int) -> dict:
    """Parity of 2^{g-1} xi_1^{3g-3-j} xi_j [N_g] for j = 0 .. 3g-3."""
    cn = cn_xi(g, g)
    n = 3 * g - 3
    out = {}
    for j in range(n + 1):
        lam = tuple(sorted(((j,) if j else ()) + (1,) * (n - j), reverse=True))
        out[j] = _parity(cn.coefficient(lam) * 2 ** (g - 1))
    return out


# ---------------------------------------------------------------------------
# Lucas parity and the ideal I


def lucas_parity(counts) -> int:
    """Parity of (sum a_i)! / prod a_i!: odd iff the binary digits never collide."""
    total = 0
    acc = 0
    for a in counts:
        if a < 0:
            raise ValueError("counts must be nonnegative")
        if acc & a:
            return 0
        acc |= a
        total += a
    return 1


def reduce_mod_I(f: SymFn) -> SymFn:
    """Image in Lambda / (2, m_lam with two parts > 1), on M-basis representatives."""
    f = to_basis(f, "M")
    out = {}
    for lam, c in f.terms.items():
        c = Fraction(c)
        if c.denominator % 2 == 0:
            raise InternalParityFault(f"coefficient {c} has an even denominator")
        if sum(1 for p in lam if p > 1) >= 2:
            continue
        if c.numerator % 2:
            out[lam] = 1
    return SymFn(out, "M")


def rn_congruence(n: int) -> tuple[SymFn, SymFn]:
    """(reduce(e1^{n+1} [T^n] 1/Q), m_{(n,1^{2n})} + n m_{(n-1,1^{2n+1})} mod 2)."""
    from .series import named_series, series_reciprocal

    r = series_reciprocal(named_series("Q", n + 1)).coeff(n)
    ones = (1,) * (n + 1 - r.e1_power)
    num = SymFn({tuple(sorted(lam + ones, reverse=True)): c for lam, c in r.numerator.terms.items()}, "E")
    lhs = reduce_mod_I(num)
    target = SymFn.m(n, *([1] * (2 * n))) + SymFn.m(n - 1, *([1] * (2 * n + 1)), coeff=n)
    return lhs, reduce_mod_I(target)


def coeff1_congruence(g: int) -> tuple[SymFn, SymFn]:
    """reduce([T^{g-1}] U^g/Q) against g m_(g,1^{2g-3}) + m_(g-1,1^{2g-2}) + (g-1) m_(g-2,1^{2g-1})."""
    lhs = reduce_mod_I(cn_xi(g, g).data * 2 ** (g - 1))
    target = (SymFn.m(g, *([1] * (2 * g - 3)), coeff=g)
              + SymFn.m(g - 1, *([1] * (2 * g - 2)))
              + SymFn.m(g - 2, *([1] * (2 * g - 1)), coeff=g - 1))
    return lhs, reduce_mod_I(target)


__all__ = [
    "DegreeMismatch",
    "InternalParityFault",
    "NilpotencyCertificate",
    "ParityTableRow",
    "coeff1_congruence",
    "xi_parity_window",
    "a1_parity_window",
    "lucas_parity",
    "nilpotency_a1",
    "nilpotency_alpha",
    "pgk_row",
    "pgk_row_by_division",
    "reduce_mod_I",
    "rn_congruence",
    "table1",
]
