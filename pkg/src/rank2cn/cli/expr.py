"""Parse and evaluate monomial expressions for the ``pair`` command.

Grammar (tokens separated by spaces or ``*``)::

    a^n        alpha (or a1 on M)
    d[i]^n     delta_i (or d_i on M)
    x[i]^n     xi_i (or z_i on M)
    ab[i,j,k]  alpha^i beta^j gamma^k, on its own
    psi^p      p blocks psi_l psi_{l+g}; each one lowers the genus by one
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..pairings.cn import DegreeMismatch, check_genus, cn_xi, cn_z
from ..pairings.newstead import pairing_newstead
from ..pairings.twist import _gen, _pair, delta_in_xi
from ..symcore.symfn import SymFn, clean

_TOKEN = re.compile(
    r"^(?:(?P<a>a)(?:\^(?P<an>\d+))?"
    r"|(?P<d>[dx])\[(?P<di>\d+)\](?:\^(?P<dn>\d+))?"
    r"|ab\[(?P<i>\d+),(?P<j>\d+),(?P<k>\d+)\]"
    r"|psi(?:\^(?P<pn>\d+))?)$"
)


class ExpressionError(ValueError):
    pass


@dataclass
class Monomial:
    alpha: int = 0
    delta: list = field(default_factory=list)
    xi: list = field(default_factory=list)
    abc: tuple | None = None
    psi_pairs: int = 0

    def degree(self) -> int:
        """Complex degree (half the real degree)."""
        if self.abc is not None:
            i, j, k = self.abc
            return i + 2 * j + 3 * k
        return self.alpha + sum(self.delta) + sum(self.xi)


def parse_expression(text: str) -> Monomial:
    mono = Monomial()
    tokens = [t for t in re.split(r"[\s*]+", text.strip().replace(", ", ",")) if t]
    if not tokens:
        raise ExpressionError("empty expression")
    for tok in tokens:
        m = _TOKEN.match(tok)
        if not m:
            raise ExpressionError(f"cannot parse token {tok!r}")
        if m.group("a"):
            mono.alpha += int(m.group("an") or 1)
        elif m.group("d"):
            i = int(m.group("di"))
            if i < 1:
                raise ExpressionError(f"index must be positive in {tok!r}")
            n = int(m.group("dn") or 1)
            (mono.delta if m.group("d") == "d" else mono.xi).extend([i] * n)
        elif m.group("i") is not None:
            if mono.abc is not None:
                raise ExpressionError("only one ab[i,j,k] token is allowed")
            mono.abc = (int(m.group("i")), int(m.group("j")), int(m.group("k")))
        else:
            mono.psi_pairs += int(m.group("pn") or 1)
    if mono.abc is not None and (mono.alpha or mono.delta or mono.xi):
        raise ExpressionError("ab[i,j,k] cannot be combined with a, d or x tokens")
    return mono


def evaluate(mono: Monomial, g: int, k: int | None = None, space: str = "N"):
    """Pairing of the monomial against [N_k] (or [M_k]) with ambient genus g.

    psi-pair blocks lower k by one each and contribute a sign -1 per block.
    """
    space = space.upper()
    if space not in ("N", "M"):
        raise ExpressionError(f"unknown space {space!r}")
    k = g if k is None else k
    if mono.psi_pairs and space == "M":
        raise ExpressionError("psi blocks only make sense on N")
    target = k - mono.psi_pairs
    if target < 1:
        raise ExpressionError(f"{mono.psi_pairs} psi blocks leave no space (k={k})")
    check_genus(space, g, k)
    sign = (-1) ** mono.psi_pairs
    dim = 4 * target - 3 if space == "M" else 3 * target - 3
    if mono.abc is not None:
        if space == "M":
            raise ExpressionError("ab[i,j,k] pairings are defined on N only")
        i, j, c = mono.abc
        lhs = i + 2 * j + 3 * c
        if lhs != dim:
            raise DegreeMismatch(f"degree mismatch: i + 2j + 3k = {lhs} but 3g - 3 = {dim} (g={target})")
        return clean(sign * pairing_newstead(target, i, j, c))
    lhs = mono.degree()
    if lhs != dim:
        name = "4k - 3" if space == "M" else "3k - 3"
        raise DegreeMismatch(f"degree mismatch: a + sum(d) + sum(x) = {lhs} but {name} = {dim} (k={target})")
    poly = SymFn({(1,) * mono.alpha: (-2) ** mono.alpha}, "E")
    for i in mono.xi:
        poly = poly * _gen(i)
    for i in mono.delta:
        poly = poly * delta_in_xi(g, i)
    cn = cn_z(g, target) if space == "M" else cn_xi(g, target)
    return clean(sign * _pair(poly, cn))
