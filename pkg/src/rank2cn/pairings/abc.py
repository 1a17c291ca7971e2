"""Classes on N_g written as polynomials in alpha, beta, gamma.

The total Chern class of the twisted direct-image bundle (and of the tangent
bundle) is a closed-form series in an auxiliary variable x whose pieces each
carry 1/beta; we expand them as formal series over Q[alpha, beta, 1/beta,
gamma] and check that the negative powers of beta cancel.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from ..symcore.symfn import clean, format_rational
from .newstead import pairing_newstead
from .twist import twist_transform


class ResidualBetaDenominator(ArithmeticError):
    """A negative power of beta survived; this means an internal error."""


class AbcPoly:
    """Sparse ``{(i, j, k): c}`` for ``c * alpha^i beta^j gamma^k``; j may go
    negative during intermediate computations."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for key, c in (terms or {}).items():
            if c:
                self.terms[tuple(key)] = clean(c)

    @classmethod
    def const(cls, c):
        return cls({(0, 0, 0): c})

    @classmethod
    def alpha(cls):
        return cls({(1, 0, 0): 1})

    @classmethod
    def beta(cls, power: int = 1):
        return cls({(0, power, 0): 1})

    @classmethod
    def gamma(cls):
        return cls({(0, 0, 1): 1})

    @classmethod
    def gamma_star(cls):
        """gamma* = 2 gamma + alpha beta."""
        return cls({(0, 0, 1): 2, (1, 1, 0): 1})

    @staticmethod
    def _coerce(other):
        if isinstance(other, AbcPoly):
            return other
        if isinstance(other, (int, Rational)):
            return AbcPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return AbcPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return AbcPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for (a, b, c), u in self.terms.items():
            for (d, e, f), v in other.terms.items():
                key = (a + d, b + e, c + f)
                out[key] = out.get(key, 0) + u * v
        return AbcPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = AbcPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, i: int, j: int = 0, k: int = 0):
        return self.terms.get((i, j, k), 0)

    def degree_set(self) -> set[int]:
        return {2 * i + 4 * j + 6 * k for i, j, k in self.terms}

    def has_beta_denominator(self) -> bool:
        return any(j < 0 for _, j, _ in self.terms)

    def pair(self, g: int):
        """Evaluate against [N_g] term by term."""
        total = 0
        for (i, j, k), c in self.terms.items():
            if 2 * i + 4 * j + 6 * k != 6 * g - 6:
                continue
            total += c * pairing_newstead(g, i, j, k)
        return clean(total)

    def __repr__(self):
        if not self.terms:
            return "0"
        pieces = []
        for (i, j, k), c in sorted(self.terms.items(), key=lambda kv: (-kv[0][0], kv[0][1], kv[0][2])):
            mono = "*".join(s for s in (
                f"a^{i}" if i > 1 else ("a" if i == 1 else ""),
                f"b^{j}" if j not in (0, 1) else ("b" if j == 1 else ""),
                f"c^{k}" if k > 1 else ("c" if k == 1 else ""),
            ) if s)
            pieces.append(f"({format_rational(c)})" + (f"*{mono}" if mono else ""))
        return " + ".join(pieces)


# ---------------------------------------------------------------------------
# formal series in x


def _ser_mul(a: list, b: list, n: int) -> list:
    out = [AbcPoly() for _ in range(n + 1)]
    for i, u in enumerate(a[: n + 1]):
        if not u:
            continue
        for j in range(n + 1 - i):
            if b[j]:
                out[i + j] = out[i + j] + u * b[j]
    return out


def _ser_exp(s: list, n: int) -> list:
    """exp(s) for a series with zero constant term: m F_m = sum_k k s_k F_{m-k}."""
    if s and s[0]:
        raise ValueError("exponent must have zero constant term")
    f = [AbcPoly.const(1)]
    for m in range(1, n + 1):
        acc = AbcPoly()
        for k in range(1, m + 1):
            if k < len(s) and s[k]:
                acc = acc + s[k] * f[m - k] * k
        f.append(acc * Fraction(1, m))
    return f


def _binom(s: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for i in range(n):
        out = out * (s - i) / (i + 1)
    return out


def _one_minus_beta_x2(power: Fraction, n: int) -> list:
    out = [AbcPoly() for _ in range(n + 1)]
    for m in range(n // 2 + 1):
        out[2 * m] = AbcPoly({(0, m, 0): _binom(power, m) * (-1) ** m})
    return out


def _odd_series(n: int, coeff) -> list:
    """sum_m coeff(m) * beta^(m-1) x^(2m+1), as AbcPoly coefficients."""
    out = [AbcPoly() for _ in range(n + 1)]
    for m in range((n - 1) // 2 + 1):
        out[2 * m + 1] = coeff(m) * AbcPoly.beta(m - 1)
    return out


def _add(a: list, b: list) -> list:
    return [x + y for x, y in zip(a, b)]


def _finalize(series: list) -> list:
    for i, c in enumerate(series):
        if c.has_beta_denominator():
            raise ResidualBetaDenominator(f"coefficient of x^{i} still has negative powers of beta: {c!r}")
    return series


@lru_cache(maxsize=None)
def _xi_classes(g: int, n: int) -> tuple:
    gs = AbcPoly.gamma_star()
    gam = AbcPoly.gamma()
    # log((1+sqrt(b)x)/(1-sqrt(b)x)) * gamma*/(2 b sqrt(b)) = gamma* sum b^(m-1) x^(2m+1)/(2m+1)
    atanh_part = _odd_series(n, lambda m: gs * Fraction(1, 2 * m + 1))
    # -2 gamma x / (b (1 - b x^2)) = -2 gamma sum b^(m-1) x^(2m+1)
    rational_part = _odd_series(n, lambda m: gam * -2)
    expo = _ser_exp(_add(atanh_part, rational_part), n)
    total = _ser_mul(_one_minus_beta_x2(Fraction(2 * g - 1, 2), n), expo, n)
    total = _finalize(total)
    # c(Z)_{-2x}: the x^i coefficient is (-2)^i xi_i
    return tuple(c * Fraction(1, (-2) ** i) for i, c in enumerate(total))


@lru_cache(maxsize=None)
def _tangent_classes(g: int, n: int) -> tuple:
    gs = AbcPoly.gamma_star()
    alpha = AbcPoly.alpha()
    # 2 alpha x / (1 - b x^2)
    alpha_part = [AbcPoly() for _ in range(n + 1)]
    for m in range((n - 1) // 2 + 1):
        alpha_part[2 * m + 1] = alpha * AbcPoly.beta(m) * 2
    atanh_part = _odd_series(n, lambda m: gs * Fraction(2, 2 * m + 1))
    rational_part = _odd_series(n, lambda m: gs * -2)
    expo = _ser_exp(_add(alpha_part, _add(atanh_part, rational_part)), n)
    total = _ser_mul(_one_minus_beta_x2(Fraction(g - 1), n), expo, n)
    return tuple(_finalize(total))


_WHICH = {"xi": "xi", "ξ": "xi", "delta": "delta", "δ": "delta",
          "tangent": "tangent", "tangent-c": "tangent", "c": "tangent"}


def class_in_abc(g: int, i: int, which: str = "delta") -> AbcPoly:
    """The degree-2i class xi_{g,i}, delta_{g,i} or c_i(TN_g) in alpha, beta, gamma."""
    kind = _WHICH.get(which)
    if kind is None:
        raise ValueError(f"unknown class family {which!r}")
    if g < 1 or i < 0:
        raise ValueError("need g >= 1 and i >= 0")
    if kind == "tangent":
        return _tangent_classes(g, i)[i]
    xis = list(_xi_classes(g, i))
    if kind == "xi":
        return xis[i]
    return twist_transform(xis, 2 * g - 1, AbcPoly.alpha() * Fraction(1, 2), upto=i)[i]
