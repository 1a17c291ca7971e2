"""Truncated power series in T with coefficients in the e1-localized ring.

The reciprocal of Q(T) = e1 + e3 T + ... only has coefficients in
Lambda[1/e1], so coefficients are stored as :class:`LocSymFn`: an E-basis
numerator over a power of e1, always reduced.
"""

from __future__ import annotations

from numbers import Rational
from typing import Sequence

from .symcore.symfn import SymFn, clean, e1_divisible, exact_div, to_basis


class NonInvertibleConstantTerm(ArithmeticError):
    pass


class OrderBeyondTruncation(IndexError):
    pass


class NonIntegralCoefficient(ArithmeticError):
    pass


class TruncationMismatch(ValueError):
    pass


def _strip_e1(terms: dict, k: int) -> tuple[dict, int]:
    while k and terms and all(lam and lam[-1] == 1 for lam in terms):
        terms = {lam[:-1]: c for lam, c in terms.items()}
        k -= 1
    if not terms:
        k = 0
    return terms, k


def _times_e1_power(terms: dict, k: int) -> dict:
    if not k:
        return terms
    ones = (1,) * k
    return {lam + ones: c for lam, c in terms.items()}


class LocSymFn:
    """``numerator / e1**e1_power`` with the numerator in the E basis."""

    __slots__ = ("numerator", "e1_power")

    def __init__(self, numerator: SymFn, e1_power: int = 0):
        if e1_power < 0:
            raise ValueError("e1_power must be nonnegative")
        num = to_basis(numerator, "E")
        terms, k = _strip_e1(num.terms, e1_power)
        self.numerator = SymFn(terms, "E", _trusted=True) if terms is not num.terms else num
        self.e1_power = k

    @classmethod
    def _raw(cls, terms: dict, k: int) -> "LocSymFn":
        terms, k = _strip_e1(terms, k)
        obj = cls.__new__(cls)
        obj.numerator = SymFn(terms, "E", _trusted=True)
        obj.e1_power = k
        return obj

    @classmethod
    def coerce(cls, value) -> "LocSymFn":
        if isinstance(value, LocSymFn):
            return value
        if isinstance(value, SymFn):
            return cls(value)
        if isinstance(value, (int, Rational)):
            return cls._raw({(): clean(value)} if value else {}, 0)
        raise TypeError(f"cannot interpret {value!r} as a LocSymFn")

    @property
    def is_integral(self) -> bool:
        return self.e1_power == 0

    def __bool__(self):
        return bool(self.numerator.terms)

    def __add__(self, other):
        other = LocSymFn.coerce(other)
        k = max(self.e1_power, other.e1_power)
        a = _times_e1_power(self.numerator.terms, k - self.e1_power)
        b = _times_e1_power(other.numerator.terms, k - other.e1_power)
        out = dict(a)
        for lam, c in b.items():
            v = out.get(lam, 0) + c
            if v:
                out[lam] = clean(v)
            else:
                out.pop(lam, None)
        return LocSymFn._raw(out, k)

    __radd__ = __add__

    def __neg__(self):
        return LocSymFn._raw({k: -v for k, v in self.numerator.terms.items()}, self.e1_power)

    def __sub__(self, other):
        return self + (-LocSymFn.coerce(other))

    def __rsub__(self, other):
        return LocSymFn.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            if not other:
                return LocSymFn._raw({}, 0)
            return LocSymFn._raw({k: clean(v * other) for k, v in self.numerator.terms.items()}, self.e1_power)
        other = LocSymFn.coerce(other)
        prod = self.numerator * other.numerator
        return LocSymFn._raw(prod.terms, self.e1_power + other.e1_power)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = LocSymFn.coerce(other)
        except TypeError:
            return NotImplemented
        return self.e1_power == other.e1_power and self.numerator.terms == other.numerator.terms

    def __hash__(self):
        return hash((self.e1_power, frozenset(self.numerator.terms.items())))

    def to_symfn(self, basis: str = "M") -> SymFn:
        if self.e1_power:
            raise NonIntegralCoefficient(f"coefficient carries 1/e1^{self.e1_power}")
        return to_basis(self.numerator, basis)

    def truncate_degree(self, d: int) -> "LocSymFn":
        """Drop numerator terms whose net degree exceeds ``d``."""
        k = self.e1_power
        return LocSymFn._raw({lam: c for lam, c in self.numerator.terms.items() if sum(lam) - k <= d}, k)

    def __repr__(self):
        if self.e1_power:
            return f"({self.numerator!r}) / e1^{self.e1_power}"
        return repr(self.numerator)


class SymSeries:
    """Coefficients of T^0 .. T^(trunc-1)."""

    __slots__ = ("trunc", "coeffs")

    def __init__(self, coeffs: Sequence, trunc: int | None = None):
        coeffs = [LocSymFn.coerce(c) for c in coeffs]
        if trunc is None:
            trunc = len(coeffs)
        if trunc < 1:
            raise ValueError("trunc must be positive")
        zero = LocSymFn.coerce(0)
        self.coeffs = (coeffs + [zero] * trunc)[:trunc]
        self.trunc = trunc

    @classmethod
    def constant(cls, value, trunc: int) -> "SymSeries":
        return cls([value], trunc)

    def coeff(self, n: int, integral: bool = False) -> LocSymFn:
        if n < 0 or n >= self.trunc:
            raise OrderBeyondTruncation(f"order {n} is beyond truncation {self.trunc}")
        c = self.coeffs[n]
        if integral and not c.is_integral:
            raise NonIntegralCoefficient(f"coefficient of T^{n} carries 1/e1^{c.e1_power}")
        return c

    def truncate(self, n: int) -> "SymSeries":
        if n > self.trunc:
            raise TruncationMismatch("cannot extend a truncated series")
        return SymSeries(self.coeffs[:n], n)

    def integral_through(self, k: int) -> bool:
        return all(c.is_integral for c in self.coeffs[: k + 1])

    def _check(self, other: "SymSeries"):
        if not isinstance(other, SymSeries):
            raise TypeError("expected a SymSeries")
        if other.trunc != self.trunc:
            raise TruncationMismatch(f"trunc {self.trunc} != {other.trunc}")

    def __add__(self, other):
        self._check(other)
        return SymSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.trunc)

    def __neg__(self):
        return SymSeries([-a for a in self.coeffs], self.trunc)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Rational, LocSymFn, SymFn)):
            c = LocSymFn.coerce(other)
            return SymSeries([a * c for a in self.coeffs], self.trunc)
        return series_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return series_reciprocal(self) ** (-n)
        result = SymSeries.constant(1, self.trunc)
        base = self
        while n:
            if n & 1:
                result = series_mul(result, base)
            n >>= 1
            if n:
                base = series_mul(base, base)
        return result

    def shift(self, k: int = 1) -> "SymSeries":
        """Multiply by T^k."""
        return SymSeries([0] * k + self.coeffs[: self.trunc - k], self.trunc)

    def map(self, fn) -> list:
        return [fn(c) for c in self.coeffs]

    def __eq__(self, other):
        if not isinstance(other, SymSeries):
            return NotImplemented
        return self.trunc == other.trunc and self.coeffs == other.coeffs

    def __repr__(self):
        return f"SymSeries(trunc={self.trunc}, coeffs={self.coeffs!r})"


def series_mul(a: SymSeries, b: SymSeries) -> SymSeries:
    """Cauchy product; both operands must share the same truncation."""
    a._check(b)
    n = a.trunc
    out = []
    for k in range(n):
        acc = LocSymFn.coerce(0)
        for i in range(k + 1):
            x, y = a.coeffs[i], b.coeffs[k - i]
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return SymSeries(out, n)


def _invert_constant(c: LocSymFn) -> LocSymFn:
    terms = c.numerator.terms
    if len(terms) != 1:
        raise NonInvertibleConstantTerm(f"constant term {c!r} is not a unit times a power of e1")
    (lam, coef), = terms.items()
    if any(p != 1 for p in lam):
        raise NonInvertibleConstantTerm(f"constant term {c!r} is not a unit times a power of e1")
    # (coef * e1^len(lam) / e1^k)^-1 = (1/coef) * e1^k / e1^len(lam)
    k = c.e1_power
    return LocSymFn._raw({(1,) * k: exact_div(1, coef)}, len(lam))


def series_reciprocal(a: SymSeries) -> SymSeries:
    """Solve ``a * b = 1`` order by order in the e1-localized ring."""
    b0 = _invert_constant(a.coeffs[0])
    out = [b0]
    for n in range(1, a.trunc):
        acc = LocSymFn.coerce(0)
        for i in range(1, n + 1):
            x = a.coeffs[i]
            if x and out[n - i]:
                acc = acc + x * out[n - i]
        out.append(-(acc * b0))
    return SymSeries(out, a.trunc)


# ---------------------------------------------------------------------------
# named series


def _m(*parts, coeff=1) -> SymFn:
    return SymFn.m(*parts, coeff=coeff)


def _u_coeff(n):
    return _m(*([2] * n + [1]), coeff=(-1) ** n)


def _q_coeff(n):
    return SymFn.e(2 * n + 1)


def _r_coeff(n):
    return _m(*([2] * n), coeff=(-1) ** n)


def _p_coeff(n):
    sign = (-1) ** n
    return _m(*([2] * n + [1, 1]), coeff=2 * sign) + _m(*([2] * (n + 1)), coeff=sign * (n + 1) ** 2)


def _e_coeff(n):
    return SymFn.e(2 * n)


def _u0_coeff(n):
    # prod_l (1 - T x_l^2): the coefficient of T^n is (-1)^n e_n(x^2) = (-1)^n m_(2^n)
    return _m(*([2] * n), coeff=(-1) ** n)


def _u1_coeff(n):
    return SymFn.power_sum(2 * n + 1)


def _u2_coeff(n):
    return SymFn.power_sum(2 * n + 2)


_NAMED = {
    "U": _u_coeff,
    "Q": _q_coeff,
    "R": _r_coeff,
    "P": _p_coeff,
    "E": _e_coeff,
    "u0": _u0_coeff,
    "u1": _u1_coeff,
    "u2": _u2_coeff,
}

SERIES_NAMES = tuple(_NAMED)


def named_series(name: str, trunc: int) -> SymSeries:
    """One of U, Q, R, P, E, u0, u1, u2 truncated to ``trunc`` terms."""
    if name not in _NAMED:
        raise KeyError(f"unknown series {name!r}; expected one of {', '.join(_NAMED)}")
    if trunc < 1:
        raise ValueError("trunc must be positive")
    fn = _NAMED[name]
    return SymSeries([LocSymFn(fn(n)) for n in range(trunc)], trunc)


def coeff(a: SymSeries, n: int, integral: bool = False) -> LocSymFn:
    return a.coeff(n, integral=integral)


__all__ = [
    "LocSymFn",
    "NonIntegralCoefficient",
    "NonInvertibleConstantTerm",
    "OrderBeyondTruncation",
    "SERIES_NAMES",
    "SymSeries",
    "TruncationMismatch",
    "coeff",
    "named_series",
    "series_mul",
    "series_reciprocal",
]
