"""Ring homomorphisms out of the symmetric functions: ex, ex-bar and ev2."""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from numbers import Rational
from typing import Callable, Mapping

from .symfn import SymFn, clean, format_rational, to_basis


class SpecValue:
    """Exact polynomial in two formal symbols ``x`` and ``y``.

    Stored as ``{(i, j): coeff}`` for the monomial ``x^i y^j``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        out = {}
        for k, v in (terms or {}).items():
            if v:
                out[(int(k[0]), int(k[1]))] = clean(v)
        self.terms = out

    @classmethod
    def const(cls, c) -> "SpecValue":
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> "SpecValue":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "SpecValue":
        return cls({(0, 1): 1})

    def _coerce(self, other):
        if isinstance(other, SpecValue):
            return other
        if isinstance(other, (int, Rational)):
            return SpecValue.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return SpecValue(out)

    __radd__ = __add__

    def __neg__(self):
        return SpecValue({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for (a, b), u in self.terms.items():
            for (c, d), v in other.terms.items():
                k = (a + c, b + d)
                out[k] = out.get(k, 0) + u * v
        return SpecValue(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = SpecValue.const(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficient(self, i: int, j: int = 0):
        return self.terms.get((i, j), 0)

    def constant(self):
        return self.coefficient(0, 0)

    def degree(self) -> tuple[int, int]:
        if not self.terms:
            return (0, 0)
        return (max(i for i, _ in self.terms), max(j for _, j in self.terms))

    def evaluate(self, x=0, y=0):
        return sum(Fraction(c) * Fraction(x) ** i * Fraction(y) ** j for (i, j), c in self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "SpecValue(0)"
        parts = []
        for (i, j), c in sorted(self.terms.items()):
            mono = "".join(s for s in (f"x^{i}" if i else "", f"y^{j}" if j else ""))
            parts.append(format_rational(c) + (f"*{mono}" if mono else ""))
        return "SpecValue(" + " + ".join(parts) + ")"


def _apply(f: SymFn, rule: Callable[[tuple[int, ...]], SpecValue]) -> SpecValue:
    fm = to_basis(f, "M")
    out: dict = {}
    for lam, c in fm.terms.items():
        for k, v in rule(lam).terms.items():
            out[k] = out.get(k, 0) + c * v
    return SpecValue(out)


def _ex_rule(lam):
    if all(p == 1 for p in lam):
        return SpecValue.const(Fraction(1, factorial(len(lam))))
    return SpecValue()


def _exbar_rule(lam):
    if not lam:
        return SpecValue.const(1)
    n = sum(lam)
    big = [p for p in lam if p > 1]
    if not big:
        return SpecValue({(1, 0): Fraction(1, factorial(n - 1)), (0, 0): Fraction(1, factorial(n))})
    if len(big) == 1:
        k = big[0]
        return SpecValue({(k, 0): Fraction(1, factorial(n - k))})
    return SpecValue()


def _ev2_rule(lam):
    if len(lam) >= 3:
        return SpecValue()
    if not lam:
        return SpecValue.const(1)
    if len(lam) == 1:
        a = lam[0]
        return SpecValue({(a, 0): 1, (0, a): 1})
    a, b = lam
    if a == b:
        return SpecValue({(a, a): 1})
    return SpecValue({(a, b): 1, (b, a): 1})


def specialize_ex(f: SymFn) -> SpecValue:
    """Exponential specialization: ``m_(1^n) -> 1/n!``, other ``m_lam -> 0``."""
    return _apply(f, _ex_rule)


def specialize_exbar(f: SymFn) -> SpecValue:
    """Set one variable to ``x`` and apply ``ex`` to the remaining ones."""
    return _apply(f, _exbar_rule)


def specialize_ev2(f: SymFn) -> SpecValue:
    """Evaluate at ``x1 = x, x2 = y`` and all other variables zero."""
    return _apply(f, _ev2_rule)


SPECIALIZATIONS = {"ex": specialize_ex, "exbar": specialize_exbar, "ev2": specialize_ev2}
