"""Symmetric functions with exact rational coefficients in the m, e and h bases.

A :class:`SymFn` is a sparse map from partitions to coefficients together with
a basis tag.  In the ``E`` and ``H`` bases a key stands for the product
``e_lambda`` (resp. ``h_lambda``), so multiplication concatenates keys; in the
``M`` basis products go through memoized structure constants.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial
from numbers import Rational
from typing import Iterable, Mapping

from .partitions import canonical_key, conjugate, format_partition, normalize

BASES = ("M", "E", "H")


class BasisMismatch(ValueError):
    pass


class NotDivisible(ArithmeticError):
    pass


def clean(c):
    """Collapse integral Fractions to int so hot loops stay in int arithmetic."""
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def exact_div(a, b):
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return clean(Fraction(a) / b)


def format_rational(c) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


class SymFn:
    __slots__ = ("basis", "terms")

    def __init__(self, terms: Mapping | None = None, basis: str = "M", *, _trusted: bool = False):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        if _trusted:
            self.terms = terms
            return
        out: dict = {}
        for lam, c in (terms or {}).items():
            if not isinstance(c, (int, Rational)):
                raise TypeError(f"coefficient {c!r} is not an exact rational")
            key = normalize(lam)
            v = out.get(key, 0) + c
            if v:
                out[key] = clean(v)
            else:
                out.pop(key, None)
        self.terms = out

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, basis: str = "M") -> "SymFn":
        return cls({}, basis)

    @classmethod
    def one(cls, basis: str = "M") -> "SymFn":
        return cls({(): 1}, basis)

    @classmethod
    def scalar(cls, c, basis: str = "M") -> "SymFn":
        return cls({(): c}, basis)

    @classmethod
    def m(cls, *parts: int, coeff=1) -> "SymFn":
        return cls({normalize(parts): coeff}, "M")

    @classmethod
    def e(cls, *parts: int, coeff=1) -> "SymFn":
        return cls({normalize(parts): coeff}, "E")

    @classmethod
    def h(cls, *parts: int, coeff=1) -> "SymFn":
        return cls({normalize(parts): coeff}, "H")

    @classmethod
    def power_sum(cls, n: int) -> "SymFn":
        """``p_n = m_(n)``; power sums are never a storage basis."""
        return cls({(n,): 1} if n > 0 else {(): 1}, "M")

    # inspection -----------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, lam) -> object:
        return self.terms.get(normalize(lam), 0)

    def items(self):
        """Terms in canonical order (size ascending, then reverse lex)."""
        for lam in sorted(self.terms, key=canonical_key):
            yield lam, self.terms[lam]

    def degrees(self) -> set[int]:
        return {sum(lam) for lam in self.terms}

    def is_homogeneous(self, d: int | None = None) -> bool:
        ds = self.degrees()
        if not ds:
            return True
        return len(ds) == 1 and (d is None or d in ds)

    def homogeneous_part(self, d: int) -> "SymFn":
        return SymFn({k: v for k, v in self.terms.items() if sum(k) == d}, self.basis, _trusted=True)

    def truncate_degree(self, d: int) -> "SymFn":
        return SymFn({k: v for k, v in self.terms.items() if sum(k) <= d}, self.basis, _trusted=True)

    def map_coefficients(self, fn) -> "SymFn":
        return SymFn({k: fn(v) for k, v in self.terms.items()}, self.basis)

    # arithmetic -------------------------------------------------------------
    def _check(self, other: "SymFn") -> None:
        if self.basis != other.basis:
            raise BasisMismatch(f"cannot combine basis {self.basis} with {other.basis}")

    def _coerce(self, other):
        if isinstance(other, SymFn):
            self._check(other)
            return other
        if isinstance(other, (int, Rational)):
            return SymFn.scalar(other, self.basis)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = clean(s)
            else:
                del out[k]
        return SymFn(out, self.basis, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return SymFn({k: -v for k, v in self.terms.items()}, self.basis, _trusted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "SymFn":
        if not c:
            return SymFn({}, self.basis, _trusted=True)
        return SymFn({k: clean(v * c) for k, v in self.terms.items()}, self.basis, _trusted=True)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        if not isinstance(other, SymFn):
            return NotImplemented
        self._check(other)
        if self.basis == "M":
            return mono_mul(self, other)
        return SymFn(_concat_mul(self.terms, other.terms), self.basis, _trusted=True)

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, c):
        if isinstance(c, (int, Rational)):
            return SymFn({k: exact_div(v, c) for k, v in self.terms.items()}, self.basis, _trusted=True)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers need the e1-localization (LocSymFn)")
        result = SymFn.one(self.basis)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            other = SymFn.scalar(other, self.basis)
        if not isinstance(other, SymFn):
            return NotImplemented
        if other.basis != self.basis:
            other = to_basis(other, self.basis)
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def to(self, basis: str) -> "SymFn":
        return to_basis(self, basis)

    def __repr__(self) -> str:
        if not self.terms:
            return f"SymFn(0, {self.basis})"
        sym = self.basis.lower()
        parts = [f"{format_rational(c)}*{sym}{format_partition(lam)}" for lam, c in self.items()]
        return " + ".join(parts).replace("+ -", "- ")


def _concat_mul(a: Mapping, b: Mapping) -> dict:
    out: dict = {}
    get = out.get
    for la, ca in a.items():
        for lb, cb in b.items():
            key = tuple(sorted(la + lb, reverse=True)) if la and lb else (la or lb)
            out[key] = get(key, 0) + ca * cb
    return {k: clean(v) for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# m-basis structure constants


def _distribute(count: int, caps: list[int]):
    """All ways to split ``count`` into len(caps) bins, bin i holding <= caps[i]."""
    if not caps:
        if count == 0:
            yield ()
        return
    head, rest = caps[0], caps[1:]
    for take in range(min(count, head), -1, -1):
        for tail in _distribute(count - take, rest):
            yield (take,) + tail


@lru_cache(maxsize=None)
def m_structure(lam: tuple[int, ...], mu: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Expansion of ``m_lam * m_mu`` as ``((nu, coeff), ...)``.

    Each alignment is a multiset of pairs (a, b) pairing a part of ``lam``
    (or 0) with a part of ``mu`` (or 0).  It contributes
    prod_w mult_nu(w)! / prod_(a,b) n_(a,b)! to the coefficient of m_nu.
    """
    if len(lam) < len(mu):
        lam, mu = mu, lam
    lam_counts = sorted(Counter(lam).items(), reverse=True)
    mu_counts = sorted(Counter(mu).items(), reverse=True)
    lam_vals = [v for v, _ in lam_counts]
    result: dict = {}

    def rec(idx: int, remaining: list[int], pairs: list):
        if idx == len(mu_counts):
            allp = list(pairs)
            for v, r in zip(lam_vals, remaining):
                if r:
                    allp.append(((v, 0), r))
            nu_mult: Counter = Counter()
            denom = 1
            for (a, b), n in allp:
                nu_mult[a + b] += n
                denom *= factorial(n)
            num = 1
            for n in nu_mult.values():
                num *= factorial(n)
            nu = tuple(sorted(nu_mult.elements(), reverse=True))
            result[nu] = result.get(nu, 0) + num // denom
            return
        bval, bcount = mu_counts[idx]
        caps = remaining + [bcount]
        for split in _distribute(bcount, caps):
            new_remaining = [r - s for r, s in zip(remaining, split)]
            new_pairs = list(pairs)
            for v, s in zip(lam_vals, split):
                if s:
                    new_pairs.append(((v, bval), s))
            if split[-1]:
                new_pairs.append(((0, bval), split[-1]))
            rec(idx + 1, new_remaining, new_pairs)

    rec(0, [c for _, c in lam_counts], [])
    return tuple(sorted(result.items(), key=lambda kv: canonical_key(kv[0])))


def mono_mul(a: SymFn, b: SymFn) -> SymFn:
    """Exact product of two symmetric functions given in the m basis."""
    if a.basis != "M" or b.basis != "M":
        raise BasisMismatch("mono_mul needs both operands in the M basis")
    out: dict = {}
    get = out.get
    for la, ca in a.terms.items():
        for lb, cb in b.terms.items():
            c = ca * cb
            for nu, k in m_structure(la, lb):
                out[nu] = get(nu, 0) + c * k
    return SymFn({k: clean(v) for k, v in out.items() if v}, "M", _trusted=True)


# ---------------------------------------------------------------------------
# basis conversions (memoized per partition)


@lru_cache(maxsize=None)
def e_in_m(lam: tuple[int, ...]) -> dict:
    """``e_lam`` expanded in the m basis, built one column at a time."""
    if not lam:
        return {(): 1}
    rest = e_in_m(lam[1:])
    col = (1,) * lam[0]
    out: dict = {}
    get = out.get
    for nu, c in rest.items():
        for rho, k in m_structure(nu, col):
            out[rho] = get(rho, 0) + c * k
    return out


@lru_cache(maxsize=None)
def m_in_e(lam: tuple[int, ...]) -> dict:
    """``m_lam`` in the e basis by unitriangularity of e_{lam'} over m."""
    if not lam:
        return {(): 1}
    lc = conjugate(lam)
    out: dict = {lc: 1}
    for nu, c in e_in_m(lc).items():
        if nu == lam:
            continue
        for k, v in m_in_e(nu).items():
            out[k] = out.get(k, 0) - c * v
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _h_single_in_e(n: int) -> dict:
    # sum_{i=0}^n (-1)^i e_i h_{n-i} = 0
    if n == 0:
        return {(): 1}
    out: dict = {}
    for i in range(1, n + 1):
        sign = 1 if i % 2 else -1
        for k, v in _h_single_in_e(n - i).items():
            key = tuple(sorted(k + (i,), reverse=True))
            out[key] = out.get(key, 0) + sign * v
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _product_in_e(lam: tuple[int, ...]) -> dict:
    """``h_lam`` in the e basis (the same table gives e_lam in the h basis)."""
    if not lam:
        return {(): 1}
    return _concat_mul(_h_single_in_e(lam[0]), _product_in_e(lam[1:]))


def _convert(terms: Mapping, table) -> dict:
    out: dict = {}
    get = out.get
    for lam, c in terms.items():
        for k, v in table(lam).items():
            out[k] = get(k, 0) + c * v
    return {k: clean(v) for k, v in out.items() if v}


def to_basis(f: SymFn, target: str) -> SymFn:
    """Re-express ``f`` in ``target`` (one of ``M``, ``E``, ``H``)."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    src = f.basis
    if src == target:
        return f
    terms = f.terms
    if src == "H":  # H -> E (involution table)
        terms, src = _convert(terms, _product_in_e), "E"
    elif src == "M":
        terms, src = _convert(terms, m_in_e), "E"
    # src is now E
    if target == "E":
        return SymFn(terms, "E", _trusted=True)
    if target == "M":
        return SymFn(_convert(terms, e_in_m), "M", _trusted=True)
    return SymFn(_convert(terms, _product_in_e), "H", _trusted=True)


def divide_by_e1(f: SymFn) -> SymFn:
    """Return ``g`` with ``e1 * g == f``; ``f`` must be in the E basis."""
    if f.basis != "E":
        raise BasisMismatch("divide_by_e1 works on the E basis")
    out = {}
    for lam, c in f.terms.items():
        if not lam or lam[-1] != 1:
            raise NotDivisible(f"term e{format_partition(lam)} survives e1 = 0")
        out[lam[:-1]] = c
    return SymFn(out, "E", _trusted=True)


def e1_divisible(f: SymFn) -> bool:
    return all(lam and lam[-1] == 1 for lam in f.terms)


def h_expansion_in_m(n: int) -> SymFn:
    return to_basis(SymFn.h(n), "M")


def symfn_from_items(items: Iterable[tuple[Iterable[int], object]], basis: str = "M") -> SymFn:
    return SymFn({tuple(k): v for k, v in items}, basis)
