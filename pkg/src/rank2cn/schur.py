"""Skew Schur functions.

Two Jacobi-Trudi determinants (one in the e's, one in the h's) give the
expansion; a separate count of semistandard tableaux gives each Kostka
number independently, and the two are compared in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .series import named_series, series_reciprocal
from .symcore.partitions import Partition, conjugate, normalize, partitions_of
from .symcore.symfn import SymFn, to_basis


class ShapeError(ValueError):
    pass


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        outer = Partition(self.outer)
        inner = Partition(self.inner)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        if len(inner) > len(outer) or any(m > l for m, l in zip(inner, outer)):
            raise ShapeError(f"{list(inner)} is not contained in {list(outer)}")

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def inner_padded(self) -> tuple[int, ...]:
        return tuple(self.inner) + (0,) * (len(self.outer) - len(self.inner))

    def conjugate(self) -> "SkewShape":
        return SkewShape(Partition(conjugate(self.outer)), Partition(conjugate(self.inner)))

    def __str__(self):
        return f"{list(self.outer)}/{list(self.inner)}"


def staircase(n: int, m: int) -> Partition:
    """lambda(n, m): n repeated m times, followed by n-1, n-2, ..., 1."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    if n == 0:
        return Partition()
    return Partition([n] * m + list(range(n - 1, 0, -1)))


def staircase_shape(n: int, m: int) -> SkewShape:
    return SkewShape(staircase(n, m), staircase(n, 0))


def _determinant(size: int, entry, basis: str) -> SymFn:
    """Cofactor expansion along successive rows with memoized minors.

    ``entry(i, j)`` returns a SymFn (or None for zero).  Minors are keyed by the
    bitmask of columns still available; rows are consumed top to bottom.
    """
    if size == 0:
        return SymFn.one(basis)
    table = [[entry(i, j) for j in range(size)] for i in range(size)]

    @lru_cache(maxsize=None)
    def minor(row: int, cols: int) -> SymFn:
        if row == size:
            return SymFn.one(basis)
        total = SymFn.zero(basis)
        sign = 1
        for c in range(size):
            if not cols >> c & 1:
                continue
            a = table[row][c]
            if a is not None and a:
                sub = minor(row + 1, cols & ~(1 << c))
                if sub:
                    term = a * sub
                    total = total + term if sign > 0 else total - term
            sign = -sign
        return total

    return minor(0, (1 << size) - 1)


def _skew_e(shape: SkewShape) -> SymFn:
    lc = conjugate(shape.outer)
    mc = conjugate(shape.inner)
    n = len(lc)
    mc = tuple(mc) + (0,) * (n - len(mc))

    def entry(i, j):
        k = lc[i] - mc[j] + j - i
        if k < 0:
            return None
        return SymFn({(k,) if k else (): 1}, "E", _trusted=True)

    return _determinant(n, entry, "E")


def _skew_h(shape: SkewShape) -> SymFn:
    lam = tuple(shape.outer)
    mu = shape.inner_padded()
    n = len(lam)

    def entry(i, j):
        k = lam[i] - mu[j] + j - i
        if k < 0:
            return None
        return SymFn({(k,) if k else (): 1}, "H", _trusted=True)

    return _determinant(n, entry, "H")


def skew_schur(shape: SkewShape, via: str = "E", basis: str = "M") -> SymFn:
    """s_{outer/inner} from a Jacobi-Trudi determinant, returned in ``basis``."""
    if not isinstance(shape, SkewShape):
        shape = SkewShape(*shape)
    if via.upper() in ("E", "E-DETERMINANT"):
        f = _skew_e(shape)
    elif via.upper() in ("H", "H-DETERMINANT"):
        f = _skew_h(shape)
    else:
        raise ValueError(f"unknown route {via!r}")
    return to_basis(f, basis)


# ---------------------------------------------------------------------------
# tableaux


def _strips(nu: tuple[int, ...], outer: tuple[int, ...], k: int):
    """All rho with nu <= rho <= outer and rho/nu a horizontal strip of size k."""
    n = len(outer)
    out = []

    def rec(i, left, acc):
        if i == n:
            if left == 0:
                out.append(tuple(acc))
            return
        hi = outer[i] if i == 0 else min(outer[i], nu[i - 1])
        lo = nu[i]
        for v in range(min(hi, lo + left), lo - 1, -1):
            acc.append(v)
            rec(i + 1, left - (v - lo), acc)
            acc.pop()

    rec(0, k, [])
    return out


def kostka_ssyt(shape: SkewShape, content) -> int:
    """Number of semistandard fillings of ``shape`` with the given content.

    Entries are placed value by value; the cells holding each value form a
    horizontal strip, so the count is a sum over chains of such strips.
    """
    if not isinstance(shape, SkewShape):
        shape = SkewShape(*shape)
    content = tuple(int(c) for c in content if c)
    if any(c < 0 for c in content):
        raise ValueError("content entries must be nonnegative")
    if sum(content) != shape.size:
        raise ValueError(f"content has size {sum(content)} but the shape has {shape.size} cells")
    outer = tuple(shape.outer)

    @lru_cache(maxsize=None)
    def count(i: int, nu: tuple[int, ...]) -> int:
        if i == len(content):
            return 1 if nu == outer else 0
        return sum(count(i + 1, rho) for rho in _strips(nu, outer, content[i]))

    return count(0, shape.inner_padded())


def skew_schur_by_tableaux(shape: SkewShape) -> SymFn:
    """The m-expansion assembled from Kostka counts alone."""
    if not isinstance(shape, SkewShape):
        shape = SkewShape(*shape)
    terms = {}
    for lam in partitions_of(shape.size):
        c = kostka_ssyt(shape, lam)
        if c:
            terms[tuple(lam)] = c
    return SymFn(terms, "M")


# ---------------------------------------------------------------------------
# staircase identities for 1/Q and 1/E


@dataclass
class IdentityCheck:
    ok: bool
    n: int
    q_lhs: SymFn
    q_rhs: SymFn
    e_lhs: SymFn
    e_rhs: SymFn


def q_reciprocal_identity(n: int) -> IdentityCheck:
    """Compare ``e1^(n+1) [T^n] 1/Q`` with ``(-1)^n s_{lambda(n,3)/lambda(n,0)}``
    and ``[T^n] 1/E`` with ``(-1)^n s_{lambda(n,2)/lambda(n,0)}``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    sign = -1 if n % 2 else 1
    rq = series_reciprocal(named_series("Q", n + 1)).coeff(n)
    if rq.e1_power > n + 1:
        q_lhs = None
    else:
        ones = (1,) * (n + 1 - rq.e1_power)
        q_lhs = to_basis(SymFn({normalize(lam + ones): c for lam, c in rq.numerator.terms.items()}, "E"), "M")
    q_rhs = skew_schur(staircase_shape(n, 3)) * sign
    re = series_reciprocal(named_series("E", n + 1)).coeff(n, integral=True)
    e_lhs = re.to_symfn("M")
    e_rhs = skew_schur(staircase_shape(n, 2)) * sign
    ok = q_lhs is not None and q_lhs == q_rhs and e_lhs == e_rhs
    return IdentityCheck(ok, n, q_lhs, q_rhs, e_lhs, e_rhs)


__all__ = [
    "IdentityCheck",
    "ShapeError",
    "SkewShape",
    "kostka_ssyt",
    "q_reciprocal_identity",
    "skew_schur",
    "skew_schur_by_tableaux",
    "staircase",
    "staircase_shape",
]
