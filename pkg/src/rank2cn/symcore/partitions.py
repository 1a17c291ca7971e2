"""Integer partitions: construction, parsing, enumeration and canonical order."""

from __future__ import annotations

import re
from collections import Counter
from functools import lru_cache
from typing import Iterable, Iterator


class Partition(tuple):
    """A nonincreasing tuple of positive integers.

    Hashes and compares like the underlying tuple, so plain tuples can be
    used interchangeably as dictionary keys.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if parts and parts[-1] <= 0:
            raise ValueError(f"partition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        """Map part value -> number of occurrences."""
        return dict(Counter(self))

    def conjugate(self) -> "Partition":
        return Partition(conjugate(self))

    def exponent_form(self) -> str:
        return format_exponent(self)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return format_partition(self)


def normalize(parts: Iterable[int]) -> tuple[int, ...]:
    """Sort descending and drop zero parts; returns a plain tuple."""
    out = tuple(sorted((p for p in parts if p), reverse=True))
    if out and out[-1] < 0:
        raise ValueError(f"negative part in {out}")
    return out


def size(lam: tuple[int, ...]) -> int:
    return sum(lam)


def conjugate(lam: tuple[int, ...]) -> tuple[int, ...]:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def from_exponents(mults: dict[int, int]) -> tuple[int, ...]:
    """Build a partition from ``{part: multiplicity}``."""
    parts = []
    for value, count in mults.items():
        if count < 0 or value <= 0:
            raise ValueError(f"bad exponent entry {value}^{count}")
        parts.extend([value] * count)
    return normalize(parts)


def to_exponents(lam: tuple[int, ...]) -> list[tuple[int, int]]:
    """Return ``[(part, multiplicity), ...]`` with parts descending."""
    counts = Counter(lam)
    return sorted(counts.items(), reverse=True)


def format_partition(lam: tuple[int, ...]) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"


def format_exponent(lam: tuple[int, ...]) -> str:
    return " ".join(f"{p}^{m}" for p, m in to_exponents(lam))


_EXP_TOKEN = re.compile(r"^(\d+)\^(\d+)$")


def parse_partition(text: str) -> Partition:
    """Parse ``[4,2,1,1]``, ``4,2,1,1``, ``()`` or exponent form ``4^1 2^1 1^2``."""
    s = text.strip()
    if "^" in s:
        mults: Counter = Counter()
        for tok in s.replace(",", " ").split():
            m = _EXP_TOKEN.match(tok)
            if not m:
                raise ValueError(f"bad exponent token {tok!r} in {text!r}")
            mults[int(m.group(1))] += int(m.group(2))
        return Partition(from_exponents(mults))
    s = s.strip("[]() ")
    if not s:
        return Partition()
    try:
        parts = [int(p) for p in s.replace(" ", "").split(",") if p]
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}") from None
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {text!r}")
    return Partition(parts)


def canonical_key(lam: tuple[int, ...]):
    """Sort key placing smaller sizes first and, within a size, reverse lex."""
    return (sum(lam), tuple(-p for p in lam))


def sort_canonical(parts: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    return sorted(parts, key=canonical_key)


def _gen(n: int, max_part: int, allowed) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        if allowed is not None and first not in allowed:
            continue
        for rest in _gen(n - first, first, allowed):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _all_partitions(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(_gen(n, n, None))


def partitions_of(n: int, max_part: int | None = None,
                  parts_from: Iterable[int] | None = None) -> list[Partition]:
    """All partitions of ``n`` in descending lexicographic order.

    >>> partitions_of(3)
    [Partition([3]), Partition([2, 1]), Partition([1, 1, 1])]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    allowed = frozenset(parts_from) if parts_from is not None else None
    mp = n if max_part is None else max_part
    if allowed is None and mp >= n:
        raw = _all_partitions(n)
    else:
        raw = _gen(n, mp, allowed)
    return [Partition(p) for p in raw]


def raw_partitions(n: int) -> tuple[tuple[int, ...], ...]:
    """Cached plain-tuple partitions of ``n`` (descending lex)."""
    return _all_partitions(n)


def dominates(lam: tuple[int, ...], mu: tuple[int, ...]) -> bool:
    """True when ``lam >= mu`` in dominance order (equal sizes assumed)."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True
