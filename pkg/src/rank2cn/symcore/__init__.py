from .partitions import (
    Partition,
    canonical_key,
    conjugate,
    format_exponent,
    format_partition,
    from_exponents,
    normalize,
    parse_partition,
    partitions_of,
    sort_canonical,
    to_exponents,
)
from .specialize import SpecValue, specialize_ev2, specialize_ex, specialize_exbar
from .symfn import (
    BasisMismatch,
    NotDivisible,
    SymFn,
    divide_by_e1,
    format_rational,
    mono_mul,
    parse_rational,
    to_basis,
)

__all__ = [
    "BasisMismatch",
    "NotDivisible",
    "Partition",
    "SpecValue",
    "SymFn",
    "canonical_key",
    "conjugate",
    "divide_by_e1",
    "format_exponent",
    "format_partition",
    "format_rational",
    "from_exponents",
    "mono_mul",
    "normalize",
    "parse_partition",
    "parse_rational",
    "partitions_of",
    "sort_canonical",
    "specialize_ev2",
    "specialize_ex",
    "specialize_exbar",
    "to_basis",
    "to_exponents",
]
