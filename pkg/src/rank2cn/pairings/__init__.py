"""Intersection pairings on N_g and M_g."""

from .abc import AbcPoly, ResidualBetaDenominator, class_in_abc
from .cn import (
    CNPolynomial,
    DegreeMismatch,
    ResourceGuardError,
    check_genus,
    cn_tangent,
    cn_xi,
    cn_z,
    max_genus,
)
from .handles import B1Report, b1_pairing, b_vanishes, mrec_pairing, psi_vanishes, vanishing_predicates
from .identities import (
    a1_top_checks,
    a1_top_closed_form,
    alpha_top_checks,
    c1_top_via_ex,
    xipair_identity,
)
from .newstead import BernoulliTable, bernoulli, pairing_ab, pairing_newstead
from .twist import cn_d, cn_delta, d_pairing, delta_in_xi, delta_pairing, twist_transform, xi_pairing

__all__ = [
    "AbcPoly",
    "B1Report",
    "BernoulliTable",
    "CNPolynomial",
    "DegreeMismatch",
    "ResidualBetaDenominator",
    "ResourceGuardError",
    "a1_top_checks",
    "a1_top_closed_form",
    "alpha_top_checks",
    "b1_pairing",
    "b_vanishes",
    "bernoulli",
    "c1_top_via_ex",
    "check_genus",
    "class_in_abc",
    "cn_d",
    "cn_delta",
    "cn_tangent",
    "cn_xi",
    "cn_z",
    "d_pairing",
    "delta_in_xi",
    "delta_pairing",
    "max_genus",
    "mrec_pairing",
    "pairing_ab",
    "pairing_newstead",
    "psi_vanishes",
    "twist_transform",
    "vanishing_predicates",
    "xi_pairing",
    "xipair_identity",
]
