"""Exact intersection pairings on moduli of rank-two stable bundles.

Cup-product pairings on N_g and M_g are extracted as coefficients of formal
power series in T whose coefficients are symmetric functions.
"""

__version__ = "0.1.0"
