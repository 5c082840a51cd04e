"""Companion newforms mod ell, their PGL_2(F_ell) number fields, and root discriminants."""

from .companions import TripleParams, match_field_to_pair, scan_corpus, sturm_bound, verify_companion
from .intpoly import IntPolynomial, Partition, discriminant, factor_mod, frobenius_partition
from .newforms import NewformData, read_newform, write_newform
from .pgl2 import class_table, match
from .qseries import QSeries, eta_product, theta_hex

__all__ = [
    "IntPolynomial",
    "NewformData",
    "Partition",
    "QSeries",
    "TripleParams",
    "class_table",
    "discriminant",
    "eta_product",
    "factor_mod",
    "frobenius_partition",
    "match",
    "match_field_to_pair",
    "read_newform",
    "scan_corpus",
    "sturm_bound",
    "theta_hex",
    "verify_companion",
    "write_newform",
]

__version__ = "0.1.0"
