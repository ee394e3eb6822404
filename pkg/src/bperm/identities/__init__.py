"""Identity checkers, closed forms and the bijection phi."""

from .families import (
    CapExceeded,
    d_closed_form,
    derangement_numbers,
    enum_counts,
    enum_polynomial,
    fix_closed_form,
    length_closed_form,
)
from .phi import HasFixedPoint, NotDesarrangement, desarmenien_f, f_inverse, phi, phi_inverse
from .registry import IDENTITY_IDS, REGISTRY, Params, UnknownIdentity, VerifyReport, verify, verify_all

__all__ = [
    "CapExceeded",
    "HasFixedPoint",
    "IDENTITY_IDS",
    "NotDesarrangement",
    "Params",
    "REGISTRY",
    "UnknownIdentity",
    "VerifyReport",
    "d_closed_form",
    "derangement_numbers",
    "desarmenien_f",
    "enum_counts",
    "enum_polynomial",
    "f_inverse",
    "fix_closed_form",
    "length_closed_form",
    "phi",
    "phi_inverse",
    "verify",
    "verify_all",
]
