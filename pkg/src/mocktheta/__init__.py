"""Truncated q-series toolkit and congruence checker for the coefficients v0(n)
of the eighth order mock theta function V0(q)."""

from .qexpr import ParseError, evaluate, parse
from .report import Check, Report
from .series import DYADIC, ZZ, Dyadic, Ring, RingError, Series, Zmod
from .theta import (
    Monomial,
    ResourceLimitError,
    V0Table,
    euler_product,
    pochhammer,
    theta_f,
    theta_phi,
    theta_psi,
    v0_oracle,
    v0_series,
)

__all__ = [
    "DYADIC", "ZZ", "Check", "Dyadic", "Monomial", "ParseError", "Report", "ResourceLimitError", "Ring",
    "RingError", "Series", "V0Table", "Zmod", "euler_product", "evaluate", "parse", "pochhammer", "theta_f",
    "theta_phi", "theta_psi", "v0_oracle", "v0_series",
]

__version__ = "0.1.0"
