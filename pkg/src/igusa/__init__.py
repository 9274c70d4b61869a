"""Exact Igusa p-adic zeta functions of integer polynomials over Q_p."""

from .context import PadicContext
from .poly import MultiPoly, parse_poly
from .qpoly import QPoly
from .radical import RadicalScalar, ResidueValue
from .zeta import (
    PoincareSeries,
    ZetaRational,
    eval_at_one,
    laurent_at,
    one_var_integral,
    poincare_from_zeta,
)

__all__ = [
    "PadicContext",
    "MultiPoly",
    "parse_poly",
    "QPoly",
    "RadicalScalar",
    "ResidueValue",
    "PoincareSeries",
    "ZetaRational",
    "eval_at_one",
    "laurent_at",
    "one_var_integral",
    "poincare_from_zeta",
]
