"""Second Hankel determinant workbench.

Coefficients of class members from their Schwarz functions, the sharp
bound |a2 a4 - a3^2| <= (2 gamma / (2 - alpha))^2, grid certificates for the
inequalities behind it, and a maximizer over the Schwarz coefficient body.
"""

from .coefmap import ClassParams, CoefficientTriple, closed_form_coefficients, gamma_max, solve_coefficients
from .hankel import bound, h22, proof_intermediates, triangle_bound
from .powser import Series
from .schwarz import SchurParams, SchwarzCoeffs, coeffs_from_schur, validate_coeffs
from .search import SearchConfig, SearchReport, brute_force_grid, maximize_h22

__version__ = "0.1.0"

__all__ = [
    "ClassParams",
    "CoefficientTriple",
    "SchurParams",
    "SchwarzCoeffs",
    "SearchConfig",
    "SearchReport",
    "Series",
    "bound",
    "brute_force_grid",
    "closed_form_coefficients",
    "coeffs_from_schur",
    "gamma_max",
    "h22",
    "maximize_h22",
    "proof_intermediates",
    "solve_coefficients",
    "triangle_bound",
    "validate_coeffs",
]
