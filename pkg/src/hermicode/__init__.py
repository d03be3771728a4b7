"""Hermitian codes over GF(q^2): distances and minimum-weight supports."""

from .code import CodeLabelError, Codeword, HermitianCode, build_code, canonical_label
from .curve import CurvePoint, Divisor, enumerate_points
from .field import FieldContext, FieldElement, field_for_q, make_field
from .groebner import Footprint, GroebnerBasis, Polynomial, vanishing_ideal
from .minwords import (
    SupportCertificate,
    TheoremViolation,
    Verdict,
    classify_support,
    distance,
    lower_bound,
)
from .oracle import BudgetExceeded, brute_force_distance, check_prop28, enumerate_min_supports
from .semigroup import Monomial, code_label_info, code_labels, gaps, is_code_label

__all__ = [
    "BudgetExceeded",
    "CodeLabelError",
    "Codeword",
    "CurvePoint",
    "Divisor",
    "FieldContext",
    "FieldElement",
    "Footprint",
    "GroebnerBasis",
    "HermitianCode",
    "Monomial",
    "Polynomial",
    "SupportCertificate",
    "TheoremViolation",
    "Verdict",
    "brute_force_distance",
    "build_code",
    "canonical_label",
    "check_prop28",
    "classify_support",
    "code_label_info",
    "code_labels",
    "distance",
    "enumerate_min_supports",
    "enumerate_points",
    "field_for_q",
    "gaps",
    "is_code_label",
    "lower_bound",
    "make_field",
    "vanishing_ideal",
]

__version__ = "0.1.0"
