"""
q-expansions, candidate newforms and point-count verdicts.
"""

from .newforms import (
    BUILTIN_FORMS,
    AnchorMismatchError,
    CoefficientFileError,
    NewformSpec,
    eta_form,
    prime_coeffs,
    resolve_form,
)
from .series import (
    EtaQuotientError,
    EtaQuotientSpec,
    ModularError,
    QSeries,
    TruncationError,
    eta_quotient,
    euler_product,
    naive_product,
    pentagonal_terms,
)
from .verdicts import (
    TRACE_SHAPES,
    FitError,
    VerdictError,
    congruence_match,
    esnault_guess,
    exact_cy3_fit,
    fit_verdict,
    good_records,
    lefschetz_trace,
    weil_bound_check,
)

__all__ = [
    "BUILTIN_FORMS",
    "TRACE_SHAPES",
    "AnchorMismatchError",
    "CoefficientFileError",
    "EtaQuotientError",
    "EtaQuotientSpec",
    "FitError",
    "ModularError",
    "NewformSpec",
    "QSeries",
    "TruncationError",
    "VerdictError",
    "congruence_match",
    "esnault_guess",
    "eta_form",
    "eta_quotient",
    "euler_product",
    "exact_cy3_fit",
    "fit_verdict",
    "good_records",
    "lefschetz_trace",
    "naive_product",
    "pentagonal_terms",
    "prime_coeffs",
    "resolve_form",
    "weil_bound_check",
]
