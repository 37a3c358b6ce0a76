"""Exact arithmetic for Leonardo-family sequences and their quaternions."""

from .classification import ZeroDivisorClassification, classify, classify_cross_check, is_zero_divisor_at
from .lifts import (
    UNIT_I,
    gf_coefficients,
    norm_closed_form_francois,
    norm_closed_form_lucas_leonardo,
    quaternion_recurrence_check,
    quaternion_term,
    quaternion_terms_mod,
)
from .quaternions import (
    ZZ,
    NotInvertibleError,
    PrimeField,
    Quaternion,
    annihilator_witness,
    brute_force_annihilator,
    inverse,
    is_zero_divisor,
)
from .sequences import (
    FIBONACCI,
    FRANCOIS,
    LEONARDO,
    LUCAS,
    LUCAS_LEONARDO,
    Kind,
    SequenceFamily,
    pisano_period,
    sequence_period_mod,
    term,
    term_mod,
    terms,
)
from .verifier import (
    audit_initial_displays,
    discrepancy_ledger,
    lookup,
    registry,
    run_all,
    run_identity,
    suite_passed,
)

__version__ = "0.1.0"
