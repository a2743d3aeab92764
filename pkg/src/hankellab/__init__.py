"""Exact Hankel determinant sequences for peak-height-avoiding Dyck paths.

The library computes, with arbitrary-precision integer arithmetic, the
counting series of Dyck paths whose peak heights avoid fixed residue
classes, the Hankel determinants of those series, and the periodic
structure those determinant sequences exhibit.
"""

from .core import (
    AvoidingSet,
    EventuallyPeriodic,
    ExactRational,
    InsufficientCoefficientsError,
    SizeLimitError,
    contains,
    normalize,
    parse_set_literal,
    render_set_literal,
    shift,
)
from .hankel import HankelSpec, hankel_det, hankel_matrix, hankel_sequence, naive_det
from .period import (
    PeriodReport,
    conjecture_check,
    covering_structure,
    detect_period,
    hankel_prefix,
    verify_claim,
)
from .reduction import Atom, Obstruction, SeriesKind, TermCombo, evaluate, reduce_step
from .series import (
    CoeffSeries,
    decrement_constant,
    dyck_count_bruteforce,
    dyck_count_dp,
    series_cf,
)
from .structure import (
    DualSequence,
    NotApplicable,
    PreconditionViolation,
    SectionPlan,
    ZeroEncountered,
    dual_sequence,
    extend_admissible,
    feasible_set,
    generate_primitive,
    is_primitive,
    predict_period,
    progression_sequence,
    section_plan,
    singleton_sequence,
    synthesize,
)

__version__ = "0.1.0"

__all__ = [
    "AvoidingSet",
    "Atom",
    "CoeffSeries",
    "DualSequence",
    "EventuallyPeriodic",
    "ExactRational",
    "HankelSpec",
    "InsufficientCoefficientsError",
    "NotApplicable",
    "Obstruction",
    "PeriodReport",
    "PreconditionViolation",
    "SectionPlan",
    "SeriesKind",
    "SizeLimitError",
    "TermCombo",
    "ZeroEncountered",
    "conjecture_check",
    "contains",
    "covering_structure",
    "decrement_constant",
    "detect_period",
    "dual_sequence",
    "dyck_count_bruteforce",
    "dyck_count_dp",
    "evaluate",
    "extend_admissible",
    "feasible_set",
    "generate_primitive",
    "hankel_det",
    "hankel_matrix",
    "hankel_prefix",
    "hankel_sequence",
    "is_primitive",
    "naive_det",
    "normalize",
    "parse_set_literal",
    "predict_period",
    "progression_sequence",
    "reduce_step",
    "render_set_literal",
    "section_plan",
    "series_cf",
    "shift",
    "singleton_sequence",
    "synthesize",
    "verify_claim",
]
