"""Frobenius invariants of standard graded rings S/I over F_p.

The main entry points:

    >>> from fthresh import RingContext, Ideal, FrobeniusContext, fpt_report
    >>> S = RingContext(5, ("x", "y", "z"))
    >>> R = FrobeniusContext(Ideal.parse(S, "x^2 + y*z"))
    >>> fpt_report(R, 2).fpt_lower
    [Fraction(4, 5), Fraction(24, 25)]
"""

from .bertini import FPureSequence, check_f_pure_sequence_bound, find_f_pure_linear, f_pure_sequence
from .errors import (
    ArgumentError,
    BudgetExceededError,
    ContextError,
    FieldTooSmallError,
    FThreshError,
    InvariantViolation,
    MinimalityError,
    NotArtinianError,
    NotPrincipalError,
    NotSplitError,
    ParseError,
    PreconditionError,
)
from .frobenius import (
    FrobeniusContext,
    FThresholdReport,
    GorensteinFptCertificate,
    SplittingData,
    b_invariant,
    fedder_colon,
    fpt_of_quotient_check,
    fpt_report,
    gorenstein_fpt,
    is_compatible,
    is_f_pure,
    nu_invariant,
    splitting_ideal,
    splitting_prime_estimate,
    trace,
)
from .ideal import (
    HilbertFunctionTable,
    Ideal,
    bracket_power,
    colon,
    groebner_basis,
    hilbert_function,
    ideal_power,
    ideal_product,
    ideal_sum,
    intersect,
    krull_dim,
    normal_form,
)
from .resolution import (
    AInvariants,
    BettiTable,
    GradedComplex,
    GradedFreeModule,
    a_invariants,
    betti_table,
    classify,
    free_resolution,
    homological_bounds,
)
from .ring import Polynomial, RingContext, linear_form

__version__ = "0.1.0"
