"""Exact rational toolkit for x_{n+1} = x_{n-3} x_{n-4} / (x_n (a_n + b_n x_{n-1} x_{n-2} x_{n-3} x_{n-4})).

Rationals may be passed as int, str ("p/q") or fractions.Fraction; results are
fractions.Fraction. Coefficients may be a scalar (constant), a list (periodic)
or a CoefficientSpec.
"""

from ._rdelab import (
    CoefficientSpec,
    ConditionViolated,
    DegenerateScale,
    DivisionByZero,
    Error,
    FormulaDenominatorZero,
    IndexBeyondExplicitData,
    ParseError,
    SeedZero,
    Trajectory,
    ValueUnavailable,
    ZeroProduct,
    constraint_check,
    forbidden_check,
    iterate,
    residue_class,
    residue_index,
    scale_ics,
    v_closed_form,
    v_sequence,
    verify_group_invariance,
    weight,
    x_const_coeff,
    x_general,
    x_two_periodic,
)

__all__ = [name for name in dir() if not name.startswith("_")]
