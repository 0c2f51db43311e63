"""Partitions of integers into primes."""

from ._core import (
    ComparisonRow,
    Constants,
    Crossing,
    NumericError,
    ParseError,
    SaddleSolution,
    ValidationError,
    compare,
    constants,
    count_distinct,
    count_unrestricted,
    find_crossing,
    genfunc_coefficients,
    ln_p0,
    ln_p_as,
    ln_q0,
    ln_q_as,
    ln_z_asymptotic,
    ln_z_exact,
    log_count,
    sieve_primes,
    solve_saddle,
)

__all__ = [name for name in dir() if not name.startswith("_")]
