"""Power-avoiding words, subword complexity, codewalks and run series.

Thin wrapper over the C++ core; words travel as digit strings ("0110").
"""

from cowords._core import (
    build_ab,
    census,
    check_power_free,
    closed_form,
    critical_exponent,
    decode,
    dominant_eigenvalue,
    encode,
    exponent,
    fractional_power,
    generate,
    generators,
    is_closed_codewalk,
    is_symmetric,
    longest_with_cap,
    minimal_forbidden_tm,
    minimal_period,
    mu_factorize,
    profile,
    runs,
    series_exponent,
    series_limit,
    special_factor_count,
    split_letter,
    stabilized_profile,
)

__all__ = [
    "build_ab",
    "census",
    "check_power_free",
    "closed_form",
    "critical_exponent",
    "decode",
    "dominant_eigenvalue",
    "encode",
    "exponent",
    "fractional_power",
    "generate",
    "generators",
    "is_closed_codewalk",
    "is_symmetric",
    "longest_with_cap",
    "minimal_forbidden_tm",
    "minimal_period",
    "mu_factorize",
    "profile",
    "runs",
    "series_exponent",
    "series_limit",
    "special_factor_count",
    "split_letter",
    "stabilized_profile",
]
