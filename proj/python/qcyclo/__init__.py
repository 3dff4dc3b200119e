"""Galois groups, irreducible representations and Artin L-functions of
primary quasi-cyclotomic fields (C++ core)."""

from ._core import (
    DomainError,
    InconsistencyError,
    character_table,
    classify,
    closed_form_report,
    elements,
    frobenius,
    in_P0,
    invariant_factors_of_N,
    irreps,
    lfunction_coefficients,
    lfunction_indices,
    local_factor,
    params,
    run_cli,
    unit_value,
    unramified_zeta_identity,
    verify_irrep,
    zeta_ratio_coefficients,
)

__all__ = [
    "DomainError",
    "InconsistencyError",
    "character_table",
    "classify",
    "closed_form_report",
    "elements",
    "frobenius",
    "in_P0",
    "invariant_factors_of_N",
    "irreps",
    "lfunction_coefficients",
    "lfunction_indices",
    "local_factor",
    "params",
    "run_cli",
    "unit_value",
    "unramified_zeta_identity",
    "verify_irrep",
    "zeta_ratio_coefficients",
]
