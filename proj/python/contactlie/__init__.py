"""Exact computations in contact Lie algebras K(ell, sigma, Gamma, J)."""

from ._contactlie import (
    AmbiguousError,
    Config,
    ConfigError,
    DecompositionError,
    Element,
    ParseError,
    ResidualError,
    TrivializationError,
    bracket,
    bracket_operator,
    check_derivation,
    decompose,
    run_suite,
    structure_table,
    table_csv,
    trivialize_coboundary,
    verify_coboundary,
    window,
)

__all__ = [
    "AmbiguousError",
    "Config",
    "ConfigError",
    "DecompositionError",
    "Element",
    "ParseError",
    "ResidualError",
    "TrivializationError",
    "bracket",
    "bracket_operator",
    "check_derivation",
    "decompose",
    "run_suite",
    "structure_table",
    "table_csv",
    "trivialize_coboundary",
    "verify_coboundary",
    "window",
]
