"""Exact multiform engine for the 2x2 integrable hierarchy.

The heavy lifting lives in the compiled extension; this package re-exports
the main operations: closed-form multiform coefficients, flow derivatives,
and the verification suites.
"""

from ._core import (  # noqa: F401
    EngineError,
    derive_flow,
    derive_h,
    derive_l,
    derive_omega,
    run_cli,
    verify,
)

__all__ = [
    "EngineError",
    "derive_flow",
    "derive_h",
    "derive_l",
    "derive_omega",
    "run_cli",
    "verify",
]
