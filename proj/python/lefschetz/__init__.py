"""Exact verification of the dynamical Lefschetz trace formula on nilmanifolds.

The heavy lifting lives in the compiled extension; this package re-exports
its surface. Problem specs are JSON documents, see docs/spec-schema.json in
the source tree.
"""

from ._lefschetz import (  # noqa: F401
    SpecParseError,
    VerificationError,
    analyze,
    betti,
    char_poly,
    classify_unit_circle,
    lefschetz,
    smith_normal_form,
    validate,
    __version__,
)

__all__ = [
    "SpecParseError",
    "VerificationError",
    "analyze",
    "betti",
    "char_poly",
    "classify_unit_circle",
    "lefschetz",
    "smith_normal_form",
    "validate",
    "__version__",
]
