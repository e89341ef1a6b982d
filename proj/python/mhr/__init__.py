"""Exact arithmetic for the Markoff-Hurwitz equation x1^2+...+xn^2 = a*x1*...*xn + k.

Thin re-export of the compiled core.  Coordinates go in and out as python
ints; structured results (reduce, solve, ...) come back as the same dicts the
mhr command line tool writes, with big integers rendered as decimal strings.
Move words and coordinate indices are 1-based, matching the file formats.
"""

from mhr._core import (
    Error,
    NotOnVarietyError,
    ReductionStuckError,
    StructuralError,
    apply_word,
    double_sign,
    equivalence_word,
    equivalent,
    fundamental_domain,
    graph,
    height,
    is_canonical,
    is_last_vertex,
    negate_a,
    normalize,
    on_variety,
    orbits,
    permute,
    reduce,
    solve,
    stratum,
    variety_value,
    verify,
    vieta,
)

__version__ = "0.1.0"

__all__ = [
    "Error",
    "NotOnVarietyError",
    "ReductionStuckError",
    "StructuralError",
    "apply_word",
    "double_sign",
    "equivalence_word",
    "equivalent",
    "fundamental_domain",
    "graph",
    "height",
    "is_canonical",
    "is_last_vertex",
    "negate_a",
    "normalize",
    "on_variety",
    "orbits",
    "permute",
    "reduce",
    "solve",
    "stratum",
    "variety_value",
    "verify",
    "vieta",
]
