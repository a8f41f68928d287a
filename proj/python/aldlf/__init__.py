"""Linear dynamic logic on finite traces with path automata.

Thin wrapper around the C++ core: parse formulas and traces, evaluate by
direct semantics, compile to alternating automata, and decide
satisfiability and equivalence with witness traces.
"""

from ._aldlf import (
    Afw,
    Formula,
    FormulaParseError,
    SearchLimitError,
    Trace,
    compile_formula,
    equivalence,
    evaluate,
    is_satisfiable,
    parse_formula,
    parse_ltlf,
    parse_trace,
)

__all__ = [
    "Afw",
    "Formula",
    "FormulaParseError",
    "SearchLimitError",
    "Trace",
    "compile_formula",
    "equivalence",
    "evaluate",
    "is_satisfiable",
    "parse_formula",
    "parse_ltlf",
    "parse_trace",
]
