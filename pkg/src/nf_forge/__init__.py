"""nf_forge: stratification checking and finite typed-universe cardinal
arithmetic for NF-style set theory."""

from .formula import parse_formula, parse_term, render, free_vars, parameters_of, ParseError
from .stratifier import stratify, stratify_wrt, check_comprehension, batch_check, read_corpus
from .universe import Universe, SetVal, LevelOverflow, BudgetExceeded
from .cardinals import Arithmetic, SymCardinal, RepCardinal, OVERFLOW

__all__ = [
    "parse_formula", "parse_term", "render", "free_vars", "parameters_of", "ParseError",
    "stratify", "stratify_wrt", "check_comprehension", "batch_check", "read_corpus",
    "Universe", "SetVal", "LevelOverflow", "BudgetExceeded",
    "Arithmetic", "SymCardinal", "RepCardinal", "OVERFLOW",
]

__version__ = "0.1.0"
