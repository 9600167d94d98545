from .diagnostics import Diagnostic, collect_diagnostics
from .mealy_automaton import MealyAutomaton, Symbol, Word

__all__ = [
    "Diagnostic",
    "collect_diagnostics",
    "MealyAutomaton",
    "Symbol",
    "Word",
]
