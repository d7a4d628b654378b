"""Exception types shared across the package.

The command line maps these onto its exit-code contract: usage and
format problems exit 2, an exhausted node budget exits 3 (the search is
inconclusive, not refuted).
"""


class ParseError(ValueError):
    """A .dg or .parts file violated the format. Carries a 1-based line number."""

    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


class BudgetExceededError(Exception):
    """A backtracking search hit its node-expansion cap before finishing."""

    def __init__(self, budget, message="node budget exceeded"):
        self.budget = budget
        super().__init__(f"{message} (budget={budget})")


class ResourceLimitError(RuntimeError):
    """An enumeration grew past a configured hard cap (edge cap, state cap)."""
