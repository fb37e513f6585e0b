"""Enumeration budgets shared by the exhaustive routines."""

from __future__ import annotations

DEFAULT_BUDGET = 1 << 20


class BudgetExceededError(Exception):
    """An exhaustive computation would exceed its enumeration budget.

    Carries the budget actually required so callers can opt in explicitly.
    """

    def __init__(self, what: str, required: int, budget: int):
        self.what = what
        self.required = required
        self.budget = budget
        super().__init__(
            f"{what} requires an enumeration budget of {required} "
            f"(current budget {budget}); pass a larger budget to proceed"
        )


def check_budget(what: str, required: int, budget: int) -> None:
    if required > budget:
        raise BudgetExceededError(what, required, budget)
