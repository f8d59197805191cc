"""Exception types shared across the package."""


class UnsupportedError(Exception):
    """A requested mode, field, or host is outside the supported catalog."""


class BudgetError(Exception):
    """Materializing the requested structure would exceed the size budget."""

    def __init__(self, message, required=None, budget=None):
        super().__init__(message)
        self.required = required
        self.budget = budget
