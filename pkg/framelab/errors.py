"""Exceptions raised by framelab.

Library code raises these and never prints; the command line maps each
class to its own exit code.
"""


class FramelabError(Exception):
    """Base class for every error raised by framelab."""


class LabelError(FramelabError, KeyError):
    """A label is unknown, duplicated, or the label sets of two operands differ."""

    def __str__(self):
        # KeyError quotes its argument; keep the message readable.
        return str(self.args[0]) if self.args else ""


class PreconditionError(FramelabError, ValueError):
    """The hypothesis of an operation does not hold for its input."""


class FormatError(FramelabError, ValueError):
    """Input data (JSON or matrices) is malformed."""


class ResourceLimitError(FramelabError):
    """A desk-scale size cap was exceeded."""


class BudgetExceeded(FramelabError):
    """A search ran out of budget before it could finish.

    This is never a "no": the question stays open.
    """

    def __init__(self, budget: int, spent: int, what: str = "search"):
        super().__init__(f"{what} exceeded its budget of {budget} candidates")
        self.budget = budget
        self.spent = spent
        self.what = what
