import os
import threading
from dataclasses import dataclass, field
from typing import Literal

from framelab.errors import BudgetExceeded, FormatError

BUDGET_ENV = "FRAMELAB_BUDGET"
DEFAULT_BUDGET = 1_000_000
TIE_BREAKS = ("lexicographic",)


def budget_from_env(default: int = DEFAULT_BUDGET) -> int:
    """FRAMELAB_BUDGET when set, else the given default."""
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise FormatError(f"{BUDGET_ENV} must be a positive integer, got {raw!r}") from None
    if value <= 0:
        raise FormatError(f"{BUDGET_ENV} must be a positive integer, got {raw!r}")
    return value


@dataclass
class SearchConfig:
    """Configuration for minor and extremal searches."""
    max_ground: int = 20  # elements
    max_candidates: int = DEFAULT_BUDGET  # candidates examined before giving up
    parallel: bool = False  # with threads == 1, use one worker per CPU
    threads: int = 1
    tie_break: Literal["lexicographic"] = "lexicographic"  # candidate sets in ground order
    show_progress: bool = False

    def __post_init__(self):
        if self.max_ground <= 0 or self.max_candidates <= 0:
            raise ValueError("search budgets must be positive")
        if self.threads < 1:
            raise ValueError("threads must be at least 1")
        if self.tie_break not in TIE_BREAKS:
            raise ValueError(f"unknown tie break {self.tie_break!r}, expected one of {TIE_BREAKS}")
        if self.threads > 1:
            self.parallel = True

    @property
    def workers(self) -> int:
        if self.threads > 1:
            return self.threads
        return (os.cpu_count() or 1) if self.parallel else 1

    def budget(self, what: str = "search") -> "SearchBudget":
        """A fresh budget, overridden by FRAMELAB_BUDGET when that is set."""
        return SearchBudget(budget_from_env(self.max_candidates), what=what)


@dataclass
class SearchBudget:
    """Monotone count of examined candidates; spending past the limit raises BudgetExceeded."""
    limit: int
    spent: int = 0
    what: str = "search"
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def spend(self, n: int = 1):
        with self._lock:
            self.spent += n
            if self.spent > self.limit:
                raise BudgetExceeded(self.limit, self.spent, self.what)

    @property
    def remaining(self) -> int:
        return max(self.limit - self.spent, 0)
