from framelab.search.config import BUDGET_ENV, DEFAULT_BUDGET, SearchBudget, SearchConfig, budget_from_env
from framelab.search.density import CoframeReport, coframe_density_check, vertically_connected_filter
from framelab.search.extremal import ExtremalResult, max_simple_no_minor
from framelab.search.minors import has_minor

__all__ = [
    "BUDGET_ENV",
    "DEFAULT_BUDGET",
    "CoframeReport",
    "ExtremalResult",
    "SearchBudget",
    "SearchConfig",
    "budget_from_env",
    "coframe_density_check",
    "has_minor",
    "max_simple_no_minor",
    "vertically_connected_filter",
]
