"""Enumeration budgets, overridable through the environment."""

import os

BUDGET_ENV = "EHRHART_LAB_BUDGET"

DEFAULT_IDP_BUDGET = 10**7
DEFAULT_COUNT_BUDGET = 5 * 10**7
DEFAULT_EXTENSION_BUDGET = 10**7


def budget(default: int) -> int:
    """``EHRHART_LAB_BUDGET`` (an integer) replaces every default budget when set."""
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise ValueError(f"{BUDGET_ENV} must be positive")
    return value
