from __future__ import annotations

import os

DEFAULT_MAX_DIM = 3000
DEFAULT_POINT_BUDGET = 100_000
MAX_DIM_ENV = "GTDEGEN_MAX_DIM"

_override: int | None = None


class GuardError(RuntimeError):
    """A computation would exceed the configured size budget."""


def set_max_dim(value: int | None) -> None:
    """Process-wide cap used instead of the environment; None restores it."""
    global _override
    if value is not None and value < 1:
        raise ValueError("max_dim must be positive")
    _override = value


def default_max_dim() -> int:
    if _override is not None:
        return _override
    raw = os.environ.get(MAX_DIM_ENV)
    if raw is None:
        return DEFAULT_MAX_DIM
    value = int(raw)
    if value < 1:
        raise ValueError(f"{MAX_DIM_ENV} must be positive, got {raw!r}")
    return value


def check_budget(size: int, budget: int | None, what: str) -> None:
    if budget is not None and size > budget:
        raise GuardError(f"{what}: size {size} exceeds budget {budget}")
