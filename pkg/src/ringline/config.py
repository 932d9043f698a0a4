"""Default size bounds and the run configuration record."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

# Largest field table we will build (q = p^r).
FIELD_SIZE_BOUND = 512

# Largest number of matrices enumerate_gl will walk (q^(m*m) candidates).
GL_ENUMERATION_BOUND = 1_000_000

# Largest graph any constructor will emit.
VERTEX_BOUND = 20_000

# Census node budget: one node per clique visited during backtracking.
CENSUS_NODE_BUDGET = 1_000_000

BUDGET_ENV_VAR = "RINGLINE_BUDGET"


def _default_workers() -> int:
    return os.cpu_count() or 1


@dataclass
class RunConfig:
    """Bounds and output options shared by the command-line entry points."""

    vertex_bound: int = VERTEX_BOUND
    census_node_budget: int = CENSUS_NODE_BUDGET
    worker_count: int = field(default_factory=_default_workers)
    output_format: str = "text"

    def __post_init__(self) -> None:
        if self.vertex_bound <= 0 or self.census_node_budget <= 0 or self.worker_count <= 0:
            raise ValueError("bounds must be positive")
        if self.output_format not in ("json", "csv", "text"):
            raise ValueError(f"unknown output format {self.output_format!r}")


def budget_from_env(default: int = CENSUS_NODE_BUDGET) -> int:
    """Census node budget, honouring the RINGLINE_BUDGET override."""
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return default
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{BUDGET_ENV_VAR} must be positive, got {raw!r}")
    return value
