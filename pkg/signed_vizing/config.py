"""Configuration dataclasses and desk-scale guard constants."""
from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

DEFAULT_SEED = 0
DEFAULT_JOBS = 1
DEFAULT_SELFCHECK_JOBS = os.cpu_count() or 1
DEFAULT_SELFCHECK_COUNT = 1000
DEFAULT_SELFCHECK_MAX_VERTICES = 30
DEFAULT_DENSITIES = (0.2, 0.5, 0.8)

# Exhaustive oracles. These are verification tools, not production algorithms.
FRUSTRATION_MAX_COMPONENT_VERTICES = 24
EXACT_MAX_EDGES = 20
CLASS_RATIO_MAX_EDGES = 14
MATCHING_MAX_VERTICES = 16
CHI_R_MAX_EDGES = 14
CHI_STAR_MAX_VERTICES = 10
DELTA0_MAX_EDGES = 12
CHI_A_MAX_EDGES = 12
TOTAL_MAX_VERTICES = 5
HAMILTONIAN_MAX_VERTICES = 16
LINEAR_ARBORICITY_MAX_EDGES = 10

ROUND_CAP_FACTOR = 4
ROUND_CAP_BASE = 16

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IMPROPER = 2
EXIT_EDGE_LAW = 3
EXIT_SIZE_GUARD = 4
EXIT_DIAGNOSTIC = 5


@dataclass
class EngineConfig:
    """Extension engine configuration."""

    verify_steps: bool = False
    round_cap_factor: int = ROUND_CAP_FACTOR
    round_cap_base: int = ROUND_CAP_BASE

    def round_cap(self, m: int) -> int:
        """Maximum number of engine steps allowed for one extension on m edges."""
        return self.round_cap_factor * m + self.round_cap_base


@dataclass
class RunConfig:
    """CLI run configuration."""

    command: str
    seed: int = DEFAULT_SEED
    jobs: int = DEFAULT_JOBS
    emit_witness: bool = False
    unsigned: bool = False
    output: Path | None = None
    manifest: bool = False
    verify_steps: bool = False

    def engine(self) -> EngineConfig:
        """Engine settings derived from this run."""
        return EngineConfig(verify_steps=self.verify_steps)
