"""Varreduras exaustivas e aleatórias que verificam os resultados estruturais."""

from .checks import check_subset, classify_counts, evaluate_block, shift_orbit
from .models import (
    AtlasSummary,
    BlockResult,
    CheckName,
    ClassCounts,
    OutputFormat,
    SweepConfig,
    SweepFailure,
    SweepMode,
    SweepReport,
)
from .orchestrator import SweepOrchestrator
from .sweeps import (
    ATLAS_COLUMNS,
    atlas_emit,
    count_classes,
    exhaustive_verify,
    random_verify,
)

__all__ = [
    "ATLAS_COLUMNS",
    "AtlasSummary",
    "BlockResult",
    "CheckName",
    "ClassCounts",
    "OutputFormat",
    "SweepConfig",
    "SweepFailure",
    "SweepMode",
    "SweepOrchestrator",
    "SweepReport",
    "atlas_emit",
    "check_subset",
    "classify_counts",
    "count_classes",
    "evaluate_block",
    "exhaustive_verify",
    "random_verify",
    "shift_orbit",
]
