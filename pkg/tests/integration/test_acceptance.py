"""Critérios de aceitação: varreduras exaustivas e aleatórias de ponta a ponta.

Os testes marcados ``slow`` rodam na escala completa (ordem <= 12, 10^5
amostras); os demais usam grupos menores com as mesmas verificações.
"""

import io

import pytest

from src.group_core import parse_group_spec
from src.search import (
    CheckName,
    OutputFormat,
    SweepConfig,
    SweepMode,
    atlas_emit,
    count_classes,
    exhaustive_verify,
    random_verify,
)
from src.sphere import (
    equivalence_sweep_integers,
    equivalence_sweep_random,
    max_spherical_size,
)
from src.structure import converse_failures
from tests.fixtures.groups import (
    AFFINE_COUNTS,
    ALL_UP_TO_12,
    MIDCONVEX_COUNTS,
    SEMIAFFINE_COUNTS,
)

ALL_CHECKS = tuple(CheckName)
SMALL_GROUPS = ["Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z2xZ2", "Z4xZ2",
                "Z2xZ2xZ2"]


def sweep(spec: str, workers: int = 1):
    return exhaustive_verify(
        SweepConfig(group=parse_group_spec(spec), checks=ALL_CHECKS, workers=workers))


class TestTheoremSweep:
    @pytest.mark.parametrize("spec", SMALL_GROUPS)
    def test_small_groups(self, spec) -> None:
        report = sweep(spec)
        assert report.failures == []
        assert report.checked == 2 ** parse_group_spec(spec).total_order

    @pytest.mark.slow
    @pytest.mark.parametrize("spec", ALL_UP_TO_12)
    def test_every_presentation_up_to_12(self, spec) -> None:
        assert sweep(spec).failures == []


class TestConverseByConstruction:
    @pytest.mark.parametrize("spec", ["Z2", "Z4", "Z6", "Z2xZ2", "Z8", "Z2xZ4"])
    def test_small_groups(self, spec) -> None:
        assert converse_failures(parse_group_spec(spec), midconvex_cap=8) == []

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "spec", [f"Z{n}" for n in range(2, 11)] + ["Z2xZ2", "Z4xZ2", "Z2xZ2xZ2",
                                                   "Z3xZ3", "Z2xZ5"]
    )
    def test_order_up_to_10(self, spec) -> None:
        assert converse_failures(parse_group_spec(spec), midconvex_cap=8) == []


class TestCounts:
    def test_spot_checks(self) -> None:
        for spec, expected in SEMIAFFINE_COUNTS.items():
            assert count_classes(parse_group_spec(spec)).semiaffine == expected
        for spec, expected in MIDCONVEX_COUNTS.items():
            assert count_classes(parse_group_spec(spec)).midconvex == expected
        for spec, expected in AFFINE_COUNTS.items():
            assert count_classes(parse_group_spec(spec)).affine == expected

    def test_atlas_rows(self) -> None:
        sink = io.StringIO()
        groups = [parse_group_spec(spec) for spec in ("Z1", "Z2", "Z3", "Z4")]
        summary = atlas_emit(groups, sink, OutputFormat.CSV, include_timing=False)
        assert summary.rows == 4
        assert summary.failures == 0


class TestDeterminism:
    def test_worker_counts_agree(self) -> None:
        payloads = {
            workers: sweep("Z2xZ4", workers).to_payload(include_timing=False)
            for workers in (1, 2, 4)
        }
        assert payloads[1] == payloads[2] == payloads[4]

    @pytest.mark.slow
    @pytest.mark.parametrize("spec", ["Z12", "Z6xZ2", "Z3xZ3"])
    def test_worker_counts_agree_at_scale(self, spec) -> None:
        reports = [sweep(spec, workers).to_payload(include_timing=False)
                   for workers in (1, 4, 8)]
        assert reports[0] == reports[1] == reports[2]

    def test_random_sweeps_repeat(self) -> None:
        config = SweepConfig(group=parse_group_spec("Z12"), mode=SweepMode.RANDOM,
                             samples=100, seed=11, checks=ALL_CHECKS)
        first = random_verify(config).to_payload(include_timing=False)
        second = random_verify(config).to_payload(include_timing=False)
        assert first == second

    @pytest.mark.slow
    def test_random_z16(self) -> None:
        config = SweepConfig(group=parse_group_spec("Z16"), mode=SweepMode.RANDOM,
                             samples=100_000, seed=1, workers=4)
        assert random_verify(config).failures == []


class TestSphereEquivalence:
    def test_small_window(self) -> None:
        report = equivalence_sweep_integers(0, 8, 4)
        assert report.passed

    @pytest.mark.slow
    def test_full_scale(self) -> None:
        assert equivalence_sweep_integers(0, 12, 5).passed
        assert equivalence_sweep_random(100_000, seed=2026).passed
        assert max_spherical_size(0, 14) == 2
