"""Testes das varreduras, da deduplicação por translação e do atlas."""

import io
import json

import pytest
from pydantic import ValidationError

from src.config import Settings
from src.search import (
    ATLAS_COLUMNS,
    CheckName,
    OutputFormat,
    SweepConfig,
    SweepMode,
    atlas_emit,
    count_classes,
    evaluate_block,
    exhaustive_verify,
    random_verify,
    shift_orbit,
)
from src.utils.errors import CapExceededError

ALL_CHECKS = tuple(CheckName)


class TestSweepConfig:
    def test_defaults(self, group) -> None:
        config = SweepConfig(group=group("Z4"))
        assert config.mode == SweepMode.EXHAUSTIVE
        assert config.upper == 16
        assert config.checks == (CheckName.THEOREM,)

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"hi": 17},
            {"lo": 5, "hi": 4},
            {"mode": SweepMode.RANDOM},
            {"seed": 3},
            {"dedupe_shifts": True, "hi": 8},
            {"workers": 0},
        ],
    )
    def test_invalid(self, group, kwargs) -> None:
        with pytest.raises(ValidationError):
            SweepConfig(group=group("Z4"), **kwargs)


class TestExhaustiveVerify:
    @pytest.mark.parametrize(
        "spec,checked,semiaffine", [("Z4", 16, 12), ("Z3", 8, 8), ("Z1", 2, 2)]
    )
    def test_counts(self, group, spec, checked, semiaffine) -> None:
        report = exhaustive_verify(SweepConfig(group=group(spec)))
        assert report.checked == checked
        assert report.failures == []
        assert report.counts.semiaffine == semiaffine

    def test_all_checks_on_small_group(self, group) -> None:
        report = exhaustive_verify(SweepConfig(group=group("Z2xZ4"), checks=ALL_CHECKS))
        assert report.passed
        assert report.checked == 256

    def test_subrange(self, group) -> None:
        report = exhaustive_verify(SweepConfig(group=group("Z4"), lo=4, hi=10))
        assert report.checked == 6

    def test_cap(self, group) -> None:
        settings = Settings(exhaustive_cap=4)
        with pytest.raises(CapExceededError):
            exhaustive_verify(SweepConfig(group=group("Z5")), settings)

    def test_wrong_mode(self, group) -> None:
        config = SweepConfig(group=group("Z4"), mode=SweepMode.RANDOM, seed=1)
        with pytest.raises(ValueError):
            exhaustive_verify(config)

    def test_workers_do_not_change_report(self, group) -> None:
        G = group("Z6")
        single = exhaustive_verify(SweepConfig(group=G, checks=ALL_CHECKS))
        parallel = exhaustive_verify(
            SweepConfig(group=G, checks=ALL_CHECKS, workers=2))
        assert single.to_payload(include_timing=False) == parallel.to_payload(
            include_timing=False)


class TestCountClasses:
    @pytest.mark.parametrize(
        "spec,affine,semiaffine,midconvex",
        [("Z1", 2, 2, 2), ("Z2", 4, 4, 2), ("Z3", 5, 8, 5), ("Z4", 8, 12, None)],
    )
    def test_counts(self, group, spec, affine, semiaffine, midconvex) -> None:
        counts = count_classes(group(spec))
        assert counts.total == 2 ** group(spec).total_order
        assert counts.affine == affine
        assert counts.semiaffine == semiaffine
        if midconvex is not None:
            assert counts.midconvex == midconvex

    def test_affine_bounded_by_semiaffine(self, group) -> None:
        for spec in ("Z6", "Z2xZ2", "Z7"):
            counts = count_classes(group(spec))
            assert counts.affine <= counts.semiaffine

    @pytest.mark.parametrize("spec", ["Z6", "Z2xZ4", "Z3xZ3"])
    def test_dedupe_preserves_counts(self, group, spec) -> None:
        G = group(spec)
        assert count_classes(G, dedupe_shifts=True) == count_classes(G)

    def test_dedupe_checks_representatives_only(self, group) -> None:
        report = exhaustive_verify(SweepConfig(group=group("Z4"), dedupe_shifts=True))
        # Órbitas de Z4 sobre 2^4 subconjuntos: 6 classes de translação.
        assert report.checked == 6
        assert report.counts.total == 16


class TestShiftOrbit:
    def test_orbit(self, group) -> None:
        representative, size = shift_orbit(0b0110, group("Z4"))
        assert representative == 0b0011
        assert size == 4

    def test_periodic_orbit(self, group) -> None:
        assert shift_orbit(0b0101, group("Z4")) == (0b0101, 2)


class TestRandomVerify:
    def test_reproducible(self, group) -> None:
        config = SweepConfig(group=group("Z16"), mode=SweepMode.RANDOM,
                             samples=50, seed=1)
        first = random_verify(config)
        second = random_verify(config)
        assert first.failures == []
        assert first.checked == 50
        assert first.to_payload(include_timing=False) == second.to_payload(
            include_timing=False)

    def test_zero_samples(self, group) -> None:
        config = SweepConfig(group=group("Z16"), mode=SweepMode.RANDOM,
                             samples=0, seed=1)
        report = random_verify(config)
        assert report.checked == 0
        assert report.failures == []

    def test_all_checks_on_samples(self, group) -> None:
        G = group("Z8")
        config = SweepConfig(group=G, mode=SweepMode.RANDOM, samples=20, seed=5,
                             checks=ALL_CHECKS)
        sampled = random_verify(config)
        assert sampled.counts.total == 20
        assert sampled.failures == []

    def test_agrees_with_exhaustive_per_subset(self, group) -> None:
        G = group("Z6")
        for bits in range(1 << G.total_order):
            window = {"lo": bits, "hi": bits + 1, "checks": ALL_CHECKS}
            exhaustive = exhaustive_verify(SweepConfig(group=G, **window))
            sampled = random_verify(SweepConfig(
                group=G, mode=SweepMode.RANDOM, samples=3, seed=bits, **window))
            assert sampled.checked == 3
            for field, value in exhaustive.counts.model_dump().items():
                assert getattr(sampled.counts, field) == 3 * value
            assert {(f.check, f.detail) for f in sampled.failures} == {
                (f.check, f.detail) for f in exhaustive.failures}

    def test_order_limit(self, group) -> None:
        settings = Settings(random_max_order=10)
        config = SweepConfig(group=group("Z12"), mode=SweepMode.RANDOM,
                             samples=1, seed=0)
        with pytest.raises(CapExceededError):
            random_verify(config, settings)


class TestEvaluateBlock:
    def test_block_reports_failures_per_subset(self) -> None:
        result = evaluate_block((4,), range(16), ("theorem",))
        assert result.checked == 16
        assert result.failures == []
        assert result.counts.semiaffine == 12


class TestAtlas:
    def test_csv_rows(self, group) -> None:
        sink = io.StringIO()
        summary = atlas_emit([group(f"Z{n}") for n in range(1, 5)], sink,
                             include_timing=False)
        lines = sink.getvalue().splitlines()
        assert lines[0] == ",".join(ATLAS_COLUMNS)
        assert summary.rows == 4
        assert summary.failures == 0
        semiaffine = [int(line.split(",")[4]) for line in lines[1:]]
        assert semiaffine == [2, 4, 8, 12]
        assert all(line.endswith(",0,") for line in lines[1:])

    def test_empty_group_list(self) -> None:
        sink = io.StringIO()
        summary = atlas_emit([], sink)
        assert summary.rows == 0
        assert sink.getvalue().splitlines() == [",".join(ATLAS_COLUMNS)]

    def test_json_lines(self, group) -> None:
        sink = io.StringIO()
        atlas_emit([group("Z2xZ2")], sink, fmt=OutputFormat.JSON,
                   include_timing=False)
        row = json.loads(sink.getvalue())
        assert list(row) == list(ATLAS_COLUMNS)
        assert row["group"] == "Z2xZ2"
        assert row["failures"] == 0
        assert row["seconds"] is None
