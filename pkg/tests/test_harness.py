import json
import logging
import os
from datetime import datetime

import pytest
from hypothesis import given, settings, strategies as st

from structctrl.core.pattern import Pattern
from structctrl.core.se_algebra import larc_exact
from structctrl.harness import (
    CONTROLLABLE_WHP, INCONCLUSIVE, MemoryManager, check_inclusion_monotone, close_logger,
    create_summary_report, k_input_check, min_inputs, setup_logging, sweep, sweep_table,
)
from structctrl.harness.reporting import controllable_counts_by_size


@pytest.mark.parametrize("n, total, controllable", [(1, 2, 1), (2, 8, 3), (3, 64, None), (4, 1024, None)])
def test_sweep_agrees_everywhere(n, total, controllable):
    report = sweep(n)
    assert report.patterns_total == total
    assert report.agree == total
    assert report.passed
    assert report.agree + len(report.disagreements) == report.patterns_total
    if controllable is not None:
        assert report.controllable == controllable


def test_sweep_controllable_patterns_for_n2():
    report = sweep(2)
    found = {r.pattern for r in report.rows if r.oracle}
    assert found == {
        Pattern.from_pairs(2, [(1, 2), (1, 3)]),
        Pattern.from_pairs(2, [(1, 2), (2, 3)]),
        Pattern.from_pairs(2, [(1, 2), (1, 3), (2, 3)]),
    }


def test_sweep_only_full_pattern_for_n1():
    report = sweep(1)
    assert [r.pattern for r in report.rows if r.oracle] == [Pattern.from_pairs(1, [(1, 2)])]


@pytest.mark.parametrize("n", [0, 5])
def test_sweep_range(n):
    with pytest.raises(ValueError):
        sweep(n)


def test_sweep_rejects_zero_workers():
    with pytest.raises(ValueError):
        sweep(2, workers=0)


def test_parallel_sweep_matches_serial():
    serial = sweep(3)
    parallel = sweep(3, workers=2)
    assert [r.mask for r in parallel.rows] == list(range(64))
    assert parallel.rows == serial.rows
    assert parallel.controllable == serial.controllable


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_controllability_is_monotone_under_inclusion(n):
    assert check_inclusion_monotone(sweep(n)) == []


def test_sweep_report_to_dict():
    payload = sweep(2).to_dict(include_rows=True)
    assert payload["patterns_total"] == 8
    assert payload["agree"] == 8
    assert payload["disagreements"] == []
    assert len(payload["rows"]) == 8
    assert "rows" not in sweep(1).to_dict()


def test_k_input_check_examples(path_pattern, disconnected_pattern):
    report = k_input_check(path_pattern, 2, trials=5, seed=42)
    assert report.verdict == CONTROLLABLE_WHP
    assert report.successes == 1

    report = k_input_check(path_pattern, 1, trials=5, seed=42)
    assert report.verdict == INCONCLUSIVE
    assert report.successes == 0
    assert report.trials_run == 5

    report = k_input_check(disconnected_pattern, 3, trials=10, seed=42)
    assert report.verdict == INCONCLUSIVE


def test_k_input_check_is_deterministic(path_pattern):
    first = k_input_check(path_pattern, 2, trials=5, seed=7)
    second = k_input_check(path_pattern, 2, trials=5, seed=7)
    assert first == second
    assert first.to_dict()["verdict"] == CONTROLLABLE_WHP


def test_k_input_check_argument_checks(path_pattern):
    with pytest.raises(ValueError):
        k_input_check(path_pattern, 0)
    with pytest.raises(ValueError):
        k_input_check(path_pattern, 2, trials=0)


@pytest.mark.parametrize("seed", range(20))
def test_min_inputs_of_path_pattern(path_pattern, seed):
    assert min_inputs(path_pattern, trials=5, seed=seed) == 2


def test_min_inputs_examples(disconnected_pattern):
    assert min_inputs(disconnected_pattern, trials=5, seed=42) is None
    assert min_inputs(Pattern.from_pairs(1, [(1, 2)]), trials=5, seed=42) == 1


def test_min_inputs_with_drift(path_pattern):
    assert min_inputs(path_pattern, trials=5, seed=42, drift=True) == 1


@given(seed=st.integers(min_value=0, max_value=2**32 - 1),
       mask=st.integers(min_value=0, max_value=2**10 - 1),
       m=st.integers(min_value=1, max_value=3))
@settings(max_examples=1000, deadline=None)
def test_numeric_success_implies_exact_larc(seed, mask, m):
    pattern = Pattern.from_mask(4, mask)
    report = k_input_check(pattern, m, trials=1, seed=seed)
    if report.verdict == CONTROLLABLE_WHP:
        assert larc_exact(pattern)


def test_sweep_table_and_counts():
    report = sweep(2)
    table = sweep_table(report)
    assert len(table) == 8
    assert list(table.columns) == ["mask", "lambda", "size", "closure", "connectivity", "oracle", "agrees"]
    assert table["agrees"].all()
    assert controllable_counts_by_size(report) == {0: 0, 1: 0, 2: 2, 3: 1}


def test_create_summary_report(tmp_path):
    reports = [sweep(1), sweep(2)]
    json_file, text_file, csv_files = create_summary_report(reports, str(tmp_path))
    with open(json_file, encoding="utf-8") as f:
        summary = json.load(f)
    assert summary["total_patterns"] == 10
    assert summary["all_agree"] is True
    assert [s["n"] for s in summary["sweeps"]] == [1, 2]
    assert os.path.isfile(text_file)
    assert len(csv_files) == 2
    assert all(os.path.isfile(path) for path in csv_files)


def test_summary_reports_in_the_same_second_do_not_overwrite(tmp_path, monkeypatch):
    import structctrl.harness.reporting as reporting

    class FrozenClock:
        @staticmethod
        def now():
            return datetime(2024, 1, 1, 12, 0, 0)

    monkeypatch.setattr(reporting, "datetime", FrozenClock)
    first = create_summary_report([sweep(1)], str(tmp_path))
    second = create_summary_report([sweep(1)], str(tmp_path))
    third = create_summary_report([sweep(1), sweep(2)], str(tmp_path))
    paths = [first[0], first[1], *first[2], second[0], second[1], *second[2], third[0], third[1], *third[2]]
    assert len(set(paths)) == len(paths)
    assert all(os.path.isfile(path) for path in paths)
    assert os.path.basename(first[0]) == "summary_20240101_120000_n1.json"
    assert os.path.basename(second[0]) == "summary_20240101_120000_n1_2.json"
    assert os.path.basename(third[0]) == "summary_20240101_120000_n1-2.json"


def test_memory_manager_tick():
    manager = MemoryManager(limit_percent=100.0, check_interval=4)
    assert not manager.tick(3)
    assert manager.peak_mb == 0.0
    assert not manager.tick(2)
    assert manager.peak_mb > 0.0
    usage = MemoryManager.get_memory_usage()
    assert set(usage) == {"usage_mb", "percent", "system_percent", "system_available_mb"}


def test_setup_logging_writes_file(tmp_path):
    logger = setup_logging(str(tmp_path), "unit", verbose=True)
    logging.getLogger("structctrl.harness.sweep").debug("hello from sweep")
    close_logger(logger)
    logs = list(tmp_path.glob("unit_*.log"))
    assert len(logs) == 1
    assert "hello from sweep" in logs[0].read_text(encoding="utf-8")
