"""The reproduction harness: named checks, reports, and the fuzzers."""

import json

import pytest

from iftopsis.errors import DomainError, UnknownCheck
from iftopsis.measures import XYMetric, ZXMetric
from iftopsis.repro import (
    CHECK_IDS,
    CheckLine,
    CheckReport,
    FuzzConfig,
    bundled_problem,
    fuzz_metric_axioms,
    fuzz_monotonicity,
    random_ifv,
    report_json_obj,
    report_text,
    reports_json,
    run_all_checks,
    run_check,
)

import numpy as np

EXPECTED_IDS = (
    "sim_e_violates_s4",
    "minkowski_violates_s4",
    "xc2_violates_s4",
    "sck_collision",
    "dsh_level_set",
    "li_nonmonotone_ifv_weights",
    "li_nonmonotone_scalar_weights",
    "chen_nonmonotone_xy",
    "proposed_fixes_exm2",
    "proposed_fixes_exm3",
    "example_7_1_xy",
    "example_7_1_zx",
    "example_7_2_xy",
    "example_7_2_zx",
    "table9_rankings",
    "table12_rankings",
)


class TestRegistry:
    def test_registry_contents(self):
        assert CHECK_IDS == EXPECTED_IDS

    def test_every_check_passes(self):
        for report in run_all_checks():
            assert report.status == "pass", report_text(report)

    def test_subset_in_given_order(self):
        ids = ("sck_collision", "sim_e_violates_s4")
        reports = run_all_checks(ids)
        assert tuple(r.check_id for r in reports) == ids

    def test_unknown_check(self):
        with pytest.raises(UnknownCheck):
            run_check("sck_colision")

    def test_bundled_problem_shapes(self):
        assert bundled_problem("table3").n_alternatives == 5
        assert bundled_problem("table2").n_attributes == 2


class TestCheckLine:
    def test_close(self):
        assert CheckLine("x", 0.5, 0.5000001, tol=1e-6).ok
        assert not CheckLine("x", 0.5, 0.51, tol=1e-6).ok

    def test_exact_default_tolerance(self):
        assert CheckLine("x", 0.5, 0.5).ok
        assert not CheckLine("x", 0.5, 0.5 + 1e-9).ok

    def test_eq_on_strings(self):
        assert CheckLine("r", "A2 > A1", "A2 > A1", op="eq").ok
        assert not CheckLine("r", "A2 > A1", "A1 > A2", op="eq").ok

    def test_inequalities(self):
        assert CheckLine("d", 0.2, 0.1, op="gt").ok
        assert not CheckLine("d", 0.1, 0.1, op="gt").ok
        assert CheckLine("d", 0.1, 0.1, op="ge").ok
        assert CheckLine("d", 0.1, 0.1, op="le").ok
        assert CheckLine("d", 0.05, 0.1, op="lt").ok

    def test_unknown_op(self):
        with pytest.raises(DomainError):
            CheckLine("d", 0.1, 0.1, op="ne").ok


class TestReports:
    def test_status_aggregates_lines(self):
        good = CheckLine("a", 1.0, 1.0)
        bad = CheckLine("b", 1.0, 2.0)
        assert CheckReport("c", (good,), "n").status == "pass"
        assert CheckReport("c", (good, bad), "n").status == "fail"

    def test_informational_never_fails(self):
        bad = CheckLine("b", 1.0, 2.0)
        r = CheckReport("c", (bad,), "n", informational=True)
        assert r.status == "pass"

    def test_text_shape(self):
        report = run_check("sck_collision")
        text = report_text(report)
        assert text.startswith("[PASS] sck_collision:")
        assert "ok" in text

    def test_failure_marked(self):
        r = CheckReport("c", (CheckLine("b", 1.0, 2.0),), "n")
        text = report_text(r)
        assert text.startswith("[FAIL]")
        assert "FAIL b:" in text

    def test_json_obj(self):
        report = run_check("example_7_1_xy")
        obj = report_json_obj(report)
        assert obj["id"] == "example_7_1_xy"
        assert obj["status"] == "pass"
        assert len(obj["observed"]) == len(report.lines)
        assert obj["expected"][0]["op"] in ("close", "eq", "gt", "ge", "le", "lt")

    def test_reports_json_parses(self):
        text = reports_json(run_all_checks())
        docs = json.loads(text)
        assert [d["id"] for d in docs] == list(EXPECTED_IDS)
        assert text.endswith("\n")

    def test_byte_determinism(self):
        a = reports_json(run_all_checks())
        b = reports_json(run_all_checks())
        assert a == b
        ta = "\n".join(report_text(r) for r in run_all_checks())
        tb = "\n".join(report_text(r) for r in run_all_checks())
        assert ta == tb


class TestFuzzConfig:
    def test_validation(self):
        with pytest.raises(DomainError, match="at least one trial"):
            FuzzConfig(trials=0, seed=1)
        with pytest.raises(DomainError, match="unknown method"):
            FuzzConfig(trials=10, seed=1, method="vikor")
        with pytest.raises(DomainError, match="dimension ranges"):
            FuzzConfig(trials=10, seed=1, n_range=(1, 4))
        with pytest.raises(DomainError, match="dimension ranges"):
            FuzzConfig(trials=10, seed=1, m_range=(4, 2))

    def test_default_metric(self):
        config = FuzzConfig(trials=10, seed=1)
        assert isinstance(config.metric, XYMetric)
        assert config.metric.lam == 100.0


class TestFuzzers:
    def test_random_ifv_valid(self):
        rng = np.random.default_rng(99)
        for _ in range(500):
            v = random_ifv(rng)
            assert 0.0 <= v.mu and 0.0 <= v.nu and v.mu + v.nu <= 1.0

    def test_monotonicity_proposed_clean(self):
        report = fuzz_monotonicity(FuzzConfig(trials=300, seed=11))
        assert report.status == "pass"
        assert report.seed == 11
        assert not report.informational

    def test_monotonicity_zx_clean(self):
        report = fuzz_monotonicity(
            FuzzConfig(trials=300, seed=12, metric=ZXMetric(10.0))
        )
        assert report.status == "pass"

    def test_baselines_informational(self):
        report = fuzz_monotonicity(FuzzConfig(trials=2000, seed=20240711, method="li"))
        assert report.informational
        assert report.status == "pass"
        assert report.lines[0].observed == 36.0  # frozen count for this seed

    def test_monotonicity_deterministic(self):
        config = FuzzConfig(trials=200, seed=5)
        assert report_text(fuzz_monotonicity(config)) == report_text(
            fuzz_monotonicity(config)
        )

    def test_metric_axioms_clean(self):
        report = fuzz_metric_axioms(XYMetric(10.0), trials=300, seed=21)
        assert report.status == "pass"
        assert all(line.observed == 0.0 for line in report.lines)

    def test_metric_axioms_deterministic(self):
        a = report_text(fuzz_metric_axioms(ZXMetric(2.0), trials=200, seed=22))
        b = report_text(fuzz_metric_axioms(ZXMetric(2.0), trials=200, seed=22))
        assert a == b
