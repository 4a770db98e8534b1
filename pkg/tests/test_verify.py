import pytest

from torslab.catalog import Catalog
from torslab.config import WorkbenchConfig
from torslab.errors import ConfigError, TooLarge, UnknownCheck
from torslab.nakayama import parse_algebra
from torslab.verify import (ALL, EXPECTED, FAIL, ORDER, PASS, SKIPPED, CheckReport, aggregate_status, build_report,
                            resolve_ids, run_check, run_suite, suite_report)
from torslab.verify import checks
from torslab.verify.report import CheckFailed

CATALOG = [pytest.param(spec, meta, id=name, marks=[pytest.mark.slow] if meta.get("slow") else [])
           for name, spec, meta in Catalog().instances()]


class TestResolve:
    def test_all_in_suite_order(self):
        assert resolve_ids(ALL) == list(ORDER)

    def test_aliases_and_order(self):
        assert resolve_ids("C3,T18") == ["T2", "C3"]
        assert resolve_ids(["T7/T8-finite"]) == ["T8"]

    def test_unknown(self):
        with pytest.raises(UnknownCheck):
            resolve_ids("T1,T99")


class TestSuite:
    def test_linear_a2_passes_everything(self, lin2, config):
        reports = run_suite(lin2, ALL, config)
        assert [r.id for r in reports] == list(ORDER)
        assert {r.status for r in reports} == {PASS}, [r.to_dict() for r in reports if r.status != PASS]

    def test_pentagon_has_five_cover_arrows(self, lin2, config):
        report = run_check("T2", lin2, config)
        assert report.counts["tors_cover_arrows"] == 5
        assert report.counts["torf_cover_arrows"] == 5

    def test_kappa_order_witness(self, lin2, config):
        report = run_check("T1", lin2, config)
        assert report.status == PASS
        assert len(report.witness) == 5

    def test_invariant_counts(self, lin3, config):
        assert run_check("SD", lin3, config).counts["closure_samples"] > 0
        assert run_check("ORACLE", lin3, config).counts["triples"] > 0

    def test_report_document(self, lin2, config):
        doc = suite_report(lin2, "T5,C2", config, notes=["n"])
        assert doc["kappa_reading"] == "extended"
        assert doc["header"] == {"indecomposables": 3, "bricks": 3, "brick_finite": True, "tors": 5, "wide": 5}
        assert doc["summary"] == {PASS: 2, FAIL: 0, SKIPPED: 0}
        assert doc["notes"] == ["n"]
        assert "reason" not in doc["checks"][0]


class TestCatalogInstances:
    @pytest.mark.parametrize("spec,meta", CATALOG)
    def test_every_instance_passes(self, spec, meta, config):
        doc = suite_report(parse_algebra(spec), ALL, config, expected=meta.get("expected"),
                           brick_finite=meta["brick_finite"])
        assert doc["status"] == PASS, [c for c in doc["checks"] if c["status"] != PASS]
        assert doc["header"]["brick_finite"] is meta["brick_finite"]
        if meta.get("expected"):
            assert doc["checks"][-1]["id"] == EXPECTED
            assert doc["checks"][-1]["counts"] == meta["expected"]

    def test_wrong_expected_count_fails(self, lin2, config):
        doc = suite_report(lin2, "T5", config, expected={"tors": 5, "wide": 6})
        assert doc["status"] == FAIL
        assert doc["checks"][-1]["witness"] == {"wide": {"expected": 6, "observed": 5}}

    def test_unknown_expected_count(self, lin2, config):
        with pytest.raises(ConfigError):
            suite_report(lin2, "T5", config, expected={"torsion": 5})


class TestStatuses:
    def test_caps_become_skips(self, lin3):
        config = WorkbenchConfig(max_indecs=3)
        report = run_check("T5", lin3, config)
        assert report.status == SKIPPED
        assert "capped" in report.reason

    def test_failure_keeps_the_witness(self, lin2, config, monkeypatch):
        def broken(ctx):
            raise CheckFailed("no good", {"class": []}, {"tors": 5})
        monkeypatch.setitem(checks.CHECKS, "T5", broken)
        report = run_check("T5", lin2, config)
        assert report.status == FAIL
        assert report.witness == {"class": []}
        assert report.reason == "no good"

    def test_broken_invariant_is_a_failure(self, lin2, config, monkeypatch):
        def broken(ctx):
            assert False, "closure moved"
        monkeypatch.setitem(checks.CHECKS, "C2", broken)
        report = run_check("C2", lin2, config)
        assert report.status == FAIL
        assert "closure moved" in report.witness["assertion"]

    def test_too_large_raised_inside_a_check(self, lin2, config, monkeypatch):
        def big(ctx):
            raise TooLarge("too many")
        monkeypatch.setitem(checks.CHECKS, "SD", big)
        assert run_check("SD", lin2, config).status == SKIPPED

    def test_aggregate(self):
        ok = CheckReport("T1", "linA:1", PASS)
        skip = CheckReport("T8", "linA:1", SKIPPED, reason="cap")
        bad = CheckReport("T2", "linA:1", FAIL)
        assert aggregate_status([ok, skip]) == PASS
        assert aggregate_status([ok, bad]) == FAIL
        assert build_report("linA:1", [ok, skip])["summary"][SKIPPED] == 1
