import importlib

import pytest

from conjlab import DomainError, verify_suite
from conjlab.separate import _combine

phi_module = importlib.import_module("conjlab.phi")


def corrupted_combine_st(rec):
    # Wrong direction: merges the b-elements with their successors, the
    # behaviour of the initiator-side insertion.
    return _combine(rec.rho, rec.a_set, rec.b_set, with_succ=True)


class TestSuitePasses:
    def test_small_run_is_green(self):
        report = verify_suite(n_max=5, comp_n_max=8)
        assert report.ok
        assert report.first_failure() is None
        assert len(report.results) == 41
        assert all(r.ok for r in report.results)
        assert all(r.items >= 1 for r in report.results)

    def test_render_layout(self):
        report = verify_suite(n_max=4, comp_n_max=6)
        text = report.render()
        lines = text.splitlines()
        assert lines[0] == "verification suite: partitions n <= 4, compositions n <= 6"
        assert sum(1 for ln in lines if ln.startswith("[PASS]")) == 41
        assert lines[-1].startswith("result: PASS (41 invariants, ")

    def test_structured_records(self):
        report = verify_suite(n_max=4, comp_n_max=6)
        records = report.to_records()
        assert len(records) == 41
        for rec in records:
            assert set(rec) == {
                "invariant",
                "scope",
                "items",
                "status",
                "counterexample",
            }
            assert rec["status"] == "pass"
            assert rec["counterexample"] is None

    def test_bounds_validated(self):
        with pytest.raises(DomainError):
            verify_suite(n_max=13)
        with pytest.raises(DomainError):
            verify_suite(n_max=4, comp_n_max=21)
        with pytest.raises(DomainError):
            verify_suite(n_max=0)


class TestSharding:
    def test_parallel_report_is_identical(self):
        solo = verify_suite(n_max=6, comp_n_max=8, jobs=1)
        multi = verify_suite(n_max=6, comp_n_max=8, jobs=3)
        assert solo.to_records() == multi.to_records()
        assert solo.render() == multi.render()


class TestMutationDetection:
    def test_corrupted_reverse_insertion_is_caught(self, monkeypatch):
        # A deliberately wrong combine_st (merge with successor instead of
        # predecessor) must be detected even at tiny sizes.
        monkeypatch.setattr(phi_module, "combine_st", corrupted_combine_st)
        report = verify_suite(n_max=3, comp_n_max=2, jobs=1)
        assert not report.ok
        failure = report.first_failure()
        assert failure is not None
        assert failure.invariant in {
            "phi-trace-agreement",
            "trace-record-inverse",
            "reverse-phase-exactness",
        }
        assert failure.counterexample
        text = report.render()
        assert "[FAIL]" in text
        assert "counterexample:" in text
        assert text.splitlines()[-1].startswith("result: FAIL")
