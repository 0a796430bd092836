# tests/test_verification.py
import json

import pytest

from src.run_verification import TARGETS, VerificationRunner
from src.verification import (
    VerificationReport,
    verify_bessel,
    verify_egf,
    verify_phi_bijective,
    verify_pi,
    verify_psi,
    verify_table1,
    verify_theorem5,
)


def test_verify_phi_summary():
    report = verify_phi_bijective(2, 2)
    assert report.passed
    assert report.summary == "14 matrices, 14 sequences, all round-trips OK"
    assert report.details["without_empty_lines"] == 5
    assert report.counterexample is None


@pytest.mark.parametrize("n,k", [(0, 0), (1, 4), (3, 2), (4, 4)])
def test_verify_phi_desk_scale(n, k):
    assert verify_phi_bijective(n, k).passed


def test_verify_pi():
    report = verify_pi(5)
    assert report.passed
    assert report.summary == "120 forests, 120 permutations, all round-trips OK"


def test_verify_psi():
    report = verify_psi(4)
    assert report.passed
    assert report.details["etas"] == 24
    assert report.details["forests"] == 211


def test_verify_theorem5():
    report = verify_theorem5(4)
    assert report.passed
    assert report.details["tau"] == report.details["omega"] == 211


def test_verify_table1():
    report = verify_table1(4, 4)
    assert report.passed
    assert report.details == {"entries": 25, "enumerated": 25, "callan_checked": 25}


def test_verify_egf():
    report = verify_egf(4, 4)
    assert report.passed
    assert report.details["refined"] == 25


def test_verify_bessel():
    report = verify_bessel(3)
    assert report.passed
    assert report.details["series"] == [1, 1, 4, 33]


@pytest.mark.slow
def test_verify_bessel_up_to_four():
    report = verify_bessel(4)
    assert report.passed
    assert report.details["series"] == report.details["enumerated"] == [1, 1, 4, 33, 456]


def test_failed_report_carries_a_counterexample(monkeypatch):
    import src.verification.checks as checks

    monkeypatch.setattr(checks, "count_naf", lambda n, k: -1)
    report = verify_phi_bijective(2, 2)
    assert not report.passed
    assert report.counterexample == {"count_naf": -1}
    assert "[FAIL] phi" in report.render()


def test_report_serialization_is_deterministic():
    first = verify_pi(3).to_json()
    second = verify_pi(3).to_json()
    assert first == second
    assert json.loads(first)["passed"] is True


def test_report_render():
    report = VerificationReport("pi", {"n": 1}, True, "1 forests, 1 permutations, all round-trips OK")
    assert report.render() == "[PASS] pi n=1\n1 forests, 1 permutations, all round-trips OK"


# -------------------------
# Runner
# -------------------------
def test_runner_dispatches_and_keeps_history():
    runner = VerificationRunner()
    runner.run("pi", n=3)
    runner.run("phi", n=1, k=2)
    assert [r.target for r in runner.history] == ["pi", "phi"]
    assert runner.all_passed


def test_runner_ignores_unrelated_parameters():
    report = VerificationRunner().run("pi", n=2, k=7)
    assert report.params == {"n": 2}


def test_runner_rejects_bad_requests():
    runner = VerificationRunner()
    with pytest.raises(ValueError):
        runner.run("lemma99", n=1)
    with pytest.raises(ValueError):
        runner.run("phi", n=2)
    with pytest.raises(ValueError):
        runner.run("pi", n=-1)


def test_every_target_is_listed():
    assert set(TARGETS) == {"phi", "pi", "psi", "theorem5", "table1", "egf", "bessel"}
