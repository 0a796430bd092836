# tests/test_reproduce_claims.py
import scripts.reproduce_claims as reproduce
from src import SizeLimitError, VerificationReport


def test_classify_outcome():
    assert reproduce.classify_outcome(VerificationReport("pi", {"n": 1}, True, "ok")) == "pass"
    assert reproduce.classify_outcome(VerificationReport("pi", {"n": 1}, False, "bad")) == "fail"
    assert reproduce.classify_outcome(error=SizeLimitError("too big")) == "skipped"
    assert reproduce.classify_outcome(error=ValueError("negative")) == "error"


def test_summary_counts_every_status(monkeypatch, capsys):
    plan = {"mixed": [("pi", {"n": 3}), ("phi", {"n": 9, "k": 9}), ("pi", {"n": -1})]}
    monkeypatch.setattr(reproduce, "CLAIMS", plan)
    assert reproduce.main() == 1
    out = capsys.readouterr().out
    assert "pass: 1" in out
    assert "skipped: 1" in out
    assert "error: 1" in out


def test_clean_run_exits_0(monkeypatch, capsys):
    monkeypatch.setattr(reproduce, "CLAIMS", {"small": [("pi", {"n": 3}), ("table1", {"max_n": 2, "max_k": 2})]})
    assert reproduce.main() == 0
    assert "pass: 2" in capsys.readouterr().out
