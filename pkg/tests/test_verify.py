import pytest

from hsbound import gtable
from hsbound.cli import main
from hsbound.verify import CHECKS, check_g2_closed_form, run_checks


def test_verify_passes(capsys):
    assert main(["verify"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == len(CHECKS)
    assert "16807" in out


def test_tampered_constant_is_caught(monkeypatch, capsys):
    monkeypatch.setattr(gtable, "G2_PAIR", 0.4135)
    ok, _ = check_g2_closed_form()
    assert not ok
    assert main(["verify"]) == 4
    captured = capsys.readouterr()
    assert "FAIL  g~_2(2) closed form" in captured.out
    assert "error[E_VERIFY]" in captured.err


def test_crashing_check_reported_as_failure():
    def boom():
        raise RuntimeError("x")

    (result,) = run_checks([("boom", boom)])
    assert not result.ok and "RuntimeError" in result.detail
