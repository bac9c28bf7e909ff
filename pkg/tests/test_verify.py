import pytest

from pamona.verify import CHECKS, run_check, run_verify


def test_quick_profile_passes():
    rep = run_verify("quick")
    assert rep.passed
    assert {c.name for c in rep.checks} == {name for name, _, _, quick, _ in CHECKS if quick}


@pytest.mark.slow
def test_full_profile_passes():
    rep = run_verify("full")
    failed = [c.line() for c in rep.checks if not c.passed]
    assert not failed
    for c in rep.checks:
        assert c.budget is None or c.seconds < c.budget, c.line(True)


def test_failures_are_recorded_not_raised(monkeypatch):
    import pamona.verify as V

    def boom():
        raise RuntimeError("boom")
    monkeypatch.setattr(V, "CHECKS", [("broken", "a check that raises", boom, True, None)])
    c = run_check("broken")
    assert not c.passed and "boom" in c.observed
    assert not V.run_verify("quick").passed
