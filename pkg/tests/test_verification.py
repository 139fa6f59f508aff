import pytest

from config import Config
from verification import CheckCapExceeded, SweepLine, Verifier

SMALL_BOUNDS = {
    "cycle": {"max_size": 9, "q": 2},
    "strong": {"max_size": 10, "q": 2},
    "stronger": {"max_size": 7, "q": 2},
    "extended": {"max_size": 8, "q": 2, "p": 3, "m": 7},
    "position-sum": {"max_size": 9},
    "chung-feller": {"n": 4},
    "montagh": {"n": 5},
    "bijection": {"m": 6, "q": 2},
    "recurrences": {"m": 14, "q": 2, "n": 6, "k": 8},
    "satisfying": {"m": 10, "q": 2},
    "raney": {"k": 4, "q": 2},
    "trees": {"n": 3, "q": 2},
    "periodic": {"k": 3, "q": 2, "p": 2},
    "ballot": {"k": 3, "q": 2},
}


@pytest.fixture
def small_montagh(monkeypatch):
    monkeypatch.setattr(Config, "MONTAGH_SAMPLES", 25)
    monkeypatch.setattr(Config, "MONTAGH_EXHAUSTIVE_LENGTH", 3)


def test_every_suite_has_a_sweep():
    assert set(Verifier.SWEEPS) == set(Config.VERIFY_SUITES)
    assert set(SMALL_BOUNDS) == set(Config.VERIFY_SUITES)


@pytest.mark.parametrize("suite", sorted(SMALL_BOUNDS))
def test_suite_passes_on_small_bounds(suite, small_montagh):
    report = Verifier().run(suite, SMALL_BOUNDS[suite])
    assert report.checked > 0
    assert report.failures == []
    assert report.passed
    assert report.summary() == f"{suite}: {report.checked} checked, 0 failed, PASS"


def test_emit_all_keeps_every_line():
    report = Verifier().run("cycle", {"max_size": 5, "q": 1}, emit_all=True)
    assert len(report.lines) == report.checked
    assert all(line.format().endswith(";PASS") for line in report.lines)


def test_montagh_is_reproducible_for_a_seed(small_montagh):
    first = Verifier().run("montagh", {"n": 5}, seed=3, emit_all=True)
    second = Verifier().run("montagh", {"n": 5}, seed=3, emit_all=True)
    assert [line.format() for line in first.lines] == [line.format() for line in second.lines]


def test_cap_stops_a_sweep():
    with pytest.raises(CheckCapExceeded) as excinfo:
        Verifier().run("cycle", {"max_size": 8, "q": 2}, cap=3)
    assert excinfo.value.cap == 3
    assert excinfo.value.suite == "cycle"


def test_unknown_suite():
    with pytest.raises(ValueError, match="Available suites"):
        Verifier().run("nope")


def test_overrides_merge_into_defaults():
    bounds = Config.suite_bounds("extended", {"q": 1, "p": None})
    assert bounds == {"max_size": 14, "q": 1, "p": 4, "m": 12}


def test_sweep_line_format():
    line = SweepLine("cyc:001", "dominating-cuts", "2", "1", False)
    assert line.format() == "cyc:001;dominating-cuts;2;1;FAIL"


@pytest.mark.parametrize("suite", sorted(Config.VERIFY_SUITES))
def test_suite_passes_at_default_bounds(suite):
    report = Verifier().run(suite, {})
    assert report.checked > 0
    assert report.failures == []


@pytest.mark.parametrize("suite,overrides", [
    ("cycle", {"q": 0}),
    ("cycle", {"max_size": 0}),
    ("strong", {"max_size": -3}),
    ("montagh", {"n": 0}),
    ("recurrences", {"m": 0}),
])
def test_bounds_selecting_nothing_are_rejected(suite, overrides):
    with pytest.raises(ValueError, match="must be positive"):
        Verifier().run(suite, overrides)


def test_new_counting_checks_are_swept():
    report = Verifier().run("recurrences", {"m": 12, "q": 2, "n": 3, "k": 6}, emit_all=True)
    assert any(line.property == "primitive-factor" for line in report.lines)
    report = Verifier().run("satisfying", {"m": 8, "q": 1}, emit_all=True)
    assert any(line.property == "per-ones-dominating" for line in report.lines)
    report = Verifier().run("ballot", {"k": 3, "q": 1}, emit_all=True)
    assert any(line.property == "primitive" and line.passed for line in report.lines)
