import pytest

from nakatau.algebra import named_algebra
from nakatau.errors import UnknownSuite
from nakatau.verify import SUITES, Report, run_suite

SMALL = ["a3", "d3", "n2"]


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suites_pass_on_small_named_algebras(name):
    algebras = [named_algebra(n) for n in SMALL]
    rep = run_suite(name, algebras)
    assert rep.passed, rep.failures
    assert rep.checked > 0


def test_hom_models_default_family():
    rep = run_suite("hom-models")
    assert rep.passed and rep.checked > 500


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("everything")


def test_report_records_counterexamples():
    rep = Report("demo")
    rep.check(True, lambda: "unused")
    rep.check(False, lambda: "x fails")
    assert not rep.passed
    assert rep.to_dict() == {"suite": "demo", "passed": False, "checked": 2, "failures": ["x fails"], "details": {}}
