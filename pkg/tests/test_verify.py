import json

import pytest

from shuffleprob.mutations import DEFECTS, inject_defect
from shuffleprob.reporting import CheckResult, Report
from shuffleprob.verify import SUITES, run_suite, run_suites


def _witness_degree(result: CheckResult) -> int:
    element = result.witness["element"]
    return len([t for t in element.replace("|", ".").split(".") if t and t != "1"])


def test_all_suites_pass_at_degree_four():
    reports = run_suites("all", max_degree=4, seed=0)
    assert [r.suite for r in reports] == list(SUITES)
    for r in reports:
        assert r.passed, (r.suite, [c.name for c in r.failures])


def test_unknown_suite_rejected():
    with pytest.raises(Exception):
        run_suite("nope", max_degree=3)


def test_reports_deterministic_under_seed():
    a = [r.to_json() for r in run_suites(["cumulants"], max_degree=3, seed=9)]
    b = [r.to_json() for r in run_suites(["cumulants"], max_degree=3, seed=9)]
    assert json.dumps(a) == json.dumps(b)


def test_report_json_shape():
    [report] = run_suites(["coalgebra"], max_degree=2)
    payload = report.to_json()
    assert payload["suite"] == "coalgebra"
    assert payload["passed"] is True
    assert all(c["status"] == "pass" for c in payload["checks"])


@pytest.mark.parametrize("defect,suites", [
    ("drop-left-singleton", ["coalgebra", "shuffle"]),
    ("skip-bernoulli-2", ["magnus"]),
    ("flip-ad-conjugator", ["bp", "products"]),
])
def test_mutation_sensitivity(defect, suites):
    with inject_defect(defect):
        reports = run_suites(suites, max_degree=4, seed=0)
    failures = [c for r in reports for c in r.failures]
    assert failures, f"defect {defect} went unnoticed"
    assert min(_witness_degree(c) for c in failures) <= 4
    # and the world is intact again afterwards
    reports = run_suites(suites, max_degree=3, seed=0)
    assert all(r.passed for r in reports)


def test_unknown_defect_rejected():
    with pytest.raises(ValueError):
        with inject_defect("not-a-defect"):
            pass
    assert "drop-left-singleton" in DEFECTS


def test_report_lines_format():
    [report] = run_suites(["coalgebra"], max_degree=2)
    lines = list(report.lines())
    assert lines and all(line.startswith("[PASS]") for line in lines)
    failing = Report("demo", [CheckResult.fail("identity", "a.a", 1, 2)])
    assert "[FAIL]" in next(iter(failing.lines()))


def test_identity_suite_aggregates():
    from shuffleprob.verify import identity_suite
    report = identity_suite(max_degree=3, seed=0)
    names = {c.name for c in report.results}
    assert "subordination-decomposition" in names
    assert "bp-R-equals-eta" in names
    assert report.passed
