"""The verification report: statuses, exit codes, determinism.

The status map pinned below is the contract of a default run: printed
claims that fail beyond the three documented errata stay plain failures,
so `verify` exits nonzero by design.  Any status drift here means either
the mathematics or the checks changed, and both deserve a loud test.
"""

import json

import pytest

from blockcheb import __version__
from blockcheb.errors import InvalidConfigError
from blockcheb.verify import (ERRATUM_CHECK_IDS, SUITES, VerifyReport,
                              run_suite)

EXPECTED_STATUS = {
    "oracle-closed-vs-enumeration": "pass",
    "identity-E1": "pass",
    "identity-E2": "pass",
    "identity-E4": "pass",
    "identity-E3-corrected": "pass",
    "identity-E3-printed": "erratum-confirmed",
    "chebyshev-u-coefficient": "pass",
    "construction-four-way-p2": "pass",
    "construction-reduction-trecurrence": "pass",
    "three-term-printed": "fail",
    "reduction-printed": "fail",
    "t-recurrence-printed": "fail",
    "trig-closed-form-residual": "pass",
    "zeros-closed-form-values": "pass",
    "zeros-numeric-agreement": "pass",
    "bound-unit-circle": "pass",
    "bound-monic-sup-norm": "pass",
    "gram-pattern-q-1": "pass",
    "gram-pattern-q1": "fail",
    "gram-pattern-q3": "fail",
    "gram-parity-q0": "pass",
    "gram-exact-vs-numeric": "pass",
    "coeff-recurrence-E2-corrected": "pass",
    "coeff-recurrence-E2-printed": "fail",
    "coeff-recurrence-E3-corrected": "pass",
    "coeff-recurrence-E3-printed": "fail",
    "triple-sum-corrected": "pass",
    "triple-sum-printed": "fail",
    "erratum-table-13x": "erratum-confirmed",
    "erratum-extremum-arctan": "erratum-confirmed",
}


@pytest.fixture(scope="module")
def full_report():
    return run_suite("all")


def test_full_report_status_map(full_report):
    got = {c.check_id: c.status for c in full_report.checks}
    assert got == EXPECTED_STATUS


def test_full_report_exits_nonzero(full_report):
    # Plain failures (printed-variant defects) exist, so exit 1.
    assert full_report.exit_code == 1


def test_erratum_status_is_reserved(full_report):
    confirmed = {c.check_id for c in full_report.checks
                 if c.status == "erratum-confirmed"}
    assert confirmed == set(ERRATUM_CHECK_IDS)


def test_failures_carry_witnesses(full_report):
    for c in full_report.checks:
        if c.status == "fail":
            assert c.witnesses, c.check_id
            assert all(isinstance(w, dict) for w in c.witnesses)


def test_witness_capping(full_report):
    by_id = {c.check_id: c for c in full_report.checks}
    capped = by_id["reduction-printed"]
    assert len(capped.witnesses) == 6
    assert "further witnesses suppressed" in capped.note


def test_report_json_shape(full_report):
    payload = json.loads(full_report.to_json())
    assert payload["schemaVersion"] == 1
    assert payload["toolVersion"] == __version__
    assert payload["suite"] == "all"
    assert len(payload["checks"]) == len(EXPECTED_STATUS)
    for check in payload["checks"]:
        assert set(check) == {"checkId", "range", "status", "witnesses",
                              "note"}


def test_report_has_no_timestamps(full_report):
    # Byte-identical reruns are the determinism contract; a timestamp
    # anywhere would break them silently.
    text = full_report.to_json().lower()
    for needle in ("time", "date", "seconds"):
        assert needle not in text


def test_suite_exit_codes():
    assert run_suite("oracle").exit_code == 0
    assert run_suite("errata").exit_code == 0
    assert run_suite("zeros").exit_code == 0
    assert run_suite("constructions").exit_code == 1


def test_errata_suite_contents():
    report = run_suite("errata")
    assert [c.check_id for c in report.checks] == list(ERRATUM_CHECK_IDS)
    assert all(c.status == "erratum-confirmed" for c in report.checks)


def test_deterministic_rerun():
    assert run_suite("errata").to_json() == run_suite("errata").to_json()
    assert run_suite("oracle").to_json() == run_suite("oracle").to_json()


def test_suites_cover_all_checks_once(full_report):
    # "all" deduplicates the shared erratum check between suites.
    ids = [c.check_id for c in full_report.checks]
    assert len(ids) == len(set(ids))
    total = {fn for group in SUITES.values() for fn in group}
    assert len(ids) == len(total)


def test_unknown_suite_rejected():
    with pytest.raises(InvalidConfigError):
        run_suite("everything")


def test_exit_code_logic_is_fail_only():
    from blockcheb.verify import CheckResult
    only_errata = VerifyReport("x", (CheckResult("a", "r",
                                                 "erratum-confirmed"),))
    assert only_errata.exit_code == 0
    mixed = VerifyReport("x", (CheckResult("a", "r", "pass"),
                               CheckResult("b", "r", "fail")))
    assert mixed.exit_code == 1
