import pytest

from disktrees.verify import (
    CHECKS, _Check, check_ids, run_check, run_suite, suite_passed,
)


def test_registry_contents():
    ids = check_ids()
    assert "thm_1_2" in ids and "matrix_golden" in ids
    assert CHECKS["conj_4_3"].kind == "conjecture"
    assert CHECKS["theta_involution"].kind == "exploratory"
    assert all(CHECKS[i].kind == "theorem" for i in
               ("lemma_2_2", "thm_4_5", "series_eq_4"))


def test_run_check_examples():
    result = run_check("thm_1_2", 5)
    assert result.status == "pass" and result.witness is None
    assert result.scope == "n <= 5"
    assert run_check("matrix_golden", 6).status == "pass"


def test_run_check_rejects_bad_arguments():
    with pytest.raises(ValueError):
        run_check("no_such_check")
    with pytest.raises(ValueError):
        run_check("matrix_golden", 7)  # beyond the printed range
    with pytest.raises(ValueError):
        run_check("thm_1_2", 0)
    with pytest.raises(ValueError):
        run_suite(["no_such_check"])


def test_every_check_passes_at_small_scope():
    results = run_suite(max_n=4)
    assert len(results) == len(CHECKS)
    assert suite_passed(results)
    assert all(r.status == "pass" for r in results)


def test_result_serialization():
    result = run_check("counting_schroder", 5)
    data = result.to_dict()
    assert data["check_id"] == "counting_schroder"
    assert data["status"] == "pass"
    assert data["witness"] is None
    assert isinstance(data["elapsed"], float)


def _with_fake_check(check_id, kind):
    return _Check(lambda n: {"forced": True}, 3, 5, kind, "n", "forced failure")


def test_theorem_failure_halts_and_gates(monkeypatch):
    monkeypatch.setitem(CHECKS, "forced_fail", _with_fake_check("forced_fail",
                                                                "theorem"))
    results = run_suite(["forced_fail", "counting_schroder"], max_n=3)
    assert len(results) == 1  # halted before the second check
    assert results[0].status == "fail"
    assert results[0].witness == {"forced": True}
    assert not suite_passed(results)


def test_conjecture_failure_does_not_gate(monkeypatch):
    monkeypatch.setitem(CHECKS, "forced_conj",
                        _with_fake_check("forced_conj", "conjecture"))
    results = run_suite(["forced_conj", "counting_schroder"], max_n=3)
    assert len(results) == 2  # no halt
    assert results[0].status == "fail" and not results[0].gating
    assert suite_passed(results)


def test_stop_on_failure_can_be_disabled(monkeypatch):
    monkeypatch.setitem(CHECKS, "forced_fail",
                        _with_fake_check("forced_fail", "theorem"))
    results = run_suite(["forced_fail", "counting_schroder"], max_n=3,
                        stop_on_failure=False)
    assert len(results) == 2
    assert not suite_passed(results)


def test_suite_respects_caps():
    # a blanket max_n above some caps is clamped rather than rejected
    results = run_suite(["matrix_golden", "counting_schroder"], max_n=11)
    assert results[0].scope == "n <= 6"
    assert results[1].scope == "n <= 11"
    assert suite_passed(results)


def test_parallel_jobs():
    results = run_suite(["matrix_golden", "counting_schroder", "eq_1"],
                        max_n=4, jobs=2)
    assert len(results) == 3
    assert suite_passed(results)


def test_witness_on_real_shape():
    # force a failure by querying golden matrices beyond what a broken
    # implementation would produce is not possible here; instead check
    # that a failing check reports a witness via the fake path above and
    # that passing checks never carry one
    for check_id in ("lemma_2_2", "eq_3", "theta_eq_6"):
        assert run_check(check_id, 4).witness is None
