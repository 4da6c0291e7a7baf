"""The verification layer itself: counting oracles, brute covers, suites."""

import pytest

from orbitposet import (
    Involution,
    TooLarge,
    UnknownSuite,
    brute_covers,
    hook_length_count,
    involution_number,
    involution_number_k,
    suite_names,
    verify_suite,
)


def inv(text, n):
    return Involution.parse(text, n)


def test_involution_numbers():
    assert [involution_number(n) for n in range(9)] == [1, 1, 2, 4, 10, 26, 76, 232, 764]


def test_involution_numbers_by_k():
    assert involution_number_k(4, 2) == 3
    assert involution_number_k(7, 0) == 1
    assert involution_number_k(7, 3) == 105
    for n in range(1, 9):
        assert sum(involution_number_k(n, k) for k in range(n // 2 + 1)) == involution_number(n)


def test_hook_length_counts():
    assert hook_length_count(6, 3) == 5
    assert hook_length_count(5, 0) == 1
    assert hook_length_count(4, 2) == 2
    assert hook_length_count(8, 4) == 14


def test_brute_covers_n3():
    covers = brute_covers(3)
    assert covers[inv("(1,2)", 3)] == {inv("(1,3)", 3)}
    assert covers[inv("(2,3)", 3)] == {inv("(1,3)", 3)}
    assert covers[inv("(1,3)", 3)] == {Involution.identity(3)}
    assert covers[Involution.identity(3)] == set()


def test_brute_covers_n2():
    assert brute_covers(2)[inv("(1,2)", 2)] == {Involution.identity(2)}


def test_brute_covers_guard():
    with pytest.raises(TooLarge):
        brute_covers(9)


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        verify_suite("nonsense")


def test_environment_overrides_guard(monkeypatch):
    from orbitposet.limits import ENV_MAX_N, check_guard

    with pytest.raises(TooLarge):
        check_guard(9, 8)
    monkeypatch.setenv(ENV_MAX_N, "12")
    check_guard(9, 8)  # no longer raises
    check_guard(9, 8, override=10)
    with pytest.raises(TooLarge):
        check_guard(13, 8)


def test_suite_guard():
    with pytest.raises(TooLarge):
        verify_suite("descendants", n_max=9)
    # but the guard can be lifted explicitly
    report = verify_suite("counts", n_max=4, max_n=12)
    assert report.passed


def test_every_suite_passes_quickly_at_small_rank():
    for name in suite_names():
        report = verify_suite(name, n_max=4)
        assert report.passed, f"{name}: {[str(f) for f in report.failures]}"
        assert report.checks_run > 0
        assert report.suite == name


def test_report_json_shape():
    report = verify_suite("counts", n_max=5)
    d = report.to_json_dict()
    assert d["suite"] == "counts"
    assert d["passed"] is True
    assert d["failures"] == []
    assert isinstance(d["elapsed"], float)


def test_codim_suite_logs_reducible_example():
    report = verify_suite("codim", n_max=5)
    assert report.passed
    assert any("reducible" in note for note in report.notes)


def test_experiments_suite_reports_witness_free_pair():
    report = verify_suite("experiments", n_max=6)
    assert report.passed
    assert any("witness-free" in note for note in report.notes)
