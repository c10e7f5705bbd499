"""Smoke tests for the _nichols module: one probe per exposed operation."""

import _nichols as nk


def test_dimension_terminates():
    prof = nk.dimension("1", "-1", "1")
    assert prof["status"] == "terminated"
    assert prof["total"] == 4
    assert prof["ranks"] == [1, 2, 1, 0]


def test_dimension_cap_exceeded():
    prof = nk.dimension("1", "2", "1", cap=6)
    assert prof["status"] == "cap-exceeded"
    assert prof["total"] is None
    assert prof["cap"] == 6


def test_dimension_threaded():
    prof = nk.dimension("1", "zeta(3)", "zeta(3)^2", jobs=2)
    assert prof["total"] == 27


def test_graded_dim():
    assert nk.graded_dim(2, "1", "-1", "1") == 1
    assert nk.graded_dim(2, "2", "2", "1") == 4


def test_tilde_f_strings():
    assert nk.tilde_f("1111", "1111", set_e_to_one=True) == "1 + 2*a*b + a*b^2"
    assert nk.tilde_f("12", "21") == "0"


def test_tilde_f_k_matches_closed_form():
    for n in range(2, 9):
        for k in range(0, 5):
            assert nk.tilde_f_k(n, k) == nk.cf_tilde_fk(k, n)


def test_ek_table():
    assert nk.ek_table(4) == {(0, 0): 1, (1, 3): 2, (2, 4): 1}
    assert nk.cf_E(5, 13, 7) == 10


def test_orbit_partition():
    parts = nk.orbit_partition(4)
    assert parts[0] == {"rep": "1111", "size": 6, "label": "2^4"}
    assert sum(p["size"] for p in parts) == 16


def test_verify_reports():
    reports = nk.verify(n_max=4, degree_cap=5)
    assert reports and all(r["pass"] for r in reports)


def test_canonical_scalar():
    assert nk.canonical_scalar("zeta(2)") == "-1"
    assert nk.canonical_scalar("zeta(6)^3") == "-1"
