"""Smoke tests for the semiq extension module."""

import pytest

import semiq


def test_closure_of_nilpotent():
    report = semiq.closure({"dim": 2, "generators": [[["0", "1"], ["0", "0"]]]})
    assert report["size"] == 2
    assert report["diameter"] == 2
    assert report["contains_zero"] is True


def test_construct_and_analyze_example1_family():
    gens = semiq.construct("example1")
    assert len(gens["generators"]) == 32
    report = semiq.analyze(gens)
    assert report["closure"]["size"] == 32
    structure = report["structure"]
    assert structure["irreducible"] is True
    assert structure["r"] == 2
    assert structure["group_order"] == 8
    assert structure["aperiodic"] is False


def test_check_bounds_certificates():
    gens = semiq.construct("example1")
    report = semiq.check_bounds(gens, verbosity="certificates")
    assert report["injectivity"]["ok"] is True
    assert report["coupling"]["all_ok"] is True
    assert report["cardinality"]["all_ok"] is True
    lemmas = {check["lemma"] for check in report["coupling"]["checks"]}
    assert {"row_step", "column_step", "grid_step", "ratio_coset"} <= lemmas


def test_psi_report():
    gens = semiq.construct("example1")
    report = semiq.psi(gens)
    assert report["frame"]["u"] == 2
    assert report["frame"]["widths"] == [2, 1]
    assert report["frame"]["coupling_group_orders"] == [8, 2]
    assert report["injectivity"]["ok"] is True
    assert len(report["theta_certificates"]) == 1


def test_reducible_input_stops_after_structure():
    gens = semiq.construct("sm", n=3)
    report = semiq.check_bounds(gens)
    assert report["stopped_after"] == "structure"
    assert report["structure"]["irreducible"] is False


def test_mortality_report():
    report = semiq.mortality({"dim": 2, "generators": [[["0", "1"], ["0", "0"]]]})
    assert report["threshold"] == 2
    assert report["threshold_word"] == [0, 0]
    assert report["trace"]["word_rank"] == 0


def test_lower_family_counts():
    gens = semiq.construct("lower", n=4, signed_entries=True)
    assert gens["family"]["ne_count"] == 81
    report = semiq.closure(gens)
    assert report["size"] == 121


def test_rees_local_groups():
    report = semiq.rees({"group": [[0, 1], [1, 0]], "sandwich": [[0, None], [None, 0]]})
    assert report["size"] == 9
    assert report["associative"] is True
    assert all(e["local_group_ok"] for e in report["nonzero_idempotents"])


def test_errors_surface_as_exceptions():
    with pytest.raises(RuntimeError):
        semiq.closure({"dim": 1, "generators": [[["2"]]]}, max_entry_bits=8)
    with pytest.raises(RuntimeError):
        semiq.closure({"dim": 0, "generators": []})
