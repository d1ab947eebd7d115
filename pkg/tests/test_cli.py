"""Command-line surface: exit codes, report formats, flag validation."""

import json

import pytest

from detrep.cli import main


def run_json(capsys, argv):
    code = main(argv + ["--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


# ---------------------------------------------------------------- examples


def test_verify_example1_passes(capsys):
    code, rep = run_json(capsys, ["verify-example1"])
    assert code == 0
    assert rep["subcommand"] == "verify-example1"
    assert rep["verdicts"] == {
        "determinant_matches": True,
        "smooth": True,
        "tangent_surjective": True,
    }
    assert rep["data"]["curve"] == "x^2*y - 2*x*z^2 + y^2*z"
    assert rep["data"]["augmented_rank"] == 10


def test_verify_example1_rejects_bundle_flag(capsys):
    assert main(["verify-example1", "--bundle", "N"]) == 2


def test_verify_example2_passes(capsys):
    code, rep = run_json(capsys, ["verify-example2"])
    assert code == 0
    assert rep["data"]["curve"] == "x^2 + y^2 - z^2"
    assert rep["data"]["hom_dim"] == 6
    assert rep["data"]["augmented_rank"] == 6


def test_text_output_lists_verdicts(capsys):
    code = main(["verify-example2"])
    out = capsys.readouterr().out
    assert code == 0
    assert "verdict determinant_matches: pass" in out
    assert "verdict tangent_surjective: pass" in out


# ---------------------------------------------------------------- tangent


def test_tangent_explicit_pair(capsys):
    code, rep = run_json(
        capsys,
        ["tangent", "--bundle", "T", "--n", "0", "--v1", "x, 2*y, 3*z", "--v2", "y, z, x"],
    )
    assert code == 0
    assert rep["verdicts"]["gpli"] is True
    assert rep["verdicts"]["surjective"] is True
    assert rep["data"]["augmented_rank"] == 10


def test_tangent_proportional_pair_fails(capsys):
    code, rep = run_json(
        capsys,
        ["tangent", "--bundle", "T", "--n", "0", "--v1", "x, y, z", "--v2", "2*x, 2*y, 2*z"],
    )
    assert code == 1
    assert rep["verdicts"] == {"gpli": False}


def test_tangent_special_pair_not_surjective(capsys):
    code, rep = run_json(
        capsys,
        ["tangent", "--bundle", "T", "--n", "3", "--v1", "z^4, x^4, 0", "--v2", "0, z^4, y^4"],
    )
    assert code == 1
    assert rep["verdicts"]["gpli"] is True
    assert rep["verdicts"]["surjective"] is False
    assert rep["data"]["curve"] == "x^5*y^4 - y^5*z^4 + z^9"


def test_tangent_bad_polynomial_usage_error(capsys):
    code = main(["tangent", "--bundle", "T", "--n", "0", "--v1", "x, y", "--v2", "y, z, x"])
    assert code == 2


def test_tangent_inhomogeneous_component_usage_error(capsys):
    code = main(
        ["tangent", "--bundle", "T", "--n", "0", "--v1", "x+y^2, y, z", "--v2", "y, z, x"]
    )
    assert code == 2


# ---------------------------------------------------------------- mult


def test_mult_seeded_deterministic(capsys):
    code1, rep1 = run_json(capsys, ["mult", "--n", "0", "--seed", "5"])
    code2, rep2 = run_json(capsys, ["mult", "--n", "0", "--seed", "5"])
    assert code1 == code2 == 0
    rep1.pop("timing")
    rep2.pop("timing")
    assert rep1 == rep2
    assert rep1["seed"] == 5


def test_mult_equal_triples_fail(capsys):
    code, rep = run_json(
        capsys, ["mult", "--n", "0", "--f", "x, y, z", "--g", "x, y, z"]
    )
    assert code == 1
    assert rep["verdicts"]["gpli"] is False


def test_mult_requires_both_triples(capsys):
    assert main(["mult", "--n", "0", "--f", "x, y, z"]) == 2


def test_mult_membership_probes_at_multiple_of_three(capsys):
    code, rep = run_json(
        capsys, ["mult", "--n", "3", "--f", "z^4, x^4, 0", "--g", "0, z^4, y^4"]
    )
    assert code == 1
    assert rep["data"]["probe_balanced"] == "x^3*y^3*z^3"
    assert rep["data"]["probe_balanced_member"] is False
    assert rep["verdicts"]["crosscheck_agree"] is True


# ---------------------------------------------------------------- others


def test_p1p1_small_case(capsys):
    code, rep = run_json(capsys, ["p1p1", "--a", "1", "--b", "1", "--m", "1"])
    assert code == 0
    assert rep["data"] == {"domain_dim": 16, "target_dim": 9, "rank": 9}


def test_p1p1_rejects_zero(capsys):
    assert main(["p1p1", "--a", "0", "--b", "1", "--m", "1"]) == 2


def test_audit_table(capsys):
    code, rep = run_json(
        capsys, ["audit", "--family", "N", "--params", "n=0", "--m-range", "0:4", "--g", "8"]
    )
    assert code == 0
    assert rep["verdicts"]["all_hold"] is True
    assert len(rep["data"]["rows"]) == 5


def test_audit_bad_family(capsys):
    assert main(["audit", "--family", "Q"]) == 2


def test_audit_bad_params(capsys):
    assert main(["audit", "--family", "N", "--params", "n=x"]) == 2


def test_audit_select_degree(capsys):
    code, rep = run_json(capsys, ["audit", "--select-degree", "7"])
    assert code == 0
    assert rep["data"]["bundle"] == "T(2)"
    assert rep["data"]["det_degree"] == 7


def test_containment_file(tmp_path, capsys):
    path = tmp_path / "gens.txt"
    path.write_text("x^2\ny^2\nz^2\n")
    code, rep = run_json(capsys, ["containment", "--gens-file", str(path)])
    assert code == 0
    assert rep["data"]["containment_degree"] == 4


def test_containment_not_reached(tmp_path, capsys):
    path = tmp_path / "gens.txt"
    path.write_text("x^2\ny^2\n")
    code, rep = run_json(capsys, ["containment", "--gens-file", str(path), "--k-max", "6"])
    assert code == 1
    assert rep["data"]["containment_degree"] is None


def test_containment_missing_file(capsys):
    assert main(["containment", "--gens-file", "/nonexistent/gens.txt"]) == 2


def test_containment_bad_polynomial(tmp_path, capsys):
    path = tmp_path / "gens.txt"
    path.write_text("x + w\n")
    assert main(["containment", "--gens-file", str(path)]) == 2


def test_unknown_subcommand_usage_error(capsys):
    assert main(["frobnicate"]) == 2
