import json
import subprocess
import sys

import pytest

from flaghom.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_roots_json(capsys):
    code, out = run_cli(capsys, "roots", "B", "2", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["schema_version"] == "1"
    assert report["job"]["family"] == "B"
    coeffs = {tuple(r["coeffs"]) for r in report["roots"]}
    assert coeffs == {(1, 0), (0, 1), (1, 1), (1, 2)}
    long_root = next(r for r in report["roots"] if r["coeffs"] == [1, 2])
    assert long_root["coroot"] == [1, 1] and long_root["coroot_height"] == 2


def test_json_round_trip_is_stable(capsys):
    _, out = run_cli(capsys, "homology", "A", "2", "--format", "json")
    report = json.loads(out)
    assert json.dumps(report, indent=2, sort_keys=True) == out.rstrip("\n")


def test_weyl_cell_counts(capsys):
    code, out = run_cli(capsys, "weyl", "A", "2", "--theta", "1", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["order"] == 6
    assert len(report["cells"]) == 3  # RP^2 has one cell per dimension


def test_coeffs_contains_known_entry(capsys):
    _, out = run_cli(capsys, "coeffs", "A", "3", "--format", "json")
    report = json.loads(out)
    # boundary of the cell with word s2 s1 hits s1 with coefficient -2
    entry = next(
        p
        for p in report["covering_pairs"]
        if p["w"] == [2, 1] and p["w_prime"] == [1]
    )
    assert entry["kappa"] == 2
    assert entry["magnitude"] == 2 and entry["sign"] == -1
    routes = set(entry["kappa_routes"].values()) - {None}
    assert routes == {entry["kappa"]}


def test_homology_example_a4_theta23(capsys):
    code, out = run_cli(
        capsys, "homology", "A", "4", "--theta", "2,3", "--format", "json"
    )
    assert code == 0
    report = json.loads(out)
    by_degree = {h["degree"]: h for h in report["homology"]}
    assert by_degree[0] == {"degree": 0, "free_rank": 1, "torsion": []}
    assert by_degree[1]["torsion"] == [2, 2]
    assert by_degree[2]["torsion"] == [2]
    assert report["closed_form"]["H1"]["torsion"] == [2, 2]
    assert report["closed_form"]["H2"]["torsion"] == [2]


def test_homology_mod2(capsys):
    code, out = run_cli(capsys, "homology", "A", "2", "--ring", "z2", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["mod2_betti"] == [1, 2, 2, 1]


def test_orientability_example(capsys):
    code, out = run_cli(
        capsys, "orientability", "A", "5", "--theta-complement", "1", "--format", "json"
    )
    assert code == 0
    report = json.loads(out)
    assert report["orientable"] == {"top_cell": True, "criterion": True, "agree": True}


def test_orientability_negative_case(capsys):
    _, out = run_cli(
        capsys, "orientability", "A", "4", "--theta-complement", "2", "--format", "json"
    )
    report = json.loads(out)
    assert report["orientable"]["top_cell"] is False


def test_sweep_a3(capsys):
    code, out = run_cli(capsys, "sweep", "A", "3", "--format", "json")
    assert code == 0
    report = json.loads(out)
    rows = {tuple(r["theta"]): r for r in report["sweep"]}
    assert len(rows) == 8
    assert rows[()]["h1_torsion_rank"] == 3 and rows[()]["orientable"] is True
    assert rows[(2, 3)]["h1_torsion_rank"] == 1
    assert rows[(1, 2, 3)]["h1_torsion_rank"] == 0


def test_text_and_json_agree(capsys):
    _, text = run_cli(capsys, "orientability", "A", "4")
    _, as_json = run_cli(capsys, "orientability", "A", "4", "--format", "json")
    report = json.loads(as_json)
    assert ("top_cell=yes" in text) == report["orientable"]["top_cell"]


def test_tsv_homology_has_matrix_rows(capsys):
    _, out = run_cli(capsys, "homology", "A", "2", "--format", "tsv")
    lines = out.splitlines()
    assert "d_2" in lines
    block = lines[lines.index("d_2") + 1 : lines.index("d_2") + 3]
    assert sorted(block) == ["-2\t0", "0\t-2"]


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["homology", "A", "0"])
    assert exc.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        main(["homology", "A", "3", "--theta", "5"])
    assert exc.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_theta_flags_are_exclusive(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["homology", "A", "3", "--theta", "1", "--theta-complement", "2"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_installed_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "flaghom.cli", "--version"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "0.1.0"
