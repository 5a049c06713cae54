import json
import subprocess
import sys

import pytest

from dialgebra import parse
from dialgebra.cli import main

from conftest import DATA


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return _run


def test_verify_passing_entry(run):
    code, out, err = run("verify", "catalog:Hd2.1")
    assert code == 0
    assert "5/5 axioms pass" in out
    assert "multiplicativity passes" in out


def test_verify_failing_entry(run):
    code, out, _ = run("verify", "catalog:Hd2.2")
    assert code == 1
    assert "FAIL" in out


def test_verify_satellite(run):
    code, out, _ = run("verify", "catalog:zin2.1")
    assert code == 1
    assert "identities" in out


def test_verify_json(run):
    code, out, _ = run("verify", "catalog:Hd2.5", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["id"] == "Hd2.5" and doc["multiplicative"] is True
    assert [a["id"] for a in doc["axioms"]] == ["ax1", "ax2", "ax3", "ax4",
                                                "ax5"]


def test_missing_file_is_usage_error(run):
    code, out, err = run("verify", "nonexistent.alg")
    assert code == 2
    assert out == ""
    assert "nonexistent.alg" in err


def test_malformed_file_reports_line(run):
    code, _, err = run("verify", str(DATA / "malformed" / "bad_dim.alg"))
    assert code == 2
    assert "line 2:" in err


def test_unknown_subcommand_and_flag(run):
    assert run("frobnicate")[0] == 2
    assert run("verify", "catalog:Hd2.1", "--frobnicate")[0] == 2
    assert run()[0] == 2


def test_unknown_catalog_id(run):
    code, _, err = run("verify", "catalog:Hd7.1")
    assert code == 2
    assert "unknown catalog id" in err


def test_der_prints_dimension_and_basis(run):
    code, out, _ = run("der", "catalog:Hd2.4", "--k", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[1] == "dim 1"
    assert lines[2] == "basis 1:"
    assert [l.strip() for l in lines[3:5]] == ["0 1", "0 0"]


def test_der_rejects_satellites(run):
    code, _, err = run("der", "catalog:dend2.1")
    assert code == 2
    assert "dialgebra target" in err


def test_cent_full_reports_closure(run):
    code, out, _ = run("cent", "catalog:Hd2.1", "--variant", "full")
    assert code == 0
    assert "closed: no" in out
    code, out, _ = run("cent", "catalog:Hd2.5", "--variant", "full")
    assert "closed: yes" in out


def test_fp_field_order(run):
    _, out, _ = run("fp", "catalog:Hd2.5")
    fields = [l.split()[0] for l in out.splitlines()[1:]]
    assert fields[:3] == ["dim", "rank_alpha", "charpoly_alpha"]


def test_cmp_exit_codes(run):
    assert run("cmp", "catalog:Hd2.1", "catalog:Hd2.5")[0] == 1
    assert run("cmp", "catalog:Hd2.3", "catalog:Hd2.3")[0] == 0


def test_catalog_list(run):
    code, out, _ = run("catalog", "list")
    assert code == 0
    assert len(out.splitlines()) == 50


def test_catalog_report_json(run):
    code, out, _ = run("catalog", "report", "--json")
    assert code == 1  # honest: the recorded tables carry discrepancies
    doc = json.loads(out)
    assert doc["entry_count"] == 50
    assert doc["discrepancy_count"] > 0
    assert len(doc["ranges"]) == 3


def test_catalog_report_params_override(run):
    code, out, _ = run("catalog", "report", "--params", "c=0")
    assert code == 1
    assert "Hd3.13" in out


def test_catalog_report_bad_params(run):
    assert run("catalog", "report", "--params", "nonsense")[0] == 2


def test_catalog_report_out_file(run, tmp_path):
    target = tmp_path / "report.txt"
    code, out, _ = run("catalog", "report", "--out", str(target))
    assert code == 1
    assert out == ""
    assert "entries" in target.read_text()


def test_stdout_is_deterministic(run):
    first = run("verify", "catalog:Hd3.11")
    second = run("verify", "catalog:Hd3.11")
    assert first == second
    r1 = run("catalog", "report", "--json")
    r2 = run("catalog", "report", "--json")
    assert r1[1] == r2[1]


def test_transport_random_is_seeded(run):
    a = run("transport", "catalog:Hd2.5", "--random", "--seed", "7")
    b = run("transport", "catalog:Hd2.5", "--random", "--seed", "7")
    c = run("transport", "catalog:Hd2.5", "--random", "--seed", "8")
    assert a == b
    assert a[1] != c[1]
    moved = parse(a[1])
    assert moved.name == "Hd2.5~"


def test_transport_matrix_file(run, tmp_path):
    mat = tmp_path / "phi.mat"
    mat.write_text("1 1\n0 1\n")
    code, out, _ = run("transport", "catalog:Hd2.4", "--matrix", str(mat))
    assert code == 0
    assert parse(out).n == 2


def test_transport_rejects_bad_matrices(run, tmp_path):
    singular = tmp_path / "s.mat"
    singular.write_text("1 1\n1 1\n")
    assert run("transport", "catalog:Hd2.4", "--matrix", str(singular))[0] == 2
    short = tmp_path / "short.mat"
    short.write_text("1 1\n")
    assert run("transport", "catalog:Hd2.4", "--matrix", str(short))[0] == 2
    assert run("transport", "catalog:Hd2.4", "--matrix", "missing.mat")[0] == 2


def test_transport_needs_matrix_or_random(run):
    assert run("transport", "catalog:Hd2.4")[0] == 2


def test_construct_zinbiel_bridge(run, tmp_path):
    src = tmp_path / "z.alg"
    src.write_text("algebra trunc\ndim 2\nscalars rational\nkind zinbiel\n"
                   "alpha 1 1 1\nalpha 2 2 1\nleft 1 1 2 1\nend\n")
    code, out, _ = run("construct", "zinbiel2dend", str(src))
    assert code == 0
    dend = parse(out)
    assert dend.kind == "dendriform"
    # a catalog zinbiel that breaks its own identity is refused
    assert run("construct", "zinbiel2dend", "catalog:zin2.1")[0] == 2


def test_construct_wrong_kind(run):
    assert run("construct", "zinbiel2dend", "catalog:Hd2.1")[0] == 2
    assert run("construct", "diptwist", "catalog:Hd2.1")[0] == 2
    assert run("construct", "untwist", "catalog:zin2.1")[0] == 2


def test_construct_untwist(run):
    code, out, _ = run("construct", "untwist", "catalog:Hd2.5")
    assert code == 0
    assert parse(out).alpha.is_identity()


def test_installed_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dialgebra.cli", "verify",
                           "catalog:Hd2.1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "5/5 axioms pass" in proc.stdout
