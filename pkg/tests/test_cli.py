import json

import pytest

from nmfrigid import formats
from nmfrigid.cli import main
from nmfrigid.cpr import SymmetricFactor
from nmfrigid.exactlin import RationalMatrix
from nmfrigid.fixtures import RIGID_5X5, circulant_pair, lift_demo_pair


@pytest.fixture
def fixture_file(tmp_path):
    path = tmp_path / "fx1.txt"
    path.write_text(formats.dump_factorization(RIGID_5X5[0].pair()))
    return path


def run(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_fixture(capsys, fixture_file):
    code, out, _ = run(capsys, "check", str(fixture_file))
    assert code == 0
    assert "infinitesimally-rigid" in out
    assert "dim W          : 4" in out


def test_check_json_verifies(capsys, fixture_file):
    code, out, _ = run(capsys, "check", str(fixture_file), "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["certificate"]["classification"] == "infinitesimally-rigid"
    assert formats.verify_certificate_document(doc, RIGID_5X5[0].pair())


def test_check_not_rigid_input_still_exits_zero(capsys, tmp_path):
    path = tmp_path / "tri.txt"
    path.write_text(formats.dump_factorization(circulant_pair()))
    code, out, _ = run(capsys, "check", str(path))
    assert code == 0
    assert "undetermined" in out
    assert "span rank      : 5" in out


def test_check_negative_entry_is_input_error(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2 2\n1 -3\n2 1\n\n2 2\n1 1\n2 1\n")
    code, _, err = run(capsys, "check", str(path))
    assert code == 2
    assert "A[0,1]" in err


def test_check_malformed_file_is_input_error(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("not a matrix\n")
    code, _, err = run(capsys, "check", str(path))
    assert code == 2


def test_check_rank_deficient_is_input_error(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2 2\n1 1\n1 1\n\n2 2\n1 0\n0 1\n")
    code, _, err = run(capsys, "check", str(path))
    assert code == 2
    assert "rank" in err


def test_cp_check(capsys, tmp_path):
    path = tmp_path / "ident.txt"
    path.write_text(formats.dump_symmetric_factor(SymmetricFactor(RationalMatrix.identity(3))))
    code, out, _ = run(capsys, "cp-check", str(path))
    assert code == 0
    assert "infinitesimally-rigid" in out


def test_enumerate_counts(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--shape", "5", "5", "--rank", "4", "--zeros", "13",
        "--filters", "table1",
    )
    assert code == 0 and out.strip() == "15"
    code, out, _ = run(
        capsys, "enumerate", "--shape", "2", "2", "--rank", "2", "--zeros", "0",
        "--filters", "wpoint",
    )
    assert code == 0 and out.strip() == "0"


def test_enumerate_writes_pattern_files(capsys, tmp_path):
    out_dir = tmp_path / "pats"
    code, out, _ = run(
        capsys, "enumerate", "--shape", "9", "5", "--rank", "4", "--zeros", "13",
        "--filters", "table1", "--out", str(out_dir),
    )
    assert code == 0 and out.strip() == "2"
    files = sorted(out_dir.glob("pattern-*.txt"))
    assert len(files) == 2
    for path in files:
        pattern = formats.load_pattern(path.read_text())
        assert pattern.zero_count == 13


def test_enumerate_unknown_filter(capsys):
    code, _, err = run(
        capsys, "enumerate", "--shape", "5", "5", "--rank", "4", "--zeros", "13",
        "--filters", "bogus",
    )
    assert code == 2 and "unknown filter" in err


def test_realize_round_trip(capsys, tmp_path, fixture_file):
    pattern = RIGID_5X5[0].pair().zero_pattern()
    pattern_path = tmp_path / "pattern.txt"
    pattern_path.write_text(formats.dump_pattern(pattern))
    out_path = tmp_path / "realized.txt"
    code, out, _ = run(
        capsys, "realize", "--pattern", str(pattern_path), "--seed", "1",
        "--out", str(out_path),
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["certificate"]["classification"] == "infinitesimally-rigid"
    assert doc["seed"] == 1
    pair = formats.load_factorization(out_path.read_text())
    assert pair.zero_pattern() == pattern
    assert formats.verify_certificate_document(doc, pair)


def test_realize_refuses_wpoint_failure(capsys, tmp_path):
    from nmfrigid.fixtures import twelve_zero_pattern_5x7

    path = tmp_path / "pattern.txt"
    path.write_text(formats.dump_pattern(twelve_zero_pattern_5x7()))
    code, _, err = run(capsys, "realize", "--pattern", str(path))
    assert code == 2
    assert "pair conditions" in err


def test_realize_budget_exhausted(capsys, tmp_path):
    pattern = RIGID_5X5[0].pair().zero_pattern()
    path = tmp_path / "pattern.txt"
    path.write_text(formats.dump_pattern(pattern))
    code, _, err = run(capsys, "realize", "--pattern", str(path), "--max-samples", "0")
    assert code == 1
    assert "no rigid realization" in err


def test_verify_fixtures(capsys):
    code, out, _ = run(capsys, "verify-fixtures")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 16
    assert all("pass" in line for line in lines[:15])
    assert lines[-1] == "15/15 fixtures pass"


def test_verify_fixtures_threaded(capsys, monkeypatch):
    monkeypatch.setenv("NMFR_THREADS", "2")
    code, out, _ = run(capsys, "verify-fixtures")
    assert code == 0
    assert out.strip().splitlines()[-1] == "15/15 fixtures pass"


def test_verify_fixtures_reports_corruption_with_entry_diff(capsys, monkeypatch):
    import dataclasses

    from nmfrigid import cli
    from nmfrigid.fixtures import RIGID_5X5

    broken = RIGID_5X5[2]
    product = [list(row) for row in broken.product]
    product[4][4] += 1
    corrupted = dataclasses.replace(broken, product=tuple(map(tuple, product)))
    fixtures = RIGID_5X5[:2] + (corrupted,) + RIGID_5X5[3:]
    monkeypatch.setattr(cli, "RIGID_5X5", fixtures)
    code, out, _ = run(capsys, "verify-fixtures")
    assert code == 1
    lines = out.strip().splitlines()
    assert "FAIL" in lines[2]
    assert "product[4,4]" in lines[2]
    assert lines[-1] == "14/15 fixtures pass"


def test_lift_demo(capsys, tmp_path):
    path = tmp_path / "pir.txt"
    path.write_text(formats.dump_factorization(lift_demo_pair()))
    out_path = tmp_path / "lifted.txt"
    code, out, _ = run(capsys, "lift", str(path), "--out", str(out_path))
    assert code == 0
    doc = json.loads(out)
    assert doc["certificate"]["classification"] == "partially-infinitesimally-rigid"
    assert doc["certificate"]["v_support"] == [[0, 3], [1, 3], [2, 3]]
    lifted = formats.load_factorization(out_path.read_text())
    assert formats.verify_certificate_document(doc, lifted)


def test_lift_refuses_non_rigid(capsys, tmp_path):
    path = tmp_path / "tri.txt"
    path.write_text(formats.dump_factorization(circulant_pair()))
    code, _, err = run(capsys, "lift", str(path))
    assert code == 2
    assert "undetermined" in err


def test_outputs_deterministic(capsys, fixture_file):
    code1, out1, _ = run(capsys, "check", str(fixture_file), "--json")
    code2, out2, _ = run(capsys, "check", str(fixture_file), "--json")
    assert code1 == code2 == 0
    assert out1 == out2


def test_realize_output_deterministic(capsys, tmp_path):
    pattern = RIGID_5X5[0].pair().zero_pattern()
    path = tmp_path / "pattern.txt"
    path.write_text(formats.dump_pattern(pattern))
    _, out1, _ = run(capsys, "realize", "--pattern", str(path), "--seed", "3")
    _, out2, _ = run(capsys, "realize", "--pattern", str(path), "--seed", "3")
    assert out1 == out2
