import json
import subprocess
import sys

import pytest

from nilcohom.cli import main
from nilcohom.errors import ParseError
from nilcohom.io import dump_lie_text, parse_lie_text
from nilcohom.lie import carnotification, catalog, central_product


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    assert code == 0, err
    return json.loads(out)


class TestFileFormat:
    def test_parse(self):
        g = parse_lie_text("# h3\n\ndim 3\n1 2 3 1   # bracket\n")
        assert g.structure_constants() == [(1, 2, 3, 1)]

    def test_fraction(self):
        g = parse_lie_text("dim 3\n1 2 3 -5/7\n")
        assert str(g.structure_constants()[0][3]) == "-5/7"

    @pytest.mark.parametrize(
        "text, line",
        [
            ("1 2 3 1\n", 1),
            ("dim x\n", 1),
            ("dim 3\n1 2 3\n", 2),
            ("dim 3\n\n2 1 3 1\n", 3),
            ("dim 3\n1 2 3 1\n1 2 3 2\n", 3),
            ("dim 3\n1 2 3 a/b\n", 2),
        ],
    )
    def test_errors_have_line_numbers(self, text, line):
        with pytest.raises(ParseError) as exc:
            parse_lie_text(text)
        assert exc.value.line == line

    def test_missing_dim(self):
        with pytest.raises(ParseError):
            parse_lie_text("# nothing\n")

    def test_round_trip(self):
        l5, l3 = catalog("filiform_l", 5), catalog("filiform_l", 3)
        for g in [carnotification(l5), central_product(l5, l3, "1/3"), catalog("heisenberg", 2)]:
            again = parse_lie_text(dump_lie_text(g))
            alg = getattr(g, "algebra", g)
            assert again.structure_constants() == alg.structure_constants()


class TestBetti:
    def test_family(self, capsys):
        rep = run_json(capsys, "betti", "--family", "filiform-l", "--n", "7")
        assert rep["command"] == "betti"
        assert rep["result"]["betti"][2] == 3

    def test_abelian(self, capsys):
        assert run_json(capsys, "betti", "--family", "abelian", "--n", "4")["result"]["betti"] == [1, 4, 6, 4, 1]

    def test_file(self, capsys, data_dir):
        assert run_json(capsys, "betti", "--file", str(data_dir / "h3.lie"))["result"]["betti"] == [1, 2, 2, 1]

    def test_central_product_files(self, capsys, data_dir):
        assert run_json(capsys, "betti", str(data_dir / "l5xZl3.lie"))["result"]["betti"][3] == 8
        assert run_json(capsys, "betti", str(data_dir / "grl5xZl3.lie"))["result"]["betti"][3] == 9

    def test_text_mode(self, capsys):
        code, out, _ = run(capsys, "betti", "heisenberg:1")
        assert code == 0 and "betti:  1 2 2 1" in out

    def test_jacobi_error(self, capsys, tmp_path):
        f = tmp_path / "bad.lie"
        f.write_text("dim 3\n1 2 3 1\n1 3 1 1\n")
        code, out, err = run(capsys, "betti", "--file", str(f))
        assert code == 3
        assert err.startswith("JACOBI_VIOLATION: ") and err.count("\n") == 1

    def test_parse_error(self, capsys, tmp_path):
        f = tmp_path / "bad.lie"
        f.write_text("dim 3\n3 2 1 1\n")
        code, _, err = run(capsys, "betti", "--file", str(f))
        assert code == 3 and "line 2" in err

    def test_not_nilpotent(self, capsys, tmp_path):
        f = tmp_path / "sl2.lie"
        f.write_text("dim 3\n1 2 2 2\n1 3 3 -2\n2 3 1 1\n")
        code, _, err = run(capsys, "betti", "--file", str(f))
        assert code == 3 and err.startswith("NOT_NILPOTENT")

    def test_unknown_family(self, capsys):
        code, _, err = run(capsys, "betti", "--family", "sl", "--n", "2")
        assert code == 2 and err.startswith("UNKNOWN_FAMILY")


class TestGr:
    def test_filiform(self, capsys):
        rep = run_json(capsys, "gr", "--family", "filiform-l", "--n", "5")
        assert rep["result"]["layer_dims"] == [2, 1, 1, 1]

    def test_abelian(self, capsys):
        rep = run_json(capsys, "gr", "abelian:3")
        assert rep["result"]["layer_dims"] == [3]
        assert parse_lie_text(rep["result"]["structure_constants"]).is_abelian()

    def test_central_product_file(self, capsys, data_dir):
        rep = run_json(capsys, "gr", "--file", str(data_dir / "l5xZl3.lie"))
        assert rep["result"]["layer_dims"] == [4, 1, 1, 1]

    def test_round_trip(self, capsys, data_dir, tmp_path):
        rep = run_json(capsys, "gr", "--file", str(data_dir / "l5xZl3.lie"))
        text = rep["result"]["structure_constants"]
        f = tmp_path / "gr.lie"
        f.write_text(text)
        rep2 = run_json(capsys, "gr", "--file", str(f))
        assert parse_lie_text(rep2["result"]["structure_constants"]).structure_constants() == \
            parse_lie_text(text).structure_constants()


class TestObstruct:
    def test_filiform_7(self, capsys):
        rep = run_json(capsys, "obstruct", "--a", "filiform-l:7", "--b", "model-filiform:7", "--k", "2",
                       "--default-dehn", "--exact-filling")
        assert rep["result"]["p_threshold"] == "61/1"
        assert rep["result"]["verdict"] == "OBSTRUCTED"
        assert rep["warnings"] == []

    def test_same_algebra(self, capsys):
        rep = run_json(capsys, "obstruct", "--a", "heisenberg:1", "--b", "heisenberg:1", "--k", "2", "--default-dehn")
        assert rep["result"]["verdict"] == "NOT_OBSTRUCTED"
        assert "threshold is an infimum, not attained" in rep["warnings"]

    def test_missing_degree(self, capsys):
        code, _, err = run(capsys, "obstruct", "--a", "filiform-l:7", "--b", "model-filiform:7", "--k", "3",
                           "--default-dehn")
        assert code == 4
        assert err.startswith("MISSING_DEGREE") and "--fill-a 3=" in err

    def test_explicit_degrees(self, capsys, data_dir):
        rep = run_json(capsys, "obstruct", "--a", str(data_dir / "l5xZl3.lie"), "--b", str(data_dir / "grl5xZl3.lie"),
                       "--k", "3", "--fill-a", "2=5,3=3/2", "--fill-b", "2=5,3=3/2", "--exact-filling")
        assert rep["result"]["verdict"] == "OBSTRUCTED"
        assert rep["result"]["b_k"] == [8, 9]

    def test_text_has_trace(self, capsys):
        code, out, _ = run(capsys, "obstruct", "--a", "filiform-l:8", "--b", "model-filiform:8", "--k", "2",
                           "--default-dehn")
        assert code == 0
        assert "trace:" in out and "p_threshold" in out and "infimum" in out


class TestRank1:
    def test_single(self, capsys):
        assert run_json(capsys, "rank1", "--field", "R", "--n", "5", "--k", "2")["result"]["vanishing"] == "2/1"

    def test_table(self, capsys):
        rows = run_json(capsys, "rank1", "--field", "C", "--n", "3", "--table")["result"]["rows"]
        assert [r["k"] for r in rows] == [1, 2, 3, 4]
        assert [r["N_k"] for r in rows] == ["1/1", "2/1", "4/1", "5/1"]

    def test_unknown(self, capsys):
        code, _, err = run(capsys, "rank1", "--field", "H", "--n", "4", "--k", "6")
        assert code == 4 and err.startswith("UNKNOWN_DEGREE")

    def test_text_table_approximations(self, capsys):
        code, out, _ = run(capsys, "rank1", "--field", "C", "--n", "3", "--table")
        assert "7/4 (≈1.7500)" in out


def test_other_commands(capsys):
    rep = run_json(capsys, "series", "filiform-l:5")
    assert rep["result"]["series_dims"] == [5, 3, 2, 1, 0] and rep["result"]["center_dim"] == 1
    rep = run_json(capsys, "product", "--a", "filiform-l:5", "--b", "filiform-l:3", "--central", "--scaling", "2")
    assert rep["result"]["dim"] == 7
    rep = run_json(capsys, "constants", "--degrees", "2=3", "--k", "2", "--d", "4")
    assert rep["result"]["alpha_{k-1}(N)"] == "4/1" and rep["result"]["p_threshold"] == "17/1"


def test_usage_error_exit_code():
    proc = subprocess.run([sys.executable, "-m", "nilcohom", "betti", "--n", "x"], capture_output=True)
    assert proc.returncode == 2


def test_json_byte_stable():
    args = [sys.executable, "-m", "nilcohom", "obstruct", "--a", "filiform-l:7", "--b", "model-filiform:7",
            "--k", "2", "--default-dehn", "--exact-filling", "--json"]
    first = subprocess.run(args, capture_output=True, check=True).stdout
    second = subprocess.run(args, capture_output=True, check=True).stdout
    assert first == second
