import json

import pytest

from riordan_inversion.cli import EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED, main

CORPUS = """\
cases:
  - id: narayana-bang
    kind: ordinary
    operation: bang
    source: {family: PASCAL_LIKE, param: 1}
    expected:
      - [1]
      - [1, 1]
      - [1, 3, 1]
"""


class TestArrayCommands:
    def test_triangle_csv(self, capsys):
        assert main(["triangle", "--g", "1", "--f", "0,1", "-N", "2", "--format", "csv"]) == EXIT_OK
        assert capsys.readouterr().out == "1\n0,1\n0,0,1\n"

    def test_bang_table(self, capsys):
        assert main(["bang", "--family", "PASCAL_LIKE:1", "-N", "3"]) == EXIT_OK
        assert capsys.readouterr().out == "1\n1 1\n1 3 1\n1 6 6 1\n"

    def test_exponential_triangle(self, capsys):
        assert main(["triangle", "--exp", "--g", "exp", "--f", "x", "-N", "2", "--format", "json"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out) == [["1"], ["1", "1"], ["1", "2", "1"]]

    def test_revert_sequence(self, capsys):
        assert main(["revert-seq", "--seq", "1,2,3,4", "--format", "json"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out) == ["1", "-2", "5", "-14"]

    def test_bad_expression(self, capsys):
        assert main(["triangle", "--g", "nope", "--f", "x"]) == EXIT_USAGE
        captured = capsys.readouterr()
        assert captured.out == ""
        assert captured.err.startswith("error:"), f"Unexpected stderr: {captured.err}"

    def test_order_limit(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            main(["triangle", "--g", "1", "--f", "0,1", "-N", "1000"])
        assert exc_info.value.code == EXIT_USAGE
        assert "N must be between 0 and 32" in capsys.readouterr().err

    def test_sequence_length_limit(self, capsys):
        seq = ",".join(["1"] * 34)
        assert main(["revert-seq", "--seq", seq]) == EXIT_USAGE
        assert "--seq has 34 terms; at most 33 are accepted" in capsys.readouterr().err


class TestVerify:
    def test_passing_corpus(self, tmp_path, capsys):
        path = tmp_path / "corpus.yml"
        path.write_text(CORPUS, encoding="utf-8")

        assert main(["verify", "--corpus", str(path)]) == EXIT_OK
        assert "1 cases: 1 passed, 0 failed" in capsys.readouterr().out

    def test_failing_corpus(self, tmp_path, capsys):
        path = tmp_path / "corpus.yml"
        path.write_text(CORPUS.replace("[1, 3, 1]", "[1, 4, 1]"), encoding="utf-8")

        assert main(["verify", "--corpus", str(path), "--format", "json"]) == EXIT_VERIFY_FAILED
        payload = json.loads(capsys.readouterr().out)
        assert payload["summary"]["unexpected"] == ["narayana-bang"]

    def test_broken_corpus(self, tmp_path, capsys):
        path = tmp_path / "corpus.yml"
        path.write_text("cases: [\n", encoding="utf-8")

        assert main(["verify", "--corpus", str(path)]) == EXIT_USAGE
        assert "invalid YAML syntax" in capsys.readouterr().err


class TestContinuedFractions:
    def test_triangle(self, tmp_path, capsys):
        spec = tmp_path / "cf.yml"
        spec.write_text("builder: pascal_like\nparam: 1\n", encoding="utf-8")

        assert main(["cf-eval", "--spec", str(spec), "-N", "3"]) == EXIT_OK
        assert capsys.readouterr().out == "1\n1 1\n1 3 1\n1 6 6 1\n"

    def test_sequence_at_y(self, tmp_path, capsys):
        spec = tmp_path / "cf.yml"
        spec.write_text("builder: pascal_like\nparam: 1\ny: 1\n", encoding="utf-8")

        assert main(["cf-eval", "--spec", str(spec), "-N", "3", "--format", "json"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out) == ["1", "2", "5", "14"]
