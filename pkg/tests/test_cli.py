"""CLI behavior: subcommands, exit codes, diagnostics, golden transcripts."""

from __future__ import annotations

import io
import json
from pathlib import Path

import pytest

from sgauss.cli import main

GOLDEN = Path(__file__).parent / "golden"

SPOT_INPUTS = {
    "kink": "a -a",
    "torus": "a b -a -b",
    "twokinks": "a -a b -b",
}


def run(capsys, monkeypatch, argv, stdin=""):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    monkeypatch.setenv("GAUSS_COLOR", "0")
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestInputs:
    def test_stdin_default(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["summary"], stdin="a -a")
        assert code == 0
        assert out == "n=1 b=3 genus=0 geometric=true\n"

    def test_explicit_dash(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["summary", "-"], stdin="a -a")
        assert code == 0

    def test_file_input(self, capsys, monkeypatch, tmp_path):
        f = tmp_path / "p.gauss"
        f.write_text("a b -a -b\n")
        code, out, _ = run(capsys, monkeypatch, ["summary", str(f)])
        assert code == 0
        assert out == "n=2 b=2 genus=1 geometric=false\n"

    def test_missing_file(self, capsys, monkeypatch):
        code, _, err = run(capsys, monkeypatch, ["summary", "/nonexistent/x"])
        assert code == 1
        assert "error" in err


class TestExitCodes:
    def test_domain_error_is_1(self, capsys, monkeypatch):
        code, _, err = run(capsys, monkeypatch, ["summary"], stdin="a b -a")
        assert code == 1
        assert "1:3" in err
        assert "[symbol-count]" in err

    def test_usage_error_is_2(self, capsys, monkeypatch):
        assert run(capsys, monkeypatch, ["frobnicate"])[0] == 2
        assert run(capsys, monkeypatch, ["split"], stdin="a -a")[0] == 2

    def test_help_is_0(self, capsys, monkeypatch):
        assert run(capsys, monkeypatch, ["--help"])[0] == 0

    def test_lexical_error_position(self, capsys, monkeypatch):
        code, _, err = run(capsys, monkeypatch, ["validate"], stdin="a !! -a")
        assert code == 1
        assert "1:3" in err
        assert "[syntax]" in err


class TestValidate:
    def test_ok(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["validate"], stdin="a -b / -a b")
        assert code == 0
        assert out == "valid: words=2 symbols=2\n"

    def test_json(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["validate", "--json"], stdin="a -a")
        assert json.loads(out) == {"valid": True, "words": 1, "symbols": 1}

    def test_pairwise_flag(self, capsys, monkeypatch):
        code, _, err = run(
            capsys, monkeypatch, ["validate", "--pairwise"], stdin="a / -a b / -b"
        )
        assert code == 1
        assert "[pairwise]" in err


class TestIso:
    def test_isomorphic(self, capsys, monkeypatch, tmp_path):
        f1 = tmp_path / "p1"
        f2 = tmp_path / "p2"
        f1.write_text("a b -a -b")
        f2.write_text("x y -x -y")
        code, out, _ = run(capsys, monkeypatch, ["iso", str(f1), str(f2)])
        assert code == 0
        assert out == "isomorphic\n"

    def test_not_isomorphic(self, capsys, monkeypatch, tmp_path):
        f1 = tmp_path / "p1"
        f2 = tmp_path / "p2"
        f1.write_text("a b -a -b")
        f2.write_text("a b -b -a")
        code, out, _ = run(capsys, monkeypatch, ["iso", str(f1), str(f2)])
        assert code == 0
        assert out == "not isomorphic\n"

    def test_one_stdin(self, capsys, monkeypatch, tmp_path):
        f = tmp_path / "p1"
        f.write_text("b -a -b a")
        code, out, _ = run(
            capsys, monkeypatch, ["iso", "-", str(f)], stdin="a b -a -b"
        )
        assert code == 0
        assert out == "isomorphic\n"

    def test_double_stdin_rejected(self, capsys, monkeypatch):
        code, _, err = run(capsys, monkeypatch, ["iso", "-", "-"], stdin="a -a")
        assert code == 2

    def test_json(self, capsys, monkeypatch, tmp_path):
        f = tmp_path / "p1"
        f.write_text("a -a")
        code, out, _ = run(
            capsys, monkeypatch, ["iso", "--json", str(f), str(f)]
        )
        assert json.loads(out) == {"isomorphic": True}


class TestGoldenTranscripts:
    @pytest.mark.parametrize("name", sorted(SPOT_INPUTS))
    @pytest.mark.parametrize(
        "command,suffix",
        [
            (["summary"], "summary.txt"),
            (["summary", "--json"], "summary.json"),
            (["circles"], "circles.txt"),
            (["profile", "--json"], "profile.json"),
            (["canon"], "canon.txt"),
        ],
    )
    def test_matches_golden(self, capsys, monkeypatch, name, command, suffix):
        code, out, _ = run(capsys, monkeypatch, command, stdin=SPOT_INPUTS[name])
        assert code == 0
        golden = (GOLDEN / f"{name}_{suffix}").read_bytes()
        assert out.encode() == golden

    @pytest.mark.parametrize("name", sorted(SPOT_INPUTS))
    def test_byte_stable_across_runs(self, capsys, monkeypatch, name):
        first = run(capsys, monkeypatch, ["circles"], stdin=SPOT_INPUTS[name])
        second = run(capsys, monkeypatch, ["circles"], stdin=SPOT_INPUTS[name])
        assert first == second


class TestPipelines:
    def test_canon_then_summary_equals_summary(self, capsys, monkeypatch):
        for text in SPOT_INPUTS.values():
            _, canon_out, _ = run(capsys, monkeypatch, ["canon"], stdin=text)
            _, via_canon, _ = run(capsys, monkeypatch, ["summary"], stdin=canon_out)
            _, direct, _ = run(capsys, monkeypatch, ["summary"], stdin=text)
            assert via_canon == direct


class TestOperations:
    def test_profile_text(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["profile"], stdin="a b -a -b")
        assert out == "alpha: a=1 b=-1\nbeta: a,b=1 b,a=-1\nplanar: false\n"

    def test_profile_needs_single_word(self, capsys, monkeypatch):
        code, _, err = run(capsys, monkeypatch, ["profile"], stdin="a -b / -a b")
        assert code == 1

    def test_pairing(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["pairing"], stdin="a b / -a -b")
        assert out == "pairing=2\n"
        code, out, _ = run(
            capsys, monkeypatch, ["pairing", "--json"], stdin="a -b / -a b"
        )
        assert json.loads(out) == {"pairing": 0}

    def test_split(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["split", "--at", "a"], stdin="a b -a -b")
        assert code == 0
        assert out == "b / -b\n"

    def test_split_degenerate(self, capsys, monkeypatch):
        code, _, err = run(
            capsys, monkeypatch, ["split", "--at", "a"], stdin="a -a b -b"
        )
        assert code == 1

    def test_join(self, capsys, monkeypatch):
        code, out, _ = run(
            capsys,
            monkeypatch,
            ["join", "--shared", "a", "--fresh", "c"],
            stdin="a -b / -a b",
        )
        assert out == "a -b c -a b -c\n"

    def test_join_not_shared(self, capsys, monkeypatch):
        code, _, err = run(
            capsys,
            monkeypatch,
            ["join", "--shared", "b", "--fresh", "c"],
            stdin="a b -b / -a",
        )
        assert code == 1

    def test_reduce(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["reduce"], stdin="a -b / -a b")
        assert out == "a -b j1 -a b -j1\n"

    def test_reduce_prefix(self, capsys, monkeypatch):
        code, out, _ = run(
            capsys, monkeypatch, ["reduce", "--prefix", "k"], stdin="a -b / -a b"
        )
        assert out == "a -b k1 -a b -k1\n"

    def test_split_json(self, capsys, monkeypatch):
        code, out, _ = run(
            capsys, monkeypatch, ["split", "--at", "a", "--json"], stdin="a b -a -b"
        )
        assert json.loads(out) == {
            "words": [[{"sym": "b", "exp": 1}], [{"sym": "b", "exp": -1}]]
        }


class TestVerifyCommand:
    def test_small_run_passes(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["verify", "--max-n", "2"])
        assert code == 0
        assert "verify: PASS" in out
        assert "kind=words" in out
        assert "kind=two-component-paragraphs" in out

    def test_json(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["verify", "--max-n", "2", "--json"])
        doc = json.loads(out)
        assert doc["ok"] is True
        assert doc["words"]["size"] == 14
        assert doc["paragraphs"]["size"] == 2

    def test_words_only_at_n1(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["verify", "--max-n", "1", "--json"])
        doc = json.loads(out)
        assert doc["paragraphs"] is None


class TestStyling:
    def test_no_ansi_when_disabled(self, capsys, monkeypatch):
        _, _, err = run(capsys, monkeypatch, ["summary"], stdin="a b -a")
        assert "\x1b[" not in err

    def test_ansi_when_tty(self, capsys, monkeypatch):
        class FakeTTY(io.StringIO):
            def isatty(self):
                return True

        monkeypatch.setattr("sys.stdin", io.StringIO("a b -a"))
        monkeypatch.delenv("GAUSS_COLOR", raising=False)
        fake_err = FakeTTY()
        monkeypatch.setattr("sys.stderr", fake_err)
        assert main(["summary"]) == 1
        assert "\x1b[31m" in fake_err.getvalue()
