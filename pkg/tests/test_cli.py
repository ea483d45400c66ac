"""Command-line surface: exit codes, output formats, file output."""
import json
import subprocess
import sys

import pytest

from nbhood.cli import EXIT_OK, EXIT_USAGE, EXIT_VERIFY, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dist_prints_the_distance(capsys):
    code, out, err = run_cli(capsys, "dist", "abc", "abd")
    assert (code, out, err) == (EXIT_OK, "1\n", "")


def test_dist_renders_alignments(capsys):
    code, out, _ = run_cli(capsys, "dist", "align", "assign", "--leftmost")
    assert code == EXIT_OK
    assert out == "2\na l - i g n\na s s i g n\n"
    code, out, _ = run_cli(capsys, "dist", "aa", "a", "--alignment")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "1"
    assert len(out.splitlines()) == 3


def test_dist_rejects_symbols_outside_the_universe(capsys):
    code, out, err = run_cli(capsys, "dist", "a!", "b")
    assert code == EXIT_USAGE
    assert out == ""
    assert err.startswith("nbhood: error:")


def test_dist_rejects_words_outside_an_explicit_alphabet(capsys):
    code, _, err = run_cli(capsys, "dist", "abc", "abd", "--alphabet", "ab")
    assert code == EXIT_USAGE
    assert "not in alphabet" in err


def test_usage_errors_exit_one():
    for argv in (["dist", "abc"], ["frobnicate"], []):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == EXIT_USAGE


def test_enum_text_lists_members(capsys):
    code, out, _ = run_cli(
        capsys, "enum", "--word", "aaaa", "--dist", "1", "--sigma", "2",
        "--kind", "super-condensed",
    )
    assert code == EXIT_OK
    assert out == "aaa\naaba\nabaa\n"


def test_enum_requires_an_alphabet(capsys):
    code, _, err = run_cli(capsys, "enum", "--word", "aa", "--dist", "1")
    assert code == EXIT_USAGE
    assert "alphabet" in err


def test_enum_json_payload(capsys):
    code, out, _ = run_cli(
        capsys, "enum", "--word", "aa", "--dist", "1", "--sigma", "2",
        "--format", "json",
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload == {
        "query": "aa",
        "distance": 1,
        "alphabet": "ab",
        "kind": "full",
        "count": "8",
        "words": ["a", "aa", "aaa", "aab", "ab", "aba", "ba", "baa"],
    }
    assert isinstance(payload["count"], str)


def test_enum_count_only_json_has_no_words(capsys):
    code, out, _ = run_cli(
        capsys, "enum", "--word", "aa", "--dist", "1", "--sigma", "2",
        "--format", "json", "--count-only",
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert "words" not in payload
    assert payload["count"] == "8"


def test_enum_csv_formats(capsys):
    code, out, _ = run_cli(
        capsys, "enum", "--word", "aa", "--dist", "1", "--sigma", "2",
        "--format", "csv",
    )
    assert code == EXIT_OK
    assert out.splitlines()[0] == "word"
    assert len(out.splitlines()) == 9
    code, out, _ = run_cli(
        capsys, "enum", "--word", "aa", "--dist", "1", "--sigma", "2",
        "--format", "csv", "--count-only",
    )
    assert out == "count\n8\n"


def test_enum_oracle_route_matches_the_enumerator(capsys):
    args = ["enum", "--word", "aba", "--dist", "2", "--sigma", "2",
            "--kind", "condensed"]
    _, direct, _ = run_cli(capsys, *args)
    _, oracle, _ = run_cli(capsys, *args, "--oracle")
    assert direct == oracle


def test_enum_oracle_budget_refusal(capsys):
    code, _, err = run_cli(
        capsys, "enum", "--word", "aaaa", "--dist", "2", "--sigma", "2",
        "--oracle", "--budget", "10",
    )
    assert code == EXIT_USAGE
    assert "budget" in err


def test_enum_writes_lf_files(tmp_path, capsys):
    target = tmp_path / "members.csv"
    code, out, _ = run_cli(
        capsys, "enum", "--word", "aa", "--dist", "1", "--sigma", "2",
        "--format", "csv", "--output", str(target),
    )
    assert code == EXIT_OK
    assert out == ""
    raw = target.read_bytes()
    assert raw == b"word\na\naa\naaa\naab\nab\naba\nba\nbaa\n"
    assert b"\r" not in raw


def test_formula_values(capsys):
    code, out, _ = run_cli(
        capsys, "formula", "unary-cn", "--length", "6", "--dist", "2", "--sigma", "2"
    )
    assert (code, out) == (EXIT_OK, "15\n")
    code, out, _ = run_cli(
        capsys, "formula", "unary-scn", "--length", "6", "--dist", "2", "--sigma", "2"
    )
    assert (code, out) == (EXIT_OK, "10\n")


def test_formula_range_errors_exit_one(capsys):
    code, _, err = run_cli(
        capsys, "formula", "unary-cn", "--length", "3", "--dist", "4", "--sigma", "2"
    )
    assert code == EXIT_USAGE
    assert err.startswith("nbhood: error:")


def test_bound_values(capsys):
    code, out, _ = run_cli(
        capsys, "bound", "f", "--length", "4", "--dist", "1", "--sigma", "2"
    )
    assert (code, out) == (EXIT_OK, "11\n")
    code, out, _ = run_cli(
        capsys, "bound", "conjecture", "--length", "8", "--dist", "5", "--sigma", "2",
        "--exact-rational",
    )
    assert (code, out) == (EXIT_OK, "66355 (exact 331776/5)\n")


def test_bound_f_is_undefined_at_equal_length_and_distance(capsys):
    code, _, err = run_cli(
        capsys, "bound", "f", "--length", "4", "--dist", "4", "--sigma", "2"
    )
    assert code == EXIT_USAGE
    assert err.startswith("nbhood: error:")


def test_table_csv_output(capsys):
    code, out, _ = run_cli(capsys, "table1")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "panel,w,d,value"
    assert len(lines) == 49
    assert "a,4,1,11" in lines
    assert "b,10,9,54241071" in lines
    assert "a,6,5,2989" in lines


def test_table_text_output(capsys):
    code, out, _ = run_cli(capsys, "table1", "--format", "text")
    assert code == EXIT_OK
    assert out.startswith("panel (a):")
    assert "w= 4: 11 48 111" in out


def test_verify_small_scope_passes(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--max-length", "3", "--max-dist", "1", "--sigma", "2"
    )
    assert code == EXIT_OK
    lines = out.splitlines()
    assert len(lines) == 10
    assert lines[-1].startswith("total:")
    assert all(line.endswith("ok") for line in lines[:9])


def test_verify_reports_failures_with_exit_two(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--max-length", "2", "--max-dist", "1", "--sigma", "2",
        "--budget", "4",
    )
    assert code == EXIT_VERIFY
    assert "FAIL" in out
    assert "oracle refused" in out


def test_extremal_exhaustive_report(capsys):
    code, out, _ = run_cli(
        capsys, "extremal", "--length", "4", "--dist", "1", "--sigma", "2"
    )
    assert code == EXIT_OK
    assert "minimum 4: 'aaaa', 'bbbb'" in out
    assert "maximum 7:" in out
    assert "all 16 words" in out


def test_extremal_sampled_is_deterministic(capsys):
    args = ["extremal", "--length", "5", "--dist", "1", "--sigma", "2",
            "--mode", "sampled", "--samples", "10", "--seed", "3"]
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second
    assert "seed 3" in first


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "nbhood", "dist", "ab", "ba"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == EXIT_OK
    assert proc.stdout == "2\n"
