"""Command-line interface: parsing, output formats, exit codes, caching."""

import json

import pytest

from cycliccovers import cli


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 0, err
    return json.loads(out)


def test_count_basic(capsys):
    doc = run_json(["count", "--p", "3", "--ell", "2", "--n", "4"], capsys)
    assert doc["characters_count"] == 144
    assert doc["fields_count"] == 144  # ell - 1 = 1 character per field
    assert doc["series_coefficient"] == 144


def test_count_conditioned(capsys):
    doc = run_json(
        ["count", "--p", "3", "--ell", "2", "--n", "4", "--cond", "X:ram"], capsys
    )
    assert doc["conditioned_characters"] == 36
    assert doc["density"]["exact"] == "1/4"
    assert doc["density"]["float"] == 0.25


def test_count_extension_field_place(capsys):
    # over F_4 the coefficients of a place polynomial may involve t
    doc = run_json(
        [
            "count",
            "--p", "2", "--e", "2", "--ell", "3",
            "--n", "3",
            "--cond", "X+t:ram",
        ],
        capsys,
    )
    assert doc["conditioned_characters"] > 0


def test_count_output_is_deterministic(capsys):
    argv = ["count", "--p", "3", "--ell", "2", "--n", "4", "--cond", "inf:split"]
    _, out1, _ = run(argv, capsys)
    _, out2, _ = run(argv, capsys)
    assert out1 == out2


def test_count_cache_warm_equals_cold(tmp_path, capsys):
    argv = [
        "count", "--p", "3", "--ell", "2", "--n", "6",
        "--cache-dir", str(tmp_path),
    ]
    _, cold, _ = run(argv, capsys)
    assert list(tmp_path.iterdir())  # a cache file was written
    _, warm, _ = run(argv, capsys)
    assert warm == cold


def test_count_shard_independence(capsys):
    outs = []
    for shards in ("1", "2", "8"):
        doc = run_json(
            ["count", "--p", "2", "--e", "2", "--ell", "3", "--n", "3",
             "--shards", shards],
            capsys,
        )
        outs.append(doc)
    assert outs[0] == outs[1] == outs[2]


def test_distribution_json_and_csv(capsys):
    doc = run_json(["distribution", "--p", "3", "--ell", "2", "--genus", "2"], capsys)
    row = doc["rows"][0]
    assert row["genus"] == 2
    assert row["model_mean"]["exact"] == "4/1"
    assert row["empirical_mean"]["exact"] == "4/1"
    code, out, _ = run(
        ["distribution", "--p", "3", "--ell", "2", "--genus", "2",
         "--format", "csv"],
        capsys,
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "genus,m,empirical,model"
    assert len(lines) == 1 + 9  # header + m = 0..8


def test_series_check(capsys):
    doc = run_json(
        ["series-check", "--p", "3", "--ell", "2", "--truncation", "8",
         "--max-degree", "5"],
        capsys,
    )
    assert all(c["pass"] for c in doc["checks"])


def test_series_check_dump_roundtrip(tmp_path, capsys):
    dump = str(tmp_path / "series.txt")
    argv = ["series-check", "--p", "3", "--ell", "2", "--truncation", "6",
            "--max-degree", "4", "--dump", dump]
    code, _, _ = run(argv, capsys)
    assert code == 0
    # second invocation verifies against the existing dump
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert json.loads(out)["dump_match"]


def test_constants(capsys):
    doc = run_json(
        ["constants", "--p", "2", "--e", "2", "--ell", "3", "--max-degree", "8"],
        capsys,
    )
    assert 0 < doc["constant"]["float"] < 1


def test_oracle_crosscheck(capsys):
    doc = run_json(
        ["oracle-crosscheck", "--p", "3", "--ell", "2", "--n", "4",
         "--cond", "X:ram"],
        capsys,
    )
    assert doc["match"]


def test_verify_all_suites(capsys):
    for suite in sorted(cli.SUITES):
        code, out, err = run(
            ["verify", "--p", "3", "--ell", "2", "--suite", suite], capsys
        )
        assert code == 0, (suite, err)
        assert json.loads(out)["pass"], suite


def test_exit_code_usage_errors(capsys):
    cases = [
        ["verify", "--p", "3", "--suite", "no-such-suite"],
        ["count", "--p", "3", "--n", "4", "--cond", "X:ram", "--cond", "X:split"],
        ["count", "--p", "3", "--n", "4", "--cond", "X^2:ram"],  # reducible
        ["count", "--p", "3", "--n", "4", "--cond", "X:maybe"],
        ["count", "--p", "4", "--n", "4"],  # 4 is not prime
    ]
    for argv in cases:
        code, _, err = run(argv, capsys)
        assert code == 2, (argv, err)
        assert err


def test_exit_code_budget(capsys):
    code, _, err = run(["count", "--p", "3", "--ell", "2", "--n", "20"], capsys)
    assert code == 3
    assert "budget" in err
