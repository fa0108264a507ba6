import json
import subprocess
import sys

import pytest

from blc.cli import main
from blc.terms import decode, max_free_index, size
from blc.typecheck import is_typable


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_closed(capsys):
    code, out, err = run_cli(capsys, "count", "--size", "19", "--free", "0")
    assert code == 0
    assert out == "431\n"


def test_count_unbounded(capsys):
    code, out, _ = run_cli(capsys, "count", "--size", "16", "--all")
    assert code == 0
    assert out == "745\n"


def test_count_json_envelope(capsys):
    code, out, _ = run_cli(capsys, "count", "--size", "19", "--free", "0", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 431
    assert payload["n"] == 19
    assert payload["m"] == "0"
    assert payload["metadata"]["version"]


def test_count_rejects_negative_bound(capsys):
    code, _, err = run_cli(capsys, "count", "--size", "10", "--free", "-1")
    assert code == 2
    assert "error" in err


def test_size_guard(capsys):
    code, _, err = run_cli(capsys, "count", "--size", "2500", "--free", "0")
    assert code == 2
    assert "--max-n" in err


def test_table_csv(capsys):
    code, out, _ = run_cli(capsys, "table", "--max-n", "19", "--m", "0,inf")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,m,count"
    assert len(lines) == 1 + 2 * 20
    assert "19,0,431" in lines
    assert "16,inf,745" in lines


def test_table_bad_bound_list(capsys):
    code, _, err = run_cli(capsys, "table", "--max-n", "10", "--m", "0,spam")
    assert code == 2
    assert "spam" in err


def test_unrank_binary(capsys):
    code, out, _ = run_cli(capsys, "unrank", "--size", "4", "--free", "0", "--index", "1")
    assert code == 0
    assert out == "0010\n"


def test_unrank_text(capsys):
    code, out, _ = run_cli(
        capsys, "unrank", "--size", "10", "--free", "0", "--index", "3", "--term-format", "text"
    )
    assert code == 0
    assert out == "\\\\(1 1)\n"


def test_unrank_out_of_range(capsys):
    code, _, err = run_cli(capsys, "unrank", "--size", "4", "--free", "0", "--index", "2")
    assert code == 3
    assert "1..1" in err


def test_unrank_empty_class(capsys):
    code, _, err = run_cli(capsys, "unrank", "--size", "5", "--free", "0", "--index", "1")
    assert code == 3
    assert "no terms" in err


def test_rank_round_trip(capsys):
    code, out, _ = run_cli(capsys, "unrank", "--size", "19", "--free", "0", "--index", "257")
    bits = out.strip()
    code, out, _ = run_cli(capsys, "rank", "--term", bits, "--free", "0")
    assert code == 0
    assert out == "257\n"


def test_rank_accepts_text_input(capsys):
    code, out, _ = run_cli(capsys, "rank", "--text", "\\1", "--free", "0")
    assert code == 0
    assert out == "1\n"


def test_rank_free_index_above_bound(capsys):
    code, _, err = run_cli(capsys, "rank", "--term", "110", "--free", "0")
    assert code == 3
    assert "free index" in err


def test_rank_malformed_term(capsys):
    code, _, err = run_cli(capsys, "rank", "--term", "10x01", "--free", "0")
    assert code == 2
    assert "bad term input" in err


def test_sample_is_reproducible(capsys):
    args = ("sample", "--size", "25", "--free", "0", "--count", "4", "--seed", "42")
    code_a, out_a, err_a = run_cli(capsys, *args)
    code_b, out_b, _ = run_cli(capsys, *args)
    assert code_a == code_b == 0
    assert out_a == out_b
    assert len(out_a.strip().splitlines()) == 4
    assert "generator=mt19937" in err_a
    assert "seed=42" in err_a


def test_sample_json_metadata(capsys):
    code, out, _ = run_cli(
        capsys,
        "sample", "--size", "20", "--all", "--count", "3", "--seed", "7",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["metadata"]["generator"] == "mt19937"
    assert payload["metadata"]["seed"] == 7
    assert len(payload["terms"]) == 3
    for bits in payload["terms"]:
        assert size(decode(bits)) == 20


def test_sample_typable_filter(capsys):
    code, out, _ = run_cli(
        capsys, "sample", "--size", "15", "--free", "0", "--count", "5", "--seed", "1", "--typable"
    )
    assert code == 0
    for bits in out.strip().splitlines():
        term = decode(bits)
        assert is_typable(term, max_free_index(term))


def test_sample_empty_class(capsys):
    code, _, err = run_cli(capsys, "sample", "--size", "5", "--free", "0")
    assert code == 3
    assert "no terms" in err


def test_typecheck_typable(capsys):
    code, out, _ = run_cli(capsys, "typecheck", "--term", "0010")
    assert code == 0
    assert out == "a -> a\n"


def test_typecheck_untypable(capsys):
    code, out, _ = run_cli(capsys, "typecheck", "--text", "\\(1 1)")
    assert code == 0
    assert out == "untypable\n"


def test_typecheck_json(capsys):
    code, out, _ = run_cli(capsys, "typecheck", "--term", "0000110", "--format", "json")
    payload = json.loads(out)
    assert code == 0
    assert payload["typable"] is True
    assert payload["type"] == "a -> b -> a"

    code, out, _ = run_cli(capsys, "typecheck", "--text", "\\(1 1)", "--format", "json")
    payload = json.loads(out)
    assert payload["typable"] is False
    assert payload["type"] is None


def test_typecheck_malformed(capsys):
    code, _, err = run_cli(capsys, "typecheck", "--term", "0010x")
    assert code == 2
    assert "bad term input" in err


def test_count_typable_closed(capsys):
    code, out, _ = run_cli(capsys, "count-typable", "--size", "10", "--closed")
    assert code == 0
    assert out == "5\n"


def test_count_typable_all(capsys):
    code, out, _ = run_cli(capsys, "count-typable", "--size", "10", "--all", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 22
    assert payload["closed"] is False


def test_asymptotics_json(capsys):
    code, out, _ = run_cli(capsys, "asymptotics")
    assert code == 0
    payload = json.loads(out)
    assert abs(payload["rho"] - 0.509308127) < 1e-9
    assert abs(payload["growth"] - 1.963447954) < 1e-9
    assert abs(payload["c"] - 1.021874073) < 1e-9
    assert len(payload["real_roots"]) == 4
    assert "-0.288265354" in payload["note"]


def test_asymptotics_validates_tolerance(capsys):
    code, _, err = run_cli(capsys, "asymptotics", "--tolerance", "0")
    assert code == 2


def test_convergence_csv(capsys):
    code, out, _ = run_cli(capsys, "convergence", "--max-n", "20", "--m", "0,inf")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "m,n,value"
    closed_rows = [ln for ln in lines[1:] if ln.startswith("0,")]
    unbounded_rows = [ln for ln in lines[1:] if ln.startswith("inf,")]
    assert len(closed_rows) == 16  # closed sizes with a nonzero count
    assert len(unbounded_rows) == 19
    assert closed_rows[0].startswith("0,4,")
    value = float(unbounded_rows[-1].split(",")[2])
    assert 0.9 < value < 1.1


def test_convergence_validates_max_n(capsys):
    code, _, err = run_cli(capsys, "convergence", "--max-n", "1")
    assert code == 2


def test_version_flag(capsys):
    code, out, _ = run_cli(capsys, "--version")
    assert code == 0
    assert out.startswith("blc ")


def test_missing_subcommand(capsys):
    code, _, _ = run_cli(capsys)
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "blc", "count", "--size", "19", "--free", "0"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "431\n"
