import io
import subprocess
import sys

import pytest

from church_compact.cli import EXIT_FAIL, EXIT_FUEL, EXIT_OK, EXIT_USAGE, main
from church_compact.numerals import church
from church_compact.reduce import normalize
from church_compact.term import parse


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_exit_code_values():
    assert (EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_FUEL) == (0, 1, 2, 3)


class TestCompact:
    def test_default_is_recursive(self):
        code, text = run("compact", "201")
        assert code == 0
        term_line, size_line = text.splitlines()
        assert size_line == "size 48 (plain 405)"
        assert normalize(parse(term_line)).term == church(201)

    def test_forced_phi(self):
        code, text = run("compact", "201", "--phi", "2", "--explain")
        assert code == 0
        lines = text.splitlines()
        assert lines[0] == "(λ.λ.λ.(2 2 2 (λ.λ.(λ.(5 5 (5 2) (5 5 2 0)) 0) 1) (2 2 (2 1) (1 0))) λ.λ.(1 (1 0)))"
        assert lines[1] == "size 51"
        assert "expr=²2³·(²2²·2+²2²)+²2²·2" in lines[2]
        assert lines[3] == "function part size 43"

    def test_sugar(self):
        _, text = run("compact", "201", "--phi", "2", "--sugar")
        assert text.splitlines()[0].endswith(" C2)")

    def test_no_recursive(self):
        code, text = run("compact", "9", "--no-recursive", "--explain")
        assert code == 0 and "size 20" in text and "phi*=3" in text

    def test_explain_chain(self):
        _, text = run("compact", "10000", "--explain")
        assert "innermost argument C(" in text and "phi*=" in text

    def test_bad_phi(self):
        assert run("compact", "10", "--phi", "11")[0] == EXIT_USAGE

    def test_argparse_usage_error(self):
        with pytest.raises(SystemExit) as info:
            main(["compact", "zero"])
        assert info.value.code == EXIT_USAGE
        with pytest.raises(SystemExit) as info:
            main(["compact", "0"])
        assert info.value.code == EXIT_USAGE


class TestVerify:
    def test_pass(self):
        code, text = run("verify", "300", "--stats")
        assert code == 0 and "PASS n=300" in text and text.startswith("size ")

    def test_fuel_exhausted(self):
        code, text = run("verify", "300", "--fuel", "3")
        assert code == EXIT_FUEL and "FUEL EXHAUSTED" in text


class TestBench:
    def test_writes_csv(self, tmp_path):
        out = tmp_path / "b.csv"
        fig = tmp_path / "f.csv"
        code, text = run("bench", "--from", "1", "--to", "40", "--out", str(out), "--seed", "0x10", "--fig2-out", str(fig))
        assert code == 0
        data = out.read_bytes()
        assert data.startswith(b"n,plain,binary,rtp_min,rtp_rec,ratio_rtp_binary\n")
        assert data.count(b"\n") == 41 and b"\r" not in data
        assert fig.read_text().splitlines()[0] == "n,cumulative_ratio"
        assert "published: 5187" in text and "published: 0.9962" in text

    def test_alt_flag(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        run("bench", "--from", "1", "--to", "30", "--out", str(a), "--fig2-out", str(a) + ".fig")
        run("bench", "--from", "1", "--to", "30", "--out", str(b), "--alt-fig2", "--fig2-out", str(b) + ".fig")
        assert a.read_bytes() == b.read_bytes()
        assert (tmp_path / "a.csv.fig").read_text() != (tmp_path / "b.csv.fig").read_text()

    def test_reversed_range(self, tmp_path):
        assert run("bench", "--from", "9", "--to", "3", "--out", str(tmp_path / "x"))[0] == EXIT_USAGE


def test_table1():
    code, text = run("table1")
    assert code == 0
    assert [line.split() for line in text.splitlines()[2:]] == [
        ["9", "21", "20"],
        ["10", "23", "22"],
        ["11", "25", "24"],
        ["12", "27", "24"],
        ["13", "29", "26"],
        ["14", "31", "28"],
        ["15", "33", "28"],
    ]


class TestDemo:
    def test_pass(self):
        code, text = run("demo", "--pattern", "abc", "--count", "4")
        assert code == 0
        assert text.splitlines() == [
            "(C4 (a b c) $)",
            "-> (a b c (a b c (a b c (a b c $))))",
            "PASS 'abc' x 4",
        ]

    def test_fuel(self):
        code, _ = run("demo", "--pattern", "ab", "--count", "50", "--fuel", "2")
        assert code == EXIT_FUEL

    def test_bad_pattern(self):
        assert run("demo", "--pattern", "a(", "--count", "2")[0] == EXIT_USAGE


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "church_compact", "table1"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and "15" in proc.stdout
