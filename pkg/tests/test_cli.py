"""Command-line surface: subcommands, exit codes, formats, determinism."""

import subprocess
import sys

import pytest

from twograph.cli import main, parse_pair_spec
from twograph.endo import canonical_pair, gallery
from twograph.semigroup import theta_text


def run_cli(*argv):
    return main(list(argv))


def capture(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestComputeCommands:
    def test_nf(self, capsys):
        code, out = capture(capsys, "nf", "f1.e2", "--theta", "flip", "--m", "2", "--n", "2")
        assert code == 0 and "e1.f2" in out

    def test_mul(self, capsys):
        code, out = capture(capsys, "mul", "S[id;f1]", "S[e1;id]",
                            "--theta", "flip", "--m", "2", "--n", "2")
        assert code == 0
        assert "S[e1;f1] + S[e2;f2]" in out

    def test_omega(self, capsys):
        code, out = capture(capsys, "omega", "S[e1.f1;e1.f1]", "--m", "2", "--n", "3")
        assert code == 0 and "1/6" in out

    def test_inner(self, capsys):
        code, out = capture(capsys, "inner", "S[e1;id]", "S[e1;id]", "--m", "2", "--n", "3")
        assert code == 0 and out.strip().endswith("1")

    def test_spectrum(self, capsys):
        code, out = capture(capsys, "spectrum", "1", "--m", "2", "--n", "3")
        assert code == 0
        assert out.count("value") == 9

    def test_gram(self, capsys):
        code, out = capture(capsys, "gram", "1", "--m", "2", "--n", "2")
        assert code == 0
        assert "size: 16" in out

    def test_backend(self, capsys):
        code, out = capture(capsys, "backend")
        assert code == 0 and ("pure" in out or "cython" in out)


class TestBooleanCommands:
    def test_twisted_pass(self, capsys):
        code, out = capture(capsys, "twisted", "I", "I", "--m", "2", "--n", "3")
        assert code == 0 and "true" in out

    def test_twisted_fail_prints_residual(self, capsys):
        code, out = capture(
            capsys, "twisted", "S[e1;e2]+S[e2;e1]", "I",
            "--theta", "flip", "--m", "2", "--n", "2",
        )
        assert code == 1 and "residual" in out

    def test_kms(self, capsys):
        code, out = capture(capsys, "kms", "S[e1;id]", "S[id;e1]", "--m", "2", "--n", "2")
        assert code == 0 and "equal: true" in out

    def test_oracle(self, capsys):
        code, out = capture(capsys, "oracle", "S[e1;e1]+S[e2;e2]", "I",
                            "--m", "2", "--n", "2")
        assert code == 0 and "true" in out

    def test_oracle_unequal(self, capsys):
        code, out = capture(capsys, "oracle", "S[e1;id]", "S[e2;id]",
                            "--m", "2", "--n", "2")
        assert code == 1


class TestEndoCommand:
    def test_gallery_apply(self, capsys):
        code, out = capture(capsys, "endo", "apply", "ex312", "S[e1;id]",
                            "--theta", "flip", "--m", "2", "--n", "2")
        assert code == 0 and "S[f1;id]" in out

    def test_canonical_apply(self, capsys):
        code, out = capture(capsys, "endo", "apply", "canonical(0,0)", "S[e1;f1]",
                            "--m", "2", "--n", "3")
        assert code == 0 and "S[e1;f1]" in out

    def test_inner_apply(self, capsys):
        code, out = capture(capsys, "endo", "apply", "inner(S[e1;e2]+S[e2;e1])",
                            "S[e1;id]", "--m", "2", "--n", "2")
        assert code == 0 and "S[e2" in out

    def test_pair_spec_parsing(self, flip22):
        assert parse_pair_spec("ex312", flip22).equals(gallery(flip22, "ex312"))
        assert parse_pair_spec("canonical(1,1)", flip22).equals(canonical_pair(flip22, 1, 1))
        pair = parse_pair_spec("pair(I,I)", flip22)
        assert pair.U == pair.V


class TestCheckCommand:
    def test_kms_suite_passes(self, capsys):
        code, out = capture(capsys, "check", "kms", "--m", "2", "--n", "3",
                            "--theta", "identity", "--seed", "7",
                            "--samples", "5", "--level", "1,1")
        assert code == 0
        assert "result: PASS" in out

    def test_records_format_is_tabbed(self, capsys):
        code, out = capture(capsys, "check", "kms", "--m", "2", "--n", "2",
                            "--seed", "3", "--samples", "3", "--level", "1,1",
                            "--format", "records")
        assert code == 0
        lines = [ln for ln in out.splitlines() if ln]
        assert all("\t" in ln for ln in lines)
        assert lines[-1] == "result\tPASS"

    def test_determinism(self, capsys):
        args = ("check", "semigroup", "--m", "2", "--n", "3", "--seed", "11",
                "--samples", "4", "--level", "1,1", "--format", "records")
        _, out1 = capture(capsys, *args)
        _, out2 = capture(capsys, *args)
        assert out1 == out2


class TestConfigErrors:
    def test_level_cap(self, capsys):
        code = run_cli("nf", "e1", "--level", "4,4")
        assert code == 2

    def test_bad_samples(self, capsys):
        code = run_cli("nf", "e1", "--samples", "0")
        assert code == 2

    def test_syntax_error_exit(self, capsys):
        code = run_cli("omega", "S[e1;]", "--m", "2", "--n", "2")
        assert code == 2

    def test_unknown_suite_is_usage_error(self):
        with pytest.raises(SystemExit) as info:
            run_cli("check", "everything")
        assert info.value.code == 2

    def test_missing_theta_file(self):
        code = run_cli("nf", "e1", "--theta", "/nonexistent/path.theta")
        assert code == 2


class TestThetaFile:
    def test_theta_from_file(self, tmp_path, capsys, flip22):
        path = tmp_path / "flip.theta"
        path.write_text(theta_text(flip22))
        code, out = capture(capsys, "nf", "f1.e2", "--theta", str(path))
        assert code == 0 and "e1.f2" in out

    def test_builtin_line_format(self, tmp_path, capsys):
        path = tmp_path / "t.theta"
        path.write_text("m 2\nn 3\nbuiltin identity\n")
        code, out = capture(capsys, "nf", "f2.e1", "--theta", str(path))
        assert code == 0 and "e1.f2" in out


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "twograph.cli", "backend"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "kernel" in proc.stdout
