"""Tests for the command-line front end."""

import json

import numpy as np
import pytest

from src.cli import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main
from src.core.archive import Archive

SMALL_DTLZ2 = """
problem.name = dtlz2
solver.x0 = 0.2, 0.7, 0.4
solver.expand_factor = 5
solver.eval_budget = {budget}
metrics.hv_ref = 5, 5, 5
"""


@pytest.fixture
def manifest_path(tmp_path):
    """Write a small DTLZ2 manifest and return its path."""
    def _write(budget: int = 60, name: str = "run.txt"):
        path = tmp_path / name
        path.write_text(SMALL_DTLZ2.format(budget=budget), encoding="utf-8")
        return path
    return _write


class TestSolve:
    def test_writes_run_files(self, tmp_path, manifest_path):
        """Test a solve produces the archive, log, density surface, metrics and front."""
        out = tmp_path / "out"
        assert main(["solve", "--manifest", str(manifest_path()), "--out", str(out)]) == EXIT_OK

        for name in ("archive.csv", "iterations.jsonl", "density_surface.csv", "metrics.json", "front_sample.csv"):
            assert (out / name).is_file()

        archive = Archive.from_csv(out / "archive.csv")
        metrics = json.loads((out / "metrics.json").read_text(encoding="utf-8"))
        assert len(archive) == metrics["archive_size"] >= 1
        assert metrics["termination"] == "BudgetExhausted"
        assert metrics["evals"] <= 60
        assert metrics["hv_reference"] == [5.0, 5.0, 5.0]
        assert (out / "density_surface.csv").read_text(encoding="utf-8").startswith("y_1,y_2,density\n")

        lines = (out / "iterations.jsonl").read_text(encoding="utf-8").splitlines()
        assert len(lines) == metrics["iterations"] >= 1
        for line in lines:
            assert set(json.loads(line)) >= {"k", "ref_index", "delta", "t_plus", "rho", "evals"}

    def test_deterministic_outputs(self, tmp_path, manifest_path):
        """Test two runs of the same manifest write byte-identical archives and iteration logs."""
        path = manifest_path(budget=80)
        main(["solve", "--manifest", str(path), "--out", str(tmp_path / "a")])
        main(["solve", "--manifest", str(path), "--out", str(tmp_path / "b")])

        for name in ("archive.csv", "iterations.jsonl"):
            first = (tmp_path / "a" / name).read_bytes()
            assert first
            assert first == (tmp_path / "b" / name).read_bytes()

    def test_metrics_recompute(self, tmp_path, manifest_path, capsys):
        """Test the metrics subcommand reproduces the run's GD and HV from its files."""
        out = tmp_path / "out"
        main(["solve", "--manifest", str(manifest_path()), "--out", str(out)])
        stored = json.loads((out / "metrics.json").read_text(encoding="utf-8"))
        capsys.readouterr()

        code = main([
            "metrics", "--front", str(out / "front_sample.csv"),
            "--produced", str(out / "archive.csv"), "--ref", "5,5,5",
        ])
        recomputed = json.loads(capsys.readouterr().out)

        assert code == EXIT_OK
        assert recomputed["gd"] == pytest.approx(stored["gd"])
        assert recomputed["hv"] == pytest.approx(stored["hv"])

    def test_metrics_recompute_with_run_reference(self, tmp_path, capsys):
        """Test metrics.json is reproduced from the files when the run picked its own HV reference."""
        path = tmp_path / "dtlz7.txt"
        path.write_text(
            "problem.name = dtlz7\nsolver.x0 = 0.5, 0.5, 0\nsolver.sigma = 0.1\nsolver.eval_budget = 300\n",
            encoding="utf-8",
        )
        out = tmp_path / "out"
        assert main(["solve", "--manifest", str(path), "--out", str(out)]) == EXIT_OK
        stored = json.loads((out / "metrics.json").read_text(encoding="utf-8"))
        capsys.readouterr()

        ref = ",".join(repr(v) for v in stored["hv_reference"])
        code = main([
            "metrics", "--front", str(out / "front_sample.csv"),
            "--produced", str(out / "archive.csv"), "--ref", ref,
        ])
        recomputed = json.loads(capsys.readouterr().out)

        assert code == EXIT_OK
        assert recomputed["gd"] == pytest.approx(stored["gd"])
        assert recomputed["hv"] == pytest.approx(stored["hv"])

    def test_replicates(self, tmp_path, manifest_path):
        """Test replicate runs get their own directories."""
        out = tmp_path / "reps"
        code = main([
            "solve", "--manifest", str(manifest_path(budget=30)), "--out", str(out),
            "--replicates", "2", "--workers", "1",
        ])

        assert code == EXIT_OK
        assert (out / "rep_000" / "archive.csv").is_file()
        assert (out / "rep_001" / "archive.csv").is_file()

    def test_invalid_manifest_exit_code(self, tmp_path, capsys):
        """Test a manifest error exits with 2 and names the key."""
        path = tmp_path / "bad.txt"
        path.write_text("problem.name = dtlz2\nsolver.eta1 = 0.9\nsolver.eta2 = 0.1\n", encoding="utf-8")

        assert main(["solve", "--manifest", str(path), "--out", str(tmp_path / "out")]) == EXIT_USAGE
        assert "solver.eta2" in capsys.readouterr().err

    def test_missing_manifest(self, tmp_path):
        """Test an unreadable manifest is a usage error."""
        assert main(["solve", "--manifest", str(tmp_path / "none.txt")]) == EXIT_USAGE


class TestMetricsCommand:
    def test_points_beyond_reference_dropped(self, tmp_path, capsys):
        """Test a produced point beyond --ref is left out of HV with a warning, as in a solve."""
        (tmp_path / "front.csv").write_text("f_1,f_2\n0,1\n1,0\n", encoding="utf-8")
        (tmp_path / "produced.csv").write_text("f_1,f_2\n0.5,0.5\n2,2\n", encoding="utf-8")
        code = main([
            "metrics", "--front", str(tmp_path / "front.csv"),
            "--produced", str(tmp_path / "produced.csv"), "--ref", "1.5,1.5",
        ])
        captured = capsys.readouterr()

        assert code == EXIT_OK
        assert json.loads(captured.out)["hv"] == pytest.approx(1.0)
        assert "ignored" in captured.err

    def test_reference_length_checked(self, tmp_path, capsys):
        """Test a --ref of the wrong length fails with exit code 1."""
        (tmp_path / "front.csv").write_text("f_1,f_2\n0,1\n1,0\n", encoding="utf-8")
        code = main([
            "metrics", "--front", str(tmp_path / "front.csv"),
            "--produced", str(tmp_path / "front.csv"), "--ref", "2,2,2",
        ])

        assert code == EXIT_FAILURE
        assert "--ref" in capsys.readouterr().err

    def test_negative_reference(self, tmp_path, capsys):
        """Test a reference starting with a minus sign is read as the option's value."""
        (tmp_path / "front.csv").write_text("f_1,f_2\n-2,-1\n-1,-2\n", encoding="utf-8")
        code = main([
            "metrics", "--front", str(tmp_path / "front.csv"),
            "--produced", str(tmp_path / "front.csv"), "--ref", "-0.5,-0.5",
        ])

        assert code == EXIT_OK
        assert json.loads(capsys.readouterr().out)["hv"] == pytest.approx(1.25)

    def test_default_reference(self, tmp_path, capsys):
        """Test hypervolume without --ref uses the produced points' own reference."""
        (tmp_path / "front.csv").write_text("f_1,f_2\n0,1\n1,0\n", encoding="utf-8")
        (tmp_path / "produced.csv").write_text("f_1,f_2\n0,1\n1,0\n", encoding="utf-8")
        main(["metrics", "--front", str(tmp_path / "front.csv"), "--produced", str(tmp_path / "produced.csv")])
        result = json.loads(capsys.readouterr().out)

        assert result["gd"] == 0.0
        assert result["hv"] == pytest.approx(1.1 * 1.1 - 1.0)


class TestProblemsAndEvaluate:
    def test_problem_listing(self, capsys):
        """Test every built-in problem is printed."""
        assert main(["problems", "list"]) == EXIT_OK
        out = capsys.readouterr().out
        for name in ("fonseca", "fonseca-literal", "dtlz2", "comet", "dtlz7"):
            assert name in out

    def test_evaluate(self, capsys):
        """Test DTLZ2 at (0, 0, 0.5)."""
        assert main(["evaluate", "--problem", "dtlz2", "--x", "0,0,0.5"]) == EXIT_OK
        assert np.allclose(json.loads(capsys.readouterr().out), [1.0, 0.0, 0.0])

    def test_evaluate_negative_coordinates(self, capsys):
        """Test --x accepts a vector starting with a minus sign."""
        assert main(["evaluate", "--problem", "fonseca", "--x", "-0.5,-0.5,-0.5,-0.5"]) == EXIT_OK
        f1, f2 = json.loads(capsys.readouterr().out)
        assert f1 == pytest.approx(1.0 - np.exp(-4.0))
        assert f2 == 0.0

    def test_evaluate_literal(self, capsys):
        """Test the literal flag selects the diagonal pair."""
        main(["evaluate", "--problem", "fonseca", "--x", "0,0,0,0", "--literal"])
        f1, f2 = json.loads(capsys.readouterr().out)
        assert f1 == f2

    def test_unknown_problem(self):
        """Test an unknown problem is a usage error."""
        assert main(["evaluate", "--problem", "zdt1", "--x", "0"]) == EXIT_USAGE

    def test_outside_box(self, capsys):
        """Test a point outside the box fails with exit code 1."""
        assert main(["evaluate", "--problem", "dtlz2", "--x", "2,0,0"]) == EXIT_FAILURE
        assert "outside the box" in capsys.readouterr().err

    def test_missing_subcommand(self):
        """Test argparse rejects a call without a subcommand."""
        with pytest.raises(SystemExit) as info:
            main([])
        assert info.value.code == 2
