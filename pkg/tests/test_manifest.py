"""Tests for run-manifest parsing and validation."""

import sys
from pathlib import Path

import numpy as np
import pytest

from src.core.enums import InfluenceKind
from src.core.errors import ManifestError
from src.manifest import parse_manifest, parse_manifest_text

MANIFEST_DIR = Path(__file__).resolve().parent.parent / "manifests"

ECHO_CHILD = """import sys
for line in sys.stdin:
    x = [float(t) for t in line.split()]
    print(x[0], -x[0], flush=True)
"""


def field_of(text: str) -> str:
    with pytest.raises(ManifestError) as info:
        parse_manifest_text(text)
    return info.value.field


class TestParsing:
    def test_defaults(self):
        """Test a one-line manifest gets default solver parameters."""
        manifest = parse_manifest_text("problem.name = dtlz2\n")

        assert manifest.problem.name == "dtlz2"
        assert manifest.solver.delta0 == 1.0
        assert manifest.solver.eval_budget == 1000
        assert manifest.metrics.gd and manifest.metrics.hv
        assert manifest.output.dir is None

    def test_values_and_comments(self):
        """Test lists, enums, booleans and trailing comments."""
        manifest = parse_manifest_text(
            """
            # a comment line
            problem.name = dtlz2
            solver.x0 = 0.5, 0.25, 0.75   # start
            solver.influence = sharing
            solver.sharing_alpha = 2
            solver.normalize_objectives = true
            metrics.hv_ref = 2, 2, 2
            output.dir = runs/here
            """
        )

        assert manifest.solver.x0 == [0.5, 0.25, 0.75]
        assert manifest.solver.influence is InfluenceKind.SHARING
        assert manifest.solver.sharing_alpha == 2
        assert manifest.solver.normalize_objectives
        assert manifest.metrics.hv_ref == [2.0, 2.0, 2.0]
        assert manifest.output.dir == "runs/here"

    @pytest.mark.parametrize("path", sorted(MANIFEST_DIR.glob("*.txt")), ids=lambda p: p.stem)
    def test_shipped_manifests(self, path):
        """Test every bundled manifest is valid."""
        manifest = parse_manifest(path)
        problem, release = manifest.build_problem()
        release()
        assert problem.n == len(manifest.solver.x0)


class TestRejections:
    def test_parameter_ordering(self):
        """Test eta2 < eta1 is reported on eta2."""
        assert field_of("problem.name = dtlz2\nsolver.eta1 = 0.8\nsolver.eta2 = 0.6\n") == "solver.eta2"

    def test_unknown_solver_key(self):
        """Test a misspelt parameter is named."""
        assert field_of("problem.name = dtlz2\nsolver.gama0 = 0.5\n") == "solver.gama0"

    def test_unknown_section(self):
        """Test keys outside the four sections are refused."""
        assert field_of("problem.name = dtlz2\nplot.colour = red\n") == "plot.colour"

    def test_duplicate_key(self):
        """Test a key given twice is refused."""
        assert field_of("problem.name = dtlz2\nproblem.name = comet\n") == "problem.name"

    def test_malformed_line(self):
        """Test a line without '=' is named by its number."""
        assert field_of("problem.name = dtlz2\nsolver.x0\n") == "line 2"

    def test_bad_number_list(self):
        """Test a non-numeric list entry is refused."""
        assert field_of("problem.name = dtlz2\nsolver.x0 = 0.5, a, 0.5\n") == "solver.x0"

    def test_unknown_problem(self):
        """Test an unregistered problem name is refused."""
        assert field_of("problem.name = zdt1\n") == "problem.name"

    def test_missing_problem(self):
        """Test a manifest must name a problem."""
        assert field_of("solver.delta0 = 0.5\n") == "problem"

    def test_budget_below_one_model(self):
        """Test a budget smaller than q is refused up front."""
        assert field_of("problem.name = dtlz2\nsolver.eval_budget = 9\n") == "solver.eval_budget"
        parse_manifest_text("problem.name = dtlz2\nsolver.eval_budget = 10\n")

    def test_x0_checked(self):
        """Test x0 length and box membership."""
        assert field_of("problem.name = dtlz2\nsolver.x0 = 0.5, 0.5\n") == "solver.x0"
        assert field_of("problem.name = dtlz2\nsolver.x0 = 0.5, 0.5, 1.5\n") == "solver.x0"

    def test_missing_front_file(self, tmp_path):
        """Test metrics.front must exist."""
        text = f"problem.name = dtlz2\nmetrics.front = {tmp_path / 'nope.csv'}\n"
        assert field_of(text) == "metrics.front"

    def test_external_needs_dimensions(self):
        """Test an external problem must declare n, p and its box."""
        assert field_of("problem.command = ./black_box\nproblem.n = 2\n") == "problem"

    def test_name_and_command_exclusive(self):
        """Test only one problem source may be given."""
        assert field_of("problem.name = dtlz2\nproblem.command = ./black_box\n") == "problem"

    def test_inverted_external_box(self):
        """Test external bounds must be ordered."""
        text = "problem.command = ./bb\nproblem.n = 1\nproblem.p = 2\nproblem.lower = 1\nproblem.upper = 0\n"
        assert field_of(text) == "problem.upper"


class TestRunManifest:
    def test_relative_front_resolved(self, tmp_path):
        """Test metrics.front is read relative to the manifest file."""
        (tmp_path / "front.csv").write_text("f_1,f_2,f_3\n1,0,0\n0,1,0\n", encoding="utf-8")
        path = tmp_path / "run.txt"
        path.write_text("problem.name = dtlz2\nmetrics.front = front.csv\n", encoding="utf-8")
        manifest = parse_manifest(path)
        problem, _ = manifest.build_problem()

        assert Path(manifest.metrics.front) == tmp_path / "front.csv"
        assert len(manifest.front_sample(problem)) == 2

    def test_front_defaults_to_problem(self):
        """Test GD uses the problem's front when none is given, and nothing when GD is off."""
        manifest = parse_manifest_text("problem.name = fonseca\n")
        problem, _ = manifest.build_problem()
        assert len(manifest.front_sample(problem)) >= 1000

        literal = parse_manifest_text("problem.name = fonseca\nproblem.literal = true\n")
        problem, _ = literal.build_problem()
        assert problem.name == "fonseca-literal"
        assert literal.front_sample(problem) is None

    def test_solver_config_folds_metrics(self):
        """Test the metric toggles, reference and seed reach the solver parameters."""
        manifest = parse_manifest_text(
            "problem.name = dtlz2\nsolver.seed = 4\nmetrics.gd = false\nmetrics.hv_ref = 3, 3, 3\n"
        )
        config = manifest.solver_config()
        assert not config.track_gd
        assert config.hv_reference == [3.0, 3.0, 3.0]
        assert config.seed == 4
        assert manifest.solver_config(seed=9).seed == 9
        assert manifest.solver.seed == 4

    def test_external_problem(self, tmp_path):
        """Test an external command becomes a problem evaluated by the child."""
        script = tmp_path / "child.py"
        script.write_text(ECHO_CHILD, encoding="utf-8")
        manifest = parse_manifest_text(
            f"problem.command = {sys.executable} {script}\nproblem.n = 1\nproblem.p = 2\n"
            "problem.lower = -1\nproblem.upper = 1\n"
        )
        problem, release = manifest.build_problem()
        try:
            assert np.array_equal(problem.evaluate(np.array([0.5])), [0.5, -0.5])
        finally:
            release()
