"""Tests for the trust-region subproblem, the criticality measure and the scalarization."""

import numpy as np
import pytest

from src.core.errors import DimensionError, EmptySetError
from src.subsolvers import TrustRegion, min_quadratic_on_ball, omega, pascoletti_serafini, solve_ball_subproblem
from src.surrogate import ModelVector, QuadraticModel


def linear_model(slope: float, center: float = 0.0) -> QuadraticModel:
    return QuadraticModel(center=np.array([center]), c=0.0, g=np.array([slope]), H=np.zeros((1, 1)))


def unit_directions(count: int = 10_000) -> np.ndarray:
    theta = np.linspace(0.0, 2.0 * np.pi, count, endpoint=False)
    return np.column_stack([np.cos(theta), np.sin(theta)])


def disk_grid(radius: float, steps: int = 401) -> np.ndarray:
    axis = np.linspace(-radius, radius, steps)
    U, V = np.meshgrid(axis, axis)
    pts = np.column_stack([U.ravel(), V.ravel()])
    return pts[np.linalg.norm(pts, axis=1) <= radius]


class TestBallSubproblem:
    def test_convex_interior_minimum(self):
        """Test |s|^2 is minimised at the centre."""
        m = QuadraticModel(center=np.zeros(2), c=1.0, g=np.zeros(2), H=2.0 * np.eye(2))
        x_star, value = min_quadratic_on_ball(m, TrustRegion.around(np.zeros(2), 1.0))

        assert np.allclose(x_star, 0.0)
        assert value == pytest.approx(1.0)

    def test_linear_model(self):
        """Test a pure linear model goes to the boundary against the gradient."""
        m = QuadraticModel(center=np.zeros(2), c=0.0, g=np.array([1.0, 0.0]), H=np.zeros((2, 2)))
        x_star, value = min_quadratic_on_ball(m, TrustRegion.around(np.zeros(2), 0.5))

        assert np.allclose(x_star, [-0.5, 0.0], atol=1e-9)
        assert value == pytest.approx(-0.5)

    def test_indefinite_hard_case(self):
        """Test H = diag(2, -2) with g = 0 reaches decrease 1 at +-e2."""
        m = QuadraticModel(center=np.zeros(2), c=0.0, g=np.zeros(2), H=np.diag([2.0, -2.0]))
        x_star, value = min_quadratic_on_ball(m, TrustRegion.around(np.zeros(2), 1.0))

        assert value == pytest.approx(-1.0)
        assert abs(x_star[1]) == pytest.approx(1.0)
        assert x_star[0] == pytest.approx(0.0, abs=1e-9)

    def test_against_grid_oracle(self, rng: np.random.Generator):
        """Test the exact solution is never beaten by a dense grid over the disk."""
        grid = disk_grid(1.0)
        for _ in range(30):
            A = rng.normal(size=(2, 2))
            g, H = rng.normal(size=2), A + A.T
            d = solve_ball_subproblem(g, H, 1.0)
            values = grid @ g + 0.5 * np.einsum("ij,jk,ik->i", grid, H, grid)

            assert np.linalg.norm(d) <= 1.0 + 1e-9
            assert g @ d + 0.5 * d @ H @ d <= values.min() + 1e-8

    def test_box_polish(self):
        """Test a ball minimiser outside the box is replaced by the box-feasible one."""
        m = QuadraticModel(center=np.zeros(2), c=0.0, g=np.array([1.0, -1.0]), H=np.zeros((2, 2)))
        region = TrustRegion.around(np.zeros(2), 0.5, (np.zeros(2), np.ones(2)))
        x_star, value = min_quadratic_on_ball(m, region)

        assert region.contains(x_star)
        assert np.allclose(x_star, [0.0, 0.5], atol=1e-6)
        assert value == pytest.approx(-0.5, abs=1e-6)

    def test_never_worse_than_centre(self, rng: np.random.Generator):
        """Test value <= m(center) for random models in a box."""
        box = (np.zeros(3), np.ones(3))
        for _ in range(20):
            A = rng.normal(size=(3, 3))
            center = rng.random(3)
            m = QuadraticModel(center=center, c=0.0, g=rng.normal(size=3), H=A + A.T)
            region = TrustRegion.around(center, 0.3, box)
            x_star, value = min_quadratic_on_ball(m, region)

            assert region.contains(x_star)
            assert value <= m.value(center) + 1e-12


class TestOmega:
    def test_single_gradient(self):
        """Test p=1 reduces to the gradient norm."""
        result = omega([np.array([3.0, 4.0])])

        assert result.omega == pytest.approx(5.0)
        assert np.allclose(result.d_omega, [-0.6, -0.8])

    def test_opposing_gradients_are_critical(self):
        """Test g1 = -g2 gives omega 0 and a zero direction."""
        result = omega([np.array([1.0, 0.0]), np.array([-1.0, 0.0])])

        assert result.omega == pytest.approx(0.0, abs=1e-10)
        assert np.array_equal(result.d_omega, np.zeros(2))

    def test_orthogonal_gradients(self):
        """Test g1 = e1, g2 = e2 gives 1/sqrt(2) at equal weights."""
        result = omega([np.array([1.0, 0.0]), np.array([0.0, 1.0])])

        assert result.omega == pytest.approx(1.0 / np.sqrt(2.0), abs=1e-8)
        assert np.allclose(result.alpha, [0.5, 0.5], atol=1e-6)

    def test_matches_direction_oracle(self, rng: np.random.Generator):
        """Test omega against max_i g_i.d minimised over 10^4 unit directions."""
        directions = unit_directions()
        for _ in range(50):
            G = rng.normal(size=(int(rng.integers(1, 5)), 2))
            oracle = max(0.0, -float(np.min(np.max(directions @ G.T, axis=1))))
            assert omega(G).omega == pytest.approx(oracle, abs=2e-2)

    def test_bounded_by_any_convex_combination(self, rng: np.random.Generator):
        """Test omega <= |sum alpha_i g_i| for random simplex weights."""
        for _ in range(30):
            G = rng.normal(size=(3, 4))
            value = omega(G).omega
            for alpha in rng.dirichlet(np.ones(3), size=20):
                assert value <= np.linalg.norm(alpha @ G) + 1e-9

    def test_direction_is_common_descent(self):
        """Test every g_i . d_omega <= -omega when omega > 0."""
        G = np.array([[1.0, 0.2, 0.0], [0.5, 1.0, 0.1]])
        result = omega(G)
        assert np.all(G @ result.d_omega <= -result.omega + 1e-8)

    def test_empty(self):
        """Test omega needs a gradient."""
        with pytest.raises(EmptySetError):
            omega(np.empty((0, 2)))


class TestPascolettiSerafini:
    def test_opposing_models(self):
        """Test m1 = x, m2 = -x around 0 gives t = 0 at the centre."""
        models = ModelVector([linear_model(1.0), linear_model(-1.0)])
        result = pascoletti_serafini(models, TrustRegion.around(np.zeros(1), 1.0), np.zeros(2))

        assert np.allclose(result.r, [1.0, 1.0])
        assert result.t == 0.0
        assert np.array_equal(result.x_plus, np.zeros(1))

    def test_aligned_models(self):
        """Test m1 = m2 = x gives t = -1 at x = -1."""
        models = ModelVector([linear_model(1.0), linear_model(1.0)])
        result = pascoletti_serafini(models, TrustRegion.around(np.zeros(1), 1.0), np.zeros(2))

        assert result.t == pytest.approx(-1.0, abs=1e-6)
        assert result.x_plus[0] == pytest.approx(-1.0, abs=1e-6)

    def test_centre_already_optimal(self):
        """Test r = 0 returns t = 0 and the centre."""
        bowl = QuadraticModel(center=np.zeros(2), c=0.0, g=np.zeros(2), H=np.eye(2))
        models = ModelVector([bowl, bowl])
        result = pascoletti_serafini(models, TrustRegion.around(np.zeros(2), 1.0), np.zeros(2))

        assert result.t == 0.0
        assert np.array_equal(result.x_plus, np.zeros(2))

    def test_random_models_feasible(self, rng: np.random.Generator):
        """Test t in [-1, 0] and the returned point satisfies every constraint."""
        box = (np.zeros(2), np.ones(2))
        for _ in range(15):
            center = rng.random(2)
            region = TrustRegion.around(center, 0.4, box)
            models = ModelVector([
                QuadraticModel(center=center, c=0.0, g=rng.normal(size=2), H=np.diag(rng.uniform(0.1, 2.0, 2)))
                for _ in range(3)
            ])
            f_center = models.values(center)
            result = pascoletti_serafini(models, region, f_center, rng=np.random.default_rng(1))

            assert -1.0 <= result.t <= 0.0
            assert region.contains(result.x_plus)
            assert np.all(f_center - models.values(result.x_plus) + result.t * result.r >= -1e-8)

    def test_random_models_match_grid(self, rng: np.random.Generator):
        """Test t is no worse than the best max-ratio found on a grid of the feasible set."""
        box = (np.zeros(2), np.ones(2))
        for _ in range(15):
            center = rng.random(2)
            region = TrustRegion.around(center, 0.4, box)
            models = ModelVector([
                QuadraticModel(center=center, c=0.0, g=rng.normal(size=2), H=np.diag(rng.uniform(0.1, 2.0, 2)))
                for _ in range(3)
            ])
            f_center = models.values(center)
            result = pascoletti_serafini(models, region, f_center, rng=np.random.default_rng(1))

            grid = center + disk_grid(region.effective_radius, steps=121)
            grid = grid[[region.contains(x) for x in grid]]
            D = grid - center
            values = np.column_stack([
                m.c + D @ m.g + 0.5 * np.einsum("ij,jk,ik->i", D, m.H, D) for m in models
            ])
            active = result.r > 1e-12
            feasible = np.all(values[:, ~active] <= f_center[~active] + 1e-12, axis=1)
            ratios = (values[feasible][:, active] - f_center[active]) / result.r[active]
            oracle = min(0.0, max(-1.0, float(ratios.max(axis=1).min())))

            assert result.t <= oracle + 1e-3

    def test_value_length_checked(self):
        """Test one centre value per model."""
        models = ModelVector([linear_model(1.0), linear_model(-1.0)])
        with pytest.raises(DimensionError):
            pascoletti_serafini(models, TrustRegion.around(np.zeros(1), 1.0), np.zeros(3))
