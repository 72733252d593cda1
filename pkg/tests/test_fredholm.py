"""Fredholm determinant tests.

Since no closed-form determinant values exist for these kernels, the oracle
is the truncated trace expansion

    det(1 - K) ~ 1 - t1 + (t1^2 - t2)/2 - (t1^3 - 3 t1 t2 + 2 t3)/6,

with the traces t_n = Tr K^n computed by quadrature of the iterated kernel
on an independent (finer) grid; its truncation error is of the order of the
product of the four largest eigenvalues, far below 1e-6 for s <= 1 here.
"""

import math

import numpy as np
import pytest

from meijergap.errors import DomainError, SingularityError
from meijergap.fredholm import FredholmGrid, gap_determinant, gauss_legendre_grid, kappa_for_nu_min, log_gap_determinant
from meijergap.kernel import BesselKernel, MeijerKernel, ProcessParams

LEFT = ProcessParams(3, 2, (1.31, 2.15, 3.19), (1.87, 2.61))


def trace_series_determinant(s, kernel, m=120):
    """Four-term determinant expansion from quadrature traces."""
    grid = gauss_legendre_grid(s, m)
    k_mat = kernel.matrix(grid.nodes) if hasattr(kernel, "matrix") else np.array(
        [[kernel(x, y) for y in grid.nodes] for x in grid.nodes]
    )
    kd = k_mat * grid.weights[None, :]
    t1 = np.trace(kd)
    t2 = np.trace(kd @ kd)
    t3 = np.trace(kd @ kd @ kd)
    return 1.0 - t1 + (t1**2 - t2) / 2.0 - (t1**3 - 3 * t1 * t2 + 2 * t3) / 6.0


class TestGrid:
    def test_two_point_rule(self):
        g = gauss_legendre_grid(2.0, 2)
        assert g.nodes == pytest.approx([1 - 1 / math.sqrt(3), 1 + 1 / math.sqrt(3)], abs=1e-15)
        assert g.weights == pytest.approx([1.0, 1.0], abs=1e-15)

    def test_weights_sum_to_s(self):
        g = gauss_legendre_grid(7.3, 40)
        assert abs(g.weights.sum() - 7.3) < 1e-12

    def test_polynomial_exactness(self):
        g = gauss_legendre_grid(3.0, 2)
        assert abs(np.sum(g.weights * g.nodes**2) - 9.0) < 1e-12

    def test_graded_grid_invariants(self):
        g = gauss_legendre_grid(4.0, 30, kappa=3)
        assert abs(g.weights.sum() - 4.0) < 1e-12
        assert np.all(np.diff(g.nodes) > 0)
        assert g.nodes[0] > 0 and g.nodes[-1] < 4.0

    def test_kappa_selection(self):
        assert kappa_for_nu_min(0.5) == 1
        assert kappa_for_nu_min(-0.5) == 4

    @pytest.mark.parametrize("bad", [(0.0, 10), (-1.0, 10), (2.0, 1)])
    def test_invalid_inputs(self, bad):
        with pytest.raises(DomainError):
            gauss_legendre_grid(*bad)

    def test_grid_validation(self):
        with pytest.raises(DomainError):
            FredholmGrid(s=1.0, m=2, nodes=np.array([0.2, 0.1]), weights=np.array([0.5, 0.5]))


class TestGapDeterminant:
    def test_empty_interval_limit(self):
        g = gauss_legendre_grid(1e-8, 4)
        assert abs(gap_determinant(1e-8, g, BesselKernel(0.0)) - 1.0) < 1e-6

    @pytest.mark.parametrize("s", [0.5, 1.0])
    def test_trace_series_oracle(self, s):
        kernel = BesselKernel(0.0)
        g = gauss_legendre_grid(s, 60)
        det = gap_determinant(s, g, kernel)
        assert abs(det - trace_series_determinant(s, kernel)) < 1e-6

    def test_monotone_decrease_bessel(self):
        kernel = BesselKernel(0.0)
        dets = [gap_determinant(s, gauss_legendre_grid(s, 60), kernel) for s in (0.5, 1, 2, 4, 8)]
        assert all(d1 > d2 for d1, d2 in zip(dets, dets[1:]))
        assert all(0.0 < d <= 1.0 for d in dets)

    def test_monotone_decrease_meijer(self):
        handle = MeijerKernel(LEFT, (1e-4, 8.0), tol=1e-12)
        dets = [gap_determinant(s, gauss_legendre_grid(s, 60), handle) for s in (0.5, 1, 2, 4, 8)]
        assert all(d1 > d2 for d1, d2 in zip(dets, dets[1:]))
        assert all(0.0 < d <= 1.0 for d in dets)

    def test_meijer_refinement(self):
        handle = MeijerKernel(LEFT, (1e-5, 1.0), tol=1e-12)
        d60 = gap_determinant(1.0, gauss_legendre_grid(1.0, 60), handle)
        d100 = gap_determinant(1.0, gauss_legendre_grid(1.0, 100), handle)
        assert abs(d60 - d100) < 1e-8

    def test_spectral_self_convergence(self):
        # the Bessel case is machine-converged already at m=20; the Meijer
        # kernel's algebraic y^nu_min behavior at 0 leaves measurable error
        handle = MeijerKernel(LEFT, (1e-6, 4.0), tol=1e-12)
        s = 4.0
        d20, d40, d80 = (
            gap_determinant(s, gauss_legendre_grid(s, m), handle) for m in (20, 40, 80)
        )
        assert abs(d20 - d40) >= 10 * abs(d40 - d80)

    def test_graded_grid_for_negative_nu_min(self):
        # integrable x^nu_min density singularity at 0; graded rule keeps
        # the determinant stable under refinement
        p = ProcessParams(1, 0, (-0.5,))
        kappa = kappa_for_nu_min(p.nu_min)
        g80 = gauss_legendre_grid(1.0, 80, kappa=kappa)
        handle = MeijerKernel(p, (0.9 * float(g80.nodes[0]), 1.0), tol=1e-12)
        d40 = gap_determinant(1.0, gauss_legendre_grid(1.0, 40, kappa=kappa), handle)
        d80 = gap_determinant(1.0, g80, handle)
        assert abs(d40 - d80) < 5e-7

    def test_negative_nu_min_against_bessel_route(self):
        # r=1 kernels over [0, s] and the Bessel kernel over [0, 4s] define
        # the same determinant; independent check of the graded machinery
        p = ProcessParams(1, 0, (-0.5,))
        g = gauss_legendre_grid(1.0, 80, kappa=4)
        handle = MeijerKernel(p, (0.9 * float(g.nodes[0]), 1.0), tol=1e-12)
        d_meijer = gap_determinant(1.0, g, handle)
        d_bessel = gap_determinant(4.0, gauss_legendre_grid(4.0, 120, kappa=4), BesselKernel(-0.5))
        assert abs(d_meijer - d_bessel) < 1e-5

    def test_grid_s_mismatch(self):
        g = gauss_legendre_grid(1.0, 10)
        with pytest.raises(DomainError):
            gap_determinant(2.0, g, BesselKernel(0.0))


class _SingularHandle:
    """Makes I - sqrt(w) K sqrt(w) exactly the zero matrix."""

    def __init__(self, grid):
        self.grid = grid

    def matrix(self, nodes):
        return np.diag(1.0 / self.grid.weights)


class TestLogGapDeterminant:
    def test_small_s(self):
        g = gauss_legendre_grid(1e-8, 4)
        assert abs(log_gap_determinant(1e-8, g, BesselKernel(0.0))) < 1e-6

    def test_exp_consistency(self):
        g = gauss_legendre_grid(2.0, 50)
        kernel = BesselKernel(0.0)
        ld = log_gap_determinant(2.0, g, kernel)
        d = gap_determinant(2.0, g, kernel)
        assert abs(math.exp(ld) - d) < 1e-12

    def test_negative_and_decreasing(self):
        kernel = BesselKernel(0.0)
        ld2 = log_gap_determinant(2.0, gauss_legendre_grid(2.0, 50), kernel)
        ld4 = log_gap_determinant(4.0, gauss_legendre_grid(4.0, 50), kernel)
        assert ld4 < ld2 < 0.0

    def test_singular_operator_raises(self):
        g = gauss_legendre_grid(1.0, 8)
        with pytest.raises(SingularityError):
            log_gap_determinant(1.0, g, _SingularHandle(g))
