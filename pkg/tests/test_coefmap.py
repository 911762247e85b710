import math

import numpy as np
import pytest
import sympy as sp

from conftest import sample_coeffs, sample_params
from hankel_lab.coefmap import (
    ClassParams,
    CoefficientTriple,
    closed_form_coefficients,
    gamma_max,
    lhs_series,
    rhs_series,
    solve_coefficients,
    solve_series,
)
from hankel_lab.powser import Series
from hankel_lab.schwarz import SchwarzCoeffs, extremal_omega


def triple_close(x: CoefficientTriple, y, tol):
    assert max(abs(a - b) for a, b in zip(x.as_tuple(), y)) <= tol


class TestClassParams:
    @pytest.mark.parametrize("a,g", [(0.0, 0.5), (1.0, 0.5), (0.5, 0.0), (0.5, 1.0001), (-0.1, 0.2)])
    def test_rejects_outside_rectangle(self, a, g):
        with pytest.raises(ValueError):
            ClassParams(a, g)

    def test_gamma_one_allowed(self):
        assert ClassParams(0.3, 1.0).gamma == 1.0

    def test_region_predicate(self):
        assert ClassParams(0.2, 0.62).in_region
        assert not ClassParams(0.2, 0.6201).in_region
        assert not ClassParams(0.5, 0.2).in_region  # gamma_max(0.5) = 0.125
        assert not ClassParams(0.6, 0.01).in_region  # alpha beyond 2 - sqrt 2

    def test_gamma_max_values(self):
        assert gamma_max(0.2) == pytest.approx(0.62, abs=1e-15)
        assert gamma_max(0.5) == pytest.approx(0.125, abs=1e-15)
        assert gamma_max(2 - math.sqrt(2)) == pytest.approx(0.0, abs=1e-15)


class TestRhs:
    def test_zero_omega(self):
        r = rhs_series(Series.constant(0, 5), 0.4, 5)
        assert np.allclose(r.coeffs, [1, 0, 0, 0, 0, 0])

    @pytest.mark.parametrize("g", [0.1, 0.62, 1.0])
    def test_identity_omega(self, g):
        r = rhs_series(Series.variable(3), g, 3)
        assert np.allclose(r.coeffs, [1, 2 * g, 2 * g * g, 2 * g / 3 + 4 * g**3 / 3], atol=1e-14)

    def test_z_squared_substitution(self):
        g = 0.37
        r = rhs_series(extremal_omega(6), g, 6)
        # substitute z -> z^2 in 1 + 2g z + 2g^2 z^2 + (2g/3 + 4g^3/3) z^3
        expect = [1, 0, 2 * g, 0, 2 * g * g, 0, 2 * g / 3 + 4 * g**3 / 3]
        assert np.allclose(r.coeffs, expect, atol=1e-14)

    def test_requires_zero_constant(self):
        with pytest.raises(ValueError):
            rhs_series(Series.from_coeffs([0.1, 1], 3), 0.5, 3)


class TestSolver:
    def test_zero_omega_gives_identity_function(self):
        t = solve_coefficients(ClassParams(0.4, 0.7), Series.constant(0, 4))
        triple_close(t, (0, 0, 0), 0.0)

    @pytest.mark.parametrize("a,g", [(0.2, 0.62), (0.05, 1.0), (0.9, 0.3)])
    def test_extremal(self, a, g):
        t = solve_coefficients(ClassParams(a, g), extremal_omega())
        triple_close(t, (0, 2 * g / (2 - a), 0), 1e-14)

    def test_worked_example(self):
        # hand substitution: a2 = 2(0.25)(0.3)/0.5, a3 = (0.3125/0.375)(0.09),
        # mu = 3, nu = 3.5, a4 = 0.2 * nu * 0.027
        params = ClassParams(0.5, 0.25)
        c = SchwarzCoeffs(0.3, 0, 0)
        expect = (0.3, 0.075, 0.0189)
        triple_close(solve_coefficients(params, c.to_series()), expect, 1e-14)
        triple_close(closed_form_coefficients(params, c), expect, 1e-14)

    def test_solution_satisfies_functional_equation(self, rng):
        for params, c in zip(sample_params(rng, 20), sample_coeffs(rng, 20)):
            p = solve_series(params, c.to_series(), 6)
            lhs = lhs_series(params, p)
            rhs = rhs_series(c.to_series(), params.gamma, 6)
            assert np.max(np.abs(lhs.coeffs - rhs.coeffs)) <= 1e-10

    def test_against_symbolic_expansion(self):
        alpha, gamma = sp.Rational(1, 3), sp.Rational(2, 5)
        c1, c2, c3 = sp.Rational(1, 2), sp.Rational(1, 4) + sp.I / 5, -sp.Rational(1, 10)
        z = sp.symbols("z")
        A2, A3, A4 = sp.symbols("A2 A3 A4")
        w = c1 * z + c2 * z**2 + c3 * z**3
        f = z + A2 * z**2 + A3 * z**3 + A4 * z**4
        lhs = sp.series((f / z) ** (-(1 + alpha)) * sp.diff(f, z), z, 0, 4).removeO()
        rhs = sp.series(((1 + w) / (1 - w)) ** gamma, z, 0, 4).removeO()
        eqs = [sp.expand(lhs - rhs).coeff(z, k) for k in (1, 2, 3)]
        sol = sp.solve(eqs, [A2, A3, A4], dict=True)[0]
        expect = [complex(sp.N(sol[s], 30)) for s in (A2, A3, A4)]
        params = ClassParams(1 / 3, 2 / 5)
        c = SchwarzCoeffs(0.5, 0.25 + 0.2j, -0.1)
        triple_close(solve_coefficients(params, c.to_series()), expect, 1e-14)
        triple_close(closed_form_coefficients(params, c), expect, 1e-14)


class TestClosedForm:
    def test_zero(self):
        triple_close(closed_form_coefficients(ClassParams(0.3, 0.3), SchwarzCoeffs(0, 0, 0)), (0, 0, 0), 0.0)

    def test_extremal(self):
        a, g = 0.3, 0.4
        t = closed_form_coefficients(ClassParams(a, g), SchwarzCoeffs(0, 1, 0))
        triple_close(t, (0, 2 * g / (2 - a), 0), 1e-15)

    def test_matches_solver(self, rng):
        for params, c in zip(sample_params(rng, 300), sample_coeffs(rng, 300)):
            closed = closed_form_coefficients(params, c)
            solved = solve_coefficients(params, c.to_series())
            assert closed.max_abs_diff(solved) <= 1e-10

    def test_matches_solver_relative_full_rectangle(self, rng):
        # magnitudes blow up like (1 - alpha)^-3, so compare relatively here
        for params, c in zip(sample_params(rng, 300, alpha_max=0.999), sample_coeffs(rng, 300)):
            closed = closed_form_coefficients(params, c)
            solved = solve_coefficients(params, c.to_series())
            scale = max(1.0, *map(abs, closed.as_tuple()))
            assert closed.max_abs_diff(solved) <= 1e-13 * scale


class TestCovariance:
    def test_rotation(self, rng):
        for params, c in zip(sample_params(rng, 50), sample_coeffs(rng, 50)):
            theta = rng.uniform(0, 2 * math.pi)
            base = solve_coefficients(params, c.to_series())
            rot = solve_coefficients(params, c.rotated(theta).to_series())
            for n, (x, y) in enumerate(zip(base.as_tuple(), rot.as_tuple()), start=2):
                assert abs(y - x * np.exp(1j * (n - 1) * theta)) <= 1e-10

    def test_real_inputs_give_real_outputs(self, rng):
        for params in sample_params(rng, 50):
            c = SchwarzCoeffs(*rng.uniform(-0.3, 0.3, 3))
            t = solve_coefficients(params, c.to_series())
            assert max(abs(v.imag) for v in t.as_tuple()) <= 1e-13
