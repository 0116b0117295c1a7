"""Tests for the boundary-value solvers and the projected-gradient oracle."""

import dataclasses
import math

import numpy as np
import pytest

from tresca2d import solvers
from tresca2d.epi import prox_abs_scaled, subdiff_abs
from tresca2d.fem import (
    assemble_boundary_load,
    assemble_boundary_mass_lumped,
    assemble_load,
    assemble_mass,
    assemble_stiffness,
    h1_norm,
    interpolate,
)
from tresca2d.mesh import AngleRange, BoundaryLabel, Mesh2D, generate_unit_disk, p2_enrich
from tresca2d.solvers import (
    CycleError,
    RegionTag,
    SignoriniProblem,
    TrescaProblem,
    complementarity_residuals,
    energy,
    minimize_prox_gradient,
    projected_gradient,
    solve_dirichlet_neumann,
    solve_signorini_switching,
    solve_tresca_switching,
)
from tresca2d.sparse import SolverError, SparseSymMatrix, pcg

D, N, T = BoundaryLabel.DIRICHLET, BoundaryLabel.NEUMANN, BoundaryLabel.TRESCA


def dnt_ranges():
    return [
        (AngleRange(0.25 * math.pi, 0.5 * math.pi), D),
        (AngleRange(0.5 * math.pi, 0.75 * math.pi), N),
        (AngleRange(-1.25 * math.pi, 0.25 * math.pi), T),
    ]


def disk(n, order=1, ranges=None):
    mesh = generate_unit_disk(n, ranges or dnt_ranges())
    return p2_enrich(mesh) if order == 2 else mesh


def square_mesh(labels, order=1):
    """Unit square, four triangles around the center.

    ``labels`` gives the (bottom, right, top, left) edge labels.
    """
    bottom, right, top, left = labels
    mesh = Mesh2D(
        vertices=np.array(
            [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0], [0.5, 0.5]]
        ),
        triangles=np.array([[0, 1, 4], [1, 2, 4], [2, 3, 4], [3, 0, 4]]),
        boundary_edges=np.array([[0, 1], [1, 2], [2, 3], [3, 0]]),
        boundary_labels=(bottom, right, top, left),
    )
    return p2_enrich(mesh) if order == 2 else mesh


# Piecewise-smooth data used for the nontrivial solves: a friction threshold
# profile that saturates at +-1 outside |x| < 1/2, the matching volume load,
# and the solution of the associated friction problem.
def ramp(x):
    x = np.asarray(x, dtype=float)
    return np.where(x <= -0.5, -1.0, np.where(x >= 0.5, 1.0, np.sin(np.pi * x)))


def ramp_d1(x):
    x = np.asarray(x, dtype=float)
    return np.where(np.abs(x) < 0.5, np.pi * np.cos(np.pi * x), 0.0)


def ramp_d2(x):
    x = np.asarray(x, dtype=float)
    return np.where(np.abs(x) < 0.5, -np.pi**2 * np.sin(np.pi * x), 0.0)


def load_fn(x, y):
    return -2.0 * ramp(x) - 2.0 * x * ramp_d1(x) - 0.5 * (x**2 + y**2 - 1.0) * ramp_d2(x)


def exact_stuck_solution(x, y):
    return 0.5 * (x**2 + y**2 - 1.0) * ramp(x)


RAMP_BREAKS = (-0.5, 0.5)


def traction(x, y):
    return ramp(x)


def rel_h1(mesh, values, reference):
    num = h1_norm(solvers.DiscreteField(mesh, values - reference))
    den = h1_norm(solvers.DiscreteField(mesh, reference))
    return num / max(den, 1e-300)


def pinned_contact_solve(mesh, f, k, f_x_breaks=()):
    """Reference solve with homogeneous Dirichlet on both D and T arcs."""
    K = assemble_stiffness(mesh)
    L = assemble_load(mesh, f, x_breaks=f_x_breaks or None)
    L += assemble_boundary_load(mesh, N, k)
    pins = np.union1d(
        mesh.boundary_dofs(D),
        np.setdiff1d(mesh.boundary_dofs(T), mesh.boundary_dofs(D)),
    )
    K2, b = K.eliminate(pins, np.zeros(len(pins)), L)
    u, _, _ = pcg(K2, b, tol=1e-12)
    return u


class TestMinimizeProxGradient:
    def test_two_dof_closed_form(self):
        # minimize 1/2 v'Av - b'v + |v_1| + |v_2| with the minimizer in the
        # open positive orthant, where it solves A v = b - (1, 1).
        A = SparseSymMatrix.from_coo(
            2, [0, 0, 1, 1], [0, 1, 0, 1], [2.0, -1.0, -1.0, 2.0]
        )
        b = np.array([5.0, 4.0])
        v = minimize_prox_gradient(
            A, b, soft_dofs=np.array([0, 1]), soft_thresh=np.array([1.0, 1.0])
        )
        expected = np.linalg.solve(A.toarray(), b - 1.0)
        assert np.all(expected > 0)
        np.testing.assert_allclose(v, expected, rtol=0, atol=1e-10)

    def test_prox_step_matches_scalar_prox(self):
        rng = np.random.default_rng(77)
        thresh = rng.uniform(0.0, 2.0, size=300)
        x = rng.normal(scale=3.0, size=300)
        vec = solvers._soft_threshold(thresh, x)
        scalar = np.array([prox_abs_scaled(t, xi) for t, xi in zip(thresh, x)])
        np.testing.assert_array_equal(vec, scalar)

    def test_negative_cone_clamps(self):
        A = SparseSymMatrix.from_coo(1, [0], [0], [1.0])
        v = minimize_prox_gradient(A, np.array([1.0]), neg_dofs=np.array([0]))
        assert v[0] == 0.0
        v = minimize_prox_gradient(A, np.array([-1.0]), neg_dofs=np.array([0]))
        np.testing.assert_allclose(v, [-1.0], atol=1e-10)

    def test_positive_cone_clamps(self):
        A = SparseSymMatrix.from_coo(1, [0], [0], [1.0])
        v = minimize_prox_gradient(A, np.array([-1.0]), pos_dofs=np.array([0]))
        assert v[0] == 0.0

    def test_step_beyond_stability_limit_raises(self):
        A = SparseSymMatrix.from_coo(
            2, [0, 0, 1, 1], [0, 1, 0, 1], [2.0, -1.0, -1.0, 2.0]
        )
        with pytest.raises(SolverError):
            minimize_prox_gradient(A, np.array([1.0, 1.0]), step=0.7)  # 2/lmax = 2/3

    def test_unconstrained_matches_linear_solve(self):
        rng = np.random.default_rng(5)
        dense = rng.normal(size=(6, 6))
        dense = dense @ dense.T + 6 * np.eye(6)
        rows, cols = np.nonzero(dense)
        A = SparseSymMatrix.from_coo(6, rows, cols, dense[rows, cols])
        b = rng.normal(size=6)
        v = minimize_prox_gradient(A, b, iters=200000)
        np.testing.assert_allclose(v, np.linalg.solve(dense, b), rtol=0, atol=1e-8)


class TestDirichletNeumann:
    @pytest.mark.parametrize("order", [1, 2])
    def test_zero_data_zero_solution(self, order):
        mesh = disk(24, order)
        rep = solve_dirichlet_neumann(mesh, 0.0, 0.0, 0.0)
        assert np.abs(rep.solution.values).max() == 0.0
        assert np.abs(rep.contact_flux).max() == 0.0

    @pytest.mark.parametrize("order", [1, 2])
    def test_linear_solution_exact_on_square(self, order):
        # u = x: Dirichlet at x=0, traction n_x elsewhere, no volume load.
        mesh = square_mesh((T, N, N, D), order)
        k = lambda x, y: np.where(x > 0.999, 1.0, 0.0)
        rep = solve_dirichlet_neumann(mesh, 0.0, k, 0.0)
        exact = interpolate(mesh, lambda x, y: x)
        np.testing.assert_allclose(rep.solution.values, exact.values, rtol=0, atol=1e-10)

    def test_quadratic_solution_exact_on_square(self):
        # u = x(1-x): Dirichlet at x=0 and x=1, -u'' = 2, zero flux on the
        # horizontal edges; exactly representable by P2.
        mesh = square_mesh((T, D, N, D), order=2)
        rep = solve_dirichlet_neumann(mesh, 2.0, 0.0, 0.0)
        exact = interpolate(mesh, lambda x, y: x * (1.0 - x))
        np.testing.assert_allclose(rep.solution.values, exact.values, rtol=0, atol=1e-10)
        np.testing.assert_allclose(rep.contact_flux, 0.0, atol=1e-9)

    def test_flux_recovers_traction_data(self):
        # For u = x^2 + y^2 - 1 the normal derivative on the unit circle is
        # 2 everywhere; the recovered contact flux must reproduce it.
        mesh = disk(48, 2)
        rep = solve_dirichlet_neumann(mesh, -4.0, 2.0, 2.0)
        np.testing.assert_allclose(rep.contact_flux, 2.0, rtol=0, atol=1e-9)

    def test_dirichlet_dofs_exactly_zero(self):
        mesh = disk(32, 2)
        rep = solve_dirichlet_neumann(mesh, load_fn, traction, 1.0, f_x_breaks=RAMP_BREAKS)
        assert np.abs(rep.solution.values[mesh.boundary_dofs(D)]).max() == 0.0

    def test_free_dof_residual_small(self):
        mesh = disk(32, 2)
        rep = solve_dirichlet_neumann(mesh, load_fn, traction, 0.0, f_x_breaks=RAMP_BREAKS)
        K = assemble_stiffness(mesh)
        L = assemble_load(mesh, load_fn, x_breaks=RAMP_BREAKS)
        L += assemble_boundary_load(mesh, N, traction)
        L += assemble_boundary_load(mesh, T, 0.0)
        res = K @ rep.solution.values - L
        free = np.setdiff1d(np.arange(mesh.n_dofs), mesh.boundary_dofs(D))
        assert np.abs(res[free]).max() <= 1e-9 * (1.0 + np.abs(L).max())

    def test_convergence_to_piecewise_profile(self):
        # Full-Dirichlet manufactured solution 0.5 (r^2 - 1) ramp(x); its
        # second derivative jumps across x = +-1/2, which caps the H1 rate
        # near 3/2 on unaligned meshes, still comfortably quadratic-ish.
        errs = []
        for n in (48, 96, 192):
            mesh = disk(n, 2, ranges=[(AngleRange(-math.pi, math.pi), D)])
            rep = solve_dirichlet_neumann(mesh, load_fn, 0.0, 0.0, f_x_breaks=RAMP_BREAKS)
            diff = rep.solution.values - interpolate(mesh, exact_stuck_solution).values
            errs.append(h1_norm(solvers.DiscreteField(mesh, diff)))
        errs = np.array(errs)
        assert np.all(np.diff(errs) < 0)
        fitted = np.polyfit(np.log([48, 96, 192]), np.log(errs), 1)[0]
        assert -2.5 <= fitted <= -1.4

    def test_stability_bound_on_fresh_data(self):
        # Calibrate ||u||_H1 <= C (||f|| + ||k|| + ||h||) once, then check
        # fresh random data against 10x the calibrated constant.
        mesh = disk(32, 2)
        M = assemble_mass(mesh)
        w_n = assemble_boundary_mass_lumped(mesh, N)
        w_t = assemble_boundary_mass_lumped(mesh, T)

        def data_norms(f, k, h):
            fv = interpolate(mesh, f).values
            kv = interpolate(mesh, k).values
            hv = interpolate(mesh, h).values
            nf = math.sqrt(max(0.0, fv @ (M @ fv)))
            nk = math.sqrt(float(w_n @ kv**2))
            nh = math.sqrt(float(w_t @ hv**2))
            return nf + nk + nh

        def ratio(f, k, h):
            rep = solve_dirichlet_neumann(mesh, f, k, h)
            return h1_norm(rep.solution) / data_norms(f, k, h)

        c_cal = ratio(lambda x, y: 1.0 + 0.0 * x, 0.5, -0.25)
        rng = np.random.default_rng(2024)
        for _ in range(5):
            a = rng.uniform(-1.0, 1.0, size=7)
            f = lambda x, y: a[0] + a[1] * x + a[2] * y
            k = lambda x, y: a[3] + a[4] * x
            h = lambda x, y: a[5] + a[6] * y
            assert ratio(f, k, h) <= 10.0 * c_cal

    def test_requires_dirichlet_arc(self):
        mesh = generate_unit_disk(
            24, [(AngleRange(-0.5 * math.pi, 0.0), N), (AngleRange(0.0, 1.5 * math.pi), T)]
        )
        with pytest.raises(ValueError, match="Dirichlet"):
            solve_dirichlet_neumann(mesh, 1.0, 0.0, 0.0)


class TestTrescaProblemValidation:
    def test_nonpositive_threshold_rejected(self):
        mesh = disk(16)
        with pytest.raises(ValueError, match="positive"):
            TrescaProblem.build(mesh, 1.0, 0.0, 0.0)
        with pytest.raises(ValueError, match="positive"):
            TrescaProblem.build(mesh, 1.0, 0.0, lambda x, y: x)  # changes sign

    def test_missing_dirichlet_arc_rejected(self):
        mesh = generate_unit_disk(
            24, [(AngleRange(-0.5 * math.pi, 0.0), N), (AngleRange(0.0, 1.5 * math.pi), T)]
        )
        with pytest.raises(ValueError, match="Dirichlet"):
            TrescaProblem.build(mesh, 1.0, 0.0, 1.0)

    def test_missing_contact_arc_rejected(self):
        mesh = generate_unit_disk(
            24, [(AngleRange(-0.5 * math.pi, 0.0), N), (AngleRange(0.0, 1.5 * math.pi), D)]
        )
        with pytest.raises(ValueError, match="contact"):
            TrescaProblem.build(mesh, 1.0, 0.0, 1.0)


@pytest.fixture(scope="module")
def coarse():
    mesh = disk(32)
    prob = TrescaProblem.build(mesh, load_fn, traction, 1.0, f_x_breaks=RAMP_BREAKS)
    return mesh, prob, solve_tresca_switching(prob)


class TestTrescaSwitching:
    def test_converges_with_diagnostics(self, coarse):
        _, _, rep = coarse
        assert rep.converged
        assert rep.kind == "tresca"
        assert rep.iterations >= 1
        assert rep.linear_iterations > 0
        assert rep.linear_residual <= 1e-10

    def test_huge_threshold_sticks_everywhere(self):
        mesh = disk(32, 2)
        prob = TrescaProblem.build(mesh, load_fn, traction, 1e6, f_x_breaks=RAMP_BREAKS)
        rep = solve_tresca_switching(prob)
        assert rep.iterations == 1
        assert np.all(rep.modes == solvers.STICK)
        u_pin = pinned_contact_solve(mesh, load_fn, traction, RAMP_BREAKS)
        assert rel_h1(mesh, rep.solution.values, u_pin) <= 1e-6

    def test_tiny_threshold_matches_neumann_solve(self):
        mesh = disk(32, 2)
        prob = TrescaProblem.build(mesh, load_fn, traction, 1e-12, f_x_breaks=RAMP_BREAKS)
        rep = solve_tresca_switching(prob)
        ref = solve_dirichlet_neumann(mesh, load_fn, traction, 0.0, f_x_breaks=RAMP_BREAKS)
        assert rel_h1(mesh, rep.solution.values, ref.solution.values) <= 1e-6

    @pytest.mark.parametrize("alpha", [0.5, 2.0, 10.0])
    def test_scaling_homogeneity(self, alpha, coarse):
        mesh, _, rep = coarse
        scaled = TrescaProblem.build(
            mesh,
            lambda x, y: alpha * load_fn(x, y),
            lambda x, y: alpha * ramp(x),
            alpha,
            f_x_breaks=RAMP_BREAKS,
        )
        rep_a = solve_tresca_switching(scaled)
        assert rel_h1(mesh, rep_a.solution.values, alpha * rep.solution.values) <= 1e-10

    def test_insensitive_to_slip_initialization(self, coarse):
        mesh, prob, rep = coarse
        rep_s = solve_tresca_switching(prob, init="slip+")
        assert rep_s.converged
        assert rel_h1(mesh, rep_s.solution.values, rep.solution.values) <= 1e-10

    def test_unknown_initialization_rejected(self, coarse):
        _, prob, _ = coarse
        with pytest.raises(ValueError, match="init"):
            solve_tresca_switching(prob, init="random")

    def test_energy_optimality_against_perturbations(self, coarse):
        mesh, prob, rep = coarse
        u = rep.solution.values
        ju = energy(prob, u)
        rng = np.random.default_rng(99)
        dirichlet = mesh.boundary_dofs(D)
        for _ in range(100):
            v = u + 10.0 ** rng.uniform(-3, 0) * rng.normal(size=mesh.n_dofs)
            v[dirichlet] = 0.0
            assert ju <= energy(prob, v) + 1e-9

    def test_variational_inequality_residual_nonnegative(self, coarse):
        mesh, prob, rep = coarse
        u = rep.solution.values
        K = assemble_stiffness(mesh)
        L = assemble_load(mesh, load_fn, x_breaks=RAMP_BREAKS)
        L += assemble_boundary_load(mesh, N, traction)
        friction = lambda v: np.sum(prob.weights * prob.g * np.abs(v[prob.contact_dofs]))
        rng = np.random.default_rng(7)
        dirichlet = mesh.boundary_dofs(D)
        for _ in range(20):
            v = u + rng.normal(scale=0.1, size=mesh.n_dofs)
            v[dirichlet] = 0.0
            lhs = (v - u) @ (K @ u) - L @ (v - u) + friction(v) - friction(u)
            assert lhs >= -1e-9

    def test_flux_lies_in_scaled_subdifferential(self, coarse):
        _, prob, rep = coarse
        for u_i, lam_i, g_i in zip(rep.contact_u, rep.contact_flux, rep.contact_bound):
            lo, hi = subdiff_abs(u_i if abs(u_i) > 1e-12 else 0.0)
            assert g_i * lo - 1e-8 <= -lam_i <= g_i * hi + 1e-8

    def test_complementarity_residuals_near_zero(self, coarse):
        _, _, rep = coarse
        res = complementarity_residuals(rep)
        assert res.max_violation <= 1e-10
        assert np.all(res.feasibility == 0.0)

    def test_perturbed_solution_violates_complementarity(self, coarse):
        _, _, rep = coarse
        slipping = np.flatnonzero(rep.modes != solvers.STICK)
        idx = slipping[0] if len(slipping) else 0
        bad_u = rep.contact_u.copy()
        bad_u[idx] -= 0.1 * np.sign(rep.contact_u[idx]) if rep.contact_u[idx] else 0.1
        bad = dataclasses.replace(rep, contact_u=bad_u)
        assert complementarity_residuals(bad).law[idx] > 1e-4

    def test_small_load_respects_flux_bound(self):
        mesh = disk(24)
        prob = TrescaProblem.build(mesh, lambda x, y: 0.01 + 0.0 * x, 0.0, 10.0)
        rep = solve_tresca_switching(prob)
        assert np.all(rep.modes == solvers.STICK)
        assert np.all(np.abs(rep.contact_flux) <= 10.0)

    def test_iteration_budget_returns_unconverged_report(self, coarse):
        _, prob, rep_full = coarse
        assert rep_full.iterations >= 2
        rep = solve_tresca_switching(prob, max_iters=1)
        assert not rep.converged
        assert rep.iterations == 1

    def test_mode_cycle_raises(self, monkeypatch):
        # A fake linear solve alternating +-1 makes every released dof flip
        # back the next pass, so the all-stick set must reappear.
        mesh = disk(16)
        prob = TrescaProblem.build(mesh, 1.0, 0.0, 1e-6)
        flip = {"val": -1.0}

        def fake_pcg(matrix, b, tol=1e-12, x0=None, max_iter=None):
            flip["val"] = -flip["val"]
            return np.full(matrix.n, flip["val"]), 1, 0.0

        monkeypatch.setattr(solvers, "pcg", fake_pcg)
        with pytest.raises(CycleError, match="cycle"):
            solve_tresca_switching(prob)

    def test_history_tracks_active_sets(self, coarse):
        _, prob, rep = coarse
        assert len(rep.history) >= 1
        assert np.all(rep.history[0] == solvers.STICK)
        for modes in rep.history:
            assert modes.shape == rep.contact_dofs.shape

    def test_report_text_format(self, coarse):
        _, _, rep = coarse
        text = rep.to_text()
        assert "kind: tresca" in text
        assert "converged: true" in text
        assert "# contact table" in text
        assert "# dof x y mode u flux bound" in text
        body = text[text.index("# dof") :].splitlines()[1:]
        assert len(body) == len(rep.contact_dofs)
        assert any(" stick " in line or " slip" in line for line in body)
        assert f"n_boundary: {rep.params['n_boundary']}" in text


def derivative_style_tags(mesh, contact):
    """Tag the contact dofs by angle into S_D, S-, S+ sectors."""
    coords = mesh.dof_coords()
    theta = np.arctan2(coords[contact, 1], coords[contact, 0])
    tags = np.empty(len(contact), dtype=object)
    for i, t in enumerate(theta):
        if -2 * math.pi / 3 < t <= -math.pi / 3:
            tags[i] = RegionTag.S_D
        elif -math.pi / 3 < t <= math.pi / 4:
            tags[i] = RegionTag.S_MINUS
        else:
            tags[i] = RegionTag.S_PLUS
    return tags


@pytest.fixture(scope="module")
def onesided():
    mesh = disk(32)
    contact = np.setdiff1d(mesh.boundary_dofs(T), mesh.boundary_dofs(D))
    tags = derivative_style_tags(mesh, contact)
    h = np.where([t is RegionTag.S_MINUS for t in tags], 1.0, -1.0)
    prob = SignoriniProblem.build(mesh, load_fn, traction, tags, h, f_x_breaks=RAMP_BREAKS)
    return mesh, prob, solve_signorini_switching(prob)


class TestSignoriniSwitching:
    def test_converges_with_small_complementarity(self, onesided):
        _, _, rep = onesided
        assert rep.converged
        assert rep.kind == "signorini"
        assert rep.complementarity_residual <= 1e-10

    def test_cone_feasibility_is_exact(self, onesided):
        _, prob, rep = onesided
        sm = np.array([t is RegionTag.S_MINUS for t in prob.tags])
        sp = np.array([t is RegionTag.S_PLUS for t in prob.tags])
        sd = np.array([t is RegionTag.S_D for t in prob.tags])
        assert np.all(rep.contact_u[sm] <= 0.0)
        assert np.all(rep.contact_u[sp] >= 0.0)
        assert np.all(rep.contact_u[sd] == 0.0)

    def test_all_neumann_tags_match_plain_solve(self):
        mesh = disk(32)
        contact = np.setdiff1d(mesh.boundary_dofs(T), mesh.boundary_dofs(D))
        tags = np.array([RegionTag.S_N] * len(contact), dtype=object)
        prob = SignoriniProblem.build(mesh, load_fn, traction, tags, 0.0, f_x_breaks=RAMP_BREAKS)
        rep = solve_signorini_switching(prob)
        ref = solve_dirichlet_neumann(mesh, load_fn, traction, 0.0, f_x_breaks=RAMP_BREAKS)
        assert rep.iterations == 1
        np.testing.assert_allclose(
            rep.solution.values, ref.solution.values, rtol=0, atol=1e-12
        )

    def test_all_dirichlet_tags_match_pinned_solve(self):
        mesh = disk(32)
        contact = np.setdiff1d(mesh.boundary_dofs(T), mesh.boundary_dofs(D))
        tags = np.array([RegionTag.S_D] * len(contact), dtype=object)
        prob = SignoriniProblem.build(mesh, load_fn, traction, tags, 0.0, f_x_breaks=RAMP_BREAKS)
        rep = solve_signorini_switching(prob)
        u_pin = pinned_contact_solve(mesh, load_fn, traction, RAMP_BREAKS)
        np.testing.assert_allclose(rep.solution.values, u_pin, rtol=0, atol=1e-12)

    def test_large_bound_datum_keeps_dofs_bound(self, onesided):
        # On S-, a dof frees only when its flux exceeds h; with h huge the
        # whole sector stays bound (u = 0).
        mesh, prob, _ = onesided
        h = np.where([t is RegionTag.S_MINUS for t in prob.tags], 1e6, -1e6)
        big = SignoriniProblem.build(
            mesh, load_fn, traction, prob.tags, h, f_x_breaks=RAMP_BREAKS
        )
        rep = solve_signorini_switching(big)
        one_sided = np.array(
            [t in (RegionTag.S_MINUS, RegionTag.S_PLUS) for t in prob.tags]
        )
        assert np.all(rep.contact_u[one_sided] == 0.0)

    def test_mirrored_problem_negates_solution(self, onesided):
        mesh, prob, rep = onesided
        swap = {RegionTag.S_MINUS: RegionTag.S_PLUS, RegionTag.S_PLUS: RegionTag.S_MINUS}
        tags_m = np.array([swap.get(t, t) for t in prob.tags], dtype=object)
        mirrored = SignoriniProblem.build(
            mesh,
            lambda x, y: -load_fn(x, y),
            lambda x, y: -ramp(x),
            tags_m,
            -prob.h,
            f_x_breaks=RAMP_BREAKS,
        )
        rep_m = solve_signorini_switching(mirrored)
        np.testing.assert_allclose(
            rep_m.solution.values, -rep.solution.values, rtol=0, atol=1e-12
        )

    def test_report_text_names_regions(self, onesided):
        _, _, rep = onesided
        text = rep.to_text()
        assert "kind: signorini" in text
        assert "SD" in text
        assert ("free-" in text) or ("bound-" in text)

    def test_tag_array_must_align(self):
        mesh = disk(16)
        with pytest.raises(ValueError, match="RegionTag"):
            SignoriniProblem.build(mesh, 1.0, 0.0, np.array([RegionTag.S_N, None], dtype=object), 0.0)
        with pytest.raises(ValueError, match="per contact dof"):
            SignoriniProblem.build(mesh, 1.0, 0.0, np.array([RegionTag.S_N], dtype=object), 0.0)


class TestProjectedGradientOracle:
    def test_tresca_agreement_on_coarse_disk(self):
        mesh = disk(32)
        prob = TrescaProblem.build(mesh, load_fn, traction, 1.0, f_x_breaks=RAMP_BREAKS)
        rep = solve_tresca_switching(prob)
        orc = projected_gradient(prob)
        assert rel_h1(mesh, orc.values, rep.solution.values) <= 1e-4
        e_sw = energy(prob, rep.solution.values)
        e_or = energy(prob, orc.values)
        assert abs(e_sw - e_or) <= 1e-6 * abs(e_sw)

    def test_signorini_agreement_on_coarse_disk(self):
        mesh = disk(32)
        contact = np.setdiff1d(mesh.boundary_dofs(T), mesh.boundary_dofs(D))
        tags = derivative_style_tags(mesh, contact)
        h = np.where([t is RegionTag.S_MINUS for t in tags], 1.0, -1.0)
        prob = SignoriniProblem.build(mesh, load_fn, traction, tags, h, f_x_breaks=RAMP_BREAKS)
        rep = solve_signorini_switching(prob)
        orc = projected_gradient(prob)
        assert rel_h1(mesh, orc.values, rep.solution.values) <= 1e-4
        e_sw = energy(prob, rep.solution.values)
        e_or = energy(prob, orc.values)
        assert abs(e_sw - e_or) <= 1e-6 * abs(e_sw)

    def test_signorini_inactive_constraints_match_plain_solve(self):
        # With a strongly negative load pushing S- dofs inward, the cone
        # constraints never activate and the oracle solves the linear problem.
        mesh = disk(24)
        contact = np.setdiff1d(mesh.boundary_dofs(T), mesh.boundary_dofs(D))
        tags = np.array([RegionTag.S_MINUS] * len(contact), dtype=object)
        prob = SignoriniProblem.build(mesh, lambda x, y: -1.0 + 0.0 * x, 0.0, tags, 0.0)
        orc = projected_gradient(prob)
        ref = solve_dirichlet_neumann(mesh, lambda x, y: -1.0 + 0.0 * x, 0.0, 0.0)
        assert np.all(orc.values[contact] <= 1e-12)
        assert rel_h1(mesh, orc.values, ref.solution.values) <= 1e-6

    def test_oracle_respects_dirichlet_pins(self):
        mesh = disk(24)
        prob = TrescaProblem.build(mesh, 1.0, 0.0, 1.0)
        orc = projected_gradient(prob)
        assert np.abs(orc.values[mesh.boundary_dofs(D)]).max() == 0.0
