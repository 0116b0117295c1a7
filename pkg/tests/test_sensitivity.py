"""Tests for the perturbation-sensitivity machinery.

Covers the contact-partition classifier, the flux averaging, the derivative
problem assembly, the convergence study driver, and the built-in disk
example with its known closed-form solution.
"""

import math

import numpy as np
import pytest

from tresca2d import sensitivity as sens
from tresca2d.fem import DiscreteField, interpolate
from tresca2d.mesh import BoundaryLabel
from tresca2d.solvers import (
    RegionTag,
    TrescaProblem,
    complementarity_residuals,
    solve_tresca_switching,
    _contact_dofs,
)


@pytest.fixture(scope="module")
def example():
    return sens.builtin_disk_example()


@pytest.fixture(scope="module")
def small_mesh(example):
    """Coarse quadratic disk, cheap enough for per-test solves."""
    return example.make_mesh(48)


@pytest.fixture(scope="module")
def coarse_study(example, small_mesh):
    opts = sens.StudyOptions(u0=example.u0, eps_g=2e-2)
    return sens.convergence_study(example.family, [0.4, 0.2, 0.1, 0.02], small_mesh, opts)


@pytest.fixture(scope="module")
def reference_study(example):
    """Single-parameter study at the resolution the defaults are tuned for."""
    mesh = example.make_mesh()
    return sens.convergence_study(
        example.family, [0.1], mesh, sens.StudyOptions(u0=example.u0)
    )


def contact_angles(partition):
    coords = partition.mesh.dof_coords()[partition.contact_dofs]
    return np.arctan2(coords[:, 1], coords[:, 0])


class TestExampleData:
    def test_profile_spot_values(self):
        x = np.array([-1.0, -0.5, 0.0, 0.25, 0.5, 1.0])
        got = sens._saturating_profile(x)
        want = [-1.0, -1.0, 0.0, math.sin(0.25 * math.pi), 1.0, 1.0]
        assert np.allclose(got, want, atol=1e-15)
        assert sens._saturating_profile_d1(0.0) == pytest.approx(math.pi)
        assert sens._saturating_profile_d1(0.7) == 0.0
        assert sens._saturating_profile_d2(0.25) == pytest.approx(
            -math.pi**2 * math.sin(0.25 * math.pi)
        )

    def test_solution_vanishes_on_circle(self):
        theta = np.linspace(-math.pi, math.pi, 257)
        vals = sens._example_solution(np.cos(theta), np.sin(theta))
        assert np.abs(vals).max() < 1e-14

    def test_load_is_negative_laplacian_of_solution(self):
        # five-point stencil at interior points away from the profile kinks
        rng = np.random.default_rng(20240722)
        pts = []
        while len(pts) < 50:
            x, y = rng.uniform(-0.9, 0.9, size=2)
            if x * x + y * y < 0.81 and abs(abs(x) - 0.5) > 0.05:
                pts.append((x, y))
        h = 1e-4
        for x, y in pts:
            u = sens._example_solution
            lap = (
                u(x + h, y) + u(x - h, y) + u(x, y + h) + u(x, y - h) - 4.0 * u(x, y)
            ) / h**2
            assert -lap == pytest.approx(sens._example_load(x, y), rel=1e-4, abs=1e-4)

    def test_family_data_at_zero_and_derivatives(self, example):
        fam = example.family
        assert fam.g(0.0) == 1.0
        assert fam.g(0.3) == pytest.approx(1.3)
        assert fam.g0p == 1.0
        assert fam.f(0.0)(0.3, 0.1) == pytest.approx(sens._example_load(0.3, 0.1))
        assert fam.f(0.5)(0.3, 0.1) == pytest.approx(
            math.exp(0.5) * sens._example_load(0.3, 0.1)
        )
        assert fam.k(0.2)(0.6, 0.0) == pytest.approx(1.2)
        assert fam.k0p(0.6, 0.0) == 1.0
        assert fam.f_x_breaks == (-0.5, 0.5)

    def test_expected_region_map(self, example):
        cases = [
            (-0.5 * math.pi, RegionTag.S_D),
            (-math.pi / 3.0, RegionTag.S_D),
            (-math.pi / 3.0 + 1e-9, RegionTag.S_MINUS),
            (0.0, RegionTag.S_MINUS),
            (math.pi / 4.0, RegionTag.S_MINUS),
            (math.pi, RegionTag.S_PLUS),
            (-0.75 * math.pi, RegionTag.S_PLUS),
            (-2.0 * math.pi / 3.0, RegionTag.S_PLUS),
            (-2.0 * math.pi / 3.0 + 1e-9, RegionTag.S_D),
        ]
        for theta, want in cases:
            assert example.expected_region(theta) is want, theta

    def test_make_mesh_orders(self, example):
        assert example.make_mesh(24, fe_order=1).fe_order == 1
        mesh = example.make_mesh(24)
        assert mesh.fe_order == 2
        assert mesh.generator_params["n_boundary"] == 24
        assert example.n_boundary == 190


class TestClassifyPartition:
    def synthetic(self, mesh, u0_contact, flux_contact, g0=1.0, **kw):
        contact = _contact_dofs(mesh)
        values = np.zeros(mesh.n_dofs)
        values[contact] = u0_contact
        flux = np.full(len(contact), 0.0) + flux_contact
        return sens.classify_partition(DiscreteField(mesh, values), flux, g0, **kw)

    def test_sliding_wins_over_flux(self, example):
        mesh = example.make_mesh(24, fe_order=1)
        part = self.synthetic(mesh, 0.5, 1.0)
        assert all(t is RegionTag.S_N for t in part.tags)

    def test_flux_bands(self, example):
        mesh = example.make_mesh(24, fe_order=1)
        for flux, want in [(1.0, RegionTag.S_MINUS), (-1.0, RegionTag.S_PLUS), (0.0, RegionTag.S_D)]:
            part = self.synthetic(mesh, 0.0, flux)
            assert all(t is want for t in part.tags), flux

    def test_scale_invariance(self, example):
        mesh = example.make_mesh(24, fe_order=1)
        contact = _contact_dofs(mesh)
        rng = np.random.default_rng(42)
        u0 = np.where(rng.uniform(size=len(contact)) < 0.3, 0.2, 0.0)
        flux = rng.choice([1.0, -1.0, 0.3], size=len(contact))
        base = self.synthetic(mesh, u0, flux)
        for alpha in (0.5, 2.0, 10.0):
            scaled = self.synthetic(
                mesh,
                alpha * u0,
                alpha * flux,
                g0=alpha,
                eps_u=alpha * base.eps_u,
                eps_g=alpha * base.eps_g,
            )
            assert all(a is b for a, b in zip(scaled.tags, base.tags))

    def test_excess_flux_warns_then_raises(self, example):
        mesh = example.make_mesh(24, fe_order=1)
        with pytest.warns(RuntimeWarning):
            part = self.synthetic(mesh, 0.0, 1.0 + 2e-3, eps_g=1e-3)
        assert all(t is RegionTag.S_MINUS for t in part.tags)
        with pytest.raises(ValueError):
            self.synthetic(mesh, 0.0, 1.2, eps_g=1e-3)

    def test_input_validation(self, example):
        mesh = example.make_mesh(24, fe_order=1)
        contact = _contact_dofs(mesh)
        field = DiscreteField(mesh, np.zeros(mesh.n_dofs))
        with pytest.raises(ValueError):
            sens.classify_partition(field, np.zeros(len(contact) - 1), 1.0)
        with pytest.raises(ValueError):
            sens.classify_partition(field, np.zeros(len(contact)), -1.0)
        with pytest.raises(ValueError):
            sens.classify_partition(field, np.zeros(len(contact)), 1.0, eps_u=0.0)
        with pytest.raises(ValueError):
            sens.classify_partition(field, np.zeros(len(contact)), 1.0, eps_g=-1.0)

    def test_counts_and_mask(self, example):
        mesh = example.make_mesh(24, fe_order=1)
        part = self.synthetic(mesh, 0.0, 1.0)
        counts = part.counts()
        assert counts["SM"] == len(part.contact_dofs)
        assert counts["SN"] == counts["SD"] == counts["SP"] == 0
        assert part.mask(RegionTag.S_MINUS).all()
        assert not part.mask(RegionTag.S_D).any()


class TestAveragedContactFlux:
    def test_constant_is_fixed_point(self, small_mesh):
        contact = _contact_dofs(small_mesh)
        flux = np.full(len(contact), 3.7)
        out = sens.averaged_contact_flux(small_mesh, contact, flux, passes=3)
        assert np.allclose(out, 3.7, atol=1e-13)

    def test_damps_alternating_component(self, small_mesh):
        contact = _contact_dofs(small_mesh)
        coords = small_mesh.dof_coords()[contact]
        theta = np.arctan2(coords[:, 1], coords[:, 0])
        order = np.argsort(theta)
        flux = np.empty(len(contact))
        flux[order] = np.where(np.arange(len(contact)) % 2 == 0, 1.0, -1.0)
        one = sens.averaged_contact_flux(small_mesh, contact, flux, passes=1)
        two = sens.averaged_contact_flux(small_mesh, contact, flux, passes=2)
        assert np.abs(one).max() < 0.75 * np.abs(flux).max()
        assert np.abs(two).max() < np.abs(one).max()

    def test_zero_passes_returns_input(self, small_mesh):
        contact = _contact_dofs(small_mesh)
        rng = np.random.default_rng(7)
        flux = rng.normal(size=len(contact))
        out = sens.averaged_contact_flux(small_mesh, contact, flux, passes=0)
        assert np.array_equal(out, flux)
        assert out is not flux

    def test_shape_mismatch_raises(self, small_mesh):
        contact = _contact_dofs(small_mesh)
        with pytest.raises(ValueError):
            sens.averaged_contact_flux(small_mesh, contact, np.zeros(len(contact) + 1))


class TestDerivativeProblem:
    def make_partition(self, example, flux_value):
        mesh = example.make_mesh(24, fe_order=1)
        contact = _contact_dofs(mesh)
        values = np.zeros(mesh.n_dofs)
        flux = np.full(len(contact), flux_value)
        return sens.classify_partition(DiscreteField(mesh, values), flux, 1.0)

    def test_zero_threshold_derivative_gives_zero_datum(self, example):
        part = self.make_partition(example, 0.4)
        fam = sens.PerturbationFamily(
            f=example.family.f, k=example.family.k, g=example.family.g,
            f0p=example.family.f0p, k0p=example.family.k0p, g0p=0.0,
            f_x_breaks=example.family.f_x_breaks,
        )
        prob = sens.derivative_problem(part, fam)
        assert np.array_equal(prob.h, np.zeros(len(part.contact_dofs)))

    def test_datum_is_flux_ratio_clamped(self, example):
        part = self.make_partition(example, 0.4)
        prob = sens.derivative_problem(part, example.family)
        assert np.allclose(prob.h, 0.4, atol=1e-15)
        beyond = self.make_partition(example, 1.0)
        flux = beyond.flux0 * (1.0 + 5e-4)  # discretization overshoot
        prob = sens.derivative_problem(beyond, example.family, flux0=flux)
        assert np.all(np.abs(prob.h) <= 1.0)

    def test_threshold_rescaling_leaves_datum_invariant(self, example):
        part = self.make_partition(example, 0.4)
        base = sens.derivative_problem(part, example.family)
        doubled = sens.derivative_problem(
            part, example.family, flux0=2.0 * part.flux0, g0=2.0 * part.g0
        )
        assert np.allclose(doubled.h, base.h, atol=1e-15)

    def test_tags_forwarded(self, example):
        part = self.make_partition(example, 1.0)
        prob = sens.derivative_problem(part, example.family)
        assert all(a is b for a, b in zip(prob.tags, part.tags))

    def test_invalid_threshold_raises(self, example):
        part = self.make_partition(example, 0.4)
        with pytest.raises(ValueError):
            sens.derivative_problem(part, example.family, g0=np.zeros(len(part.g0)))


class TestSolveFamilyMember:
    def test_negative_parameter_raises(self, example, small_mesh):
        with pytest.raises(ValueError):
            sens.solve_family_member(example.family, -0.1, small_mesh)

    def test_matches_direct_solve(self, example, small_mesh):
        fam = example.family
        rep = sens.solve_family_member(fam, 0.2, small_mesh)
        prob = TrescaProblem.build(
            small_mesh, fam.f(0.2), fam.k(0.2), fam.g(0.2), f_x_breaks=fam.f_x_breaks
        )
        direct = solve_tresca_switching(prob)
        assert rep.converged and direct.converged
        assert np.allclose(rep.solution.values, direct.solution.values, atol=1e-14)


class TestConvergenceStudy:
    def test_t_list_validation(self, example, small_mesh):
        for bad in ([], [0.4, -0.1], [0.0], [0.2, 0.4], [0.4, 0.4]):
            with pytest.raises(ValueError):
                sens.convergence_study(example.family, bad, small_mesh)

    def test_errors_decay_quadratically(self, coarse_study):
        res = coarse_study
        assert res.converged.all()
        assert (res.err_h1 > 0.0).all()
        assert (np.diff(res.err_h1) < 0.0).all()
        # halving t above the floor shrinks the error by roughly four
        ratio = res.err_h1[0] / res.err_h1[1]
        assert 3.0 < ratio < 6.0
        assert 1.5 < res.slope < 2.6

    def test_seminorm_bounded_by_full_norm(self, coarse_study):
        assert (coarse_study.err_h1_semi <= coarse_study.err_h1 + 1e-15).all()

    def test_floor_rows_flagged_not_failed(self, coarse_study):
        res = coarse_study
        assert list(res.floor_flag) == [False, False, False, True]
        assert res.converged[res.floor_flag].all()
        # flagged rows are excluded from the default fit but kept in the table
        assert len(res.t_values) == 4

    def test_fit_slope_subranges(self, coarse_study):
        res = coarse_study
        full = res.fit_slope(t_min=0.02)
        upper = res.fit_slope(t_min=0.15)
        assert not math.isnan(full) and not math.isnan(upper)
        assert upper == pytest.approx(
            np.polyfit(np.log(res.t_values[:2]), np.log(res.err_h1[:2]), 1)[0]
        )
        # fewer than two points in the window: no fit
        assert math.isnan(res.fit_slope(t_min=0.39, t_max=0.41))

    def test_csv_format_and_determinism(self, coarse_study):
        text = coarse_study.to_csv()
        lines = text.strip().split("\n")
        assert lines[0] == "t,err_h1,err_h1_semi,converged"
        assert len(lines) == 1 + len(coarse_study.t_values)
        for i, line in enumerate(lines[1:]):
            t_s, e_s, s_s, c_s = line.split(",")
            assert float(t_s) == coarse_study.t_values[i]
            assert float(e_s) == pytest.approx(coarse_study.err_h1[i], rel=1e-14)
            assert c_s in ("true", "false")
        assert coarse_study.to_csv() == text

    def test_report_files(self, coarse_study, tmp_path):
        csv = tmp_path / "study.csv"
        gp = tmp_path / "study.dat"
        txt = tmp_path / "study.txt"
        coarse_study.write_csv(str(csv))
        coarse_study.write_gnuplot(str(gp))
        coarse_study.write_text(str(txt))
        assert csv.read_text() == coarse_study.to_csv()
        gp_lines = gp.read_text().strip().split("\n")
        assert gp_lines[0] == "# t err_h1"
        assert len(gp_lines) == 1 + int(coarse_study.converged.sum())
        report = txt.read_text()
        assert report.startswith("convergence study\n")
        assert "partition:" in report and "slope:" in report

    def test_discrete_reference_close_to_analytic(self, example, small_mesh, coarse_study):
        # with a discrete reference the contact trace is discretization
        # error, not exact zeros, so eps_u must sit above that error
        opts = sens.StudyOptions(eps_g=2e-2, eps_u=1e-2)
        res = sens.convergence_study(example.family, [0.4, 0.2], small_mesh, opts)
        assert res.converged.all()
        assert np.allclose(res.err_h1, coarse_study.err_h1[:2], rtol=0.25)
        counts = res.partition.counts()
        assert counts == coarse_study.partition.counts()

    def test_params_record_inputs(self, coarse_study, small_mesh):
        params = coarse_study.params
        assert params["fe_order"] == 2
        assert params["n_dofs"] == small_mesh.n_dofs
        assert params["flux_smoothing_passes"] == 2
        assert params["eps_g"] == pytest.approx(2e-2)


class TestReferenceResolution:
    def test_partition_matches_expected_arcs(self, example, reference_study):
        part = reference_study.partition
        theta = contact_angles(part)
        interfaces = np.asarray(example.interface_angles)
        per_interface = {float(a): 0 for a in interfaces}
        for th, tag in zip(theta, part.tags):
            if tag is example.expected_region(th):
                continue
            gap = np.abs(np.angle(np.exp(1j * (th - interfaces))))
            near = float(interfaces[int(np.argmin(gap))])
            assert gap.min() < 0.05, f"mismatch far from any interface at theta={th:.4f}"
            per_interface[near] += 1
        assert all(c <= 1 for c in per_interface.values()), per_interface

    def test_no_sliding_region(self, reference_study):
        assert reference_study.partition.counts()["SN"] == 0

    def test_derivative_solve_feasible(self, reference_study):
        res = reference_study
        assert res.derivative_report.converged
        resid = complementarity_residuals(res.derivative_report)
        assert resid.max_violation <= 1e-8
        part = res.partition
        up = res.derivative.values[part.contact_dofs]
        assert np.all(up[part.mask(RegionTag.S_MINUS)] <= 0.0)
        assert np.all(up[part.mask(RegionTag.S_PLUS)] >= 0.0)
        assert np.all(up[part.mask(RegionTag.S_D)] == 0.0)

    def test_expansion_error_small_at_moderate_parameter(self, reference_study):
        err = reference_study.err_h1[0]
        assert reference_study.converged.all()
        assert 0.005 < err < 0.03  # around 0.014 at t = 0.1


class TestTraceProjection:
    def test_projected_trace_vanishes_where_raw_does_not(self, example, small_mesh):
        contact = _contact_dofs(small_mesh)
        traced = sens._trace_values(small_mesh, contact, example.u0)
        assert np.abs(traced).max() < 1e-13
        raw = interpolate(small_mesh, example.u0).values[contact]
        assert np.abs(raw).max() > 1e-4  # midpoints sit on chords, off the circle


class TestLinearResponseRatio:
    def test_decays_with_parameter(self, example, small_mesh):
        r_coarse = sens.linear_response_ratio(example.family, small_mesh, 1e-2)
        r_fine = sens.linear_response_ratio(example.family, small_mesh, 1e-3)
        assert r_coarse < 1e-2
        assert r_fine < 0.3 * r_coarse

    def test_rejects_nonpositive_parameter(self, example, small_mesh):
        with pytest.raises(ValueError):
            sens.linear_response_ratio(example.family, small_mesh, 0.0)
