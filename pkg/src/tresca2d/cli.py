"""Command-line driver: mesh generation, solves, studies, and checks.

Four subcommands cover the package's workflows end to end::

    tresca2d mesh --n-boundary 190 --paper-labels --out disk.txt
    tresca2d solve tresca --paper-example --t 0
    tresca2d study --paper-example --out-csv table.csv
    tresca2d epi-check --cases 20

Exit codes are a stable contract: 0 success, 1 usage error, 2 data or mesh
error, 3 solver nonconvergence or a failed numerical check battery.

Coefficients are given as mini-expressions in ``x`` and ``y`` (``t`` as well
for family data): numbers, ``+ - * /``, unary minus, ``sin``, ``cos``,
``exp``, ``abs``, and ``clamp(v, lo, hi)``.  The built-in example behind
``--paper-example`` reproduces the package's reference configuration.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import epi
from .expressions import ExpressionError, parse_expression
from .fem import DiscreteField, interpolate, h1_norm
from .mesh import (
    AngleRange,
    BoundaryLabel,
    Mesh2D,
    MeshError,
    generate_unit_disk,
    p2_enrich,
    read_mesh,
    write_mesh,
)
from .sensitivity import (
    PerturbationFamily,
    StudyOptions,
    builtin_disk_example,
    convergence_study,
    derivative_problem,
)
from .solvers import (
    RegionTag,
    SignoriniProblem,
    SolverError,
    TrescaProblem,
    _contact_dofs,
    solve_dirichlet_neumann,
    solve_signorini_switching,
    solve_tresca_switching,
)

__all__ = ["main", "epi_battery"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_SOLVER = 3

DEFAULT_T_VALUES = (0.6, 0.4, 0.2, 0.1, 0.075, 0.05, 0.025, 0.01)


class _UsageError(Exception):
    """Semantic flag-value problem; maps to exit code 1."""


class _DataError(Exception):
    """Bad input data (mesh, expression, file); maps to exit code 2."""


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage failures exit with code 1, not 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# shared helpers
# ---------------------------------------------------------------------------


def _parse_or_data_error(text: str, variables=("x", "y")):
    try:
        return parse_expression(text, variables)
    except ExpressionError as exc:
        raise _DataError(str(exc)) from exc


def _expr_flag(value, default):
    # `value or default` would also swallow an explicitly given empty string
    return default if value is None else value


def _load_mesh(args) -> Mesh2D:
    if getattr(args, "paper_example", False):
        example = builtin_disk_example()
        return example.make_mesh(args.n_boundary, fe_order=args.fe_order)
    if not args.mesh:
        raise _UsageError("either --paper-example or --mesh PATH is required")
    try:
        mesh = read_mesh(args.mesh)
    except (OSError, MeshError, ValueError) as exc:
        raise _DataError(f"could not read mesh {args.mesh!r}: {exc}") from exc
    return p2_enrich(mesh) if args.fe_order == 2 else mesh


def _write_field(path: str, field: DiscreteField) -> None:
    coords = field.mesh.dof_coords()
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("# i x y value\n")
        for i in range(field.mesh.n_dofs):
            fh.write(
                f"{i} {coords[i, 0]:.17g} {coords[i, 1]:.17g} {field.values[i]:.17g}\n"
            )


def _write_partition_records(path: str, contact_dofs, tags, h) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("# p dof tag h\n")
        for dof, tag, hi in zip(contact_dofs, tags, h):
            fh.write(f"p {int(dof)} {tag.value} {float(hi):.17g}\n")


def _read_partition_records(path: str, mesh):
    """Parse ``p <dof> <TAG> <h>`` records and align them with the mesh."""
    records = {}
    try:
        with open(path, encoding="ascii") as fh:
            for ln, line in enumerate(fh, start=1):
                parts = line.split()
                if not parts or parts[0] != "p":
                    continue
                if len(parts) != 4:
                    raise _DataError(f"{path}:{ln}: expected 'p <dof> <TAG> <h>'")
                try:
                    dof, tag, hval = int(parts[1]), RegionTag(parts[2]), float(parts[3])
                except ValueError as exc:
                    raise _DataError(f"{path}:{ln}: {exc}") from exc
                records[dof] = (tag, hval)
    except OSError as exc:
        raise _DataError(f"could not read partition {path!r}: {exc}") from exc
    contact = _contact_dofs(mesh)
    missing = [d for d in contact.tolist() if d not in records]
    extra = sorted(set(records) - set(contact.tolist()))
    if missing or extra:
        raise _DataError(
            f"partition does not match the mesh contact dofs "
            f"({len(missing)} missing, {len(extra)} unknown)"
        )
    tags = np.empty(len(contact), dtype=object)
    h = np.empty(len(contact))
    for i, dof in enumerate(contact.tolist()):
        tags[i], h[i] = records[dof]
    return tags, h


def _expression_family(args) -> PerturbationFamily:
    needed = ("f", "k", "g", "f0p", "k0p", "g0p")
    missing = [name for name in needed if getattr(args, name) is None]
    if missing:
        raise _UsageError(
            "a custom family needs all of --f, --k, --g, --f0p, --k0p, --g0p "
            f"(missing: {', '.join('--' + m for m in missing)})"
        )
    f_xyz = _parse_or_data_error(args.f, ("x", "y", "t"))
    k_xyz = _parse_or_data_error(args.k, ("x", "y", "t"))
    g_xyz = _parse_or_data_error(args.g, ("x", "y", "t"))
    return PerturbationFamily(
        f=lambda t: (lambda x, y: f_xyz(x, y, t)),
        k=lambda t: (lambda x, y: k_xyz(x, y, t)),
        g=lambda t: (lambda x, y: g_xyz(x, y, t)),
        f0p=_parse_or_data_error(args.f0p),
        k0p=_parse_or_data_error(args.k0p),
        g0p=_parse_or_data_error(args.g0p),
        f_x_breaks=tuple(args.f_x_breaks or ()),
    )


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_mesh(args) -> int:
    if args.paper_labels:
        ranges = list(builtin_disk_example().label_ranges)
    elif args.arc:
        names = {
            "dirichlet": BoundaryLabel.DIRICHLET,
            "neumann": BoundaryLabel.NEUMANN,
            "contact": BoundaryLabel.TRESCA,
        }
        ranges = []
        for spec_str in args.arc:
            parts = spec_str.split(":")
            if len(parts) != 3 or parts[0] not in names:
                raise _UsageError(
                    f"bad --arc {spec_str!r}; expected label:theta_min:theta_max "
                    "with label one of dirichlet, neumann, contact"
                )
            try:
                rng = AngleRange(float(parts[1]), float(parts[2]))
            except ValueError as exc:
                raise _DataError(str(exc)) from exc
            ranges.append((rng, names[parts[0]]))
    else:
        raise _UsageError("one of --paper-labels or --arc is required")
    try:
        mesh = generate_unit_disk(args.n_boundary, ranges)
        write_mesh(mesh, args.out)
    except MeshError as exc:
        raise _DataError(str(exc)) from exc
    print(
        f"mesh: {mesh.n_vertices} vertices, {mesh.n_triangles} triangles "
        f"-> {args.out}"
    )
    return EXIT_OK


def _solve_report(args, mesh):
    example = builtin_disk_example() if args.paper_example else None
    if args.kind == "dn":
        if example is not None:
            fam = example.family
            f, k, h = fam.f(args.t), fam.k(args.t), 0.0
            breaks = fam.f_x_breaks
        else:
            f = _parse_or_data_error(_expr_flag(args.f, "0"))
            k = _parse_or_data_error(_expr_flag(args.k, "0"))
            h = _parse_or_data_error(_expr_flag(args.h, "0"))
            breaks = tuple(args.f_x_breaks or ())
        return solve_dirichlet_neumann(mesh, f, k, h, args.tol, breaks)
    if args.kind == "tresca":
        if example is not None:
            fam = example.family
            f, k, g = fam.f(args.t), fam.k(args.t), fam.g(args.t)
            breaks = fam.f_x_breaks
        else:
            f = _parse_or_data_error(_expr_flag(args.f, "0"))
            k = _parse_or_data_error(_expr_flag(args.k, "0"))
            g = _parse_or_data_error(_expr_flag(args.g, "1"))
            breaks = tuple(args.f_x_breaks or ())
        try:
            problem = TrescaProblem.build(mesh, f, k, g, f_x_breaks=breaks)
        except ValueError as exc:
            raise _DataError(str(exc)) from exc
        return solve_tresca_switching(
            problem, max_iters=args.max_iters, tol=args.tol, lin_tol=args.lin_tol
        )
    # signorini: contact data comes from a partition file
    if not args.partition:
        raise _UsageError("solve signorini requires --partition PATH")
    tags, h = _read_partition_records(args.partition, mesh)
    if example is not None:
        f, k = example.family.f0p, example.family.k0p
        breaks = example.family.f_x_breaks
    else:
        f = _parse_or_data_error(_expr_flag(args.f, "0"))
        k = _parse_or_data_error(_expr_flag(args.k, "0"))
        breaks = tuple(args.f_x_breaks or ())
    try:
        problem = SignoriniProblem.build(mesh, f, k, tags, h, f_x_breaks=breaks)
    except ValueError as exc:
        raise _DataError(str(exc)) from exc
    return solve_signorini_switching(
        problem, max_iters=args.max_iters, tol=args.tol, lin_tol=args.lin_tol
    )


def cmd_solve(args) -> int:
    mesh = _load_mesh(args)
    report = _solve_report(args, mesh)
    text = report.to_text()
    if not report.converged:
        sys.stderr.write(text + "\nsolver did not converge\n")
        return EXIT_SOLVER
    print(text)
    if args.paper_example and args.kind == "tresca" and args.t == 0.0:
        example = builtin_disk_example()
        exact = interpolate(mesh, example.u0)
        diff = DiscreteField(mesh, report.solution.values - exact.values)
        print(f"h1_error_vs_analytic: {h1_norm(diff):.9e}")
    if args.out_report:
        with open(args.out_report, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text + "\n")
    if args.out_field:
        _write_field(args.out_field, report.solution)
    return EXIT_OK


def cmd_study(args) -> int:
    t_values = list(args.t_values) if args.t_values else list(DEFAULT_T_VALUES)
    if not t_values:
        raise _UsageError("t list must not be empty")
    if any(t <= 0.0 for t in t_values) or any(
        b >= a for a, b in zip(t_values, t_values[1:])
    ):
        raise _UsageError("t values must be positive and strictly decreasing")

    if args.paper_example:
        example = builtin_disk_example()
        family = example.family
        u0 = example.u0
    else:
        family = _expression_family(args)
        u0 = None
    mesh = _load_mesh(args)
    opts = StudyOptions(
        u0=u0,
        eps_u=args.eps_u,
        eps_g=args.eps_g,
        flux_smoothing_passes=args.smoothing_passes,
        max_iters=args.max_iters,
        tol=args.tol,
        lin_tol=args.lin_tol,
    )
    try:
        result = convergence_study(family, t_values, mesh, opts)
    except ValueError as exc:
        raise _DataError(str(exc)) from exc

    csv_text = result.to_csv()
    if args.out_csv:
        with open(args.out_csv, "w", encoding="ascii", newline="\n") as fh:
            fh.write(csv_text)
    else:
        sys.stdout.write(csv_text)
    print(f"slope: {result.slope:.6f}")
    if args.out_gnuplot:
        result.write_gnuplot(args.out_gnuplot)
    if args.out_report:
        result.write_text(args.out_report)
    if args.write_partition:
        problem = derivative_problem(result.partition, family)
        _write_partition_records(
            args.write_partition, result.partition.contact_dofs,
            result.partition.tags, problem.h,
        )
    return EXIT_OK if bool(result.converged.all()) else EXIT_SOLVER


# ---------------------------------------------------------------------------
# epi-calculus check battery
# ---------------------------------------------------------------------------


def _feasible_point(rng, g_shift=0.0):
    """Random feasible base point; optionally misreport g0prime by g_shift."""
    g0 = rng.uniform(0.7, 1.5)
    g0p = rng.uniform(-1.0, 1.0)
    quad = rng.uniform(-0.5, 0.5)
    kind = rng.integers(0, 3)
    if kind == 0:  # off the kink: slope saturated
        x = rng.uniform(0.2, 2.0) * rng.choice([-1.0, 1.0])
        y = g0 * math.copysign(1.0, x)
    elif kind == 1:  # at the kink, saturated slope
        x, y = 0.0, g0 * rng.choice([-1.0, 1.0])
    else:  # at the kink, interior slope
        x, y = 0.0, g0 * rng.uniform(-0.9, 0.9)
    return epi.GPointData(
        x=x,
        y=y,
        g0=g0,
        g0prime=g0p + g_shift,
        g_of_t=lambda t, a=g0, b=g0p, c=quad: a + b * t + c * t * t,
    )


def _cone_direction(rng, p) -> float:
    mag = rng.uniform(0.5, 1.5)
    cone = p.cone
    if cone is epi.ConeK.FULL_LINE:
        return mag * rng.choice([-1.0, 1.0])
    if cone is epi.ConeK.NON_NEG:
        return mag
    if cone is epi.ConeK.NON_POS:
        return -mag
    return 0.0


def epi_battery(
    cases: int = 20,
    seed: int = 20240813,
    t_grid=(0.1, 0.05, 0.025, 0.0125),
    g0prime_shift: float = 0.0,
) -> tuple[bool, str]:
    """Run the convex-calculus property battery; returns (ok, report text).

    ``g0prime_shift`` misreports the threshold derivative by a constant
    (a negative control: any nonzero shift must make the convergence
    checks fail for points with a saturated slope).
    """
    if cases < 1:
        raise ValueError(f"cases must be >= 1, got {cases}")
    rng = np.random.default_rng(seed)
    checks: list[tuple[str, bool, str]] = []

    closed_form = [
        ("prox(1, 3) = 2", epi.prox_abs_scaled(1.0, 3.0) == 2.0),
        ("prox(1, -3) = -2", epi.prox_abs_scaled(1.0, -3.0) == -2.0),
        ("prox(1, 0.5) = 0 (dead zone)", epi.prox_abs_scaled(1.0, 0.5) == 0.0),
        ("prox(0.7, 2.3) = 1.6", abs(epi.prox_abs_scaled(0.7, 2.3) - 1.6) < 1e-12),
        ("subdiff(2) = {1}", epi.subdiff_abs(2.0) == (1.0, 1.0)),
        ("subdiff(-0.1) = {-1}", epi.subdiff_abs(-0.1) == (-1.0, -1.0)),
        ("subdiff(0) = [-1, 1]", epi.subdiff_abs(0.0) == (-1.0, 1.0)),
        ("K(1.5, 1) full line", epi.classify_K(1.5, 1.0) is epi.ConeK.FULL_LINE),
        ("K(0, 1) nonnegative", epi.classify_K(0.0, 1.0) is epi.ConeK.NON_NEG),
        ("K(0, -1) nonpositive", epi.classify_K(0.0, -1.0) is epi.ConeK.NON_POS),
        ("K(0, 0.3) zero only", epi.classify_K(0.0, 0.3) is epi.ConeK.ZERO_ONLY),
    ]
    for name, ok in closed_form:
        checks.append((name, ok, ""))

    pairs = rng.uniform(-5.0, 5.0, size=(10_000, 2))
    lams = rng.uniform(0.0, 3.0, size=10_000)
    lipschitz = all(
        abs(epi.prox_abs_scaled(lam, a) - epi.prox_abs_scaled(lam, b))
        <= abs(a - b) + 1e-15
        for lam, (a, b) in zip(lams, pairs)
    )
    checks.append(("prox 1-Lipschitz on 10^4 random pairs", lipschitz, ""))

    # t bounded away from 0: the quotient divides by t**2, so float noise
    # in the numerator is amplified by up to 1/t**2
    split_ok = True
    worst_split = 0.0
    for _ in range(10_000):
        p = _feasible_point(rng)
        z = rng.uniform(-2.0, 2.0)
        t = rng.uniform(0.1, 1.0)
        gt = p.g_of_t(t)
        split = gt * epi.delta2_abs(p.x, p.ratio, z, t) + ((gt - p.g0) / t) * p.ratio * z
        gap = abs(epi.delta2_G(p, z, t) - split)
        worst_split = max(worst_split, gap)
        split_ok = split_ok and gap <= 1e-12 + 1e-12 * abs(split)
    checks.append(
        ("quotient split identity on 10^4 random inputs", split_ok,
         f"worst {worst_split:.3e}"),
    )

    convergence_ok = 0
    for _ in range(cases):
        p = _feasible_point(rng, g_shift=g0prime_shift)
        z = _cone_direction(rng, p)
        report = epi.mosco_pointwise_check(p, z, t_grid)
        convergence_ok += bool(report.ok and report.in_cone)
    checks.append(
        (f"quotient converges to the epi-derivative ({cases} feasible cases)",
         convergence_ok == cases, f"{convergence_ok}/{cases}"),
    )

    divergence_ok = 0
    min_coeff = math.inf
    for _ in range(cases):
        g0 = rng.uniform(0.7, 1.5)
        side = rng.choice([-1.0, 1.0])
        p = epi.GPointData(
            x=0.0, y=g0 * side, g0=g0, g0prime=rng.uniform(-1.0, 1.0),
            g_of_t=lambda t, a=g0: a + 0.3 * t,
        )
        z = -side * rng.uniform(0.5, 1.5)  # outside the cone
        report = epi.mosco_pointwise_check(p, z, t_grid)
        coeff = report.divergence_coefficient or 0.0
        min_coeff = min(min_coeff, coeff)
        divergence_ok += bool(report.ok and not report.in_cone and coeff >= 0.5)
    checks.append(
        (f"quotient blows up like c/t with c >= 0.5 ({cases} infeasible cases)",
         divergence_ok == cases, f"min c = {min_coeff:.3f}"),
    )

    ok = all(flag for _, flag, _ in checks)
    lines = ["epi-calculus check battery"]
    for name, flag, detail in checks:
        suffix = f" ({detail})" if detail else ""
        lines.append(f"{'PASS' if flag else 'FAIL'}  {name}{suffix}")
    lines.append(f"battery: {'PASS' if ok else 'FAIL'}")
    return ok, "\n".join(lines) + "\n"


def cmd_epi_check(args) -> int:
    if args.cases < 1:
        raise _UsageError(f"--cases must be >= 1, got {args.cases}")
    grid = tuple(args.t_grid) if args.t_grid else (0.1, 0.05, 0.025, 0.0125)
    if (
        len(grid) < 4
        or any(not 0.0 < t <= 1.0 for t in grid)
        or any(b >= a for a, b in zip(grid, grid[1:]))
    ):
        raise _UsageError(
            "--t-grid needs at least 4 strictly decreasing values in (0, 1]"
        )
    ok, text = epi_battery(
        cases=args.cases, seed=args.seed, t_grid=grid,
        g0prime_shift=args.inject_g0prime_shift,
    )
    sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_SOLVER


# ---------------------------------------------------------------------------
# parser assembly
# ---------------------------------------------------------------------------


def _add_mesh_source(sub, with_paper_example=True):
    sub.add_argument("--mesh", help="path to a mesh file written by the mesh command")
    if with_paper_example:
        sub.add_argument(
            "--paper-example", action="store_true",
            help="use the built-in disk configuration (data and labels)",
        )
    sub.add_argument(
        "--n-boundary", type=int, default=190,
        help="boundary points for --paper-example meshes (default 190)",
    )
    sub.add_argument(
        "--fe-order", type=int, choices=(1, 2), default=2,
        help="finite element order (default 2)",
    )


def _add_solver_params(sub):
    sub.add_argument("--max-iters", type=int, default=200)
    sub.add_argument("--tol", type=float, default=1e-10)
    sub.add_argument("--lin-tol", type=float, default=1e-12)


def build_parser() -> _Parser:
    parser = _Parser(
        prog="tresca2d",
        description="Scalar contact problems on the unit disk: solves, "
        "sensitivity studies, and convex-calculus checks.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    mesh_p = subs.add_parser("mesh", help="generate and write a disk mesh")
    mesh_p.add_argument("--n-boundary", type=int, required=True)
    mesh_p.add_argument(
        "--paper-labels", action="store_true",
        help="use the built-in example's boundary arcs",
    )
    mesh_p.add_argument(
        "--arc", action="append",
        help="label:theta_min:theta_max (label: dirichlet, neumann, contact); repeatable",
    )
    mesh_p.add_argument("--out", default="mesh.txt")
    mesh_p.set_defaults(func=cmd_mesh)

    solve_p = subs.add_parser("solve", help="run a single solve")
    solve_p.add_argument("kind", choices=("dn", "tresca", "signorini"))
    _add_mesh_source(solve_p)
    solve_p.add_argument("--t", type=float, default=0.0,
                         help="family parameter for --paper-example data")
    solve_p.add_argument("--f", help="volume load expression in x, y")
    solve_p.add_argument("--k", help="Neumann traction expression in x, y")
    solve_p.add_argument("--h", help="contact flux expression (dn only)")
    solve_p.add_argument("--g", help="friction threshold expression (tresca only)")
    solve_p.add_argument("--f-x-breaks", type=float, nargs="*",
                         help="vertical lines where the load is only piecewise smooth")
    solve_p.add_argument("--partition",
                         help="partition records for signorini (from study --write-partition)")
    solve_p.add_argument("--out-report", help="write the solve report to this path")
    solve_p.add_argument("--out-field", help="write the dof table 'i x y value'")
    _add_solver_params(solve_p)
    solve_p.set_defaults(func=cmd_solve)

    study_p = subs.add_parser("study", help="run the sensitivity convergence study")
    _add_mesh_source(study_p)
    study_p.add_argument("--t-values", type=float, nargs="+",
                         help=f"parameter sweep (default {' '.join(map(str, DEFAULT_T_VALUES))})")
    study_p.add_argument("--f", help="family volume load expression in x, y, t")
    study_p.add_argument("--k", help="family traction expression in x, y, t")
    study_p.add_argument("--g", help="family threshold expression in x, y, t")
    study_p.add_argument("--f0p", help="derivative of the load at t = 0 (x, y)")
    study_p.add_argument("--k0p", help="derivative of the traction at t = 0 (x, y)")
    study_p.add_argument("--g0p", help="derivative of the threshold at t = 0 (x, y)")
    study_p.add_argument("--f-x-breaks", type=float, nargs="*")
    study_p.add_argument("--eps-u", type=float, default=None,
                         help="sliding-detection band (default: relative to max |u0|)")
    study_p.add_argument("--eps-g", type=float, default=None,
                         help="threshold-grazing band (default: 2e-3 * max g0)")
    study_p.add_argument("--smoothing-passes", type=int, default=2,
                         help="one-ring flux averaging passes (default 2)")
    study_p.add_argument("--out-csv", help="write the CSV table here instead of stdout")
    study_p.add_argument("--out-gnuplot", help="write a two-column 't err' file")
    study_p.add_argument("--out-report", help="write the text report")
    study_p.add_argument("--write-partition",
                         help="write 'p <dof> <TAG> <h>' records of the classified partition")
    _add_solver_params(study_p)
    study_p.set_defaults(func=cmd_study)

    epi_p = subs.add_parser("epi-check", help="run the convex-calculus check battery")
    epi_p.add_argument("--cases", type=int, default=20,
                       help="random cases per propertied check (default 20)")
    epi_p.add_argument("--seed", type=int, default=20240813)
    epi_p.add_argument("--t-grid", type=float, nargs="+",
                       help="descending quotient parameters (default 0.1 0.05 0.025 0.0125)")
    epi_p.add_argument("--inject-g0prime-shift", type=float, default=0.0,
                       help="misreport the threshold derivative by this much (negative control)")
    epi_p.set_defaults(func=cmd_epi_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        sys.stderr.write(f"tresca2d: error: {exc}\n")
        return EXIT_USAGE
    except _DataError as exc:
        sys.stderr.write(f"tresca2d: error: {exc}\n")
        return EXIT_DATA
    except SolverError as exc:
        sys.stderr.write(f"tresca2d: solver error: {exc}\n")
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
