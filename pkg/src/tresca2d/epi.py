"""One-dimensional convex calculus for weighted absolute-value functionals.

This module is the scalar kernel behind the friction solvers and the
sensitivity analysis.  Everything revolves around the family

    G(t, x) = g(t) * |x|,       g(t) > 0,

where ``g`` is a differentiable threshold family (``g0 = g(0)``,
``g0prime = g'(0)``).  Provided are the proximal operator and
subdifferential of ``lam*|.|``, the classification of the directions in
which the second-order difference quotient

    D2q(t, z) = (g(t)*|x + t*z| - g(t)*|x| - t*y*z) / t**2

stays bounded as t -> 0 (a cone ``K`` depending on the base point ``x``
and the slope ``y``), the pointwise limit of the quotient on that cone,
and a sampling check that the quotient converges to the limit inside
``K`` and blows up like ``c/t`` outside it.

All functions are pure; extended-real results use ``math.inf``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

__all__ = [
    "ConeK",
    "GPointData",
    "MoscoReport",
    "classify_K",
    "cone_contains",
    "delta2_abs",
    "delta2_G",
    "epi_derivative_G",
    "mosco_pointwise_check",
    "prox_abs_scaled",
    "subdiff_abs",
]

#: relative slack used when validating that (x, y) is a feasible pairing,
#: i.e. y lies in g0 * subdiff|.|(x); float noise in y/g0 must not reject
#: an exactly-saturated slope.
_FEAS_RTOL = 1e-9


class ConeK(enum.Enum):
    """Directions with a bounded second-order quotient at (x, y)."""

    FULL_LINE = "full_line"   # x != 0: every direction is fine
    NON_NEG = "non_neg"       # x = 0, slope saturated at +g0: z >= 0
    NON_POS = "non_pos"       # x = 0, slope saturated at -g0: z <= 0
    ZERO_ONLY = "zero_only"   # x = 0, slope strictly inside (-g0, g0)


def prox_abs_scaled(lam: float, x: float) -> float:
    """Proximal operator of ``lam*|.|`` (soft threshold).

    Returns the unique minimizer of ``lam*|y| + 0.5*(y - x)**2``, i.e.
    ``sign(x) * max(|x| - lam, 0)``.

    Parameters
    ----------
    lam : float
        Nonnegative threshold.
    x : float
        Point the operator is applied to.

    Raises
    ------
    ValueError
        If ``lam`` is negative.
    """
    if lam < 0.0:
        raise ValueError(f"prox threshold must be >= 0, got {lam}")
    return math.copysign(max(abs(x) - lam, 0.0), x)


def subdiff_abs(x: float) -> tuple[float, float]:
    """Subdifferential of ``|.|`` at ``x`` as a closed interval (lo, hi).

    ``{sign(x)}`` when ``x != 0`` and ``[-1, 1]`` at the kink.
    """
    if x > 0.0:
        return (1.0, 1.0)
    if x < 0.0:
        return (-1.0, -1.0)
    return (-1.0, 1.0)


def classify_K(x: float, y_over_g: float) -> ConeK:
    """Classify the bounded-quotient cone at base point ``x``, slope ratio ``y/g0``.

    Parameters
    ----------
    x : float
        Base point.
    y_over_g : float
        Slope divided by the threshold; must lie in ``[-1, 1]``, and must
        equal ``sign(x)`` when ``x != 0`` (otherwise the pair is not a
        valid point/subgradient pairing).

    Returns
    -------
    ConeK
        ``FULL_LINE`` if ``x != 0``; at ``x = 0``: ``NON_NEG`` for a
        slope saturated at +1, ``NON_POS`` for -1, ``ZERO_ONLY`` strictly
        inside.

    Raises
    ------
    ValueError
        If the pair is infeasible.
    """
    if abs(y_over_g) > 1.0 + _FEAS_RTOL:
        raise ValueError(
            f"slope ratio {y_over_g} outside [-1, 1]: not a subgradient pairing")
    if x != 0.0:
        if abs(y_over_g - math.copysign(1.0, x)) > _FEAS_RTOL:
            raise ValueError(
                f"x = {x} requires slope ratio sign(x), got {y_over_g}")
        return ConeK.FULL_LINE
    if y_over_g >= 1.0 - _FEAS_RTOL:
        return ConeK.NON_NEG
    if y_over_g <= -1.0 + _FEAS_RTOL:
        return ConeK.NON_POS
    return ConeK.ZERO_ONLY


def cone_contains(cone: ConeK, z: float) -> bool:
    """Whether direction ``z`` belongs to the cone."""
    if cone is ConeK.FULL_LINE:
        return True
    if cone is ConeK.NON_NEG:
        return z >= 0.0
    if cone is ConeK.NON_POS:
        return z <= 0.0
    return z == 0.0


@dataclass(frozen=True)
class GPointData:
    """A base point of the threshold family ``G(t, x) = g(t)*|x|``.

    Attributes
    ----------
    x : float
        Base point.
    y : float
        Slope at the base point; must satisfy ``y in g0*subdiff|.|(x)``.
    g0 : float
        Threshold at t = 0 (positive).
    g0prime : float
        Derivative of the threshold family at t = 0.
    g_of_t : callable
        Scalar family ``t -> g(t)``; ``g_of_t(0)`` must equal ``g0``.
    """

    x: float
    y: float
    g0: float
    g0prime: float
    g_of_t: Callable[[float], float]

    def __post_init__(self) -> None:
        if not self.g0 > 0.0:
            raise ValueError(f"threshold g0 must be positive, got {self.g0}")
        ratio = self.y / self.g0
        if abs(ratio) > 1.0 + _FEAS_RTOL:
            raise ValueError(
                f"y = {self.y} is not in g0*subdiff|.|(x): |y/g0| = {abs(ratio)} > 1")
        if self.x != 0.0 and abs(ratio - math.copysign(1.0, self.x)) > _FEAS_RTOL:
            raise ValueError(
                f"x = {self.x} != 0 requires y = g0*sign(x), got y/g0 = {ratio}")

    @property
    def ratio(self) -> float:
        """Slope ratio ``y/g0``."""
        return self.y / self.g0

    @property
    def cone(self) -> ConeK:
        """Bounded-quotient cone at this point."""
        return classify_K(self.x, self.ratio)


def delta2_abs(x: float, w: float, z: float, t: float) -> float:
    """Second-order difference quotient of ``|.|`` at ``(x, w)`` in direction ``z``.

    ``(|x + t*z| - |x| - t*w*z) / t**2`` with ``w`` a subgradient of
    ``|.|`` at ``x``.  Always nonnegative by the subgradient inequality.
    """
    if not t > 0.0:
        raise ValueError(f"quotient parameter t must be positive, got {t}")
    return (abs(x + t * z) - abs(x) - t * w * z) / (t * t)


def delta2_G(p: GPointData, z: float, t: float) -> float:
    """Second-order difference quotient of the threshold family at ``p``.

    ``(g(t)*|x + t*z| - g(t)*|x| - t*y*z) / t**2``.  Splits exactly as

        g(t) * delta2_abs(x, y/g0, z, t) + ((g(t) - g0)/t) * (y/g0) * z,

    which the tests assert to 1e-12.
    """
    if not t > 0.0:
        raise ValueError(f"quotient parameter t must be positive, got {t}")
    gt = p.g_of_t(t)
    return (gt * abs(p.x + t * z) - gt * abs(p.x) - t * p.y * z) / (t * t)


def epi_derivative_G(p: GPointData, z: float) -> float:
    """Pointwise limit of ``delta2_G(p, z, t)`` as ``t -> 0``.

    ``+inf`` outside the cone ``classify_K(x, y/g0)``; on the cone the
    limit is the linear term ``g0prime * (y/g0) * z``.
    """
    if not cone_contains(p.cone, z):
        return math.inf
    return p.g0prime * p.ratio * z


@dataclass
class MoscoReport:
    """Outcome of a pointwise convergence check of the second-order quotient.

    For a direction inside the cone the quotient must approach the finite
    limit (``converged``), and ``rate`` reports the observed log-log decay
    order of the error (``None`` when the error is identically zero).  For
    a direction outside the cone the quotient must blow up like ``c/t``
    with a positive fitted ``c`` (``diverged``).  ``liminf_ok`` records
    that the deficit ``max(0, limit - quotient)`` vanishes along the grid,
    which is the computable sample of the lower epigraph inequality (the
    quotient may approach its limit from below).
    """

    x: float
    y: float
    z: float
    t_grid: tuple[float, ...]
    values: tuple[float, ...]
    limit: float
    in_cone: bool
    converged: bool
    diverged: bool
    liminf_ok: bool
    rate: float | None = None
    divergence_coefficient: float | None = None
    errors: tuple[float, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        """Whether the sampled behaviour matches the predicted limit."""
        return self.liminf_ok and (self.converged if self.in_cone else self.diverged)

    def to_text(self) -> str:
        """Render the report as an aligned text table."""
        lines = [
            f"point x = {self.x:g}, slope y = {self.y:g}, direction z = {self.z:g}",
            f"limit: {'+inf (outside cone)' if not self.in_cone else format(self.limit, 'g')}",
            f"{'t':>12} {'quotient':>18} {'error':>18}",
        ]
        for t, q in zip(self.t_grid, self.values):
            err = abs(q - self.limit) if self.in_cone else math.inf
            lines.append(f"{t:>12.6g} {q:>18.10g} "
                         f"{err if math.isfinite(err) else float('inf'):>18.10g}")
        if self.in_cone:
            rate = "exact" if self.rate is None else f"{self.rate:.3f}"
            lines.append(f"converged: {self.converged} (observed error order {rate})")
        else:
            lines.append(f"diverged: {self.diverged} "
                         f"(fitted quotient ~ {self.divergence_coefficient:.6g}/t)")
        lines.append(f"lower bound quotient >= limit held at all samples: {self.liminf_ok}")
        return "\n".join(lines)


def mosco_pointwise_check(
    p: GPointData,
    z: float,
    t_grid: Sequence[float] = (0.1, 0.05, 0.025, 0.0125),
) -> MoscoReport:
    """Sample the second-order quotient along a constant direction sequence.

    Evaluates ``delta2_G(p, z, t)`` on a descending grid and compares with
    ``epi_derivative_G(p, z)``: inside the cone the error must vanish (its
    observed log-log order is reported), outside it the quotient must grow
    like ``c/t`` with fitted ``c > 0``.  This is a sampling check along one
    sequence, not a proof over all converging sequences.

    Parameters
    ----------
    p : GPointData
        Base point of the family.
    z : float
        Direction to test.
    t_grid : sequence of float
        Strictly descending positive parameters, at least 4 of them.
    """
    ts = tuple(float(t) for t in t_grid)
    if len(ts) < 4:
        raise ValueError(f"need at least 4 grid points, got {len(ts)}")
    if any(not 0.0 < t <= 1.0 for t in ts):
        raise ValueError(f"grid must lie in (0, 1], got {ts}")
    if any(later >= earlier for earlier, later in zip(ts, ts[1:])):
        raise ValueError(f"grid must be strictly descending, got {ts}")

    values = tuple(delta2_G(p, z, t) for t in ts)
    limit = epi_derivative_G(p, z)
    in_cone = math.isfinite(limit)

    converged = False
    diverged = False
    rate: float | None = None
    coeff: float | None = None
    errors: tuple[float, ...] = ()

    if in_cone:
        errors = tuple(abs(q - limit) for q in values)
        scale = 1.0 + abs(limit)
        converged = errors[-1] <= max(1e-8 * scale, 0.25 * errors[0])
        positive = [(t, e) for t, e in zip(ts, errors) if e > 0.0]
        if len(positive) >= 2:
            log_t = [math.log(t) for t, _ in positive]
            log_e = [math.log(e) for _, e in positive]
            n = len(positive)
            mt = sum(log_t) / n
            me = sum(log_e) / n
            denom = sum((lt - mt) ** 2 for lt in log_t)
            if denom > 0.0:
                rate = sum((lt - mt) * (le - me)
                           for lt, le in zip(log_t, log_e)) / denom
        # sampled lower epigraph inequality: the deficit below the limit
        # must vanish along the grid (the quotient may approach the limit
        # from below, e.g. for threshold families curving downward)
        deficits = tuple(max(0.0, limit - q) for q in values)
        liminf_ok = deficits[-1] <= max(1e-9 * scale, 0.25 * deficits[0])
    else:
        # fit q ~ c/t through the origin in the variable 1/t
        inv_t = [1.0 / t for t in ts]
        coeff = sum(q * it for q, it in zip(values, inv_t)) / sum(it * it for it in inv_t)
        increasing = all(b >= a for a, b in zip(values, values[1:]))
        diverged = coeff > 0.0 and increasing and values[-1] > values[0]
        liminf_ok = True  # +inf limit: the lower inequality is vacuous at samples

    return MoscoReport(
        x=p.x, y=p.y, z=z, t_grid=ts, values=values, limit=limit,
        in_cone=in_cone, converged=converged, diverged=diverged,
        liminf_ok=liminf_ok, rate=rate, divergence_coefficient=coeff,
        errors=errors,
    )
