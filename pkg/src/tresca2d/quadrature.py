"""Quadrature rules on the reference triangle and reference edge.

Triangle rules are symmetric Gauss rules (1, 3, 6 and 12 points, exact to
degrees 1, 2, 4 and 6) on the reference triangle with vertices (0,0),
(1,0), (0,1); weights sum to the reference area 1/2.  Edge rules are
Gauss–Legendre on the unit interval [0, 1] (an n-point rule is exact to
degree 2n-1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["QuadratureRule", "triangle_rule", "edge_rule"]


@dataclass(frozen=True)
class QuadratureRule:
    """Points and weights on a reference domain.

    Attributes
    ----------
    points : ndarray
        Shape (n, 2) reference-triangle coordinates, or (n, 1) for the
        unit interval.
    weights : ndarray
        Shape (n,); strictly positive, summing to the reference measure
        (1/2 for the triangle, 1 for the interval).
    degree : int
        Largest polynomial degree integrated exactly.
    """

    points: np.ndarray
    weights: np.ndarray
    degree: int

    def __post_init__(self) -> None:
        if np.any(self.weights <= 0.0):
            raise ValueError("quadrature weights must be strictly positive")


# Symmetric triangle rules, given as barycentric orbits: (weight, multiplicity
# pattern).  Weights here sum to 1 and are scaled by the reference area 1/2
# when the rule is built.
_TRIANGLE_ORBITS: dict[int, list[tuple[float, tuple[float, float, float]]]] = {
    1: [(1.0, (1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0))],
    2: [
        (1.0 / 3.0, (2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0)),
    ],
    4: [
        (0.223381589678011, (0.108103018168070, 0.445948490915965, 0.445948490915965)),
        (0.109951743655322, (0.816847572980459, 0.091576213509771, 0.091576213509771)),
    ],
    6: [
        (0.116786275726379, (0.501426509658179, 0.249286745170910, 0.249286745170910)),
        (0.050844906370207, (0.873821971016996, 0.063089014491502, 0.063089014491502)),
        (0.082851075618374, (0.053145049844816, 0.310352451033785, 0.636502499121399)),
    ],
}


def _orbit_points(bary: tuple[float, float, float]) -> list[tuple[float, float, float]]:
    """Distinct cyclic/symmetric images of a barycentric point."""
    a, b, c = bary
    if a == b == c:
        return [bary]
    if b == c:
        return [(a, b, b), (b, a, b), (b, b, a)]
    # three distinct coordinates: full orbit of 6 permutations
    return [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)]


def triangle_rule(degree: int) -> QuadratureRule:
    """Symmetric rule on the reference triangle exact to ``degree``.

    Available degrees: 1, 2, 4, 6.  Returned weights sum to 1/2, so for a
    physical triangle the integral is ``|det J| * sum(w_q * f(p_q))``.
    """
    if degree not in _TRIANGLE_ORBITS:
        raise ValueError(
            f"no triangle rule of degree {degree}; available: "
            f"{sorted(_TRIANGLE_ORBITS)}")
    pts: list[tuple[float, float]] = []
    wts: list[float] = []
    for weight, bary in _TRIANGLE_ORBITS[degree]:
        for l0, l1, l2 in _orbit_points(bary):
            pts.append((l1, l2))  # reference coords (x, y) = (lambda1, lambda2)
            wts.append(weight)
    points = np.array(pts, dtype=float)
    weights = 0.5 * np.array(wts, dtype=float)
    return QuadratureRule(points=points, weights=weights, degree=degree)


def edge_rule(n_points: int = 3) -> QuadratureRule:
    """Gauss–Legendre rule with ``n_points`` nodes on the unit interval.

    Exact to degree ``2*n_points - 1``; weights sum to 1.
    """
    if n_points < 1:
        raise ValueError(f"need at least one edge quadrature point, got {n_points}")
    nodes, weights = np.polynomial.legendre.leggauss(n_points)
    return QuadratureRule(
        points=(0.5 * (nodes + 1.0)).reshape(-1, 1),
        weights=0.5 * weights,
        degree=2 * n_points - 1,
    )
