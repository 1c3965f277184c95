"""Tangent-circle constructions on triangle sides.

For each side of a triangle, an arc of angular measure theta is erected
internally and a circle is inscribed in the opposite vertex angle,
externally tangent to the arc.  The package constructs these circles,
their inner and outer Apollonius circles, evaluates the closed forms
for every radius, length, and barycentric coordinate involved, and
verifies the accompanying body of synthetic theorems numerically over
randomized triangles.
"""

from .kernel import Circle2, GeometryError, Line2, Point2, Tolerance
from .triangle import DegenerateTriangle, Triangle, TriangleMetrics
from .construction import (
    AjimaConfiguration,
    ArcGeometry,
    ExtendedCaseOnly,
    ThetaOutOfRange,
    ajima_oracle,
    ajima_radius,
    arc_radius,
    build_arc,
    build_gamma,
    gamma_point_chase,
    t_of_theta,
    variant_circles,
)
from .apollonius import (
    ApolloniusResult,
    Triad,
    algebraic_tangent_circles,
    apollonius_result,
    build_triad,
    generic_apollonius_oracle,
    inner_apollonius,
    inner_tangent_circle,
    miyamoto_tangency,
    outer_apollonius,
    rho_inner,
    rho_outer,
    soddy_line,
)

__version__ = "0.1.0"

__all__ = [
    "AjimaConfiguration", "ApolloniusResult", "ArcGeometry", "Circle2",
    "DegenerateTriangle", "ExtendedCaseOnly", "GeometryError", "Line2",
    "Point2", "ThetaOutOfRange", "Tolerance", "Triad", "Triangle",
    "TriangleMetrics", "ajima_oracle", "ajima_radius",
    "algebraic_tangent_circles", "apollonius_result", "arc_radius",
    "build_arc", "build_gamma", "build_triad", "gamma_point_chase",
    "generic_apollonius_oracle", "inner_apollonius", "inner_tangent_circle",
    "miyamoto_tangency", "outer_apollonius", "rho_inner", "rho_outer",
    "soddy_line", "t_of_theta", "variant_circles",
]
