"""Pressure-driven duct flow with Navier slip.

Closed-form and spectral solvers for the steady, starting and pulsatile
flux through disks, rectangles, equilateral triangles, near-circular
ellipses and regular polygons, plus sweeps that check how those shapes
compare at equal area.
"""
from .disk import lambda1_disk, q_periodic_disk, q_steady_disk, q_transient_disk
from .errors import (BracketingError, ConvergenceError, DomainError, InsufficientModesError, NoSignChangeError,
                     SlipflowError, UnavailableError, UnknownIdError)
from .geomfn import Disk, EllipseUnitArea, EquilateralTriangle, Rectangle, RegularPolygon, summary
from .rect import lambda1_rect, lambda1_square, q_steady_rect, q_transient_rect
from .tri import lambda1_tri, q_steady_tri

__version__ = "0.1.0"

__all__ = [
    "BracketingError", "ConvergenceError", "Disk", "DomainError", "EllipseUnitArea", "EquilateralTriangle",
    "InsufficientModesError", "NoSignChangeError", "Rectangle", "RegularPolygon", "SlipflowError",
    "UnavailableError", "UnknownIdError", "lambda1_disk", "lambda1_rect", "lambda1_square", "lambda1_tri",
    "q_periodic_disk", "q_steady_disk", "q_steady_rect", "q_steady_tri", "q_transient_disk", "q_transient_rect",
    "summary",
]
