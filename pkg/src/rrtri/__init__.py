"""Integer-sided triangles with an integer circumradius/inradius ratio.

Exact search for rational points on the curves

    E_N: v^2 = u^3 + 2(2N^2 - 2N - 1) u^2 + (4N + 1) u
    F_M: v^2 = u^3 + (6M^2 + 12M + 4) u^2 + (9M^4 + 4M^3) u

whose bounded ("egg") component carries triangles with R/r = N
(respectively R/r = 2 + 1/M).
"""

from rrtri.curve import INFINITY, Component, Curve, Point
from rrtri.transform import RatioTarget
from rrtri.triangle import Triangle

__all__ = ["INFINITY", "Component", "Curve", "Point", "RatioTarget", "Triangle"]
__version__ = "0.1.0"
