"""Closed-form ordinary least squares for a straight line."""

from __future__ import annotations

import math
from typing import Iterable

from .errors import DegenerateFit


def ols_line(points: Iterable[tuple[float, float]]) -> tuple[float, float, float]:
    """Return (slope, intercept, rms_residual) of y = slope * x + intercept.

    Points are sorted before summation so the result does not depend on
    input order, bit for bit.
    """
    pts = sorted((float(x), float(y)) for x, y in points)
    if len(pts) < 2:
        raise DegenerateFit("need at least two points")
    n = len(pts)
    mx = math.fsum(x for x, _ in pts) / n
    my = math.fsum(y for _, y in pts) / n
    sxx = math.fsum((x - mx) ** 2 for x, _ in pts)
    if sxx == 0.0:
        raise DegenerateFit("all x values are equal")
    sxy = math.fsum((x - mx) * (y - my) for x, y in pts)
    slope = sxy / sxx
    intercept = my - slope * mx
    rms = math.sqrt(math.fsum((y - (slope * x + intercept)) ** 2 for x, y in pts) / n)
    return slope, intercept, rms
