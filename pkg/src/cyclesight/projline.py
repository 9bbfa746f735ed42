"""Real projective line: homogeneous coordinates [x : y] and the 2x2 action.

``[x : y]`` stands for the extended real x/y, with [1 : 0] the point at
infinity.  Equality is projective (up to nonzero scale); the canonical
representative has unit norm and positive first nonzero coordinate.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

_ZERO_EPS = 0.0  # exact zeros only; noise is handled by almost_equal


@dataclass(frozen=True)
class ProjPoint:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError("projective coordinates must be finite")
        if self.x == 0.0 and self.y == 0.0:
            raise ValueError("[0 : 0] is not a projective point")

    @staticmethod
    def from_value(v: float) -> "ProjPoint":
        if math.isinf(v):
            return ProjPoint(1.0, 0.0)
        return ProjPoint(v, 1.0)

    def value(self) -> float:
        """Extended-real value x/y (inf at the point at infinity)."""
        if self.y == 0.0:
            return math.inf
        return self.x / self.y

    def normalized(self) -> "ProjPoint":
        n = math.hypot(self.x, self.y)
        x, y = self.x / n, self.y / n
        lead = x if abs(x) > _ZERO_EPS else y
        if lead < 0.0:
            x, y = -x, -y
        return ProjPoint(x + 0.0, y + 0.0)

    def almost_equal(self, other: "ProjPoint", tol: float = 1e-12) -> bool:
        cross = self.x * other.y - self.y * other.x
        scale = math.hypot(self.x, self.y) * math.hypot(other.x, other.y)
        return abs(cross) <= tol * scale
