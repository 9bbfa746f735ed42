"""One tolerance pack for the whole library.

All numeric thresholds live here so they can be inspected or scaled in one
place.  The environment variable ``CYCLESIGHT_TOL`` (a positive float) scales
every tolerance multiplicatively; 1.0 is the default pack.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, fields


@dataclass(frozen=True)
class Tolerances:
    # relative tolerance for matrix predicates (symmetric, triangular, ...)
    predicate_rel: float = 1e-10
    # discriminant window for Jordan classification
    jordan_disc: float = 1e-10
    # residual bound for QR/Cholesky reconstruction checks
    factor_residual: float = 1e-12
    # relative drift allowed in trace/det across one similarity step
    similarity_rel: float = 1e-12
    # PSD acceptance: asymmetry and negative-eigenvalue slack
    psd_rel: float = 1e-12
    # quadric membership, relative to squared norm
    quadric: float = 1e-9
    # projective equality of homogeneous vectors
    proj_equal: float = 1e-9
    # oriented tangency |B(p,q)| relative to norm product
    tangency: float = 1e-8
    # gestures: smallest legal circle radius (world units)
    min_radius: float = 1e-6
    # gestures: smallest legal endpoint separation (radians)
    min_endpoint_sep: float = 1e-6

    def scaled(self, factor: float) -> "Tolerances":
        if factor <= 0.0:
            raise ValueError("tolerance scale must be positive")
        return Tolerances(**{f.name: getattr(self, f.name) * factor for f in fields(self)})


DEFAULT = Tolerances()

_active: Tolerances | None = None


def active() -> Tolerances:
    """Tolerance pack in effect, honouring CYCLESIGHT_TOL on first use."""
    global _active
    if _active is None:
        raw = os.environ.get("CYCLESIGHT_TOL")
        _active = DEFAULT if raw is None else DEFAULT.scaled(float(raw))
    return _active


def reset() -> None:
    """Forget the cached pack (used by tests that toggle the env var)."""
    global _active
    _active = None
