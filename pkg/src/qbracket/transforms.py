"""Numerical transformation-law suites.  Each suite evaluates both sides at
every point and returns a TransformReport."""

from __future__ import annotations

import cmath
import math

from .cocycle import cocycle_contour, cocycle_double_sum, eichler_difference
from .errors import DomainError
from .modular import (
    M_value,
    berndt_rhs,
    eichler_value,
    eta_value,
    h_star_value,
    laplacian_fd,
    maass_E0_complex,
    maass_E_neg,
    psi_value,
    theorem3_shift_rhs,
)
from .reports import TransformPoint, TransformReport

# generic points with 0.4 <= y <= 3
DEFAULT_POINTS = (0.3 + 0.8j, -0.45 + 0.4j, 0.1 + 1.7j, 0.77 + 3.0j, -0.2 + 1.1j)


def _theorem3_shift(p, z):
    k, t = p["k"], p["t"]
    corrected = p.get("form") == "corrected"
    lhs = M_value(k, t, z + 1) - M_value(k, t, z)
    return lhs, theorem3_shift_rhs(k, t, z, include_m0=corrected)


def _theorem3_S(p, z):
    k, t = p["k"], p["t"]
    sign = 1 if p.get("form") == "corrected" else -1
    lhs = M_value(k, t, z, sign)
    return lhs, (t * z) ** (2 * k) * M_value(k, t, -1 / (t * t * z), sign)


def _corollary4_T(p, z):
    k = p["k"]
    return h_star_value(k, z + 1), cmath.exp(-1j * math.pi / 12) * h_star_value(k, z)


def _corollary4_S(p, z):
    k = p["k"]
    lhs = h_star_value(k, -1 / z) - h_star_value(k, z) / (z ** (2 * k) * cmath.sqrt(-1j * z))
    return lhs, psi_value(k, z) / eta_value(-1 / z)


def _berndt(p, z):
    k = p["k"]
    a = 2 * k + 2
    return eichler_value(a, z) - z ** (2 * k) * eichler_value(a, -1 / z), berndt_rhs(k, z)


def _cocycle(p, z):
    a = p["a"]
    rep = p.get("rep", "double-sum")
    rhs = cocycle_contour(a, z) if rep == "contour" else cocycle_double_sum(a, z)
    return eichler_difference(a, z), rhs


def _E0_S(p, z):
    return maass_E0_complex(1, z), maass_E0_complex(1, -1 / z)


def _E0_T(p, z):
    t = p.get("t", 1)
    return maass_E0_complex(t, z + 1), maass_E0_complex(t, z)


def _Eneg_S(p, z):
    k = p["k"]
    return maass_E_neg(k, 1, -1 / z), z ** (2 - 2 * k) * maass_E_neg(k, 1, z)


def _E0_laplacian(p, z):
    t = p.get("t", 1)
    return laplacian_fd(0, lambda w: maass_E0_complex(t, w), z), -3 / math.pi


def _Eneg_laplacian(p, z):
    k = p["k"]
    t = p.get("t", 1)
    return laplacian_fd(2 - 2 * k, lambda w: maass_E_neg(k, t, w), z), 0.0


SUITES = {
    "theorem3-shift": _theorem3_shift,
    "theorem3-S": _theorem3_S,
    "corollary4-T": _corollary4_T,
    "corollary4-S": _corollary4_S,
    "berndt": _berndt,
    "theorem6-cocycle": _cocycle,
    "theorem2-E0-S": _E0_S,
    "theorem2-E0-T": _E0_T,
    "theorem2-Eneg-S": _Eneg_S,
    "theorem2-E0-laplacian": _E0_laplacian,
    "theorem2-Eneg-laplacian": _Eneg_laplacian,
}


def verify_transformations(suite: str, params: dict, points=DEFAULT_POINTS, tol: float = 1e-10) -> TransformReport:
    if suite not in SUITES:
        raise DomainError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    if tol <= 0:
        raise DomainError("tol must be positive")
    fn = SUITES[suite]
    out = []
    for z in points:
        z = complex(z)
        lhs, rhs = fn(params, z)
        out.append(TransformPoint(z, complex(lhs), complex(rhs)))
    return TransformReport(suite, dict(params), out, tol)
