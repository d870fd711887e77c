"""Structured pass/fail records returned by the verifiers."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .poly import Poly


def format_exact(x) -> str:
    if isinstance(x, Poly):
        return repr(x)
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def format_complex(z: complex, digits: int = 12) -> str:
    z = complex(z)
    if z.imag == 0:
        return f"{z.real:.{digits}g}"
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real:.{digits}g}{sign}{abs(z.imag):.{digits}g}i"


@dataclass
class VerificationReport:
    """Result of an exact coefficient-by-coefficient comparison."""

    identity: str
    params: dict
    order: int
    passed: bool
    first_discrepancy: tuple[int, Any, Any] | None = None
    notes: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        doc: dict = {
            "identity": self.identity,
            "params": self.params,
            "order": self.order,
            "pass": self.passed,
        }
        if self.first_discrepancy is not None:
            n, lhs, rhs = self.first_discrepancy
            doc["first_discrepancy"] = {"n": n, "lhs": format_exact(lhs), "rhs": format_exact(rhs)}
        if self.notes:
            doc["notes"] = list(self.notes)
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)


@dataclass
class TransformPoint:
    z: complex
    lhs: complex
    rhs: complex

    @property
    def residual(self) -> float:
        return abs(self.lhs - self.rhs)


@dataclass
class TransformReport:
    """Both sides of a numerical identity at each evaluation point."""

    identity: str
    params: dict
    points: list[TransformPoint]
    tol: float

    @property
    def max_residual(self) -> float:
        return max((p.residual for p in self.points), default=0.0)

    @property
    def passed(self) -> bool:
        return self.max_residual < self.tol

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        pts = sorted(self.points, key=lambda p: (p.z.real, p.z.imag))
        return {
            "identity": self.identity,
            "params": self.params,
            "points": [
                {
                    "z": format_complex(p.z),
                    "lhs": format_complex(p.lhs),
                    "rhs": format_complex(p.rhs),
                    "residual": f"{p.residual:.3e}",
                }
                for p in pts
            ],
            "tol": self.tol,
            "pass": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)
