"""Exact univariate polynomials over Q.

Used as the coefficient ring of q-series when a second formal variable is in
play: alpha in the Nekrasov-Okounkov check, x in the Han-Ji bivariate identity.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Immutable polynomial sum_i coeffs[i] * var**i with Fraction coefficients."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var: str = "x"):
        self.coeffs = _trim([Fraction(c) for c in coeffs])
        self.var = var

    @classmethod
    def constant(cls, c, var: str = "x") -> Poly:
        return cls([c], var)

    @classmethod
    def monomial(cls, degree: int, c=1, var: str = "x") -> Poly:
        return cls([0] * degree + [c], var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def _lift(self, other) -> Poly | None:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Rational)):
            return Poly([other], self.var)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return Poly([c * other for c in self.coeffs], self.var)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly([], self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # only division by units of Q[x], i.e. nonzero constants
        if isinstance(other, Poly):
            if other.degree != 0:
                return NotImplemented
            other = other.coeffs[0]
        if not isinstance(other, (int, Rational)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("polynomial division by zero")
        return Poly([c / other for c in self.coeffs], self.var)

    def __pow__(self, e: int) -> Poly:
        if e < 0:
            raise ValueError("negative powers of polynomials are not polynomials")
        out, base = Poly([1], self.var), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(terms).replace("+ -", "- ")


def AlphaPolynomial(coeffs=()) -> Poly:
    """Polynomial in the formal parameter alpha."""
    return Poly(coeffs, "alpha")


def XPolynomial(coeffs=()) -> Poly:
    return Poly(coeffs, "x")
