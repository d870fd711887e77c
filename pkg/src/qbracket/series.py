"""Truncated formal power series in q with exact coefficients.

One engine serves three coefficient rings: Fraction, and :class:`~qbracket.poly.Poly`
in alpha or in x.  A series may carry a single rational q-offset (a multiple of
1/24 in practice), i.e. it represents q^offset * sum_n c_n q^n.
"""

from __future__ import annotations

import json
from fractions import Fraction
from numbers import Rational

from .errors import AlignmentError, UnitError
from .poly import Poly

_SCALARS = (int, Rational, Poly)


class TruncatedQSeries:
    __slots__ = ("coeffs", "offset")

    def __init__(self, coeffs, offset=0):
        self.coeffs = tuple(c if isinstance(c, Poly) else Fraction(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the q^0 coefficient")
        self.offset = Fraction(offset)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int, offset=0) -> TruncatedQSeries:
        return cls([1] + [0] * order, offset)

    @classmethod
    def from_function(cls, fn, order: int, offset=0) -> TruncatedQSeries:
        return cls([fn(n) for n in range(order + 1)], offset)

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> TruncatedQSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedQSeries(self.coeffs[: order + 1], self.offset)

    def shift_offset(self, delta) -> TruncatedQSeries:
        return TruncatedQSeries(self.coeffs, self.offset + Fraction(delta))

    # -- ring operations --

    def _aligned(self, other: TruncatedQSeries) -> int:
        if self.offset != other.offset:
            raise AlignmentError(f"offsets differ: {self.offset} vs {other.offset}")
        return min(self.order, other.order)

    def __add__(self, other):
        if isinstance(other, _SCALARS):
            return TruncatedQSeries((self.coeffs[0] + other,) + self.coeffs[1:], self.offset)
        if not isinstance(other, TruncatedQSeries):
            return NotImplemented
        N = self._aligned(other)
        return TruncatedQSeries([self.coeffs[n] + other.coeffs[n] for n in range(N + 1)], self.offset)

    __radd__ = __add__

    def __neg__(self) -> TruncatedQSeries:
        return TruncatedQSeries([-c for c in self.coeffs], self.offset)

    def __sub__(self, other):
        if isinstance(other, (_SCALARS + (TruncatedQSeries,))):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, _SCALARS):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return TruncatedQSeries([c * other for c in self.coeffs], self.offset)
        if not isinstance(other, TruncatedQSeries):
            return NotImplemented
        N = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [a[0] * 0 for _ in range(N + 1)]
        for i in range(N + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(N + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return TruncatedQSeries(out, self.offset + other.offset)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            return TruncatedQSeries([c / other for c in self.coeffs], self.offset)
        if not isinstance(other, TruncatedQSeries):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, _SCALARS):
            return self.inverse() * other
        return NotImplemented

    def inverse(self) -> TruncatedQSeries:
        """1/self by the coefficient recurrence against the constant term."""
        d = self.coeffs
        if not d[0] or (isinstance(d[0], Poly) and d[0].degree != 0):
            raise UnitError(f"constant term {d[0]!r} is not a unit")
        inv = [Fraction(1) / d[0]]
        for n in range(1, self.order + 1):
            acc = sum((d[j] * inv[n - j] for j in range(1, n + 1) if d[j]), inv[0] * 0)
            inv.append(-acc / d[0])
        return TruncatedQSeries(inv, -self.offset)

    def __pow__(self, e: int) -> TruncatedQSeries:
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        out = TruncatedQSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        # offset of base**e is e*offset; the loop above already accumulates it
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedQSeries):
            return NotImplemented
        return self.offset == other.offset and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.offset, self.coeffs))

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:6])
        more = ", ..." if self.order >= 6 else ""
        return f"TruncatedQSeries(offset={self.offset}, order={self.order}, [{head}{more}])"

    # -- serialization --

    def to_json_dict(self) -> dict:
        if any(isinstance(c, Poly) for c in self.coeffs):
            raise TypeError("only rational-coefficient series serialize to JSON")
        return {
            "offset": _frac_str(self.offset),
            "order": self.order,
            "coeffs": [_frac_str(c) for c in self.coeffs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, doc: dict) -> TruncatedQSeries:
        coeffs = [Fraction(c) for c in doc["coeffs"]]
        if len(coeffs) != doc["order"] + 1:
            raise ValueError("order does not match the number of coefficients")
        return cls(coeffs, Fraction(doc["offset"]))

    @classmethod
    def from_json(cls, text: str) -> TruncatedQSeries:
        return cls.from_json_dict(json.loads(text))


def _frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def series_log(A: TruncatedQSeries) -> TruncatedQSeries:
    """Formal logarithm of a series with constant term 1 and no q-offset."""
    a = A.coeffs
    if A.offset != 0 or a[0] != 1:
        raise UnitError("log needs offset 0 and constant term 1")
    zero = a[0] * 0
    L = [zero]
    # n a_n = sum_{j=1}^{n} j L_j a_{n-j}
    for n in range(1, A.order + 1):
        acc = n * a[n]
        for j in range(1, n):
            if L[j] and a[n - j]:
                acc = acc - j * L[j] * a[n - j]
        L.append(acc / n)
    return TruncatedQSeries(L)


def series_exp(A: TruncatedQSeries) -> TruncatedQSeries:
    """Formal exponential of a series with constant term 0 and no q-offset."""
    a = A.coeffs
    if A.offset != 0 or a[0] != 0:
        raise UnitError("exp needs offset 0 and constant term 0")
    B = [a[0] * 0 + 1]
    # n b_n = sum_{j=1}^{n} j a_j b_{n-j}
    for n in range(1, A.order + 1):
        acc = a[0] * 0
        for j in range(1, n + 1):
            if a[j]:
                acc = acc + j * a[j] * B[n - j]
        B.append(acc / n)
    return TruncatedQSeries(B)
