"""Exact truncated formal power series in x, with polynomial coefficients
in y, over the rationals.

A series keeps every x-degree up to trunc_x; each x-degree holds a dense
y-polynomial with int or Fraction entries, always in lowest terms. There
is no floating point anywhere in this module. Mixed-truncation operands
reduce to the smaller truncation, and dividing by something with
positive x-valuation lowers the truncation by that valuation, so a lost
order is visible in the result rather than silently wrong.

Operator overloading covers +, -, *, /, ** and mixing with ints and
Fractions, so algebraic formulas can be transcribed directly. Division
accepts any divisor whose lowest x-degree slice is a single monomial
c*y^m (unit divisors are the m = 0, valuation 0 case); square roots use
Newton iteration and require constant term exactly 1.
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Union

Scalar = Union[int, Fraction]


class NonUnitDivisorError(ZeroDivisionError):
    """Divisor lacks the invertible shape the operation requires."""


class InexactDivisionError(ArithmeticError):
    """Monomial division hit a term the divisor does not divide."""


class NonSquareConstantTermError(ValueError):
    """sqrt_unit needs constant term exactly 1."""


def _norm(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _trim(poly: List[Scalar]) -> List[Scalar]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _padd(a: List[Scalar], b: List[Scalar]) -> List[Scalar]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = _norm(out[i] + c)
    return _trim(out)


def _pneg(a: List[Scalar]) -> List[Scalar]:
    return [-c for c in a]

def _pmul(a: List[Scalar], b: List[Scalar]) -> List[Scalar]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return _trim([_norm(c) for c in out])


def _pscale(a: List[Scalar], s: Scalar) -> List[Scalar]:
    if s == 0:
        return []
    return _trim([_norm(c * s) for c in a])


class TruncatedSeries:
    __slots__ = ("trunc_x", "coeffs")

    def __init__(self, trunc_x: int, coeffs=None):
        if trunc_x < 0:
            raise ValueError("truncation order must be nonnegative")
        self.trunc_x = trunc_x
        if coeffs is None:
            coeffs = [[] for _ in range(trunc_x + 1)]
        self.coeffs = coeffs

    # construction -----------------------------------------------------
    @classmethod
    def zero(cls, trunc_x: int) -> "TruncatedSeries":
        return cls(trunc_x)

    @classmethod
    def constant(cls, value: Scalar, trunc_x: int) -> "TruncatedSeries":
        s = cls(trunc_x)
        if value != 0:
            s.coeffs[0] = [_norm(Fraction(value) if not isinstance(value, int) else value)]
        return s

    @classmethod
    def one(cls, trunc_x: int) -> "TruncatedSeries":
        return cls.constant(1, trunc_x)

    @classmethod
    def x_var(cls, trunc_x: int) -> "TruncatedSeries":
        s = cls(trunc_x)
        if trunc_x >= 1:
            s.coeffs[1] = [1]
        return s

    @classmethod
    def y_var(cls, trunc_x: int) -> "TruncatedSeries":
        s = cls(trunc_x)
        s.coeffs[0] = [0, 1]
        return s

    def _lift(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.constant(other, self.trunc_x)
        return NotImplemented  # type: ignore[return-value]

    # inspection -------------------------------------------------------
    def coefficient(self, n: int, k: int = 0) -> Scalar:
        """Exact coefficient of x^n y^k."""
        if n > self.trunc_x:
            raise ValueError(f"x-degree {n} beyond truncation {self.trunc_x}")
        poly = self.coeffs[n]
        return poly[k] if 0 <= k < len(poly) else 0

    def y_poly(self, n: int) -> List[Scalar]:
        if n > self.trunc_x:
            raise ValueError(f"x-degree {n} beyond truncation {self.trunc_x}")
        return list(self.coeffs[n])

    def is_zero(self) -> bool:
        return all(not poly for poly in self.coeffs)

    def truncate(self, trunc_x: int) -> "TruncatedSeries":
        """Copy restricted to a lower (or equal) truncation order."""
        if trunc_x > self.trunc_x:
            raise ValueError(
                f"cannot extend truncation {self.trunc_x} to {trunc_x}")
        return TruncatedSeries(trunc_x, [list(p) for p in self.coeffs[:trunc_x + 1]])

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.trunc_x == other.trunc_x and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.trunc_x, tuple(tuple(p) for p in self.coeffs)))

    def dump(self) -> str:
        """One line per x-degree: `n: c0 c1 c2` with rationals as p/q."""
        lines = []
        for n, poly in enumerate(self.coeffs):
            body = " ".join(str(c) for c in poly) if poly else "0"
            lines.append(f"{n}: {body}")
        return "\n".join(lines)

    def __repr__(self):
        return f"TruncatedSeries(trunc_x={self.trunc_x})"

    # ring operations ----------------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        n = min(self.trunc_x, other.trunc_x)
        return TruncatedSeries(
            n, [_padd(self.coeffs[i], other.coeffs[i]) for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.trunc_x, [_pneg(p) for p in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        n = min(self.trunc_x, other.trunc_x)
        out = [[] for _ in range(n + 1)]
        for i in range(n + 1):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = _padd(out[i + j], _pmul(a, b))
        return TruncatedSeries(n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        result = TruncatedSeries.one(self.trunc_x)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return _div(self, other)

    def __rtruediv__(self, other):
        lifted = self._lift(other)
        if lifted is NotImplemented:
            return NotImplemented
        return _div(lifted, self)

    # calculus and substitution ----------------------------------------
    def d_dy(self) -> "TruncatedSeries":
        out = []
        for poly in self.coeffs:
            out.append(_trim([_norm(k * c) for k, c in enumerate(poly)][1:]))
        return TruncatedSeries(self.trunc_x, out)

    def eval_y(self, value: Scalar) -> "TruncatedSeries":
        out = []
        for poly in self.coeffs:
            acc: Scalar = 0
            for c in reversed(poly):
                acc = _norm(acc * value + c)
            out.append([acc] if acc != 0 else [])
        return TruncatedSeries(self.trunc_x, out)

    # division tower -----------------------------------------------------
    def div_exact_monomial(self, x_shift: int, y_shift: int) -> "TruncatedSeries":
        """Divide by x^x_shift y^y_shift, exactly. Lowers trunc_x by x_shift."""
        if x_shift < 0 or y_shift < 0:
            raise ValueError("shifts must be nonnegative")
        for n in range(min(x_shift, self.trunc_x + 1)):
            if self.coeffs[n]:
                raise InexactDivisionError(
                    f"nonzero coefficient at x^{n}, below x-shift {x_shift}")
        if x_shift > self.trunc_x:
            raise InexactDivisionError(
                f"x-shift {x_shift} exceeds truncation {self.trunc_x}")
        out = []
        for n in range(x_shift, self.trunc_x + 1):
            poly = self.coeffs[n]
            if any(poly[:y_shift]):
                k = next(k for k, c in enumerate(poly[:y_shift]) if c)
                raise InexactDivisionError(
                    f"term x^{n} y^{k} not divisible by y^{y_shift}")
            out.append(list(poly[y_shift:]))
        return TruncatedSeries(self.trunc_x - x_shift, out)

    def div_unit(self, other: "TruncatedSeries") -> "TruncatedSeries":
        other = self._lift(other)
        head = other.coeffs[0]
        if len(head) != 1 or head[0] == 0:
            raise NonUnitDivisorError(
                "divisor constant term must be a nonzero rational of y-degree 0")
        return _div(self, other)

    def sqrt_unit(self) -> "TruncatedSeries":
        """Newton square root; requires constant term exactly 1."""
        if self.coeffs[0] != [1]:
            raise NonSquareConstantTermError(
                "square root requires constant term exactly 1")
        s = TruncatedSeries.one(self.trunc_x)
        correct = 1
        half = Fraction(1, 2)
        while correct <= self.trunc_x:
            s = (s + _div(self, s)) * half
            correct *= 2
        return s


def _div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Quotient a/b where b's lowest x-slice is a monomial c*y^m.

    The truncation drops by b's x-valuation. Exactness of every y-shift
    is enforced; anything the divisor cannot divide raises.
    """
    n_out = min(a.trunc_x, b.trunc_x)
    val = next((n for n in range(b.trunc_x + 1) if b.coeffs[n]), None)
    if val is None:
        raise NonUnitDivisorError("division by the zero series")
    lead = b.coeffs[val]
    m = next(k for k, c in enumerate(lead) if c)
    if len(lead) != m + 1:
        raise NonUnitDivisorError(
            "divisor's lowest x-slice must be a single y-monomial")
    c = Fraction(lead[m])
    for n in range(min(val, a.trunc_x + 1)):
        if a.coeffs[n]:
            raise InexactDivisionError(
                f"numerator has x-degree {n} below divisor valuation {val}")
    n_out -= val
    if n_out < 0:
        raise InexactDivisionError("divisor valuation exceeds truncation")
    num = [a.coeffs[n + val] for n in range(n_out + 1)]
    den = [b.coeffs[n + val] for n in range(min(b.trunc_x - val, n_out) + 1)]
    inv_c = 1 / c
    quot: List[List[Scalar]] = []
    for n in range(n_out + 1):
        acc = list(num[n])
        for i in range(1, min(n, len(den) - 1) + 1):
            if den[i] and quot[n - i]:
                acc = _padd(acc, _pneg(_pmul(den[i], quot[n - i])))
        if any(acc[:m]):
            k = next(k for k, cc in enumerate(acc[:m]) if cc)
            raise InexactDivisionError(
                f"term x^{n} y^{k} not divisible by divisor lead y^{m}")
        quot.append(_pscale(acc[m:], inv_c))
    return TruncatedSeries(n_out, quot)
