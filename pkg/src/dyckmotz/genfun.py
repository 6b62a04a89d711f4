"""Bivariate distribution series and univariate popularity series for the
twelve length <= 3 step patterns over the constrained family, computed
three independent ways.

For a pattern p, the distribution series F_p(x, y) has [x^n y^k] equal
to the number of family members of semilength n containing p exactly k
times. The three routes are:

  closed form   algebraic expression evaluated in the exact series ring
  fixed point   functional equation (or 2-unknown system) iterated to a
                coefficient-exact fixed point, where such an equation is
                on record (UU, UUU, UDU, UDD, DDU, DDD)
  brute force   one enumeration pass per semilength, counting
                occurrences path by path

Each route validates the same shape invariants before returning:
constant term 1, nonnegative integer coefficients, row sums equal to
Motzkin numbers. Popularity (total occurrence count over the family) is
the y-derivative at y = 1, with independently printed closed forms for
the length-2 patterns checked against the derivative route.

DD shares the UU distribution; the brute-force route still counts DD
literally so the alias is itself testable.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .enumeration import enumerate_constrained, motzkin_number
from .patterns import PathProfile, parse_pattern
from .series import TruncatedSeries

DEFAULT_TRUNCATION = 24

PATTERNS = ("UD", "UU", "DD", "DU",
            "UUU", "UUD", "DUU", "DUD", "UDU", "UDD", "DDU", "DDD")
FIXED_POINT_PATTERNS = ("UU", "UUU", "UDU", "UDD", "DDU", "DDD")

# denominators all have x-valuation 2, so closed forms are built with
# two guard orders and land exactly on the requested truncation
_GUARD = 2


class NoConvergenceError(ArithmeticError):
    """Fixed-point iteration failed to stabilize within the bound."""


@dataclass(frozen=True)
class GfResult:
    pattern: str
    method: str  # closed_form | fixed_point | brute_force
    series: TruncatedSeries
    components: dict = field(default_factory=dict)


def _canon(pattern: str) -> str:
    if pattern not in PATTERNS:
        raise KeyError(f"unknown pattern id {pattern!r}; known: {', '.join(PATTERNS)}")
    return pattern


def _validate_distribution(series: TruncatedSeries, pattern: str, method: str):
    if series.y_poly(0) != [1]:
        raise ValueError(f"{pattern}/{method}: constant term is not 1")
    for n in range(series.trunc_x + 1):
        poly = series.y_poly(n)
        if any(not isinstance(c, int) or c < 0 for c in poly):
            raise ValueError(
                f"{pattern}/{method}: non-integer or negative coefficient at x^{n}")
        if sum(poly) != motzkin_number(n):
            raise ValueError(
                f"{pattern}/{method}: row sum at x^{n} is {sum(poly)}, "
                f"want M_{n} = {motzkin_number(n)}")


def _result(pattern: str, method: str, series: TruncatedSeries,
            components=None) -> GfResult:
    _validate_distribution(series, pattern, method)
    return GfResult(pattern, method, series, components or {})


# closed forms -----------------------------------------------------------
# Each entry maps the ring generators to the printed algebraic
# expression, verbatim. Square-root signs differ between the two groups
# of formulas and are kept exactly as printed; the constant-term-1
# validation would catch a wrong branch immediately.

def _cf_ud(x, y):
    rad = -4*x**2 + (x**2*(y - 1) + x*y - 1)**2
    return (x**2 - x**2*y - x*y + 1 - rad.sqrt_unit()) / (2*x**2)


def _cf_uu(x, y):
    rad = -4*x**2*y**2 + (x**2*y*(y - 1) - x + 1)**2
    return (x**2*y**2 - x**2*y - x + 1 - rad.sqrt_unit()) / (2*x**2*y**2)


def _cf_du(x, y):
    rad = -4*x**2 + (x**2*(y - 1) + x*y - 1)**2
    return (x**2*y - x**2 - x*y + 1 - rad.sqrt_unit()) / (2*x**2*y)


def _cf_uuu(x, y):
    rad = ((x - x*y - 1) * (x**2 - x*y + x - 1)
           * (x**3 - x**3*y + x**2*y**2 + 2*x**2*y - 2*x*y - 2*x + 1))
    return ((x**3*y - x**3 - x**2*y**2 + 2*x - 1 + rad.sqrt_unit())
            / (2*x**2*y**2*(x - 1)))


def _cf_uud(x, y):
    rad = (x**2*y - 1) * (x**2*y - 4*x**2 + 4*x - 1)
    return (x**2*y - 2*x**2 + 2*x - 1 + rad.sqrt_unit()) / (2*x**2*(x - 1))


def _cf_duu(x, y):
    rad = (x**2*y - 1) * (x**2*y - 4*x**2 + 4*x - 1)
    return (2*x - x**2*y - 1 + rad.sqrt_unit()) / (2*x**2*y*(x - 1))


def _cf_dud(x, y):
    rad = ((x*y - x - 1) * (x**2 + y*x - x - 1)
           * (x**3*y - x**3 + x**2*y**2 + 2*x**2*y - 2*x*y - 2*x + 1))
    return ((x**3*y - x**3 - x**2*y**2 + 2*x*y - 1 + rad.sqrt_unit())
            / (2*x**2*(x*y - 1)))


def _cf_udu(x, y):
    rad = ((x + 1) * (x**2*y - x**2 + x*y - x - 1)
           * (x**3*y - x**3 - 2*x**2*y + 2*x**2 + x*y + 2*x - 1))
    return ((1 + x*(x**2 - x**2*y - y) - rad.sqrt_unit())
            / (2*x**2*(x - x*y + 1)))


def _cf_udd(x, y):
    rad = ((x + 1) * (x**2*y - x**2 + 1)
           * (x**3*y - x**3 - 3*x**2*y + 3*x**2 - 3*x + 1))
    return ((1 + x*(x**2*y - x**2 - x*y + x - 1) - rad.sqrt_unit())
            / (2*x**2*(x*y - x + 1)**2))


def _cf_ddu(x, y):
    rad = ((x + 1) * (x**2*y - x**2 + 1)
           * (x**3*y - x**3 - 3*x**2*y + 3*x**2 - 3*x + 1))
    return ((1 + x*(2*x**2*y**2 - 3*x**2*y + x**2 + x*y - x - 1) - rad.sqrt_unit())
            / (2*x**2*y*(x*y - x + 1)))


def _cf_ddd(x, y):
    rad = ((x*y + 1) * (x**2*y - x**2 - x*y + x - 1)
           * (x**3*y**2 - x**3*y - x**2*y**2 - 2*x**2*y + 3*x**2 + 2*x*y + x - 1))
    return ((1 - x*(x**2*y**2 - x**2*y - x*y**2 + x + 1) - rad.sqrt_unit())
            / (2*x**2*(x*y - x - y)**2))


_CLOSED_FORMS = {
    "UD": _cf_ud, "UU": _cf_uu, "DD": _cf_uu, "DU": _cf_du,
    "UUU": _cf_uuu, "UUD": _cf_uud, "DUU": _cf_duu, "DUD": _cf_dud,
    "UDU": _cf_udu, "UDD": _cf_udd, "DDU": _cf_ddu, "DDD": _cf_ddd,
}


def distribution_gf_closed(pattern: str, N: int = DEFAULT_TRUNCATION) -> GfResult:
    pattern = _canon(pattern)
    x = TruncatedSeries.x_var(N + _GUARD)
    y = TruncatedSeries.y_var(N + _GUARD)
    series = _CLOSED_FORMS[pattern](x, y).truncate(N)
    return _result(pattern, "closed_form", series)


# functional equations ----------------------------------------------------
# Single-unknown forms iterate one series; the two-unknown systems
# iterate (A, B) jointly with F written as 1 + A + B inside every right
# hand side, which keeps each pass worth one more correct x-order.

def _fp_single(N: int, rhs) -> TruncatedSeries:
    m = TruncatedSeries.zero(N)
    for _ in range(N + 3):
        nxt = rhs(m)
        if nxt == m:
            return m
        m = nxt
    raise NoConvergenceError(f"no fixed point within {N + 2} iterations")


def _fp_pair(N: int, rhs_a, rhs_b):
    a = b = TruncatedSeries.zero(N)
    for _ in range(N + 3):
        na, nb = rhs_a(a, b), rhs_b(a, b)
        if na == a and nb == b:
            return a, b
        a, b = na, nb
    raise NoConvergenceError(f"no fixed point within {N + 2} iterations")


def distribution_gf_fixed_point(pattern: str, N: int = DEFAULT_TRUNCATION) -> GfResult:
    pattern = _canon(pattern)
    if pattern not in FIXED_POINT_PATTERNS:
        raise KeyError(f"no functional equation on record for {pattern!r}; "
                       f"have: {', '.join(FIXED_POINT_PATTERNS)}")
    x = TruncatedSeries.x_var(N)
    y = TruncatedSeries.y_var(N)
    one = TruncatedSeries.one(N)
    x2 = x * x

    if pattern == "UU":
        m = _fp_single(N, lambda M: 1 + x*M + x2*y*M + x2*y**2*(M - 1)*M)
        return _result(pattern, "fixed_point", m)

    if pattern == "UUU":
        geo = one / (one - x)  # paths of the shape (UD)^j, j >= 0
        m = _fp_single(
            N, lambda F: 1 + x*F + x2*F + x2*y*(x*geo)*F + x2*y**2*(F - geo)*F)
        return _result(pattern, "fixed_point", m)

    if pattern == "UDU":
        ra = lambda A, B: x + x*y*A + x*B
        def rb(A, B):
            F = 1 + A + B
            return x2 + x2*y*A + x2*B + x2*F*(F - 1)
        a, b = _fp_pair(N, ra, rb)
    elif pattern == "UDD":
        ra = lambda A, B: x * (1 + A + B)
        def rb(A, B):
            F = 1 + A + B
            return (x2*y*F + x2*y*A + x2*B + x2*B**2
                    + x2*y*A*B + x2*y**2*A**2 + x2*y*A*B)
        a, b = _fp_pair(N, ra, rb)
    elif pattern == "DDU":
        ra = lambda A, B: x + x*A + x*y*B
        def rb(A, B):
            F = 1 + A + B
            return x2*F + x2*y*A*(F - 1) + x2*A + x2*y*B*F
        a, b = _fp_pair(N, ra, rb)
    else:  # DDD
        ra = lambda A, B: x * (1 + A + B)
        def rb(A, B):
            F = 1 + A + B
            y2 = y**2
            return (x2*F + x2*y2*B
                    + (x2*y2*A).div_exact_monomial(0, 1)
                    + (x2*y2*A**2).div_exact_monomial(0, 2)
                    + (x2*y2*A*B).div_exact_monomial(0, 1)
                    + x2*y2*B**2
                    + (x2*y2*A*B).div_exact_monomial(0, 1))
        a, b = _fp_pair(N, ra, rb)

    return _result(pattern, "fixed_point", 1 + a + b, {"A": a, "B": b})


# brute force --------------------------------------------------------------

@lru_cache(maxsize=None)
def _distribution_row(n: int) -> dict:
    """pattern -> {occurrence count -> paths}, one enumeration pass."""
    pats = {p: parse_pattern(p) for p in PATTERNS}
    rows: dict = {p: {} for p in PATTERNS}
    for path in enumerate_constrained(n):
        prof = PathProfile(path)
        for name, pat in pats.items():
            k = prof.count(pat)
            row = rows[name]
            row[k] = row.get(k, 0) + 1
    return rows


def distribution_brute_force(pattern: str, N: int) -> GfResult:
    pattern = _canon(pattern)
    coeffs = []
    for n in range(N + 1):
        row = _distribution_row(n)[pattern]
        poly = [0] * (max(row) + 1)
        for k, cnt in row.items():
            poly[k] = cnt
        coeffs.append(poly)
    return _result(pattern, "brute_force", TruncatedSeries(N, coeffs))


# popularity ---------------------------------------------------------------
# Printed closed forms exist for the length-2 patterns only; they share
# the radical R = sqrt(-3x^2 - 2x + 1).

def _pop_closed_length2(pattern: str, N: int) -> TruncatedSeries:
    x = TruncatedSeries.x_var(N + _GUARD)
    r = (-3*x**2 - 2*x + 1).sqrt_unit()
    if pattern == "UD":
        g = ((x - 1)*r - 3*x**2 - 2*x + 1) / (2*x*(3*x - 1))
    elif pattern in ("UU", "DD"):
        g = (r*(x**2 + 2*x - 2) + x**3 - 3*x**2 - 4*x + 2) / (2*x**2*r)
    else:  # DU
        g = ((x**2 - 1)*r - x**3 - 3*x**2 - x + 1) / (2*x**2*r)
    return g.truncate(N)


def popularity_gf(pattern: str, N: int = DEFAULT_TRUNCATION) -> TruncatedSeries:
    """Total occurrences of the pattern over the whole family, by
    semilength: the y-derivative of the distribution at y = 1. For the
    length-2 patterns the printed closed form is evaluated as well and
    must agree."""
    pattern = _canon(pattern)
    derived = distribution_gf_closed(pattern, N).series.d_dy().eval_y(1)
    if pattern in ("UD", "UU", "DD", "DU"):
        printed = _pop_closed_length2(pattern, N)
        if printed != derived:
            raise ValueError(
                f"popularity closed form for {pattern} disagrees with the "
                f"derivative route")
    return derived


def du_from_ud(N: int = DEFAULT_TRUNCATION) -> GfResult:
    """F_DU rebuilt from F_UD by stripping peak-free terms and shifting
    one y-degree down; must agree with the direct DU closed form."""
    f_ud = distribution_gf_closed("UD", N).series
    series = 1 + (f_ud - f_ud.eval_y(0)).div_exact_monomial(0, 1)
    direct = distribution_gf_closed("DU", N).series
    if series != direct:
        raise ValueError("DU-from-UD identity disagrees with the DU closed form")
    return _result("DU", "closed_form", series)
