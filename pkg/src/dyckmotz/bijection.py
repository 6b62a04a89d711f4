"""Structure-preserving map from the constrained Dyck family onto Motzkin
paths, with its inverse and an exhaustive bijectivity checker.

The forward map phi sends a constrained path of semilength n to a
Motzkin path of length n by recursion on the arch closed by the final
down step:

    phi(empty)                 = empty
    phi(alpha UD)              = phi(alpha) F
    phi(alpha U UbetaD gamma D) = phi(alpha) phi(gamma) U phi(beta) D

No closed-form inverse is implemented; the map is inverted by tabulating
the forward image of the whole family at each needed size, which is
exact and cheap at the sizes this package targets. The table bound
guards against accidentally enumerating a huge family.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Union

from .enumeration import enumerate_constrained, motzkin_number
from .paths import (
    CaseAUD,
    DyckPath,
    MotzkinPath,
    is_constrained,
    last_arch_decompose,
)

DEFAULT_TABLE_BOUND = 14


class NotConstrainedError(ValueError):
    """phi was applied to a Dyck path outside the constrained family."""


class LengthBeyondTableBoundError(ValueError):
    """phi_inverse was asked for a length above the configured bound."""


def phi(p: Union[str, DyckPath]) -> MotzkinPath:
    """Image of a constrained Dyck path. Raises NotConstrainedError when
    the precondition fails; the map is only bijective on the family."""
    p = p if isinstance(p, DyckPath) else DyckPath(p)
    if not is_constrained(p):
        raise NotConstrainedError(f"not in the constrained family: {str(p)!r}")
    return MotzkinPath(_phi(str(p)))


@lru_cache(maxsize=None)
def _phi(p: str) -> str:
    # sub-paths of a constrained path are constrained, so no re-check here
    if not p:
        return ""
    case = last_arch_decompose(p)
    if isinstance(case, CaseAUD):
        return _phi(str(case.alpha)) + "F"
    return (_phi(str(case.alpha)) + _phi(str(case.gamma))
            + "U" + _phi(str(case.beta)) + "D")


_inverse_tables: dict = {}


def _inverse_table(n: int) -> dict:
    table = _inverse_tables.get(n)
    if table is None:
        table = {_phi(str(p)): str(p) for p in enumerate_constrained(n)}
        _inverse_tables[n] = table
    return table


def phi_inverse(m: Union[str, MotzkinPath],
                table_bound: int = DEFAULT_TABLE_BOUND) -> DyckPath:
    """The unique family member mapping to m under phi."""
    m = m if isinstance(m, MotzkinPath) else MotzkinPath(m)
    n = len(m)
    if n > table_bound:
        raise LengthBeyondTableBoundError(
            f"length {n} exceeds the inverse table bound {table_bound}")
    return DyckPath(_inverse_table(n)[str(m)])


def check_bijectivity(n: int) -> dict:
    """Exhaustively verify that phi is a bijection at semilength n.

    Walks the whole family, checking injectivity, image size against the
    Motzkin count, and the round trip phi_inverse(phi(p)) == p through
    the public entry points. Failures are report contents, not raises.
    """
    if n < 0:
        raise ValueError("semilength must be nonnegative")
    expected = motzkin_number(n)
    domain = 0
    images: dict = {}
    collisions = []
    roundtrip_failures = []
    for p in enumerate_constrained(n):
        domain += 1
        m = phi(p)
        prev = images.setdefault(str(m), str(p))
        if prev != str(p):
            collisions.append((prev, str(p), str(m)))
        if str(phi_inverse(m)) != str(p):
            roundtrip_failures.append(str(p))
    report = {
        "n": n,
        "domain": domain,
        "image": len(images),
        "collisions": len(collisions),
        "missing": expected - len(images),
        "roundtrip_failures": len(roundtrip_failures),
        "ok": (not collisions and not roundtrip_failures
               and len(images) == expected and domain == expected),
    }
    if collisions:
        report["collision_examples"] = collisions[:3]
    if roundtrip_failures:
        report["roundtrip_examples"] = roundtrip_failures[:3]
    return report
