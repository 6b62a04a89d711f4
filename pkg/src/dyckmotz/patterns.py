"""Consecutive-step patterns, linear statistics over them, and the rules
carrying each Dyck-side statistic through the bijection.

Pattern language (no whitespace inside a token):

    pattern := '^'? atom+ '$'? | 'delta'
    atom    := ('U' | 'D' | 'F') '+'?

'^' anchors at the first step, '$' at the last, 'delta' is the indicator
of the all-flat path. An atom with '+' stands for every positive
repetition of its letter: the count of a pattern holding X+ is the sum
over k >= 1 of the counts of the pattern with X+ replaced by X^k. Plain
occurrences may overlap ("UU" occurs twice in "UUU"); anchored patterns
evaluate to 0 or 1.

Statistics are integer-linear combinations of patterns plus the
constants 1 and n. Their text form separates terms with '+' or '-'
surrounded by whitespace, which keeps repetition '+' (never spaced)
unambiguous: "UF+D + 2*UF+U + 2*UU". The symbol n means semilength on
the Dyck side and length on the Motzkin side; each statistic records
which side it lives on.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Union

from .bijection import phi
from .enumeration import enumerate_constrained
from .paths import DyckPath, LatticePath, MotzkinPath


class PatternSyntaxError(ValueError):
    """Malformed pattern or statistic text."""

    def __init__(self, text: str, position: int, reason: str = "invalid character"):
        self.position = position
        super().__init__(f"{reason} at position {position} in {text!r}")


class EmptyPatternError(ValueError):
    """A pattern needs at least one atom (or must be 'delta')."""


@dataclass(frozen=True)
class PatternExpr:
    atoms: tuple
    start_anchor: bool = False
    end_anchor: bool = False
    dirac: bool = False
    text: str = ""

    def __str__(self) -> str:
        return self.text


DIRAC = PatternExpr(atoms=(), dirac=True, text="delta")

_ATOM_RE = re.compile(r"([UDF])(\+?)")


def parse_pattern(text: str) -> PatternExpr:
    if text == "delta":
        return DIRAC
    pos = 0
    start_anchor = end_anchor = False
    if text.startswith("^"):
        start_anchor = True
        pos = 1
    body_end = len(text)
    if text.endswith("$") and body_end > pos:
        end_anchor = True
        body_end -= 1
    if start_anchor and end_anchor:
        raise PatternSyntaxError(text, body_end, "both anchors on one pattern")
    atoms = []
    while pos < body_end:
        m = _ATOM_RE.match(text, pos)
        if m is None or m.end() > body_end:
            raise PatternSyntaxError(text, pos)
        atoms.append((m.group(1), m.group(2) == "+"))
        pos = m.end()
    if not atoms:
        raise EmptyPatternError(f"no atoms in pattern {text!r}")
    return PatternExpr(tuple(atoms), start_anchor, end_anchor, False, text)


def _match_ways(p: str, atoms, start: int) -> dict:
    """End position -> number of repetition choices matching at start."""
    frontier = {start: 1}
    for step, repeated in atoms:
        nxt: dict = {}
        for j, ways in frontier.items():
            if repeated:
                t = j
                while t < len(p) and p[t] == step:
                    t += 1
                    nxt[t] = nxt.get(t, 0) + ways
            elif j < len(p) and p[j] == step:
                nxt[j + 1] = nxt.get(j + 1, 0) + ways
        if not nxt:
            return {}
        frontier = nxt
    return frontier


def count_occurrences(p: Union[str, LatticePath], pat: PatternExpr) -> int:
    """Number of occurrences of pat in p under the module's semantics."""
    if not isinstance(p, LatticePath):
        p = LatticePath(p)
    s = str(p)
    if pat.dirac:
        return int(all(c == "F" for c in s))
    if pat.start_anchor:
        return int(bool(_match_ways(s, pat.atoms, 0)))
    if pat.end_anchor:
        n = len(s)
        for start in range(n):
            if _match_ways(s, pat.atoms, start).get(n):
                return 1
        return 0
    total = 0
    for start in range(len(s)):
        total += sum(_match_ways(s, pat.atoms, start).values())
    return total


class PathProfile:
    """One-pass digest of a path for constant-time pattern counts.

    Holds counts of all factors of length 1..3, plus every maximal
    letter run keyed by (left flank, letter, right flank). Patterns the
    digest cannot answer fall back to the generic counter.
    """

    __slots__ = ("path", "text", "grams", "run_sites", "all_flat")

    def __init__(self, path: LatticePath):
        self.path = path
        s = str(path)
        self.text = s
        grams: Counter = Counter()
        for size in (1, 2, 3):
            for i in range(len(s) - size + 1):
                grams[s[i:i + size]] += 1
        self.grams = grams
        runs: Counter = Counter()
        i = 0
        prev = ""
        while i < len(s):
            j = i
            while j < len(s) and s[j] == s[i]:
                j += 1
            runs[(prev, s[i], s[j] if j < len(s) else "")] += 1
            prev = s[i]
            i = j
        self.run_sites = runs
        self.all_flat = s == "F" * len(s)

    def count(self, pat: PatternExpr) -> int:
        if pat.dirac:
            return int(self.all_flat)
        if not (pat.start_anchor or pat.end_anchor):
            if all(not rep for _, rep in pat.atoms):
                if len(pat.atoms) <= 3:
                    return self.grams["".join(step for step, _ in pat.atoms)]
            elif (len(pat.atoms) == 3
                  and [rep for _, rep in pat.atoms] == [False, True, False]):
                a, x, b = (step for step, _ in pat.atoms)
                if a != x and b != x:
                    # summed repetitions of a flanked run hit each site once
                    return self.run_sites[(a, x, b)]
        return count_occurrences(self.path, pat)


class _One:
    def __repr__(self):
        return "1"


class _PathSize:
    def __repr__(self):
        return "n"


ONE = _One()
N = _PathSize()


@dataclass(frozen=True)
class StatisticExpr:
    terms: tuple  # of (int coefficient, PatternExpr | ONE | N)
    side: str  # "dyck" or "motzkin": fixes what n means
    text: str = ""

    def __str__(self) -> str:
        return self.text


_TERM_SPLIT = re.compile(r"\s+([+-])\s+")


def parse_statistic(text: str, side: str) -> StatisticExpr:
    if side not in ("dyck", "motzkin"):
        raise ValueError(f"side must be 'dyck' or 'motzkin', not {side!r}")
    stripped = text.strip()
    if not stripped:
        raise EmptyPatternError("empty statistic expression")
    pieces = _TERM_SPLIT.split(stripped)
    terms = []
    sign = 1
    for i, piece in enumerate(pieces):
        if i % 2:  # separator
            sign = 1 if piece == "+" else -1
            continue
        terms.append(_parse_term(piece, sign, text))
    return StatisticExpr(tuple(terms), side, stripped)


def _parse_term(token: str, sign: int, whole: str):
    if token.startswith("-"):
        sign = -sign
        token = token[1:]
    m = re.fullmatch(r"(?:(\d+)\*)?(.*)", token)
    coeff = sign * (int(m.group(1)) if m.group(1) else 1)
    body = m.group(2)
    if not body:
        raise PatternSyntaxError(whole, whole.find(token), "empty term")
    if body == "1":
        return coeff, ONE
    if body in ("n", "N"):
        return coeff, N
    return coeff, parse_pattern(body)


def evaluate_statistic(p: Union[str, LatticePath], e: StatisticExpr,
                       profile: Optional[PathProfile] = None) -> int:
    """Value of the statistic on one path. A prebuilt PathProfile for p
    makes repeated evaluation over the same path cheap."""
    if profile is None:
        if not isinstance(p, LatticePath):
            p = LatticePath(p)
        size = len(p)
        counter = lambda pat: count_occurrences(p, pat)
    else:
        size = len(profile.text)
        counter = profile.count
    n_value = size // 2 if e.side == "dyck" else size
    total = 0
    for coeff, term in e.terms:
        if term is ONE:
            total += coeff
        elif term is N:
            total += coeff * n_value
        else:
            total += coeff * counter(term)
    return total


@dataclass(frozen=True)
class TransportRule:
    """dyck_side(P) = motzkin_side(phi(P)) for every family member of
    semilength >= min_n."""
    name: str
    dyck_side: StatisticExpr
    motzkin_side: StatisticExpr
    min_n: int = 0


def _rule(name: str, motzkin_text: str, min_n: int = 0) -> TransportRule:
    return TransportRule(
        name=name,
        dyck_side=parse_statistic(name, "dyck"),
        motzkin_side=parse_statistic(motzkin_text, "motzkin"),
        min_n=min_n,
    )


_RULES = (
    _rule("U", "U + D + F"),
    _rule("D", "U + D + F"),
    _rule("UD", "F + UD"),
    _rule("UU", "U + UU + UF"),
    _rule("DU", "FF + FU + DF + DU"),
    _rule("UUD", "UF+D + UD"),
    _rule("UUU", "UF+D + 2*UF+U + 2*UU"),
    _rule("DUU", "UF+D + UD + delta - 1", min_n=1),
    _rule("DUD", "F - UF+D - delta", min_n=1),
    _rule("UDU", "FF + FUD"),
    _rule("UDD", "FD + UD + FUU + FUF"),
    _rule("DDU", "DF + DU + FUU + FUF"),
    _rule("DDD", "2*UU + 2*UF - FD - FUU - FUF"),
    _rule("^UD", "delta", min_n=1),
    _rule("^UU", "1 - delta", min_n=1),
)

_RULES_BY_NAME = {r.name: r for r in _RULES}
# the UU and DD statistics agree on every Dyck path and share one image
_RULES_BY_NAME["DD"] = _RULES_BY_NAME["UU"]


def transport_rules() -> list:
    """The full registry: Eq-style step rules, all twelve length <= 3
    pattern rules, and the two anchored rules. DD resolves to the UU
    rule by name lookup rather than a separate entry."""
    return list(_RULES)


def transport_rule(name: str) -> TransportRule:
    try:
        return _RULES_BY_NAME[name]
    except KeyError:
        raise KeyError(f"no transport rule named {name!r}; "
                       f"known: {', '.join(sorted(_RULES_BY_NAME))}") from None


def _default_pairs(n: int):
    for p in enumerate_constrained(n):
        yield PathProfile(p), PathProfile(phi(p))


def check_transport(rule: Union[TransportRule, str], n: int,
                    pairs=None) -> dict:
    """Exhaustively verify one rule at semilength n.

    pairs may supply prebuilt (dyck PathProfile, motzkin PathProfile)
    tuples so a verification campaign can share one enumeration pass
    across many rules.
    """
    if isinstance(rule, str):
        rule = transport_rule(rule)
    if n < rule.min_n:
        raise ValueError(f"rule {rule.name} is claimed only for n >= {rule.min_n}")
    checked = 0
    counterexample = None
    for dyck_prof, motz_prof in (pairs if pairs is not None else _default_pairs(n)):
        checked += 1
        lhs = evaluate_statistic(dyck_prof.path, rule.dyck_side, dyck_prof)
        rhs = evaluate_statistic(motz_prof.path, rule.motzkin_side, motz_prof)
        if lhs != rhs:
            counterexample = {
                "path": dyck_prof.text,
                "image": motz_prof.text,
                "lhs": lhs,
                "rhs": rhs,
            }
            break
    return {
        "rule": rule.name,
        "n": n,
        "checked": checked,
        "ok": counterexample is None,
        "counterexample": counterexample,
    }
