import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dyckmotz import (
    DIRAC,
    EmptyPatternError,
    PathProfile,
    PatternSyntaxError,
    check_transport,
    count_occurrences,
    enumerate_dyck,
    enumerate_motzkin,
    evaluate_statistic,
    parse_pattern,
    parse_statistic,
    phi,
    transport_rule,
    transport_rules,
)


def test_parse_pattern_basic_forms():
    p = parse_pattern("UUD")
    assert p.atoms == (("U", False), ("U", False), ("D", False))
    assert not p.start_anchor and not p.end_anchor and not p.dirac
    assert parse_pattern("^UU").start_anchor
    assert parse_pattern("UD$").end_anchor
    assert parse_pattern("UF+D").atoms == (("U", False), ("F", True), ("D", False))
    assert parse_pattern("delta") is DIRAC


def test_parse_pattern_rejections():
    with pytest.raises(EmptyPatternError):
        parse_pattern("")
    with pytest.raises(PatternSyntaxError):
        parse_pattern("^UD$")
    with pytest.raises(PatternSyntaxError):
        parse_pattern("UXD")
    with pytest.raises(PatternSyntaxError):
        parse_pattern("+U")
    with pytest.raises(PatternSyntaxError):
        parse_pattern("U D")


def test_count_plain_patterns():
    assert count_occurrences("UDUD", parse_pattern("UD")) == 2
    assert count_occurrences("UDUD", parse_pattern("DU")) == 1
    assert count_occurrences("UUDD", parse_pattern("UD")) == 1
    assert count_occurrences("UUUDDD", parse_pattern("UUU")) == 1
    assert count_occurrences("", parse_pattern("UD")) == 0


def test_count_anchored_patterns_are_indicators():
    assert count_occurrences("UUDD", parse_pattern("^UU")) == 1
    assert count_occurrences("UDUD", parse_pattern("^UU")) == 0
    assert count_occurrences("UDUD", parse_pattern("UD$")) == 1
    assert count_occurrences("UUDD", parse_pattern("DD$")) == 1
    assert count_occurrences("", parse_pattern("^UD")) == 0


def test_count_dirac():
    assert count_occurrences("", DIRAC) == 1
    assert count_occurrences("FFF", DIRAC) == 1
    assert count_occurrences("UFD", DIRAC) == 0


def test_count_repeated_atoms():
    # X+ sums the matches of X, XX, XXX, ...
    assert count_occurrences("UUU", parse_pattern("U+")) == 6
    assert count_occurrences("UFFD", parse_pattern("UF+D")) == 1
    assert count_occurrences("UFDUFFD", parse_pattern("UF+D")) == 2
    assert count_occurrences("UFFU", parse_pattern("UF+U")) == 1
    assert count_occurrences("UFFD", parse_pattern("F+")) == 3


WORDS = st.text(alphabet="UDF", max_size=10)
ATOMS = st.lists(
    st.tuples(st.sampled_from("UDF"), st.booleans()), min_size=1, max_size=3)


def _oracle(word, atoms, start_anchor, end_anchor):
    # expand every repeated atom to explicit lengths and count slices
    def expansions(i):
        if i == len(atoms):
            yield ""
            return
        letter, repeated = atoms[i]
        top = len(word) if repeated else 1
        for k in range(1, max(top, 1) + 1):
            for rest in expansions(i + 1):
                yield letter * k + rest

    total = 0
    for concrete in expansions(0):
        if start_anchor:
            total += word.startswith(concrete)
        elif end_anchor:
            total += word.endswith(concrete)
        else:
            total += sum(word[i:i + len(concrete)] == concrete
                         for i in range(len(word) - len(concrete) + 1))
    if start_anchor or end_anchor:
        return min(total, 1)
    return total


@settings(max_examples=300, deadline=None)
@given(WORDS, ATOMS, st.sampled_from(["", "^", "$"]))
def test_count_matches_expansion_oracle(word, atoms, anchor):
    text = "".join(a + ("+" if r else "") for a, r in atoms)
    if anchor == "^":
        text = "^" + text
    elif anchor == "$":
        text = text + "$"
    expr = parse_pattern(text)
    assert count_occurrences(word, expr) == _oracle(
        word, atoms, anchor == "^", anchor == "$")


def test_profile_count_agrees_with_direct_count():
    texts = ["U", "D", "F", "UD", "UU", "DD", "DU", "UF", "FD", "FF",
             "UUU", "UUD", "DUU", "DUD", "UDU", "UDD", "DDU", "DDD",
             "FUU", "FUD", "FUF", "UF+D", "UF+U", "^UU", "^UD", "DD$",
             "UD$", "F$", "delta"]
    exprs = [parse_pattern(t) for t in texts]
    for n in range(6):
        for p in enumerate_motzkin(n):
            prof = PathProfile(p)
            for e in exprs:
                assert prof.count(e) == count_occurrences(p, e), (str(p), e.text)


def test_parse_statistic_and_evaluate():
    e = parse_statistic("UU + UD", "dyck")
    assert evaluate_statistic("UUDD", e) == 2
    n_expr = parse_statistic("n", "dyck")
    assert evaluate_statistic("UUDD", n_expr) == 2
    n_motz = parse_statistic("n", "motzkin")
    assert evaluate_statistic("UFD", n_motz) == 3
    combo = parse_statistic("2*UU - 1 + delta", "dyck")
    assert evaluate_statistic("UUDD", combo) == 2 * 1 - 1 + 0
    neg = parse_statistic("-UU + n", "dyck")
    assert evaluate_statistic("UUDD", neg) == 1


def test_parse_statistic_rejects_garbage():
    with pytest.raises(ValueError):
        parse_statistic("UU +", "dyck")
    with pytest.raises(ValueError):
        parse_statistic("", "dyck")
    with pytest.raises(ValueError):
        parse_statistic("UU", "sideways")


def test_transport_rule_lookup():
    rules = transport_rules()
    assert len(rules) == 15
    names = [r.name for r in rules]
    assert names.count("UD") == 1 and "^UU" in names
    # DD shares the UU rule
    assert transport_rule("DD") is transport_rule("UU")
    with pytest.raises(KeyError):
        transport_rule("FFF")


def test_check_transport_passes_small_sizes():
    for rule in transport_rules():
        for n in range(rule.min_n, 7):
            result = check_transport(rule, n)
            assert result["ok"], (rule.name, n, result["counterexample"])
            assert result["checked"] > 0 or n == 0


def test_check_transport_respects_min_n():
    rule = transport_rule("DUU")
    assert rule.min_n == 1
    with pytest.raises(ValueError):
        check_transport(rule, 0)


def test_check_transport_accepts_explicit_pairs():
    rule = transport_rule("UD")
    pairs = [(PathProfile(p), PathProfile(phi(p)))
             for p in ["UUDD", "UDUD"]]
    result = check_transport(rule, 2, pairs=pairs)
    assert result["ok"] and result["checked"] == 2


def test_dyck_statistic_systems():
    dyck_identities = [
        ("UU", "UUU + UUD"),
        ("UU", "UUU + DUU + ^UU"),
        ("UD", "UUD + DUD + ^UD"),
        ("DU", "DUU + DUD"),
        ("DD", "DDD + UDD"),
        ("DD", "DDD + DDU + DD$"),
        ("UD", "UDD + UDU + UD$"),
        ("DU", "DDU + UDU"),
    ]
    parsed = [(parse_statistic(a, "dyck"), parse_statistic(b, "dyck"))
              for a, b in dyck_identities]
    for n in range(7):
        for p in enumerate_dyck(n):
            prof = PathProfile(p)
            for lhs, rhs in parsed:
                assert (evaluate_statistic(p, lhs, prof)
                        == evaluate_statistic(p, rhs, prof))


def test_motzkin_flat_classification():
    lhs = parse_statistic("F", "motzkin")
    rhs = parse_statistic("F$ + FF + FD + FUU + FUD + FUF", "motzkin")
    for n in range(8):
        for p in enumerate_motzkin(n):
            prof = PathProfile(p)
            assert (evaluate_statistic(p, lhs, prof)
                    == evaluate_statistic(p, rhs, prof))
