import itertools

import pytest

from hdx.errors import ParseError
from hdx.monomial import (
    Monomial,
    count_in_degree,
    format_monomial,
    lex_compare,
    monomial_at_rank,
    parse_monomial,
    rank_in_degree,
    squarefree_shift,
)


def mono(text, n):
    return parse_monomial(text, n)


def all_monomials(n, degree):
    """Brute-force degree layer, as exponent tuples (no particular order)."""
    out = []
    for combo in itertools.combinations_with_replacement(range(n), degree):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        out.append(Monomial(exps))
    return out


def test_lex_compare_examples():
    assert lex_compare(mono("x1*x5", 5), mono("x2*x3", 5)) == 1
    u = mono("x2^2*x3", 4)
    assert lex_compare(u, u) == 0
    assert lex_compare(mono("x1^2", 2), mono("x1*x2", 2)) == 1


def test_lex_compare_ring_mismatch():
    with pytest.raises(ValueError):
        lex_compare(mono("x1", 2), mono("x1", 3))


def test_lex_total_order_exhaustive():
    for n, d in [(2, 3), (3, 2), (3, 3)]:
        layer = all_monomials(n, d)
        for u in layer:
            for v in layer:
                c = lex_compare(u, v)
                assert c == -lex_compare(v, u)
                assert (c == 0) == (u == v)
        for u in layer:
            for v in layer:
                for w in layer:
                    if lex_compare(u, v) > 0 and lex_compare(v, w) > 0:
                        assert lex_compare(u, w) > 0


def test_max_index():
    assert mono("x1*x3", 3).max_index() == 3
    assert mono("x2*x3*x4", 4).max_index() == 4
    assert mono("x3^3", 3).max_index() == 3
    with pytest.raises(ValueError):
        mono("1", 3).max_index()


def test_squarefree_shift_examples():
    assert squarefree_shift(mono("x2^3", 3), 4) == mono("x2*x3*x4", 4)
    assert squarefree_shift(mono("x1", 1)) == mono("x1", 1)
    assert squarefree_shift(mono("x3^3", 3), 5) == mono("x3*x4*x5", 5)


def test_squarefree_shift_target_too_small():
    with pytest.raises(ValueError):
        squarefree_shift(mono("x2^3", 3), 3)


def test_is_squarefree():
    assert mono("x1*x2*x3", 3).is_squarefree()
    assert not mono("x1^2", 2).is_squarefree()
    assert squarefree_shift(mono("x2^3", 3)).is_squarefree()


def test_squarefree_shift_properties():
    for n in range(1, 7):
        for d in range(1, 5):
            for u in all_monomials(n, d):
                img = squarefree_shift(u)
                assert img.is_squarefree()
                assert img.degree == u.degree
                assert img.max_index() == u.max_index() + u.degree - 1


def test_squarefree_shift_injective_per_degree():
    for n in range(1, 7):
        for d in range(1, 5):
            layer = all_monomials(n, d)
            images = {squarefree_shift(u, n + d - 1) for u in layer}
            assert len(images) == len(layer)


def test_squarefree_shift_order_preserving_bijection():
    # degree-d monomials in n vars <-> degree-d squarefree monomials in
    # n+d-1 vars, both listed in descending lex order
    for n in range(1, 6):
        for d in range(1, 4):
            m = n + d - 1
            layer = [
                monomial_at_rank(n, d, r) for r in range(count_in_degree(n, d))
            ]
            images = [squarefree_shift(u, m) for u in layer]
            squarefree_desc = [
                Monomial([1 if i + 1 in combo else 0 for i in range(m)])
                for combo in itertools.combinations(range(1, m + 1), d)
            ]
            assert images == squarefree_desc


def test_rank_unrank_roundtrip():
    for n in range(1, 6):
        for d in range(0, 5):
            total = count_in_degree(n, d)
            layer = [monomial_at_rank(n, d, r) for r in range(total)]
            for r, u in enumerate(layer):
                assert rank_in_degree(u) == r
            # descending lex: each entry strictly below the previous
            for a, b in zip(layer, layer[1:]):
                assert lex_compare(a, b) == 1


def test_count_in_degree_matches_enumeration():
    for n in range(1, 6):
        for d in range(0, 5):
            assert count_in_degree(n, d) == len(all_monomials(n, d))


def test_parse_format_roundtrip():
    for text, n in [("x1^2*x3", 3), ("1", 2), ("x2*x3*x4", 5), ("x1^7", 1)]:
        u = parse_monomial(text, n)
        assert format_monomial(u) == text
        assert parse_monomial(format_monomial(u), n) == u


def test_parse_monomial_errors():
    with pytest.raises(ParseError):
        parse_monomial("x0", 3)
    with pytest.raises(ParseError):
        parse_monomial("x4", 3)
    with pytest.raises(ParseError):
        parse_monomial("x1^", 3)
    with pytest.raises(ParseError):
        parse_monomial("x1x2", 3)
    with pytest.raises(ParseError):
        parse_monomial("", 3)
    with pytest.raises(ParseError):
        parse_monomial("y1", 3)


def test_parse_monomial_repeated_variable_accumulates():
    assert parse_monomial("x1*x1", 2) == parse_monomial("x1^2", 2)


def test_exchange():
    u = mono("x2^2*x3", 3)
    assert u.exchange(3, 1) == mono("x1*x2^2", 3)
    with pytest.raises(ValueError):
        u.exchange(1, 2)
