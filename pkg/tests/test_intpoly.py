import random

from hdx.intpoly import (
    IntPolynomial,
    binomial,
    format_poly,
    parse_poly,
    pow_one_minus_t,
    series_div,
)

P = IntPolynomial


def series_div_by_geometric(p, q, trunc):
    """Independent oracle: multiply q times by the truncated geometric series."""
    out = list(p.coeffs[: trunc + 1]) + [0] * (trunc + 1 - len(p.coeffs))
    for _ in range(q):
        acc = 0
        for k in range(trunc + 1):
            acc += out[k]
            out[k] = acc
    return IntPolynomial(out)


def test_add():
    assert P([1, 1]) + P([1, -1]) == P([2])
    p = P([0, 3, 0, -7, 2])
    assert p + P() == p
    # 5t^2 - 5t^3 plus t^5
    assert P([0, 0, 5, -5]) + P.term(1, 5) == P([0, 0, 5, -5, 0, 1])


def test_mul():
    one_minus_t = P([1, -1])
    assert one_minus_t * one_minus_t == P([1, -2, 1])
    p = P([2, 0, -1, 4])
    assert p * P([1]) == p
    # 5t^2 * (1+t)^2
    assert P.term(5, 2) * (P([1, 1]) ** 2) == P([0, 0, 5, 10, 5])


def test_mul_commutes_and_adds_degrees():
    rng = random.Random(7)
    for _ in range(50):
        p = P([rng.randint(-9, 9) for _ in range(rng.randint(1, 8))])
        q = P([rng.randint(-9, 9) for _ in range(rng.randint(1, 8))])
        assert p * q == q * p
        if not p.is_zero() and not q.is_zero():
            assert (p * q).degree == p.degree + q.degree


def test_binomial_small():
    assert binomial(4, 2) == 6
    assert binomial(10, 5) == 252
    assert binomial(0, 0) == 1
    assert binomial(5, -1) == 0
    assert binomial(5, 6) == 0


def test_binomial_matches_falling_product():
    # C(45, 3) by direct product
    assert binomial(45, 3) == 45 * 44 * 43 // 6
    assert binomial(45, 3) == 14190


def test_binomial_pascal_rule():
    for n in range(1, 61):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_pow_one_minus_t():
    assert pow_one_minus_t(0) == P([1])
    assert pow_one_minus_t(2) == P([1, -2, 1])
    assert pow_one_minus_t(5) == P([1, -5, 10, -10, 5, -1])


def test_series_div_examples():
    # (5t^2 - 5t^3 + t^5)/(1-t) = 5t^2 + 0t^3 + 0t^4 + t^5 + ...
    p = P([0, 0, 5, -5, 0, 1])
    assert series_div(p, 1, 5) == P([0, 0, 5, 0, 0, 1])
    assert series_div(P([1]), 0, 3) == P([1])
    # (5t - 10t^2 + 10t^3 - 5t^4 + t^5)/(1-t)^2 = 5t + 0t^2 + 5t^3 + 5t^4 + 6t^5 + ...
    q = P([0, 5, -10, 10, -5, 1])
    assert series_div(q, 2, 5) == P([0, 5, 0, 5, 5, 6])


def test_series_div_agrees_with_geometric_oracle():
    rng = random.Random(11)
    for _ in range(60):
        p = P([rng.randint(-20, 20) for _ in range(rng.randint(1, 9))])
        q = rng.randint(0, 6)
        trunc = rng.randint(0, 14)
        assert series_div(p, q, trunc) == series_div_by_geometric(p, q, trunc)


def test_series_div_inverts_multiplication():
    rng = random.Random(13)
    for _ in range(60):
        p = P([rng.randint(-15, 15) for _ in range(rng.randint(1, 8))])
        q = rng.randint(0, 7)
        trunc = max(p.degree, 0) + 3
        product = p * pow_one_minus_t(q)
        back = series_div(product, q, trunc)
        assert IntPolynomial(back.coeffs[: p.degree + 1]) == p
        assert all(c == 0 for c in back.coeffs[p.degree + 1 :])


def test_normalization():
    assert P([0, 1, 0, 0]).coeffs == (0, 1)
    assert P([0, 0]).degree == -1
    assert P().is_zero()
    assert P([0, 0, 3]).low_degree == 2
    assert P().low_degree == -1


def test_format_and_parse_roundtrip():
    rng = random.Random(17)
    samples = [P(), P([7]), P([-1, 0, 1]), P([0, 0, 5, -5, 0, 1])]
    samples += [
        P([rng.randint(-30, 30) for _ in range(rng.randint(1, 9))]) for _ in range(30)
    ]
    for p in samples:
        assert parse_poly(format_poly(p)) == p


def test_parse_poly_variants():
    assert parse_poly("5t^2-5t^3+t^5") == P([0, 0, 5, -5, 0, 1])
    assert parse_poly("5*t^2 - 5*t^3 + t^5") == P([0, 0, 5, -5, 0, 1])
    assert parse_poly("-t + 3") == P([3, -1])
    assert parse_poly("0") == P()
    assert parse_poly("t + t") == P([0, 2])


def test_parse_poly_errors():
    import pytest

    from hdx.errors import ParseError

    with pytest.raises(ParseError):
        parse_poly("")
    with pytest.raises(ParseError):
        parse_poly("5t^")
    with pytest.raises(ParseError):
        parse_poly("3 4")
    with pytest.raises(ParseError):
        parse_poly("x^2")
