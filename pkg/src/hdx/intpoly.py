"""Dense univariate polynomial arithmetic over arbitrary-precision integers.

Everything downstream (Hilbert numerators, depth certificates, truncated
series expansions) reduces to exact integer polynomials in one variable t.
Coefficients are plain Python ints, so nothing overflows or rounds.
"""

from __future__ import annotations

import math

from .errors import ParseError

__all__ = [
    "IntPolynomial",
    "binomial",
    "pow_one_minus_t",
    "series_div",
    "parse_poly",
    "format_poly",
]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), with C(n, k) = 0 for k < 0 or k > n."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


class IntPolynomial:
    """An integer polynomial stored densely: coeffs[k] is the coefficient of t^k.

    The representation is normalized (no trailing zero coefficients); the
    zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def term(cls, coeff: int, power: int) -> IntPolynomial:
        """The single-term polynomial coeff * t^power."""
        if power < 0:
            raise ValueError("power must be nonnegative")
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def low_degree(self) -> int:
        """Smallest degree carrying a nonzero coefficient; -1 for zero."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> int:
        """Coefficient of t^k (zero outside the stored range)."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def shift(self, s: int) -> IntPolynomial:
        """Multiply by t^s."""
        if s < 0:
            raise ValueError("shift must be nonnegative")
        if self.is_zero():
            return self
        return IntPolynomial((0,) * s + self.coeffs)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, d in enumerate(other.coeffs):
                    out[i + j] += c * d
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        if e < 0:
            raise ValueError("negative powers are not defined")
        result = IntPolynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({format_poly(self)!r})"


def pow_one_minus_t(q: int) -> IntPolynomial:
    """The polynomial (1 - t)^q with exact signed binomial coefficients."""
    if q < 0:
        raise ValueError("exponent must be nonnegative")
    return IntPolynomial((-1) ** k * math.comb(q, k) for k in range(q + 1))


def series_div(p: IntPolynomial, q: int, trunc: int) -> IntPolynomial:
    """Coefficients 0..trunc of the formal power series p(t)/(1-t)^q.

    Exact: the expansion of 1/(1-t)^q has coefficient C(k+q-1, q-1) at t^k.
    """
    if q < 0:
        raise ValueError("denominator exponent must be nonnegative")
    if trunc < 0:
        raise ValueError("truncation degree must be nonnegative")
    if q == 0:
        return IntPolynomial(p.coeffs[: trunc + 1])
    out = [0] * (trunc + 1)
    for j, c in enumerate(p.coeffs[: trunc + 1]):
        if c:
            for k in range(j, trunc + 1):
                out[k] += c * math.comb(k - j + q - 1, q - 1)
    return IntPolynomial(out)


def format_poly(p: IntPolynomial, var: str = "t") -> str:
    """Render ascending by degree, e.g. ``5t^2 - 5t^3 + t^5``; zero is ``0``."""
    if p.is_zero():
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if mag == 1 else f"{mag}{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def parse_poly(text: str, var: str = "t") -> IntPolynomial:
    """Parse the syntax produced by :func:`format_poly`.

    Accepted terms: ``7``, ``t``, ``t^3``, ``5t^2``, ``5*t^2``, joined by
    ``+`` / ``-``; whitespace is ignored.
    """
    coeffs: dict[int, int] = {}
    i = 0
    n = len(text)

    def skip_ws(j):
        while j < n and text[j].isspace():
            j += 1
        return j

    def read_int(j):
        start = j
        while j < n and text[j].isdigit():
            j += 1
        if j == start:
            raise ParseError("expected a number", start)
        return int(text[start:j]), j

    i = skip_ws(i)
    if i == n:
        raise ParseError("empty polynomial", 0)
    first = True
    while i < n:
        sign = 1
        i = skip_ws(i)
        if not first or (i < n and text[i] in "+-"):
            if i >= n or text[i] not in "+-":
                raise ParseError("expected '+' or '-' between terms", i)
            sign = -1 if text[i] == "-" else 1
            i = skip_ws(i + 1)
        first = False
        coeff = 1
        power = 0
        saw_body = False
        if i < n and text[i].isdigit():
            coeff, i = read_int(i)
            saw_body = True
            i = skip_ws(i)
            if i < n and text[i] == "*":
                i = skip_ws(i + 1)
                if i >= n or text[i] != var:
                    raise ParseError(f"expected '{var}' after '*'", i)
        if i < n and text[i] == var:
            i += 1
            power = 1
            saw_body = True
            if i < n and text[i] == "^":
                power, i = read_int(i + 1)
        if not saw_body:
            raise ParseError("expected a term", i)
        coeffs[power] = coeffs.get(power, 0) + sign * coeff
        i = skip_ws(i)
    out = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return IntPolynomial(out)
