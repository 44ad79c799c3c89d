"""Monomials of a fixed polynomial ring.

Variables are x1..xn and all indices in the public interface are 1-based.
Besides the usual order/divisibility operations this module houses the
squarefree shift operator (x_{i_1}x_{i_2}...x_{i_d} with i_1 <= ... <= i_d
maps to x_{i_1}x_{i_2+1}...x_{i_d+d-1}) and rank/unrank of monomials inside
one degree layer under descending lexicographic order, which is what makes
lex-segment computations feasible in rings with 100 variables.
"""

from __future__ import annotations

import math

from .errors import ParseError

__all__ = [
    "Monomial",
    "lex_compare",
    "squarefree_shift",
    "parse_monomial",
    "format_monomial",
    "count_in_degree",
    "rank_in_degree",
    "monomial_at_rank",
]


class Monomial:
    """Exponent vector in a ring whose dimension is the vector length."""

    __slots__ = ("exps",)

    def __init__(self, exps):
        exps = tuple(int(e) for e in exps)
        if not exps:
            raise ValueError("the ring must have at least one variable")
        if any(e < 0 for e in exps):
            raise ValueError("exponents must be nonnegative")
        self.exps = exps

    @property
    def n(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def is_constant(self) -> bool:
        return self.degree == 0

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def max_index(self) -> int:
        """Largest 1-based variable index with a positive exponent."""
        for i in range(self.n - 1, -1, -1):
            if self.exps[i]:
                return i + 1
        raise ValueError("the constant monomial has no variables")

    def exponent(self, i: int) -> int:
        """Exponent of x_i (1-based)."""
        return self.exps[i - 1]

    def divides(self, other: Monomial) -> bool:
        self._require_same_ring(other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def times_var(self, i: int) -> Monomial:
        e = list(self.exps)
        e[i - 1] += 1
        return Monomial(e)

    def exchange(self, src: int, dst: int) -> Monomial:
        """x_dst * self / x_src; requires x_src to divide self."""
        if self.exps[src - 1] == 0:
            raise ValueError(f"x{src} does not divide the monomial")
        e = list(self.exps)
        e[src - 1] -= 1
        e[dst - 1] += 1
        return Monomial(e)

    def variables(self) -> list[int]:
        """The 1-based variable indices, listed with multiplicity, ascending."""
        out = []
        for i, e in enumerate(self.exps):
            out.extend([i + 1] * e)
        return out

    def _require_same_ring(self, other: Monomial):
        if self.n != other.n:
            raise ValueError(
                f"ring dimension mismatch: {self.n} vs {other.n} variables"
            )

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def __lt__(self, other):
        self._require_same_ring(other)
        return self.exps < other.exps

    def __le__(self, other):
        self._require_same_ring(other)
        return self.exps <= other.exps

    def __gt__(self, other):
        self._require_same_ring(other)
        return self.exps > other.exps

    def __ge__(self, other):
        self._require_same_ring(other)
        return self.exps >= other.exps

    def __repr__(self):
        return f"Monomial({format_monomial(self)!r}, n={self.n})"


def lex_compare(u: Monomial, v: Monomial) -> int:
    """-1, 0 or 1 as u is lex-smaller, equal or lex-larger than v.

    Pure lexicographic comparison of exponent vectors, left to right, with
    the larger exponent at the first differing position winning. There is
    no degree pre-comparison, so across different degrees e.g. x1^2 > x1x2.
    """
    u._require_same_ring(v)
    if u.exps == v.exps:
        return 0
    return 1 if u.exps > v.exps else -1


def squarefree_shift(u: Monomial, target_ring: int | None = None) -> Monomial:
    """Spread the variables of u apart so the result is squarefree.

    Writing u = x_{i_1}...x_{i_d} with i_1 <= ... <= i_d, the image is
    x_{i_1} x_{i_2+1} ... x_{i_d+d-1}, a squarefree monomial of the same
    degree living in a ring with at least max_index(u) + deg(u) - 1
    variables.
    """
    idxs = u.variables()
    if not idxs:
        raise ValueError("the constant monomial has no squarefree shift")
    needed = idxs[-1] + len(idxs) - 1
    if target_ring is None:
        target_ring = needed
    if target_ring < needed:
        raise ValueError(
            f"target ring needs at least {needed} variables, got {target_ring}"
        )
    exps = [0] * target_ring
    for offset, i in enumerate(idxs):
        exps[i + offset - 1] = 1
    return Monomial(exps)


def format_monomial(u: Monomial) -> str:
    """Canonical text form, e.g. ``x1^2*x3``; the constant monomial is ``1``."""
    parts = []
    for i, e in enumerate(u.exps):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def parse_monomial(text: str, n: int, offset: int = 0) -> Monomial:
    """Parse ``x<k>`` optionally ``^<e>``, joined by ``*``; ``1`` is constant.

    ``offset`` shifts reported error positions, for callers embedding the
    monomial in a larger input.
    """
    s = text.strip()
    lead = offset + (len(text) - len(text.lstrip()))
    if s == "1":
        return Monomial([0] * n)
    if not s:
        raise ParseError("empty monomial", lead)
    exps = [0] * n
    pos = 0
    while True:
        if pos >= len(s) or s[pos] != "x":
            raise ParseError("expected 'x<index>'", lead + pos)
        pos += 1
        start = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if pos == start:
            raise ParseError("expected a variable index after 'x'", lead + pos)
        idx = int(s[start:pos])
        if not 1 <= idx <= n:
            raise ParseError(f"variable index x{idx} outside 1..{n}", lead + start)
        exp = 1
        if pos < len(s) and s[pos] == "^":
            pos += 1
            start = pos
            while pos < len(s) and s[pos].isdigit():
                pos += 1
            if pos == start:
                raise ParseError("expected an exponent after '^'", lead + pos)
            exp = int(s[start:pos])
        exps[idx - 1] += exp
        if pos == len(s):
            break
        if s[pos] != "*":
            raise ParseError("expected '*' between variables", lead + pos)
        pos += 1
    return Monomial(exps)


def count_in_degree(nvars: int, degree: int) -> int:
    """Number of monomials of the given degree in nvars variables."""
    if degree < 0:
        return 0
    if nvars == 0:
        return 1 if degree == 0 else 0
    return math.comb(nvars + degree - 1, degree)


def rank_in_degree(u: Monomial) -> int:
    """Rank of u among same-degree monomials of its ring, descending lex.

    The lex-largest monomial of the degree has rank 0. Monomials beating u
    at position i share the prefix and carry a larger exponent there; their
    count telescopes to a single binomial, so the whole rank costs O(n).
    """
    rank = 0
    remaining = u.degree
    for i, e in enumerate(u.exps[:-1]):
        tail_vars = u.n - i - 1
        gap = remaining - e - 1
        if gap >= 0:
            rank += math.comb(tail_vars + gap, gap)
        remaining -= e
    return rank


def monomial_at_rank(n: int, degree: int, rank: int) -> Monomial:
    """Inverse of :func:`rank_in_degree` within one degree layer.

    At each position, monomials with exponent >= a there number
    C(tail_vars + remaining - a, remaining - a), decreasing in a; binary
    search finds the exponent whose block contains the rank.
    """
    total = count_in_degree(n, degree)
    if not 0 <= rank < total:
        raise ValueError(f"rank {rank} outside 0..{total - 1}")
    exps = []
    remaining = degree
    for i in range(n - 1):
        tail_vars = n - i - 1

        def block_from(a):
            if a > remaining:
                return 0
            return math.comb(tail_vars + remaining - a, remaining - a)

        lo, hi = 0, remaining
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if block_from(mid) > rank:
                lo = mid
            else:
                hi = mid - 1
        rank -= block_from(lo + 1)
        exps.append(lo)
        remaining -= lo
    exps.append(remaining)
    return Monomial(exps)
