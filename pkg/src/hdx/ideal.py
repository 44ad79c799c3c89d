"""Monomial ideals given by minimal generators.

Provides divisibility membership, counts of squarefree monomials per degree,
the numerator Q(t) of the Hilbert series H_I(t) = Q(t)/(1-t)^n, stability
predicates, the squarefree shift of a whole ideal, and the text format
shared with the CLI.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import InputError, ParseError
from .intpoly import IntPolynomial, binomial, pow_one_minus_t, series_div
from .monomial import (
    Monomial,
    format_monomial,
    parse_monomial,
    rank_in_degree,
    squarefree_shift,
)

__all__ = [
    "MonomialIdeal",
    "SquarefreeCounts",
    "squarefree_shift_ideal",
    "layer_counts_from_numerator",
    "parse_ideal",
    "format_ideal",
]

# Squarefree counting strategy limits: the bitmask closure table holds 2^n
# flags, the inclusion-exclusion loop visits 2^s generator subsets.
_CLOSURE_MAX_VARS = 22
_INCL_EXCL_MAX_GENS = 22


@dataclass(frozen=True)
class SquarefreeCounts:
    """Numbers a_d..a_n of squarefree degree-i monomials lying in an ideal."""

    d: int
    counts: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.d + len(self.counts) - 1

    def a(self, i: int) -> int:
        if self.d <= i <= self.n:
            return self.counts[i - self.d]
        return 0

    def as_poly(self) -> IntPolynomial:
        return IntPolynomial([0] * self.d + list(self.counts))


class MonomialIdeal:
    """A proper monomial ideal, stored as its minimal generating set.

    Construction removes divisibility-redundant generators; afterwards the
    ideal is immutable and all queries are read-only. Callers that already
    guarantee minimality (the lexification builder, whose fresh generators
    are never multiples of earlier ones) may pass ``assume_minimal`` to
    skip the quadratic reduction.
    """

    def __init__(self, n: int, gens, assume_minimal: bool = False):
        if n < 1:
            raise InputError("ring dimension must be positive")
        gens = list(gens)
        if not gens:
            raise InputError("an ideal needs at least one generator")
        for g in gens:
            if not isinstance(g, Monomial):
                raise TypeError("generators must be Monomial instances")
            if g.n != n:
                raise InputError(
                    f"generator {format_monomial(g)} lives in a "
                    f"{g.n}-variable ring, not {n}"
                )
            if g.is_constant():
                raise InputError("the constant monomial generates an improper ideal")
        self.n = n
        if not assume_minimal:
            gens = _minimalize(gens)
        self.gens = tuple(sorted(gens, key=lambda u: u.exps, reverse=True))
        self._by_degree: dict[int, list[Monomial]] = {}
        self._exact: dict[int, set[tuple[int, ...]]] = {}
        for g in self.gens:
            self._by_degree.setdefault(g.degree, []).append(g)
            self._exact.setdefault(g.degree, set()).add(g.exps)
        self._numerator: IntPolynomial | None = None
        self._stable: bool | None = None
        self._strongly_stable: bool | None = None
        self._lex: bool | None = None

    @property
    def min_degree(self) -> int:
        return min(g.degree for g in self.gens)

    @property
    def max_degree(self) -> int:
        return max(g.degree for g in self.gens)

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.gens)

    def contains(self, u: Monomial) -> bool:
        """Membership: true iff some generator divides u."""
        if u.n != self.n:
            raise ValueError(
                f"ring dimension mismatch: ideal has {self.n} variables, "
                f"monomial has {u.n}"
            )
        du = u.degree
        for deg, bucket in self._by_degree.items():
            if deg < du:
                if any(g.divides(u) for g in bucket):
                    return True
            elif deg == du and u.exps in self._exact[deg]:
                return True
        return False

    # -- squarefree layer counts ------------------------------------------

    def squarefree_counts(self) -> SquarefreeCounts:
        """a_i = number of squarefree degree-i ring monomials in the ideal."""
        if not self.is_squarefree():
            raise InputError("squarefree counting needs a squarefree ideal")
        n, d = self.n, self.min_degree
        masks = [_support_mask(g) for g in self.gens]
        if n <= _CLOSURE_MAX_VARS:
            per_degree = _layer_counts_by_closure(n, masks)
        elif len(masks) <= _INCL_EXCL_MAX_GENS:
            per_degree = _layer_counts_by_inclusion_exclusion(n, masks)
        else:
            raise InputError(
                f"squarefree counting supports at most {_CLOSURE_MAX_VARS} "
                f"variables or {_INCL_EXCL_MAX_GENS} generators "
                f"(got n={n}, {len(masks)} generators)"
            )
        return SquarefreeCounts(d, tuple(per_degree[d : n + 1]))

    # -- Hilbert numerator -------------------------------------------------

    def hilbert_numerator(self) -> IntPolynomial:
        """The unique Q with H_I(t) = Q(t)/(1-t)^n.

        Stable ideals take the closed form from the minimal free resolution;
        everything else goes through the pivot-splitting recursion.
        """
        if self._numerator is None:
            if self.is_stable():
                self._numerator = self.hilbert_numerator_stable(check=False)
            else:
                one = IntPolynomial([1])
                kpoly = _quotient_kpoly(tuple(g.exps for g in self.gens), {})
                self._numerator = one - kpoly
        return self._numerator

    def hilbert_numerator_stable(self, check: bool = True) -> IntPolynomial:
        """Closed-form numerator from the minimal resolution of a stable ideal.

        Each generator u contributes t^deg(u) * (1-t)^e, where e counts the
        admissible resolution indices: e = max_index(u) - 1 for a stable
        ideal, and e = max_index(u) - deg(u) for a squarefree stable ideal
        (indices below max_index(u) already dividing u are excluded there).
        """
        if check and not self.is_stable():
            raise InputError("the ideal is not stable; closed form does not apply")
        squarefree = self.is_squarefree()
        acc = [0] * (max(g.max_index() + g.degree for g in self.gens))
        for g in self.gens:
            e = g.max_index() - (g.degree if squarefree else 1)
            for s, c in enumerate(pow_one_minus_t(e).coeffs):
                acc[g.degree + s] += c
        return IntPolynomial(acc)

    # -- stability predicates ----------------------------------------------
    #
    # For squarefree ideals both predicates use the squarefree variant of
    # the exchange condition: only the substitutions x_j*u/x_i with x_j not
    # already dividing u are required to stay inside the ideal. That is the
    # notion under which squarefree shifts of lex ideals are (strongly)
    # stable and under which the closed-form numerator above is valid.

    def is_stable(self) -> bool:
        """For each generator u and j < max_index(u): x_j*u/x_max in I."""
        if self._stable is None:
            squarefree = self.is_squarefree()
            self._stable = all(
                self.contains(g.exchange(g.max_index(), j))
                for g in self.gens
                for j in range(1, g.max_index())
                if not (squarefree and g.exponent(j) > 0)
            )
        return self._stable

    def is_strongly_stable(self) -> bool:
        """For each generator u, x_i | u and j < i: x_j*u/x_i in I."""
        if self._strongly_stable is None:
            squarefree = self.is_squarefree()
            self._strongly_stable = all(
                self.contains(g.exchange(i, j))
                for g in self.gens
                for i in range(1, self.n + 1)
                if g.exponent(i) > 0
                for j in range(1, i)
                if not (squarefree and g.exponent(j) > 0)
            )
        return self._strongly_stable

    def is_lex(self) -> bool:
        """Does every graded piece form an initial lex segment?

        Checked degree by degree up to the maximal generator degree: the
        degree-k piece of the ideal has dim_K I_k elements, and it is an
        initial segment iff its lex-smallest element (the smallest
        x_n-padded multiple of a generator) sits at descending-lex rank
        dim_K I_k - 1.
        """
        if self._lex is None:
            self._lex = self._check_lex()
        return self._lex

    def _check_lex(self) -> bool:
        top = self.max_degree
        dims = series_div(self.hilbert_numerator(), self.n, top)
        for k in range(1, top + 1):
            hk = dims.coeff(k)
            if hk == 0:
                continue
            smallest = None
            for g in self.gens:
                if g.degree <= k:
                    exps = list(g.exps)
                    exps[-1] += k - g.degree
                    if smallest is None or tuple(exps) < smallest:
                        smallest = tuple(exps)
            if rank_in_degree(Monomial(smallest)) != hk - 1:
                return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.n == other.n
            and self.gens == other.gens
        )

    def __hash__(self):
        return hash((self.n, self.gens))

    def __repr__(self):
        return f"MonomialIdeal({format_ideal(self)!r})"


def _minimalize(gens: list[Monomial]) -> list[Monomial]:
    kept: list[Monomial] = []
    for g in sorted(set(gens), key=lambda u: (u.degree, u.exps)):
        if not any(h.divides(g) for h in kept):
            kept.append(g)
    return kept


def _support_mask(g: Monomial) -> int:
    mask = 0
    for i, e in enumerate(g.exps):
        if e:
            mask |= 1 << i
    return mask


def _layer_counts_by_closure(n: int, masks: list[int]) -> list[int]:
    """Per-degree counts of the up-closure of the generator supports.

    Marks each generator's support in a 2^n table and propagates membership
    upward one bit at a time, so entry m ends up true iff the squarefree
    monomial with support m is a multiple of some generator.
    """
    member = np.zeros(1 << n, dtype=bool)
    member[np.array(masks, dtype=np.int64)] = True
    for b in range(n):
        view = member.reshape(-1, 2, 1 << b)
        view[:, 1, :] |= view[:, 0, :]
    sizes = np.arange(1 << n, dtype=np.int64)
    pop = np.zeros(1 << n, dtype=np.int64)
    for b in range(n):
        pop += (sizes >> b) & 1
    counts = np.bincount(pop[member], minlength=n + 1)
    return [int(c) for c in counts]


def _layer_counts_by_inclusion_exclusion(n: int, masks: list[int]) -> list[int]:
    """Same counts via inclusion-exclusion over generator-support unions."""
    s = len(masks)
    union = [0] * (1 << s)
    weight_by_size = [0] * (n + 1)
    for sub in range(1, 1 << s):
        low = sub & -sub
        union[sub] = union[sub ^ low] | masks[low.bit_length() - 1]
        sign = 1 if sub.bit_count() % 2 == 1 else -1
        weight_by_size[union[sub].bit_count()] += sign
    counts = [0] * (n + 1)
    for i in range(n + 1):
        counts[i] = sum(
            w * binomial(n - k, i - k) for k, w in enumerate(weight_by_size) if w
        )
    return counts


def layer_counts_from_numerator(numerator: IntPolynomial, m: int) -> SquarefreeCounts:
    """Squarefree layer counts of an ideal known only through its numerator.

    A squarefree ideal with counts a_d..a_m in an m-variable ring satisfies
    Q(t) = sum a_i t^i (1-t)^(m-i), which is triangular in the a_i, so exact
    peeling recovers them without touching the ring. This is what makes the
    lexification pipeline viable when the shifted ring is far too large to
    enumerate.
    """
    if numerator.is_zero():
        raise InputError("zero numerator has no layer counts")
    d = numerator.low_degree
    if d < 1 or numerator.degree > m:
        raise InputError("numerator incompatible with an m-variable squarefree ideal")
    work = list(numerator.coeffs) + [0] * (m + 1 - len(numerator.coeffs))
    counts = []
    for i in range(d, m + 1):
        a = work[i]
        if a < 0:
            raise InputError(
                f"negative layer count a_{i} = {a}; the series does not "
                f"belong to a squarefree monomial ideal in {m} variables"
            )
        counts.append(a)
        if a:
            e = m - i
            for s in range(e + 1):
                work[i + s] -= a * ((-1) ** s) * binomial(e, s)
    if any(work):
        raise InputError("numerator is not a combination of t^i (1-t)^(m-i)")
    return SquarefreeCounts(d, tuple(counts))


def _quotient_kpoly(gens: tuple[tuple[int, ...], ...], memo: dict) -> IntPolynomial:
    """Numerator of H_{S/I}(t) over (1-t)^n for I given by minimal gens.

    Splits on a variable occurring in several generators, using
    K(I) = K(I + (x_j)) + t * K(I : x_j); monomials with pairwise disjoint
    supports form a regular sequence and give the product base case.
    """
    if not gens:
        return IntPolynomial([1])
    key = tuple(sorted(gens))
    cached = memo.get(key)
    if cached is not None:
        return cached
    n = len(gens[0])
    occupancy = [0] * n
    for g in gens:
        for i, e in enumerate(g):
            if e:
                occupancy[i] += 1
    j = max(range(n), key=occupancy.__getitem__)
    if occupancy[j] <= 1:
        result = IntPolynomial([1])
        for g in gens:
            factor = IntPolynomial([1]) - IntPolynomial.term(1, sum(g))
            result = result * factor
    else:
        pivot = tuple(1 if i == j else 0 for i in range(n))
        added = tuple(g for g in gens if g[j] == 0) + (pivot,)
        colon = _minimalize_exps(
            [g[:j] + (g[j] - 1,) + g[j + 1 :] if g[j] else g for g in gens]
        )
        result = _quotient_kpoly(added, memo) + _quotient_kpoly(colon, memo).shift(1)
    memo[key] = result
    return result


def _minimalize_exps(gens: list[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    kept: list[tuple[int, ...]] = []
    for g in sorted(set(gens), key=lambda e: (sum(e), e)):
        if not any(all(a <= b for a, b in zip(h, g)) for h in kept):
            kept.append(g)
    return tuple(kept)


def squarefree_shift_ideal(
    ideal: MonomialIdeal, check: bool = True
) -> tuple[MonomialIdeal, int]:
    """Apply the squarefree shift to every generator.

    Returns the shifted ideal in a ring of dimension
    m = max(max_index(u) + deg(u) - 1) over the generators, together with m.
    For strongly stable input the shifted generators are again a minimal
    generating set; otherwise the construction still goes through, with a
    warning, and redundant images are dropped.
    """
    if check and not ideal.is_strongly_stable():
        warnings.warn(
            "squarefree shift applied to a non-strongly-stable ideal; the "
            "Hilbert-series relation between the two ideals is not guaranteed",
            stacklevel=2,
        )
    m = max(g.max_index() + g.degree - 1 for g in ideal.gens)
    return MonomialIdeal(m, [squarefree_shift(g, m) for g in ideal.gens]), m


def format_ideal(ideal: MonomialIdeal) -> str:
    """Canonical text form: dimension header, generators in descending lex."""
    gens = ", ".join(format_monomial(g) for g in ideal.gens)
    return f"n={ideal.n}; {gens}"


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse ``n=<dim>; <monomial>, <monomial>, ...``."""
    head, sep, body = text.partition(";")
    if not sep:
        raise ParseError("expected ';' after the dimension header", len(text))
    stripped = head.strip()
    if not stripped.startswith("n"):
        raise ParseError("expected a dimension header like 'n=3'", _skip_ws(text, 0))
    eq = head.find("=")
    if eq < 0:
        raise ParseError("expected '=' in the dimension header", len(head))
    dim_text = head[eq + 1 :].strip()
    if not dim_text.isdigit():
        raise ParseError("ring dimension must be a positive integer", eq + 1)
    n = int(dim_text)
    if n < 1:
        raise ParseError("ring dimension must be a positive integer", eq + 1)
    if not body.strip():
        raise ParseError("expected at least one generator", len(text))
    gens = []
    offset = len(head) + 1
    for segment in body.split(","):
        if not segment.strip():
            raise ParseError("empty generator", offset)
        gens.append(parse_monomial(segment, n, offset=offset))
        offset += len(segment) + 1
    return MonomialIdeal(n, gens)


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos
