"""Hilbert functions as numerator/(1-t)^n, and lexification.

Every graded ideal shares its Hilbert function with a unique lex ideal.
This module evaluates Hilbert functions exactly and reconstructs that lex
ideal degree by degree: in degree k the ideal's piece must be the initial
lex segment of size h(k), and the new minimal generators are the segment
members beyond the shadow of the previous degree. Termination is decided
exactly, not by a growth heuristic: whenever a degree adds no generator,
the closed-form numerator of the generators so far either matches the
target (done) or pinpoints the next generator-bearing degree. Segments are
handled through rank/unrank arithmetic rather than enumeration, which
keeps 100-variable inputs cheap.
"""

from __future__ import annotations

from .errors import InputError, MacaulayViolationError
from .ideal import MonomialIdeal
from .intpoly import IntPolynomial, binomial, pow_one_minus_t
from .monomial import Monomial, count_in_degree, monomial_at_rank, rank_in_degree

__all__ = [
    "HilbertFunctionView",
    "ideal_view",
    "lexify",
    "lex_segment",
    "segment_shadow_size",
]


class HilbertFunctionView:
    """The function k -> dim_K I_k, presented as numerator/(1-t)^n.

    Values are exact integers. Construction checks nonnegativity of the
    first ``horizon`` values (default: numerator degree + n + 1) so that
    obviously invalid series inputs are rejected early; a negative value
    surfacing later still raises at evaluation time.
    """

    def __init__(
        self,
        numerator: IntPolynomial,
        n: int,
        check: bool = True,
        horizon: int | None = None,
    ):
        if n < 1:
            raise InputError("ring dimension must be positive")
        self.numerator = numerator
        self.n = n
        if check:
            if horizon is None:
                horizon = max(numerator.degree, 0) + n + 1
            for k in range(horizon + 1):
                self.hilbert_value(k)

    def hilbert_value(self, k: int) -> int:
        """dim_K I_k, i.e. the coefficient of t^k in numerator/(1-t)^n."""
        if k < 0:
            raise ValueError("degree must be nonnegative")
        total = 0
        for j, c in enumerate(self.numerator.coeffs[: k + 1]):
            if c:
                total += c * binomial(k - j + self.n - 1, self.n - 1)
        if total < 0:
            raise InputError(
                f"Hilbert value {total} at degree {k} is negative; the series "
                f"is not the Hilbert series of a graded ideal"
            )
        return total

    def __repr__(self):
        return f"HilbertFunctionView(n={self.n}, numerator={self.numerator!r})"


def ideal_view(ideal: MonomialIdeal) -> HilbertFunctionView:
    """The Hilbert function of an ideal; skips the admissibility re-check."""
    return HilbertFunctionView(ideal.hilbert_numerator(), ideal.n, check=False)


def lex_segment(n: int, degree: int, size: int) -> list[Monomial]:
    """The first ``size`` degree-``degree`` monomials in descending lex order."""
    if size > count_in_degree(n, degree):
        raise ValueError("segment larger than the degree layer")
    return [monomial_at_rank(n, degree, r) for r in range(size)]


def segment_shadow_size(n: int, degree: int, size: int) -> int:
    """Number of degree+1 multiples of the initial lex segment of ``size``.

    The shadow of an initial lex segment is itself an initial lex segment,
    so its size is one more than the rank of its smallest element, which is
    the segment's smallest element times the last variable.
    """
    if size == 0:
        return 0
    smallest = monomial_at_rank(n, degree, size - 1)
    exps = list(smallest.exps)
    exps[-1] += 1
    return rank_in_degree(Monomial(exps)) + 1


def lexify(
    view: HilbertFunctionView, max_degree: int = 500
) -> tuple[MonomialIdeal, int]:
    """The unique lex ideal with the given Hilbert function, plus its shift bound.

    Returns (L, m) where m = max(max_index(u) + deg(u) - 1) over the minimal
    generators of L, the ring dimension the squarefree shift of L lives in.

    Termination is certified exactly: at a degree adding no generator, the
    generators so far form a lex (hence stable) ideal whose closed-form
    numerator either equals the target numerator (construction complete) or
    first differs at the degree carrying the next generator, to which the
    loop jumps directly.

    Raises MacaulayViolationError when no graded ideal has this Hilbert
    function (a degree's value undercuts the shadow forced by the previous
    degree, or overshoots the whole degree layer), and InputError when the
    numerator is zero or a generator degree passes ``max_degree``.
    """
    n = view.n
    if view.numerator.is_zero():
        raise InputError("the zero series has no lex ideal")
    if view.hilbert_value(0) != 0:
        raise InputError(
            "a proper graded ideal has no elements in degree 0; "
            "the series does not come from an ideal"
        )
    gens: list[Monomial] = []
    # running closed-form numerator of the ideal generated so far:
    # each generator u contributes t^deg(u) * (1-t)^(max_index(u)-1)
    partial = [0]
    shadow = 0
    k = view.numerator.low_degree
    while True:
        if k > max_degree:
            raise InputError(
                f"lexification needs a generator beyond degree {max_degree}; "
                f"raise max_degree if the input is genuine"
            )
        layer = count_in_degree(n, k)
        hk = view.hilbert_value(k)
        if hk < shadow:
            raise MacaulayViolationError(
                f"h({k}) = {hk} but degree {k - 1} already forces "
                f"{shadow} monomials in degree {k}"
            )
        if hk > layer:
            raise MacaulayViolationError(
                f"h({k}) = {hk} exceeds the {layer} monomials of degree {k}"
            )
        if hk > shadow:
            new = [monomial_at_rank(n, k, r) for r in range(shadow, hk)]
            gens.extend(new)
            for u in new:
                top = u.max_index() - 1
                if k + top >= len(partial):
                    partial.extend([0] * (k + top + 1 - len(partial)))
                for s, c in enumerate(pow_one_minus_t(top).coeffs):
                    partial[k + s] += c
            shadow = rank_in_degree(new[-1].times_var(n)) + 1
            k += 1
            continue
        difference = view.numerator - IntPolynomial(partial)
        if difference.is_zero():
            break
        jump = difference.low_degree
        if difference.coeff(jump) < 0:
            raise MacaulayViolationError(
                f"h({jump}) falls below the ideal already forced by "
                f"degree {k - 1}"
            )
        # between k and jump the series matches the current ideal, whose
        # degree-jump piece is the iterated shadow
        shadow = 0
        for j, c in enumerate(partial):
            if c:
                shadow += c * binomial(jump - j + n - 1, n - 1)
        k = jump
    ideal = MonomialIdeal(n, gens, assume_minimal=True)
    m = max(g.max_index() + g.degree - 1 for g in ideal.gens)
    return ideal, m
