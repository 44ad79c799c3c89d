"""Shared constructors and random-corpus generators for the test suite."""

import itertools

from hdx.ideal import MonomialIdeal
from hdx.monomial import Monomial, parse_monomial


def mono(text, n):
    return parse_monomial(text, n)


def ideal_of(n, *gens):
    return MonomialIdeal(n, [mono(g, n) for g in gens])


def random_monomial(rng, n, max_degree):
    exps = [0] * n
    for _ in range(rng.randint(1, max_degree)):
        exps[rng.randrange(n)] += 1
    return Monomial(exps)


def random_monomial_ideal(rng, n, max_degree, max_gens):
    gens = [random_monomial(rng, n, max_degree) for _ in range(rng.randint(1, max_gens))]
    return MonomialIdeal(n, gens)


def random_squarefree_ideal(rng, n, max_gens, max_support=None):
    if max_support is None:
        max_support = n
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        support = rng.sample(range(n), rng.randint(1, max_support))
        exps = [0] * n
        for i in support:
            exps[i] = 1
        gens.append(Monomial(exps))
    return MonomialIdeal(n, gens)


def borel_closure(gens):
    """All monomials reachable by swapping a variable for a smaller-indexed one."""
    seen = {g.exps for g in gens}
    queue = list(gens)
    while queue:
        u = queue.pop()
        for i in range(2, u.n + 1):
            if u.exponent(i) > 0:
                for j in range(1, i):
                    v = u.exchange(i, j)
                    if v.exps not in seen:
                        seen.add(v.exps)
                        queue.append(v)
    return [Monomial(e) for e in seen]


def random_strongly_stable_ideal(rng, n, max_degree, seeds=2):
    gens = [random_monomial(rng, n, max_degree) for _ in range(rng.randint(1, seeds))]
    return MonomialIdeal(n, borel_closure(gens))


def squarefree_veronese(n, d):
    """The ideal generated by every degree-d squarefree monomial."""
    gens = []
    for combo in itertools.combinations(range(n), d):
        exps = [0] * n
        for i in combo:
            exps[i] = 1
        gens.append(Monomial(exps))
    return MonomialIdeal(n, gens)


def maximal_ideal_power(n, d):
    """The d-th power of (x1, ..., xn): all degree-d monomials."""
    gens = []
    for combo in itertools.combinations_with_replacement(range(n), d):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        gens.append(Monomial(exps))
    return MonomialIdeal(n, gens)
