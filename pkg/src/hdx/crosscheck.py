"""Independent depth ceiling by truncated series nonnegativity.

The Hilbert depth equals the maximal p such that every coefficient of the
power series (1-t)^p H_I(t) is nonnegative. This module searches for that
p directly on a truncated expansion, giving the main algorithms a second
opinion that shares nothing with the peeling machinery beyond the
numerator itself.

The check is a test instrument, not a proof: only finitely many
coefficients are inspected. The horizon extends well past the numerator
degree and a warning is emitted whenever the inspected coefficients are
still falling toward the horizon, so an optimistic acceptance never passes
silently.
"""

import warnings

from .intpoly import series_div
from .lexify import HilbertFunctionView

__all__ = ["max_nonnegative_power"]


def max_nonnegative_power(
    view: HilbertFunctionView, trunc_extra: int | None = None
) -> int:
    """Largest p <= n with nonnegative truncated expansion of Q/(1-t)^(n-p).

    Inspects degrees 0..deg(Q) + trunc_extra (default trunc_extra = n + 1)
    and descends from the ceiling h(d+1) // h(d), which the coefficient at
    degree d+1 already enforces.
    """
    n = view.n
    numerator = view.numerator
    if numerator.is_zero():
        return n
    if trunc_extra is None:
        trunc_extra = n + 1
    if trunc_extra < 1:
        raise ValueError("trunc_extra must be at least 1")
    trunc = numerator.degree + trunc_extra
    d = numerator.low_degree
    upper = min(n, view.hilbert_value(d + 1) // view.hilbert_value(d))
    for p in range(upper, -1, -1):
        expansion = series_div(numerator, n - p, trunc)
        if all(c >= 0 for c in expansion.coeffs):
            tail = [expansion.coeff(k) for k in (trunc - 2, trunc - 1, trunc)]
            if tail[0] > tail[1] > tail[2] > 0:
                warnings.warn(
                    f"coefficients of (1-t)^{p} * H are strictly decreasing "
                    f"at the inspection horizon {trunc}; the reported depth "
                    f"may be optimistic, raise trunc_extra to confirm",
                    stacklevel=2,
                )
            return p
    return 0
