"""Multi-index bookkeeping for truncated Taylor (jet) arithmetic.

Coefficients are Taylor coefficients c_alpha = d^alpha f / alpha!, stored in a
flat array indexed by graded-lexicographic multi-index order. Supported sizes:
1..3 variables, total degree 0..3.
"""
from functools import lru_cache
from math import factorial

import numpy as np

MAX_ORDER = 3
MAX_VARS = 3


@lru_cache(maxsize=None)
def multi_indices(nvars, order):
    """All multi-indices with |alpha| <= order, graded then lexicographic."""
    idx = []
    for total in range(order + 1):
        level = []

        def fill(prefix, remaining, slots):
            if slots == 1:
                level.append(tuple(prefix) + (remaining,))
                return
            for a in range(remaining, -1, -1):
                fill(prefix + [a], remaining - a, slots - 1)

        fill([], total, nvars)
        idx.extend(level)
    return tuple(idx)


@lru_cache(maxsize=None)
def coef_count(nvars, order):
    return len(multi_indices(nvars, order))


@lru_cache(maxsize=None)
def index_map(nvars, order):
    return {alpha: i for i, alpha in enumerate(multi_indices(nvars, order))}


@lru_cache(maxsize=None)
def mult_table(nvars, order):
    """Rows (ia, ib, ic): product accumulates c[ic] += a[ia] * b[ib]."""
    midx = multi_indices(nvars, order)
    imap = index_map(nvars, order)
    rows = []
    for ia, alpha in enumerate(midx):
        for ib, beta in enumerate(midx):
            gamma = tuple(a + b for a, b in zip(alpha, beta))
            if sum(gamma) <= order:
                rows.append((ia, ib, imap[gamma]))
    return np.array(rows, dtype=np.int32)


@lru_cache(maxsize=None)
def mult_table_list(nvars, order):
    return [tuple(r) for r in mult_table(nvars, order).tolist()]


@lru_cache(maxsize=None)
def diff_table(nvars, order, axis):
    """Rows (src, dst, factor): d/du_axis maps an order jet to an order-1 jet.

    Taylor coefficients transform as new[beta] = old[beta + e_axis] * (beta_axis + 1).
    """
    imap_hi = index_map(nvars, order)
    rows = []
    for dst, beta in enumerate(multi_indices(nvars, order - 1)):
        alpha = tuple(b + (1 if i == axis else 0) for i, b in enumerate(beta))
        rows.append((imap_hi[alpha], dst, float(beta[axis] + 1)))
    return tuple(rows)


@lru_cache(maxsize=None)
def factorial_weights(nvars, order):
    """alpha! per coefficient slot: derivative = coefficient * alpha!."""
    return np.array(
        [float(np.prod([factorial(a) for a in alpha]))
         for alpha in multi_indices(nvars, order)]
    )


@lru_cache(maxsize=None)
def linear_index(nvars, order, axis):
    """Slot of the first-order monomial u_axis."""
    e = tuple(1 if i == axis else 0 for i in range(nvars))
    return index_map(nvars, order)[e]
