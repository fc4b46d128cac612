"""Jacobi and generalized Laguerre polynomials with complex parameters.

The production routines use the classical three-term recurrences, which are
rational identities in the parameters and therefore hold unchanged for
complex ``alpha`` and ``beta``.  The ``*_series_oracle`` functions evaluate the
explicit finite sums instead and exist to check the recurrences.

All functions accept scalar or array ``z`` and broadcast over it.

For complex parameters the forward recurrence is not always well conditioned
(intermediate P_k can be much larger than P_n), so it is accumulated in
extended precision (``np.clongdouble``) and rounded back to complex128.
"""

import numpy as np

from .errors import DegenerateRecurrence, DegreeTooLarge

DEGENERATE_TOL = 1e-13
ORACLE_MAX_DEGREE = 30
_WORK = np.clongdouble


def _check_degree(n):
    if int(n) != n or n < 0:
        raise ValueError(f"degree must be a non-negative integer, got {n!r}")
    return int(n)


def binom(x, m):
    """Generalized binomial coefficient C(x, m) for complex x and integer m >= 0.

    Evaluated as the iterated product prod_{k=1..m} (x - k + 1) / k, which is
    exact for integer lower index and has no Gamma-function branch issues.
    """
    out = 1.0 + 0j
    for k in range(1, m + 1):
        out *= (x - k + 1) / k
    return out


def jacobi_poly(n, alpha, beta, z):
    """Jacobi polynomial P_n^(alpha, beta)(z) by forward recurrence."""
    n = _check_degree(n)
    ab = complex(alpha) + complex(beta)

    # denominators of the recurrence used below
    for k in range(2, n + 1):
        if abs(k + ab) < DEGENERATE_TOL or abs(2 * k + ab - 2) < DEGENERATE_TOL:
            raise DegenerateRecurrence(
                f"Jacobi recurrence denominator vanishes at k={k} "
                f"(alpha+beta={ab})")

    alpha, beta = _WORK(complex(alpha)), _WORK(complex(beta))
    ab = alpha + beta
    z = np.asarray(z, dtype=_WORK)
    p_prev = np.ones_like(z)
    if n == 0:
        return p_prev.astype(complex)[()]
    p = (alpha + 1) + (ab + 2) * (z - 1) / 2
    for k in range(2, n + 1):
        c = 2 * k + ab
        a1 = 2 * k * (k + ab) * (c - 2)
        a2 = (c - 1) * (alpha * alpha - beta * beta)
        a3 = (c - 2) * (c - 1) * c
        a4 = 2 * (k + alpha - 1) * (k + beta - 1) * c
        p, p_prev = ((a2 + a3 * z) * p - a4 * p_prev) / a1, p
    return p.astype(complex)[()]


def laguerre_poly(n, alpha, z):
    """Generalized Laguerre polynomial L_n^(alpha)(z) by forward recurrence."""
    n = _check_degree(n)
    alpha = _WORK(complex(alpha))
    z = np.asarray(z, dtype=_WORK)

    l_prev = np.ones_like(z)
    if n == 0:
        return l_prev.astype(complex)[()]
    l = 1 + alpha - z
    for k in range(1, n):
        l, l_prev = ((2 * k + 1 + alpha - z) * l - (k + alpha) * l_prev) / (k + 1), l
    return l.astype(complex)[()]


def jacobi_series_oracle(n, alpha, beta, z):
    """P_n^(alpha, beta)(z) from the explicit finite sum.

    sum_k C(n+alpha, n-k) C(n+beta, k) ((z-1)/2)^k ((z+1)/2)^(n-k)
    """
    n = _check_degree(n)
    if n > ORACLE_MAX_DEGREE:
        raise DegreeTooLarge(f"series oracle limited to n <= {ORACLE_MAX_DEGREE}")
    z = np.asarray(z, dtype=complex)
    zm = (z - 1) / 2
    zp = (z + 1) / 2
    total = np.zeros_like(z)
    for k in range(n + 1):
        total = total + (binom(n + alpha, n - k) * binom(n + beta, k)
                         * zm ** k * zp ** (n - k))
    return total[()]


def laguerre_series_oracle(n, alpha, z):
    """L_n^(alpha)(z) from sum_k C(n+alpha, n-k) (-z)^k / k!."""
    n = _check_degree(n)
    if n > ORACLE_MAX_DEGREE:
        raise DegreeTooLarge(f"series oracle limited to n <= {ORACLE_MAX_DEGREE}")
    z = np.asarray(z, dtype=complex)
    total = np.zeros_like(z)
    fact = 1.0
    for k in range(n + 1):
        if k:
            fact *= k
        total = total + binom(n + alpha, n - k) * (-z) ** k / fact
    return total[()]
