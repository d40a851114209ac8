"""Compiled inner loops for expanding the v0 generating function modulo m.

Both kernels evaluate ``sum_n q^{n^2} (-q;q^2)_n / (q;q^2)_n`` by carrying
``U_n = T_n / q^{n^2}`` and updating ``U_n = U_{n-1} (1+q^k)/(1-q^k)`` with
``k = 2n-1``.  Writing ``W = U_{n-1}/(1-q^k)`` the update is
``U_n[i] = U_{n-1}[i] + 2 W[i-k]`` and ``W[i] = U_{n-1}[i] + W[i-k]``, done in
one pass with a length-``k`` ring buffer for ``W``.
"""

import numba
import numpy as np


@numba.njit(cache=True)
def v0_wrapping(n_terms, u, total):
    """Arithmetic wraps at the dtype width, i.e. the result is exact mod 2^bits."""
    u[:] = 0
    total[:] = 0
    u[0] = 1
    total[0] = 1
    wbuf = np.zeros(2 * int(np.sqrt(n_terms)) + 2, u.dtype)
    n = 1
    while n * n < n_terms:
        k = 2 * n - 1
        length = n_terms - n * n
        s = n * n
        wbuf[:k] = 0
        b = 0
        while b < length:
            e = min(k, length - b)
            for t in range(e):
                w = wbuf[t]
                uo = u[b + t]
                un = uo + w + w
                wbuf[t] = uo + w
                u[b + t] = un
                total[s + b + t] += un
            b += k
        n += 1
    return total


@numba.njit(cache=True)
def v0_reducing(n_terms, m, u, total):
    """Residues kept in ``[0, m)`` on an unsigned dtype holding ``2m``.

    ``min(x, x - m)`` reduces a value below ``2m``: when ``x < m`` the
    unsigned difference wraps to something larger than ``x``.
    """
    u[:] = 0
    total[:] = 0
    u[0] = 1
    total[0] = 1
    wbuf = np.zeros(2 * int(np.sqrt(n_terms)) + 2, u.dtype)
    n = 1
    while n * n < n_terms:
        k = 2 * n - 1
        length = n_terms - n * n
        s = n * n
        wbuf[:k] = 0
        b = 0
        while b < length:
            e = min(k, length - b)
            for t in range(e):
                w = wbuf[t]
                wn = u[b + t] + w
                wn = min(wn, wn - m)
                un = wn + w
                un = min(un, un - m)
                wbuf[t] = wn
                u[b + t] = un
                x = total[s + b + t] + un
                total[s + b + t] = min(x, x - m)
            b += k
        n += 1
    return total
