"""Independent brute-force references used only by the tests.

Everything here deliberately avoids the code paths it checks: exact
rational arithmetic for polynomial values, a plain Taylor series for the
matrix exponential, and a permanent-based two-photon lift for coincidence
statistics.
"""

from fractions import Fraction

import numpy as np


def exact_jacobi(n: int, alpha: int, beta: int, x: Fraction) -> Fraction:
    """Jacobi polynomial by the generalized-binomial finite sum in exact rationals."""
    x = Fraction(x)
    y1 = (x - 1) / 2
    y2 = (x + 1) / 2
    total = Fraction(0)
    for s in range(n + 1):
        c1 = Fraction(1)
        for i in range(n - s):
            c1 *= Fraction(n + alpha - i, i + 1)
        c2 = Fraction(1)
        for i in range(s):
            c2 *= Fraction(n + beta - i, i + 1)
        total += c1 * c2 * y1**s * y2 ** (n - s)
    return total


def legendre_recurrence(n: int, x: float) -> float:
    """Legendre P_n(x) by the classic three-term recurrence."""
    if n == 0:
        return 1.0
    p0, p1 = 1.0, x
    for k in range(1, n):
        p0, p1 = p1, ((2 * k + 1) * x * p1 - k * p0) / (k + 1)
    return p1


def taylor_matrix_exp(a: np.ndarray, terms: int = 80) -> np.ndarray:
    """exp(a) by the plain scaled Taylor series (scale, sum, square back)."""
    a = np.asarray(a, dtype=complex)
    scale = max(0, int(np.ceil(np.log2(max(np.linalg.norm(a, 1), 1e-30)))) + 1)
    b = a / 2**scale
    out = np.eye(a.shape[0], dtype=complex)
    term = np.eye(a.shape[0], dtype=complex)
    for k in range(1, terms + 1):
        term = term @ b / k
        out = out + term
    for _ in range(scale):
        out = out @ out
    return out


def pair_basis(n: int):
    """Unordered site pairs (k, l) with k <= l: the two-photon basis."""
    return [(k, l) for k in range(n) for l in range(k, n)]


def two_photon_lift(g: np.ndarray) -> np.ndarray:
    """Symmetric-subspace unitary from the single-particle matrix.

    <k,l| U |m,n> = perm(g[[k,l]][:,[m,n]]) / sqrt(mult_out * mult_in) with
    the 2x2 permanent and mult = 2 for a doubly occupied site.
    """
    n = g.shape[0]
    pairs = pair_basis(n)
    dim = len(pairs)
    lifted = np.zeros((dim, dim), dtype=complex)
    for oi, (k, l) in enumerate(pairs):
        mult_out = 2.0 if k == l else 1.0
        for ii, (m, nn) in enumerate(pairs):
            mult_in = 2.0 if m == nn else 1.0
            perm = g[k, m] * g[l, nn] + g[k, nn] * g[l, m]
            lifted[oi, ii] = perm / np.sqrt(mult_out * mult_in)
    return lifted


def oracle_two_photon(g: np.ndarray, kind: str, mi: int, ni: int):
    """Coincidence matrix and photon density from the full Fock evolution."""
    n = g.shape[0]
    pairs = pair_basis(n)
    index = {pair: i for i, pair in enumerate(pairs)}
    lifted = two_photon_lift(g)
    state = np.zeros(len(pairs), dtype=complex)
    if kind == "separable":
        state[index[(min(mi, ni), max(mi, ni))]] = 1.0
    else:
        state[index[(mi, mi)]] = 1.0 / np.sqrt(2.0)
        state[index[(ni, ni)]] = 1.0 / np.sqrt(2.0)
    amps = lifted @ state

    gamma = np.zeros((n, n))
    density = np.zeros(n)
    for (k, l), amp in zip(pairs, amps):
        prob = abs(amp) ** 2
        if k == l:
            gamma[k, k] = 2.0 * prob
            density[k] += 2.0 * prob
        else:
            gamma[k, l] = prob
            gamma[l, k] = prob
            density[k] += prob
            density[l] += prob
    return gamma, density
