"""Jacobi and generalized Laguerre polynomials and su(2) rotation functions.

Values come from three-term recurrences, first and second derivatives from
the parameter-shift identities, so that second-order operators applied to
wavefunctions keep full machine precision.  All evaluators accept scalars
or numpy arrays in the argument.

Half-integer angular momentum labels are passed as doubled integers
(two_j = 2j and so on), which keeps label arithmetic exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial, sqrt

import numpy as np

from .errors import LabelError, ParameterDomainError


@dataclass(frozen=True)
class PolyEval:
    """Value and first two derivatives of a polynomial at one point."""

    value: float
    d1: float
    d2: float


def jacobi_values(n: int, alpha: float, beta: float, x):
    """P_n^(alpha,beta)(x) for scalar or array x (value only)."""
    if n < 0:
        raise ParameterDomainError("degree must be nonnegative")
    if alpha <= -1 or beta <= -1:
        raise ParameterDomainError("Jacobi parameters must exceed -1")
    x = np.asarray(x, dtype=float)
    p_prev = np.ones_like(x)
    if n == 0:
        return p_prev
    p = (alpha + 1) + (alpha + beta + 2) * (x - 1) / 2
    for k in range(2, n + 1):
        c = 2 * k + alpha + beta
        a1 = 2 * k * (k + alpha + beta) * (c - 2)
        a2 = (c - 1) * (alpha**2 - beta**2)
        a3 = (c - 1) * c * (c - 2)
        a4 = 2 * (k + alpha - 1) * (k + beta - 1) * c
        p, p_prev = ((a2 + a3 * x) * p - a4 * p_prev) / a1, p
    return p


def laguerre_values(n: int, alpha: float, z):
    """L_n^(alpha)(z) for scalar or array z (value only)."""
    if n < 0:
        raise ParameterDomainError("degree must be nonnegative")
    if alpha <= -1:
        raise ParameterDomainError("Laguerre parameter must exceed -1")
    z = np.asarray(z, dtype=float)
    p_prev = np.ones_like(z)
    if n == 0:
        return p_prev
    p = 1 + alpha - z
    for k in range(2, n + 1):
        p, p_prev = ((2 * k - 1 + alpha - z) * p - (k - 1 + alpha) * p_prev) / k, p
    return p


def jacobi_with_derivs(n: int, alpha: float, beta: float, x):
    """(P, P', P'') arrays; derivatives by the parameter-shift identity."""
    p0 = jacobi_values(n, alpha, beta, x)
    x = np.asarray(x, dtype=float)
    if n >= 1:
        p1 = 0.5 * (n + alpha + beta + 1) * jacobi_values(n - 1, alpha + 1, beta + 1, x)
    else:
        p1 = np.zeros_like(x)
    if n >= 2:
        p2 = 0.25 * (n + alpha + beta + 1) * (n + alpha + beta + 2) \
            * jacobi_values(n - 2, alpha + 2, beta + 2, x)
    else:
        p2 = np.zeros_like(x)
    return p0, p1, p2


def laguerre_with_derivs(n: int, alpha: float, z):
    """(L, L', L'') arrays; dL_n^(a)/dz = -L_{n-1}^(a+1)."""
    p0 = laguerre_values(n, alpha, z)
    z = np.asarray(z, dtype=float)
    p1 = -laguerre_values(n - 1, alpha + 1, z) if n >= 1 else np.zeros_like(z)
    p2 = laguerre_values(n - 2, alpha + 2, z) if n >= 2 else np.zeros_like(z)
    return p0, p1, p2


def jacobi_eval(n: int, alpha: float, beta: float, x: float) -> PolyEval:
    """Jacobi polynomial with first and second derivative at x."""
    p0, p1, p2 = jacobi_with_derivs(n, alpha, beta, x)
    return PolyEval(float(p0), float(p1), float(p2))


def laguerre_eval(n: int, alpha: float, z: float) -> PolyEval:
    """Generalized Laguerre polynomial with derivatives at z."""
    p0, p1, p2 = laguerre_with_derivs(n, alpha, z)
    return PolyEval(float(p0), float(p1), float(p2))


def _check_half_integers(two_j: int, two_m: int, two_mp: int) -> None:
    if two_j < 0:
        raise LabelError("j must be nonnegative")
    for two_x in (two_m, two_mp):
        if abs(two_x) > two_j:
            raise LabelError("|m| must not exceed j")
        if (two_j - two_x) % 2:
            raise LabelError("m and j must have matching half-integer parity")


def rotation_d_terms(two_j: int, two_m: int, two_mp: int) -> list[tuple[float, int, int]]:
    """d^j_{m,mp}(beta) as sum_k c_k cos(beta/2)^A_k sin(beta/2)^B_k.

    Returns the list [(c_k, A_k, B_k)] of the defining sum; all exponents
    are nonnegative integers.
    """
    _check_half_integers(two_j, two_m, two_mp)
    jpm = (two_j + two_m) // 2
    jmm = (two_j - two_m) // 2
    jpmp = (two_j + two_mp) // 2
    jmmp = (two_j - two_mp) // 2
    norm = sqrt(factorial(jpm) * factorial(jmm) * factorial(jpmp) * factorial(jmmp))
    mmmp = (two_m - two_mp) // 2  # m - mp
    terms = []
    for s in range(max(0, -mmmp), min(jpmp, jmm) + 1):
        den = (factorial(jpmp - s) * factorial(s)
               * factorial(mmmp + s) * factorial(jmm - s))
        sign = -1 if (mmmp + s) % 2 else 1
        a_exp = jpmp + jmm - 2 * s  # 2j + mp - m - 2s
        b_exp = mmmp + 2 * s
        terms.append((sign * norm / den, a_exp, b_exp))
    return terms


def rotation_d(two_j: int, two_m: int, two_mp: int, beta: float) -> float:
    """Wigner rotation function d^j_{m,mp}(beta), standard convention."""
    c, s = np.cos(beta / 2), np.sin(beta / 2)
    return float(sum(coef * c**a * s**b for coef, a, b in rotation_d_terms(two_j, two_m, two_mp)))
