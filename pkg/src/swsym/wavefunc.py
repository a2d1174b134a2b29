"""Product-form wavefunction evaluators with analytic derivative tables.

Every wavefunction in this package factorizes over its coordinate tuple as

    prefactor * radial(x0) * prod_nu angular_nu(theta_nu) * prod_nu exp(i p~ lambda_nu)

so a mixed partial of total order <= 2 is a product of per-factor
derivatives.  Each factor evaluates (f, f', f'') at scalar points or numpy
arrays; finite differences never enter.

Negative powers of a vanishing base only ever occur multiplied by a zero
coefficient; the guarded power returns 0 there, which realizes the
continuous extension of the closed forms at R = 0 and at the angular
boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .specfun import jacobi_with_derivs, laguerre_with_derivs, rotation_d_terms


def guarded_power(x, k):
    """x**k with the convention 0**negative = 0 (coefficient is 0 there)."""
    x = np.asarray(x, dtype=float)
    if k >= 0:
        return x**k
    with np.errstate(divide="ignore"):
        return np.where(x == 0.0, 0.0, x**k)


class RadialFactor:
    """x**w * L_n^(alpha)(s x**2) * exp(-s x**2 / 2).

    Covers the oscillator radial part (s = 1, w = 2j) and the transformed
    one (s = omega, w = 2j + D/2, half-integral for odd D).
    """

    def __init__(self, w: float, n: int, alpha: float, s: float = 1.0):
        self.w = float(w)
        self.n = int(n)
        self.alpha = float(alpha)
        self.s = float(s)

    def __call__(self, x):
        w, s = self.w, self.s
        x = np.asarray(x, dtype=float)
        z = s * x * x
        l0, l1, l2 = laguerre_with_derivs(self.n, self.alpha, z)
        e = np.exp(-z / 2)
        u0 = l0 * e
        u1 = (l1 - l0 / 2) * e
        u2 = (l2 - l1 + l0 / 4) * e
        f0 = guarded_power(x, w) * u0
        f1 = w * guarded_power(x, w - 1) * u0 + 2 * s * guarded_power(x, w + 1) * u1
        f2 = (w * (w - 1) * guarded_power(x, w - 2) * u0
              + 2 * s * (2 * w + 1) * guarded_power(x, w) * u1
              + 4 * s * s * guarded_power(x, w + 2) * u2)
        return f0, f1, f2

    def profile(self, x):
        """Factor values with the exp(-z/2) weight removed (quadrature use)."""
        x = np.asarray(x, dtype=float)
        z = self.s * x * x
        e = np.exp(z / 2)
        f0, f1, f2 = self(x)
        return f0 * e, f1 * e, f2 * e


def _trig_sum(coeffs, x):
    """Evaluate sum_k c_k cos(x)^A_k sin(x)^B_k and two derivatives.

    coeffs: sequence of (c, A, B); exponents may be nonintegral as long as
    negative powers only pair with vanishing coefficients.
    """
    x = np.asarray(x, dtype=float)
    c_, s_ = np.cos(x), np.sin(x)
    f0 = np.zeros_like(x)
    f1 = np.zeros_like(x)
    f2 = np.zeros_like(x)
    for c, a, b in coeffs:
        f0 = f0 + c * guarded_power(c_, a) * guarded_power(s_, b)
        if a:
            f1 = f1 - c * a * guarded_power(c_, a - 1) * guarded_power(s_, b + 1)
        if b:
            f1 = f1 + c * b * guarded_power(c_, a + 1) * guarded_power(s_, b - 1)
        if a:
            f2 = f2 + c * a * (a - 1) * guarded_power(c_, a - 2) * guarded_power(s_, b + 2)
        if b:
            f2 = f2 + c * b * (b - 1) * guarded_power(c_, a + 2) * guarded_power(s_, b - 2)
        f2 = f2 - c * (2 * a * b + a + b) * guarded_power(c_, a) * guarded_power(s_, b)
    return f0, f1, f2


class AngularFactor:
    """cos(t)^A sin(t)^B P_n^(alpha,beta)(-cos 2t) with derivatives in t."""

    def __init__(self, a_pow: float, b_pow: float, n: int, alpha: float, beta: float):
        self.a_pow = float(a_pow)
        self.b_pow = float(b_pow)
        self.n = int(n)
        self.alpha = float(alpha)
        self.beta = float(beta)

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        c_, s_ = np.cos(t), np.sin(t)
        u = -np.cos(2 * t)
        p0, p1, p2 = jacobi_with_derivs(self.n, self.alpha, self.beta, u)
        a, b = self.a_pow, self.b_pow
        base0, base1, base2 = _trig_sum([(1.0, a, b)], t)
        # f = g(t) p(u(t)) with u' = 2 sin 2t, u'' = 4 cos 2t
        up = 4 * c_ * s_
        upp = 4 * (c_ * c_ - s_ * s_)
        f0 = base0 * p0
        f1 = base1 * p0 + base0 * up * p1
        f2 = base2 * p0 + 2 * base1 * up * p1 + base0 * (upp * p1 + up * up * p2)
        return f0, f1, f2


class DFactor:
    """Rotation-function factor d^j_{m,-m'}(2t) with derivatives in t."""

    def __init__(self, two_j: int, two_m: int, two_mp: int):
        # stored terms are for d^j_{m,-m'}, already in cos(t)/sin(t) powers
        self.terms = rotation_d_terms(two_j, two_m, -two_mp)

    def __call__(self, t):
        return _trig_sum(self.terms, t)


class PhaseFactor:
    """exp(i p x) with derivatives; p need not be an integer."""

    def __init__(self, p: float):
        self.p = float(p)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        f0 = np.exp(1j * self.p * x)
        return f0, 1j * self.p * f0, -(self.p**2) * f0


@dataclass
class WaveEval:
    """Analytic evaluator of one product wavefunction.

    Attributes
    ----------
    system : 'osc' | 'sw' | 'swproj'
        Coordinate system: (R, theta_1..theta_{D-1}, lambda_1..lambda_D),
        the transformed (r, phi..., lambda...) system, or the projected
        (r, phi...) system without auxiliary angles.
    factors : one factor per coordinate, in coordinate order.
    radial_halfpow : exponent class of the radial factor in z = (s x^2);
        used to pick the exact quadrature subrule.
    lam_charges : phase multipliers of the lambda factors (empty for
        'swproj'); integers for all physically labelled states.
    """

    system: str
    D: int
    omega: float
    prefactor: complex
    factors: tuple
    radial_halfpow: Fraction
    lam_charges: tuple = ()
    label: object = None

    @property
    def ncoords(self) -> int:
        return len(self.factors)

    def partial(self, alpha: Sequence[int], point: Sequence[float]) -> complex:
        """Mixed partial d^alpha psi at one point; total order <= 2."""
        if len(alpha) != self.ncoords or sum(alpha) > 2 or min(alpha) < 0:
            raise ValueError(f"bad derivative multi-index {alpha}")
        out = self.prefactor
        for fac, o, x in zip(self.factors, alpha, point):
            out = out * fac(x)[o]
        return complex(out)

    def value(self, point: Sequence[float]) -> complex:
        return self.partial((0,) * self.ncoords, point)

    def factor_table(self, c: int, x):
        """(f, f', f'') of factor c on an array of points."""
        return self.factors[c](x)
