"""Coordinate realization of boson-operator polynomials for D = 2.

Creation/annihilation operators become first-order differential operators
in (R, theta, lambda_1, lambda_2) through the coordinate map and the chain
rule for the Cartesian partials; products of the exact generator
polynomials then expand mechanically into second-order operators.  The
lambda dependence is kept as integer phase charges throughout, so the
resulting coefficient functions depend on (R, theta) only and transfer to
the reduced picture by the similarity transformation.

This is the systematic route to generator components the displayed
catalogue does not cover, and an independent cross-check on the
transcribed displays.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct
from math import comb

import numpy as np
import sympy as sp

from .bosonalg import BosonPoly
from .exactnum import CSqrt

X = sp.Symbol("x", positive=True)   # radial coordinate (R or r)
T = sp.Symbol("t", positive=True)   # polar angle (theta or phi)

Deriv = tuple[int, int, int, int]   # orders in (x, t, lambda_1, lambda_2)
Key = tuple[int, int, Deriv]        # (k1, k2, deriv)


def _sqrtsum_to_sympy(s) -> sp.Expr:
    return sp.Add(*(sp.Rational(c) * sp.sqrt(rad) for rad, c in s.terms.items()))


def csqrt_to_sympy(c: CSqrt) -> sp.Expr:
    return _sqrtsum_to_sympy(c.re) + sp.I * _sqrtsum_to_sympy(c.im)


class CoordOp:
    """Differential operator sum_k e^{i(k1 l1 + k2 l2)} c_k(x,t) d^deriv."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Key, sp.Expr] | None = None):
        self.terms = {}
        for key, expr in (terms or {}).items():
            expr = sp.expand(expr)
            if expr != 0:
                self.terms[key] = expr

    @classmethod
    def multiplication(cls, expr: sp.Expr, k1: int = 0, k2: int = 0) -> "CoordOp":
        return cls({(k1, k2, (0, 0, 0, 0)): expr})

    def __add__(self, other: "CoordOp") -> "CoordOp":
        out = dict(self.terms)
        for key, expr in other.terms.items():
            out[key] = out.get(key, sp.Integer(0)) + expr
        return CoordOp(out)

    def __neg__(self) -> "CoordOp":
        return CoordOp({k: -e for k, e in self.terms.items()})

    def __sub__(self, other: "CoordOp") -> "CoordOp":
        return self + (-other)

    def scale(self, c: sp.Expr) -> "CoordOp":
        return CoordOp({k: c * e for k, e in self.terms.items()})

    def __mul__(self, other: "CoordOp") -> "CoordOp":
        """Operator composition self o other (self acts last)."""
        out: dict[Key, sp.Expr] = {}
        for (ka1, ka2, da), ca in self.terms.items():
            for (kb1, kb2, db), cb in other.terms.items():
                # Leibniz: d^da [ cb e^{i kb.l} d^db psi ]
                for q in iproduct(*(range(o + 1) for o in da)):
                    mult = 1
                    for oo, qq in zip(da, q):
                        mult *= comb(oo, qq)
                    dcb = sp.diff(cb, X, q[0], T, q[1])
                    if dcb == 0:
                        continue
                    phase = (sp.I * kb1) ** q[2] * (sp.I * kb2) ** q[3]
                    rest = tuple(o - qq + bb for o, qq, bb in zip(da, q, db))
                    key = (ka1 + kb1, ka2 + kb2, rest)
                    out[key] = out.get(key, sp.Integer(0)) + ca * mult * dcb * phase
        return CoordOp(out)


def _dx(i: int) -> Deriv:
    d = [0, 0, 0, 0]
    d[i] = 1
    return tuple(d)


def _phase_pair(which: int, trig: str):
    """sin/cos(lambda_which) as {(k1,k2): coeff} phase dictionaries."""
    plus = (1, 0) if which == 1 else (0, 1)
    minus = (-1, 0) if which == 1 else (0, -1)
    if trig == "sin":
        return {plus: -sp.I / 2, minus: sp.I / 2}
    return {plus: sp.Rational(1, 2), minus: sp.Rational(1, 2)}


def _with_phases(phases: dict, body: dict[Deriv, sp.Expr]) -> CoordOp:
    terms = {}
    for (k1, k2), pc in phases.items():
        for deriv, expr in body.items():
            key = (k1, k2, deriv)
            terms[key] = terms.get(key, sp.Integer(0)) + pc * expr
    return CoordOp(terms)


def _alpha_coordops() -> tuple[list[CoordOp], list[CoordOp]]:
    """First-order forms of the four creation and annihilation operators."""
    sin_t, cos_t = sp.sin(T), sp.cos(T)
    d1 = {_dx(0): sin_t, _dx(1): cos_t / X}             # sin t dR + cos t/R dT
    d2 = {_dx(2): 1 / (X * sin_t)}                      # csc t / R dl1
    d3 = {_dx(0): cos_t, _dx(1): -sin_t / X}
    d4 = {_dx(3): 1 / (X * cos_t)}
    dX = [
        _with_phases(_phase_pair(1, "sin"), d1) + _with_phases(_phase_pair(1, "cos"), d2),
        _with_phases(_phase_pair(1, "cos"), d1) - _with_phases(_phase_pair(1, "sin"), d2),
        _with_phases(_phase_pair(2, "sin"), d3) + _with_phases(_phase_pair(2, "cos"), d4),
        _with_phases(_phase_pair(2, "cos"), d3) - _with_phases(_phase_pair(2, "sin"), d4),
    ]
    xmul = [
        _with_phases(_phase_pair(1, "sin"), {(0, 0, 0, 0): X * sin_t}),
        _with_phases(_phase_pair(1, "cos"), {(0, 0, 0, 0): X * sin_t}),
        _with_phases(_phase_pair(2, "sin"), {(0, 0, 0, 0): X * cos_t}),
        _with_phases(_phase_pair(2, "cos"), {(0, 0, 0, 0): X * cos_t}),
    ]
    inv_sqrt2 = 1 / sp.sqrt(2)
    adag = [(xmul[mu] - dX[mu]).scale(inv_sqrt2) for mu in range(4)]
    ann = [(xmul[mu] + dX[mu]).scale(inv_sqrt2) for mu in range(4)]
    return adag, ann


_ALPHAS: tuple | None = None


def _alphas():
    global _ALPHAS
    if _ALPHAS is None:
        _ALPHAS = _alpha_coordops()
    return _ALPHAS


def coordop_from_boson(poly: BosonPoly) -> CoordOp:
    """Oscillator-picture coordinate form of an exact boson polynomial."""
    if poly.nmodes != 4:
        raise ValueError("coordinate route is the D = 2 (four-mode) one")
    adag, ann = _alphas()
    out = CoordOp()
    for (c, a), v in poly.terms.items():
        factors = []
        for mu, e in enumerate(c):
            factors.extend([adag[mu]] * e)
        for mu, e in enumerate(a):
            factors.extend([ann[mu]] * e)
        if sum(c) + sum(a) > 2:
            raise ValueError("coordinate route covers polynomials of degree <= 2")
        acc = CoordOp.multiplication(sp.Integer(1))
        for f in factors:
            acc = acc * f
        out = out + acc.scale(csqrt_to_sympy(v))
    return out


def to_sw_picture(op: CoordOp, omega: float) -> CoordOp:
    """Similarity-transform an oscillator-picture operator to the reduced
    picture: substitute R = sqrt(omega) r, theta = phi, then conjugate by
    the square root of the multiplicative reduction factor (its constant
    part cancels)."""
    sq = sp.sqrt(sp.Rational(Fraction(omega)))
    subbed = {}
    for (k1, k2, deriv), expr in op.terms.items():
        new = expr.subs(X, sq * X) * sq ** (-deriv[0])
        subbed[(k1, k2, deriv)] = sp.expand(new)
    mid = CoordOp(subbed)
    g = X * sp.sqrt(sp.sin(T) * sp.cos(T))
    left = CoordOp.multiplication(g)
    right = CoordOp.multiplication(1 / g)
    return left * (mid * right)


def coordop_terms(op: CoordOp):
    """Flatten to [(k1, k2, deriv, r_pow, theta_fn)] with numpy callables."""
    rows = []
    for (k1, k2, deriv), expr in op.terms.items():
        if sum(deriv) > 2:
            raise ValueError("derivative order above 2 cannot act on WaveEval tables")
        expr = sp.expand(sp.cancel(sp.together(expr)))
        groups: dict[int, sp.Expr] = {}
        for piece in sp.Add.make_args(expr):
            power = piece.as_powers_dict().get(X, 0)
            if power != int(power):
                raise ValueError(f"non-integer radial power in {piece}")
            power = int(power)
            groups[power] = groups.get(power, sp.Integer(0)) + piece / X**power
        for power, theta_expr in groups.items():
            theta_expr = sp.simplify(theta_expr)
            if theta_expr == 0:
                continue
            fn = sp.lambdify(T, theta_expr, "numpy")
            rows.append((k1, k2, deriv, power, _vectorized(fn)))
    return rows


def _vectorized(fn):
    def wrapped(t):
        t = np.asarray(t, dtype=float)
        return np.asarray(fn(t), dtype=complex) * np.ones_like(t, dtype=complex)
    return wrapped
