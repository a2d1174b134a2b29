"""Coordinate-space operators of both pictures and their matrix elements.

The catalogue holds term-by-term transcriptions of the displayed operator
forms (Hamiltonians in any dimension, the D = 2 generators in the
oscillator and reduced pictures).  Components without a displayed
coordinate form are built from their exact boson polynomials through the
Cartesian chain rule (`operator_from_boson`).  Numeric matrix elements come
from factorized tensor-product quadrature; predicted ones from the
reduced-matrix-element closed forms assembled with Clebsch-Gordan factors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import sqrt
from typing import Callable

import numpy as np

from . import bosonalg, bosoncoord
from .errors import CatalogueError, CoordinateSystemError, LabelError
from .oscillator import OscBarLabel, OscLabel, osc_wavefunction, osc_wavefunction_bar
from .quadrature import QuadEngine, RuleSet
from .swreduce import SWLabel, SWParams, bar_from_ab, sw_wavefunction
from .wavefunc import WaveEval
from .wigner import cg


@dataclass(frozen=True)
class Term:
    """const * r^r_pow * prod ang fns * e^{i lam.L} * d^deriv."""

    const: complex
    deriv: tuple[int, ...]
    r_pow: int = 0
    ang: tuple[tuple[int, Callable], ...] = ()
    lam: tuple[int, ...] = ()


@dataclass(frozen=True)
class DiffOperator:
    name: str
    system: str            # 'osc' | 'sw' | 'swproj'
    D: int
    omega: float
    terms: tuple[Term, ...]

    @property
    def ncoords(self) -> int:
        return 2 * self.D if self.system != "swproj" else self.D


def _one(t):
    return np.ones_like(np.asarray(t, dtype=float))


_cot = lambda t: 1 / np.tan(t)
_tan = np.tan
_csc2 = lambda t: 1 / np.sin(t) ** 2
_sec2 = lambda t: 1 / np.cos(t) ** 2
_csc = lambda t: 1 / np.sin(t)
_sin = np.sin
_sin2 = lambda t: np.sin(t) ** 2
_cos = np.cos
_cos2sq = lambda t: np.cos(t) ** 2


def _unit_deriv(ncoords: int, idx: int, order: int = 1) -> tuple[int, ...]:
    d = [0] * ncoords
    d[idx] = order
    return tuple(d)


def _pair_deriv(ncoords: int, i: int, j: int) -> tuple[int, ...]:
    d = [0] * ncoords
    d[i] += 1
    d[j] += 1
    return tuple(d)


def _h_osc_terms(D: int) -> tuple[Term, ...]:
    nc = 2 * D
    zlam = (0,) * D
    terms = [Term(-1.0, _unit_deriv(nc, 0, 2), lam=zlam),
             Term(-(2 * D - 1.0), _unit_deriv(nc, 0), r_pow=-1, lam=zlam)]
    for nu in range(1, D):
        chain = tuple((i, _csc2) for i in range(nu - 1))
        coef = 2 * D - 2 * nu - 1
        fr = (lambda c: (lambda t: c / np.tan(t) - np.tan(t)))(coef)
        terms.append(Term(-1.0, _unit_deriv(nc, nu, 2), r_pow=-2, ang=chain, lam=zlam))
        terms.append(Term(-1.0, _unit_deriv(nc, nu), r_pow=-2,
                          ang=chain + ((nu - 1, fr),), lam=zlam))
    # lambda_1 .. lambda_D second derivatives
    terms.append(Term(-1.0, _unit_deriv(nc, D), r_pow=-2,
                      ang=tuple((i, _csc2) for i in range(D - 1)), lam=zlam))
    for nu in range(2, D):
        ang = tuple((i, _csc2) for i in range(D - nu)) + ((D - nu, _sec2),)
        terms.append(Term(-1.0, _unit_deriv(nc, D + nu - 1, 2), r_pow=-2,
                          ang=ang, lam=zlam))
    terms.append(Term(-1.0, _unit_deriv(nc, 2 * D - 1, 2), r_pow=-2,
                      ang=((0, _sec2),), lam=zlam))
    terms.append(Term(1.0, (0,) * nc, r_pow=2, lam=zlam))
    return tuple(terms)


def _h_sw_terms(D: int, omega: float) -> tuple[Term, ...]:
    nc = 2 * D
    zlam = (0,) * D
    zero = (0,) * nc
    terms = [Term(-1.0, _unit_deriv(nc, 0, 2), lam=zlam),
             Term(-(D - 1.0), _unit_deriv(nc, 0), r_pow=-1, lam=zlam)]
    for nu in range(1, D):
        chain = tuple((i, _csc2) for i in range(nu - 1))
        terms.append(Term(-1.0, _unit_deriv(nc, nu, 2), r_pow=-2, ang=chain, lam=zlam))
        if D - nu - 1:
            fr = (lambda c: (lambda t: c / np.tan(t)))(D - nu - 1)
            terms.append(Term(-1.0, _unit_deriv(nc, nu), r_pow=-2,
                              ang=chain + ((nu - 1, fr),), lam=zlam))
    full = tuple((i, _csc2) for i in range(D - 1))
    terms.append(Term(-1.0, _unit_deriv(nc, D, 2), r_pow=-2, ang=full, lam=zlam))
    terms.append(Term(-0.25, zero, r_pow=-2, ang=full, lam=zlam))
    for nu in range(2, D):
        ang = tuple((i, _csc2) for i in range(D - nu)) + ((D - nu, _sec2),)
        terms.append(Term(-1.0, _unit_deriv(nc, D + nu - 1, 2), r_pow=-2, ang=ang, lam=zlam))
        terms.append(Term(-0.25, zero, r_pow=-2, ang=ang, lam=zlam))
    terms.append(Term(-1.0, _unit_deriv(nc, 2 * D - 1, 2), r_pow=-2,
                      ang=((0, _sec2),), lam=zlam))
    terms.append(Term(-0.25, zero, r_pow=-2, ang=((0, _sec2),), lam=zlam))
    terms.append(Term(omega**2, zero, r_pow=2, lam=zlam))
    return tuple(terms)


def _h_k_terms(D: int, params: SWParams) -> tuple[Term, ...]:
    if not params.k:
        raise CatalogueError("the reduced Hamiltonian needs the strengths k")
    nc = D
    zero = (0,) * nc
    k = params.k
    terms = [Term(-1.0, _unit_deriv(nc, 0, 2)),
             Term(-(D - 1.0), _unit_deriv(nc, 0), r_pow=-1)]
    for nu in range(1, D):
        chain = tuple((i, _csc2) for i in range(nu - 1))
        terms.append(Term(-1.0, _unit_deriv(nc, nu, 2), r_pow=-2, ang=chain))
        if D - nu - 1:
            fr = (lambda c: (lambda t: c / np.tan(t)))(D - nu - 1)
            terms.append(Term(-1.0, _unit_deriv(nc, nu), r_pow=-2,
                              ang=chain + ((nu - 1, fr),)))
    terms.append(Term(k[0] ** 2, zero, r_pow=-2,
                      ang=tuple((i, _csc2) for i in range(D - 1))))
    for nu in range(2, D):
        ang = tuple((i, _csc2) for i in range(D - nu)) + ((D - nu, _sec2),)
        terms.append(Term(k[nu - 1] ** 2, zero, r_pow=-2, ang=ang))
    terms.append(Term(k[D - 1] ** 2, zero, r_pow=-2, ang=((0, _sec2),)))
    terms.append(Term(params.omega ** 2, zero, r_pow=2))
    return tuple(terms)


# -- D = 2 generator displays ------------------------------------------

def _d2(*, dR=0, dT=0, dl1=0, dl2=0) -> tuple[int, ...]:
    return (dR, dT, dl1, dl2)


def _jk_terms(name: str, system: str) -> tuple[Term, ...]:
    i2 = 0.5j
    if name == "J0":
        return (Term(i2, _d2(dl1=1), lam=(0, 0)), Term(-i2, _d2(dl2=1), lam=(0, 0)))
    if name == "K0":
        return (Term(i2, _d2(dl1=1), lam=(0, 0)), Term(i2, _d2(dl2=1), lam=(0, 0)))
    half_terms = {
        ("J", +1): ((-1, 1), +0.5, -0.25, +0.25),
        ("J", -1): ((1, -1), -0.5, +0.25, -0.25),
        ("K", +1): ((-1, -1), -0.5, +0.25, -0.25),
        ("K", -1): ((1, 1), +0.5, -0.25, +0.25),
    }
    fam, pm = name[0], +1 if name.endswith("p") else -1
    lam, cdt, c_cot0, c_tan0 = half_terms[(fam, pm)]
    sign_l1 = -0.5j if fam == "J" else +0.5j
    out = [Term(cdt, _d2(dT=1), lam=lam),
           Term(sign_l1, _d2(dl1=1), ang=((0, _cot),), lam=lam),
           Term(-0.5j, _d2(dl2=1), ang=((0, _tan),), lam=lam)]
    if system == "sw":
        out.append(Term(c_cot0, _d2(), ang=((0, _cot),), lam=lam))
        out.append(Term(c_tan0, _d2(), ang=((0, _tan),), lam=lam))
    return tuple(out)


def _adag_terms(two_sigma: int, system: str) -> tuple[Term, ...]:
    lam = (-1, 0) if two_sigma > 0 else (1, 0)
    sgn = 1.0 if two_sigma > 0 else -1.0
    out = [Term(0.5j, _d2(dR=1), ang=((0, _sin),), lam=lam),
           Term(0.5j, _d2(dT=1), r_pow=-1, ang=((0, _cos),), lam=lam),
           Term(0.5 * sgn, _d2(dl1=1), r_pow=-1, ang=((0, _csc),), lam=lam),
           Term(-0.5j, _d2(), r_pow=1, ang=((0, _sin),), lam=lam)]
    if system == "sw":
        out.append(Term(-0.25j, _d2(), r_pow=-1, ang=((0, _csc),), lam=lam))
    return tuple(out)


def _t11_sw_terms(omega: float) -> tuple[Term, ...]:
    c = 1 / (4 * omega)
    lam = (-2, 0)
    cot_sincos = lambda t: 1 / np.tan(t) + np.sin(t) * np.cos(t)
    one_sin2 = lambda t: 1 + np.sin(t) ** 2
    sincos = lambda t: np.sin(t) * np.cos(t)
    return (
        Term(-c, _d2(dR=2), ang=((0, _sin2),), lam=lam),
        Term(-2 * c, _pair_deriv(4, 0, 1), r_pow=-1, ang=((0, sincos),), lam=lam),
        Term(2j * c, _pair_deriv(4, 0, 2), r_pow=-1, lam=lam),
        Term(-c, _d2(dT=2), r_pow=-2, ang=((0, _cos2sq),), lam=lam),
        Term(2j * c, _pair_deriv(4, 1, 2), r_pow=-2, ang=((0, _cot),), lam=lam),
        Term(c, _d2(dl1=2), r_pow=-2, ang=((0, _csc2),), lam=lam),
        Term(c, _d2(dR=1), r_pow=-1, ang=((0, one_sin2),), lam=lam),
        Term(2 * c, _d2(dT=1), r_pow=-2, ang=((0, cot_sincos),), lam=lam),
        Term(-3j * c, _d2(dl1=1), r_pow=-2, ang=((0, _csc2),), lam=lam),
        Term(-1.25 * c, _d2(), r_pow=-2, ang=((0, _csc2),), lam=lam),
        Term(c * omega**2, _d2(), r_pow=2, ang=((0, _sin2),), lam=lam),
    )


def _ddag11_sw_terms(omega: float) -> tuple[Term, ...]:
    c = 1 / (4 * omega)
    lam = (-2, 0)
    cot_sincos = lambda t: 1 / np.tan(t) + np.sin(t) * np.cos(t)
    one_sin2 = lambda t: 1 + np.sin(t) ** 2
    sincos = lambda t: np.sin(t) * np.cos(t)
    return (
        Term(-c, _d2(dR=2), ang=((0, _sin2),), lam=lam),
        Term(-2 * c, _pair_deriv(4, 0, 1), r_pow=-1, ang=((0, sincos),), lam=lam),
        Term(2j * c, _pair_deriv(4, 0, 2), r_pow=-1, lam=lam),
        Term(-c, _d2(dT=2), r_pow=-2, ang=((0, _cos2sq),), lam=lam),
        Term(2j * c, _pair_deriv(4, 1, 2), r_pow=-2, ang=((0, _cot),), lam=lam),
        Term(c, _d2(dl1=2), r_pow=-2, ang=((0, _csc2),), lam=lam),
        Term(c, _d2(dR=1), r_pow=-1, ang=((0, one_sin2),), lam=lam),
        Term(2 * c * omega, _d2(dR=1), r_pow=1, ang=((0, _sin2),), lam=lam),
        Term(2 * c, _d2(dT=1), r_pow=-2, ang=((0, cot_sincos),), lam=lam),
        Term(2 * c * omega, _d2(dT=1), ang=((0, sincos),), lam=lam),
        Term(-3j * c, _d2(dl1=1), r_pow=-2, ang=((0, _csc2),), lam=lam),
        Term(-2j * c * omega, _d2(dl1=1), lam=lam),
        Term(-1.25 * c, _d2(), r_pow=-2, ang=((0, _csc2),), lam=lam),
        Term(-c * omega**2, _d2(), r_pow=2, ang=((0, _sin2),), lam=lam),
        Term(-c * omega, _d2(), lam=lam),
    )


def _ddag_scalar_sw_terms(omega: float) -> tuple[Term, ...]:
    c = 1 / (2 * omega)
    z = (0, 0)
    return (
        Term(c, _d2(dR=2), lam=z),
        Term(c, _d2(dR=1), r_pow=-1, lam=z),
        Term(c, _d2(dT=2), r_pow=-2, lam=z),
        Term(c, _d2(dl1=2), r_pow=-2, ang=((0, _csc2),), lam=z),
        Term(0.25 * c, _d2(), r_pow=-2, ang=((0, _csc2),), lam=z),
        Term(c, _d2(dl2=2), r_pow=-2, ang=((0, _sec2),), lam=z),
        Term(0.25 * c, _d2(), r_pow=-2, ang=((0, _sec2),), lam=z),
        Term(-c * omega**2, _d2(), r_pow=2, lam=z),
        Term(-1.0, _d2(dR=1), r_pow=1, lam=z),
        Term(omega, _d2(), r_pow=2, lam=z),
        Term(-1.0, _d2(), lam=z),
    )


_BOSON_KINDS = {"Adag": "Adag-tensor", "A": "A-tensor", "T": "T-tensor",
                "Ddag": "Ddag-tensor", "Dlow": "Dlow-tensor",
                "Ddag-scalar": "Ddag-scalar", "Dlow-scalar": "Dlow-scalar",
                "J0": "J0", "Jp": "Jp", "Jm": "Jm",
                "K0": "K0", "Kp": "Kp", "Km": "Km"}


@lru_cache(maxsize=None)
def _boson_term_rows(kind: str, component: tuple, system: str, omega: float):
    poly = bosonalg.build_generator(_BOSON_KINDS[kind],
                                    tuple(Fraction(x) for x in component), 2)
    op = bosoncoord.coordop_from_boson(poly)
    if system == "sw":
        op = bosoncoord.to_sw_picture(op, omega)
    return bosoncoord.coordop_terms(op)


def operator_from_boson(kind: str, component: tuple = (), system: str = "osc",
                        params: SWParams | None = None) -> DiffOperator:
    """D = 2 generator from its exact boson polynomial (any component)."""
    omega = 1.0 if system == "osc" else (params.omega if params else 1.0)
    rows = _boson_term_rows(kind, tuple(component), system, omega)
    terms = tuple(Term(1.0 + 0j, deriv, r_pow=p, ang=((0, fn),), lam=(k1, k2))
                  for (k1, k2, deriv, p, fn) in rows)
    name = f"{kind}{component}" if component else kind
    return DiffOperator(name + "@boson", system, 2, omega, terms)


def build_operator(name: str, system: str, params: SWParams | None = None,
                   component: tuple = ()) -> DiffOperator:
    """Displayed-form operators, transcribed term by term.

    Hamiltonians exist in any dimension; generator displays are the D = 2
    ones.  Lowering components A(+-1/2,+-1/2) have no printed coordinate
    form and are realized from the exact boson adjoints instead.
    """
    params = params or SWParams()
    omega = params.omega
    if name == "H-osc" and system == "osc":
        return DiffOperator(name, "osc", params.D, 1.0, _h_osc_terms(params.D))
    if name == "H-sw" and system == "sw":
        return DiffOperator(name, "sw", params.D, omega, _h_sw_terms(params.D, omega))
    if name == "H-k" and system == "swproj":
        return DiffOperator(name, "swproj", params.D, omega, _h_k_terms(params.D, params))
    if system not in ("osc", "sw"):
        raise CatalogueError(f"({name}, {system}) is not in the catalogue")
    om = 1.0 if system == "osc" else omega
    if name in ("J0", "Jp", "Jm", "K0", "Kp", "Km"):
        return DiffOperator(name, system, 2, om, _jk_terms(name, system))
    if name == "Adag":
        if component not in ((Fraction(1, 2), Fraction(1, 2)),
                             (Fraction(-1, 2), Fraction(-1, 2)),
                             (0.5, 0.5), (-0.5, -0.5)):
            raise CatalogueError(f"no displayed coordinate form for Adag{component}")
        two_sigma = 1 if component[0] > 0 else -1
        return DiffOperator(f"Adag({component[0]},{component[1]})", system, 2, om,
                            _adag_terms(two_sigma, system))
    if name == "A":
        if component not in ((Fraction(1, 2), Fraction(1, 2)),
                             (Fraction(-1, 2), Fraction(-1, 2)),
                             (0.5, 0.5), (-0.5, -0.5)):
            raise CatalogueError(f"no displayed coordinate form for A{component}")
        return operator_from_boson("A", component, system, params)
    if system == "sw":
        if name == "T" and component in ((1, 1),):
            return DiffOperator("T(+1,+1)", "sw", 2, om, _t11_sw_terms(om))
        if name == "Ddag" and component in ((1, 1),):
            return DiffOperator("Ddag(+1,+1)", "sw", 2, om, _ddag11_sw_terms(om))
        if name == "Ddag-scalar":
            return DiffOperator("Ddag-scalar", "sw", 2, om, _ddag_scalar_sw_terms(om))
    raise CatalogueError(f"({name}, {system}, {component}) is not in the catalogue")


def apply(op: DiffOperator, psi: WaveEval, point) -> complex:
    """Pointwise (op psi)(point) from the analytic derivative table."""
    if psi.system != op.system or psi.D != op.D:
        raise CoordinateSystemError("operator and wavefunction systems differ")
    point = tuple(float(v) for v in point)
    x = point[0]
    out = 0j
    for t in op.terms:
        val = t.const * x ** t.r_pow
        for idx, fn in t.ang:
            val *= complex(fn(point[1 + idx]))
        for i, k in enumerate(t.lam):
            if k:
                val *= np.exp(1j * k * point[op.D + i])
        out += val * psi.partial(t.deriv, point)
    return complex(out)


class MEEngine:
    """Matrix elements over a shared rule set with state/table caching."""

    def __init__(self, rules: RuleSet | None = None):
        self.rules = rules or RuleSet.build()
        self.quad = QuadEngine(self.rules)
        self._states: dict = {}

    def state(self, label, system: str, D: int, omega: float) -> WaveEval:
        key = (label, system, D, omega)
        got = self._states.get(key)
        if got is not None:
            return got
        if system == "osc":
            if isinstance(label, OscBarLabel):
                psi = osc_wavefunction_bar(label)
            elif isinstance(label, OscLabel):
                psi = osc_wavefunction(label)
            else:
                raise LabelError(f"cannot realize {label!r} in the oscillator picture")
        elif system in ("sw", "swproj"):
            psi = sw_wavefunction(label, SWParams(omega=omega, D=D),
                                  projected=(system == "swproj"))
        else:
            raise CoordinateSystemError(f"unknown system {system}")
        self._states[key] = psi
        return psi

    def matrix_element(self, bra, op: DiffOperator, ket) -> complex:
        if not isinstance(bra, WaveEval):
            bra = self.state(bra, op.system, op.D, op.omega)
        if not isinstance(ket, WaveEval):
            ket = self.state(ket, op.system, op.D, op.omega)
        D = op.D
        total = 0j
        base = np.conj(bra.prefactor) * ket.prefactor
        for t in op.terms:
            val = base * t.const
            if t.lam:
                for i, k in enumerate(t.lam):
                    val *= self.quad.lam_integral(bra, ket, i, shift=k,
                                                  order=t.deriv[D + i])
                    if val == 0:
                        break
                if val == 0:
                    continue
            elif bra.lam_charges:
                for i in range(D):
                    val *= self.quad.lam_integral(bra, ket, i, order=t.deriv[D + i])
            ang = dict(t.ang)
            for nu in range(1, D):
                val *= self.quad.angular_integral(bra, ket, nu,
                                                  coeff=ang.get(nu - 1),
                                                  order=t.deriv[nu])
            val *= self.quad.radial_integral(bra, ket, r_pow=t.r_pow,
                                             order=t.deriv[0])
            total += val
        return complex(total)

    def op_norm_sq(self, op: DiffOperator, ket) -> float:
        """|| op ket ||^2 by direct quadrature over term pairs."""
        if not isinstance(ket, WaveEval):
            ket = self.state(ket, op.system, op.D, op.omega)
        D = op.D
        total = 0j
        base = abs(ket.prefactor) ** 2
        for ta in op.terms:
            for tb in op.terms:
                val = base * np.conj(ta.const) * tb.const
                ok = True
                for i in range(D if ta.lam else 0):
                    val *= self.quad.lam_integral(
                        ket, ket, i, shift=tb.lam[i], order=tb.deriv[D + i],
                        bra_shift=ta.lam[i], bra_order=ta.deriv[D + i])
                    if val == 0:
                        ok = False
                        break
                if not ok:
                    continue
                ang_a, ang_b = dict(ta.ang), dict(tb.ang)
                for nu in range(1, D):
                    val *= self.quad.angular_integral(
                        ket, ket, nu, coeff=ang_b.get(nu - 1), order=tb.deriv[nu],
                        bra_coeff=ang_a.get(nu - 1), bra_order=ta.deriv[nu])
                val *= self.quad.radial_integral(
                    ket, ket, r_pow=ta.r_pow + tb.r_pow, order=tb.deriv[0],
                    bra_order=ta.deriv[0])
                total += val
        return float(total.real)


def matrix_element_numeric(bra, op: DiffOperator, ket,
                           rules: RuleSet | None = None,
                           engine: MEEngine | None = None) -> complex:
    """Quadrature matrix element <bra| op |ket> under the picture measure."""
    eng = engine or MEEngine(rules)
    return eng.matrix_element(bra, op, ket)


# ---------------------------------------------------------------------
# closed-form predictions
# ---------------------------------------------------------------------

_BRANCHES = {
    "Adag": {"up": (1, 0), "down": (-1, 1)},
    "A": {"up": (1, -1), "down": (-1, 0)},
    "T": {"up": (2, -1), "same": (0, 0), "down": (-2, 1)},
    "Ddag": {"up": (2, 0), "same": (0, 1), "down": (-2, 2)},
    "Dlow": {"up": (2, -2), "same": (0, -1), "down": (-2, 0)},
}

_RANK2 = {"Adag": 1, "A": 1, "T": 2, "Ddag": 2, "Dlow": 2}


def rme_target(kind: str, n_r: int, two_j: int, branch: str) -> tuple[int, int] | None:
    """(n_r', two_j') reached by the branch, or None if absent."""
    djj, dnr = _BRANCHES[kind][branch]
    nrp, tjp = n_r + dnr, two_j + djj
    if nrp < 0 or tjp < 0:
        return None
    return nrp, tjp


def reduced_matrix_element(kind: str, n_r: int, two_j: int, branch: str):
    """<n_r', j' || kind || n_r, j> closed forms; None for absent branches."""
    tgt = rme_target(kind, n_r, two_j, branch)
    if tgt is None:
        return None
    tj = two_j
    if kind == "Adag":
        if branch == "up":
            return 1j * sqrt((tj + 1) * (n_r + tj + 2) / (tj + 2))
        return -1j * sqrt((tj + 1) * (n_r + 1) / tj)
    if kind == "T":
        if branch == "up":
            return -sqrt((tj + 1) * n_r * (n_r + tj + 2) / (tj + 3))
        if branch == "same":
            return n_r + tj / 2 + 1
        return -sqrt((tj + 1) * (n_r + 1) * (n_r + tj + 1) / (tj - 1))
    if kind == "Ddag":
        if branch == "up":
            return -sqrt((tj + 1) * (n_r + tj + 2) * (n_r + tj + 3) / (tj + 3))
        if branch == "same":
            return sqrt((n_r + 1) * (n_r + tj + 2))
        return -sqrt((tj + 1) * (n_r + 1) * (n_r + 2) / (tj - 1))
    if kind in ("A", "Dlow"):
        # <n_r', j' || lower || n_r, j> = (2j+1)/(2j'+1) conj <n_r, j || raise || n_r', j'>
        nrp, tjp = tgt
        inverse = {"up": "down", "down": "up", "same": "same"}[branch]
        raise_kind = "Adag" if kind == "A" else "Ddag"
        up = reduced_matrix_element(raise_kind, nrp, tjp, inverse)
        if up is None:
            return None
        return (tj + 1) / (tjp + 1) * np.conj(up)
    raise LabelError(f"unknown tensor kind {kind}")


def _su2_ladder(two_j: int, two_m: int, pm: int) -> float:
    """sqrt((j -+ m)(j +- m + 1)) for the raising (+1) / lowering (-1) action."""
    return sqrt(((two_j - pm * two_m) / 2) * ((two_j + pm * two_m) / 2 + 1))


def _predicted_osc(component, bra: OscBarLabel, ket: OscBarLabel) -> complex:
    if isinstance(component, str):
        name = component
        same_jmm = (bra.two_j == ket.two_j and bra.two_m == ket.two_m
                    and bra.two_mp == ket.two_mp)
        if name in ("J0", "K0"):
            if bra == ket:
                return (ket.two_m if name == "J0" else ket.two_mp) / 2
            return 0j
        if name in ("Jp", "Jm", "Kp", "Km"):
            pm = 1 if name[1] == "p" else -1
            proj, other = (("two_m", "two_mp") if name[0] == "J" else ("two_mp", "two_m"))
            if (bra.n_r == ket.n_r and bra.two_j == ket.two_j
                    and getattr(bra, proj) == getattr(ket, proj) + 2 * pm
                    and getattr(bra, other) == getattr(ket, other)):
                return _su2_ladder(ket.two_j, getattr(ket, proj), pm)
            return 0j
        if name == "Ddag-scalar":
            if same_jmm and bra.n_r == ket.n_r + 1:
                return -2 * sqrt((ket.n_r + 1) * (ket.n_r + ket.two_j + 2))
            return 0j
        if name == "Dlow-scalar":
            if same_jmm and bra.n_r == ket.n_r - 1:
                return -2 * sqrt(ket.n_r * (ket.n_r + ket.two_j + 1))
            return 0j
        raise LabelError(f"unknown scalar component {name}")
    kind, sigma, tau = component
    two_sigma, two_tau = int(2 * Fraction(sigma)), int(2 * Fraction(tau))
    two_s = _RANK2[kind]
    if (bra.two_m != ket.two_m + two_sigma or bra.two_mp != ket.two_mp + two_tau):
        return 0j
    for branch in _BRANCHES[kind]:
        tgt = rme_target(kind, ket.n_r, ket.two_j, branch)
        if tgt is None or tgt != (bra.n_r, bra.two_j):
            continue
        red = reduced_matrix_element(kind, ket.n_r, ket.two_j, branch)
        return (red
                * cg(ket.two_j, ket.two_m, two_s, two_sigma, bra.two_j, bra.two_m)
                * cg(ket.two_j, ket.two_mp, two_s, two_tau, bra.two_j, bra.two_mp))
    return 0j


def _t_coeff(case: int, n_r: int, g: int) -> float:
    if case == 1:
        return -sqrt(g * n_r * (n_r + g + 1) / (g + 2))
    if case == 0:
        return n_r + (g + 1) / 2
    return -sqrt(g * (n_r + 1) * (n_r + g) / (g - 2))


def _a_coeff(case: int, n_r: int, g: int) -> complex:
    if case == 1:
        return 1j * sqrt(g * (n_r + g + 1) / (g + 1))
    return -1j * sqrt(g * (n_r + 1) / (g - 1))


def _d_coeff(case: int, n_r: int, g: int) -> float:
    if case == 1:
        return -sqrt(g * (n_r + g + 1) * (n_r + g + 2) / (g + 2))
    if case == 0:
        return sqrt((n_r + 1) * (n_r + g + 1))
    return -sqrt(g * (n_r + 1) * (n_r + 2) / (g - 2))


def _predicted_sw(component, bra: SWLabel, ket: SWLabel) -> complex:
    if not (bra.is_half_integer and ket.is_half_integer):
        raise LabelError("closed-form matrix elements need half-integer a, b")
    n_r, n, a, b = ket.n_r, ket.n, ket.a, ket.b
    if isinstance(component, str):
        name = component
        if name in ("J0", "K0"):
            if bra == ket:
                return float((a - b) / 2) if name == "J0" else float(-(a + b - 1) / 2)
            return 0j
        ladder = {
            "Jp": (SWLabel(n_r, n, a + 1, b - 1) if b > Fraction(3, 2) or b - 1 >= Fraction(1, 2) else None,
                   (n + a + Fraction(1, 2)) * (n + b - Fraction(1, 2))),
            "Jm": (SWLabel(n_r, n, a - 1, b + 1) if a - 1 >= Fraction(1, 2) else None,
                   (n + a - Fraction(1, 2)) * (n + b + Fraction(1, 2))),
            "Kp": (SWLabel(n_r, n + 1, a - 1, b - 1)
                   if a - 1 >= Fraction(1, 2) and b - 1 >= Fraction(1, 2) else None,
                   (n + 1) * (n + a + b - 1)),
            "Km": (SWLabel(n_r, n - 1, a + 1, b + 1) if n >= 1 else None,
                   n * (n + a + b)),
        }
        if name in ladder:
            tgt, val2 = ladder[name]
            if tgt is not None and bra == tgt:
                return sqrt(float(val2))
            return 0j
        g = 2 * n + a + b
        if name == "Ddag-scalar":
            if bra == SWLabel(n_r + 1, n, a, b):
                return -2 * sqrt(float((n_r + 1) * (n_r + g + 1)))
            return 0j
        if name == "Dlow-scalar":
            if n_r >= 1 and bra == SWLabel(n_r - 1, n, a, b):
                return -2 * sqrt(float(n_r * (n_r + g)))
            return 0j
        raise LabelError(f"unknown scalar component {name}")

    kind, sigma, tau = component
    sigma, tau = Fraction(sigma), Fraction(tau)
    if kind in ("A", "Dlow"):
        # derived from the oscillator-picture forms through the label map
        return _predicted_osc((kind, sigma, tau), bar_from_ab(bra), bar_from_ab(ket))
    ap, bp = a + sigma - tau, b - sigma - tau
    if ap < Fraction(1, 2) or bp < Fraction(1, 2) or (bra.a, bra.b) != (ap, bp):
        return 0j
    g_f = 2 * n + a + b
    if g_f.denominator != 1:
        raise LabelError("a + b must be an integer for tensor actions")
    g = int(g_f)
    two_j, two_m, two_mp = ket.two_j, ket.two_m, ket.two_mp
    two_s = _RANK2[kind]
    half = Fraction(1, 2)
    nr_extra = {"T": 0, "Adag": half, "Ddag": 1}[kind]
    coeff_fn = {"T": _t_coeff, "Adag": _a_coeff, "Ddag": _d_coeff}[kind]
    np_ = Fraction(bra.n)
    case_f = np_ - n - tau
    if case_f.denominator != 1 or abs(case_f) > 1:
        return 0j
    case = int(case_f)
    if kind == "Adag" and case == 0:
        return 0j  # rank-1/2 sums run over n' = n + tau -+ 1/2 only
    nrp = Fraction(n_r) - (np_ - n - tau) + nr_extra
    if nrp.denominator != 1 or bra.n_r != int(nrp):
        return 0j
    two_jp = 2 * bra.n - int(2 * tau) + int(a + b - 1)
    if two_jp < 0:
        return 0j
    if kind == "Adag":
        case = 1 if np_ == n + tau + half else -1
    value = coeff_fn(case, n_r, g)
    return (value
            * cg(two_j, two_m, two_s, int(2 * sigma), two_jp, two_m + int(2 * sigma))
            * cg(two_j, two_mp, two_s, int(2 * tau), two_jp, two_mp + int(2 * tau)))


def matrix_element_predicted(component, bra, ket, picture: str) -> complex:
    """Closed-form <bra| component |ket> in the stated picture.

    component: a generator name ('J0', 'Jp', ..., 'Ddag-scalar',
    'Dlow-scalar') or a tuple (kind, sigma, tau) with kind in
    {'Adag', 'A', 'T', 'Ddag', 'Dlow'}.  Selection-rule mismatches give 0.
    """
    if picture == "osc":
        return complex(_predicted_osc(component, bra, ket))
    if picture == "sw":
        return complex(_predicted_sw(component, bra, ket))
    raise CoordinateSystemError(f"unknown picture {picture}")
