"""Reduction of the 2D-dimensional oscillator to the D-dimensional system
with inverse-square barriers: coordinate change, multiplicative factor,
transformed wavefunctions and spectrum, and the strength <-> phase-number
correspondence.

All D = 2 label conversions between the (n_r, n, p1, p2), (n_r, j, m, m')
and (n_r, n, a, b) systems live here, together with the single relative
phase between the p-labelled and the rebased wavefunctions, so the phase is
applied in exactly one place.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from math import exp, lgamma, log, pi, sqrt

import numpy as np

from .errors import LabelError, UnphysicalParameterError, UnsupportedDimensionError
from .oscillator import OscBarLabel, OscLabel, osc_norm_const
from .wavefunc import AngularFactor, PhaseFactor, RadialFactor, WaveEval


@dataclass(frozen=True)
class SWParams:
    """Frequency, dimension and (optional) barrier strengths k_1..k_D."""

    omega: float = 1.0
    D: int = 2
    k: tuple[float, ...] = ()

    def __post_init__(self):
        if self.omega <= 0:
            raise UnphysicalParameterError("omega must be positive")
        if self.D < 2:
            raise LabelError("D must be at least 2")
        if self.k and (len(self.k) != self.D or any(v <= 0 for v in self.k)):
            raise UnphysicalParameterError("need D positive strengths k_nu")

    @classmethod
    def from_p(cls, p: tuple[int, ...], omega: float = 1.0) -> "SWParams":
        """Strengths k_nu = sqrt(p_{D-nu+1}^2 - 1/4) from phase numbers."""
        D = len(p)
        k = tuple(k_from_p(p[D - nu]) for nu in range(1, D + 1))
        return cls(omega=omega, D=D, k=k)


def k_from_p(p: int) -> float:
    """Barrier strength sqrt(p**2 - 1/4); p = 0 has no real counterpart."""
    if p == 0:
        raise UnphysicalParameterError("p = 0 would give an imaginary strength")
    return sqrt(p * p - 0.25)


def reduction_factor(r: float, phi, params: SWParams) -> float:
    """Multiplicative factor (omega r)^D prod (sin phi_nu)^(D-nu) cos phi_nu."""
    phi = np.asarray(phi, dtype=float)
    if phi.shape != (params.D - 1,):
        raise LabelError("need D-1 angles")
    out = (params.omega * r) ** params.D
    for nu in range(1, params.D):
        out *= np.sin(phi[nu - 1]) ** (params.D - nu) * np.cos(phi[nu - 1])
    return float(out)


def sw_energy(n_r: int, two_j: int, params: SWParams) -> float:
    """E = 2 omega (2 n_r + 2 j + D)."""
    if n_r < 0 or two_j < 0:
        raise LabelError("labels must be nonnegative")
    return 2 * params.omega * (2 * n_r + two_j + params.D)


@dataclass(frozen=True)
class SWLabel:
    """D = 2 labels (n_r, n, a, b); a, b >= 1/2, half-integers for all
    states that descend from integer phase numbers."""

    n_r: int
    n: int
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.n_r < 0 or self.n < 0:
            raise LabelError("n_r and n must be nonnegative")
        if self.a < Fraction(1, 2) or self.b < Fraction(1, 2):
            raise LabelError("a and b must be at least 1/2")

    @property
    def is_half_integer(self) -> bool:
        return self.a.denominator <= 2 and self.b.denominator <= 2

    @property
    def two_j(self) -> int:
        v = 2 * self.n + self.a + self.b - 1
        if v.denominator != 1:
            raise LabelError("j is only defined for half-integer a, b")
        return int(v)

    @property
    def two_m(self) -> int:
        return int(self.a - self.b)

    @property
    def two_mp(self) -> int:
        return int(-(self.a + self.b - 1))


def bar_phase(p1: int, p2: int) -> float:
    """Sign relating the p-labelled state to the rebased one."""
    return -1.0 if ((abs(p1) + p1) // 2 + abs(p2)) % 2 else 1.0


def bar_from_p(n_r: int, n: int, p1: int, p2: int) -> tuple[OscBarLabel, float]:
    """(Euler-basis label, phase) with Psi^osc = phase * Psi-bar^osc."""
    two_j = 2 * n + abs(p1) + abs(p2)
    return OscBarLabel(n_r, two_j, p1 - p2, -(p1 + p2)), bar_phase(p1, p2)


def swlabel_from_p(n_r: int, n: int, p1: int, p2: int) -> tuple[SWLabel, float]:
    """Canonical (a, b) label of a physical state; requires p1, p2 >= 1.

    Different sign choices of (p1, p2) with the same magnitudes are
    replicas of one physical state; the canonical representative has both
    phase numbers positive.
    """
    if p1 < 1 or p2 < 1:
        raise UnphysicalParameterError("canonical labels need p1, p2 >= 1")
    label = SWLabel(n_r, n, Fraction(2 * p1 + 1, 2), Fraction(2 * p2 + 1, 2))
    return label, bar_phase(p1, p2)


def p_from_swlabel(label: SWLabel) -> tuple[int, int, int, int]:
    """(n_r, n, p1, p2) of a half-integer-labelled physical state."""
    if not label.is_half_integer:
        raise LabelError("phase numbers exist only for half-integer a, b")
    p1, p2 = int(label.a - Fraction(1, 2)), int(label.b - Fraction(1, 2))
    if p1 < 1 or p2 < 1:
        raise UnphysicalParameterError("state does not descend from nonzero phase numbers")
    return label.n_r, label.n, p1, p2


def ab_from_bar(bar: OscBarLabel) -> SWLabel:
    """(n_r, n, a, b) image of an Euler-basis label."""
    a = Fraction(bar.two_m - bar.two_mp + 1, 2)
    b = Fraction(-bar.two_m - bar.two_mp + 1, 2)
    n = (bar.two_j + bar.two_mp) // 2
    return SWLabel(bar.n_r, n, a, b)


def bar_from_ab(label: SWLabel) -> OscBarLabel:
    return OscBarLabel(label.n_r, label.two_j, label.two_m, label.two_mp)


def sw_norm_const(label: SWLabel, omega: float) -> complex:
    """Normalization of the (a, b)-labelled state, phase included."""
    a, b, n, n_r = float(label.a), float(label.b), label.n, label.n_r
    ln = (log(omega) * (2 * n + a + b + 1) + lgamma(n_r + 1) + lgamma(n + 1)
          + log(2 * n + a + b) + lgamma(n + a + b)
          - lgamma(n_r + 2 * n + a + b + 1)
          - lgamma(n + a + 0.5) - lgamma(n + b + 0.5))
    mag = 2 * exp(ln / 2)
    expo = label.a + label.b - 1
    if expo.denominator == 1:
        phase = -1.0 + 0j if int(expo) % 2 else 1.0 + 0j
    else:
        phase = cmath.exp(1j * pi * float(expo))
    return phase * mag


def sw_wavefunction(label, params: SWParams, projected: bool = False) -> WaveEval:
    """Evaluator of a transformed-system wavefunction.

    An OscLabel (all p_nu nonzero) selects the general-D p-labelled form;
    an SWLabel selects the D = 2 (a, b)-labelled one.  With projected=True
    the (r, phi)-only wavefunction of the reduced Hamiltonian is returned,
    without the auxiliary phase factors.
    """
    omega, D = params.omega, params.D
    if isinstance(label, SWLabel):
        if D != 2:
            raise UnsupportedDimensionError("(a, b) labels are the D = 2 form")
        a, b = float(label.a), float(label.b)
        w = 2 * label.n + a + b
        factors = [RadialFactor(w=w, n=label.n_r, alpha=w, s=omega),
                   AngularFactor(a_pow=a, b_pow=b, n=label.n,
                                 alpha=a - 0.5, beta=b - 0.5)]
        charges = (b - 0.5, a - 0.5)
        # x**w with z = omega x**2 is exactly (z/omega)**(w/2), so the whole
        # omega dependence sits in the normalization constant.
        pref = sw_norm_const(label, omega)
        halfpow = Fraction(2 * label.n) + (label.a + label.b)
        if not projected:
            factors.extend(PhaseFactor(q) for q in charges)
            pref /= 2 * pi
        return WaveEval(system="swproj" if projected else "sw", D=2, omega=omega,
                        prefactor=complex(pref), factors=tuple(factors),
                        radial_halfpow=halfpow / 2,
                        lam_charges=() if projected else charges, label=label)

    if not isinstance(label, OscLabel):
        raise LabelError(f"unsupported label type {type(label)!r}")
    if label.D != D:
        raise LabelError("label and parameter dimensions differ")
    if any(v == 0 for v in label.p):
        raise UnphysicalParameterError("physical states need all p_nu nonzero")
    a, bv = label.a_vec(), label.b_vec()
    two_j = label.two_j
    w = two_j + D / 2
    factors = [RadialFactor(w=w, n=label.n_r, alpha=two_j + D - 1, s=omega)]
    for nu in range(1, D):
        an, bn = float(a[nu - 1]), float(bv[nu - 1])
        factors.append(AngularFactor(a_pow=an, b_pow=bn + (D - nu - 1) / 2,
                                     n=label.n[nu - 1],
                                     alpha=an - 0.5, beta=bn + D - nu - 1.5))
    pref = osc_norm_const(label) * omega ** (two_j / 2 + D / 2)
    charges = tuple(float(label.p[D - 1 - i]) for i in range(D))
    if projected:
        pref *= (2 * pi) ** (D / 2)
    else:
        factors.extend(PhaseFactor(q) for q in charges)
    return WaveEval(system="swproj" if projected else "sw", D=D, omega=omega,
                    prefactor=complex(pref), factors=tuple(factors),
                    radial_halfpow=Fraction(two_j, 2) + Fraction(D, 4),
                    lam_charges=() if projected else charges, label=label)


def projected_hamiltonian_check(labels, params: SWParams, seed: int = 0,
                                tol: float = 1e-8, npoints: int = 50) -> dict:
    """Apply the reduced D-dimensional Hamiltonian (strengths from the
    shared phase numbers) to the (r, phi) parts and report eigen-residuals.
    """
    from .diffops import apply, build_operator  # local import; diffops sits above

    labels = list(labels)
    if not labels:
        raise LabelError("need at least one label")
    p0 = labels[0].p
    if any(lab.p != p0 for lab in labels):
        raise LabelError("all labels must share the phase numbers p")
    par = SWParams.from_p(p0, params.omega) if not params.k else params
    op = build_operator("H-k", "swproj", par)
    rng = np.random.default_rng(seed)
    D = par.D
    pts = np.column_stack([rng.uniform(0.35, 2.2, npoints)]
                          + [rng.uniform(0.15, np.pi / 2 - 0.15, npoints)
                             for _ in range(D - 1)])
    rows = []
    worst = 0.0
    for lab in labels:
        psi = sw_wavefunction(lab, par, projected=True)
        energy = sw_energy(lab.n_r, lab.two_j, par)
        vals = np.array([psi.value(pt) for pt in pts])
        resid = np.array([apply(op, psi, pt) for pt in pts]) - energy * vals
        rel = float(np.max(np.abs(resid)) / np.max(np.abs(vals)))
        worst = max(worst, rel)
        rows.append({"label": repr(lab), "energy": energy, "residual": rel,
                     "ok": rel <= tol})
    return {"k": par.k, "omega": par.omega, "max_residual": worst,
            "ok": all(r["ok"] for r in rows), "states": rows}
