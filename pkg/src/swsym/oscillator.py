"""The 2D-dimensional harmonic oscillator in (R, theta, lambda) coordinates.

Label bookkeeping, separation constants, energies, level enumeration, and
analytic wavefunction evaluators, plus the Euler-angle rebased form used in
two dimensions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, lgamma, pi, exp, log
from typing import Iterator

import numpy as np

from .errors import LabelError
from .wavefunc import AngularFactor, DFactor, PhaseFactor, RadialFactor, WaveEval


@dataclass(frozen=True)
class OscLabel:
    """Quantum numbers (D, n_r, n_1..n_{D-1}, p_1..p_D) of one state."""

    D: int
    n_r: int
    n: tuple[int, ...]
    p: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "n", tuple(int(v) for v in self.n))
        object.__setattr__(self, "p", tuple(int(v) for v in self.p))
        if self.D < 2:
            raise LabelError("D must be at least 2")
        if self.n_r < 0 or any(v < 0 for v in self.n):
            raise LabelError("radial and angular quantum numbers must be nonnegative")
        if len(self.n) != self.D - 1 or len(self.p) != self.D:
            raise LabelError("need D-1 angular and D phase quantum numbers")

    @property
    def two_j(self) -> int:
        return 2 * sum(self.n) + sum(abs(v) for v in self.p)

    @property
    def j(self) -> Fraction:
        return Fraction(self.two_j, 2)

    @property
    def N(self) -> int:
        return 2 * self.n_r + self.two_j

    def a_vec(self) -> tuple[Fraction, ...]:
        return tuple(abs(self.p[nu - 1]) + Fraction(1, 2) for nu in range(1, self.D))

    def b_vec(self) -> tuple[Fraction, ...]:
        out = []
        for nu in range(1, self.D):
            tail_n = 2 * sum(self.n[nu:])
            tail_p = sum(abs(v) for v in self.p[nu:])
            out.append(tail_n + tail_p + Fraction(1, 2))
        return tuple(out)


@dataclass(frozen=True)
class SeparationData:
    """Separation constants Delta_1..Delta_D and C_1..C_D (exact integers)."""

    Delta: tuple[int, ...]
    C: tuple[int, ...]


def _separation_recursion(label: OscLabel) -> SeparationData:
    D = label.D
    delta = [0] * (D + 1)
    delta[D] = abs(label.p[D - 1])
    for nu in range(D - 1, 0, -1):
        delta[nu] = 2 * label.n[nu - 1] + abs(label.p[nu - 1]) + delta[nu + 1] + 1
    c = [delta[nu] ** 2 - (D - nu) ** 2 for nu in range(1, D + 1)]
    return SeparationData(tuple(delta[1:]), tuple(c))


def _separation_closed_form(label: OscLabel) -> SeparationData:
    D = label.D
    deltas, cs = [], []
    for nu in range(1, D + 1):
        tail = 2 * sum(label.n[nu - 1:]) + sum(abs(v) for v in label.p[nu - 1:])
        deltas.append(tail + D - nu)
        cs.append(tail * (tail + 2 * (D - nu)))
    return SeparationData(tuple(deltas), tuple(cs))


def derived_labels(label: OscLabel):
    """(j, N, a_vec, b_vec, SeparationData) with the recursion cross-check."""
    sep = _separation_closed_form(label)
    rec = _separation_recursion(label)
    if sep != rec:
        raise AssertionError(f"separation-constant recursion mismatch for {label}")
    if sep.C[0] != label.two_j * (label.two_j + 2 * (label.D - 1)):
        raise AssertionError(f"C_1 != 4j(j+D-1) for {label}")
    return label.j, label.N, label.a_vec(), label.b_vec(), sep


def osc_energy(label: OscLabel) -> float:
    """E = 2(2 n_r + 2 j + D)."""
    return float(2 * (label.N + label.D))


def _signed_vectors(total: int, length: int) -> Iterator[tuple[int, ...]]:
    """All integer vectors of given length with sum of |entries| == total."""
    if length == 0:
        if total == 0:
            yield ()
        return
    for head in range(-total, total + 1):
        for tail in _signed_vectors(total - abs(head), length - 1):
            yield (head,) + tail


def _nonneg_vectors(budget: int, length: int) -> Iterator[tuple[int, ...]]:
    """All nonnegative vectors with 2 * sum(entries) <= budget."""
    if length == 0:
        yield ()
        return
    for head in range(budget // 2 + 1):
        for tail in _nonneg_vectors(budget - 2 * head, length - 1):
            yield (head,) + tail


def enumerate_level(N: int, D: int) -> list[OscLabel]:
    """All labels with 2 n_r + 2 j = N, lexicographic in (n_r, n, p)."""
    if N < 0:
        raise LabelError("N must be nonnegative")
    labels = []
    for n_r in range(N // 2 + 1):
        two_j = N - 2 * n_r
        for n in _nonneg_vectors(two_j, D - 1):
            rem = two_j - 2 * sum(n)
            for p in _signed_vectors(rem, D):
                labels.append(OscLabel(D, n_r, n, p))
    labels.sort(key=lambda s: (s.n_r, s.n, s.p))
    expected = comb(N + 2 * D - 1, 2 * D - 1)
    if len(labels) != expected:
        raise AssertionError(f"enumeration produced {len(labels)} != C = {expected}")
    return labels


def osc_norm_const(label: OscLabel) -> float:
    """Normalization against dV, in log space internally."""
    D, n_r = label.D, label.n_r
    two_j = label.two_j
    ln = lgamma(n_r + 1) - D * log(pi) - lgamma(n_r + two_j + D)
    a, b = label.a_vec(), label.b_vec()
    for nu in range(1, D):
        an, bn, nn = float(a[nu - 1]), float(b[nu - 1]), label.n[nu - 1]
        ln += (lgamma(nn + 1) + log(2 * nn + an + bn + D - nu - 1)
               + lgamma(nn + an + bn + D - nu - 1)
               - lgamma(nn + an + 0.5) - lgamma(nn + bn + D - nu - 0.5))
    return exp(ln / 2)


def osc_wavefunction(label: OscLabel) -> WaveEval:
    """Evaluator of Psi^osc(R, theta, lambda) with all partials to order 2."""
    D = label.D
    a, b = label.a_vec(), label.b_vec()
    factors = [RadialFactor(w=label.two_j, n=label.n_r, alpha=label.two_j + D - 1)]
    for nu in range(1, D):
        an, bn = float(a[nu - 1]), float(b[nu - 1])
        factors.append(AngularFactor(a_pow=an - 0.5, b_pow=bn - 0.5,
                                     n=label.n[nu - 1],
                                     alpha=an - 0.5, beta=bn + D - nu - 1.5))
    charges = tuple(label.p[D - 1 - i] for i in range(D))
    factors.extend(PhaseFactor(q) for q in charges)
    return WaveEval(system="osc", D=D, omega=1.0,
                    prefactor=complex(osc_norm_const(label)),
                    factors=tuple(factors),
                    radial_halfpow=Fraction(label.two_j, 2),
                    lam_charges=charges, label=label)


@dataclass(frozen=True)
class OscBarLabel:
    """Euler-basis labels (n_r, j, m, m') of a D = 2 oscillator state."""

    n_r: int
    two_j: int
    two_m: int
    two_mp: int

    def __post_init__(self):
        if self.n_r < 0 or self.two_j < 0:
            raise LabelError("n_r and j must be nonnegative")
        for two_x in (self.two_m, self.two_mp):
            if abs(two_x) > self.two_j or (self.two_j - two_x) % 2:
                raise LabelError(f"projection {two_x}/2 invalid for j = {self.two_j}/2")

    @property
    def N(self) -> int:
        return 2 * self.n_r + self.two_j


def osc_wavefunction_bar(bar: OscBarLabel) -> WaveEval:
    """Evaluator of the rebased Psi-bar^osc_{n_r, j, m, m'} (D = 2)."""
    n_r, two_j = bar.n_r, bar.two_j
    norm = exp((log(two_j + 1) + lgamma(n_r + 1)
                - 2 * log(pi) - lgamma(n_r + two_j + 2)) / 2)
    phase = -1.0 if ((two_j - bar.two_mp) // 2) % 2 else 1.0
    charges = (-(bar.two_m + bar.two_mp) // 2, (bar.two_m - bar.two_mp) // 2)
    factors = (RadialFactor(w=two_j, n=n_r, alpha=two_j + 1),
               DFactor(two_j, bar.two_m, bar.two_mp),
               PhaseFactor(charges[0]), PhaseFactor(charges[1]))
    return WaveEval(system="osc", D=2, omega=1.0,
                    prefactor=complex(phase * norm),
                    factors=factors, radial_halfpow=Fraction(two_j, 2),
                    lam_charges=charges, label=bar)


def cartesian_from_hyper(R: float, theta, lam, D: int) -> np.ndarray:
    """Cartesian X_1..X_{2D} from (R, theta_1.., lambda_1..)."""
    theta = np.asarray(theta, dtype=float)
    lam = np.asarray(lam, dtype=float)
    if theta.shape != (D - 1,) or lam.shape != (D,):
        raise LabelError("need D-1 polar angles and D phase angles")
    sins = np.sin(theta)
    coss = np.cos(theta)
    X = np.empty(2 * D)
    X[0] = R * np.prod(sins) * np.sin(lam[0])
    X[1] = R * np.prod(sins) * np.cos(lam[0])
    for nu in range(2, D):
        body = R * np.prod(sins[: D - nu]) * coss[D - nu]
        X[2 * nu - 2] = body * np.sin(lam[nu - 1])
        X[2 * nu - 1] = body * np.cos(lam[nu - 1])
    X[2 * D - 2] = R * coss[0] * np.sin(lam[D - 1])
    X[2 * D - 1] = R * coss[0] * np.cos(lam[D - 1])
    return X
