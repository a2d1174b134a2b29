"""Exact normal-ordered algebra of boson creation/annihilation operators.

Polynomials over 2D modes are stored as {(creation exponents, annihilation
exponents): coefficient} with coefficients in Q(i, sqrt(2), ...), so every
commutation relation of the symmetry and dynamical algebras, and every
irreducible-tensor relation in two dimensions, is checked with zero
tolerance.  The central element of the Weyl algebra is the empty monomial,
which every faithful representation sends to the identity.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from math import comb, factorial

import numpy as np
import scipy.sparse as sp

from .errors import LabelError, UnsupportedDimensionError
from .exactnum import C_I, C_ONE, CSqrt, SqrtSum
from .wigner import cg_exact

Mono = tuple[tuple[int, ...], tuple[int, ...]]


def _two(x) -> int:
    """Doubled-integer form of a (half-)integer tensor component index."""
    two = Fraction(x) * 2
    if two.denominator != 1:
        raise LabelError(f"component index {x} is not a half-integer")
    return int(two)


class BosonPoly:
    """Normal-ordered polynomial; treat instances as immutable values."""

    __slots__ = ("nmodes", "terms")

    def __init__(self, nmodes: int, terms: dict[Mono, CSqrt] | None = None):
        self.nmodes = nmodes
        self.terms = {m: c for m, c in (terms or {}).items() if not c.is_zero()}

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, nmodes: int) -> "BosonPoly":
        return cls(nmodes)

    @classmethod
    def unit(cls, nmodes: int) -> "BosonPoly":
        """The central element I (empty monomial)."""
        z = (0,) * nmodes
        return cls(nmodes, {(z, z): C_ONE})

    @classmethod
    def creation(cls, mu: int, nmodes: int) -> "BosonPoly":
        z = [0] * nmodes
        z[mu] = 1
        return cls(nmodes, {(tuple(z), (0,) * nmodes): C_ONE})

    @classmethod
    def annihilation(cls, mu: int, nmodes: int) -> "BosonPoly":
        z = [0] * nmodes
        z[mu] = 1
        return cls(nmodes, {((0,) * nmodes, tuple(z)): C_ONE})

    # -- ring operations ----------------------------------------------
    def __add__(self, other: "BosonPoly") -> "BosonPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, CSqrt()) + c
        return BosonPoly(self.nmodes, out)

    def __neg__(self) -> "BosonPoly":
        return BosonPoly(self.nmodes, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "BosonPoly") -> "BosonPoly":
        return self + (-other)

    def scale(self, c) -> "BosonPoly":
        if isinstance(c, (int, Fraction)):
            c = CSqrt.from_rational(c)
        elif isinstance(c, SqrtSum):
            c = CSqrt.real(c)
        return BosonPoly(self.nmodes, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other: "BosonPoly") -> "BosonPoly":
        """Operator product, normal-ordered on the fly.

        Per mode, alpha^a alpha_dag^c = sum_k k! C(a,k) C(c,k)
        alpha_dag^(c-k) alpha^(a-k); modes are independent.
        """
        out: dict[Mono, CSqrt] = {}
        for (c1, a1), v1 in self.terms.items():
            for (c2, a2), v2 in other.terms.items():
                v12 = v1 * v2
                ranges = [range(min(a, c) + 1) for a, c in zip(a1, c2)]
                for k in iproduct(*ranges):
                    w = 1
                    for kk, aa, cc in zip(k, a1, c2):
                        w *= factorial(kk) * comb(aa, kk) * comb(cc, kk)
                    mono = (tuple(x + y - z for x, y, z in zip(c1, c2, k)),
                            tuple(x + y - z for x, y, z in zip(a1, a2, k)))
                    cur = out.get(mono)
                    add = v12 * w
                    out[mono] = add if cur is None else cur + add
        return BosonPoly(self.nmodes, out)

    def adjoint(self) -> "BosonPoly":
        """Hermitian conjugate; swaps exponent blocks, conjugates coefficients."""
        return BosonPoly(self.nmodes,
                         {(a, c): v.conjugate() for (c, a), v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, BosonPoly) and self.nmodes == other.nmodes \
            and self.terms == other.terms

    def __hash__(self):
        return hash((self.nmodes, frozenset(self.terms.items())))

    # -- presentation ---------------------------------------------------
    def sorted_terms(self):
        key = lambda mc: (sum(mc[0][0]) + sum(mc[0][1]), mc[0])
        return sorted(self.terms.items(), key=key)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (c, a), v in self.sorted_terms():
            ops = [f"ad{m}" + (f"^{e}" if e > 1 else "")
                   for m, e in enumerate(c) if e]
            ops += [f"a{m}" + (f"^{e}" if e > 1 else "")
                    for m, e in enumerate(a) if e]
            bits.append(f"({v}) {' '.join(ops) if ops else 'I'}")
        return " + ".join(bits)

    __repr__ = __str__


def normal_order(obj, nmodes: int | None = None) -> BosonPoly:
    """Normal-ordered form of a polynomial or of a product word.

    A word is a sequence of (mode, is_creation) factors, multiplied left to
    right through the Weyl relation.  Polynomials are already canonical and
    pass through unchanged (the map is idempotent).
    """
    if isinstance(obj, BosonPoly):
        return obj
    if nmodes is None:
        raise LabelError("need nmodes for a word")
    out = BosonPoly.unit(nmodes)
    for mode, dag in obj:
        fac = (BosonPoly.creation if dag else BosonPoly.annihilation)(mode, nmodes)
        out = out * fac
    return out


def commutator(a: BosonPoly, b: BosonPoly) -> BosonPoly:
    return a * b - b * a


# ---------------------------------------------------------------------
# generator catalogue
# ---------------------------------------------------------------------

_HALF = Fraction(1, 2)
_EPS = {(1, 2, 3): 1, (2, 3, 1): 1, (3, 1, 2): 1,
        (1, 3, 2): -1, (3, 2, 1): -1, (2, 1, 3): -1}

_cache: dict = {}


def build_generator(kind: str, indices: tuple = (), D: int = 2) -> BosonPoly:
    """Exact generator polynomials.

    kinds: E, Ebar, L, T, Ddag, Dlow (pairs mu, nu of 0-based modes);
    alpha-dag, alpha (one mode); Casimir1, Hosc, Ddag-scalar, Dlow-scalar,
    Number (no indices); J, K (Cartesian i in 1..3, D = 2); J0/Jp/Jm/
    K0/Kp/Km; Adag-tensor, A-tensor, T-tensor, Ddag-tensor, Dlow-tensor
    (component pair sigma, tau, D = 2); AdagxA(s, t, sigma, tau) and
    AdagxAdag(s, t, sigma, tau) coupled tensors.
    """
    key = (kind, tuple(indices), D)
    got = _cache.get(key)
    if got is None:
        got = _cache[key] = _build_generator(kind, tuple(indices), D)
    return got


def _build_generator(kind: str, idx: tuple, D: int) -> BosonPoly:
    nm = 2 * D
    ad = lambda mu: BosonPoly.creation(mu, nm)
    an = lambda mu: BosonPoly.annihilation(mu, nm)
    unit = BosonPoly.unit(nm)
    G = lambda k, *i: build_generator(k, i, D)

    if kind == "alpha-dag":
        return ad(idx[0])
    if kind == "alpha":
        return an(idx[0])
    if kind == "E":
        mu, nu = idx
        out = ad(mu) * an(nu)
        return out + unit.scale(_HALF) if mu == nu else out
    if kind == "Number":
        out = BosonPoly.zero(nm)
        for mu in range(nm):
            out = out + ad(mu) * an(mu)
        return out
    if kind == "Casimir1":
        out = BosonPoly.zero(nm)
        for mu in range(nm):
            out = out + G("E", mu, mu)
        return out
    if kind == "Hosc":
        out = BosonPoly.zero(nm)
        for mu in range(nm):
            out = out + ad(mu) * an(mu) + an(mu) * ad(mu)
        return out
    if kind == "Ebar":
        mu, nu = idx
        out = G("E", mu, nu)
        if mu == nu:
            out = out - G("Casimir1").scale(Fraction(1, nm))
        return out
    if kind == "L":
        mu, nu = idx
        return (G("E", mu, nu) - G("E", nu, mu)).scale(-1).scale(C_I)
    if kind == "T":
        mu, nu = idx
        return G("Ebar", mu, nu) + G("Ebar", nu, mu)
    if kind == "Ddag":
        mu, nu = idx
        return ad(mu) * ad(nu)
    if kind == "Dlow":
        mu, nu = idx
        return an(mu) * an(nu)
    if kind == "Ddag-scalar":
        out = BosonPoly.zero(nm)
        for mu in range(nm):
            out = out + G("Ddag", mu, mu)
        return out
    if kind == "Dlow-scalar":
        return G("Ddag-scalar").adjoint()

    if D != 2:
        raise UnsupportedDimensionError(f"{kind} generators exist for D = 2 only")

    if kind in ("J", "K"):
        (i,) = idx
        out = BosonPoly.zero(nm)
        for j in range(1, 4):
            for k in range(1, 4):
                sgn = _EPS.get((i, j, k), 0)
                if sgn:
                    out = out + G("L", j - 1, k - 1).scale(Fraction(sgn, 2))
        li4 = G("L", i - 1, 3)
        out = out - li4 if kind == "J" else out + li4
        return out.scale(_HALF)
    if kind in ("J0", "K0"):
        return G(kind[0], 3)
    if kind in ("Jp", "Kp"):
        return G(kind[0], 1) + G(kind[0], 2).scale(C_I)
    if kind in ("Jm", "Km"):
        return G(kind[0], 1) - G(kind[0], 2).scale(C_I)

    if kind == "Adag-tensor":
        ts, tt = _two(idx[0]), _two(idx[1])
        if abs(ts) != 1 or abs(tt) != 1:
            raise LabelError("rank-(1/2,1/2) components need sigma, tau = +-1/2")
        inv_sqrt2 = SqrtSum.sqrt_of(_HALF)
        if ts == tt:  # -+ 1/sqrt(2) (ad_1 +- i ad_2), modes 0,1
            sgn = -1 if ts > 0 else 1
            out = ad(0) + ad(1).scale(C_I if ts > 0 else -C_I)
            return out.scale(inv_sqrt2 * Fraction(sgn))
        # (ad_3 -+ i ad_4)/sqrt(2), modes 2,3
        out = ad(2) + ad(3).scale(-C_I if ts > 0 else C_I)
        return out.scale(inv_sqrt2)
    if kind == "A-tensor":
        ts, tt = _two(idx[0]), _two(idx[1])
        power = (2 - ts - tt) // 2  # 1 - sigma - tau
        out = G("Adag-tensor", Fraction(-ts, 2), Fraction(-tt, 2)).adjoint()
        return out if power % 2 == 0 else -out

    if kind in ("AdagxA", "AdagxAdag"):
        s, t, sig, tau = idx
        ts2, tt2 = _two(s), _two(t)
        tsig, ttau = _two(sig), _two(tau)
        second = "A-tensor" if kind == "AdagxA" else "Adag-tensor"
        out = BosonPoly.zero(nm)
        for tsp in (-1, 1):
            for ttp in (-1, 1):
                c1 = cg_exact(1, tsp, 1, tsig - tsp, ts2, tsig)
                c2 = cg_exact(1, ttp, 1, ttau - ttp, tt2, ttau)
                c = c1 * c2
                if c.is_zero():
                    continue
                lhs = G("Adag-tensor", Fraction(tsp, 2), Fraction(ttp, 2))
                rhs = G(second, Fraction(tsig - tsp, 2), Fraction(ttau - ttp, 2))
                out = out + (lhs * rhs).scale(c)
        return out
    if kind == "T-tensor":
        return G("AdagxA", 1, 1, idx[0], idx[1])
    if kind == "Ddag-tensor":
        return G("AdagxAdag", 1, 1, idx[0], idx[1])
    if kind == "Dlow-tensor":
        ts, tt = _two(idx[0]), _two(idx[1])
        power = (ts + tt) // 2
        out = G("Ddag-tensor", Fraction(-ts, 2), Fraction(-tt, 2)).adjoint()
        return out if power % 2 == 0 else -out

    raise LabelError(f"unknown generator kind {kind!r}")


# ---------------------------------------------------------------------
# relation suite
# ---------------------------------------------------------------------

def _delta(a: int, b: int) -> int:
    return 1 if a == b else 0


def _relations(D: int):
    """Yield (relation-id, lhs BosonPoly, rhs BosonPoly) for dimension D."""
    nm = 2 * D
    G = lambda k, *i: build_generator(k, i, D)
    unit = BosonPoly.unit(nm)
    zero = BosonPoly.zero(nm)
    rng = range(nm)

    for mu, nu in iproduct(rng, rng):
        for mp, np_ in iproduct(rng, rng):
            d = _delta
            yield (f"u{nm}:[E{mu}{nu},E{mp}{np_}]",
                   commutator(G("E", mu, nu), G("E", mp, np_)),
                   G("E", mu, np_).scale(d(nu, mp)) - G("E", mp, nu).scale(d(mu, np_)))
            yield (f"su{nm}:[Ebar{mu}{nu},Ebar{mp}{np_}]",
                   commutator(G("Ebar", mu, nu), G("Ebar", mp, np_)),
                   G("Ebar", mu, np_).scale(d(nu, mp)) - G("Ebar", mp, nu).scale(d(mu, np_)))
            yield (f"so{nm}:[L{mu}{nu},L{mp}{np_}]",
                   commutator(G("L", mu, nu), G("L", mp, np_)),
                   (G("L", nu, np_).scale(d(mu, mp)) - G("L", nu, mp).scale(d(mu, np_))
                    - G("L", mu, np_).scale(d(nu, mp)) + G("L", mu, mp).scale(d(nu, np_))
                    ).scale(C_I))
            yield (f"sp:[E{mu}{nu},Ddag{mp}{np_}]",
                   commutator(G("E", mu, nu), G("Ddag", mp, np_)),
                   G("Ddag", mu, np_).scale(d(nu, mp)) + G("Ddag", mu, mp).scale(d(nu, np_)))
            yield (f"sp:[E{mu}{nu},D{mp}{np_}]",
                   commutator(G("E", mu, nu), G("Dlow", mp, np_)),
                   -(G("Dlow", nu, np_).scale(d(mu, mp)) + G("Dlow", nu, mp).scale(d(mu, np_))))
            yield (f"sp:[D{mu}{nu},Ddag{mp}{np_}]",
                   commutator(G("Dlow", mu, nu), G("Ddag", mp, np_)),
                   G("E", np_, nu).scale(d(mu, mp)) + G("E", mp, nu).scale(d(mu, np_))
                   + G("E", np_, mu).scale(d(nu, mp)) + G("E", mp, mu).scale(d(nu, np_)))

    for mu, nu in iproduct(rng, rng):
        for mp in rng:
            d = _delta
            yield (f"w:[E{mu}{nu},ad{mp}]",
                   commutator(G("E", mu, nu), G("alpha-dag", mp)),
                   G("alpha-dag", mu).scale(d(nu, mp)))
            yield (f"w:[E{mu}{nu},a{mp}]",
                   commutator(G("E", mu, nu), G("alpha", mp)),
                   -G("alpha", nu).scale(d(mu, mp)))
            yield (f"w:[D{mu}{nu},ad{mp}]",
                   commutator(G("Dlow", mu, nu), G("alpha-dag", mp)),
                   G("alpha", nu).scale(d(mu, mp)) + G("alpha", mu).scale(d(nu, mp)))
            yield (f"w:[Ddag{mu}{nu},a{mp}]",
                   commutator(G("Ddag", mu, nu), G("alpha", mp)),
                   -(G("alpha-dag", nu).scale(d(mu, mp)) + G("alpha-dag", mu).scale(d(nu, mp))))

    for mu, nu in iproduct(rng, rng):
        yield (f"weyl:[a{mu},ad{nu}]",
               commutator(G("alpha", mu), G("alpha-dag", nu)),
               unit.scale(_delta(mu, nu)))
        yield (f"weyl:[ad{mu},ad{nu}]",
               commutator(G("alpha-dag", mu), G("alpha-dag", nu)), zero)
        yield (f"weyl:[a{mu},a{nu}]",
               commutator(G("alpha", mu), G("alpha", nu)), zero)
        yield (f"herm:E{mu}{nu}", G("E", mu, nu).adjoint(), G("E", nu, mu))
        yield (f"herm:L{mu}{nu}", G("L", mu, nu).adjoint(), G("L", mu, nu))

    yield ("casimir:Hosc=2E", G("Hosc"), G("Casimir1").scale(2))
    yield ("central:[Casimir1,I]", commutator(G("Casimir1"), unit), zero)

    if D != 2:
        return

    # su(2) + su(2) sector and irreducible tensors
    for i, jj in iproduct(range(1, 4), range(1, 4)):
        rhs_j = zero
        rhs_k = zero
        for k in range(1, 4):
            sgn = _EPS.get((i, jj, k), 0)
            if sgn:
                rhs_j = rhs_j + G("J", k).scale(sgn)
                rhs_k = rhs_k + G("K", k).scale(sgn)
        yield (f"su2:[J{i},J{jj}]", commutator(G("J", i), G("J", jj)), rhs_j.scale(C_I))
        yield (f"su2:[K{i},K{jj}]", commutator(G("K", i), G("K", jj)), rhs_k.scale(C_I))
        yield (f"su2:[J{i},K{jj}]", commutator(G("J", i), G("K", jj)), zero)
    for i in range(1, 4):
        yield (f"herm:J{i}", G("J", i).adjoint(), G("J", i))
        yield (f"herm:K{i}", G("K", i).adjoint(), G("K", i))

    sqrt2 = SqrtSum.sqrt_of(2)
    half = Fraction(1, 2)

    def components(rank2: int):
        return [Fraction(t, 2) for t in range(-rank2, rank2 + 1, 2)]

    tensors = [("Adag", "Adag-tensor", half, half),
               ("A", "A-tensor", half, half),
               ("T", "T-tensor", 1, 1),
               ("Ddag", "Ddag-tensor", 1, 1),
               ("Dlow", "Dlow-tensor", 1, 1)]
    for name, kind, s, t in tensors:
        for sig in components(_two(s)):
            for tau in components(_two(t)):
                comp = G(kind, sig, tau)
                yield (f"tensor:[J0,{name}({sig},{tau})]",
                       commutator(G("J0"), comp), comp.scale(sig))
                yield (f"tensor:[K0,{name}({sig},{tau})]",
                       commutator(G("K0"), comp), comp.scale(tau))
                for pm, lbl in ((1, "p"), (-1, "m")):
                    coef = (s - pm * sig) * (s + pm * sig + 1)
                    rhs = (G(kind, sig + pm, tau).scale(SqrtSum.sqrt_of(coef))
                           if abs(sig + pm) <= s else zero)
                    yield (f"tensor:[J{lbl},{name}({sig},{tau})]",
                           commutator(G(f"J{lbl}"), comp), rhs)
                    coef = (t - pm * tau) * (t + pm * tau + 1)
                    rhs = (G(kind, sig, tau + pm).scale(SqrtSum.sqrt_of(coef))
                           if abs(tau + pm) <= t else zero)
                    yield (f"tensor:[K{lbl},{name}({sig},{tau})]",
                           commutator(G(f"K{lbl}"), comp), rhs)

    # adjoint pattern of the annihilation-side tensors
    for sig in components(1):
        for tau in components(1):
            sgn = 1 if ((2 - _two(sig) - _two(tau)) // 2) % 2 == 0 else -1
            yield (f"adjoint:A({sig},{tau})",
                   G("A-tensor", sig, tau),
                   G("Adag-tensor", -sig, -tau).adjoint().scale(sgn))
    for sig in components(2):
        for tau in components(2):
            sgn = 1 if ((_two(sig) + _two(tau)) // 2) % 2 == 0 else -1
            yield (f"adjoint:Dlow({sig},{tau})",
                   G("Dlow-tensor", sig, tau),
                   G("Ddag-tensor", -sig, -tau).adjoint().scale(sgn))

    # displayed component expansions of the coupled tensors
    T_ = lambda mu, nu: G("T", mu - 1, nu - 1)
    Dd = lambda mu, nu: G("Ddag", mu - 1, nu - 1)
    i_ = C_I
    quarter = Fraction(1, 4)
    inv_sqrt2 = SqrtSum.sqrt_of(half)
    inv_2sqrt2 = inv_sqrt2 * half
    disp_T = {
        (1, 1): -(T_(1, 1) + T_(1, 2).scale(2 * i_) - T_(2, 2)).scale(quarter),
        (-1, -1): -(T_(1, 1) - T_(1, 2).scale(2 * i_) - T_(2, 2)).scale(quarter),
        (1, 0): (T_(1, 3) - T_(1, 4).scale(i_) + T_(2, 3).scale(i_) + T_(2, 4)).scale(inv_2sqrt2),
        (-1, 0): (-T_(1, 3) - T_(1, 4).scale(i_) + T_(2, 3).scale(i_) - T_(2, 4)).scale(inv_2sqrt2),
        (1, -1): -(T_(3, 3) - T_(3, 4).scale(2 * i_) - T_(4, 4)).scale(quarter),
        (-1, 1): -(T_(3, 3) + T_(3, 4).scale(2 * i_) - T_(4, 4)).scale(quarter),
        (0, 1): (T_(1, 3) + T_(1, 4).scale(i_) + T_(2, 3).scale(i_) - T_(2, 4)).scale(inv_2sqrt2),
        (0, -1): (-T_(1, 3) + T_(1, 4).scale(i_) + T_(2, 3).scale(i_) + T_(2, 4)).scale(inv_2sqrt2),
        (0, 0): (T_(1, 1) + T_(2, 2)).scale(half),
    }
    for (sig, tau), rhs in disp_T.items():
        yield (f"display:T({sig},{tau})", G("T-tensor", sig, tau), rhs)
    yield ("display:T(0,0)bis", G("T-tensor", 0, 0),
           -(T_(3, 3) + T_(4, 4)).scale(half))
    disp_D = {
        (1, 1): (Dd(1, 1) + Dd(1, 2).scale(2 * i_) - Dd(2, 2)).scale(half),
        (-1, -1): (Dd(1, 1) - Dd(1, 2).scale(2 * i_) - Dd(2, 2)).scale(half),
        (1, 0): (Dd(1, 3) - Dd(1, 4).scale(i_) + Dd(2, 3).scale(i_) + Dd(2, 4)).scale(-inv_sqrt2),
        (-1, 0): (-Dd(1, 3) - Dd(1, 4).scale(i_) + Dd(2, 3).scale(i_) - Dd(2, 4)).scale(-inv_sqrt2),
        (1, -1): (Dd(3, 3) - Dd(3, 4).scale(2 * i_) - Dd(4, 4)).scale(half),
        (-1, 1): (Dd(3, 3) + Dd(3, 4).scale(2 * i_) - Dd(4, 4)).scale(half),
        (0, 1): (Dd(1, 3) + Dd(1, 4).scale(i_) + Dd(2, 3).scale(i_) - Dd(2, 4)).scale(-inv_sqrt2),
        (0, -1): (-Dd(1, 3) + Dd(1, 4).scale(i_) + Dd(2, 3).scale(i_) + Dd(2, 4)).scale(-inv_sqrt2),
        (0, 0): (-Dd(1, 1) - Dd(2, 2) + Dd(3, 3) + Dd(4, 4)).scale(half),
    }
    for (sig, tau), rhs in disp_D.items():
        yield (f"display:Ddag({sig},{tau})", G("Ddag-tensor", sig, tau), rhs)

    # coupled scalars and vectors against their direct forms
    yield ("display:AdagxA00", G("AdagxA", 0, 0, 0, 0),
           (G("Casimir1") - unit.scale(2)).scale(half))
    yield ("display:Ddag-scalar", G("Ddag-scalar"),
           G("AdagxAdag", 0, 0, 0, 0).scale(-2))
    yield ("display:J+1", G("AdagxA", 1, 0, 1, 0),
           G("Jp").scale(-SqrtSum.sqrt_of(half)))
    yield ("display:J-1", G("AdagxA", 1, 0, -1, 0),
           G("Jm").scale(SqrtSum.sqrt_of(half)))
    yield ("display:J0", G("AdagxA", 1, 0, 0, 0), G("J0"))
    yield ("display:K+1", G("AdagxA", 0, 1, 0, 1),
           G("Kp").scale(-SqrtSum.sqrt_of(half)))
    yield ("display:K-1", G("AdagxA", 0, 1, 0, -1),
           G("Km").scale(SqrtSum.sqrt_of(half)))
    yield ("display:K0", G("AdagxA", 0, 1, 0, 0), G("K0"))


def verify_relations(D: int, tamper_relation: str | None = None,
                     include_passing: bool = False) -> dict:
    """Exhaustively check the algebra relations for dimension D.

    Returns {'D', 'checked', 'failures': [{relation-id, status, lhs, rhs}],
    'entries' (optional)}; a failure entry carries the canonical monomial
    strings of both sides.  `tamper_relation` deliberately corrupts one
    right-hand side, for detector sanity tests.
    """
    checked = 0
    failures = []
    entries = []
    for rel_id, lhs, rhs in _relations(D):
        if tamper_relation is not None and rel_id == tamper_relation:
            rhs = rhs + BosonPoly.unit(lhs.nmodes)
        checked += 1
        ok = (lhs - rhs).is_zero()
        if not ok:
            failures.append({"relation-id": rel_id, "status": "fail",
                             "lhs": str(lhs), "rhs": str(rhs)})
        elif include_passing:
            entries.append({"relation-id": rel_id, "status": "ok",
                            "lhs": "", "rhs": ""})
    report = {"D": D, "checked": checked, "failures": failures}
    if include_passing:
        report["entries"] = entries + failures
    return report


# ---------------------------------------------------------------------
# truncated-Fock matrix oracle
# ---------------------------------------------------------------------

@lru_cache(maxsize=None)
def _mode_matrices(nmodes: int, cutoff: int):
    a1 = sp.diags(np.sqrt(np.arange(1, cutoff)), 1, format="csr")
    eye = sp.identity(cutoff, format="csr")
    ann = []
    for mu in range(nmodes):
        mats = [eye] * nmodes
        mats[mu] = a1
        out = mats[0]
        for m in mats[1:]:
            out = sp.kron(out, m, format="csr")
        ann.append(out)
    return ann


def fock_matrix(poly: BosonPoly, cutoff: int = 6):
    """Sparse matrix of the polynomial on the per-mode-truncated Fock space.

    Exact (free of truncation artifacts) on columns whose total quanta stay
    at least deg(poly) below the cutoff.
    """
    ann = _mode_matrices(poly.nmodes, cutoff)
    dim = cutoff ** poly.nmodes
    out = sp.csr_matrix((dim, dim), dtype=complex)
    for (c, a), v in poly.terms.items():
        mat = sp.identity(dim, format="csr", dtype=complex)
        for mu, e in enumerate(c):
            for _ in range(e):
                mat = mat @ ann[mu].T
        for mu, e in enumerate(a):
            for _ in range(e):
                mat = mat @ ann[mu]
        out = out + complex(v) * mat
    return out


def fock_basis_upto(nmodes: int, cutoff: int, max_quanta: int) -> np.ndarray:
    """Flat indices of basis states with total quanta <= max_quanta."""
    idx = []
    for occ in iproduct(range(cutoff), repeat=nmodes):
        if sum(occ) <= max_quanta:
            flat = 0
            for o in occ:
                flat = flat * cutoff + o
            idx.append(flat)
    return np.array(sorted(idx))
