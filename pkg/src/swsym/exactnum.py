"""Exact arithmetic in Q(i, sqrt(2), sqrt(3), ...).

Numbers are finite rational combinations sum_s q_s * sqrt(s) over distinct
squarefree nonnegative integers s, kept separately for the real and
imaginary part.  The set is closed under addition, multiplication and
complex conjugation, which is everything the generator algebra and the
Clebsch-Gordan machinery need; no general division is provided.
"""

from __future__ import annotations

from fractions import Fraction


def squarefree_split(n: int) -> tuple[int, int]:
    """Return (s, f) with n = f**2 * s and s squarefree."""
    if n < 0:
        raise ValueError("radicand must be nonnegative")
    if n == 0:
        return 0, 1
    s, f, d = 1, 1, 2
    while d * d <= n:
        while n % (d * d) == 0:
            n //= d * d
            f *= d
        if n % d == 0:
            n //= d
            s *= d
        d += 1
    return s * n, f


class SqrtSum:
    """Rational linear combination of square roots of squarefree integers.

    Stored as a dict {squarefree radicand: Fraction coefficient}; the
    radicand 1 carries the rational part.  Instances are immutable in
    spirit: all operations return new objects.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, Fraction] | None = None):
        self.terms = {s: c for s, c in (terms or {}).items() if c != 0}

    @classmethod
    def from_rational(cls, q) -> "SqrtSum":
        q = Fraction(q)
        return cls({1: q} if q else {})

    @classmethod
    def sqrt_of(cls, q) -> "SqrtSum":
        """Exact sqrt(q) for a nonnegative rational q."""
        q = Fraction(q)
        if q < 0:
            raise ValueError("sqrt_of needs a nonnegative rational")
        if q == 0:
            return cls()
        # sqrt(p/d) = sqrt(p*d)/d
        s, f = squarefree_split(q.numerator * q.denominator)
        return cls({s: Fraction(f, q.denominator)})

    def __add__(self, other: "SqrtSum") -> "SqrtSum":
        out = dict(self.terms)
        for s, c in other.terms.items():
            out[s] = out.get(s, Fraction(0)) + c
        return SqrtSum(out)

    def __neg__(self) -> "SqrtSum":
        return SqrtSum({s: -c for s, c in self.terms.items()})

    def __sub__(self, other: "SqrtSum") -> "SqrtSum":
        return self + (-other)

    def __mul__(self, other) -> "SqrtSum":
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return SqrtSum({s: c * q for s, c in self.terms.items()})
        out: dict[int, Fraction] = {}
        for s1, c1 in self.terms.items():
            for s2, c2 in other.terms.items():
                s, f = squarefree_split(s1 * s2)
                out[s] = out.get(s, Fraction(0)) + c1 * c2 * f
        return SqrtSum(out)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def rational(self) -> Fraction:
        """The value as an exact rational; error if irrational."""
        if not self.terms:
            return Fraction(0)
        if set(self.terms) != {1}:
            raise ValueError(f"not rational: {self!r}")
        return self.terms[1]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SqrtSum.from_rational(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __float__(self) -> float:
        return float(sum(float(c) * s ** 0.5 for s, c in self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for s in sorted(self.terms):
            c = self.terms[s]
            parts.append(str(c) if s == 1 else f"{c}*sqrt({s})")
        return " + ".join(parts)


_ZERO = SqrtSum()
_ONE = SqrtSum.from_rational(1)


class CSqrt:
    """Complex number with SqrtSum real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: SqrtSum | None = None, im: SqrtSum | None = None):
        self.re = re if re is not None else _ZERO
        self.im = im if im is not None else _ZERO

    @classmethod
    def from_rational(cls, re, im=0) -> "CSqrt":
        return cls(SqrtSum.from_rational(re), SqrtSum.from_rational(im))

    @classmethod
    def real(cls, s: SqrtSum) -> "CSqrt":
        return cls(s, _ZERO)

    def __add__(self, other: "CSqrt") -> "CSqrt":
        return CSqrt(self.re + other.re, self.im + other.im)

    def __neg__(self) -> "CSqrt":
        return CSqrt(-self.re, -self.im)

    def __sub__(self, other: "CSqrt") -> "CSqrt":
        return CSqrt(self.re - other.re, self.im - other.im)

    def __mul__(self, other) -> "CSqrt":
        if isinstance(other, (int, Fraction, SqrtSum)):
            return CSqrt(self.re * other, self.im * other)
        return CSqrt(self.re * other.re - self.im * other.im,
                     self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def conjugate(self) -> "CSqrt":
        return CSqrt(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CSqrt.from_rational(other)
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        if self.im.is_zero():
            return repr(self.re)
        if self.re.is_zero():
            return f"({self.im})*i"
        return f"({self.re}) + ({self.im})*i"


C_ZERO = CSqrt()
C_ONE = CSqrt.from_rational(1)
C_I = CSqrt(_ZERO, _ONE)
