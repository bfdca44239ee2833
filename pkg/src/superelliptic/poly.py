"""Dense univariate polynomials over an exact field, plus resultants.

Coefficients live in whatever exact field the caller supplies: Fraction for
most of the library, :class:`~superelliptic.exact.QuadExt` for reconstructed
equations.  The only requirements are exact +, -, *, / and an honest
``__eq__`` against 0.

The resultant goes through the Sylvester matrix with fraction-free Bareiss
elimination, so it stays exact and does not blow up intermediate sizes the
way naive cofactor expansion does.  ``delta_support`` is the support
analysis used to spot equations of the shape g(x**delta) or x*g(x**delta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class Poly:
    """Immutable dense polynomial; ``coeffs[i]`` multiplies x**i.

    >>> p = Poly([1, 0, 1])
    >>> print(p)
    x^2 + 1
    >>> p(2)
    Fraction(5, 1)
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [c if not isinstance(c, int) else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "Poly":
        return cls([])

    @classmethod
    def monomial(cls, coefficient, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        return cls([0] * exponent + [coefficient])

    @classmethod
    def from_terms(cls, terms) -> "Poly":
        """Build from (coefficient, exponent) pairs; repeated exponents add."""
        coeffs: dict[int, object] = {}
        for c, e in terms:
            if e < 0:
                raise ValueError("exponent must be nonnegative")
            coeffs[e] = coeffs.get(e, 0) + c
        if not coeffs:
            return cls.zero()
        out = [0] * (max(coeffs) + 1)
        for e, c in coeffs.items():
            out[e] = c
        return cls(out)

    @property
    def degree(self):
        """Degree as an int; the zero polynomial gets -inf so max() composes."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self):
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, exponent: int):
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return Fraction(0)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coeffs) if c)

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return Fraction(0) if acc is None else acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([a[i] + b[i] if i < len(b) else a[i] for i in range(len(a))])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    def __divmod__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        den = other.coeffs
        lead = den[-1]
        if len(rem) < len(den):
            return Poly.zero(), self
        quo = [Fraction(0)] * (len(rem) - len(den) + 1)
        for i in range(len(quo) - 1, -1, -1):
            q = rem[i + len(den) - 1] / lead
            quo[i] = q
            if q:
                for j, d in enumerate(den):
                    rem[i + j] = rem[i + j] - q * d
        return Poly(quo), Poly(rem[: len(den) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def scale(self, factor) -> "Poly":
        return Poly([c * factor for c in self.coeffs])

    def scale_x(self, r) -> "Poly":
        """The polynomial p(r*x)."""
        out = []
        power = Fraction(1)
        for c in self.coeffs:
            out.append(c * power)
            power = power * r
        return Poly(out)

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            try:
                neg = c < 0
            except TypeError:
                neg = False
            mag = -c if neg else c
            if e == 0:
                body = str(mag)
            elif mag == 1:
                body = "x" if e == 1 else f"x^{e}"
            else:
                body = f"{mag}*x" if e == 1 else f"{mag}*x^{e}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"


def sylvester_matrix(p: Poly, q: Poly) -> list[list]:
    """The (m+n) x (m+n) Sylvester matrix of p (degree m) and q (degree n)."""
    m, n = p.degree, q.degree
    if p.is_zero() or q.is_zero():
        raise ValueError("the Sylvester matrix needs nonzero polynomials")
    size = m + n
    rows = []
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    for i in range(n):
        rows.append([Fraction(0)] * i + pc + [Fraction(0)] * (size - i - len(pc)))
    for i in range(m):
        rows.append([Fraction(0)] * i + qc + [Fraction(0)] * (size - i - len(qc)))
    return rows


def _det_bareiss(matrix: list[list]) -> Fraction:
    """Exact determinant by fraction-free Bareiss elimination with pivoting."""
    a = [row[:] for row in matrix]
    n = len(a)
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
            a[i][k] = Fraction(0)
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def resultant(p: Poly, q: Poly) -> Fraction:
    """res(p, q) with the standard sign convention: res(x - a, x - b) = a - b.

    Zero inputs are refused: their resultant is a matter of convention and
    always signals an upstream bug in this library.
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of the zero polynomial is not defined here")
    m, n = p.degree, q.degree
    if m == 0:
        return p.coeffs[0] ** n
    if n == 0:
        return q.coeffs[0] ** m
    return _det_bareiss(sylvester_matrix(p, q))


def discriminant(p: Poly) -> Fraction:
    """disc(p) = (-1)**(d(d-1)/2) * res(p, p') / lc(p); zero iff p has a repeated root."""
    d = p.degree
    if p.is_zero() or d < 1:
        raise ValueError("the discriminant needs degree >= 1")
    if d == 1:
        return Fraction(1)
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(p, p.derivative()) / p.leading_coefficient()


@dataclass(frozen=True)
class DeltaSupport:
    """One way a polynomial fits a decimated shape.

    residue 0 means f(x) = g(x**delta); residue 1 means f(x) = x*g(x**delta).
    ``s`` counts the interior coefficients of g between its pinned ends:
    deg(g) - 1 for residue 0, deg(g) for residue 1 (whose inner constant term
    is the pinned coefficient of x in f).
    """

    delta: int
    residue: int
    s: int


def delta_support(p: Poly) -> tuple[DeltaSupport, ...]:
    """All decimation patterns the support of p fits, best (largest delta) first.

    Entries with delta = 1 are included so callers can see the trivial fit,
    but anything useful needs delta >= 2.  A polynomial with a nonzero
    constant term can only fit residue 0; one with support {1} only the
    trivial residue-0 reading is reported for, since g would be constant.
    """
    support = p.support()
    if not support:
        raise ValueError("the zero polynomial has no support pattern")
    d = support[-1]
    out: list[DeltaSupport] = []
    if p.coefficient(0):
        positive = [e for e in support if e]
        if positive:
            g = 0
            for e in positive:
                g = math.gcd(g, e)
            for delta in sorted(_divisors(g), reverse=True):
                out.append(DeltaSupport(delta, 0, d // delta - 1))
        return tuple(out)
    # no constant term: residue 1 via gcd of (e - 1), residue 0 still possible
    g0 = 0
    for e in support:
        g0 = math.gcd(g0, e)
    g1 = 0
    for e in support:
        g1 = math.gcd(g1, e - 1)
    candidates: list[DeltaSupport] = []
    if g0 >= 2:
        for delta in _divisors(g0):
            if delta >= 2:
                candidates.append(DeltaSupport(delta, 0, d // delta - 1))
    if g1 >= 1:
        for delta in _divisors(g1):
            candidates.append(DeltaSupport(delta, 1, (d - 1) // delta))
    candidates.sort(key=lambda c: (-c.delta, c.residue))
    return tuple(candidates)


def _divisors(n: int) -> list[int]:
    if n <= 0:
        return []
    out = set()
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.add(i)
            out.add(n // i)
        i += 1
    return sorted(out)
