"""Exact arithmetic: rationals, squarefree decomposition, quadratic field elements.

The base field is Q, represented by :class:`fractions.Fraction` (re-exported
as ``Rational``), which already keeps every value in canonical form: positive
denominator, gcd(numerator, denominator) = 1.  On top of that this module
supplies the two pieces the rest of the library needs and the standard
library does not have:

* exact squareness tests and squarefree decompositions of rationals, used to
  present a quadratic extension Q(sqrt(d)) with a canonical radicand, and
* :class:`QuadExt`, an exact element a + b*sqrt(d) of such an extension.

No floats appear anywhere in this module; every operation is exact and every
value is immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction

#: Largest prime the default trial-division loop will try.
DEFAULT_FACTOR_BOUND = 10**6


class RadicandMismatchError(ValueError):
    """Raised when combining elements of Q(sqrt(d)) and Q(sqrt(d')) with d != d'."""


class FactorBoundExceededError(ArithmeticError):
    """Raised when squarefree decomposition cannot finish within the factor bound."""


def _exact(value) -> Fraction:
    """Coerce ``value`` to Fraction, rejecting floats (they are not exact)."""
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction or an int")
    return Fraction(value)


def _is_probable_prime(n: int) -> bool:
    # Deterministic Miller-Rabin for n < 3.3e24 with this base set.
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def integer_nth_root(n: int, k: int) -> tuple[int, bool]:
    """Floor of the k-th root of a nonnegative integer, plus an exactness flag."""
    if n < 0:
        raise ValueError("integer_nth_root needs a nonnegative input")
    if k < 1:
        raise ValueError("root order must be >= 1")
    if k == 1 or n in (0, 1):
        return n, True
    lo, hi = 0, 1 << ((n.bit_length() + k - 1) // k + 1)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid
    return lo, lo**k == n


def rational_nth_root(x, k: int) -> Fraction | None:
    """The exact rational k-th root of x, or None when no such rational exists.

    For even k the input must be nonnegative and the nonnegative root is
    returned; for odd k the sign of the root follows the sign of x.
    """
    x = _exact(x)
    if k < 1:
        raise ValueError("root order must be >= 1")
    if x == 0:
        return Fraction(0)
    if x < 0:
        if k % 2 == 0:
            return None
        root = rational_nth_root(-x, k)
        return None if root is None else -root
    num, num_exact = integer_nth_root(x.numerator, k)
    den, den_exact = integer_nth_root(x.denominator, k)
    if num_exact and den_exact:
        return Fraction(num, den)
    return None


def is_perfect_square(x) -> tuple[bool, Fraction | None]:
    """Decide whether x is the square of a rational; return the root >= 0 if so.

    Zero counts as a square with root 0.  Because Fraction keeps numerator and
    denominator coprime, x is a square exactly when both parts are integer
    squares.
    """
    x = _exact(x)
    if x < 0:
        return False, None
    num = math.isqrt(x.numerator)
    den = math.isqrt(x.denominator)
    if num * num == x.numerator and den * den == x.denominator:
        return True, Fraction(num, den)
    return False, None


@dataclass(frozen=True)
class SquarefreeDecomposition:
    """A nonzero rational written as squarefree_part * square_part**2.

    ``squarefree_part`` is a squarefree integer carrying the sign of the
    input; ``square_part`` is a positive rational.  The squarefree part is 1
    exactly when the input is the square of a rational.
    """

    squarefree_part: int
    square_part: Fraction

    @property
    def value(self) -> Fraction:
        return self.squarefree_part * self.square_part**2


def squarefree_decompose(x, *, factor_bound: int = DEFAULT_FACTOR_BOUND) -> SquarefreeDecomposition:
    """Write nonzero rational x as d * r**2 with d a squarefree integer, r > 0.

    Trial division runs up to ``factor_bound``.  A cofactor with no factor
    below the bound is still handled when it is a prime or the square of a
    prime (checked with a deterministic Miller-Rabin pass); anything harder
    raises :class:`FactorBoundExceededError` instead of silently grinding.
    """
    x = _exact(x)
    if x == 0:
        raise ValueError("0 has no radicand; handle the zero case separately")
    # p/q = (p*q)/q**2, so decomposing the integer p*q decomposes x.
    n = abs(x.numerator) * x.denominator
    sign = -1 if x < 0 else 1
    squarefree = 1
    root = 1
    p = 2
    while p <= factor_bound and p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            root *= p ** (k // 2)
            if k & 1:
                squarefree *= p
        p = 3 if p == 2 else p + 2
    if n > 1:
        if p * p > n:
            squarefree *= n  # cofactor below p**2 with no factor < p is prime
        else:
            s = math.isqrt(n)
            if s * s == n and _is_probable_prime(s):
                root *= s
            elif _is_probable_prime(n):
                squarefree *= n
            else:
                raise FactorBoundExceededError(
                    f"cofactor {n} has no factor <= {factor_bound} and is neither prime nor a prime square"
                )
    return SquarefreeDecomposition(sign * squarefree, Fraction(root, x.denominator))


class QuadExt:
    """Exact element a + b*sqrt(d) of the quadratic field Q(sqrt(d)).

    ``d`` must be a non-square integer, and by convention a squarefree one
    (use :func:`squarefree_decompose` to canonicalize a radicand before
    building elements).  Negative d, an imaginary quadratic field, needs no
    special casing.  Elements of extensions with different radicands never
    combine; mixing them raises :class:`RadicandMismatchError`.  Plain ints
    and Fractions coerce into any extension, so expressions like
    ``Fraction(1, 2) - A`` work.

    >>> x = QuadExt(1, 1, 2)
    >>> print(x * x.conjugate())
    -1
    >>> print(1 / QuadExt(3, 1, 2))
    3/7 - 1/7*sqrt(2)
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        if isinstance(d, bool) or not isinstance(d, int):
            raise TypeError("the radicand must be a Python int")
        if d in (0, 1) or (d > 1 and math.isqrt(d) ** 2 == d):
            raise ValueError(f"the radicand must be a non-square integer, got {d}")
        self.a = _exact(a)
        self.b = _exact(b)
        self.d = d

    def _lift(self, other) -> "QuadExt | None":
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise RadicandMismatchError(
                    f"cannot combine elements of Q(sqrt({self.d})) and Q(sqrt({other.d}))"
                )
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return QuadExt(other, 0, self.d)
        if isinstance(other, Fraction):
            return QuadExt(other, 0, self.d)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadExt(o.a - self.a, o.b - self.b, self.d)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadExt(
            self.a * o.a + self.d * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError(f"division by zero in Q(sqrt({self.d}))")
        # x/y = x * conj(y) / norm(y); norm vanishes only at 0 because d is not a square
        num = self * o.conjugate()
        return QuadExt(num.a / n, num.b / n, self.d)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int) or isinstance(k, bool):
            return NotImplemented
        if k < 0:
            return (QuadExt(1, 0, self.d) / self) ** (-k)
        result = QuadExt(1, 0, self.d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """The field norm a**2 - d*b**2; multiplicative, zero only at zero."""
        return self.a * self.a - self.d * self.b * self.b

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                # equal only if both sides are plain rationals
                return self.b == 0 and other.b == 0 and self.a == other.a
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __complex__(self):
        import cmath

        return complex(self.a) + complex(self.b) * cmath.sqrt(complex(self.d))

    def __float__(self):
        if self.d < 0:
            raise ValueError("element of an imaginary quadratic field has no float value")
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        root = f"sqrt({self.d})"
        mag = abs(self.b)
        scaled = root if mag == 1 else f"{mag}*{root}"
        if self.a == 0:
            return scaled if self.b > 0 else f"-{scaled}"
        sign = " + " if self.b > 0 else " - "
        return f"{self.a}{sign}{scaled}"

    def __repr__(self):
        return f"QuadExt({self.a!r}, {self.b!r}, {self.d})"
