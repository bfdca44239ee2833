"""Dihedral invariants, the field of definition, and curve reconstruction.

For a curve y**n = x**(delta*(s+1)) + a_s*x**(delta*s) + ... + a_1*x**delta + 1
the interior coefficients (a_1, ..., a_s) are only defined up to the residual
dihedral action (rescaling x by a root of unity, and x -> 1/x, which reverses
the tuple).  The functions here compute the invariant tuple of that action,

    s_i = a_1**(s+1-i) * a_i + a_s**(s+1-i) * a_{s+1-i},    i = 1..s,

decide over which field the curve can actually be written down, and rebuild
an explicit equation from the invariants alone.

The reconstruction pivots on the quadratic

    2**(s+1) * T**2 - 2**(s+1) * s_1 * T + s_s**(s+1) = 0,

whose roots are a_1**(s+1) and a_s**(s+1).  Its discriminant decides
everything: a rational square means the curve lives over the field of moduli
itself; a non-square means a genuine quadratic extension is needed; zero
marks the degenerate family with a larger automorphism group, where this
reconstruction does not apply.

The coefficient identity used for reconstruction is

    c_i = (s_s**i * s_i / 2**i - T * s_{s+1-i}) / (s_1 - 2*T),

with T the chosen quadratic root and c_i the coefficient of x**(delta*i) of
the rebuilt equation (equal to a_i * a_s**i when T = a_s**(s+1)).  The
divisor s_1 - 2*T is the difference of the two roots, never zero off the
degenerate locus.  An alternative closed form for c_i that circulates,

    2**(s-i) * s_1 * (s_s**i * s_i - T * s_{s+1-i}) / (2**s * s_1**2 - s_s**(s+1)),

is wrong: for a = (2, 1) it yields 144/65 where the true coefficient is
a_1*a_s = 2.  The roundtrip test suite adjudicates this; see README.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curve import G_DELTA, SuperellipticCurve, classify_normal_form
from .exact import QuadExt, _exact, is_perfect_square, squarefree_decompose
from .poly import Poly


class NoExtraAutomorphismError(ValueError):
    """The curve shows no usable x -> zeta*x automorphism (no delta >= 2)."""


class UnsupportedFormError(ValueError):
    """The curve has an extra automorphism but not the shape the invariants need."""


class DegenerateLocusError(ValueError):
    """The invariants satisfy discriminant = 0: the enlarged-automorphism family."""


@dataclass(frozen=True)
class DihedralInvariants:
    """The invariant tuple (s_1, ..., s_s) with the ambient shape (n, delta).

    ``values[i-1]`` is s_i; ``s`` is the tuple length.  The tuple is exactly
    the data that survives the dihedral coefficient action, so two interior
    tuples give the same DihedralInvariants iff they present isomorphic
    normal forms.
    """

    values: tuple[Fraction, ...]
    n: int
    delta: int

    def __post_init__(self):
        if len(self.values) < 2:
            raise ValueError("invariants need at least 2 entries (s >= 2)")
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 2:
            raise ValueError(f"the exponent n must be an integer >= 2, got {self.n!r}")
        if not isinstance(self.delta, int) or isinstance(self.delta, bool) or self.delta < 2:
            raise ValueError(f"delta must be an integer >= 2, got {self.delta!r}")
        object.__setattr__(self, "values", tuple(_exact(v) for v in self.values))

    @property
    def s(self) -> int:
        return len(self.values)


def compute_invariants(a, n: int, delta: int) -> DihedralInvariants:
    """Invariants of the interior coefficient tuple a = (a_1, ..., a_s).

    One formula covers every index: for i = 1 it degenerates to
    a_1**(s+1) + a_s**(s+1) and for i = s to 2*a_1*a_s.
    """
    a = tuple(_exact(v) for v in a)
    s = len(a)
    if s < 2:
        raise ValueError(f"need at least 2 interior coefficients, got {s}")
    first, last = a[0], a[-1]
    values = tuple(
        first ** (s + 1 - i) * a[i - 1] + last ** (s + 1 - i) * a[s - i]
        for i in range(1, s + 1)
    )
    return DihedralInvariants(values, n, delta)


def dihedral_discriminant(inv: DihedralInvariants) -> Fraction:
    """Discriminant of the quadratic satisfied by a_s**(s+1); zero iff degenerate."""
    s = inv.s
    head, tail = inv.values[0], inv.values[-1]
    return 2 ** (s + 1) * (2 ** (s + 1) * head**2 - 4 * tail ** (s + 1))


def leading_coefficients(inv: DihedralInvariants):
    """Both roots of the defining quadratic, exactly.

    Returns (plus, minus).  When the discriminant is a rational square both
    roots are Fractions; otherwise they are conjugate QuadExt elements over
    the squarefree radicand of the discriminant.
    """
    s = inv.s
    head = inv.values[0]
    disc = dihedral_discriminant(inv)
    square, root = is_perfect_square(disc)
    if square:
        shift = root / 2 ** (s + 1)
        return (head + shift) / 2, (head - shift) / 2
    dec = squarefree_decompose(disc)
    half = head / 2
    shift = dec.square_part / 2 ** (s + 2)
    d = dec.squarefree_part
    return QuadExt(half, shift, d), QuadExt(half, -shift, d)


@dataclass(frozen=True)
class FieldReport:
    """Whether the field of moduli already carries a model of the curve.

    ``field_description`` is "F" (the field of moduli itself) or
    "F(sqrt(d))" with d the squarefree radicand of the discriminant.
    """

    discriminant: Fraction
    is_square: bool
    is_degenerate: bool
    squarefree_radicand: int | None
    field_description: str
    note: str


def field_of_definition(inv: DihedralInvariants) -> FieldReport:
    disc = dihedral_discriminant(inv)
    if disc == 0:
        return FieldReport(
            discriminant=disc,
            is_square=True,
            is_degenerate=True,
            squarefree_radicand=None,
            field_description="F",
            note=(
                "degenerate family: the field of moduli is a field of definition, "
                "and the automorphism group is larger than generic"
            ),
        )
    square, _ = is_perfect_square(disc)
    if square:
        return FieldReport(
            discriminant=disc,
            is_square=True,
            is_degenerate=False,
            squarefree_radicand=None,
            field_description="F",
            note="the field of moduli is a field of definition",
        )
    dec = squarefree_decompose(disc)
    d = dec.squarefree_part
    return FieldReport(
        discriminant=disc,
        is_square=False,
        is_degenerate=False,
        squarefree_radicand=d,
        field_description=f"F(sqrt({d}))",
        note=(
            "the field of moduli is not a field of definition; "
            f"a model exists over the quadratic extension F(sqrt({d}))"
        ),
    )


@dataclass(frozen=True)
class ReconstructedCurve:
    """An explicit equation rebuilt from invariants.

    The full coefficient vector is [1, c_1, ..., c_{s-1}, L, L] at exponents
    delta*(0, 1, ..., s-1, s, s+1), where L is ``leading_coefficient`` (the
    chosen quadratic root) and c_i sits in ``interior_coefficients[i-1]``.
    Entries are Fractions or QuadExt elements, as the root forces.
    """

    leading_coefficient: object
    interior_coefficients: tuple
    n: int
    delta: int
    s: int
    root_choice: str

    def polynomial(self) -> Poly:
        """The right-hand side as a polynomial (over Q or Q(sqrt(d)))."""
        coeffs = [Fraction(0)] * (self.delta * (self.s + 1) + 1)
        coeffs[0] = Fraction(1)
        for i, c in enumerate(self.interior_coefficients, start=1):
            coeffs[self.delta * i] = c
        coeffs[self.delta * self.s] = self.leading_coefficient
        coeffs[self.delta * (self.s + 1)] = self.leading_coefficient
        return Poly(coeffs)


def reconstruct(inv: DihedralInvariants, root_choice: str = "minus") -> ReconstructedCurve:
    """Rebuild an equation over the minimal field from the invariants.

    ``root_choice`` picks which quadratic root becomes the leading
    coefficient; the two choices give the two dihedral normalizations of the
    same curve (reversing the interior tuple swaps them).  On the degenerate
    locus (discriminant 0) reconstruction is refused.
    """
    if root_choice not in ("plus", "minus"):
        raise ValueError(f"root_choice must be 'plus' or 'minus', got {root_choice!r}")
    if dihedral_discriminant(inv) == 0:
        raise DegenerateLocusError(
            "discriminant 0: the curve has extra automorphisms beyond the dihedral "
            "family and this reconstruction does not apply"
        )
    s = inv.s
    plus, minus = leading_coefficients(inv)
    lead = plus if root_choice == "plus" else minus
    head, tail = inv.values[0], inv.values[-1]
    # difference of the two quadratic roots; nonzero off the degenerate locus
    gap = head - 2 * lead
    interior = tuple(
        (tail**i * inv.values[i - 1] / 2**i - lead * inv.values[s - i]) / gap
        for i in range(1, s)
    )
    return ReconstructedCurve(lead, interior, inv.n, inv.delta, s, root_choice)


@dataclass(frozen=True)
class RoundtripReport:
    """Outcome of rebuilding a curve from the invariants of a known tuple."""

    status: str  # "pass" | "skipped" | "fail"
    reason: str | None = None
    root_choice: str | None = None
    checks: int = 0


def roundtrip_verify(a, n: int, delta: int) -> RoundtripReport:
    """Forward-compute invariants of a, reconstruct, and compare exactly.

    The reconstruction root is pinned to the known value a_s**(s+1), so the
    rebuilt coefficients must equal a_i * a_s**i on the nose; any deviation
    is a fail.  Tuples on the degenerate locus are reported as skipped, not
    failed, since reconstruction is undefined there.
    """
    a = tuple(_exact(v) for v in a)
    inv = compute_invariants(a, n, delta)
    if dihedral_discriminant(inv) == 0:
        return RoundtripReport(status="skipped", reason="degenerate locus (discriminant 0)")
    s = inv.s
    target = a[-1] ** (s + 1)
    plus, minus = leading_coefficients(inv)
    if plus == target:
        choice = "plus"
    elif minus == target:
        choice = "minus"
    else:
        return RoundtripReport(
            status="fail",
            reason=f"neither quadratic root equals the forward value {target}",
        )
    rec = reconstruct(inv, choice)
    checks = 0
    for i in range(1, s):
        expected = a[i - 1] * a[-1] ** i
        got = rec.interior_coefficients[i - 1]
        if got != expected:
            return RoundtripReport(
                status="fail",
                reason=f"coefficient {i}: reconstructed {got}, forward value {expected}",
                root_choice=choice,
                checks=checks,
            )
        checks += 1
    if rec.leading_coefficient != target:
        return RoundtripReport(
            status="fail",
            reason=f"leading coefficient {rec.leading_coefficient} != {target}",
            root_choice=choice,
            checks=checks,
        )
    checks += 1
    # independent consistency pass: re-derive each invariant from the products
    tail = inv.values[-1]
    if tail != 0:
        cofactor = inv.values[0] - target

        def product(j: int):
            if j == s:
                return target
            return rec.interior_coefficients[j - 1]

        for i in range(1, s):
            recomputed = cofactor * product(i) / (tail / 2) ** i + product(s + 1 - i)
            if recomputed != inv.values[i - 1]:
                return RoundtripReport(
                    status="fail",
                    reason=f"product consistency broke at index {i}",
                    root_choice=choice,
                    checks=checks,
                )
            checks += 1
    return RoundtripReport(status="pass", root_choice=choice, checks=checks)


@dataclass(frozen=True)
class CrosscheckReport:
    """Floating-point replay of a reconstruction against the exact invariants."""

    max_relative_deviation: float
    passed: bool
    root_choice: str
    switched_root: bool = False


def numeric_crosscheck(
    inv: DihedralInvariants, root_choice: str = "minus", threshold: float = 1e-9
) -> CrosscheckReport:
    """Embed the reconstruction into complex floats and recompute the invariants.

    Recovers a numeric interior tuple from the reconstructed coefficients
    (any (s+1)-th root branch of the leading coefficient works, since the
    invariants are blind to that choice), then measures the worst relative
    deviation of the recomputed invariants from the exact ones.  A leading
    coefficient of exactly 0 carries no branch information, so the companion
    root is used instead and flagged.
    """
    if dihedral_discriminant(inv) == 0:
        raise DegenerateLocusError("degenerate locus: nothing to crosscheck")
    s = inv.s
    plus, minus = leading_coefficients(inv)
    lead = plus if root_choice == "plus" else minus
    switched = False
    if lead == 0:
        root_choice = "minus" if root_choice == "plus" else "plus"
        lead = plus if root_choice == "plus" else minus
        switched = True
    rec = reconstruct(inv, root_choice)
    last = complex(lead) ** (1.0 / (s + 1))
    first = complex(inv.values[-1]) / 2 / last
    numeric = [first]
    for i in range(2, s):
        numeric.append(complex(rec.interior_coefficients[i - 1]) / last**i)
    numeric.append(last)
    worst = 0.0
    for i in range(1, s + 1):
        value = (
            numeric[0] ** (s + 1 - i) * numeric[i - 1]
            + numeric[-1] ** (s + 1 - i) * numeric[s - i]
        )
        exact = complex(inv.values[i - 1])
        deviation = abs(value - exact) / max(1.0, abs(exact))
        worst = max(worst, deviation)
    return CrosscheckReport(
        max_relative_deviation=worst,
        passed=worst < threshold,
        root_choice=root_choice,
        switched_root=switched,
    )


def invariants_for_curve(curve: SuperellipticCurve, delta: int | None = None):
    """Classify the curve and compute its invariants in one step.

    Returns (normal_form, invariants).  Raises NoExtraAutomorphismError when
    no delta >= 2 shape fits and UnsupportedFormError when the shape that
    fits is not the g(x^delta) one (or has fewer than 2 interior
    coefficients, where the invariant tuple is not defined).
    """
    nf = classify_normal_form(curve, delta)
    if nf.kind is None:
        raise NoExtraAutomorphismError(nf.diagnostic or "no extra automorphism detected")
    if nf.kind != G_DELTA:
        raise UnsupportedFormError(
            "invariants are defined for the g(x^delta) form only; "
            f"this curve is in the {nf.kind} form"
        )
    if nf.s < 2:
        raise UnsupportedFormError(
            f"the invariant tuple needs at least 2 interior coefficients, got s = {nf.s}"
        )
    return nf, compute_invariants(nf.a, curve.n, nf.delta)
