"""Skew polynomials over F_q or over R, with the twisted product

    (a x^i) * (b x^j) = a theta^i(b) x^(i+j)

where theta is the configured power of Frobenius. Division is always by a
divisor on the RIGHT with the quotient on the LEFT, matching the single
factorization shape used by every construction in this package:
x^n - alpha = h(x) * f(x).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import (
    BudgetExceededError,
    DivisionByZeroPolyError,
    HypothesisViolatedError,
    LengthMismatchError,
    MixedRingsError,
    NonUnitLeadingCoeffError,
    NotADivisorError,
    NotAUnitError,
    VerificationError,
    ZeroPolynomialError,
)
from .gf import FieldElement, FieldSpec
from .linalg import Span
from .ring4 import RingElement, ring_elements, ring_one, ring_zero


def _is_unit_coeff(c) -> bool:
    return c.is_unit if isinstance(c, RingElement) else not c.is_zero


def _coeff_code(c):
    if isinstance(c, RingElement):
        return (c.a.to_int(), c.b.to_int(), c.c.to_int(), c.d.to_int())
    return c.to_int()


def is_theta_fixed(c) -> bool:
    return c.frob(1) == c


class SkewPoly:
    """Coefficient vector (ascending powers) over F_q or over R.

    Trailing zeros are trimmed; the zero polynomial has degree None.
    """

    __slots__ = ("spec", "ring", "coeffs")

    def __init__(self, spec: FieldSpec, ring: str, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero:
            coeffs.pop()
        self.spec = spec
        self.ring = ring
        self.coeffs = tuple(coeffs)

    # --- constructors ---

    @classmethod
    def zero(cls, spec: FieldSpec, ring: str = "fq") -> "SkewPoly":
        return cls(spec, ring, [])

    def _zero_coeff(self):
        return ring_zero(self.spec) if self.ring == "R" else self.spec.zero

    def _one_coeff(self):
        return ring_one(self.spec) if self.ring == "R" else self.spec.one

    # --- structure ---

    @property
    def degree(self):
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self):
        if self.is_zero:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.lead == self._one_coeff()

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self._zero_coeff()

    def _check_compatible(self, other: "SkewPoly"):
        if self.spec != other.spec or self.ring != other.ring:
            raise MixedRingsError(
                f"polynomials over different rings: {self.spec}/{self.ring}"
                f" vs {other.spec}/{other.ring}"
            )

    # --- arithmetic ---

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        self._check_compatible(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(self.spec, self.ring, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        self._check_compatible(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(self.spec, self.ring, [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self) -> "SkewPoly":
        return SkewPoly(self.spec, self.ring, [-c for c in self.coeffs])

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        return self._mul(other, twisted=True)

    def _mul(self, other: "SkewPoly", twisted: bool) -> "SkewPoly":
        self._check_compatible(other)
        if self.is_zero or other.is_zero:
            return SkewPoly.zero(self.spec, self.ring)
        out = [self._zero_coeff()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero:
                    continue
                bb = b.frob(i) if twisted else b
                out[i + j] = out[i + j] + a * bb
        return SkewPoly(self.spec, self.ring, out)

    def scale_left(self, c) -> "SkewPoly":
        """Left multiplication by a constant: c * f."""
        return SkewPoly(self.spec, self.ring, [c * x for x in self.coeffs])

    def times_x_power(self, j: int) -> "SkewPoly":
        """x^j * f: coefficients twisted by theta^j, degrees raised by j."""
        if self.is_zero or j == 0:
            return self if j == 0 else SkewPoly.zero(self.spec, self.ring)
        z = self._zero_coeff()
        return SkewPoly(self.spec, self.ring, [z] * j + [c.frob(j) for c in self.coeffs])

    def monic(self) -> "SkewPoly":
        if self.is_zero:
            raise ZeroPolynomialError("cannot normalize the zero polynomial")
        if not _is_unit_coeff(self.lead):
            raise NonUnitLeadingCoeffError(f"leading coefficient {self.lead!r} is not a unit")
        return self.scale_left(self.lead.inverse())

    # --- comparison / display ---

    def __eq__(self, other):
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self.spec == other.spec and self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.spec, self.ring, self.coeffs))

    def __repr__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero:
                continue
            cs = repr(c)
            if i == 0:
                parts.append(cs if ("+" not in cs or self.ring == "fq") else f"({cs})")
            else:
                var = "x" if i == 1 else f"x^{i}"
                if cs == "1":
                    parts.append(var)
                else:
                    cs = f"({cs})" if "+" in cs else cs
                    parts.append(f"{cs}*{var}")
        return " + ".join(parts)


# --- convenience constructors ---

def fq_poly(spec: FieldSpec, coeffs) -> SkewPoly:
    """Polynomial over F_q; integer coefficients mean prime-subfield constants."""
    conv = lambda c: c if isinstance(c, FieldElement) else spec.constant(c)
    return SkewPoly(spec, "fq", [conv(c) for c in coeffs])


def r_poly(spec: FieldSpec, coeffs) -> SkewPoly:
    """Polynomial over R; field or integer coefficients are promoted."""

    def conv(c):
        if isinstance(c, RingElement):
            return c
        if isinstance(c, FieldElement):
            return RingElement.from_field(c)
        return RingElement.from_ints(spec, c)

    return SkewPoly(spec, "R", [conv(c) for c in coeffs])


def x_power_minus(spec: FieldSpec, ring: str, n: int, alpha) -> SkewPoly:
    """x^n - alpha in the requested coefficient ring."""
    zero = ring_zero(spec) if ring == "R" else spec.zero
    one = ring_one(spec) if ring == "R" else spec.one
    coeffs = [-alpha] + [zero] * (n - 1) + [one]
    return SkewPoly(spec, ring, coeffs)


@dataclass(frozen=True)
class ModulusSpec:
    """Quotient modulus x^n - alpha; alpha is a FieldElement or RingElement."""

    n: int
    alpha: object

    @property
    def ring(self) -> str:
        return "R" if isinstance(self.alpha, RingElement) else "fq"

    @property
    def spec(self) -> FieldSpec:
        return self.alpha.spec

    def poly(self) -> SkewPoly:
        return x_power_minus(self.spec, self.ring, self.n, self.alpha)


# --- division ---

def right_divmod(f: SkewPoly, g: SkewPoly):
    """(quot, rem) with f = quot * g + rem and deg rem < deg g."""
    f._check_compatible(g)
    if g.is_zero:
        raise DivisionByZeroPolyError("division by the zero polynomial")
    if not _is_unit_coeff(g.lead):
        raise NonUnitLeadingCoeffError(
            f"leading coefficient {g.lead!r} of the divisor is not a unit"
        )
    quot = SkewPoly.zero(f.spec, f.ring)
    rem = f
    dg = g.degree
    glead = g.lead
    while not rem.is_zero and rem.degree >= dg:
        d = rem.degree - dg
        c = rem.lead * glead.frob(d).inverse()
        term = SkewPoly(f.spec, f.ring, [f._zero_coeff()] * d + [c])
        quot = quot + term
        rem = rem - term * g
    return quot, rem


def reduce_mod(f: SkewPoly, mod: ModulusSpec) -> SkewPoly:
    """Canonical degree < n representative modulo x^n - alpha."""
    return right_divmod(f, mod.poly())[1]


def is_right_divisor(g: SkewPoly, mod: ModulusSpec) -> bool:
    """True when x^n - alpha = h * g for some h."""
    return right_divmod(mod.poly(), g)[1].is_zero


def _monic_right_factors(f: SkewPoly, degree: int):
    """All monic degree-`degree` right divisors of an arbitrary polynomial f."""
    spec = f.spec
    elems = list(ring_elements(spec)) if f.ring == "R" else list(spec.elements())
    lead = ring_one(spec) if f.ring == "R" else spec.one
    out = []
    for lower in itertools.product(elems, repeat=degree):
        g = SkewPoly(spec, f.ring, list(lower) + [lead])
        if right_divmod(f, g)[1].is_zero:
            out.append(g)
    return out


def random_right_divisor(mod: ModulusSpec, rng, degree: int) -> SkewPoly:
    """A random monic right divisor of x^n - alpha of degree at most `degree`.

    Peels random factors of degree 1 (or 2 when no linear factor exists) off
    the successive cofactors; stops early if the cofactor has no small right
    factor. The chain x^n - alpha = cofactor * divisor makes every
    intermediate divisor a genuine right divisor.
    """
    spec = mod.spec
    one = ring_one(spec) if mod.ring == "R" else spec.one
    divisor = SkewPoly(spec, mod.ring, [one])
    cofactor = mod.poly()
    while (divisor.degree or 0) < degree and cofactor.degree > 0:
        remaining = degree - divisor.degree
        candidates = []
        for d in (1, 2):
            if d > remaining or d > cofactor.degree:
                continue
            candidates = _monic_right_factors(cofactor, d)
            if candidates:
                break
        if not candidates:
            break
        g = rng.choice(candidates)
        divisor = g * divisor
        cofactor = right_divmod(cofactor, g)[0]
    return divisor


def right_divisor_search(mod: ModulusSpec, degree: int, budget: int = 10**7):
    """All monic right divisors of x^n - alpha of the given degree.

    Plain exhaustive enumeration, returned in lexicographic coefficient order
    (ascending powers, integer element codes).
    """
    spec = mod.spec
    if mod.ring == "R":
        elems = list(ring_elements(spec))
    else:
        elems = list(spec.elements())
    count = len(elems) ** degree
    if count > budget:
        raise BudgetExceededError(
            f"{count} candidates exceed the budget of {budget}"
        )
    lead = ring_one(spec) if mod.ring == "R" else spec.one
    modulus_poly = mod.poly()
    out = []
    for lower in itertools.product(elems, repeat=degree):
        g = SkewPoly(spec, mod.ring, list(lower) + [lead])
        if right_divmod(modulus_poly, g)[1].is_zero:
            out.append(g)
    out.sort(key=lambda h: tuple(_coeff_code(c) for c in h.coeffs))
    return out


# --- word <-> polynomial ---

def poly_to_word(f: SkewPoly, n: int):
    if not f.is_zero and f.degree >= n:
        raise LengthMismatchError(f"degree {f.degree} polynomial in a length-{n} word")
    return tuple(f.coeff(i) for i in range(n))


def word_to_poly(word, spec: FieldSpec, ring: str = None) -> SkewPoly:
    word = list(word)
    if ring is None:
        ring = "R" if (word and isinstance(word[0], RingElement)) else "fq"
    return SkewPoly(spec, ring, word)


def span_words(f: SkewPoly, mod: ModulusSpec):
    """Words of x^j * f mod (x^n - alpha), j = 0..n-1.

    Their linear span over the coefficient ring is the left submodule <f>.
    """
    return [poly_to_word(reduce_mod(f.times_x_power(j), mod), mod.n) for j in range(mod.n)]


def generator_basis_words(f: SkewPoly, mod: ModulusSpec):
    """The nominal basis x^j * f, j = 0..n-deg(f)-1, for a right-divisor generator."""
    if f.is_zero:
        return []
    return [poly_to_word(f.times_x_power(j), mod.n) for j in range(mod.n - f.degree)]


# --- dual cofactor generator ---

def dual_generator(h: SkewPoly) -> SkewPoly:
    """Coefficient reversal with iterated twist: result_i = theta^i(h_{deg-i}).

    Applied to the cofactor h of x^n - alpha = h * f, it generates the dual
    of <f>; the iterated-power form is validated against a brute-force dual
    oracle in the test suite.
    """
    if h.is_zero:
        raise ZeroPolynomialError("dual generator of the zero polynomial")
    r = h.degree
    return SkewPoly(h.spec, h.ring, [h.coeff(r - i).frob(i) for i in range(r + 1)])


# --- commutative helpers (used by the idempotent construction) ---

def c_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    return f._mul(g, twisted=False)


def c_divmod(f: SkewPoly, g: SkewPoly):
    f._check_compatible(g)
    if g.is_zero:
        raise DivisionByZeroPolyError("division by the zero polynomial")
    if not _is_unit_coeff(g.lead):
        raise NonUnitLeadingCoeffError("divisor leading coefficient is not a unit")
    quot = SkewPoly.zero(f.spec, f.ring)
    rem = f
    dg = g.degree
    ginv = g.lead.inverse()
    while not rem.is_zero and rem.degree >= dg:
        d = rem.degree - dg
        c = rem.lead * ginv
        term = SkewPoly(f.spec, f.ring, [f._zero_coeff()] * d + [c])
        quot = quot + term
        rem = rem - c_mul(term, g)
    return quot, rem


def c_xgcd(a: SkewPoly, b: SkewPoly):
    """(g, s, t) with s*a + t*b = g, commutative products."""
    spec, ring = a.spec, a.ring
    r0, r1 = a, b
    s0, s1 = SkewPoly(spec, ring, [a._one_coeff()]), SkewPoly.zero(spec, ring)
    t0, t1 = SkewPoly.zero(spec, ring), SkewPoly(spec, ring, [a._one_coeff()])
    while not r1.is_zero:
        q, r = c_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - c_mul(q, s1)
        t0, t1 = t1, t0 - c_mul(q, t1)
    return r0, s0, t0


# --- idempotent generators ---

def idempotent_generator(f: SkewPoly, mod: ModulusSpec) -> SkewPoly:
    """Idempotent e with e*e = e mod (x^n - alpha) and <e> = <f>.

    Requires gcd(n, k) = 1 and gcd(n, q) = 1. Under these hypotheses the
    code is closed under the untwisted shift, so e is found by commutative
    extended Euclid on (f, h) where x^n - alpha = h f, then verified in the
    skew ring.
    """
    spec = f.spec
    n = mod.n
    if math.gcd(n, spec.k) != 1 or math.gcd(n, spec.q) != 1:
        raise HypothesisViolatedError(
            f"need gcd(n,k)=1 and gcd(n,q)=1; got n={n}, k={spec.k}, q={spec.q}"
        )
    modulus_poly = mod.poly()
    if not right_divmod(modulus_poly, f)[1].is_zero:
        raise NotADivisorError(f"{f!r} does not right-divide x^{n} - {mod.alpha!r}")
    h, rem = c_divmod(modulus_poly, f)
    if not rem.is_zero:
        raise VerificationError(
            "right divisor is not a commutative factor despite gcd(n,k)=1"
        )
    g, s, _ = c_xgcd(f, h)
    if g.is_zero or g.degree != 0:
        raise HypothesisViolatedError(
            f"x^{n} - {mod.alpha!r} is not squarefree: gcd(f, h) = {g!r}"
        )
    e = c_divmod(c_mul(s.scale_left(g.coeff(0).inverse()), f), modulus_poly)[1]
    square = reduce_mod(e * e, mod)
    if square != e:
        raise VerificationError(f"constructed polynomial is not skew-idempotent: e*e = {square!r}")
    if Span(span_words(e, mod)) != Span(span_words(f, mod)):
        raise VerificationError("idempotent generates a different submodule than f")
    return e


def dual_idempotent(e: SkewPoly, mod: ModulusSpec) -> SkewPoly:
    """1 - e(x^{-1}) reduced mod x^n - alpha (alpha a theta-fixed unit)."""
    alpha = mod.alpha
    if not _is_unit_coeff(alpha):
        raise NotAUnitError(f"shift constant {alpha!r} is not a unit")
    if not is_theta_fixed(alpha):
        raise HypothesisViolatedError("shift constant must be fixed by the twist")
    n = mod.n
    if not e.is_zero and e.degree >= n:
        raise LengthMismatchError("idempotent must already be reduced")
    ainv = alpha.inverse()
    word = [e._zero_coeff()] * n
    for i, c in enumerate(e.coeffs):
        if i == 0:
            word[0] = word[0] + c
        else:
            # x^{-i} = alpha^{-1} x^{n-i} in the quotient
            word[n - i] = word[n - i] + c * ainv
    result = SkewPoly(e.spec, e.ring, word)
    one = SkewPoly(e.spec, e.ring, [e._one_coeff()])
    return one - result


# --- CRT component assembly ---

def from_components(f1: SkewPoly, f2: SkewPoly, f3: SkewPoly, f4: SkewPoly) -> SkewPoly:
    """The R-polynomial whose CRT component polynomials are f1..f4."""
    spec = f1.spec
    for f in (f2, f3, f4):
        if f.spec != spec or f.ring != "fq":
            raise MixedRingsError("components must share one base field")
    if f1.ring != "fq":
        raise MixedRingsError("components must be base-field polynomials")
    top = max(len(f.coeffs) for f in (f1, f2, f3, f4))
    coeffs = [
        RingElement.from_crt(spec, f1.coeff(i), f2.coeff(i), f3.coeff(i), f4.coeff(i))
        for i in range(top)
    ]
    return SkewPoly(spec, "R", coeffs)


def component_polys(f: SkewPoly):
    """The four CRT component polynomials of an R-polynomial."""
    if f.ring != "R":
        raise MixedRingsError("expected a polynomial over R")
    comps = [[], [], [], []]
    for c in f.coeffs:
        for i, part in enumerate(c.crt()):
            comps[i].append(part)
    return tuple(SkewPoly(f.spec, "fq", comp) for comp in comps)
