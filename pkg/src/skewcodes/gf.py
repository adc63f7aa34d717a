"""Arithmetic in F_{p^m} for odd p, with the power-of-Frobenius twist x -> x^(p^t).

Elements are digit vectors in the power basis of a user-supplied monic
irreducible modulus. The canonical integer encoding of an element is
sum(digits[i] * p**i), least-significant digit first.
"""

from __future__ import annotations

import itertools
import random

from .errors import (
    BadTwistError,
    DivisionByZeroError,
    MixedRingsError,
    NonPrimeError,
    ReducibleModulusError,
)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


# --- dense polynomial helpers over F_p (coefficient lists, ascending) ---

def _pp_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _pp_mulmod(f, g, mod, p):
    out = [0] * (len(f) + len(g) - 1) if f and g else []
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _pp_divmod(out, mod, p)[1]


def _pp_divmod(f, g, p):
    f = list(f)
    _pp_trim(f)
    dg = len(g) - 1
    inv_lead = pow(g[-1], p - 2, p)
    q = [0] * max(0, len(f) - dg)
    while len(f) - 1 >= dg and f:
        c = f[-1] * inv_lead % p
        d = len(f) - 1 - dg
        q[d] = c
        for i, b in enumerate(g):
            f[d + i] = (f[d + i] - c * b) % p
        _pp_trim(f)
    return q, f


def _pp_gcd(f, g, p):
    f, g = list(f), list(g)
    _pp_trim(f)
    _pp_trim(g)
    while g:
        f, g = g, _pp_divmod(f, g, p)[1]
    return f


def _pp_powmod_x(e, mod, p):
    # x^e mod (mod) by square and multiply; deg mod >= 2 here
    result = [1]
    base = [0, 1]
    while e:
        if e & 1:
            result = _pp_mulmod(result, base, mod, p)
        base = _pp_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _is_irreducible(modulus, p) -> bool:
    m = len(modulus) - 1
    if m == 1:
        return True
    if m <= 3:
        # quadratics and cubics are reducible exactly when they have a root
        for c in range(p):
            acc = 0
            for coef in reversed(modulus):
                acc = (acc * c + coef) % p
            if acc == 0:
                return False
        return True
    # Rabin: x^(p^m) == x mod f, and gcd(x^(p^(m/r)) - x, f) = 1 for prime r | m
    xq = _pp_powmod_x(p ** m, modulus, p)
    if _pp_trim([(a - b) % p for a, b in itertools.zip_longest(xq, [0, 1], fillvalue=0)]):
        return False
    r = 2
    mm = m
    seen = set()
    while r * r <= mm:
        if mm % r == 0:
            seen.add(r)
            while mm % r == 0:
                mm //= r
        r += 1
    if mm > 1:
        seen.add(mm)
    for r in seen:
        xe = _pp_powmod_x(p ** (m // r), modulus, p)
        diff = _pp_trim([(a - b) % p for a, b in itertools.zip_longest(xe, [0, 1], fillvalue=0)])
        g = _pp_gcd(list(modulus), diff, p)
        if len(g) - 1 != 0:
            return False
    return True


class FieldSpec:
    """Immutable description of F_{p^m} with twist x -> x^(p^t)."""

    __slots__ = ("p", "m", "modulus", "t", "q", "k", "_reduction", "_frob_table")

    def __init__(self, p: int, m: int, modulus, t: int):
        self.p = p
        self.m = m
        self.modulus = tuple(c % p for c in modulus)
        self.t = t
        self.q = p ** m
        self.k = m // t
        self._reduction = self._reduction_rows()
        self._frob_table = None

    def _reduction_rows(self):
        # rows[e - m] = digits of x^e reduced by modulus, for e = m .. 2m-2
        p, m = self.p, self.m
        rows = []
        cur = [(-c) % p for c in self.modulus[:m]]
        rows.append(tuple(cur))
        for _ in range(m + 1, 2 * m - 1):
            carry = cur[m - 1]
            cur = [0] + cur[: m - 1]
            if carry:
                cur = [(cur[i] + carry * rows[0][i]) % p for i in range(m)]
            rows.append(tuple(cur))
        return tuple(rows)

    # --- element constructors ---

    def element(self, digits) -> "FieldElement":
        digits = tuple(int(d) % self.p for d in digits)
        if len(digits) != self.m:
            raise ValueError(f"expected {self.m} digits, got {len(digits)}")
        return FieldElement(self, digits)

    def constant(self, c: int) -> "FieldElement":
        """The prime-subfield constant c (an integer mod p)."""
        return FieldElement(self, (c % self.p,) + (0,) * (self.m - 1))

    def from_int(self, code: int) -> "FieldElement":
        if not 0 <= code < self.q:
            raise ValueError(f"element code {code} out of range [0, {self.q})")
        digits = []
        for _ in range(self.m):
            code, r = divmod(code, self.p)
            digits.append(r)
        return FieldElement(self, tuple(digits))

    def root(self) -> "FieldElement":
        """The residue class of x, i.e. the adjoined root of the modulus."""
        if self.m == 1:
            return self.constant(-self.modulus[0])
        return FieldElement(self, (0, 1) + (0,) * (self.m - 2))

    @property
    def zero(self) -> "FieldElement":
        return self.constant(0)

    @property
    def one(self) -> "FieldElement":
        return self.constant(1)

    def elements(self):
        """All q elements in integer-code order."""
        for code in range(self.q):
            yield self.from_int(code)

    def random_element(self, rng: random.Random) -> "FieldElement":
        return self.from_int(rng.randrange(self.q))

    def frob_code(self, code: int) -> int:
        """Image of the element with the given code under x -> x^(p^t)."""
        if self._frob_table is None:
            table = []
            e = self.p ** self.t
            for c in range(self.q):
                table.append(self.from_int(c).pow_int(e).to_int())
            self._frob_table = table
        return self._frob_table[code]

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.m, self.modulus, self.t)
            == (other.p, other.m, other.modulus, other.t)
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus, self.t))

    def __repr__(self):
        return f"GF({self.p}^{self.m}; t={self.t})"


def make_field(p: int, m: int, modulus, t: int = 1) -> FieldSpec:
    """Validate and build a FieldSpec.

    modulus is the coefficient list of a monic degree-m polynomial over F_p,
    ascending (constant term first).
    """
    if not _is_prime(p) or p == 2:
        raise NonPrimeError(f"p = {p} is not an odd prime")
    if m < 1:
        raise ValueError("extension degree m must be positive")
    modulus = [int(c) % p for c in modulus]
    if len(modulus) != m + 1 or modulus[-1] != 1:
        raise ReducibleModulusError(
            f"modulus must be monic of degree {m}, got {modulus}"
        )
    if not _is_irreducible(modulus, p):
        raise ReducibleModulusError(f"modulus {modulus} is reducible over F_{p}")
    if t < 1 or m % t != 0:
        raise BadTwistError(f"t = {t} does not divide m = {m}")
    return FieldSpec(p, m, modulus, t)


class FieldElement:
    """Element of F_{p^m} as a digit vector in the power basis."""

    __slots__ = ("spec", "digits")

    def __init__(self, spec: FieldSpec, digits: tuple):
        self.spec = spec
        self.digits = digits

    # --- helpers ---

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise MixedRingsError("field elements from different fields")
            return other
        if isinstance(other, int):
            return self.spec.constant(other)
        return NotImplemented

    @property
    def is_zero(self) -> bool:
        return not any(self.digits)

    def to_int(self) -> int:
        code = 0
        for d in reversed(self.digits):
            code = code * self.spec.p + d
        return code

    # --- ring operations ---

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.spec.p
        return FieldElement(
            self.spec, tuple((a + b) % p for a, b in zip(self.digits, other.digits))
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.spec.p
        return FieldElement(
            self.spec, tuple((a - b) % p for a, b in zip(self.digits, other.digits))
        )

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        p = self.spec.p
        return FieldElement(self.spec, tuple((-a) % p for a in self.digits))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        spec = self.spec
        p, m = spec.p, spec.m
        conv = [0] * (2 * m - 1)
        for i, a in enumerate(self.digits):
            if a:
                for j, b in enumerate(other.digits):
                    conv[i + j] = (conv[i + j] + a * b) % p
        out = conv[:m]
        for e in range(m, 2 * m - 1):
            c = conv[e]
            if c:
                row = spec._reduction[e - m]
                for i in range(m):
                    out[i] = (out[i] + c * row[i]) % p
        return FieldElement(spec, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero:
            raise DivisionByZeroError("zero has no multiplicative inverse")
        return self.pow_int(self.spec.q - 2)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def pow_int(self, e: int) -> "FieldElement":
        if e < 0:
            return self.inverse().pow_int(-e)
        result = self.spec.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    __pow__ = pow_int

    def frob(self, i: int = 1) -> "FieldElement":
        """Apply x -> x^(p^t) i times (i may be any non-negative integer)."""
        i %= self.spec.k
        code = self.to_int()
        for _ in range(i):
            code = self.spec.frob_code(code)
        return self.spec.from_int(code)

    # --- comparisons / display ---

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.digits == other.digits
        if isinstance(other, int):
            return self == self.spec.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec.q, self.digits))

    def __repr__(self):
        terms = []
        for i in range(self.spec.m - 1, -1, -1):
            d = self.digits[i]
            if d == 0:
                continue
            if i == 0:
                terms.append(str(d))
            else:
                coef = "" if d == 1 else str(d)
                var = "a" if i == 1 else f"a^{i}"
                terms.append(coef + var)
        return "+".join(terms) if terms else "0"
