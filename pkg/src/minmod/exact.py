"""Exact arithmetic in the cyclotomic fields Q(zeta_N).

A value is a polynomial in zeta_N = exp(2*pi*i/N) reduced modulo the
N-th cyclotomic polynomial, stored as integer coefficients over a
common positive denominator.  The reduced form is canonical, so
equality and in particular nonvanishing are decided exactly.  A
floating-point embedding with a tracked error bound is available as a
numeric cross-check, never as the source of truth.
"""

from __future__ import annotations

import cmath
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Union

Rational = Union[int, Fraction]


class DivisionByZero(ZeroDivisionError):
    """Raised when a vanishing value appears in a denominator."""


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n // 2 + 1) if n % d == 0]
    out.append(n)
    return out


def _poly_divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # Exact division of integer polynomials, ascending coefficients.
    # The divisor must be monic, which holds for every cyclotomic factor.
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - dd - 1, -1, -1):
        c = num[i + dd]
        out[i] = c
        if c:
            for j in range(dd + 1):
                num[i + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, ascending.

    Computed by dividing X^n - 1 by the product of Phi_d over the proper
    divisors d of n.
    """
    if n == 1:
        return (-1, 1)
    poly = [0] * (n + 1)
    poly[0] = -1
    poly[n] = 1
    for d in _divisors(n)[:-1]:
        poly = _poly_divexact(poly, _cyclotomic(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_rows(n: int) -> tuple[tuple[int, ...], ...]:
    # Row j - phi expresses zeta_n^j, phi <= j < n, in the power basis
    # 1, zeta, ..., zeta^(phi-1).  Built iteratively from the monic Phi_n.
    poly = _cyclotomic(n)
    phi = len(poly) - 1
    rows = []
    row = [-c for c in poly[:phi]]
    for _ in range(phi, n):
        rows.append(tuple(row))
        top = row[phi - 1]
        row = [0] + row[: phi - 1]
        if top:
            for k in range(phi):
                row[k] += top * rows[0][k]
    return tuple(rows)


def _degree(n: int) -> int:
    return len(_cyclotomic(n)) - 1


def _reduce(vec: list[int], n: int) -> list[int]:
    # vec holds coefficients for exponents 0..len(vec)-1, already < n.
    phi = _degree(n)
    out = list(vec[:phi]) + [0] * (phi - min(phi, len(vec)))
    if len(vec) > phi:
        rows = _reduction_rows(n)
        for j in range(phi, len(vec)):
            c = vec[j]
            if c:
                row = rows[j - phi]
                for k in range(phi):
                    out[k] += c * row[k]
    return out


def _poly_divmod(
    num: list[Fraction], den: list[Fraction]
) -> tuple[list[Fraction], list[Fraction]]:
    # den is monic.  Returns (quotient, remainder) with deg rem < deg den.
    num = list(num)
    dd = len(den) - 1
    if len(num) < len(den):
        return [], num
    out = [Fraction(0)] * (len(num) - dd)
    for i in range(len(num) - dd - 1, -1, -1):
        c = num[i + dd]
        out[i] = c
        if c:
            for j in range(dd + 1):
                num[i + j] -= c * den[j]
    rem = num[: dd]
    while rem and not rem[-1]:
        rem.pop()
    return out, rem


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = list(a) + [Fraction(0)] * (len(b) - len(a))
    for i, y in enumerate(b):
        out[i] -= y
    while out and not out[-1]:
        out.pop()
    return out


def _inv_coeffs(num: tuple[int, ...], den: int, order: int) -> tuple[list[int], int]:
    """Invert (sum num[k] zeta^k) / den modulo Phi_order.

    Extended Euclid over Q[x] against the (irreducible) cyclotomic
    polynomial; the divisor is kept monic at each step to limit
    coefficient growth.
    """
    a = [Fraction(c) for c in num]
    while a and not a[-1]:
        a.pop()
    if not a:
        raise DivisionByZero("inverse of zero")
    r0: list[Fraction] = [Fraction(c) for c in _cyclotomic(order)]
    s0: list[Fraction] = []
    r1, s1 = a, [Fraction(1)]
    while True:
        lc = r1[-1]
        if lc != 1:
            r1 = [c / lc for c in r1]
            s1 = [c / lc for c in s1]
        if len(r1) == 1:
            break
        q, rem = _poly_divmod(r0, r1)
        r0, s0, r1, s1 = r1, s1, rem, _poly_sub(s0, _poly_mul(q, s1))
        assert r1, "cyclotomic polynomial is irreducible"
    # s1 * (num/den) == 1, so the inverse is den * s1.
    scaled = [den * c for c in s1]
    common = lcm(*(c.denominator for c in scaled)) if scaled else 1
    ints = [int(c * common) for c in scaled]
    ints += [0] * (_degree(order) - len(ints))
    return ints, common


class CyclotomicNumber:
    """An element of Q(zeta_N) in canonical reduced form.

    Supports field arithmetic through the usual operators, exact
    comparison with rationals and with elements of compatible orders
    (values are promoted to the least common order first), Galois
    conjugation, and embedding into the complex numbers.

    Instances are immutable.  Hashing is disabled on purpose: equal
    values of different orders would need a normalized key, and nothing
    downstream keys on field elements.
    """

    __slots__ = ("order", "_num", "_den")

    __hash__ = None

    def __init__(self, order: int, coefficients) -> None:
        if order < 1:
            raise ValueError(f"order must be positive, got {order}")
        coeffs = [Fraction(c) for c in coefficients]
        if len(coeffs) > order:
            raise ValueError("more coefficients than the order allows")
        den = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
        vec = _reduce([int(c * den) for c in coeffs], order)
        object.__setattr__(self, "order", order)
        self._store(vec, den)

    def _store(self, vec: list[int], den: int) -> None:
        g = gcd(den, *vec) if vec else den
        if g > 1:
            den //= g
            vec = [c // g for c in vec]
        if den < 0:
            den = -den
            vec = [-c for c in vec]
        object.__setattr__(self, "_num", tuple(vec))
        object.__setattr__(self, "_den", den)

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicNumber is immutable")

    @classmethod
    def _raw(cls, order: int, vec: list[int], den: int) -> "CyclotomicNumber":
        # vec already reduced mod Phi_order, length phi(order).
        self = object.__new__(cls)
        object.__setattr__(self, "order", order)
        self._store(vec, den)
        return self

    @classmethod
    def from_rational(cls, value: Rational, order: int = 1) -> "CyclotomicNumber":
        value = Fraction(value)
        vec = [value.numerator] + [0] * (_degree(order) - 1)
        return cls._raw(order, vec, value.denominator)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        """Canonical coordinates in the power basis 1, zeta, ..., zeta^(phi-1)."""
        return tuple(Fraction(c, self._den) for c in self._num)

    # -- order handling -------------------------------------------------

    def _promoted_vec(self, order: int) -> list[int]:
        t = order // self.order
        if t == 1:
            return list(self._num)
        vec = [0] * ((len(self._num) - 1) * t + 1 if self._num else 1)
        for e, c in enumerate(self._num):
            if c:
                vec[e * t] = c
        return _reduce(vec, order)

    def promote(self, order: int) -> "CyclotomicNumber":
        """Re-express the value in Q(zeta_order); order must be a multiple."""
        if order % self.order:
            raise ValueError(f"{order} is not a multiple of order {self.order}")
        if order == self.order:
            return self
        return CyclotomicNumber._raw(order, self._promoted_vec(order), self._den)

    @staticmethod
    def _coerce(value) -> "CyclotomicNumber":
        if isinstance(value, CyclotomicNumber):
            return value
        if isinstance(value, (int, Fraction)):
            return CyclotomicNumber.from_rational(value)
        return NotImplemented

    def _pair(self, other) -> "tuple[CyclotomicNumber, CyclotomicNumber] | None":
        other = self._coerce(other)
        if other is NotImplemented:
            return None
        n = lcm(self.order, other.order)
        return self.promote(n), other.promote(n)

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        den = lcm(a._den, b._den)
        fa, fb = den // a._den, den // b._den
        vec = [fa * x + fb * y for x, y in zip(a._num, b._num)]
        return CyclotomicNumber._raw(a.order, vec, den)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._raw(self.order, [-c for c in self._num], self._den)

    def __sub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        n = a.order
        conv = [0] * (len(a._num) + len(b._num) - 1)
        for i, x in enumerate(a._num):
            if x:
                for j, y in enumerate(b._num):
                    if y:
                        conv[i + j] += x * y
        if len(conv) > n:
            for k in range(n, len(conv)):
                conv[k - n] += conv[k]
            conv = conv[:n]
        return CyclotomicNumber._raw(n, _reduce(conv, n), a._den * b._den)

    __rmul__ = __mul__

    def inv(self) -> "CyclotomicNumber":
        """Multiplicative inverse; raises DivisionByZero on zero."""
        vec, den = _inv_coeffs(self._num, self._den, self.order)
        return CyclotomicNumber._raw(self.order, vec, den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base = self.inv()
            exponent = -exponent
        result = CyclotomicNumber.from_rational(1, base.order)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- predicates -------------------------------------------------------

    def __eq__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a._num == b._num and a._den == b._den

    def __bool__(self) -> bool:
        return any(self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_one(self) -> bool:
        return self._den == 1 and self._num[0] == 1 and not any(self._num[1:])

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def is_real(self) -> bool:
        return self == self.conj()

    # -- Galois action ------------------------------------------------------

    def conjugate(self, k: int) -> "CyclotomicNumber":
        """Apply the Galois map zeta -> zeta^k; k must be coprime to the order."""
        n = self.order
        k %= n
        if gcd(k, n) != 1:
            raise ValueError(f"exponent {k} is not coprime to {n}")
        vec = [0] * n
        for e, c in enumerate(self._num):
            if c:
                vec[e * k % n] += c
        return CyclotomicNumber._raw(n, _reduce(vec, n), self._den)

    def conj(self) -> "CyclotomicNumber":
        """Complex conjugate."""
        return self.conjugate(self.order - 1)

    # -- embedding ----------------------------------------------------------

    def embed(self, precision: int = 53) -> "ComplexApprox":
        """Numeric value under zeta_N -> exp(2*pi*i/N).

        The error bound is the coarse a-priori estimate
        2^-40 * (1 + sum |coefficients|), generous enough to absorb the
        rounding of the exponentials.  Precisions above 53 bits go
        through mpmath before the final rounding to floats.
        """
        scale = sum(abs(c) for c in self._num)
        bound = 2.0 ** -40 * float(1 + Fraction(scale, self._den))
        if precision > 53:
            re, im = self._embed_mpmath(precision)
            return ComplexApprox(float(re), float(im), bound)
        total = 0j
        n = self.order
        for e, c in enumerate(self._num):
            if c:
                total += c * cmath.exp(2j * cmath.pi * e / n)
        total /= self._den
        return ComplexApprox(total.real, total.imag, bound)

    def _embed_mpmath(self, precision: int):
        import mpmath

        with mpmath.workprec(precision + 10):
            n = self.order
            total = mpmath.mpc(0)
            for e, c in enumerate(self._num):
                if c:
                    total += c * mpmath.expjpi(mpmath.mpf(2 * e) / n)
            total /= self._den
            return +total.real, +total.imag

    # -- rendering ------------------------------------------------------------

    def to_string(self) -> str:
        sym = f"z{self.order}"
        parts: list[tuple[int, str]] = []
        for e, c in enumerate(self._num):
            if not c:
                continue
            mag = Fraction(abs(c), self._den)
            if e == 0:
                body = str(mag)
            else:
                mono = sym if e == 1 else f"{sym}^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((1 if c > 0 else -1, body))
        if not parts:
            return "0"
        sign, body = parts[0]
        out = [("-" if sign < 0 else "") + body]
        for sign, body in parts[1:]:
            out.append((" + " if sign > 0 else " - ") + body)
        return "".join(out)

    __str__ = to_string

    def __repr__(self) -> str:
        return self.to_string()


_TERM_RE = re.compile(
    r"^(?:(?P<coef>\d+(?:/\d+)?)\*?)?(?:z(?P<order>\d+)(?:\^(?P<exp>\d+))?)?$"
)


def parse_exact(text: str) -> CyclotomicNumber:
    """Parse the to_string form back into a value.

    Anything after a top-level " = " (an appended radical rendering) is
    ignored, so round-tripping report output works unchanged.
    """
    text = text.split(" = ")[0].strip()
    if not text:
        raise ValueError("empty cyclotomic literal")
    text = text.replace(" - ", " + -").lstrip()
    total = CyclotomicNumber.from_rational(0)
    for chunk in text.split(" + "):
        chunk = chunk.strip()
        sign = 1
        if chunk.startswith("-"):
            sign = -1
            chunk = chunk[1:].strip()
        m = _TERM_RE.match(chunk)
        if not m or (m.group("coef") is None and m.group("order") is None):
            raise ValueError(f"bad cyclotomic term {chunk!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("order"):
            order = int(m.group("order"))
            exp = int(m.group("exp")) if m.group("exp") else 1
            term = sign * coef * zeta(order, exp)
        else:
            term = CyclotomicNumber.from_rational(sign * coef)
        total = total + term
    return total


def zeta(order: int, exponent: int = 1) -> CyclotomicNumber:
    """The root of unity zeta_order^exponent as an exact value."""
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    e = exponent % order
    vec = [0] * (e + 1)
    vec[e] = 1
    return CyclotomicNumber._raw(order, _reduce(vec, order), 1)


def embed(value: CyclotomicNumber, precision: int = 53) -> "ComplexApprox":
    """Module-level alias for CyclotomicNumber.embed."""
    return value.embed(precision)


@dataclass(frozen=True)
class ComplexApprox:
    """A complex float approximation with an absolute error bound."""

    real: float
    imag: float
    error_bound: float

    def __complex__(self) -> complex:
        return complex(self.real, self.imag)

    def __str__(self) -> str:
        return f"{self.real:+.12g}{self.imag:+.12g}i (err<={self.error_bound:.2g})"
