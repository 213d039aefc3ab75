"""Exact scalar arithmetic over odd prime fields, the rationals, and real
quadratic extensions Q(sqrt d).

Every value is immutable and kept in a canonical form (least residue,
reduced fraction, reduced coordinate pair), so structural equality is field
equality and elements can be hashed, shared between threads, and compared
freely.  Nothing here ever touches floating point.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt


class MixedFieldError(ValueError):
    """Operands belong to two different fields."""


class NotASquareError(ArithmeticError):
    """The requested square root does not exist in the field."""


class ParseError(ValueError):
    """A literal does not match the scalar or field grammar."""


MAX_PRIME = 1 << 64          # residues must fit a 64-bit word
SQRT_SCAN_LIMIT = 1 << 20    # largest p for which root scans are allowed
MAX_QUAD_D = 10 ** 12        # keeps the squarefree scan cheap

_INT_RE = re.compile(r"[+-]?\d+\Z")
_RAT_RE = re.compile(r"[+-]?\d+(?:/\d+)?\Z")
# r + r's with s the square root symbol; the rational part is only present
# when followed by the sign of the s-term, e.g. "1/2+1/2s", "-2s", "1-s".
_QUAD_RE = re.compile(
    r"(?:(?P<r>[+-]?\d+(?:/\d+)?)(?=[+-]))?(?P<s>[+-]?(?:\d+(?:/\d+)?)?)s\Z"
)
_FIELD_RE = re.compile(r"(?:f(?P<p>\d+)|q(?:\[sqrt(?P<d>\d+)\])?)\Z")

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    # deterministic Miller-Rabin, exact for n < 2**64 with these witnesses
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
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


def _as_fraction(value) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"exact scalar expected, got {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    raise TypeError(f"cannot build a rational from {value!r}")


def _parse_fraction(text: str) -> Fraction:
    if not _RAT_RE.fullmatch(text):
        raise ParseError(f"bad rational literal {text!r}")
    return Fraction(text)


def _rational_sqrt(x: Fraction):
    """The non-negative rational root of x, or None when there is none."""
    if x < 0:
        return None
    rn, rd = isqrt(x.numerator), isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


class FieldElement:
    """A scalar of one particular field, in canonical form."""

    __slots__ = ("field", "raw")

    def __init__(self, field: "Field", raw):
        self.field = field
        self.raw = raw

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        raw = self.field._coerce_raw(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.raw, raw))

    __radd__ = __add__

    def __sub__(self, other):
        raw = self.field._coerce_raw(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.raw, self.field._neg(raw)))

    def __rsub__(self, other):
        raw = self.field._coerce_raw(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._add(raw, self.field._neg(self.raw)))

    def __mul__(self, other):
        raw = self.field._coerce_raw(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.raw, raw))

    __rmul__ = __mul__

    def __truediv__(self, other):
        raw = self.field._coerce_raw(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.raw, self.field._inv(raw)))

    def __rtruediv__(self, other):
        raw = self.field._coerce_raw(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(raw, self.field._inv(self.raw)))

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.raw))

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inv()
        raw = base.raw
        out = self.field.one.raw
        for _ in range(abs(n)):
            out = self.field._mul(out, raw)
        return FieldElement(self.field, out)

    def inv(self) -> "FieldElement":
        return FieldElement(self.field, self.field._inv(self.raw))

    def sqrt(self) -> "FieldElement":
        """Canonical square root: least residue over Z/p, the non-negative
        root over the rationals and Q(sqrt d)."""
        return FieldElement(self.field, self.field._sqrt(self.raw))

    # -- comparisons and plumbing --------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.raw == self.field.zero.raw

    @property
    def is_one(self) -> bool:
        return self.raw == self.field.one.raw

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.raw == other.raw
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            try:
                return self.raw == self.field._canon(other)
            except (TypeError, ValueError):
                return NotImplemented
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.raw))

    def __str__(self):
        return self.field._format(self.raw)

    def __repr__(self):
        return f"{self.field}({self})"


class Field:
    """Common behaviour of the three supported coefficient fields."""

    def element(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise MixedFieldError(f"{value!r} does not belong to {self}")
            return value
        return FieldElement(self, self._canon(value))

    @property
    def zero(self) -> FieldElement:
        return self._zero

    @property
    def one(self) -> FieldElement:
        return self._one

    def parse(self, text: str) -> FieldElement:
        """Parse a scalar literal; str(element) round-trips bit exactly."""
        return FieldElement(self, self._parse(text.strip()))

    def random_element(self, rng) -> FieldElement:
        return FieldElement(self, self._random_raw(rng))

    def _coerce_raw(self, other):
        if isinstance(other, FieldElement):
            if other.field != self:
                raise MixedFieldError(
                    f"cannot mix scalars of {other.field} with scalars of {self}"
                )
            return other.raw
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            try:
                return self._canon(other)
            except TypeError:
                return NotImplemented
        return NotImplemented

    def _init_constants(self):
        self._zero = FieldElement(self, self._canon(0))
        self._one = FieldElement(self, self._canon(1))


class PrimeField(Field):
    """Z/p for an odd prime p that fits a 64-bit word."""

    def __init__(self, p: int):
        p = int(p)
        if p == 2:
            raise ValueError("characteristic two is not supported")
        if p < 3 or not _is_prime(p):
            raise ValueError(f"{p} is not an odd prime")
        if p >= MAX_PRIME:
            raise ValueError(f"prime {p} does not fit a 64-bit word")
        self.p = p
        self._init_constants()

    def _canon(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"residues of {self} are integers, got {value!r}")
        return value % self.p

    def _add(self, x, y):
        return (x + y) % self.p

    def _mul(self, x, y):
        return x * y % self.p

    def _neg(self, x):
        return -x % self.p

    def _inv(self, x):
        if x == 0:
            raise ZeroDivisionError(f"division by zero in {self}")
        return pow(x, self.p - 2, self.p)

    def _sqrt(self, x):
        if self.p >= SQRT_SCAN_LIMIT:
            raise ValueError(
                f"square roots in {self} need p < 2**20, got p={self.p}"
            )
        # scanning the low half returns the least of the two roots first
        for y in range(self.p // 2 + 1):
            if y * y % self.p == x:
                return y
        raise NotASquareError(f"{x} is not a square in {self}")

    def _format(self, raw):
        return str(raw)

    def _parse(self, text):
        if not _INT_RE.fullmatch(text):
            raise ParseError(f"bad residue literal {text!r} for {self}")
        return int(text) % self.p

    def _random_raw(self, rng):
        return rng.randrange(self.p)

    def grammar_token(self):
        return f"f{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("zp", self.p))

    def __str__(self):
        return f"F{self.p}"

    def __repr__(self):
        return f"PrimeField({self.p})"


class RationalField(Field):
    """The rationals with arbitrary-precision reduced fractions."""

    def __init__(self):
        self._init_constants()

    def _canon(self, value):
        return _as_fraction(value)

    def _add(self, x, y):
        return x + y

    def _mul(self, x, y):
        return x * y

    def _neg(self, x):
        return -x

    def _inv(self, x):
        if x == 0:
            raise ZeroDivisionError("division by zero in Q")
        return 1 / x

    def _sqrt(self, x):
        root = _rational_sqrt(x)
        if root is None:
            raise NotASquareError(f"{x} is not a square in Q")
        return root

    def _format(self, raw):
        return str(raw)

    def _parse(self, text):
        return _parse_fraction(text)

    def _random_raw(self, rng):
        return Fraction(rng.randint(-6, 6), rng.randint(1, 6))

    def grammar_token(self):
        return "q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rationals")

    def __str__(self):
        return "Q"

    def __repr__(self):
        return "RationalField()"


class QuadraticField(Field):
    """Q(sqrt d) for a fixed squarefree d > 1; values are pairs r + s*sqrt(d)."""

    def __init__(self, d: int):
        d = int(d)
        if d < 2:
            raise ValueError(f"need a squarefree d > 1, got {d}")
        if d > MAX_QUAD_D:
            raise ValueError(f"d={d} is beyond the supported range")
        i = 2
        while i * i <= d:
            if d % (i * i) == 0:
                raise ValueError(f"{d} is not squarefree")
            i += 1
        self.d = d
        self._init_constants()

    def _canon(self, value):
        if isinstance(value, (tuple, list)):
            if len(value) != 2:
                raise TypeError(f"{self} pairs have two components, got {value!r}")
            return (_as_fraction(value[0]), _as_fraction(value[1]))
        return (_as_fraction(value), Fraction(0))

    def _add(self, x, y):
        return (x[0] + y[0], x[1] + y[1])

    def _mul(self, x, y):
        r, s = x
        t, u = y
        return (r * t + s * u * self.d, r * u + s * t)

    def _neg(self, x):
        return (-x[0], -x[1])

    def _inv(self, x):
        r, s = x
        nrm = r * r - s * s * self.d   # nonzero unless (r, s) = 0 since d is not a square
        if nrm == 0:
            raise ZeroDivisionError(f"division by zero in {self}")
        return (r / nrm, -s / nrm)

    def _sqrt(self, x):
        r, s = x
        if s != 0:
            raise NotASquareError(
                f"square roots in {self} are only supported for rational "
                f"and d-times-rational squares, got {self._format(x)}"
            )
        root = _rational_sqrt(r)
        if root is not None:
            return (root, Fraction(0))
        root = _rational_sqrt(r / self.d)
        if root is not None:
            return (Fraction(0), root)
        raise NotASquareError(f"{self._format(x)} is not a square in {self}")

    def _format(self, raw):
        r, s = raw
        if s == 0:
            return str(r)
        if r == 0:
            return f"{s}s"
        if s > 0:
            return f"{r}+{s}s"
        return f"{r}-{-s}s"

    def _parse(self, text):
        if "s" not in text:
            return (_parse_fraction(text), Fraction(0))
        m = _QUAD_RE.fullmatch(text)
        if m is None:
            raise ParseError(f"bad literal {text!r} for {self}")
        r = Fraction(0) if m.group("r") is None else _parse_fraction(m.group("r"))
        coeff = m.group("s")
        if coeff in ("", "+"):
            s = Fraction(1)
        elif coeff == "-":
            s = Fraction(-1)
        else:
            s = _parse_fraction(coeff)
        return (r, s)

    def _random_raw(self, rng):
        return (
            Fraction(rng.randint(-6, 6), rng.randint(1, 6)),
            Fraction(rng.randint(-6, 6), rng.randint(1, 6)),
        )

    def grammar_token(self):
        return f"q[sqrt{self.d}]"

    def __eq__(self, other):
        return isinstance(other, QuadraticField) and other.d == self.d

    def __hash__(self):
        return hash(("quad", self.d))

    def __str__(self):
        return f"Q(sqrt{self.d})"

    def __repr__(self):
        return f"QuadraticField({self.d})"


def parse_field(text: str) -> Field:
    """Build a field from its grammar token: ``f<p>``, ``q`` or ``q[sqrt<d>]``."""
    m = _FIELD_RE.fullmatch(text.strip())
    if m is None:
        raise ParseError(f"bad field literal {text!r} (expected f<p>, q or q[sqrt<d>])")
    if m.group("p") is not None:
        return PrimeField(int(m.group("p")))
    if m.group("d") is not None:
        return QuadraticField(int(m.group("d")))
    return RationalField()
