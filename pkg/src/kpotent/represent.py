"""Left and right multiplication matrices of quaternions and octonions,
with exact dense 4x4/8x8 matrix arithmetic.

``left_rep(x)`` is the matrix L with L . coords(y) = coords(x y); likewise
``right_rep(x)`` represents y -> y x.  ``block_check`` compares the 8x8
matrices against their assembly from 4x4 blocks of the two quaternion
halves, in both the classical fixed-sign form (valid for c = -1) and the
parametric form that carries the doubling parameter.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .algebra import AlgebraElement, Octonion, Quaternion
from .fields import Field, FieldElement, ParseError


class SquareMatrix:
    """Dense n x n matrix of field elements, n in {4, 8}."""

    __slots__ = ("field", "order", "rows")

    def __init__(self, field: Field, rows):
        rows = tuple(tuple(field.element(e) for e in row) for row in rows)
        order = len(rows)
        if order not in (4, 8) or any(len(row) != order for row in rows):
            raise ValueError("matrices are square of order 4 or 8")
        self.field = field
        self.order = order
        self.rows = rows

    @classmethod
    def identity(cls, order: int, field: Field) -> "SquareMatrix":
        one, zero = field.one, field.zero
        return cls(field, tuple(
            tuple(one if i == j else zero for j in range(order))
            for i in range(order)
        ))

    @classmethod
    def zeros(cls, order: int, field: Field) -> "SquareMatrix":
        zero = field.zero
        return cls(field, tuple(tuple(zero for _ in range(order)) for _ in range(order)))

    @classmethod
    def from_blocks(cls, tl, tr, bl, br) -> "SquareMatrix":
        rows = [row_a + row_b for row_a, row_b in zip(tl.rows, tr.rows)]
        rows += [row_a + row_b for row_a, row_b in zip(bl.rows, br.rows)]
        return cls(tl.field, rows)

    def _check_compatible(self, other):
        if other.field != self.field or other.order != self.order:
            raise ValueError("matrix operands must share order and field")

    def __add__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        self._check_compatible(other)
        return SquareMatrix(self.field, tuple(
            tuple(x + y for x, y in zip(ra, rb))
            for ra, rb in zip(self.rows, other.rows)
        ))

    def __sub__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        self._check_compatible(other)
        return SquareMatrix(self.field, tuple(
            tuple(x - y for x, y in zip(ra, rb))
            for ra, rb in zip(self.rows, other.rows)
        ))

    def __neg__(self):
        return SquareMatrix(self.field, tuple(tuple(-x for x in row) for row in self.rows))

    def __mul__(self, other):
        if isinstance(other, SquareMatrix):
            self._check_compatible(other)
            return self._mat_mul(other)
        if isinstance(other, (FieldElement, int)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (FieldElement, int)):
            return self.scale(other)
        return NotImplemented

    __matmul__ = __mul__

    def _mat_mul(self, other):
        field = self.field
        fadd, fmul = field._add, field._mul
        zero_raw = field.zero.raw
        n = self.order
        cols = tuple(
            tuple(other.rows[k][j].raw for k in range(n)) for j in range(n)
        )
        zero_elem = field.zero
        out = []
        for i in range(n):
            # representation matrices of basis elements are sparse; skipping
            # zero terms once per row keeps those products cheap
            nonzero = tuple(
                (k, e.raw) for k, e in enumerate(self.rows[i]) if e.raw != zero_raw
            )
            out_row = []
            for j in range(n):
                col = cols[j]
                acc = zero_raw
                for k, xk in nonzero:
                    acc = fadd(acc, fmul(xk, col[k]))
                out_row.append(zero_elem if acc == zero_raw else FieldElement(field, acc))
            out.append(tuple(out_row))
        return SquareMatrix(field, tuple(out))

    def scale(self, factor):
        lam = self.field.element(factor)
        return SquareMatrix(self.field, tuple(
            tuple(lam * x for x in row) for row in self.rows
        ))

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            raise ValueError("negative matrix powers are not supported")
        result = SquareMatrix.identity(self.order, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def transpose(self) -> "SquareMatrix":
        return SquareMatrix(self.field, tuple(zip(*self.rows)))

    @property
    def is_zero(self) -> bool:
        return all(x.is_zero for row in self.rows for x in row)

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.order == other.order
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.rows))

    # -- emitters: one row per CSV line, JSON as array-of-arrays ---------

    def to_csv(self) -> str:
        return "\n".join(",".join(str(e) for e in row) for row in self.rows)

    def to_json(self) -> str:
        return json.dumps(self.to_lists())

    def to_lists(self):
        return [[str(e) for e in row] for row in self.rows]

    @classmethod
    def from_csv(cls, field: Field, text: str) -> "SquareMatrix":
        lines = [line for line in text.strip().splitlines() if line.strip()]
        rows = []
        for i, line in enumerate(lines):
            try:
                rows.append(tuple(field.parse(tok) for tok in line.split(",")))
            except ParseError as exc:
                raise ParseError(f"row {i}: {exc}") from None
        return cls(field, rows)

    @classmethod
    def from_json(cls, field: Field, text: str) -> "SquareMatrix":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad matrix JSON: {exc}") from None
        return cls(field, [tuple(field.parse(tok) for tok in row) for row in data])

    def __str__(self):
        return self.to_csv()

    def __repr__(self):
        return f"<{self.order}x{self.order} over {self.field}>\n{self.to_csv()}"


def _left4(q: Quaternion) -> SquareMatrix:
    alg = q.algebra
    a, b = alg.a, alg.b
    ab = a * b
    q0, q1, q2, q3 = q.coords
    return SquareMatrix(alg.field, (
        (q0, a * q1, b * q2, -(ab * q3)),
        (q1, q0, b * q3, -(b * q2)),
        (q2, -(a * q3), q0, a * q1),
        (q3, -q2, q1, q0),
    ))


def _right4(q: Quaternion) -> SquareMatrix:
    alg = q.algebra
    a, b = alg.a, alg.b
    ab = a * b
    q0, q1, q2, q3 = q.coords
    return SquareMatrix(alg.field, (
        (q0, a * q1, b * q2, -(ab * q3)),
        (q1, q0, -(b * q3), b * q2),
        (q2, a * q3, q0, -(a * q1)),
        (q3, q2, -q1, q0),
    ))


def _left8(x: Octonion) -> SquareMatrix:
    alg = x.algebra
    a, b, c = alg.a, alg.b, alg.c
    ab, ac, bc = a * b, a * c, b * c
    abc = ab * c
    x0, x1, x2, x3, x4, x5, x6, x7 = x.coords
    return SquareMatrix(alg.field, (
        (x0, a * x1, b * x2, -(ab * x3), c * x4, -(ac * x5), -(bc * x6), abc * x7),
        (x1, x0, b * x3, -(b * x2), c * x5, -(c * x4), bc * x7, -(bc * x6)),
        (x2, -(a * x3), x0, a * x1, c * x6, -(ac * x7), -(c * x4), ac * x5),
        (x3, -x2, x1, x0, c * x7, -(c * x6), c * x5, -(c * x4)),
        (x4, -(a * x5), -(b * x6), ab * x7, x0, a * x1, b * x2, -(ab * x3)),
        (x5, -x4, -(b * x7), b * x6, x1, x0, -(b * x3), b * x2),
        (x6, a * x7, -x4, -(a * x5), x2, a * x3, x0, -(a * x1)),
        (x7, x6, -x5, -x4, x3, x2, -x1, x0),
    ))


def _right8(x: Octonion) -> SquareMatrix:
    alg = x.algebra
    a, b, c = alg.a, alg.b, alg.c
    ab, ac, bc = a * b, a * c, b * c
    abc = ab * c
    x0, x1, x2, x3, x4, x5, x6, x7 = x.coords
    return SquareMatrix(alg.field, (
        (x0, a * x1, b * x2, -(ab * x3), c * x4, -(ac * x5), -(bc * x6), abc * x7),
        (x1, x0, -(b * x3), b * x2, -(c * x5), c * x4, -(bc * x7), bc * x6),
        (x2, a * x3, x0, -(a * x1), -(c * x6), ac * x7, c * x4, -(ac * x5)),
        (x3, x2, -x1, x0, -(c * x7), c * x6, -(c * x5), c * x4),
        (x4, a * x5, b * x6, -(ab * x7), x0, -(a * x1), -(b * x2), ab * x3),
        (x5, x4, b * x7, -(b * x6), -x1, x0, b * x3, -(b * x2)),
        (x6, -(a * x7), x4, a * x5, -x2, -(a * x3), x0, a * x1),
        (x7, -x6, x5, x4, -x3, -x2, x1, x0),
    ))


def left_rep(x: AlgebraElement) -> SquareMatrix:
    """Matrix of y -> x y in the standard basis (4x4 or 8x8)."""
    if isinstance(x, Quaternion):
        return _left4(x)
    if isinstance(x, Octonion):
        return _left8(x)
    raise TypeError(f"no representation for {type(x).__name__}")


def right_rep(x: AlgebraElement) -> SquareMatrix:
    """Matrix of y -> y x in the standard basis (4x4 or 8x8)."""
    if isinstance(x, Quaternion):
        return _right4(x)
    if isinstance(x, Octonion):
        return _right8(x)
    raise TypeError(f"no representation for {type(x).__name__}")


def _conjugation_signs(field: Field) -> SquareMatrix:
    # the 4x4 matrix of quaternion conjugation: diag(1, -1, -1, -1)
    one, zero = field.one, field.zero
    return SquareMatrix(field, (
        (one, zero, zero, zero),
        (zero, -one, zero, zero),
        (zero, zero, -one, zero),
        (zero, zero, zero, -one),
    ))


@dataclass(frozen=True)
class BlockCheckReport:
    """Entrywise comparison of block assemblies against the explicit 8x8 maps.

    "classical" uses the fixed-sign block formulas that are only valid when
    the doubling parameter is -1 (and, for the right map, with the mixed-up
    lower-left block as classically quoted); "parametric" carries the
    doubling parameter and the corrected blocks.  Disagreement is data, not
    an error.
    """

    left_classical_mismatches: tuple
    right_classical_mismatches: tuple
    left_parametric_mismatches: tuple
    right_parametric_mismatches: tuple

    @property
    def left_classical_agrees(self) -> bool:
        return not self.left_classical_mismatches

    @property
    def right_classical_agrees(self) -> bool:
        return not self.right_classical_mismatches

    @property
    def left_parametric_agrees(self) -> bool:
        return not self.left_parametric_mismatches

    @property
    def right_parametric_agrees(self) -> bool:
        return not self.right_parametric_mismatches


def _mismatches(m1: SquareMatrix, m2: SquareMatrix) -> tuple:
    return tuple(
        (i, j)
        for i in range(m1.order)
        for j in range(m1.order)
        if m1.rows[i][j] != m2.rows[i][j]
    )


def block_check(x: Octonion) -> BlockCheckReport:
    """Compare block-assembled 8x8 representations with the explicit ones."""
    alg = x.algebra
    field = alg.field
    sign = _conjugation_signs(field)
    xp, xpp = x.split_pair()
    c = alg.c

    lp, rp = _left4(xp), _right4(xp)
    lpp, rpp = _left4(xpp), _right4(xpp)
    lpp_conj = _left4(xpp.conjugate())
    rp_conj = _right4(xp.conjugate())

    left_classical = SquareMatrix.from_blocks(lp, -(rpp * sign), lpp * sign, rp)
    left_parametric = SquareMatrix.from_blocks(lp, (rpp * sign).scale(c), lpp * sign, rp)
    right_classical = SquareMatrix.from_blocks(rp, -lpp_conj, lp, rp_conj)
    right_parametric = SquareMatrix.from_blocks(rp, lpp_conj.scale(c), lpp, rp_conj)

    explicit_left = _left8(x)
    explicit_right = _right8(x)
    return BlockCheckReport(
        left_classical_mismatches=_mismatches(left_classical, explicit_left),
        right_classical_mismatches=_mismatches(right_classical, explicit_right),
        left_parametric_mismatches=_mismatches(left_parametric, explicit_left),
        right_parametric_mismatches=_mismatches(right_parametric, explicit_right),
    )
