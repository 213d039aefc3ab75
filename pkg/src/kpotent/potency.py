"""Classification of k-potent and nilpotent elements, plus the two exact
constructive generators: unit-norm rotors over ordered fields and the
norm-zero construction for split algebras.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraElement, OctAlgebra, QuatAlgebra, Quaternion
from .fields import FieldElement, NotASquareError, QuadraticField, RationalField


class GenerationError(ValueError):
    """A generator precondition failed (unsupported order, bad direction)."""


DEFAULT_MAX_K = 64

# k -> (cos(2*pi/(k-1)), sin^2(2*pi/(k-1))); exactly the angles whose
# cosine/sine pairs stay inside the supported scalar fields.
_ROTOR_ANGLES = {
    3: (Fraction(-1), Fraction(0)),
    4: (Fraction(-1, 2), Fraction(3, 4)),
    5: (Fraction(0), Fraction(1)),
    7: (Fraction(1, 2), Fraction(3, 4)),
}

SUPPORTED_ROTOR_KS = tuple(sorted(_ROTOR_ANGLES))


@dataclass(frozen=True)
class PotencyReport:
    """Outcome of classifying one element.

    kind is "k-potent" (index = smallest k > 1 with x^k = x), "nilpotent"
    (index = smallest n with x^n = 0) or "none" (index = the bound searched).
    """

    kind: str
    index: int
    trace: FieldElement
    norm: FieldElement

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "index": self.index,
            "trace": str(self.trace),
            "norm": str(self.norm),
        }

    def __str__(self):
        return f"{self.kind}(index={self.index}, trace={self.trace}, norm={self.norm})"


def _ordered_division_algebra(algebra) -> bool:
    # a = b (= c) = -1 over Q or Q(sqrt d): the norm is a sum of squares in
    # an ordered field, so a k-potent must have norm 0 or 1.
    if not isinstance(algebra.field, (RationalField, QuadraticField)):
        return False
    minus_one = -algebra.field.one
    return all(p == minus_one for p in algebra.params)


def classify(x: AlgebraElement, max_k: int = DEFAULT_MAX_K) -> PotencyReport:
    """Classify x by computing successive powers exactly.

    Zero is reported as k-potent with index 2, matching the literal
    definition (0^2 = 0); some conventions exclude it.  Over Q and Q(sqrt d)
    with all algebra parameters -1 a norm outside {0, 1} settles the answer
    immediately, since norms there are non-negative and must satisfy
    n^(k-1) = 1.
    """
    if max_k < 2:
        raise ValueError("max_k must be at least 2")
    trace, norm = x.trace(), x.norm()
    if _ordered_division_algebra(x.algebra) and not (norm.is_zero or norm.is_one):
        return PotencyReport("none", max_k, trace, norm)
    power = x
    for k in range(2, max_k + 1):
        power = power * x
        if power == x:
            return PotencyReport("k-potent", k, trace, norm)
        if power.is_zero:
            return PotencyReport("nilpotent", k, trace, norm)
    return PotencyReport("none", max_k, trace, norm)


def rotor_generate(k: int, direction, algebra: QuatAlgebra) -> Quaternion:
    """Build a k-potent unit quaternion cos(a) + sin(a) * u from a direction.

    Requires a = b = -1 over Q or Q(sqrt d) and k in SUPPORTED_ROTOR_KS,
    with a = 2*pi/(k-1).  The direction (three coordinates, not all zero)
    only fixes the axis; it is scaled so the pure part u has u^2 = -1, which
    needs sin(a)^2 / |direction|^2 to be a square in the field.
    """
    if k not in _ROTOR_ANGLES:
        supported = ", ".join(str(v) for v in SUPPORTED_ROTOR_KS)
        raise GenerationError(f"unsupported k={k}; supported k: {supported}")
    if not isinstance(algebra, QuatAlgebra) or not _ordered_division_algebra(algebra):
        raise GenerationError(
            "rotor generation needs a quaternion algebra with a = b = -1 "
            "over Q or Q(sqrt d)"
        )
    field = algebra.field
    direction = tuple(field.element(d) for d in direction)
    if len(direction) != 3:
        raise GenerationError("direction must have exactly 3 coordinates")
    if all(d.is_zero for d in direction):
        raise GenerationError("direction must be nonzero")
    cos_a, sin_sq = _ROTOR_ANGLES[k]
    length_sq = sum((d * d for d in direction), field.zero)
    try:
        scale = (field.element(sin_sq) / length_sq).sqrt()
    except NotASquareError:
        raise GenerationError("direction not normalizable in field") from None
    return algebra.element((field.element(cos_a),) + tuple(scale * d for d in direction))


def demoivre_power_check(algebra: QuatAlgebra, cos_coord, pure_coords, n: int) -> bool:
    """Check that powers of x = cos + pure follow the angle-addition rule.

    Both cos(m a) and sin(m a)/sin(a) obey the recursion
    v(m+1) = 2 cos(a) v(m) - v(m-1); the check compares x^m computed by
    repeated multiplication with cos(m a) + (sin(m a)/sin(a)) * pure for
    every m <= n and reports whether they all agree.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    field = algebra.field
    cos_a = field.element(cos_coord)
    pure = tuple(field.element(p) for p in pure_coords)
    if len(pure) != 3:
        raise ValueError("pure part must have exactly 3 coordinates")
    x = algebra.element((cos_a,) + pure)
    two = field.element(2)
    cos_prev, ratio_prev = field.one, field.zero     # m = 0
    cos_cur, ratio_cur = cos_a, field.one            # m = 1
    power = x
    for m in range(2, n + 1):
        power = power * x
        cos_cur, cos_prev = two * cos_a * cos_cur - cos_prev, cos_cur
        ratio_cur, ratio_prev = two * cos_a * ratio_cur - ratio_prev, ratio_cur
        expected = algebra.element((cos_cur,) + tuple(ratio_cur * p for p in pure))
        if power != expected:
            return False
    return True


def _pure_norm(algebra, direction):
    # norm of the purely imaginary element with the given coordinates
    return algebra.element((0,) + tuple(direction)).norm()


def split_generate(kind: str, algebra, direction) -> AlgebraElement:
    """Build an idempotent, tripotent or nilpotent element from a direction.

    For idempotent/tripotent the direction v is scaled by
    sqrt(-1 / (4 n(v))) so the result x = (+-1/2) + lambda v has norm 0 and
    trace +-1, hence x^2 = x or x^3 = x.  For nilpotent the direction must
    itself have norm 0 and is returned unscaled.  Works over any supported
    field whenever the required square root exists; in a division algebra
    no valid direction exists and an error is raised.
    """
    if not isinstance(algebra, (QuatAlgebra, OctAlgebra)):
        raise GenerationError("split generation needs a quaternion or octonion algebra")
    field = algebra.field
    direction = tuple(field.element(d) for d in direction)
    if len(direction) != algebra.dim - 1:
        raise GenerationError(
            f"direction must have {algebra.dim - 1} coordinates for {algebra}"
        )
    pure_norm = _pure_norm(algebra, direction)

    if kind == "nilpotent":
        if all(d.is_zero for d in direction):
            raise GenerationError("direction must be nonzero")
        if not pure_norm.is_zero:
            raise GenerationError(
                f"nilpotent generation needs a norm-zero direction, got norm {pure_norm}"
            )
        return algebra.element((0,) + direction)

    if kind not in ("idempotent", "tripotent"):
        raise GenerationError(f"unknown kind {kind!r}")
    if pure_norm.is_zero:
        raise GenerationError("direction not normalizable in field")
    try:
        lam = (-(field.element(4) * pure_norm).inv()).sqrt()
    except NotASquareError:
        raise GenerationError("direction not normalizable in field") from None
    half = field.one / field.element(2)
    head = half if kind == "idempotent" else -half
    return algebra.element((head,) + tuple(lam * d for d in direction))
