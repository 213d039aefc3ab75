"""Exhaustive and sampled censuses of potency classes over Z/p coefficients,
plus the norm-zero witness scan that separates split from division algebras.

Census classification never multiplies full elements: in a quadratic
algebra x^2 = t(x) x - n(x), so the powers of a non-scalar x live in the
plane spanned by 1 and x, and x^m = u + v x follows the two-term recursion
(u, v) -> (-n v, u + t v).  The element-level classifier in
:mod:`kpotent.potency` is the independent slow route used to validate this.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from itertools import product

from .fields import PrimeField
from .potency import DEFAULT_MAX_K
from .rng import SplitMix64

EXHAUSTIVE_BUDGET = 10 ** 8


class SearchBudgetError(ValueError):
    """The exhaustive coordinate space is too large; use sampling."""


@dataclass(frozen=True)
class CensusRow:
    """One classification class: its population and the smallest member."""

    kind: str
    index: int
    count: int
    sample: tuple

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "index": self.index,
            "count": self.count,
            "sample": ",".join(str(c) for c in self.sample),
        }


def _require_prime_field(algebra) -> PrimeField:
    if not isinstance(algebra.field, PrimeField):
        raise ValueError(f"search runs over prime fields only, not {algebra.field}")
    return algebra.field


def _raw_classifier(algebra, max_k: int):
    """Classify raw residue tuples via the quadratic-plane power recursion."""
    p = algebra.field.p
    norm_coeffs = algebra._norm_raw

    def classify_raw(coords):
        scalar = coords[0]
        if all(c == 0 for c in coords[1:]):
            if scalar == 0:
                return ("k-potent", 2)
            pw = scalar
            for k in range(2, max_k + 1):
                pw = pw * scalar % p
                if pw == scalar:
                    return ("k-potent", k)
            return ("none", max_k)
        t = 2 * scalar % p
        n = 0
        for w, c in zip(norm_coeffs, coords):
            n = (n + w * c * c) % p
        u, v = 0, 1   # x^1 = 0 + 1*x
        for k in range(2, max_k + 1):
            u, v = -n * v % p, (u + t * v) % p
            if u == 0:
                if v == 1:
                    return ("k-potent", k)
                if v == 0:
                    return ("nilpotent", k)
        return ("none", max_k)

    return classify_raw


def _merge(census: dict, key, count: int, sample) -> None:
    entry = census.get(key)
    if entry is None:
        census[key] = [count, sample]
    else:
        entry[0] += count
        if sample < entry[1]:
            entry[1] = sample


def _rows(census: dict) -> list:
    return [
        CensusRow(kind=k[0], index=k[1], count=v[0], sample=tuple(v[1]))
        for k, v in sorted(census.items())
    ]


def search_exhaustive(algebra, max_k: int = DEFAULT_MAX_K) -> list:
    """Classify every coordinate tuple; rows sorted by (kind, index).

    The traversal is partitioned by leading coordinate and merged
    commutatively, so the result is independent of traversal order; each
    row's sample is the lexicographically smallest member of its class.
    """
    field = _require_prime_field(algebra)
    p, dim = field.p, algebra.dim
    if p ** dim > EXHAUSTIVE_BUDGET:
        raise SearchBudgetError(
            f"p^{dim} = {p ** dim} exceeds the exhaustive budget "
            f"{EXHAUSTIVE_BUDGET}; use search_sample"
        )
    census: dict = {}
    for head in range(p):
        _merge_prefix_census(census, algebra, head, max_k)
    return _rows(census)


def _merge_prefix_census(census: dict, algebra, head: int, max_k: int) -> None:
    classify_raw = _raw_classifier(algebra, max_k)
    p, dim = algebra.field.p, algebra.dim
    for tail in product(range(p), repeat=dim - 1):
        coords = (head,) + tail
        _merge(census, classify_raw(coords), 1, coords)


def search_sample(algebra, budget: int, seed: int, max_k: int = DEFAULT_MAX_K) -> list:
    """Classify `budget` draws from the SplitMix64 stream for `seed`.

    Coordinates are drawn most-significant first, one bounded draw each.
    The same seed always yields the same census; per-row samples are the
    lexicographically smallest elements drawn for that row.
    """
    field = _require_prime_field(algebra)
    if budget < 1:
        raise ValueError("budget must be at least 1")
    p, dim = field.p, algebra.dim
    classify_raw = _raw_classifier(algebra, max_k)
    gen = SplitMix64(seed)
    census: dict = {}
    for _ in range(budget):
        coords = tuple(gen.below(p) for _ in range(dim))
        _merge(census, classify_raw(coords), 1, coords)
    return _rows(census)


def split_witness(algebra):
    """The lexicographically first nonzero element of norm zero, or None.

    A witness certifies the algebra is split; None certifies it is a
    division algebra.  The scan evaluates the norm form over the whole
    coordinate space, so the same budget as exhaustive search applies.
    """
    field = _require_prime_field(algebra)
    p, dim = field.p, algebra.dim
    if p ** dim > EXHAUSTIVE_BUDGET:
        raise SearchBudgetError(
            f"p^{dim} = {p ** dim} exceeds the witness-scan budget {EXHAUSTIVE_BUDGET}"
        )
    norm_coeffs = algebra._norm_raw
    squares = [[w * c * c % p for c in range(p)] for w in norm_coeffs]
    for coords in product(range(p), repeat=dim):
        total = 0
        for sq, c in zip(squares, coords):
            total += sq[c]
        if total % p == 0 and any(coords):
            return algebra.element(coords)
    return None


def census_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["kind", "index", "count", "sample"])
    for row in rows:
        d = row.as_dict()
        writer.writerow([d["kind"], d["index"], d["count"], d["sample"]])
    return buf.getvalue()


def census_to_json(rows) -> str:
    return json.dumps([row.as_dict() for row in rows])
