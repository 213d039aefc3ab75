"""Shared test utilities, including the naive classification oracle.

The oracle classifies by literal repeated element multiplication and is the
slow, independent route that census results are checked against.
"""

import random
from itertools import product

from kpotent import (
    OctAlgebra,
    PrimeField,
    QuadraticField,
    QuatAlgebra,
    RationalField,
    SquareMatrix,
)


def naive_potency(x, max_k=64):
    """(kind, index) from the literal definition, by repeated multiplication."""
    power = x
    for k in range(2, max_k + 1):
        power = power * x
        if power == x:
            return ("k-potent", k)
        if power.is_zero:
            return ("nilpotent", k)
    return ("none", max_k)


def naive_census(algebra, max_k=64):
    """Enumerate every element; rows shaped like the search module's output."""
    p = algebra.field.p
    census = {}
    for coords in product(range(p), repeat=algebra.dim):
        key = naive_potency(algebra.element(coords), max_k)
        entry = census.setdefault(key, [0, coords])
        entry[0] += 1
    return [
        (kind, index, count, sample)
        for (kind, index), (count, sample) in sorted(census.items())
    ]


def field_by_token(token):
    return {
        "f5": lambda: PrimeField(5),
        "f13": lambda: PrimeField(13),
        "q": RationalField,
        "q[sqrt2]": lambda: QuadraticField(2),
    }[token]()


ALL_FIELD_TOKENS = ("f5", "f13", "q", "q[sqrt2]")


def elements(algebra, seed, n):
    rng = random.Random(seed)
    return [algebra.random_element(rng) for _ in range(n)]


def element_pairs(algebra, seed, n):
    rng = random.Random(seed)
    return [
        (algebra.random_element(rng), algebra.random_element(rng)) for _ in range(n)
    ]


def element_triples(algebra, seed, n):
    rng = random.Random(seed)
    return [
        (
            algebra.random_element(rng),
            algebra.random_element(rng),
            algebra.random_element(rng),
        )
        for _ in range(n)
    ]


def matrix_from(field, rows):
    """Frozen matrix fixture: list of CSV row strings in the scalar grammar."""
    return SquareMatrix.from_csv(field, "\n".join(rows))


def quat(field, a, b):
    return QuatAlgebra(field, field.parse(a), field.parse(b))


def octo(field, a, b, c):
    return OctAlgebra(field, field.parse(a), field.parse(b), field.parse(c))
