"""Random weight systems for property tests and sweeps.

All generators take a ``random.Random`` and retry until the result is a
valid (surjective, zero-free) system.
"""

from __future__ import annotations

import random

from .errors import InvalidInput
from .exact import primitive
from .weights import WeightSystem

ENTRY = 3  # entries and lengths are drawn from [-ENTRY, ENTRY]


def _direction(rng: random.Random, k: int) -> tuple[int, ...]:
    while True:
        v = [rng.randint(-ENTRY, ENTRY) for _ in range(k)]
        if any(v):
            return primitive(v)


def _balanced_lengths(rng: random.Random) -> list[int]:
    """2 to 4 nonzero integers in [-3, 3] summing to zero."""
    while True:
        size = rng.randint(2, 4)
        head = [rng.choice([x for x in range(-ENTRY, ENTRY + 1) if x]) for _ in range(size - 1)]
        last = -sum(head)
        if last and abs(last) <= ENTRY:
            return head + [last]


def _try_build(weights) -> WeightSystem | None:
    try:
        return WeightSystem.from_weights(weights)
    except InvalidInput:
        return None


def random_qs_weights(rng: random.Random, k: int | None = None) -> list[tuple[int, ...]]:
    """Weights on 1 to 4 lines (at least ``k``), balanced on every line."""
    k = k or rng.randint(1, 3)
    # rank one has a single line
    nlines = 1 if k == 1 else rng.randint(k, max(k, 4))
    dirs: list[tuple[int, ...]] = []
    while len(dirs) < nlines:
        d = _direction(rng, k)
        if d not in dirs:
            dirs.append(d)
    weights = [tuple(n * x for x in d) for d in dirs for n in _balanced_lengths(rng)]
    rng.shuffle(weights)
    return weights


def random_qs_system(rng: random.Random, k: int | None = None) -> WeightSystem:
    k = k or rng.randint(1, 3)
    while True:
        ws = _try_build(random_qs_weights(rng, k))
        if ws is not None:
            return ws


def random_non_qs_cy_system(rng: random.Random, k: int | None = None) -> WeightSystem:
    """Calabi-Yau but not quasi-symmetric (requires ``k >= 2``).

    Starts from a quasi-symmetric system, changes one weight's length by one
    to unbalance its line, then restores the total with two weights on lines
    other than the unbalanced one.
    """
    k = k or rng.randint(2, 3)
    if k < 2:
        raise ValueError("in rank 1 Calabi-Yau already implies quasi-symmetric")
    while True:
        weights = random_qs_weights(rng, k)
        j = rng.randrange(len(weights))
        d = primitive(weights[j])
        step = rng.choice((-1, 1))
        bumped = tuple(a + step * b for a, b in zip(weights[j], d))
        weights[j : j + 1] = [bumped] if any(bumped) else []
        # the total is now step * d; cancel it with a + b, neither on d's line
        a = _direction(rng, k)
        a = tuple(rng.randint(1, 2) * x for x in a)
        if primitive(a) == d:
            continue
        b = tuple(-step * y - x for x, y in zip(a, d))
        weights += [a, b]
        ws = _try_build(weights)
        if ws is not None:
            return ws


def random_self_dual_system(rng: random.Random, k: int | None = None) -> WeightSystem:
    """Weights closed under negation: each drawn weight comes with its negative."""
    k = k or rng.randint(1, 3)
    while True:
        half = []
        for _ in range(rng.randint(k, k + 3)):
            d = _direction(rng, k)
            half.append(tuple(rng.choice((1, 2, 3)) * x for x in d))
        weights = half + [tuple(-x for x in w) for w in half]
        rng.shuffle(weights)
        ws = _try_build(weights)
        if ws is not None:
            return ws
