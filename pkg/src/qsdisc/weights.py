"""Weight systems of torus representations and their basic predicates.

A weight system is a ``k x n`` integer matrix ``Q`` whose ``j``-th column is
the weight ``beta_j`` in ``Z^k``.
"""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InvalidInput, NotSurjective, SpanFailure, ZeroWeight
from .exact import (
    IntMatrix,
    column_hermite_form,
    dot,
    invariant_factors,
    kernel_basis,
    primitive,
    rank,
    solve_integral,
)

Vector = tuple[int, ...]


@dataclass(frozen=True)
class WeightSystem:
    Q: IntMatrix

    @property
    def k(self) -> int:
        return self.Q.nrows

    @property
    def n(self) -> int:
        return self.Q.ncols

    @property
    def weights(self) -> list[Vector]:
        return self.Q.columns()

    def total(self) -> Vector:
        return tuple(sum(r) for r in self.Q.rows)

    @classmethod
    def from_weights(cls, weights: Sequence[Sequence[int]]) -> WeightSystem:
        """Validate a list of weight vectors (the columns of ``Q``)."""
        return validate(_columns_to_rows(weights))

    def __str__(self) -> str:
        return " ".join(str(w) for w in self.weights)


@dataclass(frozen=True)
class LineGroup:
    direction: Vector
    members: tuple[int, ...]
    lengths: tuple[int, ...]

    @property
    def line_sum(self) -> Vector:
        s = sum(self.lengths)
        return tuple(s * x for x in self.direction)

    def is_balanced(self) -> bool:
        return sum(self.lengths) == 0

    def flipped(self) -> LineGroup:
        """Same line described with the opposite generator."""
        return LineGroup(
            tuple(-x for x in self.direction),
            self.members,
            tuple(-x for x in self.lengths),
        )


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: Vector | None = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class RayData:
    rays: IntMatrix  # (n - k) x n, column i is the ray omega_i
    cy_witness: Vector | None
    warnings: tuple[str, ...] = field(default=())


def _columns_to_rows(weights: Sequence[Sequence[int]]) -> list[list[int]]:
    weights = [list(w) for w in weights]
    if not weights:
        raise InvalidInput("no weights given")
    k = len(weights[0])
    if k == 0 or any(len(w) != k for w in weights):
        raise InvalidInput("weights must all have the same positive length")
    return [[w[i] for w in weights] for i in range(k)]


def _as_matrix(raw) -> IntMatrix:
    if isinstance(raw, IntMatrix):
        return raw
    rows = [list(r) for r in raw]
    if not rows or not rows[0]:
        raise InvalidInput("weight matrix must have k >= 1 rows and n >= 1 columns")
    if any(len(r) != len(rows[0]) for r in rows):
        raise InvalidInput("weight matrix is not rectangular")
    for r in rows:
        for x in r:
            if isinstance(x, bool) or not isinstance(x, int):
                raise InvalidInput(f"non-integer entry {x!r}")
    return IntMatrix.from_rows(rows)


def validate(raw) -> WeightSystem:
    """Check a ``k x n`` matrix (list of rows) and wrap it as a WeightSystem."""
    Q = _as_matrix(raw)
    if Q.nrows < 1 or Q.ncols < 1:
        raise InvalidInput("weight matrix must have k >= 1 rows and n >= 1 columns")
    for j, col in enumerate(Q.columns()):
        if not any(col):
            raise ZeroWeight(j + 1)
    factors = invariant_factors(Q)
    if len(factors) < Q.nrows or any(d != 1 for d in factors):
        raise NotSurjective(factors + [0] * (Q.nrows - len(factors)))
    return WeightSystem(Q)


def reduce_to_image(raw) -> tuple[WeightSystem, IntMatrix]:
    """Rewrite the weights in a basis of the lattice they generate.

    Returns ``(ws, B)`` with ``raw == B @ ws.Q``; the columns of ``B`` are the
    Hermite basis of the image lattice. A surjective input comes back
    unchanged with ``B`` the identity.
    """
    Q = _as_matrix(raw)
    if Q.is_zero():
        raise InvalidInput("all-zero weight matrix")
    B = column_hermite_form(Q)
    cols = [solve_integral(B, c) for c in Q.columns()]
    return validate(IntMatrix.from_columns(cols, nrows=B.ncols)), B


def partition_lines(ws: WeightSystem) -> list[LineGroup]:
    """Group weights by the line through the origin they span.

    Groups are ordered by their first member; each direction is the
    sign-normalized primitive generator.
    """
    found: dict[Vector, tuple[list[int], list[int]]] = {}
    for j, w in enumerate(ws.weights):
        d = primitive(w)
        nz = next(i for i, x in enumerate(d) if x)
        members, lengths = found.setdefault(d, ([], []))
        members.append(j)
        lengths.append(w[nz] // d[nz])
    return [LineGroup(d, tuple(m), tuple(l)) for d, (m, l) in found.items()]


def is_calabi_yau(ws: WeightSystem) -> bool:
    return not any(ws.total())


def is_quasi_symmetric(ws: WeightSystem) -> Verdict:
    for g in partition_lines(ws):
        if not g.is_balanced():
            return Verdict(False, g.direction)
    return Verdict(True)


def is_self_dual(ws: WeightSystem) -> bool:
    counts = Counter(ws.weights)
    return all(counts[tuple(-x for x in w)] == c for w, c in counts.items())


def ray_data(ws: WeightSystem) -> RayData:
    """Rays ``omega_i`` (rows of a kernel basis of ``Q``) and the CY covector.

    When the system is Calabi-Yau the all-ones covector lies in ``ker Q``;
    ``cy_witness`` is its coordinate vector ``m`` in the kernel basis, so that
    ``<m, omega_i> = 1`` for every ray.
    """
    K = kernel_basis(ws.Q)
    rays = K.T
    notes = []
    cols = rays.columns()
    dup = [w for w, c in Counter(cols).items() if c > 1]
    if dup:
        notes.append(f"rays are not pairwise distinct: {sorted(dup)} repeated")
        warnings.warn(notes[-1], stacklevel=2)
    witness = None
    if is_calabi_yau(ws) and K.ncols:
        witness = solve_integral(K, [1] * ws.n)
    return RayData(rays, witness, tuple(notes))


def restrict_to_circuit(ws: WeightSystem, l: Sequence[int]) -> WeightSystem:
    """Rank-one system of pairings ``<l, beta_j>`` over weights off ``H_l``."""
    l = tuple(l)
    if primitive(l) not in (l, tuple(-x for x in l)):
        raise ValueError(f"{l} is not primitive")
    on = [w for w in ws.weights if dot(l, w) == 0]
    if (rank(IntMatrix.from_columns(on, nrows=ws.k)) if on else 0) != ws.k - 1:
        raise SpanFailure(f"SpanFailure: the weights on the hyperplane <{l}, y> = 0 do not span it")
    exps = [dot(l, w) for w in ws.weights]
    return validate([[m for m in exps if m]])
