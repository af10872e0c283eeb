"""Circuit normals of a quasi-symmetric weight system and their constants.

A circuit normal is a primitive ``l`` in ``Z^k`` whose hyperplane
``H_l = {y : <l, y> = 0}`` is spanned by the weights lying on it. For each one
the discriminant component is the log-hyperplane ``x^l = c`` with
``c = prod_j m_j^{m_j}`` over the nonzero pairings ``m_j = <l, beta_j>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import AllZeroExponents, NotQuasiSymmetric
from .exact import IntMatrix, dot, kernel_basis, primitive, rank
from .weights import Vector, WeightSystem, is_quasi_symmetric, partition_lines


@dataclass(frozen=True)
class Circuit:
    normal: Vector
    exponents: tuple[int, ...]
    constant: Fraction


def _require_qs(ws: WeightSystem) -> None:
    v = is_quasi_symmetric(ws)
    if not v:
        raise NotQuasiSymmetric(v.witness)


def _spans_hyperplane(ws: WeightSystem, l: Vector) -> bool:
    on = [w for w in ws.weights if dot(l, w) == 0]
    r = rank(IntMatrix.from_columns(on, nrows=ws.k)) if on else 0
    return r == ws.k - 1


def enumerate_circuit_normals(ws: WeightSystem) -> list[Vector]:
    """All sign-normalized circuit normals, sorted lexicographically."""
    _require_qs(ws)
    if ws.k == 1:
        return [(1,)]
    # one representative per line; proportional weights span the same thing
    dirs = [g.direction for g in partition_lines(ws)]
    normals = set()
    for subset in combinations(dirs, ws.k - 1):
        M = IntMatrix.from_rows(subset)  # (k-1) x k, rows are weights
        K = kernel_basis(M)
        if K.ncols != 1:
            continue
        normals.add(primitive(K.column(0)))
    return sorted(l for l in normals if _spans_hyperplane(ws, l))


def circuit_exponents(ws: WeightSystem, l: Sequence[int]) -> tuple[int, ...]:
    return tuple(dot(l, w) for w in ws.weights)


def _power_product(bases, exponents) -> Fraction:
    c = Fraction(1)
    for b, e in zip(bases, exponents):
        if e:
            c *= Fraction(b) ** e
    return c


def circuit_constant(ws: WeightSystem, l: Sequence[int]) -> Fraction:
    """``prod m_j^{m_j}`` over the nonzero pairings ``m_j = <l, beta_j>``."""
    m = circuit_exponents(ws, l)
    if not any(m):
        raise AllZeroExponents(f"AllZeroExponents: {tuple(l)} pairs to zero with every weight")
    return _power_product(m, m)


def circuit_constant_via_lengths(ws: WeightSystem, l: Sequence[int]) -> Fraction:
    """``prod n_j^{<l, beta_j>}`` with ``n_j`` the signed lattice lengths.

    Agrees with :func:`circuit_constant` for quasi-symmetric systems: on each
    line the factor ``<l, line generator>`` appears with total exponent zero.
    """
    _require_qs(ws)
    lengths = [0] * ws.n
    for g in partition_lines(ws):
        for j, nj in zip(g.members, g.lengths):
            lengths[j] = nj
    return _power_product(lengths, circuit_exponents(ws, l))


def circuits(ws: WeightSystem) -> list[Circuit]:
    return [
        Circuit(l, circuit_exponents(ws, l), circuit_constant(ws, l))
        for l in enumerate_circuit_normals(ws)
    ]
