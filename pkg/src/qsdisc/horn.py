"""Horn uniformization in per-line factored form.

Coordinate ``i`` of the Horn map is ``prod_j <lambda, beta_j>^{beta_ji}``.
Grouping the weights on a line with generator ``d`` (``beta_j = n_j d``)
turns the line's contribution into ``const_i * <lambda, d>^{sigma_i}`` with
``const_i = prod n_j^{beta_ji}`` and ``sigma_i = sum beta_ji``. The map is
never expanded beyond this form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NotCalabiYau, PoleOrZero
from .exact import dot
from .weights import LineGroup, Vector, WeightSystem, is_calabi_yau, partition_lines


@dataclass(frozen=True)
class HornLine:
    direction: Vector
    constants: tuple[Fraction, ...]  # one per output coordinate
    exponents: tuple[int, ...]  # sigma, one per output coordinate


@dataclass(frozen=True)
class HornForm:
    lines: tuple[HornLine, ...]

    def is_constant(self) -> bool:
        return not any(any(h.exponents) for h in self.lines)


def horn_decompose(ws: WeightSystem, lines: Sequence[LineGroup] | None = None) -> HornForm:
    """Factor the Horn map by lines.

    ``lines`` may override the generator choice of :func:`partition_lines`
    (e.g. with some groups flipped); the result describes the same map.
    """
    if not is_calabi_yau(ws):
        raise NotCalabiYau(ws.total())
    if lines is None:
        lines = partition_lines(ws)
    W = ws.weights
    out = []
    for g in lines:
        consts, sigmas = [], []
        for i in range(ws.k):
            c = Fraction(1)
            for j, nj in zip(g.members, g.lengths):
                if W[j][i]:
                    c *= Fraction(nj) ** W[j][i]
            consts.append(c)
            sigmas.append(sum(W[j][i] for j in g.members))
        out.append(HornLine(g.direction, tuple(consts), tuple(sigmas)))
    return HornForm(tuple(out))


def horn_evaluate(ws: WeightSystem, lam: Sequence, form: HornForm | None = None) -> tuple[Fraction, ...]:
    """Exact value of the Horn map at a rational point ``lam``."""
    form = form or horn_decompose(ws)
    lam = [Fraction(x) for x in lam]
    if len(lam) != ws.k:
        raise ValueError(f"expected {ws.k} coordinates, got {len(lam)}")
    value = [Fraction(1)] * ws.k
    for h in form.lines:
        t = dot(lam, h.direction)
        if t == 0:
            raise PoleOrZero(h.direction)
        for i in range(ws.k):
            value[i] *= h.constants[i] * t ** h.exponents[i]
    return tuple(value)


def horn_is_constant(ws: WeightSystem) -> tuple[Fraction, ...] | None:
    """The constant value of the Horn map, or ``None`` if it varies.

    Decided structurally: constant iff every line exponent vanishes.
    """
    form = horn_decompose(ws)
    if not form.is_constant():
        return None
    value = [Fraction(1)] * ws.k
    for h in form.lines:
        for i in range(ws.k):
            value[i] *= h.constants[i]
    return tuple(value)


def is_component_hyperplane(ws: WeightSystem, l: Sequence[int]) -> bool:
    """Whether the component with normal ``l`` is a log-hyperplane.

    Holds iff every line not contained in ``H_l`` has balanced weights.
    """
    if not is_calabi_yau(ws):
        raise NotCalabiYau(ws.total())
    return all(
        g.is_balanced() for g in partition_lines(ws) if dot(l, g.direction) != 0
    )
