"""Discriminant and zonotope hyperplane arrangements, and their comparison.

Both arrangements are unions of families ``{y in C^k : <l, y> in alpha + Z}``.
An offset ``alpha`` is stored as an exact real part in ``[0, 1)`` and an
imaginary part ``imag / (2 pi)`` where ``imag`` is a :class:`LogReal`; the
common ``1 / (2 pi)`` is left implicit everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import pi
from typing import Sequence

from .circuits import circuit_constant, enumerate_circuit_normals
from .errors import NotQuasiSymmetric, UnmatchedNormal
from .exact import LogReal, dot, log_of_rational, log_sum, primitive
from .weights import Vector, WeightSystem, is_quasi_symmetric, partition_lines

EQUAL_AFTER_SHIFT = "EqualAfterShift"
COUNTEREXAMPLE = "Counterexample"


@dataclass(frozen=True)
class Offset:
    real: Fraction
    imag: LogReal = LogReal()

    def __post_init__(self):
        object.__setattr__(self, "real", Fraction(self.real) % 1)

    def __neg__(self) -> Offset:
        return Offset(-self.real, -self.imag)

    def shifted(self, imag: LogReal) -> Offset:
        return Offset(self.real, self.imag + imag)

    def approx(self) -> complex:
        return complex(float(self.real), float(self.imag) / (2 * pi))

    def __str__(self) -> str:
        if self.imag.is_zero():
            return str(self.real)
        return f"{self.real} + i*({self.imag})/(2pi)"


@dataclass(frozen=True)
class HyperplaneFamily:
    normal: Vector
    offset: Offset

    @classmethod
    def canonical(cls, normal: Sequence[int], offset: Offset) -> HyperplaneFamily:
        """Normalize so the first nonzero entry of the normal is positive."""
        normal = tuple(normal)
        p = primitive(normal)
        if p != normal and tuple(-x for x in p) != normal:
            raise ValueError(f"normal {normal} is not primitive")
        return cls(p, offset if p == normal else -offset)

    def contains(self, y: Sequence, n: int = 0) -> bool:
        """Whether a point with real coordinates lies on the ``n``-th member."""
        return self.offset.imag.is_zero() and dot(self.normal, y) == self.offset.real + n


@dataclass(frozen=True)
class Arrangement:
    families: tuple[HyperplaneFamily, ...]

    @classmethod
    def of(cls, families) -> Arrangement:
        uniq = {}
        for f in families:
            uniq[(f.normal, f.offset)] = f
        return cls(tuple(uniq[key] for key in sorted(uniq, key=_family_key)))

    def normals(self) -> list[Vector]:
        return [f.normal for f in self.families]

    def family(self, normal: Sequence[int]) -> HyperplaneFamily:
        return next(f for f in self.families if f.normal == tuple(normal))


def _family_key(key):
    normal, off = key
    return (normal, off.real, off.imag.rational, off.imag.terms)


@dataclass(frozen=True)
class ShiftVector:
    """Real vector ``z`` (in units of ``1 / (2 pi)``); the translation is ``i z``."""

    coords: tuple[LogReal, ...]

    def pair(self, l: Sequence[int]) -> LogReal:
        return log_sum(c.scale(x) for x, c in zip(l, self.coords))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)


def _require_qs(ws: WeightSystem) -> None:
    v = is_quasi_symmetric(ws)
    if not v:
        raise NotQuasiSymmetric(v.witness)


def log_br(c) -> Offset:
    """Branch ``log(c) / (2 pi i)`` with argument in ``[0, 2 pi)``."""
    c = Fraction(c)
    if c == 0:
        raise ValueError("log_br of zero")
    return Offset(Fraction(0) if c > 0 else Fraction(1, 2), -log_of_rational(abs(c)))


def discriminant_arrangement(ws: WeightSystem) -> Arrangement:
    _require_qs(ws)
    return Arrangement.of(
        HyperplaneFamily(l, log_br(circuit_constant(ws, l)))
        for l in enumerate_circuit_normals(ws)
    )


# ---------------------------------------------------------------------------
# Zonotope side


def support_eta(ws: WeightSystem, l: Sequence[int]) -> int:
    """Support function of the zonotope ``sum_j [-beta_j, 0]`` at ``l``."""
    return sum(max(0, -dot(l, w)) for w in ws.weights)


def _det(rows: list[list[int]]) -> int:
    # Bareiss fraction-free elimination
    n = len(rows)
    if n == 0:
        return 1
    A = [list(r) for r in rows]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def _cofactor_normal(vectors: Sequence[Sequence[int]], k: int) -> tuple[int, ...]:
    """Generalized cross product of ``k - 1`` vectors in ``Z^k``."""
    return tuple(
        (-1) ** i * _det([[v[c] for c in range(k) if c != i] for v in vectors])
        for i in range(k)
    )


def _rational_rank(vectors: Sequence[Sequence[int]]) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, len(rows)):
            f = rows[i][c] / rows[r][c]
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def hls_facet_normals(ws: WeightSystem) -> list[Vector]:
    """Facet normals of the zonotope, one per opposite pair, sorted.

    A direction ``l`` gives a facet exactly when the segments ``[-beta_j, 0]``
    with ``<l, beta_j> = 0`` sum to a ``(k-1)``-dimensional face.
    """
    _require_qs(ws)
    k = ws.k
    gens = sorted({primitive(w) for w in ws.weights})
    found = set()
    for sub in combinations(gens, k - 1):
        l = _cofactor_normal(sub, k)
        if not any(l):
            continue
        l = primitive(l)
        face = [w for w in ws.weights if dot(l, w) == 0]
        if _rational_rank(face) == k - 1:
            found.add(l)
    return sorted(found)


def hls_offset(ws: WeightSystem, l: Sequence[int]) -> Fraction:
    """Offset ``c_F`` of the facet hyperplane ``<l, y> = c_F`` of ``F_+``."""
    return Fraction(sum(max(0, dot(l, w)) for w in ws.weights), 2)


def hls_arrangement(ws: WeightSystem) -> Arrangement:
    return Arrangement.of(
        HyperplaneFamily(l, Offset(hls_offset(ws, l))) for l in hls_facet_normals(ws)
    )


def lattice_lengths(ws: WeightSystem) -> list[int]:
    lengths = [0] * ws.n
    for g in partition_lines(ws):
        for j, nj in zip(g.members, g.lengths):
            lengths[j] = nj
    return lengths


def shift_vector(ws: WeightSystem) -> ShiftVector:
    """``z = -sum_j log|n_j| beta_j`` (times the implicit ``1 / (2 pi)``)."""
    _require_qs(ws)
    logs = [log_of_rational(abs(nj)) for nj in lattice_lengths(ws)]
    return ShiftVector(
        tuple(-log_sum(lg.scale(w[i]) for lg, w in zip(logs, ws.weights)) for i in range(ws.k))
    )


# ---------------------------------------------------------------------------
# Comparison


@dataclass(frozen=True)
class FamilyMatch:
    normal: Vector
    circuit_constant: Fraction
    hls_offset: Fraction
    discriminant: Offset
    hls_shifted: Offset
    real_ok: bool
    imag_ok: bool
    log_identity_ok: bool

    @property
    def ok(self) -> bool:
        return self.real_ok and self.imag_ok and self.log_identity_ok


@dataclass(frozen=True)
class ComparisonReport:
    verdict: str
    shift: ShiftVector
    matches: tuple[FamilyMatch, ...]
    counterexample: FamilyMatch | None = None


def compare_arrangements(ws: WeightSystem) -> ComparisonReport:
    """Check that the discriminant arrangement is the zonotope one shifted by ``i z``."""
    disc = discriminant_arrangement(ws)
    hls = hls_arrangement(ws)
    if disc.normals() != hls.normals():
        raise UnmatchedNormal(f"circuit normals {disc.normals()} != facet normals {hls.normals()}")
    z = shift_vector(ws)
    lengths = lattice_lengths(ws)
    matches = []
    for fam in hls.families:
        l = fam.normal
        c = circuit_constant(ws, l)
        cf = hls_offset(ws, l)
        d = disc.family(l).offset
        moved = fam.offset.shifted(z.pair(l))
        rhs = log_sum(log_of_rational(abs(nj)).scale(dot(l, w)) for nj, w in zip(lengths, ws.weights))
        matches.append(
            FamilyMatch(
                normal=l,
                circuit_constant=c,
                hls_offset=cf,
                discriminant=d,
                hls_shifted=moved,
                real_ok=(c > 0) == (cf.denominator == 1) and d.real == moved.real,
                imag_ok=d.imag == moved.imag,
                log_identity_ok=log_of_rational(abs(c)) == rhs,
            )
        )
    bad = next((m for m in matches if not m.ok), None)
    return ComparisonReport(
        COUNTEREXAMPLE if bad else EQUAL_AFTER_SHIFT, z, tuple(matches), bad
    )

