"""Exact integer lattice algebra and formal logarithms of rationals.

Everything here is pure Python on ``int`` and ``fractions.Fraction``; no
floating point enters a computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, log
from typing import Iterable, Mapping, Sequence

Rational = int | Fraction


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored row-major.

    ``ncols`` is kept explicitly so that matrices with zero rows still have
    a width.
    """

    rows: tuple[tuple[int, ...], ...]
    ncols: int

    def __post_init__(self):
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("ragged matrix")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], ncols: int | None = None) -> IntMatrix:
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("cannot infer the width of an empty matrix")
            ncols = len(rows[0])
        return cls(rows, ncols)

    @classmethod
    def from_columns(cls, cols: Iterable[Iterable[int]], nrows: int | None = None) -> IntMatrix:
        cols = [tuple(int(x) for x in c) for c in cols]
        if nrows is None:
            if not cols:
                raise ValueError("cannot infer the height of an empty matrix")
            nrows = len(cols[0])
        if any(len(c) != nrows for c in cols):
            raise ValueError("ragged matrix")
        return cls(tuple(tuple(c[i] for c in cols) for i in range(nrows)), len(cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(tuple(self.columns()), self.nrows)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.columns()
        return IntMatrix(
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows),
            other.ncols,
        )

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)


def dot(u: Sequence[Rational], v: Sequence[Rational]):
    return sum(a * b for a, b in zip(u, v))


# ---------------------------------------------------------------------------
# Smith normal form


def _swap_rows(A, i, j):
    A[i], A[j] = A[j], A[i]


def _swap_cols(A, i, j):
    for r in A:
        r[i], r[j] = r[j], r[i]


def _add_row(A, dst, src, q):
    # row_dst += q * row_src
    if q:
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]


def _add_col(A, dst, src, q):
    if q:
        for r in A:
            r[dst] += q * r[src]


def smith_normal_form(M: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(S, U, V)`` with ``U @ M @ V == S`` and ``U``, ``V`` unimodular.

    ``S`` is diagonal with nonnegative entries forming a divisibility chain.
    Pivots are chosen as the smallest nonzero magnitude in the active block,
    ties going to the first position in row-major order, so the output is
    deterministic.
    """
    m, n = M.shape
    A = [list(r) for r in M.rows]
    U = [list(r) for r in IntMatrix.identity(m).rows]
    # V is stored transposed so column operations become row operations.
    Vt = [list(r) for r in IntMatrix.identity(n).rows]

    t = 0
    while t < min(m, n):
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                a = A[i][j]
                if a and (pivot is None or abs(a) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        _swap_rows(A, t, i)
        _swap_rows(U, t, i)
        _swap_cols(A, t, j)
        _swap_rows(Vt, t, j)

        p = A[t][t]
        clean = True
        for i in range(t + 1, m):
            q = A[i][t] // p
            _add_row(A, i, t, -q)
            _add_row(U, i, t, -q)
            clean &= A[i][t] == 0
        for j in range(t + 1, n):
            q = A[t][j] // p
            _add_col(A, j, t, -q)
            _add_row(Vt, j, t, -q)
            clean &= A[t][j] == 0
        if not clean:
            # a smaller remainder now exists in row/column t; re-pivot
            continue

        bad = next(
            (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
            None,
        )
        if bad is not None:
            _add_row(A, t, bad, 1)
            _add_row(U, t, bad, 1)
            continue

        if p < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1

    S = IntMatrix.from_rows(A, n)
    return S, IntMatrix.from_rows(U, m), IntMatrix.from_rows(Vt, n).T


def invariant_factors(M: IntMatrix) -> list[int]:
    """Nonzero diagonal entries of the Smith form of ``M``."""
    S, _, _ = smith_normal_form(M)
    return [S[i, i] for i in range(min(S.shape)) if S[i, i]]


def rank(M: IntMatrix) -> int:
    return len(invariant_factors(M))


def kernel_basis(M: IntMatrix) -> IntMatrix:
    """Columns form a basis of the saturated lattice ``{v in Z^n : M v = 0}``."""
    S, _, V = smith_normal_form(M)
    r = sum(1 for i in range(min(S.shape)) if S[i, i])
    n = M.ncols
    if r == n:
        return IntMatrix(tuple(() for _ in range(n)), 0)
    return IntMatrix.from_columns([V.column(j) for j in range(r, n)], nrows=n)


def column_hermite_form(M: IntMatrix) -> IntMatrix:
    """Basis of the column lattice of ``M`` in column-echelon Hermite form.

    Returns a ``k x r`` matrix whose columns form a basis of the lattice
    spanned by the columns of ``M``; pivots are positive and the entries to
    the left of each pivot are reduced into ``[0, pivot)``.
    """
    k, n = M.shape
    A = [list(c) for c in M.columns()]  # work on columns as lists
    p = 0
    for i in range(k):
        if p == n:
            break
        while True:
            live = [c for c in range(p, n) if A[c][i]]
            if not live:
                break
            c = min(live, key=lambda c: (abs(A[c][i]), c))
            A[p], A[c] = A[c], A[p]
            done = True
            for c in range(p + 1, n):
                if A[c][i]:
                    q = A[c][i] // A[p][i]
                    A[c] = [x - q * y for x, y in zip(A[c], A[p])]
                    done &= A[c][i] == 0
            if done:
                break
        if not A[p][i]:
            continue
        if A[p][i] < 0:
            A[p] = [-x for x in A[p]]
        for c in range(p):
            q = A[c][i] // A[p][i]
            A[c] = [x - q * y for x, y in zip(A[c], A[p])]
        p += 1
    return IntMatrix.from_columns(A[:p], nrows=k)


def solve_integral(B: IntMatrix, y: Sequence[int]) -> tuple[int, ...]:
    """Solve ``B x = y`` for ``B`` of full column rank, requiring ``x`` integral."""
    k, r = B.shape
    rows = [[Fraction(B[i, j]) for j in range(r)] + [Fraction(y[i])] for i in range(k)]
    piv_row = 0
    pivots = []
    for j in range(r):
        i = next((i for i in range(piv_row, k) if rows[i][j]), None)
        if i is None:
            raise ValueError("matrix does not have full column rank")
        rows[piv_row], rows[i] = rows[i], rows[piv_row]
        pv = rows[piv_row][j]
        rows[piv_row] = [x / pv for x in rows[piv_row]]
        for i2 in range(k):
            if i2 != piv_row and rows[i2][j]:
                f = rows[i2][j]
                rows[i2] = [a - f * b for a, b in zip(rows[i2], rows[piv_row])]
        pivots.append(piv_row)
        piv_row += 1
    if any(rows[i][r] for i in range(piv_row, k)):
        raise ValueError("inconsistent system")
    x = [rows[i][r] for i in pivots]
    if any(v.denominator != 1 for v in x):
        raise ValueError("solution is not integral")
    return tuple(int(v) for v in x)


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide by the gcd and make the first nonzero entry positive."""
    g = reduce(gcd, v, 0)
    if g == 0:
        raise ValueError("zero vector has no primitive generator")
    first = next(x for x in v if x)
    if first < 0:
        g = -g
    return tuple(x // g for x in v)


# ---------------------------------------------------------------------------
# Formal logarithms


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of a positive integer by trial division."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class LogReal:
    """A real number ``q0 + sum_p q_p log(p)`` with rational ``q``'s.

    Since ``1`` and the logarithms of distinct primes are linearly
    independent over the rationals, equality is coefficientwise. Terms are
    kept sorted by prime with no zero coefficients, so dataclass equality
    and hashing are exact.
    """

    rational: Fraction = Fraction(0)
    terms: tuple[tuple[int, Fraction], ...] = ()

    @classmethod
    def make(cls, rational: Rational = 0, terms: Mapping[int, Rational] | None = None) -> LogReal:
        items = sorted((int(p), Fraction(c)) for p, c in (terms or {}).items() if c)
        return cls(Fraction(rational), tuple(items))

    @property
    def coefficients(self) -> dict[int, Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return self.rational == 0 and not self.terms

    def __add__(self, other: LogReal) -> LogReal:
        if not isinstance(other, LogReal):
            return NotImplemented
        acc = self.coefficients
        for p, c in other.terms:
            acc[p] = acc.get(p, 0) + c
        return LogReal.make(self.rational + other.rational, acc)

    def __neg__(self) -> LogReal:
        return LogReal(-self.rational, tuple((p, -c) for p, c in self.terms))

    def __sub__(self, other: LogReal) -> LogReal:
        return self + (-other)

    def scale(self, q: Rational) -> LogReal:
        q = Fraction(q)
        if q == 0:
            return LogReal()
        return LogReal(self.rational * q, tuple((p, c * q) for p, c in self.terms))

    def __mul__(self, q):
        if isinstance(q, (int, Fraction)):
            return self.scale(q)
        return NotImplemented

    __rmul__ = __mul__

    def __float__(self) -> float:
        return float(self.rational) + sum(float(c) * log(p) for p, c in self.terms)

    def __str__(self) -> str:
        parts = []
        if self.rational:
            parts.append(str(self.rational))
        for p, c in self.terms:
            parts.append(f"log({p})" if c == 1 else f"{c}*log({p})")
        return " + ".join(parts).replace("+ -", "- ") or "0"


def log_sum(values: Iterable[LogReal]) -> LogReal:
    return sum(values, LogReal())


def log_of_rational(q: Rational) -> LogReal:
    """``log(q)`` for a positive rational, as prime-log coefficients."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError(f"log_of_rational needs a positive rational, got {q}")
    terms: dict[int, int] = dict(factorize(q.numerator))
    for p, e in factorize(q.denominator).items():
        terms[p] = terms.get(p, 0) - e
    return LogReal.make(0, terms)
