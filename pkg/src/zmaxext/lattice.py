"""Exact integer linear algebra for exponent lattices.

Matrices here represent homomorphisms Z^cols -> Z^rows acting on column
vectors. All arithmetic is on Python ints, so there is no overflow and no
floating point.
"""

from dataclasses import dataclass
from itertools import product
from math import gcd, prod
from typing import Iterable, Iterator, Sequence

from .errors import DimensionMismatch, NonInjectiveEmbedding

Vector = tuple[int, ...]


class _Infinite:
    """Order of an infinite group; a singleton."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"

    def __str__(self):
        return "infinite"

    def __reduce__(self):
        return (_Infinite, ())


INFINITE = _Infinite()


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatch(f"entries do not form a {self.rows}x{self.cols} matrix")
        for r in self.entries:
            for a in r:
                if not isinstance(a, int) or isinstance(a, bool):
                    raise TypeError(f"matrix entries must be int, got {a!r}")

    @classmethod
    def of(cls, data: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = tuple(tuple(r) for r in data)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, rows)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> "IntMatrix":
        return cls(rows, len(columns), tuple(tuple(c[i] for c in columns) for i in range(rows)))

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else ((),) * self.cols)

    def apply(self, x: Sequence[int]) -> Vector:
        if len(x) != self.cols:
            raise DimensionMismatch(f"vector of length {len(x)} for matrix with {self.cols} columns")
        return tuple(sum(a * b for a, b in zip(r, x)) for r in self.entries)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        ocols = other.columns()
        return IntMatrix(
            self.rows,
            other.cols,
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in ocols) for r in self.entries),
        )


def determinant(A: IntMatrix) -> int:
    """Fraction-free (Bareiss) determinant."""
    if A.rows != A.cols:
        raise DimensionMismatch("determinant of a non-square matrix")
    n = A.rows
    if n == 0:
        return 1
    M = A.tolist()
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def smith_normal_form(A: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(U, D, V)`` with ``U @ A @ V == D``.

    U and V are unimodular, D is diagonal with nonnegative entries
    d_1 | d_2 | ... and all zero diagonal entries last. The pivot at each step
    is the entry of smallest nonzero absolute value in the remaining block,
    ties broken row-major, so the output is a function of the input.
    """
    m, n = A.rows, A.cols
    D = A.tolist()
    U = IntMatrix.identity(m).tolist()
    V = IntMatrix.identity(n).tolist()

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for r in M:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        for M in (D, U):
            rs, rd = M[src], M[dst]
            for c in range(len(rd)):
                rd[c] += q * rs[c]

    def add_col(dst, src, q):
        for M in (D, V):
            for r in M:
                r[dst] += q * r[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    a = D[i][j]
                    if a and (best is None or abs(a) < abs(D[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            if best[0] != t:
                swap_rows(t, best[0])
            if best[1] != t:
                swap_cols(t, best[1])
            p = D[t][t]
            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
                    clean = clean and D[i][t] == 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
                    clean = clean and D[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            for M in (D, U):
                M[t] = [-a for a in M[t]]
    return IntMatrix.of(U, m), IntMatrix.of(D, n), IntMatrix.of(V, n)


def diagonal(D: IntMatrix) -> list[int]:
    return [D.entries[i][i] for i in range(min(D.rows, D.cols))]


def rank(A: IntMatrix) -> int:
    return sum(1 for d in diagonal(smith_normal_form(A)[1]) if d)


def invariant_factors(A: IntMatrix) -> list[int]:
    return [d for d in diagonal(smith_normal_form(A)[1]) if d]


def is_injective(A: IntMatrix) -> bool:
    return rank(A) == A.cols


def _require_injective(A: IntMatrix) -> list[int]:
    d = invariant_factors(A)
    if len(d) != A.cols:
        raise NonInjectiveEmbedding(f"matrix {A.tolist()} has a nontrivial kernel")
    return d


def cokernel_order(A: IntMatrix):
    """Order of Z^rows / A Z^cols, or INFINITE."""
    d = _require_injective(A)
    if len(d) < A.rows:
        return INFINITE
    return prod(d)


def count_order_dividing(A: IntMatrix, n: int) -> int:
    """Number of elements of coker A whose order divides n."""
    if n < 1:
        raise ValueError("n must be positive")
    d = _require_injective(A)
    # the free part contributes only the identity
    return prod(gcd(n, di) for di in d)


def kernel_basis(A: IntMatrix) -> list[Vector]:
    """A basis of the integer kernel {x in Z^cols : A x = 0}."""
    _, D, V = smith_normal_form(A)
    r = sum(1 for d in diagonal(D) if d)
    return [V.column(j) for j in range(r, A.cols)]


class CosetReducer:
    """Canonical representatives for Z^k / A Z^r.

    With U A V = D the map x -> U x carries the image lattice onto
    d_1 Z + ... + d_r Z, so reducing the first r coordinates of U x modulo
    d_i yields a key that is equal exactly for elements of the same coset.
    """

    def __init__(self, A: IntMatrix):
        self.matrix = A
        U, D, V = smith_normal_form(A)
        self._U, self._V = U, V
        self._d = [d for d in diagonal(D) if d]
        if len(self._d) != A.cols:
            raise NonInjectiveEmbedding(f"matrix {A.tolist()} has a nontrivial kernel")

    def key(self, x: Sequence[int]) -> Vector:
        y = self._U.apply(x)
        return tuple(yi % di for yi, di in zip(y, self._d)) + y[len(self._d):]

    def solve(self, x: Sequence[int]) -> Vector | None:
        """The unique m with A m = x, or None if x is not in the image."""
        y = self._U.apply(x)
        r = len(self._d)
        if any(y[r:]) or any(yi % di for yi, di in zip(y, self._d)):
            return None
        return self._V.apply(tuple(yi // di for yi, di in zip(y, self._d)))

    def contains(self, x: Sequence[int]) -> bool:
        return self.solve(x) is not None


def lattice_basis(vectors: Iterable[Sequence[int]], dim: int) -> list[Vector]:
    """Canonical (Hermite) basis of the lattice spanned by ``vectors``.

    Rows are returned in echelon order with positive pivots and entries above
    each pivot reduced into [0, pivot).
    """
    rows = [list(v) for v in vectors if any(v)]
    for v in rows:
        if len(v) != dim:
            raise DimensionMismatch(f"vector of length {len(v)} in a rank {dim} lattice")
    basis: list[list[int]] = []
    pivots: list[int] = []
    for c in range(dim):
        active = [r for r in rows if r[c]]
        if not active:
            continue
        rest = [r for r in rows if not r[c]]
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[c]))
            p = active[0]
            nxt = [p]
            for r in active[1:]:
                q = r[c] // p[c]
                r = [a - q * b for a, b in zip(r, p)]
                if r[c]:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            active = nxt
        p = active[0]
        if p[c] < 0:
            p = [-a for a in p]
        for b in basis:
            q = b[c] // p[c]
            if q:
                b[:] = [x - q * y for x, y in zip(b, p)]
        basis.append(p)
        pivots.append(c)
        rows = rest
    return [tuple(b) for b in basis]


def in_span(basis: Sequence[Sequence[int]], x: Sequence[int]) -> bool:
    """Membership test against a basis produced by :func:`lattice_basis`."""
    x = list(x)
    for b in basis:
        c = next(i for i, a in enumerate(b) if a)
        if x[c] % b[c]:
            return False
        q = x[c] // b[c]
        x = [xi - q * bi for xi, bi in zip(x, b)]
    return not any(x)


def aligned_coordinates(A: IntMatrix) -> tuple[int, ...] | None:
    """Coordinates J with image(A) == span(e_j : j in J), if such J exists."""
    basis = lattice_basis(A.columns(), A.rows)
    J = []
    for b in basis:
        nz = [i for i, a in enumerate(b) if a]
        if len(nz) != 1 or b[nz[0]] != 1:
            return None
        J.append(nz[0])
    return tuple(J)


def window(rank: int, bound: int) -> Iterator[Vector]:
    """All vectors with entries in [-bound, bound].

    Ordered by sup-norm shell, then descending lexicographically, so
    (1,) comes before (-1,) and small elements are reached first.
    """
    if bound < 0:
        return iter(())
    if rank == 0:
        return iter([()])
    vecs = list(product(range(bound, -bound - 1, -1), repeat=rank))
    vecs.sort(key=lambda v: max(map(abs, v)))
    return iter(vecs)
