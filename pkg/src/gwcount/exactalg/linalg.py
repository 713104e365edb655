"""Exact linear algebra over Q and congruence diagonalization.

Examples
========

>>> D, P = diagonalize_with_witness(SymMatrix([[0, 1], [1, 0]]))
>>> D
[Fraction(2, 1), Fraction(-1, 2)]
>>> congruence_check(SymMatrix([[0, 1], [1, 0]]), D, P)
True
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import InvalidInput, NotInvertible
from .rational import as_fraction


class SymMatrix:
    """Symmetric matrix with Fraction entries."""

    __slots__ = ("entries",)

    def __init__(self, rows):
        rows = tuple(tuple(as_fraction(a) for a in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise InvalidInput("SymMatrix needs a non-empty square array")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise InvalidInput(f"matrix not symmetric at ({i}, {j})")
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("SymMatrix is immutable")

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def rows(self):
        return [list(r) for r in self.entries]

    def __eq__(self, other):
        return isinstance(other, SymMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"SymMatrix({[[str(a) for a in r] for r in self.entries]})"


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(A):
    return [list(col) for col in zip(*A)]


def matmul(A, B):
    Bt = transpose(B)
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in Bt] for row in A]


def det(A) -> Fraction:
    """Determinant by Gaussian elimination over Q."""
    M = [[Fraction(a) for a in row] for row in A]
    n = len(M)
    d = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            d = -d
        d *= M[k][k]
        inv = 1 / M[k][k]
        for i in range(k + 1, n):
            f = M[i][k] * inv
            if f:
                row_k, row_i = M[k], M[i]
                for j in range(k, n):
                    row_i[j] -= f * row_k[j]
    return d


def solve(A, b):
    """Solve ``A x = b`` for square invertible ``A``."""
    n = len(A)
    M = [[Fraction(a) for a in row] + [Fraction(b[i])] for i, row in enumerate(A)]
    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][k] != 0), None)
        if piv is None:
            raise NotInvertible("singular linear system")
        M[k], M[piv] = M[piv], M[k]
        inv = 1 / M[k][k]
        M[k] = [a * inv for a in M[k]]
        for i in range(n):
            if i != k and M[i][k] != 0:
                f = M[i][k]
                M[i] = [a - f * c for a, c in zip(M[i], M[k])]
    return [M[i][n] for i in range(n)]


def _swap(A, P, i, j):
    A[i], A[j] = A[j], A[i]
    for row in A:
        row[i], row[j] = row[j], row[i]
    for row in P:
        row[i], row[j] = row[j], row[i]


def _add_multiple(A, P, dst, src, f):
    # basis change e_dst <- e_dst + f*e_src, applied as row and column operation
    n = len(A)
    for j in range(n):
        A[dst][j] += f * A[src][j]
    for i in range(n):
        A[i][dst] += f * A[i][src]
    for row in P:
        row[dst] += f * row[src]


def diagonalize_with_witness(M: SymMatrix):
    """Return ``(D, P)`` with ``P^T M P = diag(D)`` and ``P`` invertible.

    Symmetric elimination with diagonal pivoting; when every remaining
    diagonal entry is zero but an off-diagonal one is not, the hyperbolic
    step ``e_i <- e_i + e_j`` creates the pivot ``2 M[i][j]``.  Zero entries
    of ``D`` mark degenerate directions.
    """
    A = M.rows()
    n = len(A)
    P = identity(n)
    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if A[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            _add_multiple(A, P, i, j, Fraction(1))
            piv = i
        if piv != k:
            _swap(A, P, k, piv)
        pk = A[k][k]
        for r in range(k + 1, n):
            if A[r][k] != 0:
                _add_multiple(A, P, r, k, -A[r][k] / pk)
    return [A[i][i] for i in range(n)], P


def congruence_diagonalize(M: SymMatrix):
    """Diagonal entries of a form congruent to ``M``."""
    return diagonalize_with_witness(M)[0]


def congruence_check(M: SymMatrix, D, P) -> bool:
    n = M.dimension
    lhs = matmul(matmul(transpose(P), M.rows()), P)
    return all(lhs[i][j] == (D[i] if i == j else 0) for i in range(n) for j in range(n))
