"""Exact integer and rational linear algebra.

Vectors are plain tuples of Python ints (``IntVector``) or of
:class:`fractions.Fraction` (``RatVector``); matrices are sequences of rows.
Everything here is arbitrary precision and never touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import EmptyInput, ShapeMismatch, SingularMatrix, ZeroVector

IntVector = tuple[int, ...]
RatVector = tuple[Fraction, ...]
Matrix = Sequence[Sequence[int]]


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def sub(u: Sequence[int], v: Sequence[int]) -> IntVector:
    return tuple(a - b for a, b in zip(u, v))


def add(u: Sequence[int], v: Sequence[int]) -> IntVector:
    return tuple(a + b for a, b in zip(u, v))


def scale(c, v: Sequence) -> tuple:
    return tuple(c * a for a in v)


def vector_gcd(v: Sequence[int]) -> int:
    g = 0
    for a in v:
        g = gcd(g, a)
    return g


def make_primitive(v: Sequence[int]) -> IntVector:
    """Divide ``v`` by the gcd of its coordinates."""
    g = vector_gcd(v)
    if g == 0:
        raise ZeroVector(f"cannot make the zero vector {tuple(v)} primitive")
    return tuple(a // g for a in v)


def transpose(M: Matrix) -> list[list]:
    return [list(col) for col in zip(*M)]


def _check_square(M: Matrix) -> int:
    n = len(M)
    if any(len(row) != n for row in M):
        raise ShapeMismatch(f"expected a square matrix, got {n} rows of lengths {[len(r) for r in M]}")
    return n


def integer_det(M: Matrix) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    n = _check_square(M)
    if n == 0:
        return 1
    A = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * pivot - A[i][k] * A[k][j]) // prev
        prev = pivot
    return sign * A[n - 1][n - 1]


def rank(rows: Sequence[Sequence]) -> int:
    """Rank of a matrix with integer or rational entries."""
    A = [[Fraction(x) for x in row] for row in rows]
    if not A:
        return 0
    ncols = len(A[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(r + 1, len(A)):
            if A[i][c] != 0:
                f = A[i][c] / A[r][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        r += 1
        if r == len(A):
            break
    return r


def affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine span of ``points`` (-1 for no points)."""
    if not points:
        return -1
    p0 = points[0]
    return rank([[a - b for a, b in zip(p, p0)] for p in points[1:]])


def solve_linear(A: Matrix, b: Sequence) -> RatVector:
    """Solve ``A x = b`` exactly for square nonsingular ``A``."""
    n = _check_square(A)
    if len(b) != n:
        raise ShapeMismatch(f"right-hand side has length {len(b)}, expected {n}")
    M = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != 0), None)
        if piv is None:
            raise SingularMatrix("matrix is singular")
        M[c], M[piv] = M[piv], M[c]
        inv = 1 / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return tuple(M[i][n] for i in range(n))


def adjugate(A: Matrix) -> list[list[int]]:
    """Integer adjugate, so that ``A @ adj(A) == det(A) * I``."""
    n = _check_square(A)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(A) if k != i]
            adj[j][i] = (-1) ** (i + j) * integer_det(minor)
    return adj


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def hermite_normal_form(A: Matrix) -> tuple[list[list[int]], list[list[int]], int]:
    """Column-style Hermite normal form.

    Returns ``(H, U, r)`` with ``A @ U == H``, ``U`` unimodular and ``r`` the
    rank. The first ``r`` columns of ``H`` are in lower echelon form with
    positive pivots; entries to the left of a pivot lie in ``[0, pivot)``.
    The remaining columns of ``H`` are zero, so the last ``n - r`` columns of
    ``U`` are a basis of the integer kernel of ``A``.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    H = [list(row) for row in A]
    U = [[int(i == j) for j in range(n)] for i in range(n)]

    def colop(target: list[list[int]], i: int, j: int, a: int, b: int, c: int, d: int) -> None:
        # (col_i, col_j) <- (a*col_i + b*col_j, c*col_i + d*col_j)
        for row in target:
            x, y = row[i], row[j]
            row[i] = a * x + b * y
            row[j] = c * x + d * y

    col = 0
    for i in range(m):
        if col == n:
            break
        for j in range(col + 1, n):
            b = H[i][j]
            if b == 0:
                continue
            a = H[i][col]
            g, s, t = _xgcd(a, b)
            colop(H, col, j, s, t, -b // g, a // g)
            colop(U, col, j, s, t, -b // g, a // g)
        p = H[i][col]
        if p == 0:
            continue
        if p < 0:
            for M in (H, U):
                for row in M:
                    row[col] = -row[col]
            p = -p
        for j in range(col):
            q = H[i][j] // p
            if q:
                for M in (H, U):
                    for row in M:
                        row[j] -= q * row[col]
        col += 1
    return H, U, col


def integer_kernel(A: Matrix, ncols: int | None = None) -> list[IntVector]:
    """Basis of ``{x in Z^n : A x = 0}``."""
    if not A:
        n = ncols or 0
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    n = len(A[0])
    _, U, r = hermite_normal_form(A)
    return [tuple(U[i][j] for i in range(n)) for j in range(r, n)]


def _hnf_basis(vectors: Sequence[Sequence[int]], dim: int) -> list[IntVector]:
    cols = transpose(vectors) if vectors else [[] for _ in range(dim)]
    H, _, r = hermite_normal_form(cols)
    return [tuple(H[i][j] for i in range(dim)) for j in range(r)]


def lattice_basis(vectors: Sequence[Sequence[int]], dim: int) -> list[IntVector]:
    """HNF basis of the lattice generated by ``vectors`` (not saturated)."""
    return _hnf_basis(vectors, dim)


def sublattice_basis(points: Sequence[Sequence[int]]) -> list[IntVector]:
    """Basis of ``span(points - points[0]) ∩ Z^d`` in Hermite normal form.

    The result is the saturation of the lattice generated by the difference
    vectors, i.e. the lattice used to measure normalized volumes of faces.
    """
    if not points:
        raise EmptyInput("sublattice_basis needs at least one point")
    d = len(points[0])
    diffs = [sub(p, points[0]) for p in points[1:]]
    diffs = [v for v in diffs if any(v)]
    if not diffs:
        return []
    orth = integer_kernel(diffs)
    saturated = integer_kernel(orth, ncols=d) if orth else [
        tuple(int(i == j) for j in range(d)) for i in range(d)]
    return _hnf_basis(saturated, d)


def coordinates(basis: Sequence[Sequence[int]], v: Sequence) -> RatVector:
    """Coordinates of ``v`` in ``basis`` (exact, raises if ``v`` is off the span)."""
    k = len(basis)
    if k == 0:
        if any(v):
            raise ValueError("vector is not in the span of an empty basis")
        return ()
    cols = transpose(basis)  # d x k
    # pick k independent rows
    chosen: list[int] = []
    for i in range(len(cols)):
        if rank([cols[j] for j in chosen + [i]]) > len(chosen):
            chosen.append(i)
            if len(chosen) == k:
                break
    x = solve_linear([cols[i] for i in chosen], [v[i] for i in chosen])
    for i, row in enumerate(cols):
        if dot(row, x) != v[i]:
            raise ValueError(f"vector {tuple(v)} is not in the span of the basis")
    return x


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b) if a and b else 0


def common_denominator(values) -> int:
    den = 1
    for x in values:
        den = lcm(den, Fraction(x).denominator)
    return den
