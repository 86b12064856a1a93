"""Exact integer and rational linear algebra on tuple vectors.

Vectors are tuples of ints; matrices are lists/tuples of row vectors.
Everything here is exact: no floats, no tolerances.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DimensionError

Vec = tuple[int, ...]


def dot(u, v) -> int:
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def vadd(u: Vec, v: Vec) -> Vec:
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} vs {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vneg(v: Vec) -> Vec:
    return tuple(-a for a in v)


def vscale(k: int, v: Vec) -> Vec:
    return tuple(k * a for a in v)


def is_zero(v) -> bool:
    return all(a == 0 for a in v)


def vec_gcd(v) -> int:
    g = 0
    for a in v:
        g = gcd(g, abs(a))
    return g


def primitive(v) -> Vec:
    """Divide out the gcd of the coordinates.  The zero vector is rejected."""
    g = vec_gcd(v)
    if g == 0:
        raise ValueError("the zero vector has no primitive form")
    return tuple(a // g for a in v)


def _row_op_sub(H, U, i, j, q):
    # row_i -= q * row_j, applied to both H and the transform U
    if q:
        H[i] = [a - q * b for a, b in zip(H[i], H[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]


def row_hnf(rows, width: int):
    """Row Hermite normal form with a unimodular transform.

    Returns ``(H, U)`` with ``U @ A == H`` and ``U`` unimodular.  ``H`` is in
    row-echelon HNF: pivots positive, every entry above a pivot reduced into
    ``[0, pivot)``, zero rows at the bottom.  ``H`` is the canonical basis
    presentation of the row lattice of ``A``.
    """
    m = len(rows)
    H = [list(r) for r in rows]
    for r in H:
        if len(r) != width:
            raise DimensionError("row width mismatch")
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    row = 0
    for col in range(width):
        if row == m:
            break
        while True:
            nz = [i for i in range(row, m) if H[i][col] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(H[i][col]), i))
            if i0 != row:
                H[row], H[i0] = H[i0], H[row]
                U[row], U[i0] = U[i0], U[row]
            clean = True
            for i in range(row + 1, m):
                if H[i][col] != 0:
                    _row_op_sub(H, U, i, row, H[i][col] // H[row][col])
                    if H[i][col] != 0:
                        clean = False
            if clean:
                break
        if row < m and H[row][col] != 0:
            if H[row][col] < 0:
                H[row] = [-a for a in H[row]]
                U[row] = [-a for a in U[row]]
            for i in range(row):
                _row_op_sub(H, U, i, row, H[i][col] // H[row][col])
            row += 1
    return [tuple(r) for r in H], [tuple(r) for r in U]


def kernel_split(rows, width: int):
    """Split ``Z^width`` as (saturated kernel of the rows) + complement.

    Returns ``(kernel_basis, complement_basis)``.  ``kernel_basis`` is the
    canonical HNF basis (lex-sorted) of ``{x : r . x == 0 for every row r}``;
    together the two lists form a basis of ``Z^width``, so the kernel is a
    direct summand (it is automatically saturated).
    """
    m = len(rows)
    at = [tuple(r[i] for r in rows) for i in range(width)]
    H, U = row_hnf(at, m)
    ker = [U[i] for i in range(width) if is_zero(H[i])]
    comp = [U[i] for i in range(width) if not is_zero(H[i])]
    kh, _ = row_hnf(ker, width)
    kernel = sorted(r for r in kh if not is_zero(r))
    return kernel, comp


def integer_kernel_basis(rows, width: int | None = None):
    """Canonical basis of the saturated integer kernel ``{x : A x = 0}``.

    ``rows`` are the rows of ``A``.  The result is HNF-canonical, so each
    basis vector is primitive with positive first nonzero coordinate, and the
    list is lex-sorted.  Empty list when the kernel is trivial.
    """
    rows = [tuple(r) for r in rows]
    if width is None:
        if not rows:
            raise DimensionError("width required for an empty row list")
        width = len(rows[0])
    for r in rows:
        if len(r) != width:
            raise DimensionError("row width mismatch")
    return kernel_split(rows, width)[0]


def reduce_mod_lattice(vec, basis) -> Vec:
    """Canonical representative of ``vec`` modulo the lattice with HNF basis.

    Each basis row must have a positive first nonzero entry (its pivot); the
    result has its pivot coordinates reduced into ``[0, pivot)``.
    """
    v = list(vec)
    for b in sorted(basis, key=_pivot_index):
        p = _pivot_index(b)
        q = v[p] // b[p]
        if q:
            v = [a - q * c for a, c in zip(v, b)]
    return tuple(v)


def _pivot_index(row) -> int:
    for i, a in enumerate(row):
        if a != 0:
            return i
    raise ValueError("zero row has no pivot")


def rational_rank(rows) -> int:
    """Rank over Q of the given integer (or Fraction) row vectors."""
    work = [[Fraction(a) for a in r] for r in rows if not is_zero(r)]
    rank = 0
    width = len(work[0]) if work else 0
    for col in range(width):
        piv = next((i for i in range(rank, len(work)) if work[i][col] != 0), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        for i in range(len(work)):
            if i != rank and work[i][col] != 0:
                f = work[i][col] / work[rank][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[rank])]
        rank += 1
    return rank


def solve_rational_coords(basis, target):
    """Solve ``sum_i a_i * basis[i] == target`` over Q.

    Returns the coefficient tuple, or ``None`` when the system is
    inconsistent.  The basis rows must be linearly independent.
    """
    k = len(basis)
    n = len(target)
    # columns: unknowns a_1..a_k; rows: one equation per coordinate
    aug = [[Fraction(basis[j][i]) for j in range(k)] + [Fraction(target[i])]
           for i in range(n)]
    pivots = []
    row = 0
    for col in range(k):
        piv = next((i for i in range(row, n) if aug[i][col] != 0), None)
        if piv is None:
            raise DimensionError("dependent basis")
        aug[row], aug[piv] = aug[piv], aug[row]
        for i in range(n):
            if i != row and aug[i][col] != 0:
                f = aug[i][col] / aug[row][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[row])]
        pivots.append((row, col))
        row += 1
    for i in range(row, n):
        if aug[i][k] != 0:
            return None
    coords = [Fraction(0)] * k
    for r, c in pivots:
        coords[c] = aug[r][k] / aug[r][c]
    return tuple(coords)


def hnf_solve(rows, target):
    """First integer solution ``k`` of ``sum_i k_i * rows[i] == target``.

    Solves through the Hermite normal form of the row matrix; free
    coefficients in HNF coordinates are set to zero, which fixes a
    deterministic particular solution.  Returns ``None`` when no integer
    solution exists.
    """
    rows = [tuple(r) for r in rows]
    if not rows:
        return () if is_zero(target) else None
    width = len(rows[0])
    H, U = row_hnf(rows, width)
    t = list(target)
    z = [0] * len(rows)
    for i, h in enumerate(H):
        if is_zero(h):
            break
        p = _pivot_index(h)
        if t[p] % h[p] != 0:
            return None
        z[i] = t[p] // h[p]
        if z[i]:
            t = [a - z[i] * b for a, b in zip(t, h)]
    if not is_zero(t):
        return None
    m = len(rows)
    return tuple(sum(z[i] * U[i][j] for i in range(m)) for j in range(m))


def det_and_adjugate(rows):
    """Exact determinant and adjugate of a square integer matrix.

    Returns ``(det, adj)`` where ``adj`` is a tuple of rows satisfying
    ``A @ adj == det * I``; ``adj`` is ``None`` when the matrix is singular.
    """
    d = len(rows)
    work = [[Fraction(a) for a in r] + [Fraction(1 if i == j else 0) for j in range(d)]
            for i, r in enumerate(rows)]
    det = Fraction(1)
    for col in range(d):
        piv = next((i for i in range(col, d) if work[i][col] != 0), None)
        if piv is None:
            return 0, None
        if piv != col:
            work[col], work[piv] = work[piv], work[col]
            det = -det
        det *= work[col][col]
        inv = 1 / work[col][col]
        work[col] = [a * inv for a in work[col]]
        for i in range(d):
            if i != col and work[i][col] != 0:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[col])]
    adj = []
    for i in range(d):
        row = []
        for j in range(d):
            x = work[i][d + j] * det
            assert x.denominator == 1
            row.append(int(x))
        adj.append(tuple(row))
    det_int = int(det)
    assert det == det_int
    return det_int, tuple(adj)


def int_matrix_inverse(rows):
    """Inverse of a unimodular integer matrix, as integer rows."""
    det, adj = det_and_adjugate(rows)
    if det not in (1, -1):
        raise ValueError("matrix is not unimodular")
    return tuple(tuple(a // det for a in r) for r in adj)
