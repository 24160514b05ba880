"""Exact integer linear algebra: Hermite normal form, kernels, lattices.

Everything works on plain lists of Python ints, so arithmetic is exact at any
size.  Lattices are represented by generating rows; the row-style Hermite
normal form (positive pivots, entries above a pivot reduced into [0, pivot))
is the canonical form used for membership and equality tests.
"""

from __future__ import annotations

from typing import Sequence


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) = x*a + y*b and g >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _hnf_inplace(mat: list[list[int]]) -> int:
    """Reduce ``mat`` to row HNF in place; returns the rank."""
    if not mat:
        return 0
    ncols = len(mat[0])
    nrows = len(mat)
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        piv = None
        for i in range(row, nrows):
            if mat[i][col]:
                piv = i
                break
        if piv is None:
            continue
        if piv != row:
            mat[row], mat[piv] = mat[piv], mat[row]
        for i in range(row + 1, nrows):
            b = mat[i][col]
            if b == 0:
                continue
            a = mat[row][col]
            g, x, y = xgcd(a, b)
            # unimodular 2x2 combination zeroing mat[i][col]
            u, v = -(b // g), a // g
            ri, rr = mat[i], mat[row]
            new_r = [x * p + y * q for p, q in zip(rr, ri)]
            new_i = [u * p + v * q for p, q in zip(rr, ri)]
            mat[row], mat[i] = new_r, new_i
        if mat[row][col] < 0:
            mat[row] = [-v for v in mat[row]]
        pivval = mat[row][col]
        for i in range(row):
            q = mat[i][col] // pivval
            if q:
                mat[i] = [p - q * r for p, r in zip(mat[i], mat[row])]
        row += 1
    return row


def hnf(rows: Sequence[Sequence[int]], width: int) -> list[list[int]]:
    """Canonical row HNF of the lattice spanned by ``rows``; zero rows dropped."""
    mat = [list(r) for r in rows]
    for r in mat:
        if len(r) != width:
            raise ValueError("row width mismatch")
    rank = _hnf_inplace(mat)
    return mat[:rank]


def lattice_rank(rows: Sequence[Sequence[int]], width: int) -> int:
    return len(hnf(rows, width))


def lattice_eq(rows_a: Sequence[Sequence[int]], rows_b: Sequence[Sequence[int]], width: int) -> bool:
    """True when two generating sets span the same integer lattice."""
    return hnf(rows_a, width) == hnf(rows_b, width)


def lattice_contains(hnf_rows: Sequence[Sequence[int]], vec: Sequence[int]) -> bool:
    """Membership of ``vec`` in the lattice given by HNF rows."""
    v = list(vec)
    for row in hnf_rows:
        piv = next((c for c, val in enumerate(row) if val), None)
        if piv is None:
            continue
        if v[piv] % row[piv] != 0:
            return False
        q = v[piv] // row[piv]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return all(a == 0 for a in v)


def kernel_basis(matrix: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """Lattice basis of {z in Z^ncols : matrix @ z = 0}.

    Augment the transpose with an identity block and row-reduce; rows whose
    transposed part vanished record the integer relations among the columns.
    """
    nrows = len(matrix)
    aug = []
    for j in range(ncols):
        row = [matrix[i][j] for i in range(nrows)]
        row.extend(1 if k == j else 0 for k in range(ncols))
        aug.append(row)
    _hnf_inplace(aug)
    basis = []
    for row in aug:
        if any(row[:nrows]):
            continue
        tail = row[nrows:]
        if any(tail):
            basis.append(tail)
    return basis
