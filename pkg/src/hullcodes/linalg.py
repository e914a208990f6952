"""Dense matrices and univariate polynomials over a finite field.

Everything is exact Gaussian elimination; there are no numerical
concerns, so pivoting just takes the first nonzero entry.  Polynomials
are lists of element encodings, constant term first, with no trailing
zeros (the zero polynomial is the empty list, of degree -1).
"""

from __future__ import annotations

from .gf import Field


class LinalgError(ValueError):
    pass


class Matrix:
    """Immutable row-major matrix over a Field."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, rows, ncols: int | None = None):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            ncols = len(rows[0])
            if any(len(r) != ncols for r in rows):
                raise LinalgError("ragged rows")
        elif ncols is None:
            raise LinalgError("empty matrix needs an explicit column count")
        self.field = field
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def row(self, i: int):
        return self.rows[i]

    def transpose(self) -> "Matrix":
        return Matrix(self.field, zip(*self.rows), ncols=self.nrows)

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise LinalgError("dimension mismatch")
        f = self.field
        out = []
        for r in self.rows:
            out.append(
                [
                    _dot(f, r, [other.rows[t][j] for t in range(other.nrows)])
                    for j in range(other.ncols)
                ]
            )
        return Matrix(f, out, ncols=other.ncols)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.ncols:
            raise LinalgError("dimension mismatch")
        return Matrix(self.field, self.rows + other.rows, ncols=self.ncols)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.ncols, self.rows))

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols} over GF({self.field.q}))"


def _dot(f: Field, a, b) -> int:
    acc = 0
    for x, y in zip(a, b):
        acc = f.add(acc, f.mul(x, y))
    return acc


def rref(M: Matrix):
    """Reduced row echelon form: (R, rank, pivot_columns)."""
    f = M.field
    rows = [list(r) for r in M.rows]
    pivots = []
    r = 0
    for c in range(M.ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        scale = f.inv(rows[r][c])
        rows[r] = [f.mul(scale, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                coef = rows[i][c]
                rows[i] = [f.sub(x, f.mul(coef, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return Matrix(f, rows, ncols=M.ncols), r, tuple(pivots)


def rank(M: Matrix) -> int:
    return rref(M)[1]


def nullspace(M: Matrix) -> Matrix:
    """Basis rows of {x : M x^T = 0}; row count = ncols - rank."""
    f = M.field
    R, rk, pivots = rref(M)
    free = [c for c in range(M.ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * M.ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = f.neg(R.rows[i][fc])
        basis.append(v)
    return Matrix(f, basis, ncols=M.ncols)


def dual_generator(G: Matrix) -> Matrix:
    """Full-row-rank generator of the Euclidean dual of the row space of G."""
    if rank(G) != G.nrows:
        raise LinalgError("generator matrix is not full row rank")
    return nullspace(G)


def row_space_equal(A: Matrix, B: Matrix) -> bool:
    """Row spaces compared via their canonical RREFs."""
    return rref(A)[0].rows[: rank(A)] == rref(B)[0].rows[: rank(B)]


def determinant(M: Matrix) -> int:
    if M.nrows != M.ncols:
        raise LinalgError("determinant of a non-square matrix")
    f = M.field
    rows = [list(r) for r in M.rows]
    det = 1
    for c in range(M.ncols):
        pivot = next((i for i in range(c, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            return 0
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = f.neg(det)
        det = f.mul(det, rows[c][c])
        inv = f.inv(rows[c][c])
        for i in range(c + 1, len(rows)):
            if rows[i][c] != 0:
                coef = f.mul(inv, rows[i][c])
                rows[i] = [f.sub(x, f.mul(coef, y)) for x, y in zip(rows[i], rows[c])]
    return det


# --- polynomials ---


def poly_trim(c) -> list[int]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_deg(fx) -> int:
    """Degree; -1 stands in for the zero polynomial."""
    return len(fx) - 1


def poly_coeff(fx, i: int) -> int:
    return fx[i] if 0 <= i < len(fx) else 0


def poly_add(f: Field, a, b) -> list[int]:
    n = max(len(a), len(b))
    return poly_trim(f.add(poly_coeff(a, i), poly_coeff(b, i)) for i in range(n))


def poly_neg(f: Field, a) -> list[int]:
    return [f.neg(x) for x in a]


def poly_sub(f: Field, a, b) -> list[int]:
    return poly_add(f, a, poly_neg(f, b))


def poly_scale(f: Field, c: int, a) -> list[int]:
    return poly_trim(f.mul(c, x) for x in a)


def poly_mul(f: Field, a, b) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = f.add(out[i + j], f.mul(ai, bj))
    return poly_trim(out)


def poly_pow(f: Field, a, e: int) -> list[int]:
    if e < 0:
        raise LinalgError("negative polynomial power")
    out = [1]
    for _ in range(e):
        out = poly_mul(f, out, a)
    return out


def poly_eval(f: Field, fx, x: int) -> int:
    acc = 0
    for c in reversed(fx):
        acc = f.add(f.mul(acc, x), c)
    return acc


def poly_from_roots(f: Field, roots) -> list[int]:
    out = [1]
    for r in roots:
        out = poly_mul(f, out, [f.neg(r), 1])
    return out


def interpolate(f: Field, points) -> list[int]:
    """Unique polynomial of degree <= n-1 through n points with distinct
    x coordinates (Lagrange)."""
    points = list(points)
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise LinalgError("duplicate interpolation nodes")
    if not points:
        raise LinalgError("no interpolation points")
    result = []
    for xi, yi in points:
        basis = [1]
        denom = 1
        for xj, _ in points:
            if xj != xi:
                basis = poly_mul(f, basis, [f.neg(xj), 1])
                denom = f.mul(denom, f.sub(xi, xj))
        result = poly_add(f, result, poly_scale(f, f.div(yi, denom), basis))
    return result
