"""Dense exact matrices and symmetric bilinear forms.

Matrices are plain row-major lists of lists of field elements.  Every
routine that has to produce a scalar from nothing takes the field as an
argument.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

from .scalars import Field, Rationals

Matrix = list
Vector = list


class LinalgError(ValueError):
    pass


def zeros(F: Field, rows: int, cols: int) -> Matrix:
    z = F.zero
    return [[z] * cols for _ in range(rows)]


def identity(F: Field, n: int) -> Matrix:
    m = zeros(F, n, n)
    for i in range(n):
        m[i][i] = F.one
    return m


def diag(F: Field, entries: Sequence) -> Matrix:
    m = zeros(F, len(entries), len(entries))
    for i, x in enumerate(entries):
        m[i][i] = F(x)
    return m


def to_field(F: Field, A) -> Matrix:
    return [[F(x) for x in row] for row in A]


def unit_vector(F: Field, n: int, i: int) -> Vector:
    v = [F.zero] * n
    v[i] = F.one
    return v


def transpose(A: Matrix) -> Matrix:
    return [list(col) for col in zip(*A)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    Bt = transpose(B)
    out = []
    for row in A:
        nz = [(k, a) for k, a in enumerate(row) if a != 0]
        out_row = []
        for col in Bt:
            s = 0
            for k, a in nz:
                s = s + a * col[k]
            out_row.append(s if nz else row[0] * 0)
        out.append(out_row)
    return out


def matvec(A: Matrix, v: Sequence) -> Vector:
    out = []
    for row in A:
        s = row[0] * 0
        for a, x in zip(row, v):
            if a != 0 and x != 0:
                s = s + a * x
        out.append(s)
    return out


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    return [[a + b for a, b in zip(r, s)] for r, s in zip(A, B)]


def mat_sub(A: Matrix, B: Matrix) -> Matrix:
    return [[a - b for a, b in zip(r, s)] for r, s in zip(A, B)]


def mat_scale(c, A: Matrix) -> Matrix:
    return [[c * a for a in row] for row in A]


def vec_add(u: Sequence, v: Sequence) -> Vector:
    return [a + b for a, b in zip(u, v)]


def vec_sub(u: Sequence, v: Sequence) -> Vector:
    return [a - b for a, b in zip(u, v)]


def vec_scale(c, v: Sequence) -> Vector:
    return [c * a for a in v]


def is_zero_vector(v: Sequence) -> bool:
    return all(x == 0 for x in v)


def columns_to_matrix(cols: Sequence[Sequence]) -> Matrix:
    return transpose([list(c) for c in cols])


def trace(A: Matrix):
    s = A[0][0] * 0
    for i in range(len(A)):
        s = s + A[i][i]
    return s


def det(A: Matrix, F: Field):
    """Determinant.  Over Q the matrix is cleared of denominators and
    reduced by integer Bareiss elimination; elsewhere Gaussian elimination."""
    n = len(A)
    if n == 0:
        return F.one
    if any(len(row) != n for row in A):
        raise LinalgError("determinant of a non-square matrix")
    if isinstance(F, Rationals):
        return _det_rational(A)
    return _det_gauss(A, F)


def _det_rational(A: Matrix) -> Fraction:
    rows = []
    scale = Fraction(1)
    for row in A:
        den = 1
        for x in row:
            den = lcm(den, Fraction(x).denominator)
        rows.append([int(Fraction(x) * den) for x in row])
        scale /= den
    return _bareiss(rows) * scale


def _bareiss(M: list) -> int:
    n = len(M)
    M = [row[:] for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * pk - M[i][k] * M[k][j]) // prev
        prev = pk
    return sign * M[n - 1][n - 1]


def _det_gauss(A: Matrix, F: Field):
    n = len(A)
    M = [[F(x) for x in row] for row in A]
    d = F.one
    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][k] != 0), None)
        if piv is None:
            return F.zero
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            d = -d
        pk = M[k][k]
        d = d * pk
        inv = F.one / pk
        for i in range(k + 1, n):
            f = M[i][k]
            if f != 0:
                f = f * inv
                Mi, Mk = M[i], M[k]
                for j in range(k + 1, n):
                    if Mk[j] != 0:
                        Mi[j] = Mi[j] - f * Mk[j]
    return d


def rref(A: Matrix, F: Field):
    """Reduced row echelon form and the list of pivot columns."""
    M = [[F(x) for x in row] for row in A]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = F.one / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return M, pivots


def rank(A: Matrix, F: Field) -> int:
    if not A:
        return 0
    return len(rref(A, F)[1])


def nullspace(A: Matrix, F: Field, ncols: Optional[int] = None) -> list:
    """Basis of {x : A x = 0}, one vector per free column, normalised so
    the free coordinate is 1 (deterministic RREF basis)."""
    if not A:
        n = ncols or 0
        return [unit_vector(F, n, i) for i in range(n)]
    n = len(A[0])
    R, pivots = rref(A, F)
    pivset = set(pivots)
    basis = []
    for free in range(n):
        if free in pivset:
            continue
        v = [F.zero] * n
        v[free] = F.one
        for row, pc in zip(R, pivots):
            v[pc] = -row[free]
        basis.append(v)
    return basis


def solve_linear(A: Matrix, rhs: Sequence, F: Field) -> Optional[Vector]:
    """One exact solution of A x = rhs (free variables set to 0), or None."""
    if not A:
        return []
    n = len(A[0])
    aug = [list(row) + [F(b)] for row, b in zip(A, rhs)]
    R, pivots = rref(aug, F)
    if n in pivots:
        return None
    x = [F.zero] * n
    for row, pc in zip(R, pivots):
        x[pc] = row[n]
    return x


def inverse(A: Matrix, F: Field) -> Optional[Matrix]:
    n = len(A)
    aug = [list(row) + unit_vector(F, n, i) for i, row in enumerate(A)]
    R, pivots = rref(aug, F)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in R]


def independent_subset(vectors: Sequence[Sequence], F: Field) -> list:
    """Indices of a maximal linearly independent subset, chosen greedily."""
    chosen: list = []
    basis: list = []  # echelon rows (pivot, row)
    for idx, v in enumerate(vectors):
        w = [F(x) for x in v]
        for pc, row in basis:
            if w[pc] != 0:
                f = w[pc]
                w = [a - f * b for a, b in zip(w, row)]
        pc = next((i for i, a in enumerate(w) if a != 0), None)
        if pc is None:
            continue
        inv = F.one / w[pc]
        basis.append((pc, [a * inv for a in w]))
        chosen.append(idx)
    return chosen


@dataclass
class QuadSpace:
    """F^n with a nondegenerate symmetric bilinear form given by its Gram matrix."""

    field: Field
    gram: Matrix
    _nz: list = dc_field(default=None, repr=False, compare=False)

    def __post_init__(self):
        F = self.field
        self.gram = [[F(x) for x in row] for row in self.gram]
        n = len(self.gram)
        if n == 0 or any(len(r) != n for r in self.gram):
            raise LinalgError("Gram matrix must be square and nonempty")
        for i in range(n):
            for j in range(i):
                if self.gram[i][j] != self.gram[j][i]:
                    raise LinalgError("Gram matrix is not symmetric")
        if det(self.gram, F) == 0:
            raise LinalgError("bilinear form is degenerate")
        self._nz = [(i, j, g) for i, row in enumerate(self.gram)
                    for j, g in enumerate(row) if g != 0]

    @property
    def dim(self) -> int:
        return len(self.gram)

    def bform(self, u: Sequence, v: Sequence):
        n = self.dim
        if len(u) != n or len(v) != n:
            raise LinalgError("dimension mismatch")
        s = self.field.zero
        for i, j, g in self._nz:
            if u[i] != 0 and v[j] != 0:
                s = s + u[i] * g * v[j]
        return s

    def gram_det(self, vs: Sequence, ws: Sequence):
        if len(vs) != len(ws):
            raise LinalgError("gram_det needs equally many vectors on both sides")
        return det([[self.bform(v, w) for w in ws] for v in vs], self.field)

    def det(self):
        return det(self.gram, self.field)

    def scaled(self, mu) -> "QuadSpace":
        return QuadSpace(self.field, mat_scale(self.field(mu), self.gram))

    def orthogonal_basis(self) -> Matrix:
        """Columns of the returned matrix form a b-orthogonal basis."""
        F = self.field
        n = self.dim
        vecs = [unit_vector(F, n, i) for i in range(n)]
        out = []
        while vecs:
            pick = next((v for v in vecs if self.bform(v, v) != 0), None)
            if pick is None:
                # all remaining vectors are isotropic; some pair sums to an
                # anisotropic vector since the form is nondegenerate
                for a in vecs:
                    for c in vecs:
                        if self.bform(a, c) != 0:
                            pick = vec_add(a, c)
                            break
                    if pick is not None:
                        break
            bb = self.bform(pick, pick)
            out.append(pick)
            rest = []
            for v in vecs:
                w = vec_sub(v, vec_scale(self.bform(v, pick) / bb, pick))
                if not is_zero_vector(w):
                    rest.append(w)
            keep = independent_subset(rest, F)
            vecs = [rest[i] for i in keep][: n - len(out)]
        return columns_to_matrix(out)


def bform(space: QuadSpace, u: Sequence, v: Sequence):
    return space.bform(u, v)


def gram_det(space: QuadSpace, vs: Sequence, ws: Sequence):
    return space.gram_det(vs, ws)


def format_matrix(F: Field, A: Matrix) -> list:
    return [[F.format(x) for x in row] for row in A]


def parse_matrix(F: Field, rows) -> Matrix:
    return [[F.parse(x) if isinstance(x, str) else F(x) for x in row] for row in rows]
