"""Cayley algebras in the standard (split) basis and in the CD basis, the
quaternion subalgebra, and the products built from them."""

from __future__ import annotations

from typing import Sequence

from .linalg import Matrix, columns_to_matrix, inverse
from .scalars import Field


class CayleyError(ValueError):
    pass


STD_NAMES = ("e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3")
CD_NAMES = ("1", "w1", "w2", "w3", "w4", "w5", "w6", "w7")

# (a, b, c) with w_a w_b = w_c, read cyclically
CD_TRIPLES = ((1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (5, 6, 1), (6, 7, 2), (7, 1, 3))


def _std_table():
    E1, E2 = 0, 1
    U = {1: 2, 2: 3, 3: 4}
    V = {1: 5, 2: 6, 3: 7}
    t = {}

    def put(i, j, k, c):
        t[(i, j)] = ((k, c),)

    put(E1, E1, E1, 1)
    put(E2, E2, E2, 1)
    for i in (1, 2, 3):
        put(E1, U[i], U[i], 1)
        put(U[i], E2, U[i], 1)
        put(E2, V[i], V[i], 1)
        put(V[i], E1, V[i], 1)
        put(U[i], V[i], E1, -1)
        put(V[i], U[i], E2, -1)
        j, k = i % 3 + 1, (i + 1) % 3 + 1
        put(U[i], U[j], V[k], 1)
        put(U[j], U[i], V[k], -1)
        put(V[i], V[j], U[k], 1)
        put(V[j], V[i], U[k], -1)
    polar = [[0] * 8 for _ in range(8)]
    polar[E1][E2] = polar[E2][E1] = 1
    for i in (1, 2, 3):
        polar[U[i]][V[i]] = polar[V[i]][U[i]] = 1
    return t, polar, (1, 1, 0, 0, 0, 0, 0, 0)


def _cd_table():
    t = {}
    for i in range(8):
        t[(0, i)] = ((i, 1),)
        t[(i, 0)] = ((i, 1),)
    for i in range(1, 8):
        t[(i, i)] = ((0, -1),)
    for a, b, c in CD_TRIPLES:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            t[(x, y)] = ((z, 1),)
            t[(y, x)] = ((z, -1),)
    polar = [[2 if i == j else 0 for j in range(8)] for i in range(8)]
    return t, polar, (1, 0, 0, 0, 0, 0, 0, 0)


class CayleyAlgebra:
    """An 8-dimensional Cayley algebra over ``field`` in a fixed basis.

    ``basis`` is "std" for {e1, e2, u1, u2, u3, v1, v2, v3} or "cd" for
    {1, w1, ..., w7}.  Coordinate-level methods take and return tuples;
    ``CayleyElement`` wraps them with operators."""

    def __init__(self, field: Field, basis: str = "std"):
        if basis not in ("std", "cd"):
            raise CayleyError(f"unknown basis {basis!r}")
        self.field = field
        self.tag = basis
        self.names = STD_NAMES if basis == "std" else CD_NAMES
        table, polar, unit = _std_table() if basis == "std" else _cd_table()
        self.table = [[table.get((i, j), ()) for j in range(8)] for i in range(8)]
        self.polar_gram = [[field(x) for x in row] for row in polar]
        self.unit = tuple(field(x) for x in unit)
        self._polar_nz = [(i, j, g) for i, row in enumerate(self.polar_gram)
                          for j, g in enumerate(row) if g != 0]

    def __eq__(self, other):
        return (isinstance(other, CayleyAlgebra) and other.field == self.field
                and other.tag == self.tag)

    def __hash__(self):
        return hash((self.field, self.tag))

    # coordinate-level arithmetic

    def mul_c(self, x: Sequence, y: Sequence) -> tuple:
        out = [self.field.zero] * 8
        ynz = [(j, b) for j, b in enumerate(y) if b != 0]
        for i, a in enumerate(x):
            if a == 0:
                continue
            row = self.table[i]
            for j, b in ynz:
                for k, c in row[j]:
                    out[k] = out[k] + c * a * b
        return tuple(out)

    def polar_c(self, x: Sequence, y: Sequence):
        s = self.field.zero
        for i, j, g in self._polar_nz:
            if x[i] != 0 and y[j] != 0:
                s = s + g * x[i] * y[j]
        return s

    def norm_c(self, x: Sequence):
        return self.polar_c(x, x) / 2

    def bn_c(self, x: Sequence, y: Sequence):
        return self.polar_c(x, y) / 2

    def conj_c(self, x: Sequence) -> tuple:
        t = self.polar_c(x, self.unit)
        return tuple(t * u - a for u, a in zip(self.unit, x))

    def para_c(self, x: Sequence, y: Sequence) -> tuple:
        return self.mul_c(self.conj_c(x), self.conj_c(y))

    def triple_c(self, x: Sequence, y: Sequence, z: Sequence) -> tuple:
        return self.mul_c(self.mul_c(x, self.conj_c(y)), z)

    def three_fold_c(self, eps: int, x: Sequence, y: Sequence, z: Sequence) -> tuple:
        if eps == 1:
            head = self.mul_c(self.mul_c(x, self.conj_c(y)), z)
        elif eps == -1:
            head = self.mul_c(x, self.mul_c(self.conj_c(y), z))
        else:
            raise CayleyError("eps must be +1 or -1")
        bxy, byz, bxz = self.bn_c(x, y), self.bn_c(y, z), self.bn_c(x, z)
        return tuple(h - bxy * c - byz * a + bxz * b
                     for h, a, b, c in zip(head, x, y, z))

    def in_c0(self, x: Sequence) -> bool:
        return self.polar_c(x, self.unit) == 0

    def c0_cross_c(self, x: Sequence, y: Sequence) -> tuple:
        if not (self.in_c0(x) and self.in_c0(y)):
            raise CayleyError("c0 cross product needs trace-zero arguments")
        b = self.bn_c(x, y)
        return tuple(p + b * u for p, u in zip(self.mul_c(x, y), self.unit))

    # element-level API

    def element(self, coords: Sequence) -> "CayleyElement":
        if len(coords) != 8:
            raise CayleyError("Cayley elements have 8 coordinates")
        return CayleyElement(self, tuple(self.field(c) for c in coords))

    def basis_element(self, which) -> "CayleyElement":
        i = self.names.index(which) if isinstance(which, str) else int(which)
        return CayleyElement(self, tuple(self.field.one if j == i else self.field.zero
                                         for j in range(8)))

    @property
    def one(self) -> "CayleyElement":
        return CayleyElement(self, self.unit)

    def basis(self) -> list:
        return [self.basis_element(i) for i in range(8)]

    def c0_basis(self) -> list:
        """Coordinate vectors of a basis of the trace-zero subspace."""
        F = self.field
        if self.tag == "cd":
            return [self.basis_element(i).coords for i in range(1, 8)]
        e = (F.one, -F.one) + (F.zero,) * 6
        return [e] + [self.basis_element(i).coords for i in range(2, 8)]

    def left_matrix(self, x: Sequence) -> Matrix:
        """Matrix of y -> x y."""
        return columns_to_matrix([self.mul_c(x, e.coords) for e in self.basis()])

    def right_matrix(self, x: Sequence) -> Matrix:
        return columns_to_matrix([self.mul_c(e.coords, x) for e in self.basis()])

    def para_left_matrix(self, x: Sequence) -> Matrix:
        """Matrix of y -> x . y (para-Cayley product)."""
        return columns_to_matrix([self.para_c(x, e.coords) for e in self.basis()])

    def para_right_matrix(self, x: Sequence) -> Matrix:
        return columns_to_matrix([self.para_c(e.coords, x) for e in self.basis()])

    def conj_matrix(self) -> Matrix:
        return columns_to_matrix([self.conj_c(e.coords) for e in self.basis()])

    def parse_element(self, text: str) -> "CayleyElement":
        """Parse expressions such as "u1+v1", "2*w1-w3" or "1/2*e1"."""
        from re import finditer
        F = self.field
        s = text.replace(" ", "")
        if not s:
            raise CayleyError("empty element expression")
        coords = [F.zero] * 8
        pos = 0
        for m in finditer(r"([+-]?)(?:([0-9/]+)\*)?([a-z]\d|1)", s):
            if m.start() != pos:
                raise CayleyError(f"cannot parse {text!r}")
            pos = m.end()
            sign = -1 if m.group(1) == "-" else 1
            c = F.parse(m.group(2)) if m.group(2) else F.one
            name = m.group(3)
            if name not in self.names:
                if name == "1" and self.tag == "std":
                    coords = [a + sign * c * u for a, u in zip(coords, self.unit)]
                    continue
                raise CayleyError(f"{name!r} is not a basis name of the {self.tag} basis")
            i = self.names.index(name)
            coords[i] = coords[i] + sign * c
        if pos != len(s):
            raise CayleyError(f"cannot parse {text!r}")
        return CayleyElement(self, tuple(coords))


class CayleyElement:
    __slots__ = ("alg", "coords")

    def __init__(self, alg: CayleyAlgebra, coords: tuple):
        self.alg = alg
        self.coords = coords

    def _check(self, other: "CayleyElement"):
        if other.alg != self.alg:
            raise CayleyError("elements live in different bases or fields")

    def __add__(self, other):
        self._check(other)
        return CayleyElement(self.alg, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return CayleyElement(self.alg, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return CayleyElement(self.alg, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, CayleyElement):
            self._check(other)
            return CayleyElement(self.alg, self.alg.mul_c(self.coords, other.coords))
        c = self.alg.field(other)
        return CayleyElement(self.alg, tuple(c * a for a in self.coords))

    def __rmul__(self, other):
        c = self.alg.field(other)
        return CayleyElement(self.alg, tuple(c * a for a in self.coords))

    def __truediv__(self, other):
        c = self.alg.field(other)
        return CayleyElement(self.alg, tuple(a / c for a in self.coords))

    def __eq__(self, other):
        return (isinstance(other, CayleyElement) and other.alg == self.alg
                and other.coords == self.coords)

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        F = self.alg.field
        terms = [f"{F.format(c)}*{nm}" for c, nm in zip(self.coords, self.alg.names) if c != 0]
        return f"<{' + '.join(terms) or '0'} [{self.alg.tag}]>"

    @property
    def bar(self) -> "CayleyElement":
        return conj(self)

    def to_json(self) -> dict:
        F = self.alg.field
        return {"basis": self.alg.tag, "coords": [F.format(c) for c in self.coords]}


def mul(x: CayleyElement, y: CayleyElement) -> CayleyElement:
    return x * y


def norm(x: CayleyElement):
    return x.alg.norm_c(x.coords)


def polar(x: CayleyElement, y: CayleyElement):
    x._check(y)
    return x.alg.polar_c(x.coords, y.coords)


def bn(x: CayleyElement, y: CayleyElement):
    x._check(y)
    return x.alg.bn_c(x.coords, y.coords)


def conj(x: CayleyElement) -> CayleyElement:
    return CayleyElement(x.alg, x.alg.conj_c(x.coords))


def para_mul(x: CayleyElement, y: CayleyElement) -> CayleyElement:
    x._check(y)
    return CayleyElement(x.alg, x.alg.para_c(x.coords, y.coords))


def c0_cross(x: CayleyElement, y: CayleyElement) -> CayleyElement:
    x._check(y)
    return CayleyElement(x.alg, x.alg.c0_cross_c(x.coords, y.coords))


def triple_3c(x: CayleyElement, y: CayleyElement, z: CayleyElement) -> CayleyElement:
    x._check(y)
    x._check(z)
    return CayleyElement(x.alg, x.alg.triple_c(x.coords, y.coords, z.coords))


def three_fold(eps: int, x: CayleyElement, y: CayleyElement, z: CayleyElement) -> CayleyElement:
    x._check(y)
    x._check(z)
    return CayleyElement(x.alg, x.alg.three_fold_c(eps, x.coords, y.coords, z.coords))


def cd_to_std_matrix(field: Field) -> Matrix:
    """Columns are the standard coordinates of 1, w1, ..., w7, using a
    square root i of -1 in ``field``."""
    i = field.sqrt(field(-1))
    if i is None:
        raise CayleyError(f"{field.descriptor} has no square root of -1")
    std = CayleyAlgebra(field, "std")
    e = {nm: std.basis_element(nm) for nm in STD_NAMES}
    cols = [
        e["e1"] + e["e2"],
        i * (e["e1"] - e["e2"]),
        e["u1"] + e["v1"],
        e["u2"] + e["v2"],
        i * (e["u1"] - e["v1"]),
        e["u3"] + e["v3"],
        i * (e["u3"] - e["v3"]),
        i * (e["u2"] - e["v2"]),
    ]
    return columns_to_matrix([c.coords for c in cols])


QUAT_INDICES = (0, 1, 2, 4)
QUAT_NAMES = ("1", "w1", "w2", "w4")


class QuaternionAlgebra:
    """The quaternion subalgebra span{1, w1, w2, w4} of the CD table."""

    def __init__(self, field: Field):
        self.field = field
        self.cd = CayleyAlgebra(field, "cd")

    def embed(self, q: Sequence) -> tuple:
        out = [self.field.zero] * 8
        for i, c in zip(QUAT_INDICES, q):
            out[i] = self.field(c)
        return tuple(out)

    def project(self, x: Sequence) -> tuple:
        for i in range(8):
            if i not in QUAT_INDICES and x[i] != 0:
                raise CayleyError("element leaves the quaternion subalgebra")
        return tuple(x[i] for i in QUAT_INDICES)

    def element(self, coords: Sequence) -> "QuaternionElement":
        return QuaternionElement(self, tuple(self.field(c) for c in coords))

    def basis_element(self, which) -> "QuaternionElement":
        i = QUAT_NAMES.index(which) if isinstance(which, str) else int(which)
        return self.element([1 if j == i else 0 for j in range(4)])

    def mul_c(self, x: Sequence, y: Sequence) -> tuple:
        return self.project(self.cd.mul_c(self.embed(x), self.embed(y)))

    def conj_c(self, x: Sequence) -> tuple:
        return (x[0], -x[1], -x[2], -x[3])

    def norm_c(self, x: Sequence):
        return sum((c * c for c in x), self.field.zero)

    def polar_c(self, x: Sequence, y: Sequence):
        return 2 * sum((a * b for a, b in zip(x, y)), self.field.zero)

    def cross_c(self, x: Sequence, y: Sequence, z: Sequence) -> tuple:
        yb = self.conj_c(y)
        a = self.mul_c(self.mul_c(x, yb), z)
        b = self.mul_c(self.mul_c(z, yb), x)
        return tuple(p - q for p, q in zip(a, b))


class QuaternionElement:
    __slots__ = ("alg", "coords")

    def __init__(self, alg: QuaternionAlgebra, coords: tuple):
        self.alg = alg
        self.coords = coords

    def __mul__(self, other):
        if isinstance(other, QuaternionElement):
            return QuaternionElement(self.alg, self.alg.mul_c(self.coords, other.coords))
        c = self.alg.field(other)
        return QuaternionElement(self.alg, tuple(c * a for a in self.coords))

    __rmul__ = __mul__

    def __add__(self, other):
        return QuaternionElement(self.alg, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return QuaternionElement(self.alg, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return QuaternionElement(self.alg, tuple(-a for a in self.coords))

    def __eq__(self, other):
        return isinstance(other, QuaternionElement) and other.coords == self.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"Quaternion{self.coords}"

    @property
    def bar(self) -> "QuaternionElement":
        return QuaternionElement(self.alg, self.alg.conj_c(self.coords))

    def norm(self):
        return self.alg.norm_c(self.coords)


def quaternion_cross(x: QuaternionElement, y: QuaternionElement, z: QuaternionElement) -> QuaternionElement:
    """X(x, y, z) = x ybar z - z ybar x."""
    return QuaternionElement(x.alg, x.alg.cross_c(x.coords, y.coords, z.coords))


def std_to_cd_matrix(field: Field) -> Matrix:
    return inverse(cd_to_std_matrix(field), field)


__all__ = [
    "CayleyAlgebra", "CayleyElement", "CayleyError", "QuaternionAlgebra",
    "QuaternionElement", "mul", "norm", "polar", "bn", "conj", "para_mul",
    "c0_cross", "triple_3c", "three_fold", "quaternion_cross", "cd_to_std_matrix",
    "std_to_cd_matrix", "STD_NAMES", "CD_NAMES",
]
