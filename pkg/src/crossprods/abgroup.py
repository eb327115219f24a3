"""Finitely generated abelian groups given by generators and relations.

Elements are stored in Smith normal form coordinates: free coordinates
first (integers), then one residue per invariant factor d_i > 1."""

from __future__ import annotations

from math import gcd, lcm
from typing import Iterable, Optional, Sequence


class GroupError(ValueError):
    pass


def smith_normal_form(R: Sequence[Sequence[int]], m: Optional[int] = None):
    """Return (D, U, V, Vinv) with U R V = D diagonal, U and V unimodular,
    d_1 | d_2 | ... and all d_i >= 0."""
    k = len(R)
    m = len(R[0]) if R else (m or 0)
    A = [list(map(int, row)) for row in R]
    U = [[int(i == j) for j in range(k)] for i in range(k)]
    V = [[int(i == j) for j in range(m)] for i in range(m)]
    Vi = [row[:] for row in V]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (A, V):
            for row in M:
                row[i], row[j] = row[j], row[i]
        Vi[i], Vi[j] = Vi[j], Vi[i]

    def add_row(dst, src, q):  # row_dst += q row_src
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst += q col_src
        for M in (A, V):
            for row in M:
                row[dst] += q * row[src]
        Vi[src] = [a - q * b for a, b in zip(Vi[src], Vi[dst])]

    t = 0
    while t < min(k, m):
        nz = [(abs(A[i][j]), i, j) for i in range(t, k) for j in range(t, m) if A[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = A[t][t]
            for i in range(t + 1, k):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
            for j in range(t + 1, m):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
            rest = ([(abs(A[i][t]), i, t) for i in range(t + 1, k) if A[i][t]]
                    + [(abs(A[t][j]), t, j) for j in range(t + 1, m) if A[t][j]])
            if rest:
                _, i, j = min(rest)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, k) for j in range(t + 1, m)
                        if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return A, U, V, Vi


def _parse_presentation(data: dict):
    try:
        names = list(data["generators"])
        rels = data.get("relations", [])
    except (TypeError, KeyError):
        raise GroupError("presentation needs a 'generators' list") from None
    index = {name: i for i, name in enumerate(names)}
    rows = []
    for rel in rels:
        row = [0] * len(names)
        for tok in rel:
            sign = -1 if tok.startswith("-") else 1
            name = tok.lstrip("-+")
            if name not in index:
                raise GroupError(f"unknown generator {name!r} in relation")
            row[index[name]] += sign
        rows.append(row)
    return names, rows


class AbGroup:
    """Z^m modulo the row span of an integer relation matrix."""

    def __init__(self, m: int, relations: Sequence[Sequence[int]] = (),
                 names: Optional[Sequence[str]] = None):
        if m < 0:
            raise GroupError("generator count must be nonnegative")
        rel = [list(map(int, r)) for r in relations]
        if any(len(r) != m for r in rel):
            raise GroupError("relation length differs from the generator count")
        self.m = m
        self.relations = rel
        self.names = list(names) if names else [f"g{i + 1}" for i in range(m)]
        D, _, V, Vi = smith_normal_form(rel, m)
        diag = [D[i][i] for i in range(min(len(D), m))]
        diag += [0] * (m - len(diag))
        self._V, self._Vi = V, Vi
        # coordinate layout: free columns, then torsion columns with d > 1
        self._free_cols = [i for i, d in enumerate(diag) if d == 0]
        self._tors_cols = [i for i, d in enumerate(diag) if d > 1]
        self.rank = len(self._free_cols)
        self.torsion = [diag[i] for i in self._tors_cols]
        self._mods = [0] * self.rank + self.torsion

    # constructors

    @classmethod
    def free(cls, k: int) -> "AbGroup":
        return cls(k, [], [f"e{i + 1}" for i in range(k)])

    @classmethod
    def from_invariants(cls, rank: int, torsion: Sequence[int]) -> "AbGroup":
        m = rank + len(torsion)
        rel = []
        for j, d in enumerate(torsion):
            row = [0] * m
            row[rank + j] = d
            rel.append(row)
        return cls(m, rel)

    @classmethod
    def from_presentation(cls, m_or_data, relations: Sequence[Sequence[int]] = ()) -> "AbGroup":
        if isinstance(m_or_data, dict):
            names, rows = _parse_presentation(m_or_data)
            return cls(len(names), rows, names)
        return cls(int(m_or_data), relations)

    def presentation(self) -> dict:
        rels = []
        for row in self.relations:
            toks = []
            for name, c in zip(self.names, row):
                toks += ([name] if c > 0 else ["-" + name]) * abs(c)
            rels.append(toks)
        return {"generators": list(self.names), "relations": rels}

    # structure

    def iso_type(self) -> tuple:
        return self.rank, tuple(self.torsion)

    def is_finite(self) -> bool:
        return self.rank == 0

    def order(self) -> Optional[int]:
        if self.rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def describe(self) -> str:
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " x ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"AbGroup({self.describe()})"

    # elements

    def _reduce(self, coords: Sequence[int]) -> tuple:
        return tuple(c % d if d else c for c, d in zip(coords, self._mods))

    def elem(self, exponents: Sequence[int]) -> "GroupElem":
        if len(exponents) != self.m:
            raise GroupError(f"expected {self.m} exponents")
        y = [sum(int(x) * self._V[i][j] for i, x in enumerate(exponents)) for j in range(self.m)]
        coords = [y[j] for j in self._free_cols] + [y[j] for j in self._tors_cols]
        return GroupElem(self, self._reduce(coords))

    def from_coords(self, coords: Sequence[int]) -> "GroupElem":
        if len(coords) != len(self._mods):
            raise GroupError("wrong number of normal-form coordinates")
        return GroupElem(self, self._reduce(coords))

    def gen(self, which) -> "GroupElem":
        i = self.names.index(which) if isinstance(which, str) else int(which)
        return self.elem([int(j == i) for j in range(self.m)])

    def gens(self) -> list:
        return [self.gen(i) for i in range(self.m)]

    @property
    def identity(self) -> "GroupElem":
        return GroupElem(self, (0,) * len(self._mods))

    def exponents_of(self, g: "GroupElem") -> list:
        """A representative exponent vector over the generators."""
        y = [0] * self.m
        for c, j in zip(g.coords, self._free_cols + self._tors_cols):
            y[j] = c
        return [sum(y[i] * self._Vi[i][j] for i in range(self.m)) for j in range(self.m)]

    def elements(self) -> list:
        if self.rank:
            raise GroupError("infinite group")
        out = [()]
        for d in self.torsion:
            out = [c + (x,) for c in out for x in range(d)]
        return [GroupElem(self, c) for c in out]

    def subgroup(self, gens: Iterable["GroupElem"]) -> frozenset:
        """Elements of the subgroup generated by finite-order ``gens``."""
        S = {self.identity}
        frontier = [self.identity]
        gens = list(gens)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = x * g
                    if y not in S:
                        S.add(y)
                        nxt.append(y)
            frontier = nxt
            if len(S) > 1 << 20:
                raise GroupError("subgroup too large to enumerate")
        return frozenset(S)

    def __eq__(self, other) -> bool:
        return (isinstance(other, AbGroup) and self.m == other.m
                and self.relations == other.relations and self.names == other.names)

    def __hash__(self) -> int:
        return hash((self.m, tuple(map(tuple, self.relations))))


class GroupElem:
    __slots__ = ("group", "coords")

    def __init__(self, group: AbGroup, coords: tuple):
        self.group = group
        self.coords = coords

    def _same(self, other: "GroupElem"):
        if not isinstance(other, GroupElem) or other.group != self.group:
            raise GroupError("elements belong to different groups")

    def __mul__(self, other: "GroupElem") -> "GroupElem":
        self._same(other)
        return GroupElem(self.group, self.group._reduce([a + b for a, b in zip(self.coords, other.coords)]))

    def __pow__(self, k: int) -> "GroupElem":
        return GroupElem(self.group, self.group._reduce([k * a for a in self.coords]))

    def inv(self) -> "GroupElem":
        return self ** -1

    def __truediv__(self, other: "GroupElem") -> "GroupElem":
        return self * other.inv()

    def is_identity(self) -> bool:
        return not any(self.coords)

    def order(self) -> Optional[int]:
        """None stands for infinite order."""
        g = self.group
        if any(self.coords[:g.rank]):
            return None
        out = 1
        for c, d in zip(self.coords[g.rank:], g.torsion):
            out = lcm(out, d // gcd(c, d))
        return out

    def exponents(self) -> list:
        return self.group.exponents_of(self)

    def __eq__(self, other) -> bool:
        return (isinstance(other, GroupElem) and self.coords == other.coords
                and self.group == other.group)

    def __hash__(self) -> int:
        return hash(self.coords)

    def __lt__(self, other: "GroupElem") -> bool:
        return self.coords < other.coords

    def __repr__(self) -> str:
        return f"<{','.join(map(str, self.coords))}>"


def op(a: GroupElem, b: GroupElem) -> GroupElem:
    return a * b


def order_of(a: GroupElem) -> Optional[int]:
    return a.order()


class Hom:
    def __init__(self, src: AbGroup, dst: AbGroup, images: Sequence[GroupElem]):
        self.src, self.dst, self.images = src, dst, list(images)

    def __call__(self, g: GroupElem) -> GroupElem:
        if g.group != self.src:
            raise GroupError("element is not in the source group")
        return self.apply_exponents(g.exponents())

    def apply_exponents(self, x: Sequence[int]) -> GroupElem:
        out = self.dst.identity
        for img, e in zip(self.images, x):
            if e:
                out = out * img ** e
        return out


def hom(src: AbGroup, dst: AbGroup, images: Sequence[GroupElem]) -> Optional[Hom]:
    """The homomorphism sending generator i to images[i], or None when the
    images violate a relation of ``src``."""
    if len(images) != src.m:
        raise GroupError("need one image per generator")
    if any(g.group != dst for g in images):
        raise GroupError("images must lie in the target group")
    h = Hom(src, dst, images)
    for row in src.relations:
        if not h.apply_exponents(row).is_identity():
            return None
    return h


def fine_n1_presentation(p: int, q: int) -> AbGroup:
    """U = <x_1..x_p, y_1..y_q, z_1..z_q | x_i^2 = y_j z_j = x_1..x_p y_1..y_q z_1..z_q>."""
    names = [f"x{i + 1}" for i in range(p)] + [f"y{j + 1}" for j in range(q)] + [f"z{j + 1}" for j in range(q)]
    m = p + 2 * q
    terms = []
    for i in range(p):
        row = [0] * m
        row[i] = 2
        terms.append(row)
    for j in range(q):
        row = [0] * m
        row[p + j] = row[p + q + j] = 1
        terms.append(row)
    terms.append([1] * m)
    rels = [[a - b for a, b in zip(t, terms[0])] for t in terms[1:]]
    return AbGroup(m, rels, names)


__all__ = ["AbGroup", "GroupElem", "GroupError", "Hom", "hom", "op", "order_of",
           "smith_normal_form", "fine_n1_presentation"]
