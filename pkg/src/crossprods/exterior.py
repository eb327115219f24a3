"""Exterior algebra over a quadratic space, the star operator and the
(n-1)-fold cross product X(v_1, ..., v_{n-1}) = *(v_1 ^ ... ^ v_{n-1})."""

from __future__ import annotations

from itertools import combinations
from typing import Dict, Optional, Sequence, Tuple

from .linalg import LinalgError, QuadSpace, det, inverse, matvec
from .scalars import Field

Blade = Tuple[int, ...]


class ExteriorError(ValueError):
    pass


class ExtElement:
    """Homogeneous element of the exterior algebra, keyed by sorted index tuples."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Optional[Dict[Blade, object]] = None):
        self.degree = degree
        self.coeffs = {}
        for blade, c in (coeffs or {}).items():
            if len(blade) != degree:
                raise ExteriorError(f"blade {blade} has wrong degree")
            if any(blade[i] >= blade[i + 1] for i in range(len(blade) - 1)):
                raise ExteriorError(f"blade {blade} is not strictly increasing")
            if c != 0:
                self.coeffs[blade] = c

    @classmethod
    def scalar(cls, c) -> "ExtElement":
        return cls(0, {(): c})

    @classmethod
    def vector(cls, v: Sequence) -> "ExtElement":
        return cls(1, {(i,): x for i, x in enumerate(v) if x != 0})

    @classmethod
    def blade(cls, indices: Sequence[int], coeff=1) -> "ExtElement":
        """coeff * e_{i1} ^ e_{i2} ^ ... in any index order."""
        sign, srt = _sort_sign(indices)
        if sign == 0:
            return cls(len(indices))
        return cls(len(indices), {srt: coeff * sign})

    def __add__(self, other: "ExtElement") -> "ExtElement":
        if other.degree != self.degree:
            raise ExteriorError("adding elements of different degree")
        out = dict(self.coeffs)
        for b, c in other.coeffs.items():
            out[b] = out[b] + c if b in out else c
        return ExtElement(self.degree, out)

    def __neg__(self) -> "ExtElement":
        return ExtElement(self.degree, {b: -c for b, c in self.coeffs.items()})

    def __sub__(self, other: "ExtElement") -> "ExtElement":
        return self + (-other)

    def scale(self, c) -> "ExtElement":
        return ExtElement(self.degree, {b: c * x for b, x in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return (isinstance(other, ExtElement) and other.degree == self.degree
                and other.coeffs == self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_vector(self, F: Field, n: int) -> list:
        if self.degree != 1:
            raise ExteriorError("only degree-1 elements are vectors")
        v = [F.zero] * n
        for (i,), c in self.coeffs.items():
            v[i] = c
        return v

    def __repr__(self) -> str:
        terms = " + ".join(f"{c}*e{b}" for b, c in sorted(self.coeffs.items()))
        return f"ExtElement(deg={self.degree}: {terms or '0'})"


def _sort_sign(indices: Sequence[int]):
    """Sign of the permutation sorting ``indices`` (0 if there is a repeat)."""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return 0, None
    sign = 1
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return sign, tuple(sorted(idx))


def _merge_sign(a: Blade, b: Blade) -> int:
    inv = sum(1 for x in a for y in b if x > y)
    return -1 if inv % 2 else 1


def wedge(x: ExtElement, y: ExtElement, n: Optional[int] = None) -> ExtElement:
    deg = x.degree + y.degree
    if n is not None and deg > n:
        raise ExteriorError(f"degree {deg} exceeds dimension {n}")
    out: dict = {}
    for a, ca in x.coeffs.items():
        sa = set(a)
        for b, cb in y.coeffs.items():
            if sa.intersection(b):
                continue
            key = tuple(sorted(a + b))
            term = ca * cb if _merge_sign(a, b) > 0 else -(ca * cb)
            out[key] = out[key] + term if key in out else term
    return ExtElement(deg, out)


def _minor(space: QuadSpace, I: Blade, J: Blade):
    B = space.gram
    return det([[B[i][j] for j in J] for i in I], space.field)


def ext_form(space: QuadSpace, x: ExtElement, y: ExtElement):
    """Bilinear extension of b: blades pair by det(b(u_i, v_j))."""
    F = space.field
    if x.degree != y.degree:
        return F.zero
    s = F.zero
    for I, cx in x.coeffs.items():
        for J, cy in y.coeffs.items():
            m = _minor(space, I, J)
            if m != 0:
                s = s + cx * cy * m
    return s


class VolumeElement:
    """omega = lam * e_1 ^ ... ^ e_n with lam the canonical square root of 1/det(B)."""

    def __init__(self, space: QuadSpace):
        F = space.field
        lam = F.sqrt(F.one / space.det())
        if lam is None:
            raise ExteriorError(
                "discriminant is not 1: det(B) is not a square in " + F.descriptor)
        self.space = space
        self.lam = lam
        self.element = ExtElement(space.dim, {tuple(range(space.dim)): lam})


def rescale_to_disc_one(space: QuadSpace):
    """Return (mu, mu*B) with det(mu*B) a square, when such mu exists.

    For odd n, mu = det(B) always works; for even n the square class of
    det(B) cannot change, so B must already have discriminant 1."""
    F = space.field
    d = space.det()
    if F.sqrt(d) is not None:
        return F.one, space
    if space.dim % 2 == 1:
        return d, space.scaled(d)
    raise ExteriorError("no rescaling gives discriminant 1 in even dimension")


def hodge_star(space: QuadSpace, omega: VolumeElement, x: ExtElement) -> ExtElement:
    """The unique *x of degree n-p with b(*x, y) = b(x ^ y, omega) for all y."""
    return StarOperator(space, omega).star(x)


class StarOperator:
    """Caches the blade-basis systems needed by the star operator and
    evaluates the (n-1)-fold cross product lazily."""

    def __init__(self, space: QuadSpace, omega: Optional[VolumeElement] = None):
        if space.dim < 2:
            raise ExteriorError("star cross product needs n >= 2")
        self.space = space
        self.field = space.field
        self.n = space.dim
        self.omega = omega or VolumeElement(space)
        self._inv_gram: dict = {}
        self._cols: Optional[list] = None

    def _blades(self, q: int) -> list:
        return list(combinations(range(self.n), q))

    def _gram_inverse(self, q: int):
        if q not in self._inv_gram:
            blades = self._blades(q)
            G = [[_minor(self.space, I, J) for J in blades] for I in blades]
            inv = inverse(G, self.field)
            if inv is None:
                raise LinalgError("induced form on the exterior power is degenerate")
            self._inv_gram[q] = inv
        return self._inv_gram[q]

    def star(self, x: ExtElement) -> ExtElement:
        q = self.n - x.degree
        if q < 0:
            raise ExteriorError("degree exceeds dimension")
        blades = self._blades(q)
        om = self.omega.element
        rhs = [ext_form(self.space, wedge(x, ExtElement(q, {J: self.field.one})), om)
               for J in blades]
        coeffs = matvec(self._gram_inverse(q), rhs) if blades else []
        return ExtElement(q, dict(zip(blades, coeffs)))

    def columns(self) -> list:
        """Vectors *(e_0 ^ .. ^ e_{k-1} ^ e_{k+1} ^ .. ^ e_{n-1}) for each k."""
        if self._cols is None:
            cols = []
            for k in range(self.n):
                blade = tuple(i for i in range(self.n) if i != k)
                s = self.star(ExtElement(self.n - 1, {blade: self.field.one}))
                cols.append(s.to_vector(self.field, self.n))
            self._cols = cols
        return self._cols

    def basis_value(self, idx: Sequence[int]) -> list:
        n = self.n
        if len(idx) != n - 1:
            raise ExteriorError(f"expected {n - 1} arguments")
        sign, srt = _sort_sign(idx)
        if sign == 0:
            return [self.field.zero] * n
        k = next(i for i in range(n) if i not in srt)
        col = self.columns()[k]
        return list(col) if sign > 0 else [-c for c in col]

    def __call__(self, vs: Sequence[Sequence]) -> list:
        n = self.n
        if len(vs) != n - 1:
            raise ExteriorError(f"expected {n - 1} arguments, got {len(vs)}")
        F = self.field
        out = [F.zero] * n
        cols = self.columns()
        for k in range(n):
            keep = [j for j in range(n) if j != k]
            c = det([[v[j] for j in keep] for v in vs], F)
            if c != 0:
                out = [o + c * y for o, y in zip(out, cols[k])]
        return out


def star_cross(space: QuadSpace, omega: Optional[VolumeElement], vs: Sequence[Sequence]) -> list:
    return StarOperator(space, omega)(vs)
