"""Automorphism groups of cross products: membership tests, the determinant
witness, the Lie algebra of O~(V, b), the unitary group for 1-fold
products, and the Clifford / spin / triality machinery on the Cayley
algebra (as explicit 8x8 and 16x16 matrices)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence, Union

from .cayley import CayleyAlgebra
from .crossprod import CrossProduct, build_c0
from .linalg import (
    Matrix, QuadSpace, det, identity, independent_subset, inverse, matmul, matvec,
    nullspace, rank, transpose,
)
from .scalars import Field, FieldError, QuadraticExtension, QQ


class AutError(ValueError):
    pass


def _gram(b) -> Matrix:
    return b.gram if isinstance(b, QuadSpace) else b


def _field_of(b, default: Optional[Field] = None) -> Field:
    if isinstance(b, QuadSpace):
        return b.field
    if default is None:
        raise AutError("a field is needed when b is a bare matrix")
    return default


def _pullback(phi: Matrix, B: Matrix) -> Matrix:
    return matmul(matmul(transpose(phi), B), phi)


# ----------------------------------------------------------------------------
# membership


def in_O(phi: Matrix, b) -> bool:
    B = _gram(b)
    return _pullback(phi, B) == B


def in_O_plus(phi: Matrix, b, field: Optional[Field] = None) -> bool:
    F = _field_of(b, field)
    return in_O(phi, b) and det(phi, F) == 1


def in_O_tilde(phi: Matrix, b, field: Optional[Field] = None) -> bool:
    """b(phi u, phi v) = det(phi) b(u, v) with det(phi) != 0."""
    F = _field_of(b, field)
    d = det(phi, F)
    if d == 0:
        return False
    B = _gram(b)
    return _pullback(phi, B) == [[d * x for x in row] for row in B]


def automorphism_witness(phi: Matrix, X: CrossProduct) -> Optional[tuple]:
    """First basis tuple where phi(X(e_I)) != X(phi e_I), or None."""
    if X.kind == "star":
        return None if in_O_tilde(phi, X.gram, X.field) else ("form",)
    F, n, r = X.field, X.dim, X.arity
    if len(phi) != n or any(len(row) != n for row in phi):
        raise AutError("shape mismatch")
    zero = [F.zero] * n
    T = {idx: list(X.basis_value(idx)) for idx in product(range(n), repeat=r)}
    # contract each slot with phi: T'(.., a, ..) = sum_a' phi[a'][a] T(.., a', ..)
    for s in range(r):
        new = {}
        for idx in T:
            acc = zero
            for a2 in range(n):
                c = phi[a2][idx[s]]
                if c != 0:
                    val = T[idx[:s] + (a2,) + idx[s + 1:]]
                    acc = [x + c * y for x, y in zip(acc, val)]
            new[idx] = acc
        T = new
    for idx in product(range(n), repeat=r):
        if matvec(phi, X.basis_value(idx)) != T[idx]:
            return idx
    return None


def is_automorphism(phi: Matrix, X: CrossProduct) -> bool:
    """phi X(v_1..v_r) = X(phi v_1, .., phi v_r) on all basis tuples.  For
    (n-1)-fold products this is the O~ condition on the attached form."""
    return automorphism_witness(phi, X) is None


def det_root_check(phi: Matrix, b, field: Optional[Field] = None):
    F = _field_of(b, field)
    if not in_O_tilde(phi, b, F):
        raise AutError("map is not in O~(V, b)")
    n = len(phi)
    d = det(phi, F)
    if d ** (n - 2) != 1:
        raise AssertionError(f"det^(n-2) != 1 for n={n}, det={F.format(d)}")
    return d


@dataclass
class Witness:
    field: Field
    phi: Matrix
    t: object
    det: object


def witness_with_det(space: QuadSpace, r) -> Witness:
    """A map in O~(V, b), possibly after adjoining t = sqrt(r), with det r.

    On an orthogonal basis v_1..v_n it sends v_i to t v_i for i < n and v_n
    to t^(n-1) v_n, so det = t^(2(n-1)) = r^(n-1) = r."""
    F, n = space.field, space.dim
    r = F(r)
    if r == 0 or r ** (n - 2) != 1:
        raise AutError(f"r^(n-2) != 1 (n={n}, r={F.format(r)})")
    t = F.sqrt(r)
    E = F
    if t is None:
        try:
            E = QuadraticExtension(F, r)
        except FieldError as exc:
            raise AutError(str(exc)) from None
        t = E.root
    P = [[E(x) for x in row] for row in space.orthogonal_basis()]
    D = [[E.zero] * n for _ in range(n)]
    for i in range(n - 1):
        D[i][i] = t
    D[n - 1][n - 1] = t ** (n - 1)
    phi = matmul(matmul(P, D), inverse(P, E))
    BE = QuadSpace(E, [[E(x) for x in row] for row in space.gram])
    if not in_O_tilde(phi, BE):
        raise AssertionError("witness is not in O~")
    return Witness(E, phi, t, det(phi, E))


# ----------------------------------------------------------------------------
# 1-fold products


def hermitian_form(J: Union[CrossProduct, Matrix], b, field: Optional[Field] = None):
    """h(u, v) = b(u, v) id - b(J u, v) J, returned as the pair of
    coefficients (of id, of J)."""
    F = _field_of(b, field)
    space = b if isinstance(b, QuadSpace) else QuadSpace(F, b)
    Jm = _one_fold_matrix(J)

    def h(u, v):
        return space.bform(u, v), -space.bform(matvec(Jm, u), v)

    return h


def _one_fold_matrix(J) -> Matrix:
    if isinstance(J, CrossProduct):
        if J.arity != 1:
            raise AutError("expected a 1-fold product")
        n = J.dim
        return transpose([list(J.basis_value((k,))) for k in range(n)])
    return J


def is_unitary(phi: Matrix, J, b, field: Optional[Field] = None) -> bool:
    """phi commutes with J and preserves b; cross-checked against h."""
    F = _field_of(b, field)
    Jm = _one_fold_matrix(J)
    direct = matmul(phi, Jm) == matmul(Jm, phi) and in_O(phi, b)
    h = hermitian_form(Jm, b, F)
    n = len(phi)
    cols = transpose(phi)
    e = identity(F, n)
    preserves_h = all(h(cols[i], cols[j]) == h(e[i], e[j]) for i in range(n) for j in range(n))
    commutes = matmul(phi, Jm) == matmul(Jm, phi)
    if direct != (commutes and preserves_h):
        raise AssertionError("unitary check disagrees with h-preservation")
    return direct


# ----------------------------------------------------------------------------
# Lie algebra of O~


@dataclass
class LieBasis:
    basis: list
    dim: int
    has_identity: bool


def lie_otilde(space: QuadSpace) -> LieBasis:
    """{f : b(f u, v) + b(u, f v) = tr(f) b(u, v)}."""
    F, n, B = space.field, space.dim, space.gram
    rows = []
    for i in range(n):
        for j in range(i, n):
            row = [F.zero] * (n * n)
            for k in range(n):
                # b(f e_i, e_j) = sum_k f[k][i] B[k][j]
                row[k * n + i] = row[k * n + i] + B[k][j]
                row[k * n + j] = row[k * n + j] + B[i][k]
            for l in range(n):
                row[l * n + l] = row[l * n + l] - B[i][j]
            rows.append(row)
    ns = nullspace(rows, F)
    mats = [[v[r * n:(r + 1) * n] for r in range(n)] for v in ns]
    ident = [x for row in identity(F, n) for x in row]
    has_id = rank(ns + [ident], F) == len(ns) if ns else False
    return LieBasis(mats, len(ns), has_id)


# ----------------------------------------------------------------------------
# G2


def extend_c0_automorphism(psi: Matrix, field: Field = QQ) -> Matrix:
    """The algebra automorphism of C (CD basis) fixing 1 and acting as psi
    on the trace-zero part."""
    X = build_c0(field)
    if len(psi) != 7 or not is_automorphism(psi, X):
        raise AutError("psi is not an automorphism of the trace-zero cross product")
    alg = X.algebra
    phi = [[field.zero] * 8 for _ in range(8)]
    phi[0][0] = field.one
    for i in range(7):
        for j in range(7):
            phi[i + 1][j + 1] = field(psi[i][j])
    B = [e.coords for e in alg.basis()]
    for a in B:
        for c in B:
            lhs = matvec(phi, alg.mul_c(a, c))
            rhs = alg.mul_c(matvec(phi, a), matvec(phi, c))
            if lhs != list(rhs):
                raise AssertionError("extension is not an algebra automorphism")
    return phi


# ----------------------------------------------------------------------------
# Clifford algebra, spin group, related triples


def _block(A: Matrix, Bm: Matrix, C: Matrix, D: Matrix) -> Matrix:
    return [ra + rb for ra, rb in zip(A, Bm)] + [rc + rd for rc, rd in zip(C, D)]


def _zero8(F: Field) -> Matrix:
    return [[F.zero] * 8 for _ in range(8)]


def clifford_phi(x: Sequence, alg: CayleyAlgebra) -> Matrix:
    """[[0, l_x], [r_x, 0]] on C + C, with l_x y = x.y and r_x y = y.x for
    the para-Cayley product x.y = xbar ybar."""
    Z = _zero8(alg.field)
    return _block(Z, alg.para_left_matrix(x), alg.para_right_matrix(x), Z)


def adjoint(M: Matrix, alg: CayleyAlgebra) -> Matrix:
    """Adjoint relative to n + n on C + C."""
    F = alg.field
    G = _block(alg.polar_gram, _zero8(F), _zero8(F), alg.polar_gram)
    return matmul(matmul(inverse(G, F), transpose(M)), G)


@dataclass
class TriIsometry:
    f0: Matrix
    f1: Matrix
    f2: Matrix
    alg: CayleyAlgebra

    def _relation(self, a: Matrix, b: Matrix, c: Matrix) -> bool:
        alg = self.alg
        E = [e.coords for e in alg.basis()]
        for x in E:
            for y in E:
                if matvec(a, alg.para_c(x, y)) != list(alg.para_c(matvec(b, x), matvec(c, y))):
                    return False
        return True

    def relation_holds(self) -> bool:
        return self._relation(self.f0, self.f1, self.f2)

    def cyclic_identities_hold(self) -> bool:
        return (self._relation(self.f1, self.f2, self.f0)
                and self._relation(self.f2, self.f0, self.f1))

    def isometries(self) -> bool:
        sp = QuadSpace(self.alg.field, self.alg.polar_gram)
        return all(in_O_plus(f, sp) for f in (self.f0, self.f1, self.f2))

    def to_json(self) -> dict:
        fmt = self.alg.field.format
        return {k: [[fmt(x) for x in row] for row in f]
                for k, f in (("f0", self.f0), ("f1", self.f1), ("f2", self.f2))}


def complete_related_triple(f2: Matrix, alg: CayleyAlgebra) -> Optional[TriIsometry]:
    """Given f2, set f1 = conj f2 conj and solve f0 from
    f0(x.y) = f1(x).f2(y); None if no related triple with f0(1) = 1 exists."""
    F = alg.field
    C = alg.conj_matrix()
    f1 = matmul(matmul(C, f2), C)
    E = [e.coords for e in alg.basis()]
    pairs = [(x, y) for x in E for y in E]
    prods = [alg.para_c(x, y) for x, y in pairs]
    chosen = independent_subset(prods, F)
    if len(chosen) != 8:
        raise AssertionError("para-Cayley products do not span")
    Z = transpose([list(prods[k]) for k in chosen])
    Y = transpose([list(alg.para_c(matvec(f1, pairs[k][0]), matvec(f2, pairs[k][1])))
                   for k in chosen])
    f0 = matmul(Y, inverse(Z, F))
    tri = TriIsometry(f0, f1, f2, alg)
    if matvec(f0, alg.unit) != list(alg.unit) or not tri.relation_holds():
        return None
    return tri


@dataclass
class SpinElement:
    clifford: Matrix
    triple: TriIsometry


def spin_element_from_vectors(xs: Sequence[Sequence], alg: CayleyAlgebra) -> SpinElement:
    """prod Phi(1) Phi(x_i) = diag(prod L_{x_i}, prod R_{x_i}); the triple is
    (chi, prod R, prod L) with chi found by completing the related triple."""
    F = alg.field
    if len(xs) % 2:
        raise AutError("need an even number of vectors")
    total = F.one
    for x in xs:
        if len(x) != 8 or not alg.in_c0(x):
            raise AutError("all vectors must lie in the trace-zero subspace")
        total = total * alg.norm_c(x)
    if total != 1:
        raise AutError("product of norms must be 1")
    M = identity(F, 16)
    e0 = clifford_phi(alg.unit, alg)
    for x in xs:
        M = matmul(M, matmul(e0, clifford_phi(x, alg)))
    rho_minus = [row[:8] for row in M[:8]]
    rho_plus = [row[8:] for row in M[8:]]
    tri = complete_related_triple(rho_minus, alg)
    if tri is None or tri.f1 != rho_plus:
        raise AssertionError("spin element does not give a related triple")
    return SpinElement(M, tri)


def random_spin_vectors(alg: CayleyAlgebra, rng, pairs: int = 1) -> list:
    """Vectors (a, c, a/n(a), c/n(c), ...) with product of norms 1."""
    F = alg.field
    out = []
    basis = alg.c0_basis()
    while len(out) < 4 * pairs:
        v = [F.zero] * 8
        for b in basis:
            c = F.random(rng)
            v = [s + c * t for s, t in zip(v, b)]
        if alg.norm_c(v) != 0:
            out.append(v)
    vs = []
    for k in range(pairs):
        a, c = out[4 * k], out[4 * k + 1]
        vs += [a, c, [x / alg.norm_c(a) for x in a], [x / alg.norm_c(c) for x in c]]
    return vs


# ----------------------------------------------------------------------------
# orbit census


@dataclass
class OrbitCensus:
    target: str
    orbit_size: int
    target_size: int
    equal: bool
    generators: int

    def to_dict(self) -> dict:
        return {"target": self.target, "orbit_size": self.orbit_size,
                "target_size": self.target_size, "equal": self.equal,
                "generators": self.generators}


ORBIT_TARGETS = ("unit_sphere", "isotropic", "pair")


def _generator_pool(alg: CayleyAlgebra) -> list:
    F = alg.field
    base = alg.c0_basis()
    vals = (1, -1)
    cands = []
    m = len(base)
    for i in range(m):
        for s in vals:
            cands.append([F(s) * x for x in base[i]])
    for i in range(m):
        for j in range(i + 1, m):
            for s in vals:
                for t in vals:
                    cands.append([F(s) * x + F(t) * y for x, y in zip(base[i], base[j])])
    return [c for c in cands if alg.norm_c(c) in (F.one, -F.one)]


def orbit_generators(alg: CayleyAlgebra, count: int = 16) -> list:
    """Matrices L_a L_b with a, b trace-zero and n(a) n(b) = 1, in a fixed order."""
    pool = _generator_pool(alg)
    out = []
    for a in pool:
        for b in pool:
            if a is b or alg.norm_c(a) * alg.norm_c(b) != 1:
                continue
            out.append(matmul(alg.left_matrix(a), alg.left_matrix(b)))
            if len(out) == count:
                return out
    return out


def orbit_census(field: Field, target: str) -> OrbitCensus:
    """Closure of 1, e1 or (e1, e2) under products L_a L_b, compared with an
    exhaustive enumeration of the unit sphere, the nonzero isotropic
    vectors, or the hyperbolic pairs."""
    import numpy as np

    if target not in ORBIT_TARGETS:
        raise AutError(f"unknown target {target!r}")
    q = field.characteristic
    if not field.is_finite() or getattr(field, "p", None) != q:
        raise AutError("orbit census needs a prime field")
    if q > 5 or (target == "pair" and q > 3):
        raise AutError(f"field too large for the {target} census (q={q})")
    alg = CayleyAlgebra(field, "std")
    G = np.array([[int(x.v) for x in row] for row in alg.polar_gram], dtype=np.int64)
    inv2 = pow(2, -1, q)
    dim = 8
    nvec = q ** dim
    powers = q ** np.arange(dim, dtype=np.int64)
    allv = (np.arange(nvec, dtype=np.int64)[:, None] // powers) % q
    normv = (np.einsum("ij,jk,ik->i", allv, G, allv) * inv2) % q

    def encode(V):
        return (V * powers).sum(axis=1)

    def bfs(start_codes, gens_np, width):
        size = nvec ** width
        seen = np.zeros(size, dtype=bool)
        seen[start_codes] = True
        frontier = np.array(start_codes, dtype=np.int64)
        while frontier.size:
            parts = [allv[(frontier // nvec ** w) % nvec] for w in range(width)]
            new = []
            for M in gens_np:
                code = np.zeros(frontier.size, dtype=np.int64)
                for w, P in enumerate(parts):
                    code += encode((P @ M.T) % q) * nvec ** w
                code = code[~seen[code]]
                code = np.unique(code)
                seen[code] = True
                new.append(code)
            frontier = np.concatenate(new) if new else np.array([], dtype=np.int64)
        return int(seen.sum())

    e1 = [1, 0, 0, 0, 0, 0, 0, 0]
    e2 = [0, 1, 0, 0, 0, 0, 0, 0]
    if target == "unit_sphere":
        start, width = [int(encode(np.array([[int(x.v) for x in alg.unit]]))[0])], 1
        tsize = int((normv == 1).sum())
    elif target == "isotropic":
        start, width = [int(encode(np.array([e1]))[0])], 1
        tsize = int((normv == 0).sum()) - 1
    else:
        start = [int(encode(np.array([e1]))[0] + encode(np.array([e2]))[0] * nvec)]
        width = 2
        iso = allv[normv == 0]
        iso = iso[iso.any(axis=1)]
        polar = (iso @ G @ allv.T) % q
        tsize = int(((polar == 1) & (normv[None, :] == 0)).sum())
    count = 16
    for _ in range(2):
        gens = orbit_generators(alg, count)
        gens_np = [np.array([[int(x.v) for x in row] for row in M], dtype=np.int64) for M in gens]
        osize = bfs(start, gens_np, width)
        if osize == tsize:
            break
        count *= 2
    return OrbitCensus(target, osize, tsize, osize == tsize, len(gens))


__all__ = [
    "AutError", "in_O", "in_O_plus", "in_O_tilde", "is_automorphism", "automorphism_witness",
    "det_root_check", "witness_with_det", "Witness", "hermitian_form", "is_unitary",
    "lie_otilde", "LieBasis", "extend_c0_automorphism", "clifford_phi", "adjoint",
    "TriIsometry", "complete_related_triple", "spin_element_from_vectors", "SpinElement",
    "random_spin_vectors", "orbit_census", "orbit_generators", "OrbitCensus", "ORBIT_TARGETS",
]
