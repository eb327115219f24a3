"""r-fold cross products: representation, axiom checks, the four families of
constructions, the admissible-form solver and the eps-identity sweep."""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from itertools import combinations, combinations_with_replacement, product
from typing import Optional, Sequence

from .cayley import CayleyAlgebra, QuaternionAlgebra
from .exterior import StarOperator, _sort_sign
from .linalg import (
    Matrix, QuadSpace, columns_to_matrix, det, diag, format_matrix, identity,
    inverse, is_zero_vector, matmul, matvec, nullspace, parse_matrix, trace,
)
from .scalars import Field, QQ, parse_field

DEFAULT_SEED = 0x5EED
EXHAUSTIVE_LIMIT = 3_000_000


class CrossProductError(ValueError):
    pass


class CrossProduct:
    """A multilinear map X: V^r -> V on V = F^n.

    The payload is either a structure tensor (dict from index tuples to
    nonzero value vectors) or a lazy star evaluator.  ``gram`` is the
    attached bilinear form, if any.  The same class carries trilinear
    structures that are not cross products (the 3C product)."""

    def __init__(self, field: Field, dim: int, arity: int, *, tensor: Optional[dict] = None,
                 star: Optional[StarOperator] = None, gram: Optional[Matrix] = None,
                 name: str = "", algebra: Optional[CayleyAlgebra] = None):
        if (tensor is None) == (star is None):
            raise CrossProductError("give exactly one of tensor or star")
        self.field = field
        self.dim = dim
        self.arity = arity
        self.tensor = tensor
        self.star = star
        self.gram = gram
        self.name = name
        self.algebra = algebra
        self._table: Optional[dict] = None
        self._alternating: Optional[bool] = None

    @property
    def kind(self) -> str:
        return "star" if self.star is not None else "tensor"

    @property
    def space(self) -> Optional[QuadSpace]:
        return None if self.gram is None else QuadSpace(self.field, self.gram)

    def with_gram(self, gram: Matrix) -> "CrossProduct":
        X = CrossProduct(self.field, self.dim, self.arity, tensor=self.tensor, star=self.star,
                         gram=[[self.field(x) for x in row] for row in gram],
                         name=self.name, algebra=self.algebra)
        X._table, X._alternating = self._table, self._alternating
        return X

    def basis_value(self, idx: Sequence[int]) -> tuple:
        if self.star is not None:
            return tuple(self.star.basis_value(idx))
        v = self.tensor.get(tuple(idx))
        return v if v is not None else (self.field.zero,) * self.dim

    def basis_table(self) -> dict:
        """Values on every basis r-tuple (star products are evaluated here
        tuple by tuple; nothing of order n^(n-1) is kept between calls
        unless the caller keeps the dict)."""
        if self.tensor is not None:
            if self._table is None:
                self._table = {idx: self.basis_value(idx)
                               for idx in product(range(self.dim), repeat=self.arity)}
            return self._table
        return {idx: self.basis_value(idx)
                for idx in product(range(self.dim), repeat=self.arity)}

    def __call__(self, *vs: Sequence) -> list:
        if len(vs) != self.arity:
            raise CrossProductError(f"expected {self.arity} arguments, got {len(vs)}")
        if any(len(v) != self.dim for v in vs):
            raise CrossProductError("argument has the wrong dimension")
        if self.star is not None:
            return self.star(vs)
        F = self.field
        out = [F.zero] * self.dim
        for idx, val in self.tensor.items():
            c = F.one
            for v, i in zip(vs, idx):
                c = c * v[i]
                if c == 0:
                    break
            else:
                out = [o + c * y for o, y in zip(out, val)]
        return out

    def is_alternating(self) -> bool:
        """Exact check on basis tuples (exhaustive by multilinearity)."""
        if self.star is not None:
            return True
        if self._alternating is None:
            ok = True
            for idx in product(range(self.dim), repeat=self.arity):
                sign, srt = _sort_sign(idx)
                val = self.basis_value(idx)
                if sign == 0:
                    ok = is_zero_vector(val)
                else:
                    ref = self.basis_value(srt)
                    ok = all(a == (b if sign > 0 else -b) for a, b in zip(val, ref))
                if not ok:
                    break
            self._alternating = ok
        return self._alternating

    def scaled(self, alpha) -> "CrossProduct":
        alpha = self.field(alpha)
        if alpha == 0:
            raise CrossProductError("scale factor must be nonzero")
        if self.star is not None:
            raise CrossProductError("scaling is only implemented for tensor payloads")
        t = {k: tuple(alpha * x for x in v) for k, v in self.tensor.items()}
        return CrossProduct(self.field, self.dim, self.arity, tensor=t, gram=self.gram,
                            name=self.name, algebra=self.algebra)

    def to_json(self) -> dict:
        F = self.field
        out = {"arity": self.arity, "dim": self.dim, "kind": self.kind, "field": F.descriptor}
        if self.name:
            out["name"] = self.name
        if self.tensor is not None:
            out["tensor"] = _nested(self, ())
        if self.gram is not None:
            out["gram"] = format_matrix(F, self.gram)
        return out

    @classmethod
    def from_json(cls, data: dict, field: Optional[Field] = None) -> "CrossProduct":
        try:
            F = field or parse_field(data.get("field", "Q"))
            n, r, kind = int(data["dim"]), int(data["arity"]), data["kind"]
        except KeyError as exc:
            raise CrossProductError(f"missing key {exc}") from None
        gram = parse_matrix(F, data["gram"]) if "gram" in data else None
        if kind == "star":
            if gram is None:
                raise CrossProductError("a star product needs a gram matrix")
            X = build_star(QuadSpace(F, gram))
            if X.arity != r or X.dim != n:
                raise CrossProductError("arity/dim do not match the gram matrix")
            return X
        if kind != "tensor" or "tensor" not in data:
            raise CrossProductError("tensor payload missing")
        tensor = {}
        for idx in product(range(n), repeat=r):
            node = data["tensor"]
            for i in idx:
                node = node[i]
            if len(node) != n:
                raise CrossProductError(f"value at {idx} has wrong length")
            val = tuple(F.parse(x) if isinstance(x, str) else F(x) for x in node)
            if not is_zero_vector(val):
                tensor[idx] = val
        return cls(F, n, r, tensor=tensor, gram=gram, name=data.get("name", ""))


def _nested(X: CrossProduct, prefix: tuple):
    if len(prefix) == X.arity:
        return [X.field.format(x) for x in X.basis_value(prefix)]
    return [_nested(X, prefix + (i,)) for i in range(X.dim)]


def tensor_from_function(field: Field, dim: int, arity: int, fn, **kw) -> CrossProduct:
    """Tabulate fn(idx) -> value vector on all basis tuples."""
    tensor = {}
    for idx in product(range(dim), repeat=arity):
        val = tuple(field(x) for x in fn(idx))
        if not is_zero_vector(val):
            tensor[idx] = val
    return CrossProduct(field, dim, arity, tensor=tensor, **kw)


# ----------------------------------------------------------------------------
# constructions


def build_star(space: QuadSpace) -> CrossProduct:
    """(n-1)-fold product *(v_1 ^ ... ^ v_{n-1}); needs disc(B) = 1."""
    st = StarOperator(space)
    n = space.dim
    return CrossProduct(space.field, n, n - 1, star=st, gram=space.gram, name=f"star:{n}")


def one_fold_standard(field: Field, n: int) -> Matrix:
    """Block-diagonal J with blocks [[0,-1],[1,0]]."""
    if n % 2:
        raise CrossProductError("1-fold cross products live in even dimension")
    J = [[field.zero] * n for _ in range(n)]
    for k in range(0, n, 2):
        J[k + 1][k] = field.one
        J[k][k + 1] = -field.one
    return J


def build_one_fold(J: Matrix, field: Field):
    """1-fold cross product v -> J v with an admissible form.

    With a square root i of -1, the eigenspaces of J for i and -i are
    paired hyperbolically.  Without it, {v_k, J v_k} is made orthonormal."""
    J = [[field(x) for x in row] for row in J]
    n = len(J)
    if n == 0 or any(len(r) != n for r in J):
        raise CrossProductError("J must be square")
    if n % 2:
        raise CrossProductError("1-fold cross products need even dimension")
    J2 = matmul(J, J)
    if J2 != [[-x for x in row] for row in identity(field, n)]:
        raise CrossProductError("J^2 != -I")
    if trace(J) != 0:
        raise CrossProductError("trace of J is not zero")
    i = field.sqrt(field(-1))
    if i is not None:
        plus = nullspace([[J[r][c] - (i if r == c else 0) for c in range(n)] for r in range(n)], field)
        minus = nullspace([[J[r][c] + (i if r == c else 0) for c in range(n)] for r in range(n)], field)
        s = len(plus)
        if s != n // 2 or len(minus) != s:
            raise CrossProductError("eigenspaces of J have the wrong dimension")
        P = columns_to_matrix(plus + minus)
        H = [[field.zero] * n for _ in range(n)]
        for k in range(s):
            H[k][s + k] = H[s + k][k] = field.one
    else:
        cols: list = []
        for k in range(n):
            e = [field.one if j == k else field.zero for j in range(n)]
            if len(cols) == n:
                break
            if _rank_with(cols, e, field) > len(cols):
                cols += [e, matvec(J, e)]
        P = columns_to_matrix(cols)
        H = identity(field, n)
    Pinv = inverse(P, field)
    gram = matmul(matmul([list(r) for r in zip(*Pinv)], H), Pinv)
    space = QuadSpace(field, gram)
    X = tensor_from_function(field, n, 1, lambda idx: [J[r][idx[0]] for r in range(n)],
                             gram=space.gram, name=f"onefold:{n}")
    return X, space


def _rank_with(cols: list, v: list, field: Field) -> int:
    from .linalg import rank
    return rank(cols + [v], field)


def build_c0(field: Field = QQ, basis: str = "cd") -> CrossProduct:
    """x * y = x y + b_n(x, y) 1 on the trace-zero part of a Cayley algebra,
    in coordinates of ``CayleyAlgebra.c0_basis``."""
    alg = CayleyAlgebra(field, basis)
    E = alg.c0_basis()
    coord = _c0_coordinates(alg)

    def fn(idx):
        return coord(alg.c0_cross_c(E[idx[0]], E[idx[1]]))

    gram = [[alg.bn_c(a, b) for b in E] for a in E]
    return tensor_from_function(field, 7, 2, fn, gram=gram, name="c0", algebra=alg)


def _c0_coordinates(alg: CayleyAlgebra):
    if alg.tag == "cd":
        return lambda x: x[1:]
    # x = a (e1 - e2) + sum of u/v parts when x lies in C0
    return lambda x: (x[0],) + tuple(x[2:])


def build_three_fold(eps: int = 1, alpha=1, field: Field = QQ, basis: str = "std") -> CrossProduct:
    """alpha * X_eps on the Cayley algebra, with b_n attached."""
    alpha = field(alpha)
    if alpha == 0:
        raise CrossProductError("alpha must be nonzero")
    if eps not in (1, -1):
        raise CrossProductError("eps must be +1 or -1")
    alg = CayleyAlgebra(field, basis)
    B = [e.coords for e in alg.basis()]

    def fn(idx):
        return [alpha * c for c in alg.three_fold_c(eps, B[idx[0]], B[idx[1]], B[idx[2]])]

    gram = [[alg.bn_c(a, b) for b in B] for a in B]
    name = "x1" if eps == 1 else "xm1"
    return tensor_from_function(field, 8, 3, fn, gram=gram, name=name, algebra=alg)


def build_triple_3c(field: Field = QQ, basis: str = "std") -> CrossProduct:
    """The 3C product {x y z} = (x ybar) z, with b_n attached as its form."""
    alg = CayleyAlgebra(field, basis)
    B = [e.coords for e in alg.basis()]
    gram = [[alg.bn_c(a, b) for b in B] for a in B]
    return tensor_from_function(field, 8, 3, lambda idx: alg.triple_c(B[idx[0]], B[idx[1]], B[idx[2]]),
                                gram=gram, name="3c", algebra=alg)


def build_quaternion_cross(field: Field = QQ) -> CrossProduct:
    """X(x, y, z) = x ybar z - z ybar x on span{1, w1, w2, w4}, relative to
    the polar form of the norm."""
    Q = QuaternionAlgebra(field)
    B = [Q.basis_element(i).coords for i in range(4)]
    gram = [[Q.polar_c(a, b) for b in B] for a in B]
    return tensor_from_function(field, 4, 3, lambda idx: Q.cross_c(B[idx[0]], B[idx[1]], B[idx[2]]),
                                gram=gram, name="quat")


BUILTINS = ("x1", "xm1", "c0", "quat", "star:n", "onefold:n")


def builtin(name: str, field: Field = QQ) -> CrossProduct:
    if name == "x1":
        return build_three_fold(1, 1, field)
    if name == "xm1":
        return build_three_fold(-1, 1, field)
    if name == "c0":
        return build_c0(field)
    if name == "quat":
        return build_quaternion_cross(field)
    if name.startswith("star:"):
        n = _int_suffix(name)
        if n < 3:
            raise CrossProductError("star products need n >= 3")
        return build_star(QuadSpace(field, identity(field, n)))
    if name.startswith("onefold:"):
        n = _int_suffix(name)
        return build_one_fold(one_fold_standard(field, n), field)[0]
    raise CrossProductError(f"unknown builtin {name!r}; choose from {', '.join(BUILTINS)}")


def _int_suffix(name: str) -> int:
    try:
        return int(name.split(":", 1)[1])
    except ValueError:
        raise CrossProductError(f"bad builtin {name!r}") from None


# ----------------------------------------------------------------------------
# axioms


@dataclass
class AxiomReport:
    a1: bool
    a2: bool
    a1_checked: int
    a2_checked: int
    a2_mode: str
    a1_witness: Optional[str] = None
    a2_witness: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.a1 and self.a2

    def to_dict(self) -> dict:
        return {
            "a1": self.a1, "a1_checked": self.a1_checked, "a1_witness": self.a1_witness,
            "a2": self.a2, "a2_checked": self.a2_checked, "a2_mode": self.a2_mode,
            "a2_witness": self.a2_witness, "passed": self.passed,
        }


def _small_det(M: list, F: Field):
    k = len(M)
    if k == 1:
        return M[0][0]
    if k == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    if k == 3:
        return (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
                - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
                + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))
    A = [row[:] for row in M]
    d = F.one
    for c in range(k):
        p = next((r for r in range(c, k) if A[r][c] != 0), None)
        if p is None:
            return F.zero
        if p != c:
            A[c], A[p] = A[p], A[c]
            d = -d
        d = d * A[c][c]
        inv = F.one / A[c][c]
        for r in range(c + 1, k):
            if A[r][c] != 0:
                f = A[r][c] * inv
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    return d


def verify_axioms(X: CrossProduct, space: Optional[QuadSpace] = None, seed: int = DEFAULT_SEED,
                  samples: int = 1000) -> AxiomReport:
    """Check b(X(v..), v_i) = 0 and b(X(v..), X(v..)) = det(b(v_i, v_j)).

    Axiom 1 is checked in polarized form on all basis tuples.  Axiom 2 is
    a polynomial of degree two in each argument; when n^(2r) is at most
    EXHAUSTIVE_LIMIT it is checked on the grid where each argument runs
    over e_a and e_a + e_b, which determines such a polynomial completely.
    Otherwise ``samples`` seeded random tuples are used."""
    space = space or X.space
    if space is None:
        raise CrossProductError("no bilinear form given or attached")
    F, n, r = X.field, X.dim, X.arity
    if space.dim != n:
        raise CrossProductError("form and product have different dimensions")
    B = space.gram
    table = X.basis_table()
    zero = F.zero

    # axiom 1, polarized: F(I, k) = b(X(e_I), e_k) alternates under swapping
    # the last slot with any argument slot
    bx = {idx: matvec(B, val) if not is_zero_vector(val) else [zero] * n
          for idx, val in table.items()}
    a1, a1_checked, a1_wit = True, 0, None
    for idx, row in bx.items():
        for s in range(r):
            i_s = idx[s]
            for k in range(n):
                other = idx[:s] + (k,) + idx[s + 1:]
                a1_checked += 1
                if row[k] + bx[other][i_s] != 0:
                    a1, a1_wit = False, f"basis tuple {list(idx)}, slot {s}, e_{k}"
                    break
            if not a1:
                break
        if not a1:
            break

    if n ** (2 * r) <= EXHAUSTIVE_LIMIT:
        a2, a2_checked, a2_wit = _a2_grid(X, space, table)
        mode = "exhaustive"
    else:
        a2, a2_checked, a2_wit = _a2_sampled(X, space, seed, samples)
        mode = f"sampled(seed={seed})"
    return AxiomReport(a1, a2, a1_checked, a2_checked, mode, a1_wit, a2_wit)


def _a2_grid(X: CrossProduct, space: QuadSpace, table: dict):
    F, n, r = X.field, X.dim, X.arity
    B = space.gram
    pts = [(a,) for a in range(n)] + list(combinations(range(n), 2))
    m = len(pts)
    G = [[sum((B[a][b] for a in p for b in q), F.zero) for q in pts] for p in pts]
    bnz = [(i, j, g) for i, row in enumerate(B) for j, g in enumerate(row) if g != 0]
    tuples = (combinations_with_replacement(range(m), r) if X.is_alternating()
              else product(range(m), repeat=r))
    checked = 0
    for tup in tuples:
        checked += 1
        Y = None
        for idx in product(*(pts[p] for p in tup)):
            val = table[idx]
            Y = list(val) if Y is None else [y + v for y, v in zip(Y, val)]
        lhs = F.zero
        for i, j, g in bnz:
            if Y[i] != 0 and Y[j] != 0:
                lhs = lhs + Y[i] * g * Y[j]
        rhs = _small_det([[G[p][q] for q in tup] for p in tup], F)
        if lhs != rhs:
            desc = ["e%d" % p[0] if len(p) == 1 else "e%d+e%d" % p for p in (pts[t] for t in tup)]
            return False, checked, f"arguments ({', '.join(desc)}): {F.format(lhs)} != {F.format(rhs)}"
    return True, checked, None


def _a2_sampled(X: CrossProduct, space: QuadSpace, seed: int, samples: int):
    F, n, r = X.field, X.dim, X.arity
    rng = random.Random(seed)
    for k in range(samples):
        vs = [[F.random(rng) for _ in range(n)] for _ in range(r)]
        Y = X(*vs)
        lhs = space.bform(Y, Y)
        rhs = space.gram_det(vs, vs)
        if lhs != rhs:
            return False, k + 1, f"sample {k} (seed {seed}): {F.format(lhs)} != {F.format(rhs)}"
    return True, samples, None


# ----------------------------------------------------------------------------
# eps identity for 3-fold products on an 8-dimensional space

_EVEN3 = ((0, 1, 2), (1, 2, 0), (2, 0, 1))


def epsilon_identity(X: CrossProduct, space: Optional[QuadSpace], eps: int):
    """Check, on all 8^6 basis 6-tuples,

        b(X(u1,u2,u3), X(v1,v2,v3)) = det(b(u_i, v_j))
            + eps * sum over even s, t of b(u_s1, v_t1) b(u_s2, X(u_s3, v_t2, v_t3)).

    Returns (holds, witness, checked).  Stops at the first failure."""
    space = space or X.space
    F, n = X.field, X.dim
    if X.arity != 3:
        raise CrossProductError("the eps identity concerns 3-fold products")
    B = space.gram
    Bn = [[g if g != 0 else None for g in row] for row in B]
    N = n ** 3

    def code(a, b, c):
        return (a * n + b) * n + c

    vals = [X.basis_value(divmod(t // n, n) + (t % n,)) for t in range(N)]
    sparse = [[(k, c) for k, c in enumerate(v) if c != 0] for v in vals]
    # GX[k][t] = b(e_k, X(t))
    GX = [[F.zero] * N for _ in range(n)]
    for t, sp in enumerate(sparse):
        for l, c in sp:
            for k in range(n):
                if Bn[k][l] is not None:
                    GX[k][t] = GX[k][t] + Bn[k][l] * c
    eps = F(eps)
    triples = [divmod(t // n, n) + (t % n,) for t in range(N)]
    checked = 0
    for tu, u in enumerate(triples):
        # P_u[tv] = b(X(u), X(v))
        Pu = [F.zero] * N
        for k, c in sparse[tu]:
            row = GX[k]
            Pu = [p + c * g for p, g in zip(Pu, row)]
        ub = [Bn[x] for x in u]
        for tv, v in enumerate(triples):
            checked += 1
            d = F.zero
            for (i0, i1, i2), sgn in (((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1),
                                      ((0, 2, 1), -1), ((1, 0, 2), -1), ((2, 1, 0), -1)):
                a = ub[0][v[i0]]
                if a is None:
                    continue
                b = ub[1][v[i1]]
                if b is None:
                    continue
                c = ub[2][v[i2]]
                if c is None:
                    continue
                d = d + a * b * c if sgn > 0 else d - a * b * c
            s = F.zero
            for s0, s1, s2 in _EVEN3:
                for t0, t1, t2 in _EVEN3:
                    x = ub[s0][v[t0]]
                    if x is None:
                        continue
                    y = GX[u[s1]][code(u[s2], v[t1], v[t2])]
                    if y != 0:
                        s = s + x * y
            if Pu[tv] != d + eps * s:
                return False, f"u={list(u)}, v={list(v)}", checked
    return True, None, checked


def three_fold_type(X: CrossProduct, space: Optional[QuadSpace] = None) -> Optional[int]:
    """+1 if the eps = +1 identity holds, -1 if the eps = -1 identity holds."""
    for eps in (1, -1):
        if epsilon_identity(X, space, eps)[0]:
            return eps
    return None


# ----------------------------------------------------------------------------
# admissible forms


@dataclass
class AdmissibleForms:
    solution_dim: int
    multipliers: Optional[list] = None
    forms: Optional[list] = None
    reports: list = dc_field(default_factory=list)
    complete: bool = True

    def to_dict(self, F: Field) -> dict:
        out = {"solution_dim": self.solution_dim, "complete": self.complete}
        if self.multipliers is not None:
            out["multipliers"] = [F.format(m) for m in self.multipliers]
            out["forms"] = [format_matrix(F, B) for B in self.forms]
        return out


def _linear_conditions(X: CrossProduct) -> list:
    """Rows of the linear system in the entries B'[i][j], i <= j, expressing
    that b'(X(v..), v_{r+1}) alternates in all r + 1 arguments."""
    F, n, r = X.field, X.dim, X.arity
    col = {}
    for i in range(n):
        for j in range(i, n):
            col[(i, j)] = len(col)
    ncols = len(col)
    if X.is_alternating():
        tuples = list(combinations(range(n), r))
    else:
        tuples = list(product(range(n), repeat=r))
    seen = set()
    rows = []
    for idx in tuples:
        for s in range(r):
            for k in range(n):
                other = idx[:s] + (k,) + idx[s + 1:]
                row = [F.zero] * ncols
                for l, c in enumerate(X.basis_value(idx)):
                    if c != 0:
                        key = col[(min(l, k), max(l, k))]
                        row[key] = row[key] + c
                for l, c in enumerate(X.basis_value(other)):
                    if c != 0:
                        key = col[(min(l, idx[s]), max(l, idx[s]))]
                        row[key] = row[key] + c
                lead = next((x for x in row if x != 0), None)
                if lead is None:
                    continue
                row = [x / lead for x in row]
                tag = tuple(row)
                if tag not in seen:
                    seen.add(tag)
                    rows.append(row)
    return rows, col


def admissible_forms(X: CrossProduct, space: Optional[QuadSpace] = None,
                     seed: int = DEFAULT_SEED) -> AdmissibleForms:
    """All forms b' making X a cross product, found from the linear
    (polarized axiom 1) conditions.  When those cut out a line F*B, axiom 2
    for mu*B reads mu = mu^r, so the candidates are mu*B with
    mu^(r-1) = 1; each candidate is then verified in full."""
    space = space or X.space
    F, n, r = X.field, X.dim, X.arity
    rows, col = _linear_conditions(X)
    ns = nullspace(rows, F, ncols=len(col)) if rows else nullspace([], F, ncols=len(col))
    dim = len(ns)
    if r == 1:
        return AdmissibleForms(dim)
    if dim != 1:
        return AdmissibleForms(dim, complete=False)
    B0 = [[F.zero] * n for _ in range(n)]
    for (i, j), c in col.items():
        B0[i][j] = B0[j][i] = ns[0][c]
    ref = B0
    if space is not None:
        # express the line through the reference form when it lies on it
        i, j = next((i, j) for i in range(n) for j in range(n) if B0[i][j] != 0)
        ratio = space.gram[i][j] / B0[i][j]
        if all(space.gram[a][b] == ratio * B0[a][b] for a in range(n) for b in range(n)):
            ref = space.gram
    mults, forms, reports = [], [], []
    for mu in F.roots_of_unity(r - 1):
        cand = [[mu * x for x in row] for row in ref]
        if det(cand, F) == 0:
            continue
        rep = verify_axioms(X, QuadSpace(F, cand), seed=seed)
        reports.append(rep)
        if rep.passed:
            mults.append(mu)
            forms.append(cand)
    return AdmissibleForms(dim, mults, forms, reports)


def gram_of(space_or_matrix) -> Matrix:
    return space_or_matrix.gram if isinstance(space_or_matrix, QuadSpace) else space_or_matrix


__all__ = [
    "CrossProduct", "CrossProductError", "AxiomReport", "AdmissibleForms", "DEFAULT_SEED",
    "build_star", "build_one_fold", "build_c0", "build_three_fold", "build_triple_3c",
    "build_quaternion_cross", "one_fold_standard", "builtin", "verify_axioms",
    "epsilon_identity", "three_fold_type", "admissible_forms", "tensor_from_function",
    "diag",
]
