"""Group gradings on cross products and on the 3C triple system.

A grading is stored as a homogeneous basis with one degree per vector.
Included: closure verification, the delta-map classification of
(n-1)-fold gradings, fine gradings and universal groups, the Cartan and
CD gradings of the Cayley algebra with their coarsenings and shifts, the
three-family classification of gradings of the 3C product, and Weyl
group orders with search oracles."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from itertools import combinations, permutations, product
from math import factorial
from typing import Dict, Optional, Sequence

from .abgroup import AbGroup, GroupElem, fine_n1_presentation, hom
from .cayley import CayleyAlgebra
from .crossprod import CrossProduct, build_c0, build_star, build_three_fold, build_triple_3c
from .linalg import (
    QuadSpace, columns_to_matrix, det, format_matrix, identity, independent_subset,
    inverse, matvec, parse_matrix,
)
from .scalars import Field, QQ, parse_field


class GradingError(ValueError):
    pass


# ----------------------------------------------------------------------------
# data model


class Grading:
    """A G-grading given by a homogeneous basis ``basis`` (vectors in the
    coordinates of ``structure``) and ``degrees``."""

    def __init__(self, structure: CrossProduct, group: AbGroup, basis: Sequence[Sequence],
                 degrees: Sequence[GroupElem], name: str = ""):
        F = structure.field
        if len(basis) != structure.dim or len(degrees) != len(basis):
            raise GradingError("need one degree per basis vector and dim many vectors")
        if any(g.group != group for g in degrees):
            raise GradingError("degrees must lie in the grading group")
        self.structure = structure
        self.group = group
        self.basis = [[F(x) for x in v] for v in basis]
        self.degrees = list(degrees)
        self.name = name
        self._P = columns_to_matrix(self.basis)
        if det(self._P, F) == 0:
            raise GradingError("homogeneous vectors do not form a basis")
        self._Pinv = None
        self._standard = self.basis == identity(F, len(self.basis))

    @property
    def field(self) -> Field:
        return self.structure.field

    def coordinates(self, v: Sequence) -> list:
        """Coefficients of v in the homogeneous basis."""
        if self._standard:
            return list(v)
        if self._Pinv is None:
            self._Pinv = inverse(self._P, self.field)
        return matvec(self._Pinv, v)

    def support(self) -> list:
        return sorted(set(self.degrees))

    def components(self) -> Dict[GroupElem, list]:
        out: dict = {}
        for v, g in zip(self.basis, self.degrees):
            out.setdefault(g, []).append(v)
        return out

    def dims(self) -> Dict[GroupElem, int]:
        return {g: len(vs) for g, vs in self.components().items()}

    def with_degrees(self, group: AbGroup, degrees: Sequence[GroupElem], name: str = "") -> "Grading":
        return Grading(self.structure, group, self.basis, degrees, name or self.name)

    def coarsen(self, alpha) -> "Grading":
        """Degrees pushed forward along a homomorphism alpha: G -> G'."""
        return self.with_degrees(alpha.dst, [alpha(g) for g in self.degrees])

    def same_as(self, other: "Grading") -> bool:
        """Componentwise equality (same structure basis and degree per vector)."""
        return (self.group == other.group and self.basis == other.basis
                and self.degrees == other.degrees)

    def to_json(self) -> dict:
        F = self.field
        out = {
            "structure": self.structure.name,
            "field": F.descriptor,
            "group": self.group.presentation(),
            "assignments": [{"vector": [F.format(x) for x in v], "degree": g.exponents()}
                            for v, g in zip(self.basis, self.degrees)],
        }
        if self.structure.algebra is not None:
            out["basis"] = self.structure.algebra.tag
        if self.structure.kind == "star" or self.structure.name.startswith("onefold"):
            out["gram"] = format_matrix(F, self.structure.gram)
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Grading":
        try:
            F = parse_field(data.get("field", "Q"))
            G = AbGroup.from_presentation(data["group"])
            X = _structure_from_json(data, F)
            basis = [[F.parse(x) if isinstance(x, str) else F(x) for x in a["vector"]]
                     for a in data["assignments"]]
            degs = [G.elem(a["degree"]) for a in data["assignments"]]
        except (KeyError, TypeError) as exc:
            raise GradingError(f"malformed grading: {exc}") from None
        return cls(X, G, basis, degs, data.get("name", ""))


def _structure_from_json(data: dict, F: Field) -> CrossProduct:
    s = data["structure"]
    basis = data.get("basis", "std")
    if s == "3c":
        return build_triple_3c(F, basis)
    if s == "x1":
        return build_three_fold(1, 1, F, basis)
    if s == "xm1":
        return build_three_fold(-1, 1, F, basis)
    if s in ("c0", "c0x"):
        return build_c0(F, basis if "basis" in data else "cd")
    if s.startswith("star"):
        return build_star(QuadSpace(F, parse_matrix(F, data["gram"])))
    raise GradingError(f"unsupported structure {s!r}")


@dataclass
class GradingReport:
    passed: bool
    checked: int
    violations: list = dc_field(default_factory=list)

    def to_dict(self) -> dict:
        return {"passed": self.passed, "checked": self.checked,
                "violations": self.violations}


def verify_grading(gr: Grading, max_violations: int = 5) -> GradingReport:
    """X(V_g1, .., V_gr) lies in V_{g1...gr} on all homogeneous basis tuples
    (sorted tuples of distinct vectors suffice for alternating X)."""
    X = gr.structure
    n, r = X.dim, X.arity
    tuples = combinations(range(n), r) if X.is_alternating() else product(range(n), repeat=r)
    viol = []
    checked = 0
    for idx in tuples:
        checked += 1
        val = X.basis_value(idx) if gr._standard else X(*(gr.basis[i] for i in idx))
        if all(v == 0 for v in val):
            continue
        target = gr.group.identity
        for i in idx:
            target = target * gr.degrees[i]
        coords = gr.coordinates(val)
        bad = [k for k, c in enumerate(coords) if c != 0 and gr.degrees[k] != target]
        if bad:
            viol.append({"tuple": list(idx), "expected": target.exponents(),
                         "found": gr.degrees[bad[0]].exponents()})
            if len(viol) >= max_violations:
                break
    return GradingReport(not viol, checked, viol)


def is_fine(gr: Grading) -> bool:
    return all(d == 1 for d in gr.dims().values())


# ----------------------------------------------------------------------------
# (n-1)-fold products: delta maps


class DeltaMap:
    """Finite-support map g -> delta(g) > 0."""

    def __init__(self, group: AbGroup, values: Dict[GroupElem, int]):
        self.group = group
        self.values = {g: int(d) for g, d in values.items() if d}
        if any(d < 0 for d in self.values.values()):
            raise GradingError("delta takes nonnegative values")

    def __call__(self, g: GroupElem) -> int:
        return self.values.get(g, 0)

    @property
    def n(self) -> int:
        return sum(self.values.values())

    @property
    def h(self) -> GroupElem:
        out = self.group.identity
        for g, d in self.values.items():
            out = out * g ** d
        return out

    def check(self):
        h = self.h
        for g, d in self.values.items():
            if self(g.inv() * h) != d:
                raise GradingError(f"delta(g) != delta(g^-1 h) at g={g.exponents()}")

    def __eq__(self, other) -> bool:
        return (isinstance(other, DeltaMap) and self.group == other.group
                and self.values == other.values)

    def to_dict(self) -> dict:
        return {"h": self.h.exponents(),
                "delta": [{"degree": g.exponents(), "dim": d}
                          for g, d in sorted(self.values.items())]}


def delta_of(gr: Grading) -> DeltaMap:
    return DeltaMap(gr.group, gr.dims())


def n1_isomorphic(d1: DeltaMap, d2: DeltaMap) -> bool:
    if d1.group != d2.group:
        raise GradingError("delta maps over different groups")
    return d1 == d2


@dataclass
class FormCompatibility:
    compatible: bool
    h: GroupElem
    pairing_ok: bool
    witness: Optional[tuple] = None


def form_compatibility(gr: Grading, space: Optional[QuadSpace] = None) -> FormCompatibility:
    """h = prod g^delta(g); checks b(V_g1, V_g2) = 0 unless g1 g2 = h, and
    reports whether h = e."""
    space = space or gr.structure.space
    h = delta_of(gr).h
    wit = None
    n = len(gr.basis)
    for i in range(n):
        for j in range(i, n):
            if gr.degrees[i] * gr.degrees[j] != h and space.bform(gr.basis[i], gr.basis[j]) != 0:
                wit = (i, j)
                break
        if wit:
            break
    return FormCompatibility(h.is_identity(), h, wit is None, wit)


def component_types(gr: Grading, space: Optional[QuadSpace] = None) -> dict:
    """For each component: 'nondegenerate', 'isotropic' or 'mixed'."""
    space = space or gr.structure.space
    F = gr.field
    out = {}
    for g, vs in gr.components().items():
        M = [[space.bform(u, v) for v in vs] for u in vs]
        if all(x == 0 for row in M for x in row):
            out[g] = "isotropic"
        elif det(M, F) != 0:
            out[g] = "nondegenerate"
        else:
            out[g] = "mixed"
    return out


def build_gamma_delta(delta: DeltaMap, field: Field = QQ) -> Grading:
    """The grading Gamma(G, delta) of the (n-1)-fold product: delta(g)
    orthonormal vectors in degree g when g^2 = h, and delta(g) hyperbolic
    pairs between degrees g and g^-1 h otherwise.  The form is adjusted to
    discriminant 1 (a -1 on one orthonormal vector, or i on one pair)."""
    delta.check()
    n = delta.n
    if n < 2:
        raise GradingError("need n >= 2")
    h = delta.h
    G = delta.group
    degs: list = []
    blocks: list = []  # ("orth", idx) or ("pair", i, j)
    done = set()
    for g in sorted(delta.values):
        if g in done:
            continue
        partner = g.inv() * h
        if partner == g:
            for _ in range(delta(g)):
                blocks.append(("orth", len(degs)))
                degs.append(g)
            done.add(g)
        else:
            for _ in range(delta(g)):
                blocks.append(("pair", len(degs), len(degs) + 1))
                degs += [g, partner]
            done.update({g, partner})
    B = [[field.zero] * n for _ in range(n)]
    for blk in blocks:
        if blk[0] == "orth":
            B[blk[1]][blk[1]] = field.one
        else:
            B[blk[1]][blk[2]] = B[blk[2]][blk[1]] = field.one
    pairs = sum(1 for b in blocks if b[0] == "pair")
    if pairs % 2:
        orth = next((b for b in blocks if b[0] == "orth"), None)
        if orth is not None:
            B[orth[1]][orth[1]] = -field.one
        else:
            i = field.sqrt(field(-1))
            if i is None:
                raise GradingError(f"discriminant 1 needs sqrt(-1) in {field.descriptor}")
            _, a, b = blocks[0]
            B[a][b] = B[b][a] = i
    X = build_star(QuadSpace(field, B))
    return Grading(X, G, identity(field, n), degs, name="gamma_delta")


def fine_n1(p: int, q: int, n: Optional[int] = None, field: Field = QQ):
    """The fine grading Gamma(U, delta_U) with p + 2q = n; returns (grading, U)."""
    if n is None:
        n = p + 2 * q
    if p < 0 or q < 0 or p + 2 * q != n:
        raise GradingError("need p + 2q = n with p, q >= 0")
    if n < 3:
        raise GradingError("need n >= 3")
    U = fine_n1_presentation(p, q)
    vals: dict = {}
    for g in U.gens():
        vals[g] = vals.get(g, 0) + 1
    gr = build_gamma_delta(DeltaMap(U, vals), field)
    gr.name = f"fine_n1:{p},{q}"
    return gr, U


# ----------------------------------------------------------------------------
# gradings of the 3C product on the Cayley algebra

CARTAN_SUPPORT = {
    0: (-1, -1, -1), 1: (1, 1, 1),
    2: (1, 0, 0), 3: (0, 1, 0), 4: (0, 0, 1),
    5: (-1, 0, 0), 6: (0, -1, 0), 7: (0, 0, -1),
}


def cartan_grading(field: Field = QQ) -> Grading:
    X = build_triple_3c(field, "std")
    Z3 = AbGroup.free(3)
    degs = [Z3.elem(CARTAN_SUPPORT[i]) for i in range(8)]
    return Grading(X, Z3, identity(field, 8), degs, name="cartan")


def gamma_alpha(G: AbGroup, alpha: Sequence[GroupElem], field: Field = QQ) -> Grading:
    """Coarsening of the Cartan grading along alpha: Z^3 -> G (images of
    the three standard generators)."""
    C = cartan_grading(field)
    a = hom(C.group, G, list(alpha))
    if a is None:
        raise GradingError("alpha is not a homomorphism")
    out = C.coarsen(a)
    out.name = "gamma_alpha"
    return out


def _check_elementary(G: AbGroup, gens: Sequence[GroupElem], rank: int) -> frozenset:
    if any(not (g * g).is_identity() for g in gens):
        raise GradingError("generators must have order at most 2")
    H = G.subgroup(gens)
    if len(H) != 2 ** rank:
        raise GradingError(f"generators do not span an elementary 2-group of rank {rank}")
    return H


def gamma_GH(G: AbGroup, gens: Sequence[GroupElem], field: Field = QQ) -> Grading:
    """deg(1) = e, deg(w_i) = h_i for i = 1, 2, 3 (CD basis)."""
    if len(gens) != 3:
        raise GradingError("need three generators")
    _check_elementary(G, gens, 3)
    h1, h2, h3 = gens
    e = G.identity
    degs = [e, h1, h2, h3, h1 * h2, h2 * h3, h1 * h2 * h3, h1 * h3]
    X = build_triple_3c(field, "cd")
    return Grading(X, G, identity(field, 8), degs, name="gamma_GH")


def shift(gr: Grading, h: GroupElem) -> Grading:
    if not (h * h).is_identity():
        raise GradingError("shift element must satisfy h^2 = e")
    return gr.with_degrees(gr.group, [h * g for g in gr.degrees])


def gamma_GHK(G: AbGroup, H_gens: Sequence[GroupElem], K_gens: Sequence[GroupElem],
              h: Optional[GroupElem] = None, field: Field = QQ) -> Grading:
    """Shift of Gamma(G, K) by h in H minus K."""
    H = _check_elementary(G, H_gens, 4)
    K = _check_elementary(G, K_gens, 3)
    if not K <= H:
        raise GradingError("K is not contained in H")
    if h is None:
        h = min(H - K)
    if h not in H or h in K:
        raise GradingError("h must lie in H but not in K")
    out = shift(gamma_GH(G, K_gens, field), h)
    out.name = "gamma_GHK"
    return out


def cd_grading(field: Field = QQ) -> Grading:
    G = AbGroup.from_invariants(0, [2, 2, 2, 2])
    g = G.gens()
    out = gamma_GHK(G, g, g[1:], g[0], field)
    out.name = "cd"
    return out


def trivial_grading(field: Field = QQ) -> Grading:
    G = AbGroup.free(0)
    X = build_triple_3c(field, "std")
    return Grading(X, G, identity(field, 8), [G.identity] * 8, name="trivial")


# classification


@dataclass
class Classification:
    family: int
    alpha: Optional[tuple] = None
    H: Optional[frozenset] = None
    K: Optional[frozenset] = None

    def to_dict(self) -> dict:
        out = {"family": self.family}
        if self.alpha is not None:
            out["alpha"] = [g.exponents() for g in self.alpha]
        if self.H is not None:
            out["H"] = sorted(g.exponents() for g in self.H)
        if self.K is not None:
            out["K"] = sorted(g.exponents() for g in self.K)
        return out


def _isotropic_in(alg: CayleyAlgebra, comp: list, square_trivial: bool):
    """A nonzero isotropic vector of the span of ``comp``, or None; the
    second value flags that a square root was missing."""
    if not square_trivial:
        return comp[0], False
    for v in comp:
        if alg.norm_c(v) == 0:
            return v, False
    F = alg.field
    missing = False
    for a, b in combinations(comp, 2):
        na, nb, nab = alg.norm_c(a), alg.norm_c(b), alg.polar_c(a, b)
        # n(a + t b) = na + t nab + t^2 nb
        disc = nab * nab - 4 * na * nb
        s = F.sqrt(disc)
        if s is None:
            missing = True
            continue
        t = (s - nab) / (2 * nb)
        return [x + t * y for x, y in zip(a, b)], False
    return None, missing or len(comp) > 1


def classify_83(gr: Grading) -> Classification:
    """Decide which of the three families a grading of the 3C product (or
    of X_1 on the Cayley algebra) belongs to, with its parameters."""
    alg = gr.structure.algebra
    if alg is None or gr.structure.arity != 3 or gr.structure.dim != 8:
        raise GradingError("classification applies to 3-fold structures on the Cayley algebra")
    rep = verify_grading(gr)
    if not rep.passed:
        raise GradingError(f"not a grading: {rep.violations[0]}")
    G = gr.group
    e = G.identity
    comps = gr.components()
    x = g = None
    needs_closed = False
    for deg in sorted(comps):
        v, missing = _isotropic_in(alg, comps[deg], (deg * deg).is_identity())
        needs_closed |= missing
        if v is not None:
            x, g = v, deg
            break
    if x is not None:
        return _classify_cartan(gr, alg, comps, x, g)
    if needs_closed:
        raise GradingError("requires closed field: no isotropic homogeneous vector found "
                           "over " + gr.field.descriptor)
    S = frozenset(comps)
    if e in S:
        if len(S) != 8 or G.subgroup(S) != S:
            raise GradingError("support is not an elementary 2-group of rank 3")
        return Classification(2, H=S)
    g0 = min(S)
    K = frozenset(g0 * s for s in S)
    H = S | K
    if len(K) != 8 or G.subgroup(K) != K or len(H) != 16:
        raise GradingError("support is not a coset of a rank 3 elementary 2-group")
    return Classification(3, H=H, K=K)


def _classify_cartan(gr, alg, comps, x, g) -> Classification:
    F = gr.field
    ginv = g.inv()
    y0 = None
    for w in comps.get(ginv, []):
        p = alg.polar_c(x, w)
        if p != 0:
            y0 = [c / p for c in w]
            break
    if y0 is None:
        raise GradingError("no partner for the isotropic vector")
    y = y0
    if g == ginv:
        ny = alg.norm_c(y0)
        y = [a - ny * b for a, b in zip(y0, x)]
    vals, degs = [], []
    for v, d in zip(gr.basis, gr.degrees):
        vals.append(alg.triple_c(x, v, y))
        degs.append(d)
    keep = independent_subset(vals, F)
    if len(keep) != 3:
        raise GradingError("the subspace {x C y} is not 3-dimensional")
    alpha = tuple(degs[k] for k in keep)
    d1, d2, d3 = alpha
    if (d1 * d2 * d3).inv() != g:
        raise GradingError("degree of the isotropic vector is inconsistent")
    expected = sorted(_alpha_apply(alpha, CARTAN_SUPPORT[i]) for i in range(8))
    if expected != sorted(gr.degrees):
        raise GradingError("degrees do not match a Cartan coarsening")
    return Classification(1, alpha=alpha)


def _alpha_apply(alpha: Sequence[GroupElem], v: Sequence[int]) -> GroupElem:
    out = alpha[0].group.identity
    for a, c in zip(alpha, v):
        out = out * a ** c
    return out


_CARTAN_W: Optional[list] = None


def cartan_weyl_matrices() -> list:
    """Integer 3x3 matrices (columns = images of eps_i) permuting the
    Cartan support {+-eps_i, +-(1,1,1)}."""
    global _CARTAN_W
    if _CARTAN_W is None:
        S = set(CARTAN_SUPPORT.values())
        out = []
        for cols in product(sorted(S), repeat=3):
            M = [[cols[j][i] for j in range(3)] for i in range(3)]
            d = (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
                 - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
                 + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))
            if abs(d) != 1:
                continue
            img = {tuple(sum(M[i][j] * s[j] for j in range(3)) for i in range(3)) for s in S}
            if img == S:
                out.append(M)
        _CARTAN_W = out
    return _CARTAN_W


def iso_83(g1: Grading, g2: Grading) -> bool:
    if g1.group != g2.group:
        raise GradingError("gradings over different groups")
    c1, c2 = classify_83(g1), classify_83(g2)
    if c1.family != c2.family:
        return False
    if c1.family == 1:
        for M in cartan_weyl_matrices():
            cols = [[M[i][j] for i in range(3)] for j in range(3)]
            if all(_alpha_apply(c1.alpha, cols[j]) == c2.alpha[j] for j in range(3)):
                return True
        return False
    return c1.H == c2.H and c1.K == c2.K


# ----------------------------------------------------------------------------
# Weyl groups


def weyl_order(which: str) -> int:
    """Orders by formula.  Ids: 'n1:p,q', 'cartan', 'cd', 'g2-cartan',
    'g2-z2^3', 'onefold:s'."""
    if which.startswith("n1:"):
        p, q = (int(t) for t in which[3:].split(","))
        return factorial(p) * 2 ** q * factorial(q)
    if which.startswith("onefold:"):
        s = int(which.split(":")[1])
        return factorial(s) ** 2
    table = {"cartan": 48, "cd": 1344, "g2-cartan": 12, "g2-z2^3": 168}
    if which not in table:
        raise GradingError(f"unknown Weyl group id {which!r}")
    return table[which]


def _cd_monomial_table():
    F = QQ
    alg = CayleyAlgebra(F, "cd")
    E = [e.coords for e in alg.basis()]
    T = {}
    for a, b, c in product(range(8), repeat=3):
        v = alg.triple_c(E[a], E[b], E[c])
        nz = [(k, x) for k, x in enumerate(v) if x != 0]
        if len(nz) != 1 or abs(nz[0][1]) != 1:
            raise AssertionError("3C product is not monomial on the CD basis")
        T[(a, b, c)] = (nz[0][0], 0 if nz[0][1] > 0 else 1)
    return T


def _gf2_solvable(rows: list, nvars: int) -> Optional[int]:
    """Rows are (mask, rhs); returns the solution-space dimension or None."""
    piv: dict = {}
    for mask, rhs in rows:
        for bit in sorted(piv, reverse=True):
            if mask >> bit & 1:
                mask ^= piv[bit][0]
                rhs ^= piv[bit][1]
        if mask == 0:
            if rhs:
                return None
            continue
        piv[mask.bit_length() - 1] = (mask, rhs)
    return nvars - len(piv)


def _cd_search_branch(first: int) -> tuple:
    T = _cd_monomial_table()
    by_max: dict = {}
    for (a, b, c), (d, s) in T.items():
        by_max.setdefault(max(a, b, c, d), []).append((a, b, c, d))
    count = total = 0
    pi = [None] * 8
    used = [False] * 8

    def consistent(k):
        for a, b, c, d in by_max.get(k, ()):
            if T[(pi[a], pi[b], pi[c])][0] != pi[d]:
                return False
        return True

    def rec(k):
        nonlocal count, total
        if k == 8:
            rows = []
            for (a, b, c), (d, s) in T.items():
                s2 = T[(pi[a], pi[b], pi[c])][1]
                rows.append(((1 << a) ^ (1 << b) ^ (1 << c) ^ (1 << d), s ^ s2))
            free = _gf2_solvable(rows, 8)
            if free is not None:
                count += 1
                total += 2 ** free
            return
        for j in range(8):
            if used[j] or (k == 0 and j != first):
                continue
            pi[k], used[j] = j, True
            if consistent(k):
                rec(k + 1)
            used[j] = False
        pi[k] = None

    rec(0)
    return count, total


@dataclass
class WeylSearch:
    permutations: int
    signed_maps: int


def weyl_search_cd(threads: int = 1) -> WeylSearch:
    """Self-equivalences of the CD grading of the 3C product over Q.

    Components are the lines through 1, w1..w7, so a self-equivalence is a
    signed permutation of this basis; signs are forced by the norm.  The
    search prunes over the permutation and solves the sign conditions as a
    linear system over F_2.  ``permutations`` is the order of the Weyl
    group (maps modulo those fixing every component)."""
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(_cd_search_branch, range(8)))
    else:
        parts = [_cd_search_branch(f) for f in range(8)]
    return WeylSearch(sum(p[0] for p in parts), sum(p[1] for p in parts))


def weyl_search_n1(p: int, q: int, field: Optional[Field] = None) -> int:
    """Weyl group order of Gamma(U, delta_U) by brute force: count the
    permutations pi of the homogeneous basis for which some scalars make
    e_a -> lam_a e_pi(a) an element of O~(V, b)."""
    field = field or parse_field("Fp:5")
    if not field.is_finite():
        raise GradingError("the brute-force search needs a finite field")
    gr, _ = fine_n1(p, q, field=field)
    B = gr.structure.gram
    n = len(B)
    units = [x for x in field.elements() if x != 0]
    nzB = [(a, b) for a in range(n) for b in range(n)]
    count = 0
    for pi in permutations(range(n)):
        sign = _perm_sign(pi)
        found = False
        for lam in product(units, repeat=n):
            d = field(sign)
            for x in lam:
                d = d * x
            if all(lam[a] * lam[b] * B[pi[a]][pi[b]] == d * B[a][b] for a, b in nzB):
                found = True
                break
        count += found
    return count


def _perm_sign(pi: Sequence[int]) -> int:
    s = 1
    for i in range(len(pi)):
        for j in range(i + 1, len(pi)):
            if pi[i] > pi[j]:
                s = -s
    return s


BUILTIN_GRADINGS = ("cartan", "cd", "trivial", "n1:p,q")


def builtin_grading(name: str, field: Field = QQ) -> Grading:
    if name == "cartan":
        return cartan_grading(field)
    if name == "cd":
        return cd_grading(field)
    if name == "trivial":
        return trivial_grading(field)
    if name.startswith("n1:"):
        try:
            p, q = (int(t) for t in name[3:].split(","))
        except ValueError:
            raise GradingError(f"bad grading id {name!r}") from None
        return fine_n1(p, q, field=field)[0]
    raise GradingError(f"unknown grading {name!r}; choose from {', '.join(BUILTIN_GRADINGS)}")


__all__ = [
    "Grading", "GradingError", "GradingReport", "verify_grading", "is_fine", "DeltaMap",
    "delta_of", "n1_isomorphic", "form_compatibility", "FormCompatibility", "component_types",
    "build_gamma_delta", "fine_n1", "cartan_grading", "gamma_alpha", "gamma_GH", "shift",
    "gamma_GHK", "cd_grading", "trivial_grading", "Classification", "classify_83", "iso_83",
    "cartan_weyl_matrices", "weyl_order", "weyl_search_cd", "weyl_search_n1", "WeylSearch",
    "builtin_grading", "BUILTIN_GRADINGS",
]
