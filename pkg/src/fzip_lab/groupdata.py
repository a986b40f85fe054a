"""GL(d) with a diagonal cocharacter: weight grading of gl(d), the
subgroups M, P+, P-, U+, U-, the isomorphism U+ = g_1, and the
p-operation.

The G_m-action is conjugation by diag(t^{w_1}, ..., t^{w_d}); the adjoint
weight of the matrix unit E_ab is w_a - w_b.  Subgroups are represented by
entry predicates, so membership is O(d^2) and enumeration over F_q is a
direct product scan in lexicographic order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from . import matrix as mat


class GroupDataError(ValueError):
    pass


class NotOneBounded(GroupDataError):
    pass


class NotInSubgroup(GroupDataError):
    pass


class NotInG1(GroupDataError):
    pass


@dataclass(frozen=True)
class Cochar:
    """Matrix size d and weight vector w of the diagonal cocharacter."""

    d: int
    w: tuple

    def __post_init__(self):
        object.__setattr__(self, "w", tuple(int(x) for x in self.w))
        if len(self.w) != self.d or self.d < 1:
            raise GroupDataError("weight vector length must equal d >= 1")

    @staticmethod
    def normal_form(d, dprime):
        """w = (1,...,1,0,...,0) with dprime ones."""
        if not 0 <= dprime <= d:
            raise GroupDataError("need 0 <= d' <= d")
        return Cochar(d, (1,) * dprime + (0,) * (d - dprime))

    def check_one_bounded(self):
        w = self.w
        for a in range(self.d):
            for b in range(self.d):
                if w[a] - w[b] > 1:
                    raise NotOneBounded(
                        f"weight w_{a+1}-w_{b+1} = {w[a]-w[b]} > 1 at pair {(a, b)}"
                    )


class GradedGroupData:
    """Cochar plus the eigenspace bases g_i, i in {-1, 0, 1}, as sets of
    matrix-unit positions."""

    def __init__(self, cochar: Cochar):
        cochar.check_one_bounded()
        self.cochar = cochar
        d, w = cochar.d, cochar.w
        basis = {-1: [], 0: [], 1: []}
        for a in range(d):
            for b in range(d):
                basis[w[a] - w[b]].append((a, b))
        self.basis = {i: tuple(v) for i, v in basis.items()}
        self.d = d
        # block structure of M: indices grouped by weight, descending
        vals = sorted(set(w), reverse=True)
        self.blocks = tuple(
            tuple(a for a in range(d) if w[a] == v) for v in vals
        )

    def dim(self, i):
        return len(self.basis.get(i, ()))

    @property
    def g1(self):
        return self.basis[1]

    def positions(self, kind):
        w = self.cochar.w
        d = self.d
        if kind == "M":
            cond = lambda a, b: w[a] == w[b]
        elif kind == "Pplus":
            cond = lambda a, b: w[a] >= w[b]
        elif kind == "Pminus":
            cond = lambda a, b: w[a] <= w[b]
        elif kind == "Uplus":
            cond = lambda a, b: w[a] > w[b]
        elif kind == "Uminus":
            cond = lambda a, b: w[a] < w[b]
        else:
            raise GroupDataError(f"unknown subgroup kind {kind!r}")
        return tuple(
            (a, b) for a in range(d) for b in range(d) if cond(a, b)
        )

    def subgroup(self, kind):
        return SubgroupSpec(self, kind)

    def __repr__(self):
        return f"GradedGroupData(d={self.d}, w={list(self.cochar.w)})"


@lru_cache(maxsize=None)
def grading(cochar: Cochar) -> GradedGroupData:
    """Eigenspace decomposition of gl(d); rejects non-1-bounded weights."""
    return GradedGroupData(cochar)


class SubgroupSpec:
    """One of M, Pplus, Pminus, Uplus, Uminus as an entry predicate."""

    UNIPOTENT = ("Uplus", "Uminus")

    def __init__(self, ggd, kind):
        self.ggd = ggd
        self.kind = kind
        self.free = ggd.positions(kind)
        self.m_positions = ggd.positions("M")
        self.allowed = set(self.free) | (
            set(self.m_positions) if kind in self.UNIPOTENT else set()
        )

    def contains(self, F, A):
        d = self.ggd.d
        for a in range(d):
            for b in range(d):
                if A[a][b] and (a, b) not in self.allowed:
                    return False
        if self.kind in self.UNIPOTENT:
            for (a, b) in self.m_positions:
                expected = 1 if a == b else 0
                if A[a][b] != expected:
                    return False
            return True
        return mat.mat_det(F, A) != 0

    def enumerate(self, F):
        """All F_q-points in lexicographic order of the free entries."""
        d = self.ggd.d
        unipotent = self.kind in self.UNIPOTENT
        for vals in itertools.product(F.elements(), repeat=len(self.free)):
            rows = [[0] * d for _ in range(d)]
            if unipotent:
                for a in range(d):
                    rows[a][a] = 1
            for (a, b), v in zip(self.free, vals):
                rows[a][b] = v
            A = mat.from_rows(rows)
            if unipotent or mat.mat_det(F, A) != 0:
                yield A

    def order(self, F):
        q = F.q
        if self.kind in self.UNIPOTENT:
            return q ** len(self.free)
        m_order = 1
        for block in self.ggd.blocks:
            m_order *= gl_order(q, len(block))
        if self.kind == "M":
            return m_order
        i = 1 if self.kind == "Pplus" else -1
        return m_order * q ** self.ggd.dim(i)


def gl_order(q, n):
    out = 1
    for i in range(n):
        out *= q ** n - q ** i
    return out


def levi_project(F, ggd, g):
    """Zero the off-M entries of g in P+ or P-; the retraction to M."""
    plus = ggd.subgroup("Pplus").contains(F, g)
    minus = ggd.subgroup("Pminus").contains(F, g)
    if not plus and not minus:
        raise NotInSubgroup("matrix lies in neither P+ nor P-")
    m_pos = set(ggd.positions("M"))
    return mat.from_rows(
        [
            [g[a][b] if (a, b) in m_pos else 0 for b in range(ggd.d)]
            for a in range(ggd.d)
        ]
    )


def u_plus_iso(F, ggd, N):
    """g_1 -> U+, N -> I + N; inverse of the canonical isomorphism.

    A group homomorphism from (g_1, +): products of two g_1 matrix units
    land in weight 2, which vanishes under 1-boundedness.
    """
    g1 = set(ggd.basis[1])
    for a in range(ggd.d):
        for b in range(ggd.d):
            if N[a][b] and (a, b) not in g1:
                raise NotInG1(f"entry {(a, b)} is outside g_1")
    return mat.mat_add(F, mat.identity(F, ggd.d), N)


def p_operation(F, X):
    """The p-operation of gl(d): the p-th matrix power."""
    return mat.mat_pow(F, X, F.p)


def matrix_unit(F, d, a, b, c=1):
    rows = [[0] * d for _ in range(d)]
    rows[a][b] = c
    return mat.from_rows(rows)


# ---------------------------------------------------------------------------
# point-level structure checks (the testable content of the structure lemma)


def check_semidirect_factorization(F, ggd, sign):
    """P = M . U with unique factorization g = m * u."""
    pkind = "Pplus" if sign > 0 else "Pminus"
    ukind = "Uplus" if sign > 0 else "Uminus"
    P = ggd.subgroup(pkind)
    U = ggd.subgroup(ukind)
    M = ggd.subgroup("M")
    count = 0
    for g in P.enumerate(F):
        m = levi_project(F, ggd, g)
        if not M.contains(F, m):
            return False
        u = mat.mat_mul(F, mat.mat_inv(F, m), g)
        if not U.contains(F, u):
            return False
        count += 1
    # cardinality |P| = |M| * |U| makes the factorization map bijective
    return count == M.order(F) * U.order(F) == P.order(F)


def check_levi_multiplicative(F, ggd, pairs):
    for g1, g2 in pairs:
        lhs = levi_project(F, ggd, mat.mat_mul(F, g1, g2))
        rhs = mat.mat_mul(
            F, levi_project(F, ggd, g1), levi_project(F, ggd, g2)
        )
        if lhs != rhs:
            return False
    return True


def check_intersection_is_levi(F, ggd):
    """P+ and P- intersect in M (predicate level plus exhaustive points)."""
    plus = set(ggd.positions("Pplus"))
    minus = set(ggd.positions("Pminus"))
    if plus & minus != set(ggd.positions("M")):
        return False
    Pp = ggd.subgroup("Pplus")
    Pm = ggd.subgroup("Pminus")
    M = ggd.subgroup("M")
    both = [g for g in Pp.enumerate(F) if Pm.contains(F, g)]
    return sorted(map(mat.mat_key, both)) == sorted(
        mat.mat_key(m) for m in M.enumerate(F)
    )


def check_open_cell_injective(F, ggd):
    """U- x M x U+ -> G is injective on F_q-points."""
    Um = list(ggd.subgroup("Uminus").enumerate(F))
    M = list(ggd.subgroup("M").enumerate(F))
    Up = list(ggd.subgroup("Uplus").enumerate(F))
    seen = set()
    for v in Um:
        for m in M:
            vm = mat.mat_mul(F, v, m)
            for u in Up:
                seen.add(mat.mat_key(mat.mat_mul(F, vm, u)))
    return len(seen) == len(Um) * len(M) * len(Up)


def check_cardinalities(F, ggd):
    q = F.q
    if ggd.subgroup("Uplus").order(F) != q ** ggd.dim(1):
        return False
    if ggd.subgroup("Uminus").order(F) != q ** ggd.dim(-1):
        return False
    expected_m = 1
    for block in ggd.blocks:
        expected_m *= gl_order(q, len(block))
    actual_m = sum(1 for _ in ggd.subgroup("M").enumerate(F))
    actual_up = sum(1 for _ in ggd.subgroup("Uplus").enumerate(F))
    return actual_m == expected_m and actual_up == q ** ggd.dim(1)


def check_dimension_identities(ggd):
    d = ggd.d
    dim_m = len(ggd.positions("M"))
    dim_up = ggd.dim(1)
    dim_um = ggd.dim(-1)
    dim_pp = len(ggd.positions("Pplus"))
    dim_pm = len(ggd.positions("Pminus"))
    return (
        dim_um + dim_m + dim_up == d * d
        and dim_pp + dim_pm - dim_m == d * d
        and dim_pp == dim_m + dim_up
        and dim_pm == dim_m + dim_um
    )


def check_bracket_grading(F, ggd):
    """[g_i, g_j] is supported in g_{i+j} (zero when out of range)."""
    d = ggd.d
    for i, base_i in ggd.basis.items():
        for j, base_j in ggd.basis.items():
            for (a, b) in base_i:
                for (c, e) in base_j:
                    X = matrix_unit(F, d, a, b)
                    Y = matrix_unit(F, d, c, e)
                    br = mat.mat_sub(
                        F, mat.mat_mul(F, X, Y), mat.mat_mul(F, Y, X)
                    )
                    target = set(ggd.basis.get(i + j, ()))
                    for r in range(d):
                        for s in range(d):
                            if br[r][s] and (r, s) not in target:
                                return False
    return True
