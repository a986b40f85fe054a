"""Free associative algebra over F_p on two generators x, y.

Implements the decomposition (x+y)^p - x^p - y^p = J_1 + ... + J_{p-1}
into components homogeneous of degree i in y, and Lie-span membership by
exhaustive bracket generation plus linear algebra.  Words are capped at
length p, so everything is small dense linear algebra; no Hall/Lyndon
basis machinery.  The Dynkin-Specht-Wever criterion is deliberately not
used: it fails when p divides the degree, which is exactly the degree-p
case of interest here.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .field import field

SUPPORTED_P = (2, 3, 5, 7)


class FreeLieError(ValueError):
    pass


class NCPoly:
    """Noncommutative polynomial: dict from words over {x, y} to F_p."""

    __slots__ = ("p", "terms")

    def __init__(self, p, terms=None):
        self.p = p
        self.terms = {}
        for w, c in (terms or {}).items():
            c %= p
            if c:
                self.terms[w] = c

    def items(self):
        return sorted(self.terms.items())

    def is_zero(self):
        return not self.terms

    def max_len(self):
        return max((len(w) for w in self.terms), default=0)

    def multidegree(self):
        """(x-degree, y-degree) if homogeneous, else None."""
        degs = {(w.count("x"), w.count("y")) for w in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = (out.get(w, 0) + c) % self.p
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return NCPoly(self.p, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c %= self.p
        return NCPoly(self.p, {w: (c * v) % self.p for w, v in self.terms.items()})

    def __mul__(self, other):
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = (out.get(w, 0) + c1 * c2) % self.p
        return NCPoly(self.p, out)

    def bracket(self, other):
        return self * other - other * self

    def __eq__(self, other):
        return isinstance(other, NCPoly) and self.p == other.p and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            (f"{c}*{w}" if c != 1 else w) for w, c in self.items()
        )


def gen_x(p):
    return NCPoly(p, {"x": 1})


def gen_y(p):
    return NCPoly(p, {"y": 1})


def ad_x_power(p, j):
    """ad_x^j(y) as an NCPoly."""
    u = gen_y(p)
    x = gen_x(p)
    for _ in range(j):
        u = x.bracket(u)
    return u


def jacobson_split(p):
    """Components J_1..J_{p-1} of (x+y)^p - x^p - y^p, J_i of y-degree i."""
    if p not in SUPPORTED_P:
        raise FreeLieError(f"p must be in {SUPPORTED_P}, got {p}")
    s = gen_x(p) + gen_y(p)
    total = NCPoly(p, {"": 1})
    for _ in range(p):
        total = total * s
    total = total - NCPoly(p, {"x" * p: 1}) - NCPoly(p, {"y" * p: 1})
    comps = [NCPoly(p) for _ in range(p - 1)]
    for w, c in total.terms.items():
        i = w.count("y")
        assert 1 <= i <= p - 1
        comps[i - 1] = comps[i - 1] + NCPoly(p, {w: c})
    return comps


def _words(nx, ny):
    """All words with nx x's and ny y's, sorted."""
    if nx == 0:
        return ["y" * ny]
    if ny == 0:
        return ["x" * nx]
    return sorted(
        {w[:i] + "x" + w[i:] for w in _words(nx - 1, ny) for i in range(len(w) + 1)}
    )


def _vec(u, words):
    return [u.terms.get(w, 0) for w in words]


@dataclass
class Membership:
    found: bool
    combination: list | None  # [(coeff, expr)] with expr a nested tuple
    value: NCPoly | None

    def __bool__(self):
        return self.found


def render_expr(expr):
    if isinstance(expr, str):
        return expr
    return f"[{render_expr(expr[0])},{render_expr(expr[1])}]"


def eval_expr(expr, env):
    """Evaluate a bracket expression against an environment of NCPoly (or
    matrices with a .bracket-free interface handled by the caller)."""
    if isinstance(expr, str):
        return env[expr]
    return eval_expr(expr[0], env).bracket(eval_expr(expr[1], env))


def lie_span_components(generators, labels, maxdeg):
    """Graded basis of the Lie subalgebra generated by homogeneous
    generators, up to total degree maxdeg.  Returns
    {multidegree: [(NCPoly, expr), ...]} with linearly independent entries.
    """
    p = generators[0].p
    F = field(p)
    comp = {}
    mats = {}

    def try_add(u, expr):
        if u.is_zero():
            return False
        md = u.multidegree()
        if md is None:
            raise FreeLieError(f"non-homogeneous element {u}")
        words = _words(*md)
        v = _vec(u, words)
        rows = mats.get(md, [])
        if linalg.in_span(F, rows, v) is not None:
            return False
        comp.setdefault(md, []).append((u, expr))
        mats.setdefault(md, []).append(v)
        return True

    for g, lab in zip(generators, labels):
        md = g.multidegree()
        if md is None:
            raise FreeLieError("generators must be homogeneous in multidegree")
        if sum(md) <= maxdeg:
            try_add(g, lab)

    changed = True
    while changed:
        changed = False
        snapshot = [(md, list(lst)) for md, lst in sorted(comp.items())]
        for md1, lst1 in snapshot:
            for md2, lst2 in snapshot:
                tot = (md1[0] + md2[0], md1[1] + md2[1])
                if tot[0] + tot[1] > maxdeg:
                    continue
                for u, eu in lst1:
                    for v, ev in lst2:
                        if try_add(u.bracket(v), (eu, ev)):
                            changed = True
    return comp


def lie_membership(u, generators, labels=None):
    """Whether u lies in the F_p-span of iterated brackets of the
    generators at u's multidegree; returns a certificate when it does.
    """
    if u.max_len() > u.p:
        raise FreeLieError("degree overflow: words longer than p")
    md = u.multidegree()
    if md is None:
        raise FreeLieError("membership is decided per multidegree; u must be homogeneous")
    if labels is None:
        labels = [f"g{i+1}" for i in range(len(generators))]
    comp = lie_span_components(generators, labels, sum(md))
    entries = comp.get(md, [])
    words = _words(*md)
    F = field(u.p)
    rows = [_vec(w, words) for w, _ in entries]
    coeffs = linalg.in_span(F, rows, _vec(u, words))
    if coeffs is None:
        return Membership(False, None, None)
    combination = [
        (c, expr) for c, (_, expr) in zip(coeffs, entries) if c
    ]
    # re-evaluate the certificate independently
    total = NCPoly(u.p)
    for c, (val, _) in zip(coeffs, entries):
        total = total + val.scale(c)
    assert total == u
    return Membership(True, combination, total)


def jacobson_j1_identity(p):
    """J_1 = ad_x^{p-1}(y)."""
    return jacobson_split(p)[0] == ad_x_power(p, p - 1)


def derived_membership_certificates(p):
    """For i >= 2, a certificate that J_i lies in the derived algebra of
    a = <ad_x^j(y) : j >= 0>.

    Generators of y-degree 1 force every y-degree >= 2 element of a into
    [a, a], so plain Lie-span membership decides the derived claim.
    """
    gens = [ad_x_power(p, j) for j in range(p)]
    labels = []
    for j in range(p):
        lab = "y"
        for _ in range(j):
            lab = ("x", lab)
        labels.append(lab)
    out = {}
    for i in range(2, p):
        res = lie_membership(jacobson_split(p)[i - 1], gens, labels)
        if not res.found:
            raise FreeLieError(f"J_{i} not found in [a,a] for p={p}")
        out[i] = res.combination
    return out


def eval_ncpoly(u, F, mx, my):
    """Substitute matrices for x and y; coefficients embed via F_p -> F_q."""
    from . import matrix as mat

    d = len(mx)
    out = mat.zero(F, d)
    for w, c in u.items():
        prod = mat.identity(F, d)
        for ch in w:
            prod = mat.mat_mul(F, prod, mx if ch == "x" else my)
        out = mat.mat_add(F, out, mat.mat_scale(F, F.from_int(c), prod))
    return out
