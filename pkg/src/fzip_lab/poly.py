"""Multivariate polynomial rings over F_q, the de Rham complex in degrees
0-2, and the Cartier operator on closed 1-forms.

The base chart is affine n-space; a 1-variable Laurent chart is available
(nonconstant units exist there, which the multiplicative-type tests need).
Terms are sparse dicts from exponent vectors to nonzero int-encoded
coefficients, iterated in sorted order so all outputs are byte-stable.

The Cartier operator is implemented from the coordinate description
h_i^p = -d_i^{p-1}(f_i); closedness of the input guarantees the p-th root
exists.  An independent basis-decomposition route (exact part plus
g^p x^{p-1} dx pieces) is provided for cross-validation on the 1-variable
chart.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from . import linalg
from .field import FieldSpec


class PolyError(ValueError):
    pass


class NotClosed(PolyError):
    pass


class NotPthPower(PolyError):
    pass


@lru_cache(maxsize=None)
def ring(F: FieldSpec, n: int, laurent: bool = False) -> "PolyRing":
    return PolyRing(F, n, laurent)


class PolyRing:
    """F_q[x_1..x_n], or F_q[x, 1/x] when laurent (n = 1 only)."""

    def __init__(self, F, n, laurent=False):
        if laurent and n != 1:
            raise PolyError("the Laurent chart is 1-variable only")
        if n < 1:
            raise PolyError("need at least one variable")
        self.field = F
        self.n = n
        self.laurent = laurent

    def mpoly(self, terms) -> "MPoly":
        clean = {}
        for e, c in dict(terms).items():
            e = tuple(int(x) for x in e)
            if len(e) != self.n:
                raise PolyError(f"exponent {e} has wrong arity for n={self.n}")
            if not self.laurent and any(x < 0 for x in e):
                raise PolyError(f"negative exponent {e} on the affine chart")
            if c:
                clean[e] = c
        return MPoly(self, clean)

    def zero(self):
        return MPoly(self, {})

    def constant(self, c):
        return self.mpoly({(0,) * self.n: c})

    def one(self):
        return self.constant(1)

    def var(self, i=0):
        e = [0] * self.n
        e[i] = 1
        return self.mpoly({tuple(e): 1})

    def monomial(self, exps, c=1):
        return self.mpoly({tuple(exps): c})

    def monomials_up_to(self, D):
        """Exponent vectors of degree <= D, sorted; Laurent: |e| <= D."""
        if self.laurent:
            return [(e,) for e in range(-D, D + 1)]
        out = [
            e
            for e in itertools.product(range(D + 1), repeat=self.n)
            if sum(e) <= D
        ]
        return sorted(out)

    def zero_form(self):
        return OneForm(self, (self.zero(),) * self.n)

    def __repr__(self):
        base = f"F_{self.field.q}"
        if self.laurent:
            return f"PolyRing({base}[x, 1/x])"
        return f"PolyRing({base}[x_1..x_{self.n}])"

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and (self.n, self.laurent) == (other.n, other.laurent)
        )

    def __hash__(self):
        return hash((self.field, self.n, self.laurent))


class MPoly:
    """Sparse polynomial; coefficients are int encodings in ring.field."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def items(self):
        return sorted(self.terms.items())

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Max total degree (affine) or max |exponent| (Laurent); -1 for 0."""
        if not self.terms:
            return -1
        if self.ring.laurent:
            return max(abs(e[0]) for e in self.terms)
        return max(sum(e) for e in self.terms)

    def coeff(self, exps):
        return self.terms.get(tuple(exps), 0)

    def _check(self, other):
        if self.ring != other.ring:
            raise PolyError("mixed polynomial rings")

    def __add__(self, other):
        self._check(other)
        F = self.ring.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = F.add(out.get(e, 0), c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MPoly(self.ring, out)

    def __neg__(self):
        F = self.ring.field
        return MPoly(self.ring, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        F = self.ring.field
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = F.add(out.get(e, 0), F.mul(c1, c2))
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MPoly(self.ring, out)

    def scale(self, c):
        F = self.ring.field
        if c == 0:
            return self.ring.zero()
        return MPoly(self.ring, {e: F.mul(c, x) for e, x in self.terms.items()})

    def __pow__(self, m):
        if m < 0:
            raise PolyError("negative power")
        out = self.ring.one()
        base = self
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    def diff(self, i):
        """Coordinate derivative d/dx_i."""
        F = self.ring.field
        out = {}
        for e, c in self.terms.items():
            fac = F.from_int(e[i])
            if fac == 0:
                continue
            ne = list(e)
            ne[i] -= 1
            s = F.add(out.get(tuple(ne), 0), F.mul(fac, c))
            if s:
                out[tuple(ne)] = s
            else:
                out.pop(tuple(ne), None)
        return MPoly(self.ring, out)

    def frobenius_power(self):
        """self^p via the additive p-th power map (char p)."""
        F = self.ring.field
        p = F.p
        return MPoly(
            self.ring,
            {
                tuple(p * x for x in e): F.frobenius(c)
                for e, c in self.terms.items()
            },
        )

    def is_pth_power(self):
        p = self.ring.field.p
        return all(x % p == 0 for e in self.terms for x in e)

    def pth_root(self):
        F = self.ring.field
        p = F.p
        out = {}
        for e, c in self.terms.items():
            if any(x % p for x in e):
                raise NotPthPower(f"exponent {e} is not divisible by p={p}")
            out[tuple(x // p for x in e)] = F.pth_root(c)
        return MPoly(self.ring, out)

    def __eq__(self, other):
        return (
            isinstance(other, MPoly)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.items():
            mono = "*".join(
                f"x{i+1}^{x}" if x != 1 else f"x{i+1}"
                for i, x in enumerate(e)
                if x != 0
            )
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)


def poly_pth_root(f: MPoly) -> MPoly:
    """g with g^p = f; NotPthPower if some exponent is not divisible by p."""
    return f.pth_root()


class OneForm:
    """sum_i f_i dx_i with f_i in the ring."""

    __slots__ = ("ring", "comps")

    def __init__(self, ring, comps):
        comps = tuple(comps)
        if len(comps) != ring.n:
            raise PolyError(f"expected {ring.n} components, got {len(comps)}")
        for f in comps:
            if f.ring != ring:
                raise PolyError("component from a different ring")
        self.ring = ring
        self.comps = comps

    def __add__(self, other):
        return OneForm(self.ring, (a + b for a, b in zip(self.comps, other.comps)))

    def __sub__(self, other):
        return OneForm(self.ring, (a - b for a, b in zip(self.comps, other.comps)))

    def __neg__(self):
        return OneForm(self.ring, (-a for a in self.comps))

    def scale(self, c):
        return OneForm(self.ring, (a.scale(c) for a in self.comps))

    def mul_poly(self, f):
        return OneForm(self.ring, (a * f for a in self.comps))

    def is_zero(self):
        return all(f.is_zero() for f in self.comps)

    def degree(self):
        return max(f.degree() for f in self.comps)

    def __eq__(self, other):
        return (
            isinstance(other, OneForm)
            and self.ring == other.ring
            and self.comps == other.comps
        )

    def __hash__(self):
        return hash((self.ring, self.comps))

    def __repr__(self):
        return " + ".join(f"({f}) dx{i+1}" for i, f in enumerate(self.comps))


class TwoForm:
    """sum_{i<j} f_{ij} dx_i ^ dx_j, keyed by the pair (i, j)."""

    __slots__ = ("ring", "comps")

    def __init__(self, ring, comps):
        self.ring = ring
        self.comps = {k: v for k, v in comps.items() if not v.is_zero()}

    def is_zero(self):
        return not self.comps

    def coeff(self, i, j):
        return self.comps.get((i, j), self.ring.zero())

    def __eq__(self, other):
        return (
            isinstance(other, TwoForm)
            and self.ring == other.ring
            and self.comps == other.comps
        )

    def __repr__(self):
        if not self.comps:
            return "0"
        return " + ".join(
            f"({f}) dx{i+1}^dx{j+1}" for (i, j), f in sorted(self.comps.items())
        )


def d0(f: MPoly) -> OneForm:
    """Exterior derivative of a function."""
    return OneForm(f.ring, (f.diff(i) for i in range(f.ring.n)))


def d1(omega: OneForm) -> TwoForm:
    """Exterior derivative of a 1-form; d1(d0(f)) = 0."""
    r = omega.ring
    comps = {}
    for i in range(r.n):
        for j in range(i + 1, r.n):
            comps[(i, j)] = omega.comps[j].diff(i) - omega.comps[i].diff(j)
    return TwoForm(r, comps)


def is_closed(omega: OneForm) -> bool:
    return d1(omega).is_zero()


def cartier(omega: OneForm) -> OneForm:
    """Cartier operator on a closed 1-form: C(omega) = sum h_i dx_i with
    h_i^p = -d_i^{p-1}(f_i).

    Raises NotClosed on non-closed input.  On closed input the p-th root
    always exists; NotPthPower firing would be an internal contradiction.
    """
    if not is_closed(omega):
        raise NotClosed("cartier requires a closed 1-form")
    r = omega.ring
    p = r.field.p
    out = []
    for i, f in enumerate(omega.comps):
        g = f
        for _ in range(p - 1):
            g = g.diff(i)
        g = -g
        if not g.is_pth_power():
            raise NotPthPower(
                "closed form produced a non-p-th-power; internal contradiction"
            )
        out.append(g.pth_root())
    return OneForm(r, out)


def cartier_basis_decomposition(omega: OneForm):
    """Independent route for n = 1: split omega into d(u) plus pieces
    g^p x^{p-1} dx, term by term.  Returns (u, g_list) with
    omega = d0(u) + sum_g (g^p * x^{p-1}) dx.
    """
    r = omega.ring
    if r.n != 1:
        raise PolyError("basis decomposition implemented for n = 1 only")
    F = r.field
    p = F.p
    u_terms = {}
    gs = []
    for (e,), c in omega.comps[0].items():
        if (e + 1) % p == 0:
            # c x^e dx = g^p x^{p-1} dx with g = c^{1/p} x^{(e+1-p)/p}
            gs.append(r.monomial(((e + 1 - p) // p,), F.pth_root(c)))
        else:
            # c x^e = d( c/(e+1) x^{e+1} )
            u_terms[(e + 1,)] = F.div(c, F.from_int(e + 1))
    return r.mpoly(u_terms), gs


def cartier_by_basis(omega: OneForm) -> OneForm:
    """C(omega) from the basis decomposition: exact part dies, each
    g^p x^{p-1} dx contributes g dx."""
    r = omega.ring
    u, gs = cartier_basis_decomposition(omega)
    total = r.zero()
    for g in gs:
        total = total + g
    return OneForm(r, (total,))


def is_exact(omega: OneForm):
    """A potential u with d0(u) = omega (degree <= deg(omega)+1), or None.

    Bounded-degree linear algebra; exactness of a bounded form never needs
    a potential beyond one extra degree (terms of u with all exponents
    divisible by p do not contribute to d0(u)).
    """
    r = omega.ring
    D = max(omega.degree(), 0) + 1
    monos = r.monomials_up_to(D)
    # target coordinates: (component i, exponent) over every slot that can occur
    slots = sorted(
        {(i, e) for i in range(r.n) for e in r.monomials_up_to(D)}
        | {(i, e) for i in range(r.n) for e in omega.comps[i].terms}
    )
    slot_index = {s: idx for idx, s in enumerate(slots)}
    F = r.field
    cols = []
    for m in monos:
        dm = d0(r.monomial(m))
        col = [0] * len(slots)
        for i in range(r.n):
            for e, c in dm.comps[i].terms.items():
                col[slot_index[(i, e)]] = c
        cols.append(col)
    rhs = [0] * len(slots)
    for i in range(r.n):
        for e, c in omega.comps[i].terms.items():
            rhs[slot_index[(i, e)]] = c
    rows = [[cols[j][s] for j in range(len(monos))] for s in range(len(slots))]
    sol = linalg.solve(F, rows, rhs) if slots else [0] * len(monos)
    if sol is None:
        return None
    return r.mpoly({m: c for m, c in zip(monos, sol) if c})
