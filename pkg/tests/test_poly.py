import random

import pytest

from fzip_lab.field import field
from fzip_lab.poly import (
    NotClosed,
    NotPthPower,
    OneForm,
    cartier,
    cartier_basis_decomposition,
    cartier_by_basis,
    d0,
    d1,
    is_closed,
    is_exact,
    poly_pth_root,
    ring,
)


def random_poly(rng, r, deg):
    terms = {}
    for e in r.monomials_up_to(deg):
        terms[e] = rng.randrange(r.field.q)
    return r.mpoly(terms)


def random_closed_form(rng, r, deg):
    """d(u) + sum_i h_i^p x_i^{p-1} dx_i spans all closed forms on the chart."""
    p = r.field.p
    omega = d0(random_poly(rng, r, deg + 1))
    comps = list(omega.comps)
    for i in range(r.n):
        h = random_poly(rng, r, max(deg // p, 0))
        e = [0] * r.n
        e[i] = p - 1
        comps[i] = comps[i] + h.frobenius_power() * r.monomial(e)
    return OneForm(r, comps)


def test_mpoly_arithmetic_f4():
    F = field(2, 2)
    r = ring(F, 1)
    t = F.encode([0, 1])
    x = r.var()
    f = x * x + r.constant(t)
    g = f * f
    assert g.coeff((4,)) == 1
    assert g.coeff((0,)) == F.mul(t, t)
    assert (f - f).is_zero()


def test_d0_product():
    # d(xy) = y dx + x dy
    F = field(3)
    r = ring(F, 2)
    x, y = r.var(0), r.var(1)
    w = d0(x * y)
    assert w.comps[0] == y
    assert w.comps[1] == x


def test_d0_kills_p_powers():
    # p = 2: d(x^2) = 2x dx = 0
    F = field(2)
    r = ring(F, 1)
    x = r.var()
    assert d0(x * x).is_zero()


@pytest.mark.parametrize("p,n", [(2, 2), (3, 2), (2, 3)])
def test_d1_after_d0_is_zero(p, n):
    rng = random.Random(1000 + 10 * p + n)
    r = ring(field(p), n)
    for _ in range(100):
        f = random_poly(rng, r, 6)
        assert d1(d0(f)).is_zero()


def test_poly_pth_root_examples():
    F = field(3)
    r = ring(F, 1)
    x = r.var()
    f = (x + r.one()) ** 3
    assert poly_pth_root(f) == x + r.one()
    assert poly_pth_root(r.zero()).is_zero()
    with pytest.raises(NotPthPower):
        poly_pth_root(x)


def test_poly_pth_root_f4():
    # ((t+1) x)^2 = t x^2 in F_4
    F = field(2, 2)
    r = ring(F, 1)
    t = F.encode([0, 1])
    t1 = F.encode([1, 1])
    f = r.monomial((2,), t)
    assert poly_pth_root(f) == r.monomial((1,), t1)
    assert r.monomial((1,), t1).frobenius_power() == f


@pytest.mark.parametrize("p", [2, 3, 5])
def test_cartier_simple_closed_form(p):
    # C(x^{p-1} dx) = dx
    r = ring(field(p), 1)
    w = OneForm(r, (r.monomial((p - 1,)),))
    assert cartier(w) == OneForm(r, (r.one(),))


def test_cartier_p2_cubic():
    # p = 2: C(x^3 dx) = x dx since h^2 = d(x^3) = x^2
    r = ring(field(2), 1)
    w = OneForm(r, (r.monomial((3,)),))
    assert cartier(w) == OneForm(r, (r.var(),))


@pytest.mark.parametrize("p,n", [(2, 1), (3, 1), (2, 2), (3, 2)])
def test_cartier_kills_exact(p, n):
    rng = random.Random(2000 + 10 * p + n)
    r = ring(field(p), n)
    for _ in range(50):
        w = d0(random_poly(rng, r, 5))
        assert cartier(w).is_zero()


def test_cartier_rejects_non_closed():
    r = ring(field(2), 2)
    x, y = r.var(0), r.var(1)
    w = OneForm(r, (y, r.zero()))  # d(y dx) = -dx^dy != 0
    assert not is_closed(w)
    with pytest.raises(NotClosed):
        cartier(w)


@pytest.mark.parametrize("p,k,n", [(2, 1, 1), (2, 2, 1), (3, 1, 1), (3, 2, 1), (2, 1, 2)])
def test_cartier_o_linearity(p, k, n):
    # C(f^p w) = f C(w)
    rng = random.Random(3000 + 100 * p + 10 * k + n)
    r = ring(field(p, k), n)
    for _ in range(40):
        w = random_closed_form(rng, r, 4)
        f = random_poly(rng, r, 2)
        lhs = cartier(OneForm(r, (f.frobenius_power() * c for c in w.comps)))
        rhs = cartier(w)
        assert lhs == OneForm(r, (f * c for c in rhs.comps))


@pytest.mark.parametrize("p,k", [(2, 1), (2, 2), (3, 1), (3, 2)])
@pytest.mark.parametrize("laurent", [False, True])
def test_cartier_agrees_with_basis_decomposition(p, k, laurent):
    # all closed monomial 1-forms of degree <= 12, every coefficient
    F = field(p, k)
    r = ring(F, 1, laurent)
    degs = range(-12, 13) if laurent else range(0, 13)
    for e in degs:
        for c in F.units():
            w = OneForm(r, (r.monomial((e,), c),))
            assert cartier(w) == cartier_by_basis(w)


def test_basis_decomposition_reconstructs():
    F = field(3)
    r = ring(F, 1)
    rng = random.Random(77)
    for _ in range(30):
        w = random_closed_form(rng, r, 6)
        u, gs = cartier_basis_decomposition(w)
        rebuilt = d0(u)
        for g in gs:
            piece = g.frobenius_power() * r.monomial((F.p - 1,))
            rebuilt = rebuilt + OneForm(r, (piece,))
        assert rebuilt == w


def test_cartier_laurent_dlog():
    # C(dx/x) = dx/x on the Laurent chart
    for p, k in [(2, 1), (2, 2), (3, 1), (5, 1)]:
        r = ring(field(p, k), 1, laurent=True)
        w = OneForm(r, (r.monomial((-1,)),))
        assert cartier(w) == w


@pytest.mark.parametrize("p,q", [(2, 2), (2, 4), (3, 3)])
def test_kernel_of_cartier_is_exact_forms(p, q):
    # n = 1, deg <= D: C(w) = 0  <=>  w exact
    k = 1 if q == p else 2
    F = field(p, k)
    r = ring(F, 1)
    D = 6
    rng = random.Random(4000 + q)
    for _ in range(60):
        w = random_closed_form(rng, r, D)
        in_kernel = cartier(w).is_zero()
        u = is_exact(w)
        if in_kernel:
            assert u is not None and d0(u) == w
        else:
            assert u is None


def test_cartier_surjective_bounded():
    # every target of degree <= 4 is hit by a closed form of degree <= pD+p-1
    for p, k in [(2, 1), (2, 2)]:
        F = field(p, k)
        r = ring(F, 1)
        D = 4
        rng = random.Random(50 + k)
        for _ in range(25):
            eta = random_poly(rng, r, D)
            # preimage: eta^{[p]} * x^{p-1} dx  (the basis section), degree pD+p-1
            w = OneForm(r, (eta.frobenius_power() * r.monomial((p - 1,)),))
            assert w.degree() <= p * D + p - 1
            assert cartier(w) == OneForm(r, (eta,))


def test_is_exact_examples():
    r = ring(field(2), 2)
    x, y = r.var(0), r.var(1)
    w = d0(x * y + x)
    u = is_exact(w)
    assert u is not None and d0(u) == w
    assert is_exact(OneForm(r, (y, r.zero()))) is None
