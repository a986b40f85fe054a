import pytest

from fzip_lab.field import FieldError, FqElem, field

SMALL_FIELDS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2), (2, 3)]


def test_default_moduli():
    # lexicographically smallest monic irreducible, high coefficient first
    assert field(2, 2).modulus == (1, 1, 1)      # t^2 + t + 1
    assert field(3, 2).modulus == (1, 0, 1)      # t^2 + 1
    assert field(2, 3).modulus == (1, 1, 0, 1)   # t^3 + t + 1
    assert field(3, 3).modulus == (1, 2, 0, 1)   # t^3 + 2t + 1


def test_construction_rejects():
    with pytest.raises(FieldError):
        field(4, 1)            # not prime
    with pytest.raises(FieldError):
        field(11, 1)           # prime too large
    with pytest.raises(FieldError):
        field(2, 7)            # q = 128 > 81
    with pytest.raises(FieldError):
        field(2, 2, modulus=(1, 0, 1))  # t^2+1 = (t+1)^2 over F_2


@pytest.mark.parametrize("p,k", SMALL_FIELDS)
def test_ring_axioms_exhaustive(p, k):
    F = field(p, k)
    els = list(F.elements())
    for a in els:
        assert F.add(a, 0) == a
        assert F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
        if a != 0:
            assert F.mul(a, F.inv(a)) == 1
    for a in els:
        for b in els:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            for c in els[:4]:
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_frobenius_identity_on_prime_field():
    for p in (2, 3, 5, 7):
        F = field(p)
        for a in F.elements():
            assert F.frobenius(a) == a


def test_frobenius_f4():
    # square t in F_2[t]/(t^2+t+1): t^2 = t + 1
    F = field(2, 2)
    t = F.encode([0, 1])
    assert F.frobenius(t) == F.encode([1, 1])


def test_frobenius_f9():
    # cube t in F_3[t]/(t^2+1): t^3 = -t = 2t
    F = field(3, 2)
    t = F.encode([0, 1])
    assert F.frobenius(t) == F.encode([0, 2])


@pytest.mark.parametrize("p,k", [(2, 2), (3, 2), (2, 3), (3, 3), (5, 2), (7, 2), (2, 4)])
def test_frobenius_is_ring_hom_and_bijective(p, k):
    F = field(p, k)
    q = F.q
    seen = set()
    for a in range(q):
        fa = F.frobenius(a)
        seen.add(fa)
        if q <= 9:
            for b in range(q):
                assert F.frobenius(F.add(a, b)) == F.add(fa, F.frobenius(b))
                assert F.frobenius(F.mul(a, b)) == F.mul(fa, F.frobenius(b))
    assert seen == set(range(q))
    # frobenius fixes exactly the prime subfield
    fixed = [a for a in range(q) if F.frobenius(a) == a]
    assert fixed == list(range(p))


@pytest.mark.parametrize("p,k", SMALL_FIELDS)
def test_frobenius_order_k(p, k):
    F = field(p, k)
    for a in F.elements():
        b = a
        for _ in range(k):
            b = F.frobenius(b)
        assert b == a


def test_pth_root_inverts_frobenius():
    for p, k in SMALL_FIELDS:
        F = field(p, k)
        for a in F.elements():
            assert F.pth_root(F.frobenius(a)) == a
            assert F.frobenius(F.pth_root(a)) == a


def test_pth_root_f4():
    # (t+1)^2 = t in F_4
    F = field(2, 2)
    assert F.pth_root(F.encode([0, 1])) == F.encode([1, 1])


def test_pth_root_identity_on_prime_field():
    for p in (2, 3, 5, 7):
        F = field(p)
        for a in F.elements():
            assert F.pth_root(a) == a


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_wilson(p):
    F = field(p)
    prod = 1
    for a in range(1, p):
        prod = F.mul(prod, a)
    assert prod == F.neg(1)


def test_fqelem_wrapper():
    F = field(2, 2)
    t = FqElem(F, F.encode([0, 1]))
    one = FqElem(F, 1)
    assert (t * t).coeffs == (1, 1)
    assert (t + one).val == F.encode([1, 1])
    assert (t * t + t + one).val == 0
    assert t.frobenius() == t + one
    assert (t ** 3).val == 1


def test_multiplicative_generator():
    for p, k in [(2, 2), (3, 1), (3, 2), (5, 1)]:
        F = field(p, k)
        g = F.multiplicative_generator()
        seen = set()
        b = 1
        for _ in range(F.q - 1):
            seen.add(b)
            b = F.mul(b, g)
        assert seen == set(F.units())
