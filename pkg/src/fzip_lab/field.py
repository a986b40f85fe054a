"""Exact arithmetic in F_q = F_{p^k} for small q.

Elements are encoded as integers in [0, q): the encoding of an element with
coefficient vector (c_0, ..., c_{k-1}) in the power basis 1, t, ..., t^{k-1}
is c_0 + c_1*p + ... + c_{k-1}*p^{k-1}.  All arithmetic goes through
precomputed tables, so everything downstream is table lookups on plain ints.

Only q <= 81 with p in {2, 3, 5, 7} is supported; the enumeration kernels
elsewhere in the package rely on these bounds.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

SUPPORTED_PRIMES = (2, 3, 5, 7)
MAX_Q = 81


class FieldError(ValueError):
    pass


def _poly_trim(c):
    while c and c[-1] == 0:
        c = c[:-1]
    return c


def _poly_mulmod_p(a, b, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_divmod_p(a, b, p):
    # b monic expected after normalization; returns (quot, rem) over F_p
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    lead_inv = pow(b[-1], p - 2, p) if p > 2 else b[-1]
    if b[-1] == 1:
        lead_inv = 1
    quot = [0] * max(da - db + 1, 0)
    while len(_poly_trim(a)) - 1 >= db and _poly_trim(a):
        a = _poly_trim(a)
        shift = len(a) - 1 - db
        factor = (a[-1] * lead_inv) % p
        quot[shift] = factor
        for j, bj in enumerate(b):
            a[shift + j] = (a[shift + j] - factor * bj) % p
    return quot, _poly_trim(a)


def _is_irreducible(coeffs, p):
    """Trial-division irreducibility test for a monic poly over F_p."""
    k = len(coeffs) - 1
    if k < 1 or coeffs[-1] != 1:
        return False
    if k == 1:
        return True
    for deg in range(1, k // 2 + 1):
        for lower in itertools.product(range(p), repeat=deg):
            divisor = list(lower) + [1]
            _, rem = _poly_divmod_p(list(coeffs), divisor, p)
            if not rem:
                return False
    return True


def default_modulus(p, k):
    """Smallest monic irreducible polynomial of degree k over F_p.

    "Smallest" compares the coefficient tuple from the degree-(k-1)
    coefficient down, i.e. the minimal integer sum(c_i * p^i).  This pins
    t^2+t+1 for F_4, t^2+1 for F_9 and t^3+t+1 for F_8.
    """
    if k == 1:
        return (0, 1)
    for enc in range(p ** k):
        coeffs = tuple((enc // p ** i) % p for i in range(k)) + (1,)
        if _is_irreducible(coeffs, p):
            return coeffs
    raise FieldError(f"no irreducible polynomial of degree {k} over F_{p}")


@lru_cache(maxsize=None)
def field(p: int, k: int = 1, modulus: tuple | None = None) -> "FieldSpec":
    """Cached FieldSpec constructor; the canonical entry point."""
    return FieldSpec(p, k, modulus)


class FieldSpec:
    """F_{p^k} with all unary/binary operations tabulated on int encodings."""

    def __init__(self, p, k=1, modulus=None):
        if p not in SUPPORTED_PRIMES:
            raise FieldError(f"p must be one of {SUPPORTED_PRIMES}, got {p}")
        if k < 1:
            raise FieldError(f"extension degree must be >= 1, got {k}")
        q = p ** k
        if q > MAX_Q:
            raise FieldError(f"q = {q} exceeds the supported bound {MAX_Q}")
        self.p = p
        self.k = k
        self.q = q
        if modulus is None:
            modulus = default_modulus(p, k)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise FieldError("modulus must be monic of degree k")
            if not _is_irreducible(modulus, p):
                raise FieldError(f"modulus {modulus} is reducible over F_{p}")
        self.modulus = modulus
        self._build_tables()
        self._np = None

    # -- encoding ---------------------------------------------------------

    def encode(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.k:
            raise FieldError("coefficient vector too long")
        coeffs += [0] * (self.k - len(coeffs))
        return sum((c % self.p) * self.p ** i for i, c in enumerate(coeffs))

    def decode(self, a: int):
        return tuple((a // self.p ** i) % self.p for i in range(self.k))

    def elements(self):
        return range(self.q)

    def units(self):
        return range(1, self.q)

    # -- tables -----------------------------------------------------------

    def _build_tables(self):
        p, k, q = self.p, self.k, self.q
        # t^j mod modulus for j < 2k-1, as encodings
        red = []
        cur = [0] * k
        cur[0] = 1
        for _ in range(2 * k - 1):
            red.append(list(cur))
            cur = [0] + cur
            lead = cur.pop()
            if lead:
                for i in range(k):
                    cur[i] = (cur[i] - lead * self.modulus[i]) % p
        dec = [self.decode(a) for a in range(q)]
        add = [[0] * q for _ in range(q)]
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            ca = dec[a]
            for b in range(a, q):
                cb = dec[b]
                s = self.encode((x + y) % p for x, y in zip(ca, cb))
                add[a][b] = add[b][a] = s
                acc = [0] * k
                for i, x in enumerate(ca):
                    if x == 0:
                        continue
                    for j, y in enumerate(cb):
                        if y == 0:
                            continue
                        r = red[i + j]
                        c = (x * y) % p
                        for m in range(k):
                            acc[m] = (acc[m] + c * r[m]) % p
                prod = self.encode(acc)
                mul[a][b] = mul[b][a] = prod
        self.add_table = add
        self.mul_table = mul
        self.neg_table = [self.encode((-c) % p for c in dec[a]) for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul[a][b] == 1:
                    inv[a] = b
                    break
            else:
                raise FieldError(f"element {a} has no inverse; modulus reducible?")
        self.inv_table = inv
        frob = [self.pow(a, p) for a in range(q)]
        if sorted(frob) != list(range(q)):
            raise FieldError("frobenius is not a bijection; modulus reducible?")
        self.frob_table = frob
        proot = [0] * q
        for a, fa in enumerate(frob):
            proot[fa] = a
        self.proot_table = proot
        self.one = 1
        self.zero = 0

    # -- ops on int encodings ----------------------------------------------

    def add(self, a, b):
        return self.add_table[a][b]

    def sub(self, a, b):
        return self.add_table[a][self.neg_table[b]]

    def neg(self, a):
        return self.neg_table[a]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        return self.inv_table[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        out = 1
        while e:
            if e & 1:
                out = self.mul_table[out][a]
            a = self.mul_table[a][a]
            e >>= 1
        return out

    def frobenius(self, a):
        """a -> a^p; bijective, fixes exactly the prime subfield."""
        return self.frob_table[a]

    def pth_root(self, a):
        """The unique b with b^p = a (F_q is perfect); inverse of frobenius."""
        return self.proot_table[a]

    def from_int(self, n):
        """Embed a rational integer via reduction mod p (prime subfield)."""
        return n % self.p

    def multiplicative_generator(self):
        for a in range(2, self.q):
            b, order = a, 1
            while b != 1:
                b = self.mul_table[b][a]
                order += 1
            if order == self.q - 1:
                return a
        return 1  # q = 2

    # -- numpy views for vectorized kernels ---------------------------------

    def np_tables(self):
        if self._np is None:
            import numpy as np

            self._np = {
                "add": np.array(self.add_table, dtype=np.uint8),
                "mul": np.array(self.mul_table, dtype=np.uint8),
                "neg": np.array(self.neg_table, dtype=np.uint8),
            }
        return self._np

    # -- misc ---------------------------------------------------------------

    def __repr__(self):
        return f"FieldSpec(p={self.p}, k={self.k}, modulus={list(self.modulus)})"

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))


@dataclass(frozen=True)
class FqElem:
    """A field element carried together with its field; convenience wrapper.

    The numeric modules work on raw int encodings; FqElem is the friendly
    layer for tests, JSON and the CLI.
    """

    field: FieldSpec
    val: int

    @property
    def coeffs(self):
        return self.field.decode(self.val)

    def __add__(self, other):
        return FqElem(self.field, self.field.add(self.val, _val(other)))

    def __sub__(self, other):
        return FqElem(self.field, self.field.sub(self.val, _val(other)))

    def __neg__(self):
        return FqElem(self.field, self.field.neg(self.val))

    def __mul__(self, other):
        return FqElem(self.field, self.field.mul(self.val, _val(other)))

    def __pow__(self, e):
        return FqElem(self.field, self.field.pow(self.val, e))

    def inverse(self):
        return FqElem(self.field, self.field.inv(self.val))

    def frobenius(self):
        return FqElem(self.field, self.field.frobenius(self.val))

    def pth_root(self):
        return FqElem(self.field, self.field.pth_root(self.val))

    def __repr__(self):
        return f"Fq({self.val}~{list(self.coeffs)})"


def _val(x):
    return x.val if isinstance(x, FqElem) else x


def frobenius(a: FqElem) -> FqElem:
    return a.frobenius()


def pth_root(a: FqElem) -> FqElem:
    return a.pth_root()
