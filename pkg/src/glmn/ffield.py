"""Exact arithmetic in finite fields F_{p^k}.

Elements are encoded as integers 0 .. p^k - 1, the little-endian base-p
encoding of the coefficient vector of the residue representative.  All
arithmetic is table driven (base-p digit tables for addition, discrete
log/exp tables for multiplication) and works elementwise on numpy arrays
of element indices, so matrices can be processed without Python loops.
"""

from __future__ import annotations

import itertools

import numpy as np
from sympy import factorint, isprime

from .errors import CompositeP, NonIrreducibleModulus, PTooSmall


# ---------------------------------------------------------------------------
# dense polynomial helpers over F_p (coefficient lists, little-endian)
# ---------------------------------------------------------------------------

def _poly_trim(a):
    while a and a[-1] == 0:
        a = a[:-1]
    return a


def _poly_mulmod(a, b, mod, p):
    """a*b reduced mod the monic polynomial `mod`, coefficients mod p."""
    res = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            res[i + j] = (res[i + j] + ai * bj) % p
    return _poly_modred(res, mod, p)


def _poly_modred(a, mod, p):
    a = [c % p for c in a]
    k = len(mod) - 1
    for i in range(len(a) - 1, k - 1, -1):
        c = a[i]
        if c:
            for j in range(k + 1):
                a[i - k + j] = (a[i - k + j] - c * mod[j]) % p
    return _poly_trim(a[:k])


def _poly_powmod(base, e, mod, p):
    result = [1]
    base = _poly_modred(base, mod, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _poly_rem(a, b, p):
    """Remainder of a by b over F_p (b nonzero)."""
    a = _poly_trim([c % p for c in a])
    lead_inv = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = (a[-1] * lead_inv) % p
        shift = len(a) - len(b)
        for j in range(len(b)):
            a[shift + j] = (a[shift + j] - c * b[j]) % p
        a = _poly_trim(a)
    return a


def _poly_gcd(a, b, p):
    a = _poly_trim([c % p for c in a])
    b = _poly_trim([c % p for c in b])
    while b:
        a, b = b, _poly_rem(a, b, p)
    return a


def is_irreducible(poly, p):
    """Irreducibility of a monic polynomial over F_p.

    Uses the standard criterion: x^(p^k) == x mod f, and
    gcd(x^(p^(k/r)) - x, f) = 1 for every prime r dividing k.
    """
    poly = list(poly)
    k = len(poly) - 1
    if k < 1 or poly[-1] != 1:
        return False
    x = _poly_modred([0, 1], poly, p)
    xq = _poly_powmod(x, p ** k, poly, p)
    diff = _poly_trim([(a - b) % p for a, b in
                       itertools.zip_longest(xq, x, fillvalue=0)])
    if diff:
        return False
    for r in factorint(k):
        xd = _poly_powmod(x, p ** (k // r), poly, p)
        diff = [(a - b) % p for a, b in
                itertools.zip_longest(xd, x, fillvalue=0)]
        g = _poly_gcd(diff, poly, p)
        if len(g) != 1:
            return False
    return True


def default_modulus(p, k):
    """Lexicographically least irreducible monic degree-k polynomial."""
    for tail in itertools.product(range(p), repeat=k):
        poly = list(tail) + [1]
        if is_irreducible(poly, p):
            return poly
    raise NonIrreducibleModulus(f"no irreducible polynomial of degree {k} over F_{p}")


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

class Field:
    """The finite field F_{p^k} with table-driven vectorized arithmetic."""

    def __init__(self, p, k, modulus):
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = tuple(modulus)
        self._ppow = p ** np.arange(k, dtype=np.int64)
        idx = np.arange(self.q, dtype=np.int64)
        # digits[a] = little-endian base-p coefficient vector of element a
        self.digits = (idx[:, None] // self._ppow[None, :]) % p
        self._build_log_tables()
        # Frobenius x -> x^p as a table
        self.frob_table = self._pow_table(p)
        pinv = pow(p, -1, self.q - 1) if self.q > 2 else 1
        self.frob_inv_table = self._pow_table(pinv)

    # -- construction of log/exp tables -------------------------------------

    def _scalar_mul_poly(self, a, b):
        pa = [int(c) for c in self.digits[a]]
        pb = [int(c) for c in self.digits[b]]
        prod = _poly_mulmod(_poly_trim(pa), _poly_trim(pb), list(self.modulus), self.p)
        prod = prod + [0] * (self.k - len(prod))
        return int(np.dot(np.array(prod, dtype=np.int64), self._ppow))

    def _order_is_full(self, g, prime_factors):
        for r in prime_factors:
            e = (self.q - 1) // r
            acc, base = 1, g
            while e:
                if e & 1:
                    acc = self._scalar_mul_poly(acc, base)
                base = self._scalar_mul_poly(base, base)
                e >>= 1
            if acc == 1:
                return False
        return True

    def _build_log_tables(self):
        q = self.q
        if q == 2:
            gen = 1
        else:
            primes = list(factorint(q - 1))
            gen = None
            for cand in range(2, q):
                if self._order_is_full(cand, primes):
                    gen = cand
                    break
            assert gen is not None
        self.generator = gen
        exp = np.empty(q - 1, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        cur = 1
        for i in range(q - 1):
            exp[i] = cur
            log[cur] = i
            cur = self._scalar_mul_poly(cur, gen)
        assert cur == 1, "generator order mismatch"
        self.exp_table = exp
        self.log_table = log

    def _pow_table(self, e):
        q = self.q
        tab = np.zeros(q, dtype=np.int64)
        nz = np.arange(1, q)
        tab[nz] = self.exp_table[(self.log_table[nz] * (e % (q - 1))) % (q - 1)]
        return tab

    # -- vectorized arithmetic on element indices ----------------------------

    def add(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = ((self.digits[a] + self.digits[b]) % self.p) @ self._ppow
        return out if out.ndim else int(out)

    def neg(self, a):
        a = np.asarray(a, dtype=np.int64)
        out = ((-self.digits[a]) % self.p) @ self._ppow
        return out if out.ndim else int(out)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        la, lb = self.log_table[a], self.log_table[b]
        nz = (la >= 0) & (lb >= 0)
        prod = np.where(nz, self.exp_table[(la + lb) % (self.q - 1)], 0)
        return prod if prod.ndim else int(prod)

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        la = self.log_table[a]
        if np.any(la < 0):
            raise ZeroDivisionError("inverse of zero in finite field")
        out = self.exp_table[(-la) % (self.q - 1)]
        return out if out.ndim else int(out)

    def power(self, a, e):
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            out = np.ones_like(a)
            return out if out.ndim else 1
        la = self.log_table[a]
        if e < 0 and np.any(la < 0):
            raise ZeroDivisionError("negative power of zero")
        out = np.where(la >= 0, self.exp_table[(la * (e % (self.q - 1))) % (self.q - 1)], 0)
        return out if out.ndim else int(out)

    def frob(self, a):
        out = self.frob_table[np.asarray(a, dtype=np.int64)]
        return out if out.ndim else int(out)

    def frob_inv(self, a):
        out = self.frob_inv_table[np.asarray(a, dtype=np.int64)]
        return out if out.ndim else int(out)

    def from_int(self, c):
        """The image of the integer c under the prime-subfield embedding."""
        return int(c) % self.p

    # -- element helpers ------------------------------------------------------

    def element(self, value):
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise ValueError("element of a different field")
            return value
        if isinstance(value, (int, np.integer)):
            return FieldElement(self, self.from_int(value))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.k:
            raise ValueError("too many coefficients")
        coeffs += [0] * (self.k - len(coeffs))
        return FieldElement(self, int(np.dot(np.array(coeffs, dtype=np.int64), self._ppow)))

    def element_from_index(self, idx):
        return FieldElement(self, int(idx))

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    def coeffs(self, idx):
        return [int(c) for c in self.digits[int(idx)]]

    def format_index(self, idx):
        return "[" + ",".join(str(c) for c in self.coeffs(idx)) + "]"

    def __repr__(self):
        return f"F_{self.p}^{self.k}"

    def __reduce__(self):
        # fields rebuild their tables on unpickle; keeps workers cheap to spawn
        return (Field, (self.p, self.k, self.modulus))

    # -- extensions -----------------------------------------------------------

    def extend(self):
        """The compositum step: F_{p^k} -> F_{p^{k*p}}.

        Returns (new_field, embedding) where embedding is an int64 array
        mapping old element indices to new ones.
        """
        new = make_field(self.p, self.k * self.p)
        return new, embed(self, new)


def embed(small, big):
    """Embedding table of `small` into `big` (small.k must divide big.k)."""
    if big.k % small.k != 0:
        raise ValueError("no embedding: extension degree mismatch")
    if small.k == 1:
        emb = np.arange(small.q, dtype=np.int64)
        return emb
    # find the least root of small.modulus inside big
    all_elems = np.arange(big.q, dtype=np.int64)
    acc = np.zeros(big.q, dtype=np.int64)
    for c in reversed(small.modulus):
        acc = big.add(big.mul(acc, all_elems), big.from_int(c))
    roots = np.nonzero(acc == 0)[0]
    if len(roots) == 0:
        raise ValueError("modulus has no root in the big field")
    r = int(roots[0])
    # old element with digits (c_0..c_{k-1}) maps to sum c_i r^i
    emb = np.zeros(small.q, dtype=np.int64)
    for i in reversed(range(small.k)):
        emb = big.add(big.mul(emb, r), small.digits[:, i])
    return emb


class FieldElement:
    """A single element of F_{p^k}; thin wrapper over an element index."""

    __slots__ = ("field", "idx")

    def __init__(self, field, idx):
        self.field = field
        self.idx = int(idx)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError("elements of different fields")
            return other.idx
        if isinstance(other, (int, np.integer)):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.add(self.idx, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.sub(self.idx, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.sub(o, self.idx))

    def __mul__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.mul(self.idx, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.mul(self.idx, self.field.inv(o)))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.power(self.idx, e))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.idx))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.idx == other.idx
        if isinstance(other, (int, np.integer)):
            return self.idx == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.idx))

    def __bool__(self):
        return self.idx != 0

    @property
    def coeffs(self):
        return self.field.coeffs(self.idx)

    def __str__(self):
        return self.field.format_index(self.idx)

    def __repr__(self):
        return f"FieldElement({self})"


_field_cache = {}


def make_field(p, k=1, modulus=None):
    """Construct F_{p^k}.

    A deterministic default modulus (the lexicographically least monic
    irreducible) is used when none is given, so identical (p, k) always
    yield identical element encodings.
    """
    p = int(p)
    k = int(k)
    if p < 2 or not isprime(p):
        raise CompositeP(f"{p} is not prime")
    if p < 5:
        raise PTooSmall(f"p must be at least 5, got {p}")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    if modulus is None:
        key = (p, k)
        if key in _field_cache:
            return _field_cache[key]
        field = Field(p, k, default_modulus(p, k))
        _field_cache[key] = field
        return field
    modulus = [int(c) % p for c in modulus]
    if len(modulus) != k + 1 or modulus[-1] % p != 1:
        raise NonIrreducibleModulus("modulus must be monic of degree k")
    if not is_irreducible(modulus, p):
        raise NonIrreducibleModulus("modulus is reducible")
    return Field(p, k, modulus)


def artin_schreier_roots(field, c):
    """All x in the field with x^p - x = c.

    Returns a list of FieldElements; it is either empty or a full coset of
    the prime subfield (exactly p roots).
    """
    if isinstance(c, FieldElement):
        if c.field is not field:
            raise ValueError("element of a different field")
        c = c.idx
    else:
        c = int(c)
    vals = field.sub(field.frob_table, np.arange(field.q, dtype=np.int64))
    roots = np.nonzero(vals == c)[0]
    assert len(roots) in (0, field.p)
    return [FieldElement(field, int(r)) for r in roots]
