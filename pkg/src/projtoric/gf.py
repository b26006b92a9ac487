"""Finite field arithmetic for GF(p^k) with table-backed multiplication.

Elements are integer codes in range(q): the code of a polynomial
c_0 + c_1 x + ... + c_{k-1} x^{k-1} over GF(p) is sum(c_i * p**i).
For prime q this collapses to ordinary arithmetic mod p. Extension
fields pick a canonical irreducible modulus so codes mean the same
thing across runs, then precompute exp/log tables for a fixed
generator of the unit group.
"""

from __future__ import annotations


class FieldError(ValueError):
    """Raised for invalid field sizes or arithmetic (e.g. inverse of 0)."""


def _factorize(n):
    fac = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            fac[d] = fac.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        fac[n] = fac.get(n, 0) + 1
    return fac


def prime_power(q):
    """Decompose q as p**k with p prime; raises FieldError otherwise."""
    if not isinstance(q, int) or q < 2:
        raise FieldError(f"field size must be an integer >= 2, got {q!r}")
    fac = _factorize(q)
    if len(fac) != 1:
        raise FieldError(f"{q} is not a prime power")
    (p, k), = fac.items()
    return p, k


def _digits(code, p, k):
    out = []
    for _ in range(k):
        out.append(code % p)
        code //= p
    return out


def _undigits(ds, p):
    code = 0
    for c in reversed(ds):
        code = code * p + c
    return code


def _poly_mulmod(a, b, mod, p, k):
    # a, b, mod as coefficient lists (ascending), deg(mod) == k, monic
    prod = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                prod[i + j] = (prod[i + j] + ca * cb) % p
    for i in range(len(prod) - 1, k - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(k):
                prod[i - k + j] = (prod[i - k + j] - c * mod[j]) % p
    out = prod[:k]
    out += [0] * (k - len(out))
    return out


def _poly_divisible(num, den, p):
    # trial division of polynomials over GF(p), den monic
    num = list(num)
    dn, dd = len(num) - 1, len(den) - 1
    inv_lead = pow(den[-1], p - 2, p) if p > 2 else den[-1]
    for i in range(dn, dd - 1, -1):
        c = (num[i] * inv_lead) % p
        if c:
            for j in range(dd + 1):
                num[i - dd + j] = (num[i - dd + j] - c * den[j]) % p
    return all(c == 0 for c in num[:dd])


def _monic_polys(p, deg):
    for code in range(p**deg, 2 * p**deg):
        ds = _digits(code, p, deg + 1)
        if ds[deg] == 1:
            yield ds


def _is_irreducible(poly, p, k):
    if poly[0] == 0:
        return False
    for deg in range(1, k // 2 + 1):
        for den in _monic_polys(p, deg):
            if _poly_divisible(poly, den, p):
                return False
    return True


def canonical_modulus(p, k):
    """First irreducible monic degree-k polynomial by integer encoding.

    Scanned over codes p**k .. 2*p**k - 1 (the monic window), so the
    result is deterministic. Returned as the ascending coefficient list.
    """
    for poly in _monic_polys(p, k):
        if _is_irreducible(poly, p, k):
            return poly
    raise FieldError(f"no irreducible polynomial found for p={p}, k={k}")


class GF:
    """The finite field with q = p^k elements, q <= 2^16.

    add/sub work digitwise in base p; mul, inv, and pow run off
    exp/log tables for the canonical generator. units lists the
    nonzero elements in generator-power order g^0, g^1, ..., g^{q-2}.
    """

    def __init__(self, q):
        self.p, self.k = prime_power(q)
        if q > 1 << 16:
            raise FieldError(f"field size {q} exceeds the 2^16 table limit")
        self.q = q
        if self.k == 1:
            self.modulus = None
        else:
            self.modulus = canonical_modulus(self.p, self.k)
        self._build_tables()

    def _build_tables(self):
        p, k, q = self.p, self.k, self.q
        if k == 1:
            mulfn = lambda a, b: (a * b) % p
        else:
            mod = self.modulus

            def mulfn(a, b):
                return _undigits(
                    _poly_mulmod(_digits(a, p, k), _digits(b, p, k), mod, p, k), p
                )

        order_target = q - 1
        prime_facs = list(_factorize(order_target)) if order_target > 1 else []

        def order_is_full(g):
            # g has order q-1 iff g^((q-1)/r) != 1 for every prime r | q-1
            for r in prime_facs:
                e = order_target // r
                acc, base = 1, g
                while e:
                    if e & 1:
                        acc = mulfn(acc, base)
                    base = mulfn(base, base)
                    e >>= 1
                if acc == 1:
                    return False
            return True

        gen = next(g for g in range(1, q) if order_is_full(g))
        self.generator = gen
        exp = [1] * (q - 1)
        log = [0] * q
        acc = 1
        for i in range(q - 1):
            exp[i] = acc
            log[acc] = i
            acc = mulfn(acc, gen)
        self._exp = exp
        self._log = log
        self.units = list(exp)

    def _check(self, a):
        if not (isinstance(a, int) and 0 <= a < self.q):
            raise FieldError(f"{a!r} is not an element code of GF({self.q})")
        return a

    def add(self, a, b):
        self._check(a)
        self._check(b)
        p, k = self.p, self.k
        if k == 1:
            return (a + b) % p
        da, db = _digits(a, p, k), _digits(b, p, k)
        return _undigits([(x + y) % p for x, y in zip(da, db)], p)

    def neg(self, a):
        self._check(a)
        p, k = self.p, self.k
        if k == 1:
            return (-a) % p
        return _undigits([(-x) % p for x in _digits(a, p, k)], p)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        self._check(a)
        self._check(b)
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a):
        self._check(a)
        if a == 0:
            raise FieldError("0 has no multiplicative inverse")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def pow(self, a, e):
        """a**e for any integer e; negative e uses the inverse."""
        self._check(a)
        if a == 0:
            if e < 0:
                raise FieldError("0 cannot be raised to a negative power")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def __repr__(self):
        return f"GF({self.q})"


def make_field(q):
    """Field of q elements with canonical modulus and generator."""
    return GF(q)


def enumerate_units(field):
    """The q-1 nonzero elements in generator-power order g^0, g^1, ..."""
    return list(field.units)
