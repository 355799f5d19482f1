"""Exact arithmetic in GF(q) for any prime power q.

Field elements are plain Python integers in [0, q).  The integer encodes the
element's coefficient vector in base p, least-significant digit = constant
term, so index 0 is the additive identity and index 1 is the multiplicative
identity.  For prime fields (m = 1) this is ordinary arithmetic mod p.

The reducing modulus is always the lexicographically smallest monic
irreducible polynomial of degree m over GF(p), coefficients compared from the
constant term upward.  This makes every field construction deterministic and
reproducible.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

# Full q x q add/mul tables are kept below this order.  A 2^16 x 2^16 table
# would need tens of gigabytes; above the limit we fall back to direct
# polynomial arithmetic.
TABLE_LIMIT = 256


class NotPrimePowerError(ValueError):
    """Raised when a field order has two distinct prime factors."""


def _prime_power_decomposition(q: int) -> tuple[int, int]:
    """Return (p, m) with q = p^m, p prime, or raise NotPrimePowerError."""
    if q < 2:
        raise NotPrimePowerError(f"field order must be >= 2, got {q}")
    n = q
    p = None
    d = 2
    while d * d <= n:
        if n % d == 0:
            p = d
            while n % d == 0:
                n //= d
            break
        d += 1
    if p is None:
        p = q  # q itself is prime
        n = 1
    if n != 1:
        raise NotPrimePowerError(f"{q} is not a prime power")
    m = 0
    n = q
    while n > 1:
        n //= p
        m += 1
    return p, m


# -- polynomial helpers over GF(p), coefficients little-endian ----------------

def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a divided by b over GF(p); b must be nonzero."""
    a = list(a)
    _poly_trim(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p) if p > 2 else b[-1]
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        factor = (a[-1] * inv_lead) % p
        for i, bc in enumerate(b):
            a[i + shift] = (a[i + shift] - factor * bc) % p
        _poly_trim(a)
    return a


def _is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(poly)/2."""
    m = len(poly) - 1
    for deg in range(1, m // 2 + 1):
        # all monic polynomials of degree deg, low coefficients as base-p digits
        for idx in range(p**deg):
            divisor = [(idx // p**i) % p for i in range(deg)] + [1]
            if not _poly_mod(poly, divisor, p):
                return False
    return True


def _smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m over GF(p)."""
    if m == 1:
        return (0, 1)  # the polynomial x
    for idx in range(p**m):
        low = [(idx // p**i) % p for i in range(m)]
        poly = low + [1]
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise RuntimeError(f"no irreducible polynomial of degree {m} over GF({p})")


class GF:
    """The finite field GF(p^m) with table-driven arithmetic for small q.

    Instances are immutable after construction; all operations are pure and
    safe for unrestricted concurrent use.  Obtain instances via build_field().
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree m")
        if not _is_irreducible(list(modulus), p):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.add_table: np.ndarray | None = None
        self.mul_table: np.ndarray | None = None
        self.inv_table: np.ndarray | None = None
        if self.q <= TABLE_LIMIT:
            self._build_tables()

    # -- encoding -------------------------------------------------------------

    def coeffs(self, a: int) -> list[int]:
        """Coefficient vector of element a, constant term first."""
        return [(a // self.p**i) % self.p for i in range(self.m)]

    def _encode(self, c: list[int]) -> int:
        return sum(ci * self.p**i for i, ci in enumerate(c))

    # -- arithmetic -----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.add_table is not None:
            return int(self.add_table[a, b])
        return self._add_direct(a, b)

    def _add_direct(self, a: int, b: int) -> int:
        p = self.p
        ca, cb = self.coeffs(a), self.coeffs(b)
        return self._encode([(x + y) % p for x, y in zip(ca, cb)])

    def neg(self, a: int) -> int:
        p = self.p
        return self._encode([(-x) % p for x in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.mul_table is not None:
            return int(self.mul_table[a, b])
        return self._mul_direct(a, b)

    def _mul_direct(self, a: int, b: int) -> int:
        p = self.p
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = _poly_mod(prod, list(self.modulus), p)
        rem += [0] * (self.m - len(rem))
        return self._encode(rem)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        if self.inv_table is not None:
            return int(self.inv_table[a])
        return self.pow(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 1 if e == 0 else 0
        e %= self.q - 1
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def elements(self) -> list[int]:
        """All q elements in index order, starting at 0."""
        return list(range(self.q))

    # -- tables ---------------------------------------------------------------

    def _build_tables(self) -> None:
        q = self.q
        add = np.empty((q, q), dtype=np.int64)
        mul = np.empty((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(a, q):
                s = self._add_direct(a, b)
                add[a, b] = add[b, a] = s
                t = self._mul_direct(a, b)
                mul[a, b] = mul[b, a] = t
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            hits = np.flatnonzero(mul[a] == 1)
            if hits.size != 1:
                raise RuntimeError(f"element {a} lacks a unique inverse")
            inv[a] = hits[0]
        self.add_table = add
        self.mul_table = mul
        self.inv_table = inv

    # -- misc -----------------------------------------------------------------

    @property
    def name(self) -> str:
        return f"GF({self.q})"

    def describe(self) -> dict:
        """Identification block used in reports."""
        return {
            "name": self.name,
            "characteristic": self.p,
            "degree": self.m,
            "modulus": list(self.modulus),
        }

    def __repr__(self) -> str:
        return f"GF(q={self.q}, p={self.p}, m={self.m}, modulus={list(self.modulus)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, GF) and (self.p, self.m, self.modulus) == (
            other.p,
            other.m,
            other.modulus,
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))


@lru_cache(maxsize=None)
def build_field(q: int) -> GF:
    """Construct GF(q), raising NotPrimePowerError if q is not a prime power."""
    p, m = _prime_power_decomposition(q)
    return GF(p, m, _smallest_irreducible(p, m))
