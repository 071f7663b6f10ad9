"""Arithmetic in GF(p^k).

Field elements are plain ints: the base-``p`` digits of an element are the
coefficients of its polynomial representative, constant term first.  With
that encoding the lexicographic order on coefficient vectors (highest degree
first) is just integer order, which is what the deterministic choices of
modulus and primitive element rely on.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple, Sequence

MAX_ORDER = 1 << 16


class PrimePower(NamedTuple):
    p: int
    k: int

    @property
    def q(self) -> int:
        return self.p**self.k

    def __str__(self) -> str:
        return f"{self.q} = {self.p}^{self.k}" if self.k > 1 else f"{self.q} (prime)"


def _smallest_factor(n: int) -> int:
    if n % 2 == 0:
        return 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return f
        f += 2
    return n


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    while n > 1:
        f = _smallest_factor(n)
        out.append(f)
        while n % f == 0:
            n //= f
    return out


def classify_prime_power(n: int) -> PrimePower | None:
    """Return ``(p, k)`` with ``n == p**k`` and ``p`` prime, or None."""
    if n < 2:
        raise ValueError(f"expected an integer >= 2, got {n}")
    p = _smallest_factor(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return PrimePower(p, k) if n == 1 else None


# -- polynomials over Z_p, as coefficient lists (constant term first) --------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    m = _trim(list(m))
    if not m:
        raise ZeroDivisionError("polynomial modulus is zero")
    lead_inv = pow(m[-1], -1, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1] * lead_inv % p
        shift = len(a) - 1 - dm
        for j, mc in enumerate(m):
            a[shift + j] = (a[shift + j] - c * mc) % p
        _trim(a)
    return a


def poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ac in enumerate(a):
        if ac:
            for j, bc in enumerate(b):
                out[i + j] = (out[i + j] + ac * bc) % p
    return _trim(out)


def poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def poly_powmod(a: Sequence[int], e: int, m: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = poly_mod(a, m, p)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, base, p), m, p)
        base = poly_mod(poly_mul(base, base, p), m, p)
        e >>= 1
    return result


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Ben-Or test: monic ``f`` of degree k is irreducible over Z_p iff
    gcd(x^(p^i) - x, f) = 1 for every i <= k/2."""
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    h = x
    for _ in range(k // 2):
        h = poly_powmod(h, p, f, p)
        if len(poly_gcd(f, poly_sub(h, x, p), p)) > 1:
            return False
    return True


def to_coeffs(a: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        a, c = divmod(a, p)
        out.append(c)
    return out


def from_coeffs(coeffs: Sequence[int], p: int) -> int:
    a = 0
    for c in reversed(coeffs):
        a = a * p + c
    return a


def find_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible polynomial of degree k.

    Coefficients are compared from the highest degree down, so candidates are
    scanned in increasing order of their base-p encoding.  Returned constant
    term first, length ``k + 1``.
    """
    if k < 1:
        raise ValueError("degree must be positive")
    for low in range(p**k):
        f = to_coeffs(low, p, k) + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError(f"no irreducible polynomial of degree {k} over Z_{p}")


def format_poly(coeffs: Sequence[int], var: str = "x") -> str:
    terms = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if c == 0:
            continue
        mono = "" if d == 0 else var if d == 1 else f"{var}^{d}"
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms) if terms else "0"


# -- the field ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GF:
    """GF(q) with a fixed modulus, primitive element and exp/log tables.

    Build with :func:`field` (cached) rather than directly.
    """

    order: PrimePower
    modulus: tuple[int, ...]
    xi: int
    exp_table: tuple[int, ...]
    log_table: tuple[int, ...]  # indexed by element; entry 0 is -1

    @property
    def p(self) -> int:
        return self.order.p

    @property
    def k(self) -> int:
        return self.order.k

    @property
    def q(self) -> int:
        return self.order.q

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> Iterator[int]:
        """Nonzero elements in exponent order xi^0, xi^1, ..."""
        return iter(self.exp_table)

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        ca, cb = self.coeffs(a), self.coeffs(b)
        return from_coeffs([(x + y) % self.p for x, y in zip(ca, cb)], self.p)

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return from_coeffs([-c % self.p for c in self.coeffs(a)], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp_table[(self.log_table[a] + self.log_table[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.exp_table[-self.log_table[a] % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if e == 0 else 0
        return self.exp_table[self.log_table[a] * e % (self.q - 1)]

    def exp(self, i: int) -> int:
        """xi ** i, for any integer i."""
        return self.exp_table[i % (self.q - 1)]

    def log(self, a: int) -> int:
        """Discrete log base xi, in [0, q-2]."""
        if a == 0:
            raise ZeroDivisionError("log of zero is undefined")
        return self.log_table[a]

    def coeffs(self, a: int) -> list[int]:
        return to_coeffs(a, self.p, self.k)

    def format_poly(self, a: int) -> str:
        return format_poly(self.coeffs(a))

    def label(self, a: int) -> str:
        """Short label: the integer itself in a prime field, else 0, 1, x, x^e
        with e the exponent of xi."""
        if self.k == 1 or a in (0, 1):
            return str(a)
        e = self.log_table[a]
        return "x" if e == 1 else f"x^{e}"

    @cached_property
    def modulus_str(self) -> str:
        return format_poly(self.modulus)


def raw_mul(a: int, b: int, modulus: Sequence[int], p: int) -> int:
    """Multiply two encoded elements by polynomial arithmetic (no tables)."""
    k = len(modulus) - 1
    prod = poly_mul(to_coeffs(a, p, k), to_coeffs(b, p, k), p)
    return from_coeffs(poly_mod(prod, modulus, p), p)


def multiplicative_order(a: int, modulus: Sequence[int], p: int) -> int:
    if a == 0:
        raise ZeroDivisionError("zero has no multiplicative order")
    n, x = 1, a
    while x != 1:
        x = raw_mul(x, a, modulus, p)
        n += 1
    return n


def find_primitive_element(modulus: Sequence[int], p: int) -> int:
    """Smallest encoded element whose multiplicative order is q - 1."""
    k = len(modulus) - 1
    q = p**k
    if q == 2:
        return 1
    exps = [(q - 1) // r for r in prime_factors(q - 1)]
    for a in range(2, q):
        k_poly = to_coeffs(a, p, k)
        if all(poly_powmod(k_poly, e, modulus, p) != [1] for e in exps):
            return a
    raise AssertionError("no primitive element found")


_cache: dict[int, GF] = {}


def field(q: int) -> GF:
    """The (cached) field of order ``q``."""
    if q in _cache:
        return _cache[q]
    pk = classify_prime_power(q)
    if pk is None:
        raise ValueError(f"{q} is not a prime power")
    if q > MAX_ORDER:
        raise ValueError(f"fields larger than 2^16 are not supported (q={q})")
    p, k = pk
    modulus = find_irreducible(p, k)
    xi = find_primitive_element(modulus, p)

    exp_table = [1]
    for _ in range(q - 2):
        exp_table.append(raw_mul(exp_table[-1], xi, modulus, p))
    log_table = [-1] * q
    for i, a in enumerate(exp_table):
        if log_table[a] != -1:
            raise AssertionError(f"{xi} is not primitive in GF({q})")
        log_table[a] = i
    # the order must be exactly q - 1, re-checked by explicit exponentiation
    if q > 2 and raw_mul(exp_table[-1], xi, modulus, p) != 1:
        raise AssertionError(f"{xi} is not primitive in GF({q})")

    gf = GF(pk, modulus, xi, tuple(exp_table), tuple(log_table))
    _cache[q] = gf
    return gf
