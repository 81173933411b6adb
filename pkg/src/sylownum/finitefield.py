"""Explicit arithmetic in GF(r^f) with a polynomial basis.

Elements are coefficient vectors (low degree first) reduced modulo a fixed
monic irreducible polynomial. Each element also has an integer index
``sum(c_i * r**i)``, and the group constructions use that index for
table-driven arithmetic (see :meth:`FieldSpec.fast`).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .numtheory import DomainError, factorize, is_prime

MAX_FIELD_SIZE = 2**20
_TABLE_LIMIT = 4096


def _poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a, m, r):
    # m monic
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % r
    return a[:dm]


def _is_irreducible(m, r) -> bool:
    f = len(m) - 1
    if f == 1:
        return True
    for d in range(1, f // 2 + 1):
        for tail in itertools.product(range(r), repeat=d):
            g = list(tail) + [1]
            if not any(_poly_trim(_poly_mod(m, g, r))):
                return False
    return True


def _index_to_coeffs(i: int, r: int, f: int) -> tuple[int, ...]:
    out = []
    for _ in range(f):
        i, c = divmod(i, r)
        out.append(c)
    return tuple(out)


@dataclass(frozen=True)
class FieldSpec:
    r: int
    f: int
    modulus: tuple[int, ...]  # monic, low degree first, length f + 1

    @property
    def q(self) -> int:
        return self.r**self.f

    def __str__(self):
        return f"GF({self.q})"

    def element(self, value) -> "FieldElement":
        """Build an element from an index or a coefficient sequence."""
        if isinstance(value, int):
            if not 0 <= value < self.q:
                raise DomainError(f"index {value} outside GF({self.q})")
            return FieldElement(self, _index_to_coeffs(value, self.r, self.f))
        coeffs = tuple(c % self.r for c in value)
        if len(coeffs) > self.f:
            coeffs = tuple(_poly_mod(coeffs, self.modulus, self.r))
        return FieldElement(self, coeffs + (0,) * (self.f - len(coeffs)))

    def zero(self) -> "FieldElement":
        return self.element(0)

    def one(self) -> "FieldElement":
        return self.element(1)

    def elements(self) -> list["FieldElement"]:
        return [self.element(i) for i in range(self.q)]

    @cached_property
    def generator(self) -> "FieldElement":
        return multiplicative_generator(self)

    @cached_property
    def fast(self) -> "FastField":
        return FastField(self)


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.spec.f or any(
            not 0 <= c < self.spec.r for c in self.coeffs
        ):
            raise DomainError(f"bad coefficients {self.coeffs} for {self.spec}")

    @property
    def index(self) -> int:
        r = self.spec.r
        return sum(c * r**i for i, c in enumerate(self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __lt__(self, other):
        # canonical ordering agrees with the integer index
        return self.index < other.index

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __mul__(self, other):
        return mul(self, other)

    def __neg__(self):
        return sub(self.spec.zero(), self)

    def __pow__(self, k: int):
        result = self.spec.one()
        base = self if k >= 0 else inv(self)
        k = abs(k)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        return mul(self, inv(other))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(reversed(terms)) or "0"


def field_create(r: int, f: int) -> FieldSpec:
    """GF(r^f) with the first monic irreducible modulus in index order."""
    if not is_prime(r):
        raise DomainError(f"characteristic {r} is not prime")
    if f < 1:
        raise DomainError("degree must be >= 1")
    if r**f > MAX_FIELD_SIZE:
        raise DomainError(f"GF({r}^{f}) is larger than {MAX_FIELD_SIZE}")
    for i in range(r**f):
        m = _index_to_coeffs(i, r, f) + (1,)
        if _is_irreducible(m, r):
            return FieldSpec(r, f, m)
    raise AssertionError("no irreducible polynomial found")


def field_of_order(q: int) -> FieldSpec:
    fac = factorize(q) if q >= 2 else None
    if fac is None or len(fac) != 1:
        raise DomainError(f"{q} is not a prime power")
    (r, f), = fac.entries
    return field_create(r, f)


def _check(a: FieldElement, b: FieldElement):
    if a.spec != b.spec:
        raise DomainError("elements belong to different fields")


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check(a, b)
    r = a.spec.r
    return FieldElement(a.spec, tuple((x + y) % r for x, y in zip(a.coeffs, b.coeffs)))


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    _check(a, b)
    r = a.spec.r
    return FieldElement(a.spec, tuple((x - y) % r for x, y in zip(a.coeffs, b.coeffs)))


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check(a, b)
    spec = a.spec
    prod = [0] * (2 * spec.f - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                prod[i + j] = (prod[i + j] + x * y) % spec.r
    return FieldElement(spec, tuple(_poly_mod(prod, spec.modulus, spec.r)) if spec.f > 1 else (prod[0],))


def inv(a: FieldElement) -> FieldElement:
    if a.is_zero():
        raise DomainError("zero has no inverse")
    # a^(q-2) = a^-1 in GF(q)^*
    q = a.spec.q
    result, base, k = a.spec.one(), a, q - 2
    while k:
        if k & 1:
            result = mul(result, base)
        base = mul(base, base)
        k >>= 1
    return result


def multiplicative_generator(spec: FieldSpec) -> FieldElement:
    """Smallest element (index order) of multiplicative order q - 1."""
    q = spec.q
    if q == 2:
        return spec.one()
    cofactors = [(q - 1) // ell for ell in factorize(q - 1).primes]
    one = spec.one()
    for i in range(2, q):
        g = spec.element(i)
        if all(g**c != one for c in cofactors):
            return g
    raise AssertionError("multiplicative group is not cyclic?")


class FastField:
    """Integer-indexed arithmetic for GF(q), driven by log/exp tables.

    Addition uses XOR in characteristic 2, plain residues for prime fields
    and a lookup table otherwise.
    """

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        q = self.q = spec.q
        r = spec.r
        g = spec.generator
        self.exp = [0] * (2 * (q - 1))
        self.log = [0] * q
        x = spec.one()
        for k in range(q - 1):
            self.exp[k] = self.exp[k + q - 1] = x.index
            self.log[x.index] = k
            x = x * g
        if r == 2:
            self.add = lambda a, b: a ^ b
        elif spec.f == 1:
            self.add = lambda a, b: (a + b) % r
        else:
            if q > _TABLE_LIMIT:
                self.add = lambda a, b: add(spec.element(a), spec.element(b)).index
            else:
                table = [[add(spec.element(a), spec.element(b)).index for b in range(q)] for a in range(q)]
                self.add = lambda a, b: table[a][b]
        self.neg = [(-spec.element(a)).index for a in range(q)]

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DomainError("zero has no inverse")
        return self.exp[(self.q - 1 - self.log[a]) % (self.q - 1)]

    def power(self, a: int, k: int) -> int:
        if a == 0:
            return 0 if k else 1
        return self.exp[(self.log[a] * k) % (self.q - 1)]

    def tables(self) -> tuple[list[list[int]], list[list[int]]]:
        """Full addition and multiplication tables (small fields only)."""
        q = self.q
        if q > 1024:
            raise DomainError("tables are only built for q <= 1024")
        rng = range(q)
        return (
            [[self.add(a, b) for b in rng] for a in rng],
            [[self.mul(a, b) for b in rng] for a in rng],
        )
