"""Exact integer number theory.

Factorization, multiplicative orders, cyclotomic values, Zsigmondy primes and
the two small arithmetic facts used by the Sylow-number classification.
Everything here is a pure function of its arguments.
"""

from __future__ import annotations

import enum
import bisect
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

INT63_MAX = 2**63 - 1
TRIAL_LIMIT = 10**6

# Deterministic Miller-Rabin bases; correct for every n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


@dataclass(frozen=True)
class Factorization:
    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        primes = [p for p, _ in self.entries]
        if primes != sorted(set(primes)):
            raise ValueError("primes must be strictly increasing")
        if any(e < 1 for _, e in self.entries):
            raise ValueError("exponents must be positive")

    @property
    def value(self) -> int:
        return math.prod(p**e for p, e in self.entries)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.entries)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class PrimePower:
    base: int
    exponent: int

    @property
    def value(self) -> int:
        return self.base**self.exponent


class ZsigmondyKind(enum.Enum):
    PRIMES = "primes"
    EXCEPTION_MERSENNE_LIKE = "exception_mersenne_like"  # n = 2, a = 2^s - 1
    EXCEPTION_TWO_SIX = "exception_two_six"  # (a, n) = (2, 6)


@dataclass(frozen=True)
class ZsigmondyResult:
    kind: ZsigmondyKind
    a: int
    n: int
    primes: tuple[int, ...] = ()

    @property
    def is_exception(self) -> bool:
        return self.kind is not ZsigmondyKind.PRIMES


@dataclass(frozen=True)
class PrimitiveClass:
    """Which of q^e - 1, q^(2e) - 1 has p as a primitive prime divisor.

    ``e`` is the half-order parameter and ``degree`` is either ``e`` or
    ``2 * e``; in both cases ``degree`` is the multiplicative order of q mod p.
    """

    q: int
    p: int
    e: int
    degree: int

    @property
    def doubled(self) -> bool:
        return self.degree == 2 * self.e


# --------------------------------------------------------------------------
# primality and factorization


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    sieve = bytearray([1]) * (TRIAL_LIMIT + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(TRIAL_LIMIT) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, TRIAL_LIMIT + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def is_prime(n: int) -> bool:
    """Deterministic primality test (exact for every n below 2^64)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    # n odd composite, no factor below TRIAL_LIMIT; fixed seeds keep it deterministic
    for c in range(1, 200):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise RuntimeError(f"Pollard rho failed on {n}")


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _split(d, out)
    _split(n // d, out)


def factorize(n: int) -> Factorization:
    """Factor 2 <= n <= 2^63 - 1 by trial division to 10^6, then Pollard rho."""
    if n < 2:
        raise DomainError(f"factorize needs n >= 2, got {n}")
    if n > INT63_MAX:
        raise DomainError(f"{n} exceeds the 63-bit factorization range")
    found: dict[int, int] = {}
    rest = n
    for p in _small_primes():
        if p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            found[p] = e
    if rest > 1:
        _split(rest, found)
    return Factorization(tuple(sorted(found.items())))


def prime_power_decomposition(n: int) -> PrimePower | None:
    """Return (base, exponent) if n = base^exponent with base prime, else None."""
    if n < 2:
        return None
    if is_prime(n):
        return PrimePower(n, 1)
    # a perfect power is a k-th power for some prime k; recurse on the root
    for k in primes_up_to(n.bit_length()):
        b = _iroot(n, k)
        if b < 2:
            break
        if b**k == n:
            inner = prime_power_decomposition(b)
            return PrimePower(inner.base, inner.exponent * k) if inner else None
    return None


def _iroot(n: int, k: int) -> int:
    """floor(n^(1/k)) for n >= 1, by Newton's method from above."""
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def is_prime_power(n: int) -> bool:
    return prime_power_decomposition(n) is not None


def divisors(n: int) -> list[int]:
    if n < 1:
        raise DomainError("divisors needs n >= 1")
    divs = [1]
    if n == 1:
        return divs
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def mobius(n: int) -> int:
    if n < 1:
        raise DomainError("mobius needs n >= 1")
    if n == 1:
        return 1
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def euler_totient(n: int) -> int:
    if n < 1:
        raise DomainError("euler_totient needs n >= 1")
    result = n
    if n > 1:
        for p, _ in factorize(n):
            result = result // p * (p - 1)
    return result


# --------------------------------------------------------------------------
# orders and primitive divisors


def multiplicative_order(q: int, p: int) -> int:
    """Smallest k >= 1 with q^k = 1 (mod p), for a prime p not dividing q."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if q % p == 0:
        raise DomainError(f"{p} divides {q}")
    order = p - 1
    for ell, _ in factorize(p - 1) if p > 2 else ():
        while order % ell == 0 and pow(q, order // ell, p) == 1:
            order //= ell
    return order


def half_order_parameter(q: int, p: int) -> int:
    """min{k >= 1 : q^(2k) = 1 (mod p)} for an odd prime p coprime to q."""
    if p == 2:
        raise DomainError("half-order parameter needs an odd prime")
    d = multiplicative_order(q, p)
    return d if d % 2 else d // 2


def classify_primitive(q: int, p: int) -> PrimitiveClass:
    """Decide whether p is a primitive prime divisor of q^e - 1 or of q^(2e) - 1."""
    e = half_order_parameter(q, p)
    d = multiplicative_order(q, p)
    return PrimitiveClass(q=q, p=p, e=e, degree=d)


def cyclotomic_value(n: int, q: int) -> int:
    """Exact value of the n-th cyclotomic polynomial at q (Mobius product)."""
    if n < 1:
        raise DomainError("cyclotomic index must be >= 1")
    if q < 2:
        raise DomainError("cyclotomic_value needs q >= 2")
    num = den = 1
    for d in divisors(n):
        mu = mobius(n // d)
        if mu == 1:
            num *= q**d - 1
        elif mu == -1:
            den *= q**d - 1
    value, rem = divmod(num, den)
    assert rem == 0
    return value


def zsigmondy(a: int, n: int) -> ZsigmondyResult:
    """All primitive prime divisors of a^n - 1, or the exceptional case."""
    if a < 2 or n < 2:
        raise DomainError("zsigmondy needs a >= 2 and n >= 2")
    if a**n - 1 > INT63_MAX:
        raise DomainError(f"{a}^{n} - 1 exceeds the 63-bit range")
    if (a, n) == (2, 6):
        return ZsigmondyResult(ZsigmondyKind.EXCEPTION_TWO_SIX, a, n)
    if n == 2 and (a + 1) & a == 0:
        return ZsigmondyResult(ZsigmondyKind.EXCEPTION_MERSENNE_LIKE, a, n)
    phi = cyclotomic_value(n, a)
    primes = tuple(
        ell for ell in factorize(phi).primes if multiplicative_order(a, ell) == n
    )
    assert primes, (a, n)
    return ZsigmondyResult(ZsigmondyKind.PRIMES, a, n, primes)


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def is_fermat_prime(p: int) -> bool:
    """p prime of the form 2^(2^k) + 1."""
    if p < 3 or not is_prime(p):
        return False
    m = p - 1
    return is_power_of_two(m) and is_power_of_two(m.bit_length() - 1)


def is_mersenne_prime(p: int) -> bool:
    """p prime of the form 2^k - 1."""
    return p >= 3 and is_prime(p) and is_power_of_two(p + 1)


def lemma_number_solutions(p_max: int) -> list[tuple[int, int, int, int]]:
    """Tuples (n, p, q, a): p = 2^n + 1 <= p_max Fermat, p^2 - 3p + 2 = 2 q^a.

    The degenerate value p^2 - 3p + 2 = 2 is reported as q = 1, a = 1. That
    keeps the classical answer (1, 3, 1, 1) verbatim even though 1 is not a
    prime.
    """
    out = []
    n = 1
    while 2**n + 1 <= p_max:
        p = 2**n + 1
        if is_fermat_prime(p):
            half, rem = divmod(p * p - 3 * p + 2, 2)
            assert rem == 0
            if half == 1:
                out.append((n, p, 1, 1))
            else:
                pp = prime_power_decomposition(half)
                if pp is not None:
                    out.append((n, p, pp.base, pp.exponent))
        n += 1
    return out


def primes_up_to(n: int) -> list[int]:
    if n <= TRIAL_LIMIT:
        small = _small_primes()
        return list(small[: bisect.bisect_right(small, n)])
    return primes_up_to(TRIAL_LIMIT) + [p for p in range(TRIAL_LIMIT + 1, n + 1) if is_prime(p)]


def prime_powers_up_to(n: int) -> list[int]:
    out = []
    for r in primes_up_to(n):
        v = r
        while v <= n:
            out.append(v)
            v *= r
    return sorted(out)
