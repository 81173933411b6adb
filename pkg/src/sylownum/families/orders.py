"""Simple-group family identifiers, order formulas and minimal-degree bounds."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from ..numtheory import DomainError, prime_power_decomposition

TAGS = (
    "Alt", "PSL", "PSU", "PSp", "OmegaOdd", "OmegaPlus", "OmegaMinus",
    "Sz", "G2", "Ree2G2", "TriD4", "F4", "TwoF4", "E6", "TwoE6", "E7", "E8",
)
EXCEPTIONAL_BOUND_TAGS = ("F4", "TwoF4", "E6", "TwoE6", "E7", "E8")

# label templates; {d} is the stored dimension / degree parameter
_LABELS = {
    "Alt": "A{d}",
    "PSL": "PSL{d}({q})",
    "PSU": "PSU{d}({q})",
    "PSp": "PSp{d}({q})",
    "OmegaOdd": "POmega{d}({q})",
    "OmegaPlus": "POmega+{d}({q})",
    "OmegaMinus": "POmega-{d}({q})",
    "Sz": "Sz({q})",
    "G2": "G2({q})",
    "Ree2G2": "2G2({q})",
    "TriD4": "3D4({q})",
    "F4": "F4({q})",
    "TwoF4": "2F4({q})",
    "E6": "E6({q})",
    "TwoE6": "2E6({q})",
    "E7": "E7({q})",
    "E8": "E8({q})",
}

_PARSE = [
    (re.compile(r"^A(\d+)$"), "Alt"),
    (re.compile(r"^PSL(\d+)\((\d+)\)$"), "PSL"),
    (re.compile(r"^PSU(\d+)\((\d+)\)$"), "PSU"),
    (re.compile(r"^PSp(\d+)\((\d+)\)$"), "PSp"),
    (re.compile(r"^POmega(\d+)\((\d+)\)$"), "OmegaOdd"),
    (re.compile(r"^POmega\+(\d+)\((\d+)\)$"), "OmegaPlus"),
    (re.compile(r"^POmega-(\d+)\((\d+)\)$"), "OmegaMinus"),
    (re.compile(r"^Sz\((\d+)\)$"), "Sz"),
    (re.compile(r"^G2\((\d+)\)$"), "G2"),
    (re.compile(r"^2G2\((\d+)\)$"), "Ree2G2"),
    (re.compile(r"^3D4\((\d+)\)$"), "TriD4"),
    (re.compile(r"^F4\((\d+)\)$"), "F4"),
    (re.compile(r"^2F4\((\d+)\)$"), "TwoF4"),
    (re.compile(r"^E6\((\d+)\)$"), "E6"),
    (re.compile(r"^2E6\((\d+)\)$"), "TwoE6"),
    (re.compile(r"^E7\((\d+)\)$"), "E7"),
    (re.compile(r"^E8\((\d+)\)$"), "E8"),
]


def _odd_power(q: int, base: int) -> bool:
    pp = prime_power_decomposition(q)
    return pp is not None and pp.base == base and pp.exponent % 2 == 1


@dataclass(frozen=True)
class FamilyId:
    """A member of a simple-group family.

    ``d`` is the degree/dimension that appears in the usual name: n for A_n and
    PSL_n(q)/PSU_n(q), 2n for PSp_2n(q) and the even orthogonal groups, 2n+1
    for POmega_2n+1(q). Exceptional families only use ``q``.
    """

    tag: str
    d: int | None = None
    q: int | None = None

    def __post_init__(self):
        tag, d, q = self.tag, self.d, self.q
        if tag not in TAGS:
            raise DomainError(f"unknown family {tag!r}")
        if tag == "Alt":
            if d is None or d < 5:
                raise DomainError("Alt(n) needs n >= 5")
            return
        if q is None or prime_power_decomposition(q) is None:
            raise DomainError(f"{tag}: q = {q} is not a prime power")
        rules = {
            "PSL": d is not None and d >= 2,
            "PSU": d is not None and d >= 3,
            "PSp": d is not None and d >= 4 and d % 2 == 0,
            "OmegaOdd": d is not None and d >= 5 and d % 2 == 1 and q % 2 == 1,
            "OmegaPlus": d is not None and d >= 6 and d % 2 == 0,
            "OmegaMinus": d is not None and d >= 4 and d % 2 == 0,
            "Sz": q >= 8 and _odd_power(q, 2),
            "Ree2G2": q >= 27 and _odd_power(q, 3),
            "TwoF4": q >= 8 and _odd_power(q, 2),
            "G2": q >= 3,
        }
        if not rules.get(tag, True):
            raise DomainError(f"invalid parameters for {tag}: d={d}, q={q}")
        if tag not in ("PSL", "PSU", "PSp", "OmegaOdd", "OmegaPlus", "OmegaMinus") and d is not None:
            raise DomainError(f"{tag} takes no dimension parameter")

    def __str__(self):
        return _LABELS[self.tag].format(d=self.d, q=self.q)

    @classmethod
    def parse(cls, label: str) -> "FamilyId":
        label = label.strip()
        for pattern, tag in _PARSE:
            m = pattern.match(label)
            if m:
                nums = [int(x) for x in m.groups()]
                if tag == "Alt":
                    return cls(tag, d=nums[0])
                if len(nums) == 2:
                    return cls(tag, d=nums[0], q=nums[1])
                return cls(tag, q=nums[0])
        raise DomainError(f"cannot parse family label {label!r}")

    # convenience constructors
    @classmethod
    def alt(cls, n):
        return cls("Alt", d=n)

    @classmethod
    def psl(cls, n, q):
        return cls("PSL", d=n, q=q)


def _prod(factors) -> int:
    return math.prod(factors)


def _exact(num: int, den: int) -> int:
    value, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return value


def _root(n: int) -> int:
    s = math.isqrt(n)
    if s * s != n:
        raise ArithmeticError(f"{n} is not a perfect square")
    return s


def group_order(fam: FamilyId) -> int:
    """|S| from the order formula of the family (literal factors, exact division last)."""
    tag, d, q = fam.tag, fam.d, fam.q
    if tag == "Alt":
        return math.factorial(d) // 2
    if tag == "PSL":
        n = d
        num = q ** (n * (n - 1) // 2) * _prod(q**i - 1 for i in range(1, n + 1))
        return _exact(num, (q - 1) * math.gcd(n, q - 1))
    if tag == "PSU":
        n = d
        num = q ** (n * (n - 1) // 2) * _prod(q**i - (-1) ** i for i in range(1, n + 1))
        return _exact(num, math.gcd(n, q + 1) * (q + 1))
    if tag in ("PSp", "OmegaOdd"):
        n = d // 2
        num = q ** (n * n) * _prod(q ** (2 * i) - 1 for i in range(1, n + 1))
        return _exact(num, math.gcd(2, q - 1))
    if tag == "OmegaPlus":
        n = d // 2
        num = q ** (n * (n - 1)) * (q**n - 1) * _prod(q ** (2 * i) - 1 for i in range(1, n))
        return _exact(num, math.gcd(4, q**n - 1))
    if tag == "OmegaMinus":
        n = d // 2
        num = q ** (n * (n - 1)) * (q**n + 1) * _prod(q ** (2 * i) - 1 for i in range(1, n))
        return _exact(num, math.gcd(4, q**n + 1))
    if tag == "Sz":
        s = _root(2 * q)
        return q**2 * (q - 1) * (q - s + 1) * (q + s + 1)
    if tag == "G2":
        return q**6 * (q - 1) ** 2 * (q + 1) ** 2 * (q**2 + q + 1) * (q**2 - q + 1)
    if tag == "Ree2G2":
        s = _root(3 * q)
        return q**3 * (q + 1) * (q - 1) * (q - s + 1) * (q + s + 1)
    if tag == "TriD4":
        return (
            q**12 * (q**2 + q + 1) ** 2 * (q**2 - q + 1) ** 2 * (q**4 - q**2 + 1)
            * (q + 1) ** 2 * (q - 1) ** 2
        )
    if tag == "F4":
        return (
            q**24 * (q**6 - 1) ** 2 * (q**2 - 1) ** 2 * (q**2 + 1) ** 2
            * (q**4 + 1) * (q**4 - q**2 + 1)
        )
    if tag == "TwoF4":
        s = _root(2 * q)
        return (
            q**12 * (q**4 - 1) ** 2 * (q**2 - q + 1)
            * (q**2 + q + 1 + s * (q + 1)) * (q**2 + q + 1 - s * (q + 1))
        )
    if tag == "E6":
        num = q**36 * _prod(q**k - 1 for k in (12, 9, 8, 6, 5, 2))
        return _exact(num, math.gcd(3, q - 1))
    if tag == "TwoE6":
        num = q**36 * (q**12 - 1) * (q**9 + 1) * (q**8 - 1) * (q**6 - 1) * (q**5 + 1) * (q**2 - 1)
        return _exact(num, math.gcd(3, q + 1))
    if tag == "E7":
        num = q**63 * _prod(q**k - 1 for k in (18, 14, 12, 10, 8, 6, 2))
        return _exact(num, math.gcd(2, q - 1))
    if tag == "E8":
        return q**120 * _prod(q**k - 1 for k in (30, 24, 20, 18, 14, 12, 8, 2))
    raise AssertionError(tag)


def minimal_degree_bound(fam: FamilyId) -> int:
    """Lower bound on the minimal permutation degree of an exceptional group."""
    q = fam.q
    if fam.tag == "F4":
        return _exact((q**12 - 1) * (q**4 + 1), q - 1)
    if fam.tag == "TwoF4":
        return (q**6 + 1) * (q**3 + 1) * (q + 1)
    if fam.tag == "E6":
        return _exact((q**9 - 1) * (q**8 + q**4 + 1), q - 1)
    if fam.tag == "TwoE6":
        return _exact((q**12 - 1) * (q**6 - q**3 + 1) * (q**4 + 1), q - 1)
    if fam.tag == "E7":
        return _exact((q**14 - 1) * (q**9 + 1) * (q**5 + 1), q - 1)
    if fam.tag == "E8":
        return _exact((q**20 - 1) * (q**12 + 1) * (q**10 + 1) * (q**6 + 1), q - 1)
    raise DomainError(f"no minimal-degree bound registered for {fam.tag}")
