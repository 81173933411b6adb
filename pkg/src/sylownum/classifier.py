"""Which n = 1 + rp below p^2 can be a Sylow p-number, and why.

Below p^2 a product of two nontrivial numbers that are each 1 mod p is
already too large, so n is either a prime power (realized by an affine
Frobenius group) or the Sylow number of a single simple group. The simple
groups that reach below p^2 are PSL3(3) at p = 13 and PSL2(q) for
q in {p, p - 1, p + 1}.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .families import FamilyId, TheoremCase, theorem_family_np
from .numtheory import (
    DomainError,
    PrimePower,
    is_fermat_prime,
    is_mersenne_prime,
    is_prime,
    prime_power_decomposition,
    primes_up_to,
)


@dataclass(frozen=True)
class SylowCount:
    n: int
    p: int
    r: int

    def __post_init__(self):
        if self.n != 1 + self.r * self.p:
            raise ValueError("n must equal 1 + r*p")

    @classmethod
    def of(cls, n: int, p: int) -> "SylowCount":
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        if n < 1:
            raise DomainError("n must be >= 1")
        if n % p != 1 % p:
            raise DomainError(f"{n} is not congruent to 1 mod {p}")
        return cls(n, p, (n - 1) // p)


# -- witnesses


@dataclass(frozen=True)
class TrivialWitness:
    kind = "trivial"

    def value(self, p: int) -> int:
        return 1

    def params_text(self) -> str:
        return "normal Sylow subgroup"

    def to_dict(self) -> dict:
        return {"kind": self.kind}


@dataclass(frozen=True)
class PrimePowerWitness:
    """n = q^t, realized by the affine group x -> ax + b on GF(q^t) with a of order p."""

    power: PrimePower
    frobenius: tuple[int, int, int]  # (p, r, t) for groupengine.frobenius_affine
    kind = "prime_power"

    def value(self, p: int) -> int:
        return self.power.value

    def params_text(self) -> str:
        p, r, t = self.frobenius
        return f"{self.power.base}^{self.power.exponent} Frob({p},{r},{t})"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "base": self.power.base,
            "exponent": self.power.exponent,
            "frobenius": list(self.frobenius),
        }


@dataclass(frozen=True)
class SimpleWitness:
    case: TheoremCase
    family: FamilyId
    kind = "simple"

    def value(self, p: int) -> int:
        return theorem_family_np(self.case, p).value

    def params_text(self) -> str:
        return str(self.family)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "case": self.case.value, "family": str(self.family)}


Witness = TrivialWitness | PrimePowerWitness | SimpleWitness
_WITNESS_ORDER = {"trivial": 0, "prime_power": 1, "simple": 2}


@dataclass(frozen=True)
class AdmissibleValue:
    value: int
    p: int
    witnesses: tuple
    r_coefficient: int

    def __post_init__(self):
        if self.value % self.p != 1 % self.p or self.value >= self.p**2:
            raise ValueError(f"{self.value} is not an admissible residue below {self.p}^2")
        if self.r_coefficient != (self.value - 1) // self.p:
            raise ValueError("r_coefficient mismatch")
        for w in self.witnesses:
            if w.value(self.p) != self.value:
                raise ValueError(f"witness {w} does not reproduce {self.value}")

    @property
    def witness(self):
        return self.witnesses[0]

    def kinds(self) -> list[str]:
        return [w.kind for w in self.witnesses]


def _simple_cases(p: int) -> list[SimpleWitness]:
    out = []
    if p == 13:
        out.append(SimpleWitness(TheoremCase.PSL3_3, FamilyId("PSL", d=3, q=3)))
    if p >= 5:
        out.append(SimpleWitness(TheoremCase.PSL2_P, FamilyId("PSL", d=2, q=p)))
    if p > 3 and is_fermat_prime(p):
        out.append(SimpleWitness(TheoremCase.PSL2_P_MINUS_1, FamilyId("PSL", d=2, q=p - 1)))
    if p > 3 and is_mersenne_prime(p):
        out.append(SimpleWitness(TheoremCase.PSL2_P_PLUS_1, FamilyId("PSL", d=2, q=p + 1)))
    return out


def _prime_power_witnesses(p: int) -> list[PrimePowerWitness]:
    # exponent 1: the primes among 1 + rp, 1 <= r < p;
    # exponent >= 2: b^t < p^2 forces b < p
    found = [PrimePower(1 + r * p, 1) for r in range(1, p) if is_prime(1 + r * p)]
    for b in primes_up_to(p - 1):
        v, t = b * b, 2
        while v < p * p:
            if v % p == 1:
                found.append(PrimePower(b, t))
            v *= b
            t += 1
    found.sort(key=lambda pp: pp.value)
    return [PrimePowerWitness(pp, (p, pp.base, pp.exponent)) for pp in found]


def admissible_sylow_numbers(p: int) -> list[AdmissibleValue]:
    """Every n < p^2 that is n_p(G) for some finite group G, with witnesses."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    by_value: dict[int, list] = {1: [TrivialWitness()]}
    for w in _prime_power_witnesses(p):
        by_value.setdefault(w.power.value, []).append(w)
    for w in _simple_cases(p):
        by_value.setdefault(w.value(p), []).append(w)
    out = []
    for n in sorted(by_value):
        ws = sorted(by_value[n], key=lambda w: _WITNESS_ORDER[w.kind])
        out.append(AdmissibleValue(n, p, tuple(ws), (n - 1) // p))
    return out


# -- decomposition


class DecompositionKind(enum.Enum):
    TRIVIAL = "Trivial"
    PRIME_POWER = "PrimePowerFactor"
    SIMPLE = "SimpleFactor"
    NOT_SYLOW = "NotASylowNumber"


@dataclass(frozen=True)
class Decomposition:
    kind: DecompositionKind
    n: int
    p: int
    prime_power: PrimePower | None = None
    frobenius: tuple[int, int, int] | None = None
    simple: tuple[SimpleWitness, ...] = ()
    reason: str = ""

    @property
    def admissible(self) -> bool:
        return self.kind is not DecompositionKind.NOT_SYLOW


def _validate(n: int, p: int) -> SylowCount:
    sc = SylowCount.of(n, p)
    if n >= p * p:
        raise DomainError(f"{n} is not below {p}^2 = {p * p}")
    return sc


def decompose(n: int, p: int) -> Decomposition:
    """Split n (n = 1 mod p, n < p^2) according to Hall's product theorem.

    Any nontrivial factor of n that is 1 mod p exceeds p, so two such factors
    would push n past p^2; hence n is a single prime power or a single
    simple-group Sylow number, or it is not a Sylow number at all.
    """
    _validate(n, p)
    if n == 1:
        return Decomposition(DecompositionKind.TRIVIAL, n, p, reason="n = 1: the Sylow subgroup is normal")
    simple = tuple(w for w in _simple_cases(p) if w.value(p) == n)
    pp = prime_power_decomposition(n)
    if pp is not None:
        return Decomposition(
            DecompositionKind.PRIME_POWER, n, p, pp, (p, pp.base, pp.exponent), simple,
            reason=f"{n} = {pp.base}^{pp.exponent} is a prime power congruent to 1 mod {p}",
        )
    if simple:
        names = ", ".join(str(w.family) for w in simple)
        return Decomposition(
            DecompositionKind.SIMPLE, n, p, simple=simple,
            reason=f"{n} is the Sylow {p}-number of {names}",
        )
    return Decomposition(
        DecompositionKind.NOT_SYLOW, n, p,
        reason=(
            f"{n} is not a prime power, no simple group has n_{p} = {n}, and a product "
            f"of two nontrivial factors congruent to 1 mod {p} would be at least {(p + 1) ** 2}"
        ),
    )


# -- p-solvability


class Verdict(enum.Enum):
    P_SOLVABLE = "PSolvableForced"
    NON_P_SOLVABLE = "NonPSolvableForced"
    OUTSIDE = "OutsideHypothesis"


@dataclass(frozen=True)
class SolvabilityVerdict:
    verdict: Verdict
    n: int
    p: int
    reason: str
    decomposition: Decomposition = field(repr=False, default=None)


def p_solvability_verdict(n: int, p: int) -> SolvabilityVerdict:
    """What n_p(G) = n < p^2 forces about p-solvability of G.

    The equivalence (p-solvable iff n is a prime power) holds unless p is a
    Mersenne prime greater than 3; p = 3 is inside the hypothesis.
    """
    d = decompose(n, p)
    if not d.admissible:
        raise DomainError(f"{n} is never a Sylow {p}-number")
    if p > 3 and is_mersenne_prime(p):
        return SolvabilityVerdict(Verdict.OUTSIDE, n, p, f"{p} is a Mersenne prime greater than 3", d)
    if d.kind in (DecompositionKind.TRIVIAL, DecompositionKind.PRIME_POWER):
        return SolvabilityVerdict(Verdict.P_SOLVABLE, n, p, f"{n} is a prime power, so G is {p}-solvable", d)
    assert d.kind is DecompositionKind.SIMPLE
    return SolvabilityVerdict(
        Verdict.NON_P_SOLVABLE, n, p,
        f"{n} is not a prime power; it comes from a nonabelian simple section", d,
    )


# -- census


@dataclass(frozen=True)
class CensusRow:
    p: int
    values: list[AdmissibleValue]


def census(p_max: int) -> list[CensusRow]:
    if p_max < 2:
        raise DomainError("census needs p_max >= 2")
    return [CensusRow(p, admissible_sylow_numbers(p)) for p in primes_up_to(p_max)]
