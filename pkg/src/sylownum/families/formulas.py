"""Closed-form Sylow numbers for the families where n_p can be written down.

Each formula is a literal product of the displayed factors, with the
division done last and checked to be exact. Primitivity hypotheses are
checked here with numtheory rather than trusted from the caller.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from ..numtheory import (
    DomainError,
    classify_primitive,
    is_fermat_prime,
    is_mersenne_prime,
    is_prime,
    is_prime_power,
)
from .orders import FamilyId


class PreconditionError(DomainError):
    """The formula's hypotheses do not hold for these parameters."""


@dataclass(frozen=True)
class FormulaResult:
    value: int
    formula_id: str
    p: int | None = None
    family: FamilyId | None = None

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("formula value must be >= 1")


class SpCase(enum.Enum):
    PRIMITIVE_2E = "Primitive2e"
    PRIMITIVE_E = "PrimitiveE"


class OmegaVariant(enum.Enum):
    SUBGROUP_E = "SubgroupE"
    FULL_N = "FullN"


class TheoremCase(enum.Enum):
    PSL2_P = "PSL2P"
    PSL3_3 = "PSL3_3"
    PSL2_P_MINUS_1 = "PSL2PMinus1"
    PSL2_P_PLUS_1 = "PSL2PPlus1"


def _exact(num: int, den: int, what: str) -> int:
    value, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"{what}: {num} not divisible by {den}")
    return value


def _check_q_p(q: int, p: int):
    if not is_prime_power(q):
        raise DomainError(f"q = {q} is not a prime power")
    if not is_prime(p) or p == 2:
        raise PreconditionError(f"p = {p} must be an odd prime")
    if q % p == 0:
        raise PreconditionError(f"p = {p} divides q = {q}")


# -- raw products (no hypothesis checks); shared with the inequality auditor


def gl_value(e: int, q: int) -> int:
    num = q ** (e * (e - 1) // 2) * math.prod(q**i - 1 for i in range(1, e))
    return _exact(num, e, "GL_e normalizer index")


def gu_value(e: int, q: int) -> int:
    num = q ** (e * (e - 1) // 2) * math.prod(q**i - (-1) ** i for i in range(1, e))
    return _exact(num, e, "GU_e normalizer index")


def sp_value(e: int, q: int, case: SpCase) -> int:
    head = q ** (e * e) * math.prod(q ** (2 * i) - 1 for i in range(1, e))
    last = q**e - 1 if case is SpCase.PRIMITIVE_2E else q**e + 1
    return _exact(head * last, 2 * e, "Sp_2e normalizer index")


def omega_subgroup_value(e: int, q: int) -> int:
    num = (
        q ** ((e + 1) * e) * (q ** (e + 1) - 1) * (q - 1)
        * math.prod(q ** (2 * i) - 1 for i in range(2, e))
        * (q**e - 1)
    )
    return _exact(num, 2 * e, "POmega+_2(e+1) normalizer index")


def omega_full_value(n: int, q: int) -> int:
    num = (
        q ** (n * (n - 1)) * (q**n - 1) * (q - 1)
        * math.prod(q ** (2 * i) - 1 for i in range(2, n - 1))
        * (q ** (n - 1) - 1)
    )
    return _exact(num, 2 * (n - 1), "POmega+_2n normalizer index")


# -- checked formula operations


def gl_np(e: int, q: int, p: int) -> FormulaResult:
    """n_p(GL_e(q)) when p is a primitive prime divisor of q^e - 1."""
    if e < 2:
        raise DomainError("gl_np needs e >= 2")
    _check_q_p(q, p)
    if classify_primitive(q, p).degree != e:
        raise PreconditionError(f"{p} is not a primitive prime divisor of {q}^{e} - 1")
    return FormulaResult(gl_value(e, q), "linear", p, FamilyId("PSL", d=e, q=q))


def gu_np(e: int, q: int, p: int) -> FormulaResult:
    """n_p(GU_e(q)) from the normalizer order e(q^e - (-1)^e).

    Requires p | q^e - (-1)^e. This also admits (e, q, p) = (3, 2, 3),
    which the unitary analysis evaluates explicitly.
    """
    if e < 3:
        raise DomainError("gu_np needs e >= 3")
    _check_q_p(q, p)
    if (q**e - (-1) ** e) % p:
        raise PreconditionError(f"{p} does not divide {q}^{e} - (-1)^{e}")
    return FormulaResult(gu_value(e, q), "unitary", p, FamilyId("PSU", d=e, q=q))


def sp_np(e: int, q: int, p: int, case: SpCase | str) -> FormulaResult:
    """n_p(Sp_2e(q)); p primitive for q^{2e} - 1, or for q^e - 1 with e odd."""
    case = SpCase(case)
    if e < 2:
        raise DomainError("sp_np needs e >= 2")
    _check_q_p(q, p)
    pc = classify_primitive(q, p)
    if pc.e != e:
        raise PreconditionError(f"half-order parameter of {q} mod {p} is {pc.e}, not {e}")
    if case is SpCase.PRIMITIVE_2E and pc.degree != 2 * e:
        raise PreconditionError(f"{p} is not primitive for {q}^{2 * e} - 1")
    if case is SpCase.PRIMITIVE_E and (e % 2 == 0 or pc.degree != e):
        raise PreconditionError(f"{p} is not primitive for {q}^{e} - 1 with e odd")
    return FormulaResult(sp_value(e, q, case), f"symplectic-{case.value}", p, FamilyId("PSp", d=2 * e, q=q))


def omega_plus_np(variant: OmegaVariant | str, k: int, q: int, p: int) -> FormulaResult:
    """n_p for POmega+_{2(e+1)}(q) (SubgroupE, k = e) or POmega+_{2n}(q) (FullN, k = n)."""
    variant = OmegaVariant(variant)
    _check_q_p(q, p)
    e = k if variant is OmegaVariant.SUBGROUP_E else k - 1
    if variant is OmegaVariant.SUBGROUP_E and k < 2:
        raise DomainError("SubgroupE needs e >= 2")
    if variant is OmegaVariant.FULL_N and k < 3:
        raise DomainError("FullN needs n >= 3")
    pc = classify_primitive(q, p)
    if pc.degree != 2 * e:
        raise PreconditionError(f"{p} is not a primitive prime divisor of {q}^{2 * e} - 1")
    if variant is OmegaVariant.SUBGROUP_E:
        value, fam = omega_subgroup_value(k, q), FamilyId("OmegaPlus", d=2 * (k + 1), q=q)
    else:
        value, fam = omega_full_value(k, q), FamilyId("OmegaPlus", d=2 * k, q=q)
    return FormulaResult(value, f"orthogonal-plus-{variant.value}", p, fam)


def psl2_np(q: int, p: int) -> FormulaResult:
    """n_p(PSL_2(q)) for p in {q, q + 1, q - 1}."""
    if not is_prime_power(q) or q < 4:
        raise DomainError(f"PSL2({q}) is not simple")
    if not is_prime(p) or p == 2:
        raise DomainError(f"p = {p} must be an odd prime")
    fam = FamilyId("PSL", d=2, q=q)
    if p == q:
        return FormulaResult(1 + p, "psl2-p-equals-q", p, fam)
    if p == q + 1:
        return FormulaResult(q * (q - 1) // 2, "psl2-p-equals-q-plus-1", p, fam)
    if p == q - 1:
        return FormulaResult(q * (q + 1) // 2, "psl2-p-equals-q-minus-1", p, fam)
    raise PreconditionError(f"p = {p} is not one of q, q + 1, q - 1 for q = {q}")


def alternating_np(n: int, p: int) -> FormulaResult:
    """n_p(A_n) = n! / ((n - p)! p (p - 1)) when p <= n < 2p."""
    if n < 5:
        raise DomainError("A_n is simple only for n >= 5")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if not p <= n < 2 * p:
        raise PreconditionError(f"need p <= n < 2p, got n = {n}, p = {p}")
    num = math.factorial(n)
    value = _exact(num, math.factorial(n - p) * p * (p - 1), "alternating")
    return FormulaResult(value, "alternating", p, FamilyId("Alt", d=n))


def theorem_family_np(case: TheoremCase | str, p: int | None = None) -> FormulaResult:
    """The four simple-group values that can sit below p^2."""
    case = TheoremCase(case)
    if case is TheoremCase.PSL3_3:
        if p not in (None, 13):
            raise PreconditionError("the PSL3(3) case only occurs at p = 13")
        return FormulaResult(144, "theorem-PSL3_3", 13, FamilyId("PSL", d=3, q=3))
    if p is None or not is_prime(p):
        raise DomainError(f"p = {p} is not prime")
    if case is TheoremCase.PSL2_P:
        if p < 5:
            raise PreconditionError("PSL2(p) is simple only for p >= 5")
        return FormulaResult(1 + p, "theorem-PSL2P", p, FamilyId("PSL", d=2, q=p))
    if case is TheoremCase.PSL2_P_MINUS_1:
        if not (p > 3 and is_fermat_prime(p)):
            raise PreconditionError(f"{p} is not a Fermat prime > 3")
        return FormulaResult(1 + (p - 3) * p // 2, "theorem-PSL2PMinus1", p, FamilyId("PSL", d=2, q=p - 1))
    if not (p > 3 and is_mersenne_prime(p)):
        raise PreconditionError(f"{p} is not a Mersenne prime > 3")
    return FormulaResult(1 + (p + 3) * p // 2, "theorem-PSL2PPlus1", p, FamilyId("PSL", d=2, q=p + 1))


FORMULAS = {
    "gl_np": gl_np,
    "gu_np": gu_np,
    "sp_np": sp_np,
    "omega_plus_np": omega_plus_np,
    "psl2_np": psl2_np,
    "alternating_np": alternating_np,
    "theorem_family_np": theorem_family_np,
}


def evaluate(name: str, args) -> FormulaResult:
    """Dispatch a formula by registry name (used by catalog verification)."""
    try:
        fn = FORMULAS[name]
    except KeyError:
        raise DomainError(f"unknown formula {name!r}") from None
    return fn(*args)
