"""Exact evaluation of the inequality chains behind the family-by-family analysis.

A chain is a sequence of labeled terms t0, t1, ..., tk joined by relations
(t0 >= t1 > t2 ...), each term a function of the chain's parameters. Every
link is evaluated exactly (ints and Fractions) at every parameter point in
the requested range, and each failing link is reported with its parameters.

Where a chain ends in "p^2", the registered final term is the square of the
cyclotomic (or other) factor that p divides, so the check is at least as
strong as the original.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from ..numtheory import DomainError, cyclotomic_value, euler_totient, is_prime_power, primes_up_to
from .orders import _odd_power

RELATIONS = {
    ">=": operator.ge,
    ">": operator.gt,
    "<=": operator.le,
    "<": operator.lt,
    "==": operator.eq,
}


@dataclass(frozen=True)
class Term:
    label: str
    fn: Callable[[dict], int | Fraction]


@dataclass(frozen=True)
class Chain:
    name: str
    tag: str
    condition: str
    terms: tuple[Term, ...]
    relations: tuple[str, ...]
    points: Callable[[int, int], Iterable[dict]]

    def __post_init__(self):
        if len(self.relations) != len(self.terms) - 1:
            raise ValueError(f"{self.name}: need one relation per link")
        for rel in self.relations:
            if rel not in RELATIONS:
                raise ValueError(f"{self.name}: unknown relation {rel!r}")

    def describe(self) -> str:
        parts = [self.terms[0].label]
        for rel, term in zip(self.relations, self.terms[1:]):
            parts += [rel, term.label]
        return " ".join(parts)


@dataclass(frozen=True)
class Violation:
    chain: str
    tag: str
    params: dict
    link: int
    lhs_label: str
    relation: str
    rhs_label: str
    lhs: int | Fraction
    rhs: int | Fraction

    def __str__(self):
        ps = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return (
            f"[{self.tag}] {self.chain} at {ps}: link {self.link} "
            f"{self.lhs_label} {self.relation} {self.rhs_label} fails ({self.lhs} vs {self.rhs})"
        )


@dataclass
class ChainResult:
    name: str
    tag: str
    condition: str
    formula: str
    points: int = 0
    violations: list[Violation] = field(default_factory=list)


@dataclass
class AuditReport:
    q_max: int
    e_max: int
    chains: list[ChainResult]

    @property
    def points(self) -> int:
        return sum(c.points for c in self.chains)

    @property
    def violations(self) -> list[Violation]:
        return [v for c in self.chains for v in c.violations]

    @property
    def ok(self) -> bool:
        return not self.violations


# -- parameter generators


def _prime_powers(lo: int, hi: int) -> list[int]:
    return [q for q in range(max(lo, 2), hi + 1) if is_prime_power(q)]


def qs(lo=2, where=None):
    def gen(q_max, e_max):
        for q in _prime_powers(lo, q_max):
            if where is None or where(q):
                yield {"q": q}
    return gen


def qe(e_lo, e_hi=None, q_lo=2, where=None):
    def gen(q_max, e_max):
        top = e_max if e_hi is None else min(e_hi, e_max)
        for e in range(e_lo, top + 1):
            for q in _prime_powers(q_lo, q_max):
                if where is None or where(q, e):
                    yield {"q": q, "e": e}
    return gen


def qn(n_lo, n_hi=None, q_lo=2, where=None):
    def gen(q_max, e_max):
        top = e_max if n_hi is None else min(n_hi, e_max)
        for n in range(n_lo, top + 1):
            for q in _prime_powers(q_lo, q_max):
                if where is None or where(q, n):
                    yield {"q": q, "n": n}
    return gen


def _alt_large_p(q_max, e_max):
    for p in primes_up_to(e_max):
        if p >= 7:
            for n in range(p, 2 * p):
                yield {"p": p, "n": n}


def _alt_p5(q_max, e_max):
    for n in range(6, 10):
        yield {"n": n}


def _is_two_power(q):
    return q & (q - 1) == 0


def _suzuki(q):
    return q >= 8 and _odd_power(q, 2)


def _ree(q):
    return q >= 27 and _odd_power(q, 3)


def _ree_points(q_max, e_max):
    for q in _prime_powers(27, q_max):
        if _ree(q):
            yield {"q": q}


def _suzuki_points(q_max, e_max):
    for q in _prime_powers(8, q_max):
        if _suzuki(q):
            yield {"q": q}


# -- term helpers


def T(label, fn):
    return Term(label, fn)


def phi(k, q):
    return cyclotomic_value(k, q)


def s2(q):
    return math.isqrt(2 * q)


def s3(q):
    return math.isqrt(3 * q)


def gl_expr(e, q):
    return Fraction(q ** (e * (e - 1) // 2) * math.prod(q**i - 1 for i in range(1, e)), e)


def gu_expr(e, q):
    return Fraction(q ** (e * (e - 1) // 2) * math.prod(q**i - (-1) ** i for i in range(1, e)), e)


def gu_drop_last(e, q):
    # the unitary lower bound with the last factor and the 1/e removed
    return q ** (e * (e - 1) // 2) * math.prod(q**i - (-1) ** i for i in range(1, e - 1))


def sp2e_expr(e, q):
    return Fraction(q ** (e * e) * math.prod(q ** (2 * i) - 1 for i in range(1, e)) * (q**e - 1), 2 * e)


def spe_expr(e, q):
    return Fraction(q ** (e * e) * math.prod(q ** (2 * i) - 1 for i in range(1, e)) * (q**e + 1), 2 * e)


def omega6_expr(e, q):
    num = (
        q ** ((e + 1) * e) * (q ** (e + 1) - 1) * (q - 1)
        * math.prod(q ** (2 * i) - 1 for i in range(2, e)) * (q**e - 1)
    )
    return Fraction(num, 2 * e)


def omega7_expr(n, q):
    num = (
        q ** (n * (n - 1)) * (q**n - 1) * (q - 1)
        * math.prod(q ** (2 * i) - 1 for i in range(2, n - 1)) * (q ** (n - 1) - 1)
    )
    return Fraction(num, 2 * (n - 1))


def alt_expr(n, p):
    return Fraction(math.factorial(n), math.factorial(n - p) * p * (p - 1))


# -- the registry


def _chain(name, tag, condition, points, *items):
    terms = tuple(items[0::2])
    rels = tuple(items[1::2])
    return Chain(name, tag, condition, terms, rels, points)


def _registry() -> list[Chain]:
    chains = [
        _chain(
            "cyclotomic bound", "glasby", "1 <= e <= emax", qe(1),
            T("4q^phi(e)", lambda v: 4 * v["q"] ** euler_totient(v["e"])), ">",
            T("Phi_e(q)", lambda v: phi(v["e"], v["q"])),
        ),
        # linear groups, GL_e(q) with p primitive for q^e - 1
        _chain(
            "linear e>=6", "linear", "e >= 6", qe(6),
            T("n_p(GL_e(q))", lambda v: gl_expr(v["e"], v["q"])), ">=",
            T("q^(e(e-1)/2)", lambda v: v["q"] ** (v["e"] * (v["e"] - 1) // 2)), ">",
            T("16q^(2(e-1))", lambda v: 16 * v["q"] ** (2 * (v["e"] - 1))), ">=",
            T("(4q^phi(e))^2", lambda v: (4 * v["q"] ** euler_totient(v["e"])) ** 2), ">",
            T("Phi_e(q)^2", lambda v: phi(v["e"], v["q"]) ** 2),
        ),
        _chain(
            "linear e=5", "linear", "e = 5", qs(),
            T("n_p(GL_5(q))", lambda v: gl_expr(5, v["q"])), ">=",
            T("q^10(q-1)^4(q+1)^2(q^2+1)", lambda v: v["q"] ** 10 * (v["q"] - 1) ** 4 * (v["q"] + 1) ** 2 * (v["q"] ** 2 + 1)), ">=",
            T("q^14", lambda v: v["q"] ** 14), ">",
            T("16q^8", lambda v: 16 * v["q"] ** 8), "==",
            T("(4q^phi(5))^2", lambda v: (4 * v["q"] ** euler_totient(5)) ** 2), ">",
            T("Phi_5(q)^2", lambda v: phi(5, v["q"]) ** 2),
        ),
        _chain(
            "linear e=4", "linear", "e = 4, q >= 3", qs(3),
            T("n_p(GL_4(q))", lambda v: gl_expr(4, v["q"])), ">=",
            T("q^8", lambda v: v["q"] ** 8), ">=",
            T("(4q^phi(4))^2", lambda v: (4 * v["q"] ** euler_totient(4)) ** 2), ">",
            T("Phi_4(q)^2", lambda v: phi(4, v["q"]) ** 2),
        ),
        _chain(
            "linear e=3", "linear", "e = 3, q >= 7", qs(7),
            T("n_p(GL_3(q))", lambda v: gl_expr(3, v["q"])), ">=",
            T("q^4(q-1)^2/3", lambda v: Fraction(v["q"] ** 4 * (v["q"] - 1) ** 2, 3)), ">=",
            T("9q^4", lambda v: 9 * v["q"] ** 4), ">=",
            T("Phi_3(q)^2", lambda v: phi(3, v["q"]) ** 2),
        ),
        _chain(
            "linear e=2, p < q+1", "linear", "e = 2, q >= 5, kp = q+1 with k >= 2", qs(5),
            T("q(q-1)/2", lambda v: Fraction(v["q"] * (v["q"] - 1), 2)), ">=",
            T("(q+1)^2/4", lambda v: Fraction((v["q"] + 1) ** 2, 4)),
        ),
        _chain(
            "PSL2(q), p | q-1", "linear", "q >= 13 odd, kp = q-1 with k >= 2", qs(13, lambda q: q % 2),
            T("q(q+1)/2", lambda v: Fraction(v["q"] * (v["q"] + 1), 2)), ">=",
            T("(q-1)^2/4", lambda v: Fraction((v["q"] - 1) ** 2, 4)),
        ),
        _chain(
            "PSL3(2^f), p = q+1", "linear", "q = 2^f >= 4", qs(4, _is_two_power),
            T("q^3(q^3-1)/2", lambda v: Fraction(v["q"] ** 3 * (v["q"] ** 3 - 1), 2)), ">",
            T("(q+1)^2", lambda v: (v["q"] + 1) ** 2),
        ),
        # unitary groups, GU_e(q)
        _chain(
            "unitary cyclotomic bound", "unitary", "e >= 3", qe(3),
            T("16q^(4e-2)", lambda v: 16 * v["q"] ** (4 * v["e"] - 2)), ">=",
            T("(4q^phi(2e))^2", lambda v: (4 * v["q"] ** euler_totient(2 * v["e"])) ** 2), ">",
            T("Phi_2e(q)^2", lambda v: phi(2 * v["e"], v["q"]) ** 2),
        ),
        _chain(
            "unitary e>=9", "unitary", "e >= 9", qe(9),
            T("n_p(GU_e(q))", lambda v: gu_expr(v["e"], v["q"])), ">=",
            T("q^(e(e-1)/2)", lambda v: v["q"] ** (v["e"] * (v["e"] - 1) // 2)), ">=",
            T("16q^(4(e-1))", lambda v: 16 * v["q"] ** (4 * (v["e"] - 1))), ">=",
            T("Phi_2e(q)^2", lambda v: phi(2 * v["e"], v["q"]) ** 2),
        ),
        _chain(
            "unitary e in {7,8}", "unitary", "e = 7 or 8", qe(7, 8),
            T("n_p(GU_e(q))", lambda v: gu_expr(v["e"], v["q"])), ">=",
            T("q^(e(e-1)/2) prod_{i<=e-2}(q^i-(-1)^i)", lambda v: gu_drop_last(v["e"], v["q"])), ">=",
            T("16q^(4e-2)", lambda v: 16 * v["q"] ** (4 * v["e"] - 2)), ">",
            T("Phi_2e(q)^2", lambda v: phi(2 * v["e"], v["q"]) ** 2),
        ),
        _chain(
            "unitary e=6", "unitary", "e = 6", qs(),
            T("n_p(GU_6(q))", lambda v: gu_expr(6, v["q"])), ">=",
            T("q^15(q+1)(q^2-1)(q^3+1)(q^4-1)", lambda v: gu_drop_last(6, v["q"])), ">",
            T("q^15", lambda v: v["q"] ** 15), ">",
            T("16q^4", lambda v: 16 * v["q"] ** 4), ">",
            T("max(Phi_3(q), Phi_6(q))^2", lambda v: max(phi(3, v["q"]), phi(6, v["q"])) ** 2),
        ),
        _chain(
            "unitary e=5", "unitary", "e = 5", qs(),
            T("n_p(GU_5(q))", lambda v: gu_expr(5, v["q"])), ">=",
            T("q^16(q-1)^2(q^2-q+1)", lambda v: v["q"] ** 16 * (v["q"] - 1) ** 2 * (v["q"] ** 2 - v["q"] + 1)), ">",
            T("16q^8", lambda v: 16 * v["q"] ** 8), ">",
            T("Phi_10(q)^2", lambda v: phi(10, v["q"]) ** 2),
        ),
        _chain(
            "unitary e=4", "unitary", "e = 4", qs(),
            T("n_p(GU_4(q))", lambda v: gu_expr(4, v["q"])), ">=",
            T("q^6(q^3+1)(q-1)", lambda v: v["q"] ** 6 * (v["q"] ** 3 + 1) * (v["q"] - 1)), ">",
            T("16q^4", lambda v: 16 * v["q"] ** 4), ">",
            T("max(Phi_2(q), Phi_4(q))^2", lambda v: max(phi(2, v["q"]), phi(4, v["q"])) ** 2),
        ),
        _chain(
            "unitary e=3", "unitary", "e = 3, q >= 4", qs(4),
            T("n_p(GU_3(q))", lambda v: gu_expr(3, v["q"])), ">=",
            T("3q^4", lambda v: 3 * v["q"] ** 4), ">=",
            T("Phi_6(q)^2", lambda v: phi(6, v["q"]) ** 2),
        ),
        _chain(
            "PSU3(q), p | q^2-q+1", "unitary", "q >= 4", qs(4),
            T("q^3(q-1)(q+1)^2/3", lambda v: Fraction(v["q"] ** 3 * (v["q"] - 1) * (v["q"] + 1) ** 2, 3)), ">=",
            T("q^4(q-1)", lambda v: v["q"] ** 4 * (v["q"] - 1)), ">=",
            T("3q^4", lambda v: 3 * v["q"] ** 4), ">=",
            T("(q^2+1)^2", lambda v: (v["q"] ** 2 + 1) ** 2), ">=",
            T("(q^2-q+1)^2", lambda v: (v["q"] ** 2 - v["q"] + 1) ** 2),
        ),
        _chain(
            "PSU3(q), p | q-1", "unitary", "q > 2", qs(3),
            T("q^3", lambda v: v["q"] ** 3), ">=",
            T("2q^2", lambda v: 2 * v["q"] ** 2), ">=",
            T("(q-1)^2", lambda v: (v["q"] - 1) ** 2),
        ),
        # symplectic groups, Sp_2e(q)
        _chain(
            "symplectic e>=4, p primitive for q^2e-1", "symplectic", "e >= 4", qe(4),
            T("n_p(Sp_2e(q))", lambda v: sp2e_expr(v["e"], v["q"])), ">=",
            T("q^(e^2)(q^2-1)(q^4-1)(q^6-1)", lambda v: v["q"] ** (v["e"] ** 2) * (v["q"] ** 2 - 1) * (v["q"] ** 4 - 1) * (v["q"] ** 6 - 1)), ">=",
            T("q^(e^2+3)(q^6-1)", lambda v: v["q"] ** (v["e"] ** 2 + 3) * (v["q"] ** 6 - 1)), ">=",
            T("16q^(4e-2)", lambda v: 16 * v["q"] ** (4 * v["e"] - 2)), ">=",
            T("(4q^phi(2e))^2", lambda v: (4 * v["q"] ** euler_totient(2 * v["e"])) ** 2), ">",
            T("Phi_2e(q)^2", lambda v: phi(2 * v["e"], v["q"]) ** 2),
        ),
        _chain(
            "symplectic e=3, p primitive for q^6-1", "symplectic", "e = 3", qs(),
            T("n_p(Sp_6(q))", lambda v: sp2e_expr(3, v["q"])), ">=",
            T("q^12", lambda v: v["q"] ** 12), ">=",
            T("16q^4", lambda v: 16 * v["q"] ** 4), ">=",
            T("Phi_6(q)^2", lambda v: phi(6, v["q"]) ** 2),
        ),
        _chain(
            "symplectic e=2, p primitive for q^4-1", "symplectic", "e = 2, q >= 3", qs(3),
            T("n_p(Sp_4(q))", lambda v: sp2e_expr(2, v["q"])), ">=",
            T("Phi_4(q)^2", lambda v: phi(4, v["q"]) ** 2),
        ),
        _chain(
            "symplectic odd e>=3, p primitive for q^e-1", "symplectic", "e >= 3 odd", qe(3, where=lambda q, e: e % 2),
            T("n_p(Sp_2e(q))", lambda v: spe_expr(v["e"], v["q"])), ">=",
            T("q^(e^2)(q^2-1)(q^4-1)", lambda v: v["q"] ** (v["e"] ** 2) * (v["q"] ** 2 - 1) * (v["q"] ** 4 - 1)), ">=",
            T("(q^2+1)(q+1)^2q^(e^2)", lambda v: (v["q"] ** 2 + 1) * (v["q"] + 1) ** 2 * v["q"] ** (v["e"] ** 2)), ">=",
            T("16q^(2e-2)", lambda v: 16 * v["q"] ** (2 * v["e"] - 2)), ">=",
            T("(4q^phi(e))^2", lambda v: (4 * v["q"] ** euler_totient(v["e"])) ** 2), ">",
            T("Phi_e(q)^2", lambda v: phi(v["e"], v["q"]) ** 2),
        ),
        # orthogonal groups of plus type
        _chain(
            "orthogonal-plus subgroup e>=4", "orthogonal-plus", "e >= 4", qe(4),
            T("n_p(POmega+_2(e+1)(q))", lambda v: omega6_expr(v["e"], v["q"])), ">=",
            T("q^((e+1)e)(q^(e+1)-1)(q^4-1)", lambda v: v["q"] ** ((v["e"] + 1) * v["e"]) * (v["q"] ** (v["e"] + 1) - 1) * (v["q"] ** 4 - 1)), ">=",
            T("(q^(e+1)-1)q^(e^2+e+3)", lambda v: (v["q"] ** (v["e"] + 1) - 1) * v["q"] ** (v["e"] ** 2 + v["e"] + 3)), ">=",
            T("16q^(4e-2)", lambda v: 16 * v["q"] ** (4 * v["e"] - 2)), ">=",
            T("Phi_2e(q)^2", lambda v: phi(2 * v["e"], v["q"]) ** 2),
        ),
        _chain(
            "orthogonal-plus subgroup e in {2,3}", "orthogonal-plus", "e = 2 or 3, (e, q) != (2, 2)",
            qe(2, 3, where=lambda q, e: (e, q) != (2, 2)),
            T("n_p(POmega+_2(e+1)(q))", lambda v: omega6_expr(v["e"], v["q"])), ">=",
            T("(4q^phi(2e))^2", lambda v: (4 * v["q"] ** euler_totient(2 * v["e"])) ** 2), ">",
            T("Phi_2e(q)^2", lambda v: phi(2 * v["e"], v["q"]) ** 2),
        ),
        _chain(
            "orthogonal-plus full n>=5", "orthogonal-plus", "n >= 5", qn(5),
            T("n_p(POmega+_2n(q))", lambda v: omega7_expr(v["n"], v["q"])), ">=",
            T("q^(n(n-1))(q^n-1)", lambda v: v["q"] ** (v["n"] * (v["n"] - 1)) * (v["q"] ** v["n"] - 1)), ">=",
            T("16q^(4n-4)", lambda v: 16 * v["q"] ** (4 * v["n"] - 4)), ">=",
            T("(4q^phi(2n-2))^2", lambda v: (4 * v["q"] ** euler_totient(2 * v["n"] - 2)) ** 2), ">",
            T("Phi_2n-2(q)^2", lambda v: phi(2 * v["n"] - 2, v["q"]) ** 2),
        ),
        _chain(
            "orthogonal-plus full n in {3,4}", "orthogonal-plus", "n = 3 or 4, (n, q) != (3, 2)",
            qn(3, 4, where=lambda q, n: (n, q) != (3, 2)),
            T("n_p(POmega+_2n(q))", lambda v: omega7_expr(v["n"], v["q"])), ">",
            T("16q^4", lambda v: 16 * v["q"] ** 4), ">",
            T("Phi_2n-2(q)^2", lambda v: phi(2 * v["n"] - 2, v["q"]) ** 2),
        ),
        # orthogonal groups of minus type
        _chain(
            "orthogonal-minus, q odd, p | q^(n-1)+1", "orthogonal-minus", "q odd, n >= 2, k >= 2",
            qn(2, where=lambda q, n: q % 2),
            T("(q^(n-1)+1)^2/4", lambda v: Fraction((v["q"] ** (v["n"] - 1) + 1) ** 2, 4)), "<=",
            T("3q^(2n-2)/4", lambda v: Fraction(3 * v["q"] ** (2 * v["n"] - 2), 4)), "<=",
            T("q^(2(n-1))", lambda v: v["q"] ** (2 * (v["n"] - 1))),
        ),
        _chain(
            "orthogonal-minus, POmega-_8(u), p = u^4+1", "orthogonal-minus", "u even", qs(2, _is_two_power),
            T("u^8(u^2-1)(u^4-1)(u^6-1)", lambda v: v["q"] ** 8 * (v["q"] ** 2 - 1) * (v["q"] ** 4 - 1) * (v["q"] ** 6 - 1)), ">",
            T("u^17", lambda v: v["q"] ** 17), ">",
            T("3u^8", lambda v: 3 * v["q"] ** 8), ">=",
            T("(u^4+1)^2", lambda v: (v["q"] ** 4 + 1) ** 2),
        ),
        # Suzuki groups, s = sqrt(2q)
        _chain(
            "Sz(q), p | q-1", "suzuki", "q = 2^(2m+1) >= 8", _suzuki_points,
            T("q^2(q^2+1)/2", lambda v: Fraction(v["q"] ** 2 * (v["q"] ** 2 + 1), 2)), ">=",
            T("(q-1)^2", lambda v: (v["q"] - 1) ** 2),
        ),
        _chain(
            "Sz(q), p | q-s+1", "suzuki", "q = 2^(2m+1) >= 8", _suzuki_points,
            T("q^2(q-1)(q+s+1)/4", lambda v: Fraction(v["q"] ** 2 * (v["q"] - 1) * (v["q"] + s2(v["q"]) + 1), 4)), ">=",
            T("q^2(q+s+1)", lambda v: v["q"] ** 2 * (v["q"] + s2(v["q"]) + 1)), ">=",
            T("4q^2", lambda v: 4 * v["q"] ** 2), ">=",
            T("(q+1)^2", lambda v: (v["q"] + 1) ** 2), ">=",
            T("(q-s+1)^2", lambda v: (v["q"] - s2(v["q"]) + 1) ** 2),
        ),
        _chain(
            "Sz(q), p | q+s+1", "suzuki", "q = 2^(2m+1) >= 8", _suzuki_points,
            T("q^2(q-1)(q-s+1)/4", lambda v: Fraction(v["q"] ** 2 * (v["q"] - 1) * (v["q"] - s2(v["q"]) + 1), 4)), "==",
            T("q^2((q-s)q+(s-1))/4", lambda v: Fraction(v["q"] ** 2 * ((v["q"] - s2(v["q"])) * v["q"] + s2(v["q"]) - 1), 4)), ">=",
            T("q^3", lambda v: v["q"] ** 3), ">=",
            T("5q^2", lambda v: 5 * v["q"] ** 2), ">=",
            T("(q+s+1)^2", lambda v: (v["q"] + s2(v["q"]) + 1) ** 2),
        ),
        # small Ree groups, t = sqrt(3q)
        _chain(
            "2G2(q), p | q+1", "ree", "q = 3^(2m+1) >= 27", _ree_points,
            T("q^3(q^2-q+1)(q-1)/6", lambda v: Fraction(v["q"] ** 3 * (v["q"] ** 2 - v["q"] + 1) * (v["q"] - 1), 6)), ">",
            T("q^3", lambda v: v["q"] ** 3), ">=",
            T("3q^2", lambda v: 3 * v["q"] ** 2), ">=",
            T("(q+1)^2", lambda v: (v["q"] + 1) ** 2),
        ),
        _chain(
            "2G2(q), p | q-1", "ree", "q = 3^(2m+1) >= 27", _ree_points,
            T("q^3", lambda v: v["q"] ** 3), ">",
            T("(q-1)^2", lambda v: (v["q"] - 1) ** 2),
        ),
        _chain(
            "2G2(q), p | q-t+1", "ree", "q = 3^(2m+1) >= 27", _ree_points,
            T("q^3(q^2-1)(q+t+1)/6", lambda v: Fraction(v["q"] ** 3 * (v["q"] ** 2 - 1) * (v["q"] + s3(v["q"]) + 1), 6)), ">=",
            T("q^4", lambda v: v["q"] ** 4), ">",
            T("4q^2", lambda v: 4 * v["q"] ** 2), ">=",
            T("(q-t+1)^2", lambda v: (v["q"] - s3(v["q"]) + 1) ** 2),
        ),
        _chain(
            "2G2(q), p | q+t+1", "ree", "q = 3^(2m+1) >= 27", _ree_points,
            T("q^3(q^2-1)(q-t+1)/6", lambda v: Fraction(v["q"] ** 3 * (v["q"] ** 2 - 1) * (v["q"] - s3(v["q"]) + 1), 6)), ">=",
            T("q^4", lambda v: v["q"] ** 4), ">=",
            T("9q^2", lambda v: 9 * v["q"] ** 2), ">=",
            T("(q+t+1)^2", lambda v: (v["q"] + s3(v["q"]) + 1) ** 2),
        ),
        # exceptional groups
        _chain(
            "3D4(q), p | q^4-q^2+1", "3D4", "all q", qs(),
            T("q^12(q^2+q+1)^2(q^2-q+1)^2(q+1)^2(q-1)^2/4", lambda v: Fraction(
                v["q"] ** 12 * (v["q"] ** 2 + v["q"] + 1) ** 2 * (v["q"] ** 2 - v["q"] + 1) ** 2
                * (v["q"] + 1) ** 2 * (v["q"] - 1) ** 2, 4)), ">=",
            T("8q^8", lambda v: 8 * v["q"] ** 8), ">=",
            T("(q^4-q^2+1)^2", lambda v: (v["q"] ** 4 - v["q"] ** 2 + 1) ** 2),
        ),
        _chain(
            "F4(q) minimal degree", "F4", "all q", qs(),
            T("(q^12-1)(q^4+1)/(q-1)", lambda v: Fraction((v["q"] ** 12 - 1) * (v["q"] ** 4 + 1), v["q"] - 1)), ">=",
            T("q^15", lambda v: v["q"] ** 15), ">",
            T("3q^8", lambda v: 3 * v["q"] ** 8), ">=",
            T("(q^4+1)^2", lambda v: (v["q"] ** 4 + 1) ** 2),
        ),
        _chain(
            "2F4(q) minimal degree", "2F4", "q = 2^(2m+1) >= 8", _suzuki_points,
            T("(q^6+1)(q^3+1)(q+1)", lambda v: (v["q"] ** 6 + 1) * (v["q"] ** 3 + 1) * (v["q"] + 1)), ">",
            T("q^10", lambda v: v["q"] ** 10), ">",
            T("25q^4", lambda v: 25 * v["q"] ** 4), ">=",
            T("(q^2+q+1+s(q+1))^2", lambda v: (v["q"] ** 2 + v["q"] + 1 + s2(v["q"]) * (v["q"] + 1)) ** 2),
        ),
        _chain(
            "E6(q) minimal degree", "E6", "all q", qs(),
            T("(q^9-1)(q^8+q^4+1)/(q-1)", lambda v: Fraction((v["q"] ** 9 - 1) * (v["q"] ** 8 + v["q"] ** 4 + 1), v["q"] - 1)), ">",
            T("q^16", lambda v: v["q"] ** 16), ">",
            T("3q^12", lambda v: 3 * v["q"] ** 12), ">",
            T("(q^6+1)^2", lambda v: (v["q"] ** 6 + 1) ** 2),
        ),
        _chain(
            "2E6(q) minimal degree", "2E6", "all q", qs(),
            T("(q^12-1)(q^6-q^3+1)(q^4+1)/(q-1)", lambda v: Fraction(
                (v["q"] ** 12 - 1) * (v["q"] ** 6 - v["q"] ** 3 + 1) * (v["q"] ** 4 + 1), v["q"] - 1)), ">",
            T("q^15", lambda v: v["q"] ** 15), ">",
            T("3q^12", lambda v: 3 * v["q"] ** 12), ">=",
            T("(q^6+1)^2", lambda v: (v["q"] ** 6 + 1) ** 2),
        ),
        _chain(
            "E7(q) minimal degree", "E7", "all q", qs(),
            T("(q^14-1)(q^9+1)(q^5+1)/(q-1)", lambda v: Fraction(
                (v["q"] ** 14 - 1) * (v["q"] ** 9 + 1) * (v["q"] ** 5 + 1), v["q"] - 1)), ">=",
            T("q^27", lambda v: v["q"] ** 27), ">",
            T("3q^18", lambda v: 3 * v["q"] ** 18), ">",
            T("(q^9+1)^2", lambda v: (v["q"] ** 9 + 1) ** 2),
        ),
        _chain(
            "E8(q) minimal degree", "E8", "all q", qs(),
            T("(q^20-1)(q^12+1)(q^10+1)(q^6+1)/(q-1)", lambda v: Fraction(
                (v["q"] ** 20 - 1) * (v["q"] ** 12 + 1) * (v["q"] ** 10 + 1) * (v["q"] ** 6 + 1), v["q"] - 1)), ">",
            T("q^47", lambda v: v["q"] ** 47), ">",
            T("3q^30", lambda v: 3 * v["q"] ** 30), ">",
            T("(q^15+1)^2", lambda v: (v["q"] ** 15 + 1) ** 2),
        ),
        # alternating groups
        _chain(
            "A_n, p >= 7", "alternating", "p <= n < 2p, p >= 7 prime", _alt_large_p,
            T("n_p(A_n)", lambda v: alt_expr(v["n"], v["p"])), ">=",
            T("(p-2)!", lambda v: math.factorial(v["p"] - 2)), ">",
            T("p^2", lambda v: v["p"] ** 2),
        ),
        _chain(
            "A_n, p = 5, n >= 6", "alternating", "6 <= n <= 9", _alt_p5,
            T("n_5(A_n)", lambda v: alt_expr(v["n"], 5)), "==",
            T("n(n-1)(n-2)(n-3)(n-4)/20", lambda v: Fraction(math.prod(range(v["n"] - 4, v["n"] + 1)), 20)), ">=",
            T("6!/20", lambda v: Fraction(math.factorial(6), 20)), ">",
            T("5^2", lambda v: 25),
        ),
    ]
    return chains


CHAINS: list[Chain] = _registry()


def evaluate_chain(chain: Chain, q_max: int, e_max: int) -> ChainResult:
    result = ChainResult(chain.name, chain.tag, chain.condition, chain.describe())
    for params in chain.points(q_max, e_max):
        result.points += 1
        values = [t.fn(params) for t in chain.terms]
        for i, rel in enumerate(chain.relations):
            lhs, rhs = values[i], values[i + 1]
            if not RELATIONS[rel](lhs, rhs):
                result.violations.append(Violation(
                    chain.name, chain.tag, dict(params), i,
                    chain.terms[i].label, rel, chain.terms[i + 1].label, lhs, rhs,
                ))
    return result


def proof_inequality_audit(q_max: int, e_max: int, chains: list[Chain] | None = None) -> AuditReport:
    """Evaluate every registered chain over prime powers q <= q_max and e <= e_max."""
    if q_max < 2 or e_max < 2:
        raise DomainError("q_max and e_max must be >= 2")
    chains = CHAINS if chains is None else chains
    return AuditReport(q_max, e_max, [evaluate_chain(c, q_max, e_max) for c in chains])
