"""Two independent ways of counting Sylow p-subgroups of an enumerated group."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass

from ..numtheory import DomainError, is_prime
from .core import FiniteGroup, closure, generating_set


class SylowMethod(enum.Enum):
    ELEMENT_COUNT = "ElementCount"
    CONJUGACY_ORBIT = "ConjugacyOrbit"


class SylowPreconditionError(ValueError):
    """The oracle does not apply to this (group, prime) pair."""


@dataclass(frozen=True)
class SylowReport:
    p: int
    group_order_p_part: int
    n_p: int
    method: SylowMethod
    r: int

    def __post_init__(self):
        if self.n_p != 1 + self.r * self.p:
            raise ValueError("n_p must equal 1 + r*p")
        if self.n_p % self.p != 1 % self.p:
            raise AssertionError(f"Sylow congruence fails: n_{self.p} = {self.n_p}")


def p_part(n: int, p: int) -> int:
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part


def _check_prime_divides(G: FiniteGroup, p: int):
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if G.order % p:
        raise SylowPreconditionError(f"{p} does not divide |{G.name}| = {G.order}")


def _report(G: FiniteGroup, p: int, n: int, method: SylowMethod) -> SylowReport:
    part = p_part(G.order, p)
    if (G.order // part) % n:
        raise AssertionError(f"n_{p} = {n} does not divide |G|/{part}")
    return SylowReport(p, part, n, method, (n - 1) // p)


def element_order(G: FiniteGroup, g) -> int:
    return G.element_order(g)


def count_sylow_by_elements(G: FiniteGroup, p: int) -> SylowReport:
    """n_p = #(elements of order p) / (p - 1), valid when p exactly divides |G|."""
    _check_prime_divides(G, p)
    if G.order % (p * p) == 0:
        raise SylowPreconditionError(f"{p}^2 divides |{G.name}|; element count does not apply")
    e = G.identity
    count = sum(1 for g in G.elements if g != e and G.power(g, p) == e)
    n, rem = divmod(count, p - 1)
    assert rem == 0
    return _report(G, p, n, SylowMethod.ELEMENT_COUNT)


def _normalizes(G: FiniteGroup, x, gens, members) -> bool:
    # x g x^-1 in P  <=>  x g in P x ; avoids computing x^-1
    mul = G.mul
    right = {mul(h, x) for h in members}
    return all(mul(x, g) in right for g in gens)


def find_sylow_subgroup(G: FiniteGroup, p: int) -> tuple[list, frozenset]:
    """A Sylow p-subgroup, grown from the first element of order p.

    While P is not Sylow, N_G(P)/P has an element of order p; any preimage y
    (y not in P, y^p in P) normalizes P, so <P, y> has order p|P|.
    """
    _check_prime_divides(G, p)
    target = p_part(G.order, p)
    e = G.identity
    g = next(x for x in G.elements if x != e and G.power(x, p) == e)
    gens = [g]
    members = frozenset(closure(gens, G.mul, identity=e).elements)
    while len(members) < target:
        y = next(
            x
            for x in G.elements
            if x not in members and G.power(x, p) in members and _normalizes(G, x, gens, members)
        )
        gens.append(y)
        members = frozenset(closure(gens, G.mul, identity=e).elements)
    return gens, members


def conjugacy_orbit(G: FiniteGroup, members: frozenset) -> list[frozenset]:
    """Orbit of a subgroup under conjugation, explored through G's generators."""
    mul = G.mul
    gen_pairs = [(s, G.inverse(s)) for s in G.generators]
    seen = {members}
    orbit = [members]
    queue = deque(orbit)
    while queue:
        H = queue.popleft()
        for s, s_inv in gen_pairs:
            K = frozenset(mul(mul(s, h), s_inv) for h in H)
            if K not in seen:
                seen.add(K)
                orbit.append(K)
                queue.append(K)
    return orbit


def count_sylow_by_conjugacy(G: FiniteGroup, p: int) -> SylowReport:
    """n_p as the size of the conjugacy class of one Sylow p-subgroup."""
    _, members = find_sylow_subgroup(G, p)
    n = len(conjugacy_orbit(G, members))
    return _report(G, p, n, SylowMethod.CONJUGACY_ORBIT)


def normalizer_order(G: FiniteGroup, subgroup) -> int:
    """|{g in G : g S g^-1 = S}| for a subgroup S given by its elements."""
    members = frozenset(subgroup)
    if not members <= set(G.index):
        raise DomainError("subgroup has elements outside G")
    try:
        gens = generating_set(sorted(members, key=G.index.__getitem__), G.mul, G.identity)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    mul = G.mul
    count = 0
    for x in G.elements:
        x_inv = G.inverse(x)
        if all(mul(mul(x, s), x_inv) in members for s in gens):
            count += 1
    return count
