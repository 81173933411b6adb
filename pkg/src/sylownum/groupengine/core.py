"""Fully enumerated finite groups built by breadth-first closure.

Group elements are plain hashable tuples (permutation images, flattened
matrices over an integer-indexed field, affine pairs). The tuple itself is
the canonical form, so deduplication is ordinary set/dict membership.
"""

from __future__ import annotations

import os
import random
from collections import deque
from typing import Callable, Hashable, Iterable, Sequence

DEFAULT_CAP = 10**6
CAP_ENV = "SYLOW_CENSUS_CAP"

Element = Hashable
Mul = Callable[[Element, Element], Element]


class CapExceeded(RuntimeError):
    """Closure grew past the configured element cap."""


class NotASubgroup(ValueError):
    pass


def default_cap() -> int:
    value = os.environ.get(CAP_ENV)
    return int(value) if value else DEFAULT_CAP


class FiniteGroup:
    """An explicitly enumerated finite group.

    ``elements`` keeps the closure's insertion order, which is deterministic
    for a fixed generator list.
    """

    def __init__(
        self,
        elements: Sequence[Element],
        mul: Mul,
        identity: Element,
        generators: Sequence[Element] | None = None,
        name: str = "G",
        inverse: Callable[[Element], Element] | None = None,
        verify: bool = True,
    ):
        self.elements = list(elements)
        self.index = {g: i for i, g in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate elements")
        self.mul = mul
        self.identity = identity
        self.name = name
        self._inverse = inverse
        self._generators = list(generators) if generators is not None else None
        self._inv_cache: dict = {}
        if verify:
            self._spot_check()

    def __repr__(self):
        return f"<FiniteGroup {self.name} order={self.order}>"

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self.index

    def __iter__(self):
        return iter(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def generators(self) -> list[Element]:
        if self._generators is None:
            self._generators = generating_set(self.elements, self.mul, self.identity)
        return self._generators

    def power(self, g: Element, k: int) -> Element:
        result, base = self.identity, g
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def element_order(self, g: Element) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.mul(x, g)
            k += 1
        return k

    def inverse(self, g: Element) -> Element:
        if self._inverse is not None:
            return self._inverse(g)
        cache = self._inv_cache
        inv = cache.get(g)
        if inv is None:
            inv = self.power(g, self.element_order(g) - 1)
            cache[g] = inv
            cache[inv] = g
        return inv

    def conjugate(self, x: Element, g: Element, x_inv: Element | None = None) -> Element:
        """x g x^-1."""
        if x_inv is None:
            x_inv = self.inverse(x)
        return self.mul(self.mul(x, g), x_inv)

    def _spot_check(self, samples: int = 64):
        rng = random.Random(0)
        els, mul, e = self.elements, self.mul, self.identity
        if e not in self.index:
            raise ValueError("identity is not an element")
        for _ in range(min(samples, len(els) ** 2)):
            a, b, c = rng.choice(els), rng.choice(els), rng.choice(els)
            if mul(e, a) != a or mul(a, e) != a:
                raise ValueError("identity law fails")
            ab = mul(a, b)
            if ab not in self.index:
                raise ValueError("not closed under multiplication")
            if mul(ab, c) != mul(a, mul(b, c)):
                raise ValueError("associativity fails")
            if mul(a, self.inverse(a)) != e:
                raise ValueError("inverse fails")


def closure(
    generators: Iterable[Element],
    mul: Mul,
    cap: int | None = None,
    identity: Element | None = None,
    name: str = "G",
    inverse: Callable[[Element], Element] | None = None,
) -> FiniteGroup:
    """Breadth-first closure of ``generators`` under right multiplication."""
    gens = list(dict.fromkeys(generators))
    if not gens and identity is None:
        raise ValueError("closure needs at least one generator")
    cap = default_cap() if cap is None else cap
    elements = _bfs(gens, mul, cap, identity)
    if identity is None:
        g0 = gens[0]
        identity = next(x for x in elements if mul(x, g0) == g0)
    return FiniteGroup(elements, mul, identity, gens, name=name, inverse=inverse)


def _bfs(gens, mul, cap, identity=None) -> list:
    start = [identity] if identity is not None else []
    start += [g for g in gens if g != identity]
    seen = set(start)
    order = list(start)
    queue = deque(start)
    while queue:
        x = queue.popleft()
        for s in gens:
            y = mul(x, s)
            if y not in seen:
                seen.add(y)
                order.append(y)
                if len(order) > cap:
                    raise CapExceeded(f"closure exceeded cap of {cap} elements")
                queue.append(y)
    return order


def generating_set(elements: Iterable[Element], mul: Mul, identity: Element) -> list:
    """Greedy generating set for a subgroup given as an element collection.

    Raises NotASubgroup when the collection is not closed.
    """
    members = list(elements)
    target = set(members)
    gens: list = []
    current = {identity}
    for s in members:
        if s in current:
            continue
        gens.append(s)
        try:
            current = set(_bfs(gens, mul, len(target), identity))
        except CapExceeded:
            raise NotASubgroup("element set is not closed under multiplication") from None
        if not current <= target:
            raise NotASubgroup("element set is not closed under multiplication")
    if current != target:
        raise NotASubgroup("element set is not a subgroup")
    return gens


# --------------------------------------------------------------------------
# permutations: tuples of images, composed right-to-left ((a*b)(i) = a[b[i]])


def perm_mul(a: tuple, b: tuple) -> tuple:
    return tuple(a[i] for i in b)


def perm_inverse(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def perm_from_cycles(n: int, *cycles: Sequence[int]) -> tuple:
    images = list(range(n))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            images[x] = cyc[(i + 1) % len(cyc)]
    return tuple(images)


def check_perm(p: Sequence[int]) -> None:
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"{p} is not a permutation")
