"""Concrete group constructions: A_n, PSL_n(q), Sp_4(2), affine Frobenius groups."""

from __future__ import annotations

import math

from ..finitefield import FieldSpec, field_create, field_of_order
from ..numtheory import DomainError, is_prime
from .core import CapExceeded, FiniteGroup, closure, default_cap, perm_from_cycles, perm_inverse, perm_mul


def alternating_group(n: int) -> FiniteGroup:
    """A_n for 3 <= n <= 8, generated by the 3-cycles (0 1 k)."""
    if not 3 <= n <= 8:
        raise DomainError(f"alternating_group supports 3 <= n <= 8, got {n}")
    gens = [perm_from_cycles(n, (0, 1, k)) for k in range(2, n)]
    return closure(gens, perm_mul, identity=tuple(range(n)), name=f"A{n}", inverse=perm_inverse)


# --------------------------------------------------------------------------
# matrices over GF(q), stored as flattened tuples of field indices


def matrix_ops(spec: FieldSpec, n: int):
    """Return (matmul, identity) for n x n matrices over ``spec``."""
    add, mul = spec.fast.tables()
    rng = range(n)
    rows = [range(i * n, (i + 1) * n) for i in rng]

    def matmul(a, b):
        out = []
        for i in rng:
            row = [a[k] for k in rows[i]]
            for j in rng:
                s = 0
                for k in rng:
                    x = row[k]
                    if x:
                        y = b[k * n + j]
                        if y:
                            s = add[s][mul[x][y]]
                out.append(s)
        return tuple(out)

    ident = tuple(1 if i == j else 0 for i in rng for j in rng)
    return matmul, ident


def transvection(n: int, i: int, j: int, lam: int) -> tuple:
    """I + lam * E_ij as a flattened index tuple."""
    return tuple(
        1 if r == c else (lam if (r, c) == (i, j) else 0) for r in range(n) for c in range(n)
    )


def determinant(spec: FieldSpec, n: int, m: tuple) -> int:
    ff = spec.fast
    a = [list(m[i * n : (i + 1) * n]) for i in range(n)]
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = ff.neg[det]
        det = ff.mul(det, a[col][col])
        pinv = ff.inv(a[col][col])
        for r in range(col + 1, n):
            if a[r][col]:
                factor = ff.mul(a[r][col], pinv)
                a[r] = [ff.add(x, ff.neg[ff.mul(factor, y)]) for x, y in zip(a[r], a[col])]
    return det


def psl_order(n: int, q: int) -> int:
    num = q ** (n * (n - 1) // 2) * math.prod(q**i - 1 for i in range(2, n + 1))
    return num // math.gcd(n, q - 1)


def center_scalars(spec: FieldSpec, n: int) -> list[int]:
    ff = spec.fast
    return [lam for lam in range(1, spec.q) if ff.power(lam, n) == 1]


def projective_canonicalizer(spec: FieldSpec, n: int):
    """Map a matrix in SL_n(q) to the fixed representative of its coset mod the center.

    Among the scalar multiples lam*M with lam^n = 1, the representative is the
    one whose flattened entry tuple is smallest.
    """
    scalars = center_scalars(spec, n)
    if len(scalars) == 1:
        return lambda m: m
    _, mul = spec.fast.tables()
    rows = [mul[lam] for lam in scalars]
    return lambda m: min(tuple(row[x] for x in m) for row in rows)


def sl_generators(spec: FieldSpec, n: int) -> list[tuple]:
    """Adjacent transvections I + x^k E_{i,i+1}, I + x^k E_{i+1,i} over an additive basis."""
    basis = [spec.element((0,) * k + (1,)).index for k in range(spec.f)]
    gens = []
    for i in range(n - 1):
        for lam in basis:
            gens.append(transvection(n, i, i + 1, lam))
            gens.append(transvection(n, i + 1, i, lam))
    return gens


def psl(n: int, q: int, cap: int | None = None) -> FiniteGroup:
    """PSL_n(q) for n in {2, 3}, as projective classes of SL_n(q) matrices."""
    if n not in (2, 3):
        raise DomainError("psl supports n = 2 or 3")
    spec = field_of_order(q)
    expected = psl_order(n, q)
    cap = default_cap() if cap is None else cap
    if expected > cap:
        raise CapExceeded(f"|PSL{n}({q})| = {expected} exceeds cap {cap}")
    matmul, ident = matrix_ops(spec, n)
    canon = projective_canonicalizer(spec, n)
    gens = [canon(g) for g in sl_generators(spec, n)]
    G = closure(gens, lambda a, b: canon(matmul(a, b)), cap=cap, identity=canon(ident), name=f"PSL{n}({q})")
    if G.order != expected:
        raise AssertionError(f"PSL{n}({q}) closure has order {G.order}, expected {expected}")
    return G


def sp4_2() -> FiniteGroup:
    """Sp_4(2): the elements of GL_4(2) preserving the standard alternating form."""
    spec = field_create(2, 1)
    n = 4
    matmul, ident = matrix_ops(spec, n)
    gl = closure(sl_generators(spec, n), matmul, identity=ident, name="GL4(2)")
    # J = [[0, I], [-I, 0]]; over GF(2) -I = I
    J = tuple(1 if abs(r - c) == 2 else 0 for r in range(n) for c in range(n))

    def transpose(m):
        return tuple(m[c * n + r] for r in range(n) for c in range(n))

    elements = [m for m in gl.elements if matmul(matmul(transpose(m), J), m) == J]
    G = FiniteGroup(elements, matmul, ident, name="Sp4(2)")
    return G


def frobenius_affine(p: int, r: int, t: int, cap: int | None = None) -> FiniteGroup:
    """Affine maps x -> a*x + b on GF(r^t), with a in the order-p subgroup of GF(r^t)^*.

    Elements are pairs (a, b) of field indices; (a, b)(c, d) = (ac, ad + b),
    i.e. apply (c, d) first.
    """
    if not is_prime(p) or not is_prime(r):
        raise DomainError("p and r must be prime")
    if t < 1:
        raise DomainError("t must be >= 1")
    q = r**t
    if (q - 1) % p:
        raise DomainError(f"{p} does not divide {r}^{t} - 1")
    cap = default_cap() if cap is None else cap
    if p * q > cap:
        raise CapExceeded(f"Frobenius group of order {p * q} exceeds cap {cap}")
    spec = field_create(r, t)
    ff = spec.fast
    zeta = ff.exp[(q - 1) // p]
    fadd, fmul = ff.add, ff.mul

    def mul(x, y):
        a, b = x
        c, d = y
        return (fmul(a, c), fadd(fmul(a, d), b))

    def inverse(x):
        a, b = x
        ai = ff.inv(a)
        return (ai, ff.neg[fmul(ai, b)])

    basis = [spec.element((0,) * k + (1,)).index for k in range(t)]
    gens = [(zeta, 0)] + [(1, v) for v in basis]
    G = closure(gens, mul, cap=cap, identity=(1, 0), name=f"Frob({p},{r}^{t})", inverse=inverse)
    if G.order != p * q:
        raise AssertionError(f"Frobenius group has order {G.order}, expected {p * q}")
    return G
