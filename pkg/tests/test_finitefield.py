import itertools

import pytest

from sylownum.finitefield import (
    DomainError,
    add,
    field_create,
    field_of_order,
    inv,
    mul,
    multiplicative_generator,
    sub,
)
from sylownum.numtheory import prime_powers_up_to


@pytest.mark.parametrize(
    "r, f, modulus",
    [(2, 1, (0, 1)), (2, 2, (1, 1, 1)), (3, 2, (1, 0, 1))],
)
def test_field_create_modulus(r, f, modulus):
    # low degree first: x -> (0, 1), x^2+x+1 -> (1, 1, 1), x^2+1 -> (1, 0, 1)
    assert field_create(r, f).modulus == modulus


def test_field_create_errors():
    with pytest.raises(DomainError):
        field_create(4, 1)
    with pytest.raises(DomainError):
        field_create(2, 21)
    with pytest.raises(DomainError):
        field_of_order(6)


def test_gf4_x_squared():
    F = field_create(2, 2)
    x = F.element((0, 1))
    assert mul(x, x) == F.element((1, 1))


def test_gf3_two_plus_two():
    F = field_create(3, 1)
    assert add(F.element(2), F.element(2)) == F.element(1)


@pytest.mark.parametrize("q, gen", [(2, (1,)), (5, (2,)), (4, (0, 1))])
def test_multiplicative_generator_examples(q, gen):
    F = field_of_order(q)
    assert multiplicative_generator(F) == F.element(gen)


def test_inverse_of_zero():
    F = field_of_order(9)
    with pytest.raises(DomainError):
        inv(F.zero())


def test_mixing_fields_is_an_error():
    with pytest.raises(DomainError):
        add(field_of_order(4).one(), field_of_order(8).one())


@pytest.mark.parametrize("q", prime_powers_up_to(16))
def test_field_axioms_exhaustive(q):
    F = field_of_order(q)
    els = F.elements()
    assert len(set(els)) == q
    zero, one = F.zero(), F.one()
    for a in els:
        assert add(a, zero) == a and mul(a, one) == a
        assert add(a, sub(zero, a)) == zero
        if a != zero:
            assert mul(a, inv(a)) == one
    for a, b in itertools.product(els, repeat=2):
        assert add(a, b) == add(b, a)
        assert mul(a, b) == mul(b, a)
        assert sub(add(a, b), b) == a
    for a, b, c in itertools.product(els, repeat=3):
        assert add(add(a, b), c) == add(a, add(b, c))
        assert mul(mul(a, b), c) == mul(a, mul(b, c))
        assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))


@pytest.mark.parametrize("q", prime_powers_up_to(256))
def test_generator_has_full_order(q):
    F = field_of_order(q)
    g = multiplicative_generator(F)
    powers = set()
    x = F.one()
    for _ in range(q - 1):
        powers.add(x)
        x = mul(x, g)
    assert x == F.one() and len(powers) == q - 1


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25, 27])
def test_fast_tables_agree_with_polynomial_arithmetic(q):
    F = field_of_order(q)
    addt, mult = F.fast.tables()
    for a in range(q):
        for b in range(q):
            assert addt[a][b] == add(F.element(a), F.element(b)).index
            assert mult[a][b] == mul(F.element(a), F.element(b)).index
