import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from sylownum.classifier import (
    AdmissibleValue,
    DecompositionKind,
    PrimePowerWitness,
    SylowCount,
    TrivialWitness,
    Verdict,
    admissible_sylow_numbers,
    census,
    decompose,
    p_solvability_verdict,
)
from sylownum.groupengine import count_sylow_by_elements, frobenius_affine, psl
from sylownum.numtheory import DomainError, PrimePower, is_mersenne_prime, is_prime_power

PRIMES_60 = list(sympy.primerange(2, 61)) + [127, 257]


def oracle_admissible(p: int) -> set[int]:
    """Prime powers below p^2 that are 1 mod p, plus 1 and the simple-group values."""
    values = {1}
    values |= {n for n in range(p + 1, p * p, p) if len(sympy.factorint(n)) == 1}
    if p == 13:
        values.add(144)
    if p >= 5:
        values.add(p + 1)
    if p in (5, 17, 257, 65537):
        values.add(1 + (p - 3) * p // 2)
    if p in (7, 31, 127, 8191):
        values.add(1 + (p + 3) * p // 2)
    return values


@pytest.mark.parametrize("p", PRIMES_60)
def test_admissible_matches_oracle(p):
    got = admissible_sylow_numbers(p)
    assert [a.value for a in got] == sorted(oracle_admissible(p))
    for a in got:
        assert a.value % p == 1 % p and a.value < p * p
        assert a.r_coefficient == (a.value - 1) // p
        assert all(w.value(p) == a.value for w in a.witnesses)


def test_p13_has_144_from_psl33():
    values = {a.value: a for a in admissible_sylow_numbers(13)}
    assert values[144].kinds() == ["simple"]
    assert values[144].witness.params_text() == "PSL3(3)"


def test_p5_merges_the_coinciding_cases():
    values = {a.value: a for a in admissible_sylow_numbers(5)}
    assert sorted(values) == [1, 6, 11, 16]
    assert values[6].kinds() == ["simple", "simple"]
    assert {w.params_text() for w in values[6].witnesses} == {"PSL2(5)", "PSL2(4)"}


def test_small_primes():
    assert [a.value for a in admissible_sylow_numbers(2)] == [1, 3]
    assert [a.value for a in admissible_sylow_numbers(3)] == [1, 4, 7]


def test_mersenne_value_carries_both_witness_kinds():
    values = {a.value: a for a in admissible_sylow_numbers(31)}
    assert values[32].kinds() == ["prime_power", "simple"]
    assert values[32].witness.params_text() == "2^5 Frob(31,2,5)"


def test_admissible_requires_prime():
    with pytest.raises(DomainError):
        admissible_sylow_numbers(4)


def test_admissible_value_invariants():
    with pytest.raises(ValueError):
        AdmissibleValue(7, 5, (TrivialWitness(),), 1)
    with pytest.raises(ValueError):
        AdmissibleValue(26, 5, (), 5)
    with pytest.raises(ValueError):
        AdmissibleValue(11, 5, (PrimePowerWitness(PrimePower(2, 4), (5, 2, 4)),), 2)


def test_sylow_count():
    assert SylowCount.of(144, 13) == SylowCount(144, 13, 11)
    for n, p in [(23, 3), (0, 5), (6, 4)]:
        with pytest.raises(DomainError):
            SylowCount.of(n, p)
    with pytest.raises(ValueError):
        SylowCount(10, 3, 2)


# -- decompose


def test_decompose_examples():
    d = decompose(144, 13)
    assert d.kind is DecompositionKind.SIMPLE and d.simple[0].params_text() == "PSL3(3)"
    d = decompose(16, 5)
    assert d.kind is DecompositionKind.PRIME_POWER
    assert (d.prime_power.base, d.prime_power.exponent) == (2, 4) and d.frobenius == (5, 2, 4)
    assert decompose(22, 7).kind is DecompositionKind.NOT_SYLOW
    assert decompose(21, 5).kind is DecompositionKind.NOT_SYLOW
    assert decompose(1, 7).kind is DecompositionKind.TRIVIAL


@pytest.mark.parametrize("n, p", [(22, 3), (23, 5), (25, 5), (0, 5), (8, 9)])
def test_decompose_domain_errors(n, p):
    with pytest.raises(DomainError):
        decompose(n, p)


@pytest.mark.parametrize("p", PRIMES_60)
def test_decompose_round_trip(p):
    admissible = {a.value for a in admissible_sylow_numbers(p)}
    for n in range(1, p * p, p) if p > 2 else (1, 3):
        d = decompose(n, p)
        assert d.admissible == (n in admissible)
        if not d.admissible:
            assert not is_prime_power(n)


@given(st.sampled_from(list(sympy.primerange(2, 400))), st.data())
@settings(max_examples=300, deadline=None)
def test_decompose_property(p, data):
    r = data.draw(st.integers(min_value=0, max_value=p - 1))
    n = 1 + r * p
    d = decompose(n, p)
    if d.kind is DecompositionKind.PRIME_POWER:
        assert d.prime_power.value == n
    if d.kind is DecompositionKind.SIMPLE:
        assert not is_prime_power(n) and d.simple
    if d.kind is DecompositionKind.NOT_SYLOW:
        assert not is_prime_power(n) and not d.simple


# -- p-solvability


def test_verdict_examples():
    assert p_solvability_verdict(6, 5).verdict is Verdict.NON_P_SOLVABLE
    assert p_solvability_verdict(16, 5).verdict is Verdict.P_SOLVABLE
    assert p_solvability_verdict(36, 7).verdict is Verdict.OUTSIDE
    assert p_solvability_verdict(4, 3).verdict is Verdict.P_SOLVABLE


def test_verdict_rejects_non_sylow_numbers():
    with pytest.raises(DomainError):
        p_solvability_verdict(21, 5)


@pytest.mark.parametrize("p", PRIMES_60)
def test_verdict_consistency(p):
    for a in admissible_sylow_numbers(p):
        v = p_solvability_verdict(a.value, p)
        if p > 3 and is_mersenne_prime(p):
            assert v.verdict is Verdict.OUTSIDE
            continue
        d = decompose(a.value, p)
        non_solvable = d.kind is DecompositionKind.SIMPLE and not is_prime_power(a.value)
        assert (v.verdict is Verdict.NON_P_SOLVABLE) == non_solvable


# -- census


def test_census_examples():
    rows = census(13)
    assert [r.p for r in rows] == [2, 3, 5, 7, 11, 13]
    assert 144 in [a.value for a in rows[-1].values]
    rows = census(2)
    assert len(rows) == 1 and [a.value for a in rows[0].values] == [1, 3]
    row31 = census(31)[-1]
    assert row31.p == 31
    assert {a.value: a.kinds() for a in row31.values}[32] == ["prime_power", "simple"]
    with pytest.raises(DomainError):
        census(1)


def test_census_is_deterministic():
    assert census(100) == census(100)


# -- witnesses reproduced by the brute-force oracle


def test_frobenius_witnesses_reproduce():
    for p in sympy.primerange(2, 30):
        for a in admissible_sylow_numbers(p):
            for w in a.witnesses:
                if w.kind == "prime_power" and p * a.value <= 5000:
                    G = frobenius_affine(*w.frobenius)
                    assert count_sylow_by_elements(G, p).n_p == a.value


def test_simple_witnesses_reproduce():
    checked = 0
    for p in sympy.primerange(5, 30):
        for a in admissible_sylow_numbers(p):
            for w in a.witnesses:
                if w.kind != "simple":
                    continue
                fam = w.family
                if fam.d == 2 and fam.q <= 27 or fam.d == 3:
                    G = psl(fam.d, fam.q)
                    assert count_sylow_by_elements(G, p).n_p == a.value
                    checked += 1
    assert checked >= 10
