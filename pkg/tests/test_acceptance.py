"""One test per acceptance criterion; each prints a PASS/FAIL line before asserting."""

import time

import sympy

from sylownum.catalog import load_catalog, verify_catalog
from sylownum.classifier import DecompositionKind, admissible_sylow_numbers, decompose
from sylownum.families import (
    OmegaVariant,
    SpCase,
    TheoremCase,
    gl_np,
    gu_np,
    omega_plus_np,
    proof_inequality_audit,
    sp_np,
    theorem_family_np,
)
from sylownum.groupengine import (
    count_sylow_by_conjugacy,
    count_sylow_by_elements,
    find_sylow_subgroup,
    frobenius_affine,
    normalizer_order,
)
from sylownum.groupengine.sylow import p_part
from sylownum.numtheory import (
    DomainError,
    factorize,
    is_fermat_prime,
    is_mersenne_prime,
    is_prime_power,
    lemma_number_solutions,
    multiplicative_order,
    zsigmondy,
)


def test_criterion_1_brute_force_values(report):
    expected = {
        ("A5", 5): 6, ("A5", 3): 10,
        ("PSL2(7)", 7): 8, ("PSL2(7)", 3): 28,
        ("PSL3(3)", 13): 144,
        ("PSL2(4)", 5): 6,
        ("Sp4(2)", 5): 36,
        ("PSL3(4)", 5): 2016, ("PSL3(4)", 3): 280,
        ("PSL2(16)", 17): 120,
        ("PSL2(8)", 7): 36,
    }
    entries = {e.name: e for e in load_catalog()}
    start = time.perf_counter()
    got = {}
    for (name, p) in expected:
        G = entries[name].build()
        got[name, p] = count_sylow_by_conjugacy(G, p).n_p
        if p_part(G.order, p) == p:
            assert count_sylow_by_elements(G, p).n_p == got[name, p]
    results = verify_catalog(list(entries.values()), deep=True)
    elapsed = time.perf_counter() - start
    mismatches = {k: (v, got[k]) for k, v in expected.items() if got[k] != v}
    failed = [r.name for r in results if r.status != "PASS"]
    ok = not mismatches and not failed and elapsed < 120
    report(1, ok, f"{len(expected)} stated values exact, deep catalog {len(results)} entries, "
                  f"mismatches={mismatches} failed={failed} ({elapsed:.1f}s < 120s)")
    assert ok


def test_criterion_2_oracle_cross_consistency(report):
    start = time.perf_counter()
    pairs, bad = 0, []
    for entry in load_catalog():
        G = entry.build()
        for p in factorize(G.order).primes:
            if p_part(G.order, p) != p:
                continue
            pairs += 1
            by_elements = count_sylow_by_elements(G, p).n_p
            by_orbit = count_sylow_by_conjugacy(G, p).n_p
            _, P = find_sylow_subgroup(G, p)
            if by_elements != by_orbit or by_orbit * normalizer_order(G, P) != G.order:
                bad.append((entry.name, p))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    report(2, ok, f"{pairs} (group, p) pairs with p || |G|, disagreements={bad} ({elapsed:.1f}s < 60s)")
    assert ok


def test_criterion_3_formula_values(report):
    cases = [
        (lambda: gl_np(3, 3, 13), 144),
        (lambda: gl_np(3, 2, 7), 8),
        (lambda: gl_np(3, 5, 31), 4000),
        (lambda: gl_np(3, 4, 7), 960),
        (lambda: gu_np(3, 3, 7), 288),
        (lambda: gu_np(3, 2, 3), 24),
        (lambda: sp_np(2, 2, 5, SpCase.PRIMITIVE_2E), 36),
        (lambda: omega_plus_np(OmegaVariant.SUBGROUP_E, 2, 2, 5), 336),
        (lambda: omega_plus_np(OmegaVariant.FULL_N, 3, 2, 5), 336),
    ]
    got = [fn().value for fn, _ in cases]
    want = [v for _, v in cases]
    ok = got == want
    report(3, ok, f"formula values {got} vs stated {want} (exact)")
    assert ok


def _theorem_values(p):
    out = set()
    if p == 13:
        out.add(theorem_family_np(TheoremCase.PSL3_3).value)
    if p >= 5:
        out.add(theorem_family_np(TheoremCase.PSL2_P, p).value)
    if p > 3 and is_fermat_prime(p):
        out.add(theorem_family_np(TheoremCase.PSL2_P_MINUS_1, p).value)
    if p > 3 and is_mersenne_prime(p):
        out.add(theorem_family_np(TheoremCase.PSL2_P_PLUS_1, p).value)
    return out


def test_criterion_4_classifier_completeness(report):
    start = time.perf_counter()
    problems = []
    primes = list(sympy.primerange(2, 51))
    for p in primes:
        admissible = admissible_sylow_numbers(p)
        values = {a.value for a in admissible}
        non_pp = {v for v in values if v > 1 and not is_prime_power(v)}
        theorem = _theorem_values(p)
        if non_pp != {v for v in theorem if not is_prime_power(v)}:
            problems.append(("values", p, sorted(non_pp)))
        for v in non_pp:
            if v not in theorem:
                problems.append(("unexplained", p, v))
        expected_pp = {n for n in range(p + 1, p * p, p) if len(sympy.factorint(n)) == 1}
        if {v for v in values if v > 1 and is_prime_power(v)} != expected_pp:
            problems.append(("prime powers", p))
        for n in range(1, p * p, p):
            if decompose(n, p).admissible != (n in values):
                problems.append(("round trip", p, n))
    elapsed = time.perf_counter() - start
    ok = not problems
    report(4, ok, f"primes <= 50 ({len(primes)}), problems={problems[:5]} ({elapsed:.1f}s)")
    assert ok


def test_criterion_5_frobenius_realization(report):
    start = time.perf_counter()
    triples, bad = [], []
    for p in sympy.primerange(2, 14):
        for r in sympy.primerange(2, 257):
            t = 1
            while r**t <= 256:
                if (r**t - 1) % p == 0:
                    triples.append((p, r, t))
                t += 1
    for p, r, t in triples:
        if count_sylow_by_elements(frobenius_affine(p, r, t), p).n_p != r**t:
            bad.append((p, r, t))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    report(5, ok, f"{len(triples)} triples (p <= 13, r^t <= 256), failures={bad} ({elapsed:.1f}s < 60s)")
    assert ok


def test_criterion_6_zsigmondy_suite(report):
    exceptions, bad = [], []
    for a in range(2, 13):
        for n in range(2, 13):
            z = zsigmondy(a, n)
            oracle = sorted(ell for ell in sympy.factorint(a**n - 1) if sympy.n_order(a, ell) == n)
            if z.is_exception:
                exceptions.append((a, n))
                if oracle:
                    bad.append((a, n))
            elif list(z.primes) != oracle or any(multiplicative_order(a, ell) != n for ell in z.primes):
                bad.append((a, n))
    want = [(2, 6), (3, 2), (7, 2)]
    ok = not bad and sorted(exceptions) == want
    report(6, ok, f"121 pairs, exceptions={sorted(exceptions)} (expected {want}), mismatches={bad}")
    assert ok


def test_criterion_7_lemma_number(report):
    got = lemma_number_solutions(10**6)
    ok = got == [(1, 3, 1, 1)]
    report(7, ok, f"lemma_number_solutions(10^6) = {got}")
    assert ok


def test_criterion_8_inequality_audit(report):
    start = time.perf_counter()
    audit = proof_inequality_audit(32, 36)
    elapsed = time.perf_counter() - start
    chains = sorted({v.chain for v in audit.violations})
    ok = audit.ok and elapsed < 60
    report(8, ok, f"{len(audit.chains)} chains, {audit.points} points, {len(audit.violations)} violations "
                  f"in {chains} ({elapsed:.2f}s < 60s)")
    for v in audit.violations[:3]:
        print("  ", v)
    assert ok


def test_criterion_9_known_negatives(report):
    d = decompose(21, 5)
    try:
        decompose(22, 3)
        domain = False
    except DomainError:
        domain = True
    ok = d.kind is DecompositionKind.NOT_SYLOW and domain
    report(9, ok, f"decompose(21,5) = {d.kind.value}; decompose(22,3) raises domain error: {domain}")
    assert ok
