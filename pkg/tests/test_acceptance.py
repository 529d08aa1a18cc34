"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v`` (add ``-s`` to see the
lines for passing criteria as well).  All equalities are exact; the only
tolerances are the stated wall-clock budgets.
"""

import time

from radsup.fields import GF2, QQ
from radsup.monomial import (
    MonomialIdeal,
    fine_ring,
    is_borel_radical,
    kpoly_ideal,
    kpoly_quotient,
    polarized_dual,
)
from radsup.polyring import RingSpec, buchberger, degrevlex_order
from radsup.selftest import (
    suite_generator_count,
    suite_k_identity_random,
    suite_oracle_equivalence,
    suite_radical_trials,
    suite_regular_sequences,
    suite_witnesses,
)

SEED = 20260809


def report(number, name, passed, elapsed, detail=""):
    status = "PASS" if passed else "FAIL"
    suffix = f" {detail}" if detail else ""
    print(f"ACCEPTANCE {number} {name}: {status} ({elapsed:.2f}s){suffix}")


def test_criterion_1_cycle_ideal_groebner_bases():
    """Reduced degrevlex bases of the cycle ideals match their closed form:
    the generators plus (x_1 y_p) x_2..x_{t-1} y_t for t = 2..p."""
    start = time.perf_counter()
    ok = True
    for p in (3, 4, 5):
        ring = RingSpec(p, (2,) * p, QQ)
        x = lambda i: ring.variable(1, i)
        y = lambda i: ring.variable(2, i)
        gens = [x(i + 1) * y(i) - x(i) * y(i + 1) for i in range(1, p)] + [y(1) * y(p)]
        expected = list(gens)
        for t in range(2, p + 1):
            triples = [(1, 1, 1), (2, p, 1), (2, t, 1)] + [(1, u, 1) for u in range(2, t)]
            expected.append(ring.monomial_poly(ring.monomial(triples)))
        basis = buchberger(gens, degrevlex_order(ring))

        def sort_key(f):
            return sorted(f.terms)

        got = sorted(basis.gens, key=sort_key)
        want = sorted(expected, key=sort_key)
        ok = ok and len(got) == len(want) and all(a == b for a, b in zip(got, want))
    elapsed = time.perf_counter() - start
    report(1, "cycle-ideal-groebner-bases", ok and elapsed < 1.0, elapsed)
    assert ok
    assert elapsed < 1.0


def test_criterion_2_witness_verification_exhaustive():
    """Every failing support with s <= 4, n <= 4 gets a verified witness
    over QQ and F2."""
    start = time.perf_counter()
    result = suite_witnesses(4, 4, fields=(QQ, GF2))
    elapsed = time.perf_counter() - start
    report(2, "witness-verification", result.passed and elapsed < 120.0, elapsed,
           f"{result.cases} witnesses")
    assert result.passed, result.failures[:5]
    assert elapsed < 120.0


def test_criterion_3_oracle_equivalence_exhaustive():
    """Forest check agrees with brute-force cycle enumeration on the full
    corpus of multisets of at most 4 subsets of {1..4}."""
    start = time.perf_counter()
    result = suite_oracle_equivalence(4, 4)
    elapsed = time.perf_counter() - start
    report(3, "oracle-equivalence", result.passed and elapsed < 60.0, elapsed,
           f"{result.cases} supports")
    assert result.cases == 3875
    assert result.passed, result.failures[:5]
    assert elapsed < 60.0


def test_criterion_4_generator_count_equivalence():
    """Verdict iff the product ideal has prod |A_v| minimal generators."""
    start = time.perf_counter()
    result = suite_generator_count(4, 4)
    elapsed = time.perf_counter() - start
    report(4, "generator-count-equivalence", result.passed, elapsed,
           f"{result.cases} supports")
    assert result.passed, result.failures[:5]


def test_criterion_5_k_identity_random():
    """200 seeded random radical supports with s <= 5, n <= 6: exact integer
    K-identity, with the pivot algorithm cross-checked against
    inclusion-exclusion on every instance."""
    start = time.perf_counter()
    result = suite_k_identity_random(SEED, cases=200, max_s=5, max_n=6)
    elapsed = time.perf_counter() - start
    report(5, "k-identity-random", result.passed, elapsed, f"{result.cases} supports")
    assert result.passed, result.failures[:5]


def test_criterion_6_polarized_dual_exhaustive_n2():
    """Every monomial ideal in two variables with exponents <= 2, m = (2,2):
    the polarized dual is Borel radical and satisfies the dual K-identity."""
    start = time.perf_counter()
    ring = fine_ring(2)
    points = [(a, b) for a in range(3) for b in range(3)]
    cases = 0
    ok = True
    for mask in range(1 << 9):
        chosen = [points[i] for i in range(9) if mask & (1 << i)]
        if any(
            p != q and p[0] <= q[0] and p[1] <= q[1] for p in chosen for q in chosen
        ):
            continue  # not an antichain: same ideal as some smaller generating set
        cases += 1
        ideal = MonomialIdeal.of(ring, chosen)
        dual = polarized_dual(ideal, (2, 2))
        if not is_borel_radical(dual):
            ok = False
        if kpoly_quotient(dual).dualize() != kpoly_ideal(ideal):
            ok = False
    elapsed = time.perf_counter() - start
    report(6, "polarized-dual-exhaustive-n2", ok, elapsed, f"{cases} ideals")
    assert cases == 20
    assert ok


def test_criterion_7_probabilistic_radicality():
    """50 seeded random radical supports with dense generators over F_32003:
    certified within 3 retries on every trial; failures dump their seed."""
    start = time.perf_counter()
    result = suite_radical_trials(SEED, trials=50, retries=3)
    elapsed = time.perf_counter() - start
    report(7, "probabilistic-radicality", result.passed, elapsed, "50 trials")
    assert result.passed, result.failures


def test_criterion_8_regular_sequence_certificates():
    """500 seeded random supports: staircase monomials are squarefree,
    pairwise coprime, degree-correct, and realize the product formula."""
    start = time.perf_counter()
    result = suite_regular_sequences(SEED, cases=500)
    elapsed = time.perf_counter() - start
    report(8, "regular-sequence-certificates", result.passed, elapsed,
           f"{result.cases} supports")
    assert result.passed, result.failures[:5]
