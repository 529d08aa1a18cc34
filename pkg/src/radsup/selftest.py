"""Exhaustive corpora, random samplers, and invariant suites.

Every structural claim the package relies on is re-checked here against an
independent path: the union-find verdict against brute-force cycle
enumeration, pivot-splitting K-polynomials against inclusion-exclusion and
against raw monomial counts, duality against transversal enumeration, and
witnesses by replaying their normal forms.  The CLI self-test command and
the acceptance tests both drive these suites.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement

from .certify import (
    cs_certificate,
    dual_k_poly_of_support,
    k_poly_of_support,
    padded_witness,
    random_support_trial,
    regular_sequence,
    support_product_ideal,
)
from .fields import GF2, GF32003, QQ
from .monomial import (
    IntPoly,
    MonomialIdeal,
    alexander_dual,
    fine_ring,
    hilbert_count_oracle,
    is_borel_radical,
    kpoly_ideal,
    kpoly_quotient,
    kpoly_taylor,
    minimal_monomials,
    polarize,
    polarized_dual,
    series_coefficients,
)
from .polyring import RingSpec, mono_is_squarefree, multidegree_of
from .support import (
    Support,
    _UnionFind,
    build_graph,
    enumerate_cycles,
    is_radical_support,
    reduce_to_distinct_labels,
)

# ---------------------------------------------------------------------------
# corpora and samplers

def all_multidegrees(n: int) -> list[frozenset]:
    """All non-empty subsets of {1..n}, in a fixed deterministic order."""
    out = []
    for size in range(1, n + 1):
        for combo in combinations(range(1, n + 1), size):
            out.append(frozenset(combo))
    return out


def iter_supports(max_s: int, n: int):
    """Every multiset of at most max_s non-empty subsets of {1..n}."""
    subsets = all_multidegrees(n)
    for s in range(1, max_s + 1):
        for combo in combinations_with_replacement(subsets, s):
            yield Support(n, combo)


def random_support(rng: random.Random, max_s: int = 6, max_n: int = 6) -> Support:
    n = rng.randint(1, max_n)
    s = rng.randint(1, max_s)
    sets = []
    for _ in range(s):
        size = rng.randint(1, n)
        sets.append(frozenset(rng.sample(range(1, n + 1), size)))
    return Support(n, tuple(sets))


def random_radical_support(
    rng: random.Random,
    max_s: int = 5,
    max_n: int = 6,
    max_generator_product: int = 14,
) -> Support:
    """Sample a radical support by growing a forest in the label/generator
    incidence graph.  Rejects samples whose linear-ideal product would have
    more than ``max_generator_product`` generators so that the
    inclusion-exclusion oracle stays cheap."""
    while True:
        n = rng.randint(1, max_n)
        s = rng.randint(1, max_s)
        uf = _UnionFind(n + s + 1)
        sets = []
        for v in range(1, s + 1):
            vnode = n + v
            size = rng.randint(1, n)
            first = rng.randint(1, n)
            uf.union(first, vnode)
            chosen = {first}
            while len(chosen) < size:
                candidates = [
                    j
                    for j in range(1, n + 1)
                    if j not in chosen and uf.find(j) != uf.find(vnode)
                ]
                if not candidates:
                    break
                j = rng.choice(candidates)
                uf.union(j, vnode)
                chosen.add(j)
            sets.append(frozenset(chosen))
        support = Support(n, tuple(sets))
        generators = 1
        for a in support.sets:
            generators *= len(a)
        if generators > max_generator_product:
            continue
        if is_radical_support(support).is_radical_support:
            return support


def _indicator(component: frozenset, n: int) -> tuple[int, ...]:
    return tuple(1 if j in component else 0 for j in range(1, n + 1))


# ---------------------------------------------------------------------------
# suite plumbing

@dataclass
class SuiteResult:
    name: str
    passed: bool
    cases: int
    seconds: float
    failures: list[str] = field(default_factory=list)
    indeterminate: bool = False

    def summary(self) -> str:
        if self.passed:
            status = "PASS"
        elif self.indeterminate:
            status = "INDETERMINATE"
        else:
            status = "FAIL"
        line = f"{self.name}: {status} ({self.cases} cases, {self.seconds:.2f}s)"
        if self.failures:
            shown = "; ".join(self.failures[:3])
            line += f" [{len(self.failures)} failures, e.g. {shown}]"
        return line


def _finish(name, start, cases, failures, indeterminate=False) -> SuiteResult:
    return SuiteResult(
        name=name,
        passed=not failures,
        cases=cases,
        seconds=time.perf_counter() - start,
        failures=failures,
        indeterminate=bool(failures) and indeterminate,
    )


# ---------------------------------------------------------------------------
# graph suites

def suite_oracle_equivalence(max_s: int = 4, max_n: int = 4) -> SuiteResult:
    """Union-find verdict == brute-force cycle enumeration, exhaustively."""
    start = time.perf_counter()
    failures = []
    cases = 0
    for support in iter_supports(max_s, max_n):
        cases += 1
        verdict = is_radical_support(support)
        graph = build_graph(support)
        cycles = enumerate_cycles(graph, max(2, support.s))
        brute = not any(c.has_distinct_labels() for c in cycles)
        if verdict.is_radical_support != brute:
            failures.append(f"disagreement on {support}")
            continue
        if not verdict.is_radical_support:
            try:
                verdict.cycle.validate_in(graph)
            except ValueError as exc:
                failures.append(f"bad evidence cycle on {support}: {exc}")
    return _finish("oracle-equivalence", start, cases, failures)


def suite_distinct_vs_nonconstant(max_s: int = 4, max_n: int = 4) -> SuiteResult:
    """A distinct-label cycle exists iff a non-constant-label cycle does, and
    the shortcut reduction turns the latter into the former."""
    start = time.perf_counter()
    failures = []
    cases = 0
    for support in iter_supports(max_s, max_n):
        cases += 1
        graph = build_graph(support)
        cycles = enumerate_cycles(graph, max(2, support.s))
        has_distinct = any(c.has_distinct_labels() for c in cycles)
        has_nonconstant = any(not c.has_constant_labels() for c in cycles)
        if has_distinct != has_nonconstant:
            failures.append(f"predicates differ on {support}")
            continue
        for cycle in cycles:
            if cycle.has_constant_labels():
                continue
            reduced = reduce_to_distinct_labels(graph, cycle)
            if not reduced.has_distinct_labels() or reduced.k > cycle.k:
                failures.append(f"bad reduction of {cycle} on {support}")
                break
            try:
                reduced.validate_in(graph)
            except ValueError as exc:
                failures.append(f"reduced cycle invalid on {support}: {exc}")
                break
    return _finish("distinct-vs-nonconstant", start, cases, failures)


def suite_subcollection_monotonicity(max_s: int = 4, max_n: int = 4) -> SuiteResult:
    """Radical supports stay radical after deleting any sets."""
    start = time.perf_counter()
    failures = []
    cases = 0
    for support in iter_supports(max_s, max_n):
        if not is_radical_support(support).is_radical_support:
            continue
        for size in range(1, support.s):
            for idxs in combinations(range(support.s), size):
                cases += 1
                sub = Support(support.n, tuple(support.sets[i] for i in idxs))
                if not is_radical_support(sub).is_radical_support:
                    failures.append(f"{support} radical but {sub} not")
    return _finish("subcollection-monotonicity", start, cases, failures)


# ---------------------------------------------------------------------------
# certificate suites

def suite_generator_count(max_s: int = 4, max_n: int = 4) -> SuiteResult:
    """Verdict == (product of linear ideals has prod |A_v| minimal generators)."""
    start = time.perf_counter()
    failures = []
    cases = 0
    for support in iter_supports(max_s, max_n):
        cases += 1
        expected = 1
        for a in support.sets:
            expected *= len(a)
        count = len(support_product_ideal(support).gens)
        radical = is_radical_support(support).is_radical_support
        if radical != (count == expected):
            failures.append(f"{support}: verdict {radical}, count {count}/{expected}")
    return _finish("generator-count-equivalence", start, cases, failures)


def suite_witnesses(max_s: int = 4, max_n: int = 4, fields=(QQ, GF2)) -> SuiteResult:
    """Every failing support yields a verified witness over every field."""
    start = time.perf_counter()
    failures = []
    cases = 0
    for support in iter_supports(max_s, max_n):
        verdict = is_radical_support(support)
        if verdict.is_radical_support:
            continue
        for fld in fields:
            cases += 1
            try:
                witness = padded_witness(support, verdict.cycle, fld)
            except Exception as exc:  # noqa: BLE001 - counterexample report
                failures.append(f"{support} over {fld.tag}: {exc}")
                continue
            for gen, vertex in zip(witness.generators, witness.cycle.vertices):
                if multidegree_of(gen) != _indicator(support.sets[vertex - 1], support.n):
                    failures.append(f"{support} over {fld.tag}: degree mismatch")
                    break
    return _finish("witness-verification", start, cases, failures)


def suite_cs_certificates(max_s: int = 4, max_n: int = 4) -> SuiteResult:
    """Every passing support yields a valid Cartwright-Sturmfels certificate."""
    start = time.perf_counter()
    failures = []
    cases = 0
    for support in iter_supports(max_s, max_n):
        if not is_radical_support(support).is_radical_support:
            continue
        cases += 1
        cert = cs_certificate(support)
        if not cert.valid:
            failures.append(f"invalid certificate for {support}")
    return _finish("cs-certificates", start, cases, failures)


# ---------------------------------------------------------------------------
# K-polynomial suites

def _random_small_ring(rng: random.Random, max_vars: int = 4) -> RingSpec:
    nvars = rng.randint(1, max_vars)
    blocks = rng.randint(1, nvars)
    cuts = sorted(rng.sample(range(1, nvars), blocks - 1))
    bounds = [0] + cuts + [nvars]
    m = tuple(bounds[i + 1] - bounds[i] for i in range(blocks))
    return RingSpec(blocks, m, QQ)


def suite_kpoly_oracles(seed, cases: int = 500) -> SuiteResult:
    """Pivot splitting == inclusion-exclusion == raw standard-monomial counts."""
    start = time.perf_counter()
    failures = []
    for idx in range(cases):
        rng = random.Random(f"kpoly:{seed}:{idx}")
        ring = _random_small_ring(rng)
        count = rng.randint(0, 6)
        gens = [
            tuple(rng.randint(0, 3) for _ in range(ring.nvars)) for _ in range(count)
        ]
        ideal = MonomialIdeal.of(ring, gens)
        pivot = kpoly_quotient(ideal)
        taylor = kpoly_taylor(ideal)
        if pivot != taylor:
            failures.append(f"case {idx}: pivot != taylor for {ideal.to_strings()}")
            continue
        bound = (2,) * ring.n
        if series_coefficients(pivot, ring.m, bound) != hilbert_count_oracle(ideal, bound):
            failures.append(f"case {idx}: series != counts for {ideal.to_strings()}")
    return _finish("kpoly-oracles", start, cases, failures)


def suite_alexander_duality(seed, cases: int = 200) -> SuiteResult:
    """Dual == brute-force minimal transversals, and duality is an involution."""
    start = time.perf_counter()
    failures = []
    for idx in range(cases):
        rng = random.Random(f"alex:{seed}:{idx}")
        ring = _random_small_ring(rng, max_vars=6)
        count = rng.randint(0, 5)
        gens = [
            tuple(rng.randint(0, 1) for _ in range(ring.nvars)) for _ in range(count)
        ]
        ideal = MonomialIdeal.of(ring, gens)
        dual = alexander_dual(ideal)
        if alexander_dual(dual) != ideal:
            failures.append(f"case {idx}: not an involution on {ideal.to_strings()}")
            continue
        if dual != _brute_alexander_dual(ideal):
            failures.append(f"case {idx}: dual mismatch on {ideal.to_strings()}")
    return _finish("alexander-duality", start, cases, failures)


def _brute_alexander_dual(ideal: MonomialIdeal) -> MonomialIdeal:
    nvars = ideal.ring.nvars
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in ideal.gens]
    hitting = []
    for mask in range(1 << nvars):
        subset = frozenset(i for i in range(nvars) if mask & (1 << i))
        if all(subset & supp for supp in supports):
            hitting.append(tuple(1 if i in subset else 0 for i in range(nvars)))
    return MonomialIdeal.of(ideal.ring, minimal_monomials(hitting))


def _grid_antichains(limit: int = 2):
    points = [(a, b) for a in range(limit + 1) for b in range(limit + 1)]
    for mask in range(1 << len(points)):
        chosen = [points[i] for i in range(len(points)) if mask & (1 << i)]
        comparable = any(
            p != q and p[0] <= q[0] and p[1] <= q[1] for p in chosen for q in chosen
        )
        if not comparable:
            yield chosen


def suite_polarized_dual_exhaustive() -> SuiteResult:
    """For every exponent-bounded ideal in two variables: the polarized dual
    is Borel radical, its dual K-polynomial matches the ideal's, and
    polarization preserves the quotient K-polynomial."""
    start = time.perf_counter()
    failures = []
    cases = 0
    ring_t = fine_ring(2)
    m = (2, 2)
    for antichain in _grid_antichains(2):
        cases += 1
        ideal = MonomialIdeal.of(ring_t, [tuple(p) for p in antichain])
        polarized = polarize(ideal, m)
        dual = polarized_dual(ideal, m)
        if not is_borel_radical(dual):
            failures.append(f"dual of {ideal.to_strings()} not Borel radical")
            continue
        if kpoly_quotient(dual).dualize() != kpoly_ideal(ideal):
            failures.append(f"K-identity fails for {ideal.to_strings()}")
            continue
        if kpoly_quotient(ideal) != kpoly_quotient(polarized):
            failures.append(f"polarization changes K for {ideal.to_strings()}")
    return _finish("polarized-dual-exhaustive", start, cases, failures)


def suite_k_identity_random(
    seed, cases: int = 200, max_s: int = 5, max_n: int = 6
) -> SuiteResult:
    """Random radical supports: K(E as module) == dual of the support
    K-polynomial == the expanded product formula, with the quotient
    K-polynomial cross-checked against inclusion-exclusion each time."""
    start = time.perf_counter()
    failures = []
    for idx in range(cases):
        rng = random.Random(f"kid:{seed}:{idx}")
        support = random_radical_support(rng, max_s, max_n, max_generator_product=14)
        ideal = support_product_ideal(support)
        quotient = kpoly_quotient(ideal)
        if quotient != kpoly_taylor(ideal):
            failures.append(f"case {idx}: pivot != taylor on {support}")
            continue
        as_module = IntPoly.one(support.n) - quotient
        dual = dual_k_poly_of_support(support)
        if as_module != dual or dual != k_poly_of_support(support).dualize():
            failures.append(f"case {idx}: K-identity fails on {support}")
    return _finish("k-identity-random", start, cases, failures)


def suite_regular_sequences(seed, cases: int = 500, max_s: int = 6, max_n: int = 6) -> SuiteResult:
    """Random supports: the staircase monomials are squarefree, pairwise
    coprime, degree-correct, and realize the product K-polynomial."""
    start = time.perf_counter()
    failures = []
    for idx in range(cases):
        rng = random.Random(f"regseq:{seed}:{idx}")
        support = random_support(rng, max_s, max_n)
        cert = regular_sequence(support)
        monos = cert.monomials
        ok = all(mono_is_squarefree(m) for m in monos)
        for i in range(len(monos)):
            for j in range(i + 1, len(monos)):
                if any(a and b for a, b in zip(monos[i], monos[j])):
                    ok = False
        for mono, a in zip(monos, support.sets):
            if cert.ring.monomial_degree(mono) != _indicator(a, support.n):
                ok = False
        ideal = MonomialIdeal.of(cert.ring, monos)
        if kpoly_quotient(ideal) != k_poly_of_support(support):
            ok = False
        if not ok:
            failures.append(f"case {idx}: bad regular sequence for {support}")
    return _finish("regular-sequences", start, cases, failures)


def suite_radical_trials(
    seed, trials: int = 50, retries: int = 3, max_s: int = 4, max_n: int = 5
) -> SuiteResult:
    """Random radical supports with dense random generators over F_32003 must
    be certified within the allowed retries.  Failures are probabilistic
    evidence only, but any failure is reported with its seed."""
    start = time.perf_counter()
    failures = []
    for idx in range(trials):
        rng = random.Random(f"trial:{seed}:{idx}")
        support = random_radical_support(rng, max_s, max_n, max_generator_product=12)
        report = random_support_trial(support, GF32003, rng, retries=retries)
        if not report.probe.is_borel_radical:
            failures.append(f"seed trial:{seed}:{idx} not certified: {support}")
    return _finish("radical-trials", start, trials, failures, indeterminate=True)


# ---------------------------------------------------------------------------
# aggregate

def run_all(max_s: int = 4, max_n: int = 4, seed=0, trials: int = 20, retries: int = 3):
    """The full battery.  Randomized case counts scale with ``trials`` so
    that small bounds give a fast smoke run; ``trials=50`` reproduces the
    acceptance-scale counts."""
    return [
        suite_oracle_equivalence(max_s, max_n),
        suite_distinct_vs_nonconstant(max_s, max_n),
        suite_subcollection_monotonicity(max_s, max_n),
        suite_generator_count(max_s, max_n),
        suite_witnesses(max_s, max_n),
        suite_cs_certificates(max_s, max_n),
        suite_kpoly_oracles(seed, cases=10 * trials),
        suite_alexander_duality(seed, cases=4 * trials),
        suite_polarized_dual_exhaustive(),
        suite_k_identity_random(seed, cases=4 * trials, max_s=max_s + 1, max_n=max_n + 2),
        suite_regular_sequences(seed, cases=10 * trials, max_s=max_s + 2, max_n=max_n + 2),
        suite_radical_trials(seed, trials=trials, retries=retries, max_s=max_s, max_n=max_n + 1),
    ]
