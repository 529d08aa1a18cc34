"""Checkable certificates behind the support verdicts.

Failing supports get an explicit witness ideal together with a monomial w
such that w is outside the ideal while w^2 is inside, both facts verified
by Groebner normal forms.  Passing supports get a Cartwright-Sturmfels
certificate: the product of the linear ideals attached to the sets, its
generator count, and the K-polynomial identity tying it to the support.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import Field, GF32003, QQ
from .monomial import (
    IntPoly,
    MonomialIdeal,
    kpoly_ideal,
    linear_ideal,
    product,
)
from .polyring import (
    GroebnerBasis,
    Mono,
    Polynomial,
    RadicalInitialProbe,
    RingSpec,
    TermOrder,
    VarIndex,
    degrevlex_order,
    lex_order,
    mono_is_squarefree,
    multidegree_of,
    normal_form,
    probabilistic_radical_initial,
    buchberger,
    random_form,
)
from .support import (
    LabeledCycle,
    Support,
    build_graph,
    is_radical_support,
    min_ring_dims,
)


def _indicator(component: frozenset, n: int) -> tuple[int, ...]:
    return tuple(1 if j in component else 0 for j in range(1, n + 1))


def k_poly_of_support(support: Support) -> IntPoly:
    """prod_v (1 - prod_{j in A_v} z_j): the K-polynomial shared by every
    regular sequence with these degrees."""
    n = support.n
    result = IntPoly.one(n)
    for a in support.sets:
        result = result * (IntPoly.one(n) - IntPoly.monomial(n, _indicator(a, n)))
    return result


def dual_k_poly_of_support(support: Support) -> IntPoly:
    """prod_v (1 - prod_{j in A_v} (1 - z_j)), expanded."""
    n = support.n
    result = IntPoly.one(n)
    for a in support.sets:
        factor = IntPoly.one(n)
        for j in sorted(a):
            factor = factor * (IntPoly.one(n) - IntPoly.variable(n, j))
        result = result * (IntPoly.one(n) - factor)
    return result


@dataclass(frozen=True)
class RegularSequenceCert:
    """Pairwise-coprime squarefree monomials realizing the support's degrees."""

    ring: RingSpec
    monomials: tuple[Mono, ...]
    support: Support

    def to_json(self) -> dict:
        return {
            "ring": self.ring.to_json(),
            "monomials": [self.ring.monomial_to_string(m) for m in self.monomials],
            "support": self.support.to_json(),
        }


def regular_sequence(support: Support, m: tuple[int, ...] | None = None) -> RegularSequenceCert:
    """The staircase monomials f_v = prod_{j in A_v} x[k_{j,v}, j] where
    k_{j,v} counts earlier sets containing j; needs m_j at least that count."""
    dims = tuple(m) if m is not None else min_ring_dims(support)
    if len(dims) != support.n:
        raise ValueError("m must have one entry per label")
    for j in range(1, support.n + 1):
        needed = support.label_count(j)
        if dims[j - 1] < needed:
            raise ValueError(
                f"m_{j} = {dims[j - 1]} is below the incidence count {needed} for label {j}"
            )
    ring = RingSpec(support.n, dims, QQ)
    seen = {j: 0 for j in range(1, support.n + 1)}
    monomials = []
    for a in support.sets:
        powers = {}
        for j in sorted(a):
            seen[j] += 1
            powers[(seen[j], j)] = 1
        monomials.append(ring.monomial(powers))
    return RegularSequenceCert(ring, tuple(monomials), support)


# ---------------------------------------------------------------------------
# non-radical witnesses

@dataclass(frozen=True)
class WitnessVerification:
    """Replayable record of the two normal-form checks."""

    field_tag: str
    normal_form_witness: Polynomial
    normal_form_square: Polynomial

    @property
    def witness_outside(self) -> bool:
        return not self.normal_form_witness.is_zero()

    @property
    def square_inside(self) -> bool:
        return self.normal_form_square.is_zero()

    @property
    def ok(self) -> bool:
        return self.witness_outside and self.square_inside


@dataclass(frozen=True)
class NonRadicalWitness:
    """An ideal with the support's degrees that is provably not radical.

    ``generators[t]`` has multidegree equal to the set at the cycle's t-th
    vertex; ``witness_monomial`` is outside the ideal while its square is
    inside.  ``label_map[t]`` records which original block plays the role
    of the t-th cycle block, ``vertex_map[t]`` the original generator index.
    """

    ring: RingSpec
    cycle: LabeledCycle
    generators: tuple[Polynomial, ...]
    witness_monomial: Mono
    order: TermOrder
    basis: GroebnerBasis
    vertex_map: tuple[int, ...]
    label_map: tuple[int, ...]
    verification: WitnessVerification

    def to_json(self) -> dict:
        return {
            "ring": self.ring.to_json(),
            "cycle": self.cycle.to_json(),
            "vertex_map": list(self.vertex_map),
            "label_map": list(self.label_map),
            "generators": [g.to_string(self.order) for g in self.generators],
            "witness_monomial": self.ring.monomial_to_string(self.witness_monomial),
            "order": self.order.to_json(),
            "groebner_basis": self.basis.to_strings(),
            "verification": {
                "field": self.verification.field_tag,
                "normal_form_witness": self.verification.normal_form_witness.to_string(self.order),
                "normal_form_square": self.verification.normal_form_square.to_string(self.order),
                "witness_outside_ideal": self.verification.witness_outside,
                "square_inside_ideal": self.verification.square_inside,
            },
        }


def _tighten_cycle(support: Support, cycle: LabeledCycle) -> LabeledCycle:
    """Shrink a distinct-label cycle until every vertex's set meets the cycle
    labels only in its two adjacent edge labels (shortcut through chords)."""
    verts = list(cycle.vertices)
    labs = list(cycle.labels)
    changed = True
    while changed:
        changed = False
        k = len(verts)
        for t in range(k):
            a = support.sets[verts[t] - 1]
            adjacent = {(t - 1) % k, t}
            bad = next((q for q in range(k) if q not in adjacent and labs[q] in a), None)
            if bad is None:
                continue
            run = []
            u = t
            while True:
                run.append(u)
                if u == bad:
                    break
                u = (u + 1) % k
            verts = [verts[u] for u in run]
            labs = [labs[u] for u in run[:-1]] + [labs[bad]]
            changed = True
            break
    return LabeledCycle(tuple(verts), tuple(labs))


def _build_witness(support: Support, cycle: LabeledCycle, field: Field) -> NonRadicalWitness:
    p = cycle.k
    # block label playing the role of cycle position t (1-based)
    orig = (cycle.labels[-1],) + cycle.labels[:-1]
    cycle_labels = set(orig)
    n = support.n
    union_labels: set[int] = set()
    for v in cycle.vertices:
        union_labels |= support.sets[v - 1]
    padding = sorted(union_labels - cycle_labels)
    m = tuple(2 if j in cycle_labels else 1 for j in range(1, n + 1))
    ring = RingSpec(n, m, field)

    def x(t: int) -> Polynomial:
        return ring.variable(1, orig[t - 1])

    def y(t: int) -> Polynomial:
        return ring.variable(2, orig[t - 1])

    generators = []
    witness_powers = {}
    for t in range(1, p + 1):
        vertex_set = support.sets[cycle.vertices[t - 1] - 1]
        adjacent = {orig[t - 1], orig[t % p]}
        if vertex_set & cycle_labels != adjacent:
            raise AssertionError("cycle not tight: a set meets a non-adjacent cycle label")
        if t < p:
            core = x(t + 1) * y(t) - x(t) * y(t + 1)
        else:
            core = y(1) * y(p)
        for u in sorted(vertex_set - cycle_labels):
            core = core * ring.variable(1, u)
        if multidegree_of(core) != _indicator(vertex_set, n):
            raise AssertionError("witness generator has the wrong multidegree")
        generators.append(core)
    for t in range(1, p):
        witness_powers[(1, orig[t - 1])] = 1
    witness_powers[(2, orig[p - 1])] = 1
    for u in padding:
        witness_powers[(1, u)] = witness_powers.get((1, u), 0) + 1
    witness = ring.monomial(witness_powers)

    vars_desc = (
        [VarIndex(1, orig[t - 1]) for t in range(1, p + 1)]
        + [VarIndex(2, orig[t - 1]) for t in range(1, p + 1)]
        + [VarIndex(1, u) for u in padding]
        + [VarIndex(1, j) for j in range(1, n + 1) if j not in cycle_labels and j not in padding]
    )
    order = degrevlex_order(ring, tuple(vars_desc))
    basis = buchberger(generators, order)
    witness_poly = ring.monomial_poly(witness)
    nf_witness = normal_form(witness_poly, basis)
    nf_square = normal_form(witness_poly * witness_poly, basis)
    verification = WitnessVerification(field.tag, nf_witness, nf_square)
    if not verification.ok:
        raise AssertionError("witness verification failed; this is a bug, not a verdict")
    return NonRadicalWitness(
        ring=ring,
        cycle=cycle,
        generators=tuple(generators),
        witness_monomial=witness,
        order=order,
        basis=basis,
        vertex_map=cycle.vertices,
        label_map=orig,
        verification=verification,
    )


def cycle_witness_ideal(p: int, field: Field = QQ) -> NonRadicalWitness:
    """The bare cycle witness: in K[x_1..x_p, y_1..y_p] with deg x_i = deg
    y_i = e_i, the ideal (x_{i+1}y_i - x_iy_{i+1} : i < p) + (y_1y_p) with
    witness monomial x_1..x_{p-1}y_p, verified by normal forms."""
    if p < 2:
        raise ValueError("need a cycle length of at least 2")
    sets = [frozenset({i, i + 1}) for i in range(1, p)] + [frozenset({1, p})]
    support = Support(p, tuple(sets))
    cycle = LabeledCycle(tuple(range(1, p + 1)), tuple(range(2, p + 1)) + (1,))
    return _build_witness(support, cycle, field)


def padded_witness(
    support: Support,
    cycle: LabeledCycle | None = None,
    field: Field = QQ,
) -> NonRadicalWitness:
    """Witness for any failing support: relabel a distinct-label cycle onto
    the bare cycle ideal, then pad each generator with fresh degree-{u}
    variables so the degrees match the original sets exactly."""
    if cycle is None:
        verdict = is_radical_support(support)
        if verdict.is_radical_support:
            raise ValueError("support is radical: no witness exists")
        cycle = verdict.cycle
    if not cycle.has_distinct_labels():
        raise ValueError("witness construction needs a cycle with distinct labels")
    cycle.validate_in(build_graph(support))
    tight = _tighten_cycle(support, cycle)
    return _build_witness(support, tight, field)


# ---------------------------------------------------------------------------
# Cartwright-Sturmfels certificates

@dataclass(frozen=True)
class CSCertificate:
    """Certificate that every ideal with these degrees is Cartwright-Sturmfels.

    The product ideal of the linear ideals attached to the sets must have
    exactly prod |A_v| minimal generators, exponents bounded by the
    incidence counts, and K-polynomial (as a module) equal to the dual
    K-polynomial of the support.
    """

    support: Support
    product_ideal: MonomialIdeal
    generator_count: int
    expected_generator_count: int
    k_support: IntPoly
    k_dual_support: IntPoly
    k_ideal: IntPoly
    identity_holds: bool
    exponent_bound_holds: bool

    @property
    def count_matches(self) -> bool:
        return self.generator_count == self.expected_generator_count

    @property
    def valid(self) -> bool:
        return self.identity_holds and self.exponent_bound_holds and self.count_matches

    def to_json(self) -> dict:
        return {
            "support": self.support.to_json(),
            "product_ideal": self.product_ideal.to_strings(),
            "generator_count": self.generator_count,
            "expected_generator_count": self.expected_generator_count,
            "k_support": self.k_support.to_records(),
            "k_dual_support": self.k_dual_support.to_records(),
            "k_ideal": self.k_ideal.to_records(),
            "identity_holds": self.identity_holds,
            "exponent_bound_holds": self.exponent_bound_holds,
            "valid": self.valid,
        }


def support_product_ideal(support: Support) -> MonomialIdeal:
    """prod_v (y_j : j in A_v) inside the fine-graded ring."""
    result = None
    for a in support.sets:
        ideal = linear_ideal(a, support.n)
        result = ideal if result is None else product(result, ideal)
    return result


def cs_certificate(support: Support) -> CSCertificate:
    """Build and check the certificate; rejects supports failing the verdict."""
    verdict = is_radical_support(support)
    if not verdict.is_radical_support:
        raise ValueError("support fails the cycle condition; no certificate exists")
    product_ideal = support_product_ideal(support)
    expected = 1
    for a in support.sets:
        expected *= len(a)
    k_support = k_poly_of_support(support)
    k_dual = dual_k_poly_of_support(support)
    k_of_ideal = kpoly_ideal(product_ideal)
    identity = k_of_ideal == k_dual and k_dual == k_support.dualize()
    bounds = min_ring_dims(support)
    exponent_ok = all(
        e <= bounds[var.j - 1]
        for g in product_ideal.gens
        for e, var in zip(g, product_ideal.ring.variables)
    )
    return CSCertificate(
        support=support,
        product_ideal=product_ideal,
        generator_count=len(product_ideal.gens),
        expected_generator_count=expected,
        k_support=k_support,
        k_dual_support=k_dual,
        k_ideal=k_of_ideal,
        identity_holds=identity,
        exponent_bound_holds=exponent_ok,
    )


# ---------------------------------------------------------------------------
# regularization gadget

@dataclass(frozen=True)
class RegularizationGadget:
    """Generators g_i = f_i + prod t_{ij} in an extended ring, with the t's
    leading under lex so the g_i form a radical complete intersection."""

    ring: RingSpec
    generators: tuple[Polynomial, ...]
    order: TermOrder
    t_variables: tuple[tuple[VarIndex, ...], ...]
    leading_coprime: bool


def regularization_gadget(support: Support, gens: list[Polynomial]) -> RegularizationGadget:
    """Adjoin one fresh degree-e_j variable per (generator, label) incidence
    and add the product of each generator's fresh variables to it."""
    if len(gens) != support.s:
        raise ValueError("need one generator per support set")
    base = gens[0].ring if gens else None
    for f, a in zip(gens, support.sets):
        if f.ring != base:
            raise ValueError("generators live in different rings")
        if not f.is_zero() and multidegree_of(f) != _indicator(a, base.n):
            raise ValueError("generator multidegree does not match its set")
    if base.n != support.n:
        raise ValueError("ring and support have different numbers of blocks")

    extra = [support.label_count(j) for j in range(1, support.n + 1)]
    extended = RingSpec(base.n, tuple(mj + ej for mj, ej in zip(base.m, extra)), base.field)

    def embed(f: Polynomial) -> Polynomial:
        terms = {}
        for mono, c in f.terms.items():
            powers = {}
            for e, var in zip(mono, base.variables):
                if e:
                    powers[(var.i, var.j)] = e
            terms[extended.monomial(powers)] = c
        return Polynomial(extended, terms)

    t_vars: list[tuple[VarIndex, ...]] = []
    seen = {j: 0 for j in range(1, support.n + 1)}
    for a in support.sets:
        row = []
        for j in sorted(a):
            seen[j] += 1
            row.append(VarIndex(base.m[j - 1] + seen[j], j))
        t_vars.append(tuple(row))

    gadget_gens = []
    for f, row in zip(gens, t_vars):
        t_mono = extended.monomial({(v.i, v.j): 1 for v in row})
        gadget_gens.append(embed(f) + extended.monomial_poly(t_mono))

    all_t = sorted({v for row in t_vars for v in row})
    rest = sorted(v for v in extended.variables if v not in set(all_t))
    order = lex_order(extended, tuple(all_t) + tuple(rest))

    leads = [g.leading_monomial(order) for g in gadget_gens]
    coprime = all(mono_is_squarefree(lt) for lt in leads)
    for i in range(len(leads)):
        for j in range(i + 1, len(leads)):
            if any(a and b for a, b in zip(leads[i], leads[j])):
                coprime = False
    expected_leads = [
        extended.monomial({(v.i, v.j): 1 for v in row}) for row in t_vars
    ]
    if leads != expected_leads:
        raise AssertionError("gadget leading terms are not the fresh-variable products")
    return RegularizationGadget(extended, tuple(gadget_gens), order, tuple(t_vars), coprime)


# ---------------------------------------------------------------------------
# randomized trials

@dataclass(frozen=True)
class TrialReport:
    """One randomized radicality trial: sampled forms plus the probe outcome."""

    support: Support
    ring: RingSpec
    forms: tuple[Polynomial, ...]
    probe: RadicalInitialProbe
    expected_radical: bool

    @property
    def consistent(self) -> bool:
        # a radical support must be certified; for a failing support either
        # outcome is consistent (the sampled ideal may still be radical)
        return self.probe.is_borel_radical or not self.expected_radical

    @property
    def indeterminate(self) -> bool:
        return not self.probe.is_borel_radical

    def to_json(self) -> dict:
        order = degrevlex_order(self.ring)
        return {
            "support": self.support.to_json(),
            "ring": self.ring.to_json(),
            "forms": [f.to_string(order) for f in self.forms],
            "is_borel_radical": self.probe.is_borel_radical,
            "attempts": self.probe.attempts,
            "initial_ideal": self.probe.initial.to_strings(),
            "changes": [c.to_json() for c in self.probe.changes],
            "expected_radical": self.expected_radical,
            "consistent": self.consistent,
        }


def random_support_trial(
    support: Support,
    field: Field = GF32003,
    rng=None,
    m: tuple[int, ...] | None = None,
    retries: int = 3,
    forms: list[Polynomial] | None = None,
) -> TrialReport:
    """Sample forms of the prescribed degrees and probe radicality through a
    random change of coordinates.  Explicit ``forms`` override sampling."""
    if rng is None:
        raise ValueError("pass an explicitly seeded random.Random for reproducibility")
    dims = tuple(m) if m is not None else min_ring_dims(support)
    ring = RingSpec(support.n, dims, field)
    if forms is None:
        sampled = tuple(random_form(ring, a, rng) for a in support.sets)
    else:
        for f, a in zip(forms, support.sets):
            if f.ring != ring:
                raise ValueError("explicit form lives in the wrong ring")
            if not f.is_zero() and multidegree_of(f) != _indicator(a, support.n):
                raise ValueError("explicit form has the wrong multidegree")
        sampled = tuple(forms)
    probe = probabilistic_radical_initial(list(sampled), rng, retries=retries)
    verdict = is_radical_support(support)
    return TrialReport(support, ring, sampled, probe, verdict.is_radical_support)
