"""Monomial-ideal combinatorics and multigraded K-polynomials.

A monomial ideal stores its unique minimal generating set.  K-polynomials
of quotients live in Z[z_1..z_n] through the block grading (x[i,j] counts
toward z_j) and are computed two independent ways: divide-and-conquer
pivot splitting, and inclusion-exclusion over lcms of generator subsets.
A third check counts standard monomials degree by degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product
from math import comb

from .fields import QQ
from .polyring import (
    Mono,
    RingSpec,
    ZnDegree,
    degrevlex_order,
    mono_divides,
    mono_is_squarefree,
    mono_lcm,
    mono_mul,
    mono_total_degree,
)


def minimal_monomials(monomials) -> list[Mono]:
    """Divisibility-minimal elements (the unique minimal generating set)."""
    distinct = sorted(set(monomials), key=lambda m: (mono_total_degree(m), m))
    kept: list[Mono] = []
    for mono in distinct:
        if not any(mono_divides(g, mono) for g in kept):
            kept.append(mono)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators, canonically sorted.

    Use ``MonomialIdeal.of`` to normalize arbitrary generating sets.  The
    zero ideal has no generators; the unit ideal is generated by 1.
    """

    ring: RingSpec
    gens: tuple[Mono, ...]

    @classmethod
    def of(cls, ring: RingSpec, monomials) -> "MonomialIdeal":
        gens = minimal_monomials(tuple(m) for m in monomials)
        key = degrevlex_order(ring).key
        return cls(ring, tuple(sorted(gens, key=key)))

    @classmethod
    def zero(cls, ring: RingSpec) -> "MonomialIdeal":
        return cls(ring, ())

    @classmethod
    def unit(cls, ring: RingSpec) -> "MonomialIdeal":
        return cls(ring, ((0,) * ring.nvars,))

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(mono_total_degree(g) == 0 for g in self.gens)

    def contains(self, mono: Mono) -> bool:
        return any(mono_divides(g, mono) for g in self.gens)

    def is_squarefree(self) -> bool:
        return all(mono_is_squarefree(g) for g in self.gens)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def to_strings(self) -> list[str]:
        return [self.ring.monomial_to_string(g) for g in self.gens]

    def to_json(self) -> dict:
        return {"ring": self.ring.to_json(), "generators": self.to_strings()}


def minimalize(ring: RingSpec, monomials) -> MonomialIdeal:
    return MonomialIdeal.of(ring, monomials)


def product(left: MonomialIdeal, right: MonomialIdeal) -> MonomialIdeal:
    if left.ring != right.ring:
        raise ValueError("ideals live in different rings")
    prods = {mono_mul(a, b) for a in left.gens for b in right.gens}
    return MonomialIdeal.of(left.ring, prods)


def fine_ring(n: int, field=QQ) -> RingSpec:
    """The fine-graded ring T = K[y_1..y_n], encoded as all blocks of size 1."""
    return RingSpec(n, (1,) * n, field)


def linear_ideal(component: frozenset | set, n: int, field=QQ) -> MonomialIdeal:
    """The ideal (y_j : j in A) of the fine-graded ring."""
    ring = fine_ring(n, field)
    gens = [ring.monomial({(1, j): 1}) for j in sorted(component)]
    return MonomialIdeal.of(ring, gens)


def polarize(ideal: MonomialIdeal, m: tuple[int, ...]) -> MonomialIdeal:
    """Replace y_j^a by x[1,j]*...*x[a,j]; requires every exponent <= m_j."""
    source = ideal.ring
    if any(size != 1 for size in source.m):
        raise ValueError("polarization input must live in the fine-graded ring")
    if len(m) != source.n:
        raise ValueError("m must have one entry per block")
    target = RingSpec(source.n, tuple(m), source.field)
    gens = []
    for g in ideal.gens:
        powers = {}
        for exp, var in zip(g, source.variables):
            if exp > m[var.j - 1]:
                raise ValueError(
                    f"exponent {exp} of block {var.j} exceeds m_{var.j} = {m[var.j - 1]}"
                )
            for i in range(1, exp + 1):
                powers[(i, var.j)] = 1
        gens.append(target.monomial(powers))
    return MonomialIdeal.of(target, gens)


def alexander_dual(ideal: MonomialIdeal) -> MonomialIdeal:
    """Squarefree dual: minimal transversals of the generators' supports.

    Convention at the degenerate ends: the dual of the zero ideal is the
    unit ideal and vice versa (these are the empty transversal family and
    the family whose only cover is empty).
    """
    if not ideal.is_squarefree():
        raise ValueError("Alexander duality needs a squarefree ideal")
    supports = [frozenset(idx for idx, e in enumerate(g) if e) for g in ideal.gens]
    covers: list[frozenset] = [frozenset()]
    for supp in supports:
        extended = {cover | {v} for cover in covers for v in supp}
        covers = _minimal_sets(extended)
    nvars = ideal.ring.nvars
    gens = [tuple(1 if idx in cover else 0 for idx in range(nvars)) for cover in covers]
    return MonomialIdeal.of(ideal.ring, gens)


def _minimal_sets(sets) -> list[frozenset]:
    ordered = sorted(set(sets), key=lambda s: (len(s), sorted(s)))
    kept: list[frozenset] = []
    for candidate in ordered:
        if not any(k <= candidate for k in kept):
            kept.append(candidate)
    return kept


def polarized_dual(ideal: MonomialIdeal, m: tuple[int, ...]) -> MonomialIdeal:
    """Polarize, then take the Alexander dual.

    This is a bijection from exponent-bounded ideals of the fine-graded
    ring onto the Borel-exchange radical ideals of the block ring.
    """
    return alexander_dual(polarize(ideal, m))


def is_borel_radical(ideal: MonomialIdeal) -> bool:
    """Squarefree, and closed under swapping any generator variable x[i,j]
    for a lower-row variable x[k,j] (k < i)."""
    if not ideal.is_squarefree():
        return False
    ring = ideal.ring
    for g in ideal.gens:
        for idx, exp in enumerate(g):
            if not exp:
                continue
            var = ring.variables[idx]
            if var.i == 1:
                continue
            stripped = list(g)
            stripped[idx] -= 1
            for k in range(1, var.i):
                swapped = list(stripped)
                swapped[ring.flat_index(k, var.j)] += 1
                if not ideal.contains(tuple(swapped)):
                    return False
    return True


# ---------------------------------------------------------------------------
# integer K-polynomials in Z[z_1..z_n]

@dataclass(frozen=True, eq=False)
class IntPoly:
    """Sparse integer polynomial: exponent tuple (length n) -> coefficient."""

    n: int
    terms: dict

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None

    @classmethod
    def zero(cls, n: int) -> "IntPoly":
        return cls(n, {})

    @classmethod
    def constant(cls, n: int, c: int) -> "IntPoly":
        return cls(n, {(0,) * n: int(c)} if c else {})

    @classmethod
    def one(cls, n: int) -> "IntPoly":
        return cls.constant(n, 1)

    @classmethod
    def variable(cls, n: int, i: int) -> "IntPoly":
        expo = [0] * n
        expo[i - 1] = 1
        return cls(n, {tuple(expo): 1})

    @classmethod
    def monomial(cls, n: int, expo: ZnDegree, c: int = 1) -> "IntPoly":
        if not c:
            return cls.zero(n)
        return cls(n, {tuple(expo): int(c)})

    @classmethod
    def from_terms(cls, n: int, terms: dict) -> "IntPoly":
        return cls(n, {tuple(e): int(c) for e, c in terms.items() if c})

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "IntPoly") -> None:
        if self.n != other.n:
            raise ValueError("different numbers of variables")

    def __add__(self, other: "IntPoly") -> "IntPoly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        return IntPoly(self.n, out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        self._check(other)
        out: dict = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                v = out.get(e, 0) + ca * cb
                if v:
                    out[e] = v
                elif e in out:
                    del out[e]
        return IntPoly(self.n, out)

    def coefficient(self, expo: ZnDegree) -> int:
        return self.terms.get(tuple(expo), 0)

    def dualize(self) -> "IntPoly":
        """Substitute z_i -> 1 - z_i and expand (an involution)."""
        n = self.n
        powers: dict[tuple[int, int], IntPoly] = {}

        def one_minus_power(i: int, e: int) -> IntPoly:
            if (i, e) not in powers:
                if e == 0:
                    powers[(i, e)] = IntPoly.one(n)
                else:
                    base = IntPoly.one(n) - IntPoly.variable(n, i)
                    powers[(i, e)] = one_minus_power(i, e - 1) * base
            return powers[(i, e)]

        result = IntPoly.zero(n)
        for expo, c in self.terms.items():
            piece = IntPoly.constant(n, c)
            for i, e in enumerate(expo, start=1):
                if e:
                    piece = piece * one_minus_power(i, e)
            result = result + piece
        return result

    def to_records(self) -> list[dict]:
        ordered = sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]))
        return [{"exponents": list(e), "coefficient": c} for e, c in ordered]

    @classmethod
    def from_records(cls, n: int, records) -> "IntPoly":
        return cls.from_terms(n, {tuple(r["exponents"]): r["coefficient"] for r in records})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0])):
            vars_part = "*".join(
                f"z{i}" + (f"^{p}" if p > 1 else "")
                for i, p in enumerate(e, start=1)
                if p
            )
            if not vars_part:
                body = str(abs(c))
            elif abs(c) == 1:
                body = vars_part
            else:
                body = f"{abs(c)}*{vars_part}"
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(pieces)

    __repr__ = __str__


def dualize(poly: IntPoly) -> IntPoly:
    return poly.dualize()


def kpoly_quotient(ideal: MonomialIdeal) -> IntPoly:
    """K-polynomial of ring/I by pivot splitting on the most shared variable.

    Base cases: zero ideal, unit ideal, pairwise-coprime generators.  The
    split uses the exact sequence relating I to (I, x) and (I : x).
    """
    ring = ideal.ring
    return _kpoly_rec(ring, list(ideal.gens))


def _kpoly_rec(ring: RingSpec, gens: list[Mono]) -> IntPoly:
    n = ring.n
    if not gens:
        return IntPoly.one(n)
    if any(mono_total_degree(g) == 0 for g in gens):
        return IntPoly.zero(n)
    nvars = ring.nvars
    frequency = [0] * nvars
    for g in gens:
        for idx, e in enumerate(g):
            if e:
                frequency[idx] += 1
    top = max(frequency)
    if top <= 1:
        # pairwise coprime: complete intersection
        result = IntPoly.one(n)
        for g in gens:
            result = result * (IntPoly.one(n) - IntPoly.monomial(n, ring.monomial_degree(g)))
        return result
    pivot = frequency.index(top)
    pivot_mono = tuple(1 if idx == pivot else 0 for idx in range(nvars))
    plus = [g for g in gens if not g[pivot]] + [pivot_mono]
    colon = minimal_monomials(
        tuple(e - 1 if idx == pivot and e else e for idx, e in enumerate(g)) for g in gens
    )
    z_pivot = IntPoly.monomial(n, ring.monomial_degree(pivot_mono))
    return _kpoly_rec(ring, plus) + z_pivot * _kpoly_rec(ring, colon)


_TAYLOR_LIMIT = 22


def kpoly_taylor(ideal: MonomialIdeal) -> IntPoly:
    """Independent oracle: inclusion-exclusion over lcms of generator subsets."""
    gens = ideal.gens
    if len(gens) > _TAYLOR_LIMIT:
        raise ValueError(f"Taylor oracle limited to {_TAYLOR_LIMIT} generators")
    ring = ideal.ring
    n = ring.n
    terms: dict = {(0,) * n: 1}
    count = len(gens)
    if count:
        lcms: list[Mono] = [None] * (1 << count)
        lcms[0] = (0,) * ring.nvars
        for subset in range(1, 1 << count):
            low = subset & -subset
            idx = low.bit_length() - 1
            lcms[subset] = mono_lcm(lcms[subset ^ low], gens[idx])
            sign = -1 if subset.bit_count() % 2 else 1
            deg = ring.monomial_degree(lcms[subset])
            v = terms.get(deg, 0) + sign
            if v:
                terms[deg] = v
            elif deg in terms:
                del terms[deg]
    return IntPoly(n, terms)


def kpoly_ideal(ideal: MonomialIdeal) -> IntPoly:
    """K-polynomial of the ideal as a module: 1 - K(ring/I)."""
    return IntPoly.one(ideal.ring.n) - kpoly_quotient(ideal)


# ---------------------------------------------------------------------------
# counting oracle

def _block_monomials(size: int, degree: int):
    """Exponent tuples of length ``size`` with entries summing to ``degree``."""
    if size == 1:
        yield (degree,)
        return
    for first in range(degree + 1):
        for rest in _block_monomials(size - 1, degree - first):
            yield (first,) + rest


def monomials_of_degree(ring: RingSpec, degree: ZnDegree):
    """All monomials of the ring with the given Z^n-degree."""
    per_block = [list(_block_monomials(ring.m[j], degree[j])) for j in range(ring.n)]
    for combo in iter_product(*per_block):
        mono = []
        for part in combo:
            mono.extend(part)
        yield tuple(mono)


def hilbert_count_oracle(ideal: MonomialIdeal, bound: ZnDegree) -> dict:
    """Count standard monomials (those outside I) for every degree <= bound."""
    ring = ideal.ring
    counts = {}
    ranges = [range(b + 1) for b in bound]
    for degree in iter_product(*ranges):
        counts[degree] = sum(
            1 for mono in monomials_of_degree(ring, degree) if not ideal.contains(mono)
        )
    return counts


def series_coefficients(kpoly: IntPoly, m: tuple[int, ...], bound: ZnDegree) -> dict:
    """Coefficients of kpoly / prod (1-z_j)^{m_j} for every degree <= bound."""
    n = kpoly.n
    if len(m) != n or len(bound) != n:
        raise ValueError("m and bound must have one entry per variable")
    coeffs = {}
    ranges = [range(b + 1) for b in bound]
    for degree in iter_product(*ranges):
        total = 0
        for expo, c in kpoly.terms.items():
            if all(e <= d for e, d in zip(expo, degree)):
                weight = 1
                for e, d, mj in zip(expo, degree, m):
                    weight *= comb(d - e + mj - 1, mj - 1)
                total += c * weight
        coeffs[degree] = total
    return coeffs
