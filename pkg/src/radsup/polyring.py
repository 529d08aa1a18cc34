"""Exact arithmetic in the Z^n-graded ring K[x_{ij}], term orders, Buchberger.

Variables come in blocks: block j holds x[1,j] .. x[m_j,j], all of degree
e_j.  Monomials are dense exponent tuples over the block-major variable
list; polynomials map monomials to nonzero field coefficients.  Everything
is immutable by convention and safe to share across threads.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING, Iterable, NamedTuple

from .fields import Field, QQ, field_from_tag

if TYPE_CHECKING:
    from .monomial import MonomialIdeal

Mono = tuple[int, ...]
ZnDegree = tuple[int, ...]


class VarIndex(NamedTuple):
    i: int  # row inside the block
    j: int  # block (grading coordinate)

    def __str__(self) -> str:
        return f"x[{self.i},{self.j}]"


# ---------------------------------------------------------------------------
# monomial helpers (ring-independent)

def mono_mul(a: Mono, b: Mono) -> Mono:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Mono, b: Mono) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Mono, b: Mono) -> Mono:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_is_squarefree(a: Mono) -> bool:
    return all(e <= 1 for e in a)


def mono_total_degree(a: Mono) -> int:
    return sum(a)


@dataclass(frozen=True)
class RingSpec:
    """The ring K[x_{ij} : 1 <= j <= n, 1 <= i <= m_j] with deg x_{ij} = e_j."""

    n: int
    m: tuple[int, ...]
    field: Field = QQ

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(int(v) for v in self.m))
        if self.n < 1:
            raise ValueError("n must be positive")
        if len(self.m) != self.n:
            raise ValueError("m must have length n")
        if any(v < 1 for v in self.m):
            raise ValueError("all block sizes m_j must be >= 1")

    @cached_property
    def variables(self) -> tuple[VarIndex, ...]:
        """Block-major storage order: block 1 rows 1..m_1, then block 2, ..."""
        return tuple(
            VarIndex(i, j) for j in range(1, self.n + 1) for i in range(1, self.m[j - 1] + 1)
        )

    @cached_property
    def _flat(self) -> dict:
        return {v: idx for idx, v in enumerate(self.variables)}

    @property
    def nvars(self) -> int:
        return sum(self.m)

    def flat_index(self, i: int, j: int) -> int:
        try:
            return self._flat[VarIndex(i, j)]
        except KeyError:
            raise ValueError(f"no variable x[{i},{j}] in this ring") from None

    def monomial(self, powers: dict | Iterable[tuple[int, int, int]] = ()) -> Mono:
        """Build a monomial from {(i, j): e} or an iterable of (i, j, e)."""
        exps = [0] * self.nvars
        items = powers.items() if isinstance(powers, dict) else ((ij, e) for *ij, e in powers)
        for (i, j), e in items:
            if e < 0:
                raise ValueError("negative exponent")
            exps[self.flat_index(i, j)] += e
        return tuple(exps)

    def monomial_degree(self, mono: Mono) -> ZnDegree:
        deg = [0] * self.n
        for exp, var in zip(mono, self.variables):
            if exp:
                deg[var.j - 1] += exp
        return tuple(deg)

    def monomial_to_string(self, mono: Mono) -> str:
        parts = []
        for exp, var in zip(mono, self.variables):
            if exp == 1:
                parts.append(str(var))
            elif exp > 1:
                parts.append(f"{var}^{exp}")
        return "*".join(parts) if parts else "1"

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(self.field.one)

    def constant(self, c) -> "Polynomial":
        c = self.field.coerce(c)
        if not c:
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def variable(self, i: int, j: int) -> "Polynomial":
        exps = [0] * self.nvars
        exps[self.flat_index(i, j)] = 1
        return Polynomial(self, {tuple(exps): self.field.one})

    def poly(self, terms: dict) -> "Polynomial":
        coerced = {}
        for mono, c in terms.items():
            c = self.field.coerce(c)
            if c:
                coerced[tuple(mono)] = c
        return Polynomial(self, coerced)

    def monomial_poly(self, mono: Mono, c=1) -> "Polynomial":
        return self.poly({mono: c})

    def to_json(self) -> dict:
        return {"n": self.n, "m": list(self.m), "field": self.field.tag}


def ring_from_json(data: dict) -> RingSpec:
    return RingSpec(int(data["n"]), tuple(data["m"]), field_from_tag(data["field"]))


@dataclass(frozen=True, eq=False)
class Polynomial:
    """Sparse exact polynomial: monomial exponent tuple -> nonzero coefficient."""

    ring: RingSpec
    terms: dict

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def _check_ring(self, other: "Polynomial") -> None:
        if self.ring != other.ring:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other):
        other = self._coerce_operand(other)
        self._check_ring(other)
        field = self.ring.field
        out = dict(self.terms)
        for mono, c in other.terms.items():
            v = field.add(out.get(mono, field.zero), c)
            if v:
                out[mono] = v
            elif mono in out:
                del out[mono]
        return Polynomial(self.ring, out)

    def __neg__(self):
        field = self.ring.field
        return Polynomial(self.ring, {m: field.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce_operand(other))

    def __mul__(self, other):
        other = self._coerce_operand(other)
        self._check_ring(other)
        field = self.ring.field
        out: dict = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                mono = mono_mul(ma, mb)
                v = field.add(out.get(mono, field.zero), field.mul(ca, cb))
                if v:
                    out[mono] = v
                elif mono in out:
                    del out[mono]
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __radd__(self, other):
        return self + other

    def __rsub__(self, other):
        return (-self) + other

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        for _ in range(e):
            result = result * self
        return result

    def _coerce_operand(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return self.ring.constant(other)

    def scale(self, c) -> "Polynomial":
        field = self.ring.field
        c = field.coerce(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m: field.mul(v, c) for m, v in self.terms.items()})

    def shift(self, mono: Mono) -> "Polynomial":
        return Polynomial(self.ring, {mono_mul(m, mono): c for m, c in self.terms.items()})

    def multidegree(self) -> ZnDegree | None:
        """Common Z^n-degree of all terms, or None if inhomogeneous or zero."""
        degrees = {self.ring.monomial_degree(m) for m in self.terms}
        if len(degrees) == 1:
            return next(iter(degrees))
        return None

    def total_degree(self) -> int:
        return max((mono_total_degree(m) for m in self.terms), default=0)

    def leading_monomial(self, order: "TermOrder") -> Mono:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: "TermOrder"):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: "TermOrder") -> "Polynomial":
        if not self.terms:
            return self
        field = self.ring.field
        inv = field.inv(self.leading_coefficient(order))
        return self.scale(inv)

    def to_string(self, order: "TermOrder | None" = None) -> str:
        if not self.terms:
            return "0"
        order = order or degrevlex_order(self.ring)
        field = self.ring.field
        monos = sorted(self.terms, key=order.key, reverse=True)
        pieces = []
        for idx, mono in enumerate(monos):
            c = self.terms[mono]
            negative = field.is_negative(c)
            mag = field.abs(c)
            var_part = self.ring.monomial_to_string(mono)
            if var_part == "1":
                body = field.format(mag)
            elif mag == field.one:
                body = var_part
            else:
                body = f"{field.format(mag)}*{var_part}"
            if idx == 0:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_string()!r})"


def multidegree_of(f: Polynomial) -> ZnDegree | None:
    """The common Z^n-degree of a multigraded polynomial; None otherwise."""
    return f.multidegree()


# ---------------------------------------------------------------------------
# term orders

@dataclass(frozen=True)
class TermOrder:
    """Lex or degrevlex over an explicit variable precedence (greatest first).

    Any precedence with x[i,j] before x[k,j] for i < k has the default
    property required by the generic-initial-ideal machinery.
    """

    ring: RingSpec
    kind: str
    vars_desc: tuple[VarIndex, ...]

    def __post_init__(self):
        if self.kind not in ("lex", "degrevlex"):
            raise ValueError("order kind must be 'lex' or 'degrevlex'")
        if sorted(self.vars_desc) != sorted(self.ring.variables):
            raise ValueError("vars_desc must be a permutation of the ring variables")

    @cached_property
    def _positions(self) -> tuple[int, ...]:
        flat = self.ring._flat
        return tuple(flat[v] for v in self.vars_desc)

    @cached_property
    def key(self):
        positions = self._positions
        if self.kind == "lex":
            def lex_key(mono: Mono):
                return tuple(mono[p] for p in positions)

            return lex_key

        reversed_positions = tuple(reversed(positions))

        def degrevlex_key(mono: Mono):
            return (sum(mono), tuple(-mono[p] for p in reversed_positions))

        return degrevlex_key

    def to_json(self) -> dict:
        return {"kind": self.kind, "variables": [str(v) for v in self.vars_desc]}


def default_variable_order(ring: RingSpec) -> tuple[VarIndex, ...]:
    """Row-major: x[1,1] > x[1,2] > ... > x[1,n] > x[2,1] > ..."""
    return tuple(sorted(ring.variables))


def degrevlex_order(ring: RingSpec, vars_desc: tuple[VarIndex, ...] | None = None) -> TermOrder:
    return TermOrder(ring, "degrevlex", vars_desc or default_variable_order(ring))


def lex_order(ring: RingSpec, vars_desc: tuple[VarIndex, ...] | None = None) -> TermOrder:
    return TermOrder(ring, "lex", vars_desc or default_variable_order(ring))


def order_from_json(ring: RingSpec, data: dict) -> TermOrder:
    vars_desc = tuple(_parse_var(token) for token in data["variables"])
    return TermOrder(ring, data["kind"], vars_desc)


def _parse_var(token: str) -> VarIndex:
    token = token.strip()
    if not (token.startswith("x[") and token.endswith("]")):
        raise ValueError(f"bad variable token {token!r}")
    i, j = token[2:-1].split(",")
    return VarIndex(int(i), int(j))


# ---------------------------------------------------------------------------
# parsing

def parse_polynomial(ring: RingSpec, text: str) -> Polynomial:
    """Parse the printed grammar: terms like "3*x[1,1]*x[2,2] - x[1,2]^2"."""
    tokens = _tokenize(text)
    result = ring.zero()
    pos = 0
    sign = 1
    if pos < len(tokens) and tokens[pos] == ("op", "-"):
        sign = -1
        pos += 1
    elif pos < len(tokens) and tokens[pos] == ("op", "+"):
        pos += 1
    if pos >= len(tokens):
        raise ValueError("empty polynomial")
    while pos < len(tokens):
        term, pos = _parse_term(ring, tokens, pos)
        result = result + (term.scale(-1) if sign < 0 else term)
        if pos >= len(tokens):
            break
        kind, value = tokens[pos]
        if kind != "op" or value not in "+-":
            raise ValueError(f"expected + or - at token {pos}")
        sign = 1 if value == "+" else -1
        pos += 1
        if pos >= len(tokens):
            raise ValueError("trailing sign")
    return result


def _tokenize(text: str) -> list:
    import re

    token_re = re.compile(r"\s*(?:x\[\s*(\d+)\s*,\s*(\d+)\s*\]|(\d+)|([+\-*/^]))")
    tokens = []
    pos = 0
    while pos < len(text):
        m = token_re.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError(f"bad character at position {pos}: {text[pos:pos+8]!r}")
            break
        if m.group(1) is not None:
            tokens.append(("var", VarIndex(int(m.group(1)), int(m.group(2)))))
        elif m.group(3) is not None:
            tokens.append(("int", int(m.group(3))))
        else:
            tokens.append(("op", m.group(4)))
        pos = m.end()
    return tokens


def _parse_term(ring: RingSpec, tokens: list, pos: int) -> tuple[Polynomial, int]:
    field = ring.field
    coeff = field.one
    exps = [0] * ring.nvars
    expect_factor = True
    while pos < len(tokens):
        kind, value = tokens[pos]
        if not expect_factor:
            if kind == "op" and value == "*":
                pos += 1
                expect_factor = True
                continue
            break
        if kind == "int":
            num = value
            pos += 1
            if pos < len(tokens) and tokens[pos] == ("op", "/"):
                pos += 1
                if pos >= len(tokens) or tokens[pos][0] != "int":
                    raise ValueError("expected denominator after /")
                coeff = field.mul(coeff, field.div(field.coerce(num), field.coerce(tokens[pos][1])))
                pos += 1
            else:
                coeff = field.mul(coeff, field.coerce(num))
        elif kind == "var":
            var = value
            power = 1
            pos += 1
            if pos < len(tokens) and tokens[pos] == ("op", "^"):
                pos += 1
                if pos >= len(tokens) or tokens[pos][0] != "int":
                    raise ValueError("expected integer exponent after ^")
                power = tokens[pos][1]
                pos += 1
            exps[ring.flat_index(var.i, var.j)] += power
        else:
            raise ValueError(f"unexpected token {value!r}")
        expect_factor = False
    if expect_factor:
        raise ValueError("dangling operator in term")
    return ring.poly({tuple(exps): coeff}), pos


# ---------------------------------------------------------------------------
# graded components and random forms

def basis_of_component(ring: RingSpec, component: frozenset | set) -> list[Mono]:
    """All monomials of multidegree A: one variable from each block j in A."""
    from itertools import product

    labels = sorted(component)
    if any(j < 1 or j > ring.n for j in labels):
        raise ValueError("component label outside the ring's blocks")
    out = []
    for rows in product(*(range(1, ring.m[j - 1] + 1) for j in labels)):
        out.append(ring.monomial({(i, j): 1 for i, j in zip(rows, labels)}))
    return out


def random_form(ring: RingSpec, component: frozenset | set, rng) -> Polynomial:
    """Dense form of multidegree A with independently sampled nonzero coefficients."""
    field = ring.field
    terms = {mono: field.random_nonzero(rng) for mono in basis_of_component(ring, component)}
    return Polynomial(ring, terms)


# ---------------------------------------------------------------------------
# multigraded coordinate changes

@dataclass(frozen=True, eq=False)
class CoordinateChange:
    """One invertible m_j x m_j matrix per block; acts as a graded automorphism."""

    ring: RingSpec
    blocks: tuple[tuple[tuple, ...], ...]

    def __post_init__(self):
        if len(self.blocks) != self.ring.n:
            raise ValueError("need one matrix per block")
        for j, block in enumerate(self.blocks, start=1):
            size = self.ring.m[j - 1]
            if len(block) != size or any(len(row) != size for row in block):
                raise ValueError(f"block {j} must be {size}x{size}")
            if _rank(self.ring.field, [list(row) for row in block]) != size:
                raise ValueError(f"block {j} is singular")

    def to_json(self) -> dict:
        field = self.ring.field
        return {
            "blocks": [[[field.format(v) for v in row] for row in block] for block in self.blocks]
        }


def _rank(field: Field, rows: list[list]) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(v, inv) for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [field.sub(a, field.mul(factor, b)) for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def identity_change(ring: RingSpec) -> CoordinateChange:
    field = ring.field
    blocks = []
    for size in ring.m:
        blocks.append(
            tuple(
                tuple(field.one if r == c else field.zero for c in range(size))
                for r in range(size)
            )
        )
    return CoordinateChange(ring, tuple(blocks))


def random_coordinate_change(ring: RingSpec, rng) -> CoordinateChange:
    """Sample block matrices until each is invertible."""
    field = ring.field
    blocks = []
    for size in ring.m:
        while True:
            block = tuple(
                tuple(field.random(rng) for _ in range(size)) for _ in range(size)
            )
            if _rank(field, [list(r) for r in block]) == size:
                blocks.append(block)
                break
    return CoordinateChange(ring, tuple(blocks))


def compose_changes(g: CoordinateChange, h: CoordinateChange) -> CoordinateChange:
    """The change acting as first h, then g (blockwise matrix product g*h)."""
    if g.ring != h.ring:
        raise ValueError("changes live on different rings")
    field = g.ring.field
    blocks = []
    for gb, hb in zip(g.blocks, h.blocks):
        size = len(gb)
        prod = tuple(
            tuple(
                _dot(field, [gb[r][k] for k in range(size)], [hb[k][c] for k in range(size)])
                for c in range(size)
            )
            for r in range(size)
        )
        blocks.append(prod)
    return CoordinateChange(g.ring, tuple(blocks))


def _dot(field: Field, xs, ys):
    acc = field.zero
    for x, y in zip(xs, ys):
        acc = field.add(acc, field.mul(x, y))
    return acc


def apply_coordinate_change(g: CoordinateChange, f: Polynomial) -> Polynomial:
    """Substitute x[i,j] -> sum_k g_j[k][i] * x[k,j]."""
    ring = f.ring
    if g.ring != ring:
        raise ValueError("change and polynomial live in different rings")
    images = {}
    for var in ring.variables:
        block = g.blocks[var.j - 1]
        terms = {}
        for k in range(1, len(block) + 1):
            c = block[k - 1][var.i - 1]
            if c:
                terms[ring.monomial({(k, var.j): 1})] = c
        images[var] = Polynomial(ring, terms)
    result = ring.zero()
    for mono, coeff in f.terms.items():
        piece = ring.constant(coeff)
        for exp, var in zip(mono, ring.variables):
            for _ in range(exp):
                piece = piece * images[var]
        result = result + piece
    return result


# ---------------------------------------------------------------------------
# Buchberger's algorithm and normal forms

@dataclass(frozen=True, eq=False)
class GroebnerBasis:
    """The unique reduced, monic Groebner basis for a term order."""

    ring: RingSpec
    order: TermOrder
    gens: tuple[Polynomial, ...]

    @cached_property
    def leading_monomials(self) -> tuple[Mono, ...]:
        return tuple(g.leading_monomial(self.order) for g in self.gens)

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def to_strings(self) -> list[str]:
        return [g.to_string(self.order) for g in self.gens]


def _reduce_full(terms: dict, basis: list[tuple[Mono, dict]], key, field) -> dict:
    """Remainder of terms modulo monic basis elements (full reduction)."""
    remainder: dict = {}
    work = dict(terms)
    while work:
        lead = max(work, key=key)
        coeff = work.pop(lead)
        for g_lt, g_terms in basis:
            if mono_divides(g_lt, lead):
                shift = mono_div(lead, g_lt)
                for mg, cg in g_terms.items():
                    if mg == g_lt:
                        continue
                    mono = mono_mul(mg, shift)
                    v = field.sub(work.get(mono, field.zero), field.mul(coeff, cg))
                    if v:
                        work[mono] = v
                    elif mono in work:
                        del work[mono]
                break
        else:
            remainder[lead] = coeff
    return remainder


def _make_monic(terms: dict, key, field) -> dict:
    lead = max(terms, key=key)
    c = terms[lead]
    if c == field.one:
        return terms
    inv = field.inv(c)
    return {m: field.mul(v, inv) for m, v in terms.items()}


def buchberger(gens: Iterable[Polynomial], order: TermOrder) -> GroebnerBasis:
    """The reduced Groebner basis of (gens), via Buchberger with the normal
    pair-selection strategy and the coprime-leading-term criterion."""
    ring = order.ring
    key = order.key
    field = ring.field
    work: list[dict] = []
    for g in gens:
        if g.ring != ring:
            raise ValueError("generator outside the order's ring")
        if not g.is_zero():
            work.append(_make_monic(dict(g.terms), key, field))
    if not work:
        return GroebnerBasis(ring, order, ())

    lts = [max(t, key=key) for t in work]
    heap: list = []

    def push_pairs(new_idx: int) -> None:
        for i in range(new_idx):
            lcm = mono_lcm(lts[i], lts[new_idx])
            heapq.heappush(heap, (mono_total_degree(lcm), key(lcm), i, new_idx))

    for idx in range(len(work)):
        push_pairs(idx)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        lt_i, lt_j = lts[i], lts[j]
        lcm = mono_lcm(lt_i, lt_j)
        if lcm == mono_mul(lt_i, lt_j):
            continue  # coprime leading terms reduce to zero
        spoly: dict = {}
        shift_i, shift_j = mono_div(lcm, lt_i), mono_div(lcm, lt_j)
        for m, c in work[i].items():
            spoly[mono_mul(m, shift_i)] = c
        for m, c in work[j].items():
            mono = mono_mul(m, shift_j)
            v = field.sub(spoly.get(mono, field.zero), c)
            if v:
                spoly[mono] = v
            elif mono in spoly:
                del spoly[mono]
        remainder = _reduce_full(spoly, list(zip(lts, work)), key, field)
        if remainder:
            work.append(_make_monic(remainder, key, field))
            lts.append(max(remainder, key=key))
            push_pairs(len(work) - 1)

    reduced = _interreduce(work, key, field)
    polys = tuple(
        Polynomial(ring, terms)
        for terms in sorted(reduced, key=lambda t: key(max(t, key=key)), reverse=True)
    )
    return GroebnerBasis(ring, order, polys)


def _interreduce(work: list[dict], key, field) -> list[dict]:
    # keep only generators whose leading term no other kept one divides
    ordered = sorted(work, key=lambda t: key(max(t, key=key)))
    kept: list[dict] = []
    kept_lts: list[Mono] = []
    for terms in ordered:
        lt = max(terms, key=key)
        if any(mono_divides(other, lt) for other in kept_lts):
            continue
        kept.append(terms)
        kept_lts.append(lt)
    # tail-reduce each against the others; leading terms form an antichain,
    # so a single full pass reaches the reduced basis
    for idx in range(len(kept)):
        basis = [(kept_lts[k], kept[k]) for k in range(len(kept)) if k != idx]
        reduced = _reduce_full(kept[idx], basis, key, field)
        kept[idx] = _make_monic(reduced, key, field)
    return kept


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """The unique remainder of f modulo the reduced basis."""
    if f.ring != gb.ring:
        raise ValueError("polynomial and basis live in different rings")
    basis = list(zip(gb.leading_monomials, [g.terms for g in gb.gens]))
    remainder = _reduce_full(dict(f.terms), basis, gb.order.key, gb.ring.field)
    return Polynomial(gb.ring, remainder)


def is_groebner(gb: GroebnerBasis, original_gens: Iterable[Polynomial] = ()) -> bool:
    """Self-check: every S-polynomial reduces to zero and the original
    generators lie in the span.  Used by tests, not by the hot paths."""
    gens = gb.gens
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            lt_i = gb.leading_monomials[i]
            lt_j = gb.leading_monomials[j]
            lcm = mono_lcm(lt_i, lt_j)
            s = gens[i].shift(mono_div(lcm, lt_i)) - gens[j].shift(mono_div(lcm, lt_j))
            if not normal_form(s, gb).is_zero():
                return False
    return all(normal_form(g, gb).is_zero() for g in original_gens)


def initial_ideal(gb: GroebnerBasis):
    """Monomial ideal of leading terms of the reduced basis."""
    from .monomial import MonomialIdeal

    return MonomialIdeal.of(gb.ring, gb.leading_monomials)


def squarefree_initial_certificate(gb: GroebnerBasis) -> bool:
    """True when every leading monomial is squarefree, which certifies that
    the ideal is radical (sufficient, not necessary)."""
    return all(mono_is_squarefree(lt) for lt in gb.leading_monomials)


@dataclass(frozen=True, eq=False)
class RadicalInitialProbe:
    """Outcome of the random-coordinate-change initial ideal probe.

    ``is_borel_radical`` True is a genuine certificate of radicality (the
    transformed ideal has a squarefree initial ideal); False only says that
    every attempted change failed and is probabilistic evidence.
    """

    is_borel_radical: bool
    initial: "MonomialIdeal"
    attempts: int
    changes: tuple[CoordinateChange, ...]
    basis: GroebnerBasis

    @property
    def certifies_radical(self) -> bool:
        return self.is_borel_radical

    @property
    def indeterminate(self) -> bool:
        return not self.is_borel_radical


def probabilistic_radical_initial(
    gens: list[Polynomial],
    rng,
    retries: int = 3,
    changes: Iterable[CoordinateChange] | None = None,
) -> RadicalInitialProbe:
    """Probe whether a random multigraded change of coordinates produces an
    initial ideal that is radical and Borel-exchange-closed.

    Draws up to ``retries`` coordinate changes (or uses the explicit
    ``changes``), computes the reduced basis for the default degrevlex
    order, and tests the initial ideal.
    """
    from .monomial import is_borel_radical

    if not gens:
        raise ValueError("need at least one generator")
    ring = gens[0].ring
    for g in gens:
        if not g.is_zero() and g.multidegree() is None:
            raise ValueError("generators must be multigraded")
    order = degrevlex_order(ring)
    supplied = list(changes) if changes is not None else None
    if supplied is not None and not supplied:
        raise ValueError("explicit change list must be non-empty")
    if supplied is None and retries < 1:
        raise ValueError("need at least one attempt")
    attempts = supplied if supplied is not None else range(retries)
    used: list[CoordinateChange] = []
    result_initial = None
    result_basis = None
    count = 0
    for attempt in attempts:
        change = attempt if supplied is not None else random_coordinate_change(ring, rng)
        used.append(change)
        count += 1
        transformed = [apply_coordinate_change(change, g) for g in gens]
        gb = buchberger(transformed, order)
        init = initial_ideal(gb)
        result_initial, result_basis = init, gb
        if is_borel_radical(init):
            return RadicalInitialProbe(True, init, count, tuple(used), gb)
    return RadicalInitialProbe(False, result_initial, count, tuple(used), result_basis)
