import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from radsup.fields import GF2, GF32003, PrimeField, QQ, field_from_tag
from radsup.polyring import (
    CoordinateChange,
    RingSpec,
    VarIndex,
    apply_coordinate_change,
    basis_of_component,
    compose_changes,
    degrevlex_order,
    identity_change,
    lex_order,
    multidegree_of,
    order_from_json,
    parse_polynomial,
    random_coordinate_change,
    random_form,
    ring_from_json,
)

R22 = RingSpec(2, (2, 2), QQ)
R3 = RingSpec(3, (2, 1, 1), QQ)


def test_fields():
    assert QQ.coerce(3) == Fraction(3)
    assert QQ.inv(Fraction(3, 2)) == Fraction(2, 3)
    f5 = PrimeField(5)
    assert f5.coerce(7) == 2
    assert f5.inv(2) == 3
    assert f5.coerce(Fraction(1, 2)) == 3
    with pytest.raises(ValueError):
        PrimeField(6)
    with pytest.raises(ZeroDivisionError):
        f5.inv(0)
    assert field_from_tag("QQ") == QQ
    assert field_from_tag("Fp(32003)") == GF32003
    with pytest.raises(ValueError):
        field_from_tag("GF(7)")


def test_ring_validation():
    with pytest.raises(ValueError):
        RingSpec(2, (1,), QQ)
    with pytest.raises(ValueError):
        RingSpec(1, (0,), QQ)
    assert R22.nvars == 4
    assert R22.variables == (VarIndex(1, 1), VarIndex(2, 1), VarIndex(1, 2), VarIndex(2, 2))
    with pytest.raises(ValueError):
        R22.flat_index(3, 1)
    assert ring_from_json(R22.to_json()) == R22


def test_multidegree_of():
    x11, x12 = R22.variable(1, 1), R22.variable(1, 2)
    x21 = R22.variable(2, 1)
    assert multidegree_of(x11 * x12) == (1, 1)
    assert multidegree_of(x11 + x21) == (1, 0)
    assert multidegree_of(x11 + x12) is None
    assert multidegree_of(R22.zero()) is None


def test_basis_of_component():
    basis = basis_of_component(R3, {1, 2})
    assert len(basis) == 2
    strings = {R3.monomial_to_string(m) for m in basis}
    assert strings == {"x[1,1]*x[1,2]", "x[2,1]*x[1,2]"}
    assert basis_of_component(RingSpec(3, (1, 1, 1), QQ), {2}) == [
        RingSpec(3, (1, 1, 1), QQ).monomial({(1, 2): 1})
    ]
    assert len(basis_of_component(R22, {1, 2})) == 4


def test_random_form_contract():
    rng = random.Random(7)
    f = random_form(R22, {1, 2}, rng)
    assert multidegree_of(f) == (1, 1)
    assert len(f.terms) == 4  # dense: every basis monomial has a coefficient
    again = random_form(R22, {1, 2}, random.Random(7))
    assert f == again
    single = random_form(RingSpec(2, (1, 1), QQ), {1}, rng)
    assert len(single.terms) == 1


def test_arithmetic_basics():
    x, y = R22.variable(1, 1), R22.variable(1, 2)
    f = 3 * x * y - y**2
    assert f == parse_polynomial(R22, "3*x[1,1]*x[1,2] - x[1,2]^2")
    assert (f - f).is_zero()
    assert f * R22.zero() == R22.zero()
    assert (x + y) * (x - y) == x**2 - y**2
    with pytest.raises(ValueError):
        x + RingSpec(1, (1,), QQ).variable(1, 1)


def test_fp_arithmetic():
    ring = RingSpec(1, (2,), GF2)
    a, b = ring.variable(1, 1), ring.variable(2, 1)
    assert (a + b) + (a + b) == ring.zero()
    assert (a + b) ** 2 == a**2 + b**2  # Frobenius in characteristic 2


def test_to_string_and_parse_round_trip():
    f = parse_polynomial(R22, "1/2*x[1,1]^2 - 5*x[2,1]*x[1,2] + 3")
    assert parse_polynomial(R22, f.to_string()) == f
    assert R22.zero().to_string() == "0"
    assert parse_polynomial(R22, "0").is_zero()
    with pytest.raises(ValueError):
        parse_polynomial(R22, "x[3,1]")
    with pytest.raises(ValueError):
        parse_polynomial(R22, "2 +")
    with pytest.raises(ValueError):
        parse_polynomial(R22, "ab")


def test_term_orders():
    order = degrevlex_order(R22)
    x11, x21, x12, x22 = (R22.monomial({v: 1}) for v in [(1, 1), (2, 1), (1, 2), (2, 2)])
    # default precedence: x[1,1] > x[1,2] > x[2,1] > x[2,2]
    assert order.key(x11) > order.key(x12) > order.key(x21) > order.key(x22)
    # degrevlex compares degree first
    assert order.key(R22.monomial({(2, 2): 2})) > order.key(x11)
    lex = lex_order(R22)
    assert lex.key(x11) > lex.key(R22.monomial({(2, 1): 5}))
    assert order_from_json(R22, order.to_json()) == order
    with pytest.raises(ValueError):
        degrevlex_order(R22, (VarIndex(1, 1),))


def test_degrevlex_classic_tiebreak():
    ring = RingSpec(1, (3,), QQ)
    order = degrevlex_order(ring)
    a = ring.monomial({(1, 1): 2, (3, 1): 1})  # x^2 z
    b = ring.monomial({(1, 1): 1, (2, 1): 1, (3, 1): 1})  # xyz
    assert order.key(a) > order.key(b)


@st.composite
def ring_and_polys(draw, count=2):
    field = draw(st.sampled_from([QQ, PrimeField(5)]))
    n = draw(st.integers(1, 2))
    m = tuple(draw(st.integers(1, 2)) for _ in range(n))
    ring = RingSpec(n, m, field)
    polys = []
    for _ in range(count):
        terms = {}
        for _ in range(draw(st.integers(0, 4))):
            mono = tuple(draw(st.integers(0, 2)) for _ in range(ring.nvars))
            terms[mono] = field.coerce(draw(st.integers(-4, 4)))
        polys.append(ring.poly(terms))
    return ring, polys


@given(ring_and_polys(count=3))
def test_ring_axioms(data):
    ring, (f, g, h) = data
    assert f + g == g + f
    assert (f + g) + h == f + (g + h)
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + ring.zero() == f
    assert f * ring.one() == f


@given(ring_and_polys(count=1))
def test_print_parse_round_trip(data):
    ring, (f,) = data
    assert parse_polynomial(ring, f.to_string()) == f


def test_identity_change_fixes_everything(rng):
    f = random_form(R3, {1, 2, 3}, rng)
    assert apply_coordinate_change(identity_change(R3), f) == f


def test_change_preserves_multidegree(rng):
    f = random_form(R3, {1, 2}, rng)
    g = random_coordinate_change(R3, rng)
    assert multidegree_of(apply_coordinate_change(g, f)) == multidegree_of(f)


def test_change_composition_is_action(rng):
    f = random_form(R22, {1, 2}, rng)
    g = random_coordinate_change(R22, rng)
    h = random_coordinate_change(R22, rng)
    lhs = apply_coordinate_change(g, apply_coordinate_change(h, f))
    rhs = apply_coordinate_change(compose_changes(g, h), f)
    assert lhs == rhs


def test_singular_block_rejected():
    zero_row = ((Fraction(0), Fraction(0)), (Fraction(1), Fraction(1)))
    with pytest.raises(ValueError, match="singular"):
        CoordinateChange(R22, (zero_row, ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))))
