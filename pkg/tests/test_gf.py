import itertools

import pytest
from hypothesis import given, strategies as st

from qmatroids.errors import DivisionByZero, InvalidElement, InvalidField
from qmatroids.gf import GF, default_modulus, field, field_arith, is_irreducible


def clmul_mod(a, b, modulus_bits, e):
    """Carry-less product reduced by the modulus, on bit-packed GF(2) polynomials."""
    r = 0
    for i in range(e):
        if (b >> i) & 1:
            r ^= a << i
    for d in range(2 * e - 2, e - 1, -1):
        if (r >> d) & 1:
            r ^= modulus_bits << (d - e)
    return r


@pytest.mark.parametrize("q", [2, 4, 8, 16])
def test_binary_extension_mul_matches_carryless_oracle(q):
    F = field(q)
    bits = sum(c << i for i, c in enumerate(F.modulus))
    for a, b in itertools.product(F.elements(), repeat=2):
        assert F.mul(a, b) == clmul_mod(a, b, bits, F.e)
        assert F.add(a, b) == a ^ b


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_prime_field_matches_modular_arithmetic(p):
    F = field(p)
    for a, b in itertools.product(range(p), repeat=2):
        assert F.add(a, b) == (a + b) % p
        assert F.sub(a, b) == (a - b) % p
        assert F.mul(a, b) == (a * b) % p
        if b:
            assert F.div(a, b) == a * pow(b, -1, p) % p


def test_spec_examples():
    assert field_arith(field(2), 1, 1, "add") == 0
    F4 = field(4)
    assert F4.modulus == (1, 1, 1)
    assert field_arith(F4, 2, 2, "mul") == 3   # x * x = x + 1
    assert field_arith(field(3), 1, 2, "div") == 2


@pytest.mark.parametrize("q", [2, 3, 4, 8, 9, 16])
def test_field_axioms_exhaustive(q):
    F = field(q)
    els = list(F.elements())
    for a, b in itertools.product(els, repeat=2):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
    for a, b, c in itertools.product(els, repeat=3):
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    for a in els:
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1


def test_primitive_element_generates_the_group():
    for q in (4, 8, 9, 16, 25):
        F = field(q)
        powers = {F.pow(F.primitive, k) for k in range(q - 1)}
        assert powers == set(range(1, q))


def test_default_moduli_are_least_irreducible():
    assert default_modulus(2, 4) == (1, 1, 0, 0, 1)
    assert default_modulus(2, 3) == (1, 1, 0, 1)
    assert default_modulus(3, 2) == (1, 0, 1)
    assert not is_irreducible((1, 0, 1), 2)   # x^2 + 1 = (x + 1)^2


def test_errors():
    F = field(4)
    with pytest.raises(DivisionByZero):
        F.div(1, 0)
    with pytest.raises(DivisionByZero):
        F.inv(0)
    with pytest.raises(InvalidElement):
        F.element(4)
    with pytest.raises(InvalidElement):
        F.element([1, 2])
    with pytest.raises(InvalidField):
        GF.of_order(6)
    with pytest.raises(InvalidField):
        GF(2, 2, modulus=(1, 0, 1))


def test_coefficient_round_trip():
    F = field(9)
    for x in F.elements():
        assert F.element(list(F.coeffs(x))) == x


@given(st.integers(0, 15), st.integers(1, 15), st.integers(0, 15))
def test_division_inverts_multiplication(a, b, c):
    F = field(16)
    assert F.mul(F.div(a, b), b) == a
    assert F.sub(F.add(a, c), c) == a
