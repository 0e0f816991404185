import pytest
from hypothesis import given, strategies as st

from conftest import clmul_mod
from scsi_listdec.errors import DivisionByZero, NonPrimitiveModulus
from scsi_listdec.finite_field import DEFAULT_MODULI, GaloisField, field_new


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6, 8])
def test_multiplication_table_matches_shift_and_add(m):
    gf = field_new(m)
    for a in range(gf.q):
        for b in range(gf.q):
            assert gf.mul(a, b) == clmul_mod(a, b, gf.modulus)


@pytest.mark.parametrize("m", range(2, 17))
def test_default_moduli_are_primitive(m):
    gf = field_new(m)
    assert gf.modulus == DEFAULT_MODULI[m]
    assert len(set(gf.exp[: gf.order].tolist())) == gf.order
    assert gf.element_order(gf.primitive) == gf.order


def test_gf256_golden_product():
    gf = field_new(8)
    alpha = gf.primitive
    assert gf.mul(alpha, gf.alpha_pow(7)) == 0x1D
    assert gf.alpha_pow(8) == 0x1D


def test_poly_eval_golden():
    gf = field_new(4)
    # 3 + x^2 at x = 2: 3 ^ 4 = 7
    assert gf.poly_eval([3, 0, 1], 2) == 7


def test_non_primitive_modulus_rejected():
    # x^4 + x^3 + x^2 + x + 1 is irreducible but alpha has order 5
    with pytest.raises(NonPrimitiveModulus):
        GaloisField(4, 0x1F)
    with pytest.raises(NonPrimitiveModulus):
        GaloisField(4, 0x15)  # reducible


def test_division_by_zero():
    gf = field_new(4)
    with pytest.raises(DivisionByZero):
        gf.inv(0)
    with pytest.raises(DivisionByZero):
        gf.div(3, 0)


def test_field_cache_and_equality():
    assert field_new(5) is field_new(5)
    assert GaloisField(5) == field_new(5)
    assert GaloisField(8) != GaloisField(8, 0x12B)


def test_tables_are_read_only():
    gf = field_new(3)
    with pytest.raises(ValueError):
        gf.exp[0] = 5


elements = st.integers(0, 255)


@given(elements, elements, elements)
def test_field_axioms_gf256(a, b, c):
    gf = field_new(8)
    assert gf.mul(a, b) == gf.mul(b, a)
    assert gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c))
    assert gf.mul(gf.mul(a, b), c) == gf.mul(a, gf.mul(b, c))
    assert gf.sub(a, b) == gf.add(a, b) == a ^ b
    if a:
        assert gf.mul(a, gf.inv(a)) == 1
        assert gf.div(gf.mul(b, a), a) == b


@given(st.integers(1, 255), st.integers(-600, 600))
def test_pow_matches_repeated_multiplication(a, e):
    gf = field_new(8)
    expected = 1
    base = a if e >= 0 else gf.inv(a)
    for _ in range(abs(e)):
        expected = gf.mul(expected, base)
    assert gf.pow(a, e) == expected


def test_vector_ops_agree_with_scalar(rng):
    gf = field_new(6)
    a = rng.integers(0, gf.q, 500)
    b = rng.integers(0, gf.q, 500)
    assert gf.mul_vec(a, b).tolist() == [gf.mul(int(x), int(y)) for x, y in zip(a, b)]
    coeffs = rng.integers(0, gf.q, 7)
    assert gf.poly_eval_vec(coeffs, a).tolist() == [gf.poly_eval(coeffs, int(x)) for x in a]
    mat = rng.integers(0, gf.q, (4, 9))
    vec = rng.integers(0, gf.q, 9)
    expect = []
    for row in mat:
        acc = 0
        for x, y in zip(row, vec):
            acc ^= gf.mul(int(x), int(y))
        expect.append(acc)
    assert gf.matvec(mat, vec).tolist() == expect


def test_validate_rejects_out_of_range():
    gf = field_new(3)
    with pytest.raises(ValueError):
        gf.validate([1, 8])
