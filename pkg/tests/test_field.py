import pytest
from hypothesis import given, settings, strategies as st

from kuelsh.field import DegreeOverflow, DivisionByZero, FieldError, FieldSpec, ParseError

GF2, GF4, GF3, GF9 = FieldSpec.gf(2), FieldSpec.gf(4), FieldSpec.gf(3), FieldSpec.gf(9)
RAT2, RAT3 = FieldSpec.rational(2), FieldSpec.rational(3)


def test_gf2_one_plus_one():
    assert GF2(1) + GF2(1) == 0


def test_gf4_g_squared():
    g = GF4.gen()
    assert g * g == g + 1
    assert str(g * g) == "g+1"


def test_rational_common_denominator():
    t = RAT2.gen()
    assert 1 / t + 1 / (t + 1) == 1 / (t * t + t)


def test_rational_canonical_form():
    t = RAT3.gen()
    x = (2 * t + 2) / (2 * t * t + 2 * t)
    num, den = x.value
    assert den == (0, 1) and num == (1,)
    assert x == 1 / t


def test_frobenius_examples():
    assert GF4.gen().frobenius() == GF4.gen() ** 2
    t = RAT2.gen()
    assert t.frobenius() == t * t
    assert GF3(2).frobenius() == 2


def test_frobenius_root_examples():
    g = GF4.gen()
    assert (g + 1).frobenius_root() == g
    t = RAT2.gen()
    assert (t * t).frobenius_root() == t
    assert t.frobenius_root() is None


def test_p_power_decompose_examples():
    t = RAT2.gen()
    assert (t ** 3 + t ** 2).p_power_decompose(1) == [t, t]
    assert RAT2.one.p_power_decompose(1) == [1, 0]
    g = GF4.gen()
    assert g.p_power_decompose(1) == [g ** 2, 0]


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        GF4.gen() / GF4.zero
    with pytest.raises(DivisionByZero):
        RAT2.zero.inverse()


def test_degree_guard():
    t = RAT2.gen()
    with pytest.raises(DegreeOverflow):
        t ** 600


def test_reducible_modulus_rejected():
    with pytest.raises(FieldError):
        FieldSpec.extension(2, 2, modulus=(1, 0, 1))


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        RAT2.parse("t + * 1")
    assert "column" in str(err.value)


def test_parse_roundtrip_printing():
    for text in ("1/(t^2+t)", "t^3+1", "(t+1)/t"):
        x = RAT2.parse(text)
        assert RAT2.parse(str(x)) == x


def test_mixing_fields_is_an_error():
    with pytest.raises(FieldError):
        GF4.gen() + RAT2.gen()


def test_nth_root_cube_detection():
    t = RAT3.gen()
    assert t.nth_root(3) is None
    assert (t ** 3).nth_root(3) == t
    assert GF4.gen().nth_root(3) is None  # cubes in GF(4)^x are {1}
    assert GF4.one.nth_root(3) ** 3 == 1


# properties


def _poly(spec, coeffs):
    return spec.from_poly(tuple(c % spec.p for c in coeffs))


def elements(spec):
    if spec.kind != "rational":
        return st.sampled_from(list(spec.elements()))
    coeffs = st.lists(st.integers(0, spec.p - 1), min_size=0, max_size=4)
    nonzero = coeffs.filter(lambda c: any(c))
    return st.builds(lambda n, d: _poly(spec, n) / _poly(spec, d), coeffs, nonzero)


FIELDS = [GF2, GF4, GF9, RAT2, RAT3]


@pytest.mark.parametrize("spec", FIELDS, ids=lambda s: s.short())
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_field_axioms(spec, data):
    x, y, z = (data.draw(elements(spec)) for _ in range(3))
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + (-x) == 0
    if x:
        assert x * x.inverse() == 1


@pytest.mark.parametrize("spec", FIELDS, ids=lambda s: s.short())
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_frobenius_is_ring_homomorphism(spec, data):
    x, y = data.draw(elements(spec)), data.draw(elements(spec))
    assert (x * y).frobenius() == x.frobenius() * y.frobenius()
    assert (x + y).frobenius() == x.frobenius() + y.frobenius()


@pytest.mark.parametrize("spec", FIELDS, ids=lambda s: s.short())
@pytest.mark.parametrize("n", [1, 2])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_p_power_decompose_roundtrip(spec, n, data):
    x = data.draw(elements(spec))
    parts = x.p_power_decompose(n)
    q = spec.p ** n
    assert len(parts) == q
    basis = spec.gen() if spec.kind == "rational" else None
    total = spec.zero
    for j, w in enumerate(parts):
        total = total + w.frobenius(n) * (basis ** j if basis is not None else (1 if j == 0 else 0))
    assert total == x
    root = x.frobenius_root(n)
    if spec.is_perfect:
        assert root is not None and root.frobenius(n) == x
    else:
        assert (root is not None) == all(w.is_zero() for w in parts[1:])
