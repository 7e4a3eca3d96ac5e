import pytest

from kuelsh.algebra import cartan_matrix, center
from kuelsh.expectations import expected, presented_ring_invariants
from kuelsh.families import (
    FamilyParams,
    InvalidParams,
    arrow_rescaling,
    build_family,
    is_exceptional,
    q3a_center_products,
    verify_witness,
)
from kuelsh.field import FieldSpec
from kuelsh.kulshammer import quotient_invariants
from kuelsh.linalg import rank

from conftest import analysis, family, q2b, q3a

GF2, GF4, RAT2 = FieldSpec.gf(2), FieldSpec.gf(4), FieldSpec.rational(2)


def test_q2b_k2_s4_dimension_and_cartan():
    A = family(q2b("gf:2", 2, 4))
    assert A.dim == 22
    assert cartan_matrix(A).tolist() == [[8, 4], [4, 6]]


def test_q3a_over_rational_field():
    A = family(q3a("rat:2", "t"))
    assert A.dim == 20 and center(A).dim == 6


@pytest.mark.parametrize("bad", [
    lambda: FamilyParams.q3a(GF4, 1),
    lambda: FamilyParams.q3a(GF4, 0),
    lambda: FamilyParams.q2b(GF2, 1, 2),
    lambda: FamilyParams.q2b(GF2, 0, 3),
    lambda: FamilyParams.q2b(GF2, 1, 3, a=0),
])
def test_invalid_params(bad):
    with pytest.raises(InvalidParams):
        build_family(bad())


def test_exceptional_flag():
    assert is_exceptional(q2b("gf:2", 1, 3))
    assert not is_exceptional(q2b("gf:2", 1, 4))
    assert not is_exceptional(q3a("gf:4", "g"))


@pytest.mark.parametrize("k,s", [(1, 3), (2, 4), (3, 5)])
def test_listed_center_basis(k, s):
    P = q2b("gf:4", k, s, "g", "1")
    A, Z = family(P), center(family(P))
    words = expected(P).center_basis
    vecs = [A.word(w).coords for w in words]
    assert all(v in Z for v in vecs)
    assert A.span(vecs).dim == k + s + 2 == len(words)


def test_q3a_center_relations_determinant():
    for spec, d in ((RAT2, "t"), (FieldSpec.rational(3), "t"), (FieldSpec.gf(5), "2"), (GF4, "g")):
        d = spec.parse(d)
        M = q3a_center_products(family(FamilyParams.q3a(spec, d)), d)
        r = [[M[i, j] for j in range(3)] for i in range(3)]
        det = (r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
               - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
               + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]))
        assert det == (d - 1) ** 2 / d ** 4
        assert rank(M) == 3


def test_q3a_central_element_coefficient():
    # beta.gamma + gamma.beta + lam * eta.delta commutes with delta only for lam = d
    t = RAT2.gen()
    A = family(q3a("rat:2", "t"))
    Z = center(A)
    assert A.word("beta.gamma + gamma.beta + [t]*eta.delta").coords in Z
    assert A.word(f"beta.gamma + gamma.beta + [{1 / t}]*eta.delta").coords not in Z


def test_rescaling_identity():
    P = q2b("gf:4", 2, 3)
    w = arrow_rescaling(P, P)
    assert w is not None and all(x == 1 for x in w.scalars.values())


@pytest.mark.parametrize("a", ["1", "g", "g+1"])
def test_rescaling_k1_s4(a):
    w = arrow_rescaling(q2b("gf:4", 1, 4, a), q2b("gf:4", 1, 4))
    assert w is not None
    A, B = family(q2b("gf:4", 1, 4, a)), family(q2b("gf:4", 1, 4))
    assert verify_witness(A, B, w.scalars) is not None


def test_rescaling_is_verified_not_assumed():
    A, B = family(q2b("gf:4", 1, 4, "g")), family(q2b("gf:4", 1, 4))
    ones = {x: GF4.one for x in ("alpha", "beta", "gamma", "eta")}
    assert verify_witness(A, B, ones) is None


def test_no_rescaling_across_c_classes():
    assert arrow_rescaling(q2b("gf:2", 2, 4, "1", "1"), q2b("gf:2", 2, 4, "1", "0")) is None
    a = analysis(q2b("gf:2", 1, 3, "1", "1"))
    b = analysis(q2b("gf:2", 1, 3, "1", "0"))
    assert [P.dim for P in a.ladder.T_perp] != [P.dim for P in b.ladder.T_perp]


def test_rescaling_rejects_mismatched_shapes():
    with pytest.raises(InvalidParams):
        arrow_rescaling(q2b("gf:4", 1, 4), q2b("gf:4", 1, 5))
    with pytest.raises(InvalidParams):
        arrow_rescaling(q3a("gf:4", "g"), q3a("gf:4", "g+1"))


def test_small_parameter_fingerprints_differ():
    a = analysis(q2b("gf:4", 1, 3, "g"))
    b = analysis(q2b("gf:4", 1, 3, "1"))
    fa = quotient_invariants(a.A, a.Z, a.ladder.T_perp[1])
    fb = quotient_invariants(b.A, b.Z, b.ladder.T_perp[1])
    assert fa != fb


def test_expected_case_examples():
    e = expected(q2b("gf:2", 3, 5, "1", "1"))
    assert e.t1_perp_basis[:5] == ("alpha^2", "(beta.gamma.alpha)^3", "eta^3", "eta^4", "eta^5")
    inv = presented_ring_invariants(e.quotient, GF2)
    assert (inv.total_dim, inv.socle_dim) == (4, 2)
    e = expected(q2b("rat:2", 1, 4, "1", "t"))
    assert e.t1_case == "k=1, s even, c not a square"
    e = expected(q2b("gf:2", 2, 4))
    assert e.t1_basis == ("alpha", "eta^2 + (beta.gamma.alpha)^1", "eta^3", "(beta.gamma.alpha)^2")


def test_expected_closed_form_shapes():
    for k, s in [(1, 3), (2, 5), (3, 4)]:
        e = expected(q2b("gf:2", k, s))
        assert e.center_dim == k + s + 2
        assert e.cartan_det == 4 * k * s
        assert [list(r) for r in e.cartan] == [[4 * k, 2 * k], [2 * k, k + s]]


def test_expected_cube_case_tag():
    assert expected(q2b("rat:3", 1, 3, "t")).t1_case == "a is not a cube"
    assert expected(q2b("rat:3", 1, 3, "t^3")).t1_case == "a is a cube"
