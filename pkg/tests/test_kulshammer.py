import random

import pytest

from kuelsh.algebra import center, commutator_subspace, socle
from kuelsh.kulshammer import (
    FormError,
    NoConsistentScaling,
    NotAnIdeal,
    build_trace_form,
    default_nmax,
    is_ideal,
    kulshammer_ladder,
    orthogonal,
    power,
    quotient_invariants,
    tn_space,
    verify_ladder,
)
from kuelsh.linalg import Subspace
from kuelsh.algebra import build_quotient, from_table
from kuelsh.quiver import parse_quiver_text
from kuelsh.field import FieldSpec

from conftest import analysis, q2b, q3a, truncated_poly


def classes(X, C, A, words):
    return (A.span(A.word(w) for w in words) + C) == X


def test_q2b_form_on_socle_paths():
    an = analysis(q2b("gf:2", 2, 3))
    f, A = an.form, an.A
    assert f.method == "socle-paths"
    assert f.value(A.word("eta^3").coords) == 1
    assert f.value(A.word("(alpha.beta.gamma)^2").coords) == 1
    assert (A.word("eta^3") - A.word("(alpha.beta.gamma)^2")).coords in an.C
    for i, lab in enumerate(A.labels):
        if A.path_length[i] < 3:
            assert f.psi[i] == 0, lab


def test_q3a_form_on_socle_paths():
    an = analysis(q3a("gf:4", "g"))
    A = an.A
    for w in ("beta.delta.eta.gamma", "delta.eta.gamma.beta", "eta.gamma.beta.delta"):
        assert an.form.value(A.word(w).coords) == 1
    assert all(c == 0 for i, c in enumerate(an.form.psi) if A.path_length[i] <= 3)


@pytest.mark.parametrize("params", [q2b("gf:4", 2, 4, "g", "1"), q3a("rat:2", "t"), q2b("rat:3", 1, 3, "t")], ids=str)
def test_form_symmetric_nondegenerate_and_kills_commutators(params):
    an = analysis(params)
    assert an.form.is_symmetric() and an.form.is_nondegenerate()
    assert all(an.form.value(c) == 0 for c in an.C.basis)


def test_non_symmetric_algebra_rejected():
    # path algebra of 1 -> 2: e1 A e1 meets the socle trivially
    q = parse_quiver_text("field gf:2\nvertex 1 2\narrow a 1 2\nloewy 1\n")
    with pytest.raises(FormError):
        build_trace_form(build_quotient(q))


def test_disconnected_socle_classes_rejected():
    K = FieldSpec.gf(2)
    A = from_table(K, ["e1", "e2"], [[[1, 0], [0, 0]], [[0, 0], [0, 1]]],
                   idempotents=(0, 1), path_length=[0, 0], vertex_pair=[("1", "1"), ("2", "2")])
    with pytest.raises(NoConsistentScaling):
        build_trace_form(A)


def test_t1_for_c_zero():
    an = analysis(q2b("gf:2", 3, 5))
    T1 = an.ladder.T[1]
    assert classes(T1, an.C, an.A, ["alpha", "eta^3", "eta^4", "(beta.gamma.alpha)^2", "(beta.gamma.alpha)^3"])


def test_t1_and_perp_for_k1_s3_c1():
    an = analysis(q2b("gf:2", 1, 3, "1", "1"))
    A = an.A
    assert classes(an.ladder.T[1], an.C, A, ["eta^2", "beta.gamma.alpha"])
    assert an.ladder.T_perp[1] == A.span(A.word(w) for w in ["alpha^2", "beta.gamma.alpha", "eta^2", "eta^3"])


def test_large_n_collects_every_nilpotent_class():
    an = analysis(q2b("gf:2", 2, 4))
    A, C = an.A, an.C
    n = default_nmax(A)
    Tn = tn_space(A, None, n, C)
    idem = A.span(A.basis_element(i) for i in A.idempotents)
    assert (Tn + idem).dim == A.dim and Tn.dim == A.dim - len(A.idempotents)


def test_orthogonal_basics():
    an = analysis(q2b("gf:2", 1, 4))
    assert orthogonal(an.form, an.C) == an.Z
    assert orthogonal(an.form, Subspace.full(an.A.spec, an.A.dim)).dim == 0


def test_commutative_ladder_starts_at_whole_algebra():
    A = truncated_poly("gf:2", 3)
    L = kulshammer_ladder(A, build_trace_form(A))
    assert L.T_perp[0].dim == 3
    assert [P.dim for P in L.T_perp] == [3, 2, 1]


def test_q3a_perp_mod_reynolds_square_parameter():
    an = analysis(q3a("gf:4", "g"))
    assert an.ladder.T_perp[1].dim - an.ladder.reynolds.dim == 1


def test_q3a_non_square_parameter_keeps_socle_class_in_t1():
    # s = eta.gamma.beta.delta squares to 0 but psi(s) = 1, so s ∈ T_1 \ [A, A]
    # and T_1^perp is exactly the radical of the center
    an = analysis(q3a("rat:2", "t"))
    A = an.A
    s = A.word("eta.gamma.beta.delta").coords
    assert s in an.ladder.T[1] and s not in an.C
    assert an.ladder.T[1].dim - an.C.dim == 1
    radZ = an.Z & A.span(A.basis_element(i) for i in range(A.dim) if A.path_length[i] > 0)
    assert an.ladder.T_perp[1] == radZ
    assert an.ladder.T_perp[1].dim - an.ladder.reynolds.dim == 2


def test_quotient_invariants_examples():
    an = analysis(q2b("gf:2", 3, 5, "1", "1"))
    q = quotient_invariants(an.A, an.Z, an.ladder.T_perp[1])
    assert (q.total_dim, q.socle_dim) == (4, 2)
    b = analysis(q3a("gf:4", "g"))
    q = quotient_invariants(b.A, b.Z, b.ladder.T_perp[1])
    assert (q.total_dim, q.socle_dim, q.radical_power_dims) == (2, 1, (2, 1, 0))
    assert quotient_invariants(b.A, b.Z, b.Z).total_dim == 0


def test_quotient_invariants_rejects_non_ideal():
    an = analysis(q2b("gf:2", 1, 3))
    with pytest.raises(NotAnIdeal):
        quotient_invariants(an.A, an.Z, an.A.span([an.A.word("e1")]))


@pytest.mark.parametrize("params", [q2b("gf:2", 2, 5, "1", "1"), q2b("rat:2", 1, 4, "t", "t"), q3a("gf:4", "g")],
                         ids=str)
def test_ladder_properties(params):
    an = analysis(params)
    verify_ladder(an.A, an.form, an.ladder, stabilized=True)
    for P in an.ladder.T_perp:
        assert is_ideal(an.A, an.Z, P)


def test_semilinearity_witness():
    an = analysis(q2b("gf:4", 2, 3, "g", "1"))
    A, C = an.A, an.C
    rnd = random.Random(11)
    els = list(A.spec.elements())
    for _ in range(15):
        x = tuple(rnd.choice(els) for _ in range(A.dim))
        y = tuple(rnd.choice(els) for _ in range(A.dim))
        lam = rnd.choice(els)
        lx = tuple(lam * c for c in x)
        lhs = power(A, tuple(u + v for u, v in zip(lx, y)), 2)
        rhs = [u + v for u, v in zip((lam * lam * c for c in power(A, x, 2)), power(A, y, 2))]
        assert tuple(u - v for u, v in zip(lhs, rhs)) in C


@pytest.mark.parametrize("params", [q2b("gf:4", 2, 4, "g", "1"), q3a("gf:4", "g+1")], ids=str)
def test_perp_ladder_independent_of_form(params):
    an = analysis(params)
    A = an.A
    g = A.spec.gen()
    other = build_trace_form(A, an.C, an.soc, rescale={v: g for v in A.vertices})
    assert other.psi != an.form.psi
    L = kulshammer_ladder(A, other, an.ladder.n_max, an.C, an.Z, an.soc)
    assert L.T_perp == an.ladder.T_perp


def test_center_and_socle_consistency():
    an = analysis(q2b("gf:2", 3, 3, "1", "1"))
    assert an.ladder.reynolds == center(an.A) & socle(an.A)
    assert an.C == commutator_subspace(an.A)
