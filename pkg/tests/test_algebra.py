from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

import oracle
from rbh4.algebra import (
    ALGEBRAS,
    AlgebraError,
    AlgebraSpec,
    Automorphism,
    Subspace,
    adjoint_minus,
    adjoint_plus,
    automorphism_violations,
    change_basis_ef_to_xgx,
    change_basis_xgx_to_ef,
    get_algebra,
    identify_ideal,
    phi,
    psi,
    subspace_ops,
)
from rbh4.exactalg import GF, QQ

F = Fraction
vec = st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=3), min_size=4, max_size=4)


def v(spec, **coords):
    return spec.vector({("1" if k == "one" else k): c for k, c in coords.items()})


@pytest.mark.parametrize("name", sorted(ALGEBRAS))
def test_structure_constants_match_matrix_models(name):
    expected = oracle.structure_constants(name)
    got = get_algebra(name).constants
    n = len(expected)
    for i in range(n):
        for j in range(n):
            assert [sp.Rational(str(x)) for x in got[i][j]] == list(expected[i][j])


def test_sweedler_products():
    h4 = get_algebra("h4")
    assert h4.multiply(v(h4, g=1), v(h4, g=1)) == v(h4, one=1)
    assert h4.multiply(v(h4, x=1), v(h4, g=1)) == v(h4, gx=-1)
    assert h4.multiply(v(h4, x=1), v(h4, x=1)) == v(h4)


def test_h4minus_brackets():
    lie = get_algebra("h4minus")
    assert lie.multiply(v(lie, one=1), v(lie, g=1)) == v(lie)
    assert lie.multiply(v(lie, g=1), v(lie, e=1)) == v(lie, e=2)
    assert lie.multiply(v(lie, g=1), v(lie, f=1)) == v(lie, f=-2)
    assert lie.multiply(v(lie, e=1), v(lie, f=1)) == v(lie)


def test_adjoint_minus_of_sweedler():
    h4 = get_algebra("h4")
    lie = adjoint_minus(h4)
    assert lie.kind == "lie"
    # [g, x] = gx - xg = 2 gx
    assert lie.multiply(v(h4, g=1), v(h4, x=1)) == v(h4, gx=2)
    assert lie.jacobi_violations() == []
    assert lie.is_antisymmetric()


def test_adjoint_of_commutative_algebra_is_abelian():
    c = AlgebraSpec(
        "k2", "associative", ("1", "t"),
        ((((F(1), F(0)), (F(0), F(1))), ((F(0), F(1)), (F(0), F(0))))),
    )
    c.validate()
    lie = adjoint_minus(c)
    assert all(x == 0 for plane in lie.constants for row in plane for x in row)


def test_adjoint_plus_of_sweedler():
    h4 = get_algebra("h4")
    jordan = adjoint_plus(h4)
    assert jordan.kind == "jordan"
    assert jordan.multiply(v(h4, g=1), v(h4, g=1)) == v(h4, one=1)
    assert jordan.multiply(v(h4, g=1), v(h4, x=1)) == v(h4)
    assert jordan.is_commutative()


def test_adjoints_need_an_associative_input():
    with pytest.raises(AlgebraError):
        adjoint_minus(get_algebra("lm2"))
    with pytest.raises(AlgebraError):
        adjoint_plus(get_algebra("h4minus"))


@given(vec, vec)
def test_bracket_agrees_with_commutator(a, b):
    h4 = get_algebra("h4")
    lie = adjoint_minus(h4)
    ab = h4.multiply(a, b)
    ba = h4.multiply(b, a)
    assert lie.multiply(a, b) == tuple(x - y for x, y in zip(ab, ba))


@pytest.mark.parametrize("name", ["h4minus", "lm2", "lm3"])
def test_lie_algebras_satisfy_jacobi(name):
    spec = get_algebra(name)
    assert spec.is_antisymmetric()
    assert spec.jacobi_violations() == []


def test_sweedler_is_associative():
    assert get_algebra("h4").associator_violations() == []


def test_derived_algebra_and_center():
    lie = get_algebra("h4minus")
    brackets = [lie.multiply(lie.unit(i), lie.unit(j)) for i in range(4) for j in range(4)]
    assert Subspace.span(brackets, 4, QQ) == Subspace.span([v(lie, e=1), v(lie, f=1)], 4, QQ)
    assert all(lie.multiply(v(lie, one=1), lie.unit(i)) == v(lie) for i in range(4))


def test_change_of_basis():
    assert change_basis_xgx_to_ef((0, 0, 1, 0)) == (0, 0, F(1, 2), F(1, 2))
    assert change_basis_ef_to_xgx((0, 0, 1, 0)) == (0, 0, 1, 1)
    assert change_basis_ef_to_xgx((3, 5, 0, 0)) == (3, 5, 0, 0)


@given(vec)
def test_change_of_basis_round_trip(a):
    assert change_basis_xgx_to_ef(change_basis_ef_to_xgx(a)) == tuple(a)


def test_change_of_basis_over_f3():
    # x = (e + f)/2 and 1/2 = 2 in F_3
    out = change_basis_xgx_to_ef((0, 0, 1, 0), GF(3))
    assert [int(x) for x in out] == [0, 0, 2, 2]


def test_subspace_ops():
    lie = get_algebra("h4minus")
    K = Subspace.span([v(lie, e=1), v(lie, f=1)], 4, QQ)
    info = subspace_ops(lie, K)
    assert info.is_ideal and info.is_abelian
    I = Subspace.span([v(lie, one=1), v(lie, e=1), v(lie, f=1)], 4, QQ)
    assert subspace_ops(lie, I).is_ideal
    ge = subspace_ops(lie, Subspace.span([v(lie, g=1), v(lie, e=1)], 4, QQ))
    assert ge.is_subalgebra and not ge.is_ideal and not ge.is_abelian


def test_identify_ideal():
    lie = get_algebra("h4minus")
    span = lambda *vs: Subspace.span(list(vs), 4, QQ)  # noqa: E731
    assert identify_ideal(lie, span(v(lie, one=1), v(lie, e=1))) == ("K_e", None)
    assert identify_ideal(lie, span(v(lie, one=1), v(lie, f=1))) == ("K_f", None)
    assert identify_ideal(lie, span(v(lie, e=1), v(lie, f=1))) == ("K", None)
    assert identify_ideal(lie, span(v(lie, one=1), v(lie, e=1), v(lie, f=1))) == ("I", None)
    assert identify_ideal(lie, span(v(lie, one=2, g=1), v(lie, e=1), v(lie, f=1))) == ("J", 2)
    with pytest.raises(AlgebraError):
        identify_ideal(lie, span(v(lie, g=1)))


def test_named_automorphisms_certify():
    assert automorphism_violations(get_algebra("h4minus"), phi().matrix) == []
    assert automorphism_violations(get_algebra("lm2"), psi().matrix) == []
    with pytest.raises(AlgebraError):
        # g -> 2g does not preserve [g, e] = 2e together with e -> e
        Automorphism(get_algebra("h4minus"), ((1, 0, 0, 0), (0, 2, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)))


def test_scaled_spec_scales_products():
    lie = get_algebra("h4minus").scaled(F(3))
    assert lie.multiply(v(lie, g=1), v(lie, e=1)) == v(lie, e=6)


def test_spec_json_round_trip():
    for spec in ALGEBRAS.values():
        assert AlgebraSpec.from_json(spec.to_json()) == spec


def test_multiply_rejects_bad_dimensions():
    with pytest.raises(AlgebraError):
        get_algebra("h4").multiply((1, 0, 0), (1, 0, 0, 0))
