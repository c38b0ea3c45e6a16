import pytest

from exactalg import ALPHA_VARS, InhomogeneityError, MultiPoly
from multidegree import (
    DEGREVLEX, LEX, GradedIdeal, MonomialIdeal, TermOrder, buchberger, ideal_contains, ideals_equal,
    initial_ideal, is_groebner, leading_monomial, multidegree, normal_form, orbit_class_oracle, orbit_ideal,
    orbit_oracle_record, oracle_details, s_polynomial,
)
from orbits import U_PRIME_VARS, OrbitLabel
from triality import isotropy_quadrics

LEX_ORDER = TermOrder(LEX)
DEGREVLEX_ORDER = TermOrder(DEGREVLEX)


def P(text):
    return MultiPoly.parse(text, U_PRIME_VARS)


def A(text):
    return MultiPoly.parse(text, ALPHA_VARS)


@pytest.fixture
def cubic_cone():
    return GradedIdeal(isotropy_quadrics(U_PRIME_VARS))


def test_term_orders():
    assert leading_monomial(P("b*c - a*d"), DEGREVLEX_ORDER) == (0, 1, 1, 0)
    assert leading_monomial(P("b*c - a*d"), LEX_ORDER) == (1, 0, 0, 1)
    assert leading_monomial(P("a*c + d^2"), DEGREVLEX_ORDER) == (1, 0, 1, 0)
    assert str(DEGREVLEX_ORDER) == "degrevlex(a>b>c>d)"


def test_term_order_validation():
    with pytest.raises(ValueError):
        TermOrder("grlex")
    with pytest.raises(ValueError):
        TermOrder(LEX, ("a", "a", "b", "c"))
    with pytest.raises(ValueError):
        TermOrder(LEX, ("a", "b", "c")).key(U_PRIME_VARS)


def test_degrevlex_groebner_basis(cubic_cone):
    basis = buchberger(cubic_cone, DEGREVLEX_ORDER)
    assert set(basis) == {P("a^2 + b*d"), P("b*c - a*d"), P("a*c + d^2")}
    assert is_groebner(basis, DEGREVLEX_ORDER)
    assert initial_ideal(basis, DEGREVLEX_ORDER).to_text() == ["a^2", "a*c", "b*c"]


def test_lex_groebner_basis(cubic_cone):
    basis = buchberger(cubic_cone, LEX_ORDER)
    assert set(basis) == {P("a^2 + b*d"), P("a*d - b*c"), P("a*c + d^2"), P("b*c^2 + d^3")}
    assert is_groebner(basis, LEX_ORDER)
    J = initial_ideal(basis, LEX_ORDER)
    assert set(J.generators) == {(2, 0, 0, 0), (1, 0, 0, 1), (1, 0, 1, 0), (0, 1, 2, 0)}


def test_degrevlex_basis_is_not_a_lex_basis(cubic_cone):
    basis = buchberger(cubic_cone, DEGREVLEX_ORDER)
    assert not is_groebner(basis, LEX_ORDER)


def test_s_polynomial_reduces_to_zero(cubic_cone):
    basis = buchberger(cubic_cone, DEGREVLEX_ORDER)
    s = s_polynomial(basis[0], basis[1], DEGREVLEX_ORDER)
    assert normal_form(s, basis, DEGREVLEX_ORDER).is_zero


def test_ideal_membership(cubic_cone):
    basis = buchberger(cubic_cone, LEX_ORDER)
    assert ideal_contains(basis, P("b*c^2 + d^3"), LEX_ORDER)
    assert not ideal_contains(basis, P("a"), LEX_ORDER)
    assert ideals_equal(cubic_cone, basis, LEX_ORDER)
    assert not ideals_equal(cubic_cone, [P("a"), P("d")])


@pytest.mark.parametrize("order", [DEGREVLEX_ORDER, LEX_ORDER])
def test_components_of_the_cubic_cone(cubic_cone, order):
    J = initial_ideal(buchberger(cubic_cone, order), order)
    result = multidegree(J)
    assert result.codimension == 2
    assert dict(result.components) == {("a", "b"): 1, ("a", "c"): 2}
    assert result.polynomial == A("6*a1^2 + 9*a1*a2 + 3*a2^2")


REORDERED = [
    TermOrder(DEGREVLEX, ("a", "b", "c", "d")),
    TermOrder(DEGREVLEX, ("d", "c", "b", "a")),
    TermOrder(LEX, ("a", "b", "c", "d")),
    TermOrder(LEX, ("d", "c", "b", "a")),
]


@pytest.mark.parametrize("order", REORDERED, ids=str)
def test_multidegree_does_not_depend_on_the_order(cubic_cone, order):
    basis = buchberger(cubic_cone, order)
    assert is_groebner(basis, order)
    result = multidegree(initial_ideal(basis, order))
    assert result.codimension == 2
    assert result.polynomial == A("6*a1^2 + 9*a1*a2 + 3*a2^2")
    assert sum(m for _, m in result.components) == 3


def test_reversed_degrevlex_moves_the_double_component(cubic_cone):
    order = TermOrder(DEGREVLEX, ("d", "c", "b", "a"))
    J = initial_ideal(buchberger(cubic_cone, order), order)
    assert set(J.generators) == {(0, 1, 0, 1), (0, 0, 0, 2), (0, 1, 1, 0)}
    assert dict(multidegree(J).components) == {("b", "d"): 2, ("c", "d"): 1}


@pytest.mark.parametrize("label", list(OrbitLabel))
@pytest.mark.parametrize("order", REORDERED, ids=str)
def test_oracle_classes_under_reordered_variables(label, order):
    assert orbit_class_oracle(label, order) == ORACLE_CLASSES[label](*MultiPoly.gens(ALPHA_VARS))


def test_monomial_ideal_is_minimalized():
    J = MonomialIdeal(("a", "b"), ((2, 0), (1, 0), (1, 1)))
    assert J.generators == ((1, 0),)
    assert J.contains((3, 5))
    assert not J.contains((0, 5))


def test_multidegree_of_coordinate_ideals():
    assert multidegree(MonomialIdeal(U_PRIME_VARS, ((1, 0, 0, 0),))).polynomial == A("-a1 - a2")
    both = multidegree(MonomialIdeal(U_PRIME_VARS, ((1, 0, 0, 0), (0, 1, 0, 0))))
    assert both.polynomial == A("a1*a2 + a2^2")
    assert both.codimension == 2


def test_multidegree_counts_multiplicity():
    result = multidegree(MonomialIdeal(U_PRIME_VARS, ((3, 0, 1, 0),)))
    assert dict(result.components) == {("a",): 3, ("c",): 1}
    assert result.polynomial == A("-6*a1 - 4*a2")


def test_unit_ideal_has_no_multidegree():
    with pytest.raises(ValueError):
        multidegree(MonomialIdeal(U_PRIME_VARS, ((0, 0, 0, 0),)))


def test_graded_ideal_validation():
    with pytest.raises(InhomogeneityError):
        GradedIdeal((P("a + b"),))
    with pytest.raises(ValueError):
        GradedIdeal((MultiPoly.zero(U_PRIME_VARS),))


def test_discriminant_initial_term():
    disc = orbit_ideal(OrbitLabel.O2).generators[0]
    for order in (DEGREVLEX_ORDER, LEX_ORDER):
        assert leading_monomial(disc, order) == (3, 0, 1, 0)


def test_orbit_ideals():
    assert orbit_ideal(OrbitLabel.O0) is None
    assert orbit_ideal(OrbitLabel.O1) is None
    assert len(orbit_ideal(OrbitLabel.O5).generators) == 4


ORACLE_CLASSES = {
    OrbitLabel.O0: lambda a1, a2: MultiPoly.one(ALPHA_VARS),
    OrbitLabel.O1: lambda a1, a2: -3 * a1 - 2 * a2,
    OrbitLabel.O2: lambda a1, a2: 2 * (3 * a1 + 2 * a2) ** 2,
    OrbitLabel.O3: lambda a1, a2: -3 * (a1 + a2) * (2 * a1 + a2) * (3 * a1 + 2 * a2),
    OrbitLabel.O5: lambda a1, a2: -a2 * (a1 + a2) * (2 * a1 + a2) * (3 * a1 + a2) * (3 * a1 + 2 * a2),
}


@pytest.mark.parametrize("label", list(OrbitLabel))
@pytest.mark.parametrize("order", [DEGREVLEX_ORDER, LEX_ORDER])
def test_oracle_classes(label, order):
    assert orbit_class_oracle(label, order) == ORACLE_CLASSES[label](*MultiPoly.gens(ALPHA_VARS))


def test_oracle_record_json():
    record = orbit_oracle_record(OrbitLabel.O3).to_json()
    assert record["orbit"] == "O3"
    assert record["term_order"] == "degrevlex(a>b>c>d)"
    assert record["codimension"] == 2
    assert record["initial_ideal"] == ["a^2", "a*c", "b*c"]
    assert len(record["groebner_basis"]) == 3
    assert orbit_oracle_record(OrbitLabel.O1).to_json()["groebner_basis"] == []


def test_oracle_details_cover_every_orbit():
    assert [r.label for r in oracle_details(LEX_ORDER)] == list(OrbitLabel)
