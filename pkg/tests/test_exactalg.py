from fractions import Fraction

import pytest
import sympy as sp

from exactalg import (
    ALPHA, ALPHA_TO_T, ALPHA_VARS, CHERN_VARS, T, T_TO_ALPHA, T_VARS, X_VARS,
    BasisMismatchError, InhomogeneityError, MultiPoly, RationalMatrix, SymmetryError, VariableSetError,
    WeightVector, as_rational, change_basis, from_chern, matrix_rank, nullspace, substitute, to_chern,
    univariate_gcd, weight_of,
)

U_PRIME = ("a", "b", "c", "d")
WEIGHTS = {
    "b": WeightVector((0, -1)),
    "a": WeightVector((-1, -1)),
    "d": WeightVector((-2, -1)),
    "c": WeightVector((-3, -1)),
}


def P(text, variables):
    return MultiPoly.parse(text, variables)


@pytest.mark.parametrize("text,direction,expected,target", [
    ("a1", ALPHA_TO_T, "t1 - t2", T_VARS),
    ("t1", T_TO_ALPHA, "2*a1 + a2", ALPHA_VARS),
    ("a1 + a2", ALPHA_TO_T, "t2", T_VARS),
])
def test_change_basis_examples(text, direction, expected, target):
    source = ALPHA_VARS if direction == ALPHA_TO_T else T_VARS
    assert change_basis(P(text, source), direction) == P(expected, target)


def test_change_basis_refuses_wrong_ring():
    with pytest.raises(BasisMismatchError):
        change_basis(P("t1", T_VARS), ALPHA_TO_T)


def random_poly(rng, variables, terms=4, max_degree=3):
    exps = rng.integers(0, max_degree + 1, size=(terms, len(variables)))
    coeffs = rng.integers(-6, 7, size=terms)
    out = MultiPoly.zero(variables)
    for exp, coeff in zip(exps, coeffs):
        out = out + MultiPoly.monomial(tuple(int(e) for e in exp), variables, int(coeff))
    return out


def test_change_basis_is_invertible():
    p = P("3*a1^2*a2 - a2^3 + 1/2*a1", ALPHA_VARS)
    assert change_basis(change_basis(p, ALPHA_TO_T), T_TO_ALPHA) == p


def test_change_basis_round_trips_random_polynomials(rng):
    for _ in range(100):
        p = random_poly(rng, T_VARS)
        there = change_basis(p, T_TO_ALPHA)
        assert there.variables == ALPHA_VARS
        assert change_basis(there, ALPHA_TO_T) == p


def test_ring_axioms_on_random_polynomials(rng):
    for _ in range(30):
        f, g, h = (random_poly(rng, U_PRIME, terms=3, max_degree=2) for _ in range(3))
        assert f + g == g + f
        assert f * g == g * f
        assert (f + g) + h == f + (g + h)
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f - f == MultiPoly.zero(U_PRIME)
        assert f * MultiPoly.one(U_PRIME) == f


def test_products_agree_with_sympy(rng):
    for _ in range(10):
        f, g = random_poly(rng, U_PRIME), random_poly(rng, U_PRIME)
        assert MultiPoly.from_sympy(sp.expand(f.to_sympy() * g.to_sympy()), U_PRIME) == f * g


def test_to_chern_examples():
    c2, c1 = MultiPoly.gens(CHERN_VARS)
    x1, x2 = MultiPoly.gens(X_VARS)
    assert to_chern(x1 + x2) == c1
    assert to_chern(3 * x1 * x2 * (x1 + x2)) == 3 * c2 * c1
    p0 = x1 * x2 * (x1 + x2) * (2 * x1 - x2) * (-x1 + 2 * x2)
    assert to_chern(p0) == c2 * c1 * (9 * c2 - 2 * c1 ** 2)
    assert from_chern(to_chern(p0)) == p0


def test_to_chern_rejects_asymmetric():
    with pytest.raises(SymmetryError):
        to_chern(P("x1", X_VARS))


def test_chern_text_prints_c2_first():
    c2, c1 = MultiPoly.gens(CHERN_VARS)
    assert str(3 * c2 * c1) == "3*c2*c1"


def test_weight_of_examples():
    a, b, c, d = MultiPoly.gens(U_PRIME)
    assert weight_of(a * a + b * d, WEIGHTS) == WeightVector((-2, -2))
    quartic = a * a * d * d + 4 * a ** 3 * c + 4 * b * d ** 3 - 27 * b * b * c * c + 18 * a * b * c * d
    assert weight_of(quartic, WEIGHTS) == WeightVector((-6, -4))
    with pytest.raises(InhomogeneityError):
        weight_of(a + b, WEIGHTS)


def test_weight_of_zero_polynomial():
    with pytest.raises(InhomogeneityError):
        weight_of(MultiPoly.zero(U_PRIME), WEIGHTS)


def test_substitute_examples():
    x1, x2 = MultiPoly.gens(X_VARS)
    t1, t2 = MultiPoly.gens(T_VARS)
    o3 = -3 * t1 * t2 * (t1 + t2)
    p1 = 3 * x1 * x2 * (x1 + x2)
    assert substitute(o3, {"t1": -x1, "t2": -x2}) == p1
    assert substitute(p1, {"x1": -t1, "x2": -t2}) == o3
    assert substitute(o3, {}) == o3


def test_canonical_text_is_grlex_descending():
    p = P("-3*t1*t2^2 - 3*t1^2*t2", T_VARS)
    assert str(p) == "-3*t1^2*t2 - 3*t1*t2^2"
    assert P(str(p), T_VARS) == p
    assert str(P("1/2*a1 - 2", ALPHA_VARS)) == "1/2*a1 - 2"
    assert str(MultiPoly.zero(T_VARS)) == "0"


def test_parse_rejects_unknown_variable():
    with pytest.raises(VariableSetError):
        P("t3", T_VARS)


def test_mixed_variable_sets_raise():
    with pytest.raises(VariableSetError):
        MultiPoly.var("t1", T_VARS) + MultiPoly.var("a1", ALPHA_VARS)


def test_polynomial_equality_with_rationals():
    assert MultiPoly.constant(Fraction(3, 2), T_VARS) == Fraction(3, 2)
    assert MultiPoly.zero(T_VARS) == 0
    assert MultiPoly.var("t1", T_VARS) != 1


def test_as_rational():
    assert as_rational("-3/2") == Fraction(-3, 2)
    assert as_rational("−1") == -1
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(ValueError):
        as_rational("1.5")
    with pytest.raises(ValueError):
        as_rational("1/0")


def test_weight_vectors():
    a1 = WeightVector((1, 0), ALPHA)
    assert a1.to_basis(T) == WeightVector((1, -1), T)
    assert WeightVector((1, 0), T).to_basis(ALPHA) == WeightVector((2, 1), ALPHA)
    assert 3 * a1 + WeightVector((0, 1)) == WeightVector((3, 1))
    with pytest.raises(BasisMismatchError):
        a1 == WeightVector((1, 0), T)


@pytest.mark.parametrize("rows,rank", [
    ([[1, 0, 0], [0, 1, 0]], 2),
    ([[0, 0, -1], [0, 0, 0]], 1),
    ([[0] * 6, [0] * 6], 0),
    ([["1/2", 1, 3], [1, 2, 6]], 1),
])
def test_matrix_rank(rows, rank):
    assert matrix_rank(RationalMatrix.from_rows(rows)) == rank


def test_matrix_rank_agrees_with_sympy(rng):
    for _ in range(20):
        rows = rng.integers(-2, 3, size=(3, 5)).tolist()
        assert matrix_rank(RationalMatrix.from_rows(rows)) == sp.Matrix(rows).rank()


def test_nullspace():
    m = RationalMatrix.from_rows([[1, 1, 0], [0, 0, 1]])
    basis = nullspace(m)
    assert basis == [(Fraction(-1), Fraction(1), Fraction(0))]


def test_univariate_gcd():
    assert univariate_gcd([1, 0, -1], [2, -2]) == [1, -1]
    assert univariate_gcd([1, 0, 0], [3, 0]) == [1, 0]
    assert univariate_gcd([0], [0]) == []


def test_sympy_conversion():
    p = P("3*t1^2*t2 - 1/2*t2 + 4", T_VARS)
    assert MultiPoly.from_sympy(p.to_sympy(), T_VARS) == p


def test_evaluate():
    c2, c1 = MultiPoly.gens(CHERN_VARS)
    assert (c2 * c1 * (9 * c2 - 2 * c1 ** 2)).evaluate({"c1": 1, "c2": 1}) == 7
    with pytest.raises(VariableSetError):
        c1.evaluate({"c2": 1})
