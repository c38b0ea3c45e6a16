from fractions import Fraction

import pytest

from exactalg import MultiPoly
from orbits import (
    PRINTED, PRINTED_QUARTIC, PROFILE_DISTINCT, PROFILE_DOUBLE, PROFILE_TRIPLE, PROFILE_ZERO, TENSOR,
    U_PRIME_VARS, BinaryCubic, NotTrialitySymmetricError, OrbitLabel, classify, classify_by_multiplicity,
    classify_report, cubic_from_linear_forms, discriminant, dictionary_consistent, minor_generators,
    minor_matrix, minor_rank, orbit_representative, pin_cubic_dictionary, rank_one_cone_point,
)
from triality import TangentVector, TrialitySymmetricMap, UnsupportedInputError, is_triality_symmetric


@pytest.mark.parametrize("coords,expected", [
    ((1, 0, 0, 0), 0),
    ((1, 0, 0, -1), 1),
    ((0, 1, 1, 0), -27),
])
def test_printed_discriminant_examples(coords, expected):
    assert discriminant(BinaryCubic(*coords, dictionary=PRINTED)) == expected


def test_tensor_discriminant_example():
    assert discriminant(BinaryCubic(1, 0, 0, -1)) == 81


def test_printed_discriminant_is_the_quartic():
    quartic = MultiPoly.parse(PRINTED_QUARTIC, U_PRIME_VARS)
    assert discriminant(BinaryCubic.symbolic(PRINTED)) == quartic


def test_tensor_discriminant_vanishes_on_the_minor_locus():
    a, b, c, d = MultiPoly.gens(U_PRIME_VARS)
    disc = discriminant(BinaryCubic.symbolic(TENSOR))
    assert disc.total_degree == 4
    assert disc.is_homogeneous()
    assert minor_generators(BinaryCubic.symbolic()) == (a * a + b * d, a * d - b * c, -a * c - d * d)


def test_minor_matrix():
    f = BinaryCubic(a=1, b=2, c=3, d=4)
    assert minor_matrix(f).to_json() == [["1", "-4", "3"], ["2", "1", "4"]]
    assert minor_rank(BinaryCubic(b=1)) == 1
    assert minor_rank(BinaryCubic()) == 0
    with pytest.raises(UnsupportedInputError):
        minor_matrix(BinaryCubic.symbolic())


@pytest.mark.parametrize("kwargs,label", [
    ({"z": 1}, OrbitLabel.O0),
    ({"z": 1, "a": 7}, OrbitLabel.O0),
    ({"c": 1, "b": 1}, OrbitLabel.O1),
    ({"a": 1}, OrbitLabel.O2),
    ({"b": 1}, OrbitLabel.O3),
    ({"c": -1}, OrbitLabel.O3),
    ({}, OrbitLabel.O5),
])
def test_classify_examples(kwargs, label):
    assert classify(TrialitySymmetricMap(**kwargs)) == label
    assert classify(TrialitySymmetricMap(**kwargs).embed()) == label


@pytest.mark.parametrize("label", list(OrbitLabel))
def test_representatives_classify_to_their_orbit(label):
    rep = orbit_representative(label)
    assert is_triality_symmetric(rep) is not None
    assert classify(rep) == label


def test_rank_one_cone_lies_in_O3():
    for b, lam in [(1, 1), (2, -3), (Fraction(1, 2), 5)]:
        assert classify(rank_one_cone_point(b, lam)) == OrbitLabel.O3


@pytest.mark.parametrize("form,profile", [
    ((0, 1, 1, 0), PROFILE_DISTINCT),
    ((0, 0, 1, 0), PROFILE_DOUBLE),
    ((1, 0, 0, 0), PROFILE_TRIPLE),
    ((1, 3, 3, 1), PROFILE_TRIPLE),
    ((1, 0, 1, 0), PROFILE_DISTINCT),
    ((0, 0, 0, 0), PROFILE_ZERO),
])
def test_root_profiles(form, profile):
    assert classify_by_multiplicity(BinaryCubic.from_form(form)) == profile


def test_cubic_from_linear_forms():
    assert cubic_from_linear_forms([(1, 0)] * 3) == BinaryCubic(c=-1)
    f = cubic_from_linear_forms([(1, 1), (1, 1), (2, -1)])
    assert classify_by_multiplicity(f) == PROFILE_DOUBLE
    assert discriminant(f) == 0
    with pytest.raises(ValueError):
        cubic_from_linear_forms([(1, 0)] * 2)


def test_form_inverts_from_form():
    f = BinaryCubic(a=1, b=2, c=3, d=4)
    assert BinaryCubic.from_form(f.form()) == f
    g = BinaryCubic(a=1, b=2, c=3, d=4, dictionary=PRINTED)
    assert g.form() == (-3, -4, 1, 2)


def test_printed_dictionary_misreads_the_cone():
    cone = rank_one_cone_point(1, 1)
    assert classify_by_multiplicity(BinaryCubic.from_map(cone, PRINTED)) == PROFILE_DISTINCT
    assert classify_by_multiplicity(BinaryCubic.from_map(cone, TENSOR)) == PROFILE_TRIPLE


def test_cubic_dictionary_is_pinned():
    points = [rank_one_cone_point(1, lam) for lam in (1, 2, -1)]
    assert dictionary_consistent(TENSOR, points)
    assert not dictionary_consistent(PRINTED, points)
    assert pin_cubic_dictionary(points) == TENSOR


def test_unknown_dictionary():
    with pytest.raises(ValueError):
        BinaryCubic(dictionary="monic")


def test_non_symmetric_input():
    with pytest.raises(NotTrialitySymmetricError):
        classify(TangentVector(b1=1))


def test_symbolic_input_is_refused(symbolic_map):
    with pytest.raises(UnsupportedInputError):
        classify(symbolic_map)


@pytest.mark.parametrize("text,label", [
    ("O3", OrbitLabel.O3),
    ("o5", OrbitLabel.O5),
    ("O₂", OrbitLabel.O2),
    ("1", OrbitLabel.O1),
])
def test_orbit_label_parse(text, label):
    assert OrbitLabel.parse(text) == label


def test_orbit_label_parse_rejects():
    with pytest.raises(ValueError):
        OrbitLabel.parse("O4")


def test_closure_order():
    assert OrbitLabel.O0.closure_contains(OrbitLabel.O5)
    assert OrbitLabel.O1.closure_contains(OrbitLabel.O3)
    assert not OrbitLabel.O3.closure_contains(OrbitLabel.O2)
    assert [o.codimension for o in OrbitLabel] == [0, 1, 2, 3, 5]


def test_classify_report():
    report = classify_report(TrialitySymmetricMap(b=1))
    assert report == {
        "orbit": "O3",
        "codimension": 3,
        "morphism_rank": 1,
        "discriminant": "0",
        "minor_rank": 1,
        "root_profile": [3],
    }
    assert classify_report(TrialitySymmetricMap(z=1))["morphism_rank"] == 2
