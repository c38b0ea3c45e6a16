from fractions import Fraction

import pytest

from classes import (
    LOCUS_ORBITS, alpha_t_consistent, chern_degrees, dual_chern, evaluate_locus, locus_class, locus_from_orbit,
    orbit_class, orbit_class_chern, orbit_class_in_roots,
)
from exactalg import ALPHA_TO_T, CHERN_VARS, T, T_VARS, MultiPoly, change_basis, from_chern
from multidegree import orbit_class_oracle
from orbits import OrbitLabel


def test_class_texts_in_t_basis():
    assert str(orbit_class(OrbitLabel.O1, T)) == "-t1 - t2"
    assert str(orbit_class(OrbitLabel.O2, T)) == "2*t1^2 + 4*t1*t2 + 2*t2^2"
    assert str(orbit_class(OrbitLabel.O3, T)) == "-3*t1^2*t2 - 3*t1*t2^2"
    assert orbit_class(OrbitLabel.O0, T) == 1


def test_normal_weight_in_alpha_basis():
    assert str(orbit_class(OrbitLabel.O1)) == "-3*a1 - 2*a2"


@pytest.mark.parametrize("label", list(OrbitLabel))
def test_alpha_and_t_forms_agree(label):
    assert alpha_t_consistent(label)
    assert change_basis(orbit_class(label), ALPHA_TO_T) == orbit_class(label, T)


@pytest.mark.parametrize("label", list(OrbitLabel))
def test_closed_forms_match_the_groebner_oracle(label):
    assert orbit_class(label) == orbit_class_oracle(label)


@pytest.mark.parametrize("label", list(OrbitLabel))
def test_class_degree_is_codimension(label):
    cls = orbit_class(label, T)
    assert cls.total_degree == label.codimension
    assert cls.is_homogeneous()


def test_unknown_basis():
    with pytest.raises(ValueError):
        orbit_class(OrbitLabel.O3, "chern")


def test_chern_forms():
    c2, c1 = MultiPoly.gens(CHERN_VARS)
    assert orbit_class_chern(OrbitLabel.O3) == 3 * c2 * c1
    assert str(orbit_class_chern(OrbitLabel.O3)) == "3*c2*c1"
    assert orbit_class_chern(OrbitLabel.O5) == c2 * c1 * (9 * c2 - 2 * c1 ** 2)


@pytest.mark.parametrize("r", [0, 1, 2])
def test_locus_classes_come_from_orbits(r):
    locus = locus_class(r)
    assert locus_from_orbit(r) == locus.root_form
    assert orbit_class_chern(LOCUS_ORBITS[r]) == locus.chern_form
    assert locus.root_form.total_degree == locus.expected_codim
    assert locus.root_form.is_homogeneous()
    assert chern_degrees(locus.chern_form) == {locus.expected_codim}
    assert from_chern(locus.chern_form) == locus.root_form


@pytest.mark.parametrize("r,codim", [(0, 5), (1, 3), (2, 0)])
def test_expected_codimensions(r, codim):
    assert locus_class(r).expected_codim == codim


def test_chern_degrees_weight_c2_twice():
    c2, c1 = MultiPoly.gens(CHERN_VARS)
    assert chern_degrees(c2 * c1) == {3}
    assert chern_degrees(c1 ** 4 + c2) == {4, 2}
    assert chern_degrees(MultiPoly.zero(CHERN_VARS)) == set()


def test_locus_json():
    assert locus_class(1).to_json() == {
        "r": 1,
        "orbit": "O3",
        "expected_codim": 3,
        "root_form": "3*x1^2*x2 + 3*x1*x2^2",
        "chern_form": "3*c2*c1",
    }
    assert locus_class(2).to_json()["chern_form"] == "1"


def test_roots_pull_back_from_t():
    t1, t2 = MultiPoly.gens(T_VARS)
    pulled = orbit_class_in_roots(OrbitLabel.O3)
    assert pulled.substitute({"x1": -t1, "x2": -t2}, T_VARS) == orbit_class(OrbitLabel.O3, T)


@pytest.mark.parametrize("r,c1,c2,expected", [
    (2, 1, 1, 1),
    (1, 1, 1, 3),
    (0, 1, 1, 7),
    (1, 2, Fraction(1, 2), 3),
    (0, 0, 5, 0),
])
def test_evaluate_locus(r, c1, c2, expected):
    assert evaluate_locus(r, c1, c2) == expected


def test_dual_bundle():
    c1, c2 = dual_chern(1, 1)
    assert (c1, c2) == (-1, 1)
    assert evaluate_locus(1, c1, c2) == -3


def test_bad_locus_rank():
    with pytest.raises(ValueError):
        locus_class(3)
    with pytest.raises(ValueError):
        locus_from_orbit(-1)
