#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
classes.py
==========

Closed forms of the B-equivariant orbit-closure classes [O-bar] in H_T(U) and
of the degeneracy-locus classes P_r of triality-symmetric morphisms
phi: E -> End(E) + wedge^2 E*, rank(phi) <= r.

P_r is [O-bar] for the orbit of matching codimension (O0, O3, O5 for
r = 2, 1, 0) after t_i -> -x_i, where x1, x2 are the Chern roots of E*.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from exactalg import (
    ALPHA, ALPHA_TO_T, ALPHA_VARS, CHERN_VARS, T, T_VARS, X_VARS,
    MultiPoly, change_basis, to_chern,
)
from orbits import OrbitLabel

LOCUS_ORBITS = {2: OrbitLabel.O0, 1: OrbitLabel.O3, 0: OrbitLabel.O5}
BASES = (ALPHA, T)
CHERN_DEGREES = {"c1": 1, "c2": 2}


def _alpha_forms() -> dict[OrbitLabel, MultiPoly]:
    a1, a2 = MultiPoly.gens(ALPHA_VARS)
    normal = -3 * a1 - 2 * a2
    return {
        OrbitLabel.O0: MultiPoly.one(ALPHA_VARS),
        OrbitLabel.O1: normal,
        OrbitLabel.O2: 2 * normal ** 2,
        OrbitLabel.O3: 3 * (a1 + a2) * (2 * a1 + a2) * normal,
        OrbitLabel.O5: a2 * (a1 + a2) * (2 * a1 + a2) * (3 * a1 + a2) * normal,
    }


def _t_forms() -> dict[OrbitLabel, MultiPoly]:
    t1, t2 = MultiPoly.gens(T_VARS)
    return {
        OrbitLabel.O0: MultiPoly.one(T_VARS),
        OrbitLabel.O1: -t1 - t2,
        OrbitLabel.O2: 2 * (t1 + t2) ** 2,
        OrbitLabel.O3: -3 * t1 * t2 * (t1 + t2),
        OrbitLabel.O5: t1 * t2 * (t1 + t2) * (2 * t1 - t2) * (t1 - 2 * t2),
    }


ORBIT_CLASSES_ALPHA = _alpha_forms()
ORBIT_CLASSES_T = _t_forms()


def _locus_root_forms() -> dict[int, MultiPoly]:
    x1, x2 = MultiPoly.gens(X_VARS)
    return {
        2: MultiPoly.one(X_VARS),
        1: 3 * x1 * x2 * (x1 + x2),
        0: x1 * x2 * (x1 + x2) * (2 * x1 - x2) * (2 * x2 - x1),
    }


def _locus_chern_forms() -> dict[int, MultiPoly]:
    c2, c1 = MultiPoly.gens(CHERN_VARS)
    return {
        2: MultiPoly.one(CHERN_VARS),
        1: 3 * c2 * c1,
        0: c2 * c1 * (9 * c2 - 2 * c1 ** 2),
    }


LOCUS_ROOT_FORMS = _locus_root_forms()
LOCUS_CHERN_FORMS = _locus_chern_forms()


def orbit_class(label: OrbitLabel, basis: str = ALPHA) -> MultiPoly:
    if basis == ALPHA:
        return ORBIT_CLASSES_ALPHA[label]
    if basis == T:
        return ORBIT_CLASSES_T[label]
    raise ValueError(f"basis must be {ALPHA!r} or {T!r}, got {basis!r}")


def orbit_class_in_roots(label: OrbitLabel) -> MultiPoly:
    """[O-bar] pulled back along t_i -> -x_i."""
    x1, x2 = MultiPoly.gens(X_VARS)
    return orbit_class(label, T).substitute({"t1": -x1, "t2": -x2}, X_VARS)


def orbit_class_chern(label: OrbitLabel) -> MultiPoly:
    return to_chern(orbit_class_in_roots(label))


def chern_degrees(p: MultiPoly) -> set[int]:
    """Cohomological degrees of the terms of p, with deg c1 = 1 and deg c2 = 2."""
    weights = [CHERN_DEGREES[name] for name in p.variables]
    return {sum(w * e for w, e in zip(weights, exp)) for exp, _ in p.iter_terms()}


def alpha_t_consistent(label: OrbitLabel) -> bool:
    return change_basis(orbit_class(label, ALPHA), ALPHA_TO_T) == orbit_class(label, T)


@dataclass(frozen=True)
class LocusClass:
    r: int
    root_form: MultiPoly
    chern_form: MultiPoly

    @property
    def orbit(self) -> OrbitLabel:
        return LOCUS_ORBITS[self.r]

    @property
    def expected_codim(self) -> int:
        return self.orbit.codimension

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "orbit": self.orbit.name,
            "expected_codim": self.expected_codim,
            "root_form": str(self.root_form),
            "chern_form": str(self.chern_form),
        }


def _check_r(r: int) -> None:
    if r not in LOCUS_ORBITS:
        raise ValueError(f"r must be 0, 1 or 2, got {r!r}")


def locus_class(r: int) -> LocusClass:
    _check_r(r)
    return LocusClass(r, LOCUS_ROOT_FORMS[r], LOCUS_CHERN_FORMS[r])


def locus_from_orbit(r: int) -> MultiPoly:
    _check_r(r)
    return orbit_class_in_roots(LOCUS_ORBITS[r])


def dual_chern(c1, c2) -> tuple:
    """Chern classes of E* from those of E: (c1, c2) -> (-c1, c2)."""
    return (-c1, c2)


def evaluate_locus(r: int, c1, c2) -> Fraction:
    """P_r at given Chern numbers of E*."""
    return locus_class(r).chern_form.evaluate({"c1": c1, "c2": c2})
