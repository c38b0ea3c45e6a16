#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
orbits.py
=========

Orbit classification of triality-symmetric tangent vectors under the Borel
subgroup B of G2.

A symmetric map (a, b, c, d, z) with z = 0 is a binary cubic.  Two
dictionaries are supported:

    tensor   f = -c x^3 - 3d x^2 y + 3a x y^2 + b y^3      (default)
    printed  f = -c x^3 -  d x^2 y +  a x y^2 + b y^3

Only the tensor dictionary matches the minor-rank strata: its rank-one cone
b (1, l, -l^2, -l^3) maps to b (l x + y)^3.  dictionary_consistent() checks
this on sample points; the printed dictionary fails it.

Orbits (codimension in U, closures nested O0 > O1 > O2 > O3 > O5):

    O0   z != 0
    O1   z = 0, disc(f) != 0                 three distinct roots
    O2   z = 0, disc(f) = 0, minor rank 2     double root
    O3   z = 0, f != 0, minor rank <= 1       triple root
    O5   (a, b, c, d, z) = 0
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence, Union

from exactalg import (
    ALPHA, MultiPoly, RationalMatrix, WeightVector,
    as_rational, lift_scalars, matrix_rank, univariate_gcd,
)
from triality import (
    TangentVector, TrialitySymmetricMap, UnsupportedInputError,
    is_triality_symmetric, morphism_rank,
)

Scalar = Union[Fraction, MultiPoly]

U_PRIME_VARS = ("a", "b", "c", "d")
BINARY_VARS = ("x", "y")

# B-weights of the coordinates (alpha basis)
COORDINATE_WEIGHTS = {
    "b": WeightVector((0, -1), ALPHA),
    "a": WeightVector((-1, -1), ALPHA),
    "d": WeightVector((-2, -1), ALPHA),
    "c": WeightVector((-3, -1), ALPHA),
    "z": WeightVector((-3, -2), ALPHA),
}
NORMAL_WEIGHT = COORDINATE_WEIGHTS["z"]

TENSOR = "tensor"
PRINTED = "printed"
DICTIONARY_SCALE = {TENSOR: 3, PRINTED: 1}

PRINTED_QUARTIC = "a^2*d^2 + 4*a^3*c + 4*b*d^3 - 27*b^2*c^2 + 18*a*b*c*d"

PROFILE_DISTINCT = (1, 1, 1)
PROFILE_DOUBLE = (2, 1)
PROFILE_TRIPLE = (3,)
PROFILE_ZERO = ()


class NotTrialitySymmetricError(ValueError):
    pass


class OrbitLabel(Enum):
    O0 = 0
    O1 = 1
    O2 = 2
    O3 = 3
    O5 = 5

    @property
    def codimension(self) -> int:
        return self.value

    def closure_contains(self, other: "OrbitLabel") -> bool:
        """Whether ``other`` lies in the closure of this orbit."""
        return self.value <= other.value

    @classmethod
    def parse(cls, text: str) -> "OrbitLabel":
        key = str(text).strip().upper().translate(str.maketrans("₀₁₂₃₅", "01235"))
        if key.isdigit():
            key = "O" + key
        try:
            return cls[key]
        except KeyError:
            raise ValueError(f"unknown orbit {text!r}; expected one of {[o.name for o in cls]}") from None

    def __str__(self) -> str:
        return self.name


# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class BinaryCubic:
    a: Scalar = 0
    b: Scalar = 0
    c: Scalar = 0
    d: Scalar = 0
    dictionary: str = TENSOR

    def __post_init__(self):
        if self.dictionary not in DICTIONARY_SCALE:
            raise ValueError(f"dictionary must be one of {sorted(DICTIONARY_SCALE)}, got {self.dictionary!r}")
        values, _ = lift_scalars([self.a, self.b, self.c, self.d])
        for name, v in zip(U_PRIME_VARS, values):
            object.__setattr__(self, name, v)

    @classmethod
    def from_map(cls, m: TrialitySymmetricMap, dictionary: str = TENSOR) -> "BinaryCubic":
        return cls(m.a, m.b, m.c, m.d, dictionary)

    @classmethod
    def symbolic(cls, dictionary: str = TENSOR, variables: Sequence[str] = U_PRIME_VARS) -> "BinaryCubic":
        return cls(*(MultiPoly.var(n, variables) for n in U_PRIME_VARS), dictionary=dictionary)

    @classmethod
    def from_form(cls, coeffs: Sequence, dictionary: str = TENSOR) -> "BinaryCubic":
        """Inverse of form(): coefficients of x^3, x^2 y, x y^2, y^3."""
        p0, p1, p2, p3 = (as_rational(c) for c in coeffs)
        k = DICTIONARY_SCALE[dictionary]
        return cls(a=p2 / k, b=p3, c=-p0, d=-p1 / k, dictionary=dictionary)

    def form(self) -> tuple:
        k = DICTIONARY_SCALE[self.dictionary]
        return (-self.c, -k * self.d, k * self.a, self.b)

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for x in (self.a, self.b, self.c, self.d))

    def polynomial(self) -> MultiPoly:
        exps = ((3, 0), (2, 1), (1, 2), (0, 3))
        return MultiPoly(BINARY_VARS, {e: as_rational(p) for e, p in zip(exps, self.form())})


def cubic_from_linear_forms(factors: Sequence[Sequence], dictionary: str = TENSOR) -> BinaryCubic:
    """The cubic prod (l_i x + m_i y) for three pairs (l_i, m_i)."""
    if len(factors) != 3:
        raise ValueError("a binary cubic is a product of three linear forms")
    coeffs = [Fraction(1)]
    for lam, mu in factors:
        lam, mu = as_rational(lam), as_rational(mu)
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k] += c * lam
            nxt[k + 1] += c * mu
        coeffs = nxt
    return BinaryCubic.from_form(coeffs, dictionary)


def rank_one_cone_point(b, lam) -> TrialitySymmetricMap:
    """b (1, l, -l^2, -l^3) in (b, a, d, c) coordinates, with z = 0."""
    b, lam = as_rational(b), as_rational(lam)
    return TrialitySymmetricMap(a=b * lam, b=b, c=-b * lam ** 3, d=-b * lam ** 2)


# ---------------------------------------------------------------------------
def discriminant(f: BinaryCubic) -> Scalar:
    """p1^2 p2^2 - 4 p0 p2^3 - 4 p1^3 p3 - 27 p0^2 p3^2 + 18 p0 p1 p2 p3."""
    p0, p1, p2, p3 = f.form()
    return (p1 * p1 * p2 * p2 - 4 * p0 * p2 ** 3 - 4 * p1 ** 3 * p3
            - 27 * p0 * p0 * p3 * p3 + 18 * p0 * p1 * p2 * p3)


def minor_rows(f: BinaryCubic) -> tuple[tuple, tuple]:
    return ((f.a, -f.d, f.c), (f.b, f.a, f.d))


def minor_matrix(f: BinaryCubic) -> RationalMatrix:
    if isinstance(f.a, MultiPoly):
        raise UnsupportedInputError("the minor matrix rank needs rational entries")
    return RationalMatrix.from_rows(minor_rows(f))


def minor_rank(f: BinaryCubic) -> int:
    return matrix_rank(minor_matrix(f))


def minor_generators(f: BinaryCubic) -> tuple:
    """The 2x2 minors of [[a, -d, c], [b, a, d]]: a^2 + bd, ad - bc, -ac - d^2."""
    (r0, r1, r2), (s0, s1, s2) = minor_rows(f)
    return (r0 * s1 - r1 * s0, r0 * s2 - r2 * s0, r1 * s2 - r2 * s1)


# -- root multiplicities ------------------------------------------------------
def _y_order(form: Sequence[Fraction]) -> int:
    k = 0
    while k < len(form) and form[k] == 0:
        k += 1
    return k


def _form_gcd(F: Sequence, G: Sequence) -> list[Fraction]:
    """
    gcd of binary forms given by coefficients of x^n, x^(n-1) y, ..., y^n:
    the power of y comes from the leading zeros, the rest from the gcd of the
    dehomogenized polynomials in x.
    """
    F, G = [as_rational(c) for c in F], [as_rational(c) for c in G]
    if not any(F):
        return G if any(G) else []
    if not any(G):
        return F
    k = min(_y_order(F), _y_order(G))
    return [Fraction(0)] * k + univariate_gcd(F, G)


def classify_by_multiplicity(f: BinaryCubic) -> tuple[int, ...]:
    """Root multiplicity profile over the algebraic closure: (1,1,1), (2,1), (3,) or () for f = 0."""
    p0, p1, p2, p3 = (as_rational(c) for c in f.form())
    if not any((p0, p1, p2, p3)):
        return PROFILE_ZERO
    fx = [3 * p0, 2 * p1, p2]
    fy = [p1, 2 * p2, 3 * p3]
    common = _form_gcd(_form_gcd([p0, p1, p2, p3], fx), fy)
    return {0: PROFILE_DISTINCT, 1: PROFILE_DOUBLE, 2: PROFILE_TRIPLE}[len(common) - 1]


PROFILE_OF_ORBIT = {
    OrbitLabel.O1: PROFILE_DISTINCT,
    OrbitLabel.O2: PROFILE_DOUBLE,
    OrbitLabel.O3: PROFILE_TRIPLE,
    OrbitLabel.O5: PROFILE_ZERO,
}


# ---------------------------------------------------------------------------
def _symmetric_map(v) -> TrialitySymmetricMap:
    if isinstance(v, TrialitySymmetricMap):
        m = v
    else:
        m = is_triality_symmetric(v)
        if m is None:
            raise NotTrialitySymmetricError("the tangent vector is not fixed by the S3 action")
    if m.ring is not None:
        raise UnsupportedInputError("classification needs rational coordinates")
    return m


def classify(v: TangentVector | TrialitySymmetricMap) -> OrbitLabel:
    m = _symmetric_map(v)
    if m.z != 0:
        return OrbitLabel.O0
    f = BinaryCubic.from_map(m)
    if discriminant(f) != 0:
        return OrbitLabel.O1
    if f.is_zero:
        return OrbitLabel.O5
    return OrbitLabel.O2 if minor_rank(f) == 2 else OrbitLabel.O3


REPRESENTATIVES = {
    OrbitLabel.O0: {"z": 1},
    OrbitLabel.O1: {"c": 1, "b": 1},
    OrbitLabel.O2: {"a": 1},
    OrbitLabel.O3: {"b": 1},
    OrbitLabel.O5: {},
}


def orbit_representative(label: OrbitLabel) -> TangentVector:
    return TrialitySymmetricMap(**REPRESENTATIVES[label]).embed()


def classify_report(v: TangentVector | TrialitySymmetricMap) -> dict:
    m = _symmetric_map(v)
    f = BinaryCubic.from_map(m)
    label = classify(m)
    return {
        "orbit": label.name,
        "codimension": label.codimension,
        "morphism_rank": morphism_rank(m.embed()),
        "discriminant": str(discriminant(f)),
        "minor_rank": minor_rank(f),
        "root_profile": list(classify_by_multiplicity(f)),
    }


def dictionary_consistent(dictionary: str, points: Sequence[TrialitySymmetricMap]) -> bool:
    """Points of the rank-one cone must read as cubics with a triple root."""
    return all(classify_by_multiplicity(BinaryCubic.from_map(m, dictionary)) == PROFILE_TRIPLE for m in points)


def pin_cubic_dictionary(points: Sequence[TrialitySymmetricMap]) -> str:
    matches = [name for name in DICTIONARY_SCALE if dictionary_consistent(name, points)]
    if len(matches) != 1:
        raise ValueError(f"expected exactly one consistent cubic dictionary, found {matches}")
    return matches[0]
