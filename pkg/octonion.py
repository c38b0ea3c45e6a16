#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
octonion.py
===========

The split octonion algebra C = E + End(E) + E* for a rank-2 space E with basis
v1, v2, written in the fixed basis

    v1, v2 (E)   v3 = v2*(x)v1, v4 = v1*(x)v1, v5 = v2*(x)v2, v6 = v1*(x)v2   v7 = v2*, v8 = v1*

An element with coordinates (a1..a8) has E-part (a1, a2), endomorphism
[[a4, a3], [a6, a5]] (column j is the image of v_j) and functional
a7 v2* + a8 v1*.  The product is

    (x, xi, f)(y, eta, g) = (eta x + bar(xi) y,
                             bar(g.x) + xi eta + f.y,
                             g xi + f bar(eta))

where g.x is the endomorphism v -> g(v) x and bar(xi) = Tr(xi) e - xi.  The
norm is det(xi) - f(x) and the identity is e = v4 + v5.  Scalars are Fractions
or MultiPoly values over one ring, so the same code serves numeric checks and
symbolic identities in 16 variables.

The maximal torus acts on v1..v8 by the characters

    z1, z2, z1/z2, 1, 1, z2/z1, 1/z2, 1/z1
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence, Union

from exactalg import MultiPoly, RationalMatrix, ScalarRingError, T, WeightVector, as_rational, lift_scalars

Scalar = Union[Fraction, MultiPoly]

DIM = 8
IDENTITY_COORDS = (0, 0, 0, 1, 1, 0, 0, 0)
BASIS_EXPONENTS = ((1, 0), (0, 1), (1, -1), (0, 0), (0, 0), (-1, 1), (0, -1), (-1, 0))


class TorusError(ValueError):
    pass


# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class TorusCharacter:
    """Formal scalar z1^n1 * z2^n2."""

    exponents: tuple[int, int]

    def __mul__(self, other: "TorusCharacter") -> "TorusCharacter":
        return TorusCharacter((self.exponents[0] + other.exponents[0], self.exponents[1] + other.exponents[1]))

    def evaluate(self, z1, z2) -> Fraction:
        z1, z2 = as_rational(z1), as_rational(z2)
        if not z1 or not z2:
            raise TorusError("torus parameters must be nonzero")
        return z1 ** self.exponents[0] * z2 ** self.exponents[1]

    def as_weight(self) -> WeightVector:
        return WeightVector(self.exponents, T)


BASIS_CHARACTERS = tuple(TorusCharacter(e) for e in BASIS_EXPONENTS)


# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class OctonionElement:
    coords: tuple
    ring: tuple[str, ...] | None = field(init=False, compare=False)

    def __post_init__(self):
        if len(self.coords) != DIM:
            raise ValueError(f"an octonion has {DIM} coordinates, got {len(self.coords)}")
        coords, ring = lift_scalars(self.coords)
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "ring", ring)

    @classmethod
    def basis(cls, i: int, ring: Sequence[str] | None = None) -> "OctonionElement":
        """v_i for i in 1..8."""
        if not 1 <= i <= DIM:
            raise IndexError(f"basis index {i} outside 1..{DIM}")
        coords = [0] * DIM
        coords[i - 1] = 1
        return cls._over(coords, ring)

    @classmethod
    def identity(cls, ring: Sequence[str] | None = None) -> "OctonionElement":
        return cls._over(IDENTITY_COORDS, ring)

    @classmethod
    def _over(cls, coords, ring) -> "OctonionElement":
        if ring is None:
            return cls(tuple(coords))
        return cls(tuple(MultiPoly.constant(c, ring) for c in coords))

    @classmethod
    def symbolic(cls, prefix: str, variables: Sequence[str]) -> "OctonionElement":
        """Coordinates are the variables prefix1..prefix8 of the given ring."""
        return cls(tuple(MultiPoly.var(f"{prefix}{k}", variables) for k in range(1, DIM + 1)))

    @classmethod
    def from_parts(cls, x, xi, f) -> "OctonionElement":
        return cls((x[0], x[1], xi[0][1], xi[0][0], xi[1][1], xi[1][0], f[1], f[0]))

    @classmethod
    def from_json(cls, data) -> "OctonionElement":
        if not isinstance(data, list) or len(data) != DIM:
            raise ValueError(f"expected a JSON array of {DIM} rational strings")
        return cls(tuple(as_rational(x) for x in data))

    # -- parts ---------------------------------------------------------------
    @property
    def e_part(self):
        return (self.coords[0], self.coords[1])

    @property
    def end_part(self):
        a = self.coords
        return ((a[3], a[2]), (a[5], a[4]))

    @property
    def dual_part(self):
        """(f(v1), f(v2)) = (a8, a7)."""
        return (self.coords[7], self.coords[6])

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __add__(self, other: "OctonionElement") -> "OctonionElement":
        _same_ring(self, other)
        return OctonionElement(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "OctonionElement":
        return OctonionElement(tuple(-a for a in self.coords))

    def __sub__(self, other: "OctonionElement") -> "OctonionElement":
        return self + (-other)

    def scale(self, s) -> "OctonionElement":
        return OctonionElement(tuple(s * a for a in self.coords))

    def __mul__(self, other: "OctonionElement") -> "OctonionElement":
        return multiply(self, other)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coords]


def _same_ring(u: OctonionElement, v: OctonionElement) -> None:
    if u.ring != v.ring:
        raise ScalarRingError(f"scalar rings differ: {u.ring or 'QQ'} vs {v.ring or 'QQ'}")


# -- 2x2 helpers over an arbitrary commutative scalar ring --------------------
def _mat_mul(A, B):
    return ((A[0][0] * B[0][0] + A[0][1] * B[1][0], A[0][0] * B[0][1] + A[0][1] * B[1][1]),
            (A[1][0] * B[0][0] + A[1][1] * B[1][0], A[1][0] * B[0][1] + A[1][1] * B[1][1]))


def _mat_vec(A, x):
    return (A[0][0] * x[0] + A[0][1] * x[1], A[1][0] * x[0] + A[1][1] * x[1])


def _row_mat(f, A):
    return (f[0] * A[0][0] + f[1] * A[1][0], f[0] * A[0][1] + f[1] * A[1][1])


def _outer(x, f):
    # the endomorphism v -> f(v) x
    return ((x[0] * f[0], x[0] * f[1]), (x[1] * f[0], x[1] * f[1]))


def _trace(A):
    return A[0][0] + A[1][1]


def _det(A):
    return A[0][0] * A[1][1] - A[0][1] * A[1][0]


def _bar(A):
    tr = _trace(A)
    return ((tr - A[0][0], -A[0][1]), (-A[1][0], tr - A[1][1]))


def _mat_add(*mats):
    return tuple(tuple(sum(M[i][j] for M in mats) for j in range(2)) for i in range(2))


def _pair(f, x):
    return f[0] * x[0] + f[1] * x[1]


# ---------------------------------------------------------------------------
def multiply(u: OctonionElement, v: OctonionElement) -> OctonionElement:
    _same_ring(u, v)
    x, xi, f = u.e_part, u.end_part, u.dual_part
    y, eta, g = v.e_part, v.end_part, v.dual_part

    e_part = tuple(p + q for p, q in zip(_mat_vec(eta, x), _mat_vec(_bar(xi), y)))
    end_part = _mat_add(_bar(_outer(x, g)), _mat_mul(xi, eta), _outer(y, f))
    dual_part = tuple(p + q for p, q in zip(_row_mat(g, xi), _row_mat(f, _bar(eta))))
    return OctonionElement.from_parts(e_part, end_part, dual_part)


def norm(u: OctonionElement) -> Scalar:
    return _det(u.end_part) - _pair(u.dual_part, u.e_part)


def bilinear(u: OctonionElement, v: OctonionElement) -> Scalar:
    """Tr(xi)Tr(eta) - Tr(xi eta) - f(y) - g(x)."""
    _same_ring(u, v)
    xi, eta = u.end_part, v.end_part
    return (_trace(xi) * _trace(eta) - _trace(_mat_mul(xi, eta))
            - _pair(u.dual_part, v.e_part) - _pair(v.dual_part, u.e_part))


def trace(u: OctonionElement) -> Scalar:
    """<u, e> = Tr(xi)."""
    return u.coords[3] + u.coords[4]


def conjugate_end(u: OctonionElement) -> OctonionElement:
    """xi -> Tr(xi) e - xi on the End(E) part; the other parts are untouched."""
    a = u.coords
    return OctonionElement((a[0], a[1], -a[2], a[4], a[3], -a[5], a[6], a[7]))


def conjugate(u: OctonionElement) -> OctonionElement:
    """Octonion conjugation <u, e> e - u."""
    a = u.coords
    return OctonionElement((-a[0], -a[1], -a[2], a[4], a[3], -a[5], -a[6], -a[7]))


def torus_act(z: Sequence, u: OctonionElement) -> OctonionElement:
    """Scale coordinate i by the i-th basis character evaluated at (z1, z2)."""
    z1, z2 = z
    factors = [chi.evaluate(z1, z2) for chi in BASIS_CHARACTERS]
    return OctonionElement(tuple(s * a for s, a in zip(factors, u.coords)))


def is_in_V(u: OctonionElement) -> bool:
    return trace(u) == 0


def is_g2_isotropic(u: OctonionElement, v: OctonionElement) -> bool:
    _same_ring(u, v)
    if not (is_in_V(u) and is_in_V(v)):
        return False
    return all(multiply(p, q).is_zero for p, q in ((u, u), (u, v), (v, u), (v, v)))


def isotropy_conditions(rows: Sequence[OctonionElement]) -> list[Scalar]:
    """Nonzero traces and product coordinates whose vanishing makes the row span G2-isotropic."""
    out = [trace(r) for r in rows if trace(r) != 0]
    for p, q in product(rows, repeat=2):
        out.extend(c for c in multiply(p, q).coords if c != 0)
    return out


def gram_matrix() -> RationalMatrix:
    """<v_p, v_{9-p}> = -1 off the End(E) diagonal, <v4, v5> = 1, all else 0."""
    rows = [[0] * DIM for _ in range(DIM)]
    for p in range(1, DIM + 1):
        q = DIM + 1 - p
        rows[p - 1][q - 1] = 1 if p in (4, 5) else -1
    return RationalMatrix.from_rows(rows)


def product_characters_consistent() -> bool:
    """Every component of v_i * v_j carries the character chi_i * chi_j."""
    for i, j in product(range(1, DIM + 1), repeat=2):
        target = BASIS_CHARACTERS[i - 1] * BASIS_CHARACTERS[j - 1]
        prod = multiply(OctonionElement.basis(i), OctonionElement.basis(j))
        for k, c in enumerate(prod.coords):
            if c != 0 and BASIS_CHARACTERS[k] != target:
                return False
    return True


def find_nonassociative_triple() -> tuple[int, int, int] | None:
    basis = [OctonionElement.basis(i) for i in range(1, DIM + 1)]
    for i, j, k in product(range(DIM), repeat=3):
        u, v, w = basis[i], basis[j], basis[k]
        if multiply(multiply(u, v), w) != multiply(u, multiply(v, w)):
            return (i + 1, j + 1, k + 1)
    return None


def symbolic_ring(*prefixes: str) -> tuple[str, ...]:
    """Variable names prefix1..prefix8 for each prefix, e.g. ('u1', ..., 'v8')."""
    return tuple(f"{p}{k}" for p in prefixes for k in range(1, DIM + 1))
