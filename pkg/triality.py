#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
triality.py
===========

Tangent vectors phi in U = Hom(E, End(E)) + wedge^2 E*, written as the 2x6 matrix

    A_phi = | b1 a1 d1 c1  z  0 |
            | b2 a2 d2 c2  0 -z |

together with the S3 action generated by tau (order 3) and sigma (order 2),
the triality-symmetric subspace

    | a -d  d c z  0 |
    | b  a -a d 0 -z |

and the graph frame of a symmetric map inside the octonions.

Words of generators act right to left: s3_act(["sigma", "tau"], v) is
sigma(tau(v)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence, Union

from exactalg import MultiPoly, RationalMatrix, as_rational, lift_scalars, matrix_rank, nullspace
from octonion import OctonionElement, isotropy_conditions

Scalar = Union[Fraction, MultiPoly]

FIELDS     = ("b1", "a1", "d1", "c1", "b2", "a2", "d2", "c2", "z")
SYM_FIELDS = ("a", "b", "c", "d", "z")
U_VARS     = SYM_FIELDS            # polynomial ring on the symmetric subspace

# output field -> (sign, input field)
GENERATORS = {
    "tau": {
        "b1": (-1, "d2"), "a1": (-1, "c2"), "d1": (-1, "a1"), "c1": (1, "c1"),
        "b2": (1, "b2"),  "a2": (1, "b1"),  "d2": (-1, "a2"), "c2": (1, "d1"),
        "z":  (1, "z"),
    },
    "sigma": {
        "b1": (1, "a2"), "a1": (1, "a1"), "d1": (1, "c2"), "c1": (1, "c1"),
        "b2": (1, "b2"), "a2": (1, "b1"), "d2": (1, "d2"), "c2": (1, "d1"),
        "z":  (1, "z"),
    },
}
_ALIASES = {"tau": "tau", "τ": "tau", "sigma": "sigma", "σ": "sigma"}


class UnsupportedInputError(ValueError):
    pass


def _lift_fields(obj, names: Sequence[str]) -> tuple[str, ...] | None:
    values, ring = lift_scalars([getattr(obj, n) for n in names])
    for n, v in zip(names, values):
        object.__setattr__(obj, n, v)
    return ring


def _scalar_from_json(data: dict, key: str) -> Fraction:
    if key not in data:
        raise ValueError(f"missing key {key!r}")
    value = data[key]
    if not isinstance(value, str):
        raise ValueError(f"{key!r} must be a rational string such as \"-3/2\"")
    return as_rational(value)


# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class TangentVector:
    b1: Scalar = 0
    a1: Scalar = 0
    d1: Scalar = 0
    c1: Scalar = 0
    b2: Scalar = 0
    a2: Scalar = 0
    d2: Scalar = 0
    c2: Scalar = 0
    z: Scalar = 0

    def __post_init__(self):
        _lift_fields(self, FIELDS)

    @property
    def coords(self) -> tuple:
        return tuple(getattr(self, f) for f in FIELDS)

    @property
    def ring(self) -> tuple[str, ...] | None:
        return self.z.variables if isinstance(self.z, MultiPoly) else None

    @classmethod
    def from_coords(cls, coords: Sequence) -> "TangentVector":
        if len(coords) != len(FIELDS):
            raise ValueError(f"a tangent vector has {len(FIELDS)} coordinates")
        return cls(**dict(zip(FIELDS, coords)))

    @classmethod
    def symbolic(cls, variables: Sequence[str] = FIELDS) -> "TangentVector":
        return cls(**{f: MultiPoly.var(f, variables) for f in FIELDS})

    @classmethod
    def from_json(cls, data: dict) -> "TangentVector":
        return cls(**{f: _scalar_from_json(data, f) for f in FIELDS})

    def to_json(self) -> dict[str, str]:
        return {f: str(getattr(self, f)) for f in FIELDS}

    def rows(self) -> tuple[tuple, tuple]:
        zero = self.z - self.z
        return ((self.b1, self.a1, self.d1, self.c1, self.z, zero),
                (self.b2, self.a2, self.d2, self.c2, zero, -self.z))

    def matrix(self) -> RationalMatrix:
        if self.ring is not None:
            raise UnsupportedInputError("A_phi as a rational matrix needs rational entries")
        return RationalMatrix.from_rows(self.rows())


@dataclass(frozen=True)
class TrialitySymmetricMap:
    a: Scalar = 0
    b: Scalar = 0
    c: Scalar = 0
    d: Scalar = 0
    z: Scalar = 0

    def __post_init__(self):
        _lift_fields(self, SYM_FIELDS)

    @property
    def coords(self) -> tuple:
        return tuple(getattr(self, f) for f in SYM_FIELDS)

    @property
    def ring(self) -> tuple[str, ...] | None:
        return self.z.variables if isinstance(self.z, MultiPoly) else None

    @classmethod
    def symbolic(cls, variables: Sequence[str] = U_VARS) -> "TrialitySymmetricMap":
        return cls(**{f: MultiPoly.var(f, variables) for f in SYM_FIELDS})

    @classmethod
    def from_json(cls, data: dict) -> "TrialitySymmetricMap":
        if not isinstance(data, dict):
            raise ValueError("expected a JSON object with keys a, b, c, d, z")
        unknown = sorted(set(data) - set(SYM_FIELDS))
        if unknown:
            raise ValueError(f"unknown keys {unknown}")
        return cls(**{f: _scalar_from_json(data, f) for f in SYM_FIELDS})

    def to_json(self) -> dict[str, str]:
        return {f: str(getattr(self, f)) for f in SYM_FIELDS}

    def embed(self) -> TangentVector:
        a, b, c, d, z = self.coords
        return TangentVector(b1=a, a1=-d, d1=d, c1=c, b2=b, a2=a, d2=-a, c2=d, z=z)


def embed(m: TrialitySymmetricMap) -> TangentVector:
    return m.embed()


# ---------------------------------------------------------------------------
def _generator_name(g: str) -> str:
    try:
        return _ALIASES[g]
    except KeyError:
        raise ValueError(f"unknown generator {g!r}; use tau or sigma") from None


def apply_generator(g: str, v: TangentVector) -> TangentVector:
    table = GENERATORS[_generator_name(g)]
    return TangentVector(**{out: sign * getattr(v, src) for out, (sign, src) in table.items()})


def s3_act(word: Sequence[str] | str, v: TangentVector) -> TangentVector:
    """Apply a word in tau/sigma, rightmost generator first."""
    if isinstance(word, str):
        word = word.split()
    for g in reversed(list(word)):
        v = apply_generator(g, v)
    return v


def generator_matrix(g: str) -> RationalMatrix:
    """9x9 matrix M of a generator on the coordinates FIELDS (new = M @ old)."""
    table = GENERATORS[_generator_name(g)]
    rows = []
    for out in FIELDS:
        sign, src = table[out]
        rows.append([sign if f == src else 0 for f in FIELDS])
    return RationalMatrix.from_rows(rows)


def fixed_space(generators: Sequence[str] = ("tau",)) -> list[tuple[Fraction, ...]]:
    """Basis of the common fixed vectors of the given generators."""
    rows = []
    for g in generators:
        m = generator_matrix(g)
        for i in range(len(FIELDS)):
            rows.append([m[i, j] - (1 if i == j else 0) for j in range(len(FIELDS))])
    return nullspace(RationalMatrix.from_rows(rows))


def symmetric_subspace_basis() -> list[tuple[Fraction, ...]]:
    """Images under embed of the unit vectors in (a, b, c, d, z)."""
    basis = []
    for k in range(len(SYM_FIELDS)):
        unit = TrialitySymmetricMap(*[1 if i == k else 0 for i in range(len(SYM_FIELDS))])
        basis.append(unit.embed().coords)
    return basis


def spans_equal(first: Sequence[Sequence], second: Sequence[Sequence]) -> bool:
    if not first or not second:
        return not first and not second
    r1 = matrix_rank(RationalMatrix.from_rows(first))
    r2 = matrix_rank(RationalMatrix.from_rows(second))
    both = matrix_rank(RationalMatrix.from_rows(list(first) + list(second)))
    return r1 == r2 == both


def is_triality_symmetric(v: TangentVector) -> TrialitySymmetricMap | None:
    if v.b1 == v.a2 and v.a1 == -v.d1 and v.d2 == -v.a2 and v.c2 == v.d1:
        return TrialitySymmetricMap(a=v.a2, b=v.b2, c=v.c1, d=v.d1, z=v.z)
    return None


# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class IsotropicFrame:
    source: TrialitySymmetricMap
    rows: tuple[OctonionElement, OctonionElement]
    X: Scalar
    Y: Scalar
    Z: Scalar

    @property
    def is_graph(self) -> bool:
        """The row span is the graph of the source map (X = Z = 0, Y = z)."""
        return self.X == 0 and self.Z == 0 and self.Y == self.source.z

    def graph_conditions(self) -> list[Scalar]:
        return [self.X, self.Z, self.Y - self.source.z]

    def rows_in_V(self) -> bool:
        return all(r.coords[3] + r.coords[4] == 0 for r in self.rows)


def graph_frame(m: TrialitySymmetricMap) -> IsotropicFrame:
    a, b, c, d, z = m.coords
    X = -a * c - d * d
    Y = z + a * d - b * c
    Z = -a * a - b * d
    one, zero = z - z + 1, z - z
    rows = (
        OctonionElement((one, zero, a, -d, d, c, z, -X)),
        OctonionElement((zero, one, b, a, -a, d, -Z, -Y)),
    )
    return IsotropicFrame(source=m, rows=rows, X=X, Y=Y, Z=Z)


def graph_of(v: TangentVector) -> tuple[OctonionElement, OctonionElement]:
    """Rows spanning the graph of an arbitrary phi: v_i + phi(v_i)."""
    one, zero = v.z - v.z + 1, v.z - v.z
    return (
        OctonionElement((one, zero, v.b1, v.a1, v.d1, v.c1, v.z, zero)),
        OctonionElement((zero, one, v.b2, v.a2, v.d2, v.c2, zero, -v.z)),
    )


def isotropy_quadrics(variables: Sequence[str] = U_VARS) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
    """a^2 + bd, ac + d^2, ad - bc."""
    a, b, c, d = (MultiPoly.var(n, variables) for n in ("a", "b", "c", "d"))
    return (a * a + b * d, a * c + d * d, a * d - b * c)


def isotropy_ideal_generators(m: TrialitySymmetricMap) -> list[Scalar]:
    """Product conditions of the graph frame together with its graph conditions."""
    frame = graph_frame(m)
    return isotropy_conditions(frame.rows) + [g for g in frame.graph_conditions() if g != 0]


def morphism_rank(v: TangentVector) -> int:
    if v.ring is not None:
        raise UnsupportedInputError("morphism_rank needs rational entries; use the minor ideal for symbolic input")
    return matrix_rank(v.matrix())


def minors(v: TangentVector) -> list[Scalar]:
    """All 2x2 minors of A_phi (works symbolically)."""
    r1, r2 = v.rows()
    return [r1[i] * r2[j] - r1[j] * r2[i] for i, j in combinations(range(6), 2)]
