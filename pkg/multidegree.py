#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
multidegree.py
==============

Equivariant classes of B-stable subvarieties of U' = (a, b, c, d) computed
independently of the closed forms in classes.py:

  1. a reduced Groebner basis by Buchberger's algorithm (normal pair
     selection, coprime-leading-term criterion), in degrevlex or lex,
  2. the initial monomial ideal,
  3. its multidegree: sum over top-dimensional coordinate components
     <x_i : i in S> of multiplicity * prod_{i in S} w(x_i),
  4. multiplied by the normal weight -3 alpha1 - 2 alpha2 of the z-direction.

The multidegree of a graded ideal equals that of any of its initial ideals,
so both term orders must give the same class.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Mapping, Sequence

from exactalg import ALPHA, ALPHA_VARS, MultiPoly, WeightVector, weight_of
from orbits import COORDINATE_WEIGHTS, NORMAL_WEIGHT, U_PRIME_VARS, BinaryCubic, OrbitLabel, discriminant
from triality import isotropy_quadrics

DEGREVLEX = "degrevlex"
LEX = "lex"

Exponent = tuple[int, ...]


# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class TermOrder:
    kind: str = DEGREVLEX
    variables: tuple[str, ...] = U_PRIME_VARS

    def __post_init__(self):
        if self.kind not in (DEGREVLEX, LEX):
            raise ValueError(f"term order must be {DEGREVLEX!r} or {LEX!r}, got {self.kind!r}")
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"repeated variable in {self.variables}")

    def key(self, ring: Sequence[str]) -> Callable[[Exponent], tuple]:
        """Sort key on exponent vectors of ``ring``; larger key = larger monomial."""
        if set(ring) != set(self.variables):
            raise ValueError(f"order on {self.variables} does not match ring {tuple(ring)}")
        idx = [tuple(ring).index(v) for v in self.variables]
        if self.kind == LEX:
            return lambda e: tuple(e[i] for i in idx)
        rev = idx[::-1]
        return lambda e: (sum(e), tuple(-e[i] for i in rev))

    def __str__(self) -> str:
        return f"{self.kind}({'>'.join(self.variables)})"


DEFAULT_ORDER = TermOrder()


def _divides(m: Exponent, n: Exponent) -> bool:
    return all(x <= y for x, y in zip(m, n))


def _lcm(m: Exponent, n: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(m, n))


def leading_monomial(p: MultiPoly, order: TermOrder) -> Exponent:
    return p.leading_term(order.key(p.variables))[0]


def monic(p: MultiPoly, order: TermOrder) -> MultiPoly:
    return p / p.leading_term(order.key(p.variables))[1]


def s_polynomial(f: MultiPoly, g: MultiPoly, order: TermOrder) -> MultiPoly:
    key = order.key(f.variables)
    (ef, cf), (eg, cg) = f.leading_term(key), g.leading_term(key)
    m = _lcm(ef, eg)
    left = MultiPoly.monomial(tuple(x - y for x, y in zip(m, ef)), f.variables, 1 / cf)
    right = MultiPoly.monomial(tuple(x - y for x, y in zip(m, eg)), f.variables, 1 / cg)
    return left * f - right * g


def normal_form(p: MultiPoly, basis: Sequence[MultiPoly], order: TermOrder) -> MultiPoly:
    """Full reduction of p modulo the basis; no term of the result is divisible by a leading term."""
    key = order.key(p.variables)
    leads = [(g.leading_term(key), g) for g in basis if not g.is_zero]
    work = p
    remainder = MultiPoly.zero(p.variables)
    while not work.is_zero:
        exp, coeff = work.leading_term(key)
        for (lexp, lc), g in leads:
            if _divides(lexp, exp):
                q = MultiPoly.monomial(tuple(x - y for x, y in zip(exp, lexp)), p.variables, coeff / lc)
                work = work - q * g
                break
        else:
            head = MultiPoly.monomial(exp, p.variables, coeff)
            remainder = remainder + head
            work = work - head
    return remainder


def _generators(ideal) -> list[MultiPoly]:
    gens = ideal.generators if isinstance(ideal, GradedIdeal) else list(ideal)
    return [g for g in gens if not g.is_zero]


def reduce_basis(basis: Sequence[MultiPoly], order: TermOrder) -> list[MultiPoly]:
    """Minimal, inter-reduced, monic; sorted by leading monomial, largest first."""
    if not basis:
        return []
    key = order.key(basis[0].variables)
    gens = [monic(g, order) for g in basis if not g.is_zero]
    minimal: list[MultiPoly] = []
    for i, g in enumerate(gens):
        lg = g.leading_term(key)[0]
        redundant = False
        for j, h in enumerate(gens):
            lh = h.leading_term(key)[0]
            if j != i and _divides(lh, lg) and (lh != lg or j < i):
                redundant = True
                break
        if not redundant:
            minimal.append(g)
    reduced = [
        monic(normal_form(g, minimal[:k] + minimal[k + 1:], order), order)
        for k, g in enumerate(minimal)
    ]
    return sorted(reduced, key=lambda g: key(g.leading_term(key)[0]), reverse=True)


def buchberger(ideal, order: TermOrder = DEFAULT_ORDER) -> list[MultiPoly]:
    """Reduced Groebner basis of a GradedIdeal or a sequence of generators."""
    G = [monic(g, order) for g in _generators(ideal)]
    if not G:
        return []
    key = order.key(G[0].variables)
    lead = [g.leading_term(key)[0] for g in G]
    pairs = [(i, j) for i in range(len(G)) for j in range(i + 1, len(G))]
    while pairs:
        pairs.sort(key=lambda ij: (key(_lcm(lead[ij[0]], lead[ij[1]])), ij))
        i, j = pairs.pop(0)
        if all(x == 0 or y == 0 for x, y in zip(lead[i], lead[j])):
            continue
        h = normal_form(s_polynomial(G[i], G[j], order), G, order)
        if not h.is_zero:
            G.append(monic(h, order))
            lead.append(G[-1].leading_term(key)[0])
            pairs.extend((k, len(G) - 1) for k in range(len(G) - 1))
    return reduce_basis(G, order)


def is_groebner(basis: Sequence[MultiPoly], order: TermOrder = DEFAULT_ORDER) -> bool:
    return all(
        normal_form(s_polynomial(f, g, order), basis, order).is_zero
        for f, g in combinations(basis, 2)
    )


def ideal_contains(basis: Sequence[MultiPoly], p: MultiPoly, order: TermOrder = DEFAULT_ORDER) -> bool:
    """Membership test against a Groebner basis."""
    return normal_form(p, basis, order).is_zero


def ideals_equal(first, second, order: TermOrder = DEFAULT_ORDER) -> bool:
    g1, g2 = buchberger(first, order), buchberger(second, order)
    return (all(ideal_contains(g1, p, order) for p in _generators(second))
            and all(ideal_contains(g2, p, order) for p in _generators(first)))


# ---------------------------------------------------------------------------
@dataclass(frozen=True, eq=False)
class GradedIdeal:
    """Ideal generated by polynomials homogeneous for the given variable weights."""

    generators: tuple[MultiPoly, ...]
    grading: Mapping[str, WeightVector] = field(default_factory=lambda: dict(COORDINATE_WEIGHTS))

    def __post_init__(self):
        gens = tuple(g for g in self.generators if not g.is_zero)
        if not gens:
            raise ValueError("a graded ideal needs at least one nonzero generator")
        rings = {g.variables for g in gens}
        if len(rings) != 1:
            raise ValueError(f"generators live in different rings: {sorted(rings)}")
        for g in gens:
            weight_of(g, self.grading)
        object.__setattr__(self, "generators", gens)

    @property
    def variables(self) -> tuple[str, ...]:
        return self.generators[0].variables

    def weights(self) -> list[WeightVector]:
        return [weight_of(g, self.grading) for g in self.generators]


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal stored by its minimal generators (largest first)."""

    variables: tuple[str, ...]
    generators: tuple[Exponent, ...]

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        exps = sorted({tuple(e) for e in self.generators}, reverse=True)
        minimal = tuple(e for e in exps if not any(o != e and _divides(o, e) for o in exps))
        object.__setattr__(self, "generators", minimal)

    def contains(self, exp: Exponent) -> bool:
        return any(_divides(g, exp) for g in self.generators)

    @property
    def is_proper(self) -> bool:
        return not any(sum(g) == 0 for g in self.generators)

    def covering_subsets(self) -> tuple[int, list[tuple[int, ...]]]:
        """Minimal size of S with J in <x_i : i in S>, and every S of that size."""
        n = len(self.variables)
        for size in range(n + 1):
            found = [S for S in combinations(range(n), size)
                     if all(any(g[i] for i in S) for g in self.generators)]
            if found:
                return size, found
        raise ValueError("the unit ideal has no coordinate components")

    def multiplicity(self, S: Sequence[int]) -> int:
        """
        Length of the localization at <x_i : i in S>: set the other variables
        to 1 and count standard monomials, which sit inside the box cut out
        by the pure powers.
        """
        local = [tuple(g[i] for i in S) for g in self.generators]
        bounds = []
        for pos in range(len(S)):
            powers = [e[pos] for e in local
                      if e[pos] > 0 and all(x == 0 for k, x in enumerate(e) if k != pos)]
            if not powers:
                raise ValueError(f"component {self.component_names(S)} is not top-dimensional")
            bounds.append(min(powers))
        return sum(
            1 for m in product(*(range(b) for b in bounds))
            if not any(_divides(e, m) for e in local)
        )

    def component_names(self, S: Sequence[int]) -> tuple[str, ...]:
        return tuple(self.variables[i] for i in S)

    def to_text(self) -> list[str]:
        return [str(MultiPoly.monomial(g, self.variables)) for g in self.generators]


def initial_ideal(basis: Sequence[MultiPoly], order: TermOrder = DEFAULT_ORDER) -> MonomialIdeal:
    if not basis:
        raise ValueError("empty Groebner basis")
    return MonomialIdeal(basis[0].variables, tuple(leading_monomial(g, order) for g in basis))


@dataclass(frozen=True)
class MultidegreeResult:
    polynomial: MultiPoly
    codimension: int
    components: tuple[tuple[tuple[str, ...], int], ...]

    def to_json(self) -> dict:
        return {
            "multidegree": str(self.polynomial),
            "codimension": self.codimension,
            "components": [{"variables": list(names), "multiplicity": m} for names, m in self.components],
        }


def multidegree(J: MonomialIdeal, grading: Mapping[str, WeightVector] | None = None) -> MultidegreeResult:
    grading = dict(COORDINATE_WEIGHTS if grading is None else grading)
    if not J.is_proper:
        raise ValueError("the unit ideal has no multidegree")
    total = MultiPoly.zero(ALPHA_VARS)
    size, subsets = J.covering_subsets()
    components = []
    for S in subsets:
        mult = J.multiplicity(S)
        term = MultiPoly.constant(mult, ALPHA_VARS)
        for name in J.component_names(S):
            term = term * grading[name].to_basis(ALPHA).as_poly()
        total = total + term
        components.append((J.component_names(S), mult))
    return MultidegreeResult(total, size, tuple(components))


# ---------------------------------------------------------------------------
def orbit_ideal(label: OrbitLabel) -> GradedIdeal | None:
    """Defining ideal of the orbit closure inside U' (None for the whole of U')."""
    if label in (OrbitLabel.O0, OrbitLabel.O1):
        return None
    if label is OrbitLabel.O2:
        return GradedIdeal((discriminant(BinaryCubic.symbolic()),))
    if label is OrbitLabel.O3:
        return GradedIdeal(isotropy_quadrics(U_PRIME_VARS))
    return GradedIdeal(MultiPoly.gens(U_PRIME_VARS))


@dataclass(frozen=True)
class OracleRecord:
    label: OrbitLabel
    order: TermOrder
    polynomial: MultiPoly
    groebner_basis: tuple[MultiPoly, ...] = ()
    initial: MonomialIdeal | None = None
    degree: MultidegreeResult | None = None

    def to_json(self) -> dict:
        out = {
            "orbit": self.label.name,
            "term_order": str(self.order),
            "class_alpha": str(self.polynomial),
            "groebner_basis": [str(g) for g in self.groebner_basis],
            "initial_ideal": self.initial.to_text() if self.initial else [],
        }
        if self.degree is not None:
            out.update(self.degree.to_json())
        return out


def orbit_oracle_record(label: OrbitLabel, order: TermOrder = DEFAULT_ORDER) -> OracleRecord:
    if label is OrbitLabel.O0:
        return OracleRecord(label, order, MultiPoly.one(ALPHA_VARS))
    normal = NORMAL_WEIGHT.as_poly()
    ideal = orbit_ideal(label)
    if ideal is None:
        return OracleRecord(label, order, normal)
    basis = buchberger(ideal, order)
    J = initial_ideal(basis, order)
    degree = multidegree(J, {v: COORDINATE_WEIGHTS[v] for v in U_PRIME_VARS})
    return OracleRecord(label, order, normal * degree.polynomial, tuple(basis), J, degree)


def orbit_class_oracle(label: OrbitLabel, order: TermOrder = DEFAULT_ORDER) -> MultiPoly:
    """[O-bar] in the alpha basis via Groebner degeneration."""
    return orbit_oracle_record(label, order).polynomial


def oracle_details(order: TermOrder = DEFAULT_ORDER) -> list[OracleRecord]:
    return [orbit_oracle_record(label, order) for label in OrbitLabel]
