#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
exactalg.py
===========

Exact scalar substrate shared by every other module.

Contents
--------
  MultiPoly        sparse multivariate polynomial over the rationals, with an
                   explicit ordered variable set and a canonical text form
  WeightVector     integer weight in the alpha basis (a1, a2) or t basis (t1, t2)
  RationalMatrix   small dense matrix of rationals
  change_basis     alpha <-> t rewriting of weight polynomials
  to_chern         symmetric polynomial in x1, x2 -> polynomial in c1, c2
  weight_of        common weight of a homogeneous polynomial
  matrix_rank      fraction-free elimination
  nullspace        exact kernel basis (reduced row echelon form)

Canonical text
--------------
Terms are written in graded-lexicographic order, largest first, e.g.

    -3*t1^2*t2 - 3*t1*t2^2

and MultiPoly.parse() accepts the same grammar (rational coefficients such as
3/2 are allowed, "^" takes a non-negative integer).

No floats are used anywhere: every scalar is a fractions.Fraction.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

# ---------------------------------------------------------------------------
# variable sets
ALPHA_VARS = ("a1", "a2")        # simple roots alpha_1, alpha_2
T_VARS     = ("t1", "t2")        # torus weights
X_VARS     = ("x1", "x2")        # Chern roots of E*
CHERN_VARS = ("c2", "c1")        # Chern classes of E*, printed c2 first

ALPHA = "alpha"
T     = "t"
ALPHA_TO_T = "alpha->t"
T_TO_ALPHA = "t->alpha"

_BASIS_VARS = {ALPHA: ALPHA_VARS, T: T_VARS}

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?")
_TOKEN_RE    = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_]*)|([-+*^]))")


class ExactAlgebraError(ValueError):
    """Base class for errors raised by the exact-arithmetic layer."""


class VariableSetError(ExactAlgebraError):
    pass


class BasisMismatchError(ExactAlgebraError):
    pass


class SymmetryError(ExactAlgebraError):
    pass


class InhomogeneityError(ExactAlgebraError):
    pass


class ScalarRingError(ExactAlgebraError):
    pass


def as_rational(value) -> Fraction:
    """Convert int / Fraction / rational string ("-3/2") to Fraction; floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip().replace("−", "-")
        if not _RATIONAL_RE.fullmatch(text):
            raise ValueError(f"not a rational literal: {value!r}")
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise ValueError(f"zero denominator in {value!r}") from None
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _is_rational(value) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def lift_scalars(values: Sequence) -> tuple[tuple, tuple[str, ...] | None]:
    """
    Bring a list of scalars into one ring: rationals stay Fractions unless some
    value is a MultiPoly, in which case every value becomes a MultiPoly over
    that (single) variable set.  Returns the values and the ring (None for QQ).
    """
    rings = {v.variables for v in values if isinstance(v, MultiPoly)}
    if len(rings) > 1:
        raise ScalarRingError(f"scalars over different rings: {sorted(rings)}")
    if rings:
        ring = rings.pop()
        return tuple(v if isinstance(v, MultiPoly) else MultiPoly.constant(v, ring) for v in values), ring
    return tuple(as_rational(v) for v in values), None


def _monomial_text(variables: Sequence[str], exp: Sequence[int]) -> str:
    parts = []
    for name, e in zip(variables, exp):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _grlex_key(exp: Sequence[int]):
    return (sum(exp), tuple(exp))


# ---------------------------------------------------------------------------
class MultiPoly:
    """
    Polynomial with rational coefficients in an explicit ordered variable set.

    Exponent vectors are dense tuples aligned with ``variables``; zero
    coefficients are never stored, so two polynomials over the same variables
    are equal exactly when their term maps are equal.  Arithmetic between
    polynomials over different variable sets raises VariableSetError; use
    ``embed`` or ``substitute`` to move between rings.
    """

    __slots__ = ("variables", "_terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Sequence[int], object] | None = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise VariableSetError(f"repeated variable name in {variables}")
        n = len(variables)
        clean: dict[tuple[int, ...], Fraction] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != n or any(e < 0 for e in exp):
                raise ValueError(f"exponent {exp} does not fit variables {variables}")
            total = clean.get(exp, Fraction(0)) + as_rational(coeff)
            if total:
                clean[exp] = total
            else:
                clean.pop(exp, None)
        self.variables = variables
        self._terms = clean

    @classmethod
    def _from_clean(cls, variables: tuple[str, ...], terms: dict) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj.variables = variables
        obj._terms = terms
        return obj

    # -- constructors --------------------------------------------------------
    @classmethod
    def zero(cls, variables: Sequence[str]) -> "MultiPoly":
        return cls(variables)

    @classmethod
    def constant(cls, value, variables: Sequence[str]) -> "MultiPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def one(cls, variables: Sequence[str]) -> "MultiPoly":
        return cls.constant(1, variables)

    @classmethod
    def monomial(cls, exp: Sequence[int], variables: Sequence[str], coeff=1) -> "MultiPoly":
        return cls(variables, {tuple(exp): coeff})

    @classmethod
    def var(cls, name: str, variables: Sequence[str]) -> "MultiPoly":
        variables = tuple(variables)
        if name not in variables:
            raise VariableSetError(f"{name!r} is not one of {variables}")
        exp = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exp: 1})

    @classmethod
    def gens(cls, variables: Sequence[str]) -> tuple["MultiPoly", ...]:
        return tuple(cls.var(v, variables) for v in variables)

    @classmethod
    def parse(cls, text: str, variables: Sequence[str]) -> "MultiPoly":
        """Parse the canonical text grammar over the given variables."""
        variables = tuple(variables)
        tokens = _tokenize(text)
        if not tokens:
            raise ValueError("empty polynomial text")
        total = cls.zero(variables)
        i, first = 0, True
        while i < len(tokens):
            kind, value = tokens[i]
            sign = 1
            if kind == "op" and value in "+-":
                sign = -1 if value == "-" else 1
                i += 1
            elif not first:
                raise ValueError(f"expected '+' or '-' before {value!r} in {text!r}")
            term, i = _parse_term(tokens, i, variables)
            total = total + sign * term
            first = False
        return total

    # -- inspection ----------------------------------------------------------
    @property
    def terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """(exponent, coefficient) pairs, graded-lex descending."""
        return sorted(self._terms.items(), key=lambda item: _grlex_key(item[0]), reverse=True)

    def iter_terms(self) -> Iterator[tuple[tuple[int, ...], Fraction]]:
        return iter(self._terms.items())

    def as_dict(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(not any(exp) for exp in self._terms)

    @property
    def total_degree(self) -> int:
        """-1 for the zero polynomial."""
        return max((sum(exp) for exp in self._terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.variables.index(name)
        return max((exp[i] for exp in self._terms), default=0)

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * len(self.variables))

    def is_homogeneous(self) -> bool:
        return len({sum(exp) for exp in self._terms}) <= 1

    def leading_term(self, key=None) -> tuple[tuple[int, ...], Fraction]:
        """Term maximizing ``key(exponent)``; plain lexicographic order by default."""
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        exp = max(self._terms, key=key) if key else max(self._terms)
        return exp, self._terms[exp]

    # -- arithmetic ----------------------------------------------------------
    def _coerce(self, other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise VariableSetError(f"variable sets differ: {self.variables} vs {other.variables}")
            return other
        if _is_rational(other):
            return MultiPoly.constant(other, self.variables)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self._terms)
        for exp, c in o._terms.items():
            s = terms.get(exp, 0) + c
            if s:
                terms[exp] = s
            else:
                terms.pop(exp, None)
        return MultiPoly._from_clean(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._from_clean(self.variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if _is_rational(other):
            c = Fraction(other)
            if not c:
                return MultiPoly.zero(self.variables)
            return MultiPoly._from_clean(self.variables, {e: v * c for e, v in self._terms.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                exp = tuple(x + y for x, y in zip(e1, e2))
                s = terms.get(exp, 0) + c1 * c2
                if s:
                    terms[exp] = s
                else:
                    terms.pop(exp, None)
        return MultiPoly._from_clean(self.variables, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not _is_rational(other):
            return NotImplemented
        return self * (1 / Fraction(other))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = MultiPoly.one(self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.variables == other.variables and self._terms == other._terms
        if _is_rational(other):
            c = Fraction(other)
            return self._terms == ({(0,) * len(self.variables): c} if c else {})
        return NotImplemented

    def __hash__(self):
        return hash((self.variables, frozenset(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    # -- ring changes --------------------------------------------------------
    def substitute(self, mapping: Mapping[str, object], target: Sequence[str] | None = None) -> "MultiPoly":
        """
        Simultaneous substitution.  Unmapped variables pass through and must
        exist in the target variable set; the target defaults to the ring of
        the polynomial values in ``mapping`` (or to this ring).
        """
        for name in mapping:
            if name not in self.variables:
                raise VariableSetError(f"{name!r} is not a variable of {self.variables}")
        rings = {v.variables for v in mapping.values() if isinstance(v, MultiPoly)}
        if target is None:
            if len(rings) > 1:
                raise VariableSetError(f"substitution values live in different rings: {sorted(rings)}")
            target = rings.pop() if rings else self.variables
        target = tuple(target)

        images: list[MultiPoly] = []
        for name in self.variables:
            if name in mapping:
                value = mapping[name]
                if isinstance(value, MultiPoly):
                    if value.variables != target:
                        raise VariableSetError(f"value for {name!r} is not over {target}")
                    images.append(value)
                else:
                    images.append(MultiPoly.constant(value, target))
            elif name in target:
                images.append(MultiPoly.var(name, target))
            else:
                raise VariableSetError(f"{name!r} is neither substituted nor a variable of {target}")

        acc: dict[tuple[int, ...], Fraction] = {}
        powers: dict[tuple[int, int], MultiPoly] = {}
        for exp, coeff in self._terms.items():
            term = MultiPoly.constant(coeff, target)
            for i, e in enumerate(exp):
                if e:
                    if (i, e) not in powers:
                        powers[(i, e)] = images[i] ** e
                    term = term * powers[(i, e)]
            for texp, tc in term._terms.items():
                s = acc.get(texp, 0) + tc
                if s:
                    acc[texp] = s
                else:
                    acc.pop(texp, None)
        return MultiPoly._from_clean(target, acc)

    def evaluate(self, values: Mapping[str, object]) -> Fraction:
        """Value at a rational point; every variable actually occurring must be given."""
        point = [as_rational(values[v]) if v in values else None for v in self.variables]
        total = Fraction(0)
        for exp, coeff in self._terms.items():
            term = coeff
            for name, x, e in zip(self.variables, point, exp):
                if e:
                    if x is None:
                        raise VariableSetError(f"no value given for {name!r}")
                    term *= x ** e
            total += term
        return total

    def embed(self, variables: Sequence[str]) -> "MultiPoly":
        """Same polynomial viewed in a larger (or reordered) variable set."""
        variables = tuple(variables)
        missing = [v for v in self.variables if v not in variables]
        if missing:
            raise VariableSetError(f"{missing} not in {variables}")
        index = [variables.index(v) for v in self.variables]
        terms = {}
        for exp, c in self._terms.items():
            new = [0] * len(variables)
            for i, e in zip(index, exp):
                new[i] = e
            terms[tuple(new)] = c
        return MultiPoly._from_clean(variables, terms)

    # -- output --------------------------------------------------------------
    def to_text(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for k, (exp, coeff) in enumerate(self.terms):
            mono = _monomial_text(self.variables, exp)
            mag = abs(coeff)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if k == 0:
                pieces.append(("-" if coeff < 0 else "") + body)
            else:
                pieces.append((" - " if coeff < 0 else " + ") + body)
        return "".join(pieces)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"MultiPoly({self.to_text()!r}, {self.variables})"

    def to_sympy(self):
        """sympy expression with one Symbol per variable (for cross-checks)."""
        import sympy

        syms = [sympy.Symbol(v) for v in self.variables]
        return sympy.Add(*[
            sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[s ** e for s, e in zip(syms, exp)])
            for exp, c in self._terms.items()
        ])

    @classmethod
    def from_sympy(cls, expr, variables: Sequence[str]) -> "MultiPoly":
        import sympy

        variables = tuple(variables)
        poly = sympy.Poly(expr, *[sympy.Symbol(v) for v in variables], domain="QQ")
        return cls(variables, {
            monom: Fraction(int(c.numerator), int(c.denominator)) for monom, c in poly.terms()
        })


def _tokenize(text: str) -> list[tuple[str, str]]:
    text = text.replace("−", "-").strip()
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse {text[pos:]!r}")
        num, name, op = m.groups()
        if num:
            out.append(("num", num))
        elif name:
            out.append(("name", name))
        else:
            out.append(("op", op))
        pos = m.end()
    return out


def _parse_term(tokens, i, variables):
    term = MultiPoly.one(variables)
    while True:
        if i >= len(tokens):
            raise ValueError("polynomial text ends with an operator")
        kind, value = tokens[i]
        if kind == "num":
            term = term * as_rational(value)
            i += 1
        elif kind == "name":
            if value not in variables:
                raise VariableSetError(f"unknown variable {value!r}; expected one of {variables}")
            power = 1
            i += 1
            if i < len(tokens) and tokens[i] == ("op", "^"):
                if i + 1 >= len(tokens) or tokens[i + 1][0] != "num" or "/" in tokens[i + 1][1]:
                    raise ValueError(f"'^' after {value!r} needs a non-negative integer")
                power = int(tokens[i + 1][1])
                i += 2
            term = term * MultiPoly.var(value, variables) ** power
        else:
            raise ValueError(f"unexpected {value!r}")
        if i < len(tokens) and tokens[i] == ("op", "*"):
            i += 1
            continue
        return term, i


# ---------------------------------------------------------------------------
@dataclass(frozen=True, eq=False)
class WeightVector:
    """Integer weight n1*e1 + n2*e2 where (e1, e2) is (alpha1, alpha2) or (t1, t2)."""

    coords: tuple[int, int]
    basis: str = ALPHA

    def __post_init__(self):
        if self.basis not in _BASIS_VARS:
            raise BasisMismatchError(f"unknown weight basis {self.basis!r}")
        coords = tuple(int(c) for c in self.coords)
        if len(coords) != 2:
            raise ValueError("a weight has exactly two coordinates")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, basis: str = ALPHA) -> "WeightVector":
        return cls((0, 0), basis)

    def _same_basis(self, other: "WeightVector") -> None:
        if other.basis != self.basis:
            raise BasisMismatchError(f"cannot combine {self.basis}-basis and {other.basis}-basis weights")

    def __add__(self, other):
        if not isinstance(other, WeightVector):
            return NotImplemented
        self._same_basis(other)
        return WeightVector((self.coords[0] + other.coords[0], self.coords[1] + other.coords[1]), self.basis)

    def __neg__(self):
        return WeightVector((-self.coords[0], -self.coords[1]), self.basis)

    def __sub__(self, other):
        if not isinstance(other, WeightVector):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k):
        if not isinstance(k, int) or isinstance(k, bool):
            return NotImplemented
        return WeightVector((k * self.coords[0], k * self.coords[1]), self.basis)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, WeightVector):
            return NotImplemented
        self._same_basis(other)
        return self.coords == other.coords

    def __hash__(self):
        return hash((self.coords, self.basis))

    @property
    def is_zero(self) -> bool:
        return self.coords == (0, 0)

    def to_basis(self, basis: str) -> "WeightVector":
        if basis not in _BASIS_VARS:
            raise BasisMismatchError(f"unknown weight basis {basis!r}")
        if basis == self.basis:
            return self
        n1, n2 = self.coords
        if self.basis == ALPHA:
            # alpha1 = t1 - t2, alpha2 = -t1 + 2 t2
            return WeightVector((n1 - n2, -n1 + 2 * n2), T)
        # t1 = 2 alpha1 + alpha2, t2 = alpha1 + alpha2
        return WeightVector((2 * n1 + n2, n1 + n2), ALPHA)

    def as_poly(self) -> MultiPoly:
        e1, e2 = MultiPoly.gens(_BASIS_VARS[self.basis])
        return self.coords[0] * e1 + self.coords[1] * e2

    def __str__(self):
        return self.as_poly().to_text()


def change_basis(p: MultiPoly, direction: str) -> MultiPoly:
    """Rewrite a polynomial in alpha1, alpha2 in terms of t1, t2 or back."""
    if direction == ALPHA_TO_T:
        source, target = ALPHA, T
    elif direction == T_TO_ALPHA:
        source, target = T, ALPHA
    else:
        raise ValueError(f"direction must be {ALPHA_TO_T!r} or {T_TO_ALPHA!r}, got {direction!r}")
    if p.variables != _BASIS_VARS[source]:
        raise BasisMismatchError(f"expected a polynomial in {_BASIS_VARS[source]}, got {p.variables}")
    images = {
        name: WeightVector(unit, source).to_basis(target).as_poly()
        for name, unit in zip(_BASIS_VARS[source], ((1, 0), (0, 1)))
    }
    return p.substitute(images, _BASIS_VARS[target])


def to_chern(p: MultiPoly) -> MultiPoly:
    """Express a symmetric polynomial in x1, x2 through c1 = x1 + x2 and c2 = x1*x2."""
    if p.variables != X_VARS:
        raise VariableSetError(f"expected a polynomial in {X_VARS}, got {p.variables}")
    x1, x2 = MultiPoly.gens(X_VARS)
    if p.substitute({"x1": x2, "x2": x1}) != p:
        raise SymmetryError(f"not symmetric under x1 <-> x2: {p}")
    e1, e2 = x1 + x2, x1 * x2
    c2, c1 = MultiPoly.gens(CHERN_VARS)
    result = MultiPoly.zero(CHERN_VARS)
    rest = p
    while not rest.is_zero:
        # lex-leading exponent (i, j) of a symmetric polynomial has i >= j
        (i, j), coeff = rest.leading_term()
        result = result + coeff * c1 ** (i - j) * c2 ** j
        rest = rest - coeff * e1 ** (i - j) * e2 ** j
    return result


def from_chern(q: MultiPoly) -> MultiPoly:
    """Inverse of to_chern: substitute c1 -> x1 + x2, c2 -> x1*x2."""
    if q.variables != CHERN_VARS:
        raise VariableSetError(f"expected a polynomial in {CHERN_VARS}, got {q.variables}")
    x1, x2 = MultiPoly.gens(X_VARS)
    return q.substitute({"c1": x1 + x2, "c2": x1 * x2}, X_VARS)


def weight_of(p: MultiPoly, assignment: Mapping[str, WeightVector]) -> WeightVector:
    """Common weight of every monomial of p under the given variable weights."""
    if p.is_zero:
        raise InhomogeneityError("the zero polynomial has no weight")
    missing = [v for v in p.variables if p.degree_in(v) and v not in assignment]
    if missing:
        raise VariableSetError(f"no weight assigned to {missing}")
    basis = next(iter(assignment.values())).basis if assignment else ALPHA

    seen: tuple[WeightVector, tuple[int, ...]] | None = None
    for exp, _ in p.terms:
        w = WeightVector.zero(basis)
        for name, e in zip(p.variables, exp):
            if e:
                w = w + e * assignment[name]
        if seen is None:
            seen = (w, exp)
        elif w != seen[0]:
            raise InhomogeneityError(
                f"monomials {_monomial_text(p.variables, seen[1]) or '1'} and "
                f"{_monomial_text(p.variables, exp) or '1'} have weights {seen[0]} and {w}"
            )
    return seen[0]


def substitute(p: MultiPoly, mapping: Mapping[str, object], target: Sequence[str] | None = None) -> MultiPoly:
    return p.substitute(mapping, target)


# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows <= 0 or self.cols <= 0:
            raise ValueError("matrix dimensions must be positive")
        entries = tuple(as_rational(x) for x in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError(f"expected {self.rows * self.cols} entries, got {len(entries)}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence]) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("rows must be non-empty and of equal length")
        return cls(len(rows), len(rows[0]), tuple(x for r in rows for x in r))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[Fraction]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list[list[Fraction]]:
        return [self.row(i) for i in range(self.rows)]

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.to_rows()]


def matrix_rank(m: RationalMatrix) -> int:
    """Rank by fraction-free (Bareiss) elimination on an integer rescaling of the rows."""
    rows = []
    for r in m.to_rows():
        scale = math.lcm(*(x.denominator for x in r))
        rows.append([int(x * scale) for x in r])

    rank, prev = 0, 1
    for col in range(m.cols):
        pivot = next((i for i in range(rank, m.rows) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        for i in range(rank + 1, m.rows):
            rows[i] = [(p * rows[i][j] - rows[i][col] * rows[rank][j]) // prev for j in range(m.cols)]
        prev = p
        rank += 1
        if rank == m.rows:
            break
    return rank


def nullspace(m: RationalMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of {v : m v = 0}, one vector per free column of the reduced echelon form."""
    rows = m.to_rows()
    pivots: list[int] = []
    r = 0
    for col in range(m.cols):
        if r == m.rows:
            break
        piv = next((i for i in range(r, m.rows) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m.rows):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1

    basis = []
    for free in (c for c in range(m.cols) if c not in pivots):
        vec = [Fraction(0)] * m.cols
        vec[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -rows[i][free]
        basis.append(tuple(vec))
    return basis


# ---------------------------------------------------------------------------
# univariate helpers (coefficient lists, highest degree first)
def _trim(p: Sequence) -> list[Fraction]:
    p = [as_rational(c) for c in p]
    k = 0
    while k < len(p) and p[k] == 0:
        k += 1
    return p[k:]


def univariate_divmod(num: Sequence, den: Sequence) -> tuple[list[Fraction], list[Fraction]]:
    num, den = _trim(num), _trim(den)
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    if len(num) < len(den):
        return [], num
    quot = [Fraction(0)] * (len(num) - len(den) + 1)
    rem = num
    while rem and len(rem) >= len(den):
        shift = len(rem) - len(den)
        factor = rem[0] / den[0]
        quot[len(quot) - 1 - shift] = factor
        rem = list(rem)
        for k in range(len(den)):
            rem[k] -= factor * den[k]
        rem = _trim(rem)
    return _trim(quot), rem


def univariate_gcd(p: Sequence, q: Sequence) -> list[Fraction]:
    """Monic gcd over the rationals; [] when both inputs are zero."""
    a, b = _trim(p), _trim(q)
    while b:
        _, r = univariate_divmod(a, b)
        a, b = b, r
    if not a:
        return []
    return [c / a[0] for c in a]
