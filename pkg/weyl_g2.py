#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
weyl_g2.py
==========

G2 root data and the 12-element Weyl group W = <s, t>, s = s_alpha1 (short),
t = s_alpha2 (long), embedded in S7 through the weights of the 7-dimensional
representation V:

    index   1    2    3        4   5         6     7
    weight  t1   t2   t1-t2    0   -t1+t2    -t2   -t1

    s -> 2 1 5 4 3 7 6        t -> 1 3 2 4 6 5 7

Composition is (u o v)(i) = u(v(i)); the word g1 g2 ... gk is g1 o g2 o ... o gk.
Every element carries its canonical reduced word: the lexicographically least
(s < t) among the words of minimal length.  The group table is built once at
import time and is read-only afterwards.

Also here: the rank function r_w(q, p) = #{i <= q : w(8-i) <= p}, the
degeneracy-locus indexing r -> (id, tst, tstst), and Billey's subword formula
for restricting equivariant Schubert classes to fixed points.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Mapping, Sequence

from exactalg import ALPHA, T, T_VARS, MultiPoly, WeightVector

RANK = 7
GENERATOR_PERMS = {
    "s": (2, 1, 5, 4, 3, 7, 6),
    "t": (1, 3, 2, 4, 6, 5, 7),
}
IDENTITY_PERM = tuple(range(1, RANK + 1))
V_WEIGHTS = tuple(WeightVector(e, T) for e in ((1, 0), (0, 1), (1, -1), (0, 0), (-1, 1), (0, -1), (-1, 0)))
MAX_LENGTH = 6

LOCUS_WORDS = {2: "", 1: "tst", 0: "tstst"}

ROOTS = "roots"
NEGATIVE_ROOTS = "negative-roots"
SIGNS = {ROOTS: 1, NEGATIVE_ROOTS: -1}
FIXED_POINTS = ("e", "w0")


# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class RootData:
    simple: tuple[WeightVector, WeightVector]
    positive: tuple[WeightVector, ...]

    def positive_in(self, basis: str) -> list[WeightVector]:
        return [r.to_basis(basis) for r in self.positive]

    @staticmethod
    def is_positive(w: WeightVector) -> bool:
        n1, n2 = w.to_basis(ALPHA).coords
        return n1 >= 0 and n2 >= 0 and (n1, n2) != (0, 0)

    def is_long(self, root: WeightVector) -> bool:
        """Short roots are exactly the nonzero weights of V."""
        return root.to_basis(T) not in V_WEIGHTS

    def simple_root(self, g: str) -> WeightVector:
        return self.simple[0] if g == "s" else self.simple[1]


ROOT_DATA = RootData(
    simple=(WeightVector((1, 0), ALPHA), WeightVector((0, 1), ALPHA)),
    positive=tuple(WeightVector(c, ALPHA) for c in ((1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2))),
)


def compose(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(u[v[i] - 1] for i in range(len(v)))


def _perm_of(word: Sequence[str]) -> tuple[int, ...]:
    perm = IDENTITY_PERM
    for g in word:
        perm = compose(perm, GENERATOR_PERMS[g])
    return perm


def _normalize_word(word: Sequence[str] | str) -> str:
    if isinstance(word, str):
        word = "" if word in ("e", "id") else word.replace(" ", "")
    word = "".join(word)
    bad = set(word) - set(GENERATOR_PERMS)
    if bad:
        raise ValueError(f"unknown generator(s) {sorted(bad)}; words use s and t")
    return word


# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class WeylElement:
    word: str
    perm: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.perm[i - 1]

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return element_from_perm(compose(self.perm, other.perm))

    def inverse(self) -> "WeylElement":
        inv = [0] * RANK
        for i, j in enumerate(self.perm, start=1):
            inv[j - 1] = i
        return element_from_perm(tuple(inv))

    def act(self, weight: WeightVector) -> WeightVector:
        """Linear action on weights: w(t_k) is the weight at position w(k)."""
        n1, n2 = weight.to_basis(T).coords
        image = n1 * V_WEIGHTS[self.perm[0] - 1] + n2 * V_WEIGHTS[self.perm[1] - 1]
        return image.to_basis(weight.basis)

    def inversions(self) -> list[WeightVector]:
        """Positive roots beta with w^-1(beta) negative (alpha basis)."""
        inv = self.inverse()
        return [b for b in ROOT_DATA.positive if not RootData.is_positive(inv.act(b))]

    def to_json(self) -> dict:
        return {
            "word": self.word or "e",
            "permutation": list(self.perm),
            "length": self.length,
            "inversions": [str(b) for b in self.inversions()],
        }


def _build_table() -> dict[tuple[int, ...], WeylElement]:
    table: dict[tuple[int, ...], WeylElement] = {}
    for n in range(MAX_LENGTH + 1):
        for letters in product("st", repeat=n):
            perm = _perm_of(letters)
            if perm not in table:
                table[perm] = WeylElement("".join(letters), perm)
    return table


_TABLE = _build_table()


def element_from_perm(perm: Sequence[int]) -> WeylElement:
    try:
        return _TABLE[tuple(perm)]
    except KeyError:
        raise ValueError(f"{tuple(perm)} is not in the image of W") from None


def element_from_word(word: Sequence[str] | str) -> WeylElement:
    return element_from_perm(_perm_of(_normalize_word(word)))


def identity() -> WeylElement:
    return _TABLE[IDENTITY_PERM]


def longest_element() -> WeylElement:
    return max(_TABLE.values(), key=lambda w: w.length)


def all_elements() -> list[WeylElement]:
    return sorted(_TABLE.values(), key=lambda w: (w.length, w.word))


def group_closure() -> set[tuple[int, ...]]:
    """Closure of {s, t} under composition, found without the precomputed table."""
    seen = {IDENTITY_PERM}
    frontier = [IDENTITY_PERM]
    while frontier:
        nxt = []
        for perm in frontier:
            for g in GENERATOR_PERMS.values():
                new = compose(perm, g)
                if new not in seen:
                    seen.add(new)
                    nxt.append(new)
        frontier = nxt
    return seen


def relations_hold() -> bool:
    """s^2 = t^2 = (st)^6 = id with st of order exactly 6."""
    s, t = GENERATOR_PERMS["s"], GENERATOR_PERMS["t"]
    if compose(s, s) != IDENTITY_PERM or compose(t, t) != IDENTITY_PERM:
        return False
    st = compose(s, t)
    power = IDENTITY_PERM
    for k in range(1, 7):
        power = compose(power, st)
        if (power == IDENTITY_PERM) != (k == 6):
            return False
    return True


# ---------------------------------------------------------------------------
def rank_function(w: WeylElement, q: int, p: int) -> int:
    if not (1 <= q <= RANK and 1 <= p <= RANK):
        raise ValueError(f"q and p must lie in 1..{RANK}")
    return sum(1 for i in range(1, q + 1) if w(RANK + 1 - i) <= p)


def rank_table(w: WeylElement) -> list[list[int]]:
    """Row q-1, column p-1 holds r_w(q, p)."""
    return [[rank_function(w, q, p) for p in range(1, RANK + 1)] for q in range(1, RANK + 1)]


def locus_element(r: int) -> WeylElement:
    if r not in LOCUS_WORDS:
        raise ValueError(f"r must be 0, 1 or 2, got {r!r}")
    return element_from_word(LOCUS_WORDS[r])


def reduced_words(v: WeylElement) -> list[str]:
    return ["".join(w) for w in product("st", repeat=v.length) if _perm_of(w) == v.perm]


def root_sequence(word: str) -> list[WeightVector]:
    """beta_j = g_1 ... g_{j-1}(alpha_{g_j}), in the t basis."""
    return [
        element_from_word(word[:j]).act(ROOT_DATA.simple_root(g)).to_basis(T)
        for j, g in enumerate(word)
    ]


def billey_restriction(w: WeylElement, v: WeylElement, word: str | None = None, sign: int = 1) -> MultiPoly:
    """
    Restriction of the Schubert class of w to the fixed point v: the sum, over
    subwords of a reduced word of v spelling a reduced word of w, of the
    products of the corresponding roots (each multiplied by ``sign``).
    """
    if word is None:
        word = v.word
    else:
        word = _normalize_word(word)
        if len(word) != v.length or _perm_of(word) != v.perm:
            raise ValueError(f"{word!r} is not a reduced word for {v.word or 'e'}")
    betas = [sign * b.as_poly() for b in root_sequence(word)]
    targets = set(reduced_words(w))
    total = MultiPoly.zero(T_VARS)
    for positions in combinations(range(len(word)), w.length):
        if "".join(word[j] for j in positions) in targets:
            term = MultiPoly.one(T_VARS)
            for j in positions:
                term = term * betas[j]
            total = total + term
    return total


# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class LocalizationConvention:
    point: str
    sign: str

    def fixed_point(self) -> WeylElement:
        return identity() if self.point == "e" else longest_element()

    def restrict(self, w: WeylElement) -> MultiPoly:
        return billey_restriction(w, self.fixed_point(), sign=SIGNS[self.sign])

    def to_json(self) -> dict[str, str]:
        return {"point": self.point, "sign": self.sign}


def candidate_conventions() -> list[LocalizationConvention]:
    return [LocalizationConvention(p, s) for p in FIXED_POINTS for s in SIGNS]


def pin_localization_convention(targets: Mapping[str, MultiPoly]) -> LocalizationConvention:
    """
    The unique (fixed point, sign) whose restrictions of the given words equal
    the given classes exactly; ValueError unless exactly one candidate matches.
    """
    matches = [
        conv for conv in candidate_conventions()
        if all(conv.restrict(element_from_word(word)) == target for word, target in targets.items())
    ]
    if len(matches) != 1:
        raise ValueError(f"expected exactly one matching localization convention, found {len(matches)}")
    return matches[0]
