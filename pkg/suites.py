#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
suites.py
=========

Verification checks grouped by scope.  Every check is a function of the run
configuration returning (passed, detail) and is registered with @check under
its scope, a short name and an anchor naming the identity it verifies.

Randomized checks draw rationals from numpy generators seeded by
SeedSequence(seed).spawn(n_chunks); samples are cut into CHUNK_SIZE pieces so
the drawn values do not depend on --threads.
"""

from __future__ import annotations

import multiprocessing as mp
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np
import sympy as sp

import classes
import multidegree as md
import octonion as oc
import orbits as ob
import triality as tr
import weyl_g2 as wg
from exactalg import (
    ALPHA, ALPHA_TO_T, MultiPoly, T, WeightVector, change_basis, from_chern, to_chern, weight_of,
)

SCOPES = ("octonion", "triality", "weyl", "orbits", "classes")
CHUNK_SIZE = 100
NUMERATOR_RANGE = 9
DENOMINATOR_RANGE = 5
S3_SAMPLES = 50
TORUS_PAIRS = 5
CONE_PARAMETERS = (1, 2, -1, Fraction(1, 2), 3)


@dataclass(frozen=True)
class RunConfig:
    samples: int = 1000
    seed: int = 0
    threads: int = 1


@dataclass(frozen=True)
class CheckSpec:
    scope: str
    name: str
    anchor: str
    run: Callable[[RunConfig], tuple[bool, str]]


SUITES: dict[str, list[CheckSpec]] = {scope: [] for scope in SCOPES}


def check(scope: str, name: str, anchor: str):
    def register(fn):
        SUITES[scope].append(CheckSpec(scope, name, anchor, fn))
        return fn
    return register


def _verdict(mismatches: list, what: str) -> tuple[bool, str]:
    if mismatches:
        return False, f"{len(mismatches)} {what} mismatch(es), first: {mismatches[0]}"
    return True, ""


# -- sampling -----------------------------------------------------------------
def random_rational(rng: np.random.Generator, nonzero: bool = False) -> Fraction:
    while True:
        num = int(rng.integers(-NUMERATOR_RANGE, NUMERATOR_RANGE + 1))
        den = int(rng.integers(1, DENOMINATOR_RANGE + 1))
        if num or not nonzero:
            return Fraction(num, den)


def random_tangent_vector(rng: np.random.Generator) -> tr.TangentVector:
    return tr.TangentVector.from_coords([random_rational(rng) for _ in tr.FIELDS])


def _linear_form(rng):
    return (random_rational(rng), random_rational(rng))


def random_cubic_map(rng: np.random.Generator, kind: int) -> tr.TrialitySymmetricMap:
    """z = 0 samples: generic, double root, triple root, rank-one cone point."""
    if kind == 0:
        return tr.TrialitySymmetricMap(*(random_rational(rng) for _ in range(4)))
    if kind == 3:
        return ob.rank_one_cone_point(random_rational(rng), random_rational(rng))
    l1, l2 = _linear_form(rng), _linear_form(rng)
    f = ob.cubic_from_linear_forms([l1, l1, l2] if kind == 1 else [l1, l1, l1])
    return tr.TrialitySymmetricMap(f.a, f.b, f.c, f.d)


def sample_chunks(worker, cfg: RunConfig) -> list:
    n_chunks = max(1, -(-cfg.samples // CHUNK_SIZE))
    seeds = np.random.SeedSequence(cfg.seed).spawn(n_chunks)
    tasks = [(min(CHUNK_SIZE, cfg.samples - k * CHUNK_SIZE), seeds[k]) for k in range(n_chunks)]
    if cfg.threads > 1:
        with mp.Pool(min(cfg.threads, n_chunks)) as pool:
            return pool.map(worker, tasks)
    return [worker(t) for t in tasks]


def _orbit_sample_worker(args) -> list[str]:
    n, seed = args
    rng = np.random.default_rng(seed)
    bad = []
    for k in range(n):
        m = random_cubic_map(rng, k % 4)
        label = ob.classify(m)
        rank = tr.morphism_rank(m.embed())
        profile = ob.classify_by_multiplicity(ob.BinaryCubic.from_map(m))
        if (rank == 1) != (label is ob.OrbitLabel.O3) or ob.PROFILE_OF_ORBIT[label] != profile:
            bad.append(f"{m.to_json()} -> {label}, rank {rank}, profile {profile}")
    return bad


def _rank_one_worker(args) -> list[str]:
    n, seed = args
    rng = np.random.default_rng(seed)
    bad = []
    for k in range(n):
        if k % 2:
            v = ob.rank_one_cone_point(random_rational(rng), random_rational(rng)).embed()
        else:
            row = [random_rational(rng) for _ in range(4)]
            lam, mu = random_rational(rng), random_rational(rng)
            v = tr.TangentVector.from_coords([lam * x for x in row] + [mu * x for x in row] + [0])
        symmetric = tr.is_triality_symmetric(v) is not None
        if symmetric != oc.is_g2_isotropic(*tr.graph_of(v)):
            bad.append(str(v.to_json()))
    return bad


def random_octonion(rng: np.random.Generator) -> oc.OctonionElement:
    return oc.OctonionElement(tuple(random_rational(rng) for _ in range(oc.DIM)))


def _composition_worker(args) -> list[str]:
    n, seed = args
    rng = np.random.default_rng(seed)
    bad = []
    for _ in range(n):
        u, v, w = (random_octonion(rng) for _ in range(3))
        if oc.bilinear(oc.multiply(u, w), oc.multiply(v, w)) != oc.bilinear(u, v) * oc.norm(w):
            bad.append(str([u.to_json(), v.to_json(), w.to_json()]))
    return bad


# ---------------------------------------------------------------------------
# octonion
_UV_RING = oc.symbolic_ring("u", "v")
_U_RING = oc.symbolic_ring("u")


@check("octonion", "identity-element", "e = v4 + v5 is a two-sided unit")
def _identity(cfg):
    u = oc.OctonionElement.symbolic("u", _U_RING)
    e = oc.OctonionElement.identity(_U_RING)
    return oc.multiply(e, u) == u and oc.multiply(u, e) == u, ""


@check("octonion", "norm-multiplicativity", "N(uv) = N(u) N(v) in 16 symbolic coordinates")
def _norm_multiplicative(cfg):
    u = oc.OctonionElement.symbolic("u", _UV_RING)
    v = oc.OctonionElement.symbolic("v", _UV_RING)
    diff = oc.norm(oc.multiply(u, v)) - oc.norm(u) * oc.norm(v)
    return diff.is_zero, f"{len(diff)} surviving terms" if diff else ""


@check("octonion", "norm-multiplicativity-sympy", "sympy expansion of N(uv) - N(u) N(v) is zero")
def _norm_multiplicative_sympy(cfg):
    u = oc.OctonionElement.symbolic("u", _UV_RING)
    v = oc.OctonionElement.symbolic("v", _UV_RING)
    expr = oc.norm(oc.multiply(u, v)).to_sympy() - oc.norm(u).to_sympy() * oc.norm(v).to_sympy()
    return sp.expand(expr) == 0, ""


@check("octonion", "composition-polarization", "<uw, vw> = <u, v> N(w) on random rational triples")
def _composition(cfg):
    bad = [b for part in sample_chunks(_composition_worker, cfg) for b in part]
    return _verdict(bad, "triple")


@check("octonion", "bilinear-form-table", "<v_p, v_9-p> = -1 except <v4, v5> = 1; <u, u> = 2 N(u)")
def _gram(cfg):
    gram = oc.gram_matrix()
    basis = [oc.OctonionElement.basis(i) for i in range(1, oc.DIM + 1)]
    bad = [(p + 1, q + 1) for p in range(oc.DIM) for q in range(oc.DIM)
           if oc.bilinear(basis[p], basis[q]) != gram[p, q]]
    u = oc.OctonionElement.symbolic("u", _U_RING)
    if oc.bilinear(u, u) != 2 * oc.norm(u):
        bad.append("polarization")
    return _verdict(bad, "Gram entry")


@check("octonion", "conjugation", "conjugation is an involution fixing e with u ubar = N(u) e")
def _conjugation(cfg):
    u = oc.OctonionElement.symbolic("u", _U_RING)
    e = oc.OctonionElement.identity()
    ok = (oc.conjugate_end(oc.conjugate_end(u)) == u
          and oc.conjugate(oc.conjugate(u)) == u
          and oc.conjugate(e) == e
          and oc.multiply(u, oc.conjugate(u)) == oc.OctonionElement.identity(_U_RING).scale(oc.norm(u)))
    return ok, ""


@check("octonion", "torus-automorphism", "the maximal torus acts by algebra automorphisms")
def _torus(cfg):
    rng = np.random.default_rng(np.random.SeedSequence(cfg.seed).spawn(1)[0])
    u = oc.OctonionElement.symbolic("u", _UV_RING)
    v = oc.OctonionElement.symbolic("v", _UV_RING)
    uv = oc.multiply(u, v)
    bad = []
    for _ in range(TORUS_PAIRS):
        z = (random_rational(rng, nonzero=True), random_rational(rng, nonzero=True))
        if oc.multiply(oc.torus_act(z, u), oc.torus_act(z, v)) != oc.torus_act(z, uv):
            bad.append(tuple(str(x) for x in z))
    return _verdict(bad, "torus pair")


@check("octonion", "character-bookkeeping", "v_i v_j has only components of character chi_i chi_j")
def _characters(cfg):
    return oc.product_characters_consistent(), ""


@check("octonion", "non-associativity", "some basis triple is not associative")
def _nonassociative(cfg):
    triple = oc.find_nonassociative_triple()
    return triple is not None, f"first triple {triple}"


@check("octonion", "E-isotropic", "E = span(v1, v2) is G2-isotropic; (v1, v8) is not")
def _e_isotropic(cfg):
    v = [oc.OctonionElement.basis(i) for i in range(1, oc.DIM + 1)]
    return oc.is_g2_isotropic(v[0], v[1]) and not oc.is_g2_isotropic(v[0], v[7]), ""


# ---------------------------------------------------------------------------
# triality
@check("triality", "s3-relations", "tau^3 = sigma^2 = id and sigma tau sigma = tau^2")
def _s3_relations(cfg):
    rng = np.random.default_rng(np.random.SeedSequence(cfg.seed).spawn(2)[1])
    bad = []
    for _ in range(S3_SAMPLES):
        v = random_tangent_vector(rng)
        if (tr.s3_act("tau tau tau", v) != v or tr.s3_act("sigma sigma", v) != v
                or tr.s3_act("sigma tau sigma", v) != tr.s3_act("tau tau", v)):
            bad.append(v.to_json())
    return _verdict(bad, "sample")


@check("triality", "fixed-spaces", "Fix(tau) = Fix(sigma, tau) = image of embed")
def _fixed_spaces(cfg):
    image = tr.symmetric_subspace_basis()
    ok = (tr.spans_equal(tr.fixed_space(("tau",)), image)
          and tr.spans_equal(tr.fixed_space(("sigma", "tau")), image))
    return ok, f"dim Fix(tau) = {len(tr.fixed_space(('tau',)))}"


@check("triality", "symbolic-invariance", "tau and sigma fix embed(a, b, c, d, z) symbolically")
def _symbolic_invariance(cfg):
    v = tr.TrialitySymmetricMap.symbolic().embed()
    return tr.apply_generator("tau", v) == v and tr.apply_generator("sigma", v) == v, ""


@check("triality", "graph-frame-isotropy-ideal",
       "graph frame is G2-isotropic iff a^2 + bd = ac + d^2 = ad - bc = 0")
def _isotropy_ideal(cfg):
    m = tr.TrialitySymmetricMap.symbolic()
    order = md.TermOrder(md.DEGREVLEX, tr.U_VARS)
    conditions = tr.isotropy_ideal_generators(m)
    return md.ideals_equal(conditions, tr.isotropy_quadrics(), order), f"{len(conditions)} conditions"


@check("triality", "graph-frame-rows", "both graph-frame rows lie in V")
def _frame_rows(cfg):
    frame = tr.graph_frame(tr.TrialitySymmetricMap.symbolic())
    zero = tr.graph_frame(tr.TrialitySymmetricMap())
    return frame.rows_in_V() and zero.is_graph and oc.is_g2_isotropic(*zero.rows), ""


@check("triality", "rank-one-isotropy", "a rank <= 1 map with z = 0 is symmetric iff its graph is G2-isotropic")
def _rank_one(cfg):
    bad = [b for part in sample_chunks(_rank_one_worker, cfg) for b in part]
    return _verdict(bad, "rank-one sample")


# ---------------------------------------------------------------------------
# weyl
@check("weyl", "group-closure", "<s, t> has exactly 12 elements in S7")
def _closure(cfg):
    closure = wg.group_closure()
    return len(closure) == 12 and closure == {w.perm for w in wg.all_elements()}, f"{len(closure)} elements"


@check("weyl", "coxeter-relations", "s^2 = t^2 = (st)^6 = id")
def _relations(cfg):
    return wg.relations_hold(), ""


@check("weyl", "tst-permutation", "tst corresponds to 3 6 1 4 7 2 5 and r_tst(2, 2) = 1")
def _tst(cfg):
    w = wg.element_from_word("tst")
    return w.perm == (3, 6, 1, 4, 7, 2, 5) and wg.rank_function(w, 2, 2) == 1, str(w.perm)


@check("weyl", "locus-lengths", "lengths of id, tst, tstst equal the expected codimensions 0, 3, 5")
def _locus_lengths(cfg):
    bad = [r for r in (2, 1, 0) if wg.locus_element(r).length != classes.LOCUS_ORBITS[r].codimension]
    return _verdict(bad, "locus")


@check("weyl", "weight-action", "w(wt_i) = wt_w(i) for every w and every weight of V")
def _weight_action(cfg):
    bad = [(w.word, i) for w in wg.all_elements() for i in range(1, wg.RANK + 1)
           if w.act(wg.V_WEIGHTS[i - 1]) != wg.V_WEIGHTS[w(i) - 1]]
    return _verdict(bad, "weight")


@check("weyl", "root-data", "six positive roots with alpha2 long and alpha1 short")
def _root_data(cfg):
    rd = wg.ROOT_DATA
    ok = (len(rd.positive) == 6 and rd.is_long(rd.simple[1]) and not rd.is_long(rd.simple[0])
          and sorted(w.length for w in wg.all_elements()) == sorted(len(w.inversions()) for w in wg.all_elements()))
    return ok, ""


@check("weyl", "billey-properties",
       "restrictions: id -> 1, zero below length, w|w = product of inversions, word independent")
def _billey(cfg):
    bad = []
    elements = wg.all_elements()
    for v in elements:
        words = wg.reduced_words(v)
        for w in elements:
            values = {wg.billey_restriction(w, v, word) for word in words}
            if len(values) != 1:
                bad.append(f"{w.word}|{v.word}: word dependent")
                continue
            value = values.pop()
            if w.length == 0 and value != 1:
                bad.append(f"id|{v.word}")
            if w.length > v.length and not value.is_zero:
                bad.append(f"{w.word}|{v.word}")
            if w == v:
                expected = MultiPoly.one(wg.T_VARS)
                for beta in v.inversions():
                    expected = expected * beta.to_basis(T).as_poly()
                if value != expected:
                    bad.append(f"{w.word}|{w.word}")
    return _verdict(bad, "restriction")


@check("weyl", "localization-pin", "exactly one point/sign convention reproduces [O3] and [O5]")
def _pin(cfg):
    targets = {
        "": classes.orbit_class(ob.OrbitLabel.O0, T),
        "tst": classes.orbit_class(ob.OrbitLabel.O3, T),
        "tstst": classes.orbit_class(ob.OrbitLabel.O5, T),
    }
    conv = wg.pin_localization_convention(targets)
    return (conv.point, conv.sign) == ("w0", wg.NEGATIVE_ROOTS), str(conv.to_json())


# ---------------------------------------------------------------------------
# orbits
@check("orbits", "representatives", "each orbit representative classifies to its own orbit")
def _representatives(cfg):
    bad = [str(L) for L in ob.OrbitLabel if ob.classify(ob.orbit_representative(L)) is not L]
    return _verdict(bad, "orbit")


@check("orbits", "discriminant-quartic", "the printed-dictionary discriminant is the stated quartic")
def _quartic(cfg):
    printed = ob.discriminant(ob.BinaryCubic.symbolic(ob.PRINTED))
    return printed == MultiPoly.parse(ob.PRINTED_QUARTIC, ob.U_PRIME_VARS), str(printed)


@check("orbits", "discriminant-tensor", "tensor discriminant = quartic at (3a, b, c, 3d)")
def _tensor_discriminant(cfg):
    a, b, c, d = MultiPoly.gens(ob.U_PRIME_VARS)
    printed = ob.discriminant(ob.BinaryCubic.symbolic(ob.PRINTED))
    scaled = printed.substitute({"a": 3 * a, "d": 3 * d})
    return ob.discriminant(ob.BinaryCubic.symbolic()) == scaled, ""


@check("orbits", "discriminant-sympy", "sympy.discriminant of the tensor cubic agrees")
def _discriminant_sympy(cfg):
    f = ob.BinaryCubic.symbolic()
    x = sp.Symbol("x")
    p0, p1, p2, p3 = (c.to_sympy() for c in f.form())
    expected = sp.discriminant(p0 * x ** 3 + p1 * x ** 2 + p2 * x + p3, x)
    return sp.expand(ob.discriminant(f).to_sympy() - expected) == 0, ""


@check("orbits", "discriminant-weight", "the discriminant has weight -6 alpha1 - 4 alpha2")
def _discriminant_weight(cfg):
    target = WeightVector((-6, -4), ALPHA)
    weights = {name: weight_of(ob.discriminant(ob.BinaryCubic.symbolic(name)), ob.COORDINATE_WEIGHTS)
               for name in ob.DICTIONARY_SCALE}
    return all(w == target for w in weights.values()), str({k: str(v) for k, v in weights.items()})


@check("orbits", "closure-nesting", "the discriminant vanishes on the rank-one cone")
def _nesting(cfg):
    ring = ("b", "l")
    b, lam = MultiPoly.gens(ring)
    disc = ob.discriminant(ob.BinaryCubic.symbolic())
    on_cone = disc.substitute({"a": b * lam, "b": b, "c": -b * lam ** 3, "d": -b * lam ** 2}, ring)
    chain = [L.codimension for L in ob.OrbitLabel]
    return on_cone.is_zero and chain == sorted(chain), str(on_cone)


@check("orbits", "cubic-dictionary", "only the tensor dictionary gives rank-one maps a triple root")
def _dictionary(cfg):
    points = [ob.rank_one_cone_point(1, lam) for lam in CONE_PARAMETERS]
    return ob.pin_cubic_dictionary(points) == ob.TENSOR, ""


@check("orbits", "classifier-agreement",
       "rank 1 iff O3, and equation and gcd classifiers agree on seeded samples")
def _classifier_agreement(cfg):
    bad = [b for part in sample_chunks(_orbit_sample_worker, cfg) for b in part]
    return _verdict(bad, "classifier")


# ---------------------------------------------------------------------------
# classes
@check("classes", "oracle-agreement-x5", "closed-form orbit classes equal their multidegree oracles")
def _oracle(cfg):
    bad = [str(L) for L in ob.OrbitLabel if md.orbit_class_oracle(L) != classes.orbit_class(L, ALPHA)]
    return _verdict(bad, "orbit class")


@check("classes", "oracle-agreement-t-basis", "oracles rewritten in t1, t2 equal the t-basis closed forms")
def _oracle_t(cfg):
    bad = [str(L) for L in ob.OrbitLabel
           if change_basis(md.orbit_class_oracle(L), ALPHA_TO_T) != classes.orbit_class(L, T)]
    return _verdict(bad, "orbit class")


@check("classes", "term-order-independence",
       "degrevlex and lex, each with two variable orders, give the same multidegrees")
def _orders(cfg):
    orders = [md.TermOrder(kind, names) for kind in (md.DEGREVLEX, md.LEX)
              for names in (ob.U_PRIME_VARS, ob.U_PRIME_VARS[::-1])]
    bad = []
    for L in ob.OrbitLabel:
        first = md.orbit_class_oracle(L, orders[0])
        bad.extend(f"{L} under {order}" for order in orders[1:] if md.orbit_class_oracle(L, order) != first)
    return _verdict(bad, "orbit class")


@check("classes", "alpha-t-forms", "the alpha- and t-basis closed forms agree")
def _alpha_t(cfg):
    bad = [str(L) for L in ob.OrbitLabel if not classes.alpha_t_consistent(L)]
    return _verdict(bad, "orbit class")


@check("classes", "class-degrees", "each orbit class is homogeneous of degree its codimension")
def _degrees(cfg):
    bad = [str(L) for L in ob.OrbitLabel
           if not classes.orbit_class(L).is_homogeneous() or classes.orbit_class(L).total_degree != L.codimension]
    return _verdict(bad, "orbit class")


@check("classes", "groebner-sympy", "reduced Groebner bases agree with sympy.groebner")
def _groebner_sympy(cfg):
    bad = []
    gens = sp.symbols(ob.U_PRIME_VARS)
    for label in (ob.OrbitLabel.O2, ob.OrbitLabel.O3, ob.OrbitLabel.O5):
        ideal = md.orbit_ideal(label)
        for kind, sym_order in ((md.DEGREVLEX, "grevlex"), (md.LEX, "lex")):
            order = md.TermOrder(kind)
            ours = md.buchberger(ideal, order)
            theirs = sp.groebner([g.to_sympy() for g in ideal.generators], *gens, order=sym_order)
            theirs = {md.monic(MultiPoly.from_sympy(e, ob.U_PRIME_VARS), order) for e in theirs.exprs}
            if set(ours) != theirs or not md.is_groebner(ours, order):
                bad.append(f"{label} {kind}")
    return _verdict(bad, "basis")


@check("classes", "degeneracy-loci", "P_r is [O-bar] under t -> -x with the stated Chern forms")
def _loci(cfg):
    bad = []
    for r in (2, 1, 0):
        P = classes.locus_class(r)
        if (classes.locus_from_orbit(r) != P.root_form or to_chern(P.root_form) != P.chern_form
                or from_chern(P.chern_form) != P.root_form or P.root_form.total_degree != P.expected_codim
                or classes.chern_degrees(P.chern_form) != {P.expected_codim}):
            bad.append(f"r={r}")
    return _verdict(bad, "locus")
