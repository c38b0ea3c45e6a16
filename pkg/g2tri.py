#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
g2tri.py
========

Command-line front end: verify the identities behind the classes of
triality-symmetric degeneracy loci, classify symmetric maps, and print the
orbit and locus classes.  JSON goes to stdout, progress and errors to stderr.

Usage
-----
    python g2tri.py verify [--scope all|octonion|triality|weyl|orbits|classes]
                           [--samples 1000] [--seed 0] [--threads 1] [--json] [--out report.json]
    python g2tri.py classify '{"a": "1", "b": "0", "c": "0", "d": "0", "z": "0"}'
    python g2tri.py classify --file map.json        (or "-" for stdin)
    python g2tri.py classes [--format alpha|t|chern] [--oracle] [--order degrevlex|lex]
    python g2tri.py octonion mul|norm|bilinear '["1","0",...]' ['[...]']
    python g2tri.py weyl info|rank-table WORD
    python g2tri.py weyl billey W V [--word WORD] [--sign roots|negative-roots]
    python g2tri.py weyl convention
    python g2tri.py locus R --c1 C1 --c2 C2 [--bundle Estar|E]

Rationals are strings such as "-3/2"; words are strings in s and t ("e" is
the identity).

Exit codes
----------
  0   success (every check passed)
  1   at least one verification check failed
  2   malformed input
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import pandas as pd

import classes
import multidegree as md
import octonion as oc
import orbits as ob
import weyl_g2 as wg
from exactalg import ALPHA, ALPHA_TO_T, T, MultiPoly, as_rational, change_basis, to_chern
from pipeline import ALL, log, run_verification
from suites import SCOPES
from triality import TrialitySymmetricMap

FORMATS = (ALPHA, T, "chern")
BUNDLES = ("Estar", "E")


class InputError(ValueError):
    pass


def emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")


def _load_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what} is not valid JSON: {exc}") from None


# ---------------------------------------------------------------------------
def cmd_verify(args) -> int:
    report = run_verification(args.scope, samples=args.samples, seed=args.seed, threads=args.threads)
    payload = report.to_json()
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
        log("[saved]", args.out)
    if args.json:
        emit(payload)
    else:
        emit({key: payload[key] for key in ("scopes", "samples", "seed", "summary")}
             | {"failures": [f"{c.scope}/{c.name}" for c in report.failures()]})
    for c in report.failures():
        log(f"[FAIL] {c.scope}/{c.name} ({c.anchor}): {c.detail}")
    return report.exit_code


def cmd_classify(args) -> int:
    if args.file is not None:
        text = sys.stdin.read() if str(args.file) == "-" else args.file.read_text(encoding="utf-8")
    elif args.map is not None:
        text = sys.stdin.read() if args.map == "-" else args.map
    else:
        raise InputError("give the map as a JSON argument or with --file")
    m = TrialitySymmetricMap.from_json(_load_json(text, "input"))
    out = ob.classify_report(m)
    label = ob.OrbitLabel[out["orbit"]]
    out["class_alpha"] = str(classes.orbit_class(label, ALPHA))
    out["class_t"] = str(classes.orbit_class(label, T))
    emit(out)
    return 0


def render(alpha_poly: MultiPoly, fmt: str) -> str:
    """An alpha-basis class in the requested basis; chern goes through t -> -x."""
    if fmt == ALPHA:
        return str(alpha_poly)
    t_poly = change_basis(alpha_poly, ALPHA_TO_T)
    if fmt == T:
        return str(t_poly)
    x1, x2 = MultiPoly.gens(("x1", "x2"))
    return str(to_chern(t_poly.substitute({"t1": -x1, "t2": -x2}, ("x1", "x2"))))


def oracle_json(record: md.OracleRecord) -> dict:
    """Closed form beside the Groebner computation for one orbit."""
    closed = classes.orbit_class(record.label, ALPHA)
    full = record.to_json()
    return {
        "orbit": record.label.name,
        "closed_form_alpha": str(closed),
        "closed_form_t": str(classes.orbit_class(record.label, T)),
        "oracle_alpha": str(record.polynomial),
        "match": record.polynomial == closed,
        "groebner_basis": full["groebner_basis"],
        "initial_ideal": full["initial_ideal"],
        "components": full.get("components", []),
    }


def cmd_classes(args) -> int:
    order = md.TermOrder(args.order)
    records = {r.label: r for r in md.oracle_details(order)}
    out = {"format": args.format, "term_order": str(order), "orbits": {}, "loci": {}, "oracle": {}, "match": {}}
    for label in ob.OrbitLabel:
        closed = classes.orbit_class(label, ALPHA)
        oracle = records[label].polynomial
        out["orbits"][label.name] = render(closed, args.format)
        out["oracle"][label.name] = render(oracle, args.format)
        out["match"][label.name] = oracle == closed
    for r in (2, 1, 0):
        P = classes.locus_class(r)
        out["loci"][f"P{r}"] = str(P.chern_form if args.format == "chern" else P.root_form)
        out["match"][f"P{r}"] = classes.locus_from_orbit(r) == P.root_form
    if args.oracle:
        out["oracle_details"] = [oracle_json(records[label]) for label in ob.OrbitLabel]
    emit(out)
    return 0 if all(out["match"].values()) else 1


def cmd_octonion(args) -> int:
    u = oc.OctonionElement.from_json(_load_json(args.u, "u"))
    if args.op == "norm":
        emit({"norm": str(oc.norm(u))})
        return 0
    if args.v is None:
        raise InputError(f"octonion {args.op} needs two elements")
    v = oc.OctonionElement.from_json(_load_json(args.v, "v"))
    if args.op == "mul":
        emit({"product": oc.multiply(u, v).to_json()})
    else:
        emit({"bilinear": str(oc.bilinear(u, v))})
    return 0


def cmd_weyl(args) -> int:
    if args.op == "convention":
        targets = {wg.LOCUS_WORDS[r]: classes.orbit_class(classes.LOCUS_ORBITS[r], T) for r in (2, 1, 0)}
        emit(wg.pin_localization_convention(targets).to_json())
        return 0
    if not args.words:
        raise InputError(f"weyl {args.op} needs a word")
    w = wg.element_from_word(args.words[0])
    if args.op == "info":
        out = w.to_json()
        out["reduced_words"] = wg.reduced_words(w)
        emit(out)
    elif args.op == "rank-table":
        table = wg.rank_table(w)
        labels = list(range(1, wg.RANK + 1))
        log(pd.DataFrame(table, index=pd.Index(labels, name="q"), columns=pd.Index(labels, name="p")).to_string())
        emit({"word": w.word or "e", "rank_table": table})
    else:
        if len(args.words) != 2:
            raise InputError("weyl billey needs two words: W V")
        v = wg.element_from_word(args.words[1])
        value = wg.billey_restriction(w, v, args.word, sign=wg.SIGNS[args.sign])
        emit({"w": w.word or "e", "v": v.word or "e", "sign": args.sign, "restriction": str(value)})
    return 0


def cmd_locus(args) -> int:
    c1, c2 = as_rational(args.c1), as_rational(args.c2)
    if args.bundle == "E":
        c1, c2 = classes.dual_chern(c1, c2)
    out = classes.locus_class(args.r).to_json()
    del out["orbit"]
    out["value"] = str(classes.evaluate_locus(args.r, c1, c2))
    emit(out)
    return 0


# ---------------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="g2tri", description="Triality-symmetric degeneracy loci: exact checks and classes")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--scope", choices=[ALL, *SCOPES], default=ALL)
    p.add_argument("--samples", type=int, default=1000, help="random samples per randomized suite")
    p.add_argument("--seed",    type=int, default=0,    help="RNG seed (default 0)")
    p.add_argument("--threads", type=int, default=1,    help="worker processes for randomized suites")
    p.add_argument("--json", action="store_true", help="print the full report (every check) instead of the summary")
    p.add_argument("--out", type=Path, help="also write the JSON report to this file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="classify a triality-symmetric map {a,b,c,d,z}")
    p.add_argument("map", nargs="?", help="JSON object, or - for stdin")
    p.add_argument("--file", type=Path, help="read the JSON object from a file (- for stdin)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("classes", help="orbit classes and degeneracy-locus classes")
    p.add_argument("--format", choices=FORMATS, default=ALPHA)
    p.add_argument("--order", choices=(md.DEGREVLEX, md.LEX), default=md.DEGREVLEX, help="term order of the oracle")
    p.add_argument("--oracle", action="store_true", help="include Groebner bases and components")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("octonion", help="split-octonion arithmetic on JSON arrays of 8 rationals")
    p.add_argument("op", choices=("mul", "norm", "bilinear"))
    p.add_argument("u")
    p.add_argument("v", nargs="?")
    p.set_defaults(func=cmd_octonion)

    p = sub.add_parser("weyl", help="Weyl group of G2 inside S7")
    p.add_argument("op", choices=("info", "rank-table", "billey", "convention"))
    p.add_argument("words", nargs="*", help="words in s and t")
    p.add_argument("--word", help="reduced word of V used by billey (default: canonical)")
    p.add_argument("--sign", choices=tuple(wg.SIGNS), default=wg.ROOTS)
    p.set_defaults(func=cmd_weyl)

    p = sub.add_parser("locus", help="evaluate P_r at given Chern classes")
    p.add_argument("r", type=int, choices=(0, 1, 2))
    p.add_argument("--c1", required=True)
    p.add_argument("--c2", required=True)
    p.add_argument("--bundle", choices=BUNDLES, default="Estar", help="whose Chern classes are given")
    p.set_defaults(func=cmd_locus)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, TypeError, OSError) as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
