"""Command-line front end.

Exit codes: 0 success (for ``classify``: the group is a knot group for
some dimension), 10 not a knot group, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import moves
from .classifier import KnotVerdict, Witness, classify
from .dsl import load, serialize
from .graph_model import GbsError, betti1, spanning_tree
from .presentation import (
    Word,
    abelianization,
    build_presentation,
    quotient_abelianization,
)
from .modular import modular_image
from .words import equal, is_elliptic, normal_form

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NOT_KNOT = 10


def _shape_json(verdict: KnotVerdict):
    sh = verdict.shape
    view = sh.segment or sh.cycle
    return {
        "kind": sh.kind,
        "pairs": [list(p) for p in view.pairs] if view else None,
        "reason": sh.reason,
    }


def _witness_json(w: Witness):
    return {
        "source": str(w.source),
        "k": w.source.k,
        "l": w.source.l,
        "images": {sym: str(word) for sym, word in w.images},
        "elimination": [
            {
                "generator": step.generator,
                "alpha": step.alpha,
                "beta": step.beta,
                "word": str(step.word),
            }
            for step in w.elimination
        ],
        "verified": w.verified,
    }


def report(path: str, verdict: KnotVerdict) -> dict:
    one, nk = verdict.one_knot, verdict.n_knot_ge3
    return {
        "input": path,
        "reduced_graph": serialize(verdict.reduced),
        "shape": _shape_json(verdict),
        "betti1": verdict.betti1,
        "abelianization": {
            "rank": verdict.abelianization.free_rank,
            "torsion": list(verdict.abelianization.torsion),
        },
        "modular": {
            "generators": [str(f) for f in verdict.modular.generators],
            "tag": verdict.modular.tag,
        },
        "one_knot": {
            "kind": one.kind,
            "p": one.p,
            "q": one.q,
            "both_prime": one.both_prime,
            "reason": one.reason,
        },
        "n_knot_ge3": {
            "kind": nk.kind,
            "family": nk.family,
            "k": nk.k,
            "l": nk.l,
            "reason": nk.reason,
        },
        "exceptional": verdict.exceptional,
        "witnesses": [_witness_json(w) for w in verdict.witnesses],
    }


def _verdict_exit(verdict: KnotVerdict) -> int:
    if verdict.one_knot.kind in ("yes", "unknot") or verdict.n_knot_ge3.kind in (
        "yes",
        "unknot",
    ):
        return EXIT_OK
    return EXIT_NOT_KNOT


def _print_classification(verdict: KnotVerdict) -> None:
    one, nk = verdict.one_knot, verdict.n_knot_ge3
    sh = verdict.shape
    view = sh.segment or sh.cycle
    pairs = " ".join(f"({k},{l})" for k, l in view.pairs) if view else ""
    print(f"shape: {sh.kind}" + (f" {pairs}" if pairs else "") + (f" [{sh.reason}]" if sh.reason else ""))
    print(f"betti1: {verdict.betti1}")
    print(f"abelianization: {verdict.abelianization}")
    gens = " ".join(str(f) for f in verdict.modular.generators) or "(none)"
    print(f"modular image: {verdict.modular.tag}; generators: {gens}")
    if one.kind == "yes":
        primes = "both prime" if one.both_prime else "not both prime"
        print(f"1-knot group: yes, T({one.p},{one.q}) ({primes})")
    elif one.kind == "unknot":
        print("1-knot group: unknot (infinite cyclic)")
    else:
        print(f"1-knot group: no ({one.reason})")
    if nk.kind == "yes":
        family = "T" if nk.family == "torus" else "BS"
        verified = "verified" if nk.witness and nk.witness.verified else "UNVERIFIED"
        print(f"n-knot group (n>=3): yes, image of {family}({nk.k},{nk.l}) [{verified}]")
    elif nk.kind == "unknot":
        print("n-knot group (n>=3): unknot (infinite cyclic)")
    else:
        print(f"n-knot group (n>=3): no ({nk.reason})")
    if verdict.exceptional:
        print(f"exceptional group: {verdict.exceptional}")


def _cmd_classify(args) -> int:
    if os.path.isdir(args.file):
        status = EXIT_OK
        for name in sorted(os.listdir(args.file)):
            if not name.endswith(".gbs"):
                continue
            path = os.path.join(args.file, name)
            try:
                verdict = classify(load(path))
            except GbsError as exc:
                print(f"error: {path}: {exc}", file=sys.stderr)
                status = EXIT_INPUT
                continue
            print(json.dumps(report(path, verdict), separators=(",", ":")))
        return status
    verdict = classify(load(args.file))
    if args.json:
        print(json.dumps(report(args.file, verdict), indent=2))
    else:
        _print_classification(verdict)
    return _verdict_exit(verdict)


def _cmd_validate(args) -> int:
    g = load(args.file)
    print(f"ok: {len(g.vertices)} vertices, {len(g.edges)} edges, betti1 {betti1(g)}")
    return EXIT_OK


def _cmd_reduce(args) -> int:
    g = moves.reduce(load(args.file))
    if args.signs:
        g = moves.canonicalize_signs(g)
    sys.stdout.write(serialize(g))
    return EXIT_OK


def _cmd_present(args) -> int:
    g = load(args.file)
    p = build_presentation(g, spanning_tree(g))
    print("generators:", " ".join(p.generators))
    for r in p.relators:
        print(r)
    return EXIT_OK


def _cmd_abelianize(args) -> int:
    g = load(args.file)
    if args.kill:
        p = build_presentation(g, spanning_tree(g))
        extra = [Word.parse(w) for w in args.kill]
        print(quotient_abelianization(p, extra))
    else:
        print(abelianization(g))
    return EXIT_OK


def _cmd_modular(args) -> int:
    image = modular_image(load(args.file))
    gens = " ".join(str(f) for f in image.generators) or "(none)"
    print(f"tag: {image.tag}; generators: {gens}")
    return EXIT_OK


def _cmd_witness(args) -> int:
    verdict = classify(load(args.file))
    if not verdict.witnesses:
        print("no witness: " + (verdict.n_knot_ge3.reason or "group is infinite cyclic"))
        return EXIT_OK
    for w in verdict.witnesses:
        status = "verified" if w.verified else "UNVERIFIED"
        images = ", ".join(f"{sym} -> {word}" for sym, word in w.images)
        print(f"source {w.source}: {images} [{status}]")
        for step in w.elimination:
            print(
                f"  {step.generator} = {step.word}"
                f"  (alpha={step.alpha}, beta={step.beta})"
            )
    return EXIT_OK


def _cmd_word(args) -> int:
    g = load(args.file)
    tree = spanning_tree(g)
    w = Word.parse(args.word)
    if args.equal is not None:
        print("true" if equal(g, tree, w, Word.parse(args.equal)) else "false")
    elif args.elliptic:
        print("true" if is_elliptic(g, tree, w) else "false")
    else:
        print(normal_form(g, tree, w))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gbsknot",
        description="Labeled-graph calculator: is this group a knot group?",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a graph file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("reduce", help="print the reduced graph")
    p.add_argument("file")
    p.add_argument("--signs", action="store_true", help="also normalize label signs")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("present", help="print the group presentation")
    p.add_argument("file")
    p.set_defaults(func=_cmd_present)

    p = sub.add_parser("abelianize", help="print the abelianized group")
    p.add_argument("file")
    p.add_argument("--kill", nargs="+", metavar="WORD", help="extra relators")
    p.set_defaults(func=_cmd_abelianize)

    p = sub.add_parser("modular", help="print the modular image in Q*")
    p.add_argument("file")
    p.set_defaults(func=_cmd_modular)

    p = sub.add_parser("classify", help="full knot-group classification")
    p.add_argument("file", help="a .gbs file, or a directory of them")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("witness", help="print verified homomorphism witnesses")
    p.add_argument("file")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("word", help="normal form, equality and ellipticity")
    p.add_argument("file")
    p.add_argument("word")
    p.add_argument("--equal", metavar="WORD")
    p.add_argument("--elliptic", action="store_true")
    p.set_defaults(func=_cmd_word)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GbsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
