"""Command-line front end.

Exit codes: 0 all good, 1 a verification check failed, 2 usage or
resource-budget error.  Every subcommand takes --json for machine output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .diagram import DiagramError, parse_diagram
from .garside import ArtinEngine, BudgetExceeded, parse_word
from .homology import h1_image, reflection_label
from .nerve import nerve, subdivision
from .raag import RaagError, WordSystem, complex_from_json, generalized_pp_check, pp_search
from .suites import SUITES, run_suite
from .wgroup import build_group


def _load_diagram(spec):
    """A diagram from a file path or inline source text."""
    if os.path.exists(spec):
        with open(spec) as fh:
            return parse_diagram(fh.read())
    return parse_diagram(spec)


def _emit(args, doc, text):
    out = json.dumps(doc, indent=2, sort_keys=True) if args.json else text
    print(out)


def cmd_nf(args):
    eng = ArtinEngine(build_group(_load_diagram(args.group)), args.budget)
    nf = eng.normal_form(parse_word(args.word))
    canon = ["".join(eng.w.reduced_word(u)) for u in nf.canon]
    _emit(args, {"inf": nf.inf, "canon": canon}, nf.describe())
    return 0


def cmd_commute(args):
    eng = ArtinEngine(build_group(_load_diagram(args.group)), args.budget)
    result = eng.commutes(parse_word(args.w1), parse_word(args.w2))
    _emit(args, {"commute": result}, "commute" if result else "do not commute")
    return 0


def cmd_subdivide(args):
    sub = subdivision(_load_diagram(args.diagram), max_rank=args.max_rank)
    if args.out == "dot":
        print(sub.to_dot())
    else:
        print(json.dumps(sub.to_json(), indent=2, sort_keys=True))
    return 0


def cmd_h1(args):
    group = build_group(_load_diagram(args.group))
    vec = h1_image(group, parse_word(args.word))
    entries = {
        reflection_label(group, r): c for r, c in vec.coeffs
    }
    text = " ".join("%s:%d" % (k, v) for k, v in sorted(entries.items()))
    _emit(args, {"coefficients": entries}, text or "0")
    return 0


def cmd_fold(args):
    from .folding import build_folded

    fold = build_folded(_load_diagram(args.diagram))
    print(json.dumps(fold.to_json(), indent=2, sort_keys=True))
    return 0


def cmd_curves(args):
    from .curves import build_system

    system = build_system(args.family, args.rank)
    if args.out == "dot":
        print(system.curve_complex().to_dot("curves"))
    else:
        print(json.dumps(system.to_json(), indent=2, sort_keys=True))
    return 0


def cmd_pp_check(args):
    with open(args.words) as fh:
        doc = json.load(fh)
    cx = complex_from_json(doc)
    words = {
        frozenset(key.split("+")): parse_word(val)
        for key, val in doc.get("words", {}).items()
    }
    system = WordSystem(cx, words)
    if args.split:
        l1, l2 = (part.split(",") for part in args.split)
        verdict = generalized_pp_check(system, l1, l2)
        result = {
            "certified": verdict.certified,
            "reason": verdict.reason,
            "conclusion": verdict.conclusion,
        }
        if verdict.split:
            result["choices"] = [cm.to_json() for cm in verdict.split]
        _emit(args, result, "%s -- %s" % (
            "certified" if verdict.certified else "refuted", verdict.reason))
        return 0 if verdict.certified else 1
    found = pp_search(system)
    if found is None:
        _emit(args, {"pp": False}, "no Property PP choice exists")
        return 1
    _emit(args, {"pp": True, "choice": found.to_json()},
          "PP choice: %s" % found.to_json())
    return 0


def cmd_verify(args):
    config = {}
    if args.config:
        if os.path.exists(args.config):
            with open(args.config) as fh:
                config = json.load(fh)
        else:
            config = json.loads(args.config)
    if args.seed is not None:
        config["seed"] = args.seed
    if args.budget is not None:
        config["budget"] = args.budget
    result = run_suite(args.suite, config)
    if args.json:
        print(json.dumps(result.to_json(), indent=2, sort_keys=True))
    else:
        print(result.to_text())
    return result.exit_code


def cmd_export(args):
    diagram = _load_diagram(args.diagram)
    if args.what == "nerve":
        obj = nerve(diagram, max_rank=args.max_rank)
        if args.format == "dot":
            raise DiagramError("nerve export supports json only")
        print(json.dumps(obj.to_json(), indent=2, sort_keys=True))
    else:
        sub = subdivision(diagram, max_rank=args.max_rank)
        if args.format == "dot":
            print(sub.to_dot())
        else:
            print(json.dumps(sub.to_json(), indent=2, sort_keys=True))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="coxart",
        description="Exact computations in Artin and Coxeter groups. "
        "Group/diagram arguments take a file path or inline text such as "
        "'type A 3' or 'vertex s; vertex t; edge s t 4'. The positive-word "
        "budget honors the COXART_LETTER_BUDGET environment variable.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--budget", type=int, default=None,
                       help="letter budget override")

    p = sub.add_parser("nf", help="Garside normal form of a word")
    p.add_argument("--group", required=True)
    p.add_argument("--word", required=True)
    common(p)
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("commute", help="do two words commute")
    p.add_argument("--group", required=True)
    p.add_argument("--w1", required=True)
    p.add_argument("--w2", required=True)
    common(p)
    p.set_defaults(func=cmd_commute)

    p = sub.add_parser("subdivide", help="partial barycentric subdivision")
    p.add_argument("--diagram", required=True)
    p.add_argument("--out", choices=("json", "dot"), default="json")
    p.add_argument("--max-rank", type=int, default=12)
    common(p)
    p.set_defaults(func=cmd_subdivide)

    p = sub.add_parser("h1", help="abelianization class of a pure word")
    p.add_argument("--group", required=True)
    p.add_argument("--word", required=True)
    common(p)
    p.set_defaults(func=cmd_h1)

    p = sub.add_parser("fold", help="fold into a small-type diagram")
    p.add_argument("--diagram", required=True)
    p.add_argument("--out", choices=("json",), default="json")
    common(p)
    p.set_defaults(func=cmd_fold)

    p = sub.add_parser("curves", help="emit a curve system")
    p.add_argument("--family", required=True,
                   choices=("An", "Dn", "E6F", "E8F", "E7FIG"))
    p.add_argument("--rank", type=int, default=None)
    p.add_argument("--out", choices=("json", "dot"), default="json")
    common(p)
    p.set_defaults(func=cmd_curves)

    p = sub.add_parser("pp-check", help="Property PP search on a word system")
    p.add_argument("--words", required=True,
                   help="JSON file: vertices, edges, words")
    p.add_argument("--split", nargs=2, metavar=("L1", "L2"),
                   help="comma-separated vertex lists for the two parts")
    common(p)
    p.set_defaults(func=cmd_pp_check)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--config", default=None,
                   help="JSON options, inline or a file path")
    p.add_argument("--seed", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="export a complex")
    p.add_argument("--what", choices=("nerve", "subdivision"), required=True)
    p.add_argument("--diagram", required=True)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--max-rank", type=int, default=12)
    common(p)
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print("resource budget exceeded: %s" % exc, file=sys.stderr)
        return 2
    except (DiagramError, RaagError, ValueError, KeyError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
