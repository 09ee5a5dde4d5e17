"""Batch command-line front end.

Grammar: complementa <build|lattice|check|bounds|verify|export> [flags].
Documented JSON goes to stdout (byte-identical for identical argv);
diagnostics and timing go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bounds import bound_report
from .complementation import (complements, is_completely_factorizable,
                              is_c_separating, is_supercomplemented)
from .constructions import RECIPES, NamedGroup, catalog, catalog_entry
from .groups import GroupError, group_from_dict, group_to_dict
from .series import is_nilpotent
from .subgroups import (LATTICE_CAP, all_subgroups, generated_subgroup,
                        is_abelian, is_elementary_abelian, is_normal,
                        lattice_to_dict, lattice_to_dot)
from .verify import (reports_to_dicts, run_catalog_suite, summarize,
                     verify_holomorph8, verify_split_p5)

_CATALOG_NAMES = None


def _catalog_names():
    global _CATALOG_NAMES
    if _CATALOG_NAMES is None:
        _CATALOG_NAMES = {e.name for e in catalog()}
    return _CATALOG_NAMES


def _resolve_group(args) -> NamedGroup:
    """Recipe name, catalog entry name, or path to a cayley-v1 JSON file."""
    recipe = args.recipe
    if recipe is None:
        raise GroupError("--recipe is required for this subcommand")
    if os.path.exists(recipe) or recipe.endswith(".json"):
        with open(recipe, "r", encoding="utf-8") as fh:
            return NamedGroup(group_from_dict(json.load(fh)))
    if recipe in _catalog_names():
        return catalog_entry(recipe).build()
    if recipe in RECIPES:
        params = {}
        if recipe in ("cyclic", "dihedral", "holomorph"):
            if args.n is None:
                raise GroupError(f"recipe {recipe!r} needs --n")
            params["n"] = args.n
        elif recipe == "elementary":
            if args.p is None or args.n is None:
                raise GroupError("recipe 'elementary' needs --p and --n (rank)")
            params = {"p": args.p, "rank": args.n}
        elif recipe == "split-p5":
            if args.p is None:
                raise GroupError("recipe 'split-p5' needs --p")
            params = {"p": args.p}
        return RECIPES[recipe](**params)
    raise GroupError(f"unknown recipe {recipe!r}")


def _resolve_subgroup(nm: NamedGroup, spec: str):
    if spec in nm.subgroups:
        return nm.subgroups[spec]
    try:
        elems = [int(t) for t in spec.split(",") if t.strip() != ""]
    except ValueError:
        raise GroupError(
            f"unknown subgroup handle {spec!r}; have {sorted(nm.subgroups)} "
            "or use a comma-separated element index list") from None
    bad = [e for e in elems if not 0 <= e < nm.group.order]
    if bad:
        raise GroupError(f"element indices out of range: {bad}")
    return generated_subgroup(nm.group, elems)


def _emit(args, payload: str):
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _emit_json(args, obj):
    _emit(args, json.dumps(obj, indent=2) + "\n")


def cmd_build(args) -> int:
    nm = _resolve_group(args)
    _emit_json(args, group_to_dict(nm.group))
    return 0


def cmd_lattice(args) -> int:
    nm = _resolve_group(args)
    lat = all_subgroups(nm.group, cap=args.cap)
    if args.format == "dot":
        _emit(args, lattice_to_dot(lat))
    else:
        _emit_json(args, lattice_to_dict(lat))
    return 0


_PREDICATES = ("complemented", "supercomplemented", "completely-factorizable",
               "c-separating", "normal", "abelian", "elementary-abelian",
               "nilpotent")


def cmd_check(args) -> int:
    nm = _resolve_group(args)
    g = nm.group
    result: dict = {"predicate": args.predicate}
    if args.predicate in ("completely-factorizable", "nilpotent"):
        sub = None
    else:
        if args.subgroup is None:
            raise GroupError(f"predicate {args.predicate!r} needs --subgroup")
        sub = _resolve_subgroup(nm, args.subgroup)
        result["subgroup"] = {"order": sub.order, "members": list(sub.elements())}
    if args.predicate == "complemented":
        res = complements(g, sub, mode=args.mode, cap=args.cap)
        result["result"] = bool(res.complements)
        result["complements"] = [list(t.elements()) for t in res.complements]
        result["exhaustive"] = res.exhaustive
    elif args.predicate == "supercomplemented":
        ok, wit = is_supercomplemented(g, sub, cap=args.cap)
        result["result"] = ok
        result["witness"] = list(wit.elements()) if wit else None
    elif args.predicate == "completely-factorizable":
        ok, wit = is_completely_factorizable(g, cap=args.cap)
        result["result"] = ok
        result["witness"] = list(wit.elements()) if wit else None
    elif args.predicate == "c-separating":
        result["result"] = is_c_separating(g, sub, cap=args.cap)
    elif args.predicate == "normal":
        result["result"] = is_normal(g, sub)
    elif args.predicate == "abelian":
        result["result"] = is_abelian(sub)
    elif args.predicate == "elementary-abelian":
        result["result"] = is_elementary_abelian(sub)
    elif args.predicate == "nilpotent":
        result["result"] = is_nilpotent(g)
    _emit_json(args, result)
    return 0


def cmd_bounds(args) -> int:
    report = bound_report(args.m, q=args.q)
    _emit_json(args, report.to_dict())
    return 0


def cmd_verify(args) -> int:
    suite = args.suite
    if suite == "holomorph8":
        reports = verify_holomorph8()
    elif suite in ("split-p5", "split-p5-2", "split-p5-3"):
        p = args.p if suite == "split-p5" else int(suite.rsplit("-", 1)[1])
        if p is None:
            raise GroupError("suite 'split-p5' needs --p")
        reports = verify_split_p5(p)
    elif suite in ("catalog", "all"):
        reports = run_catalog_suite()
    elif suite.startswith("catalog:"):
        names = [n for n in suite.split(":", 1)[1].split(",") if n]
        reports = run_catalog_suite(names=names)
    else:
        raise GroupError(f"unknown suite {suite!r}; use holomorph8, split-p5-2, "
                         "split-p5-3, catalog, all, or catalog:<names>")
    counts = summarize(reports)
    if args.json:
        _emit_json(args, reports_to_dicts(reports, timing=False))
    else:
        lines = [f"{r.claim}: {r.status}" for r in reports]
        _emit(args, "\n".join(lines) + "\n")
    print(f"pass={counts['pass']} fail={counts['fail']} skipped={counts['skipped']}",
          file=sys.stderr)
    return 1 if counts["fail"] else 0


def cmd_export(args) -> int:
    nm = _resolve_group(args)
    if args.format == "cayley":
        _emit_json(args, group_to_dict(nm.group))
    elif args.format == "lattice":
        _emit_json(args, lattice_to_dict(all_subgroups(nm.group, cap=args.cap)))
    elif args.format == "dot":
        _emit(args, lattice_to_dot(all_subgroups(nm.group, cap=args.cap)))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="complementa",
        description="Finite-group complementation analysis over multiplication tables.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, recipe=True):
        if recipe:
            p.add_argument("--recipe", help="recipe name, catalog entry, or cayley-v1 JSON path")
            p.add_argument("--p", type=int, help="prime parameter for parametrized recipes")
            p.add_argument("--n", type=int, help="order/rank parameter for parametrized recipes")
        p.add_argument("--json", action="store_true", help="emit machine-readable JSON")
        p.add_argument("--out", help="write output to a file instead of stdout")
        p.add_argument("--cap", type=int, default=LATTICE_CAP,
                       help="lattice size cap override")

    p_build = sub.add_parser("build", help="construct a group and emit cayley-v1 JSON")
    add_common(p_build)
    p_build.set_defaults(func=cmd_build)

    p_lat = sub.add_parser("lattice", help="enumerate the subgroup lattice")
    add_common(p_lat)
    p_lat.add_argument("--format", choices=("json", "dot"), default="json")
    p_lat.set_defaults(func=cmd_lattice)

    p_check = sub.add_parser("check", help="decide a predicate for a subgroup")
    p_check.add_argument("predicate", choices=_PREDICATES)
    add_common(p_check)
    p_check.add_argument("--subgroup", help="handle name (x, a, b, B, ...) or index list")
    p_check.add_argument("--mode", choices=("first", "all"), default="first")
    p_check.set_defaults(func=cmd_check)

    p_bounds = sub.add_parser("bounds", help="print the numeric bound report for m")
    p_bounds.add_argument("--m", type=int, required=True)
    p_bounds.add_argument("--q", type=int)
    add_common(p_bounds, recipe=False)
    p_bounds.set_defaults(func=cmd_bounds)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", required=True)
    add_common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_export = sub.add_parser("export", help="write a group or lattice to a file")
    add_common(p_export)
    p_export.add_argument("--format", choices=("cayley", "lattice", "dot"),
                          default="cayley")
    p_export.set_defaults(func=cmd_export)
    return parser


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (GroupError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
