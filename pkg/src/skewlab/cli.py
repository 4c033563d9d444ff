"""Command-line front end.

Exit codes: 0 ok/simple, 1 not simple, 2 axiom failure (validate) or
disagreement between deciders, 3 malformed or invalid input, 4 guard hit.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .action import MalformedInstance, PartialAction
from .corpus import generate_restriction_action, make_shift_window
from .io import dump_json, instance_to_json, load_instance
from .report import (
    GuardViolation,
    Guards,
    build_corpus,
    check_report,
    header,
    simplicity_report,
    suite_report,
)
from .scalars import FieldSpec

EXIT_OK, EXIT_NOT_SIMPLE, EXIT_DISAGREE, EXIT_MALFORMED, EXIT_GUARD = 0, 1, 2, 3, 4


def _emit(args, text: str, data: dict | None = None):
    """Write JSON (with --json) or text to --out or stdout."""
    payload = dump_json(data) if args.json and data is not None else text
    if args.out:
        Path(args.out).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)


def _guards(args) -> Guards:
    return Guards(args.max_dim, args.max_subspaces, args.bfs_depth)


def _load(args) -> tuple[PartialAction, FieldSpec] | int:
    try:
        theta, field = load_instance(args.path)
    except FileNotFoundError:
        print(f"error: no such file {args.path}", file=sys.stderr)
        return EXIT_MALFORMED
    except MalformedInstance as exc:
        print(f"error: malformed instance {args.path}: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    if getattr(args, "field", None):
        field = FieldSpec.parse(args.field)
    return theta, field or FieldSpec.gf(2)


def _require_valid(theta: PartialAction, path) -> int | None:
    report = theta.validate()
    if report.ok:
        return None
    print(f"error: {path} violates the partial-action axioms:", file=sys.stderr)
    for v in report.violations:
        print(f"  [{v.axiom}] {v.message}", file=sys.stderr)
    return EXIT_MALFORMED


def cmd_validate(args) -> int:
    loaded = _load(args)
    if isinstance(loaded, int):
        return loaded
    theta, _ = loaded
    report = theta.validate()
    data = {"path": str(args.path), "valid": report.ok, "violations": [v.to_json() for v in report.violations]}
    lines = [f"{args.path}: {'pass' if report.ok else 'FAIL'}"]
    for v in report.violations:
        wit = ", ".join(f"{k}={v.to_json()[k]}" for k in ("t", "s", "x") if v.to_json()[k] is not None)
        lines.append(f"  [{v.axiom}] {v.message} ({wit})")
    _emit(args, "\n".join(lines) + "\n", data)
    return EXIT_OK if report.ok else EXIT_DISAGREE


def cmd_check(args) -> int:
    loaded = _load(args)
    if isinstance(loaded, int):
        return loaded
    theta, field = loaded
    bad = _require_valid(theta, args.path)
    if bad is not None:
        return bad
    guards = _guards(args)
    rep = check_report(theta, field, guards)
    data = header(guards, command="check", instance=instance_to_json(theta), **rep)
    w = rep["witnesses"]
    lines = [
        f"dim = {rep['dim']}",
        f"minimal = {str(rep['minimal']).lower()}"
        + (f" (witness {{{','.join(w['invariant_subset'])}}})" if "invariant_subset" in w else ""),
        f"free = {str(rep['free']).lower()}"
        + (f" (witness ({w['fixed_point']['x']}, {w['fixed_point']['t']}))" if "fixed_point" in w else ""),
        f"topologically_free = {str(rep['topologically_free']).lower()}",
        f"g_simple = {str(rep['g_simple']).lower()}",
    ]
    for k, msg in rep.get("errors", {}).items():
        lines.append(f"{k}: guard hit: {msg}")
    _emit(args, "\n".join(lines) + "\n", data)
    return EXIT_OK


def cmd_simplicity(args) -> int:
    loaded = _load(args)
    if isinstance(loaded, int):
        return loaded
    theta, field = loaded
    bad = _require_valid(theta, args.path)
    if bad is not None:
        return bad
    guards = _guards(args)
    try:
        rep = simplicity_report(theta, field, args.method, guards, timings=args.timings)
    except GuardViolation as exc:
        print(f"error: guard violated: {exc}", file=sys.stderr)
        return EXIT_GUARD
    data = header(guards, command="simplicity", method=args.method, **rep)
    lines = [f"field = {field}", f"dim = {rep['dim']}"]
    if "oracle" in rep:
        lines.append(f"oracle: {rep['oracle']}")
    if "theorem2" in rep:
        t2 = rep["theorem2"]
        lines.append(f"theorem 2: {t2['verdict']} (minimal={str(t2['minimal']).lower()}, free={str(t2['free']).lower()})")
    if rep.get("theorem1") is not None:
        t1 = rep["theorem1"]
        bad_units = ["{" + ",".join(u["A"]) + "}" for u in t1["non_field_units"]]
        lines.append(
            f"theorem 1: {t1['verdict']} (g_simple={str(t1['g_simple']).lower()}, "
            f"non-field C_e for A in [{', '.join(bad_units)}])"
        )
    elif "theorem2" in rep:
        lines.append("theorem 1: skipped (C_e field test needs a finite field)")
    lines.append(f"verdict: {rep['verdict']}, agree={str(rep['agree']).lower()}")
    _emit(args, "\n".join(lines) + "\n", data)
    if not rep["agree"]:
        return EXIT_DISAGREE
    return EXIT_OK if rep["verdict"] == "simple" else EXIT_NOT_SIMPLE


def cmd_suite(args) -> int:
    guards = _guards(args)
    fields = [FieldSpec.parse(f) for f in args.fields.split(",") if f]
    random_count = args.random or 0
    corpus = build_corpus(args.exhaustive, random_count, args.seed, args.instance_max_dim)
    log = (lambda msg: print(msg, file=sys.stderr)) if args.verbose else None
    rep = suite_report(corpus, fields, guards, log=log, lemmas=args.lemmas)
    data = header(
        guards,
        command="suite",
        exhaustive=args.exhaustive,
        random=random_count,
        seed=args.seed,
        instance_max_dim=args.instance_max_dim,
        **rep,
    )
    c = rep["counts"]
    lines = [
        f"instances: {c['instances']}  fields: {','.join(rep['fields'])}",
        f"simple: {c['simple']}  not-simple: {c['not-simple']}  skipped: {c['skipped']}",
    ]
    for label, n in sorted(c["by_obstruction"].items()):
        lines.append(f"  {label}: {n}")
    for label, n in sorted(c.get("lemmas", {}).items()):
        lines.append(f"  {label}: {n}")
    lines.append(f"disagreements: {len(rep['disagreements'])}")
    for d in rep["disagreements"]:
        lines.append(f"  {d['id']} {d['field']} {d['kind']}")
    if args.out:
        Path(args.out).write_text(dump_json(data), encoding="utf-8")
        if not args.json:
            sys.stdout.write("\n".join(lines) + "\n")
    else:
        sys.stdout.write(dump_json(data) if args.json else "\n".join(lines) + "\n")
    return EXIT_DISAGREE if rep["disagreements"] else EXIT_OK


def _write_instance(args, theta: PartialAction) -> int:
    text = dump_json(instance_to_json(theta), sort_keys=False)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_example(args) -> int:
    if args.n < 1:
        print("error: --n must be at least 1", file=sys.stderr)
        return EXIT_MALFORMED
    return _write_instance(args, make_shift_window(args.n))


def cmd_gen(args) -> int:
    return _write_instance(args, generate_restriction_action(args.seed, max_dim=args.instance_max_dim))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--out", help="write output to this file")
    common.add_argument("--max-dim", type=int, default=64, help="largest ring dimension for exact computations")
    common.add_argument("--max-subspaces", type=int, default=1 << 16, help="oracle bound on 1-dim subspaces")
    common.add_argument("--bfs-depth", type=int, default=6, help="product depth of the lemma 1 search")
    common.add_argument("--seed", type=int, default=0)

    ap = argparse.ArgumentParser(
        prog="skewlab",
        description="Partial skew group rings F_0(X) x G over finite sets and their simplicity.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check the partial-action axioms")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("check", parents=[common], help="minimality, freeness and G-simplicity")
    p.add_argument("path")
    p.add_argument("--field", help="gf2, gf3, gf5, ..., or rational")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("simplicity", parents=[common], help="decide simplicity of the skew ring")
    p.add_argument("path")
    p.add_argument("--field", help="gf2, gf3, gf5, ..., or rational")
    p.add_argument("--method", choices=("oracle", "theorems", "both"), default="both")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings (not reproducible)")
    p.set_defaults(func=cmd_simplicity)

    p = sub.add_parser("suite", parents=[common], help="oracle vs theorems on a generated corpus")
    p.add_argument("--exhaustive", action="store_true", help="all restrictions with |Y| <= 3")
    p.add_argument("--random", type=int, metavar="N", help="N seeded random restriction instances")
    p.add_argument("--fields", default="gf2,gf3")
    p.add_argument("--instance-max-dim", type=int, default=12)
    p.add_argument("--lemmas", action="store_true", help="also re-verify the lemma certificates")
    p.add_argument("--verbose", action="store_true", help="log skipped checks to stderr")
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("example", parents=[common], help="write a worked example instance")
    p.add_argument("kind", choices=("shift",))
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("gen", parents=[common], help="write a random restriction instance")
    p.add_argument("--instance-max-dim", type=int, default=12)
    p.set_defaults(func=cmd_gen)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        Guards(args.max_dim, args.max_subspaces, args.bfs_depth)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    if getattr(args, "field", None):
        try:
            FieldSpec.parse(args.field)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_MALFORMED
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
