"""Command-line entry point.

Exit codes: 0 success, 1 a checked property failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import exact
from .blocking import enumerate_minimal_blocking_sets
from .errors import InputError
from .exact import CLASS_TAGS, DEFAULT_CAP, mis_bruteforce
from .formats import dump_json, emit_instance, parse_instance
from .generate import KINDS, GeneratorSpec, generate
from .instance import validate_instance
from .kernel import kernelize, rule1_steps
from .lp import extremal_lp_is, lp_vc_opt

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load(args, validate: bool = True):
    inst = parse_instance(_read_text(args.graph), validate=False)
    changes = {}
    if getattr(args, "class_tag", None):
        changes["class_tag"] = args.class_tag
    if getattr(args, "d", None) is not None:
        changes["d"] = args.d
    if changes:
        inst = inst.with_(**changes)
    if validate:
        validate_instance(inst)
    return inst


def cmd_kernelize(args) -> int:
    inst = _load(args)
    out, report = kernelize(inst)
    _write(emit_instance(out), args.out)
    if args.report:
        _write(dump_json(report.as_dict()), args.report)
    return EXIT_OK if report.all_ok() else EXIT_VIOLATION


def cmd_verify(args) -> int:
    """Brute-force equivalence after every single deletion and at the end."""
    inst = _load(args)
    if inst.graph.n > args.cap:
        raise InputError(f"graph has {inst.graph.n} vertices, --cap is {args.cap}")
    base = exact.alpha(inst.graph)
    answer = base >= inst.k
    steps = []
    ok = True
    for step, deletion in rule1_steps(inst):
        a = exact.alpha(step.graph)
        same = (a >= step.k) == answer
        ok &= same
        steps.append(
            {
                "deleted": list(deletion.vertices),
                "alpha_credit": deletion.alpha_credit,
                "k": step.k,
                "alpha": a,
                "equivalent": same,
            }
        )
    _, report = kernelize(inst)
    ok &= report.all_ok()
    summary = {
        "alpha": base,
        "k": inst.k,
        "answer": answer,
        "steps": steps,
        "checks": report.checks(),
        "equivalent": ok,
    }
    _write(dump_json(summary), args.report)
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_blocking(args) -> int:
    inst = _load(args)
    reports = [
        enumerate_minimal_blocking_sets(h, inst.class_tag, inst.d) for h in inst.components()
    ]
    data = {
        "class": inst.class_tag,
        "d": inst.d,
        "components": [r.as_dict() for r in reports],
        "max_minimal_size": max((r.max_minimal_size for r in reports), default=0),
        "class_bound": reports[0].class_bound if reports else None,
        "bound_respected": all(r.bound_respected for r in reports),
    }
    _write(dump_json(data), args.report)
    return EXIT_OK if data["bound_respected"] else EXIT_VIOLATION


def cmd_lp(args) -> int:
    inst = _load(args, validate=False)
    g = inst.graph
    vc = lp_vc_opt(g)
    ext = extremal_lp_is(g)
    data = {"lp_vc": str(vc.value), "lp_is": str(ext.value), "extremal_is": ext.as_dict()}
    _write(dump_json(data), args.report)
    return EXIT_OK


def cmd_solve(args) -> int:
    inst = _load(args, validate=False)
    g = inst.graph
    size, sets = mis_bruteforce(g, cap=args.cap)
    data = {
        "n": g.n,
        "alpha": size,
        "vc": g.n - size,
        "k": inst.k,
        "yes": size >= inst.k,
        "mis_count": len(sets),
        "example_mis": sorted(sets[0]),
    }
    _write(dump_json(data), args.report)
    return EXIT_OK


def cmd_generate(args) -> int:
    spec = GeneratorSpec(
        kind=args.kind,
        component_count=args.components,
        component_size=args.size,
        modulator_size=args.modulator,
        d=args.d,
        edge_density_to_X=args.density,
        seed=args.seed,
        class_tag=args.class_tag,
        blocking_wire_probability=args.wire_probability,
    )
    _write(emit_instance(generate(spec)), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasikernel",
        description="Kernelization for Independent Set / Vertex Cover "
        "parameterized by a modulator to quasi-forests and relatives.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def instance_cmd(name, func, help_text, overrides=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--graph", required=True, help="instance file ('-' for stdin)")
        p.add_argument("--report", help="JSON output path (default stdout)")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="brute-force vertex cap")
        if overrides:
            p.add_argument("--class", dest="class_tag", choices=CLASS_TAGS)
            p.add_argument("--d", type=int)
        p.set_defaults(func=func)
        return p

    p = instance_cmd("kernelize", cmd_kernelize, "reduce an instance", overrides=True)
    p.add_argument("--out", help="reduced instance path (default stdout)")
    instance_cmd("verify", cmd_verify, "brute-force equivalence check", overrides=True)
    instance_cmd("blocking", cmd_blocking, "minimal blocking sets per component", overrides=True)
    instance_cmd("lp", cmd_lp, "LP relaxation and extremal half-integral solution")
    instance_cmd("solve", cmd_solve, "exact independence number and vertex cover")

    g = sub.add_parser("generate", help="write a seeded random instance")
    g.add_argument("--kind", choices=KINDS, required=True)
    g.add_argument("--components", type=int, default=4)
    g.add_argument("--size", type=int, default=5)
    g.add_argument("--modulator", type=int, default=2)
    g.add_argument("--d", type=int, default=1)
    g.add_argument("--density", type=float, default=0.2, help="edge probability to X")
    g.add_argument("--wire-probability", type=float, default=0.5)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--class", dest="class_tag", choices=CLASS_TAGS)
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
