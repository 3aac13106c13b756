"""Command line front end.

Every subcommand reads one JSON problem instance (``--instance PATH``, or
standard input when the flag is absent or ``-``) and writes a report.  Exit
status: 0 on success, 2 for malformed input, 3 when a precondition fails.
"""

import argparse
import json
import random
import sys

from . import __version__
from .appell_humbert import bracket_closure_oracle, check_riemann, decompose, discriminant_form, hermitian_system
from .checks import run_group_checks
from .classify import ProblemInstance, build_iwasawa, classify, find_witness, load_instance, report_render
from .corpus import corpus_names, corpus_text
from .errors import PreconditionError, TorusBundleError
from .invariants import cohomology_report, deformation_report
from .lattice import image_dimension, kernel_of_form, pfaffian_pencil

FORMATS = ("json", "text")


def _read_instance(args):
    path = args.instance
    if path in (None, "-"):
        return load_instance(sys.stdin.read(), "<stdin>")
    if path.startswith("corpus:"):
        name = path[len("corpus:"):]
        if name not in corpus_names():
            raise TorusBundleError(f"unknown corpus instance {name!r}; known: {', '.join(corpus_names())}")
        return load_instance(corpus_text(name), path)
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise TorusBundleError(f"cannot read {path}: {exc.strerror}") from None
    return load_instance(text, path)


def _emit(data, fmt, out):
    if fmt == "json":
        out.write(json.dumps(data, indent=2) + "\n")
        return
    for key, value in data.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value)
        out.write(f"{key}: {value}\n")


def _matrices(mats):
    return [[[str(x) for x in row] for row in mat.tolist()] for mat in mats]


def _require_structure(instance):
    if not instance.has_structure:
        raise PreconditionError("this subcommand needs both V and U in the instance")
    return decompose(instance.A, instance.V, instance.U)


def cmd_validate(args, out):
    inst = _read_instance(args)
    kernel_dim, _ = kernel_of_form(inst.A)
    data = {
        "form": "ok",
        "m": inst.A.m,
        "d": inst.A.d,
        "kernel_dim": kernel_dim,
        "image_dim": image_dimension(inst.A),
    }
    for key in ("V", "U"):
        sub = getattr(inst, key)
        if sub is not None:
            data[key] = {"orientation": str(sub.orientation), "orientation_sign": sub.orientation_sign}
    _emit(data, args.format, out)


def cmd_decompose(args, out):
    inst = _read_instance(args)
    decomp = _require_structure(inst)
    system = hermitian_system(inst.A, inst.V)
    data = {
        "riemann_ok": check_riemann(decomp),
        "bracket_closure": bracket_closure_oracle(inst.A, inst.V, inst.U),
        "Bprime": _matrices(decomp.Bprime),
        "Bdoubleprime": _matrices(decomp.Bdoubleprime),
        "Bbar_VV": _matrices(decomp.Bbar_VV),
        "parallelizable": decomp.is_parallelizable(),
        "hermitian_system": _matrices(system.D),
        "discriminant": str(discriminant_form(system)),
    }
    _emit(data, args.format, out)


def cmd_invariants(args, out):
    inst = _read_instance(args)
    decomp = _require_structure(inst)
    data = {
        "cohomology": cohomology_report(decomp).to_json(),
        "deformation": deformation_report(decomp).to_json(),
    }
    _emit(data, args.format, out)


def cmd_pencil(args, out):
    inst = _read_instance(args)
    _emit(pfaffian_pencil(inst.A).to_json(), args.format, out)


def cmd_classify(args, out, err):
    inst = _read_instance(args)
    if args.find_witness and not inst.has_structure:
        witness = find_witness(inst.A, random.Random(args.seed))
        if witness is None:
            err.write("warning: heuristic witness search found no (V, U)\n")
        else:
            inst = ProblemInstance(inst.A, witness[0], witness[1], inst.name)
            err.write("note: using (V, U) from the heuristic witness search\n")
    report = classify(inst)
    out.write(report_render(report, args.format))


def cmd_iwasawa(args, out):
    inst = build_iwasawa(deformed=args.deformed)
    if args.format == "json":
        out.write(json.dumps(inst.to_dict(), indent=2) + "\n")
    else:
        out.write(report_render(classify(inst), "text"))


def cmd_group_check(args, out):
    inst = _read_instance(args)
    decomp = _require_structure(inst)
    results, non_holomorphic = run_group_checks(decomp, samples=args.samples, seed=args.seed)
    data = {
        "samples": args.samples,
        "seed": args.seed,
        "laws": [r.to_json() for r in results],
        "non_holomorphic_inversion_points": non_holomorphic,
        "all_ok": all(r.ok for r in results),
    }
    if args.format == "json":
        _emit(data, "json", out)
    else:
        for r in results:
            out.write(f"{'ok  ' if r.ok else 'FAIL'} {r.name}: {r.passed}/{r.total}\n")
        out.write(f"points where inversion is not holomorphic: {non_holomorphic}/{args.samples}\n")
    return 0 if data["all_ok"] else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="torusbundle",
        description="Exact invariants of principal torus bundles over tori.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="json")
    common.add_argument("--instance", metavar="PATH", help="JSON instance, or corpus:NAME for a shipped example (default: standard input)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomised subcommands")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("validate", parents=[common], help="check the form and the period subspaces")
    sub.add_parser("decompose", parents=[common], help="blocks B', B'', obstruction and Hermitian system")
    sub.add_parser("invariants", parents=[common], help="cohomology and deformation invariants")
    sub.add_parser("pencil", parents=[common], help="Pfaffian of the pencil (m=2, d=1)")
    p = sub.add_parser("classify", parents=[common], help="full report and main theorem verdict")
    p.add_argument("--find-witness", action="store_true",
                   help="if V or U is missing, search for one at random (heuristic)")
    p = sub.add_parser("iwasawa", parents=[common], help="print the Iwasawa instance")
    p.add_argument("--deformed", action="store_true", help="the structure with B' = 0")
    p = sub.add_parser("group-check", parents=[common], help="randomised checks of the group model")
    p.add_argument("--samples", type=int, default=100)
    return parser


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    handlers = {
        "validate": lambda: cmd_validate(args, out),
        "decompose": lambda: cmd_decompose(args, out),
        "invariants": lambda: cmd_invariants(args, out),
        "pencil": lambda: cmd_pencil(args, out),
        "classify": lambda: cmd_classify(args, out, err),
        "iwasawa": lambda: cmd_iwasawa(args, out),
        "group-check": lambda: cmd_group_check(args, out),
    }
    try:
        status = handlers[args.command]()
    except TorusBundleError as exc:
        err.write(f"error: {exc}\n")
        return exc.exit_code
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
