"""Command-line front end.

Every command reads JSON files (see ``fileio`` for the schemas), prints a
report in text or machine-readable JSON form, and exits 0 on success,
1 when a check fails or a computation refuses the input, and 2 on
malformed input files.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import fileio
from .errors import FrobasisError, FileFormatError
from .extraction import check_orthogonality, extract_copyables
from .finset import check_comonoid_hom, check_full_hom_unitary, hom_to_function
from .frobenius import (
    AXIOM_NAMES,
    BasisSpec,
    FrobeniusStructure,
    KIND_FOR_CLASS,
    StructureClass,
    check_axioms,
    claimed_axioms,
    classify_report,
    conjugate_element,
    from_basis,
    norm_profile,
)
from .linalg import Tolerance

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


def _tolerance(value: float) -> Tolerance:
    return Tolerance(abs=value, rel=value)


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _axiom_table(report, claimed) -> str:
    width = max(len(n) for n in AXIOM_NAMES)
    lines = [f"{'axiom':<{width}}  {'residual':>12}  {'bound':>12}  status"]
    for name in AXIOM_NAMES:
        status = "pass" if report.passed[name] else "FAIL"
        mark = "*" if name in claimed else " "
        lines.append(
            f"{name:<{width}}  {report.residuals[name]:>12.4e}  "
            f"{report.bounds[name]:>12.4e}  {status}{mark}"
        )
    lines.append("(* = claimed by the structure)")
    return "\n".join(lines)


def _report_payload(report, claimed, ok) -> dict:
    return {
        "residuals": {k: report.residuals[k] for k in AXIOM_NAMES},
        "bounds": {k: report.bounds[k] for k in AXIOM_NAMES},
        "passed": {k: report.passed[k] for k in AXIOM_NAMES},
        "claimed": list(claimed),
        "ok": ok,
    }


def cmd_check(args) -> int:
    f = fileio.load_algebra(args.path)
    report = check_axioms(f, args.tol)
    claimed = claimed_axioms(f)
    ok = report.all_pass(claimed)
    if args.format == "json":
        _emit_json({"dim": f.dim, "dagger_claimed": f.dagger} | _report_payload(report, claimed, ok))
    else:
        print(f"dim {f.dim}, dagger claimed: {'yes' if f.dagger else 'no'}")
        print(_axiom_table(report, claimed))
        print(f"claimed axioms: {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_from_basis(args) -> int:
    b = fileio.load_basis(args.path)
    f = from_basis(b, args.tol)
    if args.out:
        fileio.dump_algebra(f, args.out)
        if args.format == "json":
            _emit_json({"dim": f.dim, "dagger": f.dagger, "out": args.out})
        else:
            print(f"wrote {f.dim}-dim structure (dagger={f.dagger}) to {args.out}")
    else:
        _emit_json(fileio.algebra_doc(f))
    return EXIT_OK


def _extraction_payload(f, result, cls) -> dict:
    return {
        "dim": f.dim,
        "class": cls.value,
        "attempts": result.attempts,
        "seed": result.seed,
        "copy_residuals": list(result.copy_residuals),
        "counit_residuals": list(result.counit_residuals),
        "norms": [float(np.linalg.norm(psi)) for psi in result.copyables],
    }


def cmd_extract(args) -> int:
    f = fileio.load_algebra(args.path)
    report = check_axioms(f, args.tol)
    cls = classify_report(report)
    if cls is StructureClass.INVALID:
        failing = ", ".join(report.failures())
        print(f"structure is not of basis type; failing axioms: {failing}", file=sys.stderr)
        return EXIT_FAIL
    result = extract_copyables(f, args.tol, args.seed, max_retries=args.max_retries)
    basis = BasisSpec(
        dim=f.dim, vectors=np.array(result.copyables), kind=KIND_FOR_CLASS[cls]
    )
    if args.out:
        fileio.dump_basis(basis, args.out)
    payload = _extraction_payload(f, result, cls)
    if args.format == "json":
        _emit_json(payload)
    else:
        print(f"class: {cls.value}; extracted {f.dim} copyable elements "
              f"in {result.attempts + 1} draw(s)")
        print("max copy residual:   %.4e" % max(result.copy_residuals))
        print("max counit residual: %.4e" % max(result.counit_residuals))
        if args.out:
            print(f"wrote basis to {args.out}")
    return EXIT_OK


def cmd_classify(args) -> int:
    f = fileio.load_algebra(args.path)
    report = check_axioms(f, args.tol)
    cls = classify_report(report)
    if args.format == "json":
        _emit_json({"class": cls.value, "description": cls.describe()})
    else:
        print(f"{cls.value}: {cls.describe()}")
    return EXIT_OK if cls is not StructureClass.INVALID else EXIT_FAIL


def cmd_homcheck(args) -> int:
    g = fileio.load_map(args.g_path)
    a = fileio.load_algebra(args.a_path)
    b = fileio.load_algebra(args.b_path)
    if args.mode == "comonoid":
        rep = check_comonoid_hom(g, a, b, args.tol)
        payload = {
            "mode": "comonoid",
            "comult_residual": rep.comult_residual,
            "counit_residual": rep.counit_residual,
            "ok": rep.is_comonoid_hom,
        }
        if rep.is_comonoid_hom:
            fn = hom_to_function(g, a, b, args.tol, args.seed)
            payload["function"] = list(fn.mapping)
        if args.format == "json":
            _emit_json(payload)
        else:
            print(f"comultiplication residual: {rep.comult_residual:.4e}")
            print(f"counit residual:           {rep.counit_residual:.4e}")
            if rep.is_comonoid_hom:
                print("comonoid homomorphism: PASS")
                print("induced function:", " ".join(str(v) for v in payload["function"]))
            else:
                print("comonoid homomorphism: FAIL")
        return EXIT_OK if rep.is_comonoid_hom else EXIT_FAIL
    rep = check_full_hom_unitary(g, a, b, args.tol)
    payload = {
        "mode": "full",
        "mult_residual": rep.mult_residual,
        "unit_residual": rep.unit_residual,
        "comult_residual": rep.comult_residual,
        "counit_residual": rep.counit_residual,
        "unitarity_residual": rep.unitarity_residual,
        "ok": rep.preserves_all,
    }
    if args.format == "json":
        _emit_json(payload)
    else:
        for key in ("mult_residual", "unit_residual", "comult_residual", "counit_residual"):
            print(f"{key.replace('_', ' '):<22} {payload[key]:.4e}")
        if rep.preserves_all:
            print(f"full structure preservation: PASS (unitarity defect {rep.unitarity_residual:.4e})")
        else:
            print("full structure preservation: FAIL")
    return EXIT_OK if rep.preserves_all else EXIT_FAIL


def cmd_conjugate(args) -> int:
    f = fileio.load_algebra(args.path)
    alpha = fileio.load_vector(args.element)
    result = conjugate_element(f, alpha)
    if args.out:
        fileio.dump_vector(result, args.out)
        print(f"wrote conjugate element to {args.out}")
    elif args.format == "json":
        _emit_json({"dim": f.dim, "vector": [[z.real, z.imag] for z in result]})
    else:
        print(" ".join(f"{z.real:+.17g}{z.imag:+.17g}j" for z in result))
    return EXIT_OK


def cmd_normprofile(args) -> int:
    f = fileio.load_algebra(args.path)
    profile = norm_profile(f, args.tol, args.seed)
    if args.format == "json":
        _emit_json({"dim": f.dim, "profile": profile})
    else:
        print(" ".join(f"{x:.17g}" for x in profile))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frobasis",
        description="Verify, build, classify and invert basis-encoding Frobenius structures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, seed=False, out=False, retries=False):
        p.add_argument("--tol", type=_tolerance, default=Tolerance(), metavar="EPS",
                       help="absolute and relative tolerance (default 1e-9)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if seed:
            p.add_argument("--seed", type=int, default=42)
        if out:
            p.add_argument("--out", metavar="PATH")
        if retries:
            p.add_argument("--max-retries", type=int, default=16)

    p = sub.add_parser("check", help="verify the axioms an algebra file claims")
    p.add_argument("path")
    common(p)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("from-basis", help="build the structure copying a basis")
    p.add_argument("path")
    common(p, out=True)
    p.set_defaults(fn=cmd_from_basis)

    p = sub.add_parser("extract", help="recover the copied basis from a structure")
    p.add_argument("path")
    common(p, seed=True, out=True, retries=True)
    p.set_defaults(fn=cmd_extract)

    p = sub.add_parser("classify", help="name the basis type a structure encodes")
    p.add_argument("path")
    common(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("homcheck", help="test a map between two structures")
    p.add_argument("g_path")
    p.add_argument("a_path")
    p.add_argument("b_path")
    p.add_argument("--mode", choices=("comonoid", "full"), default="comonoid")
    common(p, seed=True)
    p.set_defaults(fn=cmd_homcheck)

    p = sub.add_parser("conjugate", help="conjugate an element through the structure")
    p.add_argument("path")
    p.add_argument("element")
    common(p, out=True)
    p.set_defaults(fn=cmd_conjugate)

    p = sub.add_parser("normprofile", help="sorted norms of the copyable elements")
    p.add_argument("path")
    common(p, seed=True)
    p.set_defaults(fn=cmd_normprofile)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except FileFormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FrobasisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
