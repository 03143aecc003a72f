"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from . import x7
from .classify import ConsistencyError, Verdict, classify, stabilizer
from .exterior import FormFormatError, KForm, is_multisymplectic
from .liealg import LieAlgebra, LieAlgebraError, build_su2, build_su3, cartan_3form, ce_differential

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _read_form(path: str) -> KForm:
    p = Path(path)
    if not p.is_file():
        raise InputError(f"no such file: {path}")
    try:
        form = KForm.from_json(p.read_text())
    except FormFormatError as exc:
        raise InputError(f"parse error in {path}: {exc}") from None
    if form.dim != 7 or form.degree != 3:
        raise InputError(f"shape error in {path}: expected a 3-form on R^7, got degree {form.degree} on R^{form.dim}")
    return form


def identity_golden() -> KForm:
    text = resources.files("g2forms").joinpath("data/identity_restriction.json").read_text()
    return KForm.from_json(text)


# -- commands -------------------------------------------------------------------


def cmd_classify(args) -> int:
    form = _read_form(args.file)
    report = classify(form)
    if args.format == "text":
        p, q = report.signature
        _emit(f"{report.verdict.value}  signature {{{p},{q}}}  stabilizer {report.stabilizer_dim}  b_rank {report.b_rank}\n", args.output)
    else:
        _emit(_dump(report.to_dict()), args.output)
    return EXIT_OK


def cmd_stabilizer(args) -> int:
    form = _read_form(args.file)
    basis = stabilizer(form)
    out = {"stabilizer_dim": len(basis)}
    if args.basis:
        out["basis"] = [[[str(x) for x in row] for row in A] for A in basis]
    _emit(_dump(out), args.output)
    return EXIT_OK


def _load_algebra(source: str) -> tuple[str, LieAlgebra]:
    if source == "su2":
        return source, build_su2()
    if source == "su3":
        return source, build_su3()
    p = Path(source)
    if not p.is_file():
        raise InputError(f"unknown algebra {source!r}: not su2, su3 or an existing file")
    try:
        return str(p), LieAlgebra.from_json(p.read_text())
    except LieAlgebraError as exc:
        raise InputError(f"cannot load {source}: {exc}") from None


def cmd_cartan(args) -> int:
    name, g = _load_algebra(args.algebra)
    if g.dim < 3:
        raise InputError(f"{name} has dimension {g.dim}; a Cartan 3-form needs at least 3")
    phi = cartan_3form(g)
    checks = {}
    if args.check_closed:
        # a top-degree form is closed for want of higher forms
        closed = phi.degree >= g.dim or not ce_differential(g, phi)
        checks["closed"] = "pass" if closed else "fail"
    if args.check_multisymplectic:
        checks["multisymplectic"] = "pass" if is_multisymplectic(phi) else "fail"
    if args.output:
        Path(args.output).write_text(_dump(phi.to_dict()))
        sys.stdout.write(_dump({"algebra": name, "checks": checks}))
    else:
        sys.stdout.write(_dump({"algebra": name, "form": phi.to_dict(), "checks": checks}))
    return EXIT_OK if all(v == "pass" for v in checks.values()) else EXIT_FAIL


def run_verify_x7(samples: int, seed: int, translate_samples: int = 25) -> tuple[dict, list[str]]:
    """The full X7 pipeline.  Returns the report and a list of failure messages."""
    failures: list[str] = []
    records = []
    for k, sp in enumerate(x7.sample_parameters(samples, seed)):
        g = sp.point()
        member = x7.in_x7(g)
        record = {
            "index": k,
            "params": sp.to_dict(),
            "in_x7": member,
            "tangent_rank": None,
            "report": None,
            "g11": str(g[0, 0]),
        }
        records.append(record)
        if not member:
            failures.append(f"sample {k}: not in X7")
            continue
        try:
            frame = x7.tangent_frame(g)
            record["tangent_rank"] = frame.rank()
            report = classify(x7.restrict_cartan(g, frame))
        except (x7.SingularPoint, ConsistencyError) as exc:
            failures.append(f"sample {k}: {type(exc).__name__}: {exc}")
            continue
        record["report"] = report.to_dict()
        if report.verdict is not Verdict.SPLIT_STABLE:
            failures.append(f"sample {k}: verdict {report.verdict.value}")

    circle = list(x7.FIXED_CIRCLE_POINTS) + x7.circle_samples(max(translate_samples - len(x7.FIXED_CIRCLE_POINTS), 0), seed)
    circle = circle[:translate_samples]
    bad = [p.as_list() for p in circle if not x7.translate_check(p)]
    for p in bad:
        failures.append(f"translate_check failed at {p}")

    golden_ok = x7.restrict_cartan(x7.SU3Element.identity()) == identity_golden()
    if not golden_ok:
        failures.append("restriction at the identity differs from the golden expansion")

    all_split = all(r["report"] is not None and r["report"]["verdict"] == Verdict.SPLIT_STABLE.value for r in records)
    # the form degenerates exactly on the hypersurface g11 = 0
    off_zero = [r for r in records if r["g11"] != "0"]
    summary = {
        "samples": samples,
        "all_split_stable": all_split,
        "split_stable_where_g11_nonzero": all(
            r["report"] is not None and r["report"]["verdict"] == Verdict.SPLIT_STABLE.value for r in off_zero
        ),
        "points_with_g11_zero": len(records) - len(off_zero),
        "seed": seed,
        "translate_checks": {"count": len(circle), "all_pass": not bad},
        "identity_golden_match": golden_ok,
    }
    return {"records": records, "summary": summary}, failures


def cmd_verify_x7(args) -> int:
    if args.samples < 1:
        raise InputError("--samples must be at least 1")
    report, failures = run_verify_x7(args.samples, args.seed)
    if args.format == "text":
        lines = []
        for r in report["records"]:
            rep = r["report"]
            verdict = rep["verdict"] if rep else "ERROR"
            lines.append(f"{r['index']:4d}  in_x7={r['in_x7']}  rank={r['tangent_rank']}  {verdict}")
        s = report["summary"]
        lines.append(
            f"samples={s['samples']} seed={s['seed']} all_split_stable={s['all_split_stable']} "
            f"translate_ok={s['translate_checks']['all_pass']} golden_ok={s['identity_golden_match']}"
        )
        _emit("\n".join(lines) + "\n", args.output)
    else:
        _emit(_dump(report), args.output)
    for msg in failures:
        print(f"FAIL {msg}", file=sys.stderr)
    return EXIT_FAIL if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="g2forms", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="orbit type of a 3-form on R^7")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("stabilizer", help="stabilizer algebra of a 3-form on R^7")
    p.add_argument("file")
    p.add_argument("--basis", action="store_true", help="also dump a basis")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_stabilizer)

    p = sub.add_parser("cartan", help="Cartan 3-form of a Lie algebra")
    p.add_argument("--algebra", required=True, help="su2, su3 or a Lie algebra JSON file")
    p.add_argument("--check-closed", action="store_true")
    p.add_argument("--check-multisymplectic", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_cartan)

    p = sub.add_parser("verify-x7", help="pointwise verification on sampled points of X7")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_verify_x7)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
