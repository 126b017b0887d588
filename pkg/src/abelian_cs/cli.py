"""Command line front end.

Exit status: 0 on success, 1 on a domain error (undefined value, bound
exceeded, invalid input), 2 on usage errors.  The default worker count for
colour enumeration is read from the ABELIAN_CS_THREADS environment variable.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .cyclotomic import pretty
from .enumeration import EnumerationBoundError, default_threads
from .homology import first_homology, smith_normal_form
from .invariants import (
    InvariantUndefined,
    connected_sum,
    genus_times_circle,
    lens_presentation,
    reciprocity_sides,
    rt_invariant,
    subgroup_invariant,
)
from .kirby import kirby_check
from .links import AmbientLinkPresentation, ColouredLinkingData, PreconditionError, ValidationError
from .observables import (
    NotHomologicallyTrivial,
    ObservableUndefined,
    observable_split_homology_sphere,
    observable_surgery,
    push_to_sphere,
)
from .serialize import InvariantReport, digest, parse_presentation, presentation_to_json

DOMAIN_ERRORS = (
    ValidationError,
    PreconditionError,
    ObservableUndefined,
    InvariantUndefined,
    NotHomologicallyTrivial,
    EnumerationBoundError,
    json.JSONDecodeError,
    OSError,
)


def _load(path: str):
    text = Path(path).read_text(encoding="utf-8")
    obj = json.loads(text)
    return parse_presentation(obj), obj


def _as_ambient(p) -> AmbientLinkPresentation:
    if isinstance(p, ColouredLinkingData):
        return AmbientLinkPresentation.in_s3(p)
    return p


def _homology_json(h) -> dict:
    return {"free_rank": h.free_rank, "torsion": list(h.torsion), "text": str(h)}


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(text_lines))


def _report_lines(report: InvariantReport) -> list[str]:
    lines = []
    if report.exact is not None:
        re, im = report.approx
        lines.append(f"exact: {pretty(report.exact)}")
        lines.append(f"approx: {re:.12g}{im:+.12g}i")
    for key in sorted(report.metadata):
        if key not in ("command", "input_digest") and report.metadata[key] is not None:
            lines.append(f"{key}: {report.metadata[key]}")
    return lines


def cmd_observable(args) -> int:
    p, raw = _load(args.link)
    p = _as_ambient(p)
    t0 = time.perf_counter()
    meta = {"command": "observable", "input_digest": digest(raw), "k": args.k}
    if args.push_to_sphere:
        link = push_to_sphere(p, args.k)
        meta["push_to_sphere"] = presentation_to_json(link)
    if args.closed_form:
        obs = observable_split_homology_sphere(p, args.k)
        meta["method"] = "closed_form"
    else:
        obs = observable_surgery(p, args.k, threads=args.threads)
        meta["method"] = "surgery_sum"
    report = InvariantReport(obs.value, meta, time.perf_counter() - t0)
    _emit(args, report.to_json(), _report_lines(report))
    return 0


def cmd_invariant(args) -> int:
    p, raw = _load(args.surgery)
    B = p.surgery if isinstance(p, AmbientLinkPresentation) else p.matrix
    t0 = time.perf_counter()
    if args.subgroup is None:
        inv = rt_invariant(B, args.k, threads=args.threads)
    else:
        inv = subgroup_invariant(B, args.k, args.subgroup, threads=args.threads)
    sig = inv.signature
    meta = {
        "command": "invariant",
        "input_digest": digest(raw),
        "k": args.k,
        "p": args.subgroup,
        "signature": [sig.n_plus, sig.n_minus, sig.n_zero],
        "homology": _homology_json(first_homology(B)),
    }
    report = InvariantReport(inv.value, meta, time.perf_counter() - t0)
    lines = _report_lines(report)
    lines = [l for l in lines if not l.startswith("homology:")] + [
        f"homology: {first_homology(B)}"
    ]
    _emit(args, report.to_json(), lines)
    return 0


def cmd_homology(args) -> int:
    p, raw = _load(args.surgery)
    B = p.surgery if isinstance(p, AmbientLinkPresentation) else p.matrix
    h = first_homology(B)
    factors = list(smith_normal_form(B).diagonal) if B else []
    payload = {
        "schema_version": 1,
        "homology": _homology_json(h),
        "invariant_factors": factors,
        "metadata": {"command": "homology", "input_digest": digest(raw)},
    }
    _emit(args, payload, [str(h), "invariant factors: " + " ".join(map(str, factors))])
    return 0


def cmd_catalog(args) -> int:
    if args.kind == "lens":
        if len(args.params) != 2:
            raise PreconditionError("catalog lens needs <p> <r>")
        B = lens_presentation(int(args.params[0]), int(args.params[1]))
    elif args.kind == "genus-s1":
        if len(args.params) != 1:
            raise PreconditionError("catalog genus-s1 needs <g>")
        B = genus_times_circle(int(args.params[0]))
    else:
        if len(args.params) != 2:
            raise PreconditionError("catalog consum needs two presentation files")
        ps = [_load(f)[0] for f in args.params]
        mats = [q.surgery if isinstance(q, AmbientLinkPresentation) else q.matrix for q in ps]
        B = connected_sum(*mats)
    print(json.dumps(presentation_to_json(AmbientLinkPresentation(B)), sort_keys=True))
    return 0


def cmd_kirby(args) -> int:
    p, raw = _load(args.surgery)
    p = _as_ambient(p)
    report = kirby_check(p, args.k, args.moves, args.seed)
    fmt = lambda v: None if v is None else (pretty(v) if hasattr(v, "conductor") else str(v))
    payload = {
        "schema_version": 1,
        "status": "PASS" if report.passed else "FAIL",
        "moves": report.log,
        "before": {key: fmt(v) for key, v in report.before.items()},
        "after": {key: fmt(v) for key, v in report.after.items()},
        "mismatches": report.mismatches,
        "metadata": {"command": "kirby check", "input_digest": digest(raw), "k": args.k,
                     "seed": args.seed},
    }
    lines = [f"move: {m}" for m in report.log]
    for key in report.before:
        lines.append(f"{key}: {fmt(report.before[key])} -> {fmt(report.after[key])}")
    lines += report.mismatches
    lines.append(payload["status"])
    _emit(args, payload, lines)
    return 0 if report.passed else 1


def cmd_reciprocity(args) -> int:
    left, right = reciprocity_sides(args.a, args.b, args.c)
    holds = left == right
    payload = {
        "schema_version": 1,
        "holds": holds,
        "left": pretty(left),
        "right": pretty(right),
        "metadata": {"command": "reciprocity", "a": args.a, "b": args.b, "c": args.c},
    }
    _emit(args, payload, [f"left: {pretty(left)}", f"right: {pretty(right)}",
                          "PASS" if holds else "FAIL"])
    return 0 if holds else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="text")
    common.add_argument("--threads", type=int, default=None,
                        help="enumeration workers (default: $ABELIAN_CS_THREADS or 1)")

    parser = argparse.ArgumentParser(prog="abelian-cs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("observable", parents=[common], help="Wilson line expectation value")
    p.add_argument("--link", "--presentation", dest="link", required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--closed-form", action="store_true")
    p.add_argument("--push-to-sphere", action="store_true")
    p.set_defaults(func=cmd_observable)

    p = sub.add_parser("invariant", parents=[common], help="RT invariant I_k or I_(p,k)")
    p.add_argument("--surgery", required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--subgroup", type=int, default=None)
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("homology", parents=[common], help="first homology of the surgered manifold")
    p.add_argument("--surgery", required=True)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("catalog", parents=[common], help="emit a catalog surgery presentation")
    p.add_argument("kind", choices=["lens", "genus-s1", "consum"])
    p.add_argument("params", nargs="+")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("kirby", help="Kirby move invariance check")
    ksub = p.add_subparsers(dest="kirby_command", required=True)
    kc = ksub.add_parser("check", parents=[common])
    kc.add_argument("--surgery", required=True)
    kc.add_argument("-k", type=int, required=True)
    kc.add_argument("--moves", type=int, default=8)
    kc.add_argument("--seed", type=int, default=0)
    kc.set_defaults(func=cmd_kirby)

    p = sub.add_parser("reciprocity", parents=[common], help="check the Gauss sum reciprocity formula")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.set_defaults(func=cmd_reciprocity)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "threads", None) is None:
        args.threads = default_threads()
    try:
        return args.func(args)
    except DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
