"""Command-line entry point: ``kuelsh analyze | verify-paper | custom``."""
from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from .algebra import build_quotient
from .families import FamilyParams
from .field import FieldSpec
from .grids import grid
from .kulshammer import LadderError
from .quiver import PresentationError, parse_quiver_text
from .report import analyze, render

EXIT_OK, EXIT_ERROR, EXIT_MISMATCH = 0, 1, 2


class UsageError(ValueError):
    pass


def _nmax(args) -> Optional[int]:
    if args.nmax is not None:
        return args.nmax
    env = os.environ.get("KUELSH_NMAX")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"KUELSH_NMAX must be an integer, got {env!r}") from None
    return None


def params_from_args(args) -> FamilyParams:
    if args.field is None:
        if args.p is None:
            raise UsageError("give --field or --p")
        K = FieldSpec.prime(args.p)
    else:
        K = FieldSpec.from_text(args.field)
    if args.p is not None and args.p != K.p:
        raise UsageError(f"--p {args.p} disagrees with field {K.describe()}")
    if args.family == "2B":
        if args.d is not None:
            raise UsageError("--d belongs to family 3A")
        if args.k is None or args.s is None:
            raise UsageError("family 2B needs --k and --s")
        return FamilyParams.q2b(K, args.k, args.s, K.parse(args.a), K.parse(args.c)).validate()
    if any(v is not None for v in (args.k, args.s)) or (args.a, args.c) != ("1", "0"):
        raise UsageError("--k/--s/--a/--c belong to family 2B")
    if args.d is None:
        raise UsageError("family 3A needs --d")
    return FamilyParams.q3a(K, K.parse(args.d)).validate()


def cmd_analyze(args) -> int:
    params = params_from_args(args)
    rep = analyze(params, _nmax(args))
    sys.stdout.buffer.write(render(rep, args.format))
    return EXIT_MISMATCH if rep.status == "mismatch" else EXIT_OK


def _verify_one(job):
    params, mutate = job
    rep = analyze(params, 1, c_coefficient=params.field.zero if mutate else None)
    return rep.expectation


def cmd_verify_paper(args) -> int:
    cases = grid(args.grid)
    if args.mutate_c:
        cases = [P for P in cases if P.family == "Q2B" and P.c]
    jobs = [(P, args.mutate_c) for P in sorted(cases, key=FamilyParams.sort_key)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            results = list(ex.map(_verify_one, jobs))
    else:
        results = map(_verify_one, jobs)
    counts = {"match": 0, "mismatch": 0, "uncovered": 0}
    out = sys.stdout
    for (P, _), e in zip(jobs, results):
        counts[e["status"]] += 1
        tag = {"match": "PASS", "mismatch": "FAIL", "uncovered": "SKIP"}[e["status"]]
        bad = [c["name"] for c in e["checks"] if not c["ok"]]
        line = f"{tag}  {P}"
        if e.get("case"):
            line += f"  [{e['case']}]"
        if bad:
            line += "  failed: " + ", ".join(bad)
        print(line, file=out, flush=True)
    print(f"{counts['match']} passed, {counts['mismatch']} failed, {counts['uncovered']} uncovered", file=out)
    return EXIT_OK if counts["mismatch"] == 0 else EXIT_MISMATCH


def cmd_custom(args) -> int:
    with open(args.quiver, encoding="utf-8") as fh:
        text = fh.read()
    spec = FieldSpec.from_text(args.field) if args.field else None
    try:
        q = parse_quiver_text(text, spec)
    except PresentationError as e:
        raise UsageError(f"{args.quiver}: {e}") from None
    A = build_quotient(q, q.loewy_bound)
    rep = analyze(A, _nmax(args))
    sys.stdout.buffer.write(render(rep, args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kuelsh", description="Kulshammer ideals of quaternion-type algebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    an = sub.add_parser("analyze", help="analyze one family instance")
    an.add_argument("--family", choices=["2B", "3A"], required=True)
    an.add_argument("--p", type=int)
    an.add_argument("--field", help="gf:<q> or rat:<p>")
    an.add_argument("--k", type=int)
    an.add_argument("--s", type=int)
    an.add_argument("--a", default="1")
    an.add_argument("--c", default="0")
    an.add_argument("--d")
    an.add_argument("--nmax", type=int)
    an.add_argument("--format", choices=["text", "json"], default="text")
    an.set_defaults(func=cmd_analyze)

    vp = sub.add_parser("verify-paper", help="sweep a parameter grid against the closed forms")
    vp.add_argument("--grid", choices=["small", "full"], default="small")
    vp.add_argument("--jobs", type=int, default=1)
    vp.add_argument("--mutate-c", action="store_true",
                    help="drop the c term from the alpha^2 relation (oracle sanity check)")
    vp.set_defaults(func=cmd_verify_paper)

    cu = sub.add_parser("custom", help="analyze an algebra given in the quiver text format")
    cu.add_argument("--quiver", required=True)
    cu.add_argument("--field", help="field, if the file has no 'field' line")
    cu.add_argument("--nmax", type=int)
    cu.add_argument("--format", choices=["text", "json"], default="text")
    cu.set_defaults(func=cmd_custom)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, LadderError, OSError) as e:
        print(f"kuelsh: error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
