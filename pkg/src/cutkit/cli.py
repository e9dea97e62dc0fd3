"""Batch front-end: classify / compare / realize / oracle over JSON job files.

Exit codes: 0 success, 1 oracle violations, 2 parse or validation error.
Job files are looked up as given, then under $CUTKIT_FIXTURES, then in the
packaged fixtures directory.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .cuts import classify, realize
from .errors import ParseError, ValidationError
from .oracle import OracleReport, check_covariance, check_invariance
from .orders import segment_str
from .quasicuts import CutPoint, qcut_compare
from .serialize import (
    job_from_json,
    oracle_report_to_json,
    point_to_json,
    report_to_json,
    sample_config_from,
    vector_to_json,
)

_ORD = {-1: "<", 0: "=", 1: ">"}


def _fixtures_dir() -> Path:
    env = os.environ.get("CUTKIT_FIXTURES")
    if env:
        return Path(env)
    return Path(__file__).parent / "fixtures"


def _resolve(name: str) -> Path:
    p = Path(name)
    if p.exists():
        return p
    candidate = _fixtures_dir() / name
    if candidate.exists():
        return candidate
    raise ParseError(f"job file not found: {name}")


def _load_job(name: str):
    path = _resolve(name)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}")
    return job_from_json(data)


def _emit(obj, as_json: bool, text: str, out) -> None:
    if as_json:
        print(json.dumps(obj, indent=2, sort_keys=True), file=out)
    else:
        print(text, file=out)


def cmd_classify(job, as_json: bool, out) -> int:
    reports = [classify(item.cut) for item in job.items]
    if as_json:
        payload = {"reports": [report_to_json(r, job.space) for r in reports]}
        print(json.dumps(payload, indent=2, sort_keys=True), file=out)
        return 0
    space = job.space
    head = f"{'#':>3}  {'type':8} {'subtype':9} {'S':22} {'V_f':26} {'V_i':26} {'kappa':12} {'lambda':12} rank+"
    lines = [f"group: {space}", head]
    for n, r in enumerate(reports, start=1):
        sub = "(" + ",".join(r.subtype) + ")" if r.subtype else "-"
        vf = f"{segment_str(r.vf, space)} {'stable' if r.vf_stable else 'unstable'}"
        vi = f"{segment_str(r.vi, space)} {'stable' if r.vi_stable else 'unstable'}"
        kap = f"{r.kappa[0]}={r.kappa[1].value}"
        lam = f"{r.lambda_[0]}={r.lambda_[1].value}"
        lines.append(
            f"{n:>3}  {r.type6:8} {sub:9} {segment_str(r.invariance, space):22} "
            f"{vf:26} {vi:26} {kap:12} {lam:12} {'yes' if r.rank_increases else 'no'}"
        )
    print("\n".join(lines), file=out)
    return 0


def cmd_compare(job, as_json: bool, out) -> int:
    points = [item.point for item in job.items]
    if len(points) < 2:
        raise ValidationError("compare needs at least two items")
    n = len(points)
    matrix = [[qcut_compare(points[i], points[j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if matrix[i][j] != -matrix[j][i]:
                raise ValidationError("comparison matrix is not antisymmetric")
    if as_json:
        print(json.dumps({"matrix": matrix}, indent=2, sort_keys=True), file=out)
        return 0
    lines = ["    " + " ".join(f"{j + 1:>2}" for j in range(n))]
    for i in range(n):
        row = " ".join(f"{_ORD[matrix[i][j]]:>2}" for j in range(n))
        lines.append(f"{i + 1:>3} {row}")
    print("\n".join(lines), file=out)
    return 0


def cmd_realize(job, as_json: bool, out) -> int:
    from .quasicuts import point_value

    values = [point_value(item.point) for item in job.items]
    if as_json:
        payload = {"realizations": [vector_to_json(v) for v in values]}
        print(json.dumps(payload, indent=2, sort_keys=True), file=out)
        return 0
    lines = [f"{n}: {v}" for n, v in enumerate(values, start=1)]
    print("\n".join(lines), file=out)
    return 0


def cmd_oracle(job, as_json: bool, cfg, out) -> int:
    total = OracleReport(seed=cfg.seed)
    for item in job.items:
        if not isinstance(item.point, CutPoint):
            continue
        cut = item.cut
        total = total.merge(check_invariance(cut, cfg, item.claimed_invariance))
        total = total.merge(check_covariance(cut, cfg, item.claims))
    total.seed = cfg.seed
    if as_json:
        print(json.dumps(oracle_report_to_json(total), indent=2, sort_keys=True), file=out)
    else:
        status = "ok" if total.ok else f"{len(total.violations)} violation(s)"
        lines = [f"checked: {total.checked}  seed: {total.seed}  {status}"]
        lines.extend(f"  - {v}" for v in total.violations)
        print("\n".join(lines), file=out)
    return 0 if total.ok else 1


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = argparse.ArgumentParser(prog="cutkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("classify", "compare", "realize", "oracle"):
        p = sub.add_parser(name)
        p.add_argument("file")
        p.add_argument("--json", action="store_true")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--count", type=int, default=None)
    args = parser.parse_args(argv)
    try:
        job = _load_job(args.file)
        if args.command == "classify":
            return cmd_classify(job, args.json, out)
        if args.command == "compare":
            return cmd_compare(job, args.json, out)
        if args.command == "realize":
            return cmd_realize(job, args.json, out)
        cfg = sample_config_from(job.params, seed=args.seed, count=args.count)
        return cmd_oracle(job, args.json, cfg, out)
    except (ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
