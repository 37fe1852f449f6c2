"""Command-line interface: ``biquotient13 <command> [tuple] [options]``.

Reports go to stdout (json by default). Validation failures exit with code 2
and a single-line JSON object on stderr; anything unexpected exits with 1.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from .biquotient import CertifyConfig, certify_positivity, default_workers, free_action_check
from .cohomology import cohomology_summary, det_exact, relation_matrix
from .errors import BiquotientError, NotAdmissibleError
from .liealg import diag_i, haar_special_unitary
from .oracles import (
    classify_root_pattern, extremal_family_check, lemma8_complement, orbit_envelope_violation,
    orbit_extrema,
)
from .tuples import (
    abresch_multiplier, abresch_shift, as_tuple5, check_admissibility, enumerate_admissible,
    fundamental_group_order, invariant_collisions, symmetric_invariants,
)

SCHEMA = 1


class UsageError(BiquotientError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_tuple(text):
    parts = text.split(",")
    try:
        return as_tuple5(int(p) for p in parts)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"malformed tuple {text!r}: {e}") from None


def build_parser():
    p = _Parser(prog="biquotient13", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    # also accepted after the subcommand
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _add = sub.add_parser

    def add_parser(name, **kw):
        return _add(name, parents=[common], **kw)

    sub.add_parser = add_parser

    def tup(sp):
        sp.add_argument("tuple", type=parse_tuple,
                        help="five comma-separated integers, e.g. 1,2,2,2,2")

    tup(sub.add_parser("check", help="admissibility, r and pi_1"))
    tup(sub.add_parser("invariant", help="symmetric invariants and cohomology"))
    tup(sub.add_parser("cohomology", help="integral cohomology summary"))
    for name, text in (("enum", "enumerate admissible tuples"),
                       ("collide", "admissible tuples sharing r")):
        sp = sub.add_parser(name, help=text)
        sp.add_argument("--max-entry", type=int, default=5)

    sp = sub.add_parser("certify", help="numerical curvature-positivity evidence")
    tup(sp)
    d = CertifyConfig()
    sp.add_argument("--points", type=int, default=d.num_points)
    sp.add_argument("--restarts", type=int, default=d.restarts)
    sp.add_argument("--iters", type=int, default=d.max_iters)
    sp.add_argument("--tol", type=float, default=d.tol)
    sp.add_argument("--seed", type=int, default=d.seed)
    sp.add_argument("--workers", type=int, default=None,
                    help="process count (default from BIQUOTIENT13_WORKERS or 1)")
    sp.add_argument("--force", action="store_true",
                    help="run on free but non-admissible tuples")
    sp.add_argument("--timing", action="store_true",
                    help="include runtime_ms (makes output non-reproducible)")

    sp = sub.add_parser("verify", help="run the oracle checks on random samples")
    sp.add_argument("--samples", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-entry", type=int, default=6)

    sp = sub.add_parser("shift", help="shift a tuple by a multiple of the split lcm")
    tup(sp)
    sp.add_argument("--n", type=int, default=1)
    return p


def _check(args):
    t = args.tuple
    inv = symmetric_invariants(t)
    return {"schema": SCHEMA, "tuple": list(t), "sigma": list(inv.sigma), "r": inv.r,
            "pi1": fundamental_group_order(t), **check_admissibility(t).to_dict()}


def _invariant(args):
    t = args.tuple
    out = {"schema": SCHEMA, "tuple": list(t), **symmetric_invariants(t).to_dict(),
           "pi1": fundamental_group_order(t)}
    try:
        coh = cohomology_summary(t)
    except BiquotientError as e:
        out["cohomology"] = None
        out["warnings"] = [e.to_dict()]
    else:
        out["cohomology"] = {"h6_order": coh.h6.order,
                             "h6_invariant_factors": list(coh.h6.torsion),
                             "h8_order": coh.r}
        out["warnings"] = []
    return out


def _cohomology(args):
    out = cohomology_summary(args.tuple).to_dict()
    out["det"] = det_exact(relation_matrix(args.tuple))
    return out


def _enum(args):
    ts = enumerate_admissible(args.max_entry)
    return {"schema": SCHEMA, "max_entry": args.max_entry, "count": len(ts),
            "tuples": [{"tuple": list(t), "r": symmetric_invariants(t).r} for t in ts]}


def _collide(args):
    groups = invariant_collisions(args.max_entry)
    return {"schema": SCHEMA, "max_entry": args.max_entry,
            "collisions": {str(r): [list(t) for t in ts] for r, ts in groups.items()}}


def _certify(args):
    t = args.tuple
    rep = check_admissibility(t)
    if not rep.admissible and not args.force:
        bad = sorted({f.condition for f in rep.failures})
        raise NotAdmissibleError(
            f"{t} fails condition(s) {', '.join(bad)}; pass --force to explore anyway")
    cfg = CertifyConfig(args.points, args.restarts, args.iters, args.tol, args.seed)
    workers = default_workers() if args.workers is None else args.workers
    cert = certify_positivity(t, cfg, workers=workers)
    out = cert.to_dict(include_runtime=args.timing)
    out["admissible"] = rep.admissible
    out["note"] = "numerical evidence: smallest bound found, not a proven global minimum"
    return out


def _verify(args):
    rng = np.random.default_rng(args.seed)
    worst_envelope, worst_gap = -np.inf, 0.0
    for _ in range(args.samples):
        h, a = diag_i(rng.standard_normal(5)), diag_i(rng.standard_normal(5))
        worst_envelope = max(worst_envelope, orbit_envelope_violation(h, a, 200, rng))
        worst_gap = max(worst_gap, orbit_extrema(h, a, seed=rng).gap)
    line = lemma8_complement(np.eye(4))
    haar_dims = [len(lemma8_complement(haar_special_unitary(rng, 4)))
                 for _ in range(args.samples)]
    mismatches = 0
    for _ in range(args.samples * 50):
        t = tuple(int(v) for v in rng.integers(-6, 13, 5))
        rep = check_admissibility(t)
        mismatches += bool(free_action_check(t)) == rep.failed("a")
        bd = not any(rep.failed(c) for c in "bcd")
        mismatches += extremal_family_check(t) != bd
    parity = [list(t) for t in enumerate_admissible(args.max_entry)
              if fundamental_group_order(t) != 1]
    checks = {
        "orbit_envelope": worst_envelope <= 1e-9,
        "orbit_attainment": worst_gap <= 1e-5,
        "complement_identity": len(line) == 1 and classify_root_pattern(line[0]) == "(1,1,-1,-1)",
        "complement_haar_trivial": max(haar_dims) == 0,
        "freeness_and_families": mismatches == 0,
        "pi1_parity": not parity,
    }
    return {"schema": SCHEMA, "seed": args.seed, "samples": args.samples,
            "passed": all(checks.values()), "checks": checks,
            "orbit_envelope_violation": float(worst_envelope),
            "orbit_attainment_gap": float(worst_gap),
            "pi1_counterexamples": parity}


def _shift(args):
    t = args.tuple
    s = abresch_shift(t, args.n)
    return {"schema": SCHEMA, "tuple": list(t), "n": args.n,
            "multiplier": abresch_multiplier(t), "shifted": list(s),
            "admissible": check_admissibility(s).admissible}


HANDLERS = {"check": _check, "invariant": _invariant, "cohomology": _cohomology,
            "enum": _enum, "collide": _collide, "certify": _certify,
            "verify": _verify, "shift": _shift}


def _flat(d, prefix=""):
    out = {}
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.update(_flat(v, key + "."))
        elif isinstance(v, list):
            out[key] = json.dumps(v, separators=(",", ":"))
        else:
            out[key] = v
    return out


def render(command, report, fmt):
    if fmt == "json":
        return json.dumps(report, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if command == "enum":
            w.writerow(["p1", "p2", "p3", "p4", "p5", "r"])
            for row in report["tuples"]:
                w.writerow(row["tuple"] + [row["r"]])
        elif command == "collide":
            w.writerow(["r", "p1", "p2", "p3", "p4", "p5"])
            for r, ts in report["collisions"].items():
                for t in ts:
                    w.writerow([r] + t)
        else:
            flat = _flat(report)
            w.writerow(flat.keys())
            w.writerow(flat.values())
        return buf.getvalue()
    return "".join(f"{k}: {v}\n" for k, v in _flat(report).items())


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        report = HANDLERS[args.command](args)
        stdout.write(render(args.command, report, args.format))
        return 0
    except BiquotientError as e:
        stderr.write(json.dumps(e.to_dict(), sort_keys=True) + "\n")
        return 2
    except Exception as e:  # noqa: BLE001 - last-resort reporting
        stderr.write(json.dumps({"error": "InternalError", "type": type(e).__name__,
                                 "message": str(e)}, sort_keys=True) + "\n")
        return 1


def main():
    sys.exit(run())
