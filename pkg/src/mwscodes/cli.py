"""Command-line interface.

Machine-readable JSON goes to stdout, prose diagnostics to stderr, so the
tool composes in pipelines.  Exit statuses:

    0  success
    1  a requested verification predicate returned false
    2  invalid input
    3  a resource guard tripped

Subcommands: construct, verify, search, montecarlo, bounds, field-info.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import secrets
import sys

from . import bounds as bounds_mod
from . import constructions
from .codes import EnumerationTooLargeError, spectrum_report
from .gf import NotPrimePowerError, build_field
from .matrixio import dumps_code, load_code, save_code
from .search import (
    SearchConfig,
    SearchSpaceTooLargeError,
    estimate_expectation,
    gv_qm_search,
    search,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_GUARD = 3


def _emit(payload: dict) -> None:
    json.dump(payload, sys.stdout, indent=2, default=str)
    sys.stdout.write("\n")


def _diag(msg: str) -> None:
    print(msg, file=sys.stderr)


def _parse_int_list(text: str) -> list[int]:
    """Accept '3', '3,4,5', or '1..6'."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(tok) for tok in text.split(",") if tok]


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    seed = secrets.randbits(32)
    _diag(f"no --seed given; using random seed {seed} (logged in the payload)")
    return seed


# -- construct ----------------------------------------------------------------

def cmd_construct(args) -> int:
    kind = args.kind
    if kind in ("simplex", "identity"):
        maker = constructions.simplex if kind == "simplex" else constructions.identity_code
        code = maker(args.q, args.k)
        report = {"construction": kind, **spectrum_report(code)}
    elif kind == "embed":
        if args.infile:
            base = load_code(args.infile)
            source = base
        else:
            source = args.source or "identity"
        code, report = constructions.mws_pipeline(args.q, args.k, source)
    elif kind == "repetition":
        if not args.infile or not args.profile:
            raise ValueError("repetition needs --in and --profile")
        base = load_code(args.infile)
        profile = [int(t) for t in args.profile.split(",")]
        code = constructions.generalized_repetition(base, profile)
        report = {"construction": "repetition", **spectrum_report(code)}
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown kind {kind}")

    report["matrix"] = dumps_code(code)
    if args.out:
        save_code(code, args.out)
        _diag(f"matrix written to {args.out}")

    status = EXIT_OK
    checks = {}
    if args.verify_qm:
        from .codes import is_qm

        checks["is_qm"] = is_qm(code)
    if args.verify_mws:
        from .codes import is_mws

        checks["is_mws"] = is_mws(code)
    if checks:
        report["verification"] = checks
        if not all(checks.values()):
            status = EXIT_VERIFY_FAILED
    _emit(report)
    return status


# -- verify -------------------------------------------------------------------

def cmd_verify(args) -> int:
    code = load_code(args.infile)
    report = spectrum_report(code)
    _emit(report)
    requested = []
    if args.qm:
        requested.append(report["is_qm"])
    if args.mws:
        requested.append(report["is_mws"])
    if not requested:  # default: both must hold for success
        requested = [report["is_qm"], report["is_mws"]]
    return EXIT_OK if all(requested) else EXIT_VERIFY_FAILED


# -- search / montecarlo ------------------------------------------------------

def cmd_search(args) -> int:
    if args.gv:
        seed = _resolve_seed(args)
        report = gv_qm_search(args.q, args.k, trials=args.trials, seed=seed, workers=args.workers)
        _emit(report)
        return EXIT_OK
    if args.n is None:
        raise ValueError("--n is required unless --gv is given")
    n_values = _parse_int_list(args.n)
    seed = _resolve_seed(args) if args.mode == "random" else (args.seed or 0)
    config = SearchConfig(
        q=args.q,
        k=args.k,
        n_lo=min(n_values),
        n_hi=max(n_values),
        target=args.target,
        mode=args.mode,
        trials=args.trials,
        seed=seed,
        workers=args.workers,
    )
    report = search(config)
    _emit(report)
    if args.witness_out and report["shortest_success"] is not None:
        entry = next(e for e in report["lengths"] if e.get("found"))
        with open(args.witness_out, "w") as fh:
            fh.write(entry["witness"]["matrix"])
        _diag(f"witness written to {args.witness_out}")
    return EXIT_OK


def cmd_montecarlo(args) -> int:
    seed = _resolve_seed(args)
    est = estimate_expectation(
        args.q, args.k, args.n, samples=args.samples, seed=seed, workers=args.workers
    )
    _emit(est.to_dict())
    return EXIT_OK


# -- bounds -------------------------------------------------------------------

def cmd_bounds(args) -> int:
    q_list = _parse_int_list(args.q)
    k_list = _parse_int_list(args.k)
    if not q_list or not k_list:
        raise ValueError("empty q or k list")
    for q in q_list:
        build_field(q)  # rejects non-prime-power q
    reports = [bounds_mod.bounds_report(q, k).to_dict() for q in q_list for k in k_list]
    if args.format == "json":
        _emit({"cells": reports})
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(reports[0].keys()))
        writer.writeheader()
        writer.writerows(reports)
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


# -- field-info ---------------------------------------------------------------

def cmd_field_info(args) -> int:
    fld = build_field(args.q)
    _emit(fld.describe())
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mwscodes", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a code and optionally verify it")
    c.add_argument("kind", choices=["simplex", "identity", "embed", "repetition"])
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--k", type=int, default=1)
    c.add_argument("--source", choices=["identity", "simplex"], default=None,
                   help="base construction for embed")
    c.add_argument("--in", dest="infile", default=None, help="base matrix file")
    c.add_argument("--profile", default=None, help="comma-separated multiplicities")
    c.add_argument("--out", default=None, help="write the matrix file here")
    c.add_argument("--verify-qm", action="store_true")
    c.add_argument("--verify-mws", action="store_true")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="verify a matrix file")
    v.add_argument("--in", dest="infile", required=True)
    v.add_argument("--qm", action="store_true", help="exit status reflects QM only")
    v.add_argument("--mws", action="store_true", help="exit status reflects MWS only")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="random or exhaustive code search")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", default=None, help="length or range, e.g. 5..6")
    s.add_argument("--target", choices=["qm", "mws"], default="mws")
    s.add_argument("--mode", choices=["random", "exhaustive"], default="random")
    s.add_argument("--trials", type=int, default=10_000)
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--gv", action="store_true",
                   help="QM search at the GV-type length ceil(k*lambda_q)")
    s.add_argument("--witness-out", default=None)
    s.set_defaults(func=cmd_search)

    m = sub.add_parser("montecarlo", help="estimate the expected collision statistic")
    m.add_argument("--q", type=int, required=True)
    m.add_argument("--k", type=int, required=True)
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--samples", type=int, default=20_000)
    m.add_argument("--seed", type=int, default=None)
    m.add_argument("--workers", type=int, default=1)
    m.set_defaults(func=cmd_montecarlo)

    b = sub.add_parser("bounds", help="bound tables over a (q, k) grid")
    b.add_argument("--q", required=True, help="e.g. 3 or 3,4,5 or 2..9")
    b.add_argument("--k", required=True, help="e.g. 2 or 1..6")
    b.add_argument("--format", choices=["csv", "json"], default="json")
    b.set_defaults(func=cmd_bounds)

    f = sub.add_parser("field-info", help="describe GF(q)")
    f.add_argument("--q", type=int, required=True)
    f.set_defaults(func=cmd_field_info)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NotPrimePowerError, ValueError, FileNotFoundError,
            constructions.NotQuasiMinimalError) as exc:
        if isinstance(exc, constructions.NotQuasiMinimalError):
            _diag(f"verification failed: {exc}")
            _emit({"error": "NotQuasiMinimal", "detail": str(exc)})
            return EXIT_VERIFY_FAILED
        _diag(f"invalid input: {exc}")
        _emit({"error": type(exc).__name__, "detail": str(exc)})
        return EXIT_BAD_INPUT
    except (EnumerationTooLargeError, SearchSpaceTooLargeError) as exc:
        _diag(f"resource guard tripped: {exc}")
        _emit({"error": type(exc).__name__, "detail": str(exc)})
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
