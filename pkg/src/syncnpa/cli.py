"""Command-line frontend: JSON in, JSON out, stable exit codes.

Exit codes: 0 pass/feasible, 1 fail/infeasible, 2 usage error,
3 no convergence.  Reports go to stdout as JSON; diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .applications import (
    flatten_pvms,
    mub_level1,
    mub_level1_factor,
    p_mub,
    p_sic,
    reference_mubs,
    reference_sic,
    sic_level1,
    sic_level1_factor,
)
from .certificate import REAL, Certificate, Correlation, from_projections
from .hierarchy import certify, numerical_rank
from .solver import SolverConfig, export_sdpa
from .spanning import check_matricially_spanning, commutator_stack

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_NO_CONVERGENCE = 3


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _load_correlation(path: str) -> Correlation:
    with open(path) as fh:
        return Correlation.from_jsonable(json.load(fh))


def _cmd_gen(args) -> int:
    corr = p_sic(args.d) if args.kind == "sic" else p_mub(args.d)
    obj = corr.to_jsonable()
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(obj, fh)
    _emit(obj)
    return EXIT_PASS


def _cmd_certify(args) -> int:
    corr = _load_correlation(args.input)
    config = SolverConfig(max_iters=args.max_iters, tol_feas=args.tol_feas, mode=args.mode)
    report = certify(corr, max_level=args.level, config=config)
    if args.out and report.certificate is not None:
        report.certificate.dump(args.out)
    _emit(report.to_jsonable())
    if report.verdict.startswith("rejected"):
        return EXIT_FAIL
    if report.verdict == "inconclusive":
        return EXIT_NO_CONVERGENCE
    return EXIT_PASS


def _cmd_rank(args) -> int:
    cert = Certificate.load(args.input)
    ranks = [
        numerical_rank(cert.restriction(j).matrix, args.rel_tol)
        for j in range(1, cert.level + 1)
    ]
    loops = [ranks[m - 1] == ranks[m] for m in range(1, len(ranks))]
    _emit(
        {
            "n": cert.n,
            "level": cert.level,
            "rel_tol": args.rel_tol,
            "ranks": ranks,
            "loops": loops,
        }
    )
    return EXIT_PASS


def _cmd_spanning(args) -> int:
    cert = Certificate.load(args.t2)
    report = check_matricially_spanning(cert.restriction(1), cert, args.d)
    if args.dump_s:
        np.save(args.dump_s, commutator_stack(cert))
    _emit(report.to_jsonable())
    return EXIT_PASS if report.passed else EXIT_FAIL


def _cmd_factor_t1(args) -> int:
    if args.kind == "sic":
        cert, factor = sic_level1(args.d), sic_level1_factor(args.d)
    else:
        cert, factor = mub_level1(args.d), mub_level1_factor(args.d)
    err = float(np.abs(factor.conj().T @ factor - cert.matrix).max())
    rank = factor.shape[0]
    obj = {
        "kind": args.kind,
        "d": args.d,
        "size": cert.size,
        "factor_rows": rank,
        "max_reconstruction_error": err,
    }
    _emit(obj)
    if args.verify and (err >= 1e-12 or rank != args.d * args.d):
        print(f"factor verification failed: error {err:.3e}, rows {rank}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_PASS


ORACLES = {
    "sic2": lambda: reference_sic(2),
    "sic3": lambda: reference_sic(3),
    "mub2": lambda: flatten_pvms(reference_mubs(2)),
    "mub3": lambda: flatten_pvms(reference_mubs(3)),
    "mub5": lambda: flatten_pvms(reference_mubs(5)),
}


def _cmd_oracle(args) -> int:
    cert = from_projections(ORACLES[args.name](), args.level)
    obj = cert.to_jsonable()
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(obj, fh)
    _emit(obj)
    return EXIT_PASS


def _cmd_export_sdpa(args) -> int:
    corr = _load_correlation(args.input)
    summary = export_sdpa(corr, args.level, REAL, args.output)
    _emit(summary)
    return EXIT_PASS


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="syncnpa",
        description="Moment-matrix hierarchy for synchronous projection correlations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a benchmark correlation")
    gen.add_argument("kind", choices=["sic", "mub"])
    gen.add_argument("--d", type=int, required=True, help="dimension parameter")
    gen.add_argument("-o", "--output", help="also write the JSON to this path")
    gen.set_defaults(func=_cmd_gen)

    cert = sub.add_parser("certify", help="run the hierarchy on a correlation")
    cert.add_argument("--input", required=True, help="correlation JSON path")
    cert.add_argument("--level", type=int, default=2, help="deepest level to solve")
    cert.add_argument("--mode", choices=["real", "complex"], default="real")
    cert.add_argument("--max-iters", type=int, default=50_000)
    cert.add_argument("--tol-feas", type=float, default=1e-7)
    cert.add_argument("--out", help="write the deepest certificate JSON here")
    cert.set_defaults(func=_cmd_certify)

    rank = sub.add_parser("rank", help="restriction ranks of a certificate")
    rank.add_argument("--input", required=True, help="certificate JSON path")
    rank.add_argument("--rel-tol", type=float, default=1e-9)
    rank.set_defaults(func=_cmd_rank)

    span = sub.add_parser("spanning", help="matricial-spanning checks on a level-2 certificate")
    span.add_argument("--t2", required=True, help="level-2 certificate JSON path")
    span.add_argument("--d", type=int, required=True, help="claimed dimension")
    span.add_argument("--dump-s", help="write the commutator stack to this .npy path")
    span.set_defaults(func=_cmd_spanning)

    factor = sub.add_parser("factor-t1", help="closed-form level-1 certificate and factor")
    factor.add_argument("kind", choices=["sic", "mub"])
    factor.add_argument("--d", type=int, required=True)
    factor.add_argument("--verify", action="store_true", help="exit 1 unless the factor checks out")
    factor.set_defaults(func=_cmd_factor_t1)

    oracle = sub.add_parser("oracle", help="certificate of a shipped reference family")
    oracle.add_argument("name", choices=sorted(ORACLES))
    oracle.add_argument("--level", type=int, default=2)
    oracle.add_argument("-o", "--output", help="also write the JSON to this path")
    oracle.set_defaults(func=_cmd_oracle)

    export = sub.add_parser("export-sdpa", help="write the feasibility SDP in SDPA sparse format")
    export.add_argument("--input", required=True, help="correlation JSON path")
    export.add_argument("--level", type=int, default=2)
    export.add_argument("-o", "--output", required=True, help="output .dat-s path")
    export.set_defaults(func=_cmd_export_sdpa)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
