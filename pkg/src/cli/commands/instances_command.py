"""
certify / scaling / corpus: lower-bound families and the random corpus
"""

import sys
from pathlib import Path

from ...common import system_logger
from ...common.enums import CertificateMethod, ExitCode, LowerBoundFamily
from ...handler.scaling_handler import ScalingHandler
from ...handler.verification_handler import VerificationHandler
from ...instances import (
    CorpusParams,
    attained,
    certify_min_norm,
    gen_lower_3block,
    gen_lower_4block,
    random_corpus,
    witness_3block,
    witness_4block,
)
from ...parsers import instance_parser
from .output import emit_result, add_output_argument

FAMILIES = [f.value for f in LowerBoundFamily]
METHODS = [m.value for m in CertificateMethod]


def register(subparsers):
    parser = subparsers.add_parser("certify", help="Certify the least kernel norm of a family")
    parser.add_argument("--family", choices=FAMILIES, required=True)
    parser.add_argument("--t", type=int, default=2, help="Brick width of the 4-block family")
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument(
        "--bound", type=int, default=None, help="Norm to certify (default: the witness norm)"
    )
    parser.add_argument("--method", choices=METHODS, default=CertificateMethod.EXHAUSTIVE.value)
    parser.add_argument("--node-budget", type=int, default=None)
    add_output_argument(parser)
    parser.set_defaults(handler=run_certify)

    parser = subparsers.add_parser("scaling", help="Lower-bound scaling table")
    parser.add_argument("--family", choices=FAMILIES, required=True)
    parser.add_argument("--t", type=int, default=2)
    parser.add_argument("--n-list", type=int, nargs="+", required=True)
    parser.add_argument("--method", choices=METHODS, default=None)
    parser.add_argument("--node-budget", type=int, default=None)
    parser.add_argument(
        "-o", "--output", default=None, help="CSV or .xlsx table (default: CSV on stdout)"
    )
    parser.set_defaults(handler=run_scaling)

    parser = subparsers.add_parser("corpus", help="Write a seeded random instance corpus")
    parser.add_argument("--seed", type=int, required=True)
    parser.add_argument("--count", type=int, default=50)
    parser.add_argument("--out-dir", required=True)
    parser.add_argument("--n-max", type=int, default=CorpusParams.n_max)
    parser.add_argument("--t-max", type=int, default=CorpusParams.t_max)
    parser.add_argument("--bound-range", type=int, default=CorpusParams.bound_range)
    parser.set_defaults(handler=run_corpus)


def run_certify(args) -> ExitCode:
    family = LowerBoundFamily(args.family)
    if family == LowerBoundFamily.FOUR_BLOCK:
        spec = gen_lower_4block(args.t, args.n)
        witness = witness_4block(args.t, args.n)
    else:
        spec = gen_lower_3block(args.n)
        witness = witness_3block(args.n)
    bound = args.bound if args.bound is not None else witness.norm_inf()
    certificate = certify_min_norm(spec, bound, CertificateMethod(args.method), args.node_budget)
    system_logger.cli_info(
        f"certify {family.value} n={args.n}: no kernel vector below "
        f"{certificate.min_norm_verified}"
    )
    payload = certificate.to_dict()
    payload["attained"] = attained(certificate)
    checks = VerificationHandler.certificate_checks(spec, certificate)
    return emit_result("certify", payload, checks, args.output)


def run_scaling(args) -> ExitCode:
    handler = ScalingHandler(args.node_budget)
    method = CertificateMethod(args.method) if args.method else None
    table = handler.build_table(LowerBoundFamily(args.family), args.n_list, args.t, method)
    if args.output:
        target = handler.save(table, args.output)
        system_logger.cli_info(f"scaling: wrote {len(table)} rows to {target}")
    else:
        sys.stdout.write(table.to_csv(index=False))
    if not table["verified"].all():
        failed = table.loc[~table["verified"], "n"].tolist()
        system_logger.cli_error("scaling: unverified rows", {"n": failed})
        return ExitCode.INVARIANT_VIOLATION
    return ExitCode.OK


def run_corpus(args) -> ExitCode:
    params = CorpusParams(n_max=args.n_max, t_max=args.t_max, bound_range=args.bound_range)
    corpus = random_corpus(args.seed, params, args.count)
    out_dir = Path(args.out_dir)
    width = max(3, len(str(len(corpus))))
    for index, inst in enumerate(corpus):
        instance_parser.write(inst, out_dir / f"instance_{index:0{width}d}.txt")
    system_logger.cli_info(f"corpus: {len(corpus)} instances in {out_dir}", {"seed": args.seed})
    return ExitCode.OK
