"""
Compute handlers for the weighted contraharmonic mean verifier.
Evaluates one mean (or a witness operator) on matrices read from JSON files.
"""

import argparse
import json
import logging

from harness.matrix_io import matrix_document, read_hermitian_pd, write_matrix
from means import operator_means as means
from means.inequality_suite import contraction_witness

logger = logging.getLogger(__name__)

MEANS = {
    "arithmetic": means.arithmetic_mean,
    "harmonic": means.harmonic_mean,
    "geometric": means.geometric_mean,
    "contraharmonic": means.contraharmonic_mean,
    "witness": lambda nu, a, b: means.witness_pair(nu, a, b).z,
    "contraction": contraction_witness,
}


def register(subparsers) -> None:
    """Add the compute subcommand."""
    parser = subparsers.add_parser("compute", help="evaluate a weighted mean on two matrices")
    parser.add_argument("--mean", choices=sorted(MEANS), default="contraharmonic")
    parser.add_argument("--nu", type=float, required=True, help="weight in (0, 1)")
    parser.add_argument("--a", required=True, help="matrix JSON file")
    parser.add_argument("--b", required=True, help="matrix JSON file")
    parser.add_argument("--out", help="output file (stdout when omitted)")
    parser.set_defaults(handler=cmd_compute)


def cmd_compute(args: argparse.Namespace) -> int:
    """Handle compute - write the selected mean of a and b."""
    params = means.MeanParams.create(args.nu, read_hermitian_pd(args.a), read_hermitian_pd(args.b))
    result = MEANS[args.mean](params.nu.value, params.a, params.b)

    if args.out:
        write_matrix(args.out, result)
        logger.info(f"Wrote {args.mean} (nu={args.nu}) to {args.out}")
    else:
        print(json.dumps(matrix_document(result)))
    return 0
