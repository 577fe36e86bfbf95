"""
Verify handlers for the weighted contraharmonic mean verifier.
Evaluates named properties on one fixed instance and prints their margins.
"""

import argparse
import logging
from typing import Dict, List, Optional

import numpy as np

import config
from harness.matrix_io import read_hermitian_pd, read_matrix
from means import operator_means as means
from means.hermitian_core import identity, min_eigenvalue, op_norm, unwrap
from means.inequality_suite import (
    PositiveFunctional,
    PropertyId,
    check_functional_witness,
    lambda_special_cases,
    mixed_mean_auxiliary,
    norm_lower_premise,
    transport_decomposition,
    verify_all,
)

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    """Add the verify subcommand."""
    parser = subparsers.add_parser("verify", help="check properties on one instance")
    parser.add_argument("--all", action="store_true", help="check every property")
    parser.add_argument("--property", action="append", default=[], dest="properties",
                        choices=[p.value for p in PropertyId], metavar="ID",
                        help="property to check (repeatable)")
    parser.add_argument("--nu", type=float, required=True)
    parser.add_argument("--mu", type=float, default=0.5)
    parser.add_argument("--lambda", type=float, default=0.5, dest="lam")
    parser.add_argument("--a", required=True)
    parser.add_argument("--b", required=True)
    parser.add_argument("--c", help="defaults to b")
    parser.add_argument("--d", help="defaults to a")
    parser.add_argument("--z", help="invertible matrix for CONGRUENCE (defaults to e)")
    parser.add_argument("--x", help="x of the decomposition x + y = e (defaults to e/2)")
    parser.add_argument("--tol", type=float, default=config.DEFAULT_TOL)
    parser.add_argument("--diagnostics", action="store_true",
                        help="also print the residuals of the proof constructions")
    parser.set_defaults(handler=cmd_verify)


def selected_properties(args: argparse.Namespace) -> List[PropertyId]:
    if args.all or not args.properties:
        return list(PropertyId)
    return list(dict.fromkeys(PropertyId(p) for p in args.properties))


def theorem_verdicts(nu, a, b, x: np.ndarray, tol: float) -> Dict[PropertyId, object]:
    """Verdicts of the variational theorem and its proof identities."""
    d = means.Decomposition.from_x(x)
    return {
        PropertyId.VARIATIONAL: means.check_variational_bound(nu, a, b, d, tol),
        PropertyId.ATTAINMENT: means.check_attainment(nu, a, b, tol),
        PropertyId.GAP_IDENTITY: means.check_gap_identity(nu, a, b, d, tol),
        PropertyId.PRODUCT_IDENTITY: means.check_product_identity(nu, a, b, tol),
        PropertyId.SQUARE_IDENTITY: means.check_square_identity(nu, a, b, tol),
        PropertyId.ORDER_CHAIN: means.check_order_chain(nu, a, b, tol),
        PropertyId.HARMONIC_BOUNDS: means.check_harmonic_bounds(nu, a, b, tol),
    }


def diagnostics(nu, a, b, x: np.ndarray, z: Optional[np.ndarray]) -> Dict[str, float]:
    """Residuals of the proof constructions; mixed_auxiliary_min_eig is a smallest eigenvalue instead."""
    n = a.shape[0]
    e = identity(n)
    transported = transport_decomposition(e if z is None else z, means.Decomposition.from_x(x))
    values = {
        "transport_constraint": op_norm(transported.x + transported.y - e),
        "mixed_auxiliary_min_eig": min_eigenvalue(mixed_mean_auxiliary(nu, a, x)),
        "functional_witness": check_functional_witness(nu, a, b, PositiveFunctional.trace(n)).residual,
    }
    values.update({f"lambda_closed_form_{k}": v for k, v in lambda_special_cases(nu, a, b).items()})
    values.update({f"norm_premise_{k}": v for k, v in norm_lower_premise(nu, a, b).items()})
    return values


def cmd_verify(args: argparse.Namespace) -> int:
    """Handle verify - print one verdict line per property, exit 1 on any failure."""
    params = means.MeanParams.create(args.nu, read_hermitian_pd(args.a), read_hermitian_pd(args.b))
    nu, a, b = params.nu.value, unwrap(params.a), unwrap(params.b)
    c = read_hermitian_pd(args.c) if args.c else None
    d = read_hermitian_pd(args.d) if args.d else None
    z = read_matrix(args.z) if args.z else None
    x = read_matrix(args.x) if args.x else 0.5 * identity(a.shape[0])

    verdicts = verify_all(nu, args.mu, args.lam, a, b, c=c, d=d, z=z, tol=args.tol)
    verdicts.update(theorem_verdicts(nu, a, b, x, args.tol))

    failures = 0
    for pid in selected_properties(args):
        verdict = verdicts[pid]
        failures += 0 if verdict.holds else 1
        print(config.MESSAGES["verdict_line"].format(
            property=pid.value,
            status="PASS" if verdict.holds else "FAIL",
            margin=verdict.margin,
        ))

    if args.diagnostics:
        for name, value in diagnostics(nu, a, b, x, z).items():
            print(config.MESSAGES["diagnostic_line"].format(name=name, value=value))

    if failures:
        logger.warning(f"{failures} properties failed at tol={args.tol}")
        return 1
    return 0
