"""
Command-line interface of the tubal-completion toolkit.

Exit codes: 0 success, 1 usage error, 2 I/O, format or shape error, 3 numerical
failure. Results go to standard output as key=value lines; all log messages
go to standard error.
"""
import argparse
from typing import List, Optional

from loguru import logger

from . import __version__
from .config import (
    DEFAULT_CSVD_ITERS,
    DEFAULT_CSVD_TOL,
    DEFAULT_EPS_SCALE,
    DEFAULT_MAX_ITERS,
    DEFAULT_MU,
    DEFAULT_RANK,
    DEFAULT_RHO,
    DEFAULT_SEED,
)
from .exceptions import NumericalError, TubalError, UsageError
from .models.completion import CompletionConfig
from .models.synthetic import SynthSpec
from .completion.metrics import relative_error, rmse
from .oracle.verify import run_verification
from .services.completion import CompletionService
from .services.decomposition import METHODS, DecompositionService
from .storage.image import read_frames, read_image, write_image
from .storage.tensor_file import TensorFileStorage, read_mask, read_tensor, write_mask, write_tensor
from .utils.random import gen_mask, synth_lowrank


class ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser reporting usage problems as UsageError (exit code 1)."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> List[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _float_list(text: str) -> List[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _dims(text: str) -> List[int]:
    dims = _int_list(text)
    if len(dims) != 3:
        raise argparse.ArgumentTypeError(f"expected n1,n2,n3, got {text!r}")
    return dims


def _completion_config(args) -> CompletionConfig:
    return CompletionConfig(r=args.rank, mu0=args.mu, rho=args.rho, eps=getattr(args, "eps", None),
                            max_iters=args.max_iters, seed=args.seed)


def cmd_synth(args) -> int:
    spec = SynthSpec(m=args.m, n=args.n, p=args.p, r1=args.tubal_rank, seed=args.seed)
    write_tensor(args.out, synth_lowrank(spec))
    logger.info(f"Synthesized {spec.m} x {spec.n} x {spec.p} tensor of tubal rank {spec.r1} -> {args.out}")
    return 0


def cmd_mask(args) -> int:
    omega = gen_mask(*args.dims, miss_rate=args.miss_rate, seed=args.seed)
    write_mask(args.out, omega)
    print(f"observed={omega.observed_count}")
    return 0


def cmd_decompose(args) -> int:
    service = DecompositionService(TensorFileStorage())
    report = service.run(read_tensor(args.input), rank=args.rank, iters=args.iters, method=args.method,
                         tol=args.tol if args.tol > 0 else None)
    service.write_factors(report, args.out_l, args.out_d, args.out_r)
    if args.diagnostics:
        service.write_diagnostics(report, args.diagnostics)
    print(f"iterations={len(report.trace)}")
    print(f"rmse={report.trace[-1].rmse:.10g}")
    return 0


def cmd_complete(args) -> int:
    m = read_tensor(args.input)
    omega = read_mask(args.mask) if args.mask else gen_mask(*m.shape, miss_rate=args.miss_rate, seed=args.seed)
    truth = read_tensor(args.truth) if args.truth else None
    service = CompletionService(TensorFileStorage())
    report = service.run(m, omega, _completion_config(args), truth=truth)
    service.storage.write(args.out, report.x)
    if args.diagnostics:
        service.write_diagnostics(report, args.diagnostics)
    print(f"iterations={report.iterations}")
    print(f"converged={str(report.converged).lower()}")
    return 0


def cmd_metrics(args) -> int:
    a, b = read_tensor(args.a), read_tensor(args.b)
    print(f"rmse={rmse(a, b):.10g}")
    print(f"relerr={relative_error(a, b):.10g}")
    return 0


def cmd_convert(args) -> int:
    if args.to_image:
        write_image(args.out, read_tensor(args.to_image))
    elif args.from_image:
        write_tensor(args.out, read_image(args.from_image))
    else:
        write_tensor(args.out, read_frames(args.from_frames))
    logger.info(f"Converted to {args.out}")
    return 0


def cmd_verify(args) -> int:
    results = run_verification(args.seed)
    failed = [r.name for r in results if not r.passed]
    print(f"checks={len(results)}")
    print(f"failed={len(failed)}")
    if failed:
        raise NumericalError(f"verification failed: {', '.join(failed)}")
    return 0


def cmd_sweep(args) -> int:
    service = CompletionService(TensorFileStorage())
    records = service.sweep(read_tensor(args.input), args.miss_rates, _completion_config(args), depths=args.depths)
    service.write_sweep(records, args.out)
    print(f"runs={len(records)}")
    return 0


def _add_solver_args(p: argparse.ArgumentParser):
    p.add_argument("--rank", type=int, default=DEFAULT_RANK, help="target tubal rank r")
    p.add_argument("--mu", type=float, default=DEFAULT_MU, help="initial penalty mu0")
    p.add_argument("--rho", type=float, default=DEFAULT_RHO, help="penalty growth factor (>= 1)")
    p.add_argument("--max-iters", type=int, default=DEFAULT_MAX_ITERS)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Philox seed for generated masks")


def build_parser() -> ArgumentParser:
    """Build the argument parser with all subcommands."""
    parser = ArgumentParser(prog="tubal", description="Low-tubal-rank tensor completion toolkit.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="write a synthetic low-tubal-rank tensor")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--tubal-rank", type=int, required=True)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out", required=True)
    p.set_defaults(handler=cmd_synth)

    p = sub.add_parser("mask", help="write a random observation mask")
    p.add_argument("--dims", type=_dims, required=True, help="n1,n2,n3")
    p.add_argument("--miss-rate", type=float, required=True)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out", required=True)
    p.set_defaults(handler=cmd_mask)

    p = sub.add_parser("decompose", help="rank-r tri-factorization with an RMSE trace")
    p.add_argument("--input", required=True)
    p.add_argument("--rank", type=int, default=DEFAULT_RANK)
    p.add_argument("--iters", type=int, default=DEFAULT_CSVD_ITERS)
    p.add_argument("--tol", type=float, default=DEFAULT_CSVD_TOL,
                   help="stop once the residual improves by less than tol * max(||input||_F, 1); "
                        "0 runs exactly --iters iterations")
    p.add_argument("--method", choices=METHODS, default="ctsvd-qr")
    p.add_argument("--out-l", required=True)
    p.add_argument("--out-d", required=True)
    p.add_argument("--out-r", required=True)
    p.add_argument("--diagnostics", help="CSV with columns iter,rmse,elapsed_ms")
    p.set_defaults(handler=cmd_decompose)

    p = sub.add_parser("complete", help="recover missing entries with TLNM-TQR")
    p.add_argument("--input", required=True)
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--mask", help="MSK3 observation mask")
    source.add_argument("--miss-rate", type=float, help="draw a mask with this missing fraction")
    _add_solver_args(p)
    p.add_argument("--eps", type=float, default=None,
                   help="tolerance on the squared Frobenius residual; grows with tensor size "
                        f"(default {DEFAULT_EPS_SCALE:g} * n1 * n2 * n3, which can stop a 100-iteration "
                        "benchmark early; pass a small value such as 1e-12 to run every iteration)")
    p.add_argument("--out", required=True)
    p.add_argument("--diagnostics", help="CSV with columns iter,residual,mu,rmse_vs_truth,elapsed_ms")
    p.add_argument("--truth", help="ground-truth tensor for the rmse_vs_truth column")
    p.set_defaults(handler=cmd_complete)

    p = sub.add_parser("metrics", help="RMSE and relative error between two tensors")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(handler=cmd_metrics)

    p = sub.add_parser("convert", help="convert between PGM/PPM images, frame directories and TNS3")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--from-image", help="PGM or PPM image to convert to TNS3")
    source.add_argument("--from-frames", help="directory of PGM frames to convert to TNS3")
    source.add_argument("--to-image", help="TNS3 tensor with 1 or 3 slices to convert to PGM/PPM")
    p.add_argument("--out", required=True)
    p.set_defaults(handler=cmd_convert)

    p = sub.add_parser("verify", help="cross-check production routines against the dense references")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("sweep", help="complete over several miss rates and depths")
    p.add_argument("--input", required=True)
    p.add_argument("--miss-rates", type=_float_list, required=True, help="comma-separated, each in [0, 1)")
    p.add_argument("--depths", type=_int_list, default=None, help="comma-separated frontal-slice counts")
    _add_solver_args(p)
    p.add_argument("--out", required=True, help="CSV with columns miss_rate,depth,iterations,rmse,elapsed_ms")
    p.set_defaults(handler=cmd_sweep)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one subcommand and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except TubalError as e:
        logger.error(e.message)
        return e.exit_code

