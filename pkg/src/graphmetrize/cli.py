"""Command line pipeline over the library: generate, measure, export.

Data goes to files, diagnostics go to stderr.  Exit codes: 0 success,
1 verification failure, 2 bad input or parameters, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .balls import (
    affinity_bands,
    annuli,
    bands_to_dot,
    bands_to_json,
    delta_ball,
    distance_ball,
    euclidean_distances,
)
from .diffusion import (
    decomposition_to_json,
    diffusion_distance_matrix,
    spectral_decomposition,
)
from .errors import GraphMetrizeError, InvalidParameterError, NumericError
from .kernels import load_affinity, newtonian_kernel, save_affinity, validate_kernel, write_matrix_csv
from .metrize import (
    chain_metric,
    compute_lambda_sequence,
    delta_matrix,
    lambda_from_json,
    lambda_to_json,
    level_relations,
    quasi_triangle_constant,
    verify_equivalence,
    verify_sandwich,
)
from .relations import is_subset, power3

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_NUMERIC = 3


@dataclass
class RunConfig:
    """Parsed options for one invocation."""

    command: str
    input: Path | None = None
    output: Path | None = None
    fmt: str | None = None
    n: int = 0
    alpha: float = 1.0
    diag: float = 2.0
    diagonal_band: int = 3
    lambda0: float | None = None
    variant: str = "script"
    lambda_path: Path | None = None
    weights_output: Path | None = None
    eig_output: Path | None = None
    t: float = 0.005
    center: int = 0
    metric: str = "F"
    radii: tuple = ()
    dot: Path | None = None
    radius_f: float | None = None
    radius_d: float | None = None
    radius_e: float | None = None


def _info(message: str) -> None:
    print(message, file=sys.stderr)


def _parse_radii(text: str) -> tuple:
    try:
        return tuple(float(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"radii must be comma-separated floats: {exc}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphmetrize",
        description="Threshold levels, dyadic metrics, diffusion distances, and colored balls on affinity graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_kernel_input(p):
        p.add_argument("-i", "--input", required=True, type=Path, help="kernel file (CSV or JSON)")
        p.add_argument("--format", dest="fmt", choices=("csv", "json"), help="kernel format, default from suffix")

    def add_sequence_options(p):
        p.add_argument("--lambda", dest="lambda_path", type=Path, help="threshold JSON to reuse instead of recomputing")
        p.add_argument("--diagonal-band", type=int, default=3, choices=(3, 5), help="band width seeding the sweep")
        p.add_argument("--lambda0", type=float, default=None, help="override for the seed threshold")

    p = sub.add_parser("gen", help="generate a power-law kernel on a path")
    p.add_argument("--n", required=True, type=int, help="vertex count")
    p.add_argument("--alpha", type=float, default=1.0, help="decay exponent")
    p.add_argument("--diag", type=float, default=2.0, help="diagonal value")
    p.add_argument("-o", "--output", required=True, type=Path)
    p.add_argument("--format", dest="fmt", choices=("csv", "json"))

    p = sub.add_parser("lambda", help="compute the threshold sequence")
    add_kernel_input(p)
    add_sequence_options(p)
    p.add_argument("-o", "--output", required=True, type=Path, help="threshold JSON output")

    p = sub.add_parser("delta", help="dyadic quasi-metric matrix")
    add_kernel_input(p)
    add_sequence_options(p)
    p.add_argument("--variant", choices=("script", "upper", "lower"), default="script")
    p.add_argument("-o", "--output", required=True, type=Path, help="distance CSV output")

    p = sub.add_parser("chain", help="chain pseudo-metric matrix")
    add_kernel_input(p)
    add_sequence_options(p)
    p.add_argument("--weights-output", type=Path, help="also write the one-step weights CSV")
    p.add_argument("-o", "--output", required=True, type=Path, help="distance CSV output")

    p = sub.add_parser("diffusion", help="diffusion distance matrix")
    add_kernel_input(p)
    p.add_argument("--t", type=float, default=0.005, help="diffusion time")
    p.add_argument("--eig-output", type=Path, help="also write the eigendecomposition JSON")
    p.add_argument("-o", "--output", required=True, type=Path, help="distance CSV output")

    p = sub.add_parser("balls", help="band assignment around a center, optionally as DOT")
    add_kernel_input(p)
    add_sequence_options(p)
    p.add_argument("--metric", choices=("F", "D", "E"), default="F")
    p.add_argument("--center", required=True, type=int)
    p.add_argument("--radii", type=_parse_radii, default=(), help="ascending radii for metrics D and E")
    p.add_argument("--t", type=float, default=0.005, help="diffusion time for metric D")
    p.add_argument("--dot", type=Path, help="DOT output path")
    p.add_argument("-o", "--output", required=True, type=Path, help="bands JSON output")

    p = sub.add_parser("verify", help="run the invariant checks on a kernel")
    add_kernel_input(p)
    add_sequence_options(p)
    p.add_argument("-o", "--output", type=Path, help="optional JSON report")

    p = sub.add_parser("compare", help="Jaccard overlap of balls in different metrics")
    add_kernel_input(p)
    add_sequence_options(p)
    p.add_argument("--center", required=True, type=int)
    p.add_argument("--radius-f", type=float, help="quasi-metric ball radius")
    p.add_argument("--radius-d", type=float, help="diffusion ball radius")
    p.add_argument("--radius-e", type=float, help="euclidean ball radius")
    p.add_argument("--t", type=float, default=0.005, help="diffusion time")
    p.add_argument("-o", "--output", required=True, type=Path)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    for name in vars(cfg):
        if name != "command" and hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    return cfg


def _sequence_for(cfg: RunConfig, kernel):
    if cfg.lambda_path is not None:
        return lambda_from_json(Path(cfg.lambda_path).read_text())
    return compute_lambda_sequence(
        kernel, diagonal_band=cfg.diagonal_band, lambda0_override=cfg.lambda0
    )


def cmd_gen(cfg: RunConfig) -> int:
    kernel = newtonian_kernel(cfg.n, cfg.alpha, cfg.diag)
    save_affinity(kernel, cfg.output, cfg.fmt)
    _info(f"wrote {kernel.n}x{kernel.n} kernel to {cfg.output}")
    return EXIT_OK


def cmd_lambda(cfg: RunConfig) -> int:
    kernel = load_affinity(cfg.input, cfg.fmt)
    seq = _sequence_for(cfg, kernel)
    Path(cfg.output).write_text(lambda_to_json(seq))
    _info(f"{seq.k + 1} thresholds in {seq.iterations} rounds -> {cfg.output}")
    return EXIT_OK


def cmd_delta(cfg: RunConfig) -> int:
    kernel = load_affinity(cfg.input, cfg.fmt)
    seq = _sequence_for(cfg, kernel)
    dm = delta_matrix(kernel, seq, cfg.variant)
    write_matrix_csv(dm.values, cfg.output)
    _info(f"{cfg.variant} quasi-metric for n={kernel.n} -> {cfg.output}")
    return EXIT_OK


def cmd_chain(cfg: RunConfig) -> int:
    kernel = load_affinity(cfg.input, cfg.fmt)
    seq = _sequence_for(cfg, kernel)
    pm = chain_metric(kernel, seq)
    write_matrix_csv(pm.values, cfg.output)
    if cfg.weights_output is not None:
        write_matrix_csv(pm.chain_weights, cfg.weights_output)
        _info(f"one-step weights -> {cfg.weights_output}")
    _info(f"chain metric for n={kernel.n} -> {cfg.output}")
    return EXIT_OK


def cmd_diffusion(cfg: RunConfig) -> int:
    kernel = load_affinity(cfg.input, cfg.fmt)
    decomp = spectral_decomposition(kernel)
    if cfg.eig_output is not None:
        Path(cfg.eig_output).write_text(decomposition_to_json(decomp))
        _info(f"eigendecomposition -> {cfg.eig_output}")
    dt = diffusion_distance_matrix(decomp, cfg.t)
    write_matrix_csv(dt, cfg.output)
    _info(f"diffusion distances at t={cfg.t} -> {cfg.output}")
    return EXIT_OK


def cmd_balls(cfg: RunConfig) -> int:
    kernel = load_affinity(cfg.input, cfg.fmt)
    if cfg.metric == "F":
        if cfg.radii:
            raise InvalidParameterError("metric F derives its bands from the thresholds; drop --radii")
        seq = _sequence_for(cfg, kernel)
        bands = affinity_bands(kernel, seq, cfg.center)
    else:
        if not cfg.radii:
            raise InvalidParameterError(f"metric {cfg.metric} needs --radii")
        if cfg.metric == "D":
            row = diffusion_distance_matrix(spectral_decomposition(kernel), cfg.t)[cfg.center]
        else:
            row = euclidean_distances(kernel.n, cfg.center)
        bands = annuli(row, cfg.radii, cfg.center)
    Path(cfg.output).write_text(bands_to_json(bands))
    if cfg.dot is not None:
        Path(cfg.dot).write_text(bands_to_dot(kernel, bands))
        _info(f"DOT coloring -> {cfg.dot}")
    sizes = [sum(1 for b in bands.band_of if b == band) for band in range(len(bands.radii) + 1)]
    _info(f"metric {cfg.metric} bands around {bands.center}: sizes {sizes} -> {cfg.output}")
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    kernel = load_affinity(cfg.input, cfg.fmt)
    report = validate_kernel(kernel)
    checks = {}
    flags = report.failed_flags()
    checks["kernel_flags"] = not flags
    payload = {"flags": {
        "symmetric": report.symmetric,
        "diag_dominant": report.diag_dominant,
        "tridiagonal_positive": report.tridiagonal_positive,
    }}
    if flags:
        _info(f"FAIL kernel flags: {', '.join(flags)}")
    else:
        seq = _sequence_for(cfg, kernel)
        levels = level_relations(kernel, seq)
        checks["level_nesting"] = all(
            is_subset(power3(levels[i]), levels[i - 1]) for i in range(1, seq.k + 1)
        )
        dm = delta_matrix(kernel, seq, "script")
        pm = chain_metric(kernel, seq)
        sandwich = verify_sandwich(kernel, seq, pm)
        equivalence = verify_equivalence(dm, pm)
        constant = quasi_triangle_constant(dm) if kernel.n >= 3 else 1.0
        checks["sandwich"] = sandwich.passed
        checks["equivalence"] = equivalence.passed
        checks["quasi_triangle"] = constant <= 8.0
        payload.update(
            thresholds=[float(x) for x in seq.values],
            tightest_shift=sandwich.tightest_shift,
            c_lo=equivalence.c_lo,
            c_hi=equivalence.c_hi,
            quasi_triangle_constant=constant,
        )
        for name, ok in checks.items():
            _info(f"{'ok  ' if ok else 'FAIL'} {name}")
    passed = all(checks.values())
    payload["checks"] = checks
    payload["passed"] = passed
    if cfg.output is not None:
        Path(cfg.output).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return EXIT_OK if passed else EXIT_VERIFY


def jaccard(a: frozenset, b: frozenset) -> float:
    union = a | b
    if not union:
        return 1.0
    return len(a & b) / len(union)


def cmd_compare(cfg: RunConfig) -> int:
    kernel = load_affinity(cfg.input, cfg.fmt)
    balls = {}
    if cfg.radius_f is not None:
        seq = _sequence_for(cfg, kernel)
        balls["F"] = delta_ball(kernel, seq, cfg.center, cfg.radius_f)
    if cfg.radius_d is not None:
        row = diffusion_distance_matrix(spectral_decomposition(kernel), cfg.t)[cfg.center]
        balls["D"] = distance_ball(row, cfg.center, cfg.radius_d, "D")
    if cfg.radius_e is not None:
        row = euclidean_distances(kernel.n, cfg.center)
        balls["E"] = distance_ball(row, cfg.center, cfg.radius_e, "E")
    if len(balls) < 2:
        raise InvalidParameterError("compare needs radii for at least two of F, D, E")
    overlaps = {}
    names = sorted(balls)
    for i, first in enumerate(names):
        for second in names[i + 1:]:
            overlaps[f"{first}|{second}"] = jaccard(balls[first].members, balls[second].members)
    payload = {
        "center": cfg.center,
        "jaccard": overlaps,
        "members": {name: sorted(ball.members) for name, ball in balls.items()},
        "radii": {name: balls[name].radius for name in names},
    }
    Path(cfg.output).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    for pair, value in overlaps.items():
        _info(f"jaccard {pair} = {value:.4f}")
    return EXIT_OK


COMMANDS = {
    "gen": cmd_gen,
    "lambda": cmd_lambda,
    "delta": cmd_delta,
    "chain": cmd_chain,
    "diffusion": cmd_diffusion,
    "balls": cmd_balls,
    "verify": cmd_verify,
    "compare": cmd_compare,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = config_from_args(args)
    try:
        return COMMANDS[cfg.command](cfg)
    except NumericError as exc:
        _info(f"numeric error: {exc}")
        return EXIT_NUMERIC
    except (GraphMetrizeError, OSError) as exc:
        _info(f"error: {exc}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
