"""Command-line front end.

    deltacore <core|ph|compare|bench-reduction|generate|pipeline> [flags]

Exit status is 0 on success, 1 on a usage error and 2 on an I/O or parse
error. Wall-clock timings are machine-dependent and are kept out of the
deterministic output files.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import datasets
from .complexes import core_reduction_table
from .diagram_distance import compare_diagrams
from .homology import PersistenceDiagram, vr_persistence
from .io import (
    format_comparison,
    format_points,
    format_reduction_table,
    read_diagram,
    read_points,
    write_diagram,
)
from .metric_space import PointCloud, delta_from_percentile
from .subsampling import delta_core, fps_subsample

DEFAULT_SEED = 0


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    command: str
    input: list[str] | None = None
    output: str | None = None
    delta: float | None = None
    percentile: float | None = None
    max_dim: int | None = None
    threshold: float | None = None
    scales: list[float] | None = None
    shape: str | None = None
    n: int | None = None
    noise: float = 0.0
    seed: int = DEFAULT_SEED
    baselines: tuple[str, ...] = ("fps",)


def _float_list(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="deltacore", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def scale_flags(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--delta", type=float)
        g.add_argument("--percentile", type=float)

    p = sub.add_parser("core", help="delta-core subsample of a point file")
    p.add_argument("--input", action="append", required=True)
    p.add_argument("--output", required=True)
    scale_flags(p)

    p = sub.add_parser("ph", help="Vietoris-Rips persistence diagram as CSV")
    p.add_argument("--input", action="append", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--max-dim", type=int, default=2, help="skeleton dimension; degrees 0..max-dim-1")
    p.add_argument("--threshold", type=float, required=True)

    p = sub.add_parser("compare", help="bottleneck and W1 per degree between two diagram CSVs")
    p.add_argument("--input", action="append", required=True, help="give twice")
    p.add_argument("--output")

    p = sub.add_parser("bench-reduction", help="simplex reduction of VR complexes by their cores")
    p.add_argument("--input", action="append", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--scales", type=_float_list, required=True)
    p.add_argument("--max-dim", type=int, default=3)

    p = sub.add_parser("generate", help="synthetic point cloud")
    p.add_argument("--shape", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--noise", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--output", required=True)

    p = sub.add_parser("pipeline", help="original vs delta-core vs FPS persistence comparison")
    p.add_argument("--input", action="append", required=True)
    p.add_argument("--output", required=True, help="output directory")
    scale_flags(p)
    p.add_argument("--max-dim", type=int, default=2)
    p.add_argument("--threshold", type=float, required=True)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--baselines", default="fps")
    return parser


def parse_config(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    cfg = RunConfig(command=ns.command)
    for key, value in vars(ns).items():
        if key != "command" and value is not None:
            setattr(cfg, key, value)
    if isinstance(cfg.baselines, str):
        cfg.baselines = tuple(b for b in cfg.baselines.split(",") if b)
    _validate(cfg)
    return cfg


def _validate(cfg: RunConfig) -> None:
    want_inputs = {"compare": 2}.get(cfg.command, 1)
    if cfg.command != "generate" and len(cfg.input) != want_inputs:
        raise UsageError(f"{cfg.command} takes --input exactly {want_inputs} time(s)")
    if cfg.delta is not None and not cfg.delta > 0:
        raise UsageError("--delta must be positive")
    if cfg.percentile is not None and not 0 < cfg.percentile <= 100:
        raise UsageError("--percentile must lie in (0, 100]")
    if cfg.threshold is not None and not cfg.threshold > 0:
        raise UsageError("--threshold must be positive")
    if cfg.max_dim is not None and cfg.max_dim < 1:
        raise UsageError("--max-dim must be at least 1")
    if cfg.command == "bench-reduction":
        if not cfg.scales or cfg.scales != sorted(cfg.scales) or cfg.scales[0] < 0:
            raise UsageError("--scales must be a non-empty ascending list of non-negative numbers")
    if cfg.command == "generate":
        if cfg.shape not in datasets.SHAPES:
            raise UsageError(f"unknown shape {cfg.shape!r}; choose from {', '.join(datasets.SHAPES)}")
        if cfg.n < 1 or cfg.noise < 0:
            raise UsageError("--n must be positive and --noise non-negative")
    if cfg.command == "pipeline" and set(cfg.baselines) - {"fps"}:
        raise UsageError("only the 'fps' baseline is available")


def _resolve_delta(cloud: PointCloud, cfg: RunConfig) -> float:
    if cfg.delta is not None:
        return cfg.delta
    if len(cloud) < 2:
        # a lone point is its own core at any scale
        return 1.0
    return delta_from_percentile(cloud, cfg.percentile)


def cmd_core(cfg: RunConfig) -> str:
    cloud = read_points(cfg.input[0])
    delta = _resolve_delta(cloud, cfg)
    start = time.perf_counter()
    result = delta_core(cloud, delta)
    elapsed = time.perf_counter() - start
    Path(cfg.output).write_text(format_points(cloud.subset(result.surviving)))
    return f"{len(cloud)},{len(result)},{result.sweeps},{elapsed:.6f}"


def cmd_ph(cfg: RunConfig) -> str:
    cloud = read_points(cfg.input[0])
    diagram = vr_persistence(cloud, cfg.max_dim - 1, cfg.threshold)
    write_diagram(cfg.output, diagram)
    return f"{sum(len(diagram[q]) for q in diagram.degrees)} intervals written"


def _comparison_text(a: PersistenceDiagram, b: PersistenceDiagram) -> str:
    lines = ["degree,bottleneck,wasserstein1"]
    for q, (bn, w1) in compare_diagrams(a, b).items():
        lines.append(f"{q},{bn!r},{w1!r}")
    return "\n".join(lines) + "\n"


def cmd_compare(cfg: RunConfig) -> str:
    a, b = (read_diagram(p) for p in cfg.input)
    text = _comparison_text(a, b)
    if cfg.output:
        Path(cfg.output).write_text(text)
    return text.rstrip("\n")


def cmd_bench_reduction(cfg: RunConfig) -> str:
    cloud = read_points(cfg.input[0])
    rows = core_reduction_table(cloud, cfg.scales, cfg.max_dim)
    text = format_reduction_table(rows)
    Path(cfg.output).write_text(text)
    return text.rstrip("\n").splitlines()[-1]


def cmd_generate(cfg: RunConfig) -> str:
    pts = datasets.generate(cfg.shape, cfg.n, cfg.noise, cfg.seed)
    comments = [f"shape={cfg.shape} n={cfg.n} noise={cfg.noise!r} seed={cfg.seed}"]
    if cfg.shape == "torus":
        comments.append(f"major_radius={datasets.TORUS_MAJOR!r} minor_radius={datasets.TORUS_MINOR!r}")
    Path(cfg.output).write_text(format_points(PointCloud(pts), comments))
    return f"{cfg.n} points written"


def cmd_pipeline(cfg: RunConfig) -> str:
    cloud = read_points(cfg.input[0])
    out = Path(cfg.output)
    out.mkdir(parents=True, exist_ok=True)
    max_degree = cfg.max_dim - 1
    degrees = list(range(max_degree + 1))
    timings = []

    def timed(label, fn, *args):
        start = time.perf_counter()
        value = fn(*args)
        timings.append((label, time.perf_counter() - start))
        return value

    delta = _resolve_delta(cloud, cfg)
    core = timed("delta-core:subsample", delta_core, cloud, delta)
    samples = {"original": list(range(len(cloud))), "delta-core": list(core.surviving)}
    if "fps" in cfg.baselines:
        samples["fps"] = timed("fps:subsample", fps_subsample, cloud, len(core), cfg.seed)

    diagrams = {}
    for method, idx in samples.items():
        sub = cloud.subset(idx)
        diagrams[method] = timed(f"{method}:persistence", vr_persistence, sub, max_degree, cfg.threshold)
        write_diagram(out / f"{method}.csv", diagrams[method])
        if method != "original":
            (out / f"{method}_points.txt").write_text(format_points(sub))

    records = [
        {"method": m, "n": len(idx),
         "distances": compare_diagrams(diagrams["original"], diagrams[m], degrees)}
        for m, idx in samples.items()
    ]
    (out / "comparison.csv").write_text(format_comparison(records, degrees))
    (out / "timings.csv").write_text(
        "# wall-clock seconds, machine-dependent\nstep,seconds\n"
        + "".join(f"{label},{sec:.6f}\n" for label, sec in timings)
    )
    return f"delta={delta!r} core={len(core)} of {len(cloud)}"


COMMANDS = {
    "core": cmd_core,
    "ph": cmd_ph,
    "compare": cmd_compare,
    "bench-reduction": cmd_bench_reduction,
    "generate": cmd_generate,
    "pipeline": cmd_pipeline,
}


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_config(argv)
    except UsageError as exc:
        print(f"deltacore: usage error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        summary = COMMANDS[cfg.command](cfg)
    except (OSError, ValueError) as exc:
        print(f"deltacore: {exc}", file=sys.stderr)
        return 2
    print(summary)
    return 0


if __name__ == "__main__":
    sys.exit(main())
