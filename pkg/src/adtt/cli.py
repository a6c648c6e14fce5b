"""Command line interface.

Subcommands: gen-matrix, search-alpha, energy-error, op-count, compress,
quality, sweep.  Every flag can also be supplied through a TOML config file
(--config) holding one table per subcommand (dashes become underscores, e.g.
[gen_matrix]); explicit command-line flags win over config values.

Exit codes: 0 success, 1 usage error (bad flags, bad config), 2 data error
(missing or malformed input files).  Errors print a single line to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from . import __version__
from .approx import (
    FORWARD_KERNEL,
    INVERSE_KERNEL,
    forward_energy_error,
    inverse_energy_error,
    search_alpha,
)
from .codec import KERNELS, compress_image
from .exact import INTEGER_KERNEL_8, SCALE_8, dtt_matrix, format_matrix
from .metrics import sr_sim, ssim
from .pgm import read_pgm, write_pgm
from .sweep import CorpusError, SweepConfig, report_complexity, run_sweep

__all__ = ["main"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; route through UsageError so
    # usage problems map to exit code 1 and data problems keep 2
    def error(self, message):
        raise UsageError(message)


def _read_image(path):
    try:
        return read_pgm(path)
    except (OSError, ValueError) as e:
        raise DataError(f"{path}: {e}") from None


def _write_text(path, text):
    if path is None:
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as e:
        raise DataError(f"{path}: {e}") from None


MATRIX_KINDS = ("exact", "proposed", "proposed-inverse", "integer-kernel", "scale")


def _cmd_gen_matrix(args) -> int:
    if args.size < 1:
        raise UsageError(f"--size must be >= 1, got {args.size}")
    if args.precision < 1:
        raise UsageError(f"--precision must be >= 1, got {args.precision}")
    if args.kind != "exact" and args.size != 8:
        raise UsageError(f"--kind {args.kind} is 8-point only, cannot use --size {args.size}")
    matrix = {
        "exact": lambda: dtt_matrix(args.size),
        "proposed": lambda: FORWARD_KERNEL,
        "proposed-inverse": lambda: INVERSE_KERNEL,
        "integer-kernel": lambda: INTEGER_KERNEL_8,
        "scale": lambda: SCALE_8,
    }[args.kind]()
    _write_text(args.output, format_matrix(matrix, args.precision) + "\n")
    return EXIT_OK


def _cmd_search_alpha(args) -> int:
    if args.step <= 0:
        raise UsageError(f"--step must be positive, got {args.step}")
    result = search_alpha(args.step)
    lines = []
    for lo, hi, _ in result.runs:
        lines.append(f"admissible gain interval [{lo:.6g}, {hi:.6g}]")
    lo, hi = result.optimal_interval
    if lo != lo:  # NaN: no interval brackets the reference gain
        lines.append("no admissible interval contains gain 0.95")
    else:
        lines.append(f"selected interval [{lo:.6g}, {hi:.6g}], kernel:")
        for run in result.runs:
            if run[0] == lo and run[1] == hi:
                lines.append(format_matrix(run[2]))
                break
    _write_text(args.output, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_energy_error(args) -> int:
    text = (
        f"forward {forward_energy_error():.6f}\n"
        f"inverse {inverse_energy_error():.6f}\n"
    )
    _write_text(args.output, text)
    return EXIT_OK


def _cmd_op_count(args) -> int:
    _write_text(args.output, report_complexity(args.format))
    return EXIT_OK


def _cmd_compress(args) -> int:
    if not 1 <= args.r <= 64:
        raise UsageError(f"--r must be in 1..64, got {args.r}")
    image = _read_image(args.input)
    recon = compress_image(image, args.kernel, args.r)
    try:
        write_pgm(args.output, recon)
    except OSError as e:
        raise DataError(f"{args.output}: {e}") from None
    return EXIT_OK


def _cmd_quality(args) -> int:
    ref = _read_image(args.reference)
    test = _read_image(args.test)
    if ref.shape != test.shape:
        raise DataError(
            f"image size mismatch: {ref.shape[1]}x{ref.shape[0]} vs "
            f"{test.shape[1]}x{test.shape[0]}"
        )
    metric = ssim if args.metric == "ssim" else sr_sim
    print(f"{metric(ref, test):.6f}")
    return EXIT_OK


def _cmd_sweep(args) -> int:
    if args.corpus is None:
        raise UsageError("--corpus is required (flag or config)")
    kernels = args.kernels
    if isinstance(kernels, str):
        kernels = tuple(k.strip() for k in kernels.split(",") if k.strip())
    try:
        config = SweepConfig(
            corpus_dir=args.corpus,
            r_min=args.r_min,
            r_max=args.r_max,
            kernels=tuple(kernels),
            output=args.output,
            summary=args.summary,
            workers=args.workers,
        )
    except ValueError as e:
        raise UsageError(str(e)) from None
    try:
        records = run_sweep(config)
    except CorpusError as e:
        raise DataError(str(e)) from None
    except OSError as e:
        raise DataError(str(e)) from None
    print(f"wrote {len(records)} records to {config.output}, summary to {config.summary_path}")
    return EXIT_OK


def _build_parser() -> tuple[_Parser, dict[str, _Parser]]:
    parser = _Parser(prog="adtt", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", help="TOML file with per-subcommand flag tables")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    commands: dict[str, _Parser] = {}

    p = sub.add_parser("gen-matrix", help="print a transform matrix")
    p.add_argument("--size", type=int, default=8, help="transform order (exact kind only)")
    p.add_argument("--kind", choices=MATRIX_KINDS, default="exact")
    p.add_argument("--precision", type=int, default=6, help="significant digits")
    p.add_argument("--output", help="write to file instead of stdout")
    p.set_defaults(func=_cmd_gen_matrix)
    commands["gen-matrix"] = p

    p = sub.add_parser("search-alpha", help="exhaustive gain search for the kernel family")
    p.add_argument("--step", type=float, default=1e-3, help="gain grid spacing")
    p.add_argument("--output", help="write to file instead of stdout")
    p.set_defaults(func=_cmd_search_alpha)
    commands["search-alpha"] = p

    p = sub.add_parser("energy-error", help="print both kernel energy errors")
    p.add_argument("--output", help="write to file instead of stdout")
    p.set_defaults(func=_cmd_energy_error)
    commands["energy-error"] = p

    p = sub.add_parser("op-count", help="print operation counts and baseline reductions")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.add_argument("--output", help="write to file instead of stdout")
    p.set_defaults(func=_cmd_op_count)
    commands["op-count"] = p

    p = sub.add_parser("compress", help="compress and reconstruct one PGM image")
    p.add_argument("input", help="input PGM")
    p.add_argument("output", help="reconstructed PGM")
    p.add_argument("--kernel", choices=sorted(KERNELS), default="proposed")
    p.add_argument("--r", type=int, default=64, help="retained coefficients per block")
    p.set_defaults(func=_cmd_compress)
    commands["compress"] = p

    p = sub.add_parser("quality", help="score a reconstruction against its reference")
    p.add_argument("reference", help="reference PGM")
    p.add_argument("test", help="test PGM")
    p.add_argument("--metric", choices=("ssim", "srsim"), default="ssim")
    p.set_defaults(func=_cmd_quality)
    commands["quality"] = p

    p = sub.add_parser("sweep", help="quality sweep over a PGM corpus")
    p.add_argument("--corpus", help="directory of PGM images")
    p.add_argument("--r-min", type=int, default=1)
    p.add_argument("--r-max", type=int, default=45)
    p.add_argument("--kernels", default="exact_dtt,proposed", help="comma-separated kernel names")
    p.add_argument("--output", default="sweep.csv", help="per-record CSV path")
    p.add_argument("--summary", help="per-r means CSV path (default: derived from --output)")
    p.add_argument("--workers", type=int, default=1, help="parallel (image, kernel) workers")
    p.set_defaults(func=_cmd_sweep)
    commands["sweep"] = p

    return parser, commands


def _scan_config_and_command(argv, commands) -> tuple[str | None, str | None]:
    config = None
    command = None
    skip = False
    for i, token in enumerate(argv):
        if skip:
            skip = False
            continue
        if token == "--config":
            if i + 1 < len(argv):
                config = argv[i + 1]
                skip = True
        elif token.startswith("--config="):
            config = token.split("=", 1)[1]
        elif not token.startswith("-") and command is None and token in commands:
            command = token
    return config, command


def _apply_config(path, command, commands) -> None:
    try:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
    except OSError as e:
        raise UsageError(f"cannot read config: {e}")
    except tomllib.TOMLDecodeError as e:
        raise UsageError(f"invalid config {path}: {e}")
    known_tables = {name.replace("-", "_"): name for name in commands}
    for table_name, table in data.items():
        if table_name not in known_tables:
            raise UsageError(f"unknown config table [{table_name}] in {path}")
        if not isinstance(table, dict):
            raise UsageError(f"config table [{table_name}] must be a table of flags")
        subparser = commands[known_tables[table_name]]
        valid = {
            a.dest
            for a in subparser._actions
            if a.option_strings and a.dest != "help"
        }
        for key in table:
            if key not in valid:
                raise UsageError(f"unknown config key '{key}' in table [{table_name}]")
        if known_tables[table_name] == command:
            subparser.set_defaults(**table)


def _run(argv) -> int:
    parser, commands = _build_parser()
    config_path, command = _scan_config_and_command(argv, commands)
    if config_path is not None:
        _apply_config(config_path, command, commands)
    args = parser.parse_args(argv)
    return args.func(args)


def main(argv=None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    try:
        return _run(argv)
    except UsageError as e:
        print(f"error: usage: {e}", file=sys.stderr)
        return EXIT_USAGE
    except DataError as e:
        print(f"error: data: {e}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
