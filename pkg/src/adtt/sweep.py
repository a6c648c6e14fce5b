"""Compression-quality sweeps over an image corpus.

For every (image, kernel, retained-coefficient-count) triple the codec
reconstruction is scored with SSIM and SR-SIM.  Results land in two CSV
files: one row per record, plus per-r means over the corpus for each kernel.
Output is deterministic and byte-identical across reruns: records are sorted
before writing and floats use a fixed 6-significant-digit format.
"""

from __future__ import annotations

import csv
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import codec
from .fast import OpCount, count_ops, forward_fast, inverse_fast
from .metrics import sr_sim, ssim
from .pgm import read_pgm

__all__ = [
    "ExperimentRecord",
    "SweepConfig",
    "CorpusError",
    "run_sweep",
    "report_complexity",
]

RECORD_HEADER = ("image", "kernel", "r", "ssim", "srsim")

# reference costs of one 8-point transform: a known multiplication-free
# exact-DTT factorization and the H.264 integer core transform
EXACT_FAST_BASELINE = OpCount(multiplications=0, additions=44, shifts=29)
H264_BASELINE = OpCount(multiplications=0, additions=32, shifts=14)


class CorpusError(RuntimeError):
    """The corpus directory is missing, empty, or has unreadable images."""


@dataclass(frozen=True)
class ExperimentRecord:
    """Quality scores for one (image, kernel, r) triple."""

    image_id: str
    kernel_id: str
    r: int
    ssim: float
    srsim: float


@dataclass(frozen=True)
class SweepConfig:
    """Sweep parameters.

    ``corpus_dir`` holds the PGM images; every kernel in ``kernels`` is run
    for every r in r_min..r_max.  Records go to ``output``; per-r means go to
    ``summary`` (default: output path with a _summary suffix).  ``workers``
    bounds the thread pool mapped over (image, kernel) pairs.
    """

    corpus_dir: str | Path
    r_min: int = 1
    r_max: int = 45
    kernels: tuple[str, ...] = ("exact_dtt", "proposed")
    output: str | Path = "sweep.csv"
    summary: str | Path | None = None
    workers: int = 1

    def __post_init__(self) -> None:
        if not 1 <= self.r_min <= self.r_max <= 64:
            raise ValueError(
                f"need 1 <= r_min <= r_max <= 64, got {self.r_min}..{self.r_max}"
            )
        if not self.kernels:
            raise ValueError("at least one kernel is required")
        for k in self.kernels:
            if k not in codec.KERNELS:
                raise ValueError(
                    f"unknown kernel {k!r}, expected one of {sorted(codec.KERNELS)}"
                )
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")

    @property
    def summary_path(self) -> Path:
        if self.summary is not None:
            return Path(self.summary)
        out = Path(self.output)
        return out.with_name(out.stem + "_summary" + (out.suffix or ".csv"))


def _load_corpus(corpus_dir) -> list[tuple[str, np.ndarray]]:
    root = Path(corpus_dir)
    if not root.is_dir():
        raise CorpusError(f"corpus directory not found: {root}")
    paths = sorted(root.glob("*.pgm"))
    if not paths:
        raise CorpusError(f"no PGM images in corpus directory: {root}")
    images = []
    bad = []
    for p in paths:
        try:
            images.append((p.stem, read_pgm(p)))
        except (OSError, ValueError) as e:
            bad.append(f"{p}: {e}")
    if bad:
        raise CorpusError("unreadable corpus images:\n" + "\n".join(bad))
    return images


def _sweep_one(image_id, image, kernel_id, r_values) -> list[ExperimentRecord]:
    # transform once per (image, kernel); each r only re-masks and inverts,
    # which is exactly what compress_image computes for that r
    k = codec.get_kernel(kernel_id)
    coeffs = codec._forward_coeffs(image, k)
    records = []
    for r in r_values:
        recon = codec._quantize(
            codec._reconstruct(coeffs, codec.retention_mask(r), k, image.shape)
        )
        records.append(
            ExperimentRecord(image_id, kernel_id, r, ssim(image, recon), sr_sim(image, recon))
        )
    return records


def _fmt(value: float) -> str:
    return f"{value:.6g}"


def run_sweep(config: SweepConfig) -> list[ExperimentRecord]:
    """Run the sweep, write both CSV files, and return the sorted records."""
    images = _load_corpus(config.corpus_dir)
    r_values = range(config.r_min, config.r_max + 1)
    tasks = [
        (image_id, image, kernel_id)
        for image_id, image in images
        for kernel_id in config.kernels
    ]

    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            chunks = list(
                pool.map(lambda t: _sweep_one(t[0], t[1], t[2], r_values), tasks)
            )
    else:
        chunks = [_sweep_one(i, img, k, r_values) for i, img, k in tasks]

    records = sorted(
        (rec for chunk in chunks for rec in chunk),
        key=lambda rec: (rec.image_id, rec.kernel_id, rec.r),
    )

    with open(config.output, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(RECORD_HEADER)
        for rec in records:
            writer.writerow(
                [rec.image_id, rec.kernel_id, rec.r, _fmt(rec.ssim), _fmt(rec.srsim)]
            )

    n_images = len(images)
    with open(config.summary_path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(("kernel", "r", "ssim", "srsim"))
        for kernel_id in sorted(set(config.kernels)):
            for r in r_values:
                group = [
                    rec for rec in records if rec.kernel_id == kernel_id and rec.r == r
                ]
                assert len(group) == n_images
                writer.writerow(
                    [
                        kernel_id,
                        r,
                        _fmt(float(np.mean([rec.ssim for rec in group]))),
                        _fmt(float(np.mean([rec.srsim for rec in group]))),
                    ]
                )
    return records


def _reduction(ours: int, baseline: int) -> str:
    return f"{100.0 * (1.0 - ours / baseline):.1f}%"


def report_complexity(fmt: str = "text") -> str:
    """Operation-count table for the fast algorithms and reference baselines.

    ``fmt`` is "text" for an aligned human-readable table or "csv" for
    long-form quantity,value rows.  Proposed counts are measured by
    instrumented execution, baselines are fixed reference constants.
    """
    fwd = count_ops(forward_fast)
    inv = count_ops(inverse_fast)
    counts = [
        ("proposed forward", fwd),
        ("proposed inverse", inv),
        ("exact dtt fast", EXACT_FAST_BASELINE),
        ("h264 integer", H264_BASELINE),
    ]
    reductions = [
        ("forward additions vs exact dtt fast", _reduction(fwd.additions, EXACT_FAST_BASELINE.additions)),
        ("inverse additions vs exact dtt fast", _reduction(inv.additions, EXACT_FAST_BASELINE.additions)),
        ("forward additions vs h264", _reduction(fwd.additions, H264_BASELINE.additions)),
        ("inverse additions vs h264", _reduction(inv.additions, H264_BASELINE.additions)),
        ("inverse shifts vs h264", _reduction(inv.shifts, H264_BASELINE.shifts)),
    ]

    if fmt == "csv":
        lines = ["quantity,value"]
        for name, c in counts:
            slug = name.replace(" ", "_")
            lines.append(f"{slug}_multiplications,{c.multiplications}")
            lines.append(f"{slug}_additions,{c.additions}")
            lines.append(f"{slug}_shifts,{c.shifts}")
        for name, value in reductions:
            lines.append(f"{name.replace(' ', '_')},{value}")
        return "\n".join(lines) + "\n"
    if fmt != "text":
        raise ValueError(f"format must be 'text' or 'csv', got {fmt!r}")

    lines = ["operation counts per 8-point transform"]
    lines.append(f"  {'kernel':<22}{'mult':>6}{'add':>6}{'shift':>7}")
    for name, c in counts:
        lines.append(f"  {name:<22}{c.multiplications:>6}{c.additions:>6}{c.shifts:>7}")
    lines.append("reductions")
    for name, value in reductions:
        lines.append(f"  {name:<38}{value:>7}")
    return "\n".join(lines) + "\n"
