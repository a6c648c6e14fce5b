"""Discrete Tchebichef transform, a multiplierless 8-point approximation,
and a block-compression harness for comparing the two."""

from .approx import (
    AlphaSearchResult,
    ApproxKernel,
    approx_family,
    companding_scale,
    forward_energy_error,
    inverse_energy_error,
    orthogonal_scaling,
    proposed_kernel,
    round_half_away_from_zero,
    search_alpha,
    total_energy_error,
)
from .codec import (
    CodecKernel,
    KERNELS,
    compress_image,
    inverse_block_2d,
    retain,
    retention_mask,
    transform_block_2d,
    zigzag_scan,
    zigzag_unscan,
)
from .exact import (
    ascending_factorial,
    dtt_matrix,
    exact_factorization_8,
    format_matrix,
    hypergeom_3f2_terminating,
)
from .fast import OpCount, count_ops, forward_fast, inverse_fast
from .metrics import sr_sim, ssim
from .pgm import read_pgm, write_pgm
from .sweep import (
    CorpusError,
    ExperimentRecord,
    SweepConfig,
    report_complexity,
    run_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaSearchResult",
    "ApproxKernel",
    "CodecKernel",
    "CorpusError",
    "ExperimentRecord",
    "KERNELS",
    "OpCount",
    "SweepConfig",
    "approx_family",
    "ascending_factorial",
    "companding_scale",
    "compress_image",
    "count_ops",
    "dtt_matrix",
    "exact_factorization_8",
    "format_matrix",
    "forward_energy_error",
    "forward_fast",
    "hypergeom_3f2_terminating",
    "inverse_block_2d",
    "inverse_energy_error",
    "inverse_fast",
    "orthogonal_scaling",
    "proposed_kernel",
    "read_pgm",
    "report_complexity",
    "retain",
    "retention_mask",
    "round_half_away_from_zero",
    "run_sweep",
    "search_alpha",
    "sr_sim",
    "ssim",
    "total_energy_error",
    "transform_block_2d",
    "write_pgm",
    "zigzag_scan",
    "zigzag_unscan",
]
