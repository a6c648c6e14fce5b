"""Multiplierless approximation of the 8-point DTT.

The approximation family is a scale-and-round construction: every column of
the exact transform is rescaled to unit peak magnitude (companding, so one
global gain treats all columns alike), multiplied by a gain ``alpha`` in
(0, 3/2), and rounded entrywise.  Unit column peaks make the rounded entries
land in {-1, 0, 1} for the whole gain range, so every member of the family is
multiplication-free.  An exhaustive grid search over ``alpha`` locates the
gain interval whose (identical) kernel is used as the proposed forward
transform; its exact integer inverse factorization and the diagonal that
re-orthogonalizes the rows are exposed alongside.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact import INTEGER_KERNEL_8, SCALE_8, dtt_matrix

__all__ = [
    "round_half_away_from_zero",
    "companding_scale",
    "approx_family",
    "AlphaSearchResult",
    "search_alpha",
    "ApproxKernel",
    "proposed_kernel",
    "orthogonal_scaling",
    "total_energy_error",
    "forward_energy_error",
    "inverse_energy_error",
]

# Forward kernel: the unique rounding of the companded DTT for every gain in
# [0.931, 0.957] (see search_alpha).  Entries in {-1, 0, 1}; even rows
# symmetric, odd rows antisymmetric, same pattern as the exact transform.
FORWARD_KERNEL = np.array(
    [
        [ 1,  1,  1,  1,  1,  1,  1,  1],
        [-1, -1,  0,  0,  0,  0,  1,  1],
        [ 1,  0,  0, -1, -1,  0,  0,  1],
        [-1,  1,  1,  0,  0, -1, -1,  1],
        [ 0, -1,  0,  1,  1,  0, -1,  0],
        [ 0,  1, -1, -1,  1,  1, -1,  0],
        [ 0, -1,  1,  0,  0,  1, -1,  0],
        [ 0,  0, -1,  1, -1,  1,  0,  0],
    ],
    dtype=np.int64,
)

# Integer part of the inverse: FORWARD_KERNEL^-1 == INVERSE_KERNEL @ diag(INVERSE_SCALE)
# exactly over the rationals (denominators 4, 8, 10).
INVERSE_KERNEL = np.array(
    [
        [1, -3,  3, -2,  1, -1, -1, -1],
        [1, -2, -1,  2, -1,  1, -1,  1],
        [1, -1, -1,  1, -1, -2,  3, -2],
        [1, -1, -1,  1,  1, -2, -1,  3],
        [1,  1, -1, -1,  1,  2, -1, -3],
        [1,  1, -1, -1, -1,  2,  3,  2],
        [1,  2, -1, -2, -1, -1, -1, -1],
        [1,  3,  3,  2,  1,  1, -1,  1],
    ],
    dtype=np.int64,
)

_INVERSE_SCALE_DENOMS = (8, 10, 8, 10, 4, 10, 8, 10)
INVERSE_SCALE = 1.0 / np.array(_INVERSE_SCALE_DENOMS, dtype=np.float64)


def round_half_away_from_zero(x):
    """Round to nearest integer with halves away from zero (C/Matlab rule).

    round(2.5) = 3 and round(-2.5) = -3, unlike the banker's rounding of
    numpy.round.
    """
    x = np.asarray(x, dtype=np.float64)
    return (np.sign(x) * np.floor(np.abs(x) + 0.5)).astype(np.int64)


def companding_scale() -> np.ndarray:
    """Column-equalizing diagonal for the 8-point DTT.

    Entry n is 1/(2 * max_k |T[k, n]|), which rescales every column of the
    exact transform to peak magnitude exactly 1/2.  Closed forms:
    sqrt(6/7), sqrt(154)/13, sqrt(66)/9, sqrt(858)/35 and mirrored.
    """
    t = dtt_matrix(8)
    return 0.5 / np.abs(t).max(axis=0)


_companded_cache: np.ndarray | None = None


def _companded_dtt() -> np.ndarray:
    """Exact DTT with every column rescaled to unit peak magnitude.

    Equals 2 * T * diag(companding_scale()); with unit peaks a single gain
    alpha < 3/2 keeps all rounded entries inside {-1, 0, 1}.
    """
    global _companded_cache
    if _companded_cache is None:
        g = (SCALE_8[:, None] * INTEGER_KERNEL_8) * (2.0 * companding_scale())[None, :]
        g.flags.writeable = False
        _companded_cache = g
    return _companded_cache


def approx_family(alpha: float) -> np.ndarray:
    """Member of the scale-and-round approximation family at gain ``alpha``.

    Parameters
    ----------
    alpha : float
        Gain in the open interval (0, 3/2).  Beyond 3/2 entries would round
        outside {-1, 0, 1}.

    Returns
    -------
    numpy.ndarray
        (8, 8) integer matrix: the companded exact transform times alpha,
        rounded half away from zero.
    """
    if not 0.0 < alpha < 1.5:
        raise ValueError(f"gain must lie in (0, 1.5), got {alpha!r}")
    return round_half_away_from_zero(alpha * _companded_dtt())


@dataclass(frozen=True)
class AlphaSearchResult:
    """Outcome of the exhaustive gain search.

    Attributes
    ----------
    grid_step : float
        Spacing of the search grid.
    admissible : list[tuple[float, numpy.ndarray]]
        Every grid gain whose kernel has entries in {-1, 0, 1} and is
        nonsingular, with that kernel.
    optimal_interval : tuple[float, float]
        Endpoints of the maximal contiguous admissible run containing 0.95
        on which the kernel is constant.
    runs : list[tuple[float, float, numpy.ndarray]]
        All maximal contiguous admissible runs with a constant kernel,
        in increasing gain order.
    """

    grid_step: float
    admissible: list[tuple[float, np.ndarray]]
    optimal_interval: tuple[float, float]
    runs: list[tuple[float, float, np.ndarray]]


def search_alpha(grid_step: float = 1e-3) -> AlphaSearchResult:
    """Exhaustive search of the gain grid for admissible kernels.

    Scans multiples of ``grid_step`` strictly inside (0, 3/2).  A gain is
    admissible when its rounded kernel has entries in {-1, 0, 1} and is
    nonsingular.  The distinguished interval is the contiguous admissible run
    around gain 0.95 whose kernels all coincide; with the 1e-3 grid it is
    [0.931, 0.957].
    """
    if grid_step <= 0:
        raise ValueError(f"grid step must be positive, got {grid_step!r}")
    g = _companded_dtt()
    n_steps = int(np.ceil(1.5 / grid_step))

    kernels: dict[int, np.ndarray] = {}
    for i in range(1, n_steps):
        alpha = i * grid_step
        if alpha >= 1.5:
            break
        kernel = round_half_away_from_zero(alpha * g)
        if np.abs(kernel).max() > 1:
            continue
        # entries are in {-1,0,1}, so |det| is a small integer; 0.5 separates
        # singular from nonsingular safely at double precision
        if abs(np.linalg.det(kernel)) < 0.5:
            continue
        kernels[i] = kernel

    admissible = [(round(i * grid_step, 12), k) for i, k in sorted(kernels.items())]

    runs: list[tuple[float, float, np.ndarray]] = []
    for i in sorted(kernels):
        kernel = kernels[i]
        if runs and i - 1 in kernels and np.array_equal(runs[-1][2], kernel) \
                and runs[-1][1] == round((i - 1) * grid_step, 12):
            runs[-1] = (runs[-1][0], round(i * grid_step, 12), kernel)
        else:
            runs.append((round(i * grid_step, 12), round(i * grid_step, 12), kernel))

    pivot = int(round(0.95 / grid_step))
    optimal = (float("nan"), float("nan"))
    for lo, hi, kernel in runs:
        if lo <= pivot * grid_step <= hi or lo <= 0.95 <= hi:
            optimal = (lo, hi)
            break
    return AlphaSearchResult(grid_step, admissible, optimal, runs)


@dataclass(frozen=True)
class ApproxKernel:
    """The proposed 8-point kernel with its exact inverse factorization.

    Attributes
    ----------
    forward : numpy.ndarray
        Integer forward kernel, entries in {-1, 0, 1}.
    inverse_int : numpy.ndarray
        Integer part of the inverse (entries in -3..3).
    inverse_scale : numpy.ndarray
        Diagonal completing the inverse: inverse_int @ diag(inverse_scale)
        inverts ``forward`` exactly.
    ortho_scale : numpy.ndarray
        Diagonal that normalizes the forward rows to unit norm.
    """

    forward: np.ndarray
    inverse_int: np.ndarray
    inverse_scale: np.ndarray
    ortho_scale: np.ndarray

    def __post_init__(self) -> None:
        # guard transcription errors: the inverse identity must hold exactly
        # over the rationals, not approximately
        fwd = [[Fraction(int(v)) for v in row] for row in self.forward]
        inv = [[Fraction(int(v)) for v in row] for row in self.inverse_int]
        scale = [Fraction(1, d) for d in _INVERSE_SCALE_DENOMS]
        for i in range(8):
            for j in range(8):
                acc = sum(inv[i][k] * scale[k] * fwd[k][j] for k in range(8))
                if acc != (1 if i == j else 0):
                    raise ValueError(
                        "inverse factorization does not invert the forward kernel "
                        f"(entry ({i}, {j}) = {acc})"
                    )


def proposed_kernel() -> ApproxKernel:
    """The proposed multiplierless kernel and its inverse factorization."""
    return ApproxKernel(
        forward=FORWARD_KERNEL.copy(),
        inverse_int=INVERSE_KERNEL.copy(),
        inverse_scale=INVERSE_SCALE.copy(),
        ortho_scale=orthogonal_scaling(FORWARD_KERNEL),
    )


def orthogonal_scaling(kernel: np.ndarray) -> np.ndarray:
    """Row-normalizing diagonal: entry k is 1/sqrt(row-k squared norm).

    diag(result) @ kernel has unit-norm rows; for an orthogonal-row kernel
    this is the polar-orthogonalization diagonal.
    """
    kernel = np.asarray(kernel, dtype=np.float64)
    if kernel.ndim != 2 or kernel.shape[0] != kernel.shape[1]:
        raise ValueError(f"kernel must be square, got shape {kernel.shape}")
    norms_sq = (kernel * kernel).sum(axis=1)
    if np.any(norms_sq == 0):
        raise ValueError("kernel has a zero row, cannot normalize")
    return 1.0 / np.sqrt(norms_sq)


def total_energy_error(exact: np.ndarray, approx: np.ndarray) -> float:
    """pi-scaled squared Frobenius distance between two transform matrices."""
    exact = np.asarray(exact, dtype=np.float64)
    approx = np.asarray(approx, dtype=np.float64)
    if exact.shape != approx.shape:
        raise ValueError(f"shape mismatch: {exact.shape} vs {approx.shape}")
    diff = exact - approx
    return float(np.pi * (diff * diff).sum())


def forward_energy_error() -> float:
    """Energy error of the row-normalized forward kernel against the DTT."""
    kernel = proposed_kernel()
    approx = kernel.ortho_scale[:, None] * kernel.forward
    return total_energy_error(dtt_matrix(8), approx)


def inverse_energy_error() -> float:
    """Energy error of the approximate inverse against the DTT inverse."""
    kernel = proposed_kernel()
    approx = (kernel.inverse_int * kernel.inverse_scale[None, :]) / kernel.ortho_scale[None, :]
    return total_energy_error(dtt_matrix(8).T, approx)
