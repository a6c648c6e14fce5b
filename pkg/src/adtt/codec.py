"""Block-transform image compression harness.

Images are split into 8x8 blocks, transformed by a separable 2-D kernel,
reduced to the first ``r`` coefficients in zigzag order, inverse transformed
and re-quantized to 8-bit pixels.  Two kernels are registered: the exact DTT
and the multiplierless approximation.  Coefficient retention acts on fixed
positions, so rescaling a kernel by any nonzero diagonal and compensating in
the inverse leaves the reconstruction unchanged; the registry stores the
row-normalized variants.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .approx import proposed_kernel, round_half_away_from_zero
from .exact import dtt_matrix

__all__ = [
    "ZIGZAG",
    "zigzag_scan",
    "zigzag_unscan",
    "retention_mask",
    "retain",
    "CodecKernel",
    "KERNELS",
    "get_kernel",
    "transform_block_2d",
    "inverse_block_2d",
    "compress_image",
]

# flat index of the k-th coefficient visited by the standard 8x8 zigzag walk
ZIGZAG = np.array(
    [
        0,  1,  8, 16,  9,  2,  3, 10,
        17, 24, 32, 25, 18, 11,  4,  5,
        12, 19, 26, 33, 40, 48, 41, 34,
        27, 20, 13,  6,  7, 14, 21, 28,
        35, 42, 49, 56, 57, 50, 43, 36,
        29, 22, 15, 23, 30, 37, 44, 51,
        58, 59, 52, 45, 38, 31, 39, 46,
        53, 60, 61, 54, 47, 55, 62, 63,
    ],
    dtype=np.int64,
)


def zigzag_scan(block: np.ndarray) -> np.ndarray:
    """Flatten an 8x8 block into zigzag coefficient order."""
    block = np.asarray(block)
    if block.shape != (8, 8):
        raise ValueError(f"block must be 8x8, got shape {block.shape}")
    return block.ravel()[ZIGZAG]


def zigzag_unscan(coeffs: np.ndarray) -> np.ndarray:
    """Rebuild an 8x8 block from a length-64 zigzag-ordered vector."""
    coeffs = np.asarray(coeffs)
    if coeffs.shape != (64,):
        raise ValueError(f"coefficient vector must have length 64, got shape {coeffs.shape}")
    block = np.empty(64, dtype=coeffs.dtype)
    block[ZIGZAG] = coeffs
    return block.reshape(8, 8)


def retention_mask(r: int) -> np.ndarray:
    """Boolean 8x8 mask of the positions of the first ``r`` zigzag
    coefficients."""
    if not 1 <= r <= 64:
        raise ValueError(f"retained coefficient count must be in [1, 64], got {r}")
    mask = np.zeros(64, dtype=bool)
    mask[ZIGZAG[:r]] = True
    return mask.reshape(8, 8)


def retain(scanned: np.ndarray, r: int) -> np.ndarray:
    """Keep the first ``r`` entries of a zigzag-ordered vector, zero the rest."""
    scanned = np.asarray(scanned)
    if scanned.shape != (64,):
        raise ValueError(f"scanned vector must have length 64, got shape {scanned.shape}")
    if not 1 <= r <= 64:
        raise ValueError(f"retained coefficient count must be in [1, 64], got {r}")
    out = scanned.copy()
    out[r:] = 0
    return out


@dataclass(frozen=True)
class CodecKernel:
    """Separable 2-D transform pair for the codec.

    ``inverse`` must invert ``forward`` (to double precision), so the
    composition forward -> keep all 64 -> inverse is lossless up to rounding
    noise far below half a pixel step.
    """

    name: str
    forward: np.ndarray
    inverse: np.ndarray


def _exact_kernel() -> CodecKernel:
    t = dtt_matrix(8)
    return CodecKernel("exact_dtt", t, t.T)


def _approx_kernel() -> CodecKernel:
    k = proposed_kernel()
    fwd = k.ortho_scale[:, None] * k.forward.astype(np.float64)
    inv = (k.inverse_int * k.inverse_scale[None, :]) / k.ortho_scale[None, :]
    return CodecKernel("proposed", fwd, inv)


KERNELS = {k.name: k for k in (_exact_kernel(), _approx_kernel())}


def get_kernel(kernel) -> CodecKernel:
    """Resolve a kernel argument: registry name, CodecKernel, or 8x8 matrix.

    A raw matrix is paired with its numerical inverse; singular matrices are
    rejected.
    """
    if isinstance(kernel, CodecKernel):
        return kernel
    if isinstance(kernel, str):
        try:
            return KERNELS[kernel]
        except KeyError:
            raise ValueError(
                f"unknown kernel {kernel!r}, expected one of {sorted(KERNELS)}"
            ) from None
    m = np.asarray(kernel, dtype=np.float64)
    if m.shape != (8, 8):
        raise ValueError(f"kernel matrix must be 8x8, got shape {m.shape}")
    try:
        inv = np.linalg.inv(m)
    except np.linalg.LinAlgError:
        raise ValueError("kernel matrix is singular") from None
    return CodecKernel("custom", m, inv)


def transform_block_2d(block: np.ndarray, kernel="proposed") -> np.ndarray:
    """Separable 2-D forward transform of one 8x8 block: K @ block @ K.T."""
    block = np.asarray(block, dtype=np.float64)
    if block.shape != (8, 8):
        raise ValueError(f"block must be 8x8, got shape {block.shape}")
    if isinstance(kernel, (str, CodecKernel)):
        m = get_kernel(kernel).forward
    else:
        m = np.asarray(kernel, dtype=np.float64)
        if m.shape != (8, 8):
            raise ValueError(f"kernel matrix must be 8x8, got shape {m.shape}")
    return m @ block @ m.T


def inverse_block_2d(coeffs: np.ndarray, kernel="proposed") -> np.ndarray:
    """Separable 2-D inverse transform of one 8x8 coefficient block.

    Inverts transform_block_2d for the same kernel argument.
    """
    coeffs = np.asarray(coeffs, dtype=np.float64)
    if coeffs.shape != (8, 8):
        raise ValueError(f"coefficient block must be 8x8, got shape {coeffs.shape}")
    g = get_kernel(kernel).inverse
    return g @ coeffs @ g.T


def _pad_to_blocks(image: np.ndarray) -> np.ndarray:
    h, w = image.shape
    return np.pad(image, ((0, -h % 8), (0, -w % 8)), mode="edge")


def _forward_coeffs(image: np.ndarray, k: CodecKernel) -> np.ndarray:
    """All 8x8 block coefficient arrays of an edge-padded image, as an
    (hblocks, wblocks, 8, 8) array."""
    padded = _pad_to_blocks(image).astype(np.float64)
    blocks = (
        padded.reshape(padded.shape[0] // 8, 8, padded.shape[1] // 8, 8)
        .transpose(0, 2, 1, 3)
    )
    return np.einsum("ij,mnjk,lk->mnil", k.forward, blocks, k.forward)


def _reconstruct(coeffs: np.ndarray, mask: np.ndarray, k: CodecKernel, shape) -> np.ndarray:
    """Float reconstruction from masked block coefficients, cropped to
    ``shape``, before clamping and requantization."""
    recon = np.einsum("ij,mnjk,lk->mnil", k.inverse, coeffs * mask, k.inverse)
    h8, w8 = recon.shape[0] * 8, recon.shape[1] * 8
    return recon.transpose(0, 2, 1, 3).reshape(h8, w8)[: shape[0], : shape[1]]


def _quantize(recon: np.ndarray) -> np.ndarray:
    return round_half_away_from_zero(np.clip(recon, 0.0, 255.0)).astype(np.uint8)


def compress_image(image: np.ndarray, kernel="proposed", r: int = 64) -> np.ndarray:
    """Compress and reconstruct a grayscale image, keeping ``r`` of 64
    coefficients per block.

    The image is edge-padded to full 8x8 blocks, every block is transformed,
    reduced to its first ``r`` zigzag coefficients and inverse transformed;
    the result is cropped back, clamped to [0, 255] and rounded half away
    from zero to uint8.
    """
    image = np.asarray(image)
    if image.ndim != 2:
        raise ValueError(f"image must be 2-D grayscale, got shape {image.shape}")
    if image.size == 0:
        raise ValueError("image is empty")
    k = get_kernel(kernel)
    mask = retention_mask(r)
    coeffs = _forward_coeffs(image, k)
    return _quantize(_reconstruct(coeffs, mask, k, image.shape))
