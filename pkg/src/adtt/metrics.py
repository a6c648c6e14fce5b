"""Full-reference image quality metrics: SSIM and SR-SIM.

Both metrics are written so that swapping the two images cannot change the
result (every combining step is commutative at the floating-point level) and
comparing an image with itself yields exactly 1.0.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import ndimage
from scipy.signal import convolve2d

__all__ = ["ssim", "sr_sim"]


def _gaussian_1d(size: int, sigma: float) -> np.ndarray:
    x = np.arange(size, dtype=np.float64) - (size - 1) / 2.0
    g = np.exp(-(x * x) / (2.0 * sigma * sigma))
    return g / g.sum()


def _windowed(img: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Separable windowed local mean, valid region only (no border values)."""
    out = ndimage.correlate1d(img, g, axis=0, mode="constant", cval=0.0)
    out = ndimage.correlate1d(out, g, axis=1, mode="constant", cval=0.0)
    m = (len(g) - 1) // 2
    return out[m:-m, m:-m]


def _check_pair(a, b, min_side: int) -> tuple[np.ndarray, np.ndarray]:
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.ndim != 2 or b.ndim != 2:
        raise ValueError("images must be 2-D grayscale")
    if a.shape != b.shape:
        raise ValueError(f"image shapes differ: {a.shape} vs {b.shape}")
    if min(a.shape) < min_side:
        raise ValueError(f"images must be at least {min_side} pixels on each side")
    return a, b


def ssim(img1, img2, data_range: float = 255.0) -> float:
    """Mean structural similarity with an 11x11 Gaussian window (sigma 1.5).

    Local statistics use the population (non-sample) covariance and only
    windows fully inside the image.  Stabilizers are (0.01*data_range)^2 and
    (0.03*data_range)^2.
    """
    a, b = _check_pair(img1, img2, 11)
    g = _gaussian_1d(11, 1.5)

    mu1 = _windowed(a, g)
    mu2 = _windowed(b, g)
    var1 = _windowed(a * a, g) - mu1 * mu1
    var2 = _windowed(b * b, g) - mu2 * mu2
    cov = _windowed(a * b, g) - mu1 * mu2

    c1 = (0.01 * data_range) ** 2
    c2 = (0.03 * data_range) ** 2
    num = (2.0 * (mu1 * mu2) + c1) * (2.0 * cov + c2)
    den = (mu1 * mu1 + mu2 * mu2 + c1) * (var1 + var2 + c2)
    return float(np.mean(num / den))


# --- SR-SIM -----------------------------------------------------------------

# Scharr derivative, normalized so white-to-black step response is 1
_SCHARR = np.array(
    [[3.0, 0.0, -3.0], [10.0, 0.0, -10.0], [3.0, 0.0, -3.0]]
) / 16.0


def _gradient_magnitude(img: np.ndarray) -> np.ndarray:
    gx = convolve2d(img, _SCHARR, mode="same", boundary="fill")
    gy = convolve2d(img, _SCHARR.T, mode="same", boundary="fill")
    return np.sqrt(gx * gx + gy * gy)


def _block_mean(img: np.ndarray, f: int) -> np.ndarray:
    """Downsample by averaging f x f cells (trailing partial cells dropped)."""
    if f == 1:
        return img
    h = img.shape[0] - img.shape[0] % f
    w = img.shape[1] - img.shape[1] % f
    return img[:h, :w].reshape(h // f, f, w // f, f).mean(axis=(1, 3))


def _mat2gray(x: np.ndarray) -> np.ndarray:
    lo = x.min()
    span = x.max() - lo
    if span == 0:
        return np.zeros_like(x)
    return (x - lo) / span


def _smoothing_kernel() -> np.ndarray:
    # 10x10 Gaussian (sigma 3.8) embedded in an 11x11 frame with a leading
    # zero row/column so the even-sized kernel keeps its conventional anchor
    x = np.arange(10, dtype=np.float64) - 4.5
    g = np.exp(-(x[:, None] ** 2 + x[None, :] ** 2) / (2.0 * 3.8**2))
    g /= g.sum()
    out = np.zeros((11, 11))
    out[1:, 1:] = g
    return out


_SMOOTH = _smoothing_kernel()


def _cubic(x: np.ndarray) -> np.ndarray:
    """Keys bicubic interpolation kernel (a = -0.5), support [-2, 2]."""
    ax = np.abs(x)
    ax2 = ax * ax
    ax3 = ax2 * ax
    return np.where(
        ax <= 1.0,
        1.5 * ax3 - 2.5 * ax2 + 1.0,
        np.where(ax < 2.0, -0.5 * ax3 + 2.5 * ax2 - 4.0 * ax + 2.0, 0.0),
    )


def _resize_weights(in_len: int, out_len: int) -> tuple[np.ndarray, np.ndarray]:
    """Per-output-sample interpolation weights and source indices for one axis.

    When shrinking, the kernel is stretched by the inverse scale (antialias).
    Border samples are replicated.
    """
    scale = out_len / in_len
    if scale < 1.0:
        width = 4.0 / scale
        kern = lambda x: scale * _cubic(scale * x)  # noqa: E731
    else:
        width = 4.0
        kern = _cubic
    u = np.arange(1.0, out_len + 1.0) / scale + 0.5 * (1.0 - 1.0 / scale)
    left = np.floor(u - width / 2.0)
    taps = int(np.ceil(width)) + 2
    cols = left[:, None] + np.arange(taps, dtype=np.float64)[None, :]
    weights = kern(u[:, None] - cols)
    weights /= weights.sum(axis=1, keepdims=True)
    idx = (np.clip(cols, 1.0, float(in_len)) - 1.0).astype(np.int64)
    keep = np.any(weights != 0.0, axis=0)
    return weights[:, keep], idx[:, keep]


def _imresize(img: np.ndarray, scale: float | None = None, out_shape=None) -> np.ndarray:
    """Bicubic resize with antialiasing on shrink, replicated borders."""
    h, w = img.shape
    if out_shape is None:
        out_shape = (int(np.ceil(h * scale)), int(np.ceil(w * scale)))
    wr, ir = _resize_weights(h, out_shape[0])
    out = (img[ir, :] * wr[:, :, None]).sum(axis=1)
    wc, ic = _resize_weights(w, out_shape[1])
    return (out[:, ic] * wc[None, :, :]).sum(axis=2)


def _spectral_saliency(img: np.ndarray) -> np.ndarray:
    """Spectral-residual visual saliency map, normalized to unit span
    (the final bicubic upsampling may overshoot the [0, 1] range slightly).

    The log-amplitude spectrum of a quarter-size copy is compared with its
    local (3x3) average; the inverse transform of the residual spectrum,
    smoothed and normalized, is the saliency estimate.
    """
    small = _imresize(img, 0.25)
    spectrum = np.fft.fft2(small)
    log_amp = np.log(np.abs(spectrum) + np.finfo(np.float64).eps)
    residual = log_amp - ndimage.uniform_filter(log_amp, size=3, mode="nearest")
    sal = np.abs(np.fft.ifft2(np.exp(residual + 1j * np.angle(spectrum)))) ** 2
    sal = ndimage.correlate(sal, _SMOOTH, mode="constant", cval=0.0)
    return _imresize(_mat2gray(sal), out_shape=img.shape)


def sr_sim(img1, img2) -> float:
    """Spectral-residual similarity index.

    Compares saliency maps and Scharr gradient magnitudes of the two images;
    the pointwise similarity product is pooled with the pointwise maximum
    saliency as weight, so differences in visually conspicuous regions
    dominate.  Images are first mean-downsampled to roughly 256 pixels on
    the short side.
    """
    a, b = _check_pair(img1, img2, 16)
    f = max(1, int(round(min(a.shape) / 256.0)))
    a = _block_mean(a, f)
    b = _block_mean(b, f)

    sal1 = _spectral_saliency(a)
    sal2 = _spectral_saliency(b)
    g1 = _gradient_magnitude(a)
    g2 = _gradient_magnitude(b)

    c1 = 0.40
    c2 = 225.0
    sim_sal = (2.0 * (sal1 * sal2) + c1) / (sal1 * sal1 + sal2 * sal2 + c1)
    sim_grad = (2.0 * (g1 * g2) + c2) / (g1 * g1 + g2 * g2 + c2)
    sim = sim_sal * np.sqrt(sim_grad)

    # exact summation: the vectorized numpy reduction is alignment-dependent,
    # which would break the bit-exact identity and symmetry guarantees
    weight = np.maximum(sal1, sal2)
    total = math.fsum(weight.ravel())
    if total == 0.0:
        return float(sim.mean())
    return math.fsum((sim * weight).ravel()) / total
