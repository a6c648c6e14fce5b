"""Binary PGM (P5) image I/O, 8-bit grayscale only."""

from __future__ import annotations

import numpy as np

__all__ = ["read_pgm", "write_pgm"]


def _read_header_tokens(data: bytes, count: int) -> tuple[list[bytes], int]:
    """First ``count`` whitespace-separated header tokens and the offset just
    past the single whitespace byte that terminates the last one. '#' starts
    a comment running to end of line."""
    tokens: list[bytes] = []
    pos = 0
    n = len(data)
    while len(tokens) < count:
        while pos < n and data[pos : pos + 1].isspace():
            pos += 1
        if pos < n and data[pos : pos + 1] == b"#":
            eol = data.find(b"\n", pos)
            if eol == -1:
                break
            pos = eol + 1
            continue
        start = pos
        while pos < n and not data[pos : pos + 1].isspace() and data[pos : pos + 1] != b"#":
            pos += 1
        if pos == start:
            break
        tokens.append(data[start:pos])
    if len(tokens) < count:
        raise ValueError("truncated PGM header")
    if pos >= n or not data[pos : pos + 1].isspace():
        raise ValueError("PGM header not terminated by whitespace")
    return tokens, pos + 1


def read_pgm(path) -> np.ndarray:
    """Read a binary PGM file into a (height, width) uint8 array.

    Only the P5 format with maxval 255 is supported.
    """
    with open(path, "rb") as fh:
        data = fh.read()
    tokens, offset = _read_header_tokens(data, 4)
    if tokens[0] != b"P5":
        raise ValueError(f"not a binary PGM (magic {tokens[0]!r}, expected b'P5')")
    try:
        width, height, maxval = (int(t) for t in tokens[1:4])
    except ValueError:
        raise ValueError(f"non-numeric PGM header fields: {tokens[1:4]!r}") from None
    if width <= 0 or height <= 0:
        raise ValueError(f"invalid PGM dimensions {width}x{height}")
    if maxval != 255:
        raise ValueError(f"only maxval 255 is supported, got {maxval}")
    expected = width * height
    pixels = data[offset : offset + expected]
    if len(pixels) < expected:
        raise ValueError(
            f"truncated PGM pixel data: expected {expected} bytes, got {len(pixels)}"
        )
    return np.frombuffer(pixels, dtype=np.uint8).reshape(height, width).copy()


def write_pgm(path, image: np.ndarray) -> None:
    """Write a (height, width) uint8 array as a binary PGM file."""
    image = np.asarray(image)
    if image.ndim != 2:
        raise ValueError(f"image must be 2-D, got shape {image.shape}")
    if image.dtype != np.uint8:
        raise ValueError(f"image must be uint8, got {image.dtype}")
    height, width = image.shape
    with open(path, "wb") as fh:
        fh.write(f"P5\n{width} {height}\n255\n".encode("ascii"))
        fh.write(image.tobytes())
