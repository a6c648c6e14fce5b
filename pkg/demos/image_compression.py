"""Block compression of a real image: exact kernel vs multiplierless kernel."""

import tempfile
from pathlib import Path

from adtt.codec import compress_image
from adtt.metrics import sr_sim, ssim
from adtt.pgm import read_pgm, write_pgm

corpus = Path(__file__).resolve().parents[1] / "data"
image = read_pgm(corpus / "camera.pgm")
print(f"camera.pgm: {image.shape[1]}x{image.shape[0]} pixels")

out_dir = Path(tempfile.mkdtemp(prefix="adtt_demo_"))

print(f"\n{'r':>3} {'kernel':<10} {'ssim':>8} {'srsim':>8}")
for r in (4, 8, 16, 32, 64):
    for kernel in ("exact_dtt", "proposed"):
        recon = compress_image(image, kernel, r=r)
        s = ssim(image, recon)
        v = sr_sim(image, recon)
        print(f"{r:>3} {kernel:<10} {s:>8.4f} {v:>8.4f}")
        write_pgm(out_dir / f"camera_{kernel}_r{r:02d}.pgm", recon)

# keeping all 64 coefficients reproduces the input bit for bit, so the r = 64
# rows above read 1.0000 for both kernels
print(f"\nreconstructions written to {out_dir}")
