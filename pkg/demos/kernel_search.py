"""How the multiplierless kernel is found: compand, scale, round, search."""

import numpy as np

from adtt.approx import (
    approx_family,
    companding_scale,
    forward_energy_error,
    inverse_energy_error,
    proposed_kernel,
    search_alpha,
)
from adtt.exact import dtt_matrix, format_matrix

print("companding diagonal (equalizes every column of T to peak 1/2):")
print(format_matrix(companding_scale(), precision=6))

peaks = np.abs(dtt_matrix(8) * companding_scale()[None, :]).max(axis=0)
print(f"column peaks after companding: {peaks}")

# once all columns peak at 1, rounding alpha * companded T keeps every entry
# in {-1, 0, 1} for the whole gain range (0, 3/2); the search walks that range
print("\nsampling the rounded family at a few gains:")
for alpha in (0.2, 0.5, 0.95, 1.4):
    nonzero = int(np.count_nonzero(approx_family(alpha)))
    print(f"  alpha = {alpha:4.2f}: {nonzero:2d} nonzero entries")

result = search_alpha(1e-3)
print(f"\ngrid search at step {result.grid_step}:")
print(f"  {len(result.admissible)} admissible gains in {len(result.runs)} constant-kernel runs")
lo, hi = result.optimal_interval
print(f"  interval around 0.95: [{lo}, {hi}]")

print("\nselected kernel:")
print(format_matrix(approx_family(0.95)))

k = proposed_kernel()
print("\ninteger inverse (exact once columns are scaled by 1/8,1/10,1/8,1/10,1/4,1/10,1/8,1/10):")
print(format_matrix(k.inverse_int))

print(f"\nenergy error vs exact transform: forward {forward_energy_error():.4f},"
      f" inverse {inverse_energy_error():.4f}")
