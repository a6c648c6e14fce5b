"""Walkthrough of the exact discrete Tchebichef transform construction."""

import numpy as np

from adtt.exact import INTEGER_KERNEL_8, SCALE_8, dtt_matrix, format_matrix

print("8-point discrete Tchebichef transform:")
t = dtt_matrix(8)
print(format_matrix(t, precision=4))

print("\northogonality residual max|T T' - I| per order:")
for n in (2, 4, 8, 16):
    residual = np.abs(dtt_matrix(n) @ dtt_matrix(n).T - np.eye(n)).max()
    print(f"  n = {n:2d}: {residual:.3e}")

# the 8-point matrix factors into a diagonal of inverse square roots times an
# integer matrix; the integer part is what fast fixed-point designs build on
print("\ninteger kernel (rows scaled by 0.5/sqrt([2, 42, 42, 66, 154, 546, 66, 858])):")
print(format_matrix(INTEGER_KERNEL_8))

recomposed = SCALE_8[:, None] * INTEGER_KERNEL_8
print(f"\nmax|diag(scale) . kernel - T| = {np.abs(recomposed - t).max():.3e}")
