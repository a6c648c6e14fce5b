"""The addition-only fast paths and what they cost."""

import numpy as np

from adtt.approx import FORWARD_KERNEL, INVERSE_KERNEL, INVERSE_SCALE
from adtt.fast import count_ops, forward_fast, inverse_fast
from adtt.sweep import report_complexity

x = [31, 41, 59, 26, 53, 58, 97, 93]
print(f"input            {x}")

coeffs = forward_fast(x)
print(f"forward_fast     {coeffs}")
print(f"dense product    {(FORWARD_KERNEL @ np.array(x)).tolist()}")

# the inverse path defers its diagonal: scale the coefficients first, then
# run the addition/shift network
scaled = [s * c for s, c in zip(INVERSE_SCALE, coeffs)]
back = inverse_fast(scaled)
print(f"roundtrip        {[round(float(v), 12) for v in back]}")

print(f"\ninverse_fast on a raw basis vector equals a column of the integer inverse:")
print(f"  inverse_fast(e1) = {inverse_fast([0, 1, 0, 0, 0, 0, 0, 0])}")
print(f"  column 1         = {INVERSE_KERNEL[:, 1].tolist()}")

print(f"\nmeasured costs: forward {count_ops(forward_fast)}")
print(f"                inverse {count_ops(inverse_fast)}")

print()
print(report_complexity(), end="")
