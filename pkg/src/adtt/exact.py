"""Exact discrete Tchebichef transform (DTT) matrices.

The N-point DTT is an orthonormal transform whose k-th basis vector samples
the degree-k discrete Tchebichef polynomial on the grid 0..N-1.  Entry (k, n)
has the closed form

    t[k, n] = sqrt((2k+1) * (N-k-1)! / (N+k)!) * (1-N)_k
              * 3F2(-k, -n, 1+k; 1, 1-N; 1)

where (a)_k is the ascending factorial and 3F2 is a terminating
hypergeometric sum.  For N = 8 the matrix splits into a diagonal of
irrational scale factors times a small-integer matrix; that factorization is
the starting point for the multiplierless approximations in
:mod:`adtt.approx`.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "ascending_factorial",
    "hypergeom_3f2_terminating",
    "dtt_matrix",
    "exact_factorization_8",
    "format_matrix",
]

# 8-point factorization T = diag(SCALE_8) @ INTEGER_KERNEL_8.
# Row k of the integer matrix is symmetric under index reversal for even k
# and antisymmetric for odd k; largest magnitude is 35.
INTEGER_KERNEL_8 = np.array(
    [
        [ 1,   1,   1,   1,   1,   1,   1,  1],
        [-7,  -5,  -3,  -1,   1,   3,   5,  7],
        [ 7,   1,  -3,  -5,  -5,  -3,   1,  7],
        [-7,   5,   7,   3,  -3,  -7,  -5,  7],
        [ 7, -13,  -3,   9,   9,  -3, -13,  7],
        [-7,  23, -17, -15,  15,  17, -23,  7],
        [ 1,  -5,   9,  -5,  -5,   9,  -5,  1],
        [-1,   7, -21,  35, -35,  21,  -7,  1],
    ],
    dtype=np.int64,
)

# Each scale entry is 1/(2*sqrt(m)) with m the squared norm of the integer
# row divided by 4, so diag(SCALE_8) @ INTEGER_KERNEL_8 has unit-norm rows.
SCALE_8 = 0.5 / np.sqrt(np.array([2.0, 42.0, 42.0, 66.0, 154.0, 546.0, 66.0, 858.0]))


def ascending_factorial(a: float, k: int) -> float:
    """Ascending factorial (Pochhammer symbol) (a)_k = a(a+1)...(a+k-1).

    Parameters
    ----------
    a : real
        Base of the product.  Integer input yields an exact integer result.
    k : int
        Number of factors, must be nonnegative.  k = 0 gives the empty
        product, 1.
    """
    if k < 0:
        raise ValueError(f"ascending factorial needs k >= 0, got {k}")
    out = 1
    for i in range(k):
        out = out * (a + i)
    return out


def hypergeom_3f2_terminating(
    a1: float, a2: float, a3: float, b1: float, b2: float, z: float = 1.0
) -> float:
    """Terminating generalized hypergeometric sum 3F2(a1,a2,a3; b1,b2; z).

    The series sum_j (a1)_j (a2)_j (a3)_j / ((b1)_j (b2)_j) * z^j / j! is
    evaluated as a finite sum.  It terminates because a1 or a2 is required to
    be a nonpositive integer; with both nonpositive integers the sum runs to
    min(-a1, -a2) inclusive.

    Raises
    ------
    ValueError
        If neither a1 nor a2 is a nonpositive integer (the sum would not
        terminate), or if a b-parameter hits zero before termination.
    """

    def _nonpos_int(a: float) -> bool:
        return a <= 0 and float(a).is_integer()

    bounds = [int(-a) for a in (a1, a2) if _nonpos_int(a)]
    if not bounds:
        raise ValueError(
            "3F2 series does not terminate: a1 or a2 must be a nonpositive integer"
        )
    last = min(bounds)

    total = 1.0
    term = 1.0
    for j in range(last):
        den = (b1 + j) * (b2 + j)
        if den == 0:
            raise ValueError(
                "3F2 b-parameter hits a nonpositive integer before termination"
            )
        term *= (a1 + j) * (a2 + j) * (a3 + j) * z / (den * (j + 1))
        total += term
    return total


def dtt_matrix(n: int) -> np.ndarray:
    """Exact n-point DTT matrix with orthonormal rows.

    Parameters
    ----------
    n : int
        Transform order, n >= 1.

    Returns
    -------
    numpy.ndarray
        (n, n) float64 matrix T with T @ T.T = I.  Row 0 is constant
        1/sqrt(n); row k samples the degree-k polynomial.
    """
    if n < 1:
        raise ValueError(f"transform order must be >= 1, got {n}")
    t = np.empty((n, n), dtype=np.float64)
    for k in range(n):
        # (n+k)!/(n-k-1)! expressed as an ascending factorial to keep the
        # ratio well-conditioned instead of forming two huge factorials
        prefactor = math.sqrt((2 * k + 1) / ascending_factorial(n - k, 2 * k + 1))
        poch = ascending_factorial(1 - n, k)
        for m in range(n):
            t[k, m] = prefactor * poch * hypergeom_3f2_terminating(
                -k, -m, 1 + k, 1, 1 - n, 1.0
            )
    return t


def exact_factorization_8() -> tuple[np.ndarray, np.ndarray]:
    """Diagonal-times-integer factorization of the 8-point DTT.

    Returns
    -------
    (scale, kernel)
        ``scale`` is the length-8 vector of positive diagonal factors and
        ``kernel`` the (8, 8) integer matrix with
        diag(scale) @ kernel == dtt_matrix(8) to machine precision.
    """
    return SCALE_8.copy(), INTEGER_KERNEL_8.copy()


def format_matrix(matrix: np.ndarray, precision: int = 6) -> str:
    """Render a matrix (or vector) row-major as aligned text.

    Integer arrays print as plain integers; floats use ``precision``
    significant digits.
    """
    if precision < 1:
        raise ValueError(f"precision must be >= 1, got {precision}")
    matrix = np.atleast_2d(np.asarray(matrix))
    if np.issubdtype(matrix.dtype, np.integer):
        cells = [[str(int(v)) for v in row] for row in matrix]
    else:
        cells = [[f"{v:.{precision}g}" for v in row] for row in matrix]
    width = max(len(c) for row in cells for c in row)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)
