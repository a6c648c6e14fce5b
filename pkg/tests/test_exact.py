from fractions import Fraction

import numpy as np
import pytest

from adtt.exact import (
    INTEGER_KERNEL_8,
    SCALE_8,
    ascending_factorial,
    dtt_matrix,
    exact_factorization_8,
    format_matrix,
    hypergeom_3f2_terminating,
)


def test_ascending_factorial_empty_product():
    assert ascending_factorial(3, 0) == 1


def test_ascending_factorial_of_one_is_factorial():
    assert ascending_factorial(1, 4) == 24


def test_ascending_factorial_negative_base():
    assert ascending_factorial(-7, 2) == 42


def test_ascending_factorial_exact_for_large_integers():
    # 20 factors starting at 5: exact integer, no float roundoff
    expect = 1
    for i in range(20):
        expect *= 5 + i
    assert ascending_factorial(5, 20) == expect


def test_ascending_factorial_rejects_negative_count():
    with pytest.raises(ValueError):
        ascending_factorial(2, -1)


def test_3f2_zero_a_parameter_gives_one():
    assert hypergeom_3f2_terminating(0, -5, 3.7, 1.2, -9.5, 1.0) == 1.0


def test_3f2_two_term_sum():
    # 1 + (-1)(-1)(2) / ((1)(-7) * 1!) = 1 - 2/7
    value = hypergeom_3f2_terminating(-1, -1, 2, 1, -7, 1.0)
    assert value == pytest.approx(5.0 / 7.0, abs=1e-15)


def test_3f2_matches_exact_rational_sum():
    # independent oracle: same series in Fraction arithmetic
    def oracle(a1, a2, a3, b1, b2):
        last = min(-a1, -a2)
        total = Fraction(0)
        term = Fraction(1)
        for j in range(last + 1):
            if j > 0:
                term *= Fraction((a1 + j - 1) * (a2 + j - 1) * (a3 + j - 1),
                                 (b1 + j - 1) * (b2 + j - 1) * j)
            total += term
        return total

    for args in ((-3, -5, 2, 1, -7), (-4, -4, 5, 1, -7), (-7, -2, 8, 1, -7)):
        got = hypergeom_3f2_terminating(*args, 1.0)
        assert got == pytest.approx(float(oracle(*args)), rel=1e-13)


def test_3f2_rejects_nonterminating():
    with pytest.raises(ValueError):
        hypergeom_3f2_terminating(0.5, 0.5, 1, 1, 1, 1.0)


def test_3f2_rejects_b_parameter_collision():
    # b2 = -2 reaches zero at j = 2, before the a1 = -5 termination
    with pytest.raises(ValueError):
        hypergeom_3f2_terminating(-5, -5, 1, 1, -2, 1.0)


def test_dtt_row0_constant():
    for n in (1, 2, 5, 8, 13):
        t = dtt_matrix(n)
        assert np.allclose(t[0], 1.0 / np.sqrt(n), rtol=0, atol=1e-14)


def test_dtt_2_closed_form():
    expect = np.array([[1.0, 1.0], [-1.0, 1.0]]) / np.sqrt(2.0)
    assert np.allclose(dtt_matrix(2), expect, rtol=0, atol=1e-15)


def test_dtt_8_row0_value():
    assert np.allclose(dtt_matrix(8)[0], 1.0 / (2.0 * np.sqrt(2.0)), rtol=0, atol=1e-15)


def test_dtt_orthogonality_through_16():
    for n in range(1, 17):
        t = dtt_matrix(n)
        err = np.abs(t @ t.T - np.eye(n)).max()
        assert err <= 1e-10, (n, err)


def test_dtt_rejects_order_zero():
    with pytest.raises(ValueError):
        dtt_matrix(0)


def test_factorization_rows_printed():
    assert INTEGER_KERNEL_8[1].tolist() == [-7, -5, -3, -1, 1, 3, 5, 7]
    assert INTEGER_KERNEL_8[7].tolist() == [-1, 7, -21, 35, -35, 21, -7, 1]
    assert np.abs(INTEGER_KERNEL_8).max() == 35


def test_factorization_row_symmetry():
    flipped = INTEGER_KERNEL_8[:, ::-1]
    for k in range(8):
        if k % 2 == 0:
            assert np.array_equal(INTEGER_KERNEL_8[k], flipped[k])
        else:
            assert np.array_equal(INTEGER_KERNEL_8[k], -flipped[k])


def test_factorization_reconstructs_dtt():
    scale, kernel = exact_factorization_8()
    err = np.abs(scale[:, None] * kernel - dtt_matrix(8)).max()
    assert err <= 1e-12


def test_factorization_scale_values():
    expect = 0.5 / np.sqrt(np.array([2.0, 42.0, 42.0, 66.0, 154.0, 546.0, 66.0, 858.0]))
    assert np.array_equal(SCALE_8, expect)


def test_factorization_returns_copies():
    scale, kernel = exact_factorization_8()
    scale[0] = -1.0
    kernel[0, 0] = 99
    s2, k2 = exact_factorization_8()
    assert s2[0] > 0
    assert k2[0, 0] == 1


def test_format_matrix_integers():
    out = format_matrix(np.array([[1, -20], [300, 4]]))
    assert out == "  1 -20\n300   4"


def test_format_matrix_precision():
    out = format_matrix(np.array([[np.pi]]), precision=3)
    assert out.strip() == "3.14"
    with pytest.raises(ValueError):
        format_matrix(np.eye(2), precision=0)


def test_format_matrix_vector():
    out = format_matrix(np.array([1.5, 2.5]))
    assert out == "1.5 2.5"
