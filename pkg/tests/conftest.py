"""Shared independent oracles for the test suite.

These helpers work on plain coefficient lists (index = exponent, nonnegative
exponents only) and deliberately avoid the package's series engine, so that
agreement between the two is a genuine cross-check.
"""

from __future__ import annotations


def poly_mul(a: list[int], b: list[int], prec: int) -> list[int]:
    out = [0] * prec
    for i, ca in enumerate(a):
        if ca == 0 or i >= prec:
            continue
        for j, cb in enumerate(b):
            if i + j >= prec:
                break
            out[i + j] += ca * cb
    return out


def poly_inv(a: list[int], prec: int) -> list[int]:
    assert a[0] in (1, -1)
    out = [0] * prec
    out[0] = a[0]
    for n in range(1, prec):
        s = 0
        for k in range(1, min(n, len(a) - 1) + 1):
            s += a[k] * out[n - k]
        out[n] = -a[0] * s
    return out


def euler_product_list(prec: int, scale: int = 1) -> list[int]:
    """prod_{n>=1} (1 - q^(scale*n)) truncated below prec, as a plain list."""
    out = [0] * prec
    out[0] = 1
    n = scale
    while n < prec:
        # multiply by (1 - q^n) in place
        for i in range(prec - 1, n - 1, -1):
            out[i] -= out[i - n]
        n += scale
    return out


def level10_parameter_list(prec: int) -> list[int]:
    """Direct multiplication of the residue-pattern factors, shifted by q.

    Returns coefficients of exponents 0..prec-1 (entry 0 is always 0).
    """
    unit = [0] * (prec - 1)
    unit[0] = 1
    for j in range(1, prec - 1):
        r = j % 10
        if r in (1, 2, 8, 9):
            unit = poly_mul(unit, [1] + [0] * (j - 1) + [-1], prec - 1)
        elif r in (3, 4, 6, 7):
            geom = [1 if i % j == 0 else 0 for i in range(prec - 1)]
            unit = poly_mul(unit, geom, prec - 1)
    return [0] + unit
