"""Named builders for both sides of every identity the suite checks.

Each entry owns a stable name (the CLI/service contract), a kind, and a
builder that produces the concrete check payload at a requested precision:
a pair of series to compare, a series with an arithmetic-progression
congruence to scan, or a pair of exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Union

from .eta import expand, k_series, parse_quotient, core_series
from .series import LaurentSeries, zero


# -- the integer sequence behind the repeated even-index extraction ------


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


class BSequence:
    """B_0 = 0, B_1 = 1, B_k = -4*B_(k-1) - 8*B_(k-2) + (8^k - 1)/7, memoized."""

    def __init__(self):
        self._values = [0, 1]

    def value(self, k: int) -> int:
        if k < 0:
            raise ValueError(f"index must be >= 0, got {k}")
        vals = self._values
        while len(vals) <= k:
            j = len(vals)
            vals.append(-4 * vals[j - 1] - 8 * vals[j - 2] + _exact_div(8**j - 1, 7))
        return vals[k]


_BSEQ = BSequence()


def b_value(k: int) -> int:
    return _BSEQ.value(k)


def b_closed_form_4m3(m: int) -> int:
    """(8^(4m+4) - 1)/91, the closed form of every fourth sequence member."""
    if m < 0:
        raise ValueError(f"index must be >= 0, got {m}")
    return _exact_div(8 ** (4 * m + 4) - 1, 91)


# -- check payloads -------------------------------------------------------


@dataclass(frozen=True)
class SeriesPair:
    """Two series expected to agree; ``start`` restricts the compared range."""

    lhs: LaurentSeries
    rhs: LaurentSeries
    start: int | None = None


@dataclass(frozen=True)
class CongruenceCheck:
    """coefficient(step*n + offset) of ``series`` must vanish mod ``modulus``."""

    series: LaurentSeries
    step: int
    offset: int
    modulus: int


@dataclass(frozen=True)
class IntegerPair:
    lhs: int
    rhs: int


Built = Union[SeriesPair, CongruenceCheck, IntegerPair]
Builder = Callable[[tuple[int, ...], int], Built]


@dataclass(frozen=True)
class Identity:
    name: str
    kind: str  # series-identity | coefficient-identity | congruence | integer-identity
    statement: str
    arity: int
    default_params: tuple[tuple[int, ...], ...]
    builder: Builder

    def build(self, params: tuple[int, ...], prec: int) -> Built:
        if len(params) != self.arity:
            raise ValueError(
                f"{self.name} takes {self.arity} parameter(s), got {len(params)}"
            )
        return self.builder(params, prec)


# -- series shorthand ------------------------------------------------------


@lru_cache(maxsize=None)
def _e(expr: str, prec: int) -> LaurentSeries:
    return expand(parse_quotient(expr), prec)


def _progression(a: LaurentSeries, step: int, offset: int) -> LaurentSeries:
    """Coefficients along step*n + offset, reindexed by n; offset may exceed step."""
    if offset < 0:
        raise ValueError(f"offset must be >= 0, got {offset}")
    s0 = offset % step
    return a.shift(s0 - offset).dissect(step, s0)


def _core5_pairs(prec: int) -> LaurentSeries:
    return _e("f5^10/f1^2", prec)


def _xy(prec: int) -> tuple[LaurentSeries, LaurentSeries]:
    x = k_series(prec)
    y = k_series(-(-prec // 2)).substitute(2)
    return x, y


# -- individual builders ---------------------------------------------------


def _partition_congruence(step: int, offset: int, modulus: int) -> Builder:
    def build(params, prec):
        return CongruenceCheck(_e("f1^-1", prec), step, offset, modulus)

    return build


def _eq11a(params, prec):
    s3 = core_series(3, False, prec)
    return SeriesPair(s3.dissect(4, 1), s3)


def _eq11b(params, prec):
    s5 = core_series(5, False, prec)
    return SeriesPair(s5.dissect(4, 3), s5.dissect(2, 1) + 2 * s5)


def _eq12(params, prec):
    (k,) = params
    if k < 0:
        raise ValueError(f"parameter must be >= 0, got {k}")
    t3 = core_series(3, True, prec)
    step = 2 ** (2 * k + 1)
    offset = _exact_div(5 * 4**k - 2, 3)
    return SeriesPair(_progression(t3, step, offset), (step - 1) * t3.dissect(2, 1))


def _eq21(params, prec):
    rhs = _e("f4^10/f2^2/f8^4", prec) - 4 * _e("f2^2*f8^4/f4^2", prec).shift(1)
    return SeriesPair(_e("f1^4", prec), rhs)


def _eq22(params, prec):
    rhs = _e("f8*f20^2/f2^2/f40", prec) + _e("f4^3*f10*f40/f2^3/f8/f20", prec).shift(1)
    return SeriesPair(_e("f5/f1", prec), rhs)


def _eq23(params, prec):
    x = k_series(prec)
    return SeriesPair(_e("f2*f5^5/q/f1/f10^5", prec), x.invert() - x)


def _eq24(params, prec):
    x = k_series(prec)
    return SeriesPair(_e("f2^4*f5^2/q/f1^2/f10^4", prec), x.invert() + 1 - x)


def _eq25(params, prec):
    x = k_series(prec)
    return SeriesPair(_e("f1^3*f5/q/f2/f10^3", prec), x.invert() - 4 - x)


def _lem23(params, prec):
    x, y = _xy(prec)
    rel = x * x - y + 2 * x * y + x * x * y + y * y
    return SeriesPair(rel, zero(prec))


def _lem24(params, prec):
    lhs = _e("f2^3*f10^9/f1^3/f4/f5/f20^3", prec) - 4 * _e(
        "f4*f5^2*f20^3/f1^2", prec
    ).shift(2)
    rhs = _e("f5^5/f1", prec) + 2 * _e("f10^5/f2", prec).shift(1)
    return SeriesPair(lhs, rhs)


def _lem25(params, prec):
    lhs = _e("f4*f10^12/f1^2/f5^2/f20^5", prec) + 4 * _e(
        "f2^3*f5^3*f20^5/f1^3/f4/f10^3", prec
    ).shift(3)
    rhs = _e("f2^3*f5^8/f1^4/f10^3", prec) - 2 * _e("f2^2*f5^3*f10^2/f1^3", prec).shift(1)
    return SeriesPair(lhs, rhs)


def _eq26(params, prec):
    lhs = _e("f1*f4*f10^10/q/f2^2/f5^5/f20^5", prec) + 4 * _e(
        "f2*f20^5/f4/f10^5", prec
    ).shift(2)
    rhs = _e("f2*f5^5/q/f1/f10^5", prec) - 2
    return SeriesPair(lhs, rhs)


def _eq29(params, prec):
    x = k_series(prec)
    z = _e("f4*f10^5/q^2/f2/f20^5", prec)
    rel = x * x * z * z - (1 - 2 * x - x * x) * (1 - x * x) * z + 4 * x * (1 - x * x)
    return SeriesPair(rel, zero(prec))


def _lem26(params, prec):
    lhs = _e("f1^2*f4^2*f10^2/q/f2^2/f5^2/f20^2", prec) - _e(
        "f2^4*f20^2/f4^2/f10^4", prec
    )
    return SeriesPair(lhs, _e("f1^3*f5/q/f2/f10^3", prec))


def _eq213(params, prec):
    a = _e("f1^4*f10^2/f2^2/f5^4", prec)
    b = _e("f2^4*f20^2/f4^2/f10^4", prec)
    rel = a * a + 4 * a * b + b * b - 5 * a - a * b * b
    return SeriesPair(rel, zero(prec))


def _lem27(params, prec):
    inner = _e("f4*f10^12/f1^2/f5^2/f20^5", prec) - 4 * _e(
        "f2^3*f5^3*f20^5/f1^3/f4/f10^3", prec
    ).shift(3)
    rhs = _e("f2^4*f5^12/f1^4/f10^4", prec) + 4 * _e(
        "f2^2*f5^2*f10^6/f1^2", prec
    ).shift(2)
    return SeriesPair(inner * inner, rhs)


def _lem28(params, prec):
    combo = _e("f5^5/f1", prec) + 2 * _e("f10^5/f2", prec).shift(1)
    lhs = (
        -(combo * combo).shift(1)
        + _e("f1^4*f5^4", prec)
        + 9 * _e("f5^10/f1^2", prec).shift(1)
        - 8 * _e("f10^10/f2^2", prec).shift(3)
    )
    rhs = _e("f2^4*f5^12/f1^4/f10^4", prec) + 4 * _e(
        "f2^2*f5^2*f10^6/f1^2", prec
    ).shift(2)
    return SeriesPair(lhs, rhs)


def _eq216(params, prec):
    lhs = (
        _e("f1^9*f5^3/q^3/f2^3/f10^9", prec)
        + 8 * _e("f1^3*f5^9/q^2/f2^3/f10^9", prec)
        - 4 * _e("f1^4*f5^4/q/f2^4/f10^4", prec)
        - 12 * _e("f1^5*f10/f2^5/f5", prec)
    )
    rhs = _e("f1*f2*f5^11/q^3/f10^13", prec) + 4 * _e("f1^3*f5/q/f2/f10^3", prec)
    return SeriesPair(lhs, rhs)


def _prop31(params, prec):
    lhs = _core5_pairs(prec).dissect(2, 0)
    rhs = (
        _e("f1^4*f5^4", prec)
        + 9 * _e("f5^10/f1^2", prec).shift(1)
        - 8 * _e("f10^10/f2^2", prec).shift(3)
    )
    return SeriesPair(lhs, rhs)


def _prop32(params, prec):
    lhs = _e("f1^4*f5^4", prec).shift(-3).dissect(2, 0)
    rhs = -4 * _e("f1^4*f5^4", prec).shift(-1) - 8 * _e("f2^4*f10^4", prec)
    return SeriesPair(lhs, rhs)


def _eq35(params, prec):
    lhs = _core5_pairs(prec).shift(-2).dissect(2, 0)
    rhs = (
        _e("f1^4*f5^4", prec).shift(-1)
        + 9 * _e("f5^10/f1^2", prec)
        - 8 * _e("f10^10/f2^2", prec).shift(2)
    )
    return SeriesPair(lhs, rhs)


def _thm11(params, prec):
    (k,) = params
    if k < 1:
        raise ValueError(f"parameter must be >= 1, got {k}")
    lhs = _core5_pairs(prec)
    for _ in range(k):
        lhs = lhs.shift(-2).dissect(2, 0)
    rhs = (
        b_value(k) * _e("f1^4*f5^4", prec).shift(-1)
        - 8 * b_value(k - 1) * _e("f2^4*f10^4", prec)
        + _exact_div(8 ** (k + 1) - 1, 7) * _e("f5^10/f1^2", prec)
        - _exact_div(8 ** (k + 1) - 8, 7) * _e("f10^10/f2^2", prec).shift(2)
    )
    return SeriesPair(lhs, rhs)


def _thm12(params, prec):
    (k,) = params
    if k < 1:
        raise ValueError(f"parameter must be >= 1, got {k}")
    t5 = _core5_pairs(prec)
    lhs = _progression(t5, 2 ** (k + 1), 3 * 2**k - 2)
    coeff = _exact_div(8 ** (k + 1) - 1, 7) - 9 * b_value(k)
    rhs = b_value(k) * _progression(t5, 4, 4) + coeff * t5.dissect(2, 1)
    return SeriesPair(lhs, rhs, start=0)


def _eq15(params, prec):
    (m,) = params
    if m < 0:
        raise ValueError(f"parameter must be >= 0, got {m}")
    return CongruenceCheck(
        _core5_pairs(prec),
        step=2 ** (4 * m + 4),
        offset=3 * 2 ** (4 * m + 3) - 2,
        modulus=b_closed_form_4m3(m),
    )


def _lem41(params, prec):
    (m,) = params
    if m < 0:
        raise ValueError(f"parameter must be >= 0, got {m}")
    return IntegerPair(b_value(4 * m + 3), b_closed_form_4m3(m))


def _eq41(params, prec):
    (m,) = params
    if m < 0:
        raise ValueError(f"parameter must be >= 0, got {m}")
    lhs = b_value(4 * m + 7) + 64 * b_value(4 * m + 3)
    return IntegerPair(lhs, 5 * _exact_div(8 ** (4 * m + 6) - 1, 7))


# -- the catalog -----------------------------------------------------------


def _entry(name, kind, statement, builder, arity=0, sweep=((),)):
    return Identity(name, kind, statement, arity, tuple(sweep), builder)


def _sweep(lo, hi):
    return tuple((k,) for k in range(lo, hi + 1))


CATALOG: dict[str, Identity] = {
    e.name: e
    for e in [
        _entry(
            "P-CONG-5",
            "congruence",
            "p(5n+4) == 0 mod 5",
            _partition_congruence(5, 4, 5),
        ),
        _entry(
            "P-CONG-7",
            "congruence",
            "p(7n+5) == 0 mod 7",
            _partition_congruence(7, 5, 7),
        ),
        _entry(
            "P-CONG-11",
            "congruence",
            "p(11n+6) == 0 mod 11",
            _partition_congruence(11, 6, 11),
        ),
        _entry("EQ1.1a", "coefficient-identity", "a3(4n+1) = a3(n)", _eq11a),
        _entry(
            "EQ1.1b",
            "coefficient-identity",
            "a5(4n+3) = a5(2n+1) + 2*a5(n)",
            _eq11b,
        ),
        _entry(
            "EQ1.2",
            "coefficient-identity",
            "A3(2^(2k+1)*n + (5*2^(2k)-2)/3) = (2^(2k+1)-1)*A3(2n+1)",
            _eq12,
            arity=1,
            sweep=_sweep(0, 8),
        ),
        _entry(
            "EQ2.1",
            "series-identity",
            "f1^4 = f4^10/(f2^2*f8^4) - 4*q*f2^2*f8^4/f4^2",
            _eq21,
        ),
        _entry(
            "EQ2.2",
            "series-identity",
            "f5/f1 = f8*f20^2/(f2^2*f40) + q*f4^3*f10*f40/(f2^3*f8*f20)",
            _eq22,
        ),
        _entry(
            "EQ2.3",
            "series-identity",
            "f2*f5^5/(q*f1*f10^5) = 1/K - K  with K the level-10 parameter",
            _eq23,
        ),
        _entry(
            "EQ2.4",
            "series-identity",
            "f2^4*f5^2/(q*f1^2*f10^4) = 1/K + 1 - K",
            _eq24,
        ),
        _entry(
            "EQ2.5",
            "series-identity",
            "f1^3*f5/(q*f2*f10^3) = 1/K - 4 - K",
            _eq25,
        ),
        _entry(
            "LEM2.3",
            "series-identity",
            "X^2 - Y + 2XY + X^2*Y + Y^2 = 0  with X = K(q), Y = K(q^2)",
            _lem23,
        ),
        _entry(
            "LEM2.4",
            "series-identity",
            "f2^3*f10^9/(f1^3*f4*f5*f20^3) - 4*q^2*f4*f5^2*f20^3/f1^2"
            " = f5^5/f1 + 2*q*f10^5/f2",
            _lem24,
        ),
        _entry(
            "LEM2.5",
            "series-identity",
            "f4*f10^12/(f1^2*f5^2*f20^5) + 4*q^3*f2^3*f5^3*f20^5/(f1^3*f4*f10^3)"
            " = f2^3*f5^8/(f1^4*f10^3) - 2*q*f2^2*f5^3*f10^2/f1^3",
            _lem25,
        ),
        _entry(
            "EQ2.6",
            "series-identity",
            "f1*f4*f10^10/(q*f2^2*f5^5*f20^5) + 4*q^2*f2*f20^5/(f4*f10^5)"
            " = f2*f5^5/(q*f1*f10^5) - 2",
            _eq26,
        ),
        _entry(
            "EQ2.9",
            "series-identity",
            "X^2*Z^2 - (1-2X-X^2)(1-X^2)*Z + 4X(1-X^2) = 0"
            "  with Z = f4*f10^5/(q^2*f2*f20^5)",
            _eq29,
        ),
        _entry(
            "LEM2.6",
            "series-identity",
            "f1^2*f4^2*f10^2/(q*f2^2*f5^2*f20^2) - f2^4*f20^2/(f4^2*f10^4)"
            " = f1^3*f5/(q*f2*f10^3)",
            _lem26,
        ),
        _entry(
            "EQ2.13",
            "series-identity",
            "A^2 + 4AB + B^2 - 5A - A*B^2 = 0  with A = f1^4*f10^2/(f2^2*f5^4)"
            " and B its q -> q^2 image",
            _eq213,
        ),
        _entry(
            "LEM2.7",
            "series-identity",
            "(f4*f10^12/(f1^2*f5^2*f20^5) - 4*q^3*f2^3*f5^3*f20^5/(f1^3*f4*f10^3))^2"
            " = f2^4*f5^12/(f1^4*f10^4) + 4*q^2*f2^2*f5^2*f10^6/f1^2",
            _lem27,
        ),
        _entry(
            "LEM2.8",
            "series-identity",
            "-q*(f5^5/f1 + 2*q*f10^5/f2)^2 + f1^4*f5^4 + 9*q*f5^10/f1^2"
            " - 8*q^3*f10^10/f2^2 = f2^4*f5^12/(f1^4*f10^4) + 4*q^2*f2^2*f5^2*f10^6/f1^2",
            _lem28,
        ),
        _entry(
            "EQ2.16",
            "series-identity",
            "f1^9*f5^3/(q^3*f2^3*f10^9) + 8*f1^3*f5^9/(q^2*f2^3*f10^9)"
            " - 4*f1^4*f5^4/(q*f2^4*f10^4) - 12*f1^5*f10/(f2^5*f5)"
            " = f1*f2*f5^11/(q^3*f10^13) + 4*f1^3*f5/(q*f2*f10^3)",
            _eq216,
        ),
        _entry(
            "PROP3.1",
            "series-identity",
            "sum A5(2n) q^n = f1^4*f5^4 + 9*q*f5^10/f1^2 - 8*q^3*f10^10/f2^2",
            _prop31,
        ),
        _entry(
            "PROP3.2",
            "series-identity",
            "even part of q^-3*f1^4*f5^4 = -4*f1^4*f5^4/q - 8*f2^4*f10^4",
            _prop32,
        ),
        _entry(
            "EQ3.5",
            "series-identity",
            "sum A5(2n+2) q^n (n >= -1) = f1^4*f5^4/q + 9*f5^10/f1^2 - 8*q^2*f10^10/f2^2",
            _eq35,
        ),
        _entry(
            "THM1.1",
            "series-identity",
            "sum A5(2^k*n + 2^(k+1)-2) q^n (n >= -1) = B_k*f1^4*f5^4/q"
            " - 8*B_(k-1)*f2^4*f10^4 + (8^(k+1)-1)/7*f5^10/f1^2"
            " - (8^(k+1)-8)/7*q^2*f10^10/f2^2",
            _thm11,
            arity=1,
            sweep=_sweep(1, 8),
        ),
        _entry(
            "THM1.2",
            "coefficient-identity",
            "A5(2^(k+1)*n + 3*2^k - 2) = B_k*A5(4n+4)"
            " + ((8^(k+1)-1)/7 - 9*B_k)*A5(2n+1)  for n >= 0",
            _thm12,
            arity=1,
            sweep=_sweep(1, 8),
        ),
        _entry(
            "EQ1.5",
            "congruence",
            "A5(2^(4m+4)*n + 3*2^(4m+3) - 2) == 0 mod (8^(4m+4)-1)/91",
            _eq15,
            arity=1,
            sweep=_sweep(0, 2),
        ),
        _entry(
            "LEM4.1",
            "integer-identity",
            "B_(4m+3) = (8^(4m+4)-1)/91",
            _lem41,
            arity=1,
            sweep=_sweep(0, 8),
        ),
        _entry(
            "EQ4.1",
            "integer-identity",
            "B_(4m+7) + 64*B_(4m+3) = 5*(8^(4m+6)-1)/7",
            _eq41,
            arity=1,
            sweep=_sweep(0, 6),
        ),
    ]
}


def build(name: str, params: tuple[int, ...], prec: int) -> Built:
    """Construct the check payload for a named entry at the given precision."""
    if name not in CATALOG:
        raise KeyError(f"unknown identity {name!r}")
    return CATALOG[name].build(tuple(params), prec)
