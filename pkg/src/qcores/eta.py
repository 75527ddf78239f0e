"""Constructors for the named q-series the identity catalog is built from.

Everything here is a product of factors f_m = prod_{n>=1} (1 - q^(m*n)),
optionally times an integer power of q, except for the level-10 parameter
series which needs its own residue-pattern product.  A tiny expression
grammar ("f5^10/f1^2", "q^-1*f1^4*f5^4") describes such quotients in flags
and requests.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .series import LaurentSeries, one


class ExpressionError(ValueError):
    """Malformed eta-quotient expression; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"position {position}: {message}")
        self.position = position


@dataclass(frozen=True)
class EtaQuotient:
    """Symbolic product q^q_power * prod f_m^e, factors keyed by distinct scales."""

    q_power: int = 0
    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        scales = [m for m, _ in self.factors]
        if any(m < 1 for m in scales):
            raise ValueError(f"factor scales must be >= 1: {scales}")
        if len(set(scales)) != len(scales):
            raise ValueError(f"factor scales must be distinct: {scales}")

    def __str__(self) -> str:
        parts = []
        if self.q_power != 0:
            parts.append("q" if self.q_power == 1 else f"q^{self.q_power}")
        for m, e in self.factors:
            parts.append(f"f{m}" if e == 1 else f"f{m}^{e}")
        return "*".join(parts) if parts else "1"


@lru_cache(maxsize=None)
def euler_f1(prec: int) -> LaurentSeries:
    """f_1 below prec via the pentagonal number expansion."""
    if prec < 1:
        raise ValueError(f"precision must be >= 1, got {prec}")
    coeffs = {}
    k = 1
    coeffs[0] = 1
    while True:
        e1 = k * (3 * k - 1) // 2
        e2 = k * (3 * k + 1) // 2
        if e1 >= prec and e2 >= prec:
            break
        sign = -1 if k % 2 else 1
        if e1 < prec:
            coeffs[e1] = sign
        if e2 < prec:
            coeffs[e2] = sign
        k += 1
    return LaurentSeries(coeffs, prec)


@lru_cache(maxsize=None)
def _factor_power(m: int, e: int, prec: int) -> LaurentSeries:
    """f_m^e exact below at least prec (often a little further)."""
    fm = euler_f1(-(-prec // m)).substitute(m)
    return fm**e


def expand(eq: EtaQuotient, prec: int) -> LaurentSeries:
    """Multiply out an eta quotient; the q-prefactor shifts precision exactly."""
    s = one(prec)
    for m, e in eq.factors:
        if e:
            s = s * _factor_power(m, e, prec)
    return s.shift(eq.q_power)


@lru_cache(maxsize=None)
def k_series(prec: int) -> LaurentSeries:
    """The weight-0 level-10 parameter: q times the residue-pattern product
    over (1-q^j) with j = 1,2,8,9 mod 10 upstairs and j = 3,4,6,7 mod 10
    downstairs.  Leading term is q.
    """
    if prec < 2:
        raise ValueError(f"precision must be >= 2, got {prec}")
    n = prec - 1  # unit-part precision before the q shift
    c = [0] * n
    c[0] = 1
    for j in range(1, n):
        r = j % 10
        if r in (1, 2, 8, 9):
            for i in range(n - 1, j - 1, -1):
                c[i] -= c[i - j]
        elif r in (3, 4, 6, 7):
            for i in range(j, n):
                c[i] += c[i - j]
    return LaurentSeries({i + 1: v for i, v in enumerate(c) if v}, prec)


def core_series(t: int, pairs: bool, prec: int) -> LaurentSeries:
    """Generating function of t-core partition counts (f_t^t/f_1), or of
    t-core partition pair counts (f_t^2t/f_1^2) when pairs is set."""
    if t < 1:
        raise ValueError(f"core size must be >= 1, got {t}")
    mult = 2 if pairs else 1
    exps = {1: -mult}
    exps[t] = exps.get(t, 0) + mult * t
    factors = tuple(sorted((m, e) for m, e in exps.items() if e))
    return expand(EtaQuotient(0, factors), prec)


# -- expression grammar --------------------------------------------------
#
#   expr := term (("*" | "/") term)*
#   term := "q" ["^" signed-int] | "f" unsigned-int ["^" signed-int]
#
# Whitespace is ignored; "/" divides by the following term only.

_TOKEN = re.compile(
    r"(?P<op>[*/])|(?P<f>f(?P<scale>\d+))|(?P<q>q)|(?P<caret>\^)|(?P<int>-?\d+)"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ExpressionError(f"unexpected character {text[pos]!r}", pos)
        kind = next(k for k in ("op", "f", "q", "caret", "int") if m.group(k) is not None)
        value = m.group("scale") if kind == "f" else m.group(kind)
        tokens.append((kind, value, pos))
        pos = m.end()
    return tokens


def parse_quotient(text: str) -> EtaQuotient:
    """Parse an eta-quotient expression into its symbolic form."""
    tokens = _tokenize(text)
    i = 0
    q_power = 0
    factors: dict[int, int] = {}

    def peek() -> str | None:
        return tokens[i][0] if i < len(tokens) else None

    def term(sign: int):
        nonlocal i, q_power
        if i >= len(tokens):
            raise ExpressionError("expected a term", len(text))
        kind, value, at = tokens[i]
        if kind not in ("f", "q"):
            raise ExpressionError(f"expected 'q' or 'f<scale>', got {value!r}", at)
        i += 1
        exp = 1
        if peek() == "caret":
            i += 1
            if peek() != "int":
                where = tokens[i][2] if i < len(tokens) else len(text)
                raise ExpressionError("expected an integer exponent after '^'", where)
            exp = int(tokens[i][1])
            i += 1
        if kind == "q":
            q_power += sign * exp
        else:
            scale = int(value)
            if scale < 1:
                raise ExpressionError(f"factor scale must be >= 1, got f{scale}", at)
            factors[scale] = factors.get(scale, 0) + sign * exp

    term(1)
    while i < len(tokens):
        kind, value, at = tokens[i]
        if kind != "op":
            raise ExpressionError(f"expected '*' or '/', got {value!r}", at)
        i += 1
        term(1 if value == "*" else -1)
    cleaned = tuple(sorted((m, e) for m, e in factors.items() if e))
    return EtaQuotient(q_power, cleaned)


def expand_expression(text: str, prec: int) -> LaurentSeries:
    """Parse and expand in one step (the service/CLI entry point)."""
    return expand(parse_quotient(text), prec)
