"""Truncated formal Laurent series over arbitrary-precision integers.

A series carries an explicit exclusive precision bound ``prec``: every
coefficient at an exponent strictly below ``prec`` is exact, everything at or
above it is unknown.  Exponents may be negative.  All arithmetic tracks how
the precision bound propagates, so the order to which any derived identity is
actually checked can be audited after the fact.

Values are immutable; every operation returns a new series.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class SeriesError(Exception):
    """Base class for series-domain failures."""


class PrecisionError(SeriesError):
    """An exponent at or above the precision bound was used."""


class NonUnitError(SeriesError):
    """Inversion of a series whose leading coefficient is not +1 or -1."""


class VacuousComparisonError(SeriesError):
    """A comparison whose comparable exponent range is empty."""


@dataclass(frozen=True)
class EqualityOutcome:
    """Result of comparing two series over their common exact range.

    ``order`` is the common precision bound, ``start`` the first exponent
    examined and ``checked`` how many coefficients were examined before the
    comparison ended (all of them when ``equal``).  ``mismatch`` holds the
    lowest disagreeing exponent with both coefficients, or ``None``.
    """

    equal: bool
    order: int
    start: int
    checked: int
    mismatch: tuple[int, int, int] | None = None


class LaurentSeries:
    """Finitely many (exponent, coefficient) terms plus a precision bound.

    Invariants: stored coefficients are nonzero, exponents are distinct and
    strictly below ``prec``.
    """

    __slots__ = ("prec", "_coeffs")

    def __init__(self, coeffs: dict[int, int] | Iterable[tuple[int, int]], prec: int):
        data = dict(coeffs)
        for e in list(data):
            if data[e] == 0:
                del data[e]
            elif e >= prec:
                raise PrecisionError(f"term q^{e} at or above precision bound {prec}")
        self.prec = prec
        self._coeffs = data

    # -- introspection -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def order(self) -> int | None:
        """Least exponent with nonzero coefficient, or None for the zero series."""
        return min(self._coeffs) if self._coeffs else None

    def terms(self) -> list[tuple[int, int]]:
        """All stored terms, exponents ascending."""
        return sorted(self._coeffs.items())

    def coefficient(self, n: int) -> int:
        """Exact coefficient of q^n.  Raises above the precision bound."""
        if n >= self.prec:
            raise PrecisionError(
                f"coefficient of q^{n} requested but series only known below q^{self.prec}"
            )
        return self._coeffs.get(n, 0)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.terms())

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.prec == other.prec and self._coeffs == other._coeffs

    __hash__ = None  # mutable mapping inside; use compare() for semantic equality

    def __repr__(self) -> str:
        shown = self.terms()[:8]
        body = " + ".join(f"{c}*q^{e}" for e, c in shown) or "0"
        if len(self._coeffs) > 8:
            body += " + ..."
        return f"<{body} + O(q^{self.prec})>"

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> "LaurentSeries":
        if isinstance(other, LaurentSeries):
            return other
        if isinstance(other, int):
            return monomial(0, other, self.prec)
        raise TypeError(f"cannot combine LaurentSeries with {type(other).__name__}")

    def __add__(self, other) -> "LaurentSeries":
        other = self._coerce(other)
        prec = min(self.prec, other.prec)
        out = {e: c for e, c in self._coeffs.items() if e < prec}
        for e, c in other._coeffs.items():
            if e < prec:
                out[e] = out.get(e, 0) + c
        return LaurentSeries(out, prec)

    __radd__ = __add__

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries({e: -c for e, c in self._coeffs.items()}, self.prec)

    def __sub__(self, other) -> "LaurentSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentSeries":
        return (-self) + self._coerce(other)

    def __mul__(self, other) -> "LaurentSeries":
        if isinstance(other, int):
            return LaurentSeries(
                {e: c * other for e, c in self._coeffs.items()}, self.prec
            )
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        # Cauchy product.  Precision rule: the zero series contributes
        # order 0, so a vanishing factor still bounds the result.
        oa = self.order if self._coeffs else 0
        ob = other.order if other._coeffs else 0
        prec = min(self.prec + ob, other.prec + oa)
        out: dict[int, int] = {}
        bterms = other.terms()
        for ea, ca in self._coeffs.items():
            limit = prec - ea
            for eb, cb in bterms:
                if eb >= limit:
                    break
                e = ea + eb
                out[e] = out.get(e, 0) + ca * cb
        return LaurentSeries(out, prec)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "LaurentSeries":
        if not isinstance(e, int):
            raise TypeError("series exponent must be an integer")
        if e < 0:
            return self.invert() ** (-e)
        if e == 0:
            return monomial(0, 1, self.prec)
        base, acc = self, None
        while e:
            if e & 1:
                acc = base if acc is None else acc * base
            e >>= 1
            if e:
                base = base * base
        return acc

    def invert(self) -> "LaurentSeries":
        """Multiplicative inverse of a unit (leading coefficient +1 or -1).

        For a = q^v * u with u a unit power series exact to order prec - v,
        the inverse is exact below prec - 2v.
        """
        if not self._coeffs:
            raise NonUnitError("the zero series is not invertible")
        v = self.order
        lead = self._coeffs[v]
        if lead not in (1, -1):
            raise NonUnitError(
                f"leading coefficient {lead} is not a unit over the integers"
            )
        res_prec = self.prec - 2 * v
        # u = lead * q^-v * a has constant term 1 and is exact below prec - v;
        # invert it by the triangular recurrence, then shift and re-sign.
        u = sorted((e - v, lead * c) for e, c in self._coeffs.items() if e != v)
        n_known = self.prec - v
        w = [0] * max(n_known, 0)
        if n_known > 0:
            w[0] = 1
            for n in range(1, n_known):
                s = 0
                for k, uk in u:
                    if k > n:
                        break
                    s += uk * w[n - k]
                w[n] = -s
        out = {i - v: lead * wi for i, wi in enumerate(w) if wi}
        return LaurentSeries(out, res_prec)

    def shift(self, j: int) -> "LaurentSeries":
        """Multiply by the exact monomial q^j (pure exponent reindexing)."""
        return LaurentSeries(
            {e + j: c for e, c in self._coeffs.items()}, self.prec + j
        )

    def substitute(self, m: int) -> "LaurentSeries":
        """Replace q by q^m (m >= 1); all new non-multiple exponents are exactly 0."""
        if m < 1:
            raise ValueError(f"substitution power must be >= 1, got {m}")
        return LaurentSeries(
            {e * m: c for e, c in self._coeffs.items()}, self.prec * m
        )

    def dissect(self, r: int, s: int) -> "LaurentSeries":
        """Extract the coefficients along exponents r*n + s and reindex by n.

        Returns sum of c(r*n+s) q^n over every integer n reachable from the
        stored range, with precision ceil((prec - s) / r).
        """
        if r < 1:
            raise ValueError(f"dissection modulus must be >= 1, got {r}")
        if not 0 <= s < r:
            raise ValueError(f"residue {s} outside [0, {r})")
        prec = -((s - self.prec) // r)  # ceil((prec - s) / r)
        out = {}
        for e, c in self._coeffs.items():
            if (e - s) % r == 0:
                out[(e - s) // r] = c
        return LaurentSeries(out, prec)

    def truncate(self, prec: int) -> "LaurentSeries":
        """Forget everything at or above ``prec`` (must not exceed current prec)."""
        if prec > self.prec:
            raise PrecisionError(
                f"cannot extend precision from {self.prec} to {prec} by truncation"
            )
        return LaurentSeries(
            {e: c for e, c in self._coeffs.items() if e < prec}, prec
        )


def monomial(exp: int, coeff: int, prec: int) -> LaurentSeries:
    """Single-term series coeff * q^exp + O(q^prec); zero coeff gives the zero series."""
    if exp >= prec:
        raise PrecisionError(f"monomial exponent {exp} at or above precision {prec}")
    return LaurentSeries({exp: coeff} if coeff else {}, prec)


def zero(prec: int) -> LaurentSeries:
    return LaurentSeries({}, prec)


def one(prec: int) -> LaurentSeries:
    return monomial(0, 1, prec)


def compare(a: LaurentSeries, b: LaurentSeries, start: int | None = None) -> EqualityOutcome:
    """Compare coefficients over the common exact range, lowest exponent first.

    The examined range begins at the least stored exponent of either side
    (0 when both are zero, mirroring the multiplication rule) or at ``start``
    if that is higher, and ends below the smaller precision bound.  An empty
    range raises VacuousComparisonError rather than reporting a hollow pass.
    """
    prec = min(a.prec, b.prec)
    lows = [s.order for s in (a, b) if s.order is not None]
    lo = min(lows) if lows else 0
    if start is not None:
        lo = max(lo, start)
    if prec <= lo:
        raise VacuousComparisonError(
            f"nothing comparable: common precision {prec} does not exceed first exponent {lo}"
        )
    checked = 0
    for e in range(lo, prec):
        checked += 1
        ca, cb = a.coefficient(e), b.coefficient(e)
        if ca != cb:
            return EqualityOutcome(False, prec, lo, checked, (e, ca, cb))
    return EqualityOutcome(True, prec, lo, checked)
