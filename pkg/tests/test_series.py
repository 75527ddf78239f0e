import functools

import pytest
from hypothesis import assume, given, settings, strategies as st

from qcores.series import (
    LaurentSeries,
    NonUnitError,
    PrecisionError,
    VacuousComparisonError,
    compare,
    monomial,
    one,
    zero,
)

# f_1 terms below exponent 8, used as a fixed small unit series
F1_8 = LaurentSeries({0: 1, 1: -1, 2: -1, 5: 1, 7: 1}, 8)


# -- constructors ----------------------------------------------------------


def test_monomial_identity_element():
    s = monomial(0, 1, 50)
    assert s.terms() == [(0, 1)]
    assert s.prec == 50


def test_monomial_negative_exponent():
    s = monomial(-1, 3, 10)
    assert s.terms() == [(-1, 3)]
    assert s.order == -1


def test_monomial_zero_coefficient_dropped():
    s = monomial(5, 0, 20)
    assert s.is_zero
    assert s.prec == 20


def test_monomial_exponent_must_be_below_prec():
    with pytest.raises(PrecisionError):
        monomial(7, 1, 7)


def test_construction_rejects_terms_at_precision():
    with pytest.raises(PrecisionError):
        LaurentSeries({3: 1}, 3)


# -- add / sub / negate / scale --------------------------------------------


def test_add_cancellation():
    s = (one(10) + monomial(1, 1, 10)) + (one(10) - monomial(1, 1, 10))
    assert s.terms() == [(0, 2)]


def test_additive_inverse():
    assert (F1_8 + (-F1_8)).is_zero


def test_add_precision_is_min():
    a = LaurentSeries({-1: 1, 0: 1}, 5)
    # a q^3 term cannot exist below precision 3, so it falls away entirely
    b = monomial(3, 1, 4).truncate(3)
    s = a + b
    assert s.terms() == [(-1, 1), (0, 1)]
    assert s.prec == 3
    kept = a + monomial(3, 1, 4)
    assert kept.prec == 4
    assert kept.coefficient(3) == 1


def test_int_scaling_and_coercion():
    s = 3 * F1_8 - F1_8 - F1_8 - F1_8
    assert s.is_zero
    assert (F1_8 - 1).coefficient(0) == 0


# -- mul --------------------------------------------------------------------


def test_mul_geometric_inverse():
    geom = LaurentSeries({n: 1 for n in range(12)}, 12)
    prod = (one(12) - monomial(1, 1, 12)) * geom
    assert prod.terms() == [(0, 1)]


def test_mul_f1_squared():
    sq = F1_8 * F1_8
    assert sq.prec == 8
    assert [sq.coefficient(n) for n in range(7)] == [1, -2, -1, 2, 1, 2, -2]


def test_mul_exponent_addition():
    assert (monomial(-1, 1, 9) * monomial(1, 1, 9)).terms() == [(0, 1)]


def test_mul_precision_rule_with_shifted_factor():
    a = monomial(2, 1, 10)  # ord 2
    b = one(6)
    assert (a * b).prec == min(10 + 0, 6 + 2)


def test_mul_by_zero_bounds_precision():
    prod = zero(5) * F1_8
    assert prod.is_zero
    assert prod.prec == 5


# -- invert ------------------------------------------------------------------


def test_invert_partition_numbers():
    # coefficients of 1/f_1 count partitions
    f1 = LaurentSeries({0: 1, 1: -1, 2: -1, 5: 1, 7: 1, 12: -1}, 13)
    inv = f1.invert()
    assert [inv.coefficient(n) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_invert_one():
    assert one(9).invert() == one(9)


def test_invert_laurent_shift_rule():
    a = (one(10) - monomial(1, 1, 10)).shift(2)  # q^2*(1-q), prec 12
    b = a.invert()
    assert b.prec == a.prec - 4
    assert b.terms()[:4] == [(-2, 1), (-1, 1), (0, 1), (1, 1)]
    assert (a * b).terms() == [(0, 1)]


def test_invert_rejects_zero_and_non_units():
    with pytest.raises(NonUnitError):
        zero(5).invert()
    with pytest.raises(NonUnitError):
        monomial(0, 2, 5).invert()


# -- pow ----------------------------------------------------------------------


def test_pow_zero_is_one():
    assert (F1_8**0).terms() == [(0, 1)]


def test_pow_fourth_power():
    f1 = LaurentSeries({0: 1, 1: -1, 2: -1, 5: 1, 7: 1}, 8)
    p4 = f1**4
    assert [p4.coefficient(n) for n in range(6)] == [1, -4, 2, 8, -5, -4]


def test_pow_binomial_with_negative_exponents():
    s = (monomial(-1, 1, 5) + one(5)) ** 2
    assert s.terms() == [(-2, 1), (-1, 2), (0, 1)]


def test_pow_negative_uses_inverse():
    f1 = LaurentSeries({0: 1, 1: -1, 2: -1, 5: 1, 7: 1}, 8)
    out = compare(f1**-2, f1.invert() * f1.invert())
    assert out.equal


# -- substitute / dissect / shift ---------------------------------------------


def test_substitute_simple():
    assert (one(4) + monomial(1, 1, 4)).substitute(2).terms() == [(0, 1), (2, 1)]


def test_substitute_precision_and_negative_exponents():
    s = monomial(-1, 1, 3).substitute(3)
    assert s.terms() == [(-3, 1)]
    assert s.prec == 9


def test_substitute_rejects_nonpositive():
    with pytest.raises(ValueError):
        one(4).substitute(0)


def test_dissect_direct_selection():
    s = LaurentSeries({0: 1, 1: 2, 2: 3, 3: 4}, 4)
    assert s.dissect(2, 1).terms() == [(0, 2), (1, 4)]


def test_dissect_laurent_reindexing():
    s = LaurentSeries({-1: 1, 0: 1, 1: 1}, 2)
    assert s.dissect(2, 1).terms() == [(-1, 1), (0, 1)]


def test_dissect_residue_out_of_range():
    with pytest.raises(ValueError):
        one(5).dissect(2, 2)
    with pytest.raises(ValueError):
        one(5).dissect(2, -1)


def test_shift_is_exact():
    s = F1_8.shift(-3)
    assert s.prec == 5
    assert s.order == -3
    assert s.shift(3) == F1_8


# -- coefficient / compare ------------------------------------------------------


def test_coefficient_contract():
    assert F1_8.coefficient(0) == 1
    assert F1_8.coefficient(3) == 0
    with pytest.raises(PrecisionError):
        zero(10).coefficient(20)


def test_compare_equal_and_mismatch():
    assert compare(F1_8, F1_8).equal
    out = compare(one(5) + monomial(1, 1, 5), one(5) - monomial(1, 1, 5))
    assert not out.equal
    assert out.mismatch == (1, 1, -1)


def test_compare_vacuous():
    with pytest.raises(VacuousComparisonError):
        compare(zero(0), zero(3))
    with pytest.raises(VacuousComparisonError):
        compare(monomial(-1, 1, 0), monomial(-1, 1, 0), start=0)


# -- randomized ring laws ---------------------------------------------------


coeff_st = st.integers(min_value=-9, max_value=9)


@st.composite
def series_at(draw, prec: int, min_exp: int = -5):
    exps = draw(st.lists(st.integers(min_exp, prec - 1), max_size=6, unique=True))
    return LaurentSeries({e: draw(coeff_st) for e in exps}, prec)


@st.composite
def matched(draw, n: int):
    prec = draw(st.integers(1, 12))
    return tuple(draw(series_at(prec)) for _ in range(n))


def _semantically_equal(a, b):
    try:
        return compare(a, b).equal
    except VacuousComparisonError:
        assume(False)


@given(matched(2))
def test_add_commutative(pair):
    a, b = pair
    assert a + b == b + a


@given(matched(3))
def test_add_associative(trio):
    a, b, c = trio
    assert (a + b) + c == a + (b + c)


@given(matched(2))
def test_mul_commutative(pair):
    a, b = pair
    assert a * b == b * a


@settings(deadline=None)
@given(matched(3))
def test_mul_associative(trio):
    a, b, c = trio
    assert _semantically_equal((a * b) * c, a * (b * c))


@settings(deadline=None)
@given(matched(3))
def test_mul_distributes_over_add(trio):
    a, b, c = trio
    assert _semantically_equal(a * (b + c), a * b + a * c)


@settings(deadline=None)
@given(st.data())
def test_invert_round_trip(data):
    prec = data.draw(st.integers(2, 12))
    base = data.draw(series_at(prec))
    v = data.draw(st.integers(-3, 0))
    lead = data.draw(st.sampled_from([1, -1]))
    terms = {e: c for e, c in base.terms() if e > v}
    terms[v] = lead
    a = LaurentSeries(terms, prec)
    prod = a * a.invert()
    assume(prod.prec >= 1)
    assert compare(prod, one(prod.prec)).equal


@settings(deadline=None)
@given(st.data())
def test_dissection_reconstruction(data):
    prec = data.draw(st.integers(1, 14))
    a = data.draw(series_at(prec))
    r = data.draw(st.integers(1, 4))
    parts = [a.dissect(r, s).substitute(r).shift(s) for s in range(r)]
    recon = functools.reduce(lambda x, y: x + y, parts)
    assert recon.prec >= a.prec
    assert _semantically_equal(recon, a)


@settings(deadline=None)
@given(st.data())
def test_precision_soundness_under_refinement(data):
    """Recomputing with more-precise inputs never changes a coefficient
    below the coarser run's claimed precision."""
    prec = data.draw(st.integers(1, 10))
    extra = data.draw(st.integers(1, 5))
    a_lo = data.draw(series_at(prec))
    b_lo = data.draw(series_at(prec))

    def refine(s):
        terms = dict(s.terms())
        for e in data.draw(
            st.lists(st.integers(prec, prec + extra - 1), max_size=3, unique=True)
        ):
            terms[e] = data.draw(coeff_st)
        return LaurentSeries(terms, prec + extra)

    coarse = a_lo * b_lo
    fine = refine(a_lo) * refine(b_lo)
    assert fine.prec >= coarse.prec
    assert _semantically_equal(coarse, fine)
