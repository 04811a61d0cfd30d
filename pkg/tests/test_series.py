import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partcolor.series import (
    BINOMIAL,
    RECIPROCAL,
    TruncatedSeries,
    apply_binomial_factor,
    apply_geometric_factor,
    coeff,
    euler_product,
    linear_combination,
    one,
    scale_exact,
)


def s(*coeffs):
    return TruncatedSeries(tuple(coeffs))


class TestOne:
    def test_basic(self):
        assert one(3).coeffs == (1, 0, 0, 0)

    def test_order_zero(self):
        assert one(0).coeffs == (1,)

    def test_top_coefficient_is_zero(self):
        assert coeff(one(5), 5) == 0

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            one(-1)


class TestCoeff:
    def test_constant(self):
        assert coeff(one(5), 0) == 1

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            coeff(one(3), 4)
        with pytest.raises(IndexError):
            coeff(one(3), -1)


class TestGeometricFactor:
    def test_geometric_series_in_2x(self):
        assert apply_geometric_factor(one(3), 2, 1).coeffs == (1, 2, 4, 8)

    def test_one_over_one_minus_x_squared(self):
        assert apply_geometric_factor(one(4), 1, 2).coeffs == (1, 0, 1, 0, 1)

    def test_fold_gives_partition_numbers(self):
        out = one(4)
        for j in range(1, 5):
            out = apply_geometric_factor(out, 1, j)
        assert out.coeffs == (1, 1, 2, 3, 5)

    def test_j_past_order_is_identity(self):
        base = s(1, 2, 3)
        assert apply_geometric_factor(base, 7, 5) == base

    def test_j_zero_rejected(self):
        with pytest.raises(ValueError):
            apply_geometric_factor(one(3), 1, 0)


class TestBinomialFactor:
    def test_single_factor(self):
        assert apply_binomial_factor(s(1, 0, 0), 3, 1).coeffs == (1, 3, 0)

    def test_fold_distinct_partition_numbers(self):
        out = one(4)
        for j in range(1, 5):
            out = apply_binomial_factor(out, 1, j)
        assert out.coeffs == (1, 1, 1, 2, 2)

    def test_fold_two_colors(self):
        out = one(3)
        for j in range(1, 4):
            out = apply_binomial_factor(out, 2, j)
        assert out.coeffs == (1, 2, 2, 6)

    def test_j_past_order_is_identity(self):
        base = s(4, 5, 6)
        assert apply_binomial_factor(base, 9, 11) == base


class TestEulerProduct:
    def test_two_colors(self):
        assert euler_product(2, 4, RECIPROCAL).coeffs == (1, 2, 6, 14, 34)

    def test_three_colors(self):
        assert euler_product(3, 3, RECIPROCAL).coeffs == (1, 3, 12, 39)

    def test_zero_weight_collapses_to_one(self):
        assert euler_product(0, 5, RECIPROCAL).coeffs == (1, 0, 0, 0, 0, 0)

    def test_tenth_partition_number(self):
        assert coeff(euler_product(1, 10, RECIPROCAL), 10) == 42

    def test_four_color_coefficient(self):
        assert coeff(euler_product(4, 8, RECIPROCAL), 8) == 94852

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            euler_product(1, 3, "quadratic")


class TestLinearCombination:
    def test_signed_combination(self):
        out = linear_combination([(1, s(1, 2, 6)), (-2, s(1, 1, 2))])
        assert out.coeffs == (-1, 0, 2)

    def test_single_term_identity(self):
        base = s(3, 1, 4)
        assert linear_combination([(1, base)]) == base

    def test_empty_is_zero(self):
        assert linear_combination([]).coeffs == (0,)

    def test_order_mismatch(self):
        with pytest.raises(ValueError, match="order mismatch"):
            linear_combination([(1, s(1, 2)), (1, s(1, 2, 3))])


class TestScaleExact:
    def test_three_halves_prefactor(self):
        out = scale_exact(euler_product(2, 3, RECIPROCAL), 3, 2, start_index=1)
        assert out.coeffs == (1, 3, 9, 21)

    def test_identity_scale(self):
        base = s(5, 7, 9)
        assert scale_exact(base, 1, 1, 0) == base

    def test_non_divisible_reports_index(self):
        with pytest.raises(ValueError, match=r"coeff\[1\]"):
            scale_exact(s(1, 3), 1, 2, start_index=1)

    def test_start_index_skips_constant(self):
        out = scale_exact(s(1, 4, 6), 1, 2, start_index=1)
        assert out.coeffs == (1, 2, 3)

    def test_nonpositive_denominator(self):
        with pytest.raises(ValueError):
            scale_exact(s(1, 2), 1, 0)


small_coeffs = st.lists(st.integers(-50, 50), min_size=1, max_size=24)
weights = st.integers(-6, 6)


@st.composite
def series_and_factor(draw):
    coeffs = draw(small_coeffs)
    base = TruncatedSeries(tuple(coeffs))
    c = draw(weights)
    j = draw(st.integers(1, max(1, base.order)))
    return base, c, j


@given(series_and_factor(), weights, st.integers(1, 20))
def test_factors_commute(base_c_j, c2, j2):
    base, c1, j1 = base_c_j
    for f in (apply_geometric_factor, apply_binomial_factor):
        ab = f(f(base, c1, j1), c2, j2)
        ba = f(f(base, c2, j2), c1, j1)
        assert ab == ba
    # mixed factor kinds commute as well
    gb = apply_binomial_factor(apply_geometric_factor(base, c1, j1), c2, j2)
    bg = apply_geometric_factor(apply_binomial_factor(base, c2, j2), c1, j1)
    assert gb == bg


@given(series_and_factor())
def test_geometric_factor_inverts_exactly(base_c_j):
    base, c, j = base_c_j
    grown = apply_geometric_factor(base, c, j)
    assert apply_binomial_factor(grown, -c, j) == base


@given(series_and_factor())
def test_binomial_factor_inverts_exactly(base_c_j):
    base, c, j = base_c_j
    grown = apply_binomial_factor(base, c, j)
    assert apply_geometric_factor(grown, -c, j) == base


@settings(max_examples=40)
@given(st.integers(-4, 4), st.integers(1, 48), st.sampled_from([RECIPROCAL, BINOMIAL]))
def test_truncation_is_stable(c, n, kind):
    narrow = euler_product(c, n, kind)
    wide = euler_product(c, 2 * n, kind)
    assert wide.coeffs[: n + 1] == narrow.coeffs
