from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symprod.series import (
    Series,
    SeriesDomainError,
    SeriesUsageError,
    binom_pow,
    exp_series,
    first_mismatch,
    geometric,
    log1m,
    product_over_levels,
    specialize,
    substitute,
)

H = Fraction(1, 2)


def S(terms, order=None, var="q"):
    out = Series.zero(var, order)
    for coeff, exps in terms:
        out = out + Series.term(var, order, coeff, exps)
    return out


# ---------------------------------------------------------------- add / mul


def test_add_cancellation():
    a = S([(1, {}), (1, {"q": 1})], 3)
    b = S([(1, {}), (-1, {"q": 1})], 3)
    assert a + b == Series.constant("q", 3, 2)


def test_add_identity():
    s = S([(2, {"q": 1}), (1, {"t": 3, "q": 2})], 5)
    assert s + Series.zero("q", 5) == s


def test_add_hand_expansion():
    a = S([(1, {"q": 1}), (1, {"t": 1, "q": 2})], 2)
    b = S([(1, {"t": 1, "q": 2})], 2)
    assert a + b == S([(1, {"q": 1}), (2, {"t": 1, "q": 2})], 2)


def test_add_mismatched_vars():
    with pytest.raises(SeriesUsageError):
        S([(1, {})], 3, "q") + S([(1, {})], 3, "p")


def test_mul_difference_of_squares():
    a = S([(1, {}), (1, {"q": 1})], 2)
    b = S([(1, {}), (-1, {"q": 1})], 2)
    assert a * b == S([(1, {}), (-1, {"q": 2})], 2)


def test_mul_identity():
    s = S([(3, {"q": 1}), (1, {"x": H, "q": 2})], 4)
    assert s * Series.one("q", 4) == s


def test_mul_hand_expansion():
    a = S([(1, {}), (1, {"t": 1, "q": 1})], 2)
    b = S([(1, {}), (1, {"t": 3, "q": 1})], 2)
    expect = S(
        [(1, {}), (1, {"t": 1, "q": 1}), (1, {"t": 3, "q": 1}),
         (1, {"t": 4, "q": 2})],
        2,
    )
    assert a * b == expect


def test_mul_truncates_at_min_order():
    a = S([(1, {}), (1, {"q": 1})], 5)
    b = S([(1, {}), (1, {"q": 1})], 2)
    assert (a * b).order == 2


# ---------------------------------------------------------------- binom_pow


def test_binom_negative_two():
    # (1-q)^-2 = sum (j+1) q^j
    got = binom_pow("q", 3, -1, {"q": 1}, -2)
    assert got == S([(j + 1, {"q": j}) for j in range(4)], 3)


def test_binom_alpha_zero():
    assert binom_pow("q", 4, 1, {"t": 2, "q": 1}, 0) == Series.one("q", 4)


def test_binom_half_exponent():
    # (1-q^2)^(-1/2) = 1 + q^2/2 + 3q^4/8 + ...
    got = binom_pow("q", 4, -1, {"q": 2}, Fraction(-1, 2))
    assert got == S([(1, {}), (H, {"q": 2}), (Fraction(3, 8), {"q": 4})], 4)


def test_binom_integer_alpha_matches_repeated_mul():
    base = S([(1, {}), (1, {"t": 1, "q": 1})], 5)
    for e in range(4):
        assert binom_pow("q", 5, 1, {"t": 1, "q": 1}, e) == base**e


def test_binom_constant_monomial_rejected():
    with pytest.raises(SeriesUsageError):
        binom_pow("q", 3, -1, {"t": 2}, -1)


# ---------------------------------------------------------------- exp / log


def test_exp_zero():
    assert exp_series(Series.zero("q", 5)) == Series.one("q", 5)


def test_exp_of_scaled_log_matches_binomial():
    got = exp_series(log1m("q", 3, {"q": 1}) * (-2))
    assert got == binom_pow("q", 3, -1, {"q": 1}, -2)


def test_log1m_definition():
    got = log1m("q", 3, {"q": 1})
    assert got == S(
        [(-1, {"q": 1}), (Fraction(-1, 2), {"q": 2}), (Fraction(-1, 3), {"q": 3})],
        3,
    )


def test_exp_log_roundtrip_on_monomials():
    for exps in ({"q": 1}, {"q": 2}, {"t": 1, "q": 1}, {"x": H, "q": 2}):
        lhs = exp_series(log1m("q", 6, exps))
        rhs = Series.one("q", 6) - Series.term("q", 6, 1, exps)
        assert lhs == rhs


def test_exp_rejects_constant_term():
    with pytest.raises(SeriesUsageError):
        exp_series(Series.constant("q", 3, 1))


# ---------------------------------------------------------- product over levels


def test_levels_two_colors():
    got = product_over_levels(
        "q", 3, lambda l: binom_pow("q", 3, -1, {"q": l}, -2)
    )
    assert got == S([(1, {}), (2, {"q": 1}), (5, {"q": 2}), (10, {"q": 3})], 3)


def test_levels_all_one():
    got = product_over_levels("q", 4, lambda l: Series.one("q", 4))
    assert got == Series.one("q", 4)


def test_levels_partition_numbers():
    got = product_over_levels(
        "q", 5, lambda l: binom_pow("q", 5, -1, {"q": l}, -1)
    )
    # independent oracle: partition-count DP
    table = [1] + [0] * 5
    for part in range(1, 6):
        for n in range(part, 6):
            table[n] += table[n - part]
    assert got == S([(table[n], {"q": n}) for n in range(6)], 5)


def test_levels_reject_bad_constant():
    with pytest.raises(SeriesUsageError):
        product_over_levels(
            "q", 3, lambda l: Series.constant("q", 3, 2)
        )


def test_levels_reject_low_order_terms():
    # every level-l factor must be 1 + O(q^l)
    with pytest.raises(SeriesUsageError):
        product_over_levels(
            "q", 3, lambda l: binom_pow("q", 3, -1, {"q": 1}, -1)
        )


# ---------------------------------------------------------------- substitute


def test_substitute_plain_variable():
    s = S([(1, {}), (1, {"t": 1, "q": 1})], 3)
    assert substitute(s, "t", {"t": 2}) == S([(1, {}), (1, {"t": 2, "q": 1})], 3)


def test_substitute_to_one():
    s = S([(1, {}), (1, {"x": 1, "q": 1})], 3)
    assert substitute(s, "x", {}) == S([(1, {}), (1, {"q": 1})], 3)


def test_substitute_counting_variable_moves_truncation():
    # q -> y^(-1/2) p turns a q-series into a p-series with y-Laurent tails
    s = S([(1, {}), (1, {"y": 1, "q": 1}), (2, {"q": 2})], 2)
    got = substitute(s, "q", {"y": -H, "p": 1})
    assert got.var == "p"
    assert got == S(
        [(1, {}), (1, {"y": H, "p": 1}), (2, {"y": -1, "p": 2})], 2, var="p"
    )


def test_substitute_counting_variable_scaling():
    s = S([(1, {}), (1, {"q": 1})], 2)
    got = substitute(s, "q", {"q": 2})
    assert got.order == 4
    assert got == S([(1, {}), (1, {"q": 2})], 4)


def test_substitute_rejects_vanishing_counting_var():
    s = S([(1, {"q": 1})], 2)
    with pytest.raises(SeriesUsageError):
        substitute(s, "q", {"t": 1})


def test_substitute_rejects_quarter_exponents():
    s = S([(1, {"x": H, "q": 1})], 2)
    with pytest.raises(SeriesDomainError):
        substitute(s, "x", {"x": H})


# ---------------------------------------------------------------- specialize


def test_specialize_signs():
    s = S([(1, {}), (1, {"x": 1, "y": 1, "q": 1})], 2)
    assert specialize(s, {"x": -1, "y": -1}) == S([(1, {}), (1, {"q": 1})], 2)


def test_specialize_half_exponent_negative_base_rejected():
    s = S([(1, {}), (1, {"x": H, "q": 1})], 2)
    with pytest.raises(SeriesDomainError):
        specialize(s, {"x": -1})


def test_specialize_half_exponent_at_one():
    s = S([(1, {}), (3, {"x": H, "q": 1})], 2)
    assert specialize(s, {"x": 1}) == S([(1, {}), (3, {"q": 1})], 2)


def test_specialize_zero_kills_positive_powers():
    s = S([(1, {}), (1, {"y": 1, "q": 1}), (1, {"q": 2})], 2)
    assert specialize(s, {"y": 0}) == S([(1, {}), (1, {"q": 2})], 2)


def test_specialize_counting_variable_rejected():
    with pytest.raises(SeriesUsageError):
        specialize(S([(1, {"q": 1})], 2), {"q": 1})


def test_substitute_specialize_commute_on_disjoint_vars():
    s = S([(1, {"t": 1, "x": 2, "q": 1}), (2, {"x": 1, "q": 2})], 3)
    a = specialize(substitute(s, "t", {"t": 3}), {"x": -1})
    b = substitute(specialize(s, {"x": -1}), "t", {"t": 3})
    assert a == b


# ---------------------------------------------------------------- rendering


def test_render_canonical_example():
    s = S([(1, {}), (2, {"q": 1}), (1, {"t": Fraction(3, 2), "q": 2})], 2)
    assert str(s) == "1 + 2*q + t^(3/2)*q^2"


def test_render_negative_and_fraction():
    s = S([(1, {}), (-1, {"q": 2}), (H, {"t": 1, "q": 3})], 3)
    assert str(s) == "1 - q^2 + 1/2*t*q^3"


def test_render_zero_and_laurent():
    assert str(Series.zero("q", 2)) == "0"
    s = S([(1, {"y": -2, "p": 1})], 2, var="p")
    assert str(s) == "y^(-2)*p"


def test_first_mismatch_reports_lowest_term():
    a = S([(1, {}), (2, {"q": 1})], 2)
    b = S([(1, {}), (3, {"q": 1}), (1, {"q": 2})], 2)
    key, ca, cb = first_mismatch(a, b)
    assert (ca, cb) == (2, 3)


def test_geometric_tail():
    assert geometric("q", 4, {"q": 2}) == S([(1, {"q": 2}), (1, {"q": 4})], 4)


# ------------------------------------------------------------- ring laws (pbt)

coeffs = st.integers(min_value=-4, max_value=4).map(Fraction)


@st.composite
def small_series(draw):
    n = draw(st.integers(min_value=0, max_value=4))
    terms = []
    for _ in range(n):
        c = draw(coeffs)
        qe = draw(st.integers(min_value=0, max_value=3))
        t2 = draw(st.integers(min_value=-2, max_value=4))
        terms.append((c, {"q": qe, "t": Fraction(t2, 2)}))
    return S(terms, 3)


@settings(max_examples=60, deadline=None)
@given(small_series(), small_series(), small_series())
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=30, deadline=None)
@given(small_series())
def test_additive_inverse(a):
    assert a + (-a) == Series.zero("q", 3)
