import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from guemoments.asymptotics import (
    QuadratureError,
    TraceVariableSpec as Trace,
    UndefinedCorrelation,
    a_multi,
    a_pair,
    a_pair_sum,
    c_tilde1,
    catalan,
    correlation_limit,
    covariance_limit,
    degree_formula,
    leading_even,
    leading_general,
    mu_multi,
    numeric_semicircle_quadrature,
    semicircle_moment,
    subleading_multi,
    subleading_single,
)
from guemoments.exact import SqrtRational
from guemoments.moments import finite_n_statistics, moment_nu

from oracles import catalan_by_factorials, central_binomial, mu_brute


def test_catalan():
    assert [catalan(n) for n in (0, 3, 10)] == [1, 5, 16796]
    assert all(catalan(n) == catalan_by_factorials(n) for n in range(40))
    with pytest.raises(ValueError):
        catalan(-1)


def test_degree_formula():
    assert degree_formula((2, 2)) == 4
    assert degree_formula((1, 1)) == 1
    assert degree_formula((2, 3, 5)) == 6 == moment_nu((2, 3, 5)).degree()
    with pytest.raises(ValueError):
        degree_formula((1, 2))


def test_leading_even():
    assert leading_even((2,)) == 2
    assert leading_even((3, 3)) == 25 == moment_nu((6, 6)).leading_coeff()
    assert leading_even(()) == 1


class TestPairCoefficients:
    def test_examples(self):
        assert a_pair(0, 0) == 1
        assert a_pair(1, 1) == 12 == moment_nu((3, 3)).leading_coeff()
        assert all(a_pair(0, j) == (2 * j + 1) * catalan(j) for j in range(15))

    @pytest.mark.parametrize("s", range(13))
    def test_closed_form_equals_convolution(self, s):
        for i in range(s + 1):
            assert a_pair(i, s - i) == a_pair_sum(i, s - i)

    def test_against_recursion(self):
        for i in range(4):
            for j in range(4):
                assert a_pair(i, j) == moment_nu((2 * i + 1, 2 * j + 1)).leading_coeff()


class TestMu:
    def test_examples(self):
        assert mu_multi((1, 2)) == Fraction(1, 4)
        assert mu_multi((0, 0, 0, 0)) == 3
        assert mu_multi((1, 1, 1, 1)) == Fraction(1, 3)
        with pytest.raises(ValueError):
            mu_multi((1, 2, 3))

    @given(st.lists(st.integers(0, 5), min_size=0, max_size=6).filter(lambda js: len(js) % 2 == 0))
    def test_matches_brute_force(self, js):
        assert mu_multi(js) == mu_brute(js)

    @given(st.lists(st.integers(0, 4), min_size=2, max_size=6).filter(lambda js: len(js) % 2 == 0),
           st.randoms(use_true_random=False))
    def test_symmetric(self, js, rnd):
        shuffled = list(js)
        rnd.shuffle(shuffled)
        assert mu_multi(js) == mu_multi(shuffled)


class TestAMulti:
    def test_examples(self):
        assert a_multi((0, 0)) == 1
        assert a_multi((0, 0, 0, 0)) == 3
        assert a_multi((1, 1)) == 12

    @given(st.lists(st.integers(0, 4), min_size=0, max_size=8).filter(lambda js: len(js) % 2 == 0))
    def test_two_routes_agree(self, js):
        # a_multi raises if chord-sum and mu routes disagree
        value = a_multi(js)
        assert value == mu_brute(js) * math.prod(
            Fraction(math.factorial(2 * j + 1), math.factorial(j) ** 2) for j in js
        )


def test_leading_general_examples():
    assert leading_general((2,), ()) == 2
    assert leading_general((), (1, 1)) == 12
    assert leading_general((1,), (0, 0)) == 1 == moment_nu((2, 1, 1)).leading_coeff()


def test_showcase_value():
    assert leading_general((5, 21), (7, 21, 23, 31)) == (
        25081904924688737847061935982290890890757044619026344345600000
    )


class TestSubleading:
    def test_single(self):
        assert [subleading_single(i) for i in range(4)] == [0, 0, 1, 10]
        for i in range(2, 8):
            p = moment_nu((2 * i,))
            assert subleading_single(i) == p.coeff(p.degree() - 2)

    def test_c_tilde(self):
        assert c_tilde1(0, 0) == 0
        assert c_tilde1(1, 1) == 2
        assert c_tilde1(2, 5) == c_tilde1(5, 2)
        for i in range(6):
            for j in range(6):
                if i + j:
                    assert c_tilde1(i, j) * (i + j) == i * j * central_binomial(i) * central_binomial(j)

    def test_multi(self):
        assert subleading_multi((2,)) == 1
        assert subleading_multi((1, 1)) == 2
        # a zero index is a bare factor of N and leaves the coefficient alone
        assert subleading_multi((0, 2, 1)) == subleading_multi((2, 1))


class TestCorrelationLimit:
    def test_examples(self):
        lim = correlation_limit(Trace(odds=(0,)), Trace(odds=(1,)))
        assert (lim.case, str(lim.value)) == (2, "sqrt(3)/2")
        lim = correlation_limit(Trace(evens=(1,)), Trace(evens=(2,)))
        assert (lim.case, str(lim.value)) == (5, "2*sqrt(2)/3")
        lim = correlation_limit(Trace(odds=(0,)), Trace(evens=(1,)))
        assert (lim.case, str(lim.value)) == (1, "0")
        assert float(correlation_limit(Trace(evens=(1,)), Trace(evens=(1,)))) == 1.0

    @pytest.mark.parametrize("i", range(6))
    @pytest.mark.parametrize("j", range(6))
    def test_single_trace_closed_forms(self, i, j):
        odd = correlation_limit(Trace(odds=(i,)), Trace(odds=(j,))).value
        assert odd == SqrtRational.ratio((2 * i + 1) * (2 * j + 1), (i + j + 1) ** 2 * (2 * i + 1) * (2 * j + 1))
        if i and j:
            even = correlation_limit(Trace(evens=(i,)), Trace(evens=(j,))).value
            assert even.square == Fraction(4 * i * j, (i + j) ** 2)

    def test_case_three_and_four(self):
        lim = correlation_limit(Trace(odds=(0, 1)), Trace(odds=(1, 2)))
        assert lim.case == 3
        assert correlation_limit(Trace(odds=(0, 1)), Trace(evens=(2,))).case == 4

    def test_zero_evens_are_dropped(self):
        a = correlation_limit(Trace(evens=(0, 1)), Trace(evens=(2, 0, 0)))
        assert a == correlation_limit(Trace(evens=(1,)), Trace(evens=(2,)))

    @pytest.mark.parametrize(
        "f, g",
        [
            (Trace(evens=(0,)), Trace(evens=(1,))),
            (Trace(odds=(0, 1)), Trace(evens=(0,))),
            (Trace(), Trace(odds=(1,))),
        ],
    )
    def test_constant_variable_is_undefined(self, f, g):
        with pytest.raises(UndefinedCorrelation):
            correlation_limit(f, g)

    def test_finite_n_approaches_limit(self):
        f, g = (2, 4), (3, 3)
        lim = float(correlation_limit(Trace(evens=(1, 2)), Trace(odds=(1, 1))))
        assert lim == 0.0
        # mixed parity classes decorrelate only like 1/N
        errs = [abs(finite_n_statistics(f, g, n).correlation_float - lim) for n in (100, 1000, 10000)]
        assert errs[2] < 1e-3
        assert all(8 < a / b < 12 for a, b in zip(errs, errs[1:]))


class TestCovarianceLimit:
    def test_examples(self):
        assert covariance_limit([0, 0, 1], [0, 0, 1]) == 2
        assert covariance_limit([0, 1], [0, 1]) == 1
        assert covariance_limit([0, 0, 1], [0, 1]) == 0

    def test_scaled_variance_limit(self):
        # Var(Tr (X/sqrt N)^4) = (E Tr X^4 Tr X^4 - (E Tr X^4)^2) / N^4
        n = 400
        stats = finite_n_statistics((4,), (4,), n)
        assert float(Fraction(stats.variance_f, n**4)) == pytest.approx(float(covariance_limit([0] * 4 + [1], [0] * 4 + [1])), rel=1e-3)


class TestSemicircle:
    def test_exact(self):
        assert semicircle_moment([0] * 36 + [1]) == 477638700
        assert semicircle_moment([0, 0, 1]) == 1
        assert semicircle_moment([0, 0, 0, 1]) == 0
        assert semicircle_moment([Fraction(1, 2), 3, 2]) == Fraction(5, 2)

    @pytest.mark.parametrize("i", range(9))
    def test_quadrature(self, i):
        assert numeric_semicircle_quadrature([0] * (2 * i) + [1], 1e-10) == pytest.approx(catalan(i), abs=1e-10)

    def test_constant(self):
        assert numeric_semicircle_quadrature([1]) == pytest.approx(1.0, abs=1e-12)

    def test_bad_tolerance(self):
        with pytest.raises(ValueError):
            numeric_semicircle_quadrature([1], 0)

    def test_unreachable_tolerance(self):
        with pytest.raises(QuadratureError):
            numeric_semicircle_quadrature([0] * 60 + [1], 1e-16)


class TestSqrtRational:
    def test_rendering(self):
        assert str(SqrtRational.ratio(1, Fraction(4, 3))) == "sqrt(3)/2"
        assert str(SqrtRational.ratio(2, Fraction(9, 2))) == "2*sqrt(2)/3"
        assert str(SqrtRational.ratio(-1, 1)) == "-1"
        assert str(SqrtRational.zero()) == "0"

    def test_decimal(self):
        assert str(SqrtRational.ratio(1, 2).to_decimal(30))[:20] == "0.707106781186547524"

    def test_zero_radicand(self):
        with pytest.raises(ZeroDivisionError):
            SqrtRational.ratio(1, 0)
