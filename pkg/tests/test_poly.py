import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stablepath.poly import (
    ONE,
    X,
    ZERO,
    NotDivisibleError,
    Poly,
    exact_div,
    is_log_concave,
    is_real_rooted,
    is_unimodal,
    poly_from_json_dict,
    poly_gcd,
    poly_to_json_dict,
    rational_sturm_chain,
    real_root_summary,
    square_free_part,
    sturm_chain,
)

small_polys = st.lists(st.integers(-9, 9), max_size=8).map(Poly)
nonzero_polys = small_polys.filter(lambda p: not p.is_zero)


class TestConstruction:
    def test_trailing_zeros_stripped(self):
        assert Poly((1, 2, 0, 0)).coeffs == (1, 2)
        assert Poly((0, 0)).coeffs == ()

    def test_zero_polynomial(self):
        assert ZERO.is_zero
        assert ZERO.degree == -1
        assert Poly(()).coeffs == ()

    def test_degree_and_leading(self):
        p = Poly((1, 5, 4))
        assert p.degree == 2
        assert p.leading == 4
        assert p.coefficient(0) == 1
        assert p.coefficient(1) == 5
        assert p.coefficient(7) == 0

    def test_rejects_non_integers(self):
        with pytest.raises(TypeError):
            Poly((1, 2.5))
        with pytest.raises(TypeError):
            Poly(("3",))

    def test_constants(self):
        assert ONE == Poly((1,))
        assert X == Poly((0, 1))


class TestArithmetic:
    def test_add_sub(self):
        assert Poly((1, 2)) + Poly((3, -2, 5)) == Poly((4, 0, 5))
        assert Poly((1, 2)) - Poly((1, 2)) == ZERO
        assert Poly((1,)) + ZERO == ONE

    def test_mul_basic(self):
        assert Poly((1, 1)) * Poly((1, 1)) == Poly((1, 2, 1))
        assert Poly((1, 2)) * 3 == Poly((3, 6))
        assert ZERO * Poly((5, 7)) == ZERO

    def test_nine_vertex_tree_polynomial_forms(self):
        # both published forms of the same degree-5 polynomial
        sum_form = Poly((1, 3, 1)) * Poly((1, 5, 6, 1)) + X * Poly((1, 2)) ** 3
        product_form = Poly((1, 1)) * Poly((1, 8, 20, 16, 1))
        expected = Poly((1, 9, 28, 36, 17, 1))
        assert sum_form == expected
        assert product_form == expected

    def test_pow(self):
        assert Poly((1, 1)) ** 0 == ONE
        assert Poly((1, 1)) ** 5 == Poly((1, 5, 10, 10, 5, 1))
        assert Poly((1, 2)) ** 3 == Poly((1, 6, 12, 8))
        assert X ** 4 == Poly((0, 0, 0, 0, 1))
        with pytest.raises(ValueError):
            Poly((1, 1)) ** -1

    def test_times_x(self):
        assert Poly((1, 2)).times_x() == Poly((0, 1, 2))
        assert Poly((1, 2)).times_x(3) == Poly((0, 0, 0, 1, 2))
        assert ZERO.times_x(2) == ZERO

    def test_evaluate(self):
        p = Poly((1, 5, 4))
        assert p(0) == 1
        assert p(2) == 27
        assert p(-1) == 0

    def test_derivative(self):
        assert Poly((7, 3, 5)).derivative() == Poly((3, 10))
        assert ONE.derivative() == ZERO

    @given(small_polys, small_polys, small_polys)
    def test_ring_laws(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(small_polys)
    def test_additive_inverse(self, a):
        assert a + (-a) == ZERO
        assert a - a == ZERO


class TestLargeMultiplication:
    def test_matches_schoolbook_on_large_operands(self):
        # degrees above the schoolbook cutoff exercise the packed multiply
        rng = random.Random(7)
        a = Poly([rng.randint(-50, 50) for _ in range(900)] + [1])
        b = Poly([rng.randint(-50, 50) for _ in range(700)] + [1])
        from stablepath.poly import _schoolbook

        assert (a * b).coeffs == tuple(_schoolbook(a.coeffs, b.coeffs))

    def test_huge_coefficients(self):
        big = 10 ** 60
        a = Poly((big, -big, 1))
        assert a * a == Poly((big * big, -2 * big * big, big * big + 2 * big, -2 * big, 1))


class TestExactDivision:
    def test_published_quotient(self):
        product = Poly((1, 9, 28, 36, 17, 1))
        assert exact_div(product, Poly((1, 1))) == Poly((1, 8, 20, 16, 1))

    def test_self_division(self):
        p = Poly((2, 5, 3))
        assert exact_div(p, p) == ONE

    def test_not_divisible(self):
        with pytest.raises(NotDivisibleError):
            exact_div(Poly((1, 2)), Poly((1, 1)))
        with pytest.raises(NotDivisibleError):
            exact_div(Poly((1, 1, 1)), Poly((2, 2)))  # non-integer quotient

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            exact_div(ONE, ZERO)

    def test_zero_dividend(self):
        assert exact_div(ZERO, Poly((1, 1))) == ZERO

    @given(nonzero_polys, small_polys)
    def test_division_inverts_multiplication(self, a, b):
        assert exact_div(a * b, a) == b


class TestGcdAndSturm:
    def test_gcd_of_common_factor(self):
        a = Poly((1, 1)) * Poly((1, 3, 1))
        b = Poly((1, 1)) * Poly((2, 5))
        g = poly_gcd(a, b)
        assert g == Poly((1, 1))

    def test_square_free_part(self):
        p = Poly((1, 1)) ** 3 * Poly((1, 2))
        sf = square_free_part(p)
        assert sf == Poly((1, 1)) * Poly((1, 2))

    def test_sturm_chain_endpoints(self):
        chain = sturm_chain(Poly((-6, 11, -6, 1)))  # (x-1)(x-2)(x-3)
        assert chain[0] == Poly((-6, 11, -6, 1))
        assert chain[-1].degree == 0

    def test_real_rooted_verdicts(self):
        assert is_real_rooted(Poly((1, 3, 1)))
        assert not is_real_rooted(Poly((1, 1, 1)))
        assert is_real_rooted(Poly((1, 8, 20, 16, 1)))
        assert is_real_rooted(Poly((1, 2)))
        assert is_real_rooted(Poly((5,)))

    def test_repeated_roots_are_not_false_negatives(self):
        assert is_real_rooted(Poly((1, 1)) ** 3)
        assert is_real_rooted(Poly((1, 2, 1)))

    def test_mixed_repeated_and_complex(self):
        assert not is_real_rooted(Poly((1, 1)) ** 2 * Poly((1, 0, 1)))

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ValueError):
            is_real_rooted(ZERO)

    def test_root_summary_counts(self):
        s = real_root_summary(Poly((-6, 11, -6, 1)))
        assert s.squarefree_degree == 3
        assert s.distinct_real_roots == 3
        assert s.real_rooted
        s = real_root_summary(Poly((1, 1, 1)))
        assert s.distinct_real_roots == 0
        assert not s.real_rooted
        # x^2 - 2 has two irrational real roots
        s = real_root_summary(Poly((-2, 0, 1)))
        assert s.distinct_real_roots == 2

    def test_rational_chain_agrees(self):
        rng = random.Random(11)
        for _ in range(25):
            p = Poly([rng.randint(-6, 6) for _ in range(rng.randint(1, 6))] + [1])
            ints = sturm_chain(square_free_part(p))
            rats = rational_sturm_chain(square_free_part(p))
            assert len(ints) == len(rats)
            for a, b in zip(ints, rats):
                assert a.degree == b.degree
                # same sign of the leading coefficient at every step
                assert (a.leading > 0) == (b.leading > 0)

    def test_products_of_linear_factors_are_real_rooted(self):
        rng = random.Random(3)
        for _ in range(20):
            p = ONE
            for _ in range(rng.randint(1, 8)):
                p = p * Poly((rng.randint(1, 9), rng.randint(1, 9)))
            assert is_real_rooted(p)
            assert not is_real_rooted(p * Poly((1, 1, 1)))


class TestNumericCompanion:
    def test_agrees_with_numpy_roots(self):
        numpy = pytest.importorskip("numpy")
        rng = random.Random(5)
        for _ in range(15):
            p = ONE
            for _ in range(rng.randint(2, 9)):
                p = p * Poly((rng.randint(1, 9), rng.randint(1, 9)))
            roots = numpy.roots(list(reversed(p.coeffs)))
            # near-multiple real roots split into conjugate pairs numerically,
            # so the float companion is advisory; the Sturm verdict is exact
            assert max(abs(r.imag) for r in roots) < 1e-2
            assert is_real_rooted(p)
            q = p * Poly((1, 1, 1))
            roots = numpy.roots(list(reversed(q.coeffs)))
            assert max(abs(r.imag) for r in roots) > 0.1
            assert not is_real_rooted(q)


class TestShapePredicates:
    def test_log_concave_and_unimodal(self):
        assert is_log_concave(Poly((1, 2, 1)))
        assert is_unimodal(Poly((1, 2, 1)))
        assert is_unimodal(Poly((1, 3, 3, 2)))

    def test_internal_zero_fails_both(self):
        p = Poly((1, 1, 0, 1))
        assert not is_log_concave(p)
        assert not is_unimodal(p)

    def test_not_unimodal(self):
        assert not is_unimodal(Poly((2, 1, 2)))

    def test_negative_coefficients_rejected(self):
        with pytest.raises(ValueError):
            is_log_concave(Poly((1, -1)))
        with pytest.raises(ValueError):
            is_unimodal(Poly((1, -1)))

    def test_real_rooted_implies_log_concave_implies_unimodal(self):
        rng = random.Random(13)
        for _ in range(30):
            p = ONE
            for _ in range(rng.randint(1, 9)):
                p = p * Poly((rng.randint(1, 9), rng.randint(1, 9)))
            assert is_real_rooted(p)
            assert is_log_concave(p)
            assert is_unimodal(p)


class TestRendering:
    def test_text_form(self):
        assert str(Poly((1, 5, 4))) == "1 + 5*x + 4*x^2"
        assert str(ZERO) == "0"
        assert str(Poly((0, 0, 7))) == "7*x^2"
        assert str(Poly((1, -2, 0, 3))) == "1 - 2*x + 3*x^3"

    def test_json_round_trip(self):
        p = Poly((1, 10 ** 40, -3))
        data = poly_to_json_dict(p)
        assert data == {"coeffs": ["1", str(10 ** 40), "-3"]}
        assert poly_from_json_dict(json.loads(json.dumps(data))) == p

    def test_json_rejects_garbage(self):
        with pytest.raises(ValueError):
            poly_from_json_dict({"nope": []})
        with pytest.raises(ValueError):
            poly_from_json_dict({"coeffs": ["one"]})


@settings(max_examples=60)
@given(small_polys, small_polys)
def test_mul_matches_schoolbook_reference(a, b):
    def reference(p, q):
        if not p.coeffs or not q.coeffs:
            return ()
        out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
        for i, ci in enumerate(p.coeffs):
            for j, cj in enumerate(q.coeffs):
                out[i + j] += ci * cj
        while out and out[-1] == 0:
            out.pop()
        return tuple(out)

    assert (a * b).coeffs == reference(a, b)
