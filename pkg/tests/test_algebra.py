"""Laurent-polynomial arithmetic, operator algebra and continued fractions."""

import pytest
from hypothesis import given, strategies as st

from snakelab.algebra import (
    ONE,
    Q,
    T,
    Y,
    ZERO,
    CoefficientSchedule,
    Monomial,
    Poly,
    jfraction_series,
    q_derivative,
    q_int,
    sfraction_series,
    u_multiply,
)

Q2 = ONE + (ONE + Q) * T ** 2  # 1 + (1+q)t^2

polys = st.builds(
    Poly.from_quadruples,
    st.lists(
        st.tuples(
            st.integers(-5, 5),
            st.integers(0, 3),
            st.integers(0, 3),
            st.integers(-2, 3),
        ),
        max_size=6,
    ),
)


class TestRingOps:
    def test_additive_inverse(self):
        assert T + (-T) == ZERO
        assert not (T - T)

    def test_additive_identity(self):
        assert Q2 + ZERO == Q2

    def test_add_golden(self):
        assert Q2 + ONE * ZERO == Q2
        assert str(Q2) == "1 + t^2 + t^2*q"

    def test_mul_monomials(self):
        assert T * T == T ** 2
        assert (ONE + Q) * T * T == Poly.from_quadruples([[1, 0, 2, 0], [1, 0, 2, 1]])

    def test_laurent_cancellation(self):
        qinv = Poly.monomial(eq=-1)
        assert qinv * Q == ONE

    def test_int_coercion(self):
        assert 2 * T + T == 3 * T
        assert T - 1 == -(1 - T)
        assert Q2.coefficient(0, 2, 1) == 1

    @given(polys, polys, polys)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    def test_negative_y_exponent_rejected(self):
        with pytest.raises(ValueError):
            Poly({(-1, 0, 0): 1})


class TestSubstitution:
    def test_q2_at_one_one(self):
        assert Q2.subst("t", 1).subst("q", 1).as_int() == 3

    def test_r2_at_one_one(self):
        r2 = (ONE + Q) + (ONE + 2 * Q + 2 * Q ** 2 + Q ** 3) * T ** 2
        assert r2(t=1, q=1).as_int() == 8

    def test_constant_term(self):
        assert Q2.subst("t", 0) == ONE

    def test_coefficient_sum_preserved(self):
        # total coefficient mass equals evaluation at y=t=q=1
        p = Q2 * (Y + T) + Poly.monomial(3, 1, 2, -1)
        total = sum(p.terms.values())
        assert p(y=1, t=1, q=1).as_int() == total

    def test_negative_exponent_needs_monomial(self):
        p = Poly.monomial(eq=-2)
        assert p.subst("q", 1) == ONE
        assert p.subst("q", -Q) == Poly.monomial(eq=-2)
        with pytest.raises(ValueError, match="non-invertible substitution"):
            p.subst("q", ONE + Q)

    def test_subst_polynomial_value(self):
        assert (T ** 2).subst("t", ONE + Q) == (ONE + Q) ** 2


class TestOperators:
    def test_derivative_of_t(self):
        assert q_derivative(T) == ONE

    def test_derivative_golden(self):
        assert q_derivative(T ** 3) == (ONE + Q + Q ** 2) * T ** 2

    def test_derivative_of_constant(self):
        assert q_derivative(ONE) == ZERO

    def test_u_examples(self):
        assert u_multiply(ONE) == T
        assert u_multiply(q_derivative(T)) == T

    def test_domain_errors(self):
        with pytest.raises(ValueError, match="t,q polynomials"):
            q_derivative(Y)
        with pytest.raises(ValueError, match="t,q polynomials"):
            u_multiply(Y * T)

    @pytest.mark.parametrize("k", range(13))
    def test_commutation_on_basis(self, k):
        # DU - qUD = 1 applied to t^k
        p = T ** k
        lhs = q_derivative(u_multiply(p)) - Q * u_multiply(q_derivative(p))
        assert lhs == p

    @given(polys)
    def test_derivative_matches_difference_quotient(self, p):
        # (q-1)*t*D(f) == f(qt) - f(t) on the t,q subring
        f = p.subst("y", 1)
        lhs = (Q - 1) * T * q_derivative(f)
        assert lhs == f.subst("t", Q * T) - f


class TestContinuedFractions:
    def test_jfraction_q_schedule(self):
        mu = lambda h: T * Poly.monomial(eq=h) * (q_int(h) + q_int(h + 1))
        lam = lambda h: (ONE + T ** 2 * Poly.monomial(eq=2 * h - 1)) * q_int(h) ** 2
        out = jfraction_series(CoefficientSchedule(mu, lam), 2)
        assert out == [ONE, T, Q2]

    def test_jfraction_r_schedule(self):
        mu = lambda h: T * Poly.monomial(eq=h) * (ONE + Q) * q_int(h + 1)
        lam = lambda h: (ONE + T ** 2 * Poly.monomial(eq=2 * h)) * q_int(h) * q_int(h + 1)
        out = jfraction_series(CoefficientSchedule(mu, lam), 1)
        assert out == [ONE, (ONE + Q) * T]

    def test_jfraction_zero_schedule(self):
        out = jfraction_series(CoefficientSchedule(lambda h: ZERO, lambda h: ZERO), 4)
        assert out == [ONE, ZERO, ZERO, ZERO, ZERO]

    def test_sfraction_q_secant(self):
        # c_2 = [1]^4 + [1]^2 [2]^2 = 1 + (1+q)^2
        out = sfraction_series(lambda h: q_int(h) ** 2, 2)
        assert out == [ONE, ONE, ONE + (ONE + Q) ** 2]

    def test_sfraction_q_tangent(self):
        out = sfraction_series(lambda h: q_int(h) * q_int(h + 1), 1)
        assert out == [ONE, ONE + Q]

    def test_sfraction_zero(self):
        assert sfraction_series(lambda h: ZERO, 3) == [ONE, ZERO, ZERO, ZERO]

    def test_sfraction_contraction_matches_jfraction(self):
        # the S-fraction with weights a_h equals the J-fraction with
        # mu_0 = a_1, mu_h = a_{2h} + a_{2h+1}, lam_h = a_{2h-1} a_{2h}
        a = lambda h: q_int(h) ** 2
        mu = lambda h: a(1) if h == 0 else a(2 * h) + a(2 * h + 1)
        lam = lambda h: a(2 * h - 1) * a(2 * h)
        assert sfraction_series(a, 5) == jfraction_series(
            CoefficientSchedule(mu, lam), 5
        )


class TestSerialization:
    def test_zero(self):
        assert str(ZERO) == "0"

    def test_signed_terms(self):
        assert str(-ONE + T) == "-1 + t"
        assert str(T - 2 * T ** 3) == "t - 2*t^3"

    def test_canonical_order(self):
        assert str(Y * T + Y ** 2) == "y*t + y^2"

    def test_negative_q_exponent(self):
        assert str(Poly.monomial(-1, 0, 1, -2)) == "-t*q^-2"

    def test_quadruples_roundtrip(self):
        p = Q2 * Y - Poly.monomial(2, 0, 0, -1)
        rows = p.to_quadruples()
        assert rows == sorted(rows, key=lambda r: (r[1], r[2], r[3]))
        assert Poly.from_quadruples(rows) == p

    def test_monomial_text(self):
        assert Monomial().text() == "1"
        assert Monomial(1, 0, 2, 4).text() == "t^2*q^4"
        assert Monomial(-1, 1, 1, 0).text() == "-y*t"
        assert Monomial(1, 2, 0, 0).text() == "y^2"

    def test_monomial_product(self):
        m = Monomial(1, 1, 1, 2) * Monomial(1, 1, 0, -3)
        assert m == Monomial(1, 2, 1, -1)
