import pytest
from hypothesis import given, strategies as st

from singmac.cherednik import (CriticalPairObstruction, OperatorExpr, apply_cherednik, apply_dunkl,
                               apply_jucys_poly, cherednik_word, projection_operator,
                               spectral_exponents)
from singmac.combinat import compositions, dominance_tri, rank_function
from singmac.critical import find_critical_partners
from singmac.macdonald import build_macdonald, monic_normalize
from singmac.polyring import MacPolynomial, QtField, apply_Ti
from singmac.scalars.qt import QtScalar
from singmac.scalars.special import Specialization

F = QtField()
q, t = QtScalar.q(), QtScalar.t()


def zeta(alpha, i):
    a, b = spectral_exponents(alpha)[i - 1]
    return QtScalar.monomial(a, b)


@st.composite
def small_poly(draw, max_N=4, max_deg=3):
    N = draw(st.integers(2, max_N))
    deg = draw(st.integers(0, max_deg))
    pool = list(compositions(deg, N))
    keys = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=3, unique=True))
    coeffs = [QtScalar(1), QtScalar(-3), q, 1 - t, q * t]
    return MacPolynomial(F, N, {k: draw(st.sampled_from(coeffs)) for k in keys})


class TestCherednik:
    @pytest.mark.parametrize("N", [1, 2, 3, 4])
    def test_constant_is_fixed_by_last(self, N):
        one = MacPolynomial.constant(F, N)
        assert apply_cherednik(one, N) == one

    @pytest.mark.parametrize("N", [2, 3, 4])
    def test_constant_eigenvalues(self, N):
        one = MacPolynomial.constant(F, N)
        for i in range(1, N + 1):
            assert apply_cherednik(one, i) == one.scale(t ** (N - i))

    def test_eigen_relation_for_10(self):
        M = build_macdonald((1, 0), check=False)
        for i in (1, 2):
            r = rank_function((1, 0))
            expected = QtScalar.monomial((1, 0)[i - 1], 2 - r[i - 1])
            assert apply_cherednik(M, i) == M.scale(expected)

    @given(small_poly())
    def test_commute(self, p):
        for i in range(1, p.N + 1):
            for j in range(i + 1, p.N + 1):
                assert apply_cherednik(apply_cherednik(p, i), j) == \
                    apply_cherednik(apply_cherednik(p, j), i)

    @given(small_poly())
    def test_recursion(self, p):
        # xi_i = (1/t) T_i xi_{i+1} T_i, with the right action read left to right
        for i in range(1, p.N):
            lhs = apply_cherednik(p, i)
            rhs = apply_Ti(apply_cherednik(apply_Ti(p, i), i + 1), i).scale(t.inverse())
            assert lhs == rhs

    @pytest.mark.parametrize("N", [2, 3, 4])
    @pytest.mark.parametrize("deg", [1, 2, 3])
    def test_triangular(self, N, deg):
        for alpha in compositions(deg, N):
            x = MacPolynomial.monomial(F, alpha)
            for i in range(1, N + 1):
                out = apply_cherednik(x, i)
                assert out.coeff(alpha) == zeta(alpha, i)
                for beta in out.terms:
                    assert beta == tuple(alpha) or dominance_tri(alpha, beta), (alpha, i, beta)

    def test_index_range(self):
        with pytest.raises(IndexError):
            cherednik_word(0, 3)


class TestDunkl:
    @pytest.mark.parametrize("N", [1, 3])
    def test_constant_goes_to_zero(self, N):
        one = MacPolynomial.constant(F, N)
        for i in range(1, N + 1):
            assert apply_dunkl(one, i).is_zero()

    def test_single_variable(self):
        # N = 1: xi_1 = pi, so x_1 D_1 = (x_1 - q x_1) / x_1 = 1 - q
        x1 = MacPolynomial.monomial(F, (1,))
        assert apply_dunkl(x1, 1) == MacPolynomial.constant(F, 1).scale(1 - q)

    @given(small_poly())
    def test_lowers_degree(self, p):
        for i in range(1, p.N + 1):
            out = apply_dunkl(p, i)
            assert out.is_zero() or out.degree == p.degree - 1

    def test_requires_homogeneous(self):
        p = MacPolynomial.constant(F, 2) + MacPolynomial.monomial(F, (1, 0))
        with pytest.raises(ValueError):
            apply_dunkl(p, 1)

    def test_generic_macdonald_not_annihilated(self):
        M = build_macdonald((2, 0, 0, 0))
        assert any(not apply_dunkl(M, i).is_zero() for i in range(1, 5))


class TestJucysMurphyPoly:
    @given(small_poly())
    def test_last_is_identity(self, p):
        assert apply_jucys_poly(p, p.N) == p

    @given(small_poly(max_N=3))
    def test_recursion(self, p):
        for i in range(1, p.N):
            rhs = apply_Ti(apply_jucys_poly(apply_Ti(p, i), i + 1), i).scale(t.inverse())
            assert apply_jucys_poly(p, i) == rhs


class TestOperatorExpr:
    def test_degree_shift(self):
        e = OperatorExpr.word([("x", 1), ("T", 1), ("xinv", 2), ("xinv", 1)], 2)
        assert e.degree_shift() == -1

    def test_index_checked(self):
        with pytest.raises(IndexError):
            OperatorExpr.word([("T", 3)], 3)

    def test_word_order_is_left_to_right(self):
        p = MacPolynomial.monomial(F, (1, 0, 0))
        e = OperatorExpr.word([("T", 1), ("T", 2)], 3)
        assert e.apply(p) == apply_Ti(apply_Ti(p, 1), 2)


class TestProjection:
    def test_minimal_label_is_identity(self):
        spec = Specialization(2, 4, 1)
        alpha = (0, 0, 1, 1)
        assert not any(dominance_tri(alpha, b) for b in compositions(2, 4))
        P = projection_operator(alpha, spec)
        assert P.factors == () and P.separated == 0
        x = MacPolynomial.monomial(F, alpha)
        assert P.apply(x) == x
        assert monic_normalize(build_macdonald(alpha)) == x

    def test_counts_all_smaller_labels(self):
        spec = Specialization(2, 4, 1)
        P = projection_operator((2, 0, 0, 0), spec)
        below = [b for b in compositions(2, 4) if dominance_tri((2, 0, 0, 0), b)]
        assert P.separated == len(below) == 9

    def test_obstruction(self):
        # the critical search pairs (0,1,0) with (0,0,1) for (m, n) = (1, 2) inside N = 3
        assert [c.beta for c in find_critical_partners((0, 1, 0), 1, 2, max_len=3)] == [(0, 0, 1)]
        with pytest.raises(CriticalPairObstruction) as info:
            projection_operator((0, 1, 0), Specialization(1, 2, 0))
        assert info.value.beta == (0, 0, 1)

    def test_annihilates_smaller_macdonald(self):
        spec = Specialization(2, 4, 1)
        P = projection_operator((0, 2, 0, 0), spec)
        for beta in [(0, 0, 2, 0), (0, 0, 0, 2), (1, 1, 0, 0), (0, 0, 1, 1)]:
            M = build_macdonald(beta)
            assert P.apply(M).is_zero(), beta
