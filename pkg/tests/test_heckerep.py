import pytest
from hypothesis import given, strategies as st

from singmac.combinat import Partition, Tableau, content_vector, enumerate_rsyt, inversions
from singmac.heckerep import (ModuleVector, check_jucys_murphy, gamma_norm, inner_product,
                              jucys_murphy_eigen, step_coefficients, tau_action, tau_action_inverse)
from singmac.scalars.qt import QtScalar

t = QtScalar.t()


def partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


SHAPES_UP_TO_7 = [p for n in range(2, 8) for p in partitions(n)]
SHAPES_UP_TO_6 = [p for n in range(2, 7) for p in partitions(n)]


def act(v, *indices):
    for i in indices:
        v = tau_action(v, i)
    return v


class TestTauAction:
    def test_same_column_is_minus_one(self):
        S = Tableau([[2], [1]])
        assert tau_action(ModuleVector.basis(S), 1) == ModuleVector.basis(S).scale(QtScalar(-1))

    def test_same_row_is_t(self):
        S = Tableau([[2, 1]])
        assert tau_action(ModuleVector.basis(S), 1) == ModuleVector.basis(S).scale(t)

    def test_case_three_coefficient(self):
        # shape (2,1) with 1 in the second column of the bottom row, 2 on top: d[1] = 2
        S = Tableau([[3, 1], [2]])
        assert S.content(1) - S.content(2) == 2
        out = tau_action(ModuleVector.basis(S), 1)
        assert out.coeff(S) == (t - 1) / (1 - t ** -2)
        assert out.coeff(S.swapped(1)) == QtScalar(1)

    def test_index_range(self):
        with pytest.raises(IndexError):
            tau_action(ModuleVector.basis(Tableau([[2, 1]])), 2)

    def test_rejects_row_ordered_keys(self):
        with pytest.raises(ValueError):
            ModuleVector.basis(Tableau([[4, 1], [3, 2]]))

    @pytest.mark.parametrize("shape", SHAPES_UP_TO_7)
    def test_hecke_relations(self, shape):
        tabs = enumerate_rsyt(shape)
        N = sum(shape)
        for S in tabs:
            v = ModuleVector.basis(S)
            for i in range(1, N):
                w = act(v, i) + v
                assert (act(w, i) - w.scale(t)).is_zero(), (S, i)
                if i < N - 1:
                    assert act(v, i, i + 1, i) == act(v, i + 1, i, i + 1), (S, i)
                for j in range(i + 2, N):
                    assert act(v, i, j) == act(v, j, i), (S, i, j)

    @pytest.mark.parametrize("shape", [(3, 1), (3, 2, 1)])
    def test_inverse(self, shape):
        for S in enumerate_rsyt(shape):
            v = ModuleVector.basis(S)
            for i in range(1, S.size):
                assert tau_action_inverse(tau_action(v, i), i) == v

    @given(st.integers(2, 12), st.booleans())
    def test_step_coefficients_quadratic_on_two_dim_block(self, d, up):
        # rows: S -> (off S' + diag S); S' -> (off' S + diag' S'); check (T+1)(T-t) = 0
        d = d if up else -d
        o1, g1 = step_coefficients(d)
        o2, g2 = step_coefficients(-d)
        a, b = g1, o1     # S T = a S + b S'
        c, e = o2, g2     # S' T = c S + e S'
        # T^2 = (t - 1) T + t on the basis
        assert a * a + b * c == (t - 1) * a + t
        assert a * b + b * e == (t - 1) * b
        assert e * e + b * c == (t - 1) * e + t


class TestJucysMurphy:
    def test_last_index_is_one(self):
        S = enumerate_rsyt((3, 1))[0]
        assert jucys_murphy_eigen(S, 4) == QtScalar(1)
        assert check_jucys_murphy(S, 4)

    def test_shape_31_first_tableau(self):
        first = Tableau([[4, 3, 2], [1]])
        assert jucys_murphy_eigen(first, 1) == t ** -1
        assert check_jucys_murphy(first, 1)

    def test_shape_43_tableau(self):
        S = Tableau([[7, 6, 5, 2], [4, 3, 1]])
        assert jucys_murphy_eigen(S, 2) == t ** 3
        assert check_jucys_murphy(S, 2)

    @pytest.mark.parametrize("shape", SHAPES_UP_TO_6)
    def test_recursion_matches_contents(self, shape):
        for S in enumerate_rsyt(shape):
            for i in range(1, S.size + 1):
                assert check_jucys_murphy(S, i), (S, i)

    @given(st.integers(-6, 6), st.integers(-6, 6))
    def test_two_by_two_identity(self, c1, c2):
        # (1/t) T Phi T = diag(t^c1, t^c2) on the span of S, S' with d = c1 - c2
        d = c1 - c2
        if abs(d) < 2:
            return
        o1, g1 = step_coefficients(d)
        o2, g2 = step_coefficients(-d)
        T = [[g1, o1], [o2, g2]]
        Phi = [[t ** c2, QtScalar(0)], [QtScalar(0), t ** c1]]

        def mul(A, B):
            return [[A[r][0] * B[0][c] + A[r][1] * B[1][c] for c in range(2)] for r in range(2)]

        out = mul(mul(T, Phi), T)
        assert out[0][0] / t == t ** c1 and out[1][1] / t == t ** c2
        assert out[0][1].is_zero() and out[1][0].is_zero()


class TestGamma:
    def test_single_row_is_one(self):
        assert gamma_norm(Tableau([[4, 3, 2, 1]])) == QtScalar(1)

    def test_single_column(self):
        # contents increase up a column, so only the two-cell column has no qualifying pair
        assert gamma_norm(Tableau([[2], [1]])) == QtScalar(1)
        three = Tableau([[3], [2], [1]])
        assert content_vector(three) == (-2, -1, 0)
        assert gamma_norm(three) == (1 - t) * (1 - t ** 3) / (1 - t ** 2) ** 2

    def test_shape_21_by_pairs(self):
        for S in enumerate_rsyt((2, 1)):
            ct = content_vector(S)
            expected = QtScalar(1)
            for i in range(3):
                for j in range(i + 1, 3):
                    c = ct[j] - ct[i]
                    if c >= 2:
                        expected = expected * (1 - t ** (c - 1)) * (1 - t ** (c + 1)) / (1 - t ** c) ** 2
            assert gamma_norm(S) == expected

    @pytest.mark.parametrize("shape", SHAPES_UP_TO_6)
    def test_invariant_under_t_inverse(self, shape):
        for S in enumerate_rsyt(shape):
            g = gamma_norm(S)
            assert g.invert_t() == g

    @pytest.mark.parametrize("shape", SHAPES_UP_TO_6)
    def test_self_adjoint(self, shape):
        """<f T_i, g> = <f, g T_i> for the basis with <S, S'> = delta gamma(S)."""
        tabs = enumerate_rsyt(shape)
        bad = []
        for i in range(1, sum(shape)):
            for S in tabs:
                for R in tabs:
                    f, g = ModuleVector.basis(S), ModuleVector.basis(R)
                    if inner_product(tau_action(f, i), g) != inner_product(f, tau_action(g, i)):
                        bad.append((S, R, i))
        assert not bad, f"{len(bad)} failing pairs, first {bad[0]}"

    @pytest.mark.parametrize("shape", SHAPES_UP_TO_6)
    def test_self_adjoint_after_inversion_weight(self, shape):
        """Diagnostic: weighting gamma by t^-inv(S) makes the action self-adjoint."""
        tabs = enumerate_rsyt(shape)

        def weighted(v, w):
            return sum((c * w.coeff(S) * gamma_norm(S) * t ** -inversions(S)
                        for S, c in v.terms.items()), QtScalar(0))

        for i in range(1, sum(shape)):
            for S in tabs:
                for R in tabs:
                    f, g = ModuleVector.basis(S), ModuleVector.basis(R)
                    assert weighted(tau_action(f, i), g) == weighted(f, tau_action(g, i))


def test_partitions_helper():
    assert len(list(partitions(7))) == 15
    assert all(Partition(p) for p in SHAPES_UP_TO_7)
