import pytest

from singmac.combinat import Tableau, enumerate_rsyt, inversions, rank_function
from singmac.quasistair import (ReductionStuck, ThetaLabel, alpha_of_tableau, build_quasistaircase,
                                build_theta, equipolar_reduce, has_property_V, nu_of_shape,
                                quasistaircases, rank_of_label, replay, theta_tableau)

DESK = [qs for qs in quasistaircases(7, 12) if qs.N <= 7]


def row_by_row(tau):
    rows, v = [], sum(tau)
    for s in tau:
        rows.append(list(range(v, v - s, -1)))
        v -= s
    return Tableau(rows)


def theta_pairs(qs):
    tau = qs.tau
    return [(j, k) for j in range(1, len(tau)) for k in range(1, tau[j] + 1)]


class TestBuild:
    def test_thirty_twelve(self):
        qs = build_quasistaircase(30, 12, 1, 1, 14)
        assert tuple(qs.lam) == (30,) * 3 + (0,) * 11
        assert tuple(qs.tau) == (11, 3)
        assert qs.nu == (14, 3, 0)
        assert qs.interval(1) == (4, 14) and qs.interval(2) == (1, 3)

    def test_one_three(self):
        qs = build_quasistaircase(1, 3, 2, 3, 10)
        assert tuple(qs.lam) == (4, 3, 3, 2, 2) + (0,) * 5
        assert tuple(qs.tau) == (5, 2, 2, 1)

    def test_one_four(self):
        qs = build_quasistaircase(1, 4, 2, 3, 15)
        assert tuple(qs.lam) == (4, 4, 3, 3, 3, 2, 2, 2) + (0,) * 7
        assert qs.nu == (15, 8, 5, 2, 0)

    @pytest.mark.parametrize("args", [(1, 3, 1, 1, 2), (1, 2, 1, 1, 5), (0, 2, 1, 1, 2), (1, 1, 1, 1, 3)])
    def test_rejects(self, args):
        with pytest.raises(ValueError):
            build_quasistaircase(*args)

    def test_enumeration_invariants(self):
        qss = quasistaircases(8, 12)
        assert qss == sorted(qss, key=lambda qs: qs.key())
        for qs in qss:
            assert sum(qs.tau) == qs.N and len(qs.tau) == qs.K + 1
            assert 1 <= qs.nu_K <= qs.n - 1
            for a in range(1, qs.K + 1):
                for b in range(1, qs.K + 1):
                    assert qs.nu[a] - qs.nu[b] == (qs.n - 1) * (b - a)
            for j, (lo, hi) in enumerate(qs.intervals, start=1):
                want = 0 if j == 1 else (qs.d + j - 2) * qs.m
                assert all(qs.lam[i - 1] == want for i in range(lo, hi + 1))

    def test_json(self):
        data = build_quasistaircase(30, 12, 1, 1, 14).to_json()
        assert data["intervals"] == {"I1": [4, 14], "I2": [1, 3]}


class TestLabels:
    def test_shape_31_labels(self):
        qs = build_quasistaircase(1, 2, 2, 1, 4)
        assert tuple(qs.tau) == (3, 1)
        got = {tuple(alpha_of_tableau(qs, S)) for S in enumerate_rsyt((3, 1))}
        assert got == {(2, 0, 0, 0), (0, 2, 0, 0), (0, 0, 2, 0)}

    @pytest.mark.parametrize("qs", DESK, ids=repr)
    def test_rank_formula_and_rearrangement(self, qs):
        S1 = row_by_row(qs.tau)
        assert alpha_of_tableau(qs, S1) == qs.lam
        assert rank_of_label(qs, S1) == tuple(range(1, qs.N + 1))
        for S in enumerate_rsyt(qs.tau):
            alpha = alpha_of_tableau(qs, S)
            assert alpha.sorted_desc() == qs.lam
            assert rank_of_label(qs, S) == tuple(rank_function(alpha))

    def test_shape_mismatch(self):
        qs = build_quasistaircase(1, 2, 2, 1, 4)
        with pytest.raises(ValueError):
            alpha_of_tableau(qs, Tableau([[2, 1], [4, 3]]))


class TestTheta:
    def test_table_example(self):
        assert nu_of_shape((4, 4, 4)) == (12, 8, 4, 0)
        assert theta_tableau((4, 4, 4), 2, 2) == Tableau([[12, 11, 10, 9], [8, 5, 4, 3], [7, 6, 2, 1]])

    def test_mu_of_one_four(self):
        qs = build_quasistaircase(1, 4, 2, 3, 15)
        theta = ThetaLabel(qs, 2, 2)
        assert theta.tableau() == Tableau([[15, 14, 13, 12, 11, 10, 9], [8, 5, 4], [7, 6, 3], [2, 1]])
        assert tuple(theta.mu()) == (4, 4, 3, 2, 2, 3, 3, 2) + (0,) * 7

    def test_last_column_has_no_right_block(self):
        assert theta_tableau((4, 3), 1, 3) == Tableau([[7, 6, 2, 1], [5, 4, 3]])
        qs = build_quasistaircase(1, 4, 1, 2, 7)
        assert ThetaLabel(qs, 1, 3).E1[0] > ThetaLabel(qs, 1, 3).E1[1]

    def test_range_errors(self):
        with pytest.raises(IndexError):
            theta_tableau((4, 4), 2, 1)
        with pytest.raises(IndexError):
            theta_tableau((4, 2), 1, 3)

    @pytest.mark.parametrize("qs", DESK, ids=repr)
    def test_closed_form_and_intervals(self, qs):
        nu, m, d = qs.nu, qs.m, qs.d
        for j, k in theta_pairs(qs):
            th = ThetaLabel(qs, j, k)
            S = th.tableau()
            assert has_property_V(S, j, k)
            assert equipolar_reduce(S, j, k) == []
            # three-case description of alpha(Theta)
            for i in range(1, qs.N + 1):
                if i <= nu[j + 1] or i > nu[j - 1]:
                    want = qs.lam[i - 1]
                elif nu[j + 1] + 1 <= i <= nu[j] - k or nu[j - 1] - 2 * k + 2 <= i <= nu[j - 1] - k + 1:
                    want = m * (d + j - 1)
                else:
                    want = m * (d + j - 2) if j > 1 else 0
                assert th.alpha()[i - 1] == want, (j, k, i)
            # E1..E4 tile I_j and I_{j+1}
            sizes = [len(th.members(E)) for E in (th.E1, th.E2, th.E3, th.E4)]
            assert sizes == [qs.tau[j] - k, (qs.n if j > 1 else qs.n * d) - k, k, k - 1]
            cells = [i for E in (th.E1, th.E2, th.E3, th.E4) for i in th.members(E)]
            assert sorted(cells) == list(range(nu[j + 1] + 1, nu[j - 1] + 1))


class TestPropertyV:
    def test_interchange_leaving_rsyt(self):
        S = Tableau([[6, 4, 3], [5, 2, 1]])
        assert S.is_rsyt
        assert not has_property_V(S, 1, 2)

    def test_cells_checked(self):
        with pytest.raises(IndexError):
            has_property_V(Tableau([[3, 2], [1]]), 1, 2)


class TestReduction:
    def test_s0_s9_reaches_theta(self):
        S = Tableau([[15, 11, 7, 4, 3, 2, 1], [14, 9, 6], [13, 10, 5], [12, 8]])
        assert has_property_V(S, 2, 2)
        steps = equipolar_reduce(S, 2, 2)
        path = replay(S, steps)
        assert path[-1] == theta_tableau((7, 3, 3, 2), 2, 2)
        invs = [inversions(T) for T in path]
        assert all(a > b for a, b in zip(invs, invs[1:]))

    def test_two_row_example(self):
        S = Tableau([[12, 11, 9, 5, 4, 2, 1], [10, 8, 7, 6, 3]])
        assert has_property_V(S, 1, 4)
        end = replay(S, equipolar_reduce(S, 1, 4))[-1]
        assert end == Tableau([[12, 11, 10, 5, 4, 3, 2], [9, 8, 7, 6, 1]])

    def test_requires_property(self):
        with pytest.raises(ValueError):
            equipolar_reduce(Tableau([[6, 4, 3], [5, 2, 1]]), 1, 2)

    def test_step_budget(self):
        S = Tableau([[12, 11, 9, 5, 4, 2, 1], [10, 8, 7, 6, 3]])
        with pytest.raises(ReductionStuck):
            equipolar_reduce(S, 1, 4, max_steps=0)

    @pytest.mark.parametrize("qs", DESK, ids=repr)
    def test_every_vertical_step_reduces(self, qs):
        for S in enumerate_rsyt(qs.tau):
            for u in range(1, qs.N):
                if S.col(u) != S.col(u + 1):
                    continue
                j = min(S.row(u), S.row(u + 1))
                k = S.col(u)
                T = S.swapped(u)
                assert has_property_V(T, j, k)
                assert alpha_of_tableau(qs, T).sorted_desc() == qs.lam
                path = replay(T, equipolar_reduce(T, j, k))
                assert path[-1] == build_theta(qs, j, k)
                for i, (A, B) in zip(equipolar_reduce(T, j, k), zip(path, path[1:])):
                    assert has_property_V(B, j, k)
                    assert A.content(i) - A.content(i + 1) >= 2
                    assert inversions(B) == inversions(A) - 1
