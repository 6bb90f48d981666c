from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from singmac.combinat import (Composition, IllegalStepError, Partition, Tableau, compositions,
                              content_vector, dominance_succ, dominance_tri, enumerate_rsyt,
                              extremal_tableaux, inversions, rank_function, step)

compositions_st = st.lists(st.integers(0, 4), min_size=1, max_size=7).map(Composition)
shapes_st = st.lists(st.integers(1, 4), min_size=1, max_size=4).map(
    lambda xs: Partition(sorted(xs, reverse=True)))

# shape (4,3): bottom row 7 6 5 2, top row 4 3 1
SHAPE_43 = Tableau([[7, 6, 5, 2], [4, 3, 1]])
SHAPE_31 = enumerate_rsyt((3, 1))


def hook_count(shape):
    """Standard tableau count from the hook length formula."""
    shape = [x for x in shape if x]
    n = sum(shape)
    conj = [sum(1 for r in shape if r > c) for c in range(shape[0])] if shape else []
    hooks = 1
    for r, row in enumerate(shape):
        for c in range(row):
            hooks *= (row - c - 1) + (conj[c] - r - 1) + 1
    return factorial(n) // hooks


class TestRankFunction:
    def test_partition_gives_identity(self):
        assert rank_function((2, 0, 0, 0)) == (1, 2, 3, 4)

    def test_single_part_moved_to_second(self):
        assert rank_function((0, 2, 0, 0)) == (2, 1, 3, 4)

    def test_single_part_moved_to_third(self):
        # hand evaluation: r1 = 1+1, r2 = 1+2, r3 = 0+1, r4 = 1+3
        assert rank_function((0, 0, 2, 0)) == (2, 3, 1, 4)

    @given(compositions_st)
    def test_is_permutation(self, a):
        assert sorted(rank_function(a)) == list(range(1, len(a) + 1))

    @given(compositions_st)
    def test_identity_iff_weakly_decreasing(self, a):
        ident = rank_function(a) == tuple(range(1, len(a) + 1))
        assert ident == all(a[i] >= a[i + 1] for i in range(len(a) - 1))

    @given(compositions_st)
    def test_sorts_into_partition(self, a):
        plus = a.sorted_desc()
        r = rank_function(a)
        assert all(plus[r[i] - 1] == a[i] for i in range(len(a)))


class TestDominance:
    def test_succ_examples(self):
        assert dominance_succ((3, 1), (2, 2))
        assert not dominance_succ((3, 1), (3, 1))
        assert not dominance_succ((2, 2), (3, 1))

    def test_succ_rejects_size_mismatch(self):
        with pytest.raises(ValueError):
            dominance_succ((3, 1), (2, 1))

    def test_tri_examples(self):
        assert dominance_tri((0, 2, 0, 0), (0, 0, 2, 0))
        assert dominance_tri((2, 0, 0, 0), (1, 1, 0, 0))
        assert not dominance_tri((1, 1, 0, 0), (1, 1, 0, 0))

    def test_tri_false_on_size_mismatch(self):
        assert not dominance_tri((2, 0), (1, 0))

    @given(st.integers(0, 5), st.integers(1, 4), st.data())
    def test_tri_is_strict_partial_order(self, size, N, data):
        pool = list(compositions(size, N))
        a, b, c = (data.draw(st.sampled_from(pool)) for _ in range(3))
        assert not dominance_tri(a, a)
        assert not (dominance_tri(a, b) and dominance_tri(b, a))
        if dominance_tri(a, b) and dominance_tri(b, c):
            assert dominance_tri(a, c)


class TestCompositions:
    @pytest.mark.parametrize("size,N", [(0, 3), (4, 1), (4, 4), (6, 5)])
    def test_count_is_binomial(self, size, N):
        items = list(compositions(size, N))
        assert len(items) == comb(size + N - 1, N - 1)
        assert len(set(items)) == len(items)
        assert all(sum(x) == size and len(x) == N for x in items)

    def test_parse_and_trailing_zeros(self):
        assert Composition.parse("2,0,0,0") == (2, 0, 0, 0)
        assert Composition((2, 0)).padded(4) == Composition((2, 0, 0, 0))
        assert Composition((2, 0)) != Composition((2, 0, 0))

    def test_rejects_negative_entries(self):
        with pytest.raises(ValueError):
            Composition((1, -1))

    def test_partition_must_decrease(self):
        with pytest.raises(ValueError):
            Partition((1, 2))


class TestTableaux:
    def test_three_tableaux_of_shape_31(self):
        assert len(SHAPE_31) == 3

    def test_single_row_has_one_tableau(self):
        assert len(enumerate_rsyt((5,))) == 1

    def test_square_22_has_two(self):
        assert len(enumerate_rsyt((2, 2))) == 2

    @pytest.mark.parametrize("shape", [(3, 1), (2, 2), (3, 2), (3, 2, 1), (4, 2, 1), (2, 2, 2), (5, 3)])
    def test_count_matches_hook_formula(self, shape):
        tabs = enumerate_rsyt(shape)
        assert len(tabs) == hook_count(shape)
        assert all(S.is_rsyt for S in tabs)

    def test_order_is_inv_descending(self):
        tabs = enumerate_rsyt((3, 2, 1))
        invs = [inversions(S) for S in tabs]
        assert invs == sorted(invs, reverse=True)

    def test_cap(self):
        with pytest.raises(ValueError):
            enumerate_rsyt((11, 10))
        assert len(enumerate_rsyt((2, 1), cap=3)) == 2

    def test_content_of_shape_43_example(self):
        assert content_vector(SHAPE_43) == (1, 3, 0, -1, 2, 1, 0)

    def test_content_of_first_31_tableau(self):
        first = SHAPE_31[-1]   # inv 0: 1 sits in the top row
        assert first.rows == ((4, 3, 2), (1,))
        assert content_vector(first) == (-1, 2, 1, 0)

    def test_content_single_row(self):
        assert content_vector(Tableau([[4, 3, 2, 1]])) == (3, 2, 1, 0)

    def test_extremal_tableaux_shape_43(self):
        S0, S1 = extremal_tableaux((4, 3))
        assert S0.rows == ((7, 5, 3, 1), (6, 4, 2))
        assert S1.rows == ((7, 6, 5, 4), (3, 2, 1))
        assert inversions(S0) == 6
        assert inversions(S1) == 0

    @pytest.mark.parametrize("shape", [(5,), (1, 1, 1, 1)])
    def test_extremal_coincide_on_row_or_column(self, shape):
        S0, S1 = extremal_tableaux(shape)
        assert S0 == S1

    @given(shapes_st)
    def test_S1_has_no_inversions(self, shape):
        assert inversions(extremal_tableaux(shape)[1]) == 0

    def test_step_on_shape_31(self):
        second, first = SHAPE_31[1], SHAPE_31[2]
        assert step(second, 1) == first
        assert inversions(second) - inversions(first) == 1

    def test_step_in_stated_direction_is_illegal(self):
        with pytest.raises(IllegalStepError, match="i=1"):
            step(SHAPE_31[2], 1)

    def test_step_within_row_is_illegal(self):
        S = Tableau([[4, 3, 2, 1]])
        with pytest.raises(IllegalStepError):
            step(S, 2)

    @pytest.mark.parametrize("shape", [(3, 1), (3, 2), (3, 2, 1), (4, 2), (2, 2, 1)])
    def test_every_legal_step_drops_inv_and_stays_rsyt(self, shape):
        tabs = set(enumerate_rsyt(shape))
        for S in tabs:
            for i in range(1, S.size):
                if S.row(i) < S.row(i + 1) and S.col(i) > S.col(i + 1):
                    out = step(S, i)
                    assert out in tabs
                    assert inversions(out) == inversions(S) - 1

    @pytest.mark.parametrize("shape", [(3, 1), (3, 2, 1), (4, 2, 1), (3, 3)])
    def test_content_vector_is_injective(self, shape):
        tabs = enumerate_rsyt(shape)
        assert len({content_vector(S) for S in tabs}) == len(tabs)

    def test_json_round_trip(self):
        data = SHAPE_43.to_json()
        assert data == {"shape": [4, 3], "rows": [[7, 6, 5, 2], [4, 3, 1]]}
        assert Tableau.from_json(data) == SHAPE_43

    def test_rejects_bad_rows(self):
        with pytest.raises(ValueError):
            Tableau([[1, 2]])
        with pytest.raises(ValueError):
            Tableau([[3, 1]])
