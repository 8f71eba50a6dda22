import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from w2blocks import (
    BlockId,
    InvalidArgument,
    Unsupported,
    conjugate,
    decomposition_matrix,
    e_cores,
    enumerate_block,
    is_e_regular,
    jantzen_coefficient,
    jantzen_matrix,
    mullineux,
    oracle_decomposition_matrix,
)
from w2blocks.jantzen import arrow_pairs, p_valuation

E2 = BlockId(2, ())
SMALL = [BlockId(e, c) for e in (2, 3, 4, 5) for c in e_cores(e, 6)]
blocks = st.sampled_from(SMALL)

ANCHOR_D = [[1, 0, 0, 0, 0], [1, 1, 0, 0, 0], [0, 1, 1, 0, 0], [1, 1, 1, 1, 0], [1, 0, 0, 1, 1]]


def test_anchor_oracle():
    assert oracle_decomposition_matrix(E2).as_lists() == ANCHOR_D


def test_top_partition_has_no_arrows():
    assert arrow_pairs((4,), E2) == ()


def test_bottom_partition_arrows():
    taus = {t.tau for t in arrow_pairs((1, 1, 1, 1), E2)}
    assert {(4,), (3, 1), (2, 1, 1)} <= taus


def test_missing_column_entry():
    with pytest.raises(InvalidArgument):
        jantzen_coefficient((1, 1, 1, 1), (4,), E2, 0, {})


def test_diagonal_rejected():
    with pytest.raises(InvalidArgument):
        jantzen_coefficient((4,), (4,), E2, 0, {})


def test_characteristic_two_rejected():
    with pytest.raises(Unsupported):
        oracle_decomposition_matrix(E2, 2)


def test_weight_must_be_two():
    with pytest.raises(Unsupported):
        oracle_decomposition_matrix(BlockId(2, (), 1))


@pytest.mark.parametrize("x, p, k", [(9, 3, 2), (10, 5, 1), (7, 3, 0), (4, 0, 0)])
def test_valuation(x, p, k):
    assert p_valuation(x, p) == k


@given(blocks)
def test_oracle_matches_reflection_sum(B):
    parts, rows = oracles.decomposition_matrix(B.core, B.e)
    assert list(oracle_decomposition_matrix(B).rows) == parts
    assert oracle_decomposition_matrix(B).as_lists() == rows


@given(blocks, st.sampled_from([0, 3, 5, 7]))
def test_coefficients_match_reflection_sum(B, p):
    D = decomposition_matrix(B)
    J = jantzen_matrix(B, p)
    parts = D.rows
    for lam in parts:
        weyl = oracles.jantzen_row(lam, B.e, p)
        for mu in parts:
            if lam != mu:
                assert J[lam, mu] == sum(c * D[nu, mu] for nu, c in weyl.items())


@given(blocks)
def test_j_values_and_twos(B):
    J = jantzen_matrix(B)
    for mu in J.cols:
        col = [J[lam, mu] for lam in J.rows]
        assert set(col) <= {0, 1, 2}
        twos = [lam for lam in J.rows if J[lam, mu] == 2]
        if is_e_regular(mu, B.e):
            assert twos == [conjugate(mullineux(mu, B))]
        else:
            assert twos == []


@given(blocks)
def test_bounds_decomposition_numbers(B):
    J, D = jantzen_matrix(B), oracle_decomposition_matrix(B)
    for lam in J.rows:
        for mu in J.cols:
            if lam != mu:
                assert D[lam, mu] <= J[lam, mu]
                assert (D[lam, mu] == 0) == (J[lam, mu] == 0)


@given(blocks, st.sampled_from([3, 5, 7]))
def test_independent_of_odd_characteristic(B, p):
    assert jantzen_matrix(B, p).as_lists() == jantzen_matrix(B, 0).as_lists()
    assert oracle_decomposition_matrix(B, p).as_lists() == oracle_decomposition_matrix(B).as_lists()


def test_maximal_row_vanishes():
    for B in SMALL:
        top = enumerate_block(B)[0]
        assert all(jantzen_matrix(B)[top, mu] == 0 for mu in enumerate_block(B))
