import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from w2blocks import (
    BlockId,
    InvalidArgument,
    ac_matrix,
    classify,
    conjugate,
    e_cores,
    enumerate_block,
    find_pairs,
    is_e_regular,
    mullineux,
    predicted_ac,
    predicted_ac_matrix,
)
from w2blocks.alvis_curtis import (
    cartan_duality_check,
    involution_check,
    l_list_labels,
    lez_check,
    singular_labels,
    transfer_check,
)
from w2blocks.blocks import label_table

E2 = BlockId(2, ())
SMALL = [BlockId(e, c) for e in (2, 3, 4, 5) for c in e_cores(e, 7)]
blocks = st.sampled_from(SMALL)
PAIRS = [P for B in SMALL for P in find_pairs(B, all_frames=True)]


def brute_force_ac(B):
    """E P D from the reflection-sum oracle and Gauss-Jordan inversion."""
    parts, D = oracles.decomposition_matrix(B.core, B.e)
    cparts, Dc = oracles.decomposition_matrix(conjugate(B.core), B.e)
    E = oracles.inverse(D)
    P = [[Dc[cparts.index(oracles.conjugate(nu))][j] for j in range(len(cparts))] for nu in parts]
    return parts, cparts, oracles.matmul(E, P)


def test_anchor_rows():
    A = ac_matrix(E2)
    assert list(A.matrix.row((4,)).values()) == [1, 0, 0, 1, 1]
    assert list(A.matrix.row((1, 1, 1, 1)).values()) == [0, 0, 1, 0, 0]
    assert predicted_ac_matrix(E2).row((4,)) == A.matrix.row((4,))


def test_json_headers():
    doc = ac_matrix(BlockId(3, (2,))).to_json()
    assert doc["rows_block"]["core"] == [2] and doc["cols_block"]["core"] == [1, 1]


@given(blocks)
def test_matches_brute_force(B):
    parts, cparts, A = brute_force_ac(B)
    M = ac_matrix(B).matrix
    assert list(M.rows) == parts and list(M.cols) == cparts
    assert M.as_lists() == A


@given(blocks)
def test_closed_form(B):
    assert predicted_ac_matrix(B).as_lists() == ac_matrix(B).matrix.as_lists()


@given(blocks)
def test_regular_columns_are_unit_vectors(B):
    A = ac_matrix(B).matrix
    for mu in A.cols:
        if is_e_regular(mu, B.e):
            assert A.column(mu) == {lam: int(lam == mullineux(mu, B.conjugate())) for lam in A.rows}


@given(blocks)
def test_duality_is_an_involution(B):
    assert involution_check(B).status == "pass"
    assert cartan_duality_check(B).status == "pass"
    A = ac_matrix(B).matrix
    assert all(-2 <= x <= 2 for row in A.as_lists() for x in row)


@given(blocks)
def test_singular_labels(B):
    labels = singular_labels(B)
    assert set(labels) == {(0, 0), (0, 1)} | {(j, 0) for j in range(1, B.e)}
    assert all(not is_e_regular(lam, B.e) for lam in labels.values())


def test_epsilon_zero_row_in_column_zero_one():
    for B in SMALL:
        mu = singular_labels(B.conjugate())[(0, 1)]
        lam = label_table(B)[(0, 0)]
        lab = classify(lam, B)
        if lab.eps == 0:
            assert predicted_ac(lam, mu, B) == (-1) ** lab.partial


@pytest.mark.parametrize("e", [2, 3, 4, 5])
def test_top_ascending_label_is_covered_twice(e):
    # [e-1, e] lies in both the top-row and ascending families, so admitting b = e in
    # the top-row family of the [0,0] column changes nothing
    for c in e_cores(e, 6):
        B = BlockId(e, c)
        lam = label_table(B)[(e - 1, e)]
        lab = classify(lam, B)
        mu = singular_labels(B.conjugate())[(0, 0)]
        assert lab.eps == 1
        assert predicted_ac(lam, mu, B) == (-1) ** lab.partial


def test_wrong_blocks_rejected():
    with pytest.raises(InvalidArgument):
        predicted_ac((3, 1), (5,), E2)


def test_l_list():
    assert l_list_labels(1, 1, 3) == {(0, 1), (1, 2), (2, 0), (2, 3)}
    assert l_list_labels(2, 0, 3) == {(1, 0), (2, 1)}


@given(st.sampled_from(PAIRS))
def test_transfer(P):
    assert transfer_check(P).status == "pass"


@given(st.sampled_from([P for P in PAIRS if P.k == 1]))
def test_exceptional_inverse_entries(P):
    assert lez_check(P).status == "pass"


def test_lez_needs_k_one():
    P = next(P for P in PAIRS if P.k >= 2)
    with pytest.raises(InvalidArgument):
        lez_check(P)
