import pytest
from hypothesis import given, strategies as st

import braids


@pytest.mark.parametrize(
    "indices, n, perm",
    [
        ([], 2, (0, 1)),
        ([0], 2, (1, 0)),
        ([1, 0], 3, (1, 2, 0)),
        ([0, 1], 3, (2, 0, 1)),
        ([0, 1, 0], 3, (2, 1, 0)),
    ],
)
def test_run_permutation(indices, n, perm):
    assert braids.run_permutation(indices, n) == perm


def test_run_permutation_rejects_out_of_range():
    with pytest.raises(ValueError):
        braids.run_permutation([2], 3)


@pytest.mark.parametrize(
    "p, q, perm, word",
    [
        (1, 1, (1, 0), (0,)),
        (2, 1, (1, 2, 0), (1, 0)),
        (1, 2, (2, 0, 1), (0, 1)),
        (0, 2, (0, 1), ()),
    ],
)
def test_block_swap_and_its_word(p, q, perm, word):
    assert braids.block_swap(p, q) == perm
    assert braids.reduced_word(perm) == word


def test_block_image_and_preimage():
    assert braids.block_image((1, 2, 0), 0, 2) == 1
    assert braids.block_image((2, 0, 1), 0, 2) is None
    assert braids.block_preimage((1, 2, 0), 1, 2) == 0
    assert braids.block_image((1, 0), 0, 0) is None


def test_transport_resizes_the_moving_block():
    # one wire crossing one wire becomes two wires crossing one wire
    assert braids.transport((1, 0), 0, 1, 2, 1) == braids.block_swap(2, 1)
    # and the moving block can shrink to nothing
    assert braids.transport(braids.block_swap(1, 1), 0, 1, 0, 1) == (0,)


perms = st.integers(min_value=1, max_value=5).flatmap(lambda n: st.permutations(list(range(n))))


@given(perms)
def test_reduced_word_realizes_the_permutation(perm):
    perm = tuple(perm)
    word = braids.reduced_word(perm)
    assert len(word) == braids.length(perm)
    assert braids.run_permutation(word, len(perm)) == perm


@given(perms)
def test_inverse_composes_to_identity(perm):
    assert braids.is_identity(braids.compose(perm, braids.inverse(perm)))
    assert braids.is_identity(braids.compose(braids.inverse(perm), perm))
