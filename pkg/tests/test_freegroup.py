import pytest
from hypothesis import given, strategies as st

from slmonoid.freegroup import (
    FreeWord,
    RankError,
    apply,
    compose_endo,
    concat,
    endo_equal,
    endo_from_letters,
    generator,
    identity_endo,
    invert_word,
    reduce,
)
from oracles import free_reduce

RANK = 4
letters = st.lists(st.sampled_from([k for k in range(-RANK, RANK + 1) if k]), max_size=20)
words = letters.map(lambda ls: reduce(RANK, ls))


def test_reduce_cancels_adjacent_inverses():
    assert reduce(3, [1, 2, -2, -1, 3]).letters == (3,)
    assert reduce(3, [1, -1]).letters == ()


def test_freeword_rejects_unreduced_or_out_of_range():
    with pytest.raises(ValueError):
        FreeWord(2, (1, -1))
    with pytest.raises(ValueError):
        FreeWord(2, (3,))


def test_concat_cancels_at_seam():
    u = reduce(3, [1, 2, 3])
    v = reduce(3, [-3, -2, 1])
    assert concat(u, v).letters == (1, 1)


def test_rank_mismatch():
    with pytest.raises(RankError):
        concat(generator(2, 1), generator(3, 1))


def test_str():
    assert str(reduce(2, [1, -2])) == "x1x2^-1"
    assert str(reduce(2, [])) == "1"


@given(letters)
def test_reduce_matches_oracle(ls):
    assert list(reduce(RANK, ls).letters) == free_reduce(ls)


@given(words, words, words)
def test_group_axioms(u, v, w):
    e = reduce(RANK, [])
    assert concat(concat(u, v), w) == concat(u, concat(v, w))
    assert concat(u, e) == u == concat(e, u)
    assert concat(u, invert_word(u)) == e
    assert invert_word(invert_word(u)) == u


@given(st.lists(letters, min_size=RANK, max_size=RANK), st.lists(letters, min_size=RANK, max_size=RANK), words)
def test_endomorphisms_compose_right_to_left(i1, i2, w):
    e1 = endo_from_letters(RANK, i1)
    e2 = endo_from_letters(RANK, i2)
    assert apply(compose_endo(e1, e2), w) == apply(e1, apply(e2, w))


@given(st.lists(letters, min_size=RANK, max_size=RANK), words, words)
def test_endomorphism_is_multiplicative(imgs, u, v):
    e = endo_from_letters(RANK, imgs)
    assert e(concat(u, v)) == concat(e(u), e(v))


def test_identity_endo():
    e = endo_from_letters(2, [[1, 2], [2]])
    assert endo_equal(compose_endo(e, identity_endo(2)), e)
    assert not endo_equal(e, identity_endo(2))
