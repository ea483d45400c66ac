"""Domain types: alphabets, words, alignment columns, result records."""
import pytest
from hypothesis import given
from hypothesis import strategies as st

from nbhood import (
    DELETION,
    INSERTION,
    KIND_FULL,
    MATCH,
    MISMATCH,
    Alignment,
    Alphabet,
    Column,
    NeighborhoodResult,
    RangeError,
    ValidationError,
    alphabet_of_size,
    canonical_sorted,
    make_alphabet,
    make_word,
)


def test_alphabet_rejects_malformed_specs():
    with pytest.raises(ValidationError):
        make_alphabet("")
    with pytest.raises(ValidationError):
        make_alphabet("aba")
    with pytest.raises(ValidationError):
        Alphabet(("ab",))
    for bad in ("-", "A", "!", " ", "0"):
        with pytest.raises(ValidationError):
            make_alphabet("a" + bad)


def test_alphabet_order_is_the_given_order():
    a = make_alphabet("cab")
    assert (a.rank("c"), a.rank("a"), a.rank("b")) == (0, 1, 2)
    assert "c" in a
    assert "z" not in a
    with pytest.raises(ValidationError):
        a.rank("z")


def test_alphabet_of_size_bounds():
    assert alphabet_of_size(3).spec() == "abc"
    assert alphabet_of_size(26).size == 26
    with pytest.raises(RangeError):
        alphabet_of_size(0)
    with pytest.raises(RangeError):
        alphabet_of_size(27)


def test_word_must_fit_alphabet():
    a = make_alphabet("ab")
    w = make_word("abba", a)
    assert len(w) == 4
    assert str(w) == "abba"
    with pytest.raises(ValidationError):
        make_word("abc", a)


def test_empty_word_is_allowed():
    assert len(make_word("", alphabet_of_size(2))) == 0


def test_subword_slicing():
    a = make_alphabet("ab")
    assert str(make_word("abba", a).sub(1, 3)) == "bb"


def test_canonical_order_prefers_prefixes_and_follows_ranks():
    # scrambled alphabet: rank order must win over codepoint order
    a = make_alphabet("ba")
    words = [make_word(t, a) for t in ("a", "b", "ba", "ab", "", "bb")]
    assert [str(w) for w in canonical_sorted(words)] == ["", "b", "bb", "ba", "a", "ab"]


@given(st.lists(st.text(alphabet="ab", max_size=4), unique=True))
def test_canonical_sorted_matches_rank_tuples(texts):
    a = make_alphabet("ab")
    out = canonical_sorted(make_word(t, a) for t in texts)
    assert [w.sort_key for w in out] == sorted(tuple(a.rank(c) for c in t) for t in texts)


def test_column_kinds():
    assert Column("a", "a").kind == MATCH
    assert Column("a", "b").kind == MISMATCH
    assert Column(None, "b").kind == INSERTION
    assert Column("a", None).kind == DELETION
    with pytest.raises(ValidationError):
        Column(None, None)


def test_alignment_cost_texts_and_rendering():
    al = Alignment(
        (
            Column("a", "a"),
            Column("l", "s"),
            Column(None, "s"),
            Column("i", "i"),
        )
    )
    assert al.cost == 2
    assert al.top_text == "ali"
    assert al.bottom_text == "assi"
    assert al.render() == "a l - i\na s s i"


def test_result_validates_order_count_and_member_length():
    a = alphabet_of_size(2)
    q = make_word("ab", a)
    ws = tuple(make_word(t, a) for t in ("a", "ab"))
    r = NeighborhoodResult(q, 1, KIND_FULL, 2, ws)
    assert r.count == 2
    with pytest.raises(ValidationError):
        NeighborhoodResult(q, 1, KIND_FULL, 3, ws)
    with pytest.raises(ValidationError):
        NeighborhoodResult(q, 1, KIND_FULL, 2, tuple(reversed(ws)))
    with pytest.raises(ValidationError):
        NeighborhoodResult(q, 1, KIND_FULL, 1, (make_word("aaaa", a),))
    with pytest.raises(ValidationError):
        NeighborhoodResult(q, 1, "outer", 2, ws)


def test_count_only_result_carries_no_words():
    a = alphabet_of_size(2)
    r = NeighborhoodResult(make_word("ab", a), 1, KIND_FULL, 9)
    assert r.words is None
    assert r.count == 9


def test_bare_string_alphabet_gets_build_guidance():
    with pytest.raises(ValidationError, match="make_alphabet"):
        make_word("ab", "ab")
