"""Run-length encoding: construction, conversion, and text round trips."""

import random

import pytest

from rleclcs import RleString, encode, format_rle, parse_rle


def test_encode_examples():
    assert encode("bbbaaaa").runs == [("b", 3), ("a", 4)]
    assert encode("aaaaabbbaaaabba").runs == [
        ("a", 5), ("b", 3), ("a", 4), ("b", 2), ("a", 1)]
    assert encode("").runs == []


def test_decode_and_length():
    s = encode("aaaaabbbaaaabba")
    assert s.decode() == "aaaaabbbaaaabba"
    assert len(s) == 15
    assert s.total_len == 15
    assert s.run_count == 5


def test_run_of():
    s = encode("aaaaabbbaaaabba")
    assert s.run_of(1) == 1
    assert s.run_of(5) == 1
    assert s.run_of(6) == 2
    assert s.run_of(9) == 3
    assert s.run_of(15) == 5
    with pytest.raises(IndexError):
        s.run_of(0)
    with pytest.raises(IndexError):
        s.run_of(16)


def test_prefix_sums():
    s = encode("aaaaabbbaaaabba")
    assert s.prefix_sums == [0, 5, 8, 12, 14, 15]


def test_reverse():
    assert encode("bbbaaaa").reverse() == encode("aaaabbb")
    assert encode("").reverse() == encode("")
    s = encode("abacab")
    assert s.reverse().reverse() == s


def test_from_parts_merges_and_skips():
    s = RleString.from_parts([("a", 2), ("b", 0), ("a", 3), ("b", 1)])
    assert s.runs == [("a", 5), ("b", 1)]
    assert RleString.from_parts([]).runs == []


def test_constructor_rejections():
    with pytest.raises(ValueError):
        RleString([("a", 0)])
    with pytest.raises(ValueError):
        RleString([("a", 2), ("a", 3)])
    with pytest.raises(ValueError):
        RleString([("ab", 2)])


def test_format_and_parse():
    s = encode("aaaaabbbaaaabba")
    assert format_rle(s) == "a5b3a4b2a1"
    assert parse_rle("a5b3a4b2a1") == s
    assert parse_rle("") == encode("")


def test_parse_rejections():
    with pytest.raises(ValueError):
        parse_rle("a")  # missing exponent
    with pytest.raises(ValueError):
        parse_rle("ab2")
    with pytest.raises(ValueError):
        parse_rle("a0")
    with pytest.raises(ValueError):
        parse_rle("5a")
    with pytest.raises(ValueError):
        parse_rle("a2a3")  # adjacent equal runs


def test_equality_and_hash():
    assert encode("aabb") == parse_rle("a2b2")
    assert encode("aabb") != encode("abab")
    assert hash(encode("aabb")) == hash(parse_rle("a2b2"))
    assert (encode("aabb") == "a2b2") is False


def test_random_round_trips():
    rng = random.Random(20260822)
    for _ in range(500):
        sigma = "abc"[:rng.randint(1, 3)]
        text = "".join(rng.choice(sigma) for _ in range(rng.randint(0, 50)))
        s = encode(text)
        assert s.decode() == text
        assert parse_rle(format_rle(s)) == s
        assert len(s) == len(text)
        # maximality: adjacent runs always differ
        for x in range(1, s.run_count):
            assert s.runs[x - 1][0] != s.runs[x][0]
        # position-to-run conversion agrees with a linear scan
        pos = 1
        for p, (ch, exp) in enumerate(s.runs, 1):
            for _ in range(exp):
                assert s.run_of(pos) == p
                assert text[pos - 1] == ch
                pos += 1
        assert s.prefix_sums[-1] == len(text)
