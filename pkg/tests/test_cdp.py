"""Compressed DP tables: stored slices, O(1) recovery, backtracking."""

import io
import random

import numpy as np
import pytest

from rleclcs import build_prefix_cdp, build_suffix_cdp, encode
from rleclcs.oracle import is_subsequence, naive_lcs, naive_lcs_suffix

# boundary rows/columns of the LCS table of bbbaaaa vs aaaabbbaa
FIXTURE_ROWS = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 2, 3, 3, 3],
    [0, 1, 2, 3, 4, 4, 4, 4, 4, 5],
]
FIXTURE_COLS = [
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 2, 3, 4],
    [0, 1, 2, 3, 3, 3, 3, 4],
    [0, 1, 2, 3, 4, 5, 5, 5],
]


def _rand_string(rng, max_len, sigma="abc"):
    return "".join(rng.choice(sigma) for _ in range(rng.randint(0, max_len)))


def _build(a, b, strategy="auto"):
    return build_prefix_cdp(encode(a), encode(b), strategy=strategy)


def test_fixture_stored_cells():
    t = _build("bbbaaaa", "aaaabbbaa")
    assert t.row_table.tolist() == FIXTURE_ROWS
    assert t.col_table.T.tolist() == FIXTURE_COLS


def test_fixture_lookups():
    t = _build("bbbaaaa", "aaaabbbaa")
    assert t.lookup(7, 9) == 5
    assert t.lookup(5, 5) == 2
    assert t.lookup(0, 5) == 0
    assert t.lookup(7, 0) == 0
    assert t.lookup(7, 9) == naive_lcs("bbbaaaa", "aaaabbbaa")[7][9]


def test_lookup_bounds():
    t = _build("bbbaaaa", "aaaabbbaa")
    with pytest.raises(IndexError):
        t.lookup(8, 0)
    with pytest.raises(IndexError):
        t.lookup(0, 10)
    with pytest.raises(IndexError):
        t.lookup(-1, 3)
    with pytest.raises(IndexError):
        t.lookup_batch([0, 8], [0, 0])


def test_suffix_fixture():
    a = "a" * 5 + "b" * 3 + "a" * 4 + "b" * 2 + "a"
    b = "a" + "b" * 3 + "a" * 7 + "b" * 3
    st = build_suffix_cdp(encode(a), encode(b))
    assert st.lookup(1, 1) == 10
    assert st.lookup(13, 10) == 2
    assert st.lookup(len(a) + 1, 1) == 0
    assert st.lookup(1, len(b) + 1) == 0
    with pytest.raises(IndexError):
        st.lookup(0, 1)
    with pytest.raises(IndexError):
        st.lookup(len(a) + 2, 1)


def test_stored_cells_match_naive():
    rng = random.Random(21)
    for _ in range(300):
        a = _rand_string(rng, 40)
        b = _rand_string(rng, 40)
        t = _build(a, b)
        nav = np.asarray(naive_lcs(a, b), dtype=np.int64)
        cum_a = encode(a).prefix_sums
        cum_b = encode(b).prefix_sums
        assert np.array_equal(t.row_table, nav[cum_a, :])
        assert np.array_equal(t.col_table, nav[:, cum_b])


def test_fill_strategies_agree():
    rng = random.Random(22)
    for _ in range(100):
        a = _rand_string(rng, 60, sigma="ab")
        b = _rand_string(rng, 60, sigma="ab")
        ts = _build(a, b, strategy="scalar")
        td = _build(a, b, strategy="diagonal")
        assert np.array_equal(ts.row_table, td.row_table)
        assert np.array_equal(ts.col_table, td.col_table)
    with pytest.raises(ValueError):
        _build("a", "a", strategy="bogus")


def test_recovery_rules_identity():
    # any cell equals its reconstruction from stored neighbors
    rng = random.Random(23)
    for _ in range(60):
        a = _rand_string(rng, 30)
        b = _rand_string(rng, 30)
        if not a or not b:
            continue
        t = _build(a, b)
        ar, br = encode(a), encode(b)
        for _ in range(30):
            i = rng.randint(1, len(a))
            j = rng.randint(1, len(b))
            p, q = ar.run_of(i), br.run_of(j)
            ra = i - ar.prefix_sums[p - 1]
            rb = j - br.prefix_sums[q - 1]
            if a[i - 1] == b[j - 1]:
                d = min(ra, rb)
                assert t.lookup(i, j) == t.lookup(i - d, j - d) + d
            else:
                assert t.lookup(i, j) == max(
                    t.lookup(ar.prefix_sums[p - 1], j),
                    t.lookup(i, br.prefix_sums[q - 1]))


def test_lookup_batch_matches_scalar():
    rng = random.Random(24)
    for _ in range(50):
        a = _rand_string(rng, 30)
        b = _rand_string(rng, 30)
        t = _build(a, b)
        st = build_suffix_cdp(encode(a), encode(b))
        i = np.array([rng.randint(0, len(a)) for _ in range(40)])
        j = np.array([rng.randint(0, len(b)) for _ in range(40)])
        want = [t.lookup(int(x), int(y)) for x, y in zip(i, j)]
        assert t.lookup_batch(i, j).tolist() == want
        si = i + 1
        sj = j + 1
        wants = [st.lookup(int(x), int(y)) for x, y in zip(si, sj)]
        assert st.lookup_batch(si, sj).tolist() == wants
    assert t.lookup_batch([], []).tolist() == []


def test_backtrack_prefix():
    rng = random.Random(25)
    for _ in range(100):
        a = _rand_string(rng, 30)
        b = _rand_string(rng, 30)
        t = _build(a, b)
        i = rng.randint(0, len(a))
        j = rng.randint(0, len(b))
        z = t.backtrack_lcs(i, j)
        assert len(z) == t.lookup(i, j)
        assert is_subsequence(z.decode(), a[:i])
        assert is_subsequence(z.decode(), b[:j])


def test_backtrack_suffix():
    rng = random.Random(26)
    for _ in range(100):
        a = _rand_string(rng, 30)
        b = _rand_string(rng, 30)
        st = build_suffix_cdp(encode(a), encode(b))
        nav = naive_lcs_suffix(a, b)
        i = rng.randint(1, len(a) + 1)
        j = rng.randint(1, len(b) + 1)
        z = st.backtrack_lcs(i, j)
        assert len(z) == nav[i][j]
        assert is_subsequence(z.decode(), a[i - 1:])
        assert is_subsequence(z.decode(), b[j - 1:])


def test_empty_strings():
    t = _build("", "abc")
    assert t.lookup(0, 3) == 0
    assert t.backtrack_lcs(0, 3).decode() == ""
    t = _build("abc", "")
    assert t.lookup(3, 0) == 0
    st = build_suffix_cdp(encode(""), encode(""))
    assert st.lookup(1, 1) == 0


def test_dump_csv():
    t = _build("bbbaaaa", "aaaabbbaa")
    buf = io.StringIO()
    t.dump_csv(buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "kind,p_or_q,index,value"
    stored = t.row_table.size + t.col_table.size
    assert len(lines) == stored + 1
    assert lines[1] == "row,0,0,0"
    assert "row,2,9,5" in lines
