"""STR-IC-LCS on run-length encoded strings.

Finds the length of (and optionally reconstructs) a longest common
subsequence of A and B that contains the constraint C as a contiguous
substring. Any answer decomposes as X + C + Y where X is an LCS of the
prefixes strictly before some minimal C-fitting interval pair and Y an LCS
of the suffixes strictly after it, so the search space is pairs of minimal
intervals, scored with two O(1) table lookups each.
"""

from dataclasses import dataclass

import numpy as np

from .cdp import build_prefix_cdp, build_suffix_cdp
from .intervals import (
    group_intervals,
    minimal_intervals_multirun,
    minimal_intervals_singlerun,
)
from .rle import RleString

_COUNTER_KEYS = ("cdp_cells", "pair_evals", "scan_steps",
                 "intervals_a", "intervals_b", "groups_a", "groups_b")

# cap on elements per scoring batch; keeps transient arrays small
_PAIR_CHUNK = 262_144


@dataclass
class SolveReport:
    """Outcome of one solve: length is None when no common subsequence of A
    and B contains C; answer_rle is populated only when reconstruction was
    requested and a solution exists."""

    length: int | None
    answer_rle: RleString | None
    counters: dict


def _score_product(rows_iv, cols_iv, pref, suf):
    """Best prefix+suffix sum over the full cross product of two interval
    lists, preferring the lexicographically smallest (s, s') maximizer.

    Both lists must be sorted by start; scoring is batched, chunked to cap
    memory use.
    """
    if not rows_iv or not cols_iv:
        return -1, None
    sa = np.fromiter((iv.s for iv in rows_iv), dtype=np.int64, count=len(rows_iv))
    fa = np.fromiter((iv.f for iv in rows_iv), dtype=np.int64, count=len(rows_iv))
    sb = np.fromiter((iv.s for iv in cols_iv), dtype=np.int64, count=len(cols_iv))
    fb = np.fromiter((iv.f for iv in cols_iv), dtype=np.int64, count=len(cols_iv))
    width = len(cols_iv)
    best_val, best_at = -1, -1
    step = max(1, _PAIR_CHUNK // width)
    for x0 in range(0, len(rows_iv), step):
        x1 = min(x0 + step, len(rows_iv))
        i_pref = np.repeat(sa[x0:x1] - 1, width)
        j_pref = np.tile(sb - 1, x1 - x0)
        i_suf = np.repeat(fa[x0:x1] + 1, width)
        j_suf = np.tile(fb + 1, x1 - x0)
        sums = pref.lookup_batch(i_pref, j_pref) + suf.lookup_batch(i_suf, j_suf)
        at = int(np.argmax(sums))
        val = int(sums[at])
        if val > best_val:
            best_val = val
            best_at = x0 * width + at
    return best_val, (rows_iv[best_at // width], cols_iv[best_at % width])


def _merge_best(first, second):
    """Prefer higher sum, then lexicographically smaller ((s, f), (s', f'))."""
    if first[1] is None:
        return second
    if second[1] is None:
        return first
    if second[0] > first[0] or (second[0] == first[0] and second[1] < first[1]):
        return second
    return first


def solve_pairs_multirun(ia, ib, pref, suf, counters=None):
    """Score every pair of minimal intervals (multirun constraint).

    Returns (best prefix+suffix sum, best pair), or (None, None) when either
    side has no interval.
    """
    if not ia or not ib:
        return None, None
    if counters is not None:
        counters["pair_evals"] = counters.get("pair_evals", 0) + len(ia) * len(ib)
    val, pair = _score_product(ia, ib, pref, suf)
    return val, pair


def solve_pairs_singlerun(ga, gb, pref, suf, counters=None):
    """Score the grouped pair family for a one-run constraint.

    Within one pair of (start run, end run) groups the prefix+suffix sum is
    constant along diagonals, so only pairs involving a group minimum need
    scoring: (minima of A's groups) x (all of B) and (all of A) x (minima of
    B's groups). Returns (best sum, best pair) or (None, None).
    """
    if not ga.intervals or not gb.intervals:
        return None, None
    mins_a = [ga.min_of_group(h) for h in range(ga.group_count)]
    mins_b = [gb.min_of_group(h) for h in range(gb.group_count)]
    if counters is not None:
        evals = len(mins_a) * len(gb.intervals) + len(mins_b) * len(ga.intervals)
        counters["pair_evals"] = counters.get("pair_evals", 0) + evals
    best = _merge_best(_score_product(mins_a, gb.intervals, pref, suf),
                       _score_product(ga.intervals, mins_b, pref, suf))
    return best if best[1] is not None else (None, None)


def _reconstruct(pair, pref, suf, c: RleString) -> RleString:
    (s, f), (s2, f2) = pair
    x = pref.backtrack_lcs(s - 1, s2 - 1)
    y = suf.backtrack_lcs(f + 1, f2 + 1)
    return RleString.from_parts([*x.runs, *c.runs, *y.runs])


def solve(a: RleString, b: RleString, c: RleString, reconstruct: bool = False) -> SolveReport:
    """Length (and optionally one witness) of an LCS of A and B containing C.

    An empty constraint degrades to the plain LCS. Instrumentation counters
    are always collected: stored table cells, interval-pair evaluations, and
    interval-scan run visits, plus interval/group tallies.
    """
    counters = dict.fromkeys(_COUNTER_KEYS, 0)
    pref = build_prefix_cdp(a, b)
    suf = build_suffix_cdp(a, b)
    counters["cdp_cells"] = pref.row_table.size + pref.col_table.size
    if c.total_len == 0:
        length = pref.lookup(a.total_len, b.total_len)
        answer = pref.backtrack_lcs(a.total_len, b.total_len) if reconstruct else None
        return SolveReport(length, answer, counters)
    if c.run_count == 1:
        ia = minimal_intervals_singlerun(a, c, counters)
        ib = minimal_intervals_singlerun(b, c, counters)
        counters["intervals_a"], counters["intervals_b"] = len(ia), len(ib)
        if not ia or not ib:
            return SolveReport(None, None, counters)
        ga = group_intervals(ia, a)
        gb = group_intervals(ib, b)
        counters["groups_a"], counters["groups_b"] = ga.group_count, gb.group_count
        best_sum, best_pair = solve_pairs_singlerun(ga, gb, pref, suf, counters)
    else:
        ia = minimal_intervals_multirun(a, c, counters)
        ib = minimal_intervals_multirun(b, c, counters)
        counters["intervals_a"], counters["intervals_b"] = len(ia), len(ib)
        if not ia or not ib:
            return SolveReport(None, None, counters)
        best_sum, best_pair = solve_pairs_multirun(ia, ib, pref, suf, counters)
    length = best_sum + c.total_len
    answer = _reconstruct(best_pair, pref, suf, c) if reconstruct else None
    return SolveReport(length, answer, counters)
