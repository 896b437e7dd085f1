"""Minimal constraint-fitting intervals of a run-length encoded string.

An interval [s, f] (1-based, inclusive) minimally fits a constraint string C
inside A when C is a subsequence of A[s..f] but of neither A[s+1..f] nor
A[s..f-1]. Minimal intervals are strictly increasing in both endpoints, so
they form a chain; enumeration alternates a forward scan (earliest end for
the next start) with a backward scan (latest start for that end), walking
runs rather than characters.
"""

from dataclasses import dataclass
from typing import NamedTuple

from .rle import RleString


class CInterval(NamedTuple):
    """Inclusive 1-based interval [s, f]."""

    s: int
    f: int


@dataclass(frozen=True)
class IntervalGroups:
    """Minimal intervals partitioned by (start run, end run) equivalence.

    Group h spans intervals[group_starts[h]:group_starts[h + 1]]; the last
    entry of group_starts is a sentinel equal to len(intervals). Within a
    group, consecutive intervals shift both endpoints by exactly one.
    """

    intervals: list
    group_starts: list

    @property
    def group_count(self) -> int:
        return len(self.group_starts) - 1

    def group(self, h: int) -> list:
        return self.intervals[self.group_starts[h]:self.group_starts[h + 1]]

    def min_of_group(self, h: int) -> CInterval:
        return self.intervals[self.group_starts[h]]


def _bump(counters, key, amount):
    if counters is not None:
        counters[key] = counters.get(key, 0) + amount


def minimal_intervals_multirun(a: RleString, c: RleString, counters=None):
    """All minimal intervals of `a` fitting a constraint of two or more runs.

    Scans run-level state only: a mismatching run of `a` is skipped wholesale,
    a satisfied constraint run hops to the next run of `a` (its remainder
    cannot extend a differing character), and an exhausted run of `a` mid
    constraint-run hops two runs ahead (the next run's character differs).
    Visited-run steps are accumulated into counters["scan_steps"] when a
    counters dict is given; the total is O(len(a.runs) * len(c)).
    """
    if c.run_count <= 1:
        raise ValueError("constraint must span more than one run; "
                         "use minimal_intervals_singlerun for a single run")
    a_chars = [ch for ch, _ in a.runs]
    a_lens = [exp for _, exp in a.runs]
    cum = a.prefix_sums
    c_chars = [ch for ch, _ in c.runs]
    c_lens = [exp for _, exp in c.runs]
    m = len(a_chars)
    k = len(c_chars)
    steps = 0
    out = []
    start = 1
    while start <= a.total_len:
        # forward: smallest f with the constraint fitting a[start..f]
        p = a.run_index[start - 1]
        avail = cum[p] - start + 1
        q = 1
        need = c_lens[0]
        f = None
        while True:
            steps += 1
            if a_chars[p - 1] != c_chars[q - 1]:
                p += 1
            elif avail >= need:
                if q == k:
                    f = cum[p] - avail + need
                    break
                q += 1
                need = c_lens[q - 1]
                p += 1
            else:
                need -= avail
                p += 2
            if p > m:
                break
            avail = a_lens[p - 1]
        if f is None:
            break
        # backward: largest s with the constraint fitting a[s..f]
        p = a.run_index[f - 1]
        avail = f - cum[p - 1]
        q = k
        need = c_lens[k - 1]
        s = None
        while True:
            steps += 1
            if a_chars[p - 1] != c_chars[q - 1]:
                p -= 1
            elif avail >= need:
                if q == 1:
                    s = cum[p - 1] + avail - need + 1
                    break
                q -= 1
                need = c_lens[q - 1]
                p -= 1
            else:
                need -= avail
                p -= 2
            if p < 1:
                break
            avail = a_lens[p - 1]
        # the backward pass retraces a successful forward match
        assert s is not None
        out.append(CInterval(s, f))
        start = s + 1
    _bump(counters, "scan_steps", steps)
    return out


def minimal_intervals_singlerun(a: RleString, c: RleString, counters=None):
    """All minimal intervals for a one-run constraint alpha^K.

    The i-th interval spans the i-th through (i+K-1)-th occurrence of alpha,
    so there are max(0, occurrences - K + 1) of them.
    """
    if c.run_count != 1:
        raise ValueError("constraint must be exactly one run")
    alpha, k_len = c.runs[0]
    occ = []
    pos = 1
    for ch, exp in a.runs:
        if ch == alpha:
            occ.extend(range(pos, pos + exp))
        pos += exp
    _bump(counters, "scan_steps", a.run_count)
    return [CInterval(occ[x], occ[x + k_len - 1])
            for x in range(len(occ) - k_len + 1)]


def group_intervals(intervals, a: RleString) -> IntervalGroups:
    """Partition sorted minimal intervals by (start run, end run) of `a`.

    Input must be strictly increasing in both endpoints, and intervals that
    share both runs must step by exactly one position; anything else is a
    contract violation and raises ValueError.
    """
    ivs = list(intervals)
    starts = []
    prev_key = None
    for x, (s, f) in enumerate(ivs):
        if x:
            ps, pf = ivs[x - 1]
            if s <= ps or f <= pf:
                raise ValueError("intervals must be strictly increasing in both endpoints")
        key = (a.run_of(s), a.run_of(f))
        if key != prev_key:
            starts.append(x)
            prev_key = key
        elif s != ivs[x - 1][0] + 1 or f != ivs[x - 1][1] + 1:
            raise ValueError("intervals sharing start and end runs must step by one")
    starts.append(len(ivs))
    return IntervalGroups(ivs, starts)
