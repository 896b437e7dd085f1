"""Reference implementations used as ground truth in tests and benchmarks.

Everything here works on plain strings, independent of the run-length
encoded machinery, and favors obviousness over speed.
"""

from .intervals import CInterval


def is_subsequence(x: str, y: str) -> bool:
    """True if x can be obtained from y by deleting characters."""
    it = iter(y)
    return all(ch in it for ch in x)


def contains_substring(x: str, c: str) -> bool:
    """True if c occurs in x as a contiguous substring."""
    return c in x


def naive_lcs(a: str, b: str):
    """Full (len(a)+1) x (len(b)+1) LCS prefix table.

    table[i][j] is the LCS length of a[:i] and b[:j].
    """
    n = len(b)
    table = [[0] * (n + 1)]
    prev = table[0]
    for ch in a:
        cur = [0] * (n + 1)
        for j, bj in enumerate(b, 1):
            if ch == bj:
                cur[j] = prev[j - 1] + 1
            else:
                up = prev[j]
                left = cur[j - 1]
                cur[j] = up if up >= left else left
        table.append(cur)
        prev = cur
    return table


def naive_lcs_suffix(a: str, b: str):
    """Full LCS suffix table, 1-based: table[i][j] is the LCS length of
    a[i-1:] and b[j-1:], for 1 <= i <= len(a)+1 and 1 <= j <= len(b)+1
    (row len(a)+1 and column len(b)+1 are the empty-suffix zeros; row and
    column 0 exist only as padding)."""
    m, n = len(a), len(b)
    rev = naive_lcs(a[::-1], b[::-1])
    table = [[0] * (n + 2) for _ in range(m + 2)]
    for i in range(1, m + 2):
        for j in range(1, n + 2):
            table[i][j] = rev[m - i + 1][n - j + 1]
    return table


def _earliest_end(a: str, c: str, s: int):
    """Smallest f (1-based) with c a subsequence of a[s..f], else None."""
    pos = s - 1
    for ch in c:
        pos = a.find(ch, pos)
        if pos < 0:
            return None
        pos += 1
    return pos


def naive_minimal_intervals(a: str, c: str):
    """All [s, f] where c fits a[s..f] but neither a[s+1..f] nor a[s..f-1].

    For a fixed start, the earliest end realizes the right-shrink condition
    by construction, and it cannot decrease as the start moves right, so the
    left-shrink condition is exactly a strict increase at the next start.
    """
    out = []
    if not c:
        return out
    s = 1
    f = _earliest_end(a, c, 1)
    while f is not None:
        nxt = _earliest_end(a, c, s + 1)
        if nxt is None or nxt > f:
            out.append(CInterval(s, f))
        s += 1
        f = nxt
    return out


def quadratic_str_ic_lcs(a: str, b: str, c: str):
    """Length of a longest common subsequence of a and b that contains c as a
    substring, via full DP tables and all pairs of minimal intervals.

    Returns None when no common subsequence contains c. An empty c degrades
    to the plain LCS length.
    """
    if not c:
        return naive_lcs(a, b)[len(a)][len(b)]
    ia = naive_minimal_intervals(a, c)
    ib = naive_minimal_intervals(b, c)
    if not ia or not ib:
        return None
    pref = naive_lcs(a, b)
    suf = naive_lcs_suffix(a, b)
    best = -1
    for s, f in ia:
        pref_row = pref[s - 1]
        suf_row = suf[f + 1]
        for s2, f2 in ib:
            v = pref_row[s2 - 1] + suf_row[f2 + 1]
            if v > best:
                best = v
    return best + len(c)


_MASKS_BY_LENGTH: dict = {}


def exhaustive_str_ic_lcs(a: str, b: str, c: str):
    """Answer by enumerating every subsequence of a (guarded to len(a) <= 15).

    Masks are visited longest-first, so the first subsequence of a that is
    also a subsequence of b and contains c as a substring is an answer.
    Returns None when nothing qualifies.
    """
    if len(a) > 15:
        raise ValueError(f"exhaustive search is limited to len(a) <= 15, got {len(a)}")
    masks = _MASKS_BY_LENGTH.get(len(a))
    if masks is None:
        masks = sorted(range(1 << len(a)), key=lambda mk: -mk.bit_count())
        _MASKS_BY_LENGTH[len(a)] = masks
    for mask in masks:
        z = "".join(ch for x, ch in enumerate(a) if mask >> x & 1)
        if c in z and is_subsequence(z, b):
            return len(z)
    return None
