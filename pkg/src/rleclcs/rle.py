"""Run-length encoded strings with O(1) position-to-run conversion."""

from itertools import groupby


class RleString:
    """A string stored as maximal (character, exponent) runs.

    Positions are 1-based. ``prefix_sums[p]`` is the combined length of the
    first ``p`` runs (``prefix_sums[0] == 0``) and ``run_index[i - 1]`` is the
    1-based index of the run covering position ``i``; both are materialized up
    front so position/run conversion never scans. Instances are not meant to
    be mutated after construction.
    """

    __slots__ = ("runs", "total_len", "prefix_sums", "run_index")

    def __init__(self, runs):
        runs = [(ch, int(exp)) for ch, exp in runs]
        for x, (ch, exp) in enumerate(runs):
            if len(ch) != 1:
                raise ValueError(f"run character must be a single symbol, got {ch!r}")
            if exp < 1:
                raise ValueError(f"run exponent must be >= 1, got {exp}")
            if x and runs[x - 1][0] == ch:
                raise ValueError(f"adjacent runs share the character {ch!r}")
        sums = [0]
        index = []
        for p, (_, exp) in enumerate(runs, 1):
            sums.append(sums[-1] + exp)
            index.extend([p] * exp)
        self.runs = runs
        self.total_len = sums[-1]
        self.prefix_sums = sums
        self.run_index = index

    @classmethod
    def from_parts(cls, parts):
        """Build from (char, exp) pairs, merging adjacent equal characters.

        Zero-length parts are ignored, so concatenating possibly-empty pieces
        is safe.
        """
        merged = []
        for ch, exp in parts:
            if exp == 0:
                continue
            if merged and merged[-1][0] == ch:
                merged[-1][1] += exp
            else:
                merged.append([ch, exp])
        return cls(merged)

    @property
    def run_count(self):
        return len(self.runs)

    def __len__(self):
        return self.total_len

    def __eq__(self, other):
        if not isinstance(other, RleString):
            return NotImplemented
        return self.runs == other.runs

    def __hash__(self):
        return hash(tuple(self.runs))

    def __repr__(self):
        return f"RleString({format_rle(self)!r})"

    def decode(self) -> str:
        """The plain string this encoding represents."""
        return "".join(ch * exp for ch, exp in self.runs)

    def run_of(self, i: int) -> int:
        """1-based index of the run covering position i (1 <= i <= total_len)."""
        if not 1 <= i <= self.total_len:
            raise IndexError(f"position {i} outside string of length {self.total_len}")
        return self.run_index[i - 1]

    def reverse(self) -> "RleString":
        return RleString(self.runs[::-1])


def encode(text: str) -> RleString:
    """Run-length encode a plain string."""
    return RleString((ch, sum(1 for _ in grp)) for ch, grp in groupby(text))


def format_rle(rle: RleString) -> str:
    """Compact text form: each run as <char><decimal exponent>, concatenated."""
    return "".join(f"{ch}{exp}" for ch, exp in rle.runs)


def parse_rle(text: str) -> RleString:
    """Parse the compact text form produced by format_rle.

    Every run must carry an explicit decimal exponent >= 1, run characters may
    not be digits, and adjacent runs may not repeat a character.
    """
    runs = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isdigit():
            raise ValueError(f"run character at offset {pos} is a digit: {ch!r}")
        pos += 1
        start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if pos == start:
            raise ValueError(f"run {ch!r} at offset {start - 1} is missing its exponent")
        exp = int(text[start:pos])
        if exp == 0:
            raise ValueError(f"run {ch!r} at offset {start - 1} has exponent 0")
        runs.append((ch, exp))
    return RleString(runs)
