"""Constrained LCS on run-length encoded strings.

Computes the longest common subsequence of two strings that contains a
third string as a contiguous substring, with all dynamic programming done
on boundary rows and columns of the run-length encoding.
"""

from . import oracle
from .cdp import CompressedDpTable, SuffixCdpTable, build_prefix_cdp, build_suffix_cdp
from .intervals import (
    CInterval,
    IntervalGroups,
    group_intervals,
    minimal_intervals_multirun,
    minimal_intervals_singlerun,
)
from .rle import RleString, encode, format_rle, parse_rle
from .solver import SolveReport, solve, solve_pairs_multirun, solve_pairs_singlerun

__all__ = [
    "RleString",
    "encode",
    "format_rle",
    "parse_rle",
    "CompressedDpTable",
    "SuffixCdpTable",
    "build_prefix_cdp",
    "build_suffix_cdp",
    "CInterval",
    "IntervalGroups",
    "group_intervals",
    "minimal_intervals_multirun",
    "minimal_intervals_singlerun",
    "SolveReport",
    "solve",
    "solve_pairs_multirun",
    "solve_pairs_singlerun",
    "oracle",
]

__version__ = "0.1.0"
