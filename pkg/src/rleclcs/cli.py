"""Command line front end.

Subcommands: solve one instance, list minimal constraint-fitting intervals,
compute a plain LCS, generate strings with an exact run count, benchmark the
run-compressed solver against the quadratic reference, and verify solver
agreement with the reference implementations on random instances.

Exit codes: 0 success or solution found, 1 no solution, 2 usage or input
error.
"""

import argparse
import csv
import json
import os
import random
import string
import sys
import time

from .intervals import minimal_intervals_multirun, minimal_intervals_singlerun
from .oracle import exhaustive_str_ic_lcs, quadratic_str_ic_lcs
from .rle import RleString, encode, format_rle, parse_rle
from .solver import solve

DEFAULT_SEED = 1729

_LETTERS = string.ascii_lowercase + string.ascii_uppercase + string.digits


class InputError(Exception):
    """Bad user input; reported on stderr and mapped to exit code 2."""


def parse_record(text: str, allow_bare: bool = False) -> RleString:
    """One instance record: `raw:<literal>` or `rle:<runs>`.

    Bare text (no prefix) is accepted as raw only when allow_bare is set,
    which inline command line flags use; file records must carry a prefix.
    """
    if text.startswith("raw:"):
        return encode(text[4:])
    if text.startswith("rle:"):
        try:
            return parse_rle(text[4:])
        except ValueError as exc:
            raise InputError(f"bad RLE record {text[4:]!r}: {exc}") from exc
    if allow_bare:
        return encode(text)
    raise InputError(f"record must start with 'raw:' or 'rle:': {text!r}")


def read_instance(path: str):
    """Three records A, B, C from a line-oriented file.

    Blank lines and lines starting with '#' are skipped; anything else must
    be a prefixed record.
    """
    try:
        with open(path, encoding="utf-8") as fp:
            lines = fp.read().splitlines()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    records = [ln for ln in (ln.strip() for ln in lines)
               if ln and not ln.startswith("#")]
    if len(records) != 3:
        raise InputError(f"instance file must hold exactly 3 records, found {len(records)}")
    return tuple(parse_record(rec) for rec in records)


def format_instance(a: RleString, b: RleString, c: RleString) -> str:
    return "\n".join(f"raw:{s.decode()}" for s in (a, b, c))


def resolve_seed(explicit):
    """Explicit flag wins, then the RLECLCS_SEED environment variable."""
    if explicit is not None:
        return explicit
    env = os.environ.get("RLECLCS_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise InputError(f"RLECLCS_SEED must be an integer, got {env!r}") from exc
    return DEFAULT_SEED


def generate_run_string(length: int, runs: int, alphabet_size: int, rng: random.Random) -> str:
    """Random string of exactly `length` characters in exactly `runs` maximal runs.

    Run lengths come from a uniform composition of `length` into `runs`
    positive parts; adjacent run characters are forced distinct.
    """
    if not 1 <= runs <= length:
        raise ValueError(f"need 1 <= runs <= length, got runs={runs} length={length}")
    if not 2 <= alphabet_size <= len(_LETTERS):
        raise ValueError(f"need 2 <= alphabet <= {len(_LETTERS)}, got {alphabet_size}")
    cuts = sorted(rng.sample(range(1, length), runs - 1))
    bounds = [0, *cuts, length]
    parts = []
    prev = -1
    for x in range(runs):
        pick = rng.randrange(alphabet_size if prev < 0 else alphabet_size - 1)
        if 0 <= prev <= pick:
            pick += 1
        parts.append(_LETTERS[pick] * (bounds[x + 1] - bounds[x]))
        prev = pick
    return "".join(parts)


def random_triple(rng: random.Random, max_len: int = 40,
                  max_constraint: int = 8, max_alphabet: int = 3):
    """Random (A, B, C) raw strings; C is a subsequence of A or B half the time."""
    sigma = _LETTERS[:rng.randint(1, max_alphabet)]
    a = "".join(rng.choice(sigma) for _ in range(rng.randint(0, max_len)))
    b = "".join(rng.choice(sigma) for _ in range(rng.randint(0, max_len)))
    k = rng.randint(0, max_constraint)
    host = a if rng.random() < 0.5 else b
    if rng.random() < 0.5 and len(host) >= k > 0:
        pos = sorted(rng.sample(range(len(host)), k))
        c = "".join(host[x] for x in pos)
    else:
        c = "".join(rng.choice(sigma) for _ in range(k))
    return a, b, c


def run_verify(trials: int, max_len: int, seed: int, solve_fn=None, out=None) -> int:
    """Randomized equivalence suites; returns the exit code.

    Suite one checks the run-compressed solver against the quadratic
    reference; suite two checks the quadratic reference against exhaustive
    search on tiny instances. The first failing instance is printed in
    instance-file format for replay. solve_fn is injectable for harness
    tests and defaults to the real solver.
    """
    if out is None:
        out = sys.stdout
    if solve_fn is None:
        solve_fn = lambda a, b, c: solve(a, b, c).length
    failures = []

    rng = random.Random(f"{seed}:verify:solver")
    passed = 0
    for _ in range(trials):
        a, b, c = random_triple(rng, max_len=max_len)
        got = solve_fn(encode(a), encode(b), encode(c))
        want = quadratic_str_ic_lcs(a, b, c)
        if got == want:
            passed += 1
        elif not failures:
            failures.append(("solver-vs-quadratic", a, b, c, got, want))
    print(f"solver-vs-quadratic: {passed}/{trials} pass", file=out)
    total_passed = passed

    rng = random.Random(f"{seed}:verify:oracle")
    passed = 0
    tiny = min(max_len, 12)
    for _ in range(trials):
        a, b, c = random_triple(rng, max_len=tiny)
        got = quadratic_str_ic_lcs(a, b, c)
        want = exhaustive_str_ic_lcs(a, b, c)
        if got == want:
            passed += 1
        elif not failures:
            failures.append(("quadratic-vs-exhaustive", a, b, c, got, want))
    print(f"quadratic-vs-exhaustive: {passed}/{trials} pass", file=out)
    total_passed += passed

    if total_passed != 2 * trials:
        suite, a, b, c, got, want = failures[0]
        print(f"first failure ({suite}): got {got}, want {want}", file=out)
        print(format_instance(encode(a), encode(b), encode(c)), file=out)
        return 1
    return 0


def _bench_constraints(a: str):
    """One single-run and one multirun constraint probing the string `a`.

    The single-run constraint repeats the longest run's character; the
    multirun one is the first window of eight characters spanning a run
    boundary, with an alternating fallback when no window qualifies.
    """
    runs = encode(a).runs
    ch, exp = max(runs, key=lambda r: r[1])
    single = ch * min(5, exp)
    multi = None
    for x in range(len(a) - 7):
        w = a[x:x + 8]
        if len(set(w)) > 1:
            multi = w
            break
    if multi is None:
        other = next(lt for lt in _LETTERS if lt != a[0])
        multi = (a[0] + other) * 4
    return single, multi


def run_bench(sizes, compressibilities, trials: int, seed: int, fp) -> None:
    """Time solver and quadratic reference over a grid of configurations.

    Each configuration gets one single-run-constraint row and one
    multirun-constraint row per trial.
    """
    writer = csv.writer(fp)
    writer.writerow(["M", "N", "m", "n", "K", "kC", "trial",
                     "solver_ns", "oracle_ns",
                     "cdp_cells", "pair_evals", "scan_steps"])
    for size in sizes:
        for comp in compressibilities:
            n_runs = max(1, min(size, round(size * comp)))
            for trial in range(trials):
                rng = random.Random(f"{seed}:{size}:{comp}:{trial}")
                a = generate_run_string(size, n_runs, 2, rng)
                b = generate_run_string(size, n_runs, 2, rng)
                a_rle, b_rle = encode(a), encode(b)
                for c in _bench_constraints(a):
                    c_rle = encode(c)
                    t0 = time.perf_counter_ns()
                    rep = solve(a_rle, b_rle, c_rle)
                    solver_ns = time.perf_counter_ns() - t0
                    t0 = time.perf_counter_ns()
                    quadratic_str_ic_lcs(a, b, c)
                    oracle_ns = time.perf_counter_ns() - t0
                    writer.writerow([
                        len(a), len(b), a_rle.run_count, b_rle.run_count,
                        len(c), c_rle.run_count, trial,
                        solver_ns, oracle_ns,
                        rep.counters["cdp_cells"],
                        rep.counters["pair_evals"],
                        rep.counters["scan_steps"],
                    ])


def _instance_from_args(args, names=("a", "b", "c")):
    """Instance records from a file argument or inline flags."""
    inline = [getattr(args, nm, None) for nm in names]
    if args.file is not None:
        if any(v is not None for v in inline):
            raise InputError("give either an instance file or inline flags, not both")
        a, b, c = read_instance(args.file)
        picked = {"a": a, "b": b, "c": c}
        return tuple(picked[nm] for nm in names)
    if any(v is None for v in inline):
        flags = ", ".join("-" + nm.upper() for nm in names)
        raise InputError(f"need an instance file or all of {flags}")
    return tuple(parse_record(v, allow_bare=True) for v in inline)


def _emit_report(rep, as_json: bool, reconstruct: bool) -> int:
    if as_json:
        answer = rep.answer_rle.decode() if rep.answer_rle is not None else None
        answer_rle = format_rle(rep.answer_rle) if rep.answer_rle is not None else None
        print(json.dumps({"length": rep.length, "answer": answer,
                          "answer_rle": answer_rle, "counters": rep.counters}))
        return 0 if rep.length is not None else 1
    if rep.length is None:
        print("no-solution")
        return 1
    print(f"length={rep.length}")
    if reconstruct and rep.answer_rle is not None:
        print(f"answer={rep.answer_rle.decode()}")
        print(f"answer_rle={format_rle(rep.answer_rle)}")
    return 0


def cmd_solve(args) -> int:
    a, b, c = _instance_from_args(args)
    rep = solve(a, b, c, reconstruct=args.reconstruct or args.json)
    return _emit_report(rep, args.json, args.reconstruct)


def cmd_intervals(args) -> int:
    a, c = _instance_from_args(args, names=("a", "c"))
    if c.total_len == 0:
        raise InputError("constraint must be nonempty")
    if c.run_count == 1:
        ivs = minimal_intervals_singlerun(a, c)
    else:
        ivs = minimal_intervals_multirun(a, c)
    for s, f in ivs:
        print(f"{s} {f}")
    return 0


def cmd_lcs(args) -> int:
    a, b = _instance_from_args(args, names=("a", "b"))
    rep = solve(a, b, RleString([]), reconstruct=args.reconstruct or args.json)
    return _emit_report(rep, args.json, args.reconstruct)


def cmd_gen(args) -> int:
    rng = random.Random(resolve_seed(args.seed))
    try:
        out = generate_run_string(args.len, args.runs, args.alphabet, rng)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    print(out)
    return 0


def cmd_bench(args) -> int:
    try:
        sizes = [int(tok) for tok in args.sizes.split(",") if tok]
        comps = [float(tok) for tok in args.compressibility.split(",") if tok]
    except ValueError as exc:
        raise InputError(f"bad list argument: {exc}") from exc
    if not sizes or not comps:
        raise InputError("sizes and compressibility lists must be nonempty")
    seed = resolve_seed(args.seed)
    if args.csv is None:
        run_bench(sizes, comps, args.trials, seed, sys.stdout)
        return 0
    try:
        with open(args.csv, "w", newline="", encoding="utf-8") as fp:
            run_bench(sizes, comps, args.trials, seed, fp)
    except OSError as exc:
        raise InputError(f"cannot write {args.csv}: {exc}") from exc
    return 0


def cmd_verify(args) -> int:
    return run_verify(args.trials, args.max_len, resolve_seed(args.seed))


def _add_instance_args(sub, names):
    sub.add_argument("file", nargs="?", default=None,
                     help="instance file (three raw:/rle: records)")
    helps = {"a": "first string", "b": "second string", "c": "constraint string"}
    for nm in names:
        sub.add_argument("-" + nm.upper(), dest=nm, default=None,
                         help=f"{helps[nm]} (bare, raw:..., or rle:...)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rleclcs",
        description="Constrained LCS on run-length encoded strings.")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("solve", help="solve one instance")
    _add_instance_args(sub, ("a", "b", "c"))
    sub.add_argument("--reconstruct", action="store_true",
                     help="also print one optimal answer")
    sub.add_argument("--json", action="store_true", help="machine-readable output")
    sub.set_defaults(func=cmd_solve)

    sub = subs.add_parser("intervals",
                          help="minimal constraint-fitting intervals of one string")
    _add_instance_args(sub, ("a", "c"))
    sub.set_defaults(func=cmd_intervals)

    sub = subs.add_parser("lcs", help="plain LCS of two strings")
    _add_instance_args(sub, ("a", "b"))
    sub.add_argument("--reconstruct", action="store_true",
                     help="also print one optimal answer")
    sub.add_argument("--json", action="store_true", help="machine-readable output")
    sub.set_defaults(func=cmd_lcs)

    sub = subs.add_parser("gen", help="random string with an exact run count")
    sub.add_argument("--len", type=int, required=True, help="string length")
    sub.add_argument("--runs", type=int, required=True, help="number of maximal runs")
    sub.add_argument("--alphabet", type=int, default=2, help="alphabet size")
    sub.add_argument("--seed", type=int, default=None)
    sub.set_defaults(func=cmd_gen)

    sub = subs.add_parser("bench", help="benchmark solver vs quadratic reference")
    sub.add_argument("--sizes", default="100,200",
                     help="comma-separated string lengths")
    sub.add_argument("--compressibility", default="0.1,0.5",
                     help="comma-separated runs/length ratios")
    sub.add_argument("--trials", type=int, default=3)
    sub.add_argument("--csv", default=None, help="output path (default stdout)")
    sub.add_argument("--seed", type=int, default=None)
    sub.set_defaults(func=cmd_bench)

    sub = subs.add_parser("verify", help="randomized agreement suites")
    sub.add_argument("--trials", type=int, default=200)
    sub.add_argument("--max-len", type=int, default=16)
    sub.add_argument("--seed", type=int, default=None)
    sub.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main(sys.argv[1:]))
