"""
Command-line surface for Shellsort Gap Lab.

    python cli.py search 7
    python cli.py eval 16 --index 4 --reduced
    python cli.py tables shell-vs-linear
    python cli.py dist 6 --seq 1,4 --format csv
    python cli.py verify gamma

Exit codes: 0 success (a truncated search included), 1 usage or invalid
input, 2 capacity exceeded, 3 verification failure.
"""
import argparse
import json
import logging
import sys

from engine import ENGINE_VERSION
from engine.bad_space import bad2_count, max_comparisons_reduced, reduced_space
from engine.errors import CapacityError, ShellGapError, VerificationError
from engine.gapseq import GapSequence, require_valid, sequence_from_index
from engine.minimax import (
    SearchOptions,
    history_from_dict,
    history_to_dict,
    history_to_json,
    minimax_search,
    render_history,
    resume,
)
from engine.oracle import average_history, distribution
from engine.shell import max_comparisons_full
from engine.verify import SUITES, run_suite
from utils.config import get_settings
from utils.reports import (
    MISSING,
    collect_histories,
    counts_table,
    formulas_table,
    optimal_table,
    render_frame,
    shell_vs_linear_table,
)
from utils.result_store import ResultStore, result_key

logger = logging.getLogger("shellgap")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAPACITY = 2
EXIT_VERIFICATION = 3

TABLES = ("optimal", "counts", "shell-vs-linear", "formulas")
PROGRESS_SUITES = ("codec", "reduction", "formulas", "history")


class CliParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with status 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def setup_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )


def _progress(args):
    return not args.quiet and sys.stderr.isatty()


def _store(args):
    settings = get_settings().with_overrides(store_dir=args.store)
    return ResultStore(settings.store_dir)


def _sequence(args, n):
    """The sequence named by --seq or --index, validated for n."""
    s = GapSequence.parse(args.seq) if args.seq is not None else sequence_from_index(args.index)
    require_valid(s, n)
    return s


def _echo(n, s):
    index = MISSING if s.is_empty else s.index
    print(f"n={n} s={{{s}}} i={index}")


def cmd_search(args):
    if args.resume and not args.checkpoint:
        raise ShellGapError("--resume needs --checkpoint")
    options = SearchOptions(
        index_limit=args.limit,
        budget=args.budget,
        checkpoint=args.checkpoint,
        jobs=args.jobs,
        progress=_progress(args),
    )
    store = _store(args)
    key = result_key("search", args.n)
    # only unrestricted runs are cached
    cacheable = args.limit is None and args.budget is None and not args.resume

    history = None
    if cacheable and not args.force:
        stored = store.get(key)
        if stored is not None:
            logger.info("using stored search for n=%d", args.n)
            history = history_from_dict(stored)
    if history is None:
        if args.resume:
            history = resume(args.checkpoint, args.n, options)
        else:
            history = minimax_search(args.n, options)
        if cacheable or (args.resume and history.complete):
            store.put(key, history_to_dict(history))

    if args.json:
        print(history_to_json(history))
    else:
        print(render_history(history))
        if history.complete:
            print(f"c_{history.n}={history.final_c} s={{{history.final_sequence}}}")
        else:
            print(f"complete=false (indices searched up to {history.index_limit})")
    return EXIT_OK


def cmd_eval(args):
    n = args.n
    s = _sequence(args, n)
    _echo(n, s)
    store = _store(args)
    if args.full or s.is_empty:
        key = result_key("eval-full", n, None if s.is_empty else s.index)
        worst = store.cached(key, lambda: max_comparisons_full(n, s, max_n=args.max_n), force=args.force)
        print(f"max comparisons: {worst} (full space, {n}! permutations)")
    else:
        key = result_key("eval-reduced", n, s.index)
        worst = store.cached(
            key,
            lambda: max_comparisons_reduced(n, s, budget=args.budget, jobs=args.jobs)[0],
            force=args.force,
        )
        card = f"{reduced_space(n, s.largest).cardinality:,}".replace(",", " ")
        print(f"max comparisons: {worst} (reduced space, {card} permutations)")
    return EXIT_OK


def cmd_bad2(args):
    n = args.n
    s = _sequence(args, n)
    _echo(n, s)
    count = bad2_count(n, s, budget=args.budget, jobs=args.jobs)
    print(f"|P_{{{n},(s,2)}}| = {count}")
    return EXIT_OK


def _table(args):
    store = None if args.no_store else _store(args)
    if args.which == "optimal":
        histories = collect_histories(
            args.max_n, store, compute_up_to=args.compute_up_to, force=args.force, jobs=args.jobs
        )
        frame, notes = optimal_table(histories)
        return frame, notes, "Optimal gap sequences", False
    if args.which == "counts":
        frame, notes = counts_table(args.n)
        return frame, notes, f"Reduced-space cardinalities for n={args.n}", False
    if args.which == "shell-vs-linear":
        histories = collect_histories(
            args.max_n, store, compute_up_to=args.compute_up_to, force=args.force, jobs=args.jobs
        )
        frame, notes = shell_vs_linear_table(histories)
        return frame, notes, "Worst-case comparisons: linear insertion vs optimal Shellsort", True
    frame = formulas_table(
        range(args.start, args.stop + 1), brute_force=args.brute_force, budget=args.budget
    )
    return frame, [], "Closed-form worst cases", False


def cmd_tables(args):
    frame, notes, title, index = _table(args)
    if args.format == "json":
        payload = {
            "table": args.which,
            "engine_version": ENGINE_VERSION,
            "frame": json.loads(frame.to_json(orient="split", index=index)),
            "notes": notes,
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(render_frame(frame, notes, title=title, index=index))
    return EXIT_OK


def cmd_dist(args):
    n = args.n
    s = _sequence(args, n)
    hist = distribution(n, s, max_n=args.max_n)
    text = hist.to_csv() if args.format == "csv" else hist.to_json() + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        logger.info("wrote %s", args.output)
        _echo(n, s)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_avg(args):
    records = average_history(args.n, max_n=args.max_n, progress=_progress(args))
    print(f"n={args.n}")
    print("-" * 40)
    for r in records:
        print(f"{'i=' + str(r.i):<9} {'s_i= ' + str(r.sequence):<22} mean={r.mean} ({float(r.mean):.4f})")
    return EXIT_OK


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    failed = []
    reports = []
    for name in names:
        kwargs = {"progress": _progress(args)} if name in PROGRESS_SUITES else {}
        if name == "history":
            kwargs["jobs"] = args.jobs
        report = run_suite(name, **kwargs)
        reports.append(report)
        if not report.passed:
            failed.append(name)
    if args.json:
        print(json.dumps([json.loads(r.to_json()) for r in reports], indent=2, sort_keys=True))
    else:
        print("\n\n".join(r.render() for r in reports))
    if failed:
        raise VerificationError(f"failed suites: {', '.join(failed)}")
    return EXIT_OK


def _add_sequence_arguments(parser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--seq", help="comma-separated increments, e.g. 1,3,7")
    group.add_argument("--index", type=int, help="sequence index i (s_i)")


def build_parser():
    common = CliParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    common.add_argument("--quiet", action="store_true", help="no progress bars")
    common.add_argument("--store", help="result-store directory (overrides SHELLGAP_STORE_DIR)")
    common.add_argument("--force", action="store_true", help="recompute instead of reading stored results")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")

    parser = CliParser(prog="shellgap", description="Worst-case optimal Shellsort gap sequences.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {ENGINE_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    search = sub.add_parser("search", parents=[common], help="minimax search over all gap sequences for n")
    search.add_argument("n", type=int)
    search.add_argument("--limit", type=int, help="search indices 1..LIMIT only")
    search.add_argument("--budget", type=int, help="ranks evaluated per index before a lower bound is recorded")
    search.add_argument("--checkpoint", help="JSONL file with one line per completed index")
    search.add_argument("--resume", action="store_true", help="continue the search in --checkpoint")
    search.add_argument("--json", action="store_true", help="print the history as JSON")
    search.set_defaults(func=cmd_search)

    ev = sub.add_parser("eval", parents=[common], help="worst-case comparison count of one sequence")
    ev.add_argument("n", type=int)
    _add_sequence_arguments(ev)
    space = ev.add_mutually_exclusive_group()
    space.add_argument("--reduced", action="store_true", help="maximum over the reduced space (default)")
    space.add_argument("--full", action="store_true", help="maximum over all n! permutations")
    ev.add_argument("--budget", type=int, help="reduced-space enumeration budget")
    ev.add_argument("--max-n", type=int, help="largest n evaluated over the full space")
    ev.set_defaults(func=cmd_eval)

    bad2 = sub.add_parser("bad2", parents=[common], help="count permutations still bad after two passes")
    bad2.add_argument("n", type=int)
    _add_sequence_arguments(bad2)
    bad2.add_argument("--budget", type=int, help="reduced-space enumeration budget")
    bad2.set_defaults(func=cmd_bad2)

    tables = sub.add_parser("tables", parents=[common], help="render a results table")
    tables.add_argument("which", choices=TABLES)
    tables.add_argument("--max-n", type=int, default=16, help="largest n for optimal and shell-vs-linear")
    tables.add_argument("--compute-up-to", type=int, default=10, help="search n up to this when not stored")
    tables.add_argument("--n", type=int, default=16, help="n for the counts table")
    tables.add_argument("--start", type=int, default=3, help="first n of the formulas table")
    tables.add_argument("--stop", type=int, default=30, help="last n of the formulas table")
    tables.add_argument("--brute-force", action="store_true", help="add reduced-space maxima to the formulas table")
    tables.add_argument("--budget", type=int, help="reduced-space enumeration budget")
    tables.add_argument("--no-store", action="store_true", help="neither read nor write the result store")
    tables.add_argument("--format", choices=("text", "json"), default="text")
    tables.set_defaults(func=cmd_tables)

    dist = sub.add_parser("dist", parents=[common], help="comparison-count histogram over all n! permutations")
    dist.add_argument("n", type=int)
    _add_sequence_arguments(dist)
    dist.add_argument("--format", choices=("csv", "json"), default="csv")
    dist.add_argument("--output", help="write to this file instead of stdout")
    dist.add_argument("--max-n", type=int, help="largest n evaluated over the full space")
    dist.set_defaults(func=cmd_dist)

    avg = sub.add_parser("avg", parents=[common], help="improvement log of the least exact average")
    avg.add_argument("n", type=int)
    avg.add_argument("--max-n", type=int, help="largest n evaluated over the full space")
    avg.set_defaults(func=cmd_avg)

    verify = sub.add_parser("verify", parents=[common], help="run an invariant suite")
    verify.add_argument("suite", choices=(*SUITES, "all"))
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose)
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args)
    except CapacityError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAPACITY
    except VerificationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VERIFICATION
    except (ShellGapError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
