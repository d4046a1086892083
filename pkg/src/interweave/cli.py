"""Command line interface.

Subcommands:

* ``count``     census of shift classes for one order
* ``list``      canonical representatives, one tuple line each
* ``classify``  class report for a single matrix
* ``render``    drawdown chart or PBM bitmap for a single matrix
* ``verify``    recompute small-order censuses and diff them against
                the packaged reference constants

Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.
Counts print as exact integers with no grouping so output diffs cleanly
against the reference fixture.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .classify import ClassRecord, classify
from .enumeration import (
    ALL,
    INTERWEAVINGS,
    EnumConfig,
    Shard,
    enumerate_classes,
    enumerate_sharded,
    load_expected,
    verify_table,
)
from .formats import (
    MatrixParseError,
    format_tuple,
    parse_matrix,
    parse_tuple,
    render_chart,
    render_pbm,
)

LIST_FILTERS = ("all", "mirror", "rotation")


def _parse_shard(text: str) -> Shard:
    try:
        index_text, total_text = text.split("/", 1)
        shard = Shard(int(index_text), int(total_text))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"shard must look like INDEX/TOTAL, got {text!r}"
        ) from None
    if shard.total < 1 or not 0 <= shard.index < shard.total:
        raise argparse.ArgumentTypeError(f"invalid shard {text!r}")
    return shard


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="interweave",
        description="Shift classes of square binary matrices "
        "(weaving interweavings): count, list, classify, render, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_enum_flags(p, with_mode):
        p.add_argument("--n", type=int, required=True, help="matrix order")
        if with_mode:
            p.add_argument(
                "--mode",
                choices=(INTERWEAVINGS, ALL),
                default=INTERWEAVINGS,
                help="census of interweavings only, or of all matrices",
            )
        p.add_argument(
            "--shard",
            type=_parse_shard,
            default=None,
            metavar="INDEX/TOTAL",
            help="run a single shard of the generation loop",
        )
        p.add_argument(
            "--jobs",
            type=int,
            default=None,
            metavar="J",
            help="split into J shards and run them in J worker processes",
        )
        p.add_argument(
            "--limit-override",
            action="store_true",
            help="allow orders 6 and up (multi-hour enumerations)",
        )
        p.add_argument(
            "--progress",
            action="store_true",
            help="report candidates examined on stderr "
            "(per batch; single-process runs only)",
        )

    count = sub.add_parser("count", help="print the census for one order")
    add_enum_flags(count, with_mode=True)

    lst = sub.add_parser(
        "list", help="print one canonical representative line per class"
    )
    add_enum_flags(lst, with_mode=False)
    lst.add_argument(
        "--filter",
        choices=LIST_FILTERS,
        default="all",
        help="restrict to self-mirror or rotation-stable classes",
    )
    lst.add_argument("--out", default=None, help="write lines here instead of stdout")

    cls = sub.add_parser("classify", help="class report for one matrix")
    _add_matrix_input(cls)

    render = sub.add_parser("render", help="render one matrix as a pattern")
    _add_matrix_input(render)
    render.add_argument(
        "--format",
        choices=("grid", "pbm"),
        default="grid",
        help="drawdown chart (grid) or portable bitmap (pbm)",
    )
    render.add_argument("--out", default=None, help="write here instead of stdout")

    verify = sub.add_parser(
        "verify", help="recompute censuses and compare with reference constants"
    )
    verify.add_argument(
        "--n-max", type=int, default=4, help="verify orders 2..N_MAX (2..5)"
    )
    verify.add_argument(
        "--expected",
        default=None,
        help="read reference constants from this file instead of the "
        "packaged fixture (lines of: order key value)",
    )
    verify.add_argument(
        "--jobs", type=int, default=None, metavar="J", help="shard each census J ways"
    )
    return parser


def _add_matrix_input(p):
    p.add_argument(
        "words",
        nargs="*",
        help="matrix in tuple form: the decimal row words, e.g. '1 2'",
    )
    p.add_argument(
        "--file",
        default=None,
        help="read the matrix (tuple or grid form) from this file",
    )


def _read_matrix(args):
    if args.file is not None:
        if args.words:
            raise ValueError("give the matrix inline or via --file, not both")
        with open(args.file, encoding="utf-8") as handle:
            return parse_matrix(handle.read())
    if not args.words:
        raise ValueError("no matrix given; pass row words or --file")
    return parse_tuple(" ".join(args.words))


def _progress_printer(shard: Shard):
    def report(candidates: int):
        print(
            f"shard {shard.index}/{shard.total}: "
            f"{candidates} candidates examined",
            file=sys.stderr,
        )

    return report


def _parallel_jobs(args) -> Optional[int]:
    """J when the run should fan out to J worker processes, else None."""
    if args.shard is not None and args.jobs is not None:
        raise ValueError("--shard and --jobs are mutually exclusive")
    if args.jobs is not None and args.jobs > 1:
        return args.jobs
    return None


def _single_config(args, mode: str):
    shard = args.shard or Shard()
    cfg = EnumConfig(args.n, mode, shard, args.limit_override)
    progress = _progress_printer(shard) if args.progress else None
    return cfg, progress


def cmd_count(args) -> int:
    jobs = _parallel_jobs(args)
    if jobs:
        report, _ = enumerate_sharded(
            args.n,
            args.mode,
            shards=jobs,
            jobs=jobs,
            limit_override=args.limit_override,
        )
    else:
        cfg, progress = _single_config(args, args.mode)
        report = enumerate_classes(cfg, progress=progress)
    lines = [f"n: {report.n}", f"q_count: {report.q_count}"]
    if report.b_bar is not None:
        lines.append(f"b_bar: {report.b_bar}")
    lines += [
        f"q_bar: {report.q_bar}",
        f"m_bar: {report.m_bar}",
        f"r_bar: {report.r_bar}",
        f"candidates_examined: {report.candidates_examined}",
        f"elapsed: {report.elapsed:.3f}",
    ]
    print("\n".join(lines))
    return 0


def cmd_list(args) -> int:
    jobs = _parallel_jobs(args)
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        if jobs:
            _, rows = enumerate_sharded(
                args.n,
                INTERWEAVINGS,
                shards=jobs,
                jobs=jobs,
                limit_override=args.limit_override,
                collect=args.filter,
            )
            for row_words in rows:
                out.write(" ".join(str(w) for w in row_words) + "\n")
        else:
            # Single shard: generation order is lexicographic, so the
            # records stream straight out without buffering.
            cfg, progress = _single_config(args, INTERWEAVINGS)
            wanted = args.filter

            def sink(rec: ClassRecord):
                if wanted == "mirror" and not rec.self_mirror:
                    return
                if wanted == "rotation" and not rec.rotation_stable:
                    return
                out.write(format_tuple(rec.canonical) + "\n")

            enumerate_classes(cfg, sink, progress=progress)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_classify(args) -> int:
    record = classify(_read_matrix(args))
    flags = (
        ("interweaving", record.is_interweaving),
        ("self_mirror", record.self_mirror),
        ("rotation_stable", record.rotation_stable),
    )
    print(f"order: {record.canonical.n}")
    print(f"canonical: {format_tuple(record.canonical)}")
    print(f"orbit_size: {record.orbit_size}")
    for name, value in flags:
        print(f"{name}: {'yes' if value else 'no'}")
    return 0


def cmd_render(args) -> int:
    matrix = _read_matrix(args)
    text = render_pbm(matrix) if args.format == "pbm" else render_chart(matrix) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    expected = load_expected(args.expected) if args.expected else None
    shards = args.jobs if args.jobs and args.jobs > 1 else 1
    cells = verify_table(args.n_max, expected=expected, shards=shards, jobs=args.jobs)
    failures = 0
    for cell in cells:
        status = "PASS" if cell.ok else "FAIL"
        failures += not cell.ok
        print(
            f"n={cell.n} {cell.key:<8} {cell.method:<10} "
            f"expected {cell.expected:>12} computed {cell.actual:>12} {status}"
        )
    print(f"verify: {'FAIL' if failures else 'PASS'} "
          f"({len(cells) - failures}/{len(cells)} cells)")
    return 1 if failures else 0


COMMANDS = {
    "count": cmd_count,
    "list": cmd_list,
    "classify": cmd_classify,
    "render": cmd_render,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (MatrixParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
