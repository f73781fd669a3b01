"""Command-line front end: ingest, analyze, classify, plan, report, export, demo.

Exit codes: 0 success, 1 usage error, 2 data error, 3 analysis refusal.
All artifacts land under the configured output directory with fixed names,
and identical invocations produce byte-identical files.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import io_formats as iof
from .centrality import (
    Measure,
    Mode,
    betweenness,
    closeness,
    degree,
    eigenvector,
    rank_representatives,
)
from .community import Partition, best_partition, girvan_newman
from .config import OUT_DIR_ENV, RunConfig, build_config, load_config_file
from .demo import DEFAULT_SEED, generate_demo_cohort
from .errors import AnalysisError, DataError, MissingMark, UsageError
from .intervention import plan_intervention, predicted_group_profile
from .model import Cohort, SymmetrizeRule, make_cohort, symmetrize
from .stats import compare_groups, cluster_performance, summarize

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_ANALYSIS = 3

_CONFIG_KEYS = (
    "high_t", "low_t", "k_max", "bin_width", "min_group", "max_group",
    "keep_low_subgroups", "symmetrize", "out_dir",
)

log = logging.getLogger("cohortnet")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="key=value config file")
    common.add_argument("--out-dir", type=Path, dest="out_dir", default=None,
                        help=f"output directory (also via ${OUT_DIR_ENV})")

    parser = _Parser(prog="cohortnet", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", parents=[common],
                       help="parse roster plus ties into a cohort file")
    p.add_argument("--roster", type=Path, required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--edges", type=Path)
    src.add_argument("--adjacency", type=Path)
    p.add_argument("--label", default="cohort")
    p.add_argument("--dedupe", action="store_true",
                   help="drop repeated nominations with a warning instead of failing")
    p.add_argument("--out", type=Path, required=True)
    p.set_defaults(func=_cmd_ingest)

    p = sub.add_parser("analyze", parents=[common],
                       help="centrality measures or community detection")
    p.add_argument("cohort", type=Path)
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--measure", choices=[m.value for m in Measure])
    what.add_argument("--communities", action="store_true")
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.DIRECTED.value,
                   help="betweenness counting mode")
    p.add_argument("--top", type=int, default=None,
                   help="also rank the top N representatives by directed betweenness")
    p.add_argument("--k-max", type=int, dest="k_max", default=None)
    p.add_argument("--symmetrize", type=SymmetrizeRule, default=None,
                   choices=list(SymmetrizeRule))
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("classify", parents=[common],
                       help="per-cluster mean marks and High/Average/Low classes")
    _add_partition_flags(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("plan", parents=[common],
                       help="preserve/disperse assignment plan")
    _add_partition_flags(p)
    p.add_argument("--min-group", type=int, dest="min_group", default=None)
    p.add_argument("--max-group", type=int, dest="max_group", default=None)
    p.add_argument("--keep-low-subgroups", action=argparse.BooleanOptionalAction,
                   dest="keep_low_subgroups", default=None)
    p.set_defaults(func=_cmd_plan)

    p = sub.add_parser("report", parents=[common],
                       help="grade-distribution summaries and histograms")
    p.add_argument("cohorts", type=Path, nargs="+", metavar="cohort")
    p.add_argument("--semester", default=None)
    p.add_argument("--bins", type=int, dest="bin_width", default=None)
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("export", parents=[common],
                       help="write the graph as DOT or GraphML")
    p.add_argument("cohort", type=Path)
    p.add_argument("--format", choices=[f.value for f in iof.GraphFormat],
                   default=iof.GraphFormat.DOT.value)
    p.add_argument("--semester", default=None,
                   help="attach marks (node sizes) from this semester")
    p.add_argument("--partition", type=Path, default=None,
                   help="attach cluster colors from a node,cluster CSV")
    p.set_defaults(func=_cmd_export)

    p = sub.add_parser("demo", parents=[common],
                       help="generate the bundled synthetic cohort")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=_cmd_demo)
    return parser


def _add_partition_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("cohort", type=Path)
    p.add_argument("--semester", default=None)
    p.add_argument("--partition", type=Path, default=None,
                   help="node,cluster CSV; computed on the fly when omitted")
    p.add_argument("--high-t", type=float, dest="high_t", default=None)
    p.add_argument("--low-t", type=float, dest="low_t", default=None)
    p.add_argument("--k-max", type=int, dest="k_max", default=None)
    p.add_argument("--symmetrize", type=SymmetrizeRule, default=None,
                   choices=list(SymmetrizeRule))


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    file_values = load_config_file(args.config) if getattr(args, "config", None) else {}
    flag_values = {
        key: getattr(args, key) for key in _CONFIG_KEYS if hasattr(args, key)
    }
    return build_config(file_values, os.environ.get(OUT_DIR_ENV), flag_values)


def _load_cohort(path: Path) -> Cohort:
    return iof.load_cohort(path.read_bytes())


def _resolve_semester(cohort: Cohort, flag: str | None) -> str:
    if flag is not None:
        return flag
    semesters = cohort.semesters()
    if len(semesters) == 1:
        return semesters[0]
    raise UsageError(
        f"--semester is required; cohort has marks for {semesters or 'no semesters'}"
    )


def _marks_for_all(cohort: Cohort, semester: str) -> dict[int, float]:
    marks = cohort.marks_for(semester)
    missing = sorted(cohort.network.nodes - set(marks))
    if missing:
        raise MissingMark(f"no {semester} mark for node(s) {missing}")
    return marks


def _partition_for(cohort: Cohort, args: argparse.Namespace, cfg: RunConfig) -> Partition:
    if args.partition is not None:
        p = iof.parse_partition_csv(args.partition.read_bytes())
        iof.check_coverage(cohort.network, p, None)
        return p
    view = symmetrize(cohort.network, cfg.symmetrize)
    trace = girvan_newman(view, stop_at_k=cfg.k_max)
    best, _ = best_partition(view, trace, cfg.k_max)
    return best


def _write(path: Path, data: bytes | str) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    if isinstance(data, str):
        data = data.encode("utf-8")
    path.write_bytes(data)
    return path


def _cmd_ingest(args: argparse.Namespace, cfg: RunConfig) -> int:
    roster = iof.parse_roster(args.roster.read_bytes())
    if args.edges is not None:
        nominations = iof.parse_edges(args.edges.read_bytes())
    else:
        nominations = iof.parse_adjacency(args.adjacency.read_bytes())
    cohort = make_cohort(roster, nominations, args.label, dedupe=args.dedupe)
    _write(args.out, iof.save_cohort(cohort))
    print(f"wrote {args.out} ({len(cohort.students)} students, "
          f"{len(cohort.network.edges)} ties)")
    return EXIT_OK


def _cmd_analyze(args: argparse.Namespace, cfg: RunConfig) -> int:
    cohort = _load_cohort(args.cohort)
    net = cohort.network
    out = cfg.out_dir
    if args.communities:
        view = symmetrize(net, cfg.symmetrize)
        trace = girvan_newman(view, stop_at_k=cfg.k_max)
        best, curve = best_partition(view, trace, cfg.k_max)
        _write(out / "modularity_curve.csv", iof.curve_csv(curve))
        _write(out / "partition.csv", iof.partition_csv(best))
        print(f"best partition: k={best.k}, Q={best.q:.4f} "
              f"(wrote {out / 'modularity_curve.csv'}, {out / 'partition.csv'})")
        return EXIT_OK

    measure = Measure(args.measure)
    if measure is Measure.BETWEENNESS:
        scores = betweenness(net, Mode(args.mode))
    elif measure is Measure.CLOSENESS:
        scores = closeness(net)
    elif measure is Measure.EIGENVECTOR:
        scores = eigenvector(net)
    else:
        scores = degree(net)
    for warning in scores.warnings:
        log.warning("%s", warning)
    path = _write(out / f"centrality_{measure.value}.csv", iof.scores_csv(scores))
    written = [path]
    if args.top is not None:
        ranked = rank_representatives(net, args.top)
        ranked_scores = betweenness(net, Mode.DIRECTED).scores
        written.append(_write(out / "representatives.csv",
                              iof.representatives_csv(ranked, ranked_scores)))
    print(f"wrote {', '.join(str(p) for p in written)}")
    return EXIT_OK


def _cmd_classify(args: argparse.Namespace, cfg: RunConfig) -> int:
    cohort = _load_cohort(args.cohort)
    semester = _resolve_semester(cohort, args.semester)
    marks = _marks_for_all(cohort, semester)
    partition = _partition_for(cohort, args, cfg)
    perfs = cluster_performance(partition, marks, cfg.high_t, cfg.low_t)
    path = _write(cfg.out_dir / "clusters.csv", iof.clusters_csv(perfs))
    for c in perfs:
        print(f"cluster {c.cluster}: size {len(c.members)}, "
              f"mean {c.mean_mark:.1f}, {c.perf.value}")
    print(f"wrote {path}")
    return EXIT_OK


def _cmd_plan(args: argparse.Namespace, cfg: RunConfig) -> int:
    cohort = _load_cohort(args.cohort)
    semester = _resolve_semester(cohort, args.semester)
    marks = _marks_for_all(cohort, semester)
    partition = _partition_for(cohort, args, cfg)
    plan = plan_intervention(cohort.network, partition, marks, cfg.policy())
    profiles = predicted_group_profile(plan, marks)
    report = iof.plan_report(plan, profiles, semester)
    csv_path = _write(cfg.out_dir / "plan.csv", iof.plan_csv(plan))
    txt_path = _write(cfg.out_dir / "plan_report.txt", report)
    print(report, end="")
    print(f"wrote {csv_path}, {txt_path}")
    return EXIT_OK


def _cmd_report(args: argparse.Namespace, cfg: RunConfig) -> int:
    if len(args.cohorts) > 2:
        raise UsageError("report takes one or two cohort files")
    cohorts = [_load_cohort(p) for p in args.cohorts]
    mark_lists = []
    for cohort in cohorts:
        semester = _resolve_semester(cohort, args.semester)
        marks = _marks_for_all(cohort, semester)
        mark_lists.append([marks[v] for v in sorted(marks)])
    out = cfg.out_dir
    labels = ["a", "b"]
    written = []
    summaries = []
    for label, values in zip(labels, mark_lists):
        summary = summarize(values, cfg.bin_width)
        summaries.append(summary)
        written.append(_write(out / f"summary_{label}.csv", iof.summary_csv(summary)))
        written.append(_write(out / f"histogram_{label}.csv", iof.histogram_csv(summary)))
    if len(mark_lists) == 2:
        comparison = compare_groups(mark_lists[0], mark_lists[1], cfg.bin_width)
        text = iof.report_text(summaries[0], "cohort a", comparison, "cohort b")
    else:
        text = iof.report_text(summaries[0], "cohort a")
    written.append(_write(out / "report.txt", text))
    print(text, end="")
    print(f"wrote {', '.join(str(p) for p in written)}")
    return EXIT_OK


def _cmd_export(args: argparse.Namespace, cfg: RunConfig) -> int:
    cohort = _load_cohort(args.cohort)
    marks = None
    if args.semester is not None:
        marks = _marks_for_all(cohort, args.semester)
    partition = None
    if args.partition is not None:
        partition = iof.parse_partition_csv(args.partition.read_bytes())
    fmt = iof.GraphFormat(args.format)
    data = iof.export_graph(
        cohort.network, fmt, genders=cohort.genders(), marks=marks, partition=partition
    )
    path = _write(cfg.out_dir / f"graph.{fmt.value}", data)
    print(f"wrote {path}")
    return EXIT_OK


def _cmd_demo(args: argparse.Namespace, cfg: RunConfig) -> int:
    cohort, planted = generate_demo_cohort(args.seed)
    out = cfg.out_dir
    written = [
        _write(out / "roster.csv", iof.export_roster(cohort.students)),
        _write(out / "edges.csv", iof.export_edges(cohort.network)),
        _write(out / "cohort.json", iof.save_cohort(cohort)),
    ]
    print(f"demo cohort: {len(cohort.students)} students, "
          f"{len(cohort.network.edges)} ties, {planted.k} planted communities")
    print(f"wrote {', '.join(str(p) for p in written)}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(format="%(levelname)s: %(message)s")
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _config_from_args(args)
        return args.func(args, cfg)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except AnalysisError as exc:
        print(f"analysis refused: {exc}", file=sys.stderr)
        return EXIT_ANALYSIS
    except OSError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA


def entrypoint() -> None:
    sys.exit(main())
