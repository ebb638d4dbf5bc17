"""Batch command line driving the pipeline: extract raw words, analyze a
curated project, render its network to a .gv file, or serve the HTTP API.

Exit codes: 0 success, 1 usage error, 2 corpus error, 3 project/registry error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from .analysis import (
    KERNELS,
    apply_thresholds,
    compute_frequencies,
    compute_interactions,
    format_score,
    frequencies_tsv,
    index_occurrences,
    interactions_tsv,
)
from .corpus import CorpusError, load_corpus
from .graphout import emit_dot
from .names import RegistryError
from .project import ProjectError, load_project, with_overrides
from .wordlist import ExtractionConstraints, extract_raw_words

__all__ = ["run", "main", "build_parser"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CORPUS = 2
EXIT_PROJECT = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the contract here reserves 2 for
    # corpus errors, so usage problems exit 1 instead.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _unit_interval(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number") from None
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"must be in [0, 1], got {value}")
    return value


def _add_corpus_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--glob", default=None, help="file pattern inside the folder (default: *.txt)")
    sub.add_argument("--encoding", default=None, help="text encoding of the files (default: utf-8)")


def _add_constraint_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--min-length", type=_positive_int, default=None,
                     help="keep words with at least this many letters (default: 3)")
    sub.add_argument("--capitalized", action=argparse.BooleanOptionalAction, default=None,
                     help="keep only words starting with an uppercase letter (default: on)")
    sub.add_argument("--min-count", type=_positive_int, default=None,
                     help="keep words occurring at least this often (default: 2)")


def _add_analysis_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--delta-s", type=_positive_int, default=None,
                     help="word-distance cutoff of the proximity kernel (default: 40)")
    sub.add_argument("--f-t-char", type=_unit_interval, default=None,
                     help="frequency threshold for characters, in [0, 1] (default: 0.2)")
    sub.add_argument("--f-t-place", type=_unit_interval, default=None,
                     help="frequency threshold for places, in [0, 1] (default: 0.4)")
    sub.add_argument("--i-t", type=_unit_interval, default=None,
                     help="interaction threshold, in [0, 1] (default: 0.35)")
    sub.add_argument("--kernel", choices=KERNELS, default=None,
                     help="proximity kernel (default: linear)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="storynet",
                     description="Extract character/place interaction networks from text folders.")
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    extract = subs.add_parser("extract", help="write the raw-word table as TSV")
    extract.add_argument("--folder", default=None, help="folder of text files")
    extract.add_argument("--project", default=None, help="project file supplying folder/constraints")
    extract.add_argument("--out", required=True, help="output TSV path")
    _add_corpus_flags(extract)
    _add_constraint_flags(extract)
    extract.set_defaults(func=cmd_extract)

    analyze = subs.add_parser("analyze", help="write frequency and interaction tables as TSV")
    analyze.add_argument("--project", required=True, help="project file")
    analyze.add_argument("--out-prefix", required=True, help="writes <prefix>.frequencies.tsv and <prefix>.interactions.tsv")
    _add_corpus_flags(analyze)
    _add_analysis_flags(analyze)
    analyze.set_defaults(func=cmd_analyze)

    render = subs.add_parser("render", help="run the full pipeline and write a Graphviz .gv file")
    render.add_argument("--project", required=True, help="project file")
    render.add_argument("--out", required=True, help="output .gv path")
    _add_corpus_flags(render)
    _add_analysis_flags(render)
    render.set_defaults(func=cmd_render)

    serve = subs.add_parser("serve", help="start the local HTTP API for the curation UI")
    serve.add_argument("--host", default="127.0.0.1", help="bind address (default: 127.0.0.1)")
    serve.add_argument("--port", type=int, default=7414, help="port (default: 7414)")
    serve.set_defaults(func=cmd_serve)

    return parser


def _write(path: str | Path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8", newline="")


def cmd_extract(args) -> int:
    if args.project:
        project = load_project(args.project)
        folder = Path(args.folder) if args.folder else project.resolve_corpus_path(args.project)
        glob = args.glob or project.glob
        encoding = args.encoding or project.encoding
        constraints = project.constraints
    else:
        if not args.folder:
            print("error: extract needs --folder or --project", file=sys.stderr)
            return EXIT_USAGE
        folder = Path(args.folder)
        glob = args.glob or "*.txt"
        encoding = args.encoding or "utf-8"
        constraints = ExtractionConstraints()

    overrides = {}
    if args.min_length is not None:
        overrides["min_length"] = args.min_length
    if args.capitalized is not None:
        overrides["require_capitalized"] = args.capitalized
    if args.min_count is not None:
        overrides["min_count"] = args.min_count
    if overrides:
        constraints = replace(constraints, **overrides)

    corpus = load_corpus(folder, encoding=encoding, glob=glob)
    table = extract_raw_words(corpus, constraints)
    _write(args.out, table.to_tsv())
    print(f"{len(table)} raw words -> {args.out}")
    return EXIT_OK


def _load_pipeline(args):
    project = load_project(args.project)
    project = with_overrides(
        project,
        delta_s=args.delta_s,
        f_t_char=args.f_t_char,
        f_t_place=args.f_t_place,
        i_t=args.i_t,
        kernel=args.kernel,
    )
    folder = project.resolve_corpus_path(args.project)
    corpus = load_corpus(
        folder,
        encoding=args.encoding or project.encoding,
        glob=args.glob or project.glob,
    )
    return project, corpus


def _warn_degenerate(registry, inter) -> None:
    if len(registry) < 2:
        print("warning: fewer than two names registered; nothing to score", file=sys.stderr)
    elif inter.all_zero:
        print("warning: no co-occurrence within delta_s anywhere; interaction matrix is all zero",
              file=sys.stderr)


def cmd_analyze(args) -> int:
    project, corpus = _load_pipeline(args)
    index = index_occurrences(corpus, project.registry)
    freq = compute_frequencies(index, project.registry)
    inter = compute_interactions(index, project.params.make_kernel())

    _write(f"{args.out_prefix}.frequencies.tsv", frequencies_tsv(freq, project.registry))
    _write(f"{args.out_prefix}.interactions.tsv", interactions_tsv(inter, project.registry))

    non_zero = sum(1 for value in inter.raw.values() if value > 0.0)
    print(f"{len(project.registry)} names, {non_zero} non-zero pairs, "
          f"max raw sum {format_score(inter.max_raw)}")
    _warn_degenerate(project.registry, inter)
    return EXIT_OK


def cmd_render(args) -> int:
    project, corpus = _load_pipeline(args)
    index = index_occurrences(corpus, project.registry)
    freq = compute_frequencies(index, project.registry)
    inter = compute_interactions(index, project.params.make_kernel())
    network = apply_thresholds(freq, inter, project.params, project.registry)

    _write(args.out, emit_dot(network))
    print(f"{len(network.nodes)} nodes, {len(network.edges)} edges -> {args.out}")
    _warn_degenerate(project.registry, inter)
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return EXIT_OK


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except CorpusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CORPUS
    except (ProjectError, RegistryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PROJECT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
