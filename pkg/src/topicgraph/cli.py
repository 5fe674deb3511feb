"""Command line interface: index build/stats, one-shot queries, serve.

Exit codes: 0 success, 1 usage error (bad flags or unusable parameter
values), 2 data error (unreadable corpus or index). The structured
output format is the same canonical serialization the HTTP endpoint
returns, so the two can be compared byte for byte.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from .corpus import (
    Tokenizer,
    build_index,
    load_index,
    load_stopwords,
    read_corpus_dir,
    read_corpus_jsonl,
    save_index,
)
from .extraction import ClassConfig
from .pipeline import MODES, build_graph, to_dot, to_text
from .retrieval import EmptyQueryError
from .service import load_config, serve

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage problems; 2 is reserved for data errors
    here, so usage problems exit 1 instead."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fail_data(exc: Exception) -> int:
    print(f"error: {exc}", file=sys.stderr)
    return EXIT_DATA


def _cmd_index_build(args: argparse.Namespace) -> int:
    source = Path(args.corpus)
    try:
        if source.is_file() and source.suffix == ".jsonl":
            docs = read_corpus_jsonl(source)
        else:
            docs = read_corpus_dir(source)
        tokenizer = Tokenizer(load_stopwords(args.stopwords)) if args.stopwords else None
        index = build_index(docs, tokenizer=tokenizer)
        save_index(index, args.out)
    except (OSError, ValueError) as exc:
        return _fail_data(exc)
    print(
        f"indexed {index.doc_count} documents,"
        f" vocabulary {index.vocabulary_size} -> {args.out}"
    )
    return EXIT_OK


def _cmd_index_stats(args: argparse.Namespace) -> int:
    try:
        index = load_index(args.index)
    except (OSError, ValueError) as exc:
        return _fail_data(exc)
    print(f"documents: {index.doc_count}")
    print(f"vocabulary: {index.vocabulary_size}")
    print("top DF words:")
    for word, df in index.top_df_words(10):
        print(f"  {word}  {df}")
    return EXIT_OK


def _cmd_query(args: argparse.Namespace) -> int:
    try:
        index = load_index(args.index)
    except (OSError, ValueError) as exc:
        return _fail_data(exc)
    try:
        class_cfg = ClassConfig(n=args.n, c=args.c, l=args.l, b=args.b)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        payload = build_graph(index, args.terms, class_cfg=class_cfg, mode=args.mode)
    except EmptyQueryError:
        print(f"error: query has no usable terms: {args.terms!r}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "structured":
        print(payload.to_json())
    elif args.format == "dot":
        print(to_dot(payload))
    else:
        print(to_text(payload))
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    try:
        config = load_config(args.config)
    except (OSError, ValueError) as exc:
        return _fail_data(exc)
    overrides = {
        "host": args.host,
        "port": args.port,
        "index_path": args.index,
        "corpus_dir": args.corpus,
        "static_dir": args.static,
        "page_size": args.page_size,
    }
    config = replace(config, **{k: v for k, v in overrides.items() if v is not None})
    try:
        serve(config)
    except FileNotFoundError as exc:
        return _fail_data(exc)
    return EXIT_OK


def build_arg_parser() -> _Parser:
    parser = _Parser(prog="topicgraph", description="Topic word graph retrieval guidance.")
    sub = parser.add_subparsers(dest="command", required=True)

    index_p = sub.add_parser("index", help="build or inspect a saved index")
    index_sub = index_p.add_subparsers(dest="index_command", required=True)
    build_p = index_sub.add_parser("build", help="index a corpus and save it")
    build_p.add_argument(
        "corpus", help="directory of documents (first line = title) or a .jsonl file"
    )
    build_p.add_argument("--out", required=True, help="where to write the index file")
    build_p.add_argument("--stopwords", default=None, help="replacement stopword list file")
    build_p.set_defaults(func=_cmd_index_build)
    stats_p = index_sub.add_parser("stats", help="print corpus statistics of a saved index")
    stats_p.add_argument("index", help="index file")
    stats_p.set_defaults(func=_cmd_index_stats)

    query_p = sub.add_parser("query", help="run one query and print the topic word graph")
    query_p.add_argument("index", help="index file")
    query_p.add_argument("terms", help="query terms, conjunctive")
    query_p.add_argument("--n", type=int, default=15, help="number of topic words")
    query_p.add_argument("--c", type=int, default=3, help="number of frequency classes")
    query_p.add_argument("--l", type=float, default=1 / 32, help="lower frequency boundary")
    query_p.add_argument("--b", type=float, default=0.0, help="balance in [-1, 1]")
    query_p.add_argument("--mode", choices=MODES, default="classed")
    query_p.add_argument("--format", choices=("text", "dot", "structured"), default="text")
    query_p.set_defaults(func=_cmd_query)

    serve_p = sub.add_parser("serve", help="run the HTTP service")
    serve_p.add_argument("--config", default=None, help="key=value config file")
    serve_p.add_argument("--host", default=None)
    serve_p.add_argument("--port", type=int, default=None)
    serve_p.add_argument("--index", default=None, help="index file to serve")
    serve_p.add_argument("--corpus", default=None, help="corpus dir to build from if no index")
    serve_p.add_argument("--static", default=None, help="static UI directory to mount at /ui")
    serve_p.add_argument("--page-size", type=int, default=None, dest="page_size")
    serve_p.set_defaults(func=_cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_arg_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
