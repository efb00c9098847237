"""Command-line interface.

Exit codes are a stable scripting contract: 0 clean, 1 findings
(misspellings found, or validation problems reported), 2 usage or
input/output error. All output is UTF-8 regardless of locale; plain
output is logical order (terminals handle bidi display).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, report
from .checker import check
from .encode import encode
from .engine import SpellEngine
from .lexicon import LexiconError, save
from .textnorm import normalize
from .suggest import MERGE_POLICIES, SuggestParams
from .tables import (
    KIND_SHAPE,
    KIND_SOUND,
    TableFormatError,
    load_table,
    shape_table,
    sound_table,
    validate_ship_tables,
)


class CliError(Exception):
    """User-facing error; message printed to stderr, exit 2."""


def _force_utf8() -> None:
    for stream in (sys.stdout, sys.stderr):
        try:
            stream.reconfigure(encoding="utf-8")
        except AttributeError:
            pass


def _read_text_file(path: str) -> str:
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror or exc}") from exc
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise CliError(f"{path}: invalid UTF-8 at byte {exc.start}") from exc


def _add_table_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--sound-table", metavar="PATH", help="sound group table (default: shipped)")
    p.add_argument("--shape-table", metavar="PATH", help="shape group table (default: shipped)")


def _add_lexicon_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--index", metavar="PATH", help="saved lexicon index")
    p.add_argument("--words", metavar="PATH", help="word-list file")
    p.add_argument("--strip-diacritics", action="store_true",
                   help="strip harakat during normalization")


def _add_format_opt(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("plain", "json"), default="plain")


def _add_suggest_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-distance", type=int, default=2, metavar="N")
    p.add_argument("--max-results", type=int, default=10, metavar="N")
    p.add_argument("--merge-policy", choices=MERGE_POLICIES, default="union")


def _engine(args: argparse.Namespace) -> SpellEngine:
    if (args.index is None) == (args.words is None):
        raise CliError("exactly one of --index and --words is required")
    return SpellEngine.from_paths(
        sound_table_path=args.sound_table,
        shape_table_path=args.shape_table,
        words_path=args.words,
        index_path=args.index,
        strip_diacritics=args.strip_diacritics,
    )


def _params(args: argparse.Namespace) -> SuggestParams:
    try:
        return SuggestParams(
            max_distance=args.max_distance,
            max_results=args.max_results,
            merge_policy=args.merge_policy,
        )
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def cmd_encode(args: argparse.Namespace) -> int:
    if args.kind == KIND_SOUND:
        table = load_table(args.sound_table, KIND_SOUND) if args.sound_table else sound_table()
    else:
        table = load_table(args.shape_table, KIND_SHAPE) if args.shape_table else shape_table()
    word = normalize(args.word, strip_diacritics=args.strip_diacritics)
    if not word:
        raise CliError("empty word")
    print(encode(word, table))
    return 0


def cmd_build(args: argparse.Namespace) -> int:
    engine = SpellEngine.from_paths(
        sound_table_path=args.sound_table,
        shape_table_path=args.shape_table,
        words_path=args.words,
        strip_diacritics=args.strip_diacritics,
    )
    data = save(engine.lexicon)
    try:
        with open(args.out, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise CliError(f"{args.out}: {exc.strerror or exc}") from exc
    _print_stats(engine, args.format)
    return 0


def _print_stats(engine: SpellEngine, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(engine.stats().to_dict(), ensure_ascii=False))
    else:
        for line in report.stats_lines(engine.lexicon):
            print(line)


def cmd_check(args: argparse.Namespace) -> int:
    engine = _engine(args)
    text = _read_text_file(args.file)
    if args.format == "json":
        rep = engine.check(text)
        print(json.dumps(rep.to_dict(), ensure_ascii=False))
        return 1 if rep.misspelled_count else 0
    findings = 0
    for lineno, line in enumerate(text.split("\n"), start=1):
        rep = check(line, engine.lexicon, strip_diacritics=engine.strip_diacritics)
        for ft in rep.tokens:
            if ft.misspelled:
                print(f"{lineno}:{ft.token.start}:{ft.token.surface}")
                findings += 1
    return 1 if findings else 0


def cmd_suggest(args: argparse.Namespace) -> int:
    engine = _engine(args)
    word = engine.normalize(args.word)
    if not word:
        raise CliError("empty word")
    suggestions = engine.suggest(word, _params(args))
    if args.format == "json":
        print(json.dumps(
            {"word": word, "suggestions": [s.to_dict() for s in suggestions]},
            ensure_ascii=False,
        ))
    else:
        for s in suggestions:
            print(f"{s.rank}\t{s.source}\t{s.distance}\t{s.word}")
    return 0


def cmd_stats(args: argparse.Namespace) -> int:
    engine = _engine(args)
    _print_stats(engine, args.format)
    if args.report_dir:
        for path in report.write_reports(engine.lexicon, args.report_dir):
            print(f"wrote {path}", file=sys.stderr)
    return 0


def cmd_validate_tables(args: argparse.Namespace) -> int:
    sound = load_table(args.sound_table, KIND_SOUND) if args.sound_table else sound_table()
    shape = load_table(args.shape_table, KIND_SHAPE) if args.shape_table else shape_table()
    rep = validate_ship_tables(sound, shape)
    print(rep.summary())
    return 0 if rep.ok else 1


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    engine = _engine(args)
    app = create_app(
        engine,
        cors_origins=tuple(args.cors_origin or ()),
        max_text_bytes=args.max_bytes,
        ui_dir=args.ui_dir,
    )
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sindhispell",
        description="Sindhi spell checking: encode words, build indexes, "
        "check documents, suggest corrections.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="print a word's sound or shape code")
    p.add_argument("word")
    p.add_argument("--kind", choices=(KIND_SOUND, KIND_SHAPE), default=KIND_SOUND)
    p.add_argument("--strip-diacritics", action="store_true")
    _add_table_opts(p)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("build", help="build and save a lexicon index")
    p.add_argument("--words", metavar="PATH", required=True)
    p.add_argument("--out", metavar="PATH", required=True)
    p.add_argument("--strip-diacritics", action="store_true")
    _add_table_opts(p)
    _add_format_opt(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("check", help="flag misspelled words in a file")
    p.add_argument("file")
    _add_table_opts(p)
    _add_lexicon_opts(p)
    _add_format_opt(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("suggest", help="print ranked suggestions for a word")
    p.add_argument("word")
    _add_table_opts(p)
    _add_lexicon_opts(p)
    _add_format_opt(p)
    _add_suggest_opts(p)
    p.set_defaults(func=cmd_suggest)

    p = sub.add_parser("stats", help="print lexicon index statistics")
    p.add_argument("--report-dir", metavar="DIR",
                   help="also write bucket_sizes.tsv and histogram PNGs here")
    _add_table_opts(p)
    _add_lexicon_opts(p)
    _add_format_opt(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("validate-tables", help="validate the group tables")
    _add_table_opts(p)
    p.set_defaults(func=cmd_validate_tables)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--cors-origin", action="append", metavar="ORIGIN",
                   help="allowed CORS origin (repeatable)")
    p.add_argument("--max-bytes", type=int, default=1 << 20,
                   help="request text size cap in bytes")
    p.add_argument("--ui-dir", metavar="DIR",
                   help="serve this directory of static UI files at /")
    _add_table_opts(p)
    _add_lexicon_opts(p)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    _force_utf8()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except CliError as exc:
        print(f"sindhispell: error: {exc}", file=sys.stderr)
        return 2
    except (TableFormatError, LexiconError, OSError, ValueError) as exc:
        print(f"sindhispell: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
