"""Command-line interface.

Subcommands: validate, threads, convert, stats, taxonomy, serve. Data
goes to standard output; failure messages and incidental notices go to
standard error. Exit codes are a stable contract: 0 success, 1
validation or domain failure, 2 usage, I/O, or parse failure. All
commands are deterministic: the same input bytes produce the same
output bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .convert import (
    export_reply_graph,
    format_reply_lines,
    import_reply_graph,
    import_transcript,
    parse_reply_lines,
)
from .errors import DdaError, MalformedInput, MalformedLine, SchemaViolation
from .formats import Corpus, build_corpus, parse_corpus, serialize_corpus
from .graph import SEVERITY_ERROR, SEVERITY_WARNING, build_dialogue, validate
from .ops import dialogue_report, extract_threads
from .taxonomy import taxonomy_dump


class _CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text("utf-8")
    except OSError as exc:
        raise _CliError(2, f"cannot read {path}: {exc}") from exc
    except UnicodeDecodeError as exc:
        raise _CliError(2, f"{path}: not valid UTF-8: {exc}") from exc


def _read_corpus(path: str, strict: bool = True) -> Corpus:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise _CliError(2, f"cannot read {path}: {exc}") from exc
    try:
        return parse_corpus(data, strict)
    except (MalformedInput, SchemaViolation) as exc:
        raise _CliError(2, f"{path}: {exc}") from exc


def _write_output(path: str, data: bytes) -> None:
    if path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
        return
    try:
        Path(path).write_bytes(data)
    except OSError as exc:
        raise _CliError(2, f"cannot write {path}: {exc}") from exc


def _select_dialogues(corpus: Corpus, dialogue_id: str | None):
    if dialogue_id is None:
        return list(corpus.dialogues)
    selected = corpus.dialogue(dialogue_id)
    if selected is None:
        raise _CliError(2, f"no dialogue with id {dialogue_id!r}")
    return [selected]


def _require_valid(dialogues) -> None:
    # threads/stats refuse structurally broken input rather than
    # reporting nonsense over it
    failed = False
    for d in dialogues:
        for diag in validate(d):
            if diag.severity == SEVERITY_ERROR:
                print(diag.format(), file=sys.stderr)
                failed = True
    if failed:
        raise _CliError(1, "validation failed")


def _load_valid_dialogues(path: str, dialogue_id: str | None):
    """Read a corpus for analysis: rule breaches exit 1, schema breaches 2.

    Parses leniently so graph-rule violations surface as ERROR diagnostics
    on standard error instead of parse failures, then rebuilds the
    surviving dialogues in canonical form.
    """
    corpus = _read_corpus(path, strict=False)
    dialogues = _select_dialogues(corpus, dialogue_id)
    _require_valid(dialogues)
    try:
        return [build_dialogue(d.id, d.units, d.edges) for d in dialogues]
    except DdaError as exc:
        raise _CliError(1, str(exc)) from exc


def cmd_validate(args) -> int:
    # lenient parse: rule breaches become diagnostics, not parse failures
    corpus = _read_corpus(args.input, strict=False)
    worst_is_error = False
    worst_is_warning = False
    for d in corpus.dialogues:
        for diag in validate(d, completeness=True):
            print(diag.format())
            if diag.severity == SEVERITY_ERROR:
                worst_is_error = True
            elif diag.severity == SEVERITY_WARNING:
                worst_is_warning = True
    if worst_is_error or (args.strict and worst_is_warning):
        return 1
    return 0


def cmd_threads(args) -> int:
    dialogues = _load_valid_dialogues(args.input, args.dialogue)
    if args.format == "json":
        payload = {
            "dialogues": [
                {
                    "id": d.id,
                    "threads": [
                        {"id": t.id, "root": t.root, "unit_ids": list(t.unit_ids)}
                        for t in extract_threads(d)
                    ],
                }
                for d in dialogues
            ]
        }
        print(json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True))
        return 0
    for d in dialogues:
        if args.dialogue is None:
            print(f"# dialogue {d.id}")
        for t in extract_threads(d):
            members = ",".join(str(u) for u in t.unit_ids)
            print(f"{t.root}\t{len(t.unit_ids)}\t{members}")
    return 0


def _convert_source(args) -> Corpus:
    if args.source_format == "dda":
        return _read_corpus(args.input)
    if args.source_format == "transcript":
        try:
            dialogue = import_transcript(_read_text(args.input), Path(args.input).stem)
        except MalformedLine as exc:
            raise _CliError(2, f"{args.input}: {exc}") from exc
        return build_corpus([dialogue])
    # irc: transcript file plus reply-pair file
    if not args.replies:
        raise _CliError(2, "--from irc requires --replies PATH")
    try:
        transcript = import_transcript(_read_text(args.input), Path(args.input).stem)
        record = parse_reply_lines(_read_text(args.replies), Path(args.input).stem)
        dialogue = import_reply_graph(transcript, record)
    except DdaError as exc:
        raise _CliError(2, f"{args.input}: {exc}") from exc
    return build_corpus([dialogue])


def cmd_convert(args) -> int:
    corpus = _convert_source(args)
    if args.target_format == "dda":
        _write_output(args.output, serialize_corpus(corpus))
        return 0
    dialogues = _select_dialogues(corpus, args.dialogue)
    if len(dialogues) != 1:
        raise _CliError(2, "--to irc needs a single dialogue; pass --dialogue ID")
    record = export_reply_graph(dialogues[0])
    labeled = sum(1 for e in dialogues[0].edges for l in e.labels if l.tag is not None)
    if labeled:
        print(
            f"note: reply-graph output drops {labeled} label(s) and all self edges",
            file=sys.stderr,
        )
    _write_output(args.output, format_reply_lines(record).encode("utf-8"))
    return 0


def cmd_stats(args) -> int:
    dialogues = _load_valid_dialogues(args.input, args.dialogue)
    payload = {"version": "1.0", "dialogues": [dialogue_report(d) for d in dialogues]}
    print(json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True))
    return 0


def cmd_taxonomy(args) -> int:
    payload = taxonomy_dump(include_list=args.include_list)
    print(json.dumps(payload, ensure_ascii=False, indent=2))
    return 0


def cmd_serve(args) -> int:
    from . import service

    try:
        server = service.create_server(args.input, host=args.host, port=args.port)
    except (OSError, MalformedInput, SchemaViolation) as exc:
        raise _CliError(2, f"cannot serve {args.input}: {exc}") from exc
    host, port = server.server_address[:2]
    print(f"serving {args.input} on http://{host}:{port}/api/", file=sys.stderr)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dda",
        description="Annotate, validate, disentangle, and serve dialogue dependency graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a corpus and print diagnostics")
    p.add_argument("input", help="corpus file")
    p.add_argument("--strict", action="store_true", help="treat warnings as failures")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("threads", help="list conversation threads per dialogue")
    p.add_argument("input", help="corpus file")
    p.add_argument("--dialogue", help="restrict to one dialogue id")
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(func=cmd_threads)

    p = sub.add_parser("convert", help="convert between corpus, transcript, and reply-graph formats")
    p.add_argument("--from", dest="source_format", choices=["dda", "irc", "transcript"], required=True)
    p.add_argument("--to", dest="target_format", choices=["dda", "irc"], required=True)
    p.add_argument("--replies", help="reply-pair file (with --from irc)")
    p.add_argument("--dialogue", help="dialogue id to export (with --to irc)")
    p.add_argument("input", help="input file")
    p.add_argument("output", nargs="?", default="-", help="output file (default: stdout)")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("stats", help="emit the analytics report as JSON")
    p.add_argument("input", help="corpus file")
    p.add_argument("--dialogue", help="restrict to one dialogue id")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("taxonomy", help="print the tag vocabulary as JSON")
    p.add_argument("--format", choices=["json"], default="json")
    p.add_argument("--include-list", action="store_true", dest="include_list",
                   help="append the extra List relation kept outside the closed set")
    p.set_defaults(func=cmd_taxonomy)

    p = sub.add_parser("serve", help="run the annotation HTTP service")
    p.add_argument("input", help="corpus file")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=7878)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"dda: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    raise SystemExit(main())
