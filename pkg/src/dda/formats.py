"""Canonical corpus serialization.

One corpus file is one UTF-8 JSON document:

  {"version": "1.0",
   "metadata": {"key": "value"},
   "dialogues": [{"id": "...",
                  "units": [{"id": 0, "speaker": "A", "text": "...",
                             "start_time": 1.0, "end_time": 2.0}],
                  "edges": [{"source": 1, "target": 0,
                             "labels": [{"kind": "dialog_act", "tag": "Answer"}]}]}]}

Timestamps are optional and omitted when absent. Rhetorical labels carry
an "orientation" ("arg1"/"arg2") exactly when the relation is asymmetric;
a missing orientation parses as arg1. The serialized form is canonical:
sorted keys, units by id, edges by (source, target), labels by
(kind, tag, orientation), 2-space indent, trailing newline. Serializing
twice, or after permuting edge lists, yields identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import MalformedInput, SchemaViolation
from .graph import Dialogue, ResponseDependency, SlashUnit, build_dialogue
from .taxonomy import EdgeLabel, LabelKind, Orientation

FORMAT_VERSION = "1.0"


@dataclass(frozen=True)
class Corpus:
    """A versioned collection of dialogues with free-form string metadata."""

    version: str = FORMAT_VERSION
    metadata: dict[str, str] = field(default_factory=dict)
    dialogues: tuple[Dialogue, ...] = ()

    def dialogue(self, dialogue_id: str) -> Dialogue | None:
        for d in self.dialogues:
            if d.id == dialogue_id:
                return d
        return None


def build_corpus(
    dialogues: list[Dialogue] | tuple[Dialogue, ...] = (),
    metadata: dict[str, str] | None = None,
) -> Corpus:
    """Assemble a corpus, enforcing unique dialogue ids."""
    seen: set[str] = set()
    for d in dialogues:
        if d.id in seen:
            raise SchemaViolation("dialogues", f"duplicate dialogue id {d.id!r}")
        seen.add(d.id)
    return Corpus(FORMAT_VERSION, dict(metadata or {}), tuple(dialogues))


def _expect(condition: bool, path: str, detail: str) -> None:
    if not condition:
        raise SchemaViolation(path, detail)


def _expect_int(value, path: str) -> int:
    # bool is an int subclass; JSON true must not pass as 1
    _expect(isinstance(value, int) and not isinstance(value, bool), path, "expected an integer")
    return value


def _expect_str(value, path: str) -> str:
    _expect(isinstance(value, str), path, "expected a string")
    return value


def _expect_keys(obj: dict, path: str, required: set[str], optional: set[str] = frozenset()) -> None:
    missing = required - obj.keys()
    if missing:
        raise SchemaViolation(path, f"missing key {sorted(missing)[0]!r}")
    unknown = obj.keys() - required - optional
    if unknown:
        raise SchemaViolation(path, f"unknown key {sorted(unknown)[0]!r}")


def _parse_unit(obj, path: str) -> SlashUnit:
    _expect(isinstance(obj, dict), path, "expected a unit object")
    _expect_keys(obj, path, {"id", "speaker", "text"}, {"start_time", "end_time"})
    times: dict[str, float | None] = {}
    for key in ("start_time", "end_time"):
        value = obj.get(key)
        if value is not None:
            _expect(
                isinstance(value, (int, float)) and not isinstance(value, bool),
                f"{path}.{key}",
                "expected a number",
            )
            value = float(value)
        times[key] = value
    try:
        return SlashUnit(
            id=_expect_int(obj["id"], f"{path}.id"),
            speaker=_expect_str(obj["speaker"], f"{path}.speaker"),
            text=_expect_str(obj["text"], f"{path}.text"),
            **times,
        )
    except ValueError as exc:
        raise SchemaViolation(path, str(exc)) from exc


def _parse_label(obj, path: str, strict: bool = True) -> EdgeLabel:
    _expect(isinstance(obj, dict), path, "expected a label object")
    _expect_keys(obj, path, {"kind"}, {"tag", "orientation"})
    kind_name = _expect_str(obj["kind"], f"{path}.kind")
    try:
        kind = LabelKind(kind_name)
    except ValueError:
        raise SchemaViolation(f"{path}.kind", f"unknown label kind {kind_name!r}") from None
    tag = obj.get("tag")
    if tag is not None:
        tag = _expect_str(tag, f"{path}.tag")
    orientation = obj.get("orientation")
    if orientation is not None:
        orientation_name = _expect_str(orientation, f"{path}.orientation")
        try:
            orientation = Orientation(orientation_name)
        except ValueError:
            raise SchemaViolation(
                f"{path}.orientation", f"unknown orientation {orientation_name!r}"
            ) from None
    if strict:
        _expect(
            kind is LabelKind.RHETORICAL or orientation is None,
            f"{path}.orientation",
            f"{kind.value} labels take no orientation",
        )
    try:
        return EdgeLabel(kind, tag, orientation)
    except ValueError as exc:
        raise SchemaViolation(path, str(exc)) from exc


def _parse_edge(obj, path: str, strict: bool = True) -> ResponseDependency:
    _expect(isinstance(obj, dict), path, "expected an edge object")
    _expect_keys(obj, path, {"source", "target", "labels"})
    labels_obj = obj["labels"]
    _expect(isinstance(labels_obj, list), f"{path}.labels", "expected a list")
    labels = tuple(
        _parse_label(l, f"{path}.labels[{i}]", strict) for i, l in enumerate(labels_obj)
    )
    return ResponseDependency(
        source=_expect_int(obj["source"], f"{path}.source"),
        target=_expect_int(obj["target"], f"{path}.target"),
        labels=labels,
    )


def _parse_dialogue(obj, path: str, strict: bool = True) -> Dialogue:
    _expect(isinstance(obj, dict), path, "expected a dialogue object")
    _expect_keys(obj, path, {"id", "units", "edges"})
    dialogue_id = _expect_str(obj["id"], f"{path}.id")
    _expect(isinstance(obj["units"], list), f"{path}.units", "expected a list")
    _expect(isinstance(obj["edges"], list), f"{path}.edges", "expected a list")
    units = [_parse_unit(u, f"{path}.units[{i}]") for i, u in enumerate(obj["units"])]
    edges = [
        _parse_edge(e, f"{path}.edges[{i}]", strict) for i, e in enumerate(obj["edges"])
    ]
    if not strict:
        # keep the graph exactly as written so validate() can report on it
        return Dialogue(dialogue_id, tuple(units), tuple(edges))
    try:
        return build_dialogue(dialogue_id, units, edges)
    except Exception as exc:
        # structural graph errors surface as schema violations with the
        # original error chained as the cause
        raise SchemaViolation(path, str(exc)) from exc


def parse_corpus(data: bytes | str, strict: bool = True) -> Corpus:
    """Parse and fully validate a corpus document.

    Raises MalformedInput (with line and column) for bytes that are not
    UTF-8 JSON, and SchemaViolation (with a JSON path) for well-formed
    JSON that breaks the schema or the graph invariants.

    With strict=False the JSON schema is still enforced but graph-level
    rules (edge direction, endpoint existence, tag vocabulary, unit id
    uniqueness within a dialogue) are not: dialogues come back exactly as
    written, without label canonicalization or edge merging, so validate()
    can report rule breaches as diagnostics instead. Lenient corpora are
    for inspection only and should not be re-serialized.
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            prefix = data[: exc.start]
            line = prefix.count(b"\n") + 1
            column = exc.start - (prefix.rfind(b"\n") + 1) + 1
            raise MalformedInput(line, column, "invalid UTF-8") from exc
    else:
        text = data
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(exc.lineno, exc.colno, exc.msg) from exc

    _expect(isinstance(obj, dict), "", "expected a JSON object at top level")
    _expect_keys(obj, "", {"version", "dialogues"}, {"metadata"})
    version = _expect_str(obj["version"], "version")
    _expect(version == FORMAT_VERSION, "version", f"unsupported version {version!r}")
    metadata_obj = obj.get("metadata", {})
    _expect(isinstance(metadata_obj, dict), "metadata", "expected an object")
    for key, value in metadata_obj.items():
        _expect_str(value, f"metadata.{key}")
    _expect(isinstance(obj["dialogues"], list), "dialogues", "expected a list")

    dialogues = []
    seen: set[str] = set()
    for i, d in enumerate(obj["dialogues"]):
        dialogue = _parse_dialogue(d, f"dialogues[{i}]", strict)
        _expect(
            dialogue.id not in seen,
            f"dialogues[{i}].id",
            f"duplicate dialogue id {dialogue.id!r}",
        )
        seen.add(dialogue.id)
        dialogues.append(dialogue)
    return Corpus(version, dict(metadata_obj), tuple(dialogues))


def _unit_obj(unit: SlashUnit) -> dict:
    out: dict = {"id": unit.id, "speaker": unit.speaker, "text": unit.text}
    if unit.start_time is not None:
        out["start_time"] = unit.start_time
    if unit.end_time is not None:
        out["end_time"] = unit.end_time
    return out


def _label_obj(label: EdgeLabel) -> dict:
    out: dict = {"kind": label.kind.value}
    if label.tag is not None:
        out["tag"] = label.tag
    if label.orientation is not None:
        out["orientation"] = label.orientation.value
    return out


def dialogue_to_obj(dialogue: Dialogue) -> dict:
    """The canonical JSON-shaped form of one dialogue."""
    canonical = build_dialogue(dialogue.id, dialogue.units, dialogue.edges)
    return {
        "id": canonical.id,
        "units": [_unit_obj(u) for u in canonical.units],
        "edges": [
            {
                "source": e.source,
                "target": e.target,
                "labels": [_label_obj(l) for l in e.labels],
            }
            for e in canonical.edges
        ],
    }


def serialize_corpus(corpus: Corpus) -> bytes:
    """Render a corpus in canonical form: byte-identical for equal corpora."""
    obj = {
        "version": corpus.version,
        "metadata": dict(sorted(corpus.metadata.items())),
        "dialogues": [dialogue_to_obj(d) for d in corpus.dialogues],
    }
    return (json.dumps(obj, ensure_ascii=False, indent=2, sort_keys=True) + "\n").encode(
        "utf-8"
    )


def load_corpus(path) -> Corpus:
    with open(path, "rb") as handle:
        return parse_corpus(handle.read())


def save_corpus(path, corpus: Corpus) -> None:
    with open(path, "wb") as handle:
        handle.write(serialize_corpus(corpus))
