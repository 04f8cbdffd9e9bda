"""Converters between DDA dialogues and simpler neighbouring formats.

Three directions are covered:

  * plain transcripts ("speaker<TAB>utterance" lines) import as
    unannotated dialogues;
  * reply-structure graphs (IRC-style "who replies to whom" pairs)
    import as continuation-only DDA graphs and export back, losing
    labels but never pairs;
  * SWBD-DAMSL unit tags project onto DDA dialog acts through a bundled
    42-entry mapping table, and DDA edge labels project back onto
    per-unit tag multisets.

A DDA graph is a superset of a reply graph: import keeps every reply
pair as a backward continuation edge and marks reply-less units as
thread starts, so export-after-import returns the original pair set and
export of a richer graph simply drops the extra information.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .errors import DanglingReplyEndpoint, MalformedLine, UnmappedSwbdTag
from .graph import Dialogue, ResponseDependency, SlashUnit, build_dialogue
from .ops import normalize_direction
from .taxonomy import DialogActTag, LabelKind, dialog_act_tag


@dataclass(frozen=True)
class ReplyGraphRecord:
    """An unlabeled reply structure: (source, target) pairs over line indices."""

    dialogue_id: str
    pairs: tuple[tuple[int, int], ...] = ()


def import_transcript(text: str, dialogue_id: str = "transcript") -> Dialogue:
    """Read "speaker<TAB>utterance" lines into an unannotated dialogue.

    Unit ids are 0-based line indices. Blank lines are not allowed;
    every line must have both fields. Raises MalformedLine.
    """
    units: list[SlashUnit] = []
    for i, raw in enumerate(text.splitlines()):
        speaker, sep, utterance = raw.partition("\t")
        if not sep:
            raise MalformedLine(i + 1, "expected speaker<TAB>utterance")
        if not speaker.strip():
            raise MalformedLine(i + 1, "empty speaker field")
        if not utterance.strip():
            raise MalformedLine(i + 1, "empty utterance field")
        units.append(SlashUnit(id=i, speaker=speaker.strip(), text=utterance.strip()))
    return build_dialogue(dialogue_id, units, [])


def parse_reply_lines(text: str, dialogue_id: str = "replies") -> ReplyGraphRecord:
    """Parse the reply-pair line format: one "<source> <target> -" per line.

    Blank lines are skipped. Raises MalformedLine on anything else.
    """
    pairs: list[tuple[int, int]] = []
    for i, raw in enumerate(text.splitlines()):
        if not raw.strip():
            continue
        fields = raw.split()
        if len(fields) != 3 or fields[2] != "-":
            raise MalformedLine(i + 1, "expected '<source-index> <target-index> -'")
        try:
            source, target = int(fields[0]), int(fields[1])
        except ValueError:
            raise MalformedLine(i + 1, "indices must be integers") from None
        if source < 0 or target < 0:
            raise MalformedLine(i + 1, "indices must be non-negative")
        pairs.append((source, target))
    return ReplyGraphRecord(dialogue_id, tuple(pairs))


def format_reply_lines(record: ReplyGraphRecord) -> str:
    return "".join(f"{s} {t} -\n" for s, t in record.pairs)


def import_reply_graph(transcript: str | Dialogue, replies: ReplyGraphRecord) -> Dialogue:
    """Combine a transcript with its reply structure into a DDA dialogue.

    Every reply pair becomes a bare continuation edge, flipped backward
    when needed; every unit that ends up with no outgoing pair gets a
    self edge marking it as a thread start. The resulting thread
    partition therefore equals the connected components of the reply
    pairs. Raises DanglingReplyEndpoint for pairs outside the
    transcript.
    """
    if isinstance(transcript, Dialogue):
        dialogue = transcript
    else:
        dialogue = import_transcript(transcript, replies.dialogue_id)
    unit_ids = dialogue.unit_ids()
    n = len(dialogue.units)
    edges: list[ResponseDependency] = []
    has_outgoing: set[int] = set()
    for source, target in replies.pairs:
        if source not in unit_ids:
            raise DanglingReplyEndpoint(source, n)
        if target not in unit_ids:
            raise DanglingReplyEndpoint(target, n)
        edge = normalize_direction(ResponseDependency(source, target, ()))
        has_outgoing.add(edge.source)
        edges.append(edge)
    for u in dialogue.units:
        if u.id not in has_outgoing:
            edges.append(ResponseDependency(u.id, u.id, ()))
    return build_dialogue(dialogue.id, dialogue.units, edges)


def export_reply_graph(dialogue: Dialogue) -> ReplyGraphRecord:
    """Project a dialogue down to its reply structure.

    Lossy: labels are dropped, self edges (thread starts) are dropped,
    and multi-label pairs collapse to one pair. The pair set is exactly
    the dialogue's distinct non-self (source, target) pairs.
    """
    pairs = sorted({(e.source, e.target) for e in dialogue.edges if not e.is_self})
    return ReplyGraphRecord(dialogue.id, tuple(pairs))


@lru_cache(maxsize=1)
def _swbd_table() -> dict[str, str | None]:
    data = resources.files("dda.data").joinpath("swbd_damsl_map.json").read_text("utf-8")
    table: dict[str, str | None] = {}
    for entry in json.loads(data)["entries"]:
        table[entry["swbd"]] = entry["dda"]
    return table


def swbd_mapping() -> dict[str, str | None]:
    """The bundled SWBD-DAMSL projection: tag code → DDA tag name or None."""
    return dict(_swbd_table())


def map_swbd_tag(swbd: str) -> DialogActTag:
    """Map one SWBD-DAMSL tag code onto its DDA dialog act.

    Raises UnmappedSwbdTag both for codes outside the table and for the
    two classes deliberately left without a DDA counterpart
    (distinguished by the exception's ``dropped`` flag).
    """
    table = _swbd_table()
    code = swbd.strip()
    if code not in table:
        raise UnmappedSwbdTag(swbd)
    name = table[code]
    if name is None:
        raise UnmappedSwbdTag(swbd, dropped=True)
    return dialog_act_tag(name)


def project_unit_tags(dialogue: Dialogue) -> dict[int, Counter]:
    """Flatten edge-level dialog acts back onto units, SWBD-style.

    Each unit maps to the multiset of DialogActTag values found on its
    outgoing edges; rhetorical and continuation labels are dropped. The
    inverse of annotating acts on edges, and lossy by design: the
    context each act points at is forgotten.
    """
    out: dict[int, Counter] = {u.id: Counter() for u in dialogue.units}
    for e in dialogue.edges:
        if e.source not in out:
            continue
        for label in e.labels:
            if label.kind is LabelKind.DIALOG_ACT:
                out[e.source][dialog_act_tag(label.tag)] += 1
    return out
