"""Dialogue graphs: slash units, response dependencies, and validation.

A dialogue is a sequence of slash units plus a set of labeled dependency
edges. Two structural rules make the graphs well-formed:

  * a unit that starts a new thread points at itself, and
  * every other dependency points backward (target id < source id).

Edges are identified by their (source, target) pair and carry one or more
labels, so a single response can overload several functions at once.

Dialogue values are immutable snapshots; add_edge and remove_edge return
new dialogues. Checked construction goes through build_dialogue, which
raises on the first structural error. validate() accepts any Dialogue,
including hand-assembled ones, and reports every problem as a Diagnostic
instead of raising.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import (
    DanglingEdgeEndpoint,
    DuplicateUnitId,
    ForwardEdge,
    NoSuchEdge,
    NoSuchUnit,
    SelfEdgeWithRhetoricalLabel,
    UnknownTag,
)
from .taxonomy import CONTINUATION, EdgeLabel, LabelKind, canonicalize_label

SEVERITY_ERROR = "error"
SEVERITY_WARNING = "warning"
SEVERITY_INFO = "info"


@dataclass(frozen=True)
class SlashUnit:
    """One minimal utterance unit, identified by its position in the dialogue.

    Ids are the dialogue-wide utterance numbering: unique, and increasing
    in speaking order. Timestamps are optional; inconsistent ones are
    reported by validate() rather than rejected here.
    """

    id: int
    speaker: str
    text: str
    start_time: float | None = None
    end_time: float | None = None

    def __post_init__(self):
        if not isinstance(self.id, int) or isinstance(self.id, bool) or self.id < 0:
            raise ValueError(f"unit id must be a non-negative integer, got {self.id!r}")
        if not self.text.strip():
            raise ValueError(f"unit {self.id} has empty text")
        for name in ("start_time", "end_time"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ValueError(f"unit {self.id} has negative {name} {value}")


@dataclass(frozen=True)
class ResponseDependency:
    """A labeled dependency edge from a responding unit to what it responds to.

    source == target marks a thread start. Labels are stored deduplicated
    in canonical sort order.
    """

    source: int
    target: int
    labels: tuple[EdgeLabel, ...] = ()

    @property
    def is_self(self) -> bool:
        return self.source == self.target


@dataclass(frozen=True)
class Dialogue:
    """An immutable annotated dialogue: units in id order plus dependency edges."""

    id: str
    units: tuple[SlashUnit, ...] = ()
    edges: tuple[ResponseDependency, ...] = ()

    def unit_ids(self) -> frozenset[int]:
        return frozenset(u.id for u in self.units)

    def unit(self, unit_id: int) -> SlashUnit:
        for u in self.units:
            if u.id == unit_id:
                return u
        raise NoSuchUnit(unit_id)

    def speakers(self) -> tuple[str, ...]:
        """Distinct speakers in first-appearance order."""
        seen: dict[str, None] = {}
        for u in self.units:
            seen.setdefault(u.speaker, None)
        return tuple(seen)


@dataclass(frozen=True)
class Diagnostic:
    """One validation finding, printable and machine-filterable.

    ``code`` is the stable name of the condition (the exception class name
    for error-level findings). ``unit_id`` is the unit the finding is
    anchored to, or the edge source when the problem is edge-level.
    """

    severity: str
    code: str
    dialogue_id: str
    unit_id: int | None
    message: str

    def format(self) -> str:
        where = f"{self.dialogue_id}:{self.unit_id if self.unit_id is not None else '-'}"
        return f"{self.severity.upper()} {self.code} {where} {self.message}"


def _canonical_edge(edge: ResponseDependency) -> ResponseDependency:
    # a bare edge means pure thread continuation
    labels = sorted({canonicalize_label(l) for l in edge.labels}, key=EdgeLabel.sort_key)
    if not labels:
        labels = [CONTINUATION]
    return ResponseDependency(edge.source, edge.target, tuple(labels))


def _check_edge_shape(edge: ResponseDependency, unit_ids: frozenset[int]) -> None:
    if edge.source not in unit_ids or edge.target not in unit_ids:
        missing = edge.source if edge.source not in unit_ids else edge.target
        raise DanglingEdgeEndpoint(edge.source, edge.target, missing)
    if edge.target > edge.source:
        raise ForwardEdge(edge.source, edge.target)
    if edge.is_self:
        for label in edge.labels:
            if label.kind is LabelKind.RHETORICAL:
                raise SelfEdgeWithRhetoricalLabel(edge.source, label.tag)


def build_dialogue(
    dialogue_id: str,
    units: list[SlashUnit] | tuple[SlashUnit, ...],
    edges: list[ResponseDependency] | tuple[ResponseDependency, ...] = (),
) -> Dialogue:
    """Construct a checked dialogue, raising on the first structural error.

    Units are sorted by id, edges by (source, target); edges sharing a
    (source, target) pair are merged into one multi-label edge; labels are
    canonicalized and deduplicated. Raises DuplicateUnitId,
    DanglingEdgeEndpoint, ForwardEdge, SelfEdgeWithRhetoricalLabel, or
    UnknownTag.
    """
    seen: set[int] = set()
    for u in units:
        if u.id in seen:
            raise DuplicateUnitId(u.id)
        seen.add(u.id)
    unit_ids = frozenset(seen)

    merged: dict[tuple[int, int], list[EdgeLabel]] = {}
    for e in edges:
        merged.setdefault((e.source, e.target), []).extend(e.labels)
    out: list[ResponseDependency] = []
    for (source, target), labels in merged.items():
        edge = _canonical_edge(ResponseDependency(source, target, tuple(labels)))
        _check_edge_shape(edge, unit_ids)
        out.append(edge)

    return Dialogue(
        id=dialogue_id,
        units=tuple(sorted(units, key=lambda u: u.id)),
        edges=tuple(sorted(out, key=lambda e: (e.source, e.target))),
    )


def add_edge(
    dialogue: Dialogue,
    source: int,
    target: int,
    labels: tuple[EdgeLabel, ...] | list[EdgeLabel] = (),
) -> Dialogue:
    """Return a new dialogue with the edge added.

    Adding to an existing (source, target) pair merges the label sets, so
    overloaded responses accumulate labels instead of duplicating edges.
    """
    existing = edge(dialogue, source, target)
    merged = (existing.labels if existing is not None else ()) + tuple(labels)
    candidate = _canonical_edge(ResponseDependency(source, target, merged))
    _check_edge_shape(candidate, dialogue.unit_ids())
    edges = tuple(e for e in dialogue.edges if (e.source, e.target) != (source, target))
    edges += (candidate,)
    return replace(
        dialogue, edges=tuple(sorted(edges, key=lambda e: (e.source, e.target)))
    )


def remove_edge(
    dialogue: Dialogue,
    source: int,
    target: int,
    label: EdgeLabel | None = None,
) -> Dialogue:
    """Return a new dialogue with the edge (or one of its labels) removed.

    With ``label`` given, only that label is detached; the edge itself goes
    away when its last label does, or immediately if it had none. Raises
    NoSuchEdge when the edge or the label is not present.
    """
    existing = edge(dialogue, source, target)
    if existing is None:
        raise NoSuchEdge(source, target)
    rest = tuple(e for e in dialogue.edges if (e.source, e.target) != (source, target))
    if label is not None:
        wanted = canonicalize_label(label)
        if wanted not in existing.labels:
            raise NoSuchEdge(source, target, wanted)
        remaining = tuple(l for l in existing.labels if l != wanted)
        if remaining:
            rest += (ResponseDependency(source, target, remaining),)
    return replace(dialogue, edges=tuple(sorted(rest, key=lambda e: (e.source, e.target))))


def edge(dialogue: Dialogue, source: int, target: int) -> ResponseDependency | None:
    for e in dialogue.edges:
        if e.source == source and e.target == target:
            return e
    return None


def outgoing(dialogue: Dialogue, unit_id: int) -> tuple[ResponseDependency, ...]:
    """The unit's dependencies, sorted by target. Raises NoSuchUnit."""
    if unit_id not in dialogue.unit_ids():
        raise NoSuchUnit(unit_id)
    return tuple(
        sorted(
            (e for e in dialogue.edges if e.source == unit_id),
            key=lambda e: (e.target, [l.sort_key() for l in e.labels]),
        )
    )


def incoming(dialogue: Dialogue, unit_id: int) -> tuple[ResponseDependency, ...]:
    """Edges responding to the unit, sorted by source. Self edges count as both ends."""
    if unit_id not in dialogue.unit_ids():
        raise NoSuchUnit(unit_id)
    return tuple(
        sorted(
            (e for e in dialogue.edges if e.target == unit_id),
            key=lambda e: (e.source, [l.sort_key() for l in e.labels]),
        )
    )


def validate(dialogue: Dialogue, completeness: bool = False) -> list[Diagnostic]:
    """Check a dialogue and report every finding without raising.

    Error-level findings mirror the build_dialogue exceptions; warnings
    cover suspicious but representable annotations; one info-level finding
    flags units that both start a thread and answer earlier material.
    With ``completeness=True``, units carrying no dependency at all are
    warned about as unannotated context.
    """
    out: list[Diagnostic] = []
    did = dialogue.id

    def report(severity: str, code: str, unit_id: int | None, message: str) -> None:
        out.append(Diagnostic(severity, code, did, unit_id, message))

    seen: set[int] = set()
    for u in dialogue.units:
        if u.id in seen:
            report(SEVERITY_ERROR, "DuplicateUnitId", u.id, f"unit id {u.id} appears more than once")
        seen.add(u.id)
        if u.start_time is not None and u.end_time is not None and u.end_time < u.start_time:
            report(
                SEVERITY_WARNING,
                "UnorderedTimestamps",
                u.id,
                f"unit {u.id} ends at {u.end_time} before it starts at {u.start_time}",
            )
    unit_ids = frozenset(seen)

    has_self: set[int] = set()
    has_backward: set[int] = set()
    has_any: set[int] = set()
    for e in dialogue.edges:
        has_any.add(e.source)
        if e.source not in unit_ids or e.target not in unit_ids:
            missing = e.source if e.source not in unit_ids else e.target
            report(
                SEVERITY_ERROR,
                "DanglingEdgeEndpoint",
                e.source,
                f"edge {e.source}->{e.target} references missing unit {missing}",
            )
            continue
        if e.target > e.source:
            report(
                SEVERITY_ERROR,
                "ForwardEdge",
                e.source,
                f"edge {e.source}->{e.target} points forward; dependencies must point backward",
            )
            continue
        if e.is_self:
            has_self.add(e.source)
        else:
            has_backward.add(e.source)
        if not e.labels:
            report(
                SEVERITY_WARNING,
                "EmptyLabels",
                e.source,
                f"edge {e.source}->{e.target} carries no labels",
            )
        for label in e.labels:
            if e.is_self and label.kind is LabelKind.RHETORICAL:
                report(
                    SEVERITY_ERROR,
                    "SelfEdgeWithRhetoricalLabel",
                    e.source,
                    f"self edge at {e.source} carries rhetorical label {label.tag!r}",
                )
            try:
                canonicalize_label(label)
            except (UnknownTag, ValueError) as exc:
                report(
                    SEVERITY_ERROR,
                    "UnknownTag",
                    e.source,
                    f"edge {e.source}->{e.target}: {exc}",
                )

    for unit_id in sorted(has_self & has_backward):
        report(
            SEVERITY_INFO,
            "MixedSelfAndBackward",
            unit_id,
            f"unit {unit_id} both starts a thread and responds to earlier units",
        )

    if completeness:
        for u in dialogue.units:
            if u.id not in has_any:
                report(
                    SEVERITY_WARNING,
                    "MissingContext",
                    u.id,
                    f"unit {u.id} has no dependency; mark a response or a thread start",
                )

    severity_rank = {SEVERITY_ERROR: 0, SEVERITY_WARNING: 1, SEVERITY_INFO: 2}
    out.sort(key=lambda d: (d.unit_id if d.unit_id is not None else -1, severity_rank[d.severity], d.code))
    return out


def has_errors(diagnostics: list[Diagnostic]) -> bool:
    return any(d.severity == SEVERITY_ERROR for d in diagnostics)
