"""Thread disentanglement, direction normalization, and speaker analytics.

Threads are the connected components of the undirected view of the
dependency edges; self edges contribute no connectivity, so a unit whose
only edge points at itself stays a singleton thread until something
responds to it. Components are maintained with union-find (path
compression plus union by size), which also supports the annotation
service's incremental updates; tests cross-check against a plain BFS.

Direction normalization rewrites forward-annotated edges (which can only
come from foreign imports) into the backward form, swapping dual tags or
flipping orientation flags so the meaning is unchanged.

The speaker metrics quantify connectivity between participants. The
entropy-based balance index and the degree-based engagement score are
toolkit-defined summaries of that connectivity, not a published standard;
treat them as descriptive statistics.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .errors import NoSuchUnit
from .graph import Dialogue, ResponseDependency, build_dialogue
from .taxonomy import (
    EdgeLabel,
    LabelKind,
    Orientation,
    category_of,
    rhetorical_tag,
)


class UnionFind:
    """Disjoint sets over hashable items, with path compression and union by size."""

    def __init__(self, items=()):
        self._parent: dict = {}
        self._size: dict = {}
        for item in items:
            self.add(item)

    def add(self, item) -> None:
        if item not in self._parent:
            self._parent[item] = item
            self._size[item] = 1

    def find(self, item):
        root = item
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[item] != root:
            self._parent[item], item = root, self._parent[item]
        return root

    def union(self, a, b) -> bool:
        """Merge the sets holding a and b; True when they were separate."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self._size[ra] < self._size[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        self._size[ra] += self._size[rb]
        return True

    def groups(self) -> list[list]:
        by_root: dict = {}
        for item in self._parent:
            by_root.setdefault(self.find(item), []).append(item)
        return list(by_root.values())


@dataclass(frozen=True)
class Thread:
    """One conversation thread: a connected component of the dependency graph.

    unit_ids are sorted ascending; root is the smallest member, the
    thread-starting unit. id is the thread's position among the dialogue's
    threads in root order.
    """

    id: int
    root: int
    unit_ids: tuple[int, ...]


def _components(dialogue: Dialogue) -> list[list[int]]:
    uf = UnionFind(u.id for u in dialogue.units)
    ids = dialogue.unit_ids()
    for e in dialogue.edges:
        if not e.is_self and e.source in ids and e.target in ids:
            uf.union(e.source, e.target)
    return [sorted(group) for group in uf.groups()]


def extract_threads(dialogue: Dialogue) -> tuple[Thread, ...]:
    """Partition the dialogue's units into threads, ordered by root id.

    Every unit lands in exactly one thread; units without edges are
    singleton threads.
    """
    components = sorted(_components(dialogue), key=lambda g: g[0])
    return tuple(
        Thread(i, group[0], tuple(group)) for i, group in enumerate(components)
    )


def thread_of(dialogue: Dialogue, unit_id: int) -> Thread:
    """The unique thread containing the unit. Raises NoSuchUnit."""
    if unit_id not in dialogue.unit_ids():
        raise NoSuchUnit(unit_id)
    for thread in extract_threads(dialogue):
        if unit_id in thread.unit_ids:
            return thread
    raise NoSuchUnit(unit_id)


def _flip_label(label: EdgeLabel) -> EdgeLabel:
    """Adjust one label for an edge whose endpoints are being swapped."""
    if label.kind is not LabelKind.RHETORICAL:
        return label
    tag = rhetorical_tag(label.tag)
    if tag.symmetric:
        return label
    orientation = label.orientation or Orientation.ARG1
    if tag.dual != tag.name:
        # named dual pair: the swapped reading has its own tag
        return EdgeLabel(LabelKind.RHETORICAL, tag.dual, orientation)
    return EdgeLabel(LabelKind.RHETORICAL, tag.name, orientation.flipped())


def normalize_direction(edge: ResponseDependency) -> ResponseDependency:
    """Rewrite a forward edge as its meaning-preserving backward form.

    Backward and self edges are returned unchanged, so the operation is
    idempotent. For flipped edges, named dual tags are swapped
    (a forward Reason reads backward as Result) and self-dual asymmetric
    tags flip their orientation flag; symmetric relations, dialog acts,
    and continuation labels pass through untouched.
    """
    if edge.target <= edge.source:
        return edge
    labels = sorted((_flip_label(l) for l in edge.labels), key=EdgeLabel.sort_key)
    return ResponseDependency(edge.target, edge.source, tuple(labels))


def normalize_dialogue(dialogue: Dialogue) -> Dialogue:
    """Normalize every edge to backward form and rebuild the dialogue.

    Edges that collapse onto the same (source, target) pair after
    flipping are merged into one multi-label edge. The thread partition
    is unchanged: flipping an edge does not move it between components.
    """
    return build_dialogue(
        dialogue.id,
        dialogue.units,
        [normalize_direction(e) for e in dialogue.edges],
    )


@dataclass(frozen=True)
class SpeakerStats:
    """Per-speaker connectivity summary.

    out_degree and in_degree count every edge, self edges included; a
    self edge adds 1 to both for its own speaker, and interaction_row
    books it under the speaker's own column, so the row always sums to
    out_degree. engagement counts non-self edges only (responses given
    plus responses received).
    """

    speaker: str
    out_degree: int
    in_degree: int
    interaction_row: dict[str, int]
    engagement: int


def _speaker_by_unit(dialogue: Dialogue) -> dict[int, str]:
    return {u.id: u.speaker for u in dialogue.units}


def speaker_interaction_matrix(dialogue: Dialogue) -> dict[tuple[str, str], int]:
    """Counts of non-self edges between speaker pairs.

    Keys cover the full speaker×speaker grid (zeros included), with
    speakers in first-appearance order; key (s, t) counts edges whose
    source unit belongs to s and target unit to t.
    """
    speakers = dialogue.speakers()
    by_unit = _speaker_by_unit(dialogue)
    matrix = {(a, b): 0 for a in speakers for b in speakers}
    for e in dialogue.edges:
        if e.is_self or e.source not in by_unit or e.target not in by_unit:
            continue
        matrix[(by_unit[e.source], by_unit[e.target])] += 1
    return matrix


def balance_index(dialogue: Dialogue) -> float | None:
    """Normalized entropy of how non-self responses are distributed.

    Each non-self edge gives one unit of mass to the speaker of its
    target (the one being responded to); the index is H(p)/log(k) with k
    the number of distinct speakers, landing in [0, 1]. 1.0 means
    responses are spread evenly; 0.0 means one speaker absorbs them all.
    None when the dialogue has fewer than two speakers or no non-self
    edges.
    """
    speakers = dialogue.speakers()
    if len(speakers) < 2:
        return None
    by_unit = _speaker_by_unit(dialogue)
    mass: Counter[str] = Counter()
    total = 0
    for e in dialogue.edges:
        if e.is_self or e.target not in by_unit:
            continue
        mass[by_unit[e.target]] += 1
        total += 1
    if total == 0:
        return None
    entropy = -sum((c / total) * math.log2(c / total) for c in mass.values())
    return entropy / math.log2(len(speakers))


def speaker_stats(dialogue: Dialogue) -> tuple[SpeakerStats, ...]:
    """Connectivity stats per speaker, in first-appearance order."""
    speakers = dialogue.speakers()
    by_unit = _speaker_by_unit(dialogue)
    out_all: Counter[str] = Counter()
    in_all: Counter[str] = Counter()
    nonself: Counter[str] = Counter()
    rows: dict[str, Counter[str]] = {s: Counter() for s in speakers}
    for e in dialogue.edges:
        if e.source not in by_unit or e.target not in by_unit:
            continue
        s, t = by_unit[e.source], by_unit[e.target]
        out_all[s] += 1
        in_all[t] += 1
        rows[s][t] += 1
        if not e.is_self:
            nonself[s] += 1
            nonself[t] += 1
    return tuple(
        SpeakerStats(
            speaker=sp,
            out_degree=out_all[sp],
            in_degree=in_all[sp],
            interaction_row={other: rows[sp][other] for other in speakers},
            engagement=nonself[sp],
        )
        for sp in speakers
    )


def dialogue_report(dialogue: Dialogue) -> dict:
    """The analytics payload for one dialogue, JSON-shaped.

    Contains unit/edge counts, a label histogram by tag and by
    category (continuation edges counted under the pseudo-tag
    "continuation"), the thread partition, the speaker interaction
    matrix, the balance index (null when undefined), and per-speaker
    stats.
    """
    threads = extract_threads(dialogue)
    by_tag: Counter[str] = Counter()
    by_category: Counter[str] = Counter()
    for e in dialogue.edges:
        for label in e.labels:
            if label.kind is LabelKind.CONTINUATION:
                by_tag["continuation"] += 1
                by_category["continuation"] += 1
            else:
                by_tag[label.tag] += 1
                by_category[category_of(label.tag).value] += 1
    speakers = dialogue.speakers()
    matrix = speaker_interaction_matrix(dialogue)
    return {
        "id": dialogue.id,
        "n_units": len(dialogue.units),
        "n_edges": len(dialogue.edges),
        "labels": {
            "by_tag": dict(sorted(by_tag.items())),
            "by_category": dict(sorted(by_category.items())),
        },
        "threads": {
            "count": len(threads),
            "roots": [t.root for t in threads],
            "sizes": [len(t.unit_ids) for t in threads],
        },
        "speakers": list(speakers),
        "interaction": {
            "speakers": list(speakers),
            "matrix": [[matrix[(a, b)] for b in speakers] for a in speakers],
        },
        "balance_index": balance_index(dialogue),
        "speaker_stats": [
            {
                "speaker": s.speaker,
                "out_degree": s.out_degree,
                "in_degree": s.in_degree,
                "engagement": s.engagement,
                "interaction_row": s.interaction_row,
            }
            for s in speaker_stats(dialogue)
        ],
    }
