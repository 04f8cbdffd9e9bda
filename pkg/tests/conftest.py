"""Shared fixtures, random-graph generators, and independent oracles.

The oracles here deliberately avoid the library's own algorithms:
thread partitions are recomputed with a plain BFS over an adjacency
map so union-find results are checked against something simpler.
"""

from __future__ import annotations

import random
from collections import deque
from pathlib import Path

import pytest

from dda import (
    CONTINUATION,
    EdgeLabel,
    LabelKind,
    Orientation,
    ResponseDependency,
    SlashUnit,
    all_dialog_acts,
    all_rhetorical_relations,
    build_dialogue,
    load_corpus,
)

FIXTURES = Path(__file__).parent / "fixtures"

DA_NAMES = tuple(t.name for t in all_dialog_acts())
RR_TAGS = tuple(all_rhetorical_relations())


@pytest.fixture
def classroom():
    return load_corpus(FIXTURES / "classroom.json").dialogues[0]


@pytest.fixture
def overload():
    return load_corpus(FIXTURES / "overload.json").dialogues[0]


def bfs_partition(unit_ids, pairs) -> set[frozenset]:
    """Connected components by breadth-first search; self pairs ignored."""
    adjacency = {u: set() for u in unit_ids}
    for s, t in pairs:
        if s != t and s in adjacency and t in adjacency:
            adjacency[s].add(t)
            adjacency[t].add(s)
    seen: set = set()
    components: set[frozenset] = set()
    for start in unit_ids:
        if start in seen:
            continue
        queue = deque([start])
        component = {start}
        seen.add(start)
        while queue:
            node = queue.popleft()
            for neighbour in adjacency[node]:
                if neighbour not in component:
                    component.add(neighbour)
                    seen.add(neighbour)
                    queue.append(neighbour)
        components.add(frozenset(component))
    return components


def partition_of(dialogue) -> set[frozenset]:
    from dda import extract_threads

    return {frozenset(t.unit_ids) for t in extract_threads(dialogue)}


def random_label(rng: random.Random, allow_rhetorical: bool = True) -> EdgeLabel:
    roll = rng.random()
    if roll < 0.25:
        return CONTINUATION
    if roll < 0.65 or not allow_rhetorical:
        return EdgeLabel(LabelKind.DIALOG_ACT, rng.choice(DA_NAMES))
    tag = rng.choice(RR_TAGS)
    if tag.symmetric:
        return EdgeLabel(LabelKind.RHETORICAL, tag.name)
    orientation = rng.choice((Orientation.ARG1, Orientation.ARG2))
    return EdgeLabel(LabelKind.RHETORICAL, tag.name, orientation)


def random_valid_dialogue(rng: random.Random, max_units: int = 200, dialogue_id: str = "rand"):
    """A structurally valid dialogue with random backward edges and labels."""
    n = rng.randint(0, max_units)
    speakers = ["ana", "bo", "cy", "dee", "ed"][: rng.randint(1, 5)]
    units = [
        SlashUnit(i, rng.choice(speakers), f"utterance {i}") for i in range(n)
    ]
    edges: list[ResponseDependency] = []
    for i in range(n):
        if rng.random() < 0.4:
            labels = tuple(
                random_label(rng, allow_rhetorical=False)
                for _ in range(rng.randint(0, 2))
            )
            edges.append(ResponseDependency(i, i, labels))
        if i > 0:
            for _ in range(rng.randint(0, 2)):
                target = rng.randrange(i)
                labels = tuple(random_label(rng) for _ in range(rng.randint(0, 2)))
                edges.append(ResponseDependency(i, target, labels))
    return build_dialogue(dialogue_id, units, edges)


def random_reply_forest(rng: random.Random, max_nodes: int = 100):
    """(n_lines, pairs): random reply links in arbitrary direction, no self pairs."""
    n = rng.randint(1, max_nodes)
    pairs: set[tuple[int, int]] = set()
    for _ in range(rng.randint(0, 2 * n)):
        a, b = rng.randrange(n), rng.randrange(n)
        if a != b:
            pairs.add((a, b))
    return n, tuple(sorted(pairs))


def transcript_lines(n: int) -> str:
    return "".join(f"s{i % 3}\tline number {i}\n" for i in range(n))
