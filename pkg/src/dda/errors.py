"""Exception types shared across the toolkit.

Every error carries a stable ``code`` string (the class name) that the CLI
and the annotation service expose verbatim, so scripts can match on it.
"""

from __future__ import annotations


class DdaError(Exception):
    """Base class for all toolkit errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


class UnknownTag(DdaError):
    """A label name that is in neither closed vocabulary."""

    def __init__(self, text: str, detail: str | None = None):
        self.text = text
        msg = f"unknown tag {text!r}"
        super().__init__(msg if detail is None else f"{msg}: {detail}")


class AmbiguousTag(DdaError):
    """A name present in both vocabularies.

    No such name exists in v1; the check guards future vocabulary edits.
    """

    def __init__(self, text: str):
        self.text = text
        super().__init__(f"tag name {text!r} is ambiguous between vocabularies")


class DuplicateUnitId(DdaError):
    def __init__(self, unit_id: int):
        self.unit_id = unit_id
        super().__init__(f"duplicate unit id {unit_id}")


class DanglingEdgeEndpoint(DdaError):
    def __init__(self, source: int, target: int, missing: int):
        self.source = source
        self.target = target
        self.missing = missing
        super().__init__(f"edge {source}->{target} references missing unit {missing}")


class ForwardEdge(DdaError):
    """A non-self edge pointing at a later unit; dependencies point backward."""

    def __init__(self, source: int, target: int):
        self.source = source
        self.target = target
        super().__init__(f"edge {source}->{target} points forward in the dialogue")


class SelfEdgeWithRhetoricalLabel(DdaError):
    """Self edges mark thread starts; a rhetorical relation needs two units."""

    def __init__(self, unit_id: int, tag: str):
        self.unit_id = unit_id
        self.tag = tag
        super().__init__(f"self edge on unit {unit_id} carries rhetorical label {tag!r}")


class NoSuchEdge(DdaError):
    def __init__(self, source: int, target: int, label: str | None = None):
        self.source = source
        self.target = target
        what = f"edge {source}->{target}"
        if label is not None:
            what += f" with label {label!r}"
        super().__init__(f"{what} does not exist")


class NoSuchUnit(DdaError):
    def __init__(self, unit_id: int):
        self.unit_id = unit_id
        super().__init__(f"no unit with id {unit_id}")


class NoSuchDialogue(DdaError):
    def __init__(self, dialogue_id: str):
        self.dialogue_id = dialogue_id
        super().__init__(f"no dialogue with id {dialogue_id!r}")


class MalformedInput(DdaError):
    """Input that is not even parseable; position is 1-based."""

    def __init__(self, line: int, column: int, detail: str):
        self.line = line
        self.column = column
        super().__init__(f"malformed input at line {line}, column {column}: {detail}")


class SchemaViolation(DdaError):
    """Well-formed JSON that violates the corpus schema at ``path``."""

    def __init__(self, path: str, detail: str):
        self.path = path
        self.detail = detail
        super().__init__(f"schema violation at {path}: {detail}")


class MalformedLine(DdaError):
    """A transcript line without the speaker<TAB>text shape; 1-based."""

    def __init__(self, line: int, detail: str = "expected 'speaker<TAB>utterance'"):
        self.line = line
        super().__init__(f"malformed line {line}: {detail}")


class DanglingReplyEndpoint(DdaError):
    def __init__(self, index: int, n_lines: int):
        self.index = index
        self.n_lines = n_lines
        super().__init__(
            f"reply endpoint {index} outside transcript of {n_lines} lines"
        )


class UnmappedSwbdTag(DdaError):
    """An SWBD-DAMSL class with no counterpart tag (dropped or unknown)."""

    def __init__(self, text: str, dropped: bool = False):
        self.text = text
        self.dropped = dropped
        why = "deliberately dropped" if dropped else "not in the mapping table"
        super().__init__(f"SWBD-DAMSL tag {text!r} is {why}")


class RevisionConflict(DdaError):
    """Optimistic-concurrency failure: expected_revision is stale."""

    def __init__(self, expected: int, current: int):
        self.expected = expected
        self.current = current
        super().__init__(
            f"expected revision {expected} but dialogue is at revision {current}"
        )
