"""Closed DDA tag vocabularies and the edge-label model.

Two fixed tag sets: 31 dialog acts in 6 categories and 29 rhetorical
relations in 4 classes. Both are compiled in — DDA is a fixed standard —
so the invariants (counts, disjoint partitions, dual involution) are
testable facts rather than configuration.

Directionality of asymmetric rhetorical relations is encoded two ways,
mirroring PDTB 3.0: the pairs Reason/Result and Before/After have named
duals, every other asymmetric tag is its own dual and an edge-level
orientation flag (arg1/arg2) says which endpoint plays argument 1 of the
relation's canonical reading.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .errors import AmbiguousTag, UnknownTag


class DialogActCategory(enum.Enum):
    """The 6 top-level dialog-act categories."""

    STATEMENTS = "Statements"
    COMMUNICATIVE_STATUS = "CommunicativeStatus"
    BACKWARD_COMMUNICATIVE_FUNCTION = "BackwardCommunicativeFunction"
    FORWARD_COMMUNICATIVE_FUNCTION = "ForwardCommunicativeFunction"
    INFORMATION_LEVEL = "InformationLevel"
    OTHER = "Other"


class RhetoricalClass(enum.Enum):
    """The 4 top-level rhetorical-relation classes."""

    TEMPORAL = "Temporal"
    CONTINGENCY = "Contingency"
    COMPARISON = "Comparison"
    EXPANSION = "Expansion"


class LabelKind(enum.Enum):
    DIALOG_ACT = "dialog_act"
    RHETORICAL = "rhetorical"
    CONTINUATION = "continuation"


class Orientation(enum.Enum):
    """Which endpoint of the edge plays argument 1 of an asymmetric relation.

    ARG1: the edge's source unit is argument 1 (e.g. "source enables target").
    ARG2: the edge's source unit is argument 2 (e.g. "source is enabled by target").
    """

    ARG1 = "arg1"
    ARG2 = "arg2"

    def flipped(self) -> "Orientation":
        return Orientation.ARG2 if self is Orientation.ARG1 else Orientation.ARG1


@dataclass(frozen=True)
class DialogActTag:
    name: str
    category: DialogActCategory


@dataclass(frozen=True)
class RhetoricalTag:
    name: str
    rhetorical_class: RhetoricalClass
    symmetric: bool
    # dual tag name; None iff symmetric, own name for self-dual asymmetric tags
    dual: str | None = None


# Canonical names use the hyphenated forms; the alias table below absorbs
# case/space/slash variants so corpus files stay bit-stable.

_DIALOG_ACT_TABLE: tuple[tuple[str, DialogActCategory], ...] = (
    ("Statement", DialogActCategory.STATEMENTS),
    ("Opinion", DialogActCategory.STATEMENTS),
    ("Self-talk", DialogActCategory.COMMUNICATIVE_STATUS),
    ("Abandoned", DialogActCategory.COMMUNICATIVE_STATUS),
    ("Answer", DialogActCategory.BACKWARD_COMMUNICATIVE_FUNCTION),
    ("Stalling", DialogActCategory.BACKWARD_COMMUNICATIVE_FUNCTION),
    ("Accept", DialogActCategory.BACKWARD_COMMUNICATIVE_FUNCTION),
    ("Reject", DialogActCategory.BACKWARD_COMMUNICATIVE_FUNCTION),
    ("Collaborative-Completion", DialogActCategory.BACKWARD_COMMUNICATIVE_FUNCTION),
    ("Appreciation", DialogActCategory.BACKWARD_COMMUNICATIVE_FUNCTION),
    ("Downplayer", DialogActCategory.BACKWARD_COMMUNICATIVE_FUNCTION),
    ("Sympathy", DialogActCategory.BACKWARD_COMMUNICATIVE_FUNCTION),
    ("Acknowledge", DialogActCategory.BACKWARD_COMMUNICATIVE_FUNCTION),
    ("Signal-non-understanding", DialogActCategory.BACKWARD_COMMUNICATIVE_FUNCTION),
    ("Task-Management", DialogActCategory.FORWARD_COMMUNICATIVE_FUNCTION),
    ("Offer", DialogActCategory.FORWARD_COMMUNICATIVE_FUNCTION),
    ("Action-Directive", DialogActCategory.FORWARD_COMMUNICATIVE_FUNCTION),
    ("Commit", DialogActCategory.FORWARD_COMMUNICATIVE_FUNCTION),
    ("Question/Info-request", DialogActCategory.FORWARD_COMMUNICATIVE_FUNCTION),
    ("Open-Question", DialogActCategory.FORWARD_COMMUNICATIVE_FUNCTION),
    ("Rhetorical-Question", DialogActCategory.FORWARD_COMMUNICATIVE_FUNCTION),
    ("Apology", DialogActCategory.FORWARD_COMMUNICATIVE_FUNCTION),
    ("Thanking", DialogActCategory.FORWARD_COMMUNICATIVE_FUNCTION),
    ("Exclamation", DialogActCategory.FORWARD_COMMUNICATIVE_FUNCTION),
    ("Explicit-performative", DialogActCategory.FORWARD_COMMUNICATIVE_FUNCTION),
    ("Welcome", DialogActCategory.FORWARD_COMMUNICATIVE_FUNCTION),
    ("Greeting", DialogActCategory.INFORMATION_LEVEL),
    ("Correction", DialogActCategory.INFORMATION_LEVEL),
    ("Conventional-closing", DialogActCategory.INFORMATION_LEVEL),
    ("Hedge", DialogActCategory.OTHER),
    ("Joke", DialogActCategory.OTHER),
)

# (name, class, symmetric, dual). Self-dual asymmetric tags name themselves;
# orientation flags carry their direction on edges.
_RHETORICAL_TABLE: tuple[tuple[str, RhetoricalClass, bool, str | None], ...] = (
    ("Async", RhetoricalClass.TEMPORAL, False, "Async"),
    ("Sync", RhetoricalClass.TEMPORAL, True, None),
    ("Before", RhetoricalClass.TEMPORAL, False, "After"),
    ("After", RhetoricalClass.TEMPORAL, False, "Before"),
    ("Cause", RhetoricalClass.CONTINGENCY, False, "Cause"),
    ("Justify", RhetoricalClass.CONTINGENCY, False, "Justify"),
    ("Motivation", RhetoricalClass.CONTINGENCY, False, "Motivation"),
    ("Condition", RhetoricalClass.CONTINGENCY, False, "Condition"),
    ("Neg-Condition", RhetoricalClass.CONTINGENCY, False, "Neg-Condition"),
    ("Purpose", RhetoricalClass.CONTINGENCY, False, "Purpose"),
    ("Enablement", RhetoricalClass.CONTINGENCY, False, "Enablement"),
    ("Reason", RhetoricalClass.CONTINGENCY, False, "Result"),
    ("Result", RhetoricalClass.CONTINGENCY, False, "Reason"),
    ("Evaluation", RhetoricalClass.CONTINGENCY, False, "Evaluation"),
    ("Contrast", RhetoricalClass.COMPARISON, True, None),
    ("Similarity", RhetoricalClass.COMPARISON, True, None),
    ("Concession", RhetoricalClass.COMPARISON, False, "Concession"),
    ("Expansion", RhetoricalClass.EXPANSION, False, "Expansion"),
    ("Instantiation", RhetoricalClass.EXPANSION, False, "Instantiation"),
    ("Level-of-details", RhetoricalClass.EXPANSION, False, "Level-of-details"),
    ("Substitution", RhetoricalClass.EXPANSION, False, "Substitution"),
    ("Restatement", RhetoricalClass.EXPANSION, True, None),
    ("Summary", RhetoricalClass.EXPANSION, False, "Summary"),
    ("Disjunction", RhetoricalClass.EXPANSION, True, None),
    ("Exception", RhetoricalClass.EXPANSION, False, "Exception"),
    ("Conjunction", RhetoricalClass.EXPANSION, True, None),
    ("Manner", RhetoricalClass.EXPANSION, False, "Manner"),
    ("Process-step", RhetoricalClass.EXPANSION, False, "Process-step"),
    ("Object-attribute", RhetoricalClass.EXPANSION, False, "Object-attribute"),
)

# "List" appears in prose but not in the enumerated relation table; it is
# outside the v1 vocabulary and only surfaced behind include_list=True.
LIST_RELATION = RhetoricalTag("List", RhetoricalClass.EXPANSION, False, "List")

DIALOG_ACTS: tuple[DialogActTag, ...] = tuple(
    DialogActTag(name, cat) for name, cat in _DIALOG_ACT_TABLE
)
RHETORICAL_RELATIONS: tuple[RhetoricalTag, ...] = tuple(
    RhetoricalTag(name, cls, sym, dual) for name, cls, sym, dual in _RHETORICAL_TABLE
)


def _norm(text: str) -> str:
    """Lookup key: case-insensitive, hyphen/space/slash/underscore interchangeable."""
    return re.sub(r"[\s/_-]+", " ", text.strip().casefold())


_DA_BY_KEY: dict[str, DialogActTag] = {_norm(t.name): t for t in DIALOG_ACTS}
_RR_BY_KEY: dict[str, RhetoricalTag] = {_norm(t.name): t for t in RHETORICAL_RELATIONS}

# Fixed alias table. Alternative names from neighbouring tag schemes resolve
# to their DDA equivalents.
_ALIASES: dict[str, str] = {
    _norm("info-request"): "Question/Info-request",
    _norm("precedence"): "Before",
    _norm("succession"): "After",
    _norm("equivalence"): "Restatement",
}

# Continuation is the third dependency type; it has no tag of its own but
# these names parse to the bare continuation label.
_CONTINUATION_NAMES = frozenset({_norm("continuation"), _norm("response")})


def _check_vocabularies_disjoint() -> None:
    overlap = set(_DA_BY_KEY) & set(_RR_BY_KEY)
    if overlap:
        raise AmbiguousTag(sorted(overlap)[0])
    for key, target in _ALIASES.items():
        if key in _DA_BY_KEY or key in _RR_BY_KEY:
            raise AmbiguousTag(key)
        if _norm(target) not in _DA_BY_KEY and _norm(target) not in _RR_BY_KEY:
            raise UnknownTag(target, "alias target missing from vocabulary")


_check_vocabularies_disjoint()


@dataclass(frozen=True)
class EdgeLabel:
    """One label on a response-dependency edge.

    ``tag`` is a canonical tag name for dialog_act/rhetorical labels and
    None for continuation. ``orientation`` is only meaningful on asymmetric
    rhetorical labels. Vocabulary membership is checked where graphs are
    built and validated, not here, so that malformed labels can be reported
    as diagnostics instead of being unconstructible.
    """

    kind: LabelKind
    tag: str | None = None
    orientation: Orientation | None = None

    def __post_init__(self):
        if self.kind is LabelKind.CONTINUATION:
            if self.tag is not None or self.orientation is not None:
                raise ValueError("continuation labels carry no tag or orientation")
        elif self.tag is None:
            raise ValueError(f"{self.kind.value} labels require a tag")

    def sort_key(self) -> tuple[str, str, str]:
        return (
            self.kind.value,
            self.tag or "",
            self.orientation.value if self.orientation else "",
        )


CONTINUATION = EdgeLabel(LabelKind.CONTINUATION)


def all_dialog_acts() -> tuple[DialogActTag, ...]:
    """All 31 dialog-act tags in category order, then listing order."""
    return DIALOG_ACTS


def all_rhetorical_relations(include_list: bool = False) -> tuple[RhetoricalTag, ...]:
    """All 29 rhetorical tags by class, then listing order.

    ``include_list=True`` appends the extra "List" expansion relation, which
    is outside the v1 closed vocabulary.
    """
    if include_list:
        return RHETORICAL_RELATIONS + (LIST_RELATION,)
    return RHETORICAL_RELATIONS


def dialog_act_tag(name: str) -> DialogActTag:
    """Resolve a dialog-act tag by name or alias (case/spacing tolerant)."""
    key = _norm(name)
    key = _norm(_ALIASES.get(key, key))
    tag = _DA_BY_KEY.get(key)
    if tag is None:
        raise UnknownTag(name)
    return tag


def rhetorical_tag(name: str) -> RhetoricalTag:
    """Resolve a rhetorical tag by name or alias (case/spacing tolerant)."""
    key = _norm(name)
    key = _norm(_ALIASES.get(key, key))
    tag = _RR_BY_KEY.get(key)
    if tag is None:
        raise UnknownTag(name)
    return tag


def parse_tag(text: str) -> EdgeLabel:
    """Parse a tag name into an edge label with its resolved kind.

    Matching is case-insensitive over canonical names and the fixed alias
    table; hyphen, space, slash and underscore are interchangeable.
    Asymmetric rhetorical tags get the default arg1 orientation.
    """
    key = _norm(text)
    if key in _CONTINUATION_NAMES:
        return CONTINUATION
    key = _norm(_ALIASES.get(key, key))
    da = _DA_BY_KEY.get(key)
    rr = _RR_BY_KEY.get(key)
    if da is not None and rr is not None:
        raise AmbiguousTag(text)
    if da is not None:
        return EdgeLabel(LabelKind.DIALOG_ACT, da.name)
    if rr is not None:
        orientation = None if rr.symmetric else Orientation.ARG1
        return EdgeLabel(LabelKind.RHETORICAL, rr.name, orientation)
    raise UnknownTag(text)


def dialog_act(name: str) -> EdgeLabel:
    return EdgeLabel(LabelKind.DIALOG_ACT, dialog_act_tag(name).name)


def rhetorical(name: str, orientation: Orientation | None = None) -> EdgeLabel:
    tag = rhetorical_tag(name)
    if tag.symmetric:
        if orientation is not None:
            raise ValueError(f"symmetric relation {tag.name!r} takes no orientation")
        return EdgeLabel(LabelKind.RHETORICAL, tag.name)
    return EdgeLabel(LabelKind.RHETORICAL, tag.name, orientation or Orientation.ARG1)


def canonicalize_label(label: EdgeLabel) -> EdgeLabel:
    """Return the canonical form of a label, validating it against the vocabularies.

    Tag names are resolved case-insensitively and replaced by canonical
    spellings; asymmetric rhetorical labels default to arg1 orientation.
    Raises UnknownTag for names outside the owning vocabulary and ValueError
    for orientation on labels that cannot carry one.
    """
    if label.kind is LabelKind.CONTINUATION:
        return CONTINUATION
    if label.kind is LabelKind.DIALOG_ACT:
        if label.orientation is not None:
            raise ValueError("dialog-act labels take no orientation")
        return EdgeLabel(LabelKind.DIALOG_ACT, dialog_act_tag(label.tag).name)
    tag = rhetorical_tag(label.tag)
    if tag.symmetric:
        if label.orientation is not None:
            raise ValueError(f"symmetric relation {tag.name!r} takes no orientation")
        return EdgeLabel(LabelKind.RHETORICAL, tag.name)
    return EdgeLabel(
        LabelKind.RHETORICAL, tag.name, label.orientation or Orientation.ARG1
    )


def dual_of(tag: RhetoricalTag | str) -> RhetoricalTag | None:
    """The dual relation for asymmetric tags, None for symmetric ones.

    dual_of is an involution: dual_of(dual_of(t)) == t for every
    asymmetric t.
    """
    if isinstance(tag, str):
        tag = rhetorical_tag(tag)
    if tag.symmetric:
        return None
    return _RR_BY_KEY[_norm(tag.dual)] if tag.dual != tag.name else tag


def category_of(tag: DialogActTag | RhetoricalTag | str) -> DialogActCategory | RhetoricalClass:
    """The unique owning category (dialog acts) or class (rhetorical tags)."""
    if isinstance(tag, DialogActTag):
        return tag.category
    if isinstance(tag, RhetoricalTag):
        return tag.rhetorical_class
    key = _norm(tag)
    key = _norm(_ALIASES.get(key, key))
    da = _DA_BY_KEY.get(key)
    if da is not None:
        return da.category
    rr = _RR_BY_KEY.get(key)
    if rr is not None:
        return rr.rhetorical_class
    raise UnknownTag(tag)


def taxonomy_dump(include_list: bool = False) -> dict:
    """Machine-readable vocabulary dump for UIs and third-party tools.

    Shape: {"dialog_acts": [{"name", "category"}],
            "rhetorical": [{"name", "class", "symmetric", "dual"?}]}.
    """
    rhetorical_entries = []
    for t in all_rhetorical_relations(include_list=include_list):
        entry: dict = {
            "name": t.name,
            "class": t.rhetorical_class.value,
            "symmetric": t.symmetric,
        }
        if not t.symmetric:
            entry["dual"] = t.dual
        rhetorical_entries.append(entry)
    return {
        "dialog_acts": [
            {"name": t.name, "category": t.category.value} for t in DIALOG_ACTS
        ],
        "rhetorical": rhetorical_entries,
    }
