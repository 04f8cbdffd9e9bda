"""Dependency Dialogue Acts: labeled response-dependency graphs over dialogue.

Dialogues are sequences of slash units; annotation is a graph of
backward-pointing dependency edges carrying dialog-act, rhetorical, and
continuation labels, with self-pointing edges marking thread starts.
The package covers the closed tag vocabularies, graph construction and
validation, thread disentanglement and speaker analytics, a canonical
JSON corpus format with converters, a CLI (``dda``), and an HTTP
annotation service.
"""

from .errors import (
    AmbiguousTag,
    DanglingEdgeEndpoint,
    DanglingReplyEndpoint,
    DdaError,
    DuplicateUnitId,
    ForwardEdge,
    MalformedInput,
    MalformedLine,
    NoSuchDialogue,
    NoSuchEdge,
    NoSuchUnit,
    RevisionConflict,
    SchemaViolation,
    SelfEdgeWithRhetoricalLabel,
    UnknownTag,
    UnmappedSwbdTag,
)
from .taxonomy import (
    CONTINUATION,
    DIALOG_ACTS,
    RHETORICAL_RELATIONS,
    DialogActCategory,
    DialogActTag,
    EdgeLabel,
    LabelKind,
    Orientation,
    RhetoricalClass,
    RhetoricalTag,
    all_dialog_acts,
    all_rhetorical_relations,
    canonicalize_label,
    category_of,
    dialog_act,
    dialog_act_tag,
    dual_of,
    parse_tag,
    rhetorical,
    rhetorical_tag,
    taxonomy_dump,
)
from .graph import (
    Diagnostic,
    Dialogue,
    ResponseDependency,
    SlashUnit,
    add_edge,
    build_dialogue,
    edge,
    incoming,
    outgoing,
    remove_edge,
    validate,
)
from .ops import (
    SpeakerStats,
    Thread,
    UnionFind,
    balance_index,
    dialogue_report,
    extract_threads,
    normalize_dialogue,
    normalize_direction,
    speaker_interaction_matrix,
    speaker_stats,
    thread_of,
)
from .formats import (
    Corpus,
    build_corpus,
    load_corpus,
    parse_corpus,
    save_corpus,
    serialize_corpus,
)
from .convert import (
    ReplyGraphRecord,
    export_reply_graph,
    format_reply_lines,
    import_reply_graph,
    import_transcript,
    map_swbd_tag,
    parse_reply_lines,
    project_unit_tags,
    swbd_mapping,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
