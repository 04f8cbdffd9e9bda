"""Transcript, reply-graph, and SWBD-DAMSL converters."""

import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FIXTURES, bfs_partition, partition_of, random_reply_forest

from dda import (
    CONTINUATION,
    DanglingReplyEndpoint,
    MalformedLine,
    ReplyGraphRecord,
    ResponseDependency,
    SlashUnit,
    UnmappedSwbdTag,
    build_dialogue,
    dialog_act,
    dialog_act_tag,
    export_reply_graph,
    format_reply_lines,
    import_reply_graph,
    import_transcript,
    load_corpus,
    map_swbd_tag,
    parse_reply_lines,
    project_unit_tags,
    rhetorical,
    swbd_mapping,
    validate,
)

U = SlashUnit
E = ResponseDependency


class TestTranscriptImport:
    def test_basic_lines(self):
        d = import_transcript("ana\thello there\nbo\thi\n")
        assert [u.id for u in d.units] == [0, 1]
        assert d.units[0].speaker == "ana"
        assert d.units[1].text == "hi"
        assert d.edges == ()
        assert d.id == "transcript"

    def test_dialogue_id_argument(self):
        assert import_transcript("a\tx\n", "chat-7").id == "chat-7"

    def test_fixture_file(self):
        d = import_transcript((FIXTURES / "transcript.tsv").read_text("utf-8"))
        assert len(d.units) == 5
        assert d.speakers() == ("dana", "eli", "finn", "gus")

    def test_extra_tabs_stay_in_text(self):
        d = import_transcript("ana\tcolumn a\tcolumn b\n")
        assert d.units[0].text == "column a\tcolumn b"

    def test_fields_are_stripped(self):
        d = import_transcript("  ana \t  spaced out  \n")
        assert d.units[0].speaker == "ana"
        assert d.units[0].text == "spaced out"

    def test_empty_input_gives_empty_dialogue(self):
        assert import_transcript("").units == ()

    @pytest.mark.parametrize(
        "text,line",
        [
            ("no tab here\n", 1),
            ("a\tx\n\nb\ty\n", 2),
            ("\tmissing speaker\n", 1),
            ("a\tx\nb\t \n", 2),
        ],
    )
    def test_malformed_lines(self, text, line):
        with pytest.raises(MalformedLine) as info:
            import_transcript(text)
        assert info.value.line == line


class TestReplyLines:
    def test_parse(self):
        record = parse_reply_lines("1 0 -\n2 1 -\n")
        assert record.pairs == ((1, 0), (2, 1))
        assert record.dialogue_id == "replies"

    def test_blank_lines_skipped(self):
        assert parse_reply_lines("\n1 0 -\n\n\n2 0 -\n").pairs == ((1, 0), (2, 0))

    def test_whitespace_tolerant(self):
        assert parse_reply_lines("  3   1   -  \n").pairs == ((3, 1),)

    @pytest.mark.parametrize(
        "text,line",
        [
            ("1 0\n", 1),
            ("1 0 - extra\n", 1),
            ("1 0 x\n", 1),
            ("1 zero -\n", 1),
            ("2 1 -\n-1 0 -\n", 2),
        ],
    )
    def test_malformed(self, text, line):
        with pytest.raises(MalformedLine) as info:
            parse_reply_lines(text)
        assert info.value.line == line

    def test_format(self):
        record = ReplyGraphRecord("r", ((1, 0), (4, 2)))
        assert format_reply_lines(record) == "1 0 -\n4 2 -\n"

    def test_format_parse_round_trip(self):
        text = (FIXTURES / "replies.txt").read_text("utf-8")
        assert format_reply_lines(parse_reply_lines(text)) == text


class TestReplyImport:
    def test_fixture_pair(self):
        transcript = (FIXTURES / "transcript.tsv").read_text("utf-8")
        replies = parse_reply_lines((FIXTURES / "replies.txt").read_text("utf-8"))
        d = import_reply_graph(transcript, replies)
        assert partition_of(d) == {frozenset({0, 1, 2}), frozenset({3, 4})}
        assert not [x for x in validate(d) if x.severity == "error"]

    def test_thread_starts_get_self_edges(self):
        transcript = (FIXTURES / "transcript.tsv").read_text("utf-8")
        replies = parse_reply_lines((FIXTURES / "replies.txt").read_text("utf-8"))
        d = import_reply_graph(transcript, replies)
        self_ids = {e.source for e in d.edges if e.is_self}
        assert self_ids == {0, 3}

    def test_all_edges_are_bare_continuations(self):
        replies = ReplyGraphRecord("r", ((1, 0),))
        d = import_reply_graph("a\tx\nb\ty\n", replies)
        assert all(e.labels == (CONTINUATION,) for e in d.edges)

    def test_forward_pairs_are_flipped(self):
        d = import_reply_graph("a\tx\nb\ty\n", ReplyGraphRecord("r", ((0, 1),)))
        non_self = [e for e in d.edges if not e.is_self]
        assert [(e.source, e.target) for e in non_self] == [(1, 0)]

    def test_takes_dialogue_argument(self):
        base = build_dialogue("pre", [U(0, "a", "x"), U(1, "b", "y")], [])
        d = import_reply_graph(base, ReplyGraphRecord("r", ((1, 0),)))
        assert d.id == "pre"

    def test_dangling_source(self):
        with pytest.raises(DanglingReplyEndpoint) as info:
            import_reply_graph("a\tx\n", ReplyGraphRecord("r", ((5, 0),)))
        assert info.value.index == 5

    def test_dangling_target(self):
        with pytest.raises(DanglingReplyEndpoint):
            import_reply_graph("a\tx\nb\ty\n", ReplyGraphRecord("r", ((1, 9),)))

    def test_no_replies_every_unit_is_a_thread(self):
        d = import_reply_graph("a\tx\nb\ty\nc\tz\n", ReplyGraphRecord("r"))
        assert partition_of(d) == {frozenset({0}), frozenset({1}), frozenset({2})}


class TestReplyExport:
    def test_drops_self_edges(self, classroom):
        record = export_reply_graph(classroom)
        assert record.pairs == (
            (11, 9),
            (12, 11),
            (13, 10),
            (14, 13),
            (15, 8),
            (16, 15),
            (17, 14),
            (18, 17),
            (19, 18),
        )

    def test_multi_target_units_keep_all_pairs(self, overload):
        assert export_reply_graph(overload).pairs == ((2, 0), (3, 2), (4, 1), (4, 3))

    def test_multi_label_edge_is_one_pair(self):
        d = build_dialogue(
            "d",
            [U(0, "a", "x"), U(1, "b", "y")],
            [E(1, 0, (dialog_act("Answer"), rhetorical("Cause")))],
        )
        assert export_reply_graph(d).pairs == ((1, 0),)

    def test_richer_graph_exports_cleanly(self, classroom):
        # labels and thread-start marks are the only information lost
        record = export_reply_graph(classroom)
        rebuilt = import_reply_graph(
            build_dialogue(classroom.id, classroom.units, []), record
        )
        assert partition_of(rebuilt) == partition_of(classroom)


def _chain_transcript(n_lines):
    return "".join(f"s{i % 3}\tline number {i}\n" for i in range(n_lines))


@given(st.integers(min_value=0, max_value=2**32 - 1))
@settings(max_examples=40, deadline=None)
def test_reply_round_trip_property(seed):
    rng = random.Random(seed)
    n, pairs = random_reply_forest(rng)
    record = ReplyGraphRecord("rt", pairs)
    d = import_reply_graph(_chain_transcript(n), record)
    exported = export_reply_graph(d)
    # pairs survive up to backward normalization and deduplication
    expected = sorted({(max(a, b), min(a, b)) for a, b in pairs})
    assert list(exported.pairs) == expected
    # the thread partition equals the reply graph's connected components
    assert partition_of(d) == bfs_partition(range(n), pairs)


def test_reply_round_trip_exact_when_already_backward():
    pairs = ((1, 0), (3, 2), (4, 2), (5, 4))
    d = import_reply_graph(_chain_transcript(6), ReplyGraphRecord("b", pairs))
    assert export_reply_graph(d).pairs == pairs


class TestSwbdMapping:
    def test_table_shape(self):
        table = swbd_mapping()
        assert len(table) == 42
        dropped = [code for code, name in table.items() if name is None]
        assert sorted(dropped) == ["%", "x"]

    def test_mapped_names_are_all_valid_acts(self):
        for code, name in swbd_mapping().items():
            if name is not None:
                assert dialog_act_tag(name).name == name

    @pytest.mark.parametrize("code", ["ny", "nn", "na", "ng", "no"])
    def test_answer_family(self, code):
        assert map_swbd_tag(code).name == "Answer"

    @pytest.mark.parametrize("code", ["qy", "qw", "qy^d", "qw^d", "qrr", "^g"])
    def test_question_family(self, code):
        assert map_swbd_tag(code).name == "Question/Info-request"

    def test_open_and_rhetorical_questions_stay_distinct(self):
        assert map_swbd_tag("qo").name == "Open-Question"
        assert map_swbd_tag("qh").name == "Rhetorical-Question"

    @pytest.mark.parametrize(
        "code,name",
        [
            ("sd", "Statement"),
            ("sv", "Opinion"),
            ("b", "Acknowledge"),
            ("bk", "Acknowledge"),
            ("aa", "Accept"),
            ("ar", "Reject"),
            ("fp", "Greeting"),
        ],
    )
    def test_spot_checks(self, code, name):
        assert map_swbd_tag(code).name == name

    def test_strips_whitespace(self):
        assert map_swbd_tag(" sd ").name == "Statement"

    def test_dropped_codes_flagged(self):
        with pytest.raises(UnmappedSwbdTag) as info:
            map_swbd_tag("x")
        assert info.value.dropped is True

    def test_unknown_code(self):
        with pytest.raises(UnmappedSwbdTag) as info:
            map_swbd_tag("zz")
        assert info.value.dropped is False


class TestUnitTagProjection:
    def test_overload_projection(self, overload):
        out = project_unit_tags(overload)
        assert set(out) == {0, 1, 2, 3, 4}
        assert out[0] == Counter({dialog_act_tag("Statement"): 1})
        assert out[1] == Counter({dialog_act_tag("Question/Info-request"): 1})
        assert out[2] == Counter()
        assert out[3] == Counter({dialog_act_tag("Joke"): 1})
        assert out[4] == Counter({dialog_act_tag("Answer"): 1})

    def test_rhetorical_labels_dropped(self):
        d = build_dialogue(
            "d",
            [U(0, "a", "x"), U(1, "b", "y")],
            [E(1, 0, (rhetorical("Result"), dialog_act("Accept")))],
        )
        out = project_unit_tags(d)
        assert out[1] == Counter({dialog_act_tag("Accept"): 1})
        assert out[0] == Counter()

    def test_repeated_act_counts(self):
        d = build_dialogue(
            "d",
            [U(0, "a", "x"), U(1, "b", "y"), U(2, "a", "z")],
            [
                E(1, 1, (dialog_act("Statement"),)),
                E(1, 0, (dialog_act("Statement"),)),
                E(2, 1, (dialog_act("Answer"),)),
            ],
        )
        assert project_unit_tags(d)[1] == Counter({dialog_act_tag("Statement"): 2})
