import graphlib
import json

import pytest
from hypothesis import given, settings

from conftest import WORKED_CORPUS, np_, sentence
from countability.errors import DanglingReferenceError, IRParseError
from countability.source_ir import (
    CardinalStyle,
    Role,
    SentenceIR,
    parse_document,
    read_document,
    resolution_order,
    serialize_document,
    validate_against_lexicon,
)
from strategies import sentences

MAMMOTH = '{"id": "2", "main_verb_ja": "zetumetu", "template": "{np:1} died out", "nps": [{"id": "1", "head_ja": "manmosu", "syntactic_role": "SUBJECT"}]}'


def test_parse_single_subject():
    (s,) = parse_document(MAMMOTH.encode())
    assert s.main_verb_ja == "zetumetu"
    assert s.subject.head_ja == "manmosu"
    assert len(s.nps) == 1


def test_empty_stream():
    assert parse_document(b"") == []
    assert parse_document(b"\n# only a comment\n\n") == []


def test_cardinal_without_classifier():
    rec = {"id": "x", "template": "{np:1}", "nps": [{"id": "1", "head_ja": "inu", "cardinal": 2}]}
    with pytest.raises(IRParseError) as info:
        parse_document(json.dumps(rec))
    assert info.value.line == 1


@pytest.mark.parametrize("cardinal", [0, -1, 2.5, True, "3"])
def test_cardinal_must_be_positive_int(cardinal):
    rec = {"id": "x", "template": "{np:1}", "nps": [{"id": "1", "head_ja": "inu", "cardinal": cardinal, "classifier_ja": "hiki"}]}
    with pytest.raises(IRParseError):
        parse_document(json.dumps(rec))


def test_line_numbers_count_comments():
    text = "# header\n" + MAMMOTH + "\n{not json\n"
    with pytest.raises(IRParseError) as info:
        parse_document(text)
    assert info.value.line == 3


@pytest.mark.parametrize(
    "nps, template",
    [
        ([{"id": "1", "head_ja": "inu", "syntactic_role": "APPOSITIVE_TO(9)"}], "{np:1}"),
        ([{"id": "1", "head_ja": "inu", "purpose_target_of": "9"}], "{np:1}"),
        ([{"id": "1", "head_ja": "inu"}], "{np:1} {be:9}"),
    ],
)
def test_dangling_references(nps, template):
    rec = {"id": "x", "template": template, "nps": nps}
    with pytest.raises(DanglingReferenceError) as info:
        parse_document("\n" + json.dumps(rec))
    assert info.value.line == 2


@pytest.mark.parametrize(
    "rec",
    [
        {"id": "x", "template": "", "nps": [{"id": "1", "head_ja": "a"}, {"id": "1", "head_ja": "b"}]},
        {"id": "x", "template": "", "nps": [{"id": "1", "head_ja": "a", "syntactic_role": "SUBJECT"}, {"id": "2", "head_ja": "b", "syntactic_role": "SUBJECT"}]},
        {"id": "x", "template": "{np:1} {np:1}", "nps": [{"id": "1", "head_ja": "a"}]},
        {"id": "x", "template": "{verb:1}", "nps": [{"id": "1", "head_ja": "a"}]},
        {"id": "x", "template": "", "nps": [{"id": "1", "head_ja": "a", "syntactic_role": "AGENT"}]},
        {"id": "x", "template": "", "nps": [{"id": "1", "head_ja": "a", "colour": "red"}]},
        {"id": "x", "template": "", "nps": [{"id": "1", "head_ja": "a", "definite": "yes"}]},
        {"template": ""},
        ["not", "an", "object"],
    ],
)
def test_malformed_records(rec):
    with pytest.raises(IRParseError):
        parse_document(json.dumps(rec))


def test_duplicate_sentence_ids():
    with pytest.raises(IRParseError):
        parse_document(MAMMOTH + "\n" + MAMMOTH + "\n")


def test_appositive_role_wire_format():
    rec = {"id": "x", "template": "{np:1}, {np:2}", "nps": [
        {"id": "1", "head_ja": "inu", "syntactic_role": "SUBJECT"},
        {"id": "2", "head_ja": "doubutsu", "syntactic_role": "APPOSITIVE_TO(1)"},
    ]}
    (s,) = parse_document(json.dumps(rec))
    assert s.np("2").syntactic_role is Role.APPOSITIVE_TO
    assert s.np("2").appositive_to == "1"
    assert json.loads(serialize_document([s]))["nps"][1]["syntactic_role"] == "APPOSITIVE_TO(1)"


def test_bundled_worked_corpus_reads():
    doc = read_document(WORKED_CORPUS)
    assert len(doc) == 4
    tofu = doc[2].np("1")
    assert (tofu.cardinal, tofu.classifier_ja, tofu.cardinal_style) == (3, "chou", CardinalStyle.DIGITS)


def test_no_diagnostics_for_known_lemmas(lexicon):
    for s in read_document(WORKED_CORPUS):
        assert validate_against_lexicon(s, lexicon) == []


def test_unknown_noun_diagnostic(lexicon):
    s = sentence([np_(1, "inu", "SUBJECT"), np_(2, "zzz", "OBJECT")], verb="miru")
    (d,) = validate_against_lexicon(s, lexicon)
    assert d.lemma == "zzz" and d.np_id == "2" and d.slot == "head"
    assert "zzz" in str(d)


def test_unknown_determiner_diagnostic(lexicon):
    s = sentence([np_(1, "inu", determiner_ja="zzz-no")])
    (d,) = validate_against_lexicon(s, lexicon)
    assert d.slot == "determiner" and d.lemma == "zzz-no"


def test_every_unknown_lemma_reported(lexicon):
    s = sentence(
        [np_(1, "qq", determiner_ja="qd", complement_modifier_ja="qc", classifier_ja="qk")],
        verb="qv",
    )
    slots = sorted(d.slot for d in validate_against_lexicon(s, lexicon))
    assert slots == ["classifier", "complement_modifier", "determiner", "head", "main_verb"]


def test_structure_diagnostics(lexicon):
    s = sentence([np_(1, "otona", "COPULA_COMPLEMENT")], verb="da")
    assert any("without a subject" in d.message for d in validate_against_lexicon(s, lexicon))
    s = SentenceIR("c", (
        np_(1, "inu", Role.APPOSITIVE_TO, appositive_to="2"),
        np_(2, "zou", Role.APPOSITIVE_TO, appositive_to="1"),
    ), "{np:1} {np:2}")
    assert any(d.slot == "structure" for d in validate_against_lexicon(s, lexicon))
    with pytest.raises(graphlib.CycleError):
        resolution_order(s)


def test_resolution_order_puts_anchor_first():
    s = SentenceIR("o", (
        np_(1, "otona", Role.COPULA_COMPLEMENT),
        np_(2, "doubutsu", Role.APPOSITIVE_TO, appositive_to="3"),
        np_(3, "kodomo", Role.SUBJECT),
    ), "{np:1} {np:2} {np:3}")
    order = resolution_order(s)
    assert sorted(order) == ["1", "2", "3"]
    assert order.index("3") < order.index("1")
    assert order.index("3") < order.index("2")


@settings(max_examples=150, deadline=None)
@given(sentences())
def test_ir_round_trip(s):
    text = serialize_document([s])
    (again,) = parse_document(text.encode("utf-8"))
    assert again == s
    assert serialize_document([again]) == text
