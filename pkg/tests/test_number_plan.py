import pytest

from conftest import WORKED_CORPUS, np_, sentence
from countability.errors import PlanError, UnknownLemmaError
from countability.lexicon import EnvironmentKind, Number
from countability.number_plan import (
    USE_DEFAULTS,
    Article,
    ClassifierComplement,
    Environment,
    RealizationPlan,
    apply_defaults,
    cardinal_words,
    determine_environment,
    plan_np,
    resolve_sentence,
)
from countability.realizer import render_np
from countability.referentiality import Referentiality, RefKind
from countability.source_ir import read_document

DENUM, MC, MU = EnvironmentKind.DENUMERATED, EnvironmentKind.MASS_COUNTABLE, EnvironmentKind.MASS_UNCOUNTABLE
SG, PL = Number.SINGULAR, Number.PLURAL
REF = Referentiality(RefKind.REFERENTIAL, 8)


def realize(s, lexicon, **kw):
    return {p.np_id: render_np(p).text for p in resolve_sentence(s, lexicon, **kw)}


def env_of(s, np_id, lexicon, **kw):
    return determine_environment(s.np(str(np_id)), s, lexicon, **kw)


# -- environment --------------------------------------------------------------------


def test_classifier_count(lexicon):
    s = sentence([np_(1, "tofu", "SUBJECT", cardinal=3, classifier_ja="chou")], verb="aru")
    assert env_of(s, 1, lexicon) == Environment(DENUM, 3, number=PL, count=3)


def test_determiner_most(lexicon):
    s = sentence([np_(1, "kodomo", "SUBJECT", determiner_ja="taitei-no")], verb="naru")
    assert env_of(s, 1, lexicon) == Environment(DENUM, 2, number=PL)


def test_fall_through_marker(lexicon):
    s = sentence([np_(1, "inu", "OBJECT")], verb="miru")
    env = env_of(s, 1, lexicon)
    assert env == USE_DEFAULTS and env.is_default_marker and env.fired_step == 7


def test_mass_countable_verb(lexicon):
    s = sentence([np_(1, "ke-ki", "OBJECT")], verb="shuushuu")
    assert env_of(s, 1, lexicon) == Environment(MC, 6)
    s = sentence([np_(1, "ke-ki", "SUBJECT")], verb="shuushuu")
    assert env_of(s, 1, lexicon) == USE_DEFAULTS


def test_explicit_plural_first(lexicon):
    s = sentence([np_(1, "inu", "OBJECT", explicit_plural=True, determiner_ja="onoono-no", cardinal=1, classifier_ja="hiki")], verb="shuushuu")
    assert env_of(s, 1, lexicon) == Environment(DENUM, 1, number=PL)


def test_complement_modifier(lexicon):
    s = sentence([np_(1, "gakkou", "SUBJECT", complement_modifier_ja="zenkoku-no")], verb="aru")
    assert env_of(s, 1, lexicon) == Environment(DENUM, 4, number=PL)


def test_non_forcing_determiner_falls_through(lexicon):
    s = sentence([np_(1, "inu", "OBJECT", determiner_ja="watashi-no")], verb="miru")
    assert env_of(s, 1, lexicon) == USE_DEFAULTS


def test_ascriptive_needs_subject_plan(lexicon):
    s = sentence([np_(1, "kodomo", "SUBJECT"), np_(2, "otona", "COPULA_COMPLEMENT")], verb="naru")
    with pytest.raises(PlanError):
        env_of(s, 2, lexicon)


def test_ascriptive_copies_subject_number(lexicon):
    s = sentence([np_(1, "kodomo", "SUBJECT", determiner_ja="taitei-no"), np_(2, "otona", "COPULA_COMPLEMENT")], verb="naru")
    subject, complement = resolve_sentence(s, lexicon)
    assert complement.environment == Environment(DENUM, 5, number=PL)
    assert env_of(s, 2, lexicon, subject_plan=subject) == Environment(DENUM, 5, number=PL)


def test_unknown_determiner_in_environment(lexicon):
    s = sentence([np_(1, "inu", determiner_ja="zzz")])
    with pytest.raises(UnknownLemmaError):
        env_of(s, 1, lexicon)


@pytest.mark.parametrize(
    "kw",
    [
        dict(kind=DENUM, fired_step=2),
        dict(kind=DENUM, fired_step=3, number=PL, count=1),
        dict(kind=DENUM, fired_step=3, number=SG, count=2),
        dict(kind=MU, fired_step=7, number=SG),
        dict(kind=None, fired_step=6),
    ],
)
def test_environment_invariants(kw):
    with pytest.raises(ValueError):
        Environment(**kw)


# -- defaults --------------------------------------------------------------------


@pytest.mark.parametrize(
    "ja, expected",
    [
        ("bi-ru", Environment(MU, 7)),
        ("kagu", Environment(MU, 7)),
        ("hasami", Environment(MC, 7)),
        ("men", Environment(DENUM, 7, number=PL)),
        ("houchou", Environment(DENUM, 7, number=SG)),
        ("ke-ki", Environment(DENUM, 7, number=SG)),
    ],
)
def test_apply_defaults(lexicon, ja, expected):
    assert apply_defaults(lexicon.noun(ja)) == expected


def test_defaults_realize(lexicon):
    s = sentence([np_(1, "bi-ru", "OBJECT"), np_(2, "hasami", "OBJECT"), np_(3, "men", "OBJECT")], verb="kau")
    assert realize(s, lexicon) == {"1": "beer", "2": "scissors", "3": "noodles"}


# -- plans -----------------------------------------------------------------------


def test_piece_of_equipment(lexicon):
    s = sentence([np_(1, "sore", "SUBJECT"), np_(2, "dougu", "COPULA_COMPLEMENT")], verb="da")
    plan = resolve_sentence(s, lexicon)[1]
    assert plan.surface_head == "piece" and plan.article is Article.A_AN and plan.head_is_classifier
    assert plan.classifier_complement == ClassifierComplement("equipment", SG)
    assert render_np(plan).text == "a piece of equipment"


def test_semi_countable(lexicon):
    np = np_(1, "chishiki", "OBJECT")
    plan = plan_np(np, REF, Environment(DENUM, 2, number=SG), lexicon)
    assert plan.surface_head == "knowledge" and plan.article is Article.A_AN
    assert plan.classifier_complement is None
    assert "semi-countable:a/an" in plan.trace
    plural = plan_np(np, REF, Environment(DENUM, 3, number=PL, count=2), lexicon)
    assert render_np(plural).text == "two pieces of knowledge"


def test_slice_of_elephant(lexicon):
    s = sentence([np_(1, "zou", "OBJECT", cardinal=1, classifier_ja="kire")], verb="taberu")
    (plan,) = resolve_sentence(s, lexicon)
    assert plan.surface_head == "slice" and plan.article is Article.A_AN
    assert plan.classifier_complement.lemma == "elephant"
    assert plan.classifier_complement.number is SG
    assert plan.classifier_complement.article is Article.NONE
    assert render_np(plan).text == "a slice of elephant"


def test_many_much_split(lexicon):
    cake = sentence([np_(1, "ke-ki", "OBJECT", determiner_ja="takusan-no")], verb="taberu")
    dog = sentence([np_(1, "inu", "OBJECT", determiner_ja="takusan-no")], verb="miru")
    assert realize(cake, lexicon) == {"1": "much cake"}
    assert realize(dog, lexicon) == {"1": "many dogs"}
    (plan,) = resolve_sentence(dog, lexicon)
    assert plan.environment.kind is MU and plan.head_number is PL


def test_substitute_for_non_pair_pluralia_tantum(lexicon):
    np = np_(1, "ifuku", "OBJECT")
    assert render_np(plan_np(np, REF, Environment(DENUM, 2, number=SG), lexicon)).text == "a garment"
    assert render_np(plan_np(np, REF, Environment(DENUM, 2, number=PL), lexicon)).text == "garments"
    counted = np_(1, "ifuku", "OBJECT", cardinal=3, classifier_ja="chou")
    assert render_np(plan_np(counted, REF, Environment(DENUM, 3, number=PL, count=3), lexicon)).text == "three garments"


def test_explicit_plural_uncountable_extension(lexicon):
    s = sentence([np_(1, "kagu", "OBJECT", explicit_plural=True)], verb="miru")
    (plan,) = resolve_sentence(s, lexicon)
    assert render_np(plan).text == "pieces of furniture"
    assert "ext:explicit-plural-uncountable" in plan.trace


def test_classifier_default_rule_keeps_mass_number(lexicon):
    s = sentence([np_(1, "ke-ki", "OBJECT", classifier_ja="yama"), np_(2, "suna", "OBJECT", classifier_ja="yama")], verb="kau")
    assert realize(s, lexicon) == {"1": "a pile of cakes", "2": "a pile of sand"}


def test_classifier_singular_unless_pt(lexicon):
    s = sentence([np_(1, "hasami", "OBJECT", cardinal=2, classifier_ja="hako"), np_(2, "bi-ru", "OBJECT", cardinal=2, classifier_ja="hai")], verb="kau")
    assert realize(s, lexicon) == {"1": "two boxes of scissors", "2": "two glasses of beer"}


def test_digits_and_words(lexicon):
    s = sentence([
        np_(1, "inu", "OBJECT", cardinal=1, classifier_ja="hiki"),
        np_(2, "inu", "OBJECT", cardinal=1, classifier_ja="hiki", cardinal_style="digits"),
        np_(3, "inu", "OBJECT", cardinal=21, classifier_ja="hiki"),
    ], verb="miru")
    assert realize(s, lexicon) == {"1": "a dog", "2": "1 dog", "3": "twenty-one dogs"}


@pytest.mark.parametrize("n, words", [(1, "one"), (2, "two"), (13, "thirteen"), (40, "forty"), (99, "ninety-nine"), (100, "100")])
def test_cardinal_words(n, words):
    assert cardinal_words(n) == words


def test_definite_forces_the(lexicon):
    s = sentence([np_(1, "inu", "OBJECT", definite=True), np_(2, "bi-ru", "OBJECT", definite=True)], verb="miru")
    assert realize(s, lexicon) == {"1": "the dog", "2": "the beer"}


def test_some_insertion_flag(lexicon):
    s = sentence([np_(1, "gakusei", "SUBJECT", explicit_plural=True), np_(2, "bi-ru", "OBJECT"), np_(3, "inu", "OBJECT")], verb="kau")
    assert realize(s, lexicon) == {"1": "students", "2": "beer", "3": "a dog"}
    assert realize(s, lexicon, some_insertion=True) == {"1": "students", "2": "some beer", "3": "a dog"}


def test_generic_plans_are_bare(lexicon):
    s = sentence([np_(1, "ke-ki", "OBJECT", determiner_ja="onoono-no", definite=True)], verb="suki")
    (plan,) = resolve_sentence(s, lexicon)
    assert plan.environment is None
    assert plan.article is Article.NONE and plan.denumerator_token is None
    assert plan.classifier_complement is None
    assert "generic:determiner-dropped" in plan.trace
    assert render_np(plan).text == "cake"


def test_resolve_worked_examples(lexicon):
    ex1, ex2, _, _ = read_document(WORKED_CORPUS)
    children, adults = resolve_sentence(ex1, lexicon)
    assert (children.surface_head, children.head_number) == ("child", PL)
    assert (adults.surface_head, adults.head_number, adults.article) == ("adult", PL, Article.NONE)
    (mammoths,) = resolve_sentence(ex2, lexicon)
    assert mammoths.head_number is PL and mammoths.referentiality.kind is RefKind.GENERIC
    assert mammoths.article is Article.NONE


def test_unknown_verb(lexicon):
    s = sentence([np_(1, "inu", "SUBJECT")], verb="zzz")
    with pytest.raises(UnknownLemmaError) as info:
        resolve_sentence(s, lexicon)
    assert info.value.lemma == "zzz" and info.value.kind == "verb"


def test_plans_come_back_in_source_order(lexicon):
    s = sentence([np_(1, "otona", "COPULA_COMPLEMENT"), np_(2, "kodomo", "SUBJECT", explicit_plural=True)], verb="naru")
    plans = resolve_sentence(s, lexicon)
    assert [p.np_id for p in plans] == ["1", "2"]
    assert plans[0].head_number is PL


@pytest.mark.parametrize(
    "subject, complement, expected",
    [
        (dict(explicit_plural=True), "gakusei", "students"),
        ({}, "gakusei", "a student"),
        (dict(explicit_plural=True), "kagu", "pieces of furniture"),
        ({}, "zubon", "a pair of trousers"),
    ],
)
def test_ascriptive_agreement(lexicon, subject, complement, expected):
    s = sentence([np_(1, "kodomo", "SUBJECT", **subject), np_(2, complement, "COPULA_COMPLEMENT")], verb="da")
    assert realize(s, lexicon)["2"] == expected


def test_uncountable_subject_complement(lexicon):
    s = sentence([np_(1, "kagu", "SUBJECT"), np_(2, "keikaku", "COPULA_COMPLEMENT"), ], verb="da")
    assert realize(s, lexicon) == {"1": "furniture", "2": "a plan"}
    s = sentence([np_(1, "kagu", "SUBJECT"), np_(2, "jouhou", "COPULA_COMPLEMENT")], verb="da")
    assert realize(s, lexicon)["2"] == "information"


def test_plan_invariants():
    gen = Referentiality(RefKind.GENERIC, 2)
    with pytest.raises(PlanError):
        RealizationPlan("1", "dog", PL, Article.A_AN, REF, True)
    with pytest.raises(PlanError):
        RealizationPlan("1", "dog", PL, Article.THE, gen, True)
    with pytest.raises(PlanError):
        RealizationPlan("1", "dog", SG, Article.NONE, gen, True, denumerator_token="each")
    with pytest.raises(PlanError):
        RealizationPlan("1", "dog", SG, Article.A_AN, REF, True, classifier_complement=ClassifierComplement("x", SG))
    with pytest.raises(PlanError):
        RealizationPlan("1", "piece", SG, Article.A_AN, REF, True, classifier_complement=ClassifierComplement("x", SG, article=Article.THE), head_is_classifier=True)


def test_plan_requires_resolved_environment(lexicon):
    with pytest.raises(PlanError):
        plan_np(np_(1, "inu"), REF, USE_DEFAULTS, lexicon)
