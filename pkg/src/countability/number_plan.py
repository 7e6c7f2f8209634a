"""Countability, number and article planning for referential, ascriptive
and generic NPs.

For non-generic NPs the environment comes from the first step that
applies:

1. explicit plural marker (-tachi)        -> denumerated plural
2. determiner with a forced environment   -> that environment
3. classifier (with or without a numeral) -> denumerated, with the count
4. complement modifier forcing a number   -> that environment
5. ascriptive NP                          -> copied from its anchor
6. object of a mass-countable verb        -> mass countable
7. none of the above                      -> the noun's dictionary default

The environment and the noun's countability preference then pick one
cell of the realization matrix below (plural column shown with count 2)::

                    denum. sg            denum. pl              mass-count.  mass-uncount.
    fully           a dog                two dogs               dogs         dogs
    strongly        a cake               two cakes              cakes        cake
    weakly          a beer               two beers              beer         beer
    uncountable     a piece of info.     two pieces of info.    information  information
    pluralia t.     a pair of scissors   two pairs of scissors  scissors     scissors

Generic NPs skip all of this and come out bare: plural for fully
countable nouns and pluralia tantum, singular for everything else.
"""

from __future__ import annotations

import enum
import graphlib
from dataclasses import dataclass
from typing import Optional

from countability.errors import PlanError
from countability.lexicon import (
    ComplementNumberRule,
    EnvironmentKind,
    Lexicon,
    Major,
    NounEntry,
    Number,
)
from countability.referentiality import Referentiality, RefKind, classify_np
from countability.source_ir import CardinalStyle, NPNode, Role, SentenceIR, ascription_anchor, resolution_order


class Article(enum.Enum):
    A_AN = "A_AN"
    THE = "THE"
    SOME = "SOME"
    NONE = "NONE"


STEP_LABEL = {
    1: "explicit plural",
    2: "determiner",
    3: "classifier",
    4: "complement",
    5: "match subject",
    6: "mass-countable verb",
    7: "dictionary default",
}


@dataclass(frozen=True)
class Environment:
    """Where an NP sits: denumerated (with a number and maybe a count) or
    one of the two mass environments.

    ``kind`` is ``None`` only for the step-7 marker returned by
    :func:`determine_environment`, which tells the caller to fall back on
    :func:`apply_defaults`.
    """

    kind: Optional[EnvironmentKind]
    fired_step: int
    number: Optional[Number] = None
    count: Optional[int] = None

    def __post_init__(self):
        if self.kind is EnvironmentKind.DENUMERATED:
            if self.number is None:
                raise ValueError("denumerated environments need a number")
            if self.count is not None:
                expected = Number.SINGULAR if self.count == 1 else Number.PLURAL
                if self.count < 1 or self.number is not expected:
                    raise ValueError(f"count {self.count} does not agree with {self.number.value}")
        elif self.number is not None or self.count is not None:
            raise ValueError("only denumerated environments carry a number or count")
        if self.kind is None and self.fired_step != 7:
            raise ValueError("only step 7 may leave the environment open")

    @property
    def is_default_marker(self) -> bool:
        return self.kind is None

    @property
    def cell(self) -> str:
        if self.kind is EnvironmentKind.DENUMERATED:
            return f"DENUMERATED-{self.number.value}"
        return self.kind.value.replace("_", "-")


USE_DEFAULTS = Environment(kind=None, fired_step=7)


@dataclass(frozen=True)
class ClassifierComplement:
    lemma: str
    number: Number
    plural_form: Optional[str] = None
    article: Article = Article.NONE


@dataclass(frozen=True)
class RealizationPlan:
    np_id: str
    surface_head: str
    head_number: Number
    article: Article
    referentiality: Referentiality
    countable: bool
    environment: Optional[Environment] = None
    denumerator_token: Optional[str] = None
    classifier_complement: Optional[ClassifierComplement] = None
    head_plural_form: Optional[str] = None
    head_is_classifier: bool = False
    postmodifier: Optional[str] = None
    collective: bool = False
    trace: tuple = ()

    def __post_init__(self):
        if self.classifier_complement is not None and not self.head_is_classifier:
            raise PlanError(f"NP {self.np_id}: complement without a classifier head")
        if self.classifier_complement is not None and self.classifier_complement.article is not Article.NONE:
            raise PlanError(f"NP {self.np_id}: classifier complements never take an article")
        if self.article is Article.A_AN and self.head_number is not Number.SINGULAR:
            raise PlanError(f"NP {self.np_id}: a/an on a plural head")
        if self.referentiality.kind is RefKind.GENERIC:
            if (
                self.article is not Article.NONE
                or self.denumerator_token is not None
                or self.classifier_complement is not None
                or self.environment is not None
            ):
                raise PlanError(f"NP {self.np_id}: generic NPs must be bare")


# -- environment --------------------------------------------------------------------


def _forced(modifier, step: int) -> Optional[Environment]:
    kind = modifier.forced_environment
    if kind is None and modifier.forced_number is not None:
        kind = EnvironmentKind.DENUMERATED
    if kind is None:
        return None
    number = modifier.forced_number if kind is EnvironmentKind.DENUMERATED else None
    if kind is EnvironmentKind.DENUMERATED and number is None:
        number = Number.SINGULAR
    return Environment(kind, step, number=number)


def determine_environment(
    np: NPNode,
    sentence: SentenceIR,
    lexicon: Lexicon,
    subject_plan: Optional[RealizationPlan] = None,
    referentiality: Optional[Referentiality] = None,
) -> Environment:
    """Environment for a referential or ascriptive NP (first step that fires).

    ``subject_plan`` is the resolved plan of the NP an ascriptive ``np``
    copies from: the copula subject, or the NP it stands in apposition to.
    """
    entry = lexicon.noun(np.head_ja)
    if np.explicit_plural:
        return Environment(EnvironmentKind.DENUMERATED, 1, number=Number.PLURAL)
    if np.determiner_ja is not None:
        env = _forced(lexicon.modifier(np.determiner_ja), 2)
        if env is not None:
            return env
    if np.classifier_ja is not None:
        lexicon.classifier(np.classifier_ja)
        if np.cardinal is None:
            return Environment(EnvironmentKind.DENUMERATED, 3, number=Number.SINGULAR)
        number = Number.SINGULAR if np.cardinal == 1 else Number.PLURAL
        return Environment(EnvironmentKind.DENUMERATED, 3, number=number, count=np.cardinal)
    if np.complement_modifier_ja is not None:
        env = _forced(lexicon.modifier(np.complement_modifier_ja), 4)
        if env is not None:
            return env
    if referentiality is None:
        referentiality = classify_np(np, sentence, lexicon)
    if referentiality.kind is RefKind.ASCRIPTIVE:
        if subject_plan is None:
            raise PlanError(f"NP {np.id}: ascriptive NP needs the plan of the NP it ascribes to")
        if subject_plan.countable:
            return Environment(EnvironmentKind.DENUMERATED, 5, number=subject_plan.head_number)
        # uncountable anchor: countable complements stay singular ("Furniture is a necessity")
        if entry.major is Major.FULLY_COUNTABLE:
            return Environment(EnvironmentKind.DENUMERATED, 5, number=Number.SINGULAR)
        return Environment(EnvironmentKind.MASS_UNCOUNTABLE, 5)
    if np.syntactic_role is Role.OBJECT and sentence.main_verb_ja is not None:
        if lexicon.verb(sentence.main_verb_ja).mass_countable_object:
            return Environment(EnvironmentKind.MASS_COUNTABLE, 6)
    return USE_DEFAULTS


def apply_defaults(entry: NounEntry) -> Environment:
    """Dictionary-default environment for an NP no earlier step decided.

    Uncountable and weakly countable nouns become uncountable singular,
    pluralia tantum countable plural, and fully or strongly countable
    nouns countable with the entry's default number.
    """
    major = entry.major
    if major in (Major.UNCOUNTABLE, Major.WEAKLY_COUNTABLE):
        return Environment(EnvironmentKind.MASS_UNCOUNTABLE, 7)
    if major is Major.PLURALIA_TANTUM:
        return Environment(EnvironmentKind.MASS_COUNTABLE, 7)
    return Environment(EnvironmentKind.DENUMERATED, 7, number=entry.default_number)


# -- plan ------------------------------------------------------------------------------

_NUMBER_WORDS = (
    "zero one two three four five six seven eight nine ten eleven twelve thirteen "
    "fourteen fifteen sixteen seventeen eighteen nineteen"
).split()
_TENS = "_ _ twenty thirty forty fifty sixty seventy eighty ninety".split()


def cardinal_words(n: int) -> str:
    if n < 20:
        return _NUMBER_WORDS[n]
    if n < 100:
        tens, ones = divmod(n, 10)
        return _TENS[tens] + (f"-{_NUMBER_WORDS[ones]}" if ones else "")
    return str(n)


def _noun_plural(entry: NounEntry) -> Optional[str]:
    # pluralia tantum are stored in their plural form already
    if entry.major is Major.PLURALIA_TANTUM:
        return entry.en_lemma
    return entry.irregular_plural


def _mass_countable_number(entry: NounEntry) -> Number:
    if entry.major in (Major.WEAKLY_COUNTABLE, Major.UNCOUNTABLE):
        return Number.SINGULAR
    return Number.PLURAL


def _mass_uncountable_number(entry: NounEntry) -> Number:
    if entry.major in (Major.FULLY_COUNTABLE, Major.PLURALIA_TANTUM):
        return Number.PLURAL
    return Number.SINGULAR


def plan_np(
    np: NPNode,
    referentiality: Referentiality,
    environment: Optional[Environment],
    lexicon: Lexicon,
    *,
    some_insertion: bool = False,
) -> RealizationPlan:
    entry = lexicon.noun(np.head_ja)
    major = entry.major
    trace = [f"referentiality:test-{referentiality.fired_test}"]
    postmodifier_entry = None
    if np.complement_modifier_ja is not None:
        mod = lexicon.modifier(np.complement_modifier_ja)
        if not mod.forces_generic_on_complement:
            postmodifier_entry = mod

    if referentiality.kind is RefKind.GENERIC:
        number = Number.PLURAL if major in (Major.FULLY_COUNTABLE, Major.PLURALIA_TANTUM) else Number.SINGULAR
        trace.append("generic:bare-plural" if number is Number.PLURAL else "generic:bare-singular")
        if np.determiner_ja is not None or np.definite or np.cardinal is not None:
            trace.append("generic:determiner-dropped")
        countable = number is Number.PLURAL
        return RealizationPlan(
            np_id=np.id,
            surface_head=entry.en_lemma,
            head_number=number,
            article=Article.NONE,
            referentiality=referentiality,
            countable=countable,
            head_plural_form=_noun_plural(entry),
            postmodifier=postmodifier_entry.form_for(countable) if postmodifier_entry else None,
            collective=entry.ncp.minor_collective,
            trace=tuple(trace),
        )

    if environment is None or environment.is_default_marker:
        raise PlanError(f"NP {np.id}: environment not resolved")
    env = environment
    trace.append(f"environment:step-{env.fired_step}")
    trace.append(f"matrix:{major.value}/{env.cell}")

    head, head_number, head_plural = entry.en_lemma, None, _noun_plural(entry)
    complement = None
    is_classifier = False
    rule = lexicon.classifier(np.classifier_ja) if np.classifier_ja else None

    if rule is not None and rule.en_classifier_override:
        # the override classifier wraps any noun, countable or not
        if rule.complement_number_rule is ComplementNumberRule.SINGULAR_UNLESS_PT:
            comp_number = Number.PLURAL if major is Major.PLURALIA_TANTUM else Number.SINGULAR
        else:
            comp_number = _mass_countable_number(entry)
        complement = ClassifierComplement(entry.en_lemma, comp_number, _noun_plural(entry))
        head, is_classifier = rule.en_classifier_override, True
        head_plural = lexicon.irregular_plural(head)
        if env.kind is EnvironmentKind.DENUMERATED:
            head_number = env.number
        else:
            head_number = Number.PLURAL if env.kind is EnvironmentKind.MASS_COUNTABLE else Number.SINGULAR
        trace.append(f"classifier:{rule.ja_classifier}->{head}")
    elif env.kind is EnvironmentKind.DENUMERATED:
        head_number = env.number
        if major is Major.UNCOUNTABLE and entry.ncp.minor_semi_countable and env.number is Number.SINGULAR:
            trace.append("semi-countable:a/an")
        elif major is Major.UNCOUNTABLE or (major is Major.PLURALIA_TANTUM and entry.ncp.pt_pair):
            if not entry.default_classifier:
                raise PlanError(f"NP {np.id}: {entry.en_lemma!r} denumerated without a classifier")
            complement = ClassifierComplement(entry.en_lemma, Number.SINGULAR if major is Major.UNCOUNTABLE else Number.PLURAL, _noun_plural(entry))
            head, is_classifier = entry.default_classifier, True
            head_plural = lexicon.irregular_plural(head)
            trace.append(f"classifier:{head}")
            if np.explicit_plural and major is Major.UNCOUNTABLE:
                trace.append("ext:explicit-plural-uncountable")
        elif major is Major.PLURALIA_TANTUM:
            if entry.denumeration_substitute:
                head = entry.denumeration_substitute
                head_plural = lexicon.irregular_plural(head)
                trace.append(f"substitute:{head}")
            elif entry.default_classifier:
                complement = ClassifierComplement(entry.en_lemma, Number.PLURAL, _noun_plural(entry))
                head, is_classifier = entry.default_classifier, True
                head_plural = lexicon.irregular_plural(head)
                trace.append(f"classifier:{head}")
            else:
                head_number = Number.PLURAL
                trace.append("substitute:none")
    elif env.kind is EnvironmentKind.MASS_COUNTABLE:
        head_number = _mass_countable_number(entry)
    else:
        head_number = _mass_uncountable_number(entry)

    countable = is_classifier or env.kind is EnvironmentKind.DENUMERATED or head_number is Number.PLURAL

    tokens = []
    if np.determiner_ja is not None:
        mod = lexicon.modifier(np.determiner_ja)
        if not mod.forces_generic_on_complement:
            tokens.append(mod.form_for(countable))
    if env.count is not None and env.fired_step == 3:
        if np.cardinal_style is CardinalStyle.DIGITS:
            tokens.append(str(env.count))
        elif env.count != 1:
            tokens.append(cardinal_words(env.count))
        # a worded count of one surfaces as the indefinite article
    token = " ".join(tokens) or None

    if np.definite:
        article = Article.THE
    elif token is not None:
        article = Article.NONE
    elif countable and head_number is Number.SINGULAR:
        article = Article.A_AN
    elif (
        some_insertion
        and referentiality.kind is RefKind.REFERENTIAL
        and np.syntactic_role is Role.OBJECT
    ):
        article = Article.SOME
        trace.append("ext:some-insertion")
    else:
        article = Article.NONE
    if article is not Article.NONE:
        trace.append(f"article:{article.value}")

    return RealizationPlan(
        np_id=np.id,
        surface_head=head,
        head_number=head_number,
        article=article,
        referentiality=referentiality,
        countable=countable,
        environment=env,
        denumerator_token=token,
        classifier_complement=complement,
        head_plural_form=head_plural,
        head_is_classifier=is_classifier,
        postmodifier=postmodifier_entry.form_for(countable) if postmodifier_entry else None,
        collective=entry.ncp.minor_collective and not is_classifier,
        trace=tuple(trace),
    )


def resolve_sentence(sentence: SentenceIR, lexicon: Lexicon, *, some_insertion: bool = False) -> list[RealizationPlan]:
    """Plan every NP of ``sentence``; plans come back in source order."""
    if sentence.main_verb_ja is not None:
        lexicon.verb(sentence.main_verb_ja)
    try:
        order = resolution_order(sentence)
    except graphlib.CycleError as exc:
        raise PlanError(f"sentence {sentence.id}: circular ascription") from exc
    plans: dict[str, RealizationPlan] = {}
    for np_id in order:
        np = sentence.np(np_id)
        ref = classify_np(np, sentence, lexicon)
        if ref.kind is RefKind.GENERIC:
            env = None
        else:
            anchor = ascription_anchor(np, sentence)
            anchor_plan = plans.get(anchor) if ref.kind is RefKind.ASCRIPTIVE else None
            env = determine_environment(np, sentence, lexicon, anchor_plan, ref)
            if env.is_default_marker:
                env = apply_defaults(lexicon.noun(np.head_ja))
        plans[np_id] = plan_np(np, ref, env, lexicon, some_insertion=some_insertion)
    return [plans[np.id] for np in sentence.nps]

