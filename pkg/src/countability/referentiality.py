"""Generic / referential / ascriptive classification of source NPs.

The tests run in a fixed order and the first one whose condition holds
decides the class:

1. restrictively modified                         -> referential
2. subject of a generic-subject verb (die out)    -> generic
3. copula subject whose category falls under the
   complement head's category (mammoths are animals) -> generic
4. target of a purpose relation (a magazine for women) -> generic
5. object of a generic-object verb (like)         -> generic
6. copula complement                              -> ascriptive
7. appositive                                     -> ascriptive
8. otherwise                                      -> referential
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from countability.lexicon import Lexicon, is_subsumed
from countability.source_ir import NPNode, Role, SentenceIR


class RefKind(enum.Enum):
    GENERIC = "GENERIC"
    REFERENTIAL = "REFERENTIAL"
    ASCRIPTIVE = "ASCRIPTIVE"


TEST_KIND = {
    1: RefKind.REFERENTIAL,
    2: RefKind.GENERIC,
    3: RefKind.GENERIC,
    4: RefKind.GENERIC,
    5: RefKind.GENERIC,
    6: RefKind.ASCRIPTIVE,
    7: RefKind.ASCRIPTIVE,
    8: RefKind.REFERENTIAL,
}

TEST_LABEL = {
    1: "restrictive modifier",
    2: "generic-subject verb",
    3: "copula subject subsumed by complement",
    4: "purpose target",
    5: "generic-object verb",
    6: "copula complement",
    7: "appositive",
    8: "default",
}


@dataclass(frozen=True)
class Referentiality:
    kind: RefKind
    fired_test: int

    def __post_init__(self):
        if TEST_KIND.get(self.fired_test) is not self.kind:
            raise ValueError(f"test {self.fired_test} cannot yield {self.kind.value}")

    @property
    def label(self) -> str:
        return TEST_LABEL[self.fired_test]


def _modifiers(np: NPNode, lexicon: Lexicon):
    for lemma in (np.determiner_ja, np.complement_modifier_ja):
        if lemma is not None:
            yield lexicon.modifier(lemma)


def _restrictive(np, sentence, lexicon) -> bool:
    return np.restrictively_modified or any(m.is_restrictive for m in _modifiers(np, lexicon))


def _generic_subject(np, sentence, lexicon) -> bool:
    if np.syntactic_role is not Role.SUBJECT or sentence.main_verb_ja is None:
        return False
    return lexicon.verb(sentence.main_verb_ja).generic_subject


def _subsumed_by_complement(np, sentence, lexicon) -> bool:
    if np.syntactic_role is not Role.SUBJECT or sentence.main_verb_ja is None:
        return False
    if not lexicon.verb(sentence.main_verb_ja).is_copula:
        return False
    own = lexicon.noun(np.head_ja).semantic_category
    for other in sentence.nps:
        if other.syntactic_role is Role.COPULA_COMPLEMENT:
            target = lexicon.noun(other.head_ja).semantic_category
            if is_subsumed(lexicon.hierarchy, own, target):
                return True
    return False


def _purpose_target(np, sentence, lexicon) -> bool:
    if any(other.purpose_target_of == np.id for other in sentence.nps):
        return True
    return any(m.forces_generic_on_complement for m in _modifiers(np, lexicon))


def _generic_object(np, sentence, lexicon) -> bool:
    if np.syntactic_role is not Role.OBJECT or sentence.main_verb_ja is None:
        return False
    return lexicon.verb(sentence.main_verb_ja).generic_object


TESTS = (
    (1, _restrictive),
    (2, _generic_subject),
    (3, _subsumed_by_complement),
    (4, _purpose_target),
    (5, _generic_object),
    (6, lambda np, s, lex: np.syntactic_role is Role.COPULA_COMPLEMENT),
    (7, lambda np, s, lex: np.syntactic_role is Role.APPOSITIVE_TO),
)


def classify_np(np: NPNode, sentence: SentenceIR, lexicon: Lexicon) -> Referentiality:
    lexicon.noun(np.head_ja)  # surface unknown heads even when an early test fires
    for number, test in TESTS:
        if test(np, sentence, lexicon):
            return Referentiality(TEST_KIND[number], number)
    return Referentiality(RefKind.REFERENTIAL, 8)
