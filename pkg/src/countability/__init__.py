"""Countability, number and article generation for noun phrases
translated from Japanese into English."""

from countability.lexicon import (
    CountabilityPreference,
    Lexicon,
    Major,
    NounEntry,
    Number,
    bundled_lexicon,
    is_subsumed,
    load_lexicon,
    load_lexicon_dir,
    lookup_noun,
)
from countability.number_plan import (
    Article,
    Environment,
    RealizationPlan,
    apply_defaults,
    determine_environment,
    plan_np,
    resolve_sentence,
)
from countability.realizer import article_surface, pluralize, render_np, render_sentence
from countability.referentiality import Referentiality, RefKind, classify_np
from countability.source_ir import NPNode, Role, SentenceIR, parse_document, validate_against_lexicon

__version__ = "0.1.0"


def translate(sentence: SentenceIR, lexicon: Lexicon | None = None, **flags) -> str:
    """Plan and render one sentence with the bundled (or given) lexicon."""
    lexicon = lexicon or bundled_lexicon()
    some = flags.pop("some_insertion", False)
    plans = resolve_sentence(sentence, lexicon, some_insertion=some)
    return render_sentence(sentence, plans, lexicon, **flags)
