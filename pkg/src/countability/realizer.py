"""Surface realization: plural forms, a/an, classifier phrases and
sentence templates."""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Sequence

from countability.errors import MissingPlanError, PlanError
from countability.lexicon import Lexicon, NounEntry, Number
from countability.number_plan import Article, RealizationPlan
from countability.source_ir import SentenceIR, placeholders

AN_EXCEPTIONS_PATH = Path(__file__).parent / "data" / "lexicon" / "an_exceptions.txt"

VOWELS = "aeiou"
_SIBILANT = re.compile(r"(s|x|z|ch|sh)$")
_CONSONANT_Y = re.compile(r"[^aeiou]y$")


def pluralize(word: str | NounEntry, irregular: Optional[str] = None) -> str:
    if isinstance(word, NounEntry):
        irregular = irregular or word.irregular_plural
        word = word.en_lemma
    if irregular:
        return irregular
    # multi-word heads inflect their last word
    stem, _, last = word.rpartition(" ")
    prefix = stem + " " if stem else ""
    lower = last.lower()
    if _CONSONANT_Y.search(lower):
        return prefix + last[:-1] + "ies"
    if _SIBILANT.search(lower):
        return prefix + last + "es"
    return prefix + last + "s"


@dataclass(frozen=True)
class AnExceptions:
    """Words whose a/an choice contradicts their first letter."""

    words: frozenset = frozenset()
    prefixes: tuple = ()

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> "AnExceptions":
        words, prefixes = set(), []
        for line in lines:
            line = line.split("#", 1)[0].strip().lower()
            if not line:
                continue
            if line.endswith("*"):
                prefixes.append(line[:-1])
            else:
                words.add(line)
        return cls(frozenset(words), tuple(prefixes))

    @classmethod
    def load(cls, path=AN_EXCEPTIONS_PATH) -> "AnExceptions":
        return cls.from_lines(Path(path).read_text(encoding="utf-8").splitlines())

    def __contains__(self, word: str) -> bool:
        word = word.lower()
        return word in self.words or any(word.startswith(p) for p in self.prefixes)


_default_exceptions: Optional[AnExceptions] = None


def default_exceptions() -> AnExceptions:
    global _default_exceptions
    if _default_exceptions is None:
        _default_exceptions = AnExceptions.load()
    return _default_exceptions


def article_surface(article: Article, following_word: str, exceptions: Optional[AnExceptions] = None) -> str:
    if article is Article.THE:
        return "the"
    if article is Article.SOME:
        return "some"
    if article is Article.NONE:
        return ""
    if exceptions is None:
        exceptions = default_exceptions()
    word = following_word.split(" ", 1)[0]
    vowel = word[:1].lower() in VOWELS
    if word in exceptions:
        vowel = not vowel
    return "an" if vowel else "a"


@dataclass(frozen=True)
class SurfaceNP:
    np_id: str
    text: str

    def __post_init__(self):
        if not self.text or "{" in self.text or "}" in self.text:
            raise PlanError(f"NP {self.np_id}: bad surface text {self.text!r}")


def _inflect(lemma: str, number: Number, plural_form: Optional[str]) -> str:
    if number is Number.SINGULAR:
        return lemma
    return plural_form or pluralize(lemma)


def render_np(plan: RealizationPlan, lexicon: Optional[Lexicon] = None, exceptions: Optional[AnExceptions] = None) -> SurfaceNP:
    """Assemble ``[article] [denumerator] head [of complement] [postmodifier]``.

    ``lexicon`` is accepted for symmetry with the other stages; the plan
    already carries every form it needs.
    """
    words = []
    if plan.denumerator_token:
        words.append(plan.denumerator_token)
    words.append(_inflect(plan.surface_head, plan.head_number, plan.head_plural_form))
    comp = plan.classifier_complement
    if comp is not None:
        words.append("of")
        words.append(_inflect(comp.lemma, comp.number, comp.plural_form))
    if plan.postmodifier:
        words.append(plan.postmodifier)
    body = " ".join(words)
    art = article_surface(plan.article, body, exceptions)
    return SurfaceNP(plan.np_id, f"{art} {body}" if art else body)


def join_list(items: Sequence[str]) -> str:
    if len(items) <= 1:
        return "".join(items)
    return ", ".join(items[:-1]) + " and " + items[-1]


def be_form(plan: RealizationPlan, collective_plural: bool = False) -> str:
    if plan.head_number is Number.PLURAL:
        return "are"
    if collective_plural and plan.collective:
        return "are"
    return "is"


def _capitalize(text: str) -> str:
    for i, ch in enumerate(text):
        if ch.isalpha():
            return text[:i] + ch.upper() + text[i + 1 :]
        if ch.isdigit():
            break
    return text


def mark_np(np_id: str, text: str) -> str:
    return f"[[{np_id}|{text}]]"


def render_sentence(
    sentence: SentenceIR,
    plans: Iterable[RealizationPlan],
    lexicon: Optional[Lexicon] = None,
    *,
    collective_plural: bool = False,
    marked: bool = False,
    exceptions: Optional[AnExceptions] = None,
) -> str:
    """Fill the sentence template with realized NPs.

    With ``marked=True`` each NP is wrapped as ``[[ID|text]]`` so that
    scoring can recover NP regions.
    """
    by_id = {p.np_id: p for p in plans}
    template = sentence.template
    pieces = []
    pos = 0
    first_np_at_start = None
    for ph in placeholders(template):
        start, end = ph.span
        pieces.append(template[pos:start])
        missing = [i for i in ph.ids if i not in by_id]
        if missing:
            raise MissingPlanError(f"{ph.kind}:{missing[0]}")
        if ph.kind == "be":
            pieces.append(be_form(by_id[ph.ids[0]], collective_plural))
        else:
            texts = []
            for i in ph.ids:
                text = render_np(by_id[i], lexicon, exceptions).text
                if first_np_at_start is None and not "".join(pieces).strip():
                    first_np_at_start = i
                    text = _capitalize(text)
                texts.append(mark_np(i, text) if marked else text)
            pieces.append(join_list(texts))
        pos = end
    pieces.append(template[pos:])
    out = "".join(pieces)
    if first_np_at_start is None:
        out = _capitalize(out)
    return out
