"""Analyzed-sentence interchange format (``.npir``).

A ``.npir`` file holds one JSON object per line.  Each object is a
sentence: its noun phrases with the source-side features the planner
reads, the main verb, and an English template into which the realized
NPs are substituted.  Blank lines and lines starting with ``#`` are
skipped.

Template placeholders:

``{np:ID}``
    the realized noun phrase ``ID``
``{list:ID,ID,...}``
    several NPs joined as ``a, b and c``
``{be:ID}``
    ``is`` or ``are`` agreeing with NP ``ID``
"""

from __future__ import annotations

import enum
import graphlib
import io
import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, Optional, Union

from countability.errors import DanglingReferenceError, IRParseError
from countability.lexicon import Lexicon


class Role(enum.Enum):
    SUBJECT = "SUBJECT"
    OBJECT = "OBJECT"
    COPULA_COMPLEMENT = "COPULA_COMPLEMENT"
    APPOSITIVE_TO = "APPOSITIVE_TO"
    OTHER = "OTHER"


class CardinalStyle(enum.Enum):
    DIGITS = "digits"
    WORDS = "words"


@dataclass(frozen=True)
class NPNode:
    id: str
    head_ja: str
    syntactic_role: Role = Role.OTHER
    appositive_to: Optional[str] = None
    explicit_plural: bool = False
    determiner_ja: Optional[str] = None
    cardinal: Optional[int] = None
    cardinal_style: CardinalStyle = CardinalStyle.WORDS
    classifier_ja: Optional[str] = None
    restrictively_modified: bool = False
    purpose_target_of: Optional[str] = None
    complement_modifier_ja: Optional[str] = None
    definite: bool = False

    def __post_init__(self):
        object.__setattr__(self, "syntactic_role", Role(self.syntactic_role))
        object.__setattr__(self, "cardinal_style", CardinalStyle(self.cardinal_style))
        if self.cardinal is not None:
            if isinstance(self.cardinal, bool) or not isinstance(self.cardinal, int) or self.cardinal < 1:
                raise ValueError(f"NP {self.id}: cardinal must be a positive integer")
            if self.classifier_ja is None:
                raise ValueError(f"NP {self.id}: a cardinal needs a classifier")
        if (self.syntactic_role is Role.APPOSITIVE_TO) != (self.appositive_to is not None):
            raise ValueError(f"NP {self.id}: APPOSITIVE_TO role and its target go together")


PLACEHOLDER = re.compile(r"\{(\w+):([^{}]*)\}")
PLACEHOLDER_KINDS = ("np", "list", "be")


@dataclass(frozen=True)
class Placeholder:
    kind: str
    ids: tuple
    span: tuple


def placeholders(template: str) -> list[Placeholder]:
    out = []
    for m in PLACEHOLDER.finditer(template):
        ids = tuple(part.strip() for part in m.group(2).split(","))
        out.append(Placeholder(m.group(1), ids, m.span()))
    return out


@dataclass(frozen=True)
class SentenceIR:
    id: str
    nps: tuple = ()
    template: str = ""
    main_verb_ja: Optional[str] = None
    gold: Optional[str] = None
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "nps", tuple(self.nps))
        index = {}
        for np in self.nps:
            if np.id in index:
                raise ValueError(f"sentence {self.id}: duplicate NP id {np.id!r}")
            index[np.id] = np
        object.__setattr__(self, "_index", index)
        if sum(np.syntactic_role is Role.SUBJECT for np in self.nps) > 1:
            raise ValueError(f"sentence {self.id}: more than one SUBJECT")
        for np in self.nps:
            for ref in (np.appositive_to, np.purpose_target_of):
                if ref is not None and ref not in index:
                    raise DanglingReferenceError(0, f"sentence {self.id}: NP {np.id} refers to missing NP {ref!r}")
        used = set()
        for ph in placeholders(self.template):
            if ph.kind not in PLACEHOLDER_KINDS:
                raise ValueError(f"sentence {self.id}: unknown placeholder kind {ph.kind!r}")
            if ph.kind != "list" and len(ph.ids) != 1:
                raise ValueError(f"sentence {self.id}: {{{ph.kind}:...}} takes exactly one id")
            for ref in ph.ids:
                if ref not in index:
                    raise DanglingReferenceError(0, f"sentence {self.id}: placeholder refers to missing NP {ref!r}")
                if ph.kind != "be":
                    if ref in used:
                        raise ValueError(f"sentence {self.id}: NP {ref!r} placed twice")
                    used.add(ref)

    def np(self, np_id: str) -> NPNode:
        return self._index[np_id]

    @property
    def subject(self) -> Optional[NPNode]:
        for np in self.nps:
            if np.syntactic_role is Role.SUBJECT:
                return np
        return None

    def rendered_ids(self) -> list[str]:
        """NP ids that occupy an ``np`` or ``list`` slot, in template order."""
        return [i for ph in placeholders(self.template) if ph.kind != "be" for i in ph.ids]


def ascription_anchor(np: NPNode, sentence: SentenceIR) -> Optional[str]:
    """Id of the NP whose countability an ascriptive ``np`` would copy."""
    if np.syntactic_role is Role.APPOSITIVE_TO:
        return np.appositive_to
    if np.syntactic_role is Role.COPULA_COMPLEMENT:
        subject = sentence.subject
        return subject.id if subject else None
    return None


def resolution_order(sentence: SentenceIR) -> list[str]:
    """NP ids ordered so every anchor precedes the NPs ascribed to it.

    Raises ``graphlib.CycleError`` on circular apposition.
    """
    graph = graphlib.TopologicalSorter()
    for np in sentence.nps:
        anchor = ascription_anchor(np, sentence)
        graph.add(np.id, *([anchor] if anchor else []))
    graph.prepare()  # raises CycleError
    # keep source order where the dependencies allow it
    placed: list[str] = []
    pending = [np.id for np in sentence.nps]
    while pending:
        for nid in pending:
            anchor = ascription_anchor(sentence.np(nid), sentence)
            if anchor is None or anchor in placed:
                placed.append(nid)
                pending.remove(nid)
                break
    return placed


# -- wire format -----------------------------------------------------------------

_NP_BOOL = ("explicit_plural", "restrictively_modified", "definite")
_NP_STR = ("determiner_ja", "classifier_ja", "purpose_target_of", "complement_modifier_ja")
_NP_FIELDS = (
    {"id", "head_ja", "syntactic_role", "cardinal", "cardinal_style"} | set(_NP_BOOL) | set(_NP_STR)
)
_SENTENCE_FIELDS = {"id", "nps", "main_verb_ja", "template", "gold"}
_APPOSITIVE = re.compile(r"APPOSITIVE_TO\((.+)\)$")


def _ident(value, what):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ValueError(f"{what} must be a string")
    return str(value)


def _np_from_dict(obj: dict) -> NPNode:
    if not isinstance(obj, dict):
        raise ValueError("each NP must be an object")
    extra = set(obj) - _NP_FIELDS
    if extra:
        raise ValueError(f"unknown NP field(s): {', '.join(sorted(extra))}")
    if "id" not in obj or "head_ja" not in obj:
        raise ValueError("NP needs id and head_ja")
    role_text = obj.get("syntactic_role", "OTHER")
    appositive_to = None
    m = _APPOSITIVE.match(str(role_text))
    if m:
        role, appositive_to = Role.APPOSITIVE_TO, m.group(1).strip()
    else:
        try:
            role = Role(role_text)
        except ValueError:
            raise ValueError(f"bad syntactic_role {role_text!r}") from None
        if role is Role.APPOSITIVE_TO:
            raise ValueError("APPOSITIVE_TO needs a target: APPOSITIVE_TO(id)")
    kwargs = {}
    for name in _NP_BOOL:
        if name in obj:
            if not isinstance(obj[name], bool):
                raise ValueError(f"{name} must be true or false")
            kwargs[name] = obj[name]
    for name in _NP_STR:
        if obj.get(name) is not None:
            kwargs[name] = _ident(obj[name], name)
    if "cardinal_style" in obj:
        kwargs["cardinal_style"] = CardinalStyle(obj["cardinal_style"])
    return NPNode(
        id=_ident(obj["id"], "NP id"),
        head_ja=_ident(obj["head_ja"], "head_ja"),
        syntactic_role=role,
        appositive_to=appositive_to,
        cardinal=obj.get("cardinal"),
        **kwargs,
    )


def sentence_from_dict(obj: dict) -> SentenceIR:
    if not isinstance(obj, dict):
        raise ValueError("a sentence record must be a JSON object")
    extra = set(obj) - _SENTENCE_FIELDS
    if extra:
        raise ValueError(f"unknown sentence field(s): {', '.join(sorted(extra))}")
    if "id" not in obj:
        raise ValueError("sentence needs an id")
    nps = obj.get("nps", [])
    if not isinstance(nps, list):
        raise ValueError("nps must be a list")
    verb = obj.get("main_verb_ja")
    return SentenceIR(
        id=_ident(obj["id"], "sentence id"),
        nps=tuple(_np_from_dict(n) for n in nps),
        template=str(obj.get("template", "")),
        main_verb_ja=None if verb is None else _ident(verb, "main_verb_ja"),
        gold=obj.get("gold"),
    )


def np_to_dict(np: NPNode) -> dict:
    out: dict = {"id": np.id, "head_ja": np.head_ja}
    if np.syntactic_role is Role.APPOSITIVE_TO:
        out["syntactic_role"] = f"APPOSITIVE_TO({np.appositive_to})"
    elif np.syntactic_role is not Role.OTHER:
        out["syntactic_role"] = np.syntactic_role.value
    if np.cardinal is not None:
        out["cardinal"] = np.cardinal
    if np.cardinal_style is not CardinalStyle.WORDS:
        out["cardinal_style"] = np.cardinal_style.value
    for name in _NP_STR:
        if getattr(np, name) is not None:
            out[name] = getattr(np, name)
    for name in _NP_BOOL:
        if getattr(np, name):
            out[name] = True
    return out


def sentence_to_dict(sentence: SentenceIR) -> dict:
    out: dict = {"id": sentence.id}
    if sentence.main_verb_ja is not None:
        out["main_verb_ja"] = sentence.main_verb_ja
    out["template"] = sentence.template
    out["nps"] = [np_to_dict(np) for np in sentence.nps]
    if sentence.gold is not None:
        out["gold"] = sentence.gold
    return out


def serialize_sentence(sentence: SentenceIR) -> str:
    return json.dumps(sentence_to_dict(sentence), ensure_ascii=False)


def serialize_document(sentences: Iterable[SentenceIR]) -> str:
    return "".join(serialize_sentence(s) + "\n" for s in sentences)


def parse_document(stream: Union[bytes, str, IO]) -> list[SentenceIR]:
    """Parse a ``.npir`` byte or text stream into sentences, in order."""
    if isinstance(stream, bytes):
        stream = io.BytesIO(stream)
    elif isinstance(stream, str):
        stream = io.StringIO(stream)
    sentences = []
    seen: set = set()
    for lineno, raw in enumerate(stream, 1):
        line = raw.decode("utf-8") if isinstance(raw, bytes) else raw
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            sentence = sentence_from_dict(json.loads(line))
        except DanglingReferenceError as exc:
            raise DanglingReferenceError(lineno, str(exc).split(": ", 1)[1]) from None
        except (ValueError, TypeError) as exc:
            raise IRParseError(lineno, str(exc)) from None
        if sentence.id in seen:
            raise IRParseError(lineno, f"duplicate sentence id {sentence.id!r}")
        seen.add(sentence.id)
        sentences.append(sentence)
    return sentences


def read_document(path) -> list[SentenceIR]:
    with open(path, "rb") as fh:
        return parse_document(fh)


# -- lexicon checks ------------------------------------------------------------------


@dataclass(frozen=True)
class Diagnostic:
    sentence_id: str
    slot: str
    message: str
    np_id: Optional[str] = None
    lemma: Optional[str] = None

    def __str__(self) -> str:
        where = f"{self.sentence_id}" + (f"/np {self.np_id}" if self.np_id else "")
        return f"{where}: {self.slot}: {self.message}"


def validate_against_lexicon(sentence: SentenceIR, lexicon: Lexicon) -> list[Diagnostic]:
    """Report every lemma the lexicon cannot resolve, plus ascription problems.

    An empty list means the sentence can be planned without lookup errors.
    """
    diags = []

    def check(table, lemma, slot, np_id=None):
        if lemma is not None and lemma not in table:
            diags.append(Diagnostic(sentence.id, slot, f"unknown lemma {lemma!r}", np_id, lemma))

    check(lexicon.verbs, sentence.main_verb_ja, "main_verb")
    for np in sentence.nps:
        check(lexicon.nouns, np.head_ja, "head", np.id)
        check(lexicon.modifiers, np.determiner_ja, "determiner", np.id)
        check(lexicon.modifiers, np.complement_modifier_ja, "complement_modifier", np.id)
        check(lexicon.classifiers, np.classifier_ja, "classifier", np.id)
        if np.syntactic_role is Role.COPULA_COMPLEMENT and sentence.subject is None:
            diags.append(Diagnostic(sentence.id, "structure", "copula complement without a subject", np.id))
    try:
        resolution_order(sentence)
    except graphlib.CycleError as exc:
        ids = ", ".join(dict.fromkeys(exc.args[1]))
        diags.append(Diagnostic(sentence.id, "structure", f"circular ascription among NPs {ids}"))
    return diags
