"""Transfer lexicon: noun, verb, modifier and classifier tables plus a
single-rooted semantic hierarchy.

Every table is a tab-separated UTF-8 file, one record per line, ``#``
starting a comment and ``-`` marking an empty field.  Column order is
given by the ``*_COLUMNS`` tuples below and documented in the README.
"""

from __future__ import annotations

import enum
import functools
import os
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Iterator, Mapping, Optional

from countability.errors import (
    LexiconParseError,
    LexiconValidationError,
    UnknownCategoryError,
    UnknownLemmaError,
)

EMPTY = "-"

NOUN_COLUMNS = (
    "ja_lemma",
    "en_lemma",
    "major",
    "minor",
    "default_number",
    "default_classifier",
    "irregular_plural",
    "semantic_category",
    "denumeration_substitute",
)
VERB_COLUMNS = ("ja_lemma", "en_lemma", "flags")
MODIFIER_COLUMNS = (
    "ja_lemma",
    "en_countable_form",
    "en_uncountable_form",
    "forced_environment",
    "forced_number",
    "flags",
)
CLASSIFIER_COLUMNS = (
    "ja_classifier",
    "en_classifier_override",
    "article_suppressed_on_complement",
    "complement_number_rule",
)
HIERARCHY_COLUMNS = ("child", "parent")

VERB_FLAGS = ("generic_subject", "generic_object", "mass_countable_object", "is_copula")
MODIFIER_FLAGS = ("forces_generic_on_complement", "is_restrictive")


class Major(enum.Enum):
    FULLY_COUNTABLE = "FULLY_COUNTABLE"
    STRONGLY_COUNTABLE = "STRONGLY_COUNTABLE"
    WEAKLY_COUNTABLE = "WEAKLY_COUNTABLE"
    UNCOUNTABLE = "UNCOUNTABLE"
    PLURALIA_TANTUM = "PLURALIA_TANTUM"


class Number(enum.Enum):
    SINGULAR = "SINGULAR"
    PLURAL = "PLURAL"


class EnvironmentKind(enum.Enum):
    DENUMERATED = "DENUMERATED"
    MASS_COUNTABLE = "MASS_COUNTABLE"
    MASS_UNCOUNTABLE = "MASS_UNCOUNTABLE"


class ComplementNumberRule(enum.Enum):
    SINGULAR_UNLESS_PT = "SINGULAR_UNLESS_PT"
    DEFAULT = "DEFAULT"


@dataclass(frozen=True)
class CountabilityPreference:
    major: Major
    minor_collective: bool = False
    minor_semi_countable: bool = False
    pt_pair: bool = False

    def __post_init__(self):
        if sum((self.minor_collective, self.minor_semi_countable, self.pt_pair)) > 1:
            raise ValueError("minor countability flags are mutually exclusive")
        if self.minor_collective and self.major is not Major.FULLY_COUNTABLE:
            raise ValueError("collective nouns must be FULLY_COUNTABLE")
        if self.minor_semi_countable and self.major is not Major.UNCOUNTABLE:
            raise ValueError("semi-countable nouns must be UNCOUNTABLE")
        if self.pt_pair and self.major is not Major.PLURALIA_TANTUM:
            raise ValueError("pair nouns must be PLURALIA_TANTUM")

    @property
    def minor_token(self) -> str:
        if self.minor_collective:
            return "collective"
        if self.minor_semi_countable:
            return "semi_countable"
        if self.pt_pair:
            return "pair"
        return EMPTY


_MINOR_KWARGS = {
    EMPTY: {},
    "collective": {"minor_collective": True},
    "semi_countable": {"minor_semi_countable": True},
    "pair": {"pt_pair": True},
}


@dataclass(frozen=True)
class NounEntry:
    ja_lemma: str
    en_lemma: str
    ncp: CountabilityPreference
    default_number: Number
    semantic_category: str
    default_classifier: Optional[str] = None
    irregular_plural: Optional[str] = None
    denumeration_substitute: Optional[str] = None

    @property
    def major(self) -> Major:
        return self.ncp.major


@dataclass(frozen=True)
class VerbEntry:
    ja_lemma: str
    en_lemma: str
    generic_subject: bool = False
    generic_object: bool = False
    mass_countable_object: bool = False
    is_copula: bool = False


@dataclass(frozen=True)
class ModifierEntry:
    ja_lemma: str
    en_countable_form: str
    en_uncountable_form: Optional[str] = None
    forced_environment: Optional[EnvironmentKind] = None
    forces_generic_on_complement: bool = False
    forced_number: Optional[Number] = None
    is_restrictive: bool = False

    def form_for(self, countable: bool) -> str:
        """English surface form; the many/much split when one is stored."""
        if not countable and self.en_uncountable_form:
            return self.en_uncountable_form
        return self.en_countable_form


@dataclass(frozen=True)
class ClassifierRule:
    ja_classifier: str
    en_classifier_override: Optional[str] = None
    article_suppressed_on_complement: bool = True
    complement_number_rule: ComplementNumberRule = ComplementNumberRule.DEFAULT


@dataclass(frozen=True)
class SemanticHierarchy:
    parent: Mapping[str, Optional[str]]

    def __post_init__(self):
        object.__setattr__(self, "parent", MappingProxyType(dict(self.parent)))
        roots = [c for c, p in self.parent.items() if p is None]
        if len(self.parent) and len(roots) != 1:
            raise LexiconValidationError("hierarchy", f"expected exactly one root, found {len(roots)}")
        for cat, par in self.parent.items():
            if par is not None and par not in self.parent:
                raise LexiconValidationError(cat, f"parent {par!r} is not a category")
        for cat in self.parent:
            seen = set()
            node: Optional[str] = cat
            while node is not None:
                if node in seen:
                    raise LexiconValidationError(cat, "cycle in semantic hierarchy")
                seen.add(node)
                node = self.parent[node]

    @property
    def categories(self) -> frozenset:
        return frozenset(self.parent)

    @property
    def root(self) -> Optional[str]:
        for cat, par in self.parent.items():
            if par is None:
                return cat
        return None

    def ancestors(self, category: str) -> Iterator[str]:
        """Yield ``category`` itself, then each ancestor up to the root."""
        if category not in self.parent:
            raise UnknownCategoryError(category)
        node: Optional[str] = category
        while node is not None:
            yield node
            node = self.parent[node]


def is_subsumed(hierarchy: SemanticHierarchy, cat_a: str, cat_b: str) -> bool:
    """True iff ``cat_a`` is ``cat_b`` or lies anywhere below it."""
    if cat_b not in hierarchy.parent:
        raise UnknownCategoryError(cat_b)
    return any(node == cat_b for node in hierarchy.ancestors(cat_a))


@dataclass(frozen=True)
class Lexicon:
    nouns: Mapping[str, NounEntry] = field(default_factory=dict)
    verbs: Mapping[str, VerbEntry] = field(default_factory=dict)
    modifiers: Mapping[str, ModifierEntry] = field(default_factory=dict)
    classifiers: Mapping[str, ClassifierRule] = field(default_factory=dict)
    hierarchy: SemanticHierarchy = field(default_factory=lambda: SemanticHierarchy({}))

    def __post_init__(self):
        for name in ("nouns", "verbs", "modifiers", "classifiers"):
            object.__setattr__(self, name, MappingProxyType(dict(getattr(self, name))))
        for entry in self.nouns.values():
            validate_noun(entry, self.hierarchy)
        for entry in self.verbs.values():
            validate_verb(entry)
        for entry in self.modifiers.values():
            validate_modifier(entry)
        for rule in self.classifiers.values():
            validate_classifier(rule)

    def noun(self, ja_lemma: str) -> NounEntry:
        return lookup_noun(self, ja_lemma)

    @functools.cached_property
    def _plurals(self) -> dict:
        return {n.en_lemma: n.irregular_plural for n in self.nouns.values() if n.irregular_plural}

    def irregular_plural(self, en_lemma: str) -> Optional[str]:
        """Irregular plural of any English noun the lexicon knows, e.g. a classifier."""
        return self._plurals.get(en_lemma)

    def verb(self, ja_lemma: str) -> VerbEntry:
        try:
            return self.verbs[ja_lemma]
        except KeyError:
            raise UnknownLemmaError("verb", ja_lemma) from None

    def modifier(self, ja_lemma: str) -> ModifierEntry:
        try:
            return self.modifiers[ja_lemma]
        except KeyError:
            raise UnknownLemmaError("modifier", ja_lemma) from None

    def classifier(self, ja_classifier: str) -> ClassifierRule:
        try:
            return self.classifiers[ja_classifier]
        except KeyError:
            raise UnknownLemmaError("classifier", ja_classifier) from None


def lookup_noun(lexicon: Lexicon, ja_lemma: str) -> NounEntry:
    try:
        return lexicon.nouns[ja_lemma]
    except KeyError:
        raise UnknownLemmaError("noun", ja_lemma) from None


# -- invariants ---------------------------------------------------------------


def validate_noun(entry: NounEntry, hierarchy: SemanticHierarchy) -> None:
    name = entry.ja_lemma
    major = entry.major
    if major is Major.UNCOUNTABLE and not entry.default_classifier:
        raise LexiconValidationError(name, "UNCOUNTABLE nouns need a default_classifier")
    if entry.ncp.pt_pair and not entry.default_classifier:
        raise LexiconValidationError(name, "pair pluralia tantum need a default_classifier")
    if major is Major.PLURALIA_TANTUM and entry.default_number is not Number.PLURAL:
        raise LexiconValidationError(name, "PLURALIA_TANTUM nouns default to PLURAL")
    if entry.default_number is Number.PLURAL and major not in (
        Major.FULLY_COUNTABLE,
        Major.STRONGLY_COUNTABLE,
        Major.PLURALIA_TANTUM,
    ):
        raise LexiconValidationError(name, f"default PLURAL is illegal for {major.value}")
    if entry.denumeration_substitute and (major is not Major.PLURALIA_TANTUM or entry.ncp.pt_pair):
        raise LexiconValidationError(name, "denumeration_substitute is only for non-pair pluralia tantum")
    if entry.semantic_category not in hierarchy.parent:
        raise LexiconValidationError(name, f"semantic category {entry.semantic_category!r} not in hierarchy")


def validate_verb(entry: VerbEntry) -> None:
    if entry.generic_subject and entry.is_copula:
        raise LexiconValidationError(entry.ja_lemma, "generic_subject and is_copula are exclusive")


def validate_modifier(entry: ModifierEntry) -> None:
    if entry.en_uncountable_form and entry.forced_environment not in (None, EnvironmentKind.MASS_UNCOUNTABLE):
        raise LexiconValidationError(
            entry.ja_lemma, "an uncountable form requires a MASS_UNCOUNTABLE (or no) forced environment"
        )
    if entry.forced_number is not None and entry.forced_environment not in (None, EnvironmentKind.DENUMERATED):
        raise LexiconValidationError(entry.ja_lemma, "forced_number only applies to DENUMERATED environments")


def validate_classifier(rule: ClassifierRule) -> None:
    if not rule.article_suppressed_on_complement:
        raise LexiconValidationError(rule.ja_classifier, "classifier complements never take an article")


# -- TSV reading ---------------------------------------------------------------


def _rows(path: os.PathLike | str, columns: tuple) -> Iterator[tuple[int, list[Optional[str]]]]:
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        cells = [c.strip() for c in line.split("\t")]
        if len(cells) != len(columns):
            raise LexiconParseError(str(path), lineno, f"expected {len(columns)} fields, got {len(cells)}")
        yield lineno, [None if c == EMPTY or c == "" else c for c in cells]


def _enum(kind, token, path, lineno):
    try:
        return kind(token)
    except ValueError:
        allowed = ", ".join(m.value for m in kind)
        raise LexiconParseError(str(path), lineno, f"bad {kind.__name__} {token!r} (expected one of {allowed})") from None


def _flags(token, allowed, path, lineno) -> dict:
    out = {}
    for flag in (token or "").split(","):
        flag = flag.strip()
        if not flag:
            continue
        if flag not in allowed:
            raise LexiconParseError(str(path), lineno, f"unknown flag {flag!r}")
        out[flag] = True
    return out


def _bool(token, path, lineno) -> bool:
    if token in ("yes", "true"):
        return True
    if token in ("no", "false"):
        return False
    raise LexiconParseError(str(path), lineno, f"expected yes/no, got {token!r}")


def _unique(table: dict, key: str, path, lineno):
    if key in table:
        raise LexiconParseError(str(path), lineno, f"duplicate entry {key!r}")


def read_hierarchy(path) -> SemanticHierarchy:
    parent: dict[str, Optional[str]] = {}
    for lineno, (child, par) in _rows(path, HIERARCHY_COLUMNS):
        if child is None:
            raise LexiconParseError(str(path), lineno, "missing category")
        _unique(parent, child, path, lineno)
        parent[child] = par
    return SemanticHierarchy(parent)


def read_nouns(path) -> dict[str, NounEntry]:
    nouns: dict[str, NounEntry] = {}
    for lineno, cells in _rows(path, NOUN_COLUMNS):
        ja, en, major, minor, number, classifier, irregular, category, substitute = cells
        if not (ja and en and major and number and category):
            raise LexiconParseError(str(path), lineno, "ja_lemma, en_lemma, major, default_number and semantic_category are required")
        if (minor or EMPTY) not in _MINOR_KWARGS:
            raise LexiconParseError(str(path), lineno, f"unknown minor class {minor!r}")
        try:
            ncp = CountabilityPreference(_enum(Major, major, path, lineno), **_MINOR_KWARGS[minor or EMPTY])
        except ValueError as exc:
            raise LexiconValidationError(ja, str(exc)) from None
        _unique(nouns, ja, path, lineno)
        nouns[ja] = NounEntry(
            ja_lemma=ja,
            en_lemma=en,
            ncp=ncp,
            default_number=_enum(Number, number, path, lineno),
            semantic_category=category,
            default_classifier=classifier,
            irregular_plural=irregular,
            denumeration_substitute=substitute,
        )
    return nouns


def read_verbs(path) -> dict[str, VerbEntry]:
    verbs: dict[str, VerbEntry] = {}
    for lineno, (ja, en, flags) in _rows(path, VERB_COLUMNS):
        if not (ja and en):
            raise LexiconParseError(str(path), lineno, "ja_lemma and en_lemma are required")
        _unique(verbs, ja, path, lineno)
        verbs[ja] = VerbEntry(ja, en, **_flags(flags, VERB_FLAGS, path, lineno))
    return verbs


def read_modifiers(path) -> dict[str, ModifierEntry]:
    mods: dict[str, ModifierEntry] = {}
    for lineno, (ja, countable, uncountable, env, number, flags) in _rows(path, MODIFIER_COLUMNS):
        if not (ja and countable):
            raise LexiconParseError(str(path), lineno, "ja_lemma and en_countable_form are required")
        _unique(mods, ja, path, lineno)
        mods[ja] = ModifierEntry(
            ja_lemma=ja,
            en_countable_form=countable,
            en_uncountable_form=uncountable,
            forced_environment=_enum(EnvironmentKind, env, path, lineno) if env else None,
            forced_number=_enum(Number, number, path, lineno) if number else None,
            **_flags(flags, MODIFIER_FLAGS, path, lineno),
        )
    return mods


def read_classifiers(path) -> dict[str, ClassifierRule]:
    rules: dict[str, ClassifierRule] = {}
    for lineno, (ja, override, suppressed, number_rule) in _rows(path, CLASSIFIER_COLUMNS):
        if not ja:
            raise LexiconParseError(str(path), lineno, "ja_classifier is required")
        if override and (suppressed is None or number_rule is None):
            # an override must spell out its complement behaviour
            raise LexiconValidationError(ja, "override classifiers must set both complement fields explicitly")
        _unique(rules, ja, path, lineno)
        rules[ja] = ClassifierRule(
            ja_classifier=ja,
            en_classifier_override=override,
            article_suppressed_on_complement=True if suppressed is None else _bool(suppressed, path, lineno),
            complement_number_rule=(
                ComplementNumberRule.DEFAULT
                if number_rule is None
                else _enum(ComplementNumberRule, number_rule, path, lineno)
            ),
        )
    return rules


def load_lexicon(noun_path, verb_path, modifier_path, classifier_path, hierarchy_path) -> Lexicon:
    hierarchy = read_hierarchy(hierarchy_path)
    return Lexicon(
        nouns=read_nouns(noun_path),
        verbs=read_verbs(verb_path),
        modifiers=read_modifiers(modifier_path),
        classifiers=read_classifiers(classifier_path),
        hierarchy=hierarchy,
    )


LEXICON_FILES = ("nouns.tsv", "verbs.tsv", "modifiers.tsv", "classifiers.tsv", "hierarchy.tsv")

BUNDLED_LEXICON_DIR = Path(__file__).parent / "data" / "lexicon"


def load_lexicon_dir(directory: os.PathLike | str = BUNDLED_LEXICON_DIR) -> Lexicon:
    directory = Path(directory)
    return load_lexicon(*(directory / name for name in LEXICON_FILES))


_bundled: Optional[Lexicon] = None


def bundled_lexicon() -> Lexicon:
    global _bundled
    if _bundled is None:
        _bundled = load_lexicon_dir(BUNDLED_LEXICON_DIR)
    return _bundled


# -- TSV writing ----------------------------------------------------------------


def _cell(value) -> str:
    if value is None or value is False:
        return EMPTY
    if isinstance(value, enum.Enum):
        return value.value
    return str(value)


def _flag_cell(entry, names) -> str:
    return ",".join(n for n in names if getattr(entry, n)) or EMPTY


def _lines(header: tuple, rows) -> str:
    out = ["# " + "\t".join(header)]
    out.extend("\t".join(row) for row in rows)
    return "\n".join(out) + "\n"


def serialize_lexicon(lexicon: Lexicon, directory: os.PathLike | str) -> None:
    """Write the five lexicon tables so that ``load_lexicon_dir`` reads them back."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    nouns = (
        (
            n.ja_lemma,
            n.en_lemma,
            n.major.value,
            n.ncp.minor_token,
            n.default_number.value,
            _cell(n.default_classifier),
            _cell(n.irregular_plural),
            n.semantic_category,
            _cell(n.denumeration_substitute),
        )
        for n in lexicon.nouns.values()
    )
    verbs = ((v.ja_lemma, v.en_lemma, _flag_cell(v, VERB_FLAGS)) for v in lexicon.verbs.values())
    mods = (
        (
            m.ja_lemma,
            m.en_countable_form,
            _cell(m.en_uncountable_form),
            _cell(m.forced_environment),
            _cell(m.forced_number),
            _flag_cell(m, MODIFIER_FLAGS),
        )
        for m in lexicon.modifiers.values()
    )
    rules = (
        (
            r.ja_classifier,
            _cell(r.en_classifier_override),
            "yes" if r.article_suppressed_on_complement else "no",
            r.complement_number_rule.value,
        )
        for r in lexicon.classifiers.values()
    )
    hierarchy = ((c, _cell(p)) for c, p in lexicon.hierarchy.parent.items())
    tables = zip(
        LEXICON_FILES,
        (NOUN_COLUMNS, VERB_COLUMNS, MODIFIER_COLUMNS, CLASSIFIER_COLUMNS, HIERARCHY_COLUMNS),
        (nouns, verbs, mods, rules, hierarchy),
    )
    for name, header, rows in tables:
        (directory / name).write_text(_lines(header, rows), encoding="utf-8")
