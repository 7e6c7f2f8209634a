"""Exception hierarchy shared by the lexicon, IR, planner and CLI."""

from __future__ import annotations


class CountabilityError(Exception):
    """Base class for every error raised by this package."""


class LexiconParseError(CountabilityError):
    def __init__(self, path: str, line: int, message: str):
        self.path = path
        self.line = line
        super().__init__(f"{path}:{line}: {message}")


class LexiconValidationError(CountabilityError):
    """An entry loaded fine but breaks one of the lexicon invariants."""

    def __init__(self, entry: str, rule: str):
        self.entry = entry
        self.rule = rule
        super().__init__(f"invalid entry {entry!r}: {rule}")


class UnknownLemmaError(CountabilityError, KeyError):
    def __init__(self, kind: str, lemma: str):
        self.kind = kind
        self.lemma = lemma
        super().__init__(f"unknown {kind} lemma {lemma!r}")

    def __str__(self) -> str:  # KeyError would repr() the message
        return self.args[0]


class UnknownCategoryError(CountabilityError, KeyError):
    def __init__(self, category: str):
        self.category = category
        super().__init__(f"unknown semantic category {category!r}")

    def __str__(self) -> str:
        return self.args[0]


class IRParseError(CountabilityError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class DanglingReferenceError(IRParseError):
    pass


class PlanError(CountabilityError):
    """Raised when a plan cannot be built or violates its own invariants."""


class MissingPlanError(PlanError):
    def __init__(self, placeholder: str):
        self.placeholder = placeholder
        super().__init__(f"no plan for placeholder {placeholder!r}")


class ScoreAlignmentError(CountabilityError):
    pass
