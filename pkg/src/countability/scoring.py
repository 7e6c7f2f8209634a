"""NP-level and sentence-level exact-match scoring.

Both hypotheses and references mark NP regions inline as ``[[ID|text]]``.
An NP is correct when its hypothesis region equals the reference region
exactly; a sentence is correct only when all of its NPs are.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Optional

from countability.errors import ScoreAlignmentError

REGION = re.compile(r"\[\[([^|\]]+)\|(.*?)\]\]")
ARTICLES = ("a ", "an ", "the ", "some ")


def regions(marked: Optional[str]) -> dict[str, str]:
    if not marked:
        return {}
    return {m.group(1): m.group(2) for m in REGION.finditer(marked)}


def strip_marks(marked: str) -> str:
    return REGION.sub(lambda m: m.group(2), marked)


@dataclass(frozen=True)
class NPVerdict:
    np_id: str
    correct: bool
    hypothesis: Optional[str]
    reference: str
    category: Optional[str] = None


@dataclass
class ScoreReport:
    np_total: int = 0
    np_correct: int = 0
    sentence_total: int = 0
    sentence_correct: int = 0
    per_sentence: list = field(default_factory=list)

    @property
    def np_accuracy(self) -> float:
        return self.np_correct / self.np_total if self.np_total else 0.0

    @property
    def sentence_accuracy(self) -> float:
        return self.sentence_correct / self.sentence_total if self.sentence_total else 0.0

    def error_breakdown(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for _, verdicts in self.per_sentence:
            for v in verdicts:
                if not v.correct:
                    counts[v.category] = counts.get(v.category, 0) + 1
        return counts


def _strip_article(text: str) -> str:
    low = text.lower()
    for art in ARTICLES:
        if low.startswith(art):
            return text[len(art) :]
    return text


def error_category(hypothesis: Optional[str], reference: str) -> str:
    if hypothesis is None:
        return "missing"
    if _strip_article(hypothesis).lower() == _strip_article(reference).lower():
        return "article"
    if " of " in hypothesis or " of " in reference:
        return "classifier"
    return "number"


def score(hypotheses: Mapping[str, Mapping[str, str]], gold: Mapping[str, Mapping[str, str]]) -> ScoreReport:
    """Score aligned documents given as ``{sentence_id: {np_id: text}}``."""
    if set(hypotheses) != set(gold):
        only_h = sorted(set(hypotheses) - set(gold))
        only_g = sorted(set(gold) - set(hypotheses))
        raise ScoreAlignmentError(f"sentence ids differ: hypotheses only {only_h}, gold only {only_g}")
    report = ScoreReport()
    for sid, ref in gold.items():
        hyp = hypotheses[sid]
        verdicts = []
        for np_id, ref_text in ref.items():
            hyp_text = hyp.get(np_id)
            ok = hyp_text == ref_text
            verdicts.append(NPVerdict(np_id, ok, hyp_text, ref_text, None if ok else error_category(hyp_text, ref_text)))
        report.np_total += len(verdicts)
        report.np_correct += sum(v.correct for v in verdicts)
        report.sentence_total += 1
        report.sentence_correct += all(v.correct for v in verdicts)
        report.per_sentence.append((sid, verdicts))
    return report


def read_marked(path, *, field_names=("marked", "gold")) -> dict[str, dict[str, str]]:
    """Read JSON-lines records keyed by ``id`` with a marked-up sentence.

    Translation output uses ``marked``; ``.npir`` corpora use ``gold``.
    Records with neither (diagnostic-only output) have no NP regions.
    """
    out: dict[str, dict[str, str]] = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ScoreAlignmentError(f"{path}:{lineno}: {exc}") from None
        if "id" not in obj:
            raise ScoreAlignmentError(f"{path}:{lineno}: record without id")
        sid = str(obj["id"])
        if sid in out:
            raise ScoreAlignmentError(f"{path}:{lineno}: duplicate id {sid!r}")
        marked = next((obj[f] for f in field_names if obj.get(f)), None)
        out[sid] = regions(marked)
    return out


def format_report(report: ScoreReport, label: str = "Corpus", system: str = "Engine", breakdown: bool = False) -> str:
    """Render the report as a two-column (NPs, Sentences) accuracy table."""
    width = max(len(system), 8)
    rule = "+" + "-" * (width + 2) + "+" + "-" * 21 + "+"
    lines = [
        rule,
        f"| {'':{width}} | {label:^19} |",
        f"| {'':{width}} | {'NPs':^8}  {'Sentences':^9} |",
        f"| {'':{width}} | {f'({report.np_total})':^8}  {f'({report.sentence_total})':^9} |",
        rule,
        f"| {system:{width}} | {report.np_accuracy:^8.0%}  {report.sentence_accuracy:^9.0%} |",
        rule,
    ]
    if breakdown:
        errors = report.error_breakdown()
        lines.append("error breakdown (extension): " + (", ".join(f"{k}={v}" for k, v in sorted(errors.items())) or "none"))
    return "\n".join(lines)


def iter_failures(report: ScoreReport) -> Iterable[str]:
    for sid, verdicts in report.per_sentence:
        for v in verdicts:
            if not v.correct:
                yield f"{sid}/{v.np_id}: got {v.hypothesis!r}, expected {v.reference!r} ({v.category})"
