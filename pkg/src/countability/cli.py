"""Command-line front end: ``translate``, ``trace`` and ``score``.

Exit codes: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Sequence

from countability.errors import CountabilityError
from countability.lexicon import BUNDLED_LEXICON_DIR, Lexicon, load_lexicon_dir
from countability.number_plan import STEP_LABEL, RealizationPlan, resolve_sentence
from countability.realizer import render_np, render_sentence
from countability.referentiality import RefKind
from countability.scoring import format_report, iter_failures, read_marked, score
from countability.source_ir import SentenceIR, parse_document, validate_against_lexicon

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_input(path: str) -> list[SentenceIR]:
    if path == "-":
        return parse_document(sys.stdin.buffer)
    with open(path, "rb") as fh:
        return parse_document(fh)


def translate_sentence(sentence: SentenceIR, lexicon: Lexicon, some_insertion=False, collective_plural=False) -> dict:
    diags = validate_against_lexicon(sentence, lexicon)
    if diags:
        return {"id": sentence.id, "diagnostics": [str(d) for d in diags]}
    plans = resolve_sentence(sentence, lexicon, some_insertion=some_insertion)
    text = render_sentence(sentence, plans, lexicon, collective_plural=collective_plural)
    marked = render_sentence(sentence, plans, lexicon, collective_plural=collective_plural, marked=True)
    return {
        "id": sentence.id,
        "text": text,
        "marked": marked,
        "nps": [plan_summary(p, lexicon) for p in plans],
    }


def plan_summary(plan: RealizationPlan, lexicon: Lexicon) -> dict:
    env = plan.environment
    return {
        "id": plan.np_id,
        "text": render_np(plan, lexicon).text,
        "referentiality": plan.referentiality.kind.value,
        "test": plan.referentiality.fired_test,
        "environment": env.cell if env else None,
        "step": env.fired_step if env else None,
        "number": plan.head_number.value,
        "article": plan.article.value,
    }


def translate_corpus(
    sentences: Sequence[SentenceIR], lexicon: Lexicon, *, some_insertion=False, collective_plural=False, jobs: int = 1
) -> list[dict]:
    def work(sentence):
        return translate_sentence(sentence, lexicon, some_insertion, collective_plural)

    if jobs <= 1:
        return [work(s) for s in sentences]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(work, sentences))  # map keeps input order


def trace_lines(plan: RealizationPlan, lexicon: Lexicon) -> str:
    ref = plan.referentiality
    parts = [f"referentiality: test {ref.fired_test} ({ref.label}) -> {ref.kind.value}"]
    if ref.kind is RefKind.GENERIC:
        parts.append(f"generic: bare {plan.head_number.value.lower()}")
    else:
        env = plan.environment
        parts.append(f"number: step {env.fired_step} ({STEP_LABEL[env.fired_step]})")
        major = next(t for t in plan.trace if t.startswith("matrix:")).split(":", 1)[1].split("/")[0]
        parts.append(f"matrix: {major} x {env.cell}")
    for tag in plan.trace:
        if tag.startswith(("classifier:", "substitute:", "semi-countable:", "ext:")):
            parts.append(tag.replace(":", ": ", 1))
    parts.append(f"out: {render_np(plan, lexicon).text}")
    return "; ".join(parts)


def _find_np(sentences: Sequence[SentenceIR], ref: str) -> tuple[SentenceIR, str]:
    if "/" in ref:
        sid, np_id = ref.split("/", 1)
        for s in sentences:
            if s.id == sid and any(n.id == np_id for n in s.nps):
                return s, np_id
        raise UsageError(f"no NP {ref!r} in input")
    hits = [(s, ref) for s in sentences if any(n.id == ref for n in s.nps)]
    if not hits:
        raise UsageError(f"no NP {ref!r} in input")
    if len(hits) > 1:
        raise UsageError(f"NP id {ref!r} is ambiguous; use SENTENCE/NP (e.g. {hits[0][0].id}/{ref})")
    return hits[0]


def cmd_translate(args) -> int:
    lexicon = load_lexicon_dir(args.lexicon)
    sentences = _read_input(args.input)
    records = translate_corpus(
        sentences,
        lexicon,
        some_insertion=args.some_insertion,
        collective_plural=args.collective_plural,
        jobs=args.jobs,
    )
    out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    try:
        for rec in records:
            out.write(json.dumps(rec, ensure_ascii=False) + "\n")
    finally:
        if args.output:
            out.close()
    bad = sum("diagnostics" in r for r in records)
    for rec in records:
        for d in rec.get("diagnostics", ()):
            print(f"diagnostic: {d}", file=sys.stderr)
    print(f"{len(records)} sentences, {len(records) - bad} translated, {bad} with diagnostics", file=sys.stderr)
    return EXIT_OK


def cmd_trace(args) -> int:
    lexicon = load_lexicon_dir(args.lexicon)
    sentences = _read_input(args.input)
    sentence, np_id = _find_np(sentences, args.np_id)
    diags = validate_against_lexicon(sentence, lexicon)
    if diags:
        for d in diags:
            print(f"diagnostic: {d}", file=sys.stderr)
        return EXIT_DATA
    plans = resolve_sentence(sentence, lexicon, some_insertion=args.some_insertion)
    plan = next(p for p in plans if p.np_id == np_id)
    print(trace_lines(plan, lexicon))
    return EXIT_OK


def cmd_score(args) -> int:
    hyp = read_marked(args.hypotheses)
    gold = read_marked(args.gold, field_names=("gold", "marked"))
    report = score(hyp, gold)
    print(format_report(report, label=args.label, breakdown=args.breakdown))
    if args.failures:
        for line in iter_failures(report):
            print(line)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="countability", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def common(p):
        p.add_argument("--lexicon", default=str(BUNDLED_LEXICON_DIR), metavar="DIR", help="lexicon directory")
        p.add_argument("--some-insertion", action="store_true", help="insert 'some' before indefinite plural/mass objects")
        p.add_argument("--collective-plural", action="store_true", help="plural verb agreement for collective nouns")

    p = sub.add_parser("translate", help="realize every sentence of an .npir file")
    p.add_argument("input", help=".npir file, or - for stdin")
    p.add_argument("-o", "--output", help="write JSON lines here instead of stdout")
    p.add_argument("-j", "--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("trace", help="show which rules fired for one NP")
    p.add_argument("input")
    p.add_argument("np_id", help="NP id, or SENTENCE/NP when ids repeat")
    common(p)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("score", help="NP- and sentence-level accuracy against gold")
    p.add_argument("hypotheses", help="translate output (JSON lines)")
    p.add_argument("gold", help=".npir corpus with gold fields")
    p.add_argument("--label", default="Corpus")
    p.add_argument("--breakdown", action="store_true", help="add per-category error counts")
    p.add_argument("--failures", action="store_true", help="list every wrong NP")
    p.set_defaults(func=cmd_score)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"countability: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CountabilityError, OSError, ValueError) as exc:
        print(f"countability: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
