from pathlib import Path

import pytest

from countability.lexicon import bundled_lexicon
from countability.source_ir import NPNode, Role, SentenceIR

CORPUS_DIR = Path(__file__).resolve().parents[1] / "src" / "countability" / "data" / "corpus"
WORKED_CORPUS = CORPUS_DIR / "worked_examples.npir"
GOLD_CORPUS = CORPUS_DIR / "gold.npir"

_acceptance: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion check")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    ok = not report.failed and not (report.when == "call" and report.skipped)
    prev = _acceptance.get(number, (title, True))
    _acceptance[number] = (title, prev[1] and ok)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        title, ok = _acceptance[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")


@pytest.fixture(scope="session")
def lexicon():
    return bundled_lexicon()


def np_(id, head, role=Role.OTHER, **kw):
    if isinstance(role, str):
        role = Role[role]
    return NPNode(id=str(id), head_ja=head, syntactic_role=role, **kw)


def sentence(nps, verb=None, template=None, sid="s"):
    nps = tuple(nps)
    if template is None:
        template = " ".join(f"{{np:{n.id}}}" for n in nps)
    return SentenceIR(id=sid, nps=nps, template=template, main_verb_ja=verb)
