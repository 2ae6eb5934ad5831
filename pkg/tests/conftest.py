import pathlib

import pytest

from maymust import Framework, Label, Labelling, NuanceTuple, parse_mmaf

DATA = pathlib.Path(__file__).parent / "data"

_SHORT = {"i": Label.IN, "o": Label.OUT, "u": Label.UNDEC}


def lab(**assignment) -> Labelling:
    """Labelling from keyword shorthand: lab(a1="i", a2="out")."""
    return Labelling(
        {a: _SHORT.get(v, None) or Label(v) for a, v in assignment.items()}
    )


def labs(f: Framework, *rows: str) -> frozenset[Labelling]:
    """Labellings over f's arguments from rows like 'i o u', in id order."""
    out = []
    for row in rows:
        cells = row.split()
        assert len(cells) == f.n
        out.append(Labelling({a: _SHORT[c] for a, c in zip(f.ids, cells)}))
    return frozenset(out)


def load(name: str) -> Framework:
    return parse_mmaf((DATA / name).read_text())


@pytest.fixture
def chain5() -> Framework:
    return load("chain_of_five.mmaf")


@pytest.fixture
def self_attack() -> Framework:
    return load("self_attack.mmaf")


@pytest.fixture
def mutual_pair() -> Framework:
    return load("mutual_pair.mmaf")


def mk(arguments, attacks=()) -> Framework:
    """Framework from (id, (am, aM, rm, rM)) pairs and id-pair attacks."""
    return Framework(
        [(a, NuanceTuple(*t)) for a, t in arguments],
        attacks,
    )


# ---------------------------------------------------------------------------
# Acceptance summary: the criteria in test_acceptance.py each get one
# PASS/FAIL line at the end of the run, whatever else the session ran.

_criterion_desc: dict[str, str] = {}
_criterion_outcome: dict[str, bool] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        name = item.nodeid.rsplit("::", 1)[-1]
        if "test_acceptance.py" in item.nodeid and name.startswith("test_criterion_"):
            doc = (item.function.__doc__ or "").strip().splitlines()
            _criterion_desc[item.nodeid] = doc[0] if doc else name


def pytest_runtest_logreport(report):
    if report.nodeid not in _criterion_desc:
        return
    if report.when == "call":
        _criterion_outcome[report.nodeid] = report.passed
    elif report.failed:
        _criterion_outcome[report.nodeid] = False


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _criterion_outcome:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid in sorted(_criterion_outcome):
        name = nodeid.rsplit("::", 1)[-1]
        number = int(name.split("_")[2])
        verdict = "PASS" if _criterion_outcome[nodeid] else "FAIL"
        terminalreporter.write_line(
            f"criterion {number:2d}: {verdict}  {_criterion_desc[nodeid]}"
        )
