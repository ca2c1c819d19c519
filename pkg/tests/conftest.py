from __future__ import annotations

import sys

import pytest

from cosetcx.groups import FiniteGroup, build_group

# name -> group spec; the finite corpus used across the suite
CORPUS = {
    "Z2": "cyclic:2",
    "Z3": "cyclic:3",
    "Z4": "cyclic:4",
    "Z5": "cyclic:5",
    "Klein": "product:cyclic:2,cyclic:2",
    "Z6": "cyclic:6",
    "S3": "symmetric:3",
    "D4": "dihedral:4",
    "Q8": "q8",
    "Z8": "cyclic:8",
    "Z2xZ4": "product:cyclic:2,cyclic:4",
    "Z2^3": "product:cyclic:2,cyclic:2,cyclic:2",
    "D6": "dihedral:6",
    "A4": "perm:4:(0 1 2),(0 1)(2 3)",
    "S4": "symmetric:4",
    "Z3xZ3": "product:cyclic:3,cyclic:3",
}

SMALL = ["Z2", "Z3", "Z4", "Klein", "Z6", "S3", "D4", "Q8", "Z2xZ4", "A4"]


def group(name: str) -> FiniteGroup:
    return build_group(CORPUS[name])


def element(G: FiniteGroup, perm: tuple[int, ...]) -> int:
    return G.elements.index(perm)


@pytest.fixture
def S3() -> FiniteGroup:
    return build_group("perm:3:(0 1),(0 1 2)")


@pytest.fixture
def klein() -> FiniteGroup:
    return build_group("product:cyclic:2,cyclic:2")


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "ACCEPTANCE_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda ln: int(ln.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
