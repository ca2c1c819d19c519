from __future__ import annotations

import pytest

from cosetcx.caps import Caps, current_caps, parse_caps
from cosetcx.errors import OverCap
from cosetcx.groups import build_group


def test_defaults():
    c = Caps()
    assert (c.order, c.subgroups, c.simplices, c.index) == (5040, 200, 2_000_000, 30)


def test_documented_format():
    c = parse_caps("simplices=500, order=100, cosets=20")
    assert (c.simplices, c.order, c.cosets) == (500, 100, 20)
    assert c.index == 30


@pytest.mark.parametrize("bad", ["simplices", "foo=3", "order=0", "order=x"])
def test_rejects_bad_entries(bad):
    with pytest.raises(ValueError):
        parse_caps(bad)


def test_environment_override(monkeypatch):
    monkeypatch.setenv("COSET_CAPS", "order=10")
    assert current_caps().order == 10
    with pytest.raises(OverCap):
        build_group("symmetric:4")
    monkeypatch.delenv("COSET_CAPS")
    assert build_group("symmetric:4").order == 24
