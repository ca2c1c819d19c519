"""Size caps, overridable through the ``COSET_CAPS`` environment variable.

The variable holds comma-separated ``key=N`` pairs, e.g.
``COSET_CAPS="simplices=500000,order=1000,cosets=20000"``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

ENV_VAR = "COSET_CAPS"


@dataclass(frozen=True)
class Caps:
    order: int = 5040  # largest group build_group will close
    subgroups: int = 200  # largest group whose subgroup lattice is enumerated
    simplices: int = 2_000_000
    cosets: int = 100_000  # Todd-Coxeter live-coset limit
    index: int = 30  # low-index search bound


def parse_caps(text: str, base: Caps | None = None) -> Caps:
    base = base or Caps()
    known = {f.name for f in fields(Caps)}
    updates: dict[str, int] = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        key, sep, value = part.partition("=")
        key = key.strip()
        if not sep or key not in known:
            raise ValueError(f"bad {ENV_VAR} entry {part!r}; keys are {sorted(known)}")
        n = int(value)
        if n < 1:
            raise ValueError(f"{ENV_VAR} value for {key} must be positive")
        updates[key] = n
    return replace(base, **updates)


def current_caps() -> Caps:
    """Defaults merged with the environment override, read on every call."""
    text = os.environ.get(ENV_VAR, "")
    return parse_caps(text) if text else Caps()
