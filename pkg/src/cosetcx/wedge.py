"""Homotopy type of the normal coset poset of a finite group as a wedge of spheres.

The recursion:

* trivial group: the empty complex;
* simple group G: |G| points, i.e. a wedge of |G| - 1 zero-spheres;
* otherwise fix a minimal normal subgroup M.  If no proper normal subgroup N has
  NM = G, the poset is equivalent to the one of G/M.  Otherwise G = M x K for such
  a K, and the poset is a wedge of (t - 1) suspensions of the poset of K, where t
  counts the cosets gN of normal subgroups N with NM = G ("large" cosets).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterator, Union

from .complex import HomologyProfile, homology, order_complex
from .errors import BadProductHypothesis
from .families import Coset, cosets_of_family, family_normal_proper
from .groups import (
    FiniteGroup,
    Subgroup,
    intersection,
    is_normal,
    is_simple,
    minimal_normal_subgroups,
    normal_subgroups,
    product_set,
    quotient,
    subgroup_as_group,
)

EMPTY, POINT, WEDGE = "empty", "point", "wedge"


@dataclass(frozen=True)
class WedgeDescriptor:
    kind: str
    spheres: tuple[tuple[int, int], ...] = ()  # (dimension, count), dimension ascending

    def __post_init__(self) -> None:
        if self.kind == WEDGE:
            if not self.spheres or any(c <= 0 or d < 0 for d, c in self.spheres):
                raise ValueError("a wedge needs positive counts in nonnegative dimensions")
        elif self.spheres:
            raise ValueError(f"{self.kind} carries no spheres")

    @classmethod
    def empty(cls) -> WedgeDescriptor:
        return cls(EMPTY)

    @classmethod
    def point(cls) -> WedgeDescriptor:
        return cls(POINT)

    @classmethod
    def of(cls, spheres: dict[int, int]) -> WedgeDescriptor:
        items = tuple(sorted((d, c) for d, c in spheres.items() if c))
        return cls(WEDGE, items) if items else cls(POINT)

    def as_dict(self) -> dict[int, int]:
        return dict(self.spheres)

    def suspend(self) -> WedgeDescriptor:
        if self.kind == EMPTY:
            return WedgeDescriptor.of({0: 1})  # two points
        if self.kind == POINT:
            return self
        return WedgeDescriptor.of({d + 1: c for d, c in self.spheres})

    def repeat(self, k: int) -> WedgeDescriptor:
        """Wedge of k copies."""
        if k < 1:
            raise ValueError("need at least one copy")
        if self.kind != WEDGE:
            return self if k == 1 or self.kind == POINT else _raise_empty_wedge()
        return WedgeDescriptor.of({d: c * k for d, c in self.spheres})

    def homology(self) -> HomologyProfile:
        if self.kind == EMPTY:
            return HomologyProfile.build({-1: 1}, {})
        return HomologyProfile.wedge(self.as_dict())

    def render(self) -> str:
        if self.kind == EMPTY:
            return "∅"
        if self.kind == POINT:
            return "pt"
        terms = [(f"{c}·" if c > 1 else "") + f"S^{d}" for d, c in self.spheres]
        return "⋁ " + " ∨ ".join(terms)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "spheres": {str(d): c for d, c in self.spheres}}


def _raise_empty_wedge():
    raise ValueError("cannot wedge several empty spaces")


@dataclass(frozen=True)
class SimpleBase:
    group: str
    order: int


@dataclass(frozen=True)
class QuotientStep:
    minimal_normal: str


@dataclass(frozen=True)
class ProductStep:
    minimal_normal: str
    factor: str
    large_count: int


Step = Union[SimpleBase, QuotientStep, ProductStep]


@dataclass(frozen=True)
class DecompositionTrace:
    steps: tuple[Step, ...]

    def replay(self) -> WedgeDescriptor:
        if not self.steps:
            return WedgeDescriptor.empty()
        base = self.steps[-1]
        if not isinstance(base, SimpleBase):
            raise ValueError("trace must end in a simple base")
        desc = WedgeDescriptor.of({0: base.order - 1})
        for step in reversed(self.steps[:-1]):
            if isinstance(step, ProductStep):
                desc = desc.suspend().repeat(step.large_count - 1)
        return desc

    def to_list(self) -> list[dict]:
        out = []
        for s in self.steps:
            if isinstance(s, SimpleBase):
                out.append({"step": "simple-base", "group": s.group, "order": s.order})
            elif isinstance(s, QuotientStep):
                out.append({"step": "quotient", "minimal_normal": s.minimal_normal})
            else:
                out.append({"step": "product", "minimal_normal": s.minimal_normal,
                            "factor": s.factor, "large_count": s.large_count})
        return out

    def render(self) -> str:
        lines = []
        for depth, s in enumerate(self.steps):
            pad = "  " * depth
            if isinstance(s, SimpleBase):
                lines.append(f"{pad}simple base {s.group} (order {s.order})")
            elif isinstance(s, QuotientStep):
                lines.append(f"{pad}quotient by minimal normal {s.minimal_normal}")
            else:
                lines.append(f"{pad}product: minimal normal {s.minimal_normal} x {s.factor}, "
                             f"{s.large_count} large cosets")
        return "\n".join(lines)


def _members_label(H: Subgroup) -> str:
    return "<" + ",".join(map(str, H.members)) + ">"


def _order_of_product(G: FiniteGroup, N: Subgroup, M: Subgroup) -> int:
    return len(N) * len(M) // len(intersection(N, M))


def large_normal_subgroups(G: FiniteGroup, M: Subgroup) -> tuple[Subgroup, ...]:
    """Proper normal subgroups N with NM = G."""
    return tuple(N for N in normal_subgroups(G)
                 if N.is_proper and _order_of_product(G, N, M) == G.order)


@dataclass(frozen=True)
class CosetPartition:
    large: tuple[Coset, ...]
    small: tuple[Coset, ...]

    @property
    def counts(self) -> tuple[int, int]:
        return len(self.large), len(self.small)


def classify_cosets_large_small(G: FiniteGroup, M: Subgroup, K: Subgroup) -> CosetPartition:
    """Split the cosets of proper normal subgroups by whether the subgroup projects onto K."""
    if M not in minimal_normal_subgroups(G):
        raise BadProductHypothesis("M is not a minimal normal subgroup")
    if not K.is_proper or not is_normal(G, K):
        raise BadProductHypothesis("K is not a proper normal subgroup")
    if not intersection(M, K).is_trivial or len(product_set(G, M, K)) != G.order:
        raise BadProductHypothesis("G is not the internal direct product of M and K")
    large_subs = set(large_normal_subgroups(G, M))
    for L in large_subs:
        # every large subgroup is itself a complement of M
        assert intersection(L, M).is_trivial and len(L) == len(K)
    large, small = [], []
    for c in cosets_of_family(family_normal_proper(G)):
        (large if c.subgroup in large_subs else small).append(c)
    return CosetPartition(tuple(large), tuple(small))


_CACHE: dict[tuple, tuple[WedgeDescriptor, DecompositionTrace]] = {}
_LOCK = threading.Lock()


def predict_normal_wedge(G: FiniteGroup) -> tuple[WedgeDescriptor, DecompositionTrace]:
    """Predicted homotopy type (with canonical choices of M and K) and its derivation."""
    key = G.table_key()
    with _LOCK:
        hit = _CACHE.get(key)
    if hit is not None:
        return hit
    result = _predict(G)
    with _LOCK:
        _CACHE.setdefault(key, result)
    return result


def _predict(G: FiniteGroup) -> tuple[WedgeDescriptor, DecompositionTrace]:
    if G.order == 1:
        return WedgeDescriptor.empty(), DecompositionTrace(())
    if is_simple(G):
        desc = WedgeDescriptor.of({0: G.order - 1})
        return desc, DecompositionTrace((SimpleBase(G.label, G.order),))
    M = minimal_normal_subgroups(G)[0]
    large = large_normal_subgroups(G, M)
    if not large:
        Q, _ = quotient(G, M)
        desc, trace = predict_normal_wedge(Q)
        return desc, DecompositionTrace((QuotientStep(_members_label(M)),) + trace.steps)
    K = large[0]
    t = len(large) * (G.order // len(K))
    assert t >= 2
    KG, _ = subgroup_as_group(K)
    sub, trace = predict_normal_wedge(KG)
    desc = sub.suspend().repeat(t - 1)
    step = ProductStep(_members_label(M), _members_label(K), t)
    return desc, DecompositionTrace((step,) + trace.steps)


def all_choice_predictions(G: FiniteGroup) -> Iterator[WedgeDescriptor]:
    """The predicted descriptor for every admissible choice of M and K at every level."""
    if G.order == 1:
        yield WedgeDescriptor.empty()
        return
    if is_simple(G):
        yield WedgeDescriptor.of({0: G.order - 1})
        return
    for M in minimal_normal_subgroups(G):
        large = large_normal_subgroups(G, M)
        if not large:
            Q, _ = quotient(G, M)
            yield from all_choice_predictions(Q)
            continue
        t = len(large) * (G.order // len(large[0]))
        for K in large:
            KG, _ = subgroup_as_group(K)
            for sub in all_choice_predictions(KG):
                yield sub.suspend().repeat(t - 1)


def normal_coset_homology(G: FiniteGroup) -> HomologyProfile:
    return homology(order_complex(cosets_of_family(family_normal_proper(G))))


def verify_normal_wedge(G: FiniteGroup) -> bool:
    """Predicted wedge matches the directly computed homology (ranks and absence of torsion)."""
    desc, _ = predict_normal_wedge(G)
    return normal_coset_homology(G) == desc.homology()
