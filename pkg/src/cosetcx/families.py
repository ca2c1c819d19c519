"""Subgroup families and their coset systems.

For a finite group the finite-index families coincide with the plain ones, so
``family_all_proper`` serves for both L(G) and its finite-index version.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import NotSurjective, TrivialGroup
from .groups import (
    FiniteGroup,
    GroupHom,
    Subgroup,
    all_subgroups,
    coset_action_kernel,
    intersection,
    is_normal,
    normal_subgroups,
    product_is_group_complement,
)

KINDS = ("all-proper", "normal-proper", "maximal-of", "custom")


@dataclass(frozen=True, eq=False)
class SubgroupFamily:
    parent: FiniteGroup
    members: tuple[Subgroup, ...]
    kind: str = "custom"
    intersection_closed: bool = False

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        for H in self.members:
            if H.parent is not self.parent:
                raise ValueError("family member belongs to a different group")
            if not H.is_proper:
                raise ValueError("families hold proper subgroups only")
        if self.intersection_closed and not _closed_under_intersection(self.members):
            raise ValueError("family flagged intersection-closed but is not")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def _closed_under_intersection(members: Sequence[Subgroup]) -> bool:
    present = {H.members for H in members}
    for i, H in enumerate(members):
        for K in members[i + 1:]:
            if intersection(H, K).members not in present:
                return False
    return True


@dataclass(frozen=True, eq=False)
class Coset:
    """The left coset rep*H."""

    subgroup: Subgroup
    members: tuple[int, ...]
    rep: int
    memberset: frozenset[int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "memberset", frozenset(self.members))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Coset):
            return NotImplemented
        return self.members == other.members and self.subgroup == other.subgroup

    def __hash__(self) -> int:
        return hash(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def label(self) -> str:
        return ",".join(map(str, self.members))


def family_all_proper(G: FiniteGroup) -> SubgroupFamily:
    members = tuple(H for H in all_subgroups(G) if H.is_proper)
    return SubgroupFamily(G, members, "all-proper", intersection_closed=True)


def family_normal_proper(G: FiniteGroup) -> SubgroupFamily:
    members = tuple(H for H in normal_subgroups(G) if H.is_proper)
    return SubgroupFamily(G, members, "normal-proper", intersection_closed=True)


def maximal_subfamily(F: SubgroupFamily) -> SubgroupFamily:
    members = tuple(H for H in F.members
                    if not any(K.memberset > H.memberset for K in F.members))
    return SubgroupFamily(F.parent, members, "maximal-of")


def maximal_subgroups(G: FiniteGroup) -> tuple[Subgroup, ...]:
    return maximal_subfamily(family_all_proper(G)).members


def frattini(G: FiniteGroup) -> Subgroup:
    """Intersection of the maximal subgroups."""
    if G.order == 1:
        raise TrivialGroup("the trivial group has no maximal subgroups")
    phi = intersection(*maximal_subgroups(G))
    assert is_normal(G, phi)
    return phi


def cosets(H: Subgroup) -> tuple[Coset, ...]:
    G = H.parent
    seen: set[int] = set()
    out = []
    for g in range(G.order):
        if g in seen:
            continue
        members = tuple(sorted(G.mul(g, h) for h in H.members))
        seen.update(members)
        out.append(Coset(H, members, members[0]))
    return tuple(out)


def cosets_of_family(F: SubgroupFamily) -> tuple[Coset, ...]:
    """All cosets of all members, ordered by (member position, rep)."""
    return tuple(c for H in F.members for c in cosets(H))


def _covered_by(A: SubgroupFamily, B: SubgroupFamily) -> bool:
    return all(any(H.memberset <= K.memberset for K in B.members) for H in A.members)


def is_cofinal_pair(F1: SubgroupFamily, F2: SubgroupFamily) -> bool:
    if F1.parent is not F2.parent:
        raise ValueError("families live in different groups")
    return _covered_by(F1, F2) and _covered_by(F2, F1)


def common_complement(G: FiniteGroup, targets: Sequence[Subgroup],
                      pool: SubgroupFamily) -> Subgroup | None:
    """First pool member that complements the intersection of ``targets``."""
    if not targets:
        raise ValueError("targets must be nonempty")
    core = intersection(*targets)
    for W in pool.members:
        if product_is_group_complement(G, core, W):
            return W
    return None


def preimage_family(p: GroupHom, F: SubgroupFamily) -> SubgroupFamily:
    if F.parent is not p.target:
        raise ValueError("family is not on the target of the homomorphism")
    if not p.is_surjective():
        raise NotSurjective("preimage_family needs an epimorphism")
    members = tuple(p.preimage(H) for H in F.members)
    return SubgroupFamily(p.source, members, "custom", F.intersection_closed)


def core_of_intersection(G: FiniteGroup, F: SubgroupFamily) -> Subgroup:
    """The normal core of the intersection of the family members."""
    return coset_action_kernel(G, intersection(*F.members))
