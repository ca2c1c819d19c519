"""Moebius function of the subgroup lattice and the generation-probability series P(G, s)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .complex import order_complex, reduced_euler
from .families import cosets_of_family, family_all_proper
from .groups import FiniteGroup, Subgroup, _closure, all_subgroups


@dataclass(frozen=True)
class MoebiusTable:
    parent: FiniteGroup
    mu: Mapping[tuple[int, ...], int]  # keyed by sorted member tuple

    def __getitem__(self, H: Subgroup | tuple[int, ...]) -> int:
        key = H.members if isinstance(H, Subgroup) else H
        return self.mu[key]


@dataclass(frozen=True)
class DirichletSeries:
    """sum of c_n * n^(-s), stored as sorted (n, c_n) pairs with zero terms dropped (c_1 kept)."""

    terms: tuple[tuple[int, int], ...]

    def coefficient(self, n: int) -> int:
        return dict(self.terms).get(n, 0)

    def __call__(self, s: int) -> Fraction:
        total = Fraction(0)
        for n, c in self.terms:
            total += c * (Fraction(n) ** (-s))
        return total

    def render(self) -> str:
        out = ""
        for n, c in self.terms:
            if n == 1:
                out = str(c)
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            out += f" {sign} " + (f"{mag}*" if mag != 1 else "") + f"{n}^-s"
        return out

    def to_dict(self) -> dict[str, int]:
        return {str(n): c for n, c in self.terms}


def moebius_table(G: FiniteGroup) -> MoebiusTable:
    """mu(G, G) = 1 and mu(H, G) = -sum of mu(K, G) over K strictly above H."""
    subs = all_subgroups(G)
    mu: dict[tuple[int, ...], int] = {}
    for H in reversed(subs):
        if H.order == G.order:
            mu[H.members] = 1
            continue
        mu[H.members] = -sum(mu[K.members] for K in subs
                             if K.order > H.order and K.order % H.order == 0 and H.memberset <= K.memberset)
    return MoebiusTable(G, mu)


def hall_series(G: FiniteGroup, table: MoebiusTable | None = None) -> DirichletSeries:
    table = table or moebius_table(G)
    coeffs: dict[int, int] = {}
    for H in all_subgroups(G):
        n = G.order // H.order
        coeffs[n] = coeffs.get(n, 0) + table[H]
    return DirichletSeries(tuple(sorted((n, c) for n, c in coeffs.items() if c or n == 1)))


def eval_P(G: FiniteGroup, s: int) -> Fraction:
    return hall_series(G)(s)


def coset_poset_euler(G: FiniteGroup) -> int:
    return reduced_euler(order_complex(cosets_of_family(family_all_proper(G))))


def bouc_check(G: FiniteGroup) -> bool:
    """P(G, -1) equals minus the reduced Euler characteristic of the coset poset."""
    return eval_P(G, -1) == -coset_poset_euler(G)


def generation_probability(G: FiniteGroup, k: int) -> Fraction:
    """Fraction of ordered k-tuples generating G, by exhaustive enumeration."""
    seen: dict[frozenset[int], bool] = {}
    hits = 0
    for tup in itertools.product(range(G.order), repeat=k):
        key = frozenset(tup)
        ok = seen.get(key)
        if ok is None:
            ok = len(_closure(G, (), sorted(key))) == G.order
            seen[key] = ok
        hits += ok
    return Fraction(hits, G.order ** k)
