"""Low-index subgroup search and the truncated finite-index tests built on it."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..caps import current_caps
from ..errors import OverCap
from ..groups import FiniteGroup, abelian_invariants, is_isomorphic, is_simple, perm_group
from ..snf import dense_smith_invariants
from .presentation import Presentation, Word, inverse
from .todd_coxeter import UNDEFINED, CosetTable, col_of


@dataclass(frozen=True)
class LowIndexSubgroup:
    table: CosetTable
    index: int
    is_normal: bool
    is_maximal: bool  # maximal among proper subgroups; exact because overgroups have smaller index


@dataclass(frozen=True)
class LowIndexResult:
    bound: int
    subgroups: tuple[LowIndexSubgroup, ...]
    deduplicated: bool

    def by_index(self, n: int) -> tuple[LowIndexSubgroup, ...]:
        return tuple(s for s in self.subgroups if s.index == n)


class _Search:
    """Backtracking over standardised partial coset tables (one table per conjugacy class)."""

    def __init__(self, pres: Presentation, bound: int) -> None:
        self.pres = pres
        self.bound = bound
        self.ncols = 2 * pres.n_gens
        self.by_first: dict[int, list[tuple[int, ...]]] = {}
        seen = set()
        for r in pres.relators:
            for w in (r, inverse(r)):
                for k in range(len(w)):
                    conj = tuple(col_of(x) for x in w[k:] + w[:k])
                    if conj not in seen:
                        seen.add(conj)
                        self.by_first.setdefault(conj[0], []).append(conj)
        self.found: list[tuple[tuple[int, ...], ...]] = []

    def run(self) -> list[tuple[tuple[int, ...], ...]]:
        if self.ncols == 0:
            return [((),)]
        table = [[UNDEFINED] * self.ncols for _ in range(self.bound)]
        self._descend(table, 1)
        return self.found

    def _assign(self, table: list[list[int]], c: int, col: int, d: int) -> bool:
        """Set c*x = d, then close all forced entries; False on a contradiction."""
        stack = []
        if not self._set(table, c, col, d, stack):
            return False
        while stack:
            c, col = stack.pop()
            d = table[c][col]
            for w in self.by_first.get(col, ()):
                if not self._scan(table, c, w, stack):
                    return False
            for w in self.by_first.get(col ^ 1, ()):
                if not self._scan(table, d, w, stack):
                    return False
        return True

    @staticmethod
    def _set(table: list[list[int]], c: int, col: int, d: int, stack: list) -> bool:
        cur, back = table[c][col], table[d][col ^ 1]
        if cur == d and back == c:
            return True
        if cur != UNDEFINED or back != UNDEFINED:
            return False
        table[c][col] = d
        table[d][col ^ 1] = c
        stack.append((c, col))
        return True

    def _scan(self, table: list[list[int]], c: int, word: Sequence[int], stack: list) -> bool:
        f, i, j = c, 0, len(word) - 1
        while i <= j and table[f][word[i]] != UNDEFINED:
            f = table[f][word[i]]
            i += 1
        if i > j:
            return f == c
        b = c
        while j >= i and table[b][word[j] ^ 1] != UNDEFINED:
            b = table[b][word[j] ^ 1]
            j -= 1
        if j < i:
            return f == b
        if i == j:
            return self._set(table, f, word[i], b, stack)
        return True

    def _canonical(self, table: list[list[int]], n: int) -> bool:
        """Reject if basing the table at another coset gives a smaller standardised table."""
        for beta in range(1, n):
            label = {beta: 0}
            order = [beta]
            verdict = 0
            row = 0
            while row < len(order) and verdict == 0:
                src = table[order[row]]
                mine = table[row]
                for col in range(self.ncols):
                    e = src[col]
                    if e == UNDEFINED or mine[col] == UNDEFINED:
                        verdict = 2  # undecided
                        break
                    if e not in label:
                        label[e] = len(order)
                        order.append(e)
                    r = label[e]
                    if r < mine[col]:
                        return False
                    if r > mine[col]:
                        verdict = 1
                        break
                row += 1
        return True

    def _descend(self, table: list[list[int]], n: int) -> None:
        spot = None
        for c in range(n):
            row = table[c]
            for col in range(self.ncols):
                if row[col] == UNDEFINED:
                    spot = (c, col)
                    break
            if spot:
                break
        if spot is None:
            self.found.append(tuple(tuple(r) for r in table[:n]))
            return
        c, col = spot
        for d in range(min(n + 1, self.bound)):
            if table[d][col ^ 1] != UNDEFINED:
                continue
            trial = [list(r) for r in table]
            if not self._assign(trial, c, col, d):
                continue
            m = n + 1 if d == n else n
            if self._canonical(trial, m):
                self._descend(trial, m)


def _conjugates(rows: tuple[tuple[int, ...], ...], pres: Presentation) -> list[CosetTable]:
    seen: dict[tuple, CosetTable] = {}
    base = CosetTable(pres, rows, True)
    for beta in range(len(rows)):
        t = base.rebased(beta)
        seen.setdefault(t.rows, t)
    return sorted(seen.values(), key=lambda t: t.rows)


def low_index_subgroups(pres: Presentation, max_index: int, dedupe_conjugates: bool = True,
                        cap: int | None = None) -> LowIndexResult:
    """Every subgroup of index at most ``max_index``, as standardised coset tables.

    The full list is always built (maximality needs it); with ``dedupe_conjugates``
    only the least table of each conjugacy class is reported.
    """
    cap = current_caps().index if cap is None else cap
    if max_index > cap:
        raise OverCap("low-index bound", cap, f"requested {max_index}")
    if max_index < 1:
        raise ValueError("max_index must be at least 1")
    reps = _Search(pres, max_index).run()
    classes = [_conjugates(r, pres) for r in reps]
    everything = [t for cls in classes for t in cls]
    everything.sort(key=lambda t: (t.index, t.rows))
    for t in everything:
        assert t.is_consistent()
    by_index: dict[int, list[CosetTable]] = {}
    for t in everything:
        by_index.setdefault(t.index, []).append(t)
    flags = {}
    for t in everything:
        n = t.index
        overgroups = (k for m in by_index if 1 < m < n and n % m == 0 for k in by_index[m])
        maximal = n > 1 and not any(t.is_subgroup_of(k) for k in overgroups)
        flags[t.rows] = (t.is_normal(), maximal)
    chosen = [min(cls, key=lambda t: t.rows) for cls in classes] if dedupe_conjugates else everything
    chosen = sorted(chosen, key=lambda t: (t.index, t.rows))
    subs = tuple(LowIndexSubgroup(t, t.index, *flags[t.rows]) for t in chosen)
    return LowIndexResult(max_index, subs, dedupe_conjugates)


def count_maximal_by_index(pres: Presentation, max_index: int) -> dict[int, int]:
    res = low_index_subgroups(pres, max_index, dedupe_conjugates=False)
    counts = {n: 0 for n in range(2, max_index + 1)}
    for s in res.subgroups:
        if s.is_maximal:
            counts[s.index] += 1
    return counts


def _transitive_on(table: CosetTable, words: Sequence[Word]) -> bool:
    perms = [[table.act(r, w) for r in range(table.index)] for w in words]
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for r in frontier:
            for p in perms:
                s = p[r]
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    return len(seen) == table.index


def complement_exists(pres: Presentation, H: CosetTable, candidates: Sequence[CosetTable]) -> CosetTable | None:
    """First proper candidate K with G = HK, i.e. K moves row 0 of H's table onto every row."""
    if not H.complete:
        raise ValueError("H must be a complete coset table")
    for K in candidates:
        if K.index < 2:
            continue
        if _transitive_on(H, K.schreier_generators()):
            return K
    return None


def quotient_group(table: CosetTable) -> FiniteGroup:
    """The permutation group induced on the rows; for a normal subgroup this is G/N."""
    perms = table.generator_permutations()
    return perm_group(table.index, perms, cap=max(current_caps().order, table.index),
                      label=f"quotient[{table.digest()}]")


def isomorphism_fingerprint(G: FiniteGroup) -> str:
    if G.is_abelian():
        inv = abelian_invariants(G)
        return "x".join(f"Z{k}" for k in inv) if inv else "1"
    inv = abelian_invariants(G)
    simple = G.order > 1 and is_simple(G)
    ab = "x".join(f"Z{k}" for k in inv) if inv else "1"
    return f"order{G.order}/ab:{ab}" + ("/simple" if simple else "")


EXACT_ISO_LIMIT = 200


def count_simple_quotients(pres: Presentation, max_index: int) -> dict[str, int]:
    """Normal subgroups of index <= bound with simple quotient, bucketed by isomorphism class."""
    res = low_index_subgroups(pres, max_index, dedupe_conjugates=False)
    buckets: list[tuple[str, FiniteGroup, int]] = []
    for s in res.subgroups:
        if not s.is_normal or s.index < 2:
            continue
        Q = quotient_group(s.table)
        assert Q.order == s.index
        if not is_simple(Q):
            continue
        label = isomorphism_fingerprint(Q)
        for i, (lab, rep, count) in enumerate(buckets):
            if lab.split("#")[0] != label:
                continue
            same = rep.is_abelian() or Q.order > EXACT_ISO_LIMIT or is_isomorphic(rep, Q)
            if same:
                buckets[i] = (lab, rep, count + 1)
                break
        else:
            clash = sum(1 for lab, _, _ in buckets if lab.split("#")[0] == label)
            buckets.append((label if not clash else f"{label}#{clash + 1}", Q, 1))
    return {lab: count for lab, _, count in buckets}


def abelianization(pres: Presentation) -> tuple[int, tuple[int, ...]]:
    """(free rank, torsion invariants) of G/[G, G] from the relator exponent sums."""
    n = pres.n_gens
    rows = []
    for r in pres.relators:
        row = [0] * n
        for x in r:
            row[abs(x) - 1] += 1 if x > 0 else -1
        rows.append(row)
    inv = dense_smith_invariants(rows) if rows else []
    return n - len(inv), tuple(d for d in inv if d > 1)
