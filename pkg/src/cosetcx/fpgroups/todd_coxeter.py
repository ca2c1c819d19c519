"""Coset tables and HLT-style Todd-Coxeter enumeration.

Columns come in pairs: generator ``i`` uses column ``2*i`` and its inverse
``2*i + 1``.  Rows are right cosets ``Hg``; the entry in row ``c`` under letter
``x`` is the coset ``c*x``.  ``UNDEFINED`` marks a missing entry.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..caps import current_caps
from ..errors import Overflow
from .presentation import Presentation, Word, free_reduce, inverse

UNDEFINED = -1


def col_of(letter: int) -> int:
    return 2 * (letter - 1) if letter > 0 else 2 * (-letter - 1) + 1


def letter_of(col: int) -> int:
    return col // 2 + 1 if col % 2 == 0 else -(col // 2 + 1)


@dataclass(frozen=True, eq=False)
class CosetTable:
    presentation: Presentation
    rows: tuple[tuple[int, ...], ...]
    complete: bool
    subgroup_gens: tuple[Word, ...] = ()

    @property
    def index(self) -> int:
        return len(self.rows)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CosetTable) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def act(self, row: int, word: Sequence[int]) -> int:
        for x in word:
            row = self.rows[row][col_of(x)]
            if row == UNDEFINED:
                return UNDEFINED
        return row

    def generator_permutations(self) -> list[tuple[int, ...]]:
        """Image tuple of each generator acting on the rows (complete tables only)."""
        return [tuple(r[2 * i] for r in self.rows) for i in range(self.presentation.n_gens)]

    def is_consistent(self) -> bool:
        for i, r in enumerate(self.rows):
            for c, j in enumerate(r):
                if j != UNDEFINED and self.rows[j][c ^ 1] != i:
                    return False
        if self.complete:
            if any(j == UNDEFINED for r in self.rows for j in r):
                return False
            for rel in self.presentation.relators:
                if any(self.act(i, rel) != i for i in range(self.index)):
                    return False
            if any(self.act(0, w) != 0 for w in self.subgroup_gens):
                return False
        return True

    def contains(self, word: Sequence[int]) -> bool:
        """Whether the word lies in the subgroup (the row-0 stabiliser)."""
        return self.act(0, word) == 0

    def rebased(self, base: int) -> CosetTable:
        """Standardised table of the conjugate subgroup stabilising ``base``."""
        rows = _standardize(self.rows, base)
        return CosetTable(self.presentation, rows, self.complete, ())

    def standardized(self) -> CosetTable:
        return CosetTable(self.presentation, _standardize(self.rows, 0), self.complete, self.subgroup_gens)

    def coset_reps(self) -> list[Word]:
        """A word per row, from breadth-first search in column order."""
        reps: list[Word | None] = [None] * self.index
        reps[0] = ()
        queue = [0]
        for c in queue:
            for col, d in enumerate(self.rows[c]):
                if d != UNDEFINED and reps[d] is None:
                    reps[d] = reps[c] + (letter_of(col),)
                    queue.append(d)
        return [r if r is not None else () for r in reps]

    def schreier_generators(self) -> tuple[Word, ...]:
        """Generators of the subgroup as words: rep(c) * x * rep(cx)^-1 off the spanning tree."""
        reps = self.coset_reps()
        tree = set()
        for d in range(1, self.index):
            c_word = reps[d]
            tree.add((self.act(0, c_word[:-1]), col_of(c_word[-1])))
        out: list[Word] = []
        seen = set()
        for c in range(self.index):
            for g in range(self.presentation.n_gens):
                col = 2 * g
                d = self.rows[c][col]
                if d == UNDEFINED or (c, col) in tree or (d, col ^ 1) in tree:
                    continue
                w = free_reduce(reps[c] + (g + 1,) + inverse(reps[d]))
                if w and w not in seen:
                    seen.add(w)
                    out.append(w)
        return tuple(out)

    def is_normal(self) -> bool:
        """Each generator conjugate of the subgroup equals it: the table maps onto itself
        with row 0 sent to row 0*x."""
        return all(_equivariant_map(self.rows, self.rows, self.rows[0][2 * g]) is not None
                   for g in range(self.presentation.n_gens))

    def is_subgroup_of(self, other: CosetTable) -> bool:
        return _equivariant_map(self.rows, other.rows, 0) is not None

    def digest(self) -> str:
        text = ";".join(",".join(map(str, r)) for r in _standardize(self.rows, 0))
        return hashlib.sha256(text.encode()).hexdigest()[:12]


def _equivariant_map(src: Sequence[Sequence[int]], dst: Sequence[Sequence[int]], target: int) -> list[int] | None:
    """Map rows of ``src`` to rows of ``dst`` commuting with every column, 0 -> target."""
    phi = [UNDEFINED] * len(src)
    phi[0] = target
    queue = [0]
    for c in queue:
        for col, d in enumerate(src[c]):
            if d == UNDEFINED:
                continue
            img = dst[phi[c]][col]
            if img == UNDEFINED:
                return None
            if phi[d] == UNDEFINED:
                phi[d] = img
                queue.append(d)
            elif phi[d] != img:
                return None
    return phi


def _standardize(rows: Sequence[Sequence[int]], base: int) -> tuple[tuple[int, ...], ...]:
    """Relabel rows in order of first appearance when scanning from ``base`` row by row."""
    label = {base: 0}
    order = [base]
    for c in order:
        for d in rows[c]:
            if d != UNDEFINED and d not in label:
                label[d] = len(order)
                order.append(d)
    return tuple(tuple(label[d] if d != UNDEFINED else UNDEFINED for d in rows[c]) for c in order)


class _Enumerator:
    """State for one HLT run with deduction processing and compaction."""

    def __init__(self, pres: Presentation, max_cosets: int) -> None:
        self.pres = pres
        self.ncols = 2 * pres.n_gens
        self.max_cosets = max_cosets
        self.table: list[list[int]] = [[UNDEFINED] * self.ncols]
        self.parent: list[int] = [0]
        self.live = 1
        self.deductions: list[tuple[int, int]] = []
        self.rels = [tuple(col_of(x) for x in r) for r in pres.relators]
        # cyclic conjugates of relators and their inverses, by first column
        self.by_first: dict[int, list[tuple[int, ...]]] = {}
        seen = set()
        for r in pres.relators:
            for w in (r, inverse(r)):
                for k in range(len(w)):
                    conj = tuple(col_of(x) for x in w[k:] + w[:k])
                    if conj not in seen:
                        seen.add(conj)
                        self.by_first.setdefault(conj[0], []).append(conj)

    def alive(self, c: int) -> bool:
        return self.parent[c] == c

    def rep(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def define(self, c: int, col: int) -> int:
        if self.live >= self.max_cosets:
            raise Overflow(self.max_cosets)
        n = len(self.table)
        self.table.append([UNDEFINED] * self.ncols)
        self.parent.append(n)
        self.live += 1
        self.table[c][col] = n
        self.table[n][col ^ 1] = c
        return n

    def compact(self) -> dict[int, int]:
        """Drop dead rows, keeping definition order; returns old -> new numbering."""
        # live rows only reference live rows once coincidences are processed
        keep = [c for c in range(len(self.table)) if self.alive(c)]
        new = {c: i for i, c in enumerate(keep)}
        self.table = [[new[d] if d != UNDEFINED else UNDEFINED for d in self.table[c]] for c in keep]
        self.parent = list(range(len(keep)))
        self.deductions = [(new[c], col) for c, col in self.deductions if c in new]
        return new

    def deduce(self, c: int, col: int, d: int) -> None:
        self.table[c][col] = d
        self.table[d][col ^ 1] = c
        self.deductions.append((c, col))

    def merge(self, a: int, b: int, queue: list[int]) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        lo, hi = min(a, b), max(a, b)
        self.parent[hi] = lo
        self.live -= 1
        queue.append(hi)

    def coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []
        self.merge(a, b, queue)
        i = 0
        while i < len(queue):
            dead = queue[i]
            i += 1
            for col in range(self.ncols):
                d = self.table[dead][col]
                if d == UNDEFINED:
                    continue
                self.table[d][col ^ 1] = UNDEFINED
                f1, f2 = self.rep(dead), self.rep(d)
                if self.table[f1][col] != UNDEFINED:
                    self.merge(f2, self.table[f1][col], queue)
                elif self.table[f2][col ^ 1] != UNDEFINED:
                    self.merge(f1, self.table[f2][col ^ 1], queue)
                else:
                    self.deduce(f1, col, f2)

    def scan_and_fill(self, c: int, word: Sequence[int]) -> None:
        t = self.table
        f, b = c, c
        i, j = 0, len(word) - 1
        while True:
            while i <= j and t[f][word[i]] != UNDEFINED:
                f = t[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and t[b][word[j] ^ 1] != UNDEFINED:
                b = t[b][word[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                self.deduce(f, word[i], b)
                return
            self.define(f, word[i])

    def scan(self, c: int, word: Sequence[int]) -> None:
        """Scan without defining; close a single gap or record a coincidence."""
        t = self.table
        f, b = c, c
        i, j = 0, len(word) - 1
        while i <= j and t[f][word[i]] != UNDEFINED:
            f = t[f][word[i]]
            i += 1
        if i > j:
            if f != b:
                self.coincidence(f, b)
            return
        while j >= i and t[b][word[j] ^ 1] != UNDEFINED:
            b = t[b][word[j] ^ 1]
            j -= 1
        if j < i:
            self.coincidence(f, b)
        elif i == j:
            self.deduce(f, word[i], b)

    def process_deductions(self) -> None:
        while self.deductions:
            c, col = self.deductions.pop()
            if not self.alive(c):
                continue
            for w in self.by_first.get(col, ()):
                self.scan(c, w)
                if not self.alive(c):
                    break
            d = self.table[c][col]
            if d == UNDEFINED or not self.alive(d):
                continue
            for w in self.by_first.get(col ^ 1, ()):
                self.scan(d, w)
                if not self.alive(d):
                    break

    def run(self, subgroup_gens: Iterable[Word]) -> list[list[int]]:
        for w in subgroup_gens:
            if w:
                self.scan_and_fill(0, [col_of(x) for x in w])
                self.process_deductions()
        c = 0
        while c < len(self.table):
            if len(self.table) > self.max_cosets and len(self.table) > 2 * self.live:
                new = self.compact()
                c = next((new[k] for k in sorted(new) if k >= c), len(self.table))
                continue
            if self.alive(c):
                for r in self.rels:
                    self.scan_and_fill(c, r)
                    self.process_deductions()
                    if not self.alive(c):
                        break
                if self.alive(c):
                    for col in range(self.ncols):
                        if self.table[c][col] == UNDEFINED:
                            self.define(c, col)
                            self.process_deductions()
            c += 1
        self.compact()
        return self.table


def todd_coxeter(pres: Presentation, subgroup_gens: Sequence[Word] = (), max_cosets: int | None = None) -> CosetTable:
    """Complete coset table of the subgroup generated by ``subgroup_gens``.

    Cosets are numbered in order of definition.  Raises :class:`Overflow` when more
    than ``max_cosets`` cosets are live at once.
    """
    max_cosets = current_caps().cosets if max_cosets is None else max_cosets
    if max_cosets < 1:
        raise ValueError("max_cosets must be positive")
    gens = tuple(free_reduce(w) for w in subgroup_gens)
    if pres.n_gens == 0:
        return CosetTable(pres, ((),), True, gens)
    rows = _Enumerator(pres, max_cosets).run(gens)
    table = CosetTable(pres, tuple(tuple(r) for r in rows), True, gens)
    assert table.is_consistent()
    return table
