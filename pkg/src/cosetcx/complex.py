"""Coset complexes and their reduced integral homology.

Three builders share one storage type:

* ``order_complex``  -- chains of cosets under strict inclusion,
* ``nerve_complex``  -- sets of cosets with a common element,
* ``coset_simplicial`` -- subsets of the group lying inside a single coset.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .caps import current_caps
from .errors import LabelMismatch, OverCap, ParseError
from .families import Coset
from .groups import FiniteGroup
from .snf import echelon_invariants

Simplex = tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplex:
    """Vertices ``0..n-1`` with labels; ``simplices[d]`` holds the sorted d-simplices."""

    vertex_labels: tuple[Hashable, ...]
    simplices: tuple[tuple[Simplex, ...], ...]

    @classmethod
    def from_simplices(cls, labels: Sequence[Hashable], faces: Iterable[Simplex]) -> SimplicialComplex:
        by_dim: dict[int, set[Simplex]] = {}
        for s in faces:
            by_dim.setdefault(len(s) - 1, set()).add(tuple(s))
        top = max(by_dim, default=-1)
        return cls(tuple(labels), tuple(tuple(sorted(by_dim.get(d, ()))) for d in range(top + 1)))

    @property
    def dim(self) -> int:
        return len(self.simplices) - 1

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_labels)

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.simplices)

    def n_simplices(self) -> int:
        return sum(self.f_vector())

    def is_valid(self) -> bool:
        """Tuples strictly increasing, no duplicates, downward closed, vertices all present."""
        present = [set(level) for level in self.simplices]
        for d, level in enumerate(self.simplices):
            if len(present[d]) != len(level):
                return False
            for s in level:
                if len(s) != d + 1 or any(a >= b for a, b in zip(s, s[1:])):
                    return False
                if not all(0 <= v < self.n_vertices for v in s):
                    return False
                if d > 0 and any(s[:i] + s[i + 1:] not in present[d - 1] for i in range(d + 1)):
                    return False
        if self.simplices and len(self.simplices[0]) != self.n_vertices:
            return False
        return bool(self.simplices) or self.n_vertices == 0


def _cap(cap: int | None) -> int:
    return current_caps().simplices if cap is None else cap


def order_complex(cosets: Sequence[Coset], cap: int | None = None) -> SimplicialComplex:
    """Chains C0 < C1 < ... under strict inclusion of member sets."""
    cap = _cap(cap)
    n = len(cosets)
    above: list[list[int]] = [[] for _ in range(n)]
    for i, a in enumerate(cosets):
        for j, b in enumerate(cosets):
            if len(a) < len(b) and a.memberset < b.memberset:
                above[i].append(j)
    chains: list[Simplex] = []

    def extend(chain: list[int]) -> None:
        chains.append(tuple(sorted(chain)))
        if len(chains) > cap:
            raise OverCap("simplex count", cap, "order complex")
        for j in above[chain[-1]]:
            chain.append(j)
            extend(chain)
            chain.pop()

    for i in range(n):
        extend([i])
    return SimplicialComplex.from_simplices([c.members for c in cosets], chains)


def nerve_complex(cosets: Sequence[Coset], cap: int | None = None) -> SimplicialComplex:
    """A set of cosets spans a simplex iff the cosets share an element."""
    cap = _cap(cap)
    through: dict[int, list[int]] = {}
    for i, c in enumerate(cosets):
        for g in c.members:
            through.setdefault(g, []).append(i)
    facets = _maximal_sets(tuple(v) for v in through.values())
    faces: set[Simplex] = set()
    for facet in facets:
        for k in range(1, len(facet) + 1):
            for s in itertools.combinations(facet, k):
                faces.add(s)
            if len(faces) > cap:
                raise OverCap("simplex count", cap, "nerve")
    return SimplicialComplex.from_simplices([c.members for c in cosets], faces)


def coset_simplicial(cosets: Sequence[Coset], G: FiniteGroup, cap: int | None = None) -> SimplicialComplex:
    """Vertices are group elements; a finite set of them is a simplex iff it lies in one coset."""
    cap = _cap(cap)
    distinct = {c.members for c in cosets}
    budget = sum(2 ** len(m) for m in distinct)
    if budget > cap:
        raise OverCap("coset subset count", cap, f"needs {budget}")
    elements = sorted({g for m in distinct for g in m})
    pos = {g: i for i, g in enumerate(elements)}
    faces: set[Simplex] = set()
    for m in _maximal_sets(distinct):
        idx = tuple(pos[g] for g in m)
        for k in range(1, len(idx) + 1):
            faces.update(itertools.combinations(idx, k))
    return SimplicialComplex.from_simplices(elements, faces)


def _maximal_sets(sets: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    uniq = sorted(set(sets), key=lambda s: (-len(s), s))
    kept: list[tuple[int, ...]] = []
    kept_sets: list[frozenset[int]] = []
    for s in uniq:
        fs = frozenset(s)
        if not any(fs <= k for k in kept_sets):
            kept.append(s)
            kept_sets.append(fs)
    return kept


# ---------------------------------------------------------------------------
# homology


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced integral homology; entry 0 of each tuple is dimension -1.

    Trailing all-zero dimensions are trimmed so equal groups compare equal.
    """

    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, betti: dict[int, int], torsion: dict[int, list[int]]) -> HomologyProfile:
        dims = [d for d in set(betti) | set(torsion) if betti.get(d, 0) or torsion.get(d)]
        top = max(dims, default=-2)
        b = tuple(betti.get(d, 0) for d in range(-1, top + 1))
        t = tuple(tuple(sorted(torsion.get(d, ()))) for d in range(-1, top + 1))
        return cls(b, t)

    @classmethod
    def wedge(cls, spheres: dict[int, int]) -> HomologyProfile:
        return cls.build(dict(spheres), {})

    def betti_at(self, d: int) -> int:
        i = d + 1
        return self.betti[i] if 0 <= i < len(self.betti) else 0

    def torsion_at(self, d: int) -> tuple[int, ...]:
        i = d + 1
        return self.torsion[i] if 0 <= i < len(self.torsion) else ()

    def is_zero(self) -> bool:
        return not self.betti

    def has_torsion(self) -> bool:
        return any(self.torsion)

    def euler(self) -> int:
        """Alternating sum of reduced Betti numbers (equals the reduced Euler characteristic)."""
        return sum((-1) ** (i - 1) * b for i, b in enumerate(self.betti))

    def to_dict(self) -> dict:
        return {
            str(d): {"betti": self.betti_at(d), "torsion": list(self.torsion_at(d))}
            for d in range(-1, len(self.betti) - 1)
            if self.betti_at(d) or self.torsion_at(d)
        }

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for d in range(-1, len(self.betti) - 1):
            b, t = self.betti_at(d), self.torsion_at(d)
            if b or t:
                terms = ([f"Z^{b}" if b > 1 else "Z"] if b else []) + [f"Z/{k}" for k in t]
                parts.append(f"H{d}=" + "+".join(terms))
        return " ".join(parts)


def boundary_columns(K: SimplicialComplex, d: int) -> list[dict[int, int]]:
    """Columns of the boundary map from d-chains to (d-1)-chains, d >= 1."""
    index = {s: i for i, s in enumerate(K.simplices[d - 1])}
    cols = []
    for s in K.simplices[d]:
        col = {}
        for i in range(d + 1):
            col[index[s[:i] + s[i + 1:]]] = -1 if i % 2 else 1
        cols.append(col)
    return cols


def homology(K: SimplicialComplex, cap: int | None = None) -> HomologyProfile:
    """Reduced homology over Z, augmentation included, so the empty complex has H_{-1} = Z."""
    cap = _cap(cap)
    if K.n_simplices() > cap:
        raise OverCap("simplex count", cap, "homology")
    f = K.f_vector()
    rank: dict[int, int] = {}
    tors: dict[int, list[int]] = {}
    cleared: set[int] = set()
    for d in range(K.dim, 0, -1):
        cols = boundary_columns(K, d)
        # a d-simplex that is the unit pivot of a reduced (d+1)-cycle has a dependent boundary
        res = echelon_invariants(c for j, c in enumerate(cols) if j not in cleared)
        rank[d] = res.rank
        tors[d - 1] = res.invariants
        cleared = res.unit_pivot_rows
    rank[0] = 1 if f and f[0] else 0
    betti = {-1: 1 - rank[0]}
    for d in range(K.dim + 1):
        betti[d] = f[d] - rank.get(d, 0) - rank.get(d + 1, 0)
    return HomologyProfile.build(betti, tors)


def reduced_euler(K: SimplicialComplex) -> int:
    return sum((-1) ** d * n for d, n in enumerate(K.f_vector())) - 1


def complexes_equal(K1: SimplicialComplex, K2: SimplicialComplex) -> bool:
    """Equality after matching vertices by label."""
    if set(K1.vertex_labels) != set(K2.vertex_labels) or len(K1.vertex_labels) != len(K2.vertex_labels):
        raise LabelMismatch("vertex label sets differ")
    pos1 = {lab: i for i, lab in enumerate(K1.vertex_labels)}
    remap = [pos1[lab] for lab in K2.vertex_labels]
    if K1.dim != K2.dim:
        return False
    for d in range(K1.dim + 1):
        moved = {tuple(sorted(remap[v] for v in s)) for s in K2.simplices[d]}
        if moved != set(K1.simplices[d]):
            return False
    return True


# ---------------------------------------------------------------------------
# text export

FORMAT_HEADER = "# cosetcx simplicial complex v1"


def _label_text(label: Hashable) -> str:
    if isinstance(label, tuple):
        return ",".join(map(str, label))
    return str(label)


def to_text(K: SimplicialComplex) -> str:
    """One simplex per line (space-separated vertex indices) after ``#`` header lines."""
    lines = [FORMAT_HEADER, f"# vertices {K.n_vertices}"]
    lines += [f"# v {i} {_label_text(lab)}" for i, lab in enumerate(K.vertex_labels)]
    for level in K.simplices:
        lines += [" ".join(map(str, s)) for s in level]
    return "\n".join(lines) + "\n"


def from_text(text: str) -> SimplicialComplex:
    labels: list[str] = []
    faces: list[Simplex] = []
    n = None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split(None, 2)
            if parts[:1] == ["vertices"]:
                n = int(parts[1])
            elif parts[:1] == ["v"]:
                if int(parts[1]) != len(labels):
                    raise ParseError("vertex labels out of order", line, lineno)
                labels.append(parts[2] if len(parts) > 2 else "")
            continue
        try:
            faces.append(tuple(int(t) for t in line.split()))
        except ValueError:
            raise ParseError("bad simplex line", line, lineno) from None
    if n is not None and n != len(labels):
        raise ParseError("vertex count does not match labels", "", None)
    return SimplicialComplex.from_simplices(labels, faces)
