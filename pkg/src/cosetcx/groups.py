"""Concrete finite groups on canonically indexed elements, plus subgroup-lattice primitives.

Elements of a :class:`FiniteGroup` are the integers ``0 .. order-1`` with ``0`` the
identity.  Every group carries a dense multiplication table, so products are list
lookups.  Subgroups are sorted tuples of element indices.
"""

from __future__ import annotations

import itertools
import random
import re
from collections import Counter
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Hashable, Iterable, Sequence

from .caps import current_caps
from .errors import NotNormal, OverCap, ParseError, TrivialGroup

DENSE_TABLE_LIMIT = 4096
EXHAUSTIVE_ASSOC_LIMIT = 64
ASSOC_SAMPLE_SEED = 20240611
ASSOC_SAMPLES = 20000


class FiniteGroup:
    """A finite group given by its full multiplication table.

    ``elements[i]`` is a hashable description of element ``i`` (a permutation image
    tuple or a coordinate tuple).  Instances are immutable; derived data such as the
    subgroup lattice is cached on the instance.
    """

    def __init__(self, table: Sequence[Sequence[int]], label: str, elements: Sequence[Hashable] | None = None) -> None:
        n = len(table)
        if n < 1:
            raise ValueError("a group has at least one element")
        if n > DENSE_TABLE_LIMIT:
            raise OverCap("dense multiplication table", DENSE_TABLE_LIMIT)
        self._table = tuple(tuple(row) for row in table)
        self.order = n
        self.label = label
        self.elements = tuple(elements) if elements is not None else tuple(range(n))
        inv = [-1] * n
        for x in range(n):
            row = self._table[x]
            if len(row) != n:
                raise ValueError("multiplication table is not square")
            if row[0] != x or self._table[0][x] != x:
                raise ValueError("element 0 must be the identity")
            inv[x] = row.index(0)
        self._inv = tuple(inv)
        self._cache: dict[str, object] = {}

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label!r}, order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return self._table[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    @property
    def table(self) -> tuple[tuple[int, ...], ...]:
        return self._table

    def table_key(self) -> tuple[tuple[int, ...], ...]:
        return self._table

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self._inv[a], -k
        result = 0
        for _ in range(k):
            result = self._table[result][a]
        return result

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self._table[x][a]
            k += 1
        return k

    def exponent(self) -> int:
        e = 1
        for a in range(self.order):
            k = self.element_order(a)
            e = e * k // gcd(e, k)
        return e

    def is_abelian(self) -> bool:
        t = self._table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def check_associative(self) -> bool:
        """Exhaustive for small orders, otherwise a fixed-seed random sample."""
        t = self._table
        n = self.order
        if n <= EXHAUSTIVE_ASSOC_LIMIT:
            triples: Iterable[tuple[int, int, int]] = itertools.product(range(n), repeat=3)
        else:
            rng = random.Random(ASSOC_SAMPLE_SEED)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(ASSOC_SAMPLES))
        return all(t[t[a][b]][c] == t[a][t[b][c]] for a, b, c in triples)


@dataclass(frozen=True, eq=False)
class Subgroup:
    """A subgroup stored as the strictly increasing tuple of its element indices."""

    parent: FiniteGroup
    members: tuple[int, ...]
    memberset: frozenset[int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "memberset", frozenset(self.members))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.members == other.members

    def __hash__(self) -> int:
        return hash(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.memberset

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        return f"Subgroup({self.parent.label!r}, {list(self.members)})"

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // len(self.members)

    @property
    def is_trivial(self) -> bool:
        return len(self.members) == 1

    @property
    def is_proper(self) -> bool:
        return len(self.members) < self.parent.order

    def issubset(self, other: Subgroup) -> bool:
        return self.memberset <= other.memberset


@dataclass(frozen=True, eq=False)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    image_of: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.image_of[x]

    def is_homomorphism(self) -> bool:
        s, t, f = self.source, self.target, self.image_of
        if f[0] != 0:
            return False
        return all(f[s.mul(x, y)] == t.mul(f[x], f[y]) for x in range(s.order) for y in range(s.order))

    def is_surjective(self) -> bool:
        return len(set(self.image_of)) == self.target.order

    def kernel(self) -> Subgroup:
        return Subgroup(self.source, tuple(x for x, y in enumerate(self.image_of) if y == 0))

    def image(self, H: Subgroup) -> Subgroup:
        return Subgroup(self.target, tuple(sorted({self.image_of[h] for h in H.members})))

    def preimage(self, H: Subgroup) -> Subgroup:
        return Subgroup(self.source, tuple(x for x, y in enumerate(self.image_of) if y in H.memberset))


# ---------------------------------------------------------------------------
# constructors


def _group_from_elements(elements: list, mul: Callable, label: str) -> FiniteGroup:
    index = {e: i for i, e in enumerate(elements)}
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    return FiniteGroup(table, label, elements)


def _check_cap(order: int, cap: int | None) -> int:
    cap = current_caps().order if cap is None else cap
    if order > cap:
        raise OverCap("group order", cap, f"order {order}")
    return cap


def cyclic(n: int, cap: int | None = None) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    _check_cap(n, cap)
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(table, f"cyclic:{n}", [(k,) for k in range(n)])


def dihedral(n: int, cap: int | None = None) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n.  Element ``(b, a)`` is r^a s^b, index b*n + a."""
    if n < 2:
        raise ValueError("dihedral group needs n >= 2")
    _check_cap(2 * n, cap)
    elements = [(b, a) for b in range(2) for a in range(n)]

    def mul(x, y):
        (b1, a1), (b2, a2) = x, y
        return ((b1 + b2) % 2, (a1 + (-a2 if b1 else a2)) % n)

    return _group_from_elements(elements, mul, f"dihedral:{n}")


# unit quaternions 1, i, j, k as 0..3; product of units -> (sign flip, unit)
_QUAT_UNIT = {
    (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
    (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
    (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
    (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
}


def quaternion8() -> FiniteGroup:
    """Q8 with element ``(sign, unit)``: sign 0 is +, unit 0..3 is 1, i, j, k."""
    elements = [(s, u) for s in range(2) for u in range(4)]

    def mul(x, y):
        flip, unit = _QUAT_UNIT[(x[1], y[1])]
        return ((x[0] + y[0] + flip) % 2, unit)

    return _group_from_elements(elements, mul, "q8")


def direct_product(factors: Sequence[FiniteGroup], cap: int | None = None) -> FiniteGroup:
    if not factors:
        raise ValueError("direct product needs at least one factor")
    order = 1
    for f in factors:
        order *= f.order
    _check_cap(order, cap)
    elements = list(itertools.product(*(range(f.order) for f in factors)))

    def mul(x, y):
        return tuple(f.mul(a, b) for f, a, b in zip(factors, x, y))

    label = "product:" + ",".join(f.label for f in factors)
    return _group_from_elements(elements, mul, label)


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # apply p first, then q
    return tuple(q[x] for x in p)


def perm_group(degree: int, generators: Sequence[Sequence[int]], cap: int | None = None,
               label: str | None = None) -> FiniteGroup:
    """Closure of permutation generators given as image tuples on ``0..degree-1``."""
    cap = current_caps().order if cap is None else cap
    gens = [tuple(g) for g in generators]
    for g in gens:
        if len(g) != degree or sorted(g) != list(range(degree)):
            raise ValueError(f"not a permutation of degree {degree}: {g}")
    identity = tuple(range(degree))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = _compose(p, g)
                if q not in seen:
                    seen.add(q)
                    if len(seen) > cap:
                        raise OverCap("group order", cap, "permutation closure")
                    nxt.append(q)
        frontier = nxt
    elements = sorted(seen)
    if label is None:
        label = f"perm:{degree}:" + ",".join(format_cycles(g) for g in gens)
    return _group_from_elements(elements, _compose, label)


def symmetric(n: int, cap: int | None = None) -> FiniteGroup:
    if not 1 <= n <= 6:
        raise ValueError("symmetric(n) supports 1 <= n <= 6")
    _check_cap(_factorial(n), cap)
    elements = sorted(itertools.permutations(range(n)))
    return _group_from_elements(elements, _compose, f"symmetric:{n}")


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


# ---------------------------------------------------------------------------
# group-spec DSL

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> tuple[int, ...]:
    """Parse ``(0 1 2)(3 4)`` into an image tuple.  Points may be separated by spaces or commas."""
    src = text
    text = text.strip()
    if not text:
        raise ParseError("empty permutation", src, 0)
    image = list(range(degree))
    pos = 0
    stripped = re.sub(r"\s+(?=\()|(?<=\))\s+", "", text)
    for m in _CYCLE_RE.finditer(stripped):
        if m.start() != pos:
            raise ParseError("malformed cycle notation", src, m.start())
        pos = m.end()
        tokens = [t for t in re.split(r"[\s,]+", m.group(1).strip()) if t]
        if not tokens:
            continue
        try:
            points = [int(t) for t in tokens]
        except ValueError:
            raise ParseError("cycle points must be integers", src, m.start()) from None
        if len(set(points)) != len(points):
            raise ParseError("repeated point in cycle", src, m.start())
        for p in points:
            if not 0 <= p < degree:
                raise ParseError(f"point {p} outside 0..{degree - 1}", src, m.start())
        for a, b in zip(points, points[1:] + points[:1]):
            if image[a] != a:
                raise ParseError("cycles are not disjoint", src, m.start())
            image[a] = b
    if pos != len(stripped):
        raise ParseError("malformed cycle notation", src, pos)
    if sorted(image) != list(range(degree)):
        raise ParseError("cycles are not disjoint", src, 0)
    return tuple(image)


def format_cycles(image: Sequence[int]) -> str:
    seen: set[int] = set()
    parts = []
    for start in range(len(image)):
        if start in seen or image[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = image[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = image[x]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


def _split_top(text: str, glue: bool = True) -> list[str]:
    """Split on commas outside parentheses.

    With ``glue`` set, an item that starts with ``(`` is reattached to the previous
    one, so a ``perm:`` factor inside a product keeps all of its generators.
    """
    items, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            items.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    items.append("".join(cur))
    if not glue:
        return items
    merged: list[str] = []
    for it in items:
        if it.strip().startswith("(") and merged:
            merged[-1] = merged[-1] + "," + it
        else:
            merged.append(it)
    return merged


def parse_group_spec(text: str) -> tuple:
    """Parse the group-spec DSL into a nested descriptor tuple.

    >>> parse_group_spec("product:cyclic:2, cyclic:2")
    ('product', (('cyclic', 2), ('cyclic', 2)))
    """
    src = text
    compact = text.strip()
    if not compact:
        raise ParseError("empty group spec", src, 0)
    head, _, rest = compact.partition(":")
    head = head.strip().lower()
    try:
        if head == "cyclic":
            return ("cyclic", int(rest))
        if head == "dihedral":
            return ("dihedral", int(rest))
        if head == "symmetric":
            return ("symmetric", int(rest))
        if head == "q8" and not rest.strip():
            return ("quaternion8",)
    except ValueError:
        raise ParseError(f"expected an integer after {head!r}", src, len(head) + 1) from None
    if head == "product":
        parts = [p for p in _split_top(rest) if p.strip()]
        if not parts:
            raise ParseError("product needs factors", src, len(head) + 1)
        return ("product", tuple(parse_group_spec(p) for p in parts))
    if head == "perm":
        deg_text, sep, gens_text = rest.partition(":")
        if not sep:
            raise ParseError("perm spec is perm:<degree>:<cycles>,...", src, len(head) + 1)
        try:
            degree = int(deg_text)
        except ValueError:
            raise ParseError("perm degree must be an integer", src, len(head) + 1) from None
        if degree < 1:
            raise ParseError("perm degree must be positive", src, len(head) + 1)
        gens = tuple(parse_cycles(g, degree) for g in _split_top(gens_text, glue=False) if g.strip())
        return ("perm", degree, gens)
    raise ParseError(f"unknown group kind {head!r}", src, 0)


def build_group(spec: str | tuple, cap: int | None = None) -> FiniteGroup:
    """Build a group from a DSL string or descriptor tuple."""
    desc = parse_group_spec(spec) if isinstance(spec, str) else spec
    kind = desc[0]
    if kind == "cyclic":
        return cyclic(desc[1], cap)
    if kind == "dihedral":
        return dihedral(desc[1], cap)
    if kind == "symmetric":
        return symmetric(desc[1], cap)
    if kind == "quaternion8":
        return quaternion8()
    if kind == "product":
        return direct_product([build_group(d, cap) for d in desc[1]], cap)
    if kind == "perm":
        gens = desc[2] or (tuple(range(desc[1])),)
        return perm_group(desc[1], gens, cap)
    raise ValueError(f"unknown group descriptor {desc!r}")


# ---------------------------------------------------------------------------
# subgroups


def _closure(G: FiniteGroup, start: Iterable[int], gens: Sequence[int]) -> tuple[int, ...]:
    t = G.table
    seen = set(start)
    seen.add(0)
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            row = t[x]
            for g in gens:
                y = row[g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(seen))


def subgroup_generated(G: FiniteGroup, seed: Iterable[int]) -> Subgroup:
    gens = sorted(set(seed))
    for g in gens:
        if not 0 <= g < G.order:
            raise IndexError(f"element {g} not in {G.label}")
    H = Subgroup(G, _closure(G, (), gens))
    assert G.order % H.order == 0
    return H


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, (0,))


def whole_group(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, tuple(range(G.order)))


def _sort_key(H: Subgroup) -> tuple:
    return (len(H.members), H.members)


def all_subgroups(G: FiniteGroup, cap: int | None = None) -> tuple[Subgroup, ...]:
    """Every subgroup once, sorted by (size, members).

    Cyclic subgroups are generated first; the set is then closed under joins with
    cyclic subgroups, which reaches every join since each subgroup is generated by
    its cyclic subgroups.
    """
    cached = G._cache.get("subgroups")
    if cached is not None:
        return cached  # type: ignore[return-value]
    cap = current_caps().subgroups if cap is None else cap
    if G.order > cap:
        raise OverCap("subgroup enumeration group order", cap, f"order {G.order}")
    cyclics: dict[tuple[int, ...], int] = {}
    for g in range(G.order):
        members = _closure(G, (), (g,))
        cyclics.setdefault(members, g)
    found: dict[tuple[int, ...], tuple[int, ...]] = {m: (g,) for m, g in cyclics.items()}
    cyclic_items = sorted(cyclics.items(), key=lambda kv: (len(kv[0]), kv[0]))
    frontier = list(found.items())
    while frontier:
        nxt = []
        for members, gens in frontier:
            mset = set(members)
            for cmembers, g in cyclic_items:
                if g in mset:
                    continue
                joined = _closure(G, members, gens + (g,))
                if joined not in found:
                    found[joined] = gens + (g,)
                    nxt.append((joined, gens + (g,)))
        frontier = nxt
    result = tuple(sorted((Subgroup(G, m) for m in found), key=_sort_key))
    for H in result:
        assert G.order % H.order == 0
    G._cache["subgroups"] = result
    return result


def subgroup_generators(H: Subgroup) -> tuple[int, ...]:
    """A small generating set, built greedily from elements of largest order."""
    G = H.parent
    gens: list[int] = []
    current: set[int] = {0}
    for x in sorted(H.members, key=lambda x: (-G.element_order(x), x)):
        if x not in current:
            gens.append(x)
            current = set(_closure(G, current, gens))
            if len(current) == H.order:
                break
    return tuple(gens)


def intersection(*subgroups: Subgroup) -> Subgroup:
    common = set(subgroups[0].members)
    for H in subgroups[1:]:
        common &= H.memberset
    return Subgroup(subgroups[0].parent, tuple(sorted(common)))


def join(H: Subgroup, K: Subgroup) -> Subgroup:
    return subgroup_generated(H.parent, set(H.members) | set(K.members))


def conjugate(H: Subgroup, g: int) -> Subgroup:
    """g H g^-1."""
    G = H.parent
    gi = G.inv(g)
    return Subgroup(G, tuple(sorted(G.mul(G.mul(g, h), gi) for h in H.members)))


def is_normal(G: FiniteGroup, H: Subgroup) -> bool:
    t = G.table
    for g in range(G.order):
        gi = G.inv(g)
        row = t[g]
        for h in H.members:
            if t[row[h]][gi] not in H.memberset:
                return False
    return True


def normal_subgroups(G: FiniteGroup) -> tuple[Subgroup, ...]:
    cached = G._cache.get("normal")
    if cached is None:
        cached = tuple(H for H in all_subgroups(G) if is_normal(G, H))
        G._cache["normal"] = cached
    return cached  # type: ignore[return-value]


def quotient(G: FiniteGroup, N: Subgroup) -> tuple[FiniteGroup, GroupHom]:
    """G/N on cosets ordered by least member; the projection is returned alongside."""
    if not is_normal(G, N):
        raise NotNormal(f"{N} is not normal in {G.label}")
    coset_of = [-1] * G.order
    reps: list[int] = []
    for g in range(G.order):
        if coset_of[g] >= 0:
            continue
        k = len(reps)
        reps.append(g)
        for n in N.members:
            coset_of[G.mul(g, n)] = k
    table = [[coset_of[G.mul(a, b)] for b in reps] for a in reps]
    Q = FiniteGroup(table, f"{G.label}/<{','.join(map(str, N.members))}>", [G.elements[r] for r in reps])
    return Q, GroupHom(G, Q, tuple(coset_of))


def subgroup_as_group(H: Subgroup) -> tuple[FiniteGroup, GroupHom]:
    """H as a group in its own right, with the inclusion homomorphism into its parent."""
    G = H.parent
    pos = {h: i for i, h in enumerate(H.members)}
    table = [[pos[G.mul(a, b)] for b in H.members] for a in H.members]
    K = FiniteGroup(table, f"{G.label}[{','.join(map(str, H.members))}]", [G.elements[h] for h in H.members])
    return K, GroupHom(K, G, H.members)


def is_simple(G: FiniteGroup) -> bool:
    if G.order == 1:
        raise TrivialGroup("the trivial group is neither simple nor non-simple here")
    return len(normal_subgroups(G)) == 2


def minimal_normal_subgroups(G: FiniteGroup) -> tuple[Subgroup, ...]:
    if G.order == 1:
        raise TrivialGroup("the trivial group has no minimal normal subgroup")
    nontrivial = [N for N in normal_subgroups(G) if not N.is_trivial]
    return tuple(N for N in nontrivial
                 if not any(M is not N and M.memberset < N.memberset for M in nontrivial))


def product_set(G: FiniteGroup, H: Subgroup, K: Subgroup) -> frozenset[int]:
    t = G.table
    return frozenset(t[h][k] for h in H.members for k in K.members)


def product_is_group_complement(G: FiniteGroup, H: Subgroup, K: Subgroup) -> bool:
    """True iff K is proper and the products hk cover G."""
    if not K.is_proper:
        return False
    return len(product_set(G, H, K)) == G.order


def coset_action_kernel(G: FiniteGroup, H: Subgroup) -> Subgroup:
    """Largest normal subgroup of G inside H: the intersection of all conjugates of H."""
    common = set(H.members)
    for g in range(G.order):
        common &= conjugate(H, g).memberset
        if len(common) == 1:
            break
    return Subgroup(G, tuple(sorted(common)))


def derived_subgroup(G: FiniteGroup) -> Subgroup:
    comms = {G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b)) for a in range(G.order) for b in range(G.order)}
    return subgroup_generated(G, comms)


def abelian_invariants(G: FiniteGroup) -> tuple[int, ...]:
    """Invariants of the abelianization as sorted prime powers, e.g. (2, 4) for Z2 x Z4."""
    A, _ = quotient(G, derived_subgroup(G))
    n = A.order
    out: list[int] = []
    for p in _prime_factors(n):
        # number of elements with order dividing p^k, for k = 1, 2, ...
        counts = [1]
        k = 1
        while counts[-1] < _ppart(n, p):
            pk = p ** k
            counts.append(sum(1 for a in range(n) if A.power(a, pk) == 0))
            k += 1
        # rank of the p^k layer gives the number of cyclic factors of order >= p^k
        ranks = [_log(counts[i + 1] // counts[i], p) for i in range(len(counts) - 1)]
        for i, r in enumerate(ranks):
            nxt = ranks[i + 1] if i + 1 < len(ranks) else 0
            out.extend([p ** (i + 1)] * (r - nxt))
    return tuple(sorted(out))


def _ppart(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def _log(x: int, p: int) -> int:
    k = 0
    while x > 1:
        x //= p
        k += 1
    return k


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def order_statistics(G: FiniteGroup) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(Counter(G.element_order(a) for a in range(G.order)).items()))


def is_isomorphic(A: FiniteGroup, B: FiniteGroup) -> bool:
    """Brute-force isomorphism test: map a generating set of A and extend along the Cayley graph."""
    if A.order != B.order or order_statistics(A) != order_statistics(B):
        return False
    if A.is_abelian() != B.is_abelian():
        return False
    gens = subgroup_generators(whole_group(A))
    candidates = [[b for b in range(B.order) if B.element_order(b) == A.element_order(g)] for g in gens]
    for images in itertools.product(*candidates):
        phi = _extend_hom(A, B, gens, images)
        if phi is not None and len(set(phi)) == B.order:
            return True
    return False


def _extend_hom(A: FiniteGroup, B: FiniteGroup, gens: Sequence[int], images: Sequence[int]) -> list[int] | None:
    phi = [-1] * A.order
    phi[0] = 0
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g, b in zip(gens, images):
                y, want = A.mul(x, g), B.mul(phi[x], b)
                if phi[y] < 0:
                    phi[y] = want
                    nxt.append(y)
                elif phi[y] != want:
                    return None
        frontier = nxt
    return phi
