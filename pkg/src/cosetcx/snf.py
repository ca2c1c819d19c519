"""Exact Smith normal form invariants over the integers.

Matrices arrive as sparse columns (``dict`` row -> nonzero int).  Boundary matrices
are first brought to column-echelon form by unimodular column operations
(lowest-row pivots, extended-gcd steps when a pivot entry is not a unit).  If every
pivot is a unit the invariant factors are all 1; otherwise the echelon columns go
through unit-pivot sparse elimination and the leftover block is diagonalised
densely.  All arithmetic is on Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Column = dict[int, int]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = s*a + t*b = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def _axpy(col: Column, other: Column, q: int) -> None:
    """col += q * other, in place, dropping zeros."""
    for k, v in other.items():
        nv = col.get(k, 0) + q * v
        if nv:
            col[k] = nv
        else:
            col.pop(k, None)


def _combine(a: Column, x: int, b: Column, y: int) -> Column:
    out = {k: x * v for k, v in a.items()} if x else {}
    if y:
        _axpy(out, b, y)
    return {k: v for k, v in out.items() if v}


@dataclass
class EchelonResult:
    rank: int
    invariants: list[int]  # invariant factors > 1, ascending
    unit_pivot_rows: set[int]


def column_echelon(columns: Iterable[Column]) -> tuple[dict[int, Column], bool]:
    """Reduce columns so that nonzero ones have distinct lowest rows.

    Returns the reduced columns keyed by their lowest row, and whether every
    pivot entry is a unit.
    """
    by_low: dict[int, Column] = {}
    for source in columns:
        col = dict(source)
        while col:
            r = max(col)
            a = col[r]
            piv = by_low.get(r)
            if piv is None:
                by_low[r] = col
                break
            b = piv[r]
            if a % b == 0:
                _axpy(col, piv, -(a // b))
                continue
            g, s, t = xgcd(b, a)
            # [[s, a/g], [t, -b/g]] has determinant -1, so the pair still spans the same lattice
            by_low[r] = _combine(piv, s, col, t)
            col = _combine(piv, a // g, col, -(b // g))
    units = all(abs(c[r]) == 1 for r, c in by_low.items())
    return by_low, units


def smith_invariants_sparse(columns: Sequence[Column]) -> list[int]:
    """All nonzero invariant factors (ones included), ascending."""
    cols: dict[int, Column] = {j: dict(c) for j, c in enumerate(columns) if c}
    rows: dict[int, set[int]] = {}
    for j, c in cols.items():
        for r in c:
            rows.setdefault(r, set()).add(j)
    ones = 0
    while True:
        pivot = _pick_unit_pivot(cols, rows)
        if pivot is None:
            break
        r, j = pivot
        u = cols[j][r]
        pcol = cols.pop(j)
        for r2 in pcol:
            rows[r2].discard(j)
        for j2 in list(rows[r]):
            c2 = cols[j2]
            q = -c2[r] * u
            before = set(c2)
            _axpy(c2, pcol, q)
            after = set(c2)
            for r2 in before - after:
                rows[r2].discard(j2)
            for r2 in after - before:
                rows.setdefault(r2, set()).add(j2)
            if not c2:
                del cols[j2]
        # row r is now zero outside the pivot column; drop it
        for j2 in list(rows.get(r, ())):
            cols[j2].pop(r, None)
            if not cols[j2]:
                del cols[j2]
        rows.pop(r, None)
        ones += 1
    rest = dense_smith_invariants(_to_dense(cols))
    return [1] * ones + rest


def _pick_unit_pivot(cols: dict[int, Column], rows: dict[int, set[int]]) -> tuple[int, int] | None:
    best = None
    best_cost = None
    for j, c in cols.items():
        for r, v in c.items():
            if v == 1 or v == -1:
                cost = (len(c) - 1) * (len(rows[r]) - 1)
                if best_cost is None or cost < best_cost:
                    best, best_cost = (r, j), cost
                    if cost == 0:
                        return best
    return best


def _to_dense(cols: dict[int, Column]) -> list[list[int]]:
    if not cols:
        return []
    row_ids = sorted({r for c in cols.values() for r in c})
    pos = {r: i for i, r in enumerate(row_ids)}
    mat = [[0] * len(cols) for _ in row_ids]
    for jj, j in enumerate(sorted(cols)):
        for r, v in cols[j].items():
            mat[pos[r]][jj] = v
    return mat


def dense_smith_invariants(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal of the Smith normal form of a dense integer matrix, ascending."""
    A = [list(row) for row in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    diag: list[int] = []
    t = 0
    while t < min(m, n):
        # smallest nonzero entry in the remaining block
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < abs(A[best[0]][best[1]])):
                    best = (i, j)
                    if abs(v) == 1:
                        break
            if best is not None and abs(A[best[0]][best[1]]) == 1:
                break
        if best is None:
            break
        i, j = best
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    if q:
                        Ai, At = A[i], A[t]
                        for k in range(t, n):
                            Ai[k] -= q * At[k]
                    if A[i][t]:
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // p
                    if q:
                        for row in A[t:]:
                            row[j] -= q * row[t]
                    if A[t][j]:
                        done = False
            if done:
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
                if bad is None:
                    break
                At, Ai = A[t], A[bad[0]]
                for k in range(t, n):
                    At[k] += Ai[k]
                continue
            # move the smallest nonzero entry of row t / column t into the pivot spot
            cands = [(abs(A[i][t]), i, t) for i in range(t, m) if A[i][t]]
            cands += [(abs(A[t][j]), t, j) for j in range(t, n) if A[t][j]]
            _, i, j = min(cands)
            A[t], A[i] = A[i], A[t]
            for row in A:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    return sorted(diag)


def echelon_invariants(columns: Iterable[Column]) -> EchelonResult:
    """Rank and non-unit invariant factors of the matrix with the given columns."""
    by_low, units = column_echelon(columns)
    unit_rows = {r for r, c in by_low.items() if abs(c[r]) == 1}
    if units:
        return EchelonResult(len(by_low), [], unit_rows)
    inv = smith_invariants_sparse(list(by_low.values()))
    return EchelonResult(len(inv), [d for d in inv if d > 1], unit_rows)


def rank_mod_p(columns: Iterable[Column], p: int = 32003) -> int:
    """Rank over GF(p); a cross-check, never the primary path."""
    by_low: dict[int, Column] = {}
    for source in columns:
        col = {k: v % p for k, v in source.items() if v % p}
        while col:
            r = max(col)
            piv = by_low.get(r)
            if piv is None:
                inv = pow(col[r], -1, p)
                by_low[r] = {k: v * inv % p for k, v in col.items()}
                break
            q = col[r]
            for k, v in piv.items():
                nv = (col.get(k, 0) - q * v) % p
                if nv:
                    col[k] = nv
                else:
                    col.pop(k, None)
    return len(by_low)
