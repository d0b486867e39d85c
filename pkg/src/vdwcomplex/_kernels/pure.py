"""Pure-Python implementations of the hot kernels.

Mirrors ``_speedups`` (the optional compiled extension) exactly:
identical results, identical search order, identical node accounting.
"""

from __future__ import annotations

FOUND = 0
NOT_SHELLABLE = 1
EXHAUSTED = 2


def rank_bareiss(rows: list[list[int]], ncols: int) -> int:
    """Rank of an integer matrix over the rationals.

    Fraction-free (Bareiss) elimination: every intermediate entry is a
    minor of the input, every division is exact, so the computation
    stays in arbitrary-precision integers.
    """
    m = [list(row) for row in rows]
    nrows = len(m)
    if nrows == 0 or ncols == 0:
        return 0
    rank = 0
    prev = 1
    r = 0
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if m[i][c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        pivot = m[r][c]
        for i in range(r + 1, nrows):
            row_i = m[i]
            factor = row_i[c]
            row_r = m[r]
            for j in range(c + 1, ncols):
                row_i[j] = (row_i[j] * pivot - factor * row_r[j]) // prev
            row_i[c] = 0
        prev = pivot
        rank += 1
        r += 1
        if r == nrows:
            break
    return rank


def rank_mod_p(rows: list[list[int]], ncols: int, p: int) -> int:
    """Rank of an integer matrix over the field with p elements (p prime)."""
    nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return 0
    if p == 2:
        return _rank_mod_2(rows)
    m = [[x % p for x in row] for row in rows]
    rank = 0
    r = 0
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        row_r = m[r]
        for i in range(r + 1, nrows):
            row_i = m[i]
            f = row_i[c] * inv % p
            if f:
                for j in range(c, ncols):
                    row_i[j] = (row_i[j] - f * row_r[j]) % p
        rank += 1
        r += 1
        if r == nrows:
            break
    return rank


def _rank_mod_2(rows: list[list[int]]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        bits = 0
        for j, x in enumerate(row):
            if x & 1:
                bits |= 1 << j
        while bits:
            low = (bits & -bits).bit_length() - 1
            other = pivots.get(low)
            if other is None:
                pivots[low] = bits
                rank += 1
                break
            bits ^= other
    return rank


def search_shelling(masks: list[int], budget: int) -> tuple[int, list[int] | None, int]:
    """Depth-first search for a shelling order of a pure facet list.

    A facet extends a prefix iff the set of its faces already covered by
    placed facets is a nonempty union of its codimension-1 faces.  States
    (sets of placed facets) that exhausted without completing are
    memoized, so the search never revisits a dead prefix.

    Returns ``(status, order, nodes)`` with status FOUND / NOT_SHELLABLE /
    EXHAUSTED; ``order`` lists facet indices when status is FOUND; nodes
    counts expanded states (compared against ``budget``).
    """
    s = len(masks)
    if s == 0:
        return (FOUND, [], 0)
    order = [0] * s
    placed: list[int] = []
    visited: set[int] = set()
    nodes = 0

    def extendable(fm: int) -> bool:
        shed = 0
        rest = fm
        while rest:
            bit = rest & -rest
            face = fm ^ bit
            for g in placed:
                if face & ~g == 0:
                    shed |= bit
                    break
            rest ^= bit
        if shed == 0:
            return False
        for g in placed:
            if shed & ~(fm & g) == 0:
                return False
        return True

    def dfs(placed_mask: int, depth: int) -> int:
        nonlocal nodes
        if depth == s:
            return FOUND
        if placed_mask in visited:
            return NOT_SHELLABLE
        nodes += 1
        if nodes > budget:
            return EXHAUSTED
        for f in range(s):
            bit = 1 << f
            if placed_mask & bit:
                continue
            if depth > 0 and not extendable(masks[f]):
                continue
            order[depth] = f
            placed.append(masks[f])
            r = dfs(placed_mask | bit, depth + 1)
            placed.pop()
            if r != NOT_SHELLABLE:
                return r
        visited.add(placed_mask)
        return NOT_SHELLABLE

    status = dfs(0, 0)
    return (status, order if status == FOUND else None, nodes)
