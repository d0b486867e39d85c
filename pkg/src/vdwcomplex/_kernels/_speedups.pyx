# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot kernels.

Must stay behaviourally identical to ``vdwcomplex._kernels.pure``:
same results, same search order, same node accounting.
"""

from libc.stdint cimport int64_t, uint64_t
from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector

FOUND = 0
NOT_SHELLABLE = 1
EXHAUSTED = 2


def rank_bareiss(rows, int ncols):
    """Rank over the rationals by fraction-free integer elimination.

    Entries are Python integers (intermediate values are minors of the
    input and can exceed any fixed word size); the compiled win is in
    the loop and indexing overhead.
    """
    cdef int nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return 0
    cdef list m = [list(row) for row in rows]
    cdef int rank = 0, r = 0, c, i, j, piv
    cdef list row_i, row_r
    prev = 1
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if (<list>m[i])[c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        row_r = <list>m[r]
        pivot = row_r[c]
        for i in range(r + 1, nrows):
            row_i = <list>m[i]
            factor = row_i[c]
            for j in range(c + 1, ncols):
                row_i[j] = (row_i[j] * pivot - factor * row_r[j]) // prev
            row_i[c] = 0
        prev = pivot
        rank += 1
        r += 1
        if r == nrows:
            break
    return rank


def rank_mod_p(rows, int ncols, int64_t p):
    """Rank over the field with p elements (p prime, p < 2**31)."""
    cdef int nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return 0
    cdef vector[int64_t] m
    m.resize(nrows * ncols)
    cdef int i, j
    cdef int64_t x
    for i in range(nrows):
        row = rows[i]
        for j in range(ncols):
            x = row[j] % p
            if x < 0:
                x += p
            m[i * ncols + j] = x
    cdef int rank = 0, r = 0, c, piv
    cdef int64_t inv, f, tmp
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if m[i * ncols + c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, ncols):
                tmp = m[r * ncols + j]
                m[r * ncols + j] = m[piv * ncols + j]
                m[piv * ncols + j] = tmp
        inv = _mod_inverse(m[r * ncols + c], p)
        for i in range(r + 1, nrows):
            f = m[i * ncols + c] * inv % p
            if f != 0:
                for j in range(c, ncols):
                    tmp = (m[i * ncols + j] - f * m[r * ncols + j]) % p
                    if tmp < 0:
                        tmp += p
                    m[i * ncols + j] = tmp
        rank += 1
        r += 1
        if r == nrows:
            break
    return rank


cdef int64_t _mod_inverse(int64_t a, int64_t p):
    # Fermat: a**(p-2) mod p
    cdef int64_t result = 1, base = a % p, e = p - 2
    while e > 0:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


cdef struct SearchState:
    int s
    long long nodes
    long long budget


cdef int _extendable(uint64_t fm, uint64_t* placed, int depth):
    cdef uint64_t shed = 0, rest = fm, bit, face
    cdef int gi
    while rest:
        bit = rest & (~rest + 1)
        face = fm ^ bit
        for gi in range(depth):
            if face & ~placed[gi] == 0:
                shed |= bit
                break
        rest ^= bit
    if shed == 0:
        return 0
    for gi in range(depth):
        if shed & ~(fm & placed[gi]) == 0:
            return 0
    return 1


cdef int _dfs(uint64_t placed_mask, int depth, uint64_t* masks, uint64_t* placed,
              int* order, unordered_set[uint64_t]& visited, SearchState* st):
    cdef int f, r
    cdef uint64_t bit
    if depth == st.s:
        return 0  # FOUND
    if visited.count(placed_mask):
        return 1  # NOT_SHELLABLE
    st.nodes += 1
    if st.nodes > st.budget:
        return 2  # EXHAUSTED
    for f in range(st.s):
        bit = (<uint64_t>1) << f
        if placed_mask & bit:
            continue
        if depth > 0 and not _extendable(masks[f], placed, depth):
            continue
        order[depth] = f
        placed[depth] = masks[f]
        r = _dfs(placed_mask | bit, depth + 1, masks, placed, order, visited, st)
        if r != 1:
            return r
    visited.insert(placed_mask)
    return 1


def search_shelling(masks, long long budget):
    """Depth-first shelling-order search; see the pure twin for semantics."""
    cdef int s = len(masks)
    if s == 0:
        return (FOUND, [], 0)
    if s > 64:
        raise ValueError("compiled search supports at most 64 facets")
    cdef uint64_t cmasks[64]
    cdef uint64_t placed[64]
    cdef int order[64]
    cdef int i
    for i in range(s):
        cmasks[i] = masks[i]
    cdef unordered_set[uint64_t] visited
    cdef SearchState st
    st.s = s
    st.nodes = 0
    st.budget = budget
    cdef int status = _dfs(0, 0, cmasks, placed, order, visited, &st)
    if status == 0:
        return (FOUND, [order[i] for i in range(s)], st.nodes)
    return (status, None, st.nodes)
