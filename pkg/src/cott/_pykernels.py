"""Pure-Python search kernels.

This module is the fallback used when the compiled ``_ckernels`` extension is
unavailable.  Both modules expose the same four functions with identical
semantics and deterministic search orders, so they return identical results.

Graphs are passed as lists of adjacency bitmasks, matrices as lists of row
bitmasks.
"""

from __future__ import annotations

from itertools import permutations

__all__ = [
    "sim_staircase_search",
    "ind_staircase_search",
    "sim_staircase_brute",
    "induced_embedding",
]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def sim_staircase_search(adj: list[int], n: int, loops: int) -> list[int] | None:
    """One ordering applied to rows and columns of the augmented matrix.

    The augmented matrix is ``adj`` with diagonal bits from ``loops``.  Returns
    ``order`` (``order[p]`` is the vertex at position ``p``) such that no zero
    has a 1 to its right and a 1 below it, or ``None`` if no such order exists.

    Positions are filled from the back.  Once a vertex has a placed neighbour
    its last-1 position is final, so most violations are detected as soon as
    they become inevitable.
    """
    if n == 0:
        return []
    full = (1 << n) - 1
    aug = [adj[v] | (((loops >> v) & 1) << v) for v in range(n)]
    nonadj = [full & ~aug[v] for v in range(n)]
    pos = [-1] * n
    last = [-1] * n
    order = [-1] * n

    def violated(placed: int) -> bool:
        for u in range(n):
            lu = last[u]
            if lu < 0:
                continue
            pu = pos[u]
            if pu < 0 and (nonadj[u] >> u) & 1:
                # loopless vertex with a 1 after it in both its row and column
                return True
            for v in _bits(nonadj[u] & placed):
                if pos[v] < lu:
                    lv = last[v]
                    if pu >= 0:
                        if lv > pu:
                            return True
                    elif lv >= 0:
                        return True
        return False

    def rec(p: int, placed: int) -> bool:
        if p == 0:
            return True
        position = p - 1
        tried = set()
        for x in range(n):
            if (placed >> x) & 1 or aug[x] in tried:
                continue
            tried.add(aug[x])
            pos[x] = position
            changed = [y for y in _bits(aug[x]) if last[y] < 0]
            for y in changed:
                last[y] = position
            now = placed | (1 << x)
            if not violated(now):
                order[position] = x
                if rec(position, now):
                    return True
            for y in changed:
                last[y] = -1
            pos[x] = -1
        return False

    return order if rec(n, 0) else None


def ind_staircase_search(
    rows: list[int], n_rows: int, n_cols: int
) -> tuple[list[int], list[int]] | None:
    """Independent row and column orders making the matrix staircase-free.

    Rows are placed top-down.  With the set of rows below a placed row known,
    every zero of that row with a 1 below it forces all 1-columns of the row
    to precede the zero's column; a column order exists iff these precedence
    constraints are acyclic.
    """
    cols = [0] * n_cols
    for i in range(n_rows):
        for j in _bits(rows[i]):
            cols[j] |= 1 << i
    full_cols = (1 << n_cols) - 1
    reach = [0] * n_cols  # reach[c]: columns that must come after c
    row_order: list[int] = []

    def rec(remaining: int) -> bool:
        if not remaining:
            return True
        tried = set()
        for r in _bits(remaining):
            if rows[r] in tried:
                continue
            tried.add(rows[r])
            rest = remaining & ~(1 << r)
            ones = rows[r]
            targets = 0
            for j in _bits(full_cols & ~ones):
                if cols[j] & rest:
                    targets |= 1 << j
            saved = None
            if ones and targets:
                if any(reach[t] & ones for t in _bits(targets)):
                    continue
                desc = targets
                for t in _bits(targets):
                    desc |= reach[t]
                saved = reach[:]
                for x in range(n_cols):
                    if (ones >> x) & 1 or reach[x] & ones:
                        reach[x] |= desc
            row_order.append(r)
            if rec(rest):
                return True
            row_order.pop()
            if saved is not None:
                reach[:] = saved
        return False

    if not rec((1 << n_rows) - 1):
        return None
    col_order: list[int] = []
    left = full_cols
    while left:
        for c in _bits(left):
            if not any((reach[x] >> c) & 1 for x in _bits(left)):
                col_order.append(c)
                left &= ~(1 << c)
                break
    return row_order, col_order


def sim_staircase_brute(adj: list[int], n: int, loops: int) -> list[int] | None:
    """Plain scan of all ``n!`` simultaneous orders; first staircase-free one wins."""
    aug = [adj[v] | (((loops >> v) & 1) << v) for v in range(n)]
    for order in permutations(range(n)):
        pos = [0] * n
        for p, v in enumerate(order):
            pos[v] = p
        prow = []
        for v in order:
            m = 0
            for u in _bits(aug[v]):
                m |= 1 << pos[u]
            prow.append(m)
        ok = True
        for i in range(n):
            for j in range(n):
                if (prow[i] >> j) & 1:
                    continue
                # symmetric matrix: column j equals row j
                if prow[i] >> (j + 1) and prow[j] >> (i + 1):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return list(order)
    return None


def induced_embedding(
    host: list[int], nh: int, pattern: list[int], npat: int, exact_degree: bool = False
) -> list[int] | None:
    """Injective map of pattern vertices into the host preserving edges and non-edges.

    ``result[i]`` is the host vertex for pattern vertex ``i``.  Pattern
    vertices are matched in a connectivity-first order; candidates are pruned
    by degree (equal degree when ``exact_degree``).
    """
    if npat > nh:
        return None
    if npat == 0:
        return []
    hdeg = [host[v].bit_count() for v in range(nh)]
    pdeg = [pattern[v].bit_count() for v in range(npat)]
    # match order: repeatedly take the vertex with most already-ordered neighbours
    seq: list[int] = []
    chosen = 0
    for _ in range(npat):
        best, key = -1, None
        for v in range(npat):
            if (chosen >> v) & 1:
                continue
            k = ((pattern[v] & chosen).bit_count(), pdeg[v], -v)
            if key is None or k > key:
                best, key = v, k
        seq.append(best)
        chosen |= 1 << best
    image = [-1] * npat
    used = 0

    def rec(k: int) -> bool:
        nonlocal used
        if k == npat:
            return True
        p = seq[k]
        want = 0
        mapped = 0
        for q in seq[:k]:
            mapped |= 1 << image[q]
            if (pattern[p] >> q) & 1:
                want |= 1 << image[q]
        for h in range(nh):
            if (used >> h) & 1:
                continue
            if exact_degree:
                if hdeg[h] != pdeg[p]:
                    continue
            elif hdeg[h] < pdeg[p]:
                continue
            if host[h] & mapped != want:
                continue
            image[p] = h
            used |= 1 << h
            if rec(k + 1):
                return True
            used &= ~(1 << h)
            image[p] = -1
        return False

    return image if rec(0) else None
