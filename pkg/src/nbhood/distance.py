"""Levenshtein distance and optimal-alignment machinery.

Besides the distance itself, this module reconstructs optimal alignments,
exhaustively enumerates all of them (small inputs only), and selects the
*leftmost* optimal alignment: among all minimum-cost alignments, first
minimize the number k of match/mismatch columns, then take the
lexicographically smallest sequence of their column indices. Ties beyond
that order are broken by the column-class sequence (match < mismatch <
insertion < deletion, compared left to right), which makes the selection
a total order and the result fully deterministic.
"""
from __future__ import annotations

from .core import (
    Alignment,
    BudgetError,
    Column,
    DELETION,
    INSERTION,
    MATCH,
    MISMATCH,
    Word,
    require_same_alphabet,
)

DEFAULT_ORACLE_MAX_LEN = 12

_CLASS_CODE = {MATCH: 0, MISMATCH: 1, INSERTION: 2, DELETION: 3}


def _dist(a: str, b: str, limit: int | None = None) -> int:
    """Edit distance between raw strings.

    With ``limit`` set, values saturate at ``limit + 1``: the result is the
    exact distance when it is <= limit and ``limit + 1`` otherwise, which
    leaves every ``<= limit`` decision intact while keeping cells small
    and enabling an early exit once a whole row exceeds the limit.
    """
    if len(a) < len(b):
        a, b = b, a
    n = len(b)
    if limit is not None and len(a) - n > limit:
        return limit + 1
    prev = list(range(n + 1))
    for i, ca in enumerate(a, start=1):
        cur = [i]
        best = i
        for j in range(1, n + 1):
            v = min(
                prev[j] + 1,
                cur[j - 1] + 1,
                prev[j - 1] + (ca != b[j - 1]),
            )
            if limit is not None and v > limit:
                v = limit + 1
            cur.append(v)
            if v < best:
                best = v
        if limit is not None and best > limit:
            return limit + 1
        prev = cur
    return prev[n]


def levenshtein(u: Word, v: Word) -> int:
    """Minimum number of insertions, deletions, and substitutions turning u into v."""
    require_same_alphabet(u, v)
    return _dist(u.text, v.text)


def _prefix_table(a: str, b: str) -> list[list[int]]:
    """dp[i][j] = distance between a[:i] and b[:j]."""
    dp = [list(range(len(b) + 1))]
    for i in range(1, len(a) + 1):
        row = [i]
        for j in range(1, len(b) + 1):
            row.append(
                min(
                    dp[i - 1][j] + 1,
                    row[j - 1] + 1,
                    dp[i - 1][j - 1] + (a[i - 1] != b[j - 1]),
                )
            )
        dp.append(row)
    return dp


def _suffix_table(a: str, b: str) -> list[list[int]]:
    """sfx[i][j] = distance between a[i:] and b[j:]."""
    m, n = len(a), len(b)
    sfx = [[0] * (n + 1) for _ in range(m + 1)]
    for j in range(n + 1):
        sfx[m][j] = n - j
    for i in range(m - 1, -1, -1):
        sfx[i][n] = m - i
        for j in range(n - 1, -1, -1):
            sfx[i][j] = min(
                sfx[i + 1][j] + 1,
                sfx[i][j + 1] + 1,
                sfx[i + 1][j + 1] + (a[i] != b[j]),
            )
    return sfx


def optimal_alignment(u: Word, v: Word) -> Alignment:
    """Some minimum-cost alignment with u on the top row and v on the bottom."""
    require_same_alphabet(u, v)
    a, b = u.text, v.text
    dp = _prefix_table(a, b)
    cols: list[Column] = []
    i, j = len(a), len(b)
    while i > 0 or j > 0:
        if i > 0 and j > 0 and dp[i][j] == dp[i - 1][j - 1] + (a[i - 1] != b[j - 1]):
            cols.append(Column(a[i - 1], b[j - 1]))
            i, j = i - 1, j - 1
        elif i > 0 and dp[i][j] == dp[i - 1][j] + 1:
            cols.append(Column(a[i - 1], None))
            i -= 1
        else:
            cols.append(Column(None, b[j - 1]))
            j -= 1
    cols.reverse()
    return Alignment(tuple(cols))


def enumerate_optimal_alignments(
    u: Word, v: Word, max_len: int = DEFAULT_ORACLE_MAX_LEN
) -> tuple[Alignment, ...]:
    """All distinct minimum-cost alignments between u (top) and v (bottom).

    Exhaustive over the dynamic-programming path graph, so it refuses
    inputs longer than ``max_len`` rather than truncating.
    """
    require_same_alphabet(u, v)
    if len(u) > max_len or len(v) > max_len:
        raise BudgetError(
            f"alignment enumeration limited to words of length <= {max_len}"
        )
    a, b = u.text, v.text
    m, n = len(a), len(b)
    dp = _prefix_table(a, b)
    sfx = _suffix_table(a, b)
    d = dp[m][n]

    out: list[Alignment] = []
    acc: list[Column] = []

    def walk(i: int, j: int) -> None:
        if i == m and j == n:
            out.append(Alignment(tuple(acc)))
            return
        if i < m and j < n:
            c = 0 if a[i] == b[j] else 1
            if dp[i + 1][j + 1] == dp[i][j] + c and dp[i + 1][j + 1] + sfx[i + 1][j + 1] == d:
                acc.append(Column(a[i], b[j]))
                walk(i + 1, j + 1)
                acc.pop()
        if i < m and dp[i + 1][j] == dp[i][j] + 1 and dp[i + 1][j] + sfx[i + 1][j] == d:
            acc.append(Column(a[i], None))
            walk(i + 1, j)
            acc.pop()
        if j < n and dp[i][j + 1] == dp[i][j] + 1 and dp[i][j + 1] + sfx[i][j + 1] == d:
            acc.append(Column(None, b[j]))
            walk(i, j + 1)
            acc.pop()

    walk(0, 0)
    return tuple(out)


def mm_index_sequence(alignment: Alignment) -> tuple[int, ...]:
    """1-based positions of the match/mismatch columns, strictly increasing."""
    return tuple(
        i for i, c in enumerate(alignment.columns, start=1) if c.kind in (MATCH, MISMATCH)
    )


def alignment_order_key(alignment: Alignment):
    """Sort key realizing the leftmost order.

    Primary: number of match/mismatch columns. Secondary: their index
    sequence, lexicographically. Tertiary: the per-column class codes
    (match < mismatch < insertion < deletion), which distinguish any two
    distinct alignments of the same word pair.
    """
    indices = mm_index_sequence(alignment)
    codes = tuple(_CLASS_CODE[c.kind] for c in alignment.columns)
    return (len(indices), indices, codes)


def leftmost_optimal_alignment(top: Word, bottom: Word) -> Alignment:
    """The minimum alignment under :func:`alignment_order_key`.

    Runs a level-synchronized sweep over the graph of optimal alignment
    paths, one level per emitted column. All partial paths kept at a level
    share the same match/mismatch index prefix; a level that can place a
    match/mismatch column always does (any path that defers one is
    lexicographically larger), and the class-code prefix stored per cell
    settles the remaining ties. Exact, and checked against the exhaustive
    enumeration in the test suite.
    """
    require_same_alphabet(top, bottom)
    a, b = top.text, bottom.text
    m, n = len(a), len(b)
    dp = _prefix_table(a, b)
    sfx = _suffix_table(a, b)
    d = dp[m][n]

    # Fewest diagonal (match/mismatch) steps over optimal completions of
    # each cell that lies on an optimal path.
    kmin: list[list[int | None]] = [[None] * (n + 1) for _ in range(m + 1)]
    kmin[m][n] = 0
    for i in range(m, -1, -1):
        for j in range(n, -1, -1):
            if (i, j) == (m, n) or dp[i][j] + sfx[i][j] != d:
                continue
            best: int | None = None
            if i < m and j < n:
                c = 0 if a[i] == b[j] else 1
                if dp[i + 1][j + 1] == dp[i][j] + c and kmin[i + 1][j + 1] is not None:
                    best = 1 + kmin[i + 1][j + 1]
            if i < m and dp[i + 1][j] == dp[i][j] + 1 and kmin[i + 1][j] is not None:
                v = kmin[i + 1][j]
                best = v if best is None else min(best, v)
            if j < n and dp[i][j + 1] == dp[i][j] + 1 and kmin[i][j + 1] is not None:
                v = kmin[i][j + 1]
                best = v if best is None else min(best, v)
            kmin[i][j] = best

    k_total = kmin[0][0]
    assert k_total is not None
    end = (m, n)
    # cell -> lexicographically smallest class-code prefix reaching it
    frontier: dict[tuple[int, int], tuple[int, ...]] = {(0, 0): ()}
    k_used = 0
    while end not in frontier:
        diag_bucket: dict[tuple[int, int], tuple[int, ...]] = {}
        gap_bucket: dict[tuple[int, int], tuple[int, ...]] = {}

        def offer(bucket, cell, seq):
            cur = bucket.get(cell)
            if cur is None or seq < cur:
                bucket[cell] = seq

        for (i, j), prefix in frontier.items():
            if i < m and j < n:
                c = 0 if a[i] == b[j] else 1
                if (
                    dp[i + 1][j + 1] == dp[i][j] + c
                    and kmin[i + 1][j + 1] == k_total - k_used - 1
                ):
                    offer(diag_bucket, (i + 1, j + 1), prefix + (c,))
            if i < m and dp[i + 1][j] == dp[i][j] + 1 and kmin[i + 1][j] == k_total - k_used:
                offer(gap_bucket, (i + 1, j), prefix + (_CLASS_CODE[DELETION],))
            if j < n and dp[i][j + 1] == dp[i][j] + 1 and kmin[i][j + 1] == k_total - k_used:
                offer(gap_bucket, (i, j + 1), prefix + (_CLASS_CODE[INSERTION],))

        if diag_bucket:
            frontier = diag_bucket
            k_used += 1
        else:
            frontier = gap_bucket

    cols: list[Column] = []
    i = j = 0
    for code in frontier[end]:
        if code <= 1:
            cols.append(Column(a[i], b[j]))
            i += 1
            j += 1
        elif code == _CLASS_CODE[INSERTION]:
            cols.append(Column(None, b[j]))
            j += 1
        else:
            cols.append(Column(a[i], None))
            i += 1
    return Alignment(tuple(cols))
