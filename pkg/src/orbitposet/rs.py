"""Row-insertion correspondence and the witness criterion for codimension one.

``rs_pair`` sends a permutation word to its (insertion, recording) pair of
standard Young tableaux; ``rs_word`` inverts it.  A two-column tableau with
column lengths ``(n-k, k)`` is itself a standard tableau whose rows are the
tableau's rows, so the conversion between the two views is direct.

``find_rs_witness(T, S)`` searches for a tableau P and an index m such that
the words of (T, P) and (S, P) differ by swapping the values m and m+1; for
column shape ``(n-2, 2)`` such a witness exists exactly when the two orbit
closures intersect in codimension one.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .errors import NotAPermutation, ShapeMismatch
from .tableaux import TwoColumnTableau, enumerate_tableaux


@dataclass(frozen=True, order=True)
class StandardTableau:
    """Standard Young tableau: rows of a partition filled bijectively by 1..n,
    increasing along rows and down columns."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        lens = [len(r) for r in self.rows]
        if not lens or any(l == 0 for l in lens):
            raise ShapeMismatch("rows must be nonempty")
        if any(lens[i] < lens[i + 1] for i in range(len(lens) - 1)):
            raise ShapeMismatch("row lengths must weakly decrease")
        entries = [x for row in self.rows for x in row]
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise NotAPermutation("entries must be exactly 1..n")
        for row in self.rows:
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                raise ShapeMismatch("rows must strictly increase")
        for r in range(len(self.rows) - 1):
            for c in range(len(self.rows[r + 1])):
                if self.rows[r][c] >= self.rows[r + 1][c]:
                    raise ShapeMismatch("columns must strictly increase")

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)


def rs_pair(word: tuple[int, ...] | list[int]) -> tuple[StandardTableau, StandardTableau]:
    """Row-insert a permutation word; returns (insertion, recording) tableaux."""
    w = tuple(word)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise NotAPermutation(f"{w} is not a permutation of 1..{len(w)}")
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, value in enumerate(w, start=1):
        x = value
        r = 0
        while True:
            if r == len(p_rows):
                p_rows.append([x])
                q_rows.append([step])
                break
            row = p_rows[r]
            pos = bisect_left(row, x)
            if pos == len(row):
                row.append(x)
                q_rows[r].append(step)
                break
            row[pos], x = x, row[pos]
            r += 1
    return (
        StandardTableau(tuple(tuple(r) for r in p_rows)),
        StandardTableau(tuple(tuple(r) for r in q_rows)),
    )


def rs_word(p_tab: StandardTableau, q_tab: StandardTableau) -> tuple[int, ...]:
    """Invert :func:`rs_pair`: the word whose insertion pair is (p_tab, q_tab)."""
    if p_tab.shape != q_tab.shape:
        raise ShapeMismatch(f"shapes differ: {p_tab.shape} vs {q_tab.shape}")
    rows = [list(r) for r in p_tab.rows]
    row_of_step = {}
    for r, row in enumerate(q_tab.rows):
        for v in row:
            row_of_step[v] = r
    word: list[int] = []
    for step in range(p_tab.n, 0, -1):
        # the box recorded at this step is rightmost in its row once all
        # later steps have been removed
        r = row_of_step[step]
        x = rows[r].pop()
        for rr in range(r - 1, -1, -1):
            row = rows[rr]
            idx = bisect_left(row, x) - 1
            row[idx], x = x, row[idx]
        word.append(x)
    word.reverse()
    return tuple(word)


def standard_from_two_column(tab: TwoColumnTableau) -> StandardTableau:
    """Read a two-column tableau as a standard tableau row by row."""
    rows = []
    for r, first in enumerate(tab.col1):
        if r < len(tab.col2):
            rows.append((first, tab.col2[r]))
        else:
            rows.append((first,))
    return StandardTableau(tuple(rows))


def two_column_from_standard(tab: StandardTableau) -> TwoColumnTableau:
    """Inverse of :func:`standard_from_two_column` (needs at most 2 columns)."""
    if tab.shape[0] > 2:
        raise ShapeMismatch("tableau has more than two columns")
    col1 = tuple(row[0] for row in tab.rows)
    col2 = tuple(row[1] for row in tab.rows if len(row) == 2)
    return TwoColumnTableau(col1, col2)


def swap_values(word: tuple[int, ...], m: int) -> tuple[int, ...]:
    """Exchange the values m and m+1 inside the word."""
    return tuple(m + 1 if x == m else m if x == m + 1 else x for x in word)


def find_rs_witness(
    tab_t: TwoColumnTableau, tab_s: TwoColumnTableau
) -> tuple[TwoColumnTableau, int] | None:
    """Search for (P, m) with word(T, P) equal to word(S, P) after swapping
    the values m and m+1.

    The scan is deterministic: candidate tableaux in lexicographic order,
    then m ascending; the first hit is returned, None if there is none
    (including the degenerate case T equal to S).
    """
    if tab_t.shape != tab_s.shape:
        raise ShapeMismatch(f"shapes differ: {tab_t.shape} vs {tab_s.shape}")
    if tab_t == tab_s:
        return None
    n, k = tab_t.n, tab_t.k
    t_std = standard_from_two_column(tab_t)
    s_std = standard_from_two_column(tab_s)
    for cand in enumerate_tableaux(n, k):
        p_std = standard_from_two_column(cand)
        wt = rs_word(t_std, p_std)
        ws = rs_word(s_std, p_std)
        for m in range(1, n):
            if wt == swap_values(ws, m):
                return cand, m
    return None
