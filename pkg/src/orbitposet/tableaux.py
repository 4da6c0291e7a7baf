"""Two-column standard Young tableaux and the maximal-orbit correspondence.

A two-column tableau with column lengths ``(n-k, k)`` indexes the maximal
orbits of cycle count ``k``: the greedy pairing ``sigma_T`` sends it to an
involution of maximal dimension ``k*(n-k)``, and ``tableau_of`` inverts that
map.  Exchanging one entry between the columns (``change``) realises the
codimension-one intersections of two maximal orbit closures; the two
candidate rules below enumerate exactly the exchanges that work.

Text format: columns separated by ``|``, entries comma-separated, e.g.
``"1,2,3,6|4,5,7,8"``; a single-column tableau is written without the bar.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .errors import InvalidTableau, NotInColumn, OutOfRange, ParseError
from .involutions import Involution, Pair, canonicalize, dimension
from .moves import ancestors, descendants


def _check_columns(col1: tuple[int, ...], col2: tuple[int, ...]) -> None:
    n = len(col1) + len(col2)
    if n < 1:
        raise InvalidTableau("empty tableau")
    for col in (col1, col2):
        if any(col[i] >= col[i + 1] for i in range(len(col) - 1)):
            raise InvalidTableau("column entries must strictly increase")
    if set(col1) | set(col2) != set(range(1, n + 1)) or set(col1) & set(col2):
        raise InvalidTableau(f"columns must partition 1..{n}")


def _parse_columns(text: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    compact = "".join(text.split())
    parts = compact.split("|")
    if len(parts) > 2 or not parts[0]:
        raise ParseError(f"cannot parse tableau from {text!r}")
    try:
        col1 = tuple(int(x) for x in parts[0].split(","))
        col2 = tuple(int(x) for x in parts[1].split(",")) if len(parts) == 2 and parts[1] else ()
    except ValueError as exc:
        raise ParseError(f"cannot parse tableau from {text!r}") from exc
    return col1, col2


def _format_columns(col1: tuple[int, ...], col2: tuple[int, ...]) -> str:
    first = ",".join(str(x) for x in col1)
    if not col2:
        return first
    return first + "|" + ",".join(str(x) for x in col2)


@dataclass(frozen=True, order=True)
class ColumnPairArray:
    """Two disjoint increasing columns partitioning 1..n, rows unconstrained.

    This is the raw result type of :func:`change`; it becomes a tableau only
    when every row increases left to right.
    """

    col1: tuple[int, ...]
    col2: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_columns(self.col1, self.col2)

    @property
    def n(self) -> int:
        return len(self.col1) + len(self.col2)

    @property
    def k(self) -> int:
        return len(self.col2)

    def is_tableau(self) -> bool:
        if len(self.col1) < len(self.col2):
            return False
        return all(a < b for a, b in zip(self.col1, self.col2))

    def to_tableau(self) -> "TwoColumnTableau":
        return TwoColumnTableau(self.col1, self.col2)

    def __str__(self) -> str:
        return _format_columns(self.col1, self.col2)

    @classmethod
    def parse(cls, text: str) -> "ColumnPairArray":
        return cls(*_parse_columns(text))


@dataclass(frozen=True, order=True)
class TwoColumnTableau:
    """Standard two-column Young tableau, column lengths ``(n-k, k)``."""

    col1: tuple[int, ...]
    col2: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_columns(self.col1, self.col2)
        if len(self.col1) < len(self.col2):
            raise InvalidTableau("first column must be at least as long as the second")
        if any(a >= b for a, b in zip(self.col1, self.col2)):
            raise InvalidTableau("rows must increase from left to right")

    @property
    def n(self) -> int:
        return len(self.col1) + len(self.col2)

    @property
    def k(self) -> int:
        return len(self.col2)

    @property
    def shape(self) -> tuple[int, int]:
        """Column lengths ``(n-k, k)``."""
        return (len(self.col1), len(self.col2))

    def __str__(self) -> str:
        return _format_columns(self.col1, self.col2)

    @classmethod
    def parse(cls, text: str) -> "TwoColumnTableau":
        return cls(*_parse_columns(text))


def sigma_pairs_by_b(tab: TwoColumnTableau) -> tuple[Pair, ...]:
    """Greedy pairing in second-column order.

    Each second-column entry b grabs the largest still-free first-column
    entry below it.  The result lists pairs by increasing b, which is the
    presentation the exchange rules below are indexed against.
    """
    free = set(tab.col1)
    pairs: list[Pair] = []
    for b in tab.col2:
        i = max(d for d in free if d < b)
        free.remove(i)
        pairs.append((i, b))
    return tuple(pairs)


def sigma_T(tab: TwoColumnTableau) -> Involution:
    """The maximal-dimension involution attached to the tableau."""
    pairs = sigma_pairs_by_b(tab)
    assert all((b - a) % 2 == 1 for a, b in pairs)  # gaps are always odd
    return canonicalize(pairs, tab.n)


def tableau_of(inv: Involution) -> TwoColumnTableau | None:
    """Invert :func:`sigma_T`; None unless the orbit dimension is maximal."""
    k, n = inv.length, inv.n
    if dimension(inv) != k * (n - k):
        return None
    col2 = tuple(sorted(b for _, b in inv.pairs))
    col1 = tuple(sorted(set(range(1, n + 1)) - set(col2)))
    return TwoColumnTableau(col1, col2)


def row_of(tab: TwoColumnTableau, i: int) -> int:
    """1-based row of entry ``i`` in its column."""
    if not 1 <= i <= tab.n:
        raise OutOfRange(f"entry {i} outside 1..{tab.n}")
    if i in tab.col1:
        return tab.col1.index(i) + 1
    return tab.col2.index(i) + 1


def change(tab: TwoColumnTableau, i: int, j: int) -> ColumnPairArray:
    """Swap entry ``i`` of column 1 with entry ``j`` of column 2.

    The result keeps both columns sorted but may violate the row condition;
    check with :meth:`ColumnPairArray.is_tableau`.
    """
    if i not in tab.col1:
        raise NotInColumn(f"{i} is not in the first column")
    if j not in tab.col2:
        raise NotInColumn(f"{j} is not in the second column")
    col1 = tuple(sorted((set(tab.col1) - {i}) | {j}))
    col2 = tuple(sorted((set(tab.col2) - {j}) | {i}))
    return ColumnPairArray(col1, col2)


def change_candidates_low(tab: TwoColumnTableau) -> list[Pair]:
    """Exchanges (i_s, b_s) along the greedy pairing that stay tableaux.

    In the b-ordered presentation the s-th pair qualifies iff ``b_s > 2s``;
    each such ``change(tab, i_s, b_s)`` is a valid tableau and a
    codimension-one partner.
    """
    return [
        (i, b)
        for s, (i, b) in enumerate(sigma_pairs_by_b(tab), start=1)
        if b > 2 * s
    ]


def change_candidates_high(tab: TwoColumnTableau) -> list[tuple[int, tuple[int, ...]]]:
    """Exchanges (a, b_p) with a > b_p that stay tableaux.

    Only first-column entries ``a`` with ``a - 1`` in the second column can
    move; the partners ``b_p`` are ``a - 1`` itself, or any earlier
    second-column entry such that the pairs between it and ``a - 1`` in the
    b-ordered presentation tile the interval ``(b_p, a)`` exactly.
    """
    by_b = sigma_pairs_by_b(tab)
    bs = [b for _, b in by_b]
    col2 = set(tab.col2)
    out: list[tuple[int, tuple[int, ...]]] = []
    for a in tab.col1:
        if a - 1 not in col2:
            continue
        t_idx = bs.index(a - 1)
        hits: list[int] = []
        for p0, (_, b_p) in enumerate(by_b):
            if b_p == a - 1:
                hits.append(b_p)
            elif b_p < a - 1:
                interval = set(range(b_p + 1, a))
                entries = {x for q in range(p0 + 1, t_idx + 1) for x in by_b[q]}
                if interval == entries:
                    hits.append(b_p)
        if hits:
            out.append((a, tuple(sorted(hits))))
    return out


def change_rule_partners(tab: TwoColumnTableau) -> set[TwoColumnTableau]:
    """Codimension-one partners from the two exchange rules."""
    out: set[TwoColumnTableau] = set()
    for i, b in change_candidates_low(tab):
        out.add(change(tab, i, b).to_tableau())
    for a, bs in change_candidates_high(tab):
        for b in bs:
            out.add(change(tab, a, b).to_tableau())
    return out


def codim1_partners(tab: TwoColumnTableau) -> set[TwoColumnTableau]:
    """Tableaux whose orbit closure meets this one in codimension one.

    Each one-level degeneration of the maximal orbit has exactly two
    maximal orbits above it; the partner is the other one.
    """
    sigma = sigma_T(tab)
    out: set[TwoColumnTableau] = set()
    for lower in descendants(sigma):
        for upper in ancestors(lower):
            if upper == sigma:
                continue
            other = tableau_of(upper)
            if other is not None:
                out.add(other)
    return out


def enumerate_tableaux(n: int, k: int) -> Iterator[TwoColumnTableau]:
    """All two-column tableaux with column lengths (n-k, k), lexicographically.

    A k-subset works as the second column iff its r-th smallest entry is at
    least 2r (the ballot condition).
    """
    if not 0 <= k <= n // 2:
        return
    everything = set(range(1, n + 1))
    for col2 in combinations(range(1, n + 1), k):
        if all(c >= 2 * (r + 1) for r, c in enumerate(col2)):
            col1 = tuple(sorted(everything - set(col2)))
            yield TwoColumnTableau(col1, col2)


def all_tableaux(n: int) -> Iterator[TwoColumnTableau]:
    """All two-column tableaux of rank n, by increasing second-column length."""
    for k in range(n // 2 + 1):
        yield from enumerate_tableaux(n, k)
