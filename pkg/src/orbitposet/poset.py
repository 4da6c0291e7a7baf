"""Order-level queries: closures, intersections, codimension, chains, Hasse data.

The closure order is the entrywise rank-matrix order.  Closure intersections
decompose into the involutions below the entrywise minimum of the two rank
matrices; the intersection is irreducible exactly when that minimum is itself
a valid rank matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadRank, NotComparable, RankMismatch, SizeMismatch
from .involutions import Involution, all_involutions, dimension, sigma_o
from .limits import HASSE_MAX_N, check_guard
from .moves import cover, cover_moves
from .rank_matrices import RankMatrix, is_valid, leq, meet, rank_matrix


@dataclass(frozen=True)
class IntersectionResult:
    """Decomposition of the intersection of two orbit closures."""

    meet: RankMatrix
    irreducible: bool
    components: tuple[Involution, ...]
    component_dims: tuple[int, ...]
    codim: int
    equidimensional: bool

    def to_json_dict(self) -> dict:
        return {
            "meet": self.meet.to_rows(),
            "irreducible": self.irreducible,
            "components": [
                {"involution": str(c), "dim": d}
                for c, d in zip(self.components, self.component_dims)
            ],
            "codim": self.codim,
            "equidimensional": self.equidimensional,
        }


@dataclass(frozen=True, order=True)
class PosetEdge:
    """One cover edge of the closure order, with its move tag."""

    upper: Involution
    lower: Involution
    kind: str


def closure(inv: Involution) -> set[Involution]:
    """Everything below ``inv`` in the closure order, ``inv`` included.

    Computed by descending the cover relation rather than filtering the full
    enumeration, so it only touches the down-set.
    """
    seen = {inv}
    stack = [inv]
    while stack:
        current = stack.pop()
        for lower in cover(current):
            if lower not in seen:
                seen.add(lower)
                stack.append(lower)
    return seen


def _below_meet(n: int, bound: RankMatrix) -> list[Involution]:
    """All involutions whose rank matrix is entrywise below ``bound``."""
    max_len = bound.entry(1, n) if n > 1 else 0
    out = []
    for k in range(max_len + 1):
        for cand in all_involutions(n, k):
            if leq(rank_matrix(cand), bound):
                out.append(cand)
    return out


def _maximal(elements: list[Involution]) -> list[Involution]:
    mats = {e: rank_matrix(e) for e in elements}
    return [
        e
        for e in elements
        if not any(other != e and leq(mats[e], mats[other]) for other in elements)
    ]


def intersect(a: Involution, b: Involution, force: bool = False) -> IntersectionResult:
    """Decompose the intersection of the two orbit closures.

    Both arguments must have the same ambient rank and, unless ``force`` is
    set, the same cycle count (the decomposition below is stated for equal
    counts; ``force`` applies the same recipe outside that scope).
    """
    if a.n != b.n:
        raise SizeMismatch(f"cannot intersect ranks {a.n} and {b.n}")
    if a.length != b.length and not force:
        raise RankMismatch(
            f"cycle counts differ ({a.length} vs {b.length}); pass force to proceed"
        )
    bound = meet(rank_matrix(a), rank_matrix(b))
    components = sorted(_maximal(_below_meet(a.n, bound)))
    dims = tuple(dimension(c) for c in components)
    codim_value = min(dimension(a), dimension(b)) - max(dims)
    return IntersectionResult(
        meet=bound,
        irreducible=is_valid(bound),
        components=tuple(components),
        component_dims=dims,
        codim=codim_value,
        equidimensional=len(set(dims)) <= 1,
    )


def codim(upper: Involution, lower: Involution) -> int:
    """Codimension of the lower orbit inside the closure of the upper one."""
    if not leq(lower, upper):
        raise NotComparable(f"{lower} is not below {upper}")
    return dimension(upper) - dimension(lower)


def depth(inv: Involution, k: int) -> int:
    """Cover-chain length from ``inv`` down to the minimal k-pair involution.

    Equals the dimension difference; ``depth(inv, 0)`` is the orbit dimension.
    """
    if not 0 <= k <= inv.length:
        raise BadRank(f"k={k} outside 0..{inv.length}")
    return dimension(inv) - dimension(sigma_o(inv.n, k))


def hasse(n: int, k: int | None = None, max_n: int | None = None) -> list[PosetEdge]:
    """All cover edges for rank ``n`` (restricted to cycle count ``k`` if given).

    With ``k`` given only the same-length covers survive, which are exactly
    the one-level degenerations.  Ordering is deterministic: upper elements
    in enumeration order, moves in generation order.
    """
    check_guard(n, HASSE_MAX_N, max_n)
    edges: list[PosetEdge] = []
    for upper in all_involutions(n, k):
        for move in cover_moves(upper):
            if k is not None and move.target.length != k:
                continue
            edges.append(PosetEdge(upper, move.target, move.kind))
    return edges


def hasse_dot(n: int, k: int | None = None, max_n: int | None = None) -> str:
    """DOT rendering of the cover relation, ranked by orbit dimension."""
    edges = hasse(n, k, max_n)
    nodes = sorted({e.upper for e in edges} | {e.lower for e in edges})
    if not nodes:
        nodes = list(all_involutions(n, k))
    by_dim: dict[int, list[Involution]] = {}
    for node in nodes:
        by_dim.setdefault(dimension(node), []).append(node)
    lines = [f'digraph "involution_poset_n{n}" {{']
    lines.append("  rankdir=TB;")
    lines.append('  node [shape=box, fontname="monospace"];')
    for dim_value in sorted(by_dim, reverse=True):
        group = " ".join(f'"{node}"' for node in sorted(by_dim[dim_value]))
        lines.append(f"  {{ rank=same; {group} }}")
    for node in nodes:
        lines.append(f'  "{node}" [label="{node}\\ndim {dimension(node)}"];')
    for edge in edges:
        lines.append(f'  "{edge.upper}" -> "{edge.lower}" [label="{edge.kind}"];')
    lines.append("}")
    return "\n".join(lines)
