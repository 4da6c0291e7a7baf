"""Brute-force re-verification of every structural claim at small rank.

Each suite recomputes a family of facts by an independent route (full
enumeration, all-pairs comparisons, explicit chain walking, literal subset
criteria) and compares against the library implementations.  A suite never
uses the formula it is checking to produce its own expected values: chain
lengths are walked, cover sets come from all-pairs order scans, tableau
counts come from the hook-length product, involution counts from the
classical recurrence.

Run everything from the command line with ``orbitposet verify --all``.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from math import factorial

from .errors import UnknownSuite
from .involutions import (
    Involution,
    all_involutions,
    delete_pair,
    dimension,
    project,
    sigma_o,
)
from .limits import ALL_PAIRS_MAX_N, SINGLE_PASS_MAX_N, check_guard
from .moves import (
    _cross_down_moves,
    _cross_up_moves,
    _swap_down_moves,
    _swap_up_moves,
    ancestors,
    cover,
    descendants,
    move_down,
    move_left,
    move_right,
    move_up,
)
from .poset import closure, depth, intersect
from .rank_matrices import RankMatrix, from_rank_matrix, is_valid, leq, meet, rank_matrix
from .rs import find_rs_witness, rs_pair, rs_word
from .tableaux import (
    change_candidates_high,
    change_candidates_low,
    change_rule_partners,
    codim1_partners,
    enumerate_tableaux,
    sigma_T,
    sigma_pairs_by_b,
    tableau_of,
)


# ---------------------------------------------------------------------------
# Independent counting oracles
# ---------------------------------------------------------------------------

def involution_number(n: int) -> int:
    """Number of involutions of rank n via a(n) = a(n-1) + (n-1)a(n-2)."""
    a, b = 1, 1  # a(0), a(1)
    if n == 0:
        return 1
    for m in range(2, n + 1):
        a, b = b, b + (m - 1) * a
    return b


def involution_number_k(n: int, k: int) -> int:
    """Number of involutions of rank n with exactly k pairs."""
    return factorial(n) // (2**k * factorial(k) * factorial(n - 2 * k))


def hook_length_count(n: int, k: int) -> int:
    """Standard tableaux with column lengths (n-k, k), by hook lengths."""
    row_shape = [2] * k + [1] * (n - 2 * k)
    col_shape = [len(row_shape), k] if k else [len(row_shape)]
    product = 1
    for r, row_len in enumerate(row_shape):
        for c in range(row_len):
            arm = row_len - c - 1
            leg = col_shape[c] - r - 1
            product *= arm + leg + 1
    return factorial(n) // product


# ---------------------------------------------------------------------------
# Report plumbing
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Failure:
    claim: str
    witness: str
    expected: str
    got: str

    def __str__(self) -> str:
        return f"{self.claim} | witness {self.witness} | expected {self.expected} | got {self.got}"


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    n_max: int
    k_max: int | None
    checks_run: int
    failures: tuple[Failure, ...]
    notes: tuple[str, ...]
    elapsed: float

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "n_max": self.n_max,
            "k_max": self.k_max,
            "checks_run": self.checks_run,
            "failures": [
                {
                    "claim": f.claim,
                    "witness": f.witness,
                    "expected": f.expected,
                    "got": f.got,
                }
                for f in self.failures
            ],
            "notes": list(self.notes),
            "elapsed": self.elapsed,
            "passed": self.passed,
        }


class _Recorder:
    def __init__(self) -> None:
        self.checks = 0
        self.failures: list[Failure] = []
        self.notes: list[str] = []

    def check(self, ok: bool, claim: str, witness: str, expected, got) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(Failure(claim, witness, str(expected), str(got)))

    def equal(self, expected, got, claim: str, witness: str) -> None:
        self.check(expected == got, claim, witness, expected, got)

    def note(self, message: str) -> None:
        self.notes.append(message)


def _ks(n: int, k_max: int | None) -> range:
    top = n // 2 if k_max is None else min(k_max, n // 2)
    return range(top + 1)


# ---------------------------------------------------------------------------
# All-pairs ground truth
# ---------------------------------------------------------------------------

def brute_covers(
    n: int, max_n: int | None = None
) -> dict[Involution, set[Involution]]:
    """Cover relation computed the slow way: all-pairs order comparisons only."""
    check_guard(n, ALL_PAIRS_MAX_N, max_n)
    els = all_involutions(n)
    mats = {e: rank_matrix(e) for e in els}
    below: dict[Involution, list[Involution]] = {}
    for x in els:
        below[x] = [y for y in els if y != x and leq(mats[y], mats[x])]
    covers: dict[Involution, set[Involution]] = {}
    for x in els:
        members = below[x]
        covers[x] = {
            y
            for y in members
            if not any(z != y and leq(mats[y], mats[z]) for z in members)
        }
    return covers


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------

def _suite_counts(rec: _Recorder, n_max: int, k_max: int | None) -> None:
    """Enumeration is complete, canonical, duplicate-free, in stable order."""
    for n in range(1, n_max + 1):
        els = list(all_involutions(n))
        rec.equal(involution_number(n), len(els), "involution count", f"n={n}")
        rec.equal(len(set(els)), len(els), "no duplicates", f"n={n}")
        keys = [tuple(x for p in e.pairs for x in p) for e in els]
        rec.equal(sorted(keys), keys, "flattened lexicographic order", f"n={n}")
        total = 0
        for k in _ks(n, k_max):
            count = len(all_involutions(n, k))
            rec.equal(involution_number_k(n, k), count, "count by pair number", f"n={n} k={k}")
            total += count
        if k_max is None:
            rec.equal(len(els), total, "counts partition the total", f"n={n}")


def _suite_dimension(rec: _Recorder, n_max: int, k_max: int | None) -> None:
    """Dimension bound, minimal and maximal orbit facts."""
    for n in range(1, n_max + 1):
        mats = {e: rank_matrix(e) for e in all_involutions(n)}
        for k in _ks(n, k_max):
            base = sigma_o(n, k)
            rec.equal(k * (k + 1) // 2, dimension(base), "minimal orbit dimension", f"n={n} k={k}")
            rec.equal(set(), descendants(base), "minimal orbit has no descendants", f"n={n} k={k}")
            for e in all_involutions(n):
                if e.length >= k:
                    rec.check(
                        leq(mats[base], mats[e]),
                        "minimal orbit below every longer element",
                        f"n={n} k={k} sigma={e}",
                        True,
                        False,
                    )
            maximal = {e for e in all_involutions(n, k) if dimension(e) == k * (n - k)}
            images = {sigma_T(t) for t in enumerate_tableaux(n, k)}
            rec.equal(images, maximal, "maximal orbits are tableau images", f"n={n} k={k}")
            no_desc = {e for e in all_involutions(n, k) if not descendants(e)}
            rec.equal({base}, no_desc, "only the minimal orbit lacks descendants", f"n={n} k={k}")
            no_anc = {e for e in all_involutions(n, k) if not ancestors(e)}
            rec.equal(maximal, no_anc, "only maximal orbits lack ancestors", f"n={n} k={k}")
            for e in all_involutions(n, k):
                rec.check(
                    0 <= dimension(e) <= k * (n - k),
                    "dimension bound",
                    f"n={n} sigma={e}",
                    f"0..{k * (n - k)}",
                    dimension(e),
                )
    # the minimal-orbit dimension formula is cheap enough to push further
    for n in range(n_max + 1, 13):
        for k in _ks(n, k_max):
            rec.equal(
                k * (k + 1) // 2,
                dimension(sigma_o(n, k)),
                "minimal orbit dimension",
                f"n={n} k={k}",
            )


def _suite_rank(rec: _Recorder, n_max: int, k_max: int | None) -> None:
    """Rank-matrix recovery, validity of images, window law, soundness."""
    for n in range(1, n_max + 1):
        for e in all_involutions(n):
            if k_max is not None and e.length > k_max:
                continue
            r = rank_matrix(e)
            rec.equal(e, from_rank_matrix(r), "recovery roundtrip", f"n={n} sigma={e}")
            rec.check(is_valid(r), "images are valid", f"n={n} sigma={e}", True, False)
            rec.equal(e.length, r.entry(1, n) if n > 1 else 0, "corner entry is the pair count", f"n={n} sigma={e}")
    for n in range(2, min(n_max, 6) + 1):
        for e in all_involutions(n):
            r = rank_matrix(e)
            for i in range(1, n):
                for j in range(i + 1, n + 1):
                    rec.equal(
                        project(e, i, j).window.length,
                        r.entry(i, j),
                        "window law",
                        f"n={n} sigma={e} window=({i},{j})",
                    )
    for n in range(1, min(n_max, 6) + 1):
        images = {rank_matrix(e) for e in all_involutions(n)}
        valid = {r for r in _step_matrices(n) if is_valid(r)}
        rec.equal(images, valid, "validity characterises exactly the images", f"n={n}")
    rng = random.Random(20240216)
    for n in range(n_max + 1, 13):
        for _ in range(40):
            e = _random_involution(rng, n)
            rec.equal(e, from_rank_matrix(rank_matrix(e)), "recovery roundtrip (spot)", f"n={n} sigma={e}")


def _random_involution(rng: random.Random, n: int) -> Involution:
    values = list(range(1, n + 1))
    rng.shuffle(values)
    k = rng.randint(0, n // 2)
    pairs = [tuple(sorted((values[2 * i], values[2 * i + 1]))) for i in range(k)]
    return Involution(n, tuple(sorted(pairs)))


def _step_matrices(n: int) -> list[RankMatrix]:
    """Every strictly-upper matrix whose entries step by 0 or 1 when the
    window grows by one row or column (the search space for validity)."""
    cells_order = [
        (i, j) for gap in range(1, n) for i in range(1, n - gap + 1) for j in (i + gap,)
    ]
    results: list[RankMatrix] = []
    values: dict[tuple[int, int], int] = {}

    def get(i: int, j: int) -> int:
        if i < 1 or j > n or i >= j:
            return 0
        return values[(i, j)]

    def rec(idx: int) -> None:
        if idx == len(cells_order):
            cells = tuple(
                values[(i, j)] for i in range(1, n + 1) for j in range(i + 1, n + 1)
            )
            results.append(RankMatrix(n, cells))
            return
        i, j = cells_order[idx]
        lo = max(get(i + 1, j), get(i, j - 1))
        hi = min(get(i + 1, j), get(i, j - 1)) + 1
        for v in range(lo, hi + 1):
            values[(i, j)] = v
            rec(idx + 1)
        del values[(i, j)]

    rec(0)
    return results


def _suite_order(rec: _Recorder, n_max: int, k_max: int | None) -> None:
    """Partial-order axioms and the literal triangle criterion.

    The quadratic and cubic axiom scans stay capped (n <= 6 and n <= 5) so a
    raised range does not blow up; reflexivity follows the requested range.
    """
    for n in range(1, n_max + 1):
        els = list(all_involutions(n))
        mats = {e: rank_matrix(e) for e in els}
        for e in els:
            rec.check(leq(mats[e], mats[e]), "reflexive", f"n={n} sigma={e}", True, False)
        if n <= 6:
            for a in els:
                for b in els:
                    if a != b and leq(mats[a], mats[b]) and leq(mats[b], mats[a]):
                        rec.check(False, "antisymmetric", f"n={n} a={a} b={b}", True, False)
            rec.checks += 1  # antisymmetry pass over all pairs counts once
        if n <= 5:
            for a, b, c in itertools.product(els, repeat=3):
                if leq(mats[a], mats[b]) and leq(mats[b], mats[c]):
                    if not leq(mats[a], mats[c]):
                        rec.check(False, "transitive", f"n={n} a={a} b={b} c={c}", True, False)
            rec.checks += 1  # transitivity pass counts once
    for n in range(1, min(n_max, 5) + 1):
        short = [e for e in all_involutions(n) if e.length <= 2]
        mats = {e: rank_matrix(e) for e in short}
        for lower in short:
            for upper in short:
                rec.equal(
                    leq(mats[lower], mats[upper]),
                    _triangle_criterion(lower, upper),
                    "triangle-subset criterion matches the order",
                    f"n={n} lower={lower} upper={upper}",
                )


def _triangle_criterion(lower: Involution, upper: Involution) -> bool:
    """Literal reading: every corner triangle spanned by a subset of the
    lower element admits a subset of the upper element whose triangle fits
    inside and captures at least as many points."""

    def triangle(points: tuple) -> tuple[int, int] | None:
        if not points:
            return None
        entries = [x for p in points for x in p]
        return min(entries), max(entries)

    def count_inside(pairs: tuple, tri: tuple[int, int] | None) -> int:
        if tri is None:
            return 0
        x, y = tri
        return sum(1 for a, b in pairs if x <= a and b <= y)

    for r_low in range(len(lower.pairs) + 1):
        for subset_low in itertools.combinations(lower.pairs, r_low):
            tri_low = triangle(subset_low)
            need = count_inside(lower.pairs, tri_low)
            found = False
            for r_up in range(len(upper.pairs) + 1):
                for subset_up in itertools.combinations(upper.pairs, r_up):
                    tri_up = triangle(subset_up)
                    if tri_up is None:
                        fits = True
                    elif tri_low is None:
                        fits = False
                    else:
                        fits = tri_low[0] <= tri_up[0] and tri_up[1] <= tri_low[1]
                    if fits and count_inside(upper.pairs, tri_up) >= need:
                        found = True
                        break
                if found:
                    break
            if not found:
                return False
    return True


def _suite_delete(rec: _Recorder, n_max: int, k_max: int | None) -> None:
    """Deleting one pair lowers exactly the window counts that contained it."""
    for n in range(1, n_max + 1):
        for e in all_involutions(n):
            if k_max is not None and e.length > k_max:
                continue
            r = rank_matrix(e)
            for s in range(1, e.length + 1):
                i_s, j_s = e.pairs[s - 1]
                shorter = rank_matrix(delete_pair(e, s))
                ok = all(
                    r.entry(i, j) - shorter.entry(i, j)
                    == (1 if i <= i_s and j >= j_s else 0)
                    for i in range(1, n + 1)
                    for j in range(i + 1, n + 1)
                )
                rec.check(ok, "one-pair deletion rank delta", f"n={n} sigma={e} s={s}", True, False)


def _suite_moves(rec: _Recorder, n_max: int, k_max: int | None) -> None:
    """Inverse laws, direction law, and disjointness of the four families."""
    for n in range(1, n_max + 1):
        for e in all_involutions(n):
            if k_max is not None and e.length > k_max:
                continue
            mat = rank_matrix(e)
            for s in range(1, e.length + 1):
                down = move_down(e, s)
                if down is not None:
                    x = e.pairs[s - 1][1]
                    back = next(
                        idx + 1 for idx, p in enumerate(down.pairs) if p[1] == x
                    )
                    rec.equal(e, move_up(down, back), "vertical moves invert", f"n={n} sigma={e} s={s}")
                up = move_up(e, s)
                if up is not None:
                    x = e.pairs[s - 1][1]
                    back = next(idx + 1 for idx, p in enumerate(up.pairs) if p[1] == x)
                    rec.equal(e, move_down(up, back), "vertical moves invert", f"n={n} sigma={e} s={s}")
                right = move_right(e, s)
                if right is not None:
                    i_s = e.pairs[s - 1][0]
                    back = next(idx + 1 for idx, p in enumerate(right.pairs) if p[0] == i_s)
                    rec.equal(e, move_left(right, back), "horizontal moves invert", f"n={n} sigma={e} s={s}")
                left = move_left(e, s)
                if left is not None:
                    i_s = e.pairs[s - 1][0]
                    back = next(idx + 1 for idx, p in enumerate(left.pairs) if p[0] == i_s)
                    rec.equal(e, move_right(left, back), "horizontal moves invert", f"n={n} sigma={e} s={s}")
            for t in range(1, e.length + 1):
                for (p_s, p_t), target in _cross_down_moves(e, t):
                    moved = (p_s[1], p_t[1])  # pair (j_s, j_t) in the target
                    back = target.pairs.index(moved) + 1
                    rec.check(
                        e in {tgt for _, tgt in _cross_up_moves(target, back)},
                        "uncross inverts",
                        f"n={n} sigma={e} t={t}",
                        True,
                        False,
                    )
                for (p_s, p_t), target in _cross_up_moves(e, t):
                    moved = (p_s[1], p_t[1])
                    back = target.pairs.index(moved) + 1
                    rec.check(
                        e in {tgt for _, tgt in _cross_down_moves(target, back)},
                        "recross inverts",
                        f"n={n} sigma={e} t={t}",
                        True,
                        False,
                    )
            for s in range(1, e.length + 1):
                for (p_s, p_t), target in _swap_down_moves(e, s):
                    moved = (p_s[0], p_t[1])  # pair (i_s, j_t) in the target
                    back = target.pairs.index(moved) + 1
                    rec.check(
                        e in {tgt for _, tgt in _swap_up_moves(target, back)},
                        "nested swap inverts",
                        f"n={n} sigma={e} s={s}",
                        True,
                        False,
                    )
                for (p_s, p_t), target in _swap_up_moves(e, s):
                    moved = (p_s[0], p_t[1])
                    back = target.pairs.index(moved) + 1
                    rec.check(
                        e in {tgt for _, tgt in _swap_down_moves(target, back)},
                        "crossing swap inverts",
                        f"n={n} sigma={e} s={s}",
                        True,
                        False,
                    )
            down_sets = {
                "move_down": {move_down(e, s) for s in range(1, e.length + 1)} - {None},
                "move_right": {move_right(e, s) for s in range(1, e.length + 1)} - {None},
                "cross_down": {
                    tgt for t in range(1, e.length + 1) for _, tgt in _cross_down_moves(e, t)
                },
                "swap_down": {
                    tgt for s in range(1, e.length + 1) for _, tgt in _swap_down_moves(e, s)
                },
            }
            up_sets = {
                "move_up": {move_up(e, s) for s in range(1, e.length + 1)} - {None},
                "move_left": {move_left(e, s) for s in range(1, e.length + 1)} - {None},
                "cross_up": {
                    tgt for t in range(1, e.length + 1) for _, tgt in _cross_up_moves(e, t)
                },
                "swap_up": {
                    tgt for s in range(1, e.length + 1) for _, tgt in _swap_up_moves(e, s)
                },
            }
            for family, members in down_sets.items():
                for target in members:
                    strictly_below = leq(rank_matrix(target), mat) and target != e
                    rec.check(strictly_below, "down-moves go strictly down", f"n={n} sigma={e} family={family} target={target}", True, False)
            for family, members in up_sets.items():
                for target in members:
                    strictly_above = leq(mat, rank_matrix(target)) and target != e
                    rec.check(strictly_above, "up-moves go strictly up", f"n={n} sigma={e} family={family} target={target}", True, False)
            for (fam_a, set_a), (fam_b, set_b) in itertools.combinations(down_sets.items(), 2):
                rec.equal(set(), set_a & set_b, f"down families disjoint ({fam_a}/{fam_b})", f"n={n} sigma={e}")
            for (fam_a, set_a), (fam_b, set_b) in itertools.combinations(up_sets.items(), 2):
                rec.equal(set(), set_a & set_b, f"up families disjoint ({fam_a}/{fam_b})", f"n={n} sigma={e}")


def _suite_descendants(rec: _Recorder, n_max: int, k_max: int | None) -> None:
    """Move-generated descendants equal both order-theoretic descriptions."""
    for n in range(1, n_max + 1):
        for k in _ks(n, k_max):
            els = list(all_involutions(n, k))
            mats = {e: rank_matrix(e) for e in els}
            dims = {e: dimension(e) for e in els}
            for e in els:
                below = [x for x in els if x != e and leq(mats[x], mats[e])]
                by_cover = {
                    x
                    for x in below
                    if not any(y != x and leq(mats[x], mats[y]) for y in below)
                }
                by_dim = {x for x in below if dims[e] - dims[x] == 1}
                moved = descendants(e)
                rec.equal(by_cover, moved, "descendants are the same-length covers", f"n={n} sigma={e}")
                rec.equal(by_dim, moved, "descendants are the dimension-drop-one set", f"n={n} sigma={e}")


def _suite_cover(rec: _Recorder, n_max: int, k_max: int | None) -> None:
    """Candidate-based cover equals the all-pairs cover; covers drop one level."""
    for n in range(1, n_max + 1):
        truth = brute_covers(n)
        for e in all_involutions(n):
            if k_max is not None and e.length > k_max:
                continue
            rec.equal(truth[e], cover(e), "cover matches all-pairs scan", f"n={n} sigma={e}")
            for lower in truth[e]:
                rec.equal(1, dimension(e) - dimension(lower), "covers drop dimension by one", f"n={n} sigma={e} lower={lower}")


def _suite_depth(rec: _Recorder, n_max: int, k_max: int | None) -> None:
    """All cover chains between comparable elements have the same walked
    length, and it equals the dimension difference."""
    for n in range(1, n_max + 1):
        els = list(all_involutions(n))
        mats = {e: rank_matrix(e) for e in els}
        truth = brute_covers(n)
        strictly_below = {
            x: {y for y in els if y != x and leq(mats[y], mats[x])} for x in els
        }
        for target in els:
            memo: dict[Involution, tuple[int, int]] = {}

            def walk(x: Involution) -> tuple[int, int]:
                if x in memo:
                    return memo[x]
                lows, highs = [], []
                for c in truth[x]:
                    if c == target:
                        lows.append(1)
                        highs.append(1)
                    elif target in strictly_below[c]:
                        lo, hi = walk(c)
                        lows.append(lo + 1)
                        highs.append(hi + 1)
                memo[x] = (min(lows), max(highs))
                return memo[x]

            for x in els:
                if target not in strictly_below[x]:
                    continue
                lo, hi = walk(x)
                gap = dimension(x) - dimension(target)
                rec.check(
                    lo == hi == gap,
                    "all chains have length equal to the dimension gap",
                    f"n={n} upper={x} lower={target}",
                    gap,
                    (lo, hi),
                )
        for x in els:
            if k_max is not None and x.length > k_max:
                continue
            for k in range(x.length + 1):
                base = sigma_o(n, k)
                if x == base:
                    rec.equal(0, depth(x, k), "depth of the minimal element", f"n={n} k={k}")
                    continue
                memo2: dict[Involution, int] = {}

                def walk_len(y: Involution) -> int:
                    if y in memo2:
                        return memo2[y]
                    best = None
                    for c in truth[y]:
                        if c == base:
                            length = 1
                        elif base in strictly_below[c]:
                            length = walk_len(c) + 1
                        else:
                            continue
                        best = length if best is None else best
                        # all chains agree by the check above; one suffices
                        break
                    memo2[y] = best
                    return best

                rec.equal(walk_len(x), depth(x, k), "depth equals walked chain length", f"n={n} sigma={x} k={k}")


def _suite_closure(rec: _Recorder, n_max: int, k_max: int | None) -> None:
    """Cover-descent closure equals the enumeration filter."""
    for n in range(1, n_max + 1):
        els = list(all_involutions(n))
        mats = {e: rank_matrix(e) for e in els}
        for e in els:
            if k_max is not None and e.length > k_max:
                continue
            filtered = {x for x in els if leq(mats[x], mats[e])}
            rec.equal(filtered, closure(e), "closure by descent equals filter", f"n={n} sigma={e}")


def _suite_reachability(rec: _Recorder, n_max: int, k_max: int | None) -> None:
    """Repeated one-level degenerations reach the whole same-length down-set."""
    for n in range(1, n_max + 1):
        for k in _ks(n, k_max):
            els = list(all_involutions(n, k))
            mats = {e: rank_matrix(e) for e in els}
            for e in els:
                reached = {e}
                frontier = [e]
                while frontier:
                    nxt = frontier.pop()
                    for d in descendants(nxt):
                        if d not in reached:
                            reached.add(d)
                            frontier.append(d)
                down_set = {x for x in els if leq(mats[x], mats[e])}
                rec.equal(down_set, reached, "descendant steps reach the down-set", f"n={n} sigma={e}")


def _suite_codim(rec: _Recorder, n_max: int, k_max: int | None) -> None:
    """Intersection decomposition: irreducibility test, component sanity."""
    for n in range(1, n_max + 1):
        reducible = []
        for k in _ks(n, k_max):
            els = list(all_involutions(n, k))
            mats = {e: rank_matrix(e) for e in els}
            for a, b in itertools.combinations_with_replacement(els, 2):
                result = intersect(a, b)
                rec.equal(
                    result.irreducible,
                    len(result.components) == 1,
                    "irreducible exactly when one component",
                    f"n={n} a={a} b={b}",
                )
                if result.irreducible:
                    rec.equal(
                        result.meet,
                        rank_matrix(result.components[0]),
                        "irreducible component realises the meet",
                        f"n={n} a={a} b={b}",
                    )
                for comp in result.components:
                    rec.check(
                        leq(rank_matrix(comp), mats[a]) and leq(rank_matrix(comp), mats[b]),
                        "components lie below both inputs",
                        f"n={n} a={a} b={b} comp={comp}",
                        True,
                        False,
                    )
                for x, y in itertools.combinations(result.components, 2):
                    rec.check(
                        not leq(rank_matrix(x), rank_matrix(y))
                        and not leq(rank_matrix(y), rank_matrix(x)),
                        "components are incomparable",
                        f"n={n} a={a} b={b}",
                        True,
                        False,
                    )
                if a != b and not result.irreducible:
                    reducible.append((a, b, result))
        if reducible:
            a, b, result = reducible[0]
            comps = ",".join(str(c) for c in result.components)
            rec.note(
                f"n={n}: {len(reducible)} reducible equal-length intersections; "
                f"first {a} with {b}: components {comps}"
            )


def _suite_ancestors(rec: _Recorder, n_max: int, k_max: int | None) -> None:
    """Every one-level degeneration of a maximal orbit has exactly two
    maximal ancestors, and their meet realises it."""
    for n in range(1, n_max + 1):
        for k in _ks(n, k_max):
            top_dim = k * (n - k)
            sigmas = [sigma_T(tab) for tab in enumerate_tableaux(n, k)]
            for a, b in itertools.combinations(sigmas, 2):
                # for maximal orbits, codimension one is the same thing as a
                # shared one-level degeneration
                rec.equal(
                    bool(descendants(a) & descendants(b)),
                    intersect(a, b).codim == 1,
                    "codim one iff shared degeneration (maximal orbits)",
                    f"n={n} a={a} b={b}",
                )
            for tab in enumerate_tableaux(n, k):
                sig = sigma_T(tab)
                for lower in descendants(sig):
                    anc = ancestors(lower)
                    rec.equal(2, len(anc), "exactly two ancestors", f"n={n} T={tab} lower={lower}")
                    rec.check(sig in anc, "original orbit is an ancestor", f"n={n} T={tab} lower={lower}", True, False)
                    others = [a for a in anc if a != sig]
                    if len(others) != 1:
                        continue
                    other = others[0]
                    rec.equal(top_dim, dimension(other), "second ancestor is maximal", f"n={n} T={tab} lower={lower}")
                    rec.check(tableau_of(other) is not None, "second ancestor is a tableau image", f"n={n} lower={lower}", True, False)
                    joint = meet(rank_matrix(sig), rank_matrix(other))
                    rec.check(is_valid(joint), "meet of the two ancestors is valid", f"n={n} T={tab} lower={lower}", True, False)
                    rec.equal(rank_matrix(lower), joint, "meet realises the degeneration", f"n={n} T={tab} lower={lower}")
                    rec.equal(
                        {lower},
                        descendants(sig) & descendants(other),
                        "the two ancestors share exactly this descendant",
                        f"n={n} T={tab} lower={lower}",
                    )
                    result = intersect(sig, other)
                    rec.check(result.irreducible, "codim-1 intersection of maximal orbits is irreducible", f"n={n} T={tab} lower={lower}", True, False)
                    rec.equal((lower,), result.components, "intersection component is the degeneration", f"n={n} T={tab} lower={lower}")


def _suite_tableaux(rec: _Recorder, n_max: int, k_max: int | None) -> None:
    """Tableau correspondence: bijection, counts, gap parity, interval law."""
    for n in range(1, n_max + 1):
        for k in _ks(n, k_max):
            tabs = list(enumerate_tableaux(n, k))
            rec.equal(hook_length_count(n, k), len(tabs), "tableau count matches hook lengths", f"n={n} k={k}")
            images = {}
            for tab in tabs:
                sig = sigma_T(tab)
                images[tab] = sig
                rec.equal(k * (n - k), dimension(sig), "tableau image has maximal dimension", f"n={n} T={tab}")
                rec.equal(tab, tableau_of(sig), "tableau roundtrip", f"n={n} T={tab}")
                by_b = sigma_pairs_by_b(tab)
                for s, (i_s, b_s) in enumerate(by_b):
                    rec.check((b_s - i_s) % 2 == 1, "pair gaps are odd", f"n={n} T={tab} pair=({i_s},{b_s})", True, False)
                    if i_s != b_s - 1:
                        earlier = {x for q in range(s) for x in by_b[q]}
                        rec.check(
                            all(p in earlier for p in range(i_s + 1, b_s)),
                            "interior of a long pair is used by earlier pairs",
                            f"n={n} T={tab} pair=({i_s},{b_s})",
                            True,
                            False,
                        )
            rec.equal(len(set(images.values())), len(tabs), "tableau map is injective", f"n={n} k={k}")
            maximal = {e for e in all_involutions(n, k) if dimension(e) == k * (n - k)}
            rec.equal(maximal, set(images.values()), "images exhaust the maximal orbits", f"n={n} k={k}")


def _suite_partners(rec: _Recorder, n_max: int, k_max: int | None) -> None:
    """The two exchange rules produce exactly the codimension-one partners."""
    for n in range(1, n_max + 1):
        for k in _ks(n, k_max):
            tabs = list(enumerate_tableaux(n, k))
            via_thm = {tab: codim1_partners(tab) for tab in tabs}
            for tab in tabs:
                via_change = change_rule_partners(tab)
                rec.equal(via_thm[tab], via_change, "exchange rules match the ancestor route", f"n={n} T={tab}")
                for i, b in change_candidates_low(tab):
                    rec.check((b - i) % 2 == 1, "low exchange has odd gap", f"n={n} T={tab} swap=({i},{b})", True, False)
                for a, bs in change_candidates_high(tab):
                    for b in bs:
                        rec.check((a - b) % 2 == 1, "high exchange has odd gap", f"n={n} T={tab} swap=({a},{b})", True, False)
                for other in via_thm[tab]:
                    rec.check(tab in via_thm[other], "partnership is symmetric", f"n={n} T={tab} S={other}", True, False)


def _suite_rs(rec: _Recorder, n_max: int, k_max: int | None) -> None:
    """Insertion bijectivity and the witness criterion."""
    for n in range(1, min(n_max, 7) + 1):
        for word in itertools.permutations(range(1, n + 1)):
            p_tab, q_tab = rs_pair(word)
            rec.equal(word, rs_word(p_tab, q_tab), "insertion roundtrip", f"word={list(word)}")
    for n in range(2, min(n_max, 6) + 1):
        for k in _ks(n, k_max):
            tabs = list(enumerate_tableaux(n, k))
            for t_tab, s_tab in itertools.combinations(tabs, 2):
                witness = find_rs_witness(t_tab, s_tab)
                if witness is not None:
                    result = intersect(sigma_T(t_tab), sigma_T(s_tab))
                    rec.equal(1, result.codim, "witness implies codimension one", f"n={n} T={t_tab} S={s_tab}")
    for n in range(4, n_max + 1):
        if k_max is not None and k_max < 2:
            continue
        tabs = list(enumerate_tableaux(n, 2))
        for t_tab, s_tab in itertools.combinations(tabs, 2):
            witness = find_rs_witness(t_tab, s_tab)
            codim_one = intersect(sigma_T(t_tab), sigma_T(s_tab)).codim == 1
            rec.equal(
                codim_one,
                witness is not None,
                "two-pair shape: witness exactly at codimension one",
                f"n={n} T={t_tab} S={s_tab}",
            )


def _suite_experiments(rec: _Recorder, n_max: int, k_max: int | None) -> None:
    """Reported-only explorations; nothing here is asserted as a failure."""
    # beyond maximal orbits: does codimension one still mean a shared descendant?
    for n in range(1, min(n_max, 6) + 1):
        agreements = disagreements = 0
        examples = []
        for k in _ks(n, k_max):
            els = list(all_involutions(n, k))
            for a, b in itertools.combinations(els, 2):
                if dimension(a) != dimension(b):
                    continue
                codim_one = intersect(a, b).codim == 1
                shared = bool(descendants(a) & descendants(b))
                if codim_one == shared:
                    agreements += 1
                else:
                    disagreements += 1
                    if len(examples) < 3:
                        examples.append(f"{a} vs {b} (codim1={codim_one}, shared={shared})")
                rec.checks += 1
        line = (
            f"n={n}: equal-dimension pairs, codim-1 vs shared-descendant: "
            f"{agreements} agree, {disagreements} disagree"
        )
        if examples:
            line += "; e.g. " + "; ".join(examples)
        rec.note(line)
    # codimension-one intersections of maximal orbits: irreducibility evidence
    for n in range(2, n_max + 1):
        total = irreducible_count = 0
        for k in _ks(n, k_max):
            tabs = list(enumerate_tableaux(n, k))
            sigmas = {tab: sigma_T(tab) for tab in tabs}
            for t_tab, s_tab in itertools.combinations(tabs, 2):
                result = intersect(sigmas[t_tab], sigmas[s_tab])
                if result.codim != 1:
                    continue
                total += 1
                if result.irreducible:
                    irreducible_count += 1
                rec.checks += 1
        rec.note(
            f"n={n}: {irreducible_count}/{total} codim-1 maximal intersections irreducible"
        )
    # witness-free codimension-one pairs for three or more pairs of cycles
    found = None
    for n in range(6, n_max + 1):
        for k in range(3, n // 2 + 1):
            if k_max is not None and k > k_max:
                continue
            tabs = list(enumerate_tableaux(n, k))
            sigmas = {tab: sigma_T(tab) for tab in tabs}
            for t_tab, s_tab in itertools.combinations(tabs, 2):
                if not (descendants(sigmas[t_tab]) & descendants(sigmas[s_tab])):
                    continue
                rec.checks += 1
                if find_rs_witness(t_tab, s_tab) is None:
                    found = (n, k, t_tab, s_tab)
                    break
            if found:
                break
        if found:
            break
    if found:
        n, k, t_tab, s_tab = found
        rec.note(
            f"smallest witness-free codim-1 pair with k>=3: n={n} k={k} T={t_tab} S={s_tab}"
        )
    else:
        rec.note(f"no witness-free codim-1 pair with k>=3 found for n<={n_max}")


# ---------------------------------------------------------------------------
# Registry and entry points
# ---------------------------------------------------------------------------

_ALL_PAIRS = "all-pairs"
_SINGLE = "single"

SUITES: dict[str, tuple] = {
    "counts": (_suite_counts, 8, _SINGLE),
    "dimension": (_suite_dimension, 8, _SINGLE),
    "rank": (_suite_rank, 7, _SINGLE),
    "order": (_suite_order, 5, _ALL_PAIRS),
    "delete": (_suite_delete, 7, _SINGLE),
    "moves": (_suite_moves, 7, _SINGLE),
    "descendants": (_suite_descendants, 7, _ALL_PAIRS),
    "cover": (_suite_cover, 6, _ALL_PAIRS),
    "depth": (_suite_depth, 6, _ALL_PAIRS),
    "closure": (_suite_closure, 6, _ALL_PAIRS),
    "reachability": (_suite_reachability, 6, _ALL_PAIRS),
    "codim": (_suite_codim, 6, _ALL_PAIRS),
    "ancestors": (_suite_ancestors, 7, _ALL_PAIRS),
    "tableaux": (_suite_tableaux, 8, _SINGLE),
    "partners": (_suite_partners, 7, _SINGLE),
    "rs": (_suite_rs, 7, _ALL_PAIRS),
    "experiments": (_suite_experiments, 8, _ALL_PAIRS),
}


def suite_names() -> list[str]:
    return list(SUITES)


def verify_suite(
    name: str,
    n_max: int | None = None,
    k_max: int | None = None,
    max_n: int | None = None,
) -> VerificationReport:
    """Run one named suite and report; failures list stays empty on success."""
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    fn, default_n, guard_class = SUITES[name]
    n = default_n if n_max is None else n_max
    cap = ALL_PAIRS_MAX_N if guard_class == _ALL_PAIRS else SINGLE_PASS_MAX_N
    check_guard(n, cap, max_n)
    rec = _Recorder()
    start = time.perf_counter()
    fn(rec, n, k_max)
    elapsed = time.perf_counter() - start
    return VerificationReport(
        suite=name,
        n_max=n,
        k_max=k_max,
        checks_run=rec.checks,
        failures=tuple(rec.failures),
        notes=tuple(rec.notes),
        elapsed=elapsed,
    )


def verify_all(
    n_max: int | None = None,
    k_max: int | None = None,
    max_n: int | None = None,
) -> list[VerificationReport]:
    """Run every suite (at its own default range unless n_max overrides)."""
    return [verify_suite(name, n_max, k_max, max_n) for name in SUITES]
