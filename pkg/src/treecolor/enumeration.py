"""Counting machinery: linear recurrences with constant term, the acceptable /
rigid / flexible vector counts, extremal coloring-count searches over prime
pairs, and zero-set size extremes."""

from __future__ import annotations

from typing import NamedTuple

from .errors import BoundExceeded, TooSmall
from .coloring import (
    ColorVector,
    classify_vector,
    is_rigid,
    normalized_colorings,
    zero_intervals,
)
from .maps import common_intervals
from .thompson import TreePair
from .trees import all_trees, shadow_pattern


class RecurrenceSpec(NamedTuple):
    p: int
    q: int
    k: int
    a: int  # t(0)
    b: int  # t(1)


JACOBSTHAL = RecurrenceSpec(1, 2, 0, 0, 1)
ACCEPTABLE = RecurrenceSpec(2, 3, 1, 0, 1)  # c(n), counts mod color symmetry
RIGID_SHIFTED = RecurrenceSpec(1, 2, 1, 1, 2)  # t(n) = r(n+1)


def recurrence(spec: RecurrenceSpec, n: int) -> int:
    if n < 0:
        raise TooSmall("index must be >= 0")
    if n == 0:
        return spec.a
    prev, cur = spec.a, spec.b
    for _ in range(n - 1):
        prev, cur = cur, spec.p * cur + spec.q * prev + spec.k
    return cur


def jacobsthal(n: int) -> int:
    return (2**n - (-1) ** n) // 3


def count_acceptable(n: int) -> int:
    """Acceptable vectors of length n+1, modulo renaming the three colors."""
    return recurrence(ACCEPTABLE, n)


def count_rigid(n: int) -> int:
    if n < 1:
        raise TooSmall("index must be >= 1")
    return recurrence(RIGID_SHIFTED, n - 1)


def count_flexible(n: int) -> int:
    return count_acceptable(n) - count_rigid(n)


# ---------- Brute-force companions ----------


def brute_acceptable(n: int) -> int:
    """Acceptable length-(n+1) vectors counted up to renaming colors.

    Fixing the leading color to 1 kills the 3-cycles; the leftover swap of
    the other two colors is quotiented directly.
    """
    from itertools import product

    seen = set()
    swap = {1: 1, 2: 3, 3: 2}
    for rest in product((1, 2, 3), repeat=n):
        c = (1,) + rest
        if classify_vector(c) == "Unacceptable":
            continue
        alt = tuple(swap[x] for x in c)
        seen.add(min(c, alt))
    return len(seen)


def brute_rigid(n: int) -> int:
    from itertools import product

    seen = set()
    swap = {1: 1, 2: 3, 3: 2}
    for rest in product((1, 2, 3), repeat=n):
        c = (1,) + rest
        if classify_vector(c) == "Unacceptable" or not is_rigid(c):
            continue
        alt = tuple(swap[x] for x in c)
        seen.add(min(c, alt))
    return len(seen)


# ---------- Extremal coloring counts over prime pairs ----------


class CountReport(NamedTuple):
    n: int  # vertex count of the dual triangulation
    entries: tuple  # ((count, witness TreePair), ...) decreasing, top 4


def pair_coloring_counts(carets: int):
    """(pair, normalized coloring count) for every prime pair of this size."""
    trees = all_trees(carets)
    shadows = {
        T: shadow_pattern(T) if T.leaf_count >= 2 else frozenset() for T in trees
    }
    per_tree = {}
    for T in trees:
        vecs = normalized_colorings(T)
        per_tree[T] = [(c, zero_intervals(c)) for c in vecs]
    for d in trees:
        for r in trees:
            if shadows[d] & shadows[r]:
                continue  # not prime
            sh = shadows[r]
            count = sum(1 for _, bad in per_tree[d] if not (sh & bad))
            yield TreePair(d, r), count


def max_coloring_search(n: int, bound: int = 8) -> CountReport:
    """Largest distinct coloring counts over n-vertex dual triangulations.

    Sweeps every prime pair with n-2 carets; the dual of such a pair is a
    simple triangulation of the sphere on n vertices.
    """
    if not 2 <= n <= bound:
        raise BoundExceeded(f"n={n} outside [2, {bound}]")
    best: dict[int, TreePair] = {}
    for p, count in pair_coloring_counts(n - 2):
        if count not in best:
            best[count] = p
    ranked = sorted(best.items(), reverse=True)[:4]
    return CountReport(n, tuple(ranked))


def conjectured_m(i: int, n: int) -> int:
    """Predicted formulas for the four largest counts; the first holds from
    n=5, the rest from n=7.  The third rank is defined as the top count one
    size down (its witness attaches a vertex to the smaller extremal map)."""
    from .errors import OutOfRange

    def parity(e, o):
        return e if n % 2 == 0 else o

    if i == 1:
        if n < 5:
            raise OutOfRange("m1 estimated from n=5")
        return jacobsthal(n - 3) + parity(1, 0)
    if n < 7:
        raise OutOfRange("m2..m4 estimated from n=7")
    if i == 2:
        return jacobsthal(n - 4) + parity(7, 5)
    if i == 3:
        return conjectured_m(1, n - 1)
    if i == 4:
        return jacobsthal(n - 4) - parity(1, 2)
    raise OutOfRange("rank must be 1..4")


# ---------- Zero-set extremes ----------


def zero_set_extremes(n: int, bound: int = 12):
    """(max |Z|, min |Z|, max witness, min witness) over acceptable vectors
    of length n+1."""
    from itertools import product

    if n > bound:
        raise BoundExceeded(f"n={n} exceeds bound {bound}")
    hi = lo = None
    hi_w = lo_w = None
    for rest in product((1, 2, 3), repeat=n):
        c = (1,) + rest
        if classify_vector(c) == "Unacceptable":
            continue
        z = len(zero_intervals(c))
        if hi is None or z > hi:
            hi, hi_w = z, c
        if lo is None or z < lo:
            lo, lo_w = z, c
    return hi, lo, hi_w, lo_w
