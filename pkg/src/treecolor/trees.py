"""Rooted, locally ordered binary trees as finite subtrees of the standard model.

A vertex of the (infinite) standard model is named by a finite bit string
("address"); the empty string is the child of the root.  A finite binary tree
is stored as the set of its internal vertices (caret centers), which must be
prefix-closed.  Leaves are derived.
"""

from __future__ import annotations

import functools
from typing import Iterable, Iterator

from .errors import (
    NotAVertex,
    NotEdgeDisjoint,
    NotLaminar,
    NotPrefixClosed,
    PivotMissing,
    SubtreeTooSmall,
    TooSmall,
    WrongCardinality,
)

Address = str  # bit string over {0,1}; "" is the child of the root


def format_address(v: Address) -> str:
    """Serialize an address; the empty word prints as "e"."""
    return v if v else "e"


def parse_address(s: str) -> Address:
    if s == "e":
        return ""
    if s == "" or any(ch not in "01" for ch in s):
        raise NotAVertex(f"bad address {s!r}")
    return s


class BinaryTree:
    """Immutable binary tree given by its prefix-closed internal vertex set."""

    __slots__ = ("internal", "_hash")

    def __init__(self, internal: Iterable[Address] = ()):
        s = frozenset(internal)
        for v in s:
            if v and v[:-1] not in s:
                raise NotPrefixClosed(f"parent of {format_address(v)} missing")
        object.__setattr__(self, "internal", s)
        object.__setattr__(self, "_hash", hash(s))

    def __setattr__(self, name, value):
        raise AttributeError("BinaryTree is immutable")

    def __eq__(self, other):
        return isinstance(other, BinaryTree) and self.internal == other.internal

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"BinaryTree({self.to_text()!r})"

    def __contains__(self, v: Address) -> bool:
        """True iff v is a vertex (internal or leaf) of this tree."""
        return v in self.internal or (v == "" or (v[:-1] in self.internal))

    @property
    def carets(self) -> int:
        return len(self.internal)

    @property
    def leaf_count(self) -> int:
        return len(self.internal) + 1

    def is_leaf(self, v: Address) -> bool:
        return v not in self.internal and (v == "" and not self.internal or bool(v) and v[:-1] in self.internal)

    def to_text(self) -> str:
        """Canonical parenthesized form: "." for the trivial tree, "(AB)" for a join."""

        def rec(v: Address) -> str:
            if v not in self.internal:
                return "."
            return "(" + rec(v + "0") + rec(v + "1") + ")"

        return rec("")

    def to_json(self) -> dict:
        return {"internal": sorted(format_address(v) for v in self.internal)}

    @staticmethod
    def from_text(s: str) -> "BinaryTree":
        s = s.strip()
        internal: list[Address] = []
        pos = 0

        def rec(addr: Address) -> None:
            nonlocal pos
            if pos >= len(s):
                raise NotPrefixClosed(f"truncated tree text {s!r}")
            ch = s[pos]
            if ch == ".":
                pos += 1
                return
            if ch != "(":
                raise NotPrefixClosed(f"bad tree text {s!r} at {pos}")
            pos += 1
            internal.append(addr)
            rec(addr + "0")
            rec(addr + "1")
            if pos >= len(s) or s[pos] != ")":
                raise NotPrefixClosed(f"bad tree text {s!r} at {pos}")
            pos += 1

        rec("")
        if pos != len(s):
            raise NotPrefixClosed(f"trailing characters in {s!r}")
        return BinaryTree(internal)

    @staticmethod
    def from_json(obj: dict) -> "BinaryTree":
        return BinaryTree(parse_address(a) if a != "e" else "" for a in obj["internal"])


TRIVIAL = BinaryTree()


def make_tree(internal: Iterable[Address]) -> BinaryTree:
    return BinaryTree(internal)


def leaves(T: BinaryTree) -> list[Address]:
    """Leaf addresses in left-right (lexicographic) order."""
    if not T.internal:
        return [""]
    out = [v + b for v in T.internal for b in "01" if v + b not in T.internal]
    out.sort()
    return out


@functools.lru_cache(maxsize=None)
def _all_trees(n: int) -> tuple[BinaryTree, ...]:
    if n == 0:
        return (TRIVIAL,)
    found = []
    for i in range(n):
        for left in _all_trees(i):
            for right in _all_trees(n - 1 - i):
                found.append(join(left, right))
    found.sort(key=BinaryTree.to_text)
    return tuple(found)


def all_trees(n: int) -> list[BinaryTree]:
    """All trees with n carets, ordered lexicographically by canonical text."""
    if n < 0:
        raise TooSmall("caret count must be >= 0")
    return list(_all_trees(n))


def subtree_at(T: BinaryTree, v: Address) -> BinaryTree:
    """The subtree hanging below the edge above v, re-addressed to the root."""
    if v not in T:
        raise NotAVertex(f"{format_address(v)} is not a vertex of {T.to_text()}")
    k = len(v)
    return BinaryTree(w[k:] for w in T.internal if w.startswith(v))


def join(S: BinaryTree, T: BinaryTree) -> BinaryTree:
    """The tree whose left subtree is S and right subtree is T."""
    internal = [""]
    internal.extend("0" + v for v in S.internal)
    internal.extend("1" + v for v in T.internal)
    return BinaryTree(internal)


def tree_set_ops(A: BinaryTree, B: BinaryTree):
    """(union, intersection, components of A−B).

    The difference is returned as a mapping from each leaf v of A∩B that is
    internal in A to the component subtree of A attached there.
    """
    union = BinaryTree(A.internal | B.internal)
    inter = BinaryTree(A.internal & B.internal)
    comps: dict[Address, BinaryTree] = {}
    for v in leaves(inter):
        if v in A.internal:
            comps[v] = subtree_at(A, v)
    return union, inter, comps


def shadow_interval(T: BinaryTree, v: Address) -> tuple[int, int]:
    """1-based leaf index interval spanned by the subtree below v."""
    if v not in T:
        raise NotAVertex(f"{format_address(v)} is not a vertex of {T.to_text()}")
    lv = leaves(T)
    idx = [i + 1 for i, w in enumerate(lv) if w.startswith(v)]
    return (idx[0], idx[-1])


def shadow_pattern(T: BinaryTree) -> frozenset[tuple[int, int]]:
    """Shadow intervals of every internal vertex except the topmost one."""
    if T.leaf_count < 2:
        raise TooSmall("tree must have at least 2 leaves")
    lv = leaves(T)
    pos = {w: i + 1 for i, w in enumerate(lv)}
    out = set()
    for v in T.internal:
        if v == "":
            continue
        sub = [pos[w] for w in lv if w.startswith(v)]
        out.add((sub[0], sub[-1]))
    return frozenset(out)


def tree_from_shadow_pattern(p: Iterable[tuple[int, int]], n: int) -> BinaryTree:
    """Inverse of shadow_pattern for a tree with n leaves."""
    intervals = set(tuple(i) for i in p)
    if len(intervals) != n - 2:
        raise WrongCardinality(f"expected {n - 2} intervals, got {len(intervals)}")
    for lo, hi in intervals:
        if not (1 <= lo < hi <= n) or (lo, hi) == (1, n):
            raise NotLaminar(f"interval [{lo},{hi}] is not proper in [1,{n}]")
    used = set()
    internal: list[Address] = []

    def build(lo: int, hi: int, addr: Address) -> None:
        if lo == hi:
            return
        internal.append(addr)
        split = lo
        for j in range(lo, hi):
            if j == lo or (lo, j) in intervals:
                split = j
        if split > lo:
            used.add((lo, split))
        if split + 1 < hi:
            if (split + 1, hi) not in intervals:
                raise NotLaminar(f"no interval covers [{split + 1},{hi}]")
            used.add((split + 1, hi))
        build(lo, split, addr + "0")
        build(split + 1, hi, addr + "1")

    build(1, n, "")
    if used != intervals:
        raise NotLaminar("intervals do not form a laminar tree pattern")
    return BinaryTree(internal)


# ---------- Rotations ----------


def rotation_action(u: Address, inverse: bool, v: Address) -> Address:
    """Where the rotation at u sends the vertex v of the standard model."""
    if not inverse:
        if v == u:
            return u + "1"
        if v == u + "0":
            return u
        rest = v[len(u):]
        if v.startswith(u):
            if rest.startswith("00"):
                return u + "0" + rest[2:]
            if rest.startswith("01"):
                return u + "10" + rest[2:]
            if rest.startswith("1"):
                return u + "11" + rest[1:]
        return v
    else:
        if v == u:
            return u + "0"
        if v == u + "1":
            return u
        rest = v[len(u):]
        if v.startswith(u):
            if rest.startswith("11"):
                return u + "1" + rest[2:]
            if rest.startswith("10"):
                return u + "01" + rest[2:]
            if rest.startswith("0"):
                return u + "00" + rest[1:]
        return v


def rotate(T: BinaryTree, u: Address, inverse: bool = False) -> BinaryTree:
    """Apply the rotation with pivot u (inverse: opposite direction)."""
    pivot2 = u + ("1" if inverse else "0")
    if u not in T.internal or pivot2 not in T.internal:
        raise PivotMissing(
            f"pivots {format_address(u)},{format_address(pivot2)} not internal in {T.to_text()}"
        )
    return BinaryTree(rotation_action(u, inverse, v) for v in T.internal)


# ---------- Vines ----------


def right_vine(n: int) -> BinaryTree:
    return BinaryTree("1" * i for i in range(n))


def left_vine(n: int) -> BinaryTree:
    return BinaryTree("0" * i for i in range(n))


def is_vine(T: BinaryTree) -> bool:
    """True iff T has exactly one exposed caret."""
    exposed = [v for v in T.internal if v + "0" not in T.internal and v + "1" not in T.internal]
    return len(exposed) == 1


# ---------- Dihedral action via the dual polygon ----------


def dihedral_apply(T: BinaryTree, k: int, reflect: bool = False) -> BinaryTree:
    """Root shift by k (and optional reflection) of the dual triangulated polygon.

    The polygon has leaf_count+1 sides; the root stays in the top edge, so the
    chord family is relabeled and converted back to a tree.
    """
    L = T.leaf_count
    m = L + 1
    k %= m
    if L < 2:
        return T
    chords = [(lo - 1, hi) for lo, hi in shadow_pattern(T)]
    moved = []
    for p, q in chords:
        if reflect:
            p, q = (L - p) % m, (L - q) % m
        p, q = (p + k) % m, (q + k) % m
        lo, hi = (min(p, q), max(p, q))
        moved.append((lo + 1, hi))
    return tree_from_shadow_pattern(moved, L)


def dihedral_orbit(T: BinaryTree) -> set[BinaryTree]:
    m = T.leaf_count + 1
    return {dihedral_apply(T, k, r) for k in range(m) for r in (False, True)}


# ---------- Projections ----------


class GeneralTree:
    """Ordered rooted tree allowing internal vertices of any arity >= 2."""

    __slots__ = ("children",)

    def __init__(self, children: Iterable["GeneralTree"] = ()):
        object.__setattr__(self, "children", tuple(children))

    def __setattr__(self, name, value):
        raise AttributeError("GeneralTree is immutable")

    def __eq__(self, other):
        return isinstance(other, GeneralTree) and self.children == other.children

    def __hash__(self):
        return hash(self.children)

    def to_text(self) -> str:
        if not self.children:
            return "."
        return "(" + "".join(c.to_text() for c in self.children) + ")"

    def __repr__(self):
        return f"GeneralTree({self.to_text()!r})"


def projection(T: BinaryTree, subs: list[tuple[Address, BinaryTree]]) -> GeneralTree:
    """Collapse the internal edges of each named subtree of T.

    Each subtree is given as (w, S): w is the address in T of the child of the
    subtree's root, S the subtree shape re-addressed to the standard model.
    """
    claimed: set[Address] = set()
    absorb: dict[Address, list[Address]] = {}
    for w, S in subs:
        if S.leaf_count < 3:
            raise SubtreeTooSmall(f"subtree at {format_address(w)} has fewer than 3 leaves")
        for x in S.internal:
            if w + x not in T.internal:
                raise NotAVertex(f"{format_address(w + x)} is not internal in T")
        body = {w + x for x in S.internal} | {w + l for l in leaves(S)}
        body.discard(w)
        if body & claimed:
            raise NotEdgeDisjoint("subtrees share a non-root edge")
        claimed |= body
        absorb[w] = [w + l for l in leaves(S)]

    def build(v: Address) -> GeneralTree:
        if v in absorb:
            return GeneralTree(build(c) for c in absorb[v])
        if v in T.internal:
            return GeneralTree((build(v + "0"), build(v + "1")))
        return GeneralTree()

    return build("")
