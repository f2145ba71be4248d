"""Group elements as tree pairs: reduction, multiplication, the vertex action,
rotations as generators, words, and structural predicates."""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .errors import NotALeaf, NotAVertex, PivotMissing
from .trees import (
    Address,
    BinaryTree,
    TRIVIAL,
    format_address,
    join,
    leaves,
    parse_address,
    right_vine,
    rotate,
    subtree_at,
)


class RotationSymbol(NamedTuple):
    u: Address
    inverse: bool = False

    def opposite(self) -> "RotationSymbol":
        return RotationSymbol(self.u, not self.inverse)

    @property
    def pivots(self) -> tuple[Address, Address]:
        return (self.u, self.u + ("1" if self.inverse else "0"))

    def __str__(self) -> str:
        return ("~" if self.inverse else "") + format_address(self.u)


Word = tuple[RotationSymbol, ...]


def parse_symbol(tok: str) -> RotationSymbol:
    inv = tok.startswith("~")
    if inv:
        tok = tok[1:]
    return RotationSymbol(parse_address(tok), inv)


def parse_word(s: str) -> Word:
    return tuple(parse_symbol(tok) for tok in s.split())


def format_word(w: Word) -> str:
    return " ".join(str(s) for s in w)


class TreePair(NamedTuple):
    d: BinaryTree
    r: BinaryTree

    def __str__(self) -> str:
        return f"({self.d.to_text()}, {self.r.to_text()})"

    def to_json(self) -> dict:
        return {"d": self.d.to_json(), "r": self.r.to_json()}

    @staticmethod
    def from_json(obj: dict) -> "TreePair":
        return TreePair(BinaryTree.from_json(obj["d"]), BinaryTree.from_json(obj["r"]))


IDENTITY = TreePair(TRIVIAL, TRIVIAL)


def _pair(d: BinaryTree, r: BinaryTree) -> TreePair:
    if d.leaf_count != r.leaf_count:
        raise NotAVertex("tree pair must have equal leaf counts")
    return TreePair(d, r)


def pair(d: BinaryTree, r: BinaryTree) -> TreePair:
    return _pair(d, r)


def reduce(p: TreePair) -> TreePair:
    """Remove matching exposed carets until none remain."""
    d, r = set(p.d.internal), set(p.r.internal)
    while True:
        dl = leaves(BinaryTree(d))
        rl = leaves(BinaryTree(r))
        hit = None
        for i in range(len(dl) - 1):
            a, b = dl[i], dl[i + 1]
            x, y = rl[i], rl[i + 1]
            if a[:-1] == b[:-1] and a[-1:] == "0" and x[:-1] == y[:-1] and x[-1:] == "0":
                hit = (a[:-1], x[:-1])
                break
        if hit is None:
            return TreePair(BinaryTree(d), BinaryTree(r))
        d.discard(hit[0])
        r.discard(hit[1])


def invert(p: TreePair) -> TreePair:
    return TreePair(p.r, p.d)


def multiply(a: TreePair, b: TreePair) -> TreePair:
    """Unreduced product: expand both factors to the common middle tree."""
    A, B = a
    C, D = b
    M = BinaryTree(B.internal | C.internal)

    def expand(base: BinaryTree, mid: BinaryTree) -> BinaryTree:
        # grow `base` by the components of M - mid, attached at matching leaves
        out = set(base.internal)
        ml = leaves(mid)
        bl = leaves(base)
        for i, v in enumerate(ml):
            if v in M.internal:
                sub = subtree_at(M, v)
                out.update(bl[i] + x for x in sub.internal)
        return BinaryTree(out)

    return TreePair(expand(A, B), expand(D, C))


def _infix_key(v: Address):
    return tuple(int(b) for b in v) + (0.5,)


def apply_element(p: TreePair, v: Address) -> Address:
    """The total action of the pair on vertex addresses of the standard model."""
    D, R = p
    dl = leaves(D)
    rl = leaves(R)
    for k in range(len(v) + 1):
        q = v[:k]
        if q in dl:
            return rl[dl.index(q)] + v[k:]
    di = sorted(D.internal, key=_infix_key)
    ri = sorted(R.internal, key=_infix_key)
    return ri[di.index(v)]


def rotation_as_pair(s: RotationSymbol) -> TreePair:
    def vine(x: Address) -> BinaryTree:
        return BinaryTree(x[:i] for i in range(len(x) + 1))

    p = TreePair(vine(s.u + "0"), vine(s.u + "1"))
    return invert(p) if s.inverse else p


def word_to_pair(w: Word) -> TreePair:
    out = IDENTITY
    for s in w:
        out = reduce(multiply(out, rotation_as_pair(s)))
    return out


def path_evaluate(T: BinaryTree, w: Word) -> list[BinaryTree]:
    """Visited vertex sequence of the edge path starting at T."""
    seq = [T]
    for i, s in enumerate(w):
        try:
            T = rotate(T, s.u, s.inverse)
        except PivotMissing as e:
            raise PivotMissing(f"symbol {i} ({s}): {e}") from None
        seq.append(T)
    return seq


def classify_multiplication(p: TreePair, s: RotationSymbol) -> str:
    """How multiplying p by a rotation affects tree size.

    Returns "NonIncreasing", "MinimallyIncreasing" or "Increasing" based on
    how much of the pivot vine is missing from p's range tree.
    """
    x = s.u + ("1" if s.inverse else "0")
    need = {x[:i] for i in range(len(x) + 1)}
    missing = need - p.r.internal
    if not missing:
        return "NonIncreasing"
    if len(missing) == 1:
        return "MinimallyIncreasing"
    return "Increasing"


def is_positive(p: TreePair) -> bool:
    return p.r == right_vine(p.r.carets)


def is_prime_positive(p: TreePair) -> bool:
    if not is_positive(p) or p.d.carets < 2:
        return False
    return subtree_at(p.d, "1") == TRIVIAL


def leaf_depths(T: BinaryTree) -> list[int]:
    return [len(v) for v in leaves(T)]


def parity_condition(p: TreePair) -> bool:
    """True iff matching leaf depths agree mod 2 (a rigid coloring exists)."""
    return all(
        (a - b) % 2 == 0 for a, b in zip(leaf_depths(p.d), leaf_depths(p.r))
    )


def deferment(p: TreePair, host: BinaryTree, leaf: Address) -> TreePair:
    """Attach both trees of p to host at one of its leaves."""
    if leaf not in leaves(host):
        raise NotALeaf(f"{format_address(leaf)} is not a leaf of {host.to_text()}")
    return TreePair(
        BinaryTree(set(host.internal) | {leaf + x for x in p.d.internal}),
        BinaryTree(set(host.internal) | {leaf + x for x in p.r.internal}),
    )


def all_pairs(n: int) -> Iterable[TreePair]:
    """All reduced tree pairs with exactly n carets on each side."""
    from .trees import all_trees

    for d in all_trees(n):
        for r in all_trees(n):
            p = TreePair(d, r)
            if reduce(p) == p:
                yield p
