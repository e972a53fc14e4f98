"""Bijections between zigzag permutations, 1-2 trees, and their relatives.

The maps and their statistic bookkeeping:

- ``omega``: tree -> Andre permutation, by reading the tree in reverse
  inorder.  The last entry of the image is the tree's pleaf.
- ``phi``: Andre -> Simsun one letter shorter.  Each right-to-left
  minimum moves to the previous right-to-left minimum's position (the
  value 1 drops out) and everything shrinks by one.  The last entry
  drops by exactly one.
- ``psi_c``: alternating permutation -> tree, grafting pairs of entries
  from the back of the permutation to the front.  After every step the
  pleaf of the intermediate tree is the first entry of the pair just
  placed, so the final pleaf is the permutation's first entry.  The
  grafting decisions are recorded in an :class:`AlgoCTrace`.
- ``psi_b``: the same bijection computed recursively instead, by
  reducing either the length (when the two largest values are adjacent
  up front) or the first entry (by swapping the two largest values).
- ``psi_signed``, ``omega_signed``, ``phi_signed``: the signed-label
  versions.  The first two conjugate the unsigned maps by the unique
  order isomorphism onto [n]; ``omega_signed`` also equals plain reverse
  inorder, which is how it is implemented.  ``phi_signed`` moves the
  suffix minima of the absolute-value word exactly as ``phi`` does and
  shrinks absolute values by one, keeping every other entry's sign.
- ``chuang_phi``: tree -> Simsun permutation directly; equals
  ``phi(omega(tree))`` and exists to cross-check that factorization.
- ``psi_inv``: inverse of ``psi_c`` by a memoized forward sweep over the
  alternating permutations of the same size.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .core import (
    Tree,
    Word,
    inorder,
    minimal_path,
    node,
    order_relabel,
    perm_from_sequence,
    pleaf,
    rtl_min_positions,
    signed_perm_from_sequence,
    tree_labels,
    validate_tree,
)
from .families import (
    FamilyTag,
    TYPE_A_GUARD,
    GuardExceededError,
    is_alternating,
    is_andre,
    is_hetyei_andre,
    is_simsun,
    iter_family,
)


@dataclass(frozen=True)
class AlgoCStep:
    """One grafting step: which vertex was split and how."""

    index: int  # step number i, executed from m-1 down to 1
    a: int  # smallest minimal-path vertex above the even entry
    b: int | None  # end of the rebuilt chain; absent in the C2 case
    case: str  # "C1" or "C2"


@dataclass(frozen=True)
class AlgoCTrace:
    """All grafting steps of one ``psi_c`` run, in execution order."""

    steps: tuple[AlgoCStep, ...]

    def lines(self) -> list[str]:
        return [
            f"i={s.index} a={s.a} b={'-' if s.b is None else s.b} case={s.case}"
            for s in self.steps
        ]


# ---------------------------------------------------------------------------
# omega and its inverse


def omega(t: Tree) -> Word:
    """Read the tree in reverse inorder; the image is an Andre permutation.

    >>> from zigzag.core import tree_from_literal
    >>> omega(tree_from_literal("1(2(3(7,9)),4(5,6(8)))"))
    (6, 8, 4, 5, 1, 2, 9, 3, 7)
    """
    return tuple(reversed(inorder(t)))


def omega_inv(p: Sequence[int]) -> Tree:
    """Rebuild the tree whose reverse inorder reading is ``p``.

    The reversed word splits at its minimum into left subtree, root,
    right subtree, recursively.
    """
    p = perm_from_sequence(p)
    if not is_andre(p):
        raise ValueError("omega_inv requires an Andre permutation")
    word = tuple(reversed(p))

    def build(seg: Word) -> Tree | None:
        if not seg:
            return None
        i = seg.index(min(seg))
        return Tree(seg[i], build(seg[:i]), build(seg[i + 1 :]))

    t = build(word)
    validate_tree(t)
    return t


def omega_signed(t: Tree) -> Word:
    """Reverse inorder reading of a signed tree."""
    return tuple(reversed(inorder(t)))


# ---------------------------------------------------------------------------
# phi and friends


def phi(p: Sequence[int]) -> Word:
    """Shrink an Andre permutation to a Simsun permutation, one shorter.

    >>> phi((6, 8, 4, 5, 1, 2, 9, 3, 7))
    (5, 7, 3, 4, 1, 2, 8, 6)
    """
    p = perm_from_sequence(p)
    if not is_andre(p):
        raise ValueError("phi requires an Andre permutation")
    n = len(p)
    if n == 1:
        return ()
    mins = rtl_min_positions(p)
    out: list[int] = [0] * (n - 1)
    skip = set(mins)
    for i in range(1, n):
        if i not in skip:
            out[i - 1] = p[i - 1] - 1
    for t in range(1, len(mins)):
        out[mins[t - 1] - 1] = p[mins[t] - 1] - 1
    return tuple(out)


def phi_inv(s: Sequence[int]) -> Word:
    """Inverse of :func:`phi`: re-insert the value 1 and grow by one.

    >>> phi_inv((5, 7, 3, 4, 1, 2, 8, 6))
    (6, 8, 4, 5, 1, 2, 9, 3, 7)
    """
    s = tuple(int(v) for v in s)
    if s:
        s = perm_from_sequence(s)
    if not is_simsun(s):
        raise ValueError("phi_inv requires a Simsun permutation")
    if not s:
        return (1,)
    n = len(s) + 1
    mins = rtl_min_positions(s)
    out: list[int] = [0] * n
    skip = set(mins)
    for i in range(1, n):
        if i not in skip:
            out[i - 1] = s[i - 1] + 1
    out[mins[0] - 1] = 1
    for t in range(1, len(mins)):
        out[mins[t] - 1] = s[mins[t - 1] - 1] + 1
    out[n - 1] = s[mins[-1] - 1] + 1
    return tuple(out)


def phi_signed(p: Sequence[int]) -> Word:
    """Signed version of :func:`phi` for forced-sign Andre words.

    The suffix minima of the absolute-value word are all positive; they
    move exactly as in :func:`phi`.  Every other entry keeps its sign
    while its absolute value shrinks by one.
    """
    p = signed_perm_from_sequence(p)
    if not is_hetyei_andre(p):
        raise ValueError("phi_signed requires a forced-sign Andre word")
    n = len(p)
    if n == 1:
        return ()
    absw = tuple(abs(v) for v in p)
    mins = rtl_min_positions(absw)
    out: list[int] = [0] * (n - 1)
    skip = set(mins)
    for i in range(1, n):
        if i not in skip:
            v = p[i - 1]
            out[i - 1] = (abs(v) - 1) * (1 if v > 0 else -1)
    for t in range(1, len(mins)):
        out[mins[t - 1] - 1] = absw[mins[t] - 1] - 1
    return tuple(out)


# ---------------------------------------------------------------------------
# psi: the grafting construction (two equivalent algorithms)


def _graft_states(p: Word) -> Iterator[tuple[int, int, int | None, str, Tree]]:
    """Run the grafting construction, yielding the state after each step."""
    n = len(p)
    m = (n + 1) // 2
    left: dict[int, int] = {}
    right: dict[int, int] = {}
    root = p[-1]
    if n % 2 == 0:
        left[root] = p[-2]

    def build(v: int) -> Tree:
        lk = build(left[v]) if v in left else None
        rk = build(right[v]) if v in right else None
        return Tree(v, lk, rk)

    for i in range(m - 1, 0, -1):
        x, y = p[2 * i - 2], p[2 * i - 1]
        path = [root]
        while path[-1] in left:
            path.append(left[path[-1]])
        a = min(v for v in path if v > y)
        parent = None if a == root else path[path.index(a) - 1]
        if a < x:
            # chain of right edges out of a, stopping at the last vertex
            # below x; its hanging subtrees swing over to the right side
            chain = [a]
            while chain[-1] in right and right[chain[-1]] < x:
                chain.append(right[chain[-1]])
            b = chain[-1]
            hang = [left.get(v) for v in chain] + [right.get(b)]
            spine = [y, *chain, x]
            for u, v in zip(spine, spine[1:]):
                left[u] = v
            left.pop(x, None)
            right.pop(x, None)
            for v, s in zip(spine, hang):
                if s is None:
                    right.pop(v, None)
                else:
                    right[v] = s
            case: str = "C1"
            brec: int | None = b
        else:
            # x slips under y, the whole subtree at a swings right
            right[y] = a
            left[y] = x
            case, brec = "C2", None
        if parent is None:
            root = y
        else:
            left[parent] = y
        yield i, a, brec, case, build(root)


def psi_c(p: Sequence[int]) -> tuple[Tree, AlgoCTrace]:
    """Alternating permutation -> tree by iterated grafting, with trace.

    >>> from zigzag.core import tree_to_literal
    >>> t, trace = psi_c((7, 3, 9, 1, 5, 4, 8, 2, 6))
    >>> tree_to_literal(t)
    '1(2(3(7,9)),4(5,6(8)))'
    """
    p = perm_from_sequence(p)
    if not is_alternating(p):
        raise ValueError("psi_c requires an alternating permutation")
    n = len(p)
    tree = Tree(p[-1]) if n % 2 == 1 else Tree(p[-1], Tree(p[-2]))
    steps = []
    for i, a, b, case, state in _graft_states(p):
        tree = state
        steps.append(AlgoCStep(i, a, b, case))
    validate_tree(tree)
    return tree, AlgoCTrace(tuple(steps))


def psi(p: Sequence[int]) -> Tree:
    """The tree image of an alternating permutation; pleaf = first entry."""
    return psi_c(p)[0]


def _subtree(t: Tree, label: int) -> Tree | None:
    if t.label == label:
        return t
    for child in (t.left, t.right):
        if child is not None:
            found = _subtree(child, label)
            if found is not None:
                return found
    return None


def _parent_label(t: Tree, label: int) -> int | None:
    for child in (t.left, t.right):
        if child is not None:
            if child.label == label:
                return t.label
            found = _parent_label(child, label)
            if found is not None:
                return found
    return None


def _replace_subtree(t: Tree, at: int, new: Tree) -> Tree:
    if t.label == at:
        return new
    kids = [
        _replace_subtree(c, at, new) if c is not None and at in tree_labels(c) else c
        for c in (t.left, t.right)
    ]
    return node(t.label, *kids)


def _swap_labels(t: Tree, u: int, v: int) -> Tree:
    mapping = {u: v, v: u}

    def rebuild(cur: Tree) -> Tree:
        kids = [rebuild(c) for c in (cur.left, cur.right) if c is not None]
        return node(mapping.get(cur.label, cur.label), *kids)

    return rebuild(t)


def psi_b(p: Sequence[int]) -> Tree:
    """Recursive computation of the same bijection as :func:`psi_c`.

    With k the first entry: if the second entry is k-1, strip both and
    recurse on the relabeled remainder, then splice k-1 and k back onto
    the minimal path.  Otherwise swap the values k-1 and k, recurse, and
    either swap the two labels back or, when they ended up siblings,
    rotate k under k-1.
    """
    p = perm_from_sequence(p)
    if not is_alternating(p):
        raise ValueError("psi_b requires an alternating permutation")
    return _psi_b(p)


def _psi_b(p: Word) -> Tree:
    n = len(p)
    if n == 1:
        return Tree(1)
    if n == 2:
        return Tree(1, Tree(2))
    k = p[0]
    if p[1] == k - 1:
        reduced = order_relabel(p[2:], range(1, n - 1))
        small = _psi_b(reduced)
        target = [*range(1, k - 1), *range(k + 1, n + 1)]
        grown = order_relabel(small, target)
        m = min(v for v in minimal_path(grown) if v > k)
        spliced = node(k - 1, Tree(k), _subtree(grown, m))
        if m == grown.label:
            return spliced
        return _replace_subtree(grown, m, spliced)
    swapped = tuple(k if v == k - 1 else k - 1 if v == k else v for v in p)
    t = _psi_b(swapped)
    if _parent_label(t, k) == _parent_label(t, k - 1):
        ell = _parent_label(t, k)
        knode = _subtree(t, k)
        rebuilt = node(ell, node(k - 1, Tree(k), knode.right), knode.left)
        return _replace_subtree(t, ell, rebuilt)
    return _swap_labels(t, k - 1, k)


@lru_cache(maxsize=None)
def _psi_table(n: int) -> dict[Tree, Word]:
    return {psi_c(p)[0]: p for p in iter_family(FamilyTag.ALT, n)}


def psi_inv(t: Tree, force: bool = False) -> Word:
    """The unique alternating permutation mapping to ``t`` under psi_c.

    Found by a memoized forward sweep over all alternating permutations
    of the same size, so subject to the same enumeration guard.
    """
    validate_tree(t)
    labels = tree_labels(t)
    if labels != tuple(range(1, len(labels) + 1)):
        raise ValueError("psi_inv expects a tree labeled by 1..n")
    n = len(labels)
    if n > TYPE_A_GUARD and not force:
        raise GuardExceededError(
            f"psi_inv at n={n} exceeds the guard (n <= {TYPE_A_GUARD})"
        )
    return _psi_table(n)[t]


def psi_signed(p: Sequence[int]) -> Tree:
    """Signed alternating permutation -> signed tree, by conjugation.

    Relabel the entries onto [n] order-preservingly, apply the unsigned
    grafting map, and relabel the tree back.
    """
    p = signed_perm_from_sequence(p)
    if not is_alternating(p):
        raise ValueError("psi_signed requires an alternating signed permutation")
    n = len(p)
    unsigned = order_relabel(p, range(1, n + 1))
    tree = psi_c(unsigned)[0]
    return order_relabel(tree, sorted(p))


# ---------------------------------------------------------------------------
# the direct tree -> Simsun map


def chuang_phi(t: Tree) -> Word:
    """Peel a tree into a Simsun permutation one letter shorter.

    While the root has a single child, emit that child and descend into
    it; when it has two, emit the right (larger) subtree in reverse
    inorder and cut it off.  Finally shift every letter down by one.
    Equals ``phi(omega(t))``.

    >>> from zigzag.core import tree_from_literal
    >>> chuang_phi(tree_from_literal("1(2(3(7,9)),4(5,6(8)))"))
    (5, 7, 3, 4, 1, 2, 8, 6)
    """
    validate_tree(t)
    word: list[int] = []
    cur = t
    while cur.left is not None:
        if cur.right is None:
            word.append(cur.left.label)
            cur = cur.left
        else:
            word.extend(reversed(inorder(cur.right)))
            cur = Tree(cur.label, cur.left)
    return tuple(v - 1 for v in word)
