"""Membership predicates and exhaustive enumerators for the object families.

Ten families are supported, identified by :class:`FamilyTag`:

==========  ============================================  ==========
tag         objects                                       refined by
==========  ============================================  ==========
alt         down-up alternating permutations              first entry
alt-b       signed down-up alternating permutations       first entry
snake       signed alternating, positive first entry      first entry
tree        increasing 1-2 trees                          pleaf
tree-b      signed increasing 1-2 trees                   pleaf
andre       Andre permutations                            last entry
simsun      Simsun permutations                           last entry
andre-b     signed Andre permutations (signed subwords)   last entry
andre-h     Andre word with forced-positive suffix minima last entry
simsun-b    Simsun word with forced-positive suffix mins  last entry
==========  ============================================  ==========

Enumeration is deliberately oracle-grade: permutation families filter the
full symmetric (or signed symmetric) group in lexicographic order, and
tree families are generated by inserting each new largest label at every
node with a free child slot.  Guards keep accidental huge enumerations
out; pass ``force=True`` to override them.
"""

from __future__ import annotations

import enum
import itertools
from typing import Iterable, Iterator

from .core import (
    Tree,
    Word,
    ends_with_ascent,
    has_double_descent,
    inorder,
    order_relabel,
    pleaf,
    rtl_min_positions,
    subword_smallest,
)

TYPE_A_GUARD = 12
TYPE_B_GUARD = 8


class GuardExceededError(ValueError):
    """Enumeration size guard tripped without force=True."""


class FamilyTag(str, enum.Enum):
    ALT = "alt"
    ALT_B = "alt-b"
    SNAKE = "snake"
    TREE = "tree"
    TREE_B = "tree-b"
    ANDRE = "andre"
    SIMSUN = "simsun"
    ANDRE_B = "andre-b"
    ANDRE_H = "andre-h"
    SIMSUN_B = "simsun-b"


_SIGNED_TAGS = {
    FamilyTag.ALT_B,
    FamilyTag.SNAKE,
    FamilyTag.TREE_B,
    FamilyTag.ANDRE_B,
    FamilyTag.ANDRE_H,
    FamilyTag.SIMSUN_B,
}
_TREE_TAGS = {FamilyTag.TREE, FamilyTag.TREE_B}
_FIRST_TAGS = {FamilyTag.ALT, FamilyTag.ALT_B, FamilyTag.SNAKE}


# ---------------------------------------------------------------------------
# predicates


def is_alternating(p: Word) -> bool:
    """Down-up zigzag: p1 > p2 < p3 > p4 < ...; length <= 1 qualifies.

    >>> is_alternating((2, 1, 4, 3))
    True
    >>> is_alternating((1, 2, 3, 4))
    False
    """
    return all(
        p[i] > p[i + 1] if i % 2 == 0 else p[i] < p[i + 1]
        for i in range(len(p) - 1)
    )


def is_snake(p: Word) -> bool:
    """Alternating with a positive first entry."""
    return bool(p) and p[0] > 0 and is_alternating(p)


def is_andre(p: Word) -> bool:
    """Every bottom-k subword avoids double descents and ends ascending.

    >>> is_andre((3, 1, 2, 4, 5))
    True
    >>> is_andre((4, 3, 5, 1, 2))
    False
    """
    for k in range(2, len(p) + 1):
        w = subword_smallest(p, k)
        if not ends_with_ascent(w) or has_double_descent(w):
            return False
    return True


def is_andre_valley(p: Word) -> bool:
    """Valley-condition characterization of the Andre property.

    No double descents, the word ends with an ascent, and at every valley
    the run of larger letters just before it has a larger minimum than
    the run of larger letters just after it.
    """
    n = len(p)
    if n <= 1:
        return True
    if p[-2] > p[-1]:
        return False
    if has_double_descent(p):
        return False
    for i in range(1, n - 1):
        if p[i - 1] > p[i] < p[i + 1]:
            lo = i - 1
            while lo >= 0 and p[lo] > p[i]:
                lo -= 1
            hi = i + 1
            while hi < n and p[hi] > p[i]:
                hi += 1
            if min(p[lo + 1 : i]) <= min(p[i + 1 : hi]):
                return False
    return True


def is_simsun(p: Word) -> bool:
    """Every bottom-k subword avoids double descents.

    >>> is_simsun((2, 5, 1, 3, 4))
    True
    >>> is_simsun((3, 2, 1))
    False
    """
    for k in range(3, len(p) + 1):
        if has_double_descent(subword_smallest(p, k)):
            return False
    return True


def is_signed_andre_b(p: Word) -> bool:
    """Andre condition on a signed word, subwords taken in signed order."""
    return is_andre(p)


def is_hetyei_andre(p: Word) -> bool:
    """Absolute word is Andre and every suffix minimum carries a plus sign."""
    absw = tuple(abs(v) for v in p)
    if not is_andre(absw):
        return False
    return all(p[i - 1] > 0 for i in rtl_min_positions(absw))


def is_signed_simsun(p: Word) -> bool:
    """Absolute word is Simsun and every suffix minimum carries a plus sign."""
    absw = tuple(abs(v) for v in p)
    if not is_simsun(absw):
        return False
    return all(p[i - 1] > 0 for i in rtl_min_positions(absw))


_PREDICATES = {
    FamilyTag.ALT: is_alternating,
    FamilyTag.ALT_B: is_alternating,
    FamilyTag.SNAKE: is_snake,
    FamilyTag.ANDRE: is_andre,
    FamilyTag.SIMSUN: is_simsun,
    FamilyTag.ANDRE_B: is_signed_andre_b,
    FamilyTag.ANDRE_H: is_hetyei_andre,
    FamilyTag.SIMSUN_B: is_signed_simsun,
}


# ---------------------------------------------------------------------------
# raw object streams


def iter_permutations(n: int) -> Iterator[Word]:
    """All permutations of [n] in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


def iter_signed_permutations(n: int) -> Iterator[Word]:
    """All signed permutations of [n], lexicographic in signed entry order."""
    domain = list(range(-n, 0)) + list(range(1, n + 1))
    used = [False] * (n + 1)
    prefix: list[int] = []

    def rec() -> Iterator[Word]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in domain:
            if not used[abs(v)]:
                used[abs(v)] = True
                prefix.append(v)
                yield from rec()
                prefix.pop()
                used[abs(v)] = False

    return rec()


def _attach(t: Tree, at: int, label: int) -> Tree:
    # label exceeds every label in t, so it lands right of an existing child
    if t.label == at:
        if t.left is None:
            return Tree(t.label, Tree(label))
        if t.right is None:
            return Tree(t.label, t.left, Tree(label))
        raise ValueError(f"node {at} already has two children")
    for side in ("left", "right"):
        child = getattr(t, side)
        if child is not None and at in _label_set(child):
            new_child = _attach(child, at, label)
            if side == "left":
                return Tree(t.label, new_child, t.right)
            return Tree(t.label, t.left, new_child)
    raise ValueError(f"label {at} not in tree")


def _label_set(t: Tree) -> frozenset[int]:
    out = {t.label}
    for child in (t.left, t.right):
        if child is not None:
            out |= _label_set(child)
    return frozenset(out)


def _gen_trees(n: int) -> Iterator[Tree]:
    if n == 1:
        yield Tree(1)
        return
    for t in _gen_trees(n - 1):
        for v in sorted(_open_slots(t)):
            yield _attach(t, v, n)


def _open_slots(t: Tree) -> list[int]:
    out = []
    stack = [t]
    while stack:
        cur = stack.pop()
        if cur.right is None:
            out.append(cur.label)
        for child in (cur.left, cur.right):
            if child is not None:
                stack.append(child)
    return out


def iter_trees(n: int) -> Iterator[Tree]:
    """All increasing 1-2 trees on [n], ordered by their inorder words."""
    yield from sorted(_gen_trees(n), key=inorder)


def iter_signed_trees(n: int) -> Iterator[Tree]:
    """All signed increasing 1-2 trees on [n], ordered by inorder words.

    Every signed tree is the order-preserving relabeling of a plain tree
    onto one of the 2^n sign-choice label sets.
    """
    base = list(_gen_trees(n))
    out: list[Tree] = []
    for signs in itertools.product((1, -1), repeat=n):
        target = [s * v for s, v in zip(signs, range(1, n + 1))]
        out.extend(order_relabel(t, target) for t in base)
    out.sort(key=inorder)
    yield from out


# ---------------------------------------------------------------------------
# family enumeration


def refinement_statistic(tag: FamilyTag | str, obj) -> int:
    """The statistic a family is refined by: first entry, last entry, or pleaf."""
    tag = FamilyTag(tag)
    if tag in _TREE_TAGS:
        return pleaf(obj)
    if tag in _FIRST_TAGS:
        return obj[0]
    return obj[-1]


def _check_guard(tag: FamilyTag, n: int, force: bool) -> None:
    if n < 1:
        raise ValueError("families start at n = 1")
    guard = TYPE_B_GUARD if tag in _SIGNED_TAGS else TYPE_A_GUARD
    if n > guard and not force:
        raise GuardExceededError(
            f"enumeration of {tag.value} at n={n} exceeds the guard "
            f"(n <= {guard}); pass force=True to override"
        )


def _check_k(tag: FamilyTag, n: int, k: int | None) -> None:
    if k is None:
        return
    if tag in _SIGNED_TAGS:
        if k == 0 or abs(k) > n:
            raise ValueError(f"refinement k must satisfy 1 <= |k| <= {n}, got {k}")
    elif not 1 <= k <= n:
        raise ValueError(f"refinement k must satisfy 1 <= k <= {n}, got {k}")


def iter_family(
    tag: FamilyTag | str, n: int, k: int | None = None, force: bool = False
) -> Iterator:
    """Stream the family in deterministic lexicographic order.

    Permutation families come out in lexicographic order of their entry
    tuples (signed entries in signed order); tree families in
    lexicographic order of their inorder words.  ``k`` filters on the
    family's refinement statistic.
    """
    tag = FamilyTag(tag)
    _check_guard(tag, n, force)
    _check_k(tag, n, k)
    if tag is FamilyTag.TREE:
        objs: Iterable = iter_trees(n)
    elif tag is FamilyTag.TREE_B:
        objs = iter_signed_trees(n)
    elif tag in _SIGNED_TAGS:
        pred = _PREDICATES[tag]
        objs = (p for p in iter_signed_permutations(n) if pred(p))
    else:
        pred = _PREDICATES[tag]
        objs = (p for p in iter_permutations(n) if pred(p))
    for obj in objs:
        if k is None or refinement_statistic(tag, obj) == k:
            yield obj


def enumerate_family(
    tag: FamilyTag | str, n: int, k: int | None = None, force: bool = False
) -> list:
    """The family as an ordered list; see :func:`iter_family`."""
    return list(iter_family(tag, n, k, force))


def count_family(
    tag: FamilyTag | str, n: int, k: int | None = None, force: bool = False
) -> int:
    """Number of family members, equal to ``len(enumerate_family(...))``."""
    return sum(1 for _ in iter_family(tag, n, k, force))


def count_hetyei_fast(n: int, k: int, force: bool = False) -> int:
    """Number of forced-sign Andre words of [n] with last entry k.

    Signs are forced positive exactly at the suffix-minimum positions of
    the underlying Andre word and free elsewhere, so each Andre word with
    r suffix minima contributes 2^(n-r).  Only plain permutations of [n]
    are enumerated, which is what makes this fast.
    """
    if n < 1:
        raise ValueError("families start at n = 1")
    if n > TYPE_A_GUARD and not force:
        raise GuardExceededError(
            f"counting at n={n} exceeds the guard (n <= {TYPE_A_GUARD}); "
            "pass force=True to override"
        )
    if not 1 <= k <= n:
        raise ValueError(f"refinement k must satisfy 1 <= k <= {n}, got {k}")
    total = 0
    for p in iter_permutations(n):
        if p[-1] == k and is_andre(p):
            total += 2 ** (n - len(rtl_min_positions(p)))
    return total
