"""Domain types and statistics for zigzag combinatorics.

Value conventions used across the whole package:

- A permutation of [n] = {1, ..., n} is a tuple of ints in one-line
  notation.  Positions are 1-indexed wherever a position is reported or
  accepted.
- A signed permutation of [n] is a tuple of nonzero ints whose absolute
  values are exactly {1, ..., n}.  Signed entries compare in ordinary
  integer order, so -4 < -1 < 2.
- A word is a tuple of pairwise distinct ints; permutations and signed
  permutations are words.
- An increasing 1-2 tree is a rooted tree with at most two children per
  node and labels strictly increasing away from the root.  It is stored
  as nested :class:`Tree` records in canonical orientation: a unique
  child is a left child, and of two children the smaller label goes
  left.  Orientation is therefore a function of the labels alone;
  algorithms that need to break it work on transient structures and
  re-canonicalize before returning.
- A signed increasing 1-2 tree uses the same :class:`Tree` type with
  signed labels whose absolute values are exactly {1, ..., n}; the root
  is then the minimum label in signed order.

Text formats (also used by the CLI):

- permutation: whitespace- or comma-separated integers, a minus sign for
  negative entries; a bare digit string like ``2143`` is accepted for
  unsigned permutations with n <= 9.
- tree literal: ``LABEL``, ``LABEL(T)`` or ``LABEL(T,T)``.  The one-child
  form is a left child; the two-child form lists left then right.  Input
  is validated against the canonical orientation, never reordered.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Sequence

Word = tuple[int, ...]


class InvalidPermutationError(ValueError):
    """Input sequence is not a valid (signed) permutation."""


class InvalidTreeError(ValueError):
    """Structure or labels violate the increasing 1-2 tree invariants."""


class TreeParseError(InvalidTreeError):
    """Tree literal text does not conform to the grammar."""


# ---------------------------------------------------------------------------
# permutations and words


def perm_from_sequence(values: Sequence[int]) -> Word:
    """Validate and freeze a permutation of [n].

    >>> perm_from_sequence([2, 1, 4, 3])
    (2, 1, 4, 3)
    >>> perm_from_sequence([2, 2, 3])
    Traceback (most recent call last):
        ...
    zigzag.core.InvalidPermutationError: duplicate value 2
    """
    entries = tuple(int(v) for v in values)
    if not entries:
        raise InvalidPermutationError("a permutation has length n >= 1")
    seen: set[int] = set()
    for v in entries:
        if v in seen:
            raise InvalidPermutationError(f"duplicate value {v}")
        seen.add(v)
    if seen != set(range(1, len(entries) + 1)):
        raise InvalidPermutationError(
            f"entries must be exactly 1..{len(entries)}, got {sorted(seen)}"
        )
    return entries


def signed_perm_from_sequence(values: Sequence[int]) -> Word:
    """Validate and freeze a signed permutation of [n].

    >>> signed_perm_from_sequence([1, -2, 3])
    (1, -2, 3)
    >>> signed_perm_from_sequence([1, -1])
    Traceback (most recent call last):
        ...
    zigzag.core.InvalidPermutationError: duplicate absolute value 1
    """
    entries = tuple(int(v) for v in values)
    if not entries:
        raise InvalidPermutationError("a signed permutation has length n >= 1")
    seen: set[int] = set()
    for v in entries:
        if v == 0:
            raise InvalidPermutationError("zero entries are not allowed")
        if abs(v) in seen:
            raise InvalidPermutationError(f"duplicate absolute value {abs(v)}")
        seen.add(abs(v))
    if seen != set(range(1, len(entries) + 1)):
        raise InvalidPermutationError(
            f"absolute values must be exactly 1..{len(entries)}, got {sorted(seen)}"
        )
    return entries


def subword_smallest(w: Sequence[int], k: int) -> Word:
    """The subsequence of the k smallest entries, in their original order.

    "Smallest" means ordinary integer order, which for signed permutations
    is signed order (-4 comes before 2).

    >>> subword_smallest((3, 1, 2, 4, 5), 3)
    (3, 1, 2)
    >>> subword_smallest((2, -4, -1, 3, 5), 1)
    (-4,)
    """
    if not 1 <= k <= len(w):
        raise ValueError(f"k must be in 1..{len(w)}, got {k}")
    threshold = sorted(w)[k - 1]
    return tuple(v for v in w if v <= threshold)


def has_double_descent(w: Sequence[int]) -> bool:
    """True iff some three consecutive entries strictly decrease.

    >>> has_double_descent((4, 3, 1, 2))
    True
    >>> has_double_descent((2, 1))
    False
    """
    return any(w[i] > w[i + 1] > w[i + 2] for i in range(len(w) - 2))


def ends_with_ascent(w: Sequence[int]) -> bool:
    """True iff the last two entries increase; words of length <= 1 qualify.

    >>> ends_with_ascent((3, 1, 2, 4))
    True
    >>> ends_with_ascent((2, 1))
    False
    >>> ends_with_ascent((1,))
    True
    """
    return len(w) <= 1 or w[-2] < w[-1]


def rtl_min_positions(w: Sequence[int]) -> tuple[int, ...]:
    """1-indexed positions of the right-to-left minima, in increasing order.

    Position i is included iff w_i is strictly smaller than every later
    entry; the last position always qualifies.

    >>> rtl_min_positions((6, 8, 4, 5, 1, 2, 9, 3, 7))
    (5, 6, 8, 9)
    """
    positions: list[int] = []
    best: int | None = None
    for i in range(len(w) - 1, -1, -1):
        if best is None or w[i] < best:
            positions.append(i + 1)
            best = w[i]
    return tuple(reversed(positions))


# ---------------------------------------------------------------------------
# increasing 1-2 trees


@dataclass(frozen=True)
class Tree:
    """One node of an increasing 1-2 tree, in canonical orientation."""

    label: int
    left: Tree | None = None
    right: Tree | None = None

    def __repr__(self) -> str:
        return f"Tree[{tree_to_literal(self)}]"


def node(label: int, *children: Tree | None) -> Tree:
    """Build a node, placing the given subtrees in canonical orientation.

    None entries are dropped; of two children the smaller-rooted subtree
    becomes the left child.
    """
    kids = sorted((c for c in children if c is not None), key=lambda c: c.label)
    if len(kids) > 2:
        raise InvalidTreeError(f"node {label} would have {len(kids)} children")
    left = kids[0] if kids else None
    right = kids[1] if len(kids) == 2 else None
    return Tree(label, left, right)


def _walk(t: Tree) -> Iterator[Tree]:
    stack = [t]
    while stack:
        cur = stack.pop()
        yield cur
        if cur.left is not None:
            stack.append(cur.left)
        if cur.right is not None:
            stack.append(cur.right)


def tree_labels(t: Tree) -> tuple[int, ...]:
    """All labels of the tree, sorted."""
    return tuple(sorted(n.label for n in _walk(t)))


def validate_tree(t: Tree) -> None:
    """Check the increasing 1-2 tree invariants, raising on violation.

    Labels may be any distinct nonzero integers; trees on arbitrary label
    sets arise as intermediate states and as relabelings.  Use
    :func:`tree_spans_range` to additionally demand that the absolute
    label values are exactly 1..n.
    """
    seen: set[int] = set()
    for cur in _walk(t):
        if cur.label in seen:
            raise InvalidTreeError(f"duplicate label {cur.label}")
        seen.add(cur.label)
        if cur.left is None and cur.right is not None:
            raise InvalidTreeError(
                f"node {cur.label} has a right child but no left child"
            )
        if cur.left is not None and cur.left.label <= cur.label:
            raise InvalidTreeError(
                f"child {cur.left.label} must be greater than parent {cur.label}"
            )
        if cur.right is not None and cur.right.label <= cur.label:
            raise InvalidTreeError(
                f"child {cur.right.label} must be greater than parent {cur.label}"
            )
        if cur.left is not None and cur.right is not None:
            if cur.left.label > cur.right.label:
                raise InvalidTreeError(
                    f"children of {cur.label} are not in canonical order: "
                    f"{cur.left.label} before {cur.right.label}"
                )
    if 0 in seen:
        raise InvalidTreeError("label 0 is not allowed")


def tree_spans_range(t: Tree) -> bool:
    """True iff the absolute label values are exactly 1..n."""
    labels = tree_labels(t)
    return {abs(v) for v in labels} == set(range(1, len(labels) + 1))


_TOKEN = re.compile(r"\s*(-?\d+|[(),])")


def _tokenize_literal(text: str) -> list[str]:
    tokens: list[str] = []
    at = 0
    while at < len(text):
        match = _TOKEN.match(text, at)
        if match is None:
            if text[at:].strip() == "":
                break
            raise TreeParseError(f"cannot tokenize tree literal {text!r}")
        tokens.append(match.group(1))
        at = match.end()
    if not tokens:
        raise TreeParseError(f"cannot tokenize tree literal {text!r}")
    return tokens


def tree_from_literal(text: str) -> Tree:
    """Parse a tree literal such as ``1(2(3(7,9)),4(5,6(8)))``.

    The one-child form means a left child; two children are listed left
    then right.  The parsed tree is validated, not silently reordered.

    >>> tree_from_literal("1(2,3)")
    Tree[1(2,3)]
    """
    tokens = _tokenize_literal(text)
    pos = 0

    def take() -> str:
        nonlocal pos
        if pos >= len(tokens):
            raise TreeParseError("unexpected end of tree literal")
        tok = tokens[pos]
        pos += 1
        return tok

    def parse() -> Tree:
        tok = take()
        try:
            label = int(tok)
        except ValueError:
            raise TreeParseError(f"expected a label, got {tok!r}") from None
        if pos < len(tokens) and tokens[pos] == "(":
            take()
            first = parse()
            second = None
            tok = take()
            if tok == ",":
                second = parse()
                tok = take()
            if tok != ")":
                raise TreeParseError(f"expected ')', got {tok!r}")
            return Tree(label, first, second)
        return Tree(label)

    result = parse()
    if pos != len(tokens):
        raise TreeParseError(f"trailing text in tree literal {text!r}")
    validate_tree(result)
    return result


def tree_to_literal(t: Tree) -> str:
    """Render a tree in the literal grammar, canonical orientation."""
    if t.left is None and t.right is None:
        return str(t.label)
    if t.right is None:
        return f"{t.label}({tree_to_literal(t.left)})"
    return f"{t.label}({tree_to_literal(t.left)},{tree_to_literal(t.right)})"


def tree_to_json(t: Tree) -> dict:
    """JSON-friendly form: {label, left, right} with null for absent children."""
    return {
        "label": t.label,
        "left": tree_to_json(t.left) if t.left is not None else None,
        "right": tree_to_json(t.right) if t.right is not None else None,
    }


def tree_from_json(obj: dict) -> Tree:
    """Inverse of :func:`tree_to_json`; the result is validated."""

    def build(d: dict) -> Tree:
        left = build(d["left"]) if d.get("left") is not None else None
        right = build(d["right"]) if d.get("right") is not None else None
        return Tree(int(d["label"]), left, right)

    result = build(obj)
    validate_tree(result)
    return result


def inorder(t: Tree) -> Word:
    """Left subtree, node, right subtree, recursively.

    >>> inorder(tree_from_literal("1(2(3(7,9)),4(5,6(8)))"))
    (7, 3, 9, 2, 1, 5, 4, 8, 6)
    """
    out: list[int] = []

    def visit(cur: Tree) -> None:
        if cur.left is not None:
            visit(cur.left)
        out.append(cur.label)
        if cur.right is not None:
            visit(cur.right)

    visit(t)
    return tuple(out)


def minimal_path(t: Tree) -> tuple[int, ...]:
    """The path from the root following left children down to a leaf.

    A unique child is always a left child, so the terminal node is a leaf.

    >>> minimal_path(tree_from_literal("1(2(3(7,9)),4(5,6(8)))"))
    (1, 2, 3, 7)
    """
    path = [t]
    while path[-1].left is not None:
        path.append(path[-1].left)
    return tuple(n.label for n in path)


def pleaf(t: Tree) -> int:
    """The terminal leaf of the minimal path."""
    return minimal_path(t)[-1]


def maximal_path_from(t: Tree, v: int) -> tuple[int, ...]:
    """The chain starting at label v following right children.

    The terminal node has no right child but may still own a left child.
    """
    start = next((n for n in _walk(t) if n.label == v), None)
    if start is None:
        raise ValueError(f"label {v} not in tree")
    path = [start]
    while path[-1].right is not None:
        path.append(path[-1].right)
    return tuple(n.label for n in path)


# ---------------------------------------------------------------------------
# order isomorphisms


def order_relabel(obj: Word | Tree, target_labels: Sequence[int]):
    """Apply the unique order isomorphism onto ``target_labels``.

    The i-th smallest current label is replaced by the i-th smallest
    target label, entrywise for words and nodewise for trees.  Order
    isomorphisms preserve relative order, so canonical tree orientation
    is untouched.

    >>> order_relabel((6, -3, 9, -8, 2, -1, 7, -4, 5), range(1, 10))
    (7, 3, 9, 1, 5, 4, 8, 2, 6)
    """
    target = [int(v) for v in target_labels]
    if len(set(target)) != len(target):
        raise ValueError("target labels must be pairwise distinct")
    if isinstance(obj, Tree):
        current = tree_labels(obj)
    else:
        current = tuple(sorted(obj))
    if len(current) != len(target):
        raise ValueError(
            f"size mismatch: object has {len(current)} labels, "
            f"target has {len(target)}"
        )
    mapping = dict(zip(current, sorted(target)))
    if isinstance(obj, Tree):

        def rebuild(cur: Tree) -> Tree:
            kids = [rebuild(c) for c in (cur.left, cur.right) if c is not None]
            return node(mapping[cur.label], *kids)

        return rebuild(obj)
    return tuple(mapping[v] for v in obj)


# ---------------------------------------------------------------------------
# text formats


def perm_to_text(p: Sequence[int]) -> str:
    """Render a (signed) permutation; compact digits when unambiguous."""
    if p and all(1 <= v <= 9 for v in p):
        return "".join(str(v) for v in p)
    return " ".join(str(v) for v in p)


def perm_from_text(text: str) -> Word:
    """Parse permutation text; bare digit strings split into single digits."""
    s = text.strip()
    if not s:
        raise InvalidPermutationError("empty permutation text")
    if re.search(r"[,\s]", s):
        parts = [x for x in re.split(r"[,\s]+", s) if x]
    elif s.isdigit() and len(s) > 1:
        parts = list(s)
    else:
        parts = [s]
    try:
        return tuple(int(x) for x in parts)
    except ValueError:
        raise InvalidPermutationError(f"cannot parse permutation {text!r}") from None
