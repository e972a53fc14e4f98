"""Entringer and Arnold number triangles via boustrophedon recurrences.

Both triangles are computed row by row with exact Python integers, so
there is no overflow at any size.  The Entringer numbers E(n, k) are
indexed by 1 <= k <= n; their row sums are the Euler numbers.  The
Arnold numbers S(n, k) are indexed by 1 <= |k| <= n; the sums over
positive k are the Springer numbers.

Recurrences:

- E(1, 1) = 1, E(n, 1) = 0 for n >= 2, and
  E(n, k) = E(n, k-1) + E(n-1, n+1-k) for n >= k >= 2.
- S(1, 1) = S(1, -1) = 1, S(n, -n) = 0 for n >= 2, and per row
  S(n, k) = S(n, k-1) + S(n-1, -k)    for -1 >= k > -n,
  S(n, 1) = S(n, -1),
  S(n, k) = S(n, k-1) + S(n-1, -k+1)  for n >= k > 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

ENTRINGER = "entringer"
ARNOLD = "arnold"


@dataclass(frozen=True)
class TriangleTable:
    """A computed triangle: entries, row order, and row sums."""

    kind: str
    n_max: int
    values: dict[tuple[int, int], int] = field(repr=False)
    row_sums: tuple[int, ...]

    def value(self, n: int, k: int) -> int:
        return self.values[(n, k)]

    def row_ks(self, n: int) -> tuple[int, ...]:
        if self.kind == ENTRINGER:
            return tuple(range(1, n + 1))
        return tuple(range(-n, 0)) + tuple(range(1, n + 1))

    def row(self, n: int) -> tuple[tuple[int, int], ...]:
        """(k, value) pairs of row n with k ascending."""
        return tuple((k, self.values[(n, k)]) for k in self.row_ks(n))


def entringer_table(n_max: int) -> TriangleTable:
    """Entringer numbers E(n, k) for 1 <= k <= n <= n_max."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    e: dict[tuple[int, int], int] = {(1, 1): 1}
    for n in range(2, n_max + 1):
        e[(n, 1)] = 0
        for k in range(2, n + 1):
            e[(n, k)] = e[(n, k - 1)] + e[(n - 1, n + 1 - k)]
    sums = tuple(sum(e[(n, k)] for k in range(1, n + 1)) for n in range(1, n_max + 1))
    return TriangleTable(ENTRINGER, n_max, e, sums)


def arnold_table(n_max: int) -> TriangleTable:
    """Arnold numbers S(n, k) for 1 <= |k| <= n <= n_max."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    s: dict[tuple[int, int], int] = {(1, 1): 1, (1, -1): 1}
    for n in range(2, n_max + 1):
        s[(n, -n)] = 0
        for k in range(-n + 1, 0):
            s[(n, k)] = s[(n, k - 1)] + s[(n - 1, -k)]
        s[(n, 1)] = s[(n, -1)]
        for k in range(2, n + 1):
            s[(n, k)] = s[(n, k - 1)] + s[(n - 1, -k + 1)]
    sums = tuple(sum(s[(n, k)] for k in range(1, n + 1)) for n in range(1, n_max + 1))
    return TriangleTable(ARNOLD, n_max, s, sums)


def euler_number(n: int) -> int:
    """Count of zigzag (down-up alternating) permutations of [n].

    >>> [euler_number(n) for n in range(1, 8)]
    [1, 1, 2, 5, 16, 61, 272]
    """
    return entringer_table(n).row_sums[n - 1]


def springer_number(n: int) -> int:
    """Count of snakes (positive-start signed zigzags) of [n].

    >>> [springer_number(n) for n in range(1, 7)]
    [1, 3, 11, 57, 361, 2763]
    """
    return arnold_table(n).row_sums[n - 1]


# ---------------------------------------------------------------------------
# renderings


def csv_lines(table: TriangleTable) -> Iterator[str]:
    """CSV export with header ``n,k,value``; rows by n then k ascending."""
    yield "n,k,value"
    for n in range(1, table.n_max + 1):
        for k, v in table.row(n):
            yield f"{n},{k},{v}"


def json_rows(table: TriangleTable) -> list[dict]:
    """JSON export: one object per row."""
    return [
        {
            "n": n,
            "values": [{"k": k, "value": v} for k, v in table.row(n)],
            "row_sum": table.row_sums[n - 1],
        }
        for n in range(1, table.n_max + 1)
    ]


def _centered(rows: list[str]) -> list[str]:
    width = max(len(r) for r in rows)
    return [" " * ((width - len(r)) // 2) + r for r in rows]


def boustrophedon_lines(table: TriangleTable) -> list[str]:
    """Text rendering that snakes left and right like the recurrence.

    For the Entringer triangle, even rows read k ascending with right
    arrows and odd rows k descending with left arrows.  The Arnold
    triangle renders as the classical twin triangles, which alternate
    between the negative-k and positive-k halves of each row.
    """
    if table.kind == ENTRINGER:
        rows = []
        for n in range(1, table.n_max + 1):
            ks = range(1, n + 1) if n % 2 == 0 else range(n, 0, -1)
            arrow = " → " if n % 2 == 0 else " ← "
            rows.append(arrow.join(str(table.value(n, k)) for k in ks))
        return _centered(rows)

    def half(first_sign: int) -> list[str]:
        # Rows alternate between the two signed halves of the triangle:
        # odd rows take sign `first_sign`, even rows the opposite.
        rows = []
        for n in range(1, table.n_max + 1):
            sign = first_sign if n % 2 == 1 else -first_sign
            if sign < 0:
                ks = range(-n, 0) if n % 2 == 1 else range(-1, -n - 1, -1)
            else:
                ks = range(1, n + 1) if n % 2 == 1 else range(n, 0, -1)
            arrow = " → " if n % 2 == 1 else " ← "
            if n == 1:
                rows.append(str(table.value(1, sign)))
            else:
                rows.append(arrow.join(str(table.value(n, k)) for k in ks))
        return _centered(rows)

    return half(-1) + [""] + half(1)
