"""The object families behind the triangle entries.

Each triangle entry counts several different kinds of objects.  This
script lists the small cases of each family and checks a few refined
counts against the triangles.
"""

from zigzag import (
    count_family,
    entringer_table,
    enumerate_family,
    arnold_table,
    is_andre,
    is_simsun,
    perm_to_text,
    tree_to_literal,
)

# Zigzag permutations of [4]: down, up, down.
print("alternating permutations of [4]:")
print(" ", ", ".join(perm_to_text(p) for p in enumerate_family("alt", 4)))

# Andre permutations: every bottom-k subword is double-descent free and
# ends ascending.  Simsun permutations drop the ascent requirement.
print("\nAndre permutations of [4]:")
print(" ", ", ".join(perm_to_text(p) for p in enumerate_family("andre", 4)))
print("Simsun permutations of [3]:")
print(" ", ", ".join(perm_to_text(p) for p in enumerate_family("simsun", 3)))
print("25134 is Simsun:", is_simsun((2, 5, 1, 3, 4)),
      " and Andre:", is_andre((2, 5, 1, 3, 4)))

# Increasing 1-2 trees on [4]: five of them, matching the Euler number.
print("\nincreasing 1-2 trees on [4]:")
for t in enumerate_family("tree", 4):
    print("  " + tree_to_literal(t))

# Snakes: signed zigzags with positive first entry.  Eleven on [3].
print("\nsnakes of [3]:")
print(" ", ", ".join(perm_to_text(p) for p in enumerate_family("snake", 3)))

# Refined counts match the triangles exactly.
table = entringer_table(6)
print("\nalternating [6] by first entry:",
      [count_family("alt", 6, k) for k in range(1, 7)])
print("Entringer row 6:             ",
      [table.value(6, k) for k in range(1, 7)])

arnold = arnold_table(4)
print("\ntrees with signed labels [4] by minimal leaf:",
      {k: count_family("tree-b", 4, k) for k in [-4, -3, -2, -1, 1, 2, 3, 4]})
print("Arnold row 4:",
      {k: arnold.value(4, k) for k in [-4, -3, -2, -1, 1, 2, 3, 4]})
