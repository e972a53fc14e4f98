"""One object walked through the whole chain of bijections.

A zigzag permutation becomes a tree by iterated grafting (psi), the
tree reads out as an Andre permutation in reverse inorder (omega), and
the Andre permutation shrinks to a Simsun permutation one letter
shorter (phi).  Every step carries a statistic along: first entry,
minimal leaf, last entry.
"""

from zigzag import (
    chuang_phi,
    omega,
    perm_to_text,
    phi,
    phi_inv,
    pleaf,
    psi_c,
    psi_inv,
    tree_to_literal,
)

start = (7, 3, 9, 1, 5, 4, 8, 2, 6)
print("alternating permutation:", perm_to_text(start), " first entry", start[0])

# psi grafts pairs of entries from the back; the trace records each step.
tree, trace = psi_c(start)
print("\npsi builds the tree:", tree_to_literal(tree))
print("  minimal leaf:", pleaf(tree))
print("  grafting steps:")
for line in trace.lines():
    print("   ", line)

# omega reads the tree backwards in inorder.
andre = omega(tree)
print("\nomega reads it out:", perm_to_text(andre), " last entry", andre[-1])

# phi moves each right-to-left minimum one slot back and shrinks by one.
simsun = phi(andre)
print("phi shrinks it:     ", perm_to_text(simsun), " last entry", simsun[-1])

# The direct tree-to-Simsun peeling gives the same image as phi(omega(.)).
print("\npeeling the tree directly:", perm_to_text(chuang_phi(tree)))

# Both directions invert cleanly.
print("\nphi_inv recovers:", perm_to_text(phi_inv(simsun)))
print("psi_inv recovers:", perm_to_text(psi_inv(tree)))
