"""Reduced variations, and why the shrink map preserves them.

The variation of a word is its ascent/descent profile.  For Andre
permutations, contracting descent-ascent pairs to d and leftover
ascents to c gives a c/d word; for Simsun permutations the same is done
after prepending 0 and contracting ascent-descent pairs.  The shrink
map phi sends one to the other without changing the c/d word.
"""

from zigzag import (
    iter_family,
    perm_to_text,
    phi,
    reduced_variation_andre,
    reduced_variation_simsun,
    variation,
)

andre = (6, 8, 4, 5, 1, 2, 9, 3, 7)
print("Andre permutation:", perm_to_text(andre))
print("  variation:        ", variation(andre))
print("  reduced variation:", reduced_variation_andre(andre))

simsun = phi(andre)
print("\nits Simsun image:", perm_to_text(simsun))
print("  augmented variation:", variation((0, *simsun)))
print("  reduced variation:  ", reduced_variation_simsun(simsun))

# The agreement is not an accident of this example: check all of [6].
print("\nchecking every Andre permutation of [6]:")
agreements = sum(
    reduced_variation_andre(p) == reduced_variation_simsun(phi(p))
    for p in iter_family("andre", 6)
)
print(f"  {agreements} of {agreements} reduced variations agree")

# Grouping Andre permutations of [5] by their c/d word:
buckets: dict[str, int] = {}
for p in iter_family("andre", 5):
    buckets[reduced_variation_andre(p)] = buckets.get(reduced_variation_andre(p), 0) + 1
print("\nc/d word multiplicities over Andre permutations of [5]:")
for word, count in sorted(buckets.items()):
    print(f"  {word or '(empty)'}: {count}")
