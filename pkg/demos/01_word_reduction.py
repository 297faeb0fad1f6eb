# Words over {1..N} stand for products of projections; the empty word is
# the identity.  Idempotence collapses letter powers, and trace cyclicity
# lets the boundary letter wrap around, so whole orbits of words share one
# moment value.  This script walks the reduction and shows the orbit
# classes doing real work on a random projection family.

import numpy as np

from syncnpa import (
    CYCLIC,
    CYCLIC_REVERSAL,
    canonical_class,
    dagger,
    enumerate_classes,
    enumerate_words,
    pairs_equivalent,
    reduce_word,
)

print("power collapse and boundary drop:")
for word in [(1, 1, 2, 2, 2, 3), (1, 2, 2, 1), (1, 1), (2, 1, 2, 1, 2)]:
    print(f"  {word} -> {reduce_word(word)}")

print("\none class, many spellings (cyclic mode):")
for word in [(2, 1, 3), (1, 3, 2), (3, 2, 1), (2, 2, 1, 3), (2, 1, 3, 3, 2)]:
    print(f"  {word} -> class {canonical_class(word, CYCLIC)}")

# reversal merges a class with its mirror; that is only sound for real
# projection families, where transposing a product preserves the trace
w = (1, 2, 3)
print(f"\n{w}: cyclic class {canonical_class(w, CYCLIC)}, "
      f"cyclic+reversal class {canonical_class(w, CYCLIC_REVERSAL)}")
print("mirror word merged in reversal mode:",
      canonical_class((1, 3, 2), CYCLIC_REVERSAL) == canonical_class(w, CYCLIC_REVERSAL))

# pairs (a, b) index the moment of dagger(a)·b
print("\npair equivalences:")
print("  (2, '') vs (2, 2):", pairs_equivalent((2,), (), (2,), (2,)))
print("  (2, 13) vs (1, 32):", pairs_equivalent((2,), (1, 3), (1,), (3, 2)))

print("\nindex sizes (reduced words of length <= k):")
for n, k in [(2, 2), (4, 2), (6, 2), (12, 2)]:
    words = enumerate_words(n, k)
    classes = enumerate_classes(n, k)
    print(f"  n={n:2d} k={k}: {len(words):4d} words, {len(classes):4d} classes")

# the whole point: words in one class really do share a normalized trace
rng = np.random.default_rng(8)
g = rng.normal(size=(4, 4, 2))
projections = []
for i in range(3):
    q, _ = np.linalg.qr(g[i])
    projections.append(q @ q.T)

traces = {}
for word in enumerate_words(3, 5, reduced=False):
    m = np.eye(4)
    for letter in word:
        m = m @ projections[letter - 1]
    traces.setdefault(canonical_class(word, CYCLIC_REVERSAL), []).append(np.trace(m) / 4)

worst = max(max(abs(v - vs[0]) for v in vs) for vs in traces.values())
print(f"\nrandom real family, words up to length 5: {len(traces)} classes, "
      f"max within-class trace spread {worst:.2e}")
