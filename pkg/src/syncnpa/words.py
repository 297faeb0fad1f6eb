"""Free words over the alphabet {1..N} and their trace symmetry classes.

A word stands for a left-to-right product of orthogonal projections; the
empty word stands for the identity.  Projections are idempotent and the
states of interest are tracial, so many distinct words are forced to share
a moment value.  This module implements the combinatorial side of that
statement: collapsing letter powers, dropping the cyclic boundary letter,
and picking canonical representatives under rotation (plus reversal, for
families of real projections, where transposition is also a symmetry).

Words are plain tuples of 1-based letters; the empty tuple is the empty
word.  All functions are pure and safe to call concurrently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

Word = tuple[int, ...]

#: Rotation symmetry only; the moment table may be complex Hermitian.
CYCLIC = "cyclic"
#: Rotation and reversal; appropriate for real symmetric moment tables.
CYCLIC_REVERSAL = "cyclic+reversal"

MODES = (CYCLIC, CYCLIC_REVERSAL)


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"unknown symmetry mode {mode!r}; expected one of {MODES}")


def check_word(word: Word, n: int) -> None:
    """Raise ValueError unless every letter of ``word`` lies in 1..n."""
    for a in word:
        if not 1 <= a <= n:
            raise ValueError(f"letter {a} outside alphabet 1..{n} in word {word}")


def dagger(word: Word) -> Word:
    """Letter reversal; the word of the adjoint product."""
    return tuple(reversed(word))


def collapse_powers(word: Word) -> Word:
    """Collapse each run of equal letters to a single letter.

    This is the reduction valid for row/column indexing: a projection
    applied twice to a vector acts once, so words differing only in
    letter powers label the same vector.
    """
    return tuple(a for a, _ in itertools.groupby(word))


def reduce_word(word: Word) -> Word:
    """Collapse powers, then drop the last letter if it equals the first.

    The boundary drop encodes cyclicity together with idempotence:
    tr(A X A) = tr(A A X) = tr(A X).  A single repeated letter reduces to
    that letter rather than the empty word, since tr(P) need not equal
    tr(I).  The result is power-free with distinct first and last letters
    (unless shorter than two), and the map is idempotent.
    """
    out = list(collapse_powers(word))
    if len(out) >= 2 and out[0] == out[-1]:
        out.pop()
    return tuple(out)


def rotations(word: Word) -> list[Word]:
    """All cyclic rotations of ``word`` (just the word itself when empty)."""
    if not word:
        return [word]
    return [word[i:] + word[:i] for i in range(len(word))]


@dataclass(frozen=True)
class CanonicalClass:
    """Representative of a word's orbit under the admitted symmetries.

    ``word`` is fully reduced and lexicographically minimal among the
    rotations of itself (and of its reversal in cyclic+reversal mode).
    """

    word: Word
    mode: str

    def sort_key(self) -> tuple[int, Word]:
        return (len(self.word), self.word)

    def __str__(self) -> str:
        return "".join(map(str, self.word)) if self.word else "0"


def canonical_class(word: Word, mode: str = CYCLIC) -> CanonicalClass:
    """Canonical representative of ``word`` under reduction and rotation.

    Two words receive the same class exactly when their reductions are
    related by a cyclic rotation, or by reversal followed by a rotation
    in cyclic+reversal mode.
    """
    _check_mode(mode)
    reduced = reduce_word(word)
    if not reduced:
        return CanonicalClass((), mode)
    best = min(rotations(reduced))
    if mode == CYCLIC_REVERSAL:
        best = min(best, min(rotations(dagger(reduced))))
    return CanonicalClass(best, mode)


def pairs_equivalent(a: Word, b: Word, c: Word, d: Word, mode: str = CYCLIC) -> bool:
    """Whether the pairs (a, b) and (c, d) index equal moments.

    The pair (a, b) stands for the moment of dagger(a)·b, so equivalence
    is equality of the canonical classes of the two concatenations.
    """
    return canonical_class(dagger(a) + b, mode) == canonical_class(dagger(c) + d, mode)


def enumerate_words(n: int, k: int, reduced: bool = True) -> list[Word]:
    """All words of length at most ``k``, shortest first, then lexicographic.

    With ``reduced`` only power-free words (no adjacent equal letters)
    are produced; these suffice to index moment matrices because a
    repeated letter labels a duplicate row.  The empty word comes first.
    """
    if n < 1:
        raise ValueError("alphabet size must be at least 1")
    if k < 0:
        raise ValueError("level must be nonnegative")
    words: list[Word] = [()]
    frontier: list[Word] = [()]
    for _ in range(k):
        nxt: list[Word] = []
        for w in frontier:
            for a in range(1, n + 1):
                if reduced and w and w[-1] == a:
                    continue
                nxt.append(w + (a,))
        frontier = nxt
        words.extend(frontier)
    return words


def enumerate_classes(n: int, k: int, mode: str = CYCLIC) -> list[CanonicalClass]:
    """All classes of dagger(a)·b over reduced words a, b of length <= k.

    This is the free-variable index of the level-``k`` feasibility
    problem.  Ordering is deterministic: class word length, then
    lexicographic.
    """
    _check_mode(mode)
    words = enumerate_words(n, k, reduced=True)
    seen = {canonical_class(dagger(a) + b, mode) for a in words for b in words}
    return sorted(seen, key=CanonicalClass.sort_key)
