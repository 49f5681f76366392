"""Homological planarity test for signed Gauss words.

Cutting a word w open at a symbol a gives w = a . seg . a^-1 . rest: ``seg``
(here ``segment_of``) is read forward from the +1 occurrence.  Exponent sums
over such segments compute intersection numbers of the curve and its
split-off loops on the minimal realization surface:

* alpha(w, a) sums the exponents of the letters of a's segment;
* beta(w, i, j) sums exponents over the intersection of the closed letter
  set of i's segment (the segment plus i itself, both signs) with the
  inverted letter set of j's segment;
* the two-component pairing sums p over letters a^p occurring in the first
  word whose inverse occurs in the second.

The word is realizable in the plane exactly when every alpha and beta entry
vanishes; this must agree with the boundary-walk count of
:mod:`sgauss.surface` on every valid word, and the two computations share no
code.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import (
    NEGATIVE,
    POSITIVE,
    OperationError,
    SignedLetter,
    SignedParagraph,
    SignedWord,
)

__all__ = [
    "segment_of",
    "letter_set",
    "closed_letter_set",
    "inverse_set",
    "alpha",
    "beta",
    "IntersectionProfile",
    "profile",
    "word_is_planar_homology",
    "pairing",
]


def _positions(w: SignedWord, sym: str) -> tuple[int, int]:
    return w.find(sym, POSITIVE), w.find(sym, NEGATIVE)


def segment_of(w: SignedWord, sym: str) -> tuple[SignedLetter, ...]:
    """Letters strictly between sym's +1 and -1 occurrences, read forward
    cyclically from the +1 occurrence.  Rotation-invariant."""
    pos, neg = _positions(w, sym)
    out = []
    i = (pos + 1) % len(w)
    while i != neg:
        out.append(w[i])
        i = (i + 1) % len(w)
    return tuple(out)


def letter_set(w: SignedWord, sym: str) -> frozenset[SignedLetter]:
    """The signed letters occurring in sym's segment."""
    return frozenset(segment_of(w, sym))


def closed_letter_set(w: SignedWord, sym: str) -> frozenset[SignedLetter]:
    """The segment letters together with sym itself, both signs."""
    return letter_set(w, sym) | {
        SignedLetter(sym, POSITIVE),
        SignedLetter(sym, NEGATIVE),
    }


def inverse_set(letters: frozenset[SignedLetter]) -> frozenset[SignedLetter]:
    """Elementwise inverse; an involution."""
    return frozenset(l.inverse() for l in letters)


def alpha(w: SignedWord, sym: str) -> int:
    """Exponent sum over the distinct letters of sym's segment."""
    seg = segment_of(w, sym)
    total = sum(l.exp for l in set(seg))
    # Each signed letter occurs at most once in a valid word, so the set sum
    # and the plain sum cannot differ.
    assert total == sum(l.exp for l in seg)
    return total


def beta(w: SignedWord, i: str, j: str) -> int:
    """Exponent sum over closed_letter_set(i) & inverse_set(letter_set(j));
    zero on the diagonal by convention."""
    if i == j:
        _positions(w, i)  # still require presence
        return 0
    common = closed_letter_set(w, i) & inverse_set(letter_set(w, j))
    return sum(l.exp for l in common)


@dataclass(frozen=True)
class IntersectionProfile:
    """All alpha values and off-diagonal beta values of a word."""

    alpha: dict[str, int]
    beta: dict[tuple[str, str], int]

    def beta_of(self, i: str, j: str) -> int:
        return 0 if i == j else self.beta[(i, j)]

    @property
    def is_zero(self) -> bool:
        return not any(self.alpha.values()) and not any(self.beta.values())

    def as_dict(self) -> dict:
        return {
            "alpha": {s: v for s, v in sorted(self.alpha.items())},
            "beta": [[i, j, v] for (i, j), v in sorted(self.beta.items())],
            "planar": self.is_zero,
        }


def _require_word(w: SignedWord) -> list[str]:
    syms = sorted(w.symbols())
    if 2 * len(syms) != len(w):
        raise OperationError(f"{w!r} is not a valid standalone word")
    for s in syms:
        _positions(w, s)  # both signs must be present
    return syms


def profile(w: SignedWord) -> IntersectionProfile:
    """alpha for every symbol and beta for every ordered pair of ``w``."""
    syms = _require_word(w)
    alphas = {s: alpha(w, s) for s in syms}
    betas = {(i, j): beta(w, i, j) for i in syms for j in syms if i != j}
    return IntersectionProfile(alphas, betas)


def word_is_planar_homology(w: SignedWord) -> bool:
    """Planarity by the vanishing of the whole intersection profile."""
    return profile(w).is_zero


def pairing(p: SignedParagraph) -> int:
    """Intersection pairing of the two components of a 2-word paragraph."""
    if len(p.words) != 2:
        raise OperationError(
            f"pairing needs exactly 2 components, got {len(p.words)}"
        )
    total = 0
    for sym in p.alphabet:
        pos, neg = p.occurrences(sym)
        if pos.word == 0 and neg.word == 1:
            total += POSITIVE
        elif neg.word == 0 and pos.word == 1:
            total += NEGATIVE
    return total
