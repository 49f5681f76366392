"""Structural operations: split a word at a crossing, join two components.

Splitting w = t . u . t^-1 . v at t yields the 2-component paragraph {u, v}.
Joining two components at a shared symbol s with a fresh symbol f produces

    s . u . f . s^-1 . v . f^-1

where u is the first component rotated to start right after s^+1 and v the
second rotated to start right after s^-1.  A join adds one crossing, removes
one component and preserves the minimal-realization genus, so iterating it
reduces any paragraph to a single word of the same genus
(``reduce_to_word``).
"""

from __future__ import annotations

from .model import (
    NEGATIVE,
    POSITIVE,
    OperationError,
    SignedLetter,
    SignedParagraph,
    SignedWord,
    SYMBOL_RE,
    rotate,
)

__all__ = ["split", "join", "reduce_to_word", "fresh_symbol"]


def split(w: SignedWord, sym: str) -> SignedParagraph:
    """Cut ``w`` at ``sym`` into the 2-component paragraph {u, v}.

    Raises ``OperationError`` if either part is empty (the occurrences of
    ``sym`` are adjacent) and ``ValidationError`` if the parts share no
    symbol, since the result is validated like any other paragraph.
    """
    pos = w.find(sym, POSITIVE)
    neg = w.find(sym, NEGATIVE)
    first, second = [], []
    i = (pos + 1) % len(w)
    while i != neg:
        first.append(w[i])
        i = (i + 1) % len(w)
    i = (neg + 1) % len(w)
    while i != pos:
        second.append(w[i])
        i = (i + 1) % len(w)
    if not first or not second:
        raise OperationError(
            f"splitting at {sym!r} leaves an empty component (adjacent occurrences)"
        )
    return SignedParagraph((SignedWord(tuple(first)), SignedWord(tuple(second))))


def join(
    p: SignedParagraph, c1: int, c2: int, shared: str, fresh: str
) -> SignedParagraph:
    """Merge components ``c1`` and ``c2`` of ``p`` at ``shared``, inserting
    the new crossing ``fresh``.

    ``shared`` must have one occurrence in each of the two components; which
    one holds the +1 occurrence is immaterial (the roles swap).  The merged
    word replaces the earlier of the two components.
    """
    m = len(p.words)
    if not (0 <= c1 < m and 0 <= c2 < m) or c1 == c2:
        raise OperationError(f"bad component indices ({c1}, {c2}) for {m} words")
    pos, neg = p.occurrences(shared)
    if {pos.word, neg.word} != {c1, c2}:
        raise OperationError(
            f"symbol {shared!r} is not shared between components {c1} and {c2}"
        )
    if not SYMBOL_RE.fullmatch(fresh):
        raise OperationError(f"fresh symbol {fresh!r} is not a valid symbol token")
    if fresh in p.alphabet:
        raise OperationError(f"fresh symbol {fresh!r} collides with the alphabet")
    w1 = rotate(p.words[pos.word], pos.pos)
    w2 = rotate(p.words[neg.word], neg.pos)
    merged = SignedWord(
        (w1[0],)
        + w1.letters[1:]
        + (SignedLetter(fresh, POSITIVE),)
        + (w2[0],)
        + w2.letters[1:]
        + (SignedLetter(fresh, NEGATIVE),)
    )
    lo, hi = min(c1, c2), max(c1, c2)
    words = list(p.words)
    words[lo] = merged
    del words[hi]
    return SignedParagraph(tuple(words))


def fresh_symbol(alphabet: frozenset[str], prefix: str = "j") -> str:
    """Smallest ``prefix + k`` (k >= 1) not already in the alphabet."""
    if not SYMBOL_RE.fullmatch(prefix):
        raise OperationError(f"prefix {prefix!r} is not a valid symbol token")
    k = 1
    while f"{prefix}{k}" in alphabet:
        k += 1
    return f"{prefix}{k}"


def reduce_to_word(p: SignedParagraph, prefix: str = "j") -> SignedWord:
    """Join components onto the first one until a single word remains.

    Each step uses the lexicographically least symbol shared between the
    first component and any other, with fresh symbols generated
    deterministically from ``prefix``; the result has the same genus as
    ``p``.
    """
    while len(p.words) > 1:
        candidates = []
        for sym in p.alphabet:
            pos, neg = p.occurrences(sym)
            if pos.word != neg.word and 0 in (pos.word, neg.word):
                candidates.append((sym, max(pos.word, neg.word)))
        shared, other = min(candidates)
        p = join(p, 0, other, shared, fresh_symbol(p.alphabet, prefix))
    return p.words[0]
