"""Shared fixtures, hypothesis strategies and independent helpers."""

from __future__ import annotations

from itertools import permutations, product

import pytest
from hypothesis import strategies as st

from sgauss.model import (
    SignedLetter,
    SignedParagraph,
    SignedWord,
    ValidationError,
    rotate,
)
from sgauss.verify import enumerate_two_component_paragraphs, enumerate_words

LETTERS = "abcdefghijklmnopqrstuvwxyz"


@st.composite
def signed_words(draw, min_symbols=1, max_symbols=5) -> SignedWord:
    n = draw(st.integers(min_symbols, max_symbols))
    pool = [SignedLetter(LETTERS[i], e) for i in range(n) for e in (1, -1)]
    return SignedWord(tuple(draw(st.permutations(pool))))


@st.composite
def signed_paragraphs(draw, min_symbols=2, max_symbols=4) -> SignedParagraph:
    """Valid paragraphs with 1 or 2 components."""
    w = draw(signed_words(min_symbols, max_symbols))
    cut = draw(st.integers(0, len(w) - 1))
    if cut == 0:
        return w.as_paragraph()
    try:
        return SignedParagraph(
            (SignedWord(w.letters[:cut]), SignedWord(w.letters[cut:]))
        )
    except ValidationError:
        return w.as_paragraph()  # disconnected cut; fall back to the word


def naive_isomorphic(p: SignedParagraph, q: SignedParagraph) -> bool:
    """Brute-force isomorphism decision, independent of canonicalize.

    Searches for a word-order permutation and per-word rotations of q whose
    letter stream matches p under some consistent exponent-preserving symbol
    bijection.
    """
    if sorted(map(len, p.words)) != sorted(map(len, q.words)):
        return False
    target = [w.letters for w in p.words]
    m = len(q.words)
    for order in permutations(range(m)):
        ws = [q.words[i] for i in order]
        if [len(w) for w in ws] != [len(w) for w in p.words]:
            continue
        for rots in product(*(range(len(w)) for w in ws)):
            cand = [rotate(w, r).letters for w, r in zip(ws, rots)]
            mapping: dict[str, str] = {}
            used: set[str] = set()
            ok = True
            for tw, cw in zip(target, cand):
                for tl, cl in zip(tw, cw):
                    if tl.exp != cl.exp:
                        ok = False
                        break
                    bound = mapping.get(cl.sym)
                    if bound is None:
                        if tl.sym in used:
                            ok = False
                            break
                        mapping[cl.sym] = tl.sym
                        used.add(tl.sym)
                    elif bound != tl.sym:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return True
    return False


def double_factorial_count(n: int) -> int:
    """(2n-1)!! * 2^n: closed-form size of the exactly-n word corpus."""
    out = 2**n
    for k in range(1, 2 * n, 2):
        out *= k
    return out


@pytest.fixture(scope="session")
def words_le_3() -> list[SignedParagraph]:
    return [p for n in range(1, 4) for p in enumerate_words(n)]


@pytest.fixture(scope="session")
def words_le_4() -> list[SignedParagraph]:
    return [p for n in range(1, 5) for p in enumerate_words(n)]


@pytest.fixture(scope="session")
def paragraphs_le_3() -> list[SignedParagraph]:
    return [
        p for n in range(1, 4) for p in enumerate_two_component_paragraphs(n)
    ]
