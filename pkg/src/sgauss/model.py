"""Signed Gauss words and paragraphs.

A signed Gauss paragraph is a finite list of nonempty cyclic words over an
alphabet of crossing symbols, where every symbol occurs exactly twice in the
whole paragraph, once with exponent +1 and once with exponent -1.  A one-word
paragraph is a signed Gauss word.  This module parses, renders, validates and
canonicalizes these objects; everything downstream (surface building, the
intersection profile, the transforms) consumes them.

Text grammar::

    PARAGRAPH := WORD (("/" | NEWLINE) WORD)*
    WORD      := LETTER+
    LETTER    := ["-"] SYMBOL | SYMBOL "^-1"
    SYMBOL    := [A-Za-z][A-Za-z0-9_]*

"#" starts a comment running to end of line; whitespace separates tokens and
"/" is self-delimiting.  Blank lines are ignored, but an explicit "/" with no
word on one side is an error.

All values are immutable after construction and safe to share between
threads; operations never mutate their inputs.
"""

from __future__ import annotations

import json
import re
import string
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "GaussError",
    "ParseError",
    "ValidationError",
    "OperationError",
    "Occurrence",
    "SignedLetter",
    "SignedWord",
    "SignedParagraph",
    "parse_paragraph",
    "render",
    "rotate",
    "relabel",
    "canonicalize",
    "is_isomorphic",
    "check_pairwise",
]


class GaussError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(GaussError):
    """Lexical error in paragraph text (1-based line/column)."""

    kind = "syntax"

    def __init__(self, message: str, line: int, col: int):
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col

    def __str__(self) -> str:
        return f"{self.line}:{self.col}: {self.message}"


class ValidationError(GaussError):
    """A structurally invalid paragraph.

    ``kind`` distinguishes the failure: SYMBOL_COUNT (a symbol does not occur
    exactly twice), EQUAL_EXPONENTS (twice with the same sign), EMPTY_WORD,
    DISCONNECTED (the word-sharing graph is not connected) or PAIRWISE (the
    optional strict check).  ``where`` is a (word index, position) pair when
    the failure is attributable to one letter; the parser additionally fills
    ``line``/``col`` from the offending token.
    """

    SYMBOL_COUNT = "symbol-count"
    EQUAL_EXPONENTS = "equal-exponents"
    EMPTY_WORD = "empty-word"
    DISCONNECTED = "disconnected"
    PAIRWISE = "pairwise"

    def __init__(
        self,
        kind: str,
        message: str,
        where: tuple[int, int] | None = None,
        line: int | None = None,
        col: int | None = None,
    ):
        super().__init__(message)
        self.kind = kind
        self.message = message
        self.where = where
        self.line = line
        self.col = col

    def __str__(self) -> str:
        if self.line is not None:
            return f"{self.line}:{self.col}: {self.message}"
        return self.message


class OperationError(GaussError):
    """Precondition failure of an operation (absent symbol, bad component...)."""


POSITIVE = 1
NEGATIVE = -1


class Occurrence(NamedTuple):
    """One of the two appearances of a symbol: its sign and address."""

    sym: str
    exp: int
    word: int
    pos: int


@dataclass(frozen=True, slots=True)
class SignedLetter:
    """A crossing symbol traversed with exponent +1 or -1."""

    sym: str
    exp: int

    def __post_init__(self):
        if self.exp not in (POSITIVE, NEGATIVE):
            raise ValueError(f"exponent must be +1 or -1, got {self.exp!r}")

    def inverse(self) -> SignedLetter:
        return SignedLetter(self.sym, -self.exp)

    def __str__(self) -> str:
        return self.sym if self.exp == POSITIVE else f"-{self.sym}"

    def __repr__(self) -> str:
        return f"SignedLetter({str(self)!r})"


@dataclass(frozen=True, slots=True)
class SignedWord:
    """A cyclically-ordered sequence of signed letters.

    The stored sequence is a fixed representative; cyclic rotations of it
    describe the same closed curve and are identified by ``canonicalize``.
    """

    letters: tuple[SignedLetter, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[SignedLetter]:
        return iter(self.letters)

    def __getitem__(self, i: int) -> SignedLetter:
        return self.letters[i]

    def at(self, i: int) -> SignedLetter:
        """Letter at cyclic position ``i`` (any integer)."""
        return self.letters[i % len(self.letters)]

    def symbols(self) -> frozenset[str]:
        return frozenset(l.sym for l in self.letters)

    def find(self, sym: str, exp: int) -> int:
        """Position of the occurrence of ``sym`` with exponent ``exp``."""
        for i, l in enumerate(self.letters):
            if l.sym == sym and l.exp == exp:
                return i
        raise OperationError(f"symbol {sym!r} has no exponent-{exp:+d} occurrence in {self}")

    def as_paragraph(self) -> SignedParagraph:
        return SignedParagraph((self,))

    def __str__(self) -> str:
        return " ".join(str(l) for l in self.letters)

    def __repr__(self) -> str:
        return f"SignedWord({str(self)!r})"


@dataclass(frozen=True, slots=True)
class SignedParagraph:
    """A validated signed Gauss paragraph.

    Construction validates the three structural invariants (every symbol
    exactly twice with opposite exponents, no empty word, connected sharing
    graph) and raises :class:`ValidationError` otherwise.
    """

    words: tuple[SignedWord, ...]
    alphabet: frozenset[str] = field(init=False, repr=False, compare=False)
    _occ: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        words = tuple(
            w if isinstance(w, SignedWord) else SignedWord(tuple(w)) for w in self.words
        )
        object.__setattr__(self, "words", words)
        occ = _validate(words)
        object.__setattr__(self, "alphabet", frozenset(s for s, _ in occ))
        object.__setattr__(self, "_occ", occ)

    @property
    def n(self) -> int:
        """Number of crossing symbols."""
        return len(self.alphabet)

    def occurrence(self, sym: str, exp: int) -> Occurrence:
        try:
            return self._occ[(sym, exp)]
        except KeyError:
            raise OperationError(f"symbol {sym!r} not in paragraph") from None

    def occurrences(self, sym: str) -> tuple[Occurrence, Occurrence]:
        """The (+1, -1) occurrence pair of ``sym``."""
        return self.occurrence(sym, POSITIVE), self.occurrence(sym, NEGATIVE)

    def __str__(self) -> str:
        return " / ".join(str(w) for w in self.words)

    def __repr__(self) -> str:
        return f"SignedParagraph({str(self)!r})"


def _validate(words: tuple[SignedWord, ...]) -> dict[tuple[str, int], Occurrence]:
    if not words:
        raise ValidationError(ValidationError.EMPTY_WORD, "empty paragraph")
    occ: dict[tuple[str, int], Occurrence] = {}
    counts: dict[str, int] = {}
    for wi, w in enumerate(words):
        if len(w) == 0:
            raise ValidationError(
                ValidationError.EMPTY_WORD, f"word {wi + 1} is empty", where=(wi, 0)
            )
        for i, l in enumerate(w):
            seen = counts.get(l.sym, 0)
            if seen == 2:
                raise ValidationError(
                    ValidationError.SYMBOL_COUNT,
                    f"symbol {l.sym!r} occurs more than twice",
                    where=(wi, i),
                )
            if seen == 1 and (l.sym, l.exp) in occ:
                raise ValidationError(
                    ValidationError.EQUAL_EXPONENTS,
                    f"symbol {l.sym!r} occurs twice with exponent {l.exp:+d}",
                    where=(wi, i),
                )
            counts[l.sym] = seen + 1
            occ[(l.sym, l.exp)] = Occurrence(l.sym, l.exp, wi, i)
    for sym, c in counts.items():
        if c != 2:
            o = occ.get((sym, POSITIVE)) or occ[(sym, NEGATIVE)]
            raise ValidationError(
                ValidationError.SYMBOL_COUNT,
                f"symbol {sym!r} occurs once, expected twice",
                where=(o.word, o.pos),
            )
    _check_connected(words, occ)
    return occ


def _check_connected(words, occ) -> None:
    # Union-find over word indices; a symbol whose occurrences sit in two
    # different words links them.
    parent = list(range(len(words)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (sym, exp), o in occ.items():
        if exp == POSITIVE:
            other = occ[(sym, NEGATIVE)]
            parent[find(o.word)] = find(other.word)
    root = find(0)
    for wi in range(len(words)):
        if find(wi) != root:
            raise ValidationError(
                ValidationError.DISCONNECTED,
                f"word {wi + 1} shares no symbols with the rest of the paragraph",
                where=(wi, 0),
            )


def check_pairwise(p: SignedParagraph) -> None:
    """Strict sharing check: every pair of words must share a symbol.

    Connectivity of the sharing graph is what ordinary validation enforces;
    this raises ``ValidationError(PAIRWISE)`` when any two words are
    symbol-disjoint.
    """
    syms = [w.symbols() for w in p.words]
    for i in range(len(syms)):
        for j in range(i + 1, len(syms)):
            shared = {
                s
                for s in syms[i] & syms[j]
                if p.occurrence(s, POSITIVE).word != p.occurrence(s, NEGATIVE).word
            }
            if not shared:
                raise ValidationError(
                    ValidationError.PAIRWISE,
                    f"words {i + 1} and {j + 1} share no symbols",
                    where=(j, 0),
                )


# --- parsing ---------------------------------------------------------------

_TOKEN_RE = re.compile(r"/|[^\s/]+")
_LETTER_RE = re.compile(r"(-)?([A-Za-z][A-Za-z0-9_]*)(\^-1)?")
SYMBOL_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        for m in _TOKEN_RE.finditer(line):
            yield m.group(), lineno, m.start() + 1
        yield None, lineno, len(line) + 1  # soft word boundary at end of line


def parse_paragraph(text: str, *, pairwise: bool = False) -> SignedParagraph:
    """Parse paragraph text into a validated :class:`SignedParagraph`.

    Raises :class:`ParseError` on bad tokens and :class:`ValidationError`
    (with the offending token's line/column) on structural failures.  With
    ``pairwise=True`` additionally requires every pair of words to share a
    symbol.
    """
    words: list[list[SignedLetter]] = []
    spans: dict[tuple[int, int], tuple[int, int]] = {}
    cur: list[tuple[SignedLetter, int, int]] = []
    dangling: tuple[int, int] | None = None

    def flush():
        wi = len(words)
        words.append([t[0] for t in cur])
        spans.update({(wi, i): (t[1], t[2]) for i, t in enumerate(cur)})
        cur.clear()

    for tok, line, col in _tokens(text):
        if tok is None:
            if cur:
                flush()
        elif tok == "/":
            if not cur:
                raise ValidationError(
                    ValidationError.EMPTY_WORD, "empty word", line=line, col=col
                )
            flush()
            dangling = (line, col)
        else:
            m = _LETTER_RE.fullmatch(tok)
            if not m or (m.group(1) and m.group(3)):
                raise ParseError(f"bad token {tok!r}", line, col)
            exp = NEGATIVE if (m.group(1) or m.group(3)) else POSITIVE
            cur.append((SignedLetter(m.group(2), exp), line, col))
            dangling = None
    if cur:
        flush()
    if dangling is not None:
        raise ValidationError(
            ValidationError.EMPTY_WORD, "empty word", line=dangling[0], col=dangling[1]
        )
    if not words:
        raise ValidationError(
            ValidationError.EMPTY_WORD, "empty paragraph", line=1, col=1
        )

    try:
        p = SignedParagraph(tuple(SignedWord(tuple(w)) for w in words))
        if pairwise:
            check_pairwise(p)
    except ValidationError as e:
        if e.where is not None and e.line is None and e.where in spans:
            e.line, e.col = spans[e.where]
        raise
    return p


def render(p: SignedParagraph, format: str = "text") -> str:
    """Render a paragraph as text (parses back to an equal paragraph) or JSON."""
    if format == "text":
        return str(p)
    if format == "json":
        return json.dumps(paragraph_dict(p))
    raise ValueError(f"unknown format {format!r}")


def paragraph_dict(p: SignedParagraph) -> dict:
    return {"words": [[{"sym": l.sym, "exp": l.exp} for l in w] for w in p.words]}


# --- isomorphism moves and canonical form ----------------------------------


def rotate(w: SignedWord, k: int) -> SignedWord:
    """Cyclic left shift by ``k``: rotate(w, len(w)) == w."""
    if not len(w):
        return w
    k %= len(w)
    return SignedWord(w.letters[k:] + w.letters[:k])


def relabel(p: SignedParagraph, mapping: dict[str, str]) -> SignedParagraph:
    """Exponent-preserving change of alphabet; ``mapping`` must be injective."""
    if len(set(mapping.values())) != len(mapping):
        raise OperationError("relabeling is not injective")
    words = tuple(
        SignedWord(tuple(SignedLetter(mapping.get(l.sym, l.sym), l.exp) for l in w))
        for w in p.words
    )
    return SignedParagraph(words)


def _stream_key(words: list[SignedWord]) -> tuple:
    # First-appearance relabeling: letters become (symbol index, exponent)
    # pairs, compared with -1 < +1.
    ids: dict[str, int] = {}
    out = []
    for w in words:
        for l in w:
            if l.sym not in ids:
                ids[l.sym] = len(ids)
            out.append((ids[l.sym], l.exp))
    return tuple(out)


def _canonical_name(i: int) -> str:
    return string.ascii_lowercase[i] if i < 26 else f"s{i}"


def canonicalize(p: SignedParagraph) -> SignedParagraph:
    """The least representative of the isomorphism class of ``p``.

    Minimizes over word order x per-word rotation x first-appearance
    relabeling, comparing (word lengths, letter stream) with exponent
    -1 < +1.  Idempotent, and equal for any two isomorphic paragraphs.
    """
    best_key = None
    best: list[SignedWord] | None = None
    for order in permutations(range(len(p.words))):
        ws = [p.words[i] for i in order]
        lengths = tuple(len(w) for w in ws)
        if best_key is not None and (lengths,) > best_key[:1]:
            continue
        for rots in product(*(range(len(w)) for w in ws)):
            cand = [rotate(w, r) for w, r in zip(ws, rots)]
            key = (lengths, _stream_key(cand))
            if best_key is None or key < best_key:
                best_key, best = key, cand
    assert best is not None
    ids: dict[str, int] = {}
    for w in best:
        for l in w:
            ids.setdefault(l.sym, len(ids))
    mapping = {sym: _canonical_name(i) for sym, i in ids.items()}
    return relabel(SignedParagraph(tuple(best)), mapping)


def is_isomorphic(p: SignedParagraph, q: SignedParagraph) -> bool:
    """Whether two paragraphs differ only by rotations, relabeling and word order."""
    if len(p.words) != len(q.words) or p.n != q.n:
        return False
    return canonicalize(p) == canonicalize(q)
