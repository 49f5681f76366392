"""Realizability of signed Gauss words and paragraphs.

Carter circles and minimal-realization genus via rotation-system boundary
walks, the alpha/beta homological planarity criterion, and the split/join
transformations between words and paragraphs, with an exhaustive small-case
verifier tying the routes together.
"""

from .model import (
    GaussError,
    Occurrence,
    OperationError,
    ParseError,
    SignedLetter,
    SignedParagraph,
    SignedWord,
    ValidationError,
    canonicalize,
    check_pairwise,
    is_isomorphic,
    paragraph_dict,
    parse_paragraph,
    relabel,
    render,
    rotate,
)
from .surface import (
    Arc,
    CarterCircle,
    Dart,
    RotationSystem,
    SurfaceSummary,
    build_ribbon,
    carter_circles_symbolic,
    is_geometric,
    summarize,
    trace_circles,
)
from .homology import (
    IntersectionProfile,
    alpha,
    beta,
    pairing,
    profile,
    segment_of,
    word_is_planar_homology,
)
from .transforms import fresh_symbol, join, reduce_to_word, split
from .verify import (
    CorpusSpec,
    VerificationReport,
    apply_random_moves,
    enumerate_corpus,
    enumerate_two_component_paragraphs,
    enumerate_words,
    verify,
)

__version__ = "0.1.0"

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
    "paragraph_dict",
    "render",
    "rotate",
    "relabel",
    "canonicalize",
    "is_isomorphic",
    "check_pairwise",
    "Arc",
    "Dart",
    "RotationSystem",
    "CarterCircle",
    "SurfaceSummary",
    "build_ribbon",
    "trace_circles",
    "summarize",
    "is_geometric",
    "carter_circles_symbolic",
    "segment_of",
    "alpha",
    "beta",
    "IntersectionProfile",
    "profile",
    "word_is_planar_homology",
    "pairing",
    "split",
    "join",
    "reduce_to_word",
    "fresh_symbol",
    "CorpusSpec",
    "VerificationReport",
    "enumerate_words",
    "enumerate_two_component_paragraphs",
    "enumerate_corpus",
    "apply_random_moves",
    "verify",
]
