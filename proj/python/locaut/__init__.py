from ._locaut import (
    bracket,
    certify,
    charpoly,
    classify_sl2,
    counterexample,
    det,
    inverse,
    invariant_factors,
    is_similar,
    rank,
    refute,
    similarity_witness,
)

__all__ = [
    "bracket",
    "certify",
    "charpoly",
    "classify_sl2",
    "counterexample",
    "det",
    "inverse",
    "invariant_factors",
    "is_similar",
    "rank",
    "refute",
    "similarity_witness",
]
