"""Radical-structured stroke trees.

Characters are represented as trees whose internal nodes are the 12
ideographic description operators and whose leaves are radicals carrying
stroke sequences. This package exposes the native library: parsing and
serialization, the weighted edit distance family, lexicon building with
confusable analysis, rectification and translation, zero-shot splits,
decoder label generation, and a deterministic perturbation benchmark.
"""

from rsst._rsst import (
    DEFAULT_ALPHABET,
    MAX_ALPHABET,
    STRUCTURE_OP_COUNT,
    Error,
    EvalReport,
    FeatureStore,
    Lexicon,
    MetricParams,
    PerturbationConfig,
    RectifyResult,
    Tree,
    brute_force_wed,
    char_zero_shot_split,
    combined_distance,
    confusable_set,
    confusable_set_stroke_level,
    cosine_similarity,
    edit_distance,
    evaluate,
    perturb,
    radical_frequency,
    radical_tokens,
    radical_zero_shot_split,
    rectify,
    shifted_pair,
    stroke_distance,
    stroke_targets,
    synth_lexicon,
    translate,
    weighted_edit_distance,
)

__all__ = [
    "DEFAULT_ALPHABET",
    "MAX_ALPHABET",
    "STRUCTURE_OP_COUNT",
    "Error",
    "EvalReport",
    "FeatureStore",
    "Lexicon",
    "MetricParams",
    "PerturbationConfig",
    "RectifyResult",
    "Tree",
    "brute_force_wed",
    "char_zero_shot_split",
    "combined_distance",
    "confusable_set",
    "confusable_set_stroke_level",
    "cosine_similarity",
    "edit_distance",
    "evaluate",
    "perturb",
    "radical_frequency",
    "radical_tokens",
    "radical_zero_shot_split",
    "rectify",
    "shifted_pair",
    "stroke_distance",
    "stroke_targets",
    "synth_lexicon",
    "translate",
    "weighted_edit_distance",
]

__version__ = "0.1.0"
