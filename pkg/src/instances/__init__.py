"""
Lower-bound families, kernel-norm certificates and random corpora
"""

from .families import gen_lower_4block, gen_lower_3block, witness_4block, witness_3block
from .certify import certify_min_norm, min_kernel_norm, family_of, attained, replay_chain
from .corpus import CorpusParams, random_corpus, random_instance

__all__ = [
    "gen_lower_4block",
    "gen_lower_3block",
    "witness_4block",
    "witness_3block",
    "certify_min_norm",
    "min_kernel_norm",
    "family_of",
    "attained",
    "replay_chain",
    "CorpusParams",
    "random_corpus",
    "random_instance",
]
