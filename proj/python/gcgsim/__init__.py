"""Categorial-grammar acquisition and evolution simulator.

The compiled core lives in ``_gcgsim``; this package re-exports it.
"""

from _gcgsim import (  # noqa: F401
    PSettings,
    canonical,
    default_learner_genome,
    fixture,
    language_label,
    language_of,
    learn_effect,
    mean_wml,
    parse,
    pref_evolution,
    unset_learner_genome,
)

__all__ = [
    "PSettings",
    "canonical",
    "default_learner_genome",
    "fixture",
    "language_label",
    "language_of",
    "learn_effect",
    "mean_wml",
    "parse",
    "pref_evolution",
    "unset_learner_genome",
]
