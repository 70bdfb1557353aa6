"""Python bindings for the mindhash C++ core.

Keys are plain dicts in the key-file format, e.g.
``{"scheme": "three-word", "words": [...], "wildcard": "x", "special": "B7!"}``.
"""

import json

from . import _mindhash
from ._mindhash import (
    MindhashError,
    compute_k,
    followup_schedule,
    hum_total,
    hum_trace,
    normalize_challenge,
)

__all__ = [
    "MindhashError",
    "character_map",
    "compute_k",
    "dictionary_attack",
    "distinct_letter_count",
    "estimate_q",
    "estimate_q_file",
    "followup_schedule",
    "generate_password",
    "hum_total",
    "hum_trace",
    "metrics_from_logs",
    "normalize_challenge",
    "sample_random_letter_key",
    "score_recall",
    "validate_key",
]


def _key(key):
    return key if isinstance(key, str) else json.dumps(key)


def generate_password(key, challenge, strip_tld=False, truncate5=False):
    return _mindhash.generate_password(_key(key), challenge, strip_tld, truncate5)


def character_map(key):
    return _mindhash.character_map(_key(key))


def validate_key(key):
    return _mindhash.validate_key(_key(key))


def sample_random_letter_key(seed):
    return json.loads(_mindhash.sample_random_letter_key(seed))


def score_recall(key, text):
    return _mindhash.score_recall(_key(key), text)


def distinct_letter_count(words):
    """Distinct letters in a string or in the concatenation of a word list."""
    if not isinstance(words, str):
        words = "".join(words)
    return _mindhash.distinct_letter_count(words)


def estimate_q(corpus, samples, seed=0):
    """Coverage estimate of Q; ``corpus`` is a list of names or a corpus file path."""
    if isinstance(corpus, str):
        return json.loads(_mindhash.estimate_q_file(corpus, samples, seed))
    return json.loads(_mindhash.estimate_q(list(corpus), samples, seed))


def estimate_q_file(path, samples, seed=0):
    return json.loads(_mindhash.estimate_q_file(str(path), samples, seed))


def dictionary_attack(dictionary, observations, wildcard=None, predict=()):
    """Returns the consistent-key count and plurality guesses for ``predict``."""
    return _mindhash.dictionary_attack(list(dictionary), list(observations), wildcard, list(predict))


def metrics_from_logs(paths):
    if isinstance(paths, str):
        paths = [paths]
    return json.loads(_mindhash.metrics_from_logs(list(paths)))
