"""Quantum cluster seeds, signed-word seeds, freezing operators and dBS bases.

Seeds are plain dicts with keys I, I_uf, d, B, Lambda and labels, the same
JSON accepted by the command-line tool and the HTTP server.
"""

import json

from . import _qcluster
from ._qcluster import BudgetError, InputError, MathError

__all__ = [
    "BudgetError",
    "InputError",
    "MathError",
    "Session",
    "dbs_degrees",
    "freeze",
    "kl",
    "mutate",
    "run_suite",
    "seed_to_dot",
    "suite_names",
    "tsystems",
    "variables",
    "word_seed",
]


def _word(word):
    return _qcluster.parse_word(word) if isinstance(word, str) else [int(a) for a in word]


def _seed(seed):
    return seed if isinstance(seed, str) else json.dumps(seed)


def word_seed(word, cartan="A1", kind="dsd", quantum=False):
    """Seed of a signed word; returns {"seed": dict, "dot": str}."""
    return json.loads(_qcluster.word_seed(_word(word), cartan, kind, quantum))


def mutate(seed, at):
    """Mutate at one vertex id or a sequence of them."""
    at = [at] if isinstance(at, int) else list(at)
    return json.loads(_qcluster.mutate(_seed(seed), at))


def variables(seed, at, ids):
    """Expansions of the cluster variables ids after mutating along at, in the initial variables."""
    return json.loads(_qcluster.variables(_seed(seed), list(at), list(ids)))


def freeze(seed, F, element, degree=None):
    """Freezing operator applied to a Laurent polynomial written in x<id> / xm<id>."""
    return json.loads(_qcluster.freeze(_seed(seed), list(F), element, None if degree is None else list(degree)))


def seed_to_dot(seed):
    return _qcluster.seed_to_dot(_seed(seed))


def dbs_degrees(word, cartan="A1"):
    """Degree table of the mutation sequence Sigma for an unsigned word."""
    return json.loads(_qcluster.dbs_degrees(_word(word), cartan))


def tsystems(word, cartan="A1"):
    return json.loads(_qcluster.dbs_tsystems(_word(word), cartan))


def kl(word, w, cartan="A1", order="rev", max_terms=2_000_000):
    """Kazhdan-Lusztig element L(w) for the exponent vector w."""
    return json.loads(_qcluster.kl(_word(word), cartan, [int(a) for a in w], order, max_terms))


def suite_names():
    return list(_qcluster.suite_names())


def run_suite(name, rng_seed=1):
    return json.loads(_qcluster.run_suite(name, rng_seed))


class Session:
    """In-process version of the HTTP API: handle(method, path, body) -> (status, dict)."""

    def __init__(self):
        self._s = _qcluster.Session()

    def handle(self, method, path, body=None):
        text = "" if body is None else (body if isinstance(body, str) else json.dumps(body))
        status, reply = self._s.handle(method, path, text)
        return status, json.loads(reply)

    @property
    def depth(self):
        return self._s.depth
