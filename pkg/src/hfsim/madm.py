"""Ranking alternatives by relative similarity to ideal hesitant sets."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .core import ExtensionPolicy, HesitantElement, HesitantSet, extend_to, weight_vector
from .errors import DegenerateScores, InvalidProblem, InvalidSpec
from .similarities import SimilaritySpec, similarity


@dataclass(frozen=True)
class DecisionProblem:
    """Alternatives rated on a shared attribute universe, plus attribute weights."""

    alternatives: tuple  # of (name, HesitantSet)
    attributes: tuple
    weights: tuple

    def __post_init__(self):
        alts = tuple((str(n), h) for n, h in self.alternatives)
        attrs = tuple(str(a) for a in self.attributes)
        if len(alts) < 2:
            raise InvalidProblem("a decision problem needs at least two alternatives")
        names = [n for n, _ in alts]
        if len(set(names)) != len(names):
            raise InvalidProblem(f"duplicate alternative names in {names}")
        for name, h in alts:
            if not isinstance(h, HesitantSet):
                raise InvalidProblem(f"alternative {name!r} is not a HesitantSet")
            if h.ids != attrs:
                raise InvalidProblem(f"alternative {name!r} covers {h.ids}, expected {attrs}")
        try:
            w = weight_vector(self.weights, len(attrs))
        except InvalidSpec as exc:
            raise InvalidProblem(str(exc)) from None
        object.__setattr__(self, "alternatives", alts)
        object.__setattr__(self, "attributes", attrs)
        object.__setattr__(self, "weights", tuple(w.tolist()))

    @property
    def names(self) -> tuple:
        return tuple(n for n, _ in self.alternatives)

    @property
    def sets(self) -> tuple:
        return tuple(h for _, h in self.alternatives)


@dataclass(frozen=True)
class RankingResult:
    scores: tuple
    order: tuple  # alternative names, best first
    measure: SimilaritySpec
    p: float
    names: tuple = field(default=())
    positive: tuple = field(default=(), repr=False)
    negative: tuple = field(default=(), repr=False)

    def ranking_string(self, sep: str = " ≻ ") -> str:
        return sep.join(self.order)

    def score_of(self, name: str) -> float:
        return self.scores[self.names.index(name)]


def ideal_sets(sets: Sequence[HesitantSet], policy=ExtensionPolicy.PESSIMISTIC):
    """Positive and negative ideal sets of a collection of sets on one universe.

    At each element every set is padded to the longest length there, then
    the ideals take the position-wise max and min.
    """
    policy = ExtensionPolicy.parse(policy)
    if not sets:
        raise InvalidProblem("need at least one hesitant set")
    ids = sets[0].ids
    for h in sets[1:]:
        if h.ids != ids:
            raise InvalidProblem("all alternatives must share one attribute universe")
    pos, neg = [], []
    for k, key in enumerate(ids):
        column = [h.elements[k] for h in sets]
        n = max(len(e) for e in column)
        grid = np.array([extend_to(e, n, policy).values for e in column])
        pos.append((key, HesitantElement(tuple(grid.max(axis=0)))))
        neg.append((key, HesitantElement(tuple(grid.min(axis=0)))))
    return HesitantSet(tuple(pos)), HesitantSet(tuple(neg))


def ideal_alternatives(problem: DecisionProblem, policy=ExtensionPolicy.PESSIMISTIC):
    return ideal_sets(problem.sets, policy)


def relative_similarity(problem: DecisionProblem, spec: SimilaritySpec,
                        policy=ExtensionPolicy.PESSIMISTIC, use_weights: bool = True) -> RankingResult:
    """Score each alternative by ``s+ / (s+ + s-)`` and rank best first.

    ``s+`` and ``s-`` are the similarities to the positive and negative
    ideal sets. With ``use_weights`` the problem's attribute weights replace
    any weights on ``spec``; otherwise ``spec`` is used as given. Ties keep
    the original alternative order.
    """
    if use_weights:
        spec = spec.with_weights(problem.weights)
    pos, neg = ideal_alternatives(problem, policy)
    scores, s_pos, s_neg = [], [], []
    for name, h in problem.alternatives:
        sp = similarity(pos, h, spec, policy)
        sn = similarity(neg, h, spec, policy)
        if sp + sn == 0.0:
            raise DegenerateScores(f"both ideal similarities are zero for {name!r}")
        s_pos.append(sp)
        s_neg.append(sn)
        scores.append(sp / (sp + sn))
    order = np.argsort(-np.round(scores, 12), kind="stable")
    return RankingResult(scores=tuple(scores), order=tuple(problem.names[i] for i in order),
                         measure=spec, p=spec.base.p if spec.base is not None else spec.p,
                         names=problem.names,
                         positive=tuple(s_pos), negative=tuple(s_neg))
