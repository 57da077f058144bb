"""Re-run the energy-project ranking and compare with the reference scores."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import ExtensionPolicy
from .documents import load_bundled
from .madm import DecisionProblem, RankingResult, relative_similarity
from .reference import REFERENCE_P, REFERENCE_RANKINGS, REFERENCE_SCORES, TOLERANCE
from .similarities import Similarity, SimilaritySpec

GEOMETRIC = (Similarity.GEOMETRIC_OUTER, Similarity.GEOMETRIC_INNER, Similarity.GEOMETRIC_SUM)


@dataclass(frozen=True)
class ReproducedRow:
    measure: str
    p: Optional[int]
    result: RankingResult
    reference: tuple
    reference_ranking: str

    @property
    def deviations(self) -> np.ndarray:
        return np.abs(np.asarray(self.result.scores) - np.asarray(self.reference))

    @property
    def max_deviation(self) -> float:
        return float(self.deviations.max())

    @property
    def ranking_matches(self) -> bool:
        return self.result.ranking_string() == self.reference_ranking

    @property
    def ok(self) -> bool:
        return self.max_deviation <= TOLERANCE and self.ranking_matches


def reproduce(problem: Optional[DecisionProblem] = None,
              policy=ExtensionPolicy.PESSIMISTIC) -> list:
    """Weighted geometric measures at each reference p, then unweighted set-theoretic."""
    problem = problem or load_bundled()
    rows = []
    for fam in GEOMETRIC:
        for p in REFERENCE_P:
            res = relative_similarity(problem, SimilaritySpec(fam, p=p), policy)
            rows.append(ReproducedRow(fam.value, p, res, REFERENCE_SCORES[fam.value, p],
                                      REFERENCE_RANKINGS[fam.value, p]))
    key = (Similarity.SET_THEORETIC.value, None)
    res = relative_similarity(problem, SimilaritySpec(Similarity.SET_THEORETIC), policy,
                              use_weights=False)
    rows.append(ReproducedRow(key[0], None, res, REFERENCE_SCORES[key], REFERENCE_RANKINGS[key]))
    return rows
