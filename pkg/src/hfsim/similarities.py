"""Similarity measures between hesitant fuzzy sets."""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from .core import ExtensionPolicy, HesitantSet, aligned, weight_vector
from .distances import (DistanceSpec, common_lengths, deviations, distance, max_distance,
                        power_mean, power_sum, weighted_power_mean_of_means)
from .errors import BoundaryWarning, InvalidSpec


class Transform(str, Enum):
    """Strictly decreasing maps used to turn a distance into a similarity."""

    LINEAR = "linear"
    EXPONENTIAL = "exponential"
    RECIPROCAL = "reciprocal"

    def __call__(self, x):
        if self is Transform.LINEAR:
            return 1.0 - x
        if self is Transform.EXPONENTIAL:
            return np.exp(-x)
        return 1.0 / (1.0 + x)


class Similarity(str, Enum):
    FROM_DISTANCE = "from-distance"
    GEOMETRIC_OUTER = "geometric-outer"
    GEOMETRIC_INNER = "geometric-inner"
    GEOMETRIC_SUM = "geometric-sum"
    SET_THEORETIC = "set-theoretic"


@dataclass(frozen=True)
class SimilaritySpec:
    """Selects a similarity measure.

    ``weights`` is optional for every family (uniform when absent). The
    ``from-distance`` family takes its weights from ``base`` instead.
    """

    family: Similarity
    p: float = 1.0
    weights: Optional[tuple] = None
    base: Optional[DistanceSpec] = None
    transform: Transform = Transform.LINEAR

    def __post_init__(self):
        try:
            family = Similarity(self.family)
            transform = Transform(self.transform)
        except ValueError as exc:
            raise InvalidSpec(str(exc)) from None
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "transform", transform)
        p = float(self.p)
        if not np.isfinite(p) or p <= 0:
            raise InvalidSpec(f"p must be a positive real, got {self.p!r}")
        object.__setattr__(self, "p", p)
        if family is Similarity.FROM_DISTANCE:
            if self.base is None:
                raise InvalidSpec("from-distance similarity needs a base distance")
            if self.weights is not None:
                raise InvalidSpec("put weights on the base distance, not the similarity")
        if self.weights is not None:
            w = weight_vector(self.weights, len(self.weights))
            object.__setattr__(self, "weights", tuple(w.tolist()))

    def weights_for(self, m: int) -> np.ndarray:
        if self.weights is None:
            return np.full(m, 1.0 / m)
        if len(self.weights) != m:
            raise InvalidSpec(f"{len(self.weights)} weights for a universe of {m} elements")
        return np.asarray(self.weights)

    def with_weights(self, weights) -> "SimilaritySpec":
        """Copy of this spec carrying ``weights`` (on the base for from-distance)."""
        if self.family is Similarity.FROM_DISTANCE:
            if not self.base.weighted:
                return self
            base = DistanceSpec(self.base.family, self.base.p, tuple(weights))
            return SimilaritySpec(self.family, self.p, None, base, self.transform)
        return SimilaritySpec(self.family, self.p, tuple(weights), self.base, self.transform)


def similarity_from_distance(A: HesitantSet, B: HesitantSet, base: DistanceSpec,
                             transform=Transform.LINEAR,
                             policy=ExtensionPolicy.PESSIMISTIC) -> float:
    """``(f(d) - f(d_max)) / (f(0) - f(d_max))`` for a decreasing ``f``."""
    f = Transform(transform)
    d = distance(A, B, base, policy)
    d_max = max_distance(base, common_lengths(A, B))
    lo = f(d_max)
    return float((f(d) - lo) / (f(0.0) - lo))


def set_theoretic_similarity(A: HesitantSet, B: HesitantSet, weights=None,
                             policy=ExtensionPolicy.PESSIMISTIC) -> float:
    """Weighted mean over elements of ``sum_j min(a_j, b_j) / sum_j max(a_j, b_j)``.

    An element whose grades are all zero on both sides counts as ratio 1.
    """
    pairs = aligned(A, B, ExtensionPolicy.parse(policy))
    m = len(pairs)
    w = np.full(m, 1.0 / m) if weights is None else weight_vector(weights, m)
    ratios = np.empty(m)
    for i, (a, b) in enumerate(pairs):
        hi = np.maximum(a, b).sum()
        ratios[i] = 1.0 if hi == 0.0 else np.minimum(a, b).sum() / hi
    # complement form keeps identical sets at exactly 1
    return 1.0 - float(w @ (1.0 - ratios))


def similarity(A: HesitantSet, B: HesitantSet, spec: SimilaritySpec,
               policy=ExtensionPolicy.PESSIMISTIC) -> float:
    fam = spec.family
    if fam is Similarity.FROM_DISTANCE:
        return similarity_from_distance(A, B, spec.base, spec.transform, policy)
    if fam is Similarity.SET_THEORETIC:
        return set_theoretic_similarity(A, B, spec.weights, policy)

    devs = deviations(A, B, policy)
    m = len(devs)
    w = spec.weights_for(m)
    p = spec.p
    if fam is Similarity.GEOMETRIC_OUTER:
        return 1.0 - weighted_power_mean_of_means(devs, w, p)
    if fam is Similarity.GEOMETRIC_INNER:
        return 1.0 - float(sum(wi * power_mean(d, p) for wi, d in zip(w, devs)))

    norm = sum(len(d) ** (1.0 / p) for d in devs)
    value = 1.0 - (m / norm) * float(sum(wi * power_sum(d, p) for wi, d in zip(w, devs)))
    if not 0.0 <= value <= 1.0:
        # skewed weights on long elements can push this below zero
        warnings.warn(f"geometric-sum similarity {value:.6g} outside [0, 1]",
                      BoundaryWarning, stacklevel=2)
    return value
